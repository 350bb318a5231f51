# Two components share one id; the second declaration is reported.
item car "Test vehicle" {
    kind vehicle;
    component vehicle_control "Vehicle control";
    component actuator "Actuator";
    component vehicle_control "Vehicle control again";
}
