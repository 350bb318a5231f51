# A flow points at a component nobody declared.
item car "Test vehicle" {
    kind vehicle;
    component sensor "Sensor";
    component control "Control";
    flow sensor control;
    flow control actuator;
}
