# Platooning fixture: technical software architecture inventory
# Tactic implementations reconstructed from the fulfilled-FSR evidence; the
# remaining components implement no catalog tactic. See README.md.

tech_component tc_env_perception "Environment perception sensor interfaces" {
    realizes environment_perception_sensors;
    implements_tactic sanity_check "CRC on every sensor message";
    implements_tactic heartbeat "validity time per sensor message";
    implements_tactic barrier "independent software interface per sensor";
    linked tc_safety_watchdog;
}

tech_component tc_safety_watchdog "Safety management watchdog" {
    mechanism;
    implements_tactic condition_monitoring "watchdog in safety management";
}

tech_component tc_actuation_sensors "Actuation sensor interfaces" {
    realizes actuation_sensors;
    implements_tactic sanity_check "CRC and message counter";
}

tech_component tc_vehicle_control "Vehicle control" {
    realizes vehicle_control;
    implements_tactic barrier "two independent driving modes, one without V2V";
    implements_tactic simplicity "driver input bypassed directly to the actuators";
    linked tc_vc_safety_management;
}

tech_component tc_vc_safety_management "Safety management: mode selection" {
    mechanism;
    implements_tactic condition_monitoring "monitor for the driving modes and switching between them";
    implements_tactic sanity_check "state machine based mode selection";
    implements_tactic override "state machine forces the safe mode";
}

tech_component tc_v2v "V2V communication stack" {
    realizes v2v_communication;
    implements_tactic heartbeat "heartbeat messages monitor the channel";
}

tech_component tc_host_tracking "Host tracking" { realizes host_tracking; }
tech_component tc_state_estimator "Vehicle state estimator" { realizes vehicle_state_estimator; }
tech_component tc_target_tracking "Target tracking" { realizes target_tracking; }
tech_component tc_actuator "Actuator software interface" { realizes actuator; }
