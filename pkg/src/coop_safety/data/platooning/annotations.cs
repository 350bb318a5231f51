# Platooning fixture: FSR annotations (trigger, response class, capability
# requirement). Each `requires` line is one alternative; an FSR is met when
# every capability of at least one alternative is available.
# Synthesized to reproduce the reference fulfillment results; see README.md.

# --- environment perception sensors ---

fsr_annotation follower_env_perception incorrect_distance_info {
    text "A failure of the environment perception sensors shall not produce wrong distance information about surrounding vehicles and objects";
    trigger perception-failure;
    response reject-invalid-data;
    requires plausibility-check interference-isolation liveness-monitoring runtime-monitoring;
    requires failure-masking diverse-channel output-comparison;
    requires majority-decision replicated-channel;
    requires safe-state-override state-recovery graceful-degradation;
}

fsr_annotation environment_perception_sensors loss_of_detection {
    trigger perception-failure;
    response emit-fault-message;
    requires liveness-monitoring failure-masking;
}

fsr_annotation environment_perception_sensors incorrect_object_detection {
    trigger perception-failure;
    response reject-invalid-data;
    requires plausibility-check output-comparison;
}

# --- actuation sensors ---

fsr_annotation actuation_sensors corrupted_data {
    text "External interference shall not corrupt or invalidate the data of the actuation sensors";
    trigger external-interference;
    response reject-invalid-data;
    requires plausibility-check;
}

fsr_annotation actuation_sensors loss_of_measurement {
    trigger actuation-sensor-failure;
    response emit-fault-message;
    requires replicated-channel failure-masking;
}

fsr_annotation follower_actuation_sensors incorrect_acceleration {
    trigger actuation-sensor-failure;
    response reject-invalid-data;
    requires plausibility-check output-comparison;
}

# --- host tracking ---

fsr_annotation host_tracking incorrect_position {
    trigger fusion-failure;
    response reject-invalid-data;
    requires plausibility-check failure-masking;
    requires diverse-channel failure-masking;
}

fsr_annotation host_tracking loss_of_position {
    trigger fusion-failure;
    response degrade-to-safe-gap;
    requires graceful-degradation liveness-monitoring;
}

fsr_annotation follower_host_tracking incorrect_position {
    trigger fusion-failure;
    response reject-invalid-data;
    requires plausibility-check output-comparison;
}

# --- vehicle state estimator ---

fsr_annotation vehicle_state_estimator incorrect_state_estimate {
    trigger fusion-failure;
    response reject-invalid-data;
    requires plausibility-check output-comparison runtime-monitoring;
}

fsr_annotation follower_state_estimator incorrect_acceleration_estimate {
    trigger fusion-failure;
    response reject-invalid-data;
    requires output-comparison diverse-channel;
}

fsr_annotation follower_state_estimator loss_of_state {
    trigger fusion-failure;
    response degrade-to-safe-gap;
    requires state-recovery;
}

# --- target tracking ---

fsr_annotation target_tracking missed_target {
    trigger fusion-failure;
    response degrade-to-safe-gap;
    requires diverse-channel failure-masking;
}

fsr_annotation target_tracking incorrect_target_track {
    trigger fusion-failure;
    response reject-invalid-data;
    requires plausibility-check output-comparison;
}

fsr_annotation follower_target_tracking missed_vehicle_in_front {
    trigger perception-failure;
    response degrade-to-safe-gap;
    requires plausibility-check liveness-monitoring;
}

# --- V2V communication ---

fsr_annotation leader_v2v incorrect_join_leave_message {
    text "A failure in V2V communication shall not send wrong information to, or accept wrong information from, a vehicle joining or leaving the platoon";
    trigger communication-failure;
    response abort-manoeuvre;
    requires liveness-monitoring;
}

fsr_annotation leader_v2v message_loss {
    trigger communication-failure;
    response degrade-to-safe-gap;
    requires liveness-monitoring state-recovery;
}

fsr_annotation follower_v2v corrupted_message {
    trigger communication-failure;
    response reject-invalid-data;
    requires plausibility-check liveness-monitoring;
}

fsr_annotation follower_v2v delayed_message {
    trigger communication-failure;
    response degrade-to-safe-gap;
    requires liveness-monitoring graceful-degradation;
}

# --- vehicle control ---

fsr_annotation vehicle_control incorrect_actuation_signal {
    text "A failure in vehicle control shall not generate wrong actuation signals";
    trigger control-failure;
    response prevent-incorrect-output;
    requires failure-containment runtime-monitoring;
}

fsr_annotation vehicle_control loss_of_output {
    trigger control-failure;
    response hand-over-to-driver;
    requires liveness-monitoring safe-state-override;
}

fsr_annotation vehicle_control incorrect_gap_setpoint {
    trigger control-failure;
    response prevent-incorrect-output;
    requires output-comparison plausibility-check;
}

fsr_annotation vehicle_control delayed_output {
    trigger control-failure;
    response prevent-incorrect-output;
    requires liveness-monitoring runtime-monitoring;
}

fsr_annotation vehicle_control incorrect_role_transition {
    trigger role-transition-failure;
    response abort-manoeuvre;
    requires graceful-degradation runtime-monitoring;
}

fsr_annotation vehicle_control unintended_manual_switch {
    text "A failure in vehicle control shall not switch to manual driving while the vehicle is platooning";
    trigger role-transition-failure;
    response maintain-autonomous-control;
    requires plausibility-check safe-state-override runtime-monitoring;
}

fsr_annotation leader_vehicle_control driver_input_blocked {
    text "A failure in vehicle control shall neither block nor alter the driver input that is passed on";
    trigger control-failure;
    response pass-through-driver-input;
    requires complexity-reduction;
}

fsr_annotation leader_vehicle_control incorrect_acceleration_broadcast {
    text "A failure in the acceleration sensing path of the leader shall not send wrong acceleration information to the followers";
    trigger control-failure;
    response prevent-incorrect-output;
    requires failure-masking diverse-channel;
    requires output-comparison replicated-channel;
}

fsr_annotation follower_vehicle_control incorrect_gap_control {
    trigger control-failure;
    response degrade-to-safe-gap;
    requires failure-masking replicated-channel;
    requires output-comparison runtime-monitoring liveness-monitoring;
}

# --- actuator ---

fsr_annotation actuator incorrect_control_propagation {
    text "A failure in the actuator software interface shall not pass wrong control signals on to the hardware actuators";
    trigger actuator-failure;
    response prevent-incorrect-output;
    requires plausibility-check safe-state-override;
}

fsr_annotation follower_actuator delayed_actuation {
    trigger actuator-failure;
    response degrade-to-safe-gap;
    requires liveness-monitoring graceful-degradation;
}

fsr_annotation follower_actuator incorrect_actuation {
    trigger actuator-failure;
    response prevent-incorrect-output;
    requires runtime-monitoring safe-state-override;
}
