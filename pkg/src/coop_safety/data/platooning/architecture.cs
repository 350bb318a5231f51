# Platooning fixture: functional architectures
# Synthesized to reproduce the reference counts; see README.md.

# Vehicle functional architecture (one vehicle type). Components inside a
# class act as independent entities; the class implies no data flow.
item twizy "Platooning demonstrator vehicle" {
    kind vehicle;

    component actuation_sensors "Actuation sensors" { class sensor_abstraction; }
    component environment_perception_sensors "Environment perception sensors" { class sensor_abstraction; }
    component host_tracking "Host tracking" { class sensor_fusion; }
    component vehicle_state_estimator "Vehicle state estimator" { class sensor_fusion; }
    component target_tracking "Target tracking" { class sensor_fusion; }
    component v2v_communication "V2V communication" { class communication; }
    component vehicle_control "Vehicle control" { class control; }
    component actuator "Actuator (software interface)" { class actuation; }

    flow environment_perception_sensors target_tracking;
    flow actuation_sensors host_tracking;
    flow actuation_sensors vehicle_state_estimator;
    flow host_tracking vehicle_control;
    flow vehicle_state_estimator vehicle_control;
    flow target_tracking vehicle_control;
    flow v2v_communication vehicle_control;
    flow vehicle_control v2v_communication;
    flow vehicle_control actuator;
}

# Cooperative functional architecture, built from vehicle components. The
# leader only contributes vehicle control and V2V communication: its sensor
# components are not used for cooperative functions.
item platoon "Two-vehicle platoon" {
    kind cooperative;

    component leader_vehicle_control "Leader vehicle control" { ref vehicle_control; }
    component leader_v2v "Leader V2V communication" { ref v2v_communication; }
    component follower_v2v "Follower V2V communication" { ref v2v_communication; }
    component follower_env_perception "Follower environment perception sensors" { ref environment_perception_sensors; }
    component follower_actuation_sensors "Follower actuation sensors" { ref actuation_sensors; }
    component follower_host_tracking "Follower host tracking" { ref host_tracking; }
    component follower_state_estimator "Follower vehicle state estimator" { ref vehicle_state_estimator; }
    component follower_target_tracking "Follower target tracking" { ref target_tracking; }
    component follower_vehicle_control "Follower vehicle control" { ref vehicle_control; }
    component follower_actuator "Follower actuator" { ref actuator; }

    flow leader_vehicle_control leader_v2v;
    flow leader_v2v follower_v2v;
    flow follower_v2v leader_v2v;
    flow follower_v2v follower_vehicle_control;
    flow follower_vehicle_control follower_v2v;
    flow follower_env_perception follower_target_tracking;
    flow follower_actuation_sensors follower_host_tracking;
    flow follower_actuation_sensors follower_state_estimator;
    flow follower_host_tracking follower_vehicle_control;
    flow follower_state_estimator follower_vehicle_control;
    flow follower_target_tracking follower_vehicle_control;
    flow follower_vehicle_control follower_actuator;
}
