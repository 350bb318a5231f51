# Platooning fixture: fault trees, one per safety goal
# Synthesized to reproduce the reference FSR counts; see README.md.

# --- vehicular goals ---

tree for V01 {
    or {
        basic vehicle_control incorrect_actuation_signal;
        basic vehicle_control loss_of_output;
        and {
            basic target_tracking missed_target;
            basic environment_perception_sensors loss_of_detection;
        }
        basic vehicle_state_estimator incorrect_state_estimate;
    }
}

tree for V02 {
    or {
        basic vehicle_control incorrect_gap_setpoint;
        basic environment_perception_sensors incorrect_object_detection;
        basic actuation_sensors corrupted_data;
        basic actuator incorrect_control_propagation;
    }
}

tree for V03 {
    or {
        and {
            basic actuation_sensors loss_of_measurement;
            basic vehicle_state_estimator incorrect_state_estimate;
        }
        basic vehicle_control incorrect_gap_setpoint;
    }
}

tree for V04 {
    or {
        basic vehicle_control delayed_output;
        basic actuator incorrect_control_propagation;
    }
}

tree for V05 {
    or {
        basic vehicle_control incorrect_role_transition;
        basic host_tracking loss_of_position;
    }
}

tree for V06 {
    or {
        basic vehicle_control incorrect_role_transition;
        basic vehicle_control unintended_manual_switch;
    }
}

tree for V07 {
    or {
        basic host_tracking incorrect_position;
        basic target_tracking incorrect_target_track;
    }
}

tree for V08 {
    or {
        basic vehicle_control incorrect_role_transition;
        basic vehicle_control unintended_manual_switch;
    }
}

tree for V09 {
    or {
        basic target_tracking missed_target;
        basic vehicle_control delayed_output;
    }
}

tree for V10 {
    or {
        basic target_tracking incorrect_target_track;
        and {
            basic environment_perception_sensors incorrect_object_detection;
            basic actuation_sensors loss_of_measurement;
        }
    }
}

tree for V11 {
    or {
        basic vehicle_control incorrect_actuation_signal;
        basic vehicle_control loss_of_output;
    }
}

tree for V12 {
    or {
        basic host_tracking loss_of_position;
        and {
            basic host_tracking incorrect_position;
            basic target_tracking missed_target;
        }
    }
}

tree for V13 {
    or {
        basic vehicle_control unintended_manual_switch;
        basic actuator incorrect_control_propagation;
    }
}

# shared subtree, included below
tree positioning_failure {
    or {
        basic host_tracking incorrect_position;
        basic host_tracking loss_of_position;
    }
}

tree for V14 {
    or {
        include positioning_failure;
        basic vehicle_control incorrect_actuation_signal;
    }
}

# --- cooperative goals ---

tree for C01 {
    or {
        basic leader_vehicle_control incorrect_acceleration_broadcast;
        basic follower_vehicle_control incorrect_gap_control;
        basic follower_env_perception incorrect_distance_info;
        and {
            basic leader_v2v message_loss;
            basic follower_state_estimator incorrect_acceleration_estimate;
        }
    }
}

tree for C02 {
    or {
        basic follower_target_tracking missed_vehicle_in_front;
        basic follower_actuator delayed_actuation;
    }
}

tree for C03 {
    or {
        basic follower_host_tracking incorrect_position;
        basic follower_actuation_sensors incorrect_acceleration;
    }
}

tree for C04 {
    or {
        basic leader_v2v incorrect_join_leave_message;
        basic follower_v2v corrupted_message;
    }
}

tree for C05 {
    or {
        basic leader_v2v incorrect_join_leave_message;
        basic follower_vehicle_control incorrect_gap_control;
    }
}

tree for C06 {
    or {
        basic follower_v2v delayed_message;
        and {
            basic follower_v2v corrupted_message;
            basic follower_state_estimator loss_of_state;
        }
    }
}

tree for C07 {
    or {
        basic follower_actuator incorrect_actuation;
        basic follower_v2v delayed_message;
    }
}

tree for C08 {
    or {
        basic follower_state_estimator loss_of_state;
        basic follower_actuator incorrect_actuation;
    }
}

tree for C09 {
    or {
        basic follower_v2v corrupted_message;
        basic follower_host_tracking incorrect_position;
    }
}

tree for C10 {
    or {
        basic leader_vehicle_control driver_input_blocked;
        basic leader_v2v incorrect_join_leave_message;
    }
}

tree for C11 {
    or {
        basic leader_vehicle_control driver_input_blocked;
        and {
            basic follower_actuation_sensors incorrect_acceleration;
            basic follower_target_tracking missed_vehicle_in_front;
        }
    }
}
