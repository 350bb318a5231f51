# Platooning fixture: system functions, operational modes and situations
# Synthesized to reproduce the reference counts; see README.md.


# --- vehicular perspective ---

function follow_vehicle_in_front "autonomously follow the vehicle in front as a follower" {
    perspective vehicular;
    scenario base;
    guide_words no more less;
}

function keep_distance_follower "keep a proper distance to the surrounding traffic as a platoon follower" {
    perspective vehicular;
    scenario base;
    guide_words no more less reverse other_than;
}

function lead_platoon "lead the platoon as the manually driven leader" {
    perspective vehicular;
    scenario base;
    guide_words no more less other_than;
}

function take_leader_role "take over the leader role of the platoon" {
    perspective vehicular;
    scenario SC-5;
    guide_words no part_of other_than;
}

function switch_leader_to_follower "switch from the leader role to the follower role" {
    perspective vehicular;
    scenario SC-5;
    guide_words no part_of other_than;
}

function join_platoon "join a platoon as a follower" {
    perspective vehicular;
    scenario SC-1;
    guide_words no part_of;
}

function leave_platoon "leave the platoon" {
    perspective vehicular;
    scenario SC-2;
    guide_words no part_of;
}

function react_to_surrounding "react in time to actions of surrounding vehicles in a platoon" {
    perspective vehicular;
    scenario base;
    guide_words no more less as_well_as other_than;
}

function follow_traffic_rules "follow traffic indications, signs and rules" {
    perspective vehicular;
    scenario base;
    guide_words no part_of reverse other_than;
}


mode manual_leading { perspective vehicular; }
mode platoon_following { perspective vehicular; }
mode joining { perspective vehicular; }
mode leaving { perspective vehicular; }
mode becoming_leader { perspective vehicular; }
mode becoming_follower { perspective vehicular; }
situation highway { perspective vehicular; }
situation highway_interchange { perspective vehicular; }

# --- cooperative perspective ---

function keep_inter_vehicle_distance "keep sufficiently safe inter-vehicular distance within a platoon" {
    perspective cooperative;
    scenario base;
    guide_words no more less other_than;
}

function make_place_for_joining "make place for a vehicle to join" {
    perspective cooperative;
    scenario SC-1;
    guide_words no more less part_of reverse other_than;
}

function merge_with_platoon "merge with another platoon" {
    perspective cooperative;
    scenario SC-4;
    guide_words no part_of reverse other_than;
}

function split_platoon "split into two platoons" {
    perspective cooperative;
    scenario SC-3;
    guide_words no part_of reverse other_than;
}

function change_leader "change the leader of the platoon" {
    perspective cooperative;
    scenario SC-5;
    guide_words no part_of as_well_as other_than;
}

function keep_distance_to_traffic "keep a proper distance to the surrounding traffic" {
    perspective cooperative;
    scenario base;
    guide_words no more less other_than;
}


mode platoon_cruising { perspective cooperative; }
mode vehicle_joining { perspective cooperative; }
mode vehicle_leaving { perspective cooperative; }
mode platoon_splitting { perspective cooperative; }
mode platoon_merging { perspective cooperative; }
mode leader_changing { perspective cooperative; }
mode platoon_forming { perspective cooperative; }
situation highway { perspective cooperative; }
situation highway_interchange { perspective cooperative; }

hazard keep_inter_vehicle_distance less "keeping less than sufficiently safe inter-vehicular distance";
hazard keep_inter_vehicle_distance no "no inter-vehicular distance control within the platoon";
hazard follow_vehicle_in_front no "the follower stops following the vehicle in front";
