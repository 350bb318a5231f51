# Platooning fixture: safety goals (merge map)
# Synthesized to reproduce the reference counts; see README.md.


merge_goal V01 "The follower shall track the vehicle in front without loss, surge or lag of the following behaviour" {
    hazards follow_vehicle_in_front.no follow_vehicle_in_front.more follow_vehicle_in_front.less;
}

merge_goal V02 "The follower shall never reduce its gap below the safe distance to surrounding traffic" {
    hazards keep_distance_follower.no keep_distance_follower.less keep_distance_follower.reverse;
}

merge_goal V03 "The follower shall not open excessive or wrong gaps that disturb surrounding traffic" {
    hazards keep_distance_follower.more keep_distance_follower.other_than;
}

merge_goal V04 "The leader vehicle shall keep commanding consistent platoon motion while leading" {
    hazards lead_platoon.no lead_platoon.more lead_platoon.less lead_platoon.other_than;
}

merge_goal V05 "A vehicle taking the leader role shall complete the role change consistently" {
    hazards take_leader_role.no take_leader_role.part_of take_leader_role.other_than;
}

merge_goal V06 "A leader switching to follower shall never be left without a controlling role" {
    hazards switch_leader_to_follower.no switch_leader_to_follower.part_of switch_leader_to_follower.other_than;
}

merge_goal V07 "A joining vehicle shall complete or abort the join without unsafe intermediate states" {
    hazards join_platoon.no join_platoon.part_of;
}

merge_goal V08 "A leaving vehicle shall complete or abort the leave without unsafe intermediate states" {
    hazards leave_platoon.no leave_platoon.part_of;
}

merge_goal V09 "The follower shall react in time to the braking and cut-in actions of surrounding vehicles" {
    hazards react_to_surrounding.no react_to_surrounding.less;
}

merge_goal V10 "The follower shall not over-react or react to actions not performed by surrounding vehicles" {
    hazards react_to_surrounding.more react_to_surrounding.as_well_as react_to_surrounding.other_than;
}

merge_goal V11 "The vehicle shall keep obeying traffic signs and rules while in a platoon" {
    hazards follow_traffic_rules.no;
}

merge_goal V12 "The vehicle shall not obey traffic rules only partially while in a platoon" {
    hazards follow_traffic_rules.part_of;
}

merge_goal V13 "The vehicle shall never act against traffic indications while in a platoon" {
    hazards follow_traffic_rules.reverse;
}

merge_goal V14 "The vehicle shall not apply traffic rules that do not hold at its position" {
    hazards follow_traffic_rules.other_than;
}

merge_goal C01 "sufficiently safe inter-vehicular distance shall be kept regardless of the operational mode or operational situation of the platoon" {
    hazards keep_inter_vehicle_distance.no keep_inter_vehicle_distance.more keep_inter_vehicle_distance.less keep_inter_vehicle_distance.other_than;
}

merge_goal C02 "The platoon shall keep at least the safe distance to the surrounding traffic" {
    hazards keep_distance_to_traffic.no keep_distance_to_traffic.less;
}

merge_goal C03 "The platoon shall not block the surrounding traffic by excessive or wrong spacing" {
    hazards keep_distance_to_traffic.more keep_distance_to_traffic.other_than;
}

merge_goal C04 "The platoon shall create a sufficient gap before a vehicle joins" {
    hazards make_place_for_joining.no make_place_for_joining.less make_place_for_joining.part_of;
}

merge_goal C05 "The platoon shall not create gaps at the wrong place or of the wrong size for a joining vehicle" {
    hazards make_place_for_joining.more make_place_for_joining.reverse make_place_for_joining.other_than;
}

merge_goal C06 "Two platoons shall complete or abort a merge without unsafe intermediate states" {
    hazards merge_with_platoon.no merge_with_platoon.part_of;
}

merge_goal C07 "Platoons shall not merge in the wrong order or with the wrong platoon" {
    hazards merge_with_platoon.reverse merge_with_platoon.other_than;
}

merge_goal C08 "A platoon shall complete or abort a split without unsafe intermediate states" {
    hazards split_platoon.no split_platoon.part_of;
}

merge_goal C09 "A platoon shall not split at the wrong position or in the wrong direction" {
    hazards split_platoon.reverse split_platoon.other_than;
}

merge_goal C10 "A leader change shall always end with exactly one leader" {
    hazards change_leader.no change_leader.part_of;
}

merge_goal C11 "A leader change shall not hand the leader role to the wrong or to several vehicles" {
    hazards change_leader.as_well_as change_leader.other_than;
}
