# Platooning fixture: feasibility matrix
# Synthesized to reproduce the reference counts; see README.md.


# Every hazard is feasible only in the operational modes listed for its function,
# on both situations.
feasibility_default infeasible;

feasible follow_vehicle_in_front.no platoon_following *;
feasible follow_vehicle_in_front.more platoon_following *;
feasible follow_vehicle_in_front.less platoon_following *;

feasible keep_distance_follower.no platoon_following *;
feasible keep_distance_follower.no joining *;
feasible keep_distance_follower.more platoon_following *;
feasible keep_distance_follower.more joining *;
feasible keep_distance_follower.less platoon_following *;
feasible keep_distance_follower.less joining *;
feasible keep_distance_follower.reverse platoon_following *;
feasible keep_distance_follower.reverse joining *;
feasible keep_distance_follower.other_than platoon_following *;
feasible keep_distance_follower.other_than joining *;

feasible lead_platoon.no manual_leading *;
feasible lead_platoon.more manual_leading *;
feasible lead_platoon.less manual_leading *;
feasible lead_platoon.other_than manual_leading *;

feasible take_leader_role.no becoming_leader *;
feasible take_leader_role.part_of becoming_leader *;
feasible take_leader_role.other_than becoming_leader *;

feasible switch_leader_to_follower.no becoming_follower *;
feasible switch_leader_to_follower.part_of becoming_follower *;
feasible switch_leader_to_follower.other_than becoming_follower *;

feasible join_platoon.no joining *;
feasible join_platoon.no becoming_follower *;
feasible join_platoon.part_of joining *;
feasible join_platoon.part_of becoming_follower *;

feasible leave_platoon.no leaving *;
feasible leave_platoon.no becoming_leader *;
feasible leave_platoon.part_of leaving *;
feasible leave_platoon.part_of becoming_leader *;

feasible react_to_surrounding.no platoon_following *;
feasible react_to_surrounding.no joining *;
feasible react_to_surrounding.no leaving *;
feasible react_to_surrounding.more platoon_following *;
feasible react_to_surrounding.more joining *;
feasible react_to_surrounding.more leaving *;
feasible react_to_surrounding.less platoon_following *;
feasible react_to_surrounding.less joining *;
feasible react_to_surrounding.less leaving *;
feasible react_to_surrounding.as_well_as platoon_following *;
feasible react_to_surrounding.as_well_as joining *;
feasible react_to_surrounding.as_well_as leaving *;
feasible react_to_surrounding.other_than platoon_following *;
feasible react_to_surrounding.other_than joining *;
feasible react_to_surrounding.other_than leaving *;

feasible follow_traffic_rules.no manual_leading *;
feasible follow_traffic_rules.no platoon_following *;
feasible follow_traffic_rules.no joining *;
feasible follow_traffic_rules.no leaving *;
feasible follow_traffic_rules.no becoming_leader *;
feasible follow_traffic_rules.no becoming_follower *;
feasible follow_traffic_rules.part_of manual_leading *;
feasible follow_traffic_rules.part_of platoon_following *;
feasible follow_traffic_rules.part_of joining *;
feasible follow_traffic_rules.part_of leaving *;
feasible follow_traffic_rules.part_of becoming_leader *;
feasible follow_traffic_rules.part_of becoming_follower *;
feasible follow_traffic_rules.reverse manual_leading *;
feasible follow_traffic_rules.reverse platoon_following *;
feasible follow_traffic_rules.reverse joining *;
feasible follow_traffic_rules.reverse leaving *;
feasible follow_traffic_rules.reverse becoming_leader *;
feasible follow_traffic_rules.reverse becoming_follower *;
feasible follow_traffic_rules.other_than manual_leading *;
feasible follow_traffic_rules.other_than platoon_following *;
feasible follow_traffic_rules.other_than joining *;
feasible follow_traffic_rules.other_than leaving *;
feasible follow_traffic_rules.other_than becoming_leader *;
feasible follow_traffic_rules.other_than becoming_follower *;

feasible keep_inter_vehicle_distance.no platoon_cruising *;
feasible keep_inter_vehicle_distance.no vehicle_joining *;
feasible keep_inter_vehicle_distance.no vehicle_leaving *;
feasible keep_inter_vehicle_distance.no platoon_splitting *;
feasible keep_inter_vehicle_distance.no platoon_merging *;
feasible keep_inter_vehicle_distance.no leader_changing *;
feasible keep_inter_vehicle_distance.no platoon_forming *;
feasible keep_inter_vehicle_distance.more platoon_cruising *;
feasible keep_inter_vehicle_distance.more vehicle_joining *;
feasible keep_inter_vehicle_distance.more vehicle_leaving *;
feasible keep_inter_vehicle_distance.more platoon_splitting *;
feasible keep_inter_vehicle_distance.more platoon_merging *;
feasible keep_inter_vehicle_distance.more leader_changing *;
feasible keep_inter_vehicle_distance.more platoon_forming *;
feasible keep_inter_vehicle_distance.less platoon_cruising *;
feasible keep_inter_vehicle_distance.less vehicle_joining *;
feasible keep_inter_vehicle_distance.less vehicle_leaving *;
feasible keep_inter_vehicle_distance.less platoon_splitting *;
feasible keep_inter_vehicle_distance.less platoon_merging *;
feasible keep_inter_vehicle_distance.less leader_changing *;
feasible keep_inter_vehicle_distance.less platoon_forming *;
feasible keep_inter_vehicle_distance.other_than platoon_cruising *;
feasible keep_inter_vehicle_distance.other_than vehicle_joining *;
feasible keep_inter_vehicle_distance.other_than vehicle_leaving *;
feasible keep_inter_vehicle_distance.other_than platoon_splitting *;
feasible keep_inter_vehicle_distance.other_than platoon_merging *;
feasible keep_inter_vehicle_distance.other_than leader_changing *;
feasible keep_inter_vehicle_distance.other_than platoon_forming *;

feasible make_place_for_joining.no vehicle_joining *;
feasible make_place_for_joining.no platoon_forming *;
feasible make_place_for_joining.more vehicle_joining *;
feasible make_place_for_joining.more platoon_forming *;
feasible make_place_for_joining.less vehicle_joining *;
feasible make_place_for_joining.less platoon_forming *;
feasible make_place_for_joining.part_of vehicle_joining *;
feasible make_place_for_joining.part_of platoon_forming *;
feasible make_place_for_joining.reverse vehicle_joining *;
feasible make_place_for_joining.reverse platoon_forming *;
feasible make_place_for_joining.other_than vehicle_joining *;
feasible make_place_for_joining.other_than platoon_forming *;

feasible merge_with_platoon.no platoon_merging *;
feasible merge_with_platoon.no platoon_cruising *;
feasible merge_with_platoon.no platoon_forming *;
feasible merge_with_platoon.part_of platoon_merging *;
feasible merge_with_platoon.part_of platoon_cruising *;
feasible merge_with_platoon.part_of platoon_forming *;
feasible merge_with_platoon.reverse platoon_merging *;
feasible merge_with_platoon.reverse platoon_cruising *;
feasible merge_with_platoon.reverse platoon_forming *;
feasible merge_with_platoon.other_than platoon_merging *;
feasible merge_with_platoon.other_than platoon_cruising *;
feasible merge_with_platoon.other_than platoon_forming *;

feasible split_platoon.no platoon_splitting *;
feasible split_platoon.no platoon_cruising *;
feasible split_platoon.no vehicle_leaving *;
feasible split_platoon.part_of platoon_splitting *;
feasible split_platoon.part_of platoon_cruising *;
feasible split_platoon.part_of vehicle_leaving *;
feasible split_platoon.reverse platoon_splitting *;
feasible split_platoon.reverse platoon_cruising *;
feasible split_platoon.reverse vehicle_leaving *;
feasible split_platoon.other_than platoon_splitting *;
feasible split_platoon.other_than platoon_cruising *;
feasible split_platoon.other_than vehicle_leaving *;

feasible change_leader.no leader_changing *;
feasible change_leader.no vehicle_leaving *;
feasible change_leader.part_of leader_changing *;
feasible change_leader.part_of vehicle_leaving *;
feasible change_leader.as_well_as leader_changing *;
feasible change_leader.as_well_as vehicle_leaving *;
feasible change_leader.other_than leader_changing *;
feasible change_leader.other_than vehicle_leaving *;

feasible keep_distance_to_traffic.no platoon_cruising *;
feasible keep_distance_to_traffic.no vehicle_joining *;
feasible keep_distance_to_traffic.no vehicle_leaving *;
feasible keep_distance_to_traffic.no platoon_splitting *;
feasible keep_distance_to_traffic.no platoon_merging *;
feasible keep_distance_to_traffic.no leader_changing *;
feasible keep_distance_to_traffic.no platoon_forming *;
feasible keep_distance_to_traffic.more platoon_cruising *;
feasible keep_distance_to_traffic.more vehicle_joining *;
feasible keep_distance_to_traffic.more vehicle_leaving *;
feasible keep_distance_to_traffic.more platoon_splitting *;
feasible keep_distance_to_traffic.more platoon_merging *;
feasible keep_distance_to_traffic.more leader_changing *;
feasible keep_distance_to_traffic.more platoon_forming *;
feasible keep_distance_to_traffic.less platoon_cruising *;
feasible keep_distance_to_traffic.less vehicle_joining *;
feasible keep_distance_to_traffic.less vehicle_leaving *;
feasible keep_distance_to_traffic.less platoon_splitting *;
feasible keep_distance_to_traffic.less platoon_merging *;
feasible keep_distance_to_traffic.less leader_changing *;
feasible keep_distance_to_traffic.less platoon_forming *;
feasible keep_distance_to_traffic.other_than platoon_cruising *;
feasible keep_distance_to_traffic.other_than vehicle_joining *;
feasible keep_distance_to_traffic.other_than vehicle_leaving *;
feasible keep_distance_to_traffic.other_than platoon_splitting *;
feasible keep_distance_to_traffic.other_than platoon_merging *;
feasible keep_distance_to_traffic.other_than leader_changing *;
feasible keep_distance_to_traffic.other_than platoon_forming *;
