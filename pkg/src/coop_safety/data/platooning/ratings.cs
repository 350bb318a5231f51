# Platooning fixture: S/E/C ratings per hazard
# Synthesized to reproduce the reference counts; see README.md.


# Highway is rated with the goal's worst case; the highway interchange has one
# exposure class less. Followers get the lowest controllability, the manually
# driven leader the highest.

# V01
event_rating follow_vehicle_in_front.no * highway S3 E4 C3;
event_rating follow_vehicle_in_front.no * highway_interchange S3 E3 C3;
event_rating follow_vehicle_in_front.more * highway S3 E4 C3;
event_rating follow_vehicle_in_front.more * highway_interchange S3 E3 C3;
event_rating follow_vehicle_in_front.less * highway S3 E4 C3;
event_rating follow_vehicle_in_front.less * highway_interchange S3 E3 C3;

# V02
event_rating keep_distance_follower.no * highway S3 E4 C3;
event_rating keep_distance_follower.no * highway_interchange S3 E3 C3;
event_rating keep_distance_follower.less * highway S3 E4 C3;
event_rating keep_distance_follower.less * highway_interchange S3 E3 C3;
event_rating keep_distance_follower.reverse * highway S3 E4 C3;
event_rating keep_distance_follower.reverse * highway_interchange S3 E3 C3;

# V03
event_rating keep_distance_follower.more * highway S2 E4 C2;
event_rating keep_distance_follower.more * highway_interchange S2 E3 C2;
event_rating keep_distance_follower.other_than * highway S2 E4 C2;
event_rating keep_distance_follower.other_than * highway_interchange S2 E3 C2;

# V04
event_rating lead_platoon.no * highway S3 E4 C1;
event_rating lead_platoon.no * highway_interchange S3 E3 C1;
event_rating lead_platoon.more * highway S3 E4 C1;
event_rating lead_platoon.more * highway_interchange S3 E3 C1;
event_rating lead_platoon.less * highway S3 E4 C1;
event_rating lead_platoon.less * highway_interchange S3 E3 C1;
event_rating lead_platoon.other_than * highway S3 E4 C1;
event_rating lead_platoon.other_than * highway_interchange S3 E3 C1;

# V05
event_rating take_leader_role.no * highway S3 E4 C2;
event_rating take_leader_role.no * highway_interchange S3 E3 C2;
event_rating take_leader_role.part_of * highway S3 E4 C2;
event_rating take_leader_role.part_of * highway_interchange S3 E3 C2;
event_rating take_leader_role.other_than * highway S3 E4 C2;
event_rating take_leader_role.other_than * highway_interchange S3 E3 C2;

# V06
event_rating switch_leader_to_follower.no * highway S3 E4 C3;
event_rating switch_leader_to_follower.no * highway_interchange S3 E3 C3;
event_rating switch_leader_to_follower.part_of * highway S3 E4 C3;
event_rating switch_leader_to_follower.part_of * highway_interchange S3 E3 C3;
event_rating switch_leader_to_follower.other_than * highway S3 E4 C3;
event_rating switch_leader_to_follower.other_than * highway_interchange S3 E3 C3;

# V07
event_rating join_platoon.no * highway S3 E4 C2;
event_rating join_platoon.no * highway_interchange S3 E3 C2;
event_rating join_platoon.part_of * highway S3 E4 C2;
event_rating join_platoon.part_of * highway_interchange S3 E3 C2;

# V08
event_rating leave_platoon.no * highway S3 E4 C1;
event_rating leave_platoon.no * highway_interchange S3 E3 C1;
event_rating leave_platoon.part_of * highway S3 E4 C1;
event_rating leave_platoon.part_of * highway_interchange S3 E3 C1;

# V09
event_rating react_to_surrounding.no * highway S3 E4 C3;
event_rating react_to_surrounding.no * highway_interchange S3 E3 C3;
event_rating react_to_surrounding.less * highway S3 E4 C3;
event_rating react_to_surrounding.less * highway_interchange S3 E3 C3;

# V10
event_rating react_to_surrounding.more * highway S3 E4 C2;
event_rating react_to_surrounding.more * highway_interchange S3 E3 C2;
event_rating react_to_surrounding.as_well_as * highway S3 E4 C2;
event_rating react_to_surrounding.as_well_as * highway_interchange S3 E3 C2;
event_rating react_to_surrounding.other_than * highway S3 E4 C2;
event_rating react_to_surrounding.other_than * highway_interchange S3 E3 C2;

# V11
event_rating follow_traffic_rules.no * highway S3 E4 C3;
event_rating follow_traffic_rules.no * highway_interchange S3 E3 C3;

# V12
event_rating follow_traffic_rules.part_of * highway S3 E4 C2;
event_rating follow_traffic_rules.part_of * highway_interchange S3 E3 C2;

# V13
event_rating follow_traffic_rules.reverse * highway S3 E4 C3;
event_rating follow_traffic_rules.reverse * highway_interchange S3 E3 C3;

# V14
event_rating follow_traffic_rules.other_than * highway S2 E4 C1;
event_rating follow_traffic_rules.other_than * highway_interchange S2 E3 C1;

# C01
event_rating keep_inter_vehicle_distance.no * highway S3 E4 C3;
event_rating keep_inter_vehicle_distance.no * highway_interchange S3 E3 C3;
event_rating keep_inter_vehicle_distance.more * highway S3 E4 C3;
event_rating keep_inter_vehicle_distance.more * highway_interchange S3 E3 C3;
event_rating keep_inter_vehicle_distance.less * highway S3 E4 C3;
event_rating keep_inter_vehicle_distance.less * highway_interchange S3 E3 C3;
event_rating keep_inter_vehicle_distance.other_than * highway S3 E4 C3;
event_rating keep_inter_vehicle_distance.other_than * highway_interchange S3 E3 C3;

# C02
event_rating keep_distance_to_traffic.no * highway S3 E4 C2;
event_rating keep_distance_to_traffic.no * highway_interchange S3 E3 C2;
event_rating keep_distance_to_traffic.less * highway S3 E4 C2;
event_rating keep_distance_to_traffic.less * highway_interchange S3 E3 C2;

# C03
event_rating keep_distance_to_traffic.more * highway S3 E4 C1;
event_rating keep_distance_to_traffic.more * highway_interchange S3 E3 C1;
event_rating keep_distance_to_traffic.other_than * highway S3 E4 C1;
event_rating keep_distance_to_traffic.other_than * highway_interchange S3 E3 C1;

# C04
event_rating make_place_for_joining.no * highway S3 E4 C2;
event_rating make_place_for_joining.no * highway_interchange S3 E3 C2;
event_rating make_place_for_joining.less * highway S3 E4 C2;
event_rating make_place_for_joining.less * highway_interchange S3 E3 C2;
event_rating make_place_for_joining.part_of * highway S3 E4 C2;
event_rating make_place_for_joining.part_of * highway_interchange S3 E3 C2;

# C05
event_rating make_place_for_joining.more * highway S3 E4 C1;
event_rating make_place_for_joining.more * highway_interchange S3 E3 C1;
event_rating make_place_for_joining.reverse * highway S3 E4 C1;
event_rating make_place_for_joining.reverse * highway_interchange S3 E3 C1;
event_rating make_place_for_joining.other_than * highway S3 E4 C1;
event_rating make_place_for_joining.other_than * highway_interchange S3 E3 C1;

# C06
event_rating merge_with_platoon.no * highway S3 E4 C2;
event_rating merge_with_platoon.no * highway_interchange S3 E3 C2;
event_rating merge_with_platoon.part_of * highway S3 E4 C2;
event_rating merge_with_platoon.part_of * highway_interchange S3 E3 C2;

# C07
event_rating merge_with_platoon.reverse * highway S3 E3 C1;
event_rating merge_with_platoon.reverse * highway_interchange S3 E2 C1;
event_rating merge_with_platoon.other_than * highway S3 E3 C1;
event_rating merge_with_platoon.other_than * highway_interchange S3 E2 C1;

# C08
event_rating split_platoon.no * highway S3 E4 C2;
event_rating split_platoon.no * highway_interchange S3 E3 C2;
event_rating split_platoon.part_of * highway S3 E4 C2;
event_rating split_platoon.part_of * highway_interchange S3 E3 C2;

# C09
event_rating split_platoon.reverse * highway S3 E4 C1;
event_rating split_platoon.reverse * highway_interchange S3 E3 C1;
event_rating split_platoon.other_than * highway S3 E4 C1;
event_rating split_platoon.other_than * highway_interchange S3 E3 C1;

# C10
event_rating change_leader.no * highway S3 E4 C2;
event_rating change_leader.no * highway_interchange S3 E3 C2;
event_rating change_leader.part_of * highway S3 E4 C2;
event_rating change_leader.part_of * highway_interchange S3 E3 C2;

# C11
event_rating change_leader.as_well_as * highway S3 E4 C1;
event_rating change_leader.as_well_as * highway_interchange S3 E3 C1;
event_rating change_leader.other_than * highway S3 E4 C1;
event_rating change_leader.other_than * highway_interchange S3 E3 C1;
