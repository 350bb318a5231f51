# One feasible hazardous event has no S/E/C rating.
item car "Test vehicle" {
    kind vehicle;
    component control "Control";
}

function brake "brake the vehicle" {
    perspective vehicular;
    guide_words no more;
}

mode driving vehicular;
situation road vehicular;

feasibility_default infeasible;
feasible brake.no driving road;
feasible brake.more driving road;

event_rating brake.no * * S3 E4 C3;
