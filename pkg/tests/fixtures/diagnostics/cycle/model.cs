# Two subtrees include each other.
item car "Test vehicle" {
    kind vehicle;
    component control "Control";
}

tree outer {
    or {
        basic control loss_of_output;
        include inner;
    }
}

tree inner {
    and {
        basic control stuck_output;
        include outer;
    }
}
