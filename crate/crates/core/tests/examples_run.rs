mod conjugate {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/conjugate.rs"));
}

#[test]
fn conjugate_example_runs() {
    conjugate::run_example().expect("conjugate example should run");
}

mod maximal_function {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/maximal_function.rs"));
}

#[test]
fn maximal_function_example_runs() {
    maximal_function::run_example().expect("maximal_function example should run");
}

mod bilateral_bounds {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bilateral_bounds.rs"));
}

#[test]
fn bilateral_bounds_example_runs() {
    bilateral_bounds::run_example().expect("bilateral_bounds example should run");
}

mod growth_scales {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/growth_scales.rs"));
}

#[test]
fn growth_scales_example_runs() {
    growth_scales::run_example().expect("growth_scales example should run");
}

mod several_variables {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/several_variables.rs"));
}

#[test]
fn several_variables_example_runs() {
    several_variables::run_example().expect("several_variables example should run");
}

mod generating_functions {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/generating_functions.rs"));
}

#[test]
fn generating_functions_example_runs() {
    generating_functions::run_example().expect("generating_functions example should run");
}
