//! Every example runs to completion.

#[path = "../examples/reflection.rs"]
mod reflection;
#[path = "../examples/dispersion.rs"]
mod dispersion;
#[path = "../examples/casimir.rs"]
mod casimir;
#[path = "../examples/casimir_polder.rs"]
mod casimir_polder;
#[path = "../examples/charge.rs"]
mod charge;
#[path = "../examples/sphere.rs"]
mod sphere;
#[path = "../examples/functions.rs"]
mod functions;
#[path = "../examples/propagator.rs"]
mod propagator;
#[path = "../examples/sweep.rs"]
mod sweep;

#[test]
fn examples_complete() {
    reflection::run_example().unwrap();
    dispersion::run_example().unwrap();
    casimir::run_example().unwrap();
    casimir_polder::run_example().unwrap();
    charge::run_example().unwrap();
    sphere::run_example().unwrap();
    functions::run_example().unwrap();
    propagator::run_example().unwrap();
    sweep::run_example().unwrap();
}
