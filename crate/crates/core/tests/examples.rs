//! Runs every example under `examples/` so they stay correct.

#[allow(dead_code)]
mod field_arithmetic {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/field_arithmetic.rs"));
}

#[test]
fn field_arithmetic_runs() {
    field_arithmetic::run_example().expect("field arithmetic");
}

#[allow(dead_code)]
mod fourier_grid {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fourier_grid.rs"));
}

#[test]
fn fourier_grid_runs() {
    fourier_grid::run_example().expect("fourier grid");
}

#[allow(dead_code)]
mod sobolev_norms {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sobolev_norms.rs"));
}

#[test]
fn sobolev_norms_runs() {
    sobolev_norms::run_example().expect("sobolev norms");
}

#[allow(dead_code)]
mod igusa_series {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/igusa_series.rs"));
}

#[test]
fn igusa_series_runs() {
    igusa_series::run_example().expect("igusa series");
}

#[allow(dead_code)]
mod snc_forms {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/snc_forms.rs"));
}

#[test]
fn snc_forms_runs() {
    snc_forms::run_example().expect("snc forms");
}

#[allow(dead_code)]
mod hinf_zeta {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hinf_zeta.rs"));
}

#[test]
fn hinf_zeta_runs() {
    hinf_zeta::run_example().expect("hinf zeta");
}

#[allow(dead_code)]
mod pole_prediction {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/pole_prediction.rs"));
}

#[test]
fn pole_prediction_runs() {
    pole_prediction::run_example().expect("pole prediction");
}

#[allow(dead_code)]
mod heat_kernel {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/heat_kernel.rs"));
}

#[test]
fn heat_kernel_runs() {
    heat_kernel::run_example().expect("heat kernel");
}

#[allow(dead_code)]
mod vladimirov_operator {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/vladimirov_operator.rs"));
}

#[test]
fn vladimirov_operator_runs() {
    vladimirov_operator::run_example().expect("vladimirov operator");
}

#[allow(dead_code)]
mod riesz_identity {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/riesz_identity.rs"));
}

#[test]
fn riesz_identity_runs() {
    riesz_identity::run_example().expect("riesz identity");
}

#[allow(dead_code)]
mod fundamental_solution {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fundamental_solution.rs"));
}

#[test]
fn fundamental_solution_runs() {
    fundamental_solution::run_example().expect("fundamental solution");
}
