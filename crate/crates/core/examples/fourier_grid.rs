// Fourier transform of locally constant functions with compact support.
//
//     cargo run --example fourier_grid

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ultrazeta::field::FieldSpec;
use ultrazeta::grid::GridFunction;

pub fn run_example() -> ultrazeta::Result<()> {
    let field = FieldSpec::qp(3);

    // the indicator of π R is self-dual up to scaling: its transform is
    // q^{-1} times the indicator of π^{-1} R
    let g = GridFunction::indicator_ball(field, 1, 1, 2, 2)?;
    let gh = g.fourier();
    let support: Vec<_> = gh.values().iter().filter(|v| v.norm() > 1e-12).collect();
    println!("ĝ is {:.6} on {} of {} cells", support[0].re, support.len(), gh.values().len());
    assert!(gh.sub(&GridFunction::indicator_ball(field, 1, -1, 2, 2)?.scale((1.0 / 3.0).into()))?.sup_norm() < 1e-12);

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let h = GridFunction::random(FieldSpec::qp(2), 2, 1, 2, &mut rng)?;
    let hh = h.fourier();
    let twice = hh.fourier();
    let inv = twice.sub(&h.reflect())?.sup_norm();
    println!("‖F F h - h(-x)‖_∞ = {inv:.2e}");
    println!("‖h‖ = {:.12}, ‖ĥ‖ = {:.12}", h.l2_norm(), hh.l2_norm());
    let back = hh.inverse_fourier().sub(&h)?.sup_norm();
    println!("‖F⁻¹ F h - h‖_∞ = {back:.2e}");
    Ok(())
}

fn main() {
    run_example().expect("fourier grid");
}
