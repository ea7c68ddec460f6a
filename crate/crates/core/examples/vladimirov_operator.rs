// Pseudodifferential operators with symbols ∏ |h_i(ξ)|^{α_i}, the
// Vladimirov operator among them, and the Γ factor of the Riesz kernels.
//
//     cargo run --example vladimirov_operator

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ultrazeta::field::FieldSpec;
use ultrazeta::grid::GridFunction;
use ultrazeta::upoly::fmt_rational;
use ultrazeta::vladimirov::{space_value, GammaFactor, PseudoDiffOp};

pub fn run_example() -> ultrazeta::Result<()> {
    let gf = GammaFactor::new(2)?;
    println!("Γ_2(2) = {}", fmt_rational(&gf.eval_int(2)?));
    println!("Γ_2(0.5 + i) = {:.10}", gf.eval(Complex64::new(0.5, 1.0))?);

    let field = FieldSpec::qp(3);
    let one = GridFunction::indicator_ball(field, 1, 0, 2, 2)?;
    let d = PseudoDiffOp::vladimirov(&[Complex64::new(1.0, 0.0)])?;
    let u = d.apply(&one)?;
    println!("(D¹ 1_Z3)(0) = {:.10}", space_value(&u, &[0])?.value);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = GridFunction::random(field, 2, 1, 1, &mut rng)?;
    let op = PseudoDiffOp::parse(2, "x1^2+x2^2:0.5; x1:1.3")?;
    let ag = op.apply(&g)?;
    for l in [0.0, 2.0, 4.0] {
        let lhs = ag.sobolev_norm(l)?.value;
        let rhs = g.sobolev_norm(l + op.order_shift());
        println!("l = {l}: ‖A g‖_l = {lhs:.6} ≤ ‖g‖_(l+{}) = {rhs:.6}", op.order_shift());
    }
    Ok(())
}

fn main() {
    run_example().expect("vladimirov operator");
}
