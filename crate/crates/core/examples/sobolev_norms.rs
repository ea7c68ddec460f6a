// Sobolev norms ‖g‖_l² = ∫ [ξ]^l |ĝ(ξ)|² dξ of grid functions.
//
//     cargo run --example sobolev_norms

use ultrazeta::field::FieldSpec;
use ultrazeta::grid::GridFunction;

pub fn run_example() -> ultrazeta::Result<()> {
    let field = FieldSpec::qp(5);
    // a ball shrinking toward the origin spreads out in frequency
    for k in 0..3 {
        let g = GridFunction::indicator_ball(field, 1, k, 1, 3)?;
        let norms: Vec<String> = [0.0, 1.0, 2.0, 4.0].iter().map(|&l| format!("{:.5}", g.sobolev_norm(l))).collect();
        println!("1_(5^{k} Z_5): ‖·‖_0,1,2,4 = {}", norms.join(", "));
    }
    Ok(())
}

fn main() {
    run_example().expect("sobolev norms");
}
