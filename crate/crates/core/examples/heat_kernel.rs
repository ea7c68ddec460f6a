// The heat kernel with transform e^{-t‖ξ‖^α}: Sobolev norms with tail
// bounds and pairing with a grid function.
//
//     cargo run --example heat_kernel

use ultrazeta::field::FieldSpec;
use ultrazeta::grid::GridFunction;
use ultrazeta::zeta::heat::HeatKernel;

pub fn run_example() -> ultrazeta::Result<()> {
    let k = HeatKernel::new(3, 2, 0.1, 2.0)?;
    for l in [0.0, 4.0, 10.0, 20.0] {
        let c = k.sobolev_norm(l)?;
        println!("‖G_t‖_{l} = {:.10e}  (tail ≤ {:.1e})", c.value, c.error_bound);
    }
    let chk = k.l2_check()?;
    println!("‖G_t‖_0² = {:.15} = {:.15}", chk.direct, chk.expanded);

    let g = GridFunction::indicator_ball(FieldSpec::qp(3), 2, 0, 1, 2)?;
    println!("[G_t, 1_R^2] = {:.12}", k.pairing_grid(&g)?.value);
    Ok(())
}

fn main() {
    run_example().expect("heat kernel");
}
