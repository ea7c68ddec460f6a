// Zeta function of a form against e^{-‖ξ‖^α}, summed over spheres and
// continued through the factored representation.
//
//     cargo run --example hinf_zeta

use num_complex::Complex64;
use ultrazeta::field::FieldSpec;
use ultrazeta::zeta::hinf::{diagonal_form, HinfMode, HinfZeta};

pub fn run_example() -> ultrazeta::Result<()> {
    let z = HinfZeta::new(FieldSpec::qp(3), &diagonal_form(2, 2), 1.0)?;
    for s in [Complex64::new(0.5, 0.0), Complex64::new(2.0, 1.0)] {
        let a = z.eval(s, HinfMode::SphereSeries)?;
        let b = z.eval(s, HinfMode::FactoredContinuation)?;
        println!("Z({s}) = {:.12} | {:.12}", a.value(), b.value());
    }
    // only the continuation reaches the left half-plane
    let s = Complex64::new(-1.25, 0.4);
    println!("Z({s}) = {:.10}", z.eval(s, HinfMode::FactoredContinuation)?.value());
    println!("real poles in [-3, -0.5]: {:?}", z.locate_real_poles(-3.0, -0.5, 0.01));
    Ok(())
}

fn main() {
    run_example().expect("hinf zeta");
}
