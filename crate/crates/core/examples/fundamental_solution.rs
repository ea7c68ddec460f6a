// Fundamental solutions of |f(ξ)| for monomials f: the constant term T₀ of
// the zeta distribution at s = -1 and the checks it must pass.
//
//     cargo run --example fundamental_solution

use ultrazeta::field::FieldSpec;
use ultrazeta::fundsol::{extract_t0, fundamental_solution_check};
use ultrazeta::grid::GridFunction;
use ultrazeta::poly::IntPolynomial;

pub fn run_example() -> ultrazeta::Result<()> {
    let field = FieldSpec::qp(3);
    let x = IntPolynomial::parse("x1", None)?;
    let ball = GridFunction::indicator_ball(field, 1, 0, 1, 1)?;
    println!("T₀(1_Z3) = {:.12}", extract_t0(&ball, &x)?);

    for (text, l, m) in [("x1", 1, 2), ("x1*x2", 1, 1)] {
        let f = IntPolynomial::parse(text, None)?;
        let r = fundamental_solution_check(field, &f, 3, 11, l, m)?;
        let worst = r.trials.iter().map(|t| t.delta_error.max(t.convolution_residual)).fold(0.0, f64::max);
        println!(
            "{text}: pass = {}, worst residual {worst:.1e}, exact division on {} cells",
            r.pass(),
            r.division_cells
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("fundamental solution");
}
