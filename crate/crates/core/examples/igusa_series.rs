// Exact Poincaré-type series of Igusa's local zeta function and its
// rational form.
//
//     cargo run --example igusa_series

use ultrazeta::field::FieldSpec;
use ultrazeta::poly::IntPolynomial;
use ultrazeta::rational::reconstruct_from_series;
use ultrazeta::upoly::fmt_rational;
use ultrazeta::zeta::{igusa_series, monomial_zeta_closed};

pub fn run_example() -> ultrazeta::Result<()> {
    let field = FieldSpec::qp(3);
    for (text, dn, dd) in [("x1^2", 0, 2), ("x1^2 - x2^3", 5, 7), ("x1*x2", 1, 2)] {
        let f = IntPolynomial::parse(text, None)?;
        let series = igusa_series(field, &f, dn + dd + 8)?;
        let z = reconstruct_from_series(3, &series.coeffs, dn, dd)?;
        let head: Vec<String> = series.coeffs.iter().take(6).map(fmt_rational).collect();
        println!("{text}: c_k = {}, ...", head.join(", "));
        println!("   Z(t) = {}", z.factored());
    }

    let closed = monomial_zeta_closed(3, &[1, 1], &[1, 1])?;
    println!("x1*x2 closed form: {}", closed.factored());
    Ok(())
}

fn main() {
    run_example().expect("igusa series");
}
