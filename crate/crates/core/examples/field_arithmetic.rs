// Elements of Q_p and F_p((T)): digit expansions, valuations, norms and the
// additive character.
//
//     cargo run --example field_arithmetic

use ultrazeta::field::{ball_measure, sphere_measure, FieldSpec, LocalFieldElement};
use ultrazeta::upoly::fmt_rational;

pub fn run_example() -> ultrazeta::Result<()> {
    let q3 = FieldSpec::qp(3);
    let x = LocalFieldElement::from_ratio(q3, 5, 9, 12)?;
    let y = LocalFieldElement::from_ratio(q3, -2, 1, 12)?;
    let (ord, norm) = x.valuation_and_norm();
    println!("x = 5/9 = {x}");
    println!("ord(x) = {ord:?}, |x| = {}", fmt_rational(&norm));
    println!("frac part of x = {}", fmt_rational(&x.char_fraction()?));
    println!("x + y = {}", x.add(&y)?);
    println!("x * y = {}", x.mul(&y)?);
    let back = x.mul(&y)?.div(&y)?;
    assert_eq!(back.to_finite(), x.to_finite());

    // same digits, different carries
    let f3 = FieldSpec::laurent(3);
    let a = LocalFieldElement::from_i64(f3, 2, 8);
    let b = LocalFieldElement::from_i64(q3, 2, 8);
    println!("2 + 2 in F_3((T)) = {}", a.add(&a)?);
    println!("2 + 2 in Q_3      = {}", b.add(&b)?);

    for l in -1..=2 {
        println!(
            "n = 2, l = {l}: vol(π^l R^2) = {}, vol(‖x‖ = 3^{}) = {}",
            fmt_rational(&ball_measure(l, 2, 3)),
            -l,
            fmt_rational(&sphere_measure(l, 2, 3))
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("field arithmetic");
}
