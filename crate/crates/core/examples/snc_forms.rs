// Zeta functions of forms with no singular point mod p, rebuilt from the
// integral over the unit sphere.
//
//     cargo run --example snc_forms

use ultrazeta::field::FieldSpec;
use ultrazeta::poly::IntPolynomial;
use ultrazeta::zeta::igusa_series;
use ultrazeta::zeta::snc::snc_form_z0;

pub fn run_example() -> ultrazeta::Result<()> {
    for p in [3, 5] {
        let field = FieldSpec::qp(p);
        let f = IntPolynomial::parse("x1^2 + x2^2", None)?;
        let series = igusa_series(field, &f, 12)?;
        let form = snc_form_z0(field, &f, &series)?;
        println!("p = {p}: Z0 = {}", form.z0.factored());
        println!("       Z  = {}  ({} held-out terms agree)", form.zeta.factored(), form.held_out);
    }
    Ok(())
}

fn main() {
    run_example().expect("snc forms");
}
