// Candidate poles -(N + m_l)/v from numerical data (N, v) and generalized
// progressions m_l.
//
//     cargo run --example pole_prediction

use ultrazeta::zeta::poles::{predict_poles, GeneralizedProgression, ResolutionData};

pub fn run_example() -> ultrazeta::Result<()> {
    let data = ResolutionData::parse("(1,1);(2,2)")?;
    let prog = GeneralizedProgression::parse("1,1,1,...")?;
    let pred = predict_poles(&data, &[prog.clone(), prog], 5)?;
    for c in &pred.candidates {
        println!("{:>6.3}  from {} source(s)", c.real_part, c.sources.len());
    }

    // steps α+1, α, α, ... give m_l = αl
    let arith = GeneralizedProgression::arithmetic(0.5)?;
    println!("arithmetic(0.5): {:?}", arith.terms(5));
    Ok(())
}

fn main() {
    run_example().expect("pole prediction");
}
