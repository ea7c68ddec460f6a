// Riesz kernels |x|^{α-1}/Γ(α): the pairing computed on the frequency side
// against the same pairing on the space side, and the Γ-weighted shift
// identity for D^β.
//
//     cargo run --example riesz_identity

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ultrazeta::field::FieldSpec;
use ultrazeta::grid::GridFunction;
use ultrazeta::vladimirov::{multiplier_shift_check, riesz_pairing, shift_identity_check};

pub fn run_example() -> ultrazeta::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let phi = GridFunction::random(FieldSpec::qp(3), 2, 1, 1, &mut rng)?;
    for a in [0.3, 0.5, 0.7] {
        let r = riesz_pairing(&[Complex64::new(a, 0.0); 2], &phi)?;
        println!("α = {a}: {:.12} vs {:.12} (diff {:.1e})", r.frequency_side, r.space_side, r.discrepancy);
    }

    let alpha = [Complex64::new(0.4, 0.2); 2];
    let beta = [Complex64::new(0.3, 0.0); 2];
    let shift = multiplier_shift_check(&alpha, &beta, &phi)?;
    println!("D^β on a Riesz kernel: diff {:.1e}", shift.discrepancy);

    let s = shift_identity_check(&phi, &[1, 1], &[0, 0], 1, Complex64::new(-0.6, 0.1))?;
    println!("shift identity: {:.10} vs {:.10}", s.lhs, s.rhs);
    Ok(())
}

fn main() {
    run_example().expect("riesz identity");
}
