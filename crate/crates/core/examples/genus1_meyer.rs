//! The genus-1 Meyer function from Dedekind sums, and its coboundary.
//!
//! cargo run --example genus1_meyer

use meyer::genus1::{dedekind_sum, phi1, rademacher, sigma_defect, SL2Element};
use meyer::tau_sp;
use num_bigint::BigInt;

fn main() -> meyer::Result<()> {
    println!("s(1, 3) = {}", dedekind_sum(&BigInt::from(1), &BigInt::from(3))?);
    println!("s(5, 27) = {}", dedekind_sum(&BigInt::from(5), &BigInt::from(27))?);

    let samples = [
        ("T", SL2Element::from_i64(1, 1, 0, 1)?),
        ("T^-1", SL2Element::from_i64(1, -1, 0, 1)?),
        ("S", SL2Element::from_i64(0, -1, 1, 0)?),
        ("-I", SL2Element::from_i64(-1, 0, 0, -1)?),
        ("hyperbolic", SL2Element::from_i64(2, 1, 1, 1)?),
        ("[[5,2],[7,3]]", SL2Element::from_i64(5, 2, 7, 3)?),
    ];
    println!("{:>14} {:>8} {:>6} {:>6}", "alpha", "Psi", "sigma", "phi1");
    for (name, a) in &samples {
        println!("{name:>14} {:>8} {:>6} {:>6}", rademacher(a), sigma_defect(a), phi1(a)?);
    }

    // tau(A, B) = phi1(A) + phi1(B) - phi1(AB)
    for (_, a) in &samples {
        for (_, b) in &samples {
            let ab = a * b;
            let lhs = tau_sp(&a.to_symplectic(), &b.to_symplectic())?;
            assert_eq!(meyer::exact::int(lhs), phi1(a)? + phi1(b)? - phi1(&ab)?);
        }
    }
    println!("coboundary identity holds on all {} pairs", samples.len() * samples.len());
    Ok(())
}
