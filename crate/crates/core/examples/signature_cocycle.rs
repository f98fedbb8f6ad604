//! Evaluates the signature cocycle on a few pairs and checks its axioms on random triples.
//!
//! cargo run --example signature_cocycle

use meyer::cocycle::{tau_triple, v_space};
use meyer::{random_symplectic, tau_sp, SymplecticMatrix};

fn main() -> meyer::Result<()> {
    let t = SymplecticMatrix::parse("1,1;0,1")?;
    let s = SymplecticMatrix::parse("0,1;-1,0")?;
    for (name, a, b) in [("T, T", &t, &t), ("S, S", &s, &s), ("T, S", &t, &s), ("S, T^-1", &s, &t.inverse())] {
        let triple = tau_triple(a, b)?;
        println!(
            "tau({name}) = {:>2}   dim V = {}   (+{}, -{}, 0:{})",
            triple.value(),
            v_space(a, b)?.dim(),
            triple.positive,
            triple.negative,
            triple.null
        );
    }

    for genus in 1..=3 {
        let mut worst = 0;
        for seed in 0..20 {
            let a = random_symplectic(genus, 10, 3 * seed);
            let b = random_symplectic(genus, 10, 3 * seed + 1);
            let c = random_symplectic(genus, 10, 3 * seed + 2);
            let lhs = tau_sp(&(&a * &b), &c)? + tau_sp(&a, &b)?;
            let rhs = tau_sp(&a, &(&b * &c))? + tau_sp(&b, &c)?;
            assert_eq!(lhs, rhs);
            worst = worst.max(tau_sp(&a, &b)?.abs());
        }
        println!("genus {genus}: cocycle identity holds on 20 triples, max |tau| = {worst}");
    }
    Ok(())
}
