//! Hyperelliptic twist values and the Horikawa-index side of local signatures.
//!
//! cargo run --example hyperelliptic

use meyer::exact::{int, rational};
use meyer::fibered::{horikawa_total, sigma_alg_hyperelliptic, TwistKind};
use meyer::hyperelliptic_twist_value;

fn main() -> meyer::Result<()> {
    for g in 1..=5u32 {
        print!("g = {g}: nonsep {}", hyperelliptic_twist_value(g, TwistKind::NonSeparating)?);
        for h in 1..g {
            print!(", sep({h}) {}", hyperelliptic_twist_value(g, TwistKind::Separating(h))?);
        }
        println!();
    }

    // a genus-2 fiber with one node and Horikawa index 0
    println!("sigma_alg(H = 0, e = 1, g = 2) = {}", sigma_alg_hyperelliptic(&int(0), 1, 2)?);
    println!("sigma_alg(H = 1, e = 2, g = 2) = {}", sigma_alg_hyperelliptic(&int(1), 2, 2)?);
    println!("sum H for K^2 = 4, chi_f = 1, g = 2: {}", horikawa_total(4, &int(1), 2)?);
    println!("sum H for K^2 = 7, chi_f = 3/2, g = 3: {}", horikawa_total(7, &rational(3, 2), 3)?);
    Ok(())
}
