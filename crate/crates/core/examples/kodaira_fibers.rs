//! Kodaira's singular fibers: monodromies, Euler numbers and phi_1.
//!
//! cargo run --example kodaira_fibers

use meyer::genus1::phi1_matrix;
use meyer::DataSet;

fn main() -> meyer::Result<()> {
    let data = DataSet::embedded();
    println!("{:>6} {:>12} {:>5} {:>8}", "type", "monodromy", "euler", "phi1");
    for name in ["I_0", "I_1", "I_2", "I_5", "II", "III", "IV", "I_0*", "I_1*", "IV*", "III*", "II*"] {
        let f = data.kodaira.fiber(name)?;
        let m = data.kodaira.monodromy_matrix(name)?;
        println!("{:>6} {:>12} {:>5} {:>8}", f.name, m.to_string(), f.euler, phi1_matrix(&m)?);
    }
    Ok(())
}
