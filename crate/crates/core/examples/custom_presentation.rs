//! Builds a presentation from JSON and synthesises its Meyer function.
//!
//! cargo run --example custom_presentation

use meyer::Presentation;

// SL(2; Z) on the generators S and T.
const TEXT: &str = r#"{
  "genus": 1,
  "generators": ["s", "t"],
  "matrices": {
    "s": [[0, -1], [1, 0]],
    "t": [[1, 1], [0, 1]]
  },
  "relators": ["s^4", "(s t)^3 s^-2"],
  "artin": false
}"#;

fn main() -> meyer::Result<()> {
    let p = Presentation::from_json(TEXT)?;
    let phi = p.synthesize_meyer()?;
    println!("order {}", phi.n());
    for (name, q) in p.generator_names().iter().zip(&phi.order().coefficients) {
        println!("  q_{name} = {q}");
    }
    for w in ["s", "t", "s t", "t^3 s", "(s t)^3"] {
        let word = p.parse_word(w)?;
        let closed = meyer::genus1::phi1_matrix(&p.evaluate(&word)?)?;
        println!("phi({w}) = {}   closed form {closed}", phi.eval(&word)?);
    }
    Ok(())
}
