//! Reads a fibration file and prints each germ's local signature.
//!
//! cargo run --example local_signatures [FILE]

use meyer::fibered::signature_report;
use meyer::{DataSet, FibrationDescription};

const DEFAULT: &str = r#"{
  "genus": 1,
  "base_genus": 0,
  "germs": [
    {"monodromy": "kodaira:II", "neighborhood_signature": 0, "label": "cusp"},
    {"monodromy": "kodaira:II*", "neighborhood_signature": -8, "label": "E8 fiber"}
  ]
}"#;

fn main() -> meyer::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let data = DataSet::embedded();
    let fd = FibrationDescription::from_json(&text, &data)?;
    let report = signature_report(&fd, &data)?;
    for (label, s) in &report.local {
        println!("{label}: {s}");
    }
    println!("total: {}", report.total);
    Ok(())
}
