//! The rational elliptic surface as twelve I_1 fibers over the sphere.
//!
//! cargo run --release --example elliptic_surface

use meyer::fibered::{signature_report, total_euler};
use meyer::{geography_convert, DataSet, FiberGerm, FibrationDescription};

fn main() -> meyer::Result<()> {
    let data = DataSet::embedded();
    let p = &data.sl2z;
    let germs = (0..12)
        .map(|i| {
            let w = p.parse_word(if i % 2 == 0 { "A" } else { "B" })?;
            Ok(FiberGerm::new(w, 0, format!("I_1 #{}", i + 1)))
        })
        .collect::<meyer::Result<Vec<_>>>()?;
    let fd = FibrationDescription { genus: 1, base_genus: 0, germs };
    println!("monodromy product = {}", p.evaluate(&fd.monodromy_product())?);

    let report = signature_report(&fd, &data)?;
    for (label, s) in &report.local {
        println!("{label:>8}  sigma = {s}");
    }
    let euler = total_euler(1, 0, &[1; 12]);
    println!("Sign(E) = {}, chi(E) = {euler}", report.total);

    let geo = geography_convert(&meyer::exact::int(0), &meyer::exact::int(1));
    println!("from K^2 = 0, chi(O) = 1: Sign = {}, chi = {}", geo.signature, geo.euler);
    Ok(())
}
