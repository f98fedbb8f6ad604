//! Order of the signature class on the shipped presentations of SL(2; Z) and M_2.
//!
//! cargo run --release --example class_order

use meyer::Presentation;

fn main() -> meyer::Result<()> {
    for p in [Presentation::sl2z(), Presentation::genus2()] {
        println!("genus {} ({} generators, {} relators)", p.genus(), p.generator_count(), p.relators().len());
        for r in p.relators() {
            println!("  c({}) = {}", p.format_word(r), p.cochain_c(r)?);
        }
        match p.class_order()? {
            meyer::ClassOrder::Finite(o) => {
                print!("  order {}", o.n);
                if let Some(m) = &o.m {
                    print!(", c(r) / alpha(r) = {m}/{}", o.n);
                }
                println!();
            }
            meyer::ClassOrder::Unbounded => println!("  infinite order"),
        }
    }
    Ok(())
}
