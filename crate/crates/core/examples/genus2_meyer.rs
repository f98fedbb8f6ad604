//! The genus-2 Meyer function synthesised from the Birman-Hilden presentation.
//!
//! cargo run --release --example genus2_meyer

use meyer::Presentation;

fn main() -> meyer::Result<()> {
    let p = Presentation::genus2();
    let phi = p.synthesize_meyer()?;
    println!("order n = {}, phi values lie in (1/{})Z", phi.n(), phi.n());
    for w in ["c1", "c2", "c3", "c4", "c5", "c1^-1", "(c1 c2)^6", "c1 c3", "c1 c2 c3 c4 c5"] {
        println!("phi_2({w:>16}) = {}", phi.eval_str(w)?);
    }

    let x = p.parse_word("c1 c2 c4^-1")?;
    let y = p.parse_word("c3 c5 c2")?;
    let tau = meyer::tau_sp(&p.evaluate(&x)?, &p.evaluate(&y)?)?;
    let rhs = phi.eval(&x)? + phi.eval(&y)? - phi.eval(&x.concat(&y))?;
    println!("tau(x, y) = {tau}, phi(x) + phi(y) - phi(xy) = {rhs}");
    Ok(())
}
