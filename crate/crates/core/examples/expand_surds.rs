//! Expand quadratic surds into periodic continued fractions and back.
//!
//! $ cargo run --example expand_surds

use rmtori::cf::PeriodicCF;
use rmtori::exact::QuadraticSurd;

fn main() -> rmtori::Result<()> {
    for text in [
        "(0+1*sqrt(2))/1",
        "(1+1*sqrt(5))/2",
        "(0-1*sqrt(2))/1",
        "(-7+3*sqrt(11))/5",
    ] {
        let x: QuadraticSurd = text.parse()?;
        let cf = PeriodicCF::expand(&x);
        let back = cf.evaluate()?;
        assert_eq!(back, x);
        println!("{x:<20} ~ {:>10.6}  {cf}", x.to_f64());
    }

    // convergents of sqrt(7) = [2;1,1,1,4]
    let cf: PeriodicCF = "[2;1,1,1,4]".parse()?;
    let convergents: Vec<String> = cf.convergents(8)?.iter().map(|r| r.to_string()).collect();
    println!("sqrt(7) convergents: {}", convergents.join(", "));
    Ok(())
}
