//! [p; 2p] = sqrt(1 + p^2), checked exactly.
//!
//! $ cargo run --example minimal_model
//! p=1   [1;2]    (0+1*sqrt(2))/1
//! p=2   [2;4]    (0+1*sqrt(5))/1
//! p=7   [7;14]   (0+5*sqrt(2))/1
//! ...

use rmtori::cf::PeriodicCF;
use rmtori::exact::Integer;
use rmtori::surface::minimal_model_theta;

fn main() -> rmtori::Result<()> {
    for p in [1, 2, 3, 7, 12, 50] {
        let theta = minimal_model_theta(&Integer::from(p))?;
        let cf = PeriodicCF::expand(&theta);
        println!("p={p:<3} {:<8} {theta}", cf.to_string());
    }
    Ok(())
}
