//! The class-number-one table: sqrt(D), its expansion and Picard number 1+k.
//!
//! $ cargo run --example cm_table
//! 2    [1;2]                                       rho 2
//! 3    [1;1,2]                                     rho 3
//! ...
//! 163  [12;1,3,3,2,1,1,7,1,11,1,7,1,1,2,3,3,1,24]  rho 19

use rmtori::surface::CMSpec;

fn main() -> rmtori::Result<()> {
    for d in [2, 3, 7, 11, 19, 43, 67, 163] {
        let row = CMSpec::new(d, 1)?.row();
        println!("{:<4} {:<43} rho {}", row.d, row.cf.to_string(), row.picard);
    }
    // D = 1 mod 4 uses (1+sqrt(D))/2, whose period ends in 2*b1 - 1
    for d in [5, 13, 17, 21] {
        let row = CMSpec::new(d, 1)?.row();
        println!(
            "{:<4} {:<20} {:<12} palindrome {}",
            row.d,
            row.theta.to_string(),
            row.cf.to_string(),
            row.palindrome_ok
        );
    }
    Ok(())
}
