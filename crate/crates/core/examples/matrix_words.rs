//! The matrix word of a periodic fraction fixes its value; its entries give
//! the fixed quadratic and satisfy the Pell-type identity.
//!
//! $ cargo run --example matrix_words

use rmtori::cf::{pell_check, PeriodicCF, QuadCoeffs};

fn main() -> rmtori::Result<()> {
    for text in ["[1;2]", "[;1]", "[2;1,1,1,4]", "[-2,1,1;2]", "[3,5;1,2,7]"] {
        let cf: PeriodicCF = text.parse()?;
        let word = cf.matrix_word();
        let coeffs = QuadCoeffs::from_matrix(&word)?;
        let theta = cf.evaluate()?;
        println!(
            "{cf:<12} word {word:<24} det {:>2}  (A,B,C) = {coeffs:<12} pell {}  fixes {theta}: {}",
            word.det(),
            pell_check(&coeffs, &word, cf.k()),
            word.apply(&theta)? == theta,
        );
    }
    Ok(())
}
