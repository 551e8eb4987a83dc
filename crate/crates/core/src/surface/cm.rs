use rug::Integer;

use crate::cf::PeriodicCF;
use crate::error::{Error, Result};
use crate::exact::squarefree::is_square_free;
use crate::exact::QuadraticSurd;

/// Square-free `D > 1` together with a conductor `f >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMSpec {
    d: Integer,
    f: Integer,
}

/// One row of the complex-multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmRow {
    pub d: Integer,
    pub f: Integer,
    pub theta: QuadraticSurd,
    pub cf: PeriodicCF,
    pub palindrome_ok: bool,
    pub picard: usize,
}

impl CmRow {
    pub fn k(&self) -> usize {
        self.cf.k()
    }
}

/// The class-number-one discriminants of the printed table, with their
/// expansions of `√D` and Picard numbers `1 + k`.
pub const CLASS_NUMBER_ONE_TABLE: [(u32, &str, usize); 8] = [
    (2, "[1;2]", 2),
    (3, "[1;1,2]", 3),
    (7, "[2;1,1,1,4]", 5),
    (11, "[3;3,6]", 3),
    (19, "[4;2,1,3,1,2,8]", 7),
    (43, "[6;1,1,3,1,5,1,3,1,1,12]", 11),
    (67, "[8;5,2,1,1,7,1,1,2,5,16]", 11),
    (163, "[12;1,3,3,2,1,1,7,1,11,1,7,1,1,2,3,3,1,24]", 19),
];

impl CMSpec {
    pub fn new(d: impl Into<Integer>, f: impl Into<Integer>) -> Result<Self> {
        let (d, f) = (d.into(), f.into());
        if d <= 1 || !is_square_free(&d) {
            return Err(Error::InvalidD(d));
        }
        if f < 1 {
            return Err(Error::InvalidConductor(f));
        }
        Ok(CMSpec { d, f })
    }

    pub fn d(&self) -> &Integer {
        &self.d
    }

    pub fn f(&self) -> &Integer {
        &self.f
    }

    fn one_mod_four(&self) -> bool {
        self.d.mod_u(4) == 1
    }

    /// `√(f²D)` for `D ≡ 2, 3 (mod 4)` and `(1 + √(f²D)) / 2` for `D ≡ 1`.
    pub fn theta(&self) -> QuadraticSurd {
        let radicand = Integer::from(self.f.square_ref()) * &self.d;
        let theta = if self.one_mod_four() {
            QuadraticSurd::new(1, 1, 2, radicand)
        } else {
            QuadraticSurd::sqrt(radicand)
        };
        theta.expect("square-free D > 1 gives an irrational value")
    }

    /// Expansion of θ, the palindrome test on its period and `ρ = 1 + k`.
    pub fn row(&self) -> CmRow {
        let theta = self.theta();
        let cf = PeriodicCF::expand(&theta);
        let palindrome_ok = palindrome_shape(&cf, self.one_mod_four());
        CmRow {
            d: self.d.clone(),
            f: self.f.clone(),
            picard: 1 + cf.k(),
            theta,
            cf,
            palindrome_ok,
        }
    }
}

/// Whether the expansion reads `[b1; a1, ..., a_{k-1}, last]` with the
/// `a`'s palindromic and `last = 2·b1` (or `2·b1 - 1`).
///
/// A purely periodic expansion is first rewritten with a one-entry
/// preperiod, e.g. `[;1]` as `[1;1]`.
pub fn palindrome_shape(cf: &PeriodicCF, one_mod_four: bool) -> bool {
    let (b1, period): (&Integer, Vec<Integer>) = match cf.preperiod() {
        [b1] => (b1, cf.period().to_vec()),
        [] => {
            let mut rotated = cf.period()[1..].to_vec();
            rotated.push(cf.period()[0].clone());
            (&cf.period()[0], rotated)
        }
        _ => return false,
    };
    let (last, body) = period.split_last().expect("non-empty period");
    let expected_last = if one_mod_four {
        Integer::from(b1 * 2u32) - 1u32
    } else {
        Integer::from(b1 * 2u32)
    };
    *last == expected_last && body.iter().eq(body.iter().rev())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_cases() {
        assert_eq!(
            CMSpec::new(2, 1).unwrap().theta(),
            QuadraticSurd::sqrt(2).unwrap()
        );
        assert_eq!(
            CMSpec::new(5, 1).unwrap().theta(),
            QuadraticSurd::new(1, 1, 2, 5).unwrap()
        );
        assert_eq!(
            CMSpec::new(163, 1).unwrap().theta(),
            QuadraticSurd::sqrt(163).unwrap()
        );
        assert_eq!(
            CMSpec::new(3, 2).unwrap().theta(),
            QuadraticSurd::new(0, 2, 1, 3).unwrap()
        );
    }

    #[test]
    fn rejects_bad_discriminants() {
        assert!(matches!(CMSpec::new(1, 1), Err(Error::InvalidD(_))));
        assert!(matches!(CMSpec::new(12, 1), Err(Error::InvalidD(_))));
        assert!(matches!(CMSpec::new(-7, 1), Err(Error::InvalidD(_))));
        assert!(matches!(CMSpec::new(7, 0), Err(Error::InvalidConductor(_))));
    }

    #[test]
    fn rows() {
        let row = CMSpec::new(7, 1).unwrap().row();
        assert_eq!(row.cf.to_string(), "[2;1,1,1,4]");
        assert!(row.palindrome_ok);
        assert_eq!(row.picard, 5);
        let row = CMSpec::new(43, 1).unwrap().row();
        assert_eq!(row.cf.to_string(), "[6;1,1,3,1,5,1,3,1,1,12]");
        assert_eq!(row.picard, 11);
        let row = CMSpec::new(11, 1).unwrap().row();
        assert_eq!(row.cf.to_string(), "[3;3,6]");
        assert!(row.palindrome_ok);
        assert_eq!(row.picard, 3);
    }

    #[test]
    fn golden_ratio_row() {
        let row = CMSpec::new(5, 1).unwrap().row();
        assert_eq!(row.cf.to_string(), "[;1]");
        assert!(row.palindrome_ok);
        assert_eq!(row.picard, 2);
        let row = CMSpec::new(13, 1).unwrap().row();
        assert_eq!(row.cf.to_string(), "[2;3]");
        assert!(row.palindrome_ok);
    }

    #[test]
    fn palindrome_rejections() {
        assert!(!palindrome_shape(&"[2;1,2,4]".parse().unwrap(), false));
        assert!(!palindrome_shape(&"[2;1,1,1,3]".parse().unwrap(), false));
        assert!(!palindrome_shape(&"[2,1;1,1,1,4]".parse().unwrap(), false));
        assert!(palindrome_shape(&"[2;1,1,1,3]".parse().unwrap(), true));
    }
}
