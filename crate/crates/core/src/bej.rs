//! Integer points of the variety of (pre)period tuples whose matrix word
//! fixes a given quadratic, its Fermat–Pell base conic, and the projection
//! onto that conic.

use std::collections::BTreeMap;

use rayon::prelude::*;
use rug::Integer;

use crate::cf::{QuadCoeffs, UnimodularMatrix};
use crate::error::{Error, Result};

/// The conic `C·u² - B·u·v + A·v² = (-1)^k·A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellConic {
    coeffs: QuadCoeffs,
    k_odd: bool,
}

impl PellConic {
    pub fn new(coeffs: QuadCoeffs, k: usize) -> Self {
        PellConic {
            coeffs,
            k_odd: k % 2 == 1,
        }
    }

    pub fn coeffs(&self) -> &QuadCoeffs {
        &self.coeffs
    }

    pub fn k_odd(&self) -> bool {
        self.k_odd
    }

    pub fn contains(&self, u: &Integer, v: &Integer) -> bool {
        let (a, b, c) = (self.coeffs.a(), self.coeffs.b(), self.coeffs.c());
        let lhs = (c * Integer::from(u.square_ref())) - Integer::from(b * u) * v
            + (a * Integer::from(v.square_ref()));
        let rhs = if self.k_odd {
            Integer::from(-a)
        } else {
            a.clone()
        };
        lhs == rhs
    }
}

/// The variety `V_{N,k}` bound to a fixed target quadratic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BejSpec {
    pub coeffs: QuadCoeffs,
    pub n: usize,
    pub k: usize,
}

/// A scanned tuple `(b1..bN, a1..ak)` together with its projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BejPoint {
    pub entries: Vec<Integer>,
    pub member: bool,
    pub projection: (Integer, Integer),
}

impl BejSpec {
    pub fn new(coeffs: QuadCoeffs, n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfRange(
                "period length k must be at least 1".into(),
            ));
        }
        Ok(BejSpec { coeffs, n, k })
    }

    pub fn conic(&self) -> PellConic {
        PellConic::new(self.coeffs.clone(), self.k)
    }

    fn word(&self, entries: &[Integer]) -> Result<UnimodularMatrix> {
        if entries.len() != self.n + self.k {
            return Err(Error::LengthMismatch {
                expected: self.n + self.k,
                found: entries.len(),
            });
        }
        let (pre, period) = entries.split_at(self.n);
        let head = UnimodularMatrix::word(pre);
        Ok(&(&head * &UnimodularMatrix::word(period)) * &head.inverse())
    }

    /// The three minor equations
    /// `A(E22 - E11) = B·E21`, `-A·E12 = C·E21`, `-B·E12 = C(E22 - E11)`.
    ///
    /// Words with `E21 = 0` fix no quadratic irrational and are never members.
    pub fn membership(&self, entries: &[Integer]) -> Result<bool> {
        let word = self.word(entries)?;
        Ok(self.word_is_member(&word))
    }

    fn word_is_member(&self, word: &UnimodularMatrix) -> bool {
        if *word.e21() == 0 {
            return false;
        }
        let (a, b, c) = (self.coeffs.a(), self.coeffs.b(), self.coeffs.c());
        let e21 = word.e21();
        let diag = Integer::from(word.e22() - word.e11());
        let minus_e12 = Integer::from(-word.e12());
        Integer::from(a * &diag) == Integer::from(b * e21)
            && Integer::from(a * &minus_e12) == Integer::from(c * e21)
            && Integer::from(b * &minus_e12) == Integer::from(c * &diag)
    }

    /// `(E21, E22)` of the matrix word.
    pub fn project(&self, entries: &[Integer]) -> Result<(Integer, Integer)> {
        let word = self.word(entries)?;
        Ok((word.e21().clone(), word.e22().clone()))
    }

    fn point(&self, entries: Vec<Integer>) -> BejPoint {
        let word = self
            .word(&entries)
            .expect("scan tuples have the spec length");
        BejPoint {
            member: self.word_is_member(&word),
            projection: (word.e21().clone(), word.e22().clone()),
            entries,
        }
    }

    /// Every member tuple with all entries in `[-bound, bound]`, in
    /// lexicographic order. The first coordinate is split across rayon
    /// workers; collecting preserves order.
    pub fn enumerate(&self, bound: u32) -> Result<Vec<BejPoint>> {
        if bound == 0 {
            return Err(Error::InvalidBound);
        }
        let bound = i64::from(bound);
        let len = self.n + self.k;
        let chunks: Vec<Vec<BejPoint>> = (-bound..=bound)
            .into_par_iter()
            .map(|first| {
                let mut found = Vec::new();
                let mut tuple = vec![-bound; len];
                tuple[0] = first;
                loop {
                    let entries: Vec<Integer> = tuple.iter().map(|&x| Integer::from(x)).collect();
                    let point = self.point(entries);
                    if point.member {
                        found.push(point);
                    }
                    // odometer over positions 1..len
                    let mut pos = len;
                    loop {
                        pos -= 1;
                        if pos == 0 {
                            return found;
                        }
                        if tuple[pos] < bound {
                            tuple[pos] += 1;
                            break;
                        }
                        tuple[pos] = -bound;
                    }
                }
            })
            .collect();
        Ok(chunks.into_iter().flatten().collect())
    }
}

/// Number of member points over each point `(u, v)` of the conic.
pub fn fiber_census(points: &[BejPoint]) -> Result<BTreeMap<(Integer, Integer), usize>> {
    let mut census = BTreeMap::new();
    for point in points {
        if !point.member {
            let entries: Vec<String> = point.entries.iter().map(Integer::to_string).collect();
            return Err(Error::NonMemberPresent(format!("({})", entries.join(","))));
        }
        *census.entry(point.projection.clone()).or_insert(0) += 1;
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<Integer> {
        xs.iter().map(|&x| Integer::from(x)).collect()
    }

    fn sqrt2_spec(n: usize, k: usize) -> BejSpec {
        BejSpec::new(QuadCoeffs::new(1, 0, -2).unwrap(), n, k).unwrap()
    }

    #[test]
    fn conic_examples() {
        let sqrt2 = PellConic::new(QuadCoeffs::new(1, 0, -2).unwrap(), 1);
        assert!(sqrt2.contains(&Integer::from(1), &Integer::from(1)));
        assert!(!sqrt2.contains(&Integer::from(0), &Integer::from(1)));
        let golden = PellConic::new(QuadCoeffs::new(1, -1, -1).unwrap(), 1);
        assert!(golden.contains(&Integer::from(1), &Integer::from(0)));
    }

    #[test]
    fn membership_examples() {
        assert!(sqrt2_spec(1, 1).membership(&ints(&[1, 2])).unwrap());
        assert!(!sqrt2_spec(1, 1).membership(&ints(&[2, -2])).unwrap());
        assert!(sqrt2_spec(2, 1).membership(&ints(&[1, 2, 2])).unwrap());
        assert_eq!(
            sqrt2_spec(1, 1).membership(&ints(&[1])),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn parabolic_words_are_not_members() {
        // [;0,0] has the identity as its word
        let spec = sqrt2_spec(0, 2);
        assert!(!spec.membership(&ints(&[0, 0])).unwrap());
    }

    #[test]
    fn projection_examples() {
        assert_eq!(
            sqrt2_spec(1, 1).project(&ints(&[1, 2])).unwrap(),
            (Integer::from(1), Integer::from(1))
        );
        let golden = BejSpec::new(QuadCoeffs::new(1, -1, -1).unwrap(), 0, 1).unwrap();
        assert_eq!(
            golden.project(&ints(&[1])).unwrap(),
            (Integer::from(1), Integer::from(0))
        );
    }

    #[test]
    fn small_scan() {
        let points = sqrt2_spec(1, 1).enumerate(2).unwrap();
        assert!(points
            .iter()
            .any(|p| p.entries == ints(&[1, 2])
                && p.projection == (Integer::from(1), Integer::from(1))));
        assert!(!points.iter().any(|p| p.entries == ints(&[2, -2])));
        assert!(points.windows(2).all(|w| w[0].entries < w[1].entries));
        let census = fiber_census(&points).unwrap();
        assert!(census[&(Integer::from(1), Integer::from(1))] >= 1);
        assert_eq!(census.values().sum::<usize>(), points.len());
    }

    #[test]
    fn scan_bounds() {
        assert_eq!(sqrt2_spec(1, 1).enumerate(0), Err(Error::InvalidBound));
        let points = sqrt2_spec(1, 1).enumerate(1).unwrap();
        assert!(points
            .iter()
            .flat_map(|p| &p.entries)
            .all(|e| e.clone().abs() <= 1));
    }

    #[test]
    fn census_rejects_non_members() {
        assert!(fiber_census(&[]).unwrap().is_empty());
        let stray = BejPoint {
            entries: ints(&[2, -2]),
            member: false,
            projection: (Integer::from(1), Integer::from(-4)),
        };
        assert!(matches!(
            fiber_census(&[stray]),
            Err(Error::NonMemberPresent(_))
        ));
    }
}
