use std::fmt;
use std::ops::Mul;

use rug::Integer;

use crate::error::{Error, Result};
use crate::exact::QuadraticSurd;

/// Integer 2×2 matrix with determinant ±1, acting on reals by
/// `x ↦ (e11·x + e12) / (e21·x + e22)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    e11: Integer,
    e12: Integer,
    e21: Integer,
    e22: Integer,
}

impl UnimodularMatrix {
    pub fn new(
        e11: impl Into<Integer>,
        e12: impl Into<Integer>,
        e21: impl Into<Integer>,
        e22: impl Into<Integer>,
    ) -> Result<Self> {
        let m = UnimodularMatrix {
            e11: e11.into(),
            e12: e12.into(),
            e21: e21.into(),
            e22: e22.into(),
        };
        let det = m.det_integer();
        if det != 1 && det != -1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self::raw(1.into(), 0.into(), 0.into(), 1.into())
    }

    /// The letter `((c, 1), (1, 0))`, i.e. `x ↦ c + 1/x`.
    pub fn letter(c: &Integer) -> Self {
        Self::raw(c.clone(), 1.into(), 1.into(), 0.into())
    }

    /// Inverse letter `((0, 1), (1, -c))`.
    pub fn letter_inverse(c: &Integer) -> Self {
        Self::raw(0.into(), 1.into(), 1.into(), Integer::from(-c))
    }

    fn raw(e11: Integer, e12: Integer, e21: Integer, e22: Integer) -> Self {
        UnimodularMatrix { e11, e12, e21, e22 }
    }

    pub fn e11(&self) -> &Integer {
        &self.e11
    }

    pub fn e12(&self) -> &Integer {
        &self.e12
    }

    pub fn e21(&self) -> &Integer {
        &self.e21
    }

    pub fn e22(&self) -> &Integer {
        &self.e22
    }

    pub fn entries(&self) -> [&Integer; 4] {
        [&self.e11, &self.e12, &self.e21, &self.e22]
    }

    fn det_integer(&self) -> Integer {
        Integer::from(&self.e11 * &self.e22) - Integer::from(&self.e12 * &self.e21)
    }

    /// +1 or -1.
    pub fn det(&self) -> i32 {
        if self.det_integer() == 1 {
            1
        } else {
            -1
        }
    }

    pub fn trace(&self) -> Integer {
        Integer::from(&self.e11 + &self.e22)
    }

    pub fn inverse(&self) -> Self {
        if self.det() == 1 {
            Self::raw(
                self.e22.clone(),
                Integer::from(-&self.e12),
                Integer::from(-&self.e21),
                self.e11.clone(),
            )
        } else {
            Self::raw(
                Integer::from(-&self.e22),
                self.e12.clone(),
                self.e21.clone(),
                Integer::from(-&self.e11),
            )
        }
    }

    /// Möbius action on a surd; [`Error::PoleHit`] if `e21·x + e22 = 0`.
    pub fn apply(&self, x: &QuadraticSurd) -> Result<QuadraticSurd> {
        x.linear_fractional(&self.e11, &self.e12, &self.e21, &self.e22)
    }

    /// Right multiplication by the letter of `c`, in place.
    fn push_letter(&mut self, c: &Integer) {
        // (p q; r s)(c 1; 1 0) = (p·c + q, p; r·c + s, r)
        let p = self.e11.clone();
        self.e11 *= c;
        self.e11 += &self.e12;
        self.e12 = p;
        let r = self.e21.clone();
        self.e21 *= c;
        self.e21 += &self.e22;
        self.e22 = r;
    }

    /// Product of the letters of `entries`, left to right.
    ///
    /// Long words are multiplied as a balanced tree so that periods of
    /// 10^5 letters stay cheap.
    pub fn word(entries: &[Integer]) -> Self {
        const LEAF: usize = 32;
        if entries.len() <= LEAF {
            let mut m = Self::identity();
            for c in entries {
                m.push_letter(c);
            }
            return m;
        }
        let (left, right) = entries.split_at(entries.len() / 2);
        &Self::word(left) * &Self::word(right)
    }
}

impl Mul for &UnimodularMatrix {
    type Output = UnimodularMatrix;

    fn mul(self, rhs: &UnimodularMatrix) -> UnimodularMatrix {
        let dot = |a: &Integer, b: &Integer, c: &Integer, d: &Integer| {
            Integer::from(a * b) + Integer::from(c * d)
        };
        UnimodularMatrix::raw(
            dot(&self.e11, &rhs.e11, &self.e12, &rhs.e21),
            dot(&self.e11, &rhs.e12, &self.e12, &rhs.e22),
            dot(&self.e21, &rhs.e11, &self.e22, &rhs.e21),
            dot(&self.e21, &rhs.e12, &self.e22, &rhs.e22),
        )
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({},{}),({},{}))",
            self.e11, self.e12, self.e21, self.e22
        )
    }
}

/// Primitive coefficients `(A, B, C)` of `A·x² + B·x + C` with `A > 0` and a
/// positive non-square discriminant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadCoeffs {
    a: Integer,
    b: Integer,
    c: Integer,
}

impl QuadCoeffs {
    /// Validates and normalizes to `gcd = 1`, `A > 0`.
    pub fn new(
        a: impl Into<Integer>,
        b: impl Into<Integer>,
        c: impl Into<Integer>,
    ) -> Result<Self> {
        Self::primitive(a.into(), b.into(), c.into())
            .map_err(|why| Error::InvalidCoefficients(why.to_string()))
    }

    /// `(E21, E22 - E11, -E12)` of a matrix, made primitive; the fixed
    /// points of the matrix are the roots of the result.
    pub fn from_matrix(m: &UnimodularMatrix) -> Result<Self> {
        Self::from_entries(&m.e11, &m.e12, &m.e21, &m.e22)
            .map_err(|why| Error::DegenerateFixedPoint(why.to_string()))
    }

    /// Same as [`QuadCoeffs::from_matrix`] for an arbitrary integer matrix.
    /// Scaling the matrix does not change the result.
    pub(crate) fn from_entries(
        e11: &Integer,
        e12: &Integer,
        e21: &Integer,
        e22: &Integer,
    ) -> std::result::Result<Self, &'static str> {
        Self::primitive(e21.clone(), Integer::from(e22 - e11), Integer::from(-e12))
    }

    fn primitive(
        mut a: Integer,
        mut b: Integer,
        mut c: Integer,
    ) -> std::result::Result<Self, &'static str> {
        if a == 0 {
            return Err("leading coefficient vanishes");
        }
        if a < 0 {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.clone().gcd(&b).gcd(&c);
        a.div_exact_mut(&g);
        b.div_exact_mut(&g);
        c.div_exact_mut(&g);
        let q = QuadCoeffs { a, b, c };
        let disc = q.discriminant();
        if disc <= 0 {
            return Err("discriminant is not positive");
        }
        if disc.is_perfect_square() {
            return Err("discriminant is a perfect square");
        }
        Ok(q)
    }

    pub fn a(&self) -> &Integer {
        &self.a
    }

    pub fn b(&self) -> &Integer {
        &self.b
    }

    pub fn c(&self) -> &Integer {
        &self.c
    }

    /// `B² - 4AC`.
    pub fn discriminant(&self) -> Integer {
        Integer::from(self.b.square_ref()) - Integer::from(&self.a * &self.c) * 4u32
    }

    /// The two roots `(-B ± √disc) / 2A`, larger first.
    pub fn roots(&self) -> (QuadraticSurd, QuadraticSurd) {
        let two_a = Integer::from(&self.a * 2u32);
        let minus_b = Integer::from(-&self.b);
        let plus = QuadraticSurd::new(minus_b.clone(), 1, two_a.clone(), self.discriminant())
            .expect("validated discriminant");
        let minus = plus.conjugate();
        (plus, minus)
    }

    /// Exact test of `A·x² + B·x + C = 0`.
    pub fn vanishes_at(&self, x: &QuadraticSurd) -> bool {
        let (sq_rat, sq_irr) = x.square();
        let bx_rat = rug::Rational::from((Integer::from(&self.b * x.a()), x.c().clone()));
        let bx_irr = rug::Rational::from((Integer::from(&self.b * x.b()), x.c().clone()));
        let rational = sq_rat * &self.a + bx_rat + &self.c;
        let irrational = sq_irr * &self.a + bx_irr;
        rational == 0 && irrational == 0
    }
}

impl fmt::Display for QuadCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// The Pell identity `C·E21² - B·E21·E22 + A·E22² = (-1)^k·A`.
pub fn pell_check(qc: &QuadCoeffs, m: &UnimodularMatrix, k: usize) -> bool {
    let lhs = (&qc.c * Integer::from(m.e21.square_ref()))
        - Integer::from(&qc.b * &m.e21) * &m.e22
        + (&qc.a * Integer::from(m.e22.square_ref()));
    let rhs = if k.is_multiple_of(2) {
        qc.a.clone()
    } else {
        Integer::from(-&qc.a)
    };
    lhs == rhs
}

/// The attracting fixed point of `x ↦ (p·x + q) / (r·x + s)`, i.e. the
/// eigenvector of the eigenvalue of larger modulus. This is the limit of the
/// iterates, so for a period word it is the value of the periodic fraction.
pub(crate) fn attracting_fixed_point(
    p: &Integer,
    q: &Integer,
    r: &Integer,
    s: &Integer,
) -> std::result::Result<QuadraticSurd, &'static str> {
    if *r == 0 {
        return Err("lower-left entry vanishes");
    }
    let trace = Integer::from(p + s);
    if trace == 0 {
        return Err("zero trace, no attracting fixed point");
    }
    // the fixed quadratic (r, s - p, -q) is made primitive first: for long
    // words the entries are huge while the primitive discriminant is small
    let mut diff = Integer::from(p - s);
    let g = diff.clone().gcd(q).gcd(r);
    diff.div_exact_mut(&g);
    let q = Integer::from(q.div_exact_ref(&g));
    let r = Integer::from(r.div_exact_ref(&g));
    let disc = Integer::from(diff.square_ref()) + Integer::from(&q * &r) * 4u32;
    if disc <= 0 {
        return Err("fixed points are not real");
    }
    if disc.is_perfect_square() {
        return Err("fixed points are rational");
    }
    // r·x + s = (trace ± √disc)/2; take the sign of the trace
    let sign = if trace > 0 { 1 } else { -1 };
    QuadraticSurd::new(diff, sign, r * 2u32, disc).map_err(|_| "degenerate root")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<Integer> {
        xs.iter().map(|&x| Integer::from(x)).collect()
    }

    fn brute_product(ms: &[UnimodularMatrix]) -> UnimodularMatrix {
        ms.iter()
            .fold(UnimodularMatrix::identity(), |acc, m| &acc * m)
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(matches!(
            UnimodularMatrix::new(2, 0, 0, 1),
            Err(Error::NotUnimodular(_))
        ));
        assert_eq!(UnimodularMatrix::new(0, 1, 1, 0).unwrap().det(), -1);
    }

    #[test]
    fn tree_product_matches_fold() {
        let entries: Vec<Integer> = (0..300).map(|i| Integer::from((i * 7) % 11 - 3)).collect();
        let letters: Vec<_> = entries.iter().map(UnimodularMatrix::letter).collect();
        assert_eq!(UnimodularMatrix::word(&entries), brute_product(&letters));
    }

    #[test]
    fn letter_inverse_is_inverse() {
        for c in [-3, 0, 1, 5] {
            let c = Integer::from(c);
            let l = UnimodularMatrix::letter(&c);
            assert_eq!(
                &l * &UnimodularMatrix::letter_inverse(&c),
                UnimodularMatrix::identity()
            );
            assert_eq!(l.inverse(), UnimodularMatrix::letter_inverse(&c));
        }
        let m = UnimodularMatrix::new(2, 1, 1, 1).unwrap();
        assert_eq!(&m * &m.inverse(), UnimodularMatrix::identity());
    }

    #[test]
    fn coefficients_from_matrices() {
        let qc = |m: UnimodularMatrix| QuadCoeffs::from_matrix(&m).unwrap();
        assert_eq!(
            qc(UnimodularMatrix::new(1, 2, 1, 1).unwrap()),
            QuadCoeffs::new(1, 0, -2).unwrap()
        );
        assert_eq!(
            qc(UnimodularMatrix::new(1, 1, 1, 0).unwrap()),
            QuadCoeffs::new(1, -1, -1).unwrap()
        );
        assert_eq!(
            qc(UnimodularMatrix::new(2, 1, 1, 1).unwrap()),
            QuadCoeffs::new(1, -1, -1).unwrap()
        );
        assert!(matches!(
            QuadCoeffs::from_matrix(&UnimodularMatrix::new(1, 1, 0, 1).unwrap()),
            Err(Error::DegenerateFixedPoint(_))
        ));
        assert!(matches!(
            QuadCoeffs::from_matrix(&UnimodularMatrix::new(0, -1, 1, 0).unwrap()),
            Err(Error::DegenerateFixedPoint(_))
        ));
    }

    #[test]
    fn coefficients_are_normalized() {
        let q = QuadCoeffs::new(-2, 0, 4).unwrap();
        assert_eq!(
            (q.a().to_i64(), q.b().to_i64(), q.c().to_i64()),
            (Some(1), Some(0), Some(-2))
        );
        assert!(QuadCoeffs::new(1, 0, -4).is_err());
        assert!(QuadCoeffs::new(1, 0, 1).is_err());
    }

    #[test]
    fn pell_identity_examples() {
        let sqrt2 = QuadCoeffs::new(1, 0, -2).unwrap();
        let golden = QuadCoeffs::new(1, -1, -1).unwrap();
        assert!(pell_check(
            &sqrt2,
            &UnimodularMatrix::new(1, 2, 1, 1).unwrap(),
            1
        ));
        assert!(pell_check(
            &golden,
            &UnimodularMatrix::new(1, 1, 1, 0).unwrap(),
            1
        ));
        assert!(!pell_check(&sqrt2, &UnimodularMatrix::identity(), 1));
    }

    #[test]
    fn roots_and_vanishing() {
        let q = QuadCoeffs::new(2, -2, -1).unwrap();
        let (hi, lo) = q.roots();
        assert_eq!(hi, QuadraticSurd::new(1, 1, 2, 3).unwrap());
        assert_eq!(lo, QuadraticSurd::new(1, -1, 2, 3).unwrap());
        assert!(q.vanishes_at(&hi) && q.vanishes_at(&lo));
        assert!(!q.vanishes_at(&QuadraticSurd::sqrt(3).unwrap()));
    }

    #[test]
    fn attracting_point_of_period_words() {
        let w = UnimodularMatrix::word(&ints(&[2]));
        let [p, q, r, s] = w.entries();
        assert_eq!(
            attracting_fixed_point(p, q, r, s).unwrap(),
            QuadraticSurd::new(1, 1, 1, 2).unwrap()
        );
        let w = UnimodularMatrix::word(&ints(&[-2]));
        let [p, q, r, s] = w.entries();
        // x = -2 + 1/x converges to -1 - √2
        assert_eq!(
            attracting_fixed_point(p, q, r, s).unwrap(),
            QuadraticSurd::new(-1, -1, 1, 2).unwrap()
        );
        let z = Integer::from(0);
        let one = Integer::from(1);
        assert!(attracting_fixed_point(&z, &one, &one, &z).is_err());
    }
}
