use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rug::ops::DivRounding;
use rug::{Integer, Rational};

use super::squarefree::square_split;
use crate::error::{Error, Result};

/// Sign of `u + v·√delta` for a positive non-square `delta`, decided by
/// squaring when the two parts disagree in sign.
pub(crate) fn sign_of(u: &Integer, v: &Integer, delta: &Integer) -> Ordering {
    let su = u.cmp0();
    let sv = v.cmp0();
    if sv == Ordering::Equal {
        return su;
    }
    if su == Ordering::Equal || su == sv {
        return sv;
    }
    let lhs = Integer::from(u.square_ref());
    let rhs = Integer::from(v.square_ref()) * delta;
    match lhs.cmp(&rhs) {
        Ordering::Greater => su,
        Ordering::Less => sv,
        Ordering::Equal => Ordering::Equal,
    }
}

/// An irrational real number `(a + b·√delta) / c`.
///
/// Values are always held in canonical form: `c > 0`, `b != 0`,
/// `gcd(a, b, c) = 1` and `delta` stripped of square factors, so two surds
/// are equal exactly when their fields are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: Integer,
    b: Integer,
    c: Integer,
    delta: Integer,
}

impl QuadraticSurd {
    /// Builds the canonical representative of `(a + b·√delta) / c`.
    pub fn new(
        a: impl Into<Integer>,
        b: impl Into<Integer>,
        c: impl Into<Integer>,
        delta: impl Into<Integer>,
    ) -> Result<Self> {
        let (a, b, c, delta) = (a.into(), b.into(), c.into(), delta.into());
        if c == 0 {
            return Err(Error::ZeroDenominator);
        }
        if delta <= 0 {
            return Err(Error::NonPositiveRadicand(delta));
        }
        if delta.is_perfect_square() {
            return Err(Error::SquareDiscriminant(delta));
        }
        if b == 0 {
            return Err(Error::RationalValue);
        }
        let (square, kernel) = square_split(&delta);
        Ok(Self::normalize(a, b * square, c, kernel))
    }

    /// `√n` for a positive non-square `n`.
    pub fn sqrt(n: impl Into<Integer>) -> Result<Self> {
        Self::new(0, 1, 1, n)
    }

    /// Reduces sign and common factor; `delta` must already be canonical.
    pub(crate) fn normalize(
        mut a: Integer,
        mut b: Integer,
        mut c: Integer,
        delta: Integer,
    ) -> Self {
        debug_assert!(c != 0 && b != 0);
        if c < 0 {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.clone().gcd(&b).gcd(&c);
        if g != 1 {
            a.div_exact_mut(&g);
            b.div_exact_mut(&g);
            c.div_exact_mut(&g);
        }
        QuadraticSurd { a, b, c, delta }
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

    pub fn delta(&self) -> &Integer {
        &self.delta
    }

    /// `⌊self⌋`, using the integer square root of `b²·delta`.
    pub fn floor(&self) -> Integer {
        let radicand = Integer::from(self.b.square_ref()) * &self.delta;
        let root = radicand.sqrt();
        if self.b > 0 {
            (root + &self.a).div_floor(&self.c)
        } else {
            // a - √(b²Δ) lies strictly inside (a - root - 1, a - root)
            ((&self.a - root) - 1u32).div_floor(&self.c)
        }
    }

    /// The Galois conjugate, with `√delta` replaced by `-√delta`.
    pub fn conjugate(&self) -> Self {
        QuadraticSurd {
            a: self.a.clone(),
            b: Integer::from(-&self.b),
            c: self.c.clone(),
            delta: self.delta.clone(),
        }
    }

    /// `self > 1` and `-1 < conjugate < 0`: the values whose expansion is
    /// purely periodic.
    pub fn is_reduced(&self) -> bool {
        let minus_b = Integer::from(-&self.b);
        sign_of(&Integer::from(&self.a - &self.c), &self.b, &self.delta) == Ordering::Greater
            && sign_of(&self.a, &minus_b, &self.delta) == Ordering::Less
            && sign_of(&Integer::from(&self.a + &self.c), &minus_b, &self.delta)
                == Ordering::Greater
    }

    /// Exact comparison against a rational number.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        let (n, d) = (r.numer(), r.denom());
        let u = Integer::from(&self.a * d) - Integer::from(n * &self.c);
        let v = Integer::from(&self.b * d);
        sign_of(&u, &v, &self.delta)
    }

    /// `self + r`; always irrational.
    pub fn add_rational(&self, r: &Rational) -> Self {
        let (n, d) = (r.numer(), r.denom());
        let a = Integer::from(&self.a * d) + Integer::from(n * &self.c);
        let b = Integer::from(&self.b * d);
        let c = Integer::from(&self.c * d);
        Self::normalize(a, b, c, self.delta.clone())
    }

    /// `self²` split as `(rational part, coefficient of √delta)`.
    pub fn square(&self) -> (Rational, Rational) {
        let c2 = Integer::from(self.c.square_ref());
        let rational =
            Integer::from(self.a.square_ref()) + Integer::from(self.b.square_ref()) * &self.delta;
        let irrational = Integer::from(&self.a * &self.b) * 2u32;
        (
            Rational::from((rational, c2.clone())),
            Rational::from((irrational, c2)),
        )
    }

    /// `(p·x + q) / (r·x + s)` for any integer coefficients.
    ///
    /// Fails with [`Error::PoleHit`] when the denominator vanishes and with
    /// [`Error::RationalValue`] when the map is singular and collapses the
    /// value onto a rational.
    pub fn linear_fractional(
        &self,
        p: &Integer,
        q: &Integer,
        r: &Integer,
        s: &Integer,
    ) -> Result<Self> {
        // numerator   (p·a + q·c) + p·b·√Δ
        // denominator (r·a + s·c) + r·b·√Δ   (common factor 1/c cancels)
        let n0 = Integer::from(p * &self.a) + Integer::from(q * &self.c);
        let n1 = Integer::from(p * &self.b);
        let d0 = Integer::from(r * &self.a) + Integer::from(s * &self.c);
        let d1 = Integer::from(r * &self.b);
        if d0 == 0 && d1 == 0 {
            return Err(Error::PoleHit);
        }
        let d1_delta = Integer::from(&d1 * &self.delta);
        let norm = Integer::from(d0.square_ref()) - Integer::from(&d1 * &d1_delta);
        let a = Integer::from(&n0 * &d0) - Integer::from(&n1 * &d1_delta);
        let b = Integer::from(&n1 * &d0) - Integer::from(&n0 * &d1);
        if b == 0 {
            return Err(Error::RationalValue);
        }
        Ok(Self::normalize(a, b, norm, self.delta.clone()))
    }

    /// Approximate value, for human-facing output only.
    pub fn to_f64(&self) -> f64 {
        let root = self.delta.to_f64().sqrt();
        (self.a.to_f64() + self.b.to_f64() * root) / self.c.to_f64()
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b < 0 { '-' } else { '+' };
        write!(
            f,
            "({}{}{}*sqrt({}))/{}",
            self.a,
            sign,
            Integer::from(self.b.abs_ref()),
            self.delta,
            self.c
        )
    }
}

impl FromStr for QuadraticSurd {
    type Err = Error;

    /// Accepts `(a+b*sqrt(delta))/c`, with `-` allowed in place of `+` and
    /// arbitrary whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|ch| !ch.is_whitespace()).collect();
        let bad = || Error::parse(format!("expected (a+b*sqrt(delta))/c, got {s:?}"));
        let body = compact.strip_prefix('(').ok_or_else(bad)?;
        let (inner, c) = body.rsplit_once(")/").ok_or_else(bad)?;
        let inner = inner.strip_suffix(')').ok_or_else(bad)?;
        let (ab, delta) = inner.split_once("*sqrt(").ok_or_else(bad)?;
        let bytes = ab.as_bytes();
        let split = (1..bytes.len())
            .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1].is_ascii_digit())
            .ok_or_else(bad)?;
        let a = &ab[..split];
        let b = if bytes[split] == b'+' {
            &ab[split + 1..]
        } else {
            &ab[split..]
        };
        QuadraticSurd::new(
            parse_integer(a)?,
            parse_integer(b)?,
            parse_integer(c)?,
            parse_integer(delta)?,
        )
    }
}

pub(crate) fn parse_integer(s: &str) -> Result<Integer> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    if t.is_empty()
        || !t
            .trim_start_matches('-')
            .bytes()
            .all(|ch| ch.is_ascii_digit())
    {
        return Err(Error::parse(format!("not an integer: {s:?}")));
    }
    Integer::from_str(t).map_err(|e| Error::parse(format!("not an integer: {s:?} ({e})")))
}
