use std::fmt;
use std::str::FromStr;

use rug::ops::DivRounding;
use rug::{Integer, Rational};

use super::matrix::{attracting_fixed_point, UnimodularMatrix};
use crate::error::{Error, Result};
use crate::exact::{parse_integer, QuadraticSurd};

/// An eventually periodic simple continued fraction
/// `[b1, ..., bN; a1, ..., ak]` with the period `a1..ak` repeating forever.
///
/// Any integer entries are representable, so the type also carries the
/// non-canonical tuples that come out of variety scans and polynomial
/// sections. [`PeriodicCF::is_canonical`] tells the two apart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicCF {
    preperiod: Vec<Integer>,
    period: Vec<Integer>,
}

impl PeriodicCF {
    pub fn new(
        preperiod: impl IntoIterator<Item = impl Into<Integer>>,
        period: impl IntoIterator<Item = impl Into<Integer>>,
    ) -> Result<Self> {
        let preperiod: Vec<Integer> = preperiod.into_iter().map(Into::into).collect();
        let period: Vec<Integer> = period.into_iter().map(Into::into).collect();
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(PeriodicCF { preperiod, period })
    }

    pub fn preperiod(&self) -> &[Integer] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Integer] {
        &self.period
    }

    /// Preperiod length.
    pub fn n(&self) -> usize {
        self.preperiod.len()
    }

    /// Period length.
    pub fn k(&self) -> usize {
        self.period.len()
    }

    /// All entries in order, period repeated forever.
    pub fn entries(&self) -> impl Iterator<Item = &Integer> + '_ {
        self.preperiod.iter().chain(self.period.iter().cycle())
    }

    /// Entries after the first are positive, the period is minimal and the
    /// preperiod cannot be shortened.
    pub fn is_canonical(&self) -> bool {
        let positive = self
            .entries()
            .take(self.n() + self.k())
            .skip(1)
            .all(|e| *e >= 1)
            && (self.n() > 0 || self.period[0] >= 1);
        let shortenable = self
            .preperiod
            .last()
            .is_some_and(|b| b == self.period.last().unwrap());
        positive && !shortenable && minimal_period(&self.period) == self.k()
    }

    /// Canonical expansion of a surd.
    ///
    /// Works on states `(P + √D) / Q` with `Q | D - P²`. A tail is purely
    /// periodic exactly when its state is reduced, so the preperiod ends at
    /// the first reduced state and the period closes when that state comes
    /// back; both are minimal.
    pub fn expand(theta: &QuadraticSurd) -> Self {
        let (mut p, mut q, d) = expansion_state(theta);
        let root = d.clone().sqrt();
        let mut preperiod = Vec::new();
        while !state_is_reduced(&p, &q, &root) {
            preperiod.push(expansion_step(&mut p, &mut q, &d, &root));
        }
        let period = match (p.to_i128(), q.to_i128(), d.to_i128(), root.to_i128()) {
            (Some(p), Some(q), Some(d), Some(root)) if d < (1i128 << 120) => {
                cycle_small(p, q, d, root)
            }
            _ => {
                let start = (p.clone(), q.clone());
                let mut period = Vec::new();
                loop {
                    period.push(expansion_step(&mut p, &mut q, &d, &root));
                    if (&p, &q) == (&start.0, &start.1) {
                        break period;
                    }
                }
            }
        };
        PeriodicCF { preperiod, period }
    }

    /// The value, as a canonical surd.
    ///
    /// The purely periodic tail is the attracting fixed point of its period
    /// word (for positive entries this is the reduced root of the fixed
    /// quadratic); the preperiod letters are then applied one by one.
    pub fn evaluate(&self) -> Result<QuadraticSurd> {
        let word = UnimodularMatrix::word(&self.period);
        let [p, q, r, s] = word.entries();
        let mut x = attracting_fixed_point(p, q, r, s)
            .map_err(|why| Error::DegenerateWord(format!("{self}: {why}")))?;
        let (one, zero) = (Integer::from(1), Integer::from(0));
        for b in self.preperiod.iter().rev() {
            x = x
                .linear_fractional(b, &one, &one, &zero)
                .map_err(|e| Error::DegenerateWord(format!("{self}: {e}")))?;
        }
        Ok(x)
    }

    /// Moves `m` copies of the period into the preperiod.
    pub fn unroll(&self, m: usize) -> Self {
        let mut preperiod = self.preperiod.clone();
        for _ in 0..m {
            preperiod.extend(self.period.iter().cloned());
        }
        PeriodicCF {
            preperiod,
            period: self.period.clone(),
        }
    }

    /// The first `n` convergents `p_i / q_i`.
    pub fn convergents(&self, n: usize) -> Result<Vec<Rational>> {
        let (mut p_prev, mut p) = (Integer::from(0), Integer::from(1));
        let (mut q_prev, mut q) = (Integer::from(1), Integer::from(0));
        let mut out = Vec::with_capacity(n);
        for c in self.entries().take(n) {
            let p_next = Integer::from(c * &p) + &p_prev;
            let q_next = Integer::from(c * &q) + &q_prev;
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
            if q == 0 {
                return Err(Error::PoleHit);
            }
            out.push(Rational::from((p.clone(), q.clone())));
        }
        Ok(out)
    }

    /// `B(b1)···B(bN) · A(a1)···A(ak) · B(bN)⁻¹···B(b1)⁻¹`, which fixes the
    /// value and has determinant `(-1)^k`.
    pub fn matrix_word(&self) -> UnimodularMatrix {
        let head = UnimodularMatrix::word(&self.preperiod);
        let period = UnimodularMatrix::word(&self.period);
        &(&head * &period) * &head.inverse()
    }

    /// Rendering in the `[b1,\overline{a1,...}]` style of printed tables.
    pub fn overline_text(&self) -> String {
        let join = |xs: &[Integer]| {
            xs.iter()
                .map(Integer::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        if self.preperiod.is_empty() {
            format!("[\\overline{{{}}}]", join(&self.period))
        } else {
            format!(
                "[{},\\overline{{{}}}]",
                join(&self.preperiod),
                join(&self.period)
            )
        }
    }
}

/// Smallest `d` dividing `k` with the period `d`-cyclic.
pub(crate) fn minimal_period(period: &[Integer]) -> usize {
    let k = period.len();
    (1..=k)
        .find(|&d| k.is_multiple_of(d) && (d..k).all(|i| period[i] == period[i - d]))
        .unwrap_or(k)
}

/// `(P + √D) / Q > 1` with conjugate in `(-1, 0)`, for `root = ⌊√D⌋`.
fn state_is_reduced(p: &Integer, q: &Integer, root: &Integer) -> bool {
    *q > 0 && p <= root && Integer::from(root - p) < *q && *q <= Integer::from(p + root)
}

/// Emits `⌊(P + √D) / Q⌋` and advances the state.
fn expansion_step(p: &mut Integer, q: &mut Integer, d: &Integer, root: &Integer) -> Integer {
    let m = if *q > 0 {
        Integer::from(&*p + root).div_floor(&*q)
    } else {
        (Integer::from(&*p + root) + 1u32).div_floor(&*q)
    };
    *p = Integer::from(&m * &*q) - &*p;
    let next_q = (d - Integer::from(p.square_ref())).div_exact(&*q);
    *q = next_q;
    m
}

/// The period from a reduced state, in machine integers. Reduced states
/// keep `0 < P <= √D` and `0 < Q < 2√D`, so nothing here overflows.
fn cycle_small(p0: i128, q0: i128, d: i128, root: i128) -> Vec<Integer> {
    let (mut p, mut q) = (p0, q0);
    let mut period = Vec::new();
    loop {
        let m = (p + root) / q;
        p = m * q - p;
        q = (d - p * p) / q;
        period.push(Integer::from(m));
        if p == p0 && q == q0 {
            return period;
        }
    }
}

/// `(P, Q, D)` with `theta = (P + √D) / Q` and `Q | D - P²`.
fn expansion_state(theta: &QuadraticSurd) -> (Integer, Integer, Integer) {
    let d = Integer::from(theta.b().square_ref()) * theta.delta();
    let (mut p, mut q) = if *theta.b() > 0 {
        (theta.a().clone(), theta.c().clone())
    } else {
        (Integer::from(-theta.a()), Integer::from(-theta.c()))
    };
    let mut d = d;
    if !(&d - Integer::from(p.square_ref())).is_divisible(&q) {
        let scale = Integer::from(q.abs_ref());
        p *= &scale;
        d *= Integer::from(q.square_ref());
        q *= &scale;
    }
    (p, q, d)
}

/// GL₂(Z)-equivalence: the canonical expansions end in the same period up
/// to rotation.
pub fn equivalent(x: &QuadraticSurd, y: &QuadraticSurd) -> bool {
    let (cx, cy) = (PeriodicCF::expand(x), PeriodicCF::expand(y));
    rotation_equal(cx.period(), cy.period())
}

pub(crate) fn rotation_equal(a: &[Integer], b: &[Integer]) -> bool {
    a.len() == b.len()
        && (0..a.len()).any(|shift| (0..a.len()).all(|i| a[(i + shift) % a.len()] == b[i]))
}

impl fmt::Display for PeriodicCF {
    /// `[b1,...,bN;a1,...,ak]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[Integer]| {
            xs.iter()
                .map(Integer::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[{};{}]", join(&self.preperiod), join(&self.period))
    }
}

impl FromStr for PeriodicCF {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|ch| !ch.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| Error::parse(format!("expected [b1,...;a1,...], got {s:?}")))?;
        let (pre, per) = inner
            .split_once(';')
            .ok_or_else(|| Error::parse(format!("missing ';' in {s:?}")))?;
        let list = |part: &str| -> Result<Vec<Integer>> {
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',').map(parse_integer).collect()
        };
        let period = list(per)?;
        if period.is_empty() {
            return Err(Error::parse(format!("empty period in {s:?}")));
        }
        PeriodicCF::new(list(pre)?, period)
    }
}
