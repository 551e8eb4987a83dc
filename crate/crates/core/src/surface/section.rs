use rug::{Integer, Rational};

use super::legendre::LegendreSurface;
use crate::cf::{equivalent, PeriodicCF};
use crate::error::{Error, Result};
use crate::exact::{rational_text, IntPolynomial, QuadraticSurd};

/// A continued fraction whose entries are integer polynomials in `t`,
/// `[b1(t), ..., bN(t); a1(t), ..., ak(t)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFSection {
    preperiod: Vec<IntPolynomial>,
    period: Vec<IntPolynomial>,
}

impl CFSection {
    pub fn new(preperiod: Vec<IntPolynomial>, period: Vec<IntPolynomial>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(CFSection { preperiod, period })
    }

    /// `[t - 1; 1, t - 2]`, the section attached to
    /// [`LegendreSurface::example`].
    pub fn example() -> Self {
        CFSection::new(
            vec![IntPolynomial::linear(-1)],
            vec![IntPolynomial::constant(1), IntPolynomial::linear(-2)],
        )
        .expect("fixed example")
    }

    pub fn preperiod(&self) -> &[IntPolynomial] {
        &self.preperiod
    }

    pub fn period(&self) -> &[IntPolynomial] {
        &self.period
    }

    pub fn n(&self) -> usize {
        self.preperiod.len()
    }

    pub fn k(&self) -> usize {
        self.period.len()
    }

    /// The section with its preperiod dropped.
    pub fn tail(&self) -> CFSection {
        CFSection {
            preperiod: Vec::new(),
            period: self.period.clone(),
        }
    }

    /// Evaluates every entry at `t`; entries must be integers and all but
    /// the very first at least 1.
    pub fn eval(&self, t: &Rational) -> Result<PeriodicCF> {
        let mut values = Vec::with_capacity(self.n() + self.k());
        for (index, poly) in self.preperiod.iter().chain(&self.period).enumerate() {
            let value = poly.eval(t);
            if *value.denom() != 1 {
                return Err(Error::NonIntegerEntry {
                    index,
                    t: rational_text(t),
                });
            }
            let value = value.into_numer_denom().0;
            if index > 0 && value < 1 {
                return Err(Error::NonCanonicalEntry {
                    index,
                    value,
                    t: rational_text(t),
                });
            }
            values.push(value);
        }
        let period = values.split_off(self.n());
        PeriodicCF::new(values, period)
    }

    /// Picard number `N + k`.
    pub fn picard(&self) -> usize {
        self.n() + self.k()
    }
}

/// One line of [`section_verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyRow {
    pub t: Rational,
    /// Value of the section at `t`.
    pub section_theta: Option<QuadraticSurd>,
    /// Value of the purely periodic part of the section at `t`.
    pub tail_theta: Option<QuadraticSurd>,
    /// Fixed point of the surface matrix at `t`.
    pub surface_theta: Option<QuadraticSurd>,
    pub literal_equal: bool,
    pub tail_equal: bool,
    pub equivalent: bool,
    /// Why a value is missing, if one is.
    pub error: Option<String>,
}

impl VerifyRow {
    fn failed(t: &Rational, error: Error) -> Self {
        VerifyRow {
            t: t.clone(),
            section_theta: None,
            tail_theta: None,
            surface_theta: None,
            literal_equal: false,
            tail_equal: false,
            equivalent: false,
            error: Some(error.to_string()),
        }
    }
}

/// Compares the section against the surface fiber by fiber.
///
/// Equality is reported both literally and up to GL₂(Z); the second is the
/// one expected to hold, since the fixed point of the surface matrix is the
/// purely periodic tail while the section adds a preperiod.
pub fn section_verify(
    section: &CFSection,
    surface: &LegendreSurface,
    t_range: &[Rational],
) -> Vec<VerifyRow> {
    t_range
        .iter()
        .map(|t| {
            let values = (|| -> Result<_> {
                let section_theta = section.eval(t)?.evaluate()?;
                let tail_theta = section.tail().eval(t)?.evaluate()?;
                let surface_theta = surface.surface_theta(t)?;
                Ok((section_theta, tail_theta, surface_theta))
            })();
            match values {
                Ok((section_theta, tail_theta, surface_theta)) => VerifyRow {
                    t: t.clone(),
                    literal_equal: section_theta == surface_theta,
                    tail_equal: tail_theta == surface_theta,
                    equivalent: equivalent(&section_theta, &surface_theta),
                    section_theta: Some(section_theta),
                    tail_theta: Some(tail_theta),
                    surface_theta: Some(surface_theta),
                    error: None,
                },
                Err(e) => VerifyRow::failed(t, e),
            }
        })
        .collect()
}

/// `ρ = r + 2 + Σ (m_v - 1)`.
pub fn tate_shioda_check(rho: u64, rank: u64, components: &[u64]) -> bool {
    let vertical: i128 = components.iter().map(|&m| i128::from(m) - 1).sum();
    i128::from(rho) == i128::from(rank) + 2 + vertical
}

/// `[p; 2p]`, checked against `√(1 + p²)`.
pub fn minimal_model_theta(p: &Integer) -> Result<QuadraticSurd> {
    if *p < 1 {
        return Err(Error::OutOfRange(format!("p must be at least 1, got {p}")));
    }
    let cf = PeriodicCF::new([p.clone()], [Integer::from(p * 2u32)])?;
    let theta = cf.evaluate()?;
    let expected = QuadraticSurd::sqrt(Integer::from(p.square_ref()) + 1u32)?;
    if theta != expected {
        return Err(Error::IdentityViolation(p.clone()));
    }
    Ok(theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn evaluates_the_example_section() {
        let section = CFSection::example();
        assert_eq!(section.eval(&q(4)).unwrap(), "[3;1,2]".parse().unwrap());
        assert_eq!(section.eval(&q(10)).unwrap(), "[9;1,8]".parse().unwrap());
        assert!(matches!(
            section.eval(&q(2)),
            Err(Error::NonCanonicalEntry { index: 2, .. })
        ));
        assert!(matches!(
            section.eval(&Rational::from((7, 2))),
            Err(Error::NonIntegerEntry { index: 0, .. })
        ));
    }

    #[test]
    fn verify_report() {
        let ts: Vec<Rational> = (3..=12).map(q).collect();
        let rows = section_verify(&CFSection::example(), &LegendreSurface::example(), &ts);
        assert_eq!(rows.len(), 10);
        assert!(rows
            .iter()
            .all(|r| r.equivalent && r.tail_equal && !r.literal_equal));

        let wrong = CFSection::new(
            vec![IntPolynomial::linear(0)],
            vec![IntPolynomial::constant(1), IntPolynomial::linear(-2)],
        )
        .unwrap();
        let rows = section_verify(&wrong, &LegendreSurface::example(), &[q(4)]);
        assert!(
            rows[0].equivalent,
            "a different first entry stays in the same class"
        );
        let wrong = CFSection::new(
            vec![IntPolynomial::linear(0)],
            vec![IntPolynomial::constant(2), IntPolynomial::linear(-2)],
        )
        .unwrap();
        let rows = section_verify(&wrong, &LegendreSurface::example(), &[q(4)]);
        assert!(!rows[0].equivalent && !rows[0].literal_equal);

        assert!(section_verify(&CFSection::example(), &LegendreSurface::example(), &[]).is_empty());
    }

    #[test]
    fn verify_reports_failures_as_rows() {
        let rows = section_verify(&CFSection::example(), &LegendreSurface::example(), &[q(2)]);
        assert!(rows[0].error.is_some());
        assert!(!rows[0].equivalent);
    }

    #[test]
    fn picard_numbers() {
        assert_eq!(CFSection::example().picard(), 3);
        let one_one = CFSection::new(
            vec![IntPolynomial::linear(0)],
            vec![IntPolynomial::new([0, 2])],
        )
        .unwrap();
        assert_eq!(one_one.picard(), 2);
        assert_eq!(one_one.tail().picard(), 1);
    }

    #[test]
    fn tate_shioda() {
        assert!(tate_shioda_check(3, 1, &[]));
        assert!(tate_shioda_check(2, 0, &[]));
        assert!(tate_shioda_check(5, 1, &[2, 2]));
        assert!(!tate_shioda_check(4, 1, &[2, 2]));
        assert!(tate_shioda_check(4, 0, &[1, 3, 1]));
    }

    #[test]
    fn minimal_models() {
        assert_eq!(
            minimal_model_theta(&Integer::from(1)).unwrap(),
            QuadraticSurd::sqrt(2).unwrap()
        );
        assert_eq!(
            minimal_model_theta(&Integer::from(2)).unwrap(),
            QuadraticSurd::sqrt(5).unwrap()
        );
        assert_eq!(
            minimal_model_theta(&Integer::from(7)).unwrap(),
            QuadraticSurd::new(0, 5, 1, 2).unwrap()
        );
        assert!(minimal_model_theta(&Integer::from(0)).is_err());
    }
}
