use rug::{Integer, Rational};

use crate::cf::{attracting_fixed_point, QuadCoeffs};
use crate::error::{Error, Result};
use crate::exact::{rational_text, IntPolynomial, QuadraticSurd};

/// An elliptic surface in Legendre form `y² = x(x - 1)(x - α(t))` with
/// `α = alpha_num / alpha_den ∈ Q(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegendreSurface {
    alpha_num: IntPolynomial,
    alpha_den: IntPolynomial,
}

/// The rational matrix `((3α+1)/(1-α), 1; 4α/(1-α), 1)` of one fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceMatrix {
    entries: [[Rational; 2]; 2],
}

impl LegendreSurface {
    pub fn new(alpha_num: IntPolynomial, alpha_den: IntPolynomial) -> Result<Self> {
        if alpha_den.is_zero() {
            return Err(Error::OutOfRange(
                "alpha denominator is the zero polynomial".into(),
            ));
        }
        if alpha_num.is_zero() || alpha_num == alpha_den {
            return Err(Error::OutOfRange("alpha is identically 0 or 1".into()));
        }
        Ok(LegendreSurface {
            alpha_num,
            alpha_den,
        })
    }

    /// `y² = x(x - 1)(x - (t - 2)/(t + 2))`, whose fibers have `b = t`.
    pub fn example() -> Self {
        LegendreSurface::new(IntPolynomial::linear(-2), IntPolynomial::linear(2))
            .expect("fixed example")
    }

    pub fn alpha_num(&self) -> &IntPolynomial {
        &self.alpha_num
    }

    pub fn alpha_den(&self) -> &IntPolynomial {
        &self.alpha_den
    }

    pub fn alpha(&self, t: &Rational) -> Result<Rational> {
        let den = self.alpha_den.eval(t);
        if den == 0 {
            return Err(Error::PoleInAlpha(rational_text(t)));
        }
        Ok(self.alpha_num.eval(t) / den)
    }

    /// `b = 2(1 + α) / (1 - α)`, the solution of `(b - 2)/(b + 2) = α`.
    pub fn legendre_b(&self, t: &Rational) -> Result<Rational> {
        let alpha = self.alpha(t)?;
        if alpha == 0 || alpha == 1 {
            return Err(Error::SingularFiber(rational_text(t)));
        }
        Ok((2 * (Rational::from(1) + &alpha)) / (Rational::from(1) - alpha))
    }

    /// Fails only for `α(t) = 1`; `α(t) = 0` yields the parabolic matrix
    /// `((1,1),(0,1))`, see [`SurfaceMatrix::is_singular`].
    pub fn surface_matrix(&self, t: &Rational) -> Result<SurfaceMatrix> {
        let alpha = self.alpha(t)?;
        if alpha == 1 {
            return Err(Error::SingularFiber(rational_text(t)));
        }
        let one_minus = Rational::from(1) - &alpha;
        let top = (3 * alpha.clone() + 1u32) / &one_minus;
        let bottom = (4 * alpha) / &one_minus;
        Ok(SurfaceMatrix {
            entries: [[top, Rational::from(1)], [bottom, Rational::from(1)]],
        })
    }

    /// The fixed point θ of the fiber matrix, through the primitive fixed
    /// quadratic of the cleared matrix.
    pub fn surface_theta(&self, t: &Rational) -> Result<QuadraticSurd> {
        let matrix = self.surface_matrix(t)?;
        if matrix.is_singular() {
            return Err(Error::SingularFiber(rational_text(t)));
        }
        matrix.theta()
    }
}

impl SurfaceMatrix {
    pub fn entries(&self) -> &[[Rational; 2]; 2] {
        &self.entries
    }

    /// `α = 0` gives a lower-left entry of zero: no irrational fixed point.
    pub fn is_singular(&self) -> bool {
        self.entries[1][0] == 0
    }

    /// Entries multiplied by the least common denominator.
    pub fn cleared(&self) -> [[Integer; 2]; 2] {
        let lcd = self
            .entries
            .iter()
            .flatten()
            .fold(Integer::from(1), |acc, e| acc.lcm(e.denom()));
        self.entries.clone().map(|row| {
            row.map(|e| {
                let (num, den) = e.into_numer_denom();
                num * Integer::from(lcd.div_exact_ref(&den))
            })
        })
    }

    /// Primitive `(A, B, C)` of the fixed quadratic, from the cleared
    /// entries via `(E21, E22 - E11, -E12)`.
    pub fn fixed_quadratic(&self) -> Result<QuadCoeffs> {
        let [[p, q], [r, s]] = self.cleared();
        QuadCoeffs::from_entries(&p, &q, &r, &s)
            .map_err(|why| Error::DegenerateFixedPoint(why.to_string()))
    }

    /// The attracting fixed point. Scaling does not move fixed points, so
    /// the cleared matrix need not be unimodular.
    pub fn theta(&self) -> Result<QuadraticSurd> {
        self.fixed_quadratic()?;
        let [[p, q], [r, s]] = self.cleared();
        attracting_fixed_point(&p, &q, &r, &s)
            .map_err(|why| Error::DegenerateFixedPoint(why.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn int_matrix(rows: [[i64; 2]; 2]) -> [[Integer; 2]; 2] {
        rows.map(|row| row.map(Integer::from))
    }

    #[test]
    fn b_of_the_example_is_t() {
        let surface = LegendreSurface::example();
        assert_eq!(surface.legendre_b(&q(4)).unwrap(), 4);
        for t in 3..30 {
            assert_eq!(surface.legendre_b(&q(t)).unwrap(), t);
        }
        assert_eq!(
            surface.legendre_b(&Rational::from((7, 2))).unwrap(),
            Rational::from((7, 2))
        );
    }

    #[test]
    fn poles_and_singular_fibers() {
        let surface = LegendreSurface::example();
        assert!(matches!(
            surface.legendre_b(&q(-2)),
            Err(Error::PoleInAlpha(_))
        ));
        // α(2) = 0
        assert!(matches!(
            surface.legendre_b(&q(2)),
            Err(Error::SingularFiber(_))
        ));
        assert!(matches!(
            surface.surface_theta(&q(2)),
            Err(Error::SingularFiber(_))
        ));
        // α ≡ 1 at t where num = den never happens here; use a constant surface
        let one_at_zero =
            LegendreSurface::new(IntPolynomial::new([1, 1]), IntPolynomial::new([1, 2])).unwrap();
        assert!(matches!(
            one_at_zero.surface_matrix(&q(0)),
            Err(Error::SingularFiber(_))
        ));
    }

    #[test]
    fn matrices() {
        let surface = LegendreSurface::example();
        assert_eq!(
            surface.surface_matrix(&q(4)).unwrap().cleared(),
            int_matrix([[3, 1], [2, 1]])
        );
        let parabolic = surface.surface_matrix(&q(2)).unwrap();
        assert!(parabolic.is_singular());
        assert_eq!(parabolic.cleared(), int_matrix([[1, 1], [0, 1]]));
        for t in 3..40 {
            assert_eq!(
                surface.surface_matrix(&q(t)).unwrap().cleared(),
                int_matrix([[t - 1, 1], [t - 2, 1]])
            );
        }
    }

    #[test]
    fn clearing_denominators() {
        // α = 1/5: ((8/5)/(4/5), 1; (4/5)/(4/5), 1) = ((2,1),(1,1)); α = 1/2: ((5,1),(4,1))
        let constant = |n, d| {
            LegendreSurface::new(IntPolynomial::constant(n), IntPolynomial::constant(d)).unwrap()
        };
        assert_eq!(
            constant(1, 5).surface_matrix(&q(0)).unwrap().cleared(),
            int_matrix([[2, 1], [1, 1]])
        );
        // α = 1/7: (10/7)/(6/7) = 5/3, (4/7)/(6/7) = 2/3 -> cleared by 3
        assert_eq!(
            constant(1, 7).surface_matrix(&q(0)).unwrap().cleared(),
            int_matrix([[5, 3], [2, 3]])
        );
    }

    #[test]
    fn theta_values() {
        let surface = LegendreSurface::example();
        assert_eq!(
            surface.surface_theta(&q(4)).unwrap(),
            QuadraticSurd::new(1, 1, 2, 3).unwrap()
        );
        assert_eq!(
            surface.surface_theta(&q(3)).unwrap(),
            QuadraticSurd::new(1, 1, 2, 5).unwrap()
        );
        let quad = surface
            .surface_matrix(&q(4))
            .unwrap()
            .fixed_quadratic()
            .unwrap();
        assert_eq!(quad, QuadCoeffs::new(2, -2, -1).unwrap());
    }
}
