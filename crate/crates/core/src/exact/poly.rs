use std::fmt;
use std::str::FromStr;

use rug::{Integer, Rational};

use super::surd::parse_integer;
use crate::error::{Error, Result};

/// Integer polynomial in `t`, constant term first, with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<Integer>,
}

impl IntPolynomial {
    pub fn new(coeffs: impl IntoIterator<Item = impl Into<Integer>>) -> Self {
        let mut coeffs: Vec<Integer> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    /// `t + shift`.
    pub fn linear(shift: i64) -> Self {
        IntPolynomial::new([shift, 1])
    }

    pub fn constant(c: impl Into<Integer>) -> Self {
        IntPolynomial::new([c.into()])
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= t;
            acc += c;
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    /// Comma-separated coefficients, constant first; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(parse_integer)
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

/// Renders a rational as `num/den`, also when the denominator is 1.
pub fn rational_text(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `n` or `n/d`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    match s.split_once('/') {
        None => Ok(Rational::from(parse_integer(s)?)),
        Some((n, d)) => {
            let (n, d) = (parse_integer(n)?, parse_integer(d)?);
            if d == 0 {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rational::from((n, d)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn horner() {
        assert_eq!(IntPolynomial::linear(-2).eval(&Rational::from(4)), 2);
        assert_eq!(IntPolynomial::zero().eval(&Rational::from((7, 3))), 0);
        assert_eq!(IntPolynomial::new([1, 0, 1]).eval(&Rational::from(3)), 10);
        assert_eq!(
            IntPolynomial::new([1, 0, 1]).eval(&Rational::from((1, 2))),
            Rational::from((5, 4))
        );
    }

    #[test]
    fn trims_and_parses() {
        assert_eq!(IntPolynomial::new([3, 0, 0]).coeffs().len(), 1);
        assert_eq!(IntPolynomial::new([0, 0]).degree(), None);
        let p: IntPolynomial = "-2, 1".parse().unwrap();
        assert_eq!(p, IntPolynomial::linear(-2));
        assert_eq!(p.to_string(), "-2,1");
        assert!("1,x".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(rational_text(&Rational::from(2)), "2/1");
        assert_eq!(parse_rational("6/4").unwrap(), Rational::from((3, 2)));
        assert_eq!(parse_rational("-5").unwrap(), -5);
        assert_eq!(parse_rational("1/0"), Err(Error::ZeroDenominator));
    }
}
