//! Square-part extraction `n = s² · d` used to canonicalize radicands.

use num_bigint::BigUint;
use rug::integer::Order;
use rug::ops::Pow;
use rug::Integer;

/// Splits a positive integer as `n = s² · d`.
///
/// `d` is square-free whenever `n` factors completely; num-prime factors
/// everything below 2^128 unconditionally. Above that, cofactors the
/// factorizer gives up on are kept in `d` unless they are perfect squares.
pub(crate) fn square_split(n: &Integer) -> (Integer, Integer) {
    debug_assert!(*n > 0);
    let mut square = Integer::from(1);
    let mut kernel = Integer::from(1);
    if let Some(small) = n.to_u128() {
        for (p, e) in num_prime::nt_funcs::factorize128(small) {
            let p = Integer::from(p);
            square *= p.clone().pow((e / 2) as u32);
            if e % 2 == 1 {
                kernel *= p;
            }
        }
        return (square, kernel);
    }

    let big = BigUint::from_bytes_le(&n.to_digits::<u8>(Order::Lsf));
    let (found, rest) = num_prime::nt_funcs::factors(big, None);
    for (p, e) in found {
        let p = from_biguint(&p);
        square *= p.clone().pow((e / 2) as u32);
        if e % 2 == 1 {
            kernel *= p;
        }
    }
    for cofactor in rest.unwrap_or_default() {
        let cofactor = from_biguint(&cofactor);
        if cofactor.is_perfect_square() {
            square *= cofactor.sqrt();
        } else {
            kernel *= cofactor;
        }
    }
    (square, kernel)
}

fn from_biguint(x: &BigUint) -> Integer {
    Integer::from_digits(&x.to_bytes_le(), Order::Lsf)
}

pub(crate) fn is_square_free(n: &Integer) -> bool {
    *n > 0 && square_split(n).0 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_small_values() {
        for (n, s, d) in [
            (8u64, 2u64, 2u64),
            (50, 5, 2),
            (12, 2, 3),
            (7, 1, 7),
            (1, 1, 1),
            (36, 6, 1),
        ] {
            assert_eq!(
                square_split(&Integer::from(n)),
                (Integer::from(s), Integer::from(d)),
                "n = {n}"
            );
        }
    }

    #[test]
    fn splits_beyond_u128() {
        // 1000003^2 * 3 * (2^127 - 1), the last factor a Mersenne prime
        let p = Integer::from(1_000_003);
        let m127: Integer = (Integer::from(1) << 127) - 1u32;
        let n = Integer::from(p.square_ref()) * 3u32 * &m127;
        assert!(n.to_u128().is_none());
        let (s, d) = square_split(&n);
        assert_eq!(s, p);
        assert_eq!(d, m127 * 3u32);
    }

    #[test]
    fn square_free_predicate() {
        assert!(is_square_free(&Integer::from(163)));
        assert!(is_square_free(&Integer::from(30)));
        assert!(!is_square_free(&Integer::from(18)));
        assert!(!is_square_free(&Integer::from(0)));
    }
}
