//! Integer helpers: 2-adic valuation, odd part, exact square roots.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// The decomposition reported by [`int_utils`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntInfo {
    pub odd_part: BigInt,
    pub v2: u64,
    pub exact_sqrt: Option<BigInt>,
}

/// `n = 2^v2 * odd_part`, plus the square root when `n` is a perfect square.
pub fn int_utils(n: &BigInt) -> Result<IntInfo> {
    if n.is_zero() {
        return Err(Error::Invalid("odd part of zero".into()));
    }
    let v2 = n.trailing_zeros().unwrap_or(0);
    Ok(IntInfo {
        odd_part: n >> v2,
        v2,
        exact_sqrt: exact_sqrt(n),
    })
}

pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn exact_sqrt_i128(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = (n as u128).sqrt() as i128;
    (r * r == n).then_some(r)
}

pub fn v2(n: i64) -> u32 {
    debug_assert!(n != 0);
    n.trailing_zeros()
}

pub fn odd_part(n: i64) -> i64 {
    n >> v2(n)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// `a / 2` when `a = 2 mod 4`, otherwise `a`.
pub fn a_prime(a: i64) -> i64 {
    if a.rem_euclid(4) == 2 {
        a / 2
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let i = int_utils(&BigInt::from(48)).unwrap();
        assert_eq!((i.odd_part, i.v2, i.exact_sqrt), (BigInt::from(3), 4, None));
        assert_eq!(exact_sqrt(&BigInt::from(49)), Some(BigInt::from(7)));
        // 2(ab+ac+bc) on the strip triangle (1, 0, 2)
        let (a, b, c) = (1, 0, 2);
        assert_eq!(exact_sqrt(&BigInt::from(2 * (a * b + a * c + b * c))), Some(BigInt::from(2)));
        assert_eq!(exact_sqrt(&BigInt::from(-4)), None);
        assert!(int_utils(&BigInt::from(0)).is_err());
    }

    #[test]
    fn negative_odd_part() {
        let i = int_utils(&BigInt::from(-12)).unwrap();
        assert_eq!(i.odd_part, BigInt::from(-3));
        assert_eq!(odd_part(-12), -3);
        assert_eq!(a_prime(6), 3);
        assert_eq!(a_prime(-2), -1);
        assert_eq!(a_prime(4), 4);
    }
}
