//! Kronecker symbol and the reciprocity sign, generic over signed integers.

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

fn small<T: Integer + Clone + FromPrimitive + ToPrimitive>(x: &T, m: u8) -> u8 {
    x.mod_floor(&T::from_u8(m).unwrap()).to_u8().unwrap()
}

/// Splits `n != 0` into `(v, n / 2^v)` with the sign kept on the odd part.
fn strip_twos<T>(n: T) -> (u32, T)
where
    T: Integer + Clone,
{
    let two = T::one() + T::one();
    let mut n = n;
    let mut v = 0;
    while n.is_even() {
        n = n / two.clone();
        v += 1;
    }
    (v, n)
}

/// The Kronecker symbol `(a/b)`.
///
/// Negative bottoms use `(a/b) = (a/-1)(a/|b|)`, and `(a/-1)` is `-1` exactly when `a < 0`.
/// The value is `0` whenever `gcd(a, b) > 1`.
pub fn kronecker<T>(a: &T, b: &T) -> Result<i8>
where
    T: Integer + Signed + Clone + FromPrimitive + ToPrimitive,
{
    if b.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let mut sign = 1i8;
    let mut b = b.clone();
    if b.is_negative() {
        b = -b;
        if a.is_negative() {
            sign = -sign;
        }
    }
    let (v, b) = strip_twos(b);
    if v > 0 {
        if a.is_even() {
            return Ok(0);
        }
        let r = small(a, 8);
        if v % 2 == 1 && (r == 3 || r == 5) {
            sign = -sign;
        }
    }
    Ok(sign * jacobi(a.mod_floor(&b), b))
}

/// Jacobi symbol for `0 <= a < n`, `n` odd positive.
fn jacobi<T>(mut a: T, mut n: T) -> i8
where
    T: Integer + Signed + Clone + FromPrimitive + ToPrimitive,
{
    let mut sign = 1i8;
    while !a.is_zero() {
        let (v, odd) = strip_twos(a);
        a = odd;
        let n8 = small(&n, 8);
        if v % 2 == 1 && (n8 == 3 || n8 == 5) {
            sign = -sign;
        }
        if small(&a, 4) == 3 && small(&n, 4) == 3 {
            sign = -sign;
        }
        let r = n.mod_floor(&a);
        n = a;
        a = r;
    }
    if n.is_one() {
        sign
    } else {
        0
    }
}

/// `(-1)^((a0-1)(b0-1)/4)` on the signed odd parts, so that
/// `(a/b) = reciprocity_sign(a, b) * (b/a)` for coprime arguments.
pub fn reciprocity_sign<T>(a: &T, b: &T) -> Result<i8>
where
    T: Integer + Signed + Clone + FromPrimitive + ToPrimitive,
{
    if a.is_zero() || b.is_zero() {
        return Err(Error::Invalid("reciprocity needs nonzero arguments".into()));
    }
    if a.is_negative() && b.is_negative() {
        return Err(Error::BothNegative);
    }
    let (_, a0) = strip_twos(a.clone());
    let (_, b0) = strip_twos(b.clone());
    if small(&a0, 4) == 3 && small(&b0, 4) == 3 {
        Ok(-1)
    } else {
        Ok(1)
    }
}

/// Kronecker symbol on machine integers, for hot loops.
pub fn kron(a: i64, b: i64) -> i8 {
    kronecker(&a, &b).expect("nonzero bottom")
}
