//! Exact scalars `r + s*sqrt(d)` for `d` in {1, 2, 3}.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadRat {
    d: u8,
    r: BigRational,
    s: BigRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn ratio(n: i64, m: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(m))
}

impl QuadRat {
    pub fn new(d: u8, r: BigRational, s: BigRational) -> Result<Self> {
        if !(1..=3).contains(&d) {
            return Err(Error::BadFieldTag(d));
        }
        let mut q = QuadRat { d, r, s };
        if d == 1 {
            q.r += std::mem::replace(&mut q.s, BigRational::zero());
        }
        Ok(q)
    }

    /// `(r_num/r_den) + (s_num/s_den) sqrt(d)` from machine integers.
    pub fn from_parts(d: u8, r: (i64, i64), s: (i64, i64)) -> Self {
        Self::new(d, ratio(r.0, r.1), ratio(s.0, s.1)).expect("field tag")
    }

    pub fn int(d: u8, n: i64) -> Self {
        Self::from_parts(d, (n, 1), (0, 1))
    }

    pub fn zero(d: u8) -> Self {
        Self::int(d, 0)
    }

    pub fn one(d: u8) -> Self {
        Self::int(d, 1)
    }

    /// `n * sqrt(d)`.
    pub fn surd(d: u8, n: i64) -> Self {
        Self::from_parts(d, (0, 1), (n, 1))
    }

    pub fn field(&self) -> u8 {
        self.d
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.r
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    /// The integer value, if this scalar is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.s.is_zero() && self.r.is_integer()).then(|| self.r.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }

    pub fn to_f64(&self) -> f64 {
        let f = |q: &BigRational| q.numer().to_f64().unwrap() / q.denom().to_f64().unwrap();
        f(&self.r) + f(&self.s) * (self.d as f64).sqrt()
    }

    pub fn conj(&self) -> Self {
        QuadRat { d: self.d, r: self.r.clone(), s: -self.s.clone() }
    }

    /// Field norm `r^2 - d s^2`.
    pub fn norm(&self) -> BigRational {
        &self.r * &self.r - BigRational::from_integer(self.d.into()) * &self.s * &self.s
    }

    /// Sign of the real number `r + s sqrt(d)`.
    pub fn signum(&self) -> Ordering {
        let sr = self.r.cmp(&BigRational::zero());
        let ss = self.s.cmp(&BigRational::zero());
        if ss == Ordering::Equal || sr == ss {
            return if sr == Ordering::Equal { ss } else { sr };
        }
        if sr == Ordering::Equal {
            return ss;
        }
        // opposite signs: compare r^2 with d s^2
        let lhs = &self.r * &self.r;
        let rhs = BigRational::from_integer(self.d.into()) * &self.s * &self.s;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sr,
            Ordering::Less => ss,
            Ordering::Equal => Ordering::Equal,
        }
    }

    fn same_field(&self, o: &Self) -> Result<()> {
        if self.d == o.d {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.d, o.d))
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.same_field(o)?;
        Ok(QuadRat { d: self.d, r: &self.r + &o.r, s: &self.s + &o.s })
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.same_field(o)?;
        Ok(QuadRat { d: self.d, r: &self.r - &o.r, s: &self.s - &o.s })
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.same_field(o)?;
        let dd = BigRational::from_integer(self.d.into());
        let r = &self.r * &o.r + dd * &self.s * &o.s;
        let s = &self.r * &o.s + &self.s * &o.r;
        QuadRat::new(self.d, r, s)
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        self.same_field(o)?;
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // the norm is nonzero because sqrt(d) is irrational for d = 2, 3
        let n = o.norm();
        let num = self.checked_mul(&o.conj())?;
        QuadRat::new(self.d, num.r / &n, num.s / &n)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        QuadRat { d: self.d, r: &self.r * k, s: &self.s * k }
    }

    pub fn half(&self) -> Self {
        self.scale(&ratio(1, 2))
    }
}

/// One arithmetic operation with field-tag and zero-divisor checks.
pub fn quadrat_arith(x: &QuadRat, y: &QuadRat, op: QuadOp) -> Result<QuadRat> {
    match op {
        QuadOp::Add => x.checked_add(y),
        QuadOp::Sub => x.checked_sub(y),
        QuadOp::Mul => x.checked_mul(y),
        QuadOp::Div => x.checked_div(y),
    }
}

// The operator forms panic on mismatched field tags; geometry code only
// combines values it built in a single field.
impl Add for &QuadRat {
    type Output = QuadRat;
    fn add(self, o: &QuadRat) -> QuadRat {
        self.checked_add(o).expect("field tags agree")
    }
}

impl Sub for &QuadRat {
    type Output = QuadRat;
    fn sub(self, o: &QuadRat) -> QuadRat {
        self.checked_sub(o).expect("field tags agree")
    }
}

impl Mul for &QuadRat {
    type Output = QuadRat;
    fn mul(self, o: &QuadRat) -> QuadRat {
        self.checked_mul(o).expect("field tags agree")
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat { d: self.d, r: -self.r.clone(), s: -self.s.clone() }
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s.is_zero() {
            return write!(f, "{}", self.r);
        }
        let surd = if self.s.is_one() {
            format!("√{}", self.d)
        } else if (-self.s.clone()).is_one() {
            format!("-√{}", self.d)
        } else {
            format!("{}√{}", self.s, self.d)
        };
        if self.r.is_zero() {
            write!(f, "{surd}")
        } else if self.s.is_negative() {
            write!(f, "{}{}", self.r, surd)
        } else {
            write!(f, "{}+{}", self.r, surd)
        }
    }
}
