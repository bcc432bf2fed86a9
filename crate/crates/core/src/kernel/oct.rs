//! Octahedral sextuples `(a, b, c, d, e, f)` with `a + f = b + e = c + d = 2w`.

use num_integer::Integer;
use serde::Serialize;

use crate::arith::int::exact_sqrt_i128;
use crate::error::{Error, Result};

use super::Sign;

/// Opposite slots: `(a, f)`, `(b, e)`, `(c, d)`.
pub const PAIRS: [(usize, usize); 3] = [(0, 5), (1, 4), (2, 3)];

pub fn opposite(i: usize) -> usize {
    5 - i
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OctConfig {
    pub v: [i64; 6],
}

/// Slots of face `mask`: bit `k` picks the second member of pair `k`.
pub fn face_slots(mask: u8) -> [usize; 3] {
    std::array::from_fn(|k| if mask >> k & 1 == 1 { PAIRS[k].1 } else { PAIRS[k].0 })
}

impl OctConfig {
    pub fn new(values: &[i64]) -> Result<Self> {
        let v: [i64; 6] = values
            .try_into()
            .map_err(|_| Error::Invalid(format!("octahedral seed needs 6 integers, got {}", values.len())))?;
        let c = OctConfig { v };
        c.check()?;
        Ok(c)
    }

    pub fn w(&self) -> i64 {
        (self.v[0] + self.v[5]) / 2
    }

    fn check(&self) -> Result<()> {
        let v = self.v.map(i128::from);
        let s = v[0] + v[5];
        if v[1] + v[4] != s || v[2] + v[3] != s {
            return Err(Error::Relation("a+f = b+e = c+d".into()));
        }
        if s % 2 != 0 || s < 2 {
            return Err(Error::Relation("a+f = 2w with w >= 1".into()));
        }
        let w = s / 2;
        let (a, b, c) = (v[0], v[1], v[2]);
        if w * w - 2 * w * (a + b + c) + a * a + b * b + c * c != 0 {
            return Err(Error::Relation("w^2 - 2w(a+b+c) + a^2+b^2+c^2 = 0".into()));
        }
        if exact_sqrt_i128(2 * (a * b + a * c + b * c)).is_none() {
            return Err(Error::Irrational("2(ab+ac+bc)".into()));
        }
        let g = self.v.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g != 1 {
            return Err(Error::NotPrimitive(g));
        }
        Ok(())
    }

    /// The sextuple determined by the triangle `(a, b, c)`; `Plus` takes the larger `w`.
    pub fn complete(a: i64, b: i64, c: i64, sign: Sign) -> Result<Self> {
        let (a, b, c) = (a as i128, b as i128, c as i128);
        let r = exact_sqrt_i128(2 * (a * b + a * c + b * c)).ok_or_else(|| Error::Irrational("2(ab+ac+bc)".into()))?;
        let w = a + b + c + sign.apply(r);
        let v = [a, b, c, 2 * w - c, 2 * w - b, 2 * w - a];
        let v = v.map(|x| i64::try_from(x).map_err(|_| Error::Overflow));
        let v: Vec<i64> = v.into_iter().collect::<Result<_>>()?;
        OctConfig::new(&v)
    }

    /// Reflection through the dual circle of face `mask`, or `None` on overflow.
    pub fn flip(&self, mask: u8) -> Option<OctConfig> {
        let w = self.w();
        let mut v = self.v;
        let mut s = 0i64;
        for i in face_slots(mask) {
            s = s.checked_add(v[i])?;
        }
        let w2 = s.checked_mul(2)?.checked_sub(w)?;
        for i in face_slots(mask) {
            v[opposite(i)] = w2.checked_mul(2)?.checked_sub(v[i])?;
        }
        Some(OctConfig { v })
    }

    /// `w' - w` for face `mask`; positive exactly for the curvature-increasing moves.
    pub fn growth(&self, mask: u8) -> i64 {
        let s: i64 = face_slots(mask).iter().map(|&i| self.v[i]).sum();
        2 * s - 2 * self.w()
    }

    /// Tangent pairs: every pair of slots except opposite ones.
    pub fn edges() -> impl Iterator<Item = (usize, usize)> {
        (0..6).flat_map(|i| (i + 1..6).filter(move |&j| j != opposite(i)).map(move |j| (i, j)))
    }
}
