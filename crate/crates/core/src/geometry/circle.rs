use std::fmt;

use crate::arith::QuadRat;
use crate::error::{Error, Result};

/// An oriented generalized circle `(cocurvature, curvature, h1, h2)`.
///
/// `(h1, h2)` is the center scaled by the curvature. Lines have curvature zero,
/// a unit normal in `(h1, h2)` and cocurvature equal to twice the signed distance
/// from the origin along that normal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct InversiveCircle {
    pub cocurv: QuadRat,
    pub curv: QuadRat,
    pub h1: QuadRat,
    pub h2: QuadRat,
}

/// Floating-point description of a circle for drawing.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Euclid {
    Circle { center: (f64, f64), radius: f64 },
    Line { normal: (f64, f64), offset: f64 },
}

pub(crate) fn form(u: &[QuadRat; 4], v: &[QuadRat; 4]) -> QuadRat {
    let hh = &(&u[2] * &v[2]) + &(&u[3] * &v[3]);
    let bb = &(&u[1] * &v[0]) + &(&u[0] * &v[1]);
    &hh - &bb.half()
}

impl InversiveCircle {
    pub fn new(cocurv: QuadRat, curv: QuadRat, h1: QuadRat, h2: QuadRat) -> Result<Self> {
        let d = cocurv.field();
        for x in [&curv, &h1, &h2] {
            if x.field() != d {
                return Err(Error::FieldMismatch(d, x.field()));
            }
        }
        let c = InversiveCircle { cocurv, curv, h1, h2 };
        if c.norm() != QuadRat::one(d) {
            return Err(Error::Invalid(format!("circle {c} does not satisfy h1^2 + h2^2 - b b~ = 1")));
        }
        Ok(c)
    }

    pub(crate) fn from_vec(v: [QuadRat; 4]) -> Self {
        let [cocurv, curv, h1, h2] = v;
        InversiveCircle { cocurv, curv, h1, h2 }
    }

    pub fn to_vec(&self) -> [QuadRat; 4] {
        [self.cocurv.clone(), self.curv.clone(), self.h1.clone(), self.h2.clone()]
    }

    pub fn field(&self) -> u8 {
        self.curv.field()
    }

    pub fn norm(&self) -> QuadRat {
        let v = self.to_vec();
        form(&v, &v)
    }

    pub fn is_line(&self) -> bool {
        self.curv.is_zero()
    }

    pub fn euclidean_data(&self) -> Euclid {
        let h1 = self.h1.to_f64();
        let h2 = self.h2.to_f64();
        if self.is_line() {
            Euclid::Line { normal: (h1, h2), offset: self.cocurv.to_f64() / 2.0 }
        } else {
            let b = self.curv.to_f64();
            Euclid::Circle { center: (h1 / b, h2 / b), radius: 1.0 / b.abs() }
        }
    }
}

impl fmt::Display for InversiveCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.cocurv, self.curv, self.h1, self.h2)
    }
}

pub fn inner_product(c1: &InversiveCircle, c2: &InversiveCircle) -> Result<QuadRat> {
    if c1.field() != c2.field() {
        return Err(Error::FieldMismatch(c1.field(), c2.field()));
    }
    Ok(form(&c1.to_vec(), &c2.to_vec()))
}

/// `c - 2<c, m> m`.
pub fn reflect(c: &InversiveCircle, mirror: &InversiveCircle) -> Result<InversiveCircle> {
    if mirror.norm() != QuadRat::one(mirror.field()) {
        return Err(Error::NonUnitMirror);
    }
    let k = inner_product(c, mirror)?;
    let k2 = &k + &k;
    let cv = c.to_vec();
    let mv = mirror.to_vec();
    Ok(InversiveCircle::from_vec(std::array::from_fn(|i| &cv[i] - &(&k2 * &mv[i]))))
}

/// Packing tangency: inner product exactly `-1`.
pub fn tangent(c1: &InversiveCircle, c2: &InversiveCircle) -> Result<bool> {
    Ok(inner_product(c1, c2)? == QuadRat::int(c1.field(), -1))
}
