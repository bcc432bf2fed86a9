use crate::arith::QuadRat;
use crate::error::{Error, Result};

use super::circle::{form, InversiveCircle};

/// A Möbius transformation acting linearly on `(cocurv, curv, h1, h2)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCircleMap {
    m: [[QuadRat; 4]; 4],
}

type Mat = [[QuadRat; 4]; 4];

fn basis(d: u8, i: usize) -> [QuadRat; 4] {
    std::array::from_fn(|k| QuadRat::int(d, (k == i) as i64))
}

fn mat_vec(m: &Mat, v: &[QuadRat; 4]) -> [QuadRat; 4] {
    std::array::from_fn(|i| {
        (0..4).fold(QuadRat::zero(v[0].field()), |acc, k| &acc + &(&m[i][k] * &v[k]))
    })
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let d = a[0][0].field();
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..4).fold(QuadRat::zero(d), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
    })
}

fn invert(m: &Mat) -> Result<Mat> {
    let d = m[0][0].field();
    let mut a = m.clone();
    let mut inv: Mat = std::array::from_fn(|i| basis(d, i));
    for col in 0..4 {
        let piv = (col..4)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Invalid("source circles are linearly dependent".into()))?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..4 {
            a[col][j] = a[col][j].checked_div(&p)?;
            inv[col][j] = inv[col][j].checked_div(&p)?;
        }
        for r in 0..4 {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..4 {
                    a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                    inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                }
            }
        }
    }
    Ok(inv)
}

impl LinearCircleMap {
    /// Accepts a matrix only if it preserves the inversive form on a basis.
    pub fn from_matrix(m: Mat) -> Result<Self> {
        let d = m[0][0].field();
        if m.iter().flatten().any(|x| x.field() != d) {
            return Err(Error::Invalid("matrix entries in different fields".into()));
        }
        let cols: Vec<[QuadRat; 4]> = (0..4).map(|j| std::array::from_fn(|i| m[i][j].clone())).collect();
        for i in 0..4 {
            for j in 0..4 {
                if form(&cols[i], &cols[j]) != form(&basis(d, i), &basis(d, j)) {
                    return Err(Error::NotFormPreserving);
                }
            }
        }
        Ok(LinearCircleMap { m })
    }

    pub fn identity(d: u8) -> Self {
        LinearCircleMap { m: std::array::from_fn(|i| basis(d, i)) }
    }

    /// The map sending each `src[i]` to `dst[i]`.
    pub fn from_frames(src: &[InversiveCircle; 4], dst: &[InversiveCircle; 4]) -> Result<Self> {
        let s: Mat = std::array::from_fn(|i| std::array::from_fn(|j| src[j].to_vec()[i].clone()));
        let t: Mat = std::array::from_fn(|i| std::array::from_fn(|j| dst[j].to_vec()[i].clone()));
        Self::from_matrix(mat_mul(&t, &invert(&s)?))
    }

    /// `z -> z + t`.
    pub fn translation(t1: QuadRat, t2: QuadRat) -> Self {
        let d = t1.field();
        let z = || QuadRat::zero(d);
        let o = || QuadRat::one(d);
        let tt = &(&t1 * &t1) + &(&t2 * &t2);
        let m = [
            [o(), tt, &t1 + &t1, &t2 + &t2],
            [z(), o(), z(), z()],
            [z(), t1, o(), z()],
            [z(), t2, z(), o()],
        ];
        LinearCircleMap { m }
    }

    /// `z -> k z` for `k != 0`.
    pub fn scaling(k: QuadRat) -> Result<Self> {
        let d = k.field();
        let z = || QuadRat::zero(d);
        let o = || QuadRat::one(d);
        let inv = o().checked_div(&k)?;
        Self::from_matrix([[k, z(), z(), z()], [z(), inv, z(), z()], [z(), z(), o(), z()], [z(), z(), z(), o()]])
    }

    /// Inversion in the unit circle.
    pub fn inversion(d: u8) -> Self {
        let mut m = Self::identity(d).m;
        m.swap(0, 1);
        LinearCircleMap { m }
    }

    /// `(x, y) -> (-x, y)`.
    pub fn mirror_x(d: u8) -> Self {
        let mut m = Self::identity(d).m;
        m[2][2] = QuadRat::int(d, -1);
        LinearCircleMap { m }
    }

    pub fn compose(&self, other: &Self) -> Self {
        LinearCircleMap { m: mat_mul(&self.m, &other.m) }
    }

    pub fn matrix(&self) -> &Mat {
        &self.m
    }
}

pub fn apply_map(map: &LinearCircleMap, c: &InversiveCircle) -> Result<InversiveCircle> {
    if map.m[0][0].field() != c.field() {
        return Err(Error::FieldMismatch(map.m[0][0].field(), c.field()));
    }
    Ok(InversiveCircle::from_vec(mat_vec(&map.m, &c.to_vec())))
}
