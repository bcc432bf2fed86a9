//! Cubic octuples `(a, ..., h)` on the cube with faces `abcd` and `efgh`,
//! antipodal pairs summing to `w`.

use std::sync::OnceLock;

use num_integer::Integer;
use serde::Serialize;

use crate::arith::int::exact_sqrt_i128;
use crate::error::{Error, Result};

use super::Sign;

/// Faces as cyclic vertex orders.
pub const FACES: [[usize; 4]; 6] = [[0, 1, 2, 3], [0, 1, 5, 4], [1, 2, 6, 5], [2, 3, 7, 6], [0, 3, 7, 4], [4, 5, 6, 7]];

pub const EDGES: [(usize, usize); 12] =
    [(0, 1), (1, 2), (2, 3), (0, 3), (1, 5), (4, 5), (0, 4), (2, 6), (5, 6), (3, 7), (6, 7), (4, 7)];

pub fn antipode(i: usize) -> usize {
    [6, 7, 4, 5, 2, 3, 0, 1][i]
}

pub fn adjacent(i: usize, j: usize) -> bool {
    EDGES.iter().any(|&(p, q)| (p, q) == (i, j) || (p, q) == (j, i))
}

/// The 48 symmetries of the cube as vertex permutations.
pub fn automorphisms() -> &'static [[usize; 8]] {
    static AUT: OnceLock<Vec<[usize; 8]>> = OnceLock::new();
    AUT.get_or_init(|| {
        let mut out = Vec::new();
        let mut p = [0usize; 8];
        fn rec(k: usize, used: u8, p: &mut [usize; 8], out: &mut Vec<[usize; 8]>) {
            if k == 8 {
                if EDGES.iter().all(|&(i, j)| adjacent(p[i], p[j])) {
                    out.push(*p);
                }
                return;
            }
            for x in 0..8 {
                if used >> x & 1 == 0 {
                    p[k] = x;
                    rec(k + 1, used | 1 << x, p, out);
                }
            }
        }
        rec(0, 0, &mut p, &mut out);
        out
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CubeConfig {
    pub v: [i64; 8],
}

fn valid_labeling(v: &[i64; 8]) -> bool {
    let v = v.map(i128::from);
    let w = v[0] + v[6];
    if v[1] + v[7] != w || v[2] + v[4] != w || v[3] + v[5] != w || v[0] + v[2] != v[1] + v[3] {
        return false;
    }
    let (a, c, f, h) = (v[0], v[2], v[5], v[7]);
    let s = a + c + f + h;
    3 * s * s == 8 * (a * a + c * c + f * f + h * h) && exact_sqrt_i128(v[0] * v[2] + v[1] * v[3]).is_some()
}

fn labeling_key(v: &[i64; 8]) -> bool {
    let m = |i: usize| v[i].min(v[antipode(i)]);
    m(0) <= m(1) && m(1) <= m(2) && m(2) <= m(3)
}

impl CubeConfig {
    /// Keeps the given order when it is a valid labeling, otherwise searches all
    /// labelings of the multiset.
    pub fn new(values: &[i64]) -> Result<Self> {
        let v: [i64; 8] = values
            .try_into()
            .map_err(|_| Error::Invalid(format!("cubic seed needs 8 integers, got {}", values.len())))?;
        let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g != 1 {
            return Err(Error::NotPrimitive(g));
        }
        if valid_labeling(&v) {
            return Ok(CubeConfig { v });
        }
        Self::label(&v).map(|v| CubeConfig { v })
    }

    /// Canonical labeling: antipodal minima nondecreasing in `(a,g), (b,h), (c,e), (d,f)`,
    /// then lexicographically least.
    pub fn label(values: &[i64; 8]) -> Result<[i64; 8]> {
        let mut best: Option<[i64; 8]> = None;
        let mut perm = *values;
        perm.sort_unstable();
        loop {
            if valid_labeling(&perm) && labeling_key(&perm) && best.map_or(true, |b| perm < b) {
                best = Some(perm);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        best.ok_or(Error::NoLabeling)
    }

    pub fn w(&self) -> i64 {
        self.v[0] + self.v[6]
    }

    /// The octuple determined by the face `(a, b, c, d)`; `Plus` takes the larger `w`.
    pub fn complete(face: [i64; 4], sign: Sign) -> Result<Self> {
        let [a, b, c, d] = face.map(i128::from);
        if a + c != b + d {
            return Err(Error::Relation("a+c = b+d".into()));
        }
        let r = exact_sqrt_i128(a * c + b * d).ok_or_else(|| Error::Irrational("ac+bd".into()))?;
        let w = 2 * (a + c) + 2 * sign.apply(r);
        let v = [a, b, c, d, w - c, w - d, w - a, w - b];
        let v: Vec<i64> = v.iter().map(|&x| i64::try_from(x).map_err(|_| Error::Overflow)).collect::<Result<_>>()?;
        let v: [i64; 8] = v.try_into().unwrap();
        if !valid_labeling(&v) {
            return Err(Error::Relation("cube relations".into()));
        }
        CubeConfig::new(&v)
    }

    /// Reflection through the dual circle of face `k`, or `None` on overflow.
    pub fn flip(&self, k: usize) -> Option<CubeConfig> {
        let f = FACES[k];
        let w2 = self.v[f[0]].checked_add(self.v[f[2]])?.checked_mul(4)?.checked_sub(self.w())?;
        let mut v = self.v;
        for &i in &f {
            v[antipode(i)] = w2.checked_sub(self.v[i])?;
        }
        Some(CubeConfig { v })
    }

    /// `w' - w` for face `k`.
    pub fn growth(&self, k: usize) -> i64 {
        let f = FACES[k];
        4 * (self.v[f[0]] + self.v[f[2]]) - 2 * self.w()
    }
}

fn next_permutation(v: &mut [i64; 8]) -> bool {
    let n = v.len();
    let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}
