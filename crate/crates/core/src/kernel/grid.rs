//! Square and triangular grid configurations as integer quadratic polynomials.
//!
//! A square grid is `f(i, j) = D(i^2 + j^2) + A i + B j + G`; a triangular grid
//! uses `D(i^2 + ij + j^2)` on the lattice spanned by two unit vectors at 60 degrees.
//! Valid grids are null vectors of a quadratic form on `(D, A, B, G)`, faces give
//! unit vectors, and the generator of a face is the reflection in that unit vector.

use num_integer::Integer;
use serde::Serialize;

use crate::arith::int::exact_sqrt_i128;
use crate::error::{Error, Result};

use super::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Lattice {
    Square,
    Tri,
}

/// Coefficients `(D, A, B, G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Poly {
    pub d: i128,
    pub a: i128,
    pub b: i128,
    pub g: i128,
}

impl Poly {
    pub const fn new(d: i128, a: i128, b: i128, g: i128) -> Self {
        Poly { d, a, b, g }
    }

    pub fn eval(&self, lat: Lattice, i: i64, j: i64) -> i128 {
        let (i, j) = (i as i128, j as i128);
        let q = match lat {
            Lattice::Square => i * i + j * j,
            Lattice::Tri => i * i + i * j + j * j,
        };
        self.d * q + self.a * i + self.b * j + self.g
    }

    /// `p(i - i0, j - j0)`.
    pub fn translate(&self, lat: Lattice, i0: i64, j0: i64) -> Poly {
        let (x, y) = (i0 as i128, j0 as i128);
        let Poly { d, a, b, g } = *self;
        match lat {
            Lattice::Square => Poly::new(d, a - 2 * d * x, b - 2 * d * y, d * (x * x + y * y) - a * x - b * y + g),
            Lattice::Tri => Poly::new(
                d,
                a - d * (2 * x + y),
                b - d * (x + 2 * y),
                d * (x * x + x * y + y * y) - a * x - b * y + g,
            ),
        }
    }

    pub fn add_scaled(&self, t: i128, h: &Poly) -> Poly {
        Poly::new(self.d + t * h.d, self.a + t * h.a, self.b + t * h.b, self.g + t * h.g)
    }

    pub fn checked_add_scaled(&self, t: i128, h: &Poly) -> Option<Poly> {
        let f = |x: i128, y: i128| x.checked_add(t.checked_mul(y)?);
        Some(Poly::new(f(self.d, h.d)?, f(self.a, h.a)?, f(self.b, h.b)?, f(self.g, h.g)?))
    }
}

/// The bilinear form whose null vectors are the grids.
pub fn bilinear(lat: Lattice, v: &Poly, w: &Poly) -> i128 {
    match lat {
        Lattice::Square => v.a * w.a + v.b * w.b - 2 * (v.d * w.g + v.g * w.d) - v.d * w.d,
        Lattice::Tri => {
            4 * v.a * w.a - 2 * (v.a * w.b + v.b * w.a) + 4 * v.b * w.b - 6 * (v.d * w.g + v.g * w.d) - 3 * v.d * w.d
        }
    }
}

/// A face of the grid: square `(i, j)` has corners `(i, j)..(i+1, j+1)`;
/// triangular up `(i, j)` is `(i,j),(i+1,j),(i,j+1)` and down is `(i+1,j),(i,j+1),(i+1,j+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GridFace {
    pub i: i64,
    pub j: i64,
    pub up: bool,
}

impl GridFace {
    pub fn square(i: i64, j: i64) -> Self {
        GridFace { i, j, up: true }
    }

    pub fn vertices(&self, lat: Lattice) -> Vec<(i64, i64)> {
        let (i, j) = (self.i, self.j);
        match (lat, self.up) {
            (Lattice::Square, _) => vec![(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)],
            (Lattice::Tri, true) => vec![(i, j), (i + 1, j), (i, j + 1)],
            (Lattice::Tri, false) => vec![(i + 1, j), (i, j + 1), (i + 1, j + 1)],
        }
    }

    /// Unit vector vanishing on the face, positive elsewhere on the lattice.
    pub fn poly(&self, lat: Lattice) -> Poly {
        let base = match (lat, self.up) {
            (Lattice::Square, _) => Poly::new(1, -1, -1, 0),
            (Lattice::Tri, true) => Poly::new(1, -1, -1, 0),
            (Lattice::Tri, false) => Poly::new(1, -2, -2, 1),
        };
        base.translate(lat, self.i, self.j)
    }
}

/// Polynomial in `(i, j)` giving the flip coefficient `t*` of every face
/// of one shape, written on the same lattice as the grid.
pub fn flip_coefficients(lat: Lattice, f: &Poly, up: bool) -> Poly {
    let Poly { d, a, b, g } = *f;
    match (lat, up) {
        (Lattice::Square, _) => Poly::new(4 * d, 4 * (d + a), 4 * (d + b), 2 * (d + a + b) + 4 * g),
        (Lattice::Tri, true) => Poly::new(12 * d, 12 * (d + a), 12 * (d + b), 6 * d + 4 * (a + b) + 12 * g),
        (Lattice::Tri, false) => Poly::new(12 * d, 12 * (2 * d + a), 12 * (2 * d + b), 18 * d + 8 * (a + b) + 12 * g),
    }
}

/// A grid configuration of either lattice type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Grid {
    pub lattice: Lattice,
    pub poly: Poly,
}

impl Grid {
    /// Square grid with `(p, q, r, s)` at `(0,0), (1,0), (0,1), (1,1)`.
    pub fn square(seed: &[i64], sign: Sign) -> Result<Self> {
        let [p, q, r, s]: [i64; 4] = seed
            .try_into()
            .map_err(|_| Error::Invalid(format!("square seed needs 4 integers, got {}", seed.len())))?;
        let [p, q, r, s] = [p, q, r, s].map(i128::from);
        if p + s != q + r {
            return Err(Error::Relation("a+d = b+c on the seed square".into()));
        }
        let rad = (q + r) * (q + r) - (q - p) * (q - p) - (r - p) * (r - p);
        let root = exact_sqrt_i128(rad).ok_or_else(|| Error::Irrational(format!("{rad}")))?;
        let d = q + r + sign.apply(root);
        Grid::checked(Lattice::Square, Poly::new(d, q - p - d, r - p - d, p))
    }

    /// Triangular grid with `(a, b, c)` at `(0,0), (1,0), (0,1)`.
    pub fn tri(seed: &[i64], sign: Sign) -> Result<Self> {
        let [a, b, c]: [i64; 3] = seed
            .try_into()
            .map_err(|_| Error::Invalid(format!("triangular seed needs 3 integers, got {}", seed.len())))?;
        let [a, b, c] = [a, b, c].map(i128::from);
        let t = a * b + b * c + c * a;
        if t % 3 != 0 {
            return Err(Error::Irrational("ab+bc+ca is not 3m^2".into()));
        }
        let m = exact_sqrt_i128(t / 3).ok_or_else(|| Error::Irrational("ab+bc+ca is not 3m^2".into()))?;
        let d = 2 * (a + b + c) + sign.apply(6 * m);
        Grid::checked(Lattice::Tri, Poly::new(d, b - a - d, c - a - d, a))
    }

    /// Square grid from the staircase `j, k, l` at `(0,0), (1,0), (1,1)`; the sign picks
    /// the root `m` at `(2,1)`.
    pub fn square_from_staircase(j: i64, k: i64, l: i64, sign: Sign) -> Result<Self> {
        let (j, k, l) = (j as i128, k as i128, l as i128);
        let s = 2 * j + 2 * k + 6 * l;
        let c = 9 * l * l + (j - 3 * k) * (j - 3 * k) - 2 * (j + k) * l;
        let root = exact_sqrt_i128(s * s - 4 * c).ok_or_else(|| Error::Irrational("staircase discriminant".into()))?;
        let m = (s + sign.apply(root)) / 2;
        let d = m - k + j - l;
        if d % 2 != 0 {
            return Err(Error::Irrational("staircase completion".into()));
        }
        let d = d / 2;
        Grid::checked(Lattice::Square, Poly::new(d, k - j - d, l - k - d, j))
    }

    pub fn checked(lattice: Lattice, poly: Poly) -> Result<Self> {
        let g = Grid { lattice, poly };
        if bilinear(lattice, &poly, &poly) != 0 {
            return Err(Error::Relation("grid quadratic relation".into()));
        }
        if poly.d < 0 {
            return Err(Error::Relation("grid curvatures unbounded below".into()));
        }
        let gcd = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).fold(0i128, |acc, (i, j)| acc.gcd(&g.at(i, j)));
        if gcd != 1 {
            return Err(Error::NotPrimitive(gcd as i64));
        }
        Ok(g)
    }

    pub fn at(&self, i: i64, j: i64) -> i128 {
        self.poly.eval(self.lattice, i, j)
    }

    /// Flip coefficient of a face: the grid's value at the face center (square) or the
    /// shifted centroid value (triangular), scaled to an integer.
    pub fn t_star(&self, face: &GridFace) -> i128 {
        -2 * bilinear(self.lattice, &self.poly, &face.poly(self.lattice))
    }

    pub fn flip(&self, face: &GridFace) -> Grid {
        let t = self.t_star(face);
        Grid { lattice: self.lattice, poly: self.poly.add_scaled(t, &face.poly(self.lattice)) }
    }

    pub fn checked_flip(&self, face: &GridFace) -> Option<Grid> {
        let h = face.poly(self.lattice);
        let t = bilinear(self.lattice, &self.poly, &h).checked_mul(-2)?;
        Some(Grid { lattice: self.lattice, poly: self.poly.checked_add_scaled(t, &h)? })
    }

    /// Lattice neighbors of a site.
    pub fn neighbors(&self, i: i64, j: i64) -> Vec<(i64, i64)> {
        match self.lattice {
            Lattice::Square => vec![(i + 1, j), (i, j + 1), (i - 1, j), (i, j - 1)],
            Lattice::Tri => vec![(i + 1, j), (i, j + 1), (i - 1, j + 1), (i - 1, j), (i, j - 1), (i + 1, j - 1)],
        }
    }

    /// Smallest value of the grid over the real plane, `-D/4`, as `(numerator, 4)`.
    pub fn real_min_times_4(&self) -> i128 {
        -self.poly.d
    }
}

/// Calls `visit(i, j, p(i, j))` for every lattice point with `p(i, j) <= bound`.
/// Requires `p.d > 0`.
pub fn for_each_le(lat: Lattice, p: &Poly, bound: i128, mut visit: impl FnMut(i64, i64, i128)) {
    assert!(p.d > 0);
    // recenter exactly so the floating point range estimates work with small coefficients
    let (d, a, b) = (p.d as f64, p.a as f64, p.b as f64);
    let (ci, cj) = match lat {
        Lattice::Square => (-a / (2.0 * d), -b / (2.0 * d)),
        Lattice::Tri => ((b - 2.0 * a) / (3.0 * d), (a - 2.0 * b) / (3.0 * d)),
    };
    let (ci, cj) = (ci.round() as i64, cj.round() as i64);
    let local = p.translate(lat, -ci, -cj);
    scan_region(lat, &local, bound, &mut |i, j, v| visit(i + ci, j + cj, v));
}

fn scan_region(lat: Lattice, p: &Poly, bound: i128, visit: &mut impl FnMut(i64, i64, i128)) {
    let (d, a, b, g) = (p.d as f64, p.a as f64, p.b as f64, p.g as f64);
    let n = bound as f64;
    // range of j where the quadratic in i has real roots
    let (qa, qb, qc) = match lat {
        Lattice::Square => (-4.0 * d * d, -4.0 * d * b, a * a - 4.0 * d * (g - n)),
        Lattice::Tri => (-3.0 * d * d, 2.0 * d * (a - 2.0 * b), a * a - 4.0 * d * (g - n)),
    };
    let disc = qb * qb - 4.0 * qa * qc;
    if disc < 0.0 {
        // the region may still contain a point through rounding; probe the vertex
        let jc = (-qb / (2.0 * qa)).round() as i64;
        for j in jc - 1..=jc + 1 {
            scan_row(lat, p, bound, j, visit);
        }
        return;
    }
    let r1 = (-qb + disc.sqrt()) / (2.0 * qa);
    let r2 = (-qb - disc.sqrt()) / (2.0 * qa);
    let (lo, hi) = (r1.min(r2).floor() as i64 - 1, r1.max(r2).ceil() as i64 + 1);
    for j in lo..=hi {
        scan_row(lat, p, bound, j, visit);
    }
}

fn scan_row(lat: Lattice, p: &Poly, bound: i128, j: i64, visit: &mut impl FnMut(i64, i64, i128)) {
    let (d, a, b, g) = (p.d as f64, p.a as f64, p.b as f64, p.g as f64);
    let jf = j as f64;
    let (lin, cst) = match lat {
        Lattice::Square => (a, d * jf * jf + b * jf + g),
        Lattice::Tri => (d * jf + a, d * jf * jf + b * jf + g),
    };
    let disc = lin * lin - 4.0 * d * (cst - bound as f64);
    let center = -lin / (2.0 * d);
    let half = if disc > 0.0 { disc.sqrt() / (2.0 * d) } else { 0.0 };
    let lo = (center - half).floor() as i64 - 1;
    let hi = (center + half).ceil() as i64 + 1;
    for i in lo..=hi {
        let v = p.eval(lat, i, j);
        if v <= bound {
            visit(i, j, v);
        }
    }
}
