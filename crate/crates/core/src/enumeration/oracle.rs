use std::collections::{HashSet, VecDeque};

use num_integer::Roots;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{apply_generator, Config, GridFace, Lattice, Poly};

use super::presence::CurvaturePresence;

/// Bounds of an oracle run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleLimits {
    /// Longest generator word.
    pub depth: u32,
    /// Half-width of the grid window scanned around each grid state's center.
    pub radius: i64,
    /// Faces (or tuples) with a curvature above this are recorded but not expanded.
    pub ceiling: i64,
}

/// Unpruned breadth-first closure under all generators, deduplicated by exact state.
/// Uses a ceiling of `16 n`.
pub fn oracle_enumerate(config: &Config, n: u64, depth: u32, radius: i64) -> CurvaturePresence {
    oracle_with(config, n, OracleLimits { depth, radius, ceiling: 16 * n as i64 })
}

pub fn oracle_with(config: &Config, n: u64, lim: OracleLimits) -> CurvaturePresence {
    match config {
        Config::Grid(g) => grid_oracle(g.lattice, g.poly, n, lim),
        _ => tuple_oracle(config, n, lim),
    }
}

/// Raises the ceiling until two successive runs agree.
pub fn oracle_stabilized(config: &Config, n: u64) -> Result<(CurvaturePresence, OracleLimits)> {
    let radius = 4 * (n as i64).sqrt() + 8;
    let mut lim = OracleLimits { depth: u32::MAX, radius, ceiling: 2 * n as i64 };
    let mut prev = oracle_with(config, n, lim);
    for _ in 0..5 {
        let next = OracleLimits { ceiling: lim.ceiling * 2, radius: lim.radius * 2, ..lim };
        let cur = oracle_with(config, n, next);
        if cur == prev {
            return Ok((cur, next));
        }
        lim = next;
        prev = cur;
    }
    Err(Error::Verification(format!("oracle did not stabilize up to ceiling {}", lim.ceiling)))
}

fn tuple_oracle(config: &Config, n: u64, lim: OracleLimits) -> CurvaturePresence {
    let mut out = CurvaturePresence::new(n);
    let mut seen = HashSet::from([*config]);
    let mut queue = VecDeque::from([(*config, 0u32)]);
    while let Some((c, d)) = queue.pop_front() {
        let vals = c.seed_values();
        vals.iter().for_each(|&v| out.insert(v as i128));
        out.stats.states += 1;
        if d >= lim.depth || vals.iter().any(|v| v.abs() > lim.ceiling) {
            continue;
        }
        for f in c.all_faces() {
            if let Ok(k) = apply_generator(&c, f) {
                if seen.insert(k) {
                    queue.push_back((k, d + 1));
                }
            }
        }
    }
    out
}

fn quad(lat: Lattice, i: i128, j: i128) -> i128 {
    match lat {
        Lattice::Square => i * i + j * j,
        Lattice::Tri => i * i + i * j + j * j,
    }
}

fn value(lat: Lattice, p: &Poly, (i, j): (i64, i64)) -> i128 {
    let (i, j) = (i as i128, j as i128);
    p.d * quad(lat, i, j) + p.a * i + p.b * j + p.g
}

fn det3(m: [[i128; 3]; 3]) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// The quadratic agreeing with `p` on three sites and taking value `v` at a fourth.
/// The correction is a multiple of the polynomial vanishing on the three sites,
/// whose coefficients are the signed 3x3 minors of their coordinate rows.
fn interpolate(lat: Lattice, p: &Poly, keep: [(i64, i64); 3], far: (i64, i64), v: i128) -> Option<Poly> {
    let rows = keep.map(|(i, j)| {
        let (i, j) = (i as i128, j as i128);
        [quad(lat, i, j), i, j, 1]
    });
    let minor = |skip: usize| {
        let m = rows.map(|r| {
            let mut out = [0; 3];
            let mut k = 0;
            for (c, x) in r.iter().enumerate() {
                if c != skip {
                    out[k] = *x;
                    k += 1;
                }
            }
            out
        });
        det3(m)
    };
    let h = Poly::new(minor(0), -minor(1), minor(2), -minor(3));
    let hf = value(lat, &h, far);
    let delta = v - value(lat, p, far);
    if hf == 0 || delta % hf != 0 {
        return None;
    }
    p.checked_add_scaled(delta / hf, &h)
}

/// Flips a face using the local quadratic relation: the value across the face changes to the
/// other root, the face is kept, and the rest follows by interpolation.
fn local_flip(lat: Lattice, p: &Poly, i: i64, j: i64, up: bool) -> Option<Poly> {
    let f = |s: (i64, i64)| value(lat, p, s);
    let (keep, far, new) = match (lat, up) {
        (Lattice::Square, _) => {
            let (s0, s1, s2, s3) = ((i, j), (i + 1, j), (i + 1, j + 1), (i + 2, j + 1));
            ([s0, s1, s2], s3, 2 * f(s0) + 2 * f(s1) + 6 * f(s2) - f(s3))
        }
        (Lattice::Tri, true) => {
            let (t, u, w, o) = ((i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1));
            ([t, u, w], o, 6 * f(u) + 2 * f(t) + 6 * f(w) - f(o))
        }
        (Lattice::Tri, false) => {
            let (t, u, w, o) = ((i + 1, j + 1), (i + 1, j), (i, j + 1), (i, j));
            ([t, u, w], o, 6 * f(u) + 2 * f(t) + 6 * f(w) - f(o))
        }
    };
    interpolate(lat, p, keep, far, new)
}

fn center(lat: Lattice, p: &Poly) -> (i64, i64) {
    if p.d == 0 {
        return (0, 0);
    }
    let (d, a, b) = (p.d as f64, p.a as f64, p.b as f64);
    let (ci, cj) = match lat {
        Lattice::Square => (-a / (2.0 * d), -b / (2.0 * d)),
        Lattice::Tri => ((b - 2.0 * a) / (3.0 * d), (a - 2.0 * b) / (3.0 * d)),
    };
    (ci.round() as i64, cj.round() as i64)
}

/// Translates a grid so its center is near the origin. Translates have the same values and
/// their flips are translates of each other, so states are deduplicated up to translation.
fn recentered(lat: Lattice, p: &Poly) -> Poly {
    let (ci, cj) = center(lat, p);
    p.translate(lat, -ci, -cj)
}

fn grid_oracle(lat: Lattice, start: Poly, n: u64, lim: OracleLimits) -> CurvaturePresence {
    let mut out = CurvaturePresence::new(n);
    let start = recentered(lat, &start);
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([(start, 0u32)]);
    let shapes: &[bool] = if lat == Lattice::Square { &[true] } else { &[true, false] };
    while let Some((p, depth)) = queue.pop_front() {
        out.stats.states += 1;
        let (ci, cj) = center(lat, &p);
        // beyond this distance from the center every value exceeds n
        let r = if p.d > 0 { ((2 * (n as i128 + p.d)) / p.d).sqrt() as i64 + 2 } else { lim.radius };
        let r = r.min(lim.radius);
        for i in ci - r..=ci + r {
            for j in cj - r..=cj + r {
                out.insert(value(lat, &p, (i, j)));
            }
        }
        if depth >= lim.depth {
            continue;
        }
        // as with tuples, a face is expanded only when all its circles are below the ceiling;
        // a constant grid is invariant under translation, so its origin faces suffice
        let ceil = lim.ceiling as i128;
        let rf = if p.d > 0 { ((2 * (ceil + p.d)) / p.d).sqrt() as i64 + 2 } else { 1 };
        let rf = rf.min(lim.radius);
        for i in ci - rf..=ci + rf {
            for j in cj - rf..=cj + rf {
                for &up in shapes {
                    let corners = GridFace { i, j, up }.vertices(lat);
                    if corners.iter().any(|&s| value(lat, &p, s).abs() > ceil) {
                        continue;
                    }
                    if let Some(q) = local_flip(lat, &p, i, j, up) {
                        let q = recentered(lat, &q);
                        if seen.insert(q) {
                            queue.push_back((q, depth + 1));
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
pub(crate) fn flip_for_tests(lat: Lattice, p: &Poly, i: i64, j: i64, up: bool) -> Option<Poly> {
    local_flip(lat, p, i, j, up)
}
