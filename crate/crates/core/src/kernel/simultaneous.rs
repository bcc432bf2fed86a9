//! Circles tangent to both members of a tangent pair, and coprime insertion.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

use super::forms::{cube_frame, oct_frame};
use super::grid::Lattice;
use super::{CircleId, Config};

/// The quadratic family of circles (or circle pairs) attached to a tangent pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairFamily {
    /// `k(n) = q n^2 + l n + c0`, each tangent to both circles.
    Single { q: i64, l: i64, c0: i64 },
    /// `(k(n), l(n))` with `k` tangent to the first circle, `l` to the second, `k` tangent to `l`.
    Double { q: i64, k: (i64, i64), l: (i64, i64) },
}

impl PairFamily {
    /// Value(s) at parameter `n`.
    pub fn at(&self, n: i64) -> Option<(i64, Option<i64>)> {
        let (n, sq) = (n as i128, (n as i128) * (n as i128));
        let lin = |q: i64, c0: i64, c1: i64| i64::try_from(q as i128 * (sq - n) + c0 as i128 * (1 - n) + c1 as i128 * n).ok();
        match *self {
            PairFamily::Single { q, l, c0 } => {
                i64::try_from(q as i128 * sq + l as i128 * n + c0 as i128).ok().map(|v| (v, None))
            }
            PairFamily::Double { q, k, l } => Some((lin(q, k.0, k.1)?, Some(lin(q, l.0, l.1)?))),
        }
    }
}

fn at(config: &Config, c: CircleId) -> Result<i64> {
    config.curvature(c)
}

/// The parametrized family for the tangent pair `(p, q)`.
pub fn pair_family(config: &Config, p: CircleId, q: CircleId) -> Result<PairFamily> {
    if !config.adjacent(p, q)? {
        return Err(Error::NotTangent);
    }
    let (a, b) = (at(config, p)?, at(config, q)?);
    match (config, p, q) {
        (Config::Oct(o), CircleId::Slot(s), CircleId::Slot(t)) => {
            let (_, c, d) = oct_frame(s, t);
            let (c, d) = (o.v[c], o.v[d]);
            Ok(PairFamily::Single { q: 2 * (a + b), l: -2 * a - 2 * b - c + d, c0: c })
        }
        (Config::Cube(cfg), CircleId::Slot(s), CircleId::Slot(t)) => {
            let f = cube_frame(s, Some(t));
            let v = |i: usize| cfg.v[f[i]];
            Ok(PairFamily::Double { q: a + b, k: (v(3), v(4)), l: (v(2), v(5)) })
        }
        (Config::Grid(g), CircleId::Site(i, j), CircleId::Site(i2, j2)) => {
            let (di, dj) = (i2 - i, j2 - j);
            let val = |x: i64, y: i64| i64::try_from(g.at(x, y)).map_err(|_| Error::Overflow);
            match g.lattice {
                Lattice::Square => {
                    let (pi, pj) = (-dj, di);
                    let (c, e) = (val(i + pi, j + pj)?, val(i - pi, j - pj)?);
                    let (d, f) = (val(i2 + pi, j2 + pj)?, val(i2 - pi, j2 - pj)?);
                    Ok(PairFamily::Double { q: 2 * (a + b), k: (c, e), l: (d, f) })
                }
                Lattice::Tri => {
                    // common neighbours: v rotated by +60 and -60 degrees
                    let (bi, bj) = (i - dj, j + di + dj);
                    let (ti, tj) = (i + di + dj, j - di);
                    let (tb, td) = (val(bi, bj)?, val(ti, tj)?);
                    Ok(PairFamily::Single { q: 3 * (a + b), l: -3 * (a + b) - tb + td, c0: tb })
                }
            }
        }
        _ => Err(Error::InvalidCircle(format!("{p:?}, {q:?}"))),
    }
}

/// The `n`-th curvature (or curvature pair) tangent to both circles of the pair.
pub fn simultaneous_tangent(config: &Config, pair: (CircleId, CircleId), n: i64) -> Result<(i64, Option<i64>)> {
    pair_family(config, pair.0, pair.1)?.at(n).ok_or(Error::Overflow)
}

/// Result of a coprime insertion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Insertion {
    pub n: i64,
    /// Inserted curvature tangent to the first circle (and to the second, for single families).
    pub near_first: i64,
    /// Inserted curvature tangent to the second circle, for pair families.
    pub near_second: Option<i64>,
}

/// Parameters `0, 1, -1, 2, -2, ...` up to `bound`.
pub fn search_order(bound: i64) -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=bound).flat_map(|k| [k, -k]))
}

fn pow2(n: i64) -> bool {
    let n = n.unsigned_abs();
    n != 0 && n.is_power_of_two()
}

/// Finds an inserted circle (or pair) with the gcd guarantees of the family's insertion rule.
///
/// Octahedral: coprime to both when both curvatures are even; even and coprime to the odd
/// one when exactly one is odd. Cubic: `gcd(a, k) = gcd(l, b) = 1` and `gcd(k, l)` a power of 2.
/// Square: the same gcds divide 4, 4 and 8. Triangular: gcds with both divide 3.
pub fn coprime_insert(config: &Config, pair: (CircleId, CircleId), bound: i64) -> Result<Insertion> {
    let fam = pair_family(config, pair.0, pair.1)?;
    let (a, b) = (at(config, pair.0)?, at(config, pair.1)?);
    let ok = |k: i64, l: Option<i64>| -> bool {
        match (config, l) {
            (Config::Oct(_), _) => match (a % 2 == 0, b % 2 == 0) {
                (true, true) => k.gcd(&a) == 1 && k.gcd(&b) == 1,
                (false, true) => k % 2 == 0 && k.gcd(&a) == 1,
                (true, false) => k % 2 == 0 && k.gcd(&b) == 1,
                (false, false) => k.gcd(&a) == 1 && k.gcd(&b) == 1,
            },
            (Config::Cube(_), Some(l)) => k.gcd(&a) == 1 && l.gcd(&b) == 1 && pow2(k.gcd(&l)),
            (Config::Grid(g), Some(l)) if g.lattice == Lattice::Square => {
                4 % k.gcd(&a) == 0 && 4 % l.gcd(&b) == 0 && 8 % k.gcd(&l).max(1) == 0
            }
            (Config::Grid(_), None) => 3 % k.gcd(&a).max(1) == 0 && 3 % k.gcd(&b).max(1) == 0,
            _ => false,
        }
    };
    for n in search_order(bound) {
        let Some((k, l)) = fam.at(n) else { continue };
        if k != 0 && l != Some(0) && ok(k, l) {
            return Ok(Insertion { n, near_first: k, near_second: l });
        }
    }
    Err(Error::SearchExhausted(format!("no insertion for ({a}, {b}) with |n| <= {bound}")))
}
