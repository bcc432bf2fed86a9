//! Ford circles of the strip packings and the dual circles orthogonal to the real axis.

use num_integer::{Integer, Roots};

use crate::arith::QuadRat;
use crate::geometry::{inner_product, InversiveCircle};

use super::forms::FormClass;
use super::Kind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FordCircle {
    pub x: i64,
    pub y: i64,
    pub class: FormClass,
    pub circle: InversiveCircle,
}

/// Coordinate pattern `(k0 x^2, k1 y^2, k2 xy sqrt(d), 1)` with rational `k`s as `(num, den)`.
struct Pattern {
    cocurv: (i64, i64),
    curv: (i64, i64),
    h1: (i64, i64),
}

fn pattern(kind: Kind, class: FormClass) -> Pattern {
    use FormClass::*;
    let p = |cocurv, curv, h1| Pattern { cocurv, curv, h1 };
    match (kind, class) {
        (Kind::Oct, Alpha) => p((4, 1), (2, 1), (2, 1)),
        (Kind::Oct, Beta) => p((2, 1), (1, 1), (1, 1)),
        (Kind::Cube, _) => p((8, 1), (1, 1), (2, 1)),
        (Kind::Square, Alpha) => p((4, 1), (1, 1), (2, 1)),
        (Kind::Square, Beta) => p((8, 1), (2, 1), (4, 1)),
        (Kind::Tri, Alpha) => p((12, 1), (1, 1), (2, 1)),
        (Kind::Tri, Beta) => p((4, 1), (1, 3), (2, 3)),
    }
}

/// Class of the Ford circle at `(x, y)`.
pub fn ford_class(kind: Kind, x: i64, y: i64) -> FormClass {
    let alpha = match kind {
        Kind::Oct => x.rem_euclid(2) == 1,
        Kind::Cube => true,
        Kind::Square => (x * y).rem_euclid(2) == 1,
        Kind::Tri => y.rem_euclid(3) != 0,
    };
    if alpha {
        FormClass::Alpha
    } else {
        FormClass::Beta
    }
}

fn build(kind: Kind, class: FormClass, x: i64, y: i64) -> InversiveCircle {
    let d = kind.field_tag();
    let p = pattern(kind, class);
    let rat = |(n, m): (i64, i64), v: i64| QuadRat::from_parts(d, (n * v, m), (0, 1));
    let h1 = if d == 1 {
        QuadRat::from_parts(1, (p.h1.0 * x * y, p.h1.1), (0, 1))
    } else {
        QuadRat::from_parts(d, (0, 1), (p.h1.0 * x * y, p.h1.1))
    };
    InversiveCircle::new(rat(p.cocurv, x * x), rat(p.curv, y * y), h1, QuadRat::one(d)).expect("Ford circle has unit norm")
}

/// The Ford circle with parameters `(x, y)`, `gcd(x, y) = 1`.
pub fn ford_circle(kind: Kind, x: i64, y: i64) -> Option<FordCircle> {
    if x.gcd(&y) != 1 {
        return None;
    }
    let (x, y) = if y < 0 || (y == 0 && x < 0) { (-x, -y) } else { (x, y) };
    let class = ford_class(kind, x, y);
    Some(FordCircle { x, y, class, circle: build(kind, class, x, y) })
}

/// All Ford circles with `y >= 0`, `|x|, |y| <= bound`.
pub fn ford_circles(kind: Kind, bound: i64) -> Vec<FordCircle> {
    let mut out = Vec::new();
    for y in 0..=bound {
        for x in -bound..=bound {
            if x.gcd(&y) == 1 && (y > 0 || x == 1) {
                out.push(ford_circle(kind, x, y).unwrap());
            }
        }
    }
    out
}

/// Recovers `(x, y)` from a circle, if it is a Ford circle of this family.
pub fn ford_params(kind: Kind, c: &InversiveCircle) -> Option<FordCircle> {
    if c.field() != kind.field_tag() || c.h2 != QuadRat::one(c.field()) {
        return None;
    }
    for class in [FormClass::Alpha, FormClass::Beta] {
        let p = pattern(kind, class);
        let sq = |v: &QuadRat, (n, m): (i64, i64)| -> Option<i64> {
            let t = v.to_i64()?.checked_mul(m)?;
            if t % n != 0 || t / n < 0 {
                return None;
            }
            let s = (t / n).sqrt();
            (s * s == t / n).then_some(s)
        };
        let (Some(ax), Some(y)) = (sq(&c.cocurv, p.cocurv), sq(&c.curv, p.curv)) else {
            continue;
        };
        for x in [ax, -ax] {
            if let Some(f) = ford_circle(kind, x, y) {
                if f.class == class && &f.circle == c {
                    return Some(f);
                }
            }
        }
    }
    None
}

fn circ(d: u8, parts: [((i64, i64), (i64, i64)); 4]) -> InversiveCircle {
    let [a, b, c, e] = parts.map(|(r, s)| QuadRat::from_parts(d, r, s));
    InversiveCircle::new(a, b, c, e).expect("dual circle has unit norm")
}

/// Dual circles orthogonal to the real axis bounding the fundamental strip region.
pub fn dual_circles(kind: Kind) -> Vec<InversiveCircle> {
    let z = (0, 1);
    let n = |k: i64| (k, 1);
    match kind {
        Kind::Oct => vec![
            circ(2, [(z, z), (z, z), (n(-1), z), (z, z)]),
            circ(2, [(z, n(4)), (z, z), (n(1), z), (z, z)]),
            circ(2, [(z, z), (z, n(1)), (n(1), z), (z, z)]),
            circ(2, [(z, n(4)), (z, n(1)), (n(3), z), (z, z)]),
        ],
        Kind::Cube => vec![
            circ(2, [(z, z), (z, z), (n(-1), z), (z, z)]),
            circ(2, [(z, n(4)), (z, z), (n(1), z), (z, z)]),
            circ(2, [(z, z), (z, (1, 2)), (n(1), z), (z, z)]),
        ],
        Kind::Square => vec![
            circ(1, [(n(4), z), (z, z), (n(1), z), (z, z)]),
            circ(1, [(n(4), z), (z, z), (n(-1), z), (z, z)]),
            circ(1, [(z, z), (n(1), z), (n(1), z), (z, z)]),
            circ(1, [(z, z), (n(1), z), (n(-1), z), (z, z)]),
        ],
        Kind::Tri => vec![
            circ(3, [(z, z), (z, z), (n(-1), z), (z, z)]),
            circ(3, [(z, n(4)), (z, z), (n(1), z), (z, z)]),
            circ(3, [(z, z), (z, n(1)), (n(1), z), (z, z)]),
            circ(3, [(z, n(8)), (z, n(1)), (n(5), z), (z, z)]),
            circ(3, [(z, n(4)), (z, n(2)), (n(5), z), (z, z)]),
            circ(3, [(z, n(8)), (z, n(2)), (n(7), z), (z, z)]),
        ],
    }
}

/// Reflection identities `d_k : (x, y) -> (x', y')` stated for the octahedral and cubic strips.
pub fn reflection_table(kind: Kind) -> Vec<fn(i64, i64) -> (i64, i64)> {
    match kind {
        Kind::Oct => vec![|x, y| (-x, y), |x, y| (4 * y - x, y), |x, y| (x, 2 * x - y), |x, y| (4 * y - 3 * x, 3 * y - 2 * x)],
        Kind::Cube => vec![|x, y| (-x, y), |x, y| (2 * y - x, y), |x, y| (x, 2 * x - y)],
        Kind::Square => vec![|x, y| (2 * y - x, y), |x, y| (-2 * y - x, y), |x, y| (x, 2 * x - y), |x, y| (x, -2 * x - y)],
        Kind::Tri => Vec::new(),
    }
}

/// Inner products `<c(x, y), d_k>` as integer multiples of `sqrt(d)` for class alpha;
/// class beta is half of each (octahedral) or equal (cubic).
pub fn inner_product_table(kind: Kind) -> Vec<fn(i64, i64) -> i64> {
    match kind {
        Kind::Oct => vec![
            |x, y| -2 * x * y,
            |x, y| 2 * (x - 2 * y) * y,
            |x, y| 2 * x * (y - x),
            |x, y| 2 * (y - x) * (x - 2 * y),
        ],
        Kind::Cube => vec![|x, y| -2 * x * y, |x, y| 2 * (x - y) * y, |x, y| 2 * x * (y - x)],
        _ => Vec::new(),
    }
}

/// Ford circles meeting some dual circle (`|<c, d>| < 1`), within the given bound.
pub fn circles_meeting_duals(kind: Kind, bound: i64) -> Vec<(i64, i64)> {
    let duals = dual_circles(kind);
    let one = QuadRat::one(kind.field_tag());
    let mut out = Vec::new();
    for f in ford_circles(kind, bound) {
        let hit = duals.iter().any(|d| {
            let ip = inner_product(&f.circle, d).unwrap();
            let gap = &one - &ip.clone();
            let gap2 = &one + &ip;
            gap.signum().is_gt() && gap2.signum().is_gt()
        });
        if hit {
            out.push((f.x, f.y));
        }
    }
    out
}
