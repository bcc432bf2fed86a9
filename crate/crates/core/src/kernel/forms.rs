//! Binary quadratic forms parametrizing the circles tangent to a fixed circle.

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

use super::cube;
use super::grid::Lattice;
use super::oct;
use super::{CircleId, Config};

/// `(a x^2 + b xy + c y^2) / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Form {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub den: i64,
}

impl Form {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Form { a, b, c, den: 1 }
    }

    pub fn scaled_down(self, k: i64) -> Self {
        Form { den: self.den * k, ..self }
    }

    pub fn disc(&self) -> Ratio<i128> {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        Ratio::new(b * b - 4 * a * c, (self.den as i128).pow(2))
    }

    /// The exact value, or `None` if it is not an integer.
    pub fn value(&self, x: i64, y: i64) -> Option<i64> {
        let (x, y) = (x as i128, y as i128);
        let n = self.a as i128 * x * x + self.b as i128 * x * y + self.c as i128 * y * y;
        let (q, r) = n.div_rem(&(self.den as i128));
        if r != 0 {
            return None;
        }
        i64::try_from(q).ok()
    }
}

/// Which member of a split parametrization a pair `(x, y)` falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FormClass {
    Alpha,
    Beta,
}

/// Domain rule selecting between the two forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Domain {
    /// alpha when `x` is odd
    XOdd,
    /// a single form
    Single,
    /// alpha when `xy` is odd
    XYOdd,
    /// alpha when `3` does not divide `y`
    YNotMultipleOf3,
}

impl Domain {
    pub fn class(self, x: i64, y: i64) -> FormClass {
        let alpha = match self {
            Domain::XOdd => x.rem_euclid(2) == 1,
            Domain::Single => true,
            Domain::XYOdd => (x * y).rem_euclid(2) == 1,
            Domain::YNotMultipleOf3 => y.rem_euclid(3) != 0,
        };
        if alpha {
            FormClass::Alpha
        } else {
            FormClass::Beta
        }
    }
}

/// The tangent-circle parametrization around one circle of curvature `a`:
/// the tangent curvatures are `Q(x, y) - a` over coprime `(x, y)` with `y >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TangentForms {
    pub a: i64,
    pub alpha: Form,
    pub beta: Form,
    pub domain: Domain,
}

impl TangentForms {
    pub fn form(&self, class: FormClass) -> &Form {
        match class {
            FormClass::Alpha => &self.alpha,
            FormClass::Beta => &self.beta,
        }
    }

    /// The represented value `Q(x, y)` with the form chosen by the domain rule.
    pub fn represented(&self, x: i64, y: i64) -> Option<(FormClass, i64)> {
        if x.gcd(&y) != 1 {
            return None;
        }
        let class = self.domain.class(x, y);
        self.form(class).value(x, y).map(|v| (class, v))
    }

    /// Curvature of the tangent circle at `(x, y)`.
    pub fn curvature(&self, x: i64, y: i64) -> Option<i64> {
        self.represented(x, y).map(|(_, v)| v - self.a)
    }

    /// Coprime `(x, y)` with `y >= 0`, `|x|, |y| <= bound`, ordered by `y` then `|x|`, `x`.
    pub fn arguments(bound: i64) -> impl Iterator<Item = (i64, i64)> {
        (0..=bound).flat_map(move |y| {
            (0..=bound)
                .flat_map(|m| if m == 0 { vec![0] } else { vec![m, -m] })
                .filter(move |&x| x.gcd(&y) == 1 && (y > 0 || x == 1))
                .map(move |x| (x, y))
        })
    }
}

/// `(b, c, d)` frame for octahedral slot `s` with first neighbor `nb`.
pub fn oct_frame(s: usize, nb: usize) -> (usize, usize, usize) {
    let rest: Vec<usize> = (0..6).filter(|&j| ![s, oct::opposite(s), nb, oct::opposite(nb)].contains(&j)).collect();
    (nb, rest[0], rest[1])
}

/// An automorphism of the cube sending vertex 0 to `s` (and 1 to `t` if given).
pub fn cube_frame(s: usize, t: Option<usize>) -> [usize; 8] {
    *cube::automorphisms()
        .iter()
        .find(|p| p[0] == s && t.map_or(true, |t| p[1] == t))
        .expect("cube symmetry")
}

pub fn tangent_forms(config: &Config, circle: CircleId) -> Result<TangentForms> {
    let a = config.curvature(circle)?;
    match (config, circle) {
        (Config::Oct(o), CircleId::Slot(s)) => {
            let nb = (0..6).find(|&j| j != s && j != oct::opposite(s)).unwrap();
            let (b, c, d) = oct_frame(s, nb);
            let (b, c, d) = (o.v[b], o.v[c], o.v[d]);
            let alpha = Form::new(a + c, d - 2 * a - 2 * b - c, 2 * (a + b));
            Ok(TangentForms { a, alpha, beta: alpha.scaled_down(2), domain: Domain::XOdd })
        }
        (Config::Cube(q), CircleId::Slot(s)) => {
            let p = cube_frame(s, None);
            let (b, d, e) = (q.v[p[1]], q.v[p[3]], q.v[p[4]]);
            let f = Form::new(a + b, -(a + b + d - e), a + d);
            Ok(TangentForms { a, alpha: f, beta: f, domain: Domain::Single })
        }
        (Config::Grid(g), CircleId::Site(i, j)) => {
            let at = |x: i64, y: i64| i64::try_from(g.at(x, y)).map_err(|_| Error::Overflow);
            match g.lattice {
                Lattice::Square => {
                    let (b, d, c, e) = (at(i - 1, j)?, at(i + 1, j)?, at(i, j + 1)?, at(i, j - 1)?);
                    let beta = Form::new(a + b, c - e, a + d);
                    Ok(TangentForms { a, alpha: beta.scaled_down(2), beta, domain: Domain::XYOdd })
                }
                Lattice::Tri => {
                    let (b, c, d) = (at(i + 1, j)?, at(i, j + 1)?, at(i - 1, j + 1)?);
                    let alpha = Form::new(3 * (a + b), -3 * a - b - 3 * c + d, a + c);
                    Ok(TangentForms { a, alpha, beta: alpha.scaled_down(3), domain: Domain::YNotMultipleOf3 })
                }
            }
        }
        _ => Err(Error::InvalidCircle(format!("{circle:?}"))),
    }
}

/// Discriminants of `(Q_alpha, Q_beta)` divided by `a^2` for each family.
pub fn expected_disc_over_a2(kind: super::Kind) -> (Ratio<i128>, Ratio<i128>) {
    use super::Kind::*;
    let r = |n: i128, d: i128| Ratio::new(n, d);
    match kind {
        Oct => (r(-8, 1), r(-2, 1)),
        Cube => (r(-8, 1), r(-8, 1)),
        Square => (r(-4, 1), r(-16, 1)),
        Tri => (r(-12, 1), r(-4, 3)),
    }
}
