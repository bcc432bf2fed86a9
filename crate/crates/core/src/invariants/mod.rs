//! The quadratic invariant χ₂, pair-level symbols and their obstructions.

use num_integer::Integer;
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::arith::int::a_prime;
use crate::arith::kron;
use crate::error::{Error, Result};
use crate::kernel::{
    coloring, modular_type, tangent_forms, CircleId, Config, Form, FormClass, Kind,
    ModularType, TangentForms,
};

mod sample;

pub use sample::{random_circle, random_config, random_tangent_pair};


/// Value of χ₂ for a packing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chi2Value {
    Plus,
    Minus,
    NotApplicable,
}

impl Chi2Value {
    pub fn from_sign(s: i8) -> Self {
        if s > 0 {
            Chi2Value::Plus
        } else {
            Chi2Value::Minus
        }
    }

    pub fn sign(self) -> Option<i8> {
        match self {
            Chi2Value::Plus => Some(1),
            Chi2Value::Minus => Some(-1),
            Chi2Value::NotApplicable => None,
        }
    }
}

impl std::fmt::Display for Chi2Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.sign() {
            Some(s) => write!(f, "{s}"),
            None => f.write_str("n/a"),
        }
    }
}

impl Serialize for Chi2Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.sign() {
            Some(v) => s.serialize_i8(v),
            None => s.serialize_str("n/a"),
        }
    }
}

/// A value `rho = Q(x, y)` represented by the tangent form of a circle, coprime to its curvature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RhoWitness {
    pub circle: CircleId,
    pub x: i64,
    pub y: i64,
    pub class: FormClass,
    pub rho: i64,
}

/// Largest `|x|, |y|` tried when looking for witnesses.
pub const WITNESS_SEARCH: i64 = 200;

/// Witnesses for `circle` in argument order (`y` ascending, then `|x|`).
pub fn rho_witnesses(config: &Config, circle: CircleId) -> Result<impl Iterator<Item = RhoWitness>> {
    let a = nonzero(config, circle)?;
    let t: TangentForms = tangent_forms(config, circle)?;
    Ok(TangentForms::arguments(WITNESS_SEARCH).filter_map(move |(x, y)| {
        let (class, rho) = t.represented(x, y)?;
        (rho.gcd(&a) == 1).then_some(RhoWitness { circle, x, y, class, rho })
    }))
}

pub fn find_rho(config: &Config, circle: CircleId) -> Result<RhoWitness> {
    rho_witnesses(config, circle)?
        .next()
        .ok_or_else(|| Error::SearchExhausted(format!("no witness for {circle} within {WITNESS_SEARCH}")))
}

fn nonzero(config: &Config, c: CircleId) -> Result<i64> {
    let a = config.curvature(c)?;
    if a == 0 {
        return Err(Error::InvalidCircle(format!("{c} has curvature 0")));
    }
    Ok(a)
}

/// Whether the type carries a per-circle χ₂ that is constant over the packing.
pub fn has_global_chi2(ty: &ModularType) -> bool {
    matches!(
        (ty.kind, ty.label.as_str()),
        (Kind::Oct, "(0,1,2)" | "(2,4,7)")
            | (Kind::Cube, "(0,1,2)")
            | (Kind::Square, "(1)" | "full")
            | (Kind::Tri, "(1)" | "(3,11)")
    )
}

/// Whether the type carries a per-circle value at all (globally constant or alternating).
pub fn has_circle_chi2(ty: &ModularType) -> bool {
    has_global_chi2(ty) || (ty.kind == Kind::Cube && ty.label == "(0,2,3)")
}

/// The per-circle value from a witness `rho` for a circle of curvature `a`.
pub fn chi2_from_rho(ty: &ModularType, a: i64, rho: i64) -> Result<i8> {
    if !has_circle_chi2(ty) {
        return Err(Error::NotApplicable(format!("{} type {} has no per-circle invariant", ty.kind, ty.label)));
    }
    if a == 0 || rho.gcd(&a) != 1 {
        return Err(Error::NotCoprime(rho, a));
    }
    let ap = a_prime(a);
    Ok(match (ty.kind, ty.label.as_str()) {
        (Kind::Oct, _) => match a.rem_euclid(8) {
            4 => kron(-rho, a),
            _ => kron(rho, ap),
        },
        (Kind::Cube, "(0,1,2)") => match a.rem_euclid(4) {
            2 => kron(-rho, ap),
            _ => kron(rho, a),
        },
        (Kind::Cube, _) => match a.rem_euclid(4) {
            0 => -kron(-rho, a),
            2 => -kron(rho, ap),
            _ => kron(rho, a),
        },
        (Kind::Square, _) => {
            let k = kron(rho, a);
            let parity = if rho % 2 == 0 { 1 } else { -1 };
            match a.rem_euclid(8) {
                2 | 6 | 7 => -k,
                3 => parity * k,
                5 => -parity * k,
                _ => k,
            }
        }
        (Kind::Tri, "(3,11)") if a.rem_euclid(12) == 3 => -kron(rho, a),
        (Kind::Tri, _) => kron(rho, a),
    })
}

/// χ₂ of one circle, from its first witness.
pub fn chi2_circle(config: &Config, circle: CircleId) -> Result<i8> {
    let ty = modular_type(config)?;
    if !has_circle_chi2(&ty) {
        return Err(Error::NotApplicable(format!("{} type {} has no per-circle invariant", ty.kind, ty.label)));
    }
    let w = find_rho(config, circle)?;
    chi2_from_rho(&ty, config.curvature(circle)?, w.rho)
}

/// The raw symbol `(rho / a')` of a witness, before any correction factor.
pub fn raw_symbol(a: i64, w: &RhoWitness) -> i8 {
    kron(w.rho, a_prime(a))
}

/// χ₂ of the packing: computed on the seed circles and on `samples` circles reached by
/// random generator words, checking that every value agrees.
pub fn chi2_packing<R: Rng>(config: &Config, samples: usize, rng: &mut R) -> Result<Chi2Value> {
    let ty = modular_type(config)?;
    if !has_global_chi2(&ty) {
        return Ok(Chi2Value::NotApplicable);
    }
    let mut seen: Option<(i8, String)> = None;
    let mut check = |c: &Config, x: CircleId| -> Result<()> {
        if c.curvature(x)? == 0 {
            return Ok(());
        }
        let v = chi2_circle(c, x)?;
        match &seen {
            None => seen = Some((v, format!("{x} in {c}"))),
            Some((s, at)) if *s != v => {
                return Err(Error::Verification(format!("χ₂ = {s} at {at} but {v} at {x} in {c}")));
            }
            _ => {}
        }
        Ok(())
    };
    for x in config.seed_circles() {
        check(config, x)?;
    }
    for _ in 0..samples {
        let (c, x) = random_circle(config, rng, 12, 1 << 40)?;
        check(&c, x)?;
    }
    let (s, _) = seen.ok_or_else(|| Error::Verification("no circle of nonzero curvature sampled".into()))?;
    Ok(Chi2Value::from_sign(s))
}

/// Pair-level symbol `χ₂(C₁, C₂)` of two tangent circles with coprime curvatures.
pub fn partial_symbol(config: &Config, p: CircleId, q: CircleId) -> Result<i8> {
    let (a, b) = (nonzero(config, p)?, nonzero(config, q)?);
    if !config.adjacent(p, q)? {
        return Err(Error::NotTangent);
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    let ty = modular_type(config)?;
    if has_circle_chi2(&ty) {
        return chi2_from_rho(&ty, a, a + b);
    }
    Ok(match (ty.kind, ty.label.as_str(), a.rem_euclid(8)) {
        (Kind::Oct, "(0,3,6)", 6) => kron(a + b, a_prime(a)),
        (Kind::Oct, "(0,3,6)", 0) => kron(-(a + b), a),
        _ => kron(a + b, a),
    })
}

const TRI_POSITIVE: [(i64, i64); 3] = [(1, 0), (-1, 1), (0, -1)];

/// Orientation factor `ε` of the pair pattern: `partial_symbol(p, q) * ε` is the same for every
/// tangent coprime pair of the packing. `None` for types without a pattern (triangular even types).
pub fn pattern_factor(config: &Config, p: CircleId, q: CircleId) -> Result<Option<i8>> {
    let ty = modular_type(config)?;
    if has_global_chi2(&ty) {
        return Ok(Some(1));
    }
    let a = config.curvature(p)?;
    let sign = |b: bool| if b { 1 } else { -1 };
    Ok(match (ty.kind, ty.label.as_str(), p, q) {
        (Kind::Oct, _, CircleId::Slot(i), CircleId::Slot(j)) => {
            let even = if a % 2 == 0 { i } else { j };
            let first_even = (0..3).find(|&k| Some(k) != crate::kernel::coloring::odd_pair(config)).unwrap();
            let col = coloring(config)?;
            Some(sign(col.color(CircleId::Slot(even)) == Some(first_even as u8)))
        }
        (Kind::Cube, _, CircleId::Slot(_), _) => Some(sign(coloring(config)?.color(p) == Some(0))),
        (Kind::Square, "(5)", CircleId::Site(_, j1), CircleId::Site(_, j2)) => Some(sign(j1 == j2)),
        (Kind::Square, "(3,7)", CircleId::Site(i, j), CircleId::Site(_, j2)) => {
            // the pattern is anchored on the sites ≡ 3; shift columns when the origin is ≡ 7
            let shift = match config {
                Config::Grid(g) => g.at(0, 0).rem_euclid(8) == 7,
                _ => false,
            };
            let dir = if j == j2 { sign(j.rem_euclid(2) == 0) } else { -sign((i + shift as i64).rem_euclid(2) == 0) };
            Some(dir * sign(a.rem_euclid(8) == 7))
        }
        (Kind::Tri, "(7)" | "(5,9)", CircleId::Site(i1, j1), CircleId::Site(i2, j2)) => {
            let forward = sign(TRI_POSITIVE.contains(&(i2 - i1, j2 - j1)));
            Some(if ty.label == "(7)" { forward } else { forward * sign(a.rem_euclid(12) == 5) })
        }
        _ => None,
    })
}

/// Result of checking that `(rho / a)` is constant over the values of a form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolConstancy {
    pub value: i8,
    pub checked: usize,
}

/// Checks the Kronecker symbol `(rho / a)` is constant over all values `rho` of `form` coprime
/// to `a`, for coprime arguments up to `bound`. Requires `2^k a | disc` with `k = 4` when
/// `v2(a) = 1`, `k = 2` when `v2(a) = 3`, and `k = 0` otherwise.
pub fn form_symbol_constancy(form: &Form, a: i64, bound: i64) -> Result<SymbolConstancy> {
    let disc = form.disc();
    if !disc.is_integer() || a == 0 {
        return Err(Error::Invalid("form must be integral and a nonzero".into()));
    }
    let k = match a.trailing_zeros() {
        1 => 4,
        3 => 2,
        _ => 0,
    };
    let need = (a as i128).abs() << k;
    if disc.to_integer() % need != 0 {
        return Err(Error::Invalid(format!("2^{k}·{a} does not divide the discriminant {}", disc.to_integer())));
    }
    let mut value = None;
    let mut checked = 0;
    for y in 0..=bound {
        for x in -bound..=bound {
            if x.gcd(&y) != 1 {
                continue;
            }
            let Some(rho) = form.value(x, y) else { continue };
            if rho.gcd(&a) != 1 {
                continue;
            }
            let s = kron(rho, a);
            match value {
                None => value = Some(s),
                Some(v) if v != s => {
                    return Err(Error::Verification(format!("({rho}/{a}) = {s} differs from {v} at ({x},{y})")))
                }
                _ => {}
            }
            checked += 1;
        }
    }
    let value = value.ok_or_else(|| Error::Verification("no value coprime to a".into()))?;
    Ok(SymbolConstancy { value, checked })
}

/// Shapes of integers excluded when χ₂ = −1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Obstruction {
    None,
    SquaresAndDoubles,
    Squares,
    TripleSquares,
}

impl Obstruction {
    pub fn for_type(ty: &ModularType, chi2: Chi2Value) -> Self {
        if chi2 != Chi2Value::Minus || !has_global_chi2(ty) {
            return Obstruction::None;
        }
        match (ty.kind, ty.label.as_str()) {
            (Kind::Oct | Kind::Cube, _) => Obstruction::SquaresAndDoubles,
            (Kind::Tri, "(3,11)") => Obstruction::TripleSquares,
            _ => Obstruction::Squares,
        }
    }

    pub fn contains(self, n: u64) -> bool {
        let sq = |m: u64| {
            let r = m.isqrt();
            r * r == m
        };
        match self {
            Obstruction::None => false,
            Obstruction::SquaresAndDoubles => sq(n) || (n % 2 == 0 && sq(n / 2)),
            Obstruction::Squares => sq(n),
            Obstruction::TripleSquares => n % 3 == 0 && sq(n / 3),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Obstruction::None => "none",
            Obstruction::SquaresAndDoubles => "n^2, 2n^2",
            Obstruction::Squares => "n^2",
            Obstruction::TripleSquares => "3n^2",
        }
    }
}

/// Colors of an octahedral partial-type packing: the odd pair and the two even pairs split by
/// the sign of their pair symbol with the odd circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PartialColors {
    pub yellow: usize,
    pub red: usize,
    pub blue: usize,
}

/// Splits the even pairs of an octahedral partial-type configuration into the class whose
/// symbol with the odd circles is `+1` and the class where it is `-1`.
pub fn partial_colors(config: &Config) -> Result<PartialColors> {
    let Config::Oct(o) = config else {
        return Err(Error::NotApplicable("partial colors are octahedral".into()));
    };
    let ty = modular_type(config)?;
    if has_global_chi2(&ty) {
        return Err(Error::NotApplicable(format!("type {} has a global invariant", ty.label)));
    }
    let pairs = crate::kernel::oct::PAIRS;
    let yellow = crate::kernel::coloring::odd_pair(config).ok_or_else(|| Error::Invalid("no odd pair".into()))?;
    let mut symbol = [0i8; 3];
    for (k, &(e, _)) in pairs.iter().enumerate() {
        if k == yellow {
            continue;
        }
        let (p, q) = (CircleId::Slot(pairs[yellow].0), CircleId::Slot(e));
        let (a, b) = (o.v[pairs[yellow].0], o.v[e]);
        symbol[k] = if a != 0 && b != 0 && a.gcd(&b) == 1 {
            partial_symbol(config, p, q)?
        } else {
            partial_symbol(config, CircleId::Slot(pairs[yellow].1), q)?
        };
    }
    let even: Vec<usize> = (0..3).filter(|&k| k != yellow).collect();
    let (red, blue) = if symbol[even[0]] > 0 { (even[0], even[1]) } else { (even[1], even[0]) };
    if symbol[red] == symbol[blue] {
        return Err(Error::Verification("even classes carry the same pair symbol".into()));
    }
    Ok(PartialColors { yellow, red, blue })
}
