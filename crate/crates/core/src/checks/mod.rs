//! Self-verification suites shared by the command line and the acceptance run.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{kron, QuadRat};
use crate::enumeration::{enumerate_curvatures, oracle_stabilized, walk_states, CurvaturePresence, EnumOptions};
use crate::error::{Error, Result};
use crate::geometry::{inner_product, reflect};
use crate::invariants::{
    chi2_circle, chi2_from_rho, chi2_packing, has_circle_chi2, has_global_chi2, partial_symbol, pattern_factor,
    random_circle, random_tangent_pair, raw_symbol, rho_witnesses, Chi2Value, Obstruction,
};
use crate::kernel::ford::{self, circles_meeting_duals, reflection_table};
use crate::kernel::grid::for_each_le;
use crate::kernel::modular::forbidden_tangent_sums;
use crate::kernel::{
    apply_generator, dual_circles, ford_circle, ford_circles, ford_params, modular_type, CircleId, Config, FaceId,
    FormClass, Kind, ModularType,
};


#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Ford,
    Node,
    Edge,
    Oracle,
    Modular,
    Obstruction,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Ford, Suite::Node, Suite::Edge, Suite::Oracle, Suite::Modular, Suite::Obstruction];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ford => "ford",
            Suite::Node => "node",
            Suite::Edge => "edge",
            Suite::Oracle => "oracle",
            Suite::Modular => "modular",
            Suite::Obstruction => "obstruction",
        }
    }

    /// The Ford suite is family-wide; every other suite runs on one packing.
    pub fn needs_config(self) -> bool {
        self != Suite::Ford
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Invalid(format!("unknown suite '{s}'")))
    }
}

/// Sizes of the suites.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Largest `|x|, |y|` of the Ford circles checked.
    pub bound: i64,
    /// Circles sampled by the node suite.
    pub circles: usize,
    /// Witnesses compared per sampled circle.
    pub witnesses: usize,
    /// Tangent coprime pairs sampled by the edge suite.
    pub pairs: usize,
    /// Random generator applications in the modular suite.
    pub moves: usize,
    /// Curvature bound for the oracle, modular and obstruction suites.
    pub n: u64,
    pub rng_seed: u64,
    pub enumeration: EnumOptions,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            bound: 20,
            circles: 200,
            witnesses: 20,
            pairs: 10_000,
            moves: 100_000,
            n: 2000,
            rng_seed: 0,
            enumeration: EnumOptions::default(),
        }
    }
}

/// Kept failure messages per report; the count covers all of them.
const KEEP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    /// The packing checked, or the families for the Ford suite.
    pub subject: String,
    pub checked: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: Suite, subject: impl Into<String>) -> Self {
        SuiteReport { suite, subject: subject.into(), checked: 0, failed: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < KEEP {
            self.failures.push(msg);
        }
    }

    fn absorb<T>(&mut self, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.fail(e.to_string());
                None
            }
        }
    }

    /// `Err(Verification)` listing the first failures, if any.
    pub fn into_result(self) -> Result<Self> {
        if self.passed() {
            return Ok(self);
        }
        Err(Error::Verification(format!(
            "{} suite on {}: {} of {} checks failed; first: {}",
            self.suite,
            self.subject,
            self.failed,
            self.checked,
            self.failures.first().map(String::as_str).unwrap_or("")
        )))
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(f, "{} [{}]: {} checks, {} failed: {status}", self.suite, self.subject, self.checked, self.failed)?;
        for m in &self.failures {
            write!(f, "\n  {m}")?;
        }
        Ok(())
    }
}

/// Runs one suite. `config` is ignored by the Ford suite and required by the others.
pub fn run_suite(suite: Suite, config: Option<&Config>, opts: &SuiteOptions) -> Result<SuiteReport> {
    if suite == Suite::Ford {
        return Ok(ford_suite(opts.bound));
    }
    let c = config.ok_or_else(|| Error::Invalid(format!("the {suite} suite needs a packing")))?;
    match suite {
        Suite::Node => node_suite(c, opts),
        Suite::Edge => edge_suite(c, opts),
        Suite::Oracle => oracle_suite(c, opts),
        Suite::Modular => modular_suite(c, opts),
        Suite::Obstruction => obstruction_suite(c, opts),
        Suite::Ford => unreachable!(),
    }
}

fn rng(opts: &SuiteOptions) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.rng_seed)
}

/// Base circles of each strip packing tangent to the real axis, as `(x, y)`.
fn base_params(kind: Kind) -> &'static [(i64, i64)] {
    match kind {
        Kind::Oct => &[(1, 0), (0, 1), (1, 1), (2, 1)],
        Kind::Cube => &[(1, 0), (0, 1), (1, 1)],
        Kind::Square => &[(1, 0), (0, 1), (1, 1), (-1, 1)],
        Kind::Tri => &[(1, 0), (0, 1), (1, 1), (1, 2), (2, 3), (1, 3)],
    }
}

/// Exact checks of the Ford parametrizations against the dual circles, for `|x|, |y| <= bound`:
/// the reflection and inner-product tables (octahedral and cubic), closure of the parametrized set
/// under every dual, and that only the base circles meet a dual.
pub fn ford_suite(bound: i64) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Ford, "all families");
    for kind in Kind::ALL {
        let d = kind.field_tag();
        let duals = dual_circles(kind);
        for (k, dual) in duals.iter().enumerate() {
            rep.check(dual.norm() == QuadRat::one(d) && dual.h2.is_zero(), || {
                format!("{kind} dual {} is not a unit circle orthogonal to the axis", k + 1)
            });
        }
        for &(x, y) in base_params(kind) {
            rep.check(ford_circle(kind, x, y).is_some(), || format!("{kind}: base ({x},{y}) is not parametrized"));
        }
        let refl = reflection_table(kind);
        let ips = ford::inner_product_table(kind);
        for f in ford_circles(kind, bound) {
            let back = ford_params(kind, &f.circle);
            rep.check(back.as_ref() == Some(&f), || format!("{kind}: ({},{}) does not round-trip", f.x, f.y));
            for (k, dual) in duals.iter().enumerate() {
                let Some(r) = rep.absorb(reflect(&f.circle, dual)) else { continue };
                let image = ford_params(kind, &r);
                rep.check(image.as_ref().is_some_and(|g| g.class == f.class), || {
                    format!("{kind}: d{} maps ({},{}) outside the {:?} circles", k + 1, f.x, f.y, f.class)
                });
                if let (Some(t), Some(image)) = (refl.get(k), &image) {
                    let (x2, y2) = t(f.x, f.y);
                    let want = ford_circle(kind, x2, y2);
                    rep.check(want.as_ref().is_some_and(|w| w.circle == image.circle), || {
                        format!("{kind}: d{} on ({},{}) is not ({x2},{y2})", k + 1, f.x, f.y)
                    });
                }
                if let Some(ip) = ips.get(k) {
                    let v = ip(f.x, f.y);
                    let v = if kind == Kind::Oct && f.class == FormClass::Beta { v / 2 } else { v };
                    let want = QuadRat::from_parts(d, (0, 1), (v, 1));
                    let got = rep.absorb(inner_product(&f.circle, dual));
                    rep.check(got.as_ref() == Some(&want), || {
                        format!("{kind}: <c({},{}), d{}> = {got:?}, table says {v} sqrt {d}", f.x, f.y, k + 1)
                    });
                }
            }
        }
        let mut meet = circles_meeting_duals(kind, bound);
        meet.sort();
        let mut base = base_params(kind).to_vec();
        base.sort();
        rep.check(meet == base, || format!("{kind}: circles meeting duals {meet:?}, base {base:?}"));
    }
    rep
}

/// How the raw symbols of one circle must behave across its two witness forms.
enum NodeRule {
    /// Every witness gives the same symbol.
    Constant,
    /// Constant within each form, opposite between the forms.
    Flip,
    /// Nothing is predicted.
    Open,
}

fn node_rule(kind: Kind, a: i64) -> NodeRule {
    match kind {
        Kind::Oct | Kind::Square if [3, 5].contains(&a.rem_euclid(8)) => NodeRule::Flip,
        Kind::Oct | Kind::Square | Kind::Cube => NodeRule::Constant,
        Kind::Tri => {
            let r = a.rem_euclid(24);
            if a % 3 == 0 || [1, 2, 11, 13, 22, 23].contains(&r) {
                NodeRule::Constant
            } else if [5, 7, 10, 14, 17, 19].contains(&r) {
                NodeRule::Flip
            } else {
                NodeRule::Open
            }
        }
    }
}

/// The symbol compared at a node: `(rho / a)` for square packings, `(rho / a')` otherwise.
fn node_symbol(kind: Kind, a: i64, w: &crate::invariants::RhoWitness) -> i8 {
    match kind {
        Kind::Square => kron(w.rho, a),
        _ => raw_symbol(a, w),
    }
}

/// Witness independence at sampled circles: the per-circle invariant agrees on the first
/// `witnesses` witnesses, and the raw symbols follow the constant and sign-flip cases by residue.
pub fn node_suite(config: &Config, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Node, config.to_string());
    let ty = modular_type(config)?;
    let kind = config.kind();
    let mut r = rng(opts);
    let scan = opts.witnesses.max(60);
    for _ in 0..opts.circles {
        let (k, x) = random_circle(config, &mut r, 10, 1 << 40)?;
        let a = k.curvature(x)?;
        let Some(ws) = rep.absorb(rho_witnesses(&k, x)) else { continue };
        let ws: Vec<_> = ws.take(scan).collect();
        rep.check(ws.len() >= opts.witnesses, || format!("{k} {x}: only {} witnesses", ws.len()));
        if has_circle_chi2(&ty) {
            let vals: Vec<i8> =
                ws.iter().take(opts.witnesses).filter_map(|w| chi2_from_rho(&ty, a, w.rho).ok()).collect();
            rep.check(vals.len() == ws.len().min(opts.witnesses) && vals.iter().all(|&v| v == vals[0]), || {
                format!("{k} {x}: per-circle values {vals:?}")
            });
        }
        let (mut al, mut be) = (Vec::new(), Vec::new());
        for w in &ws {
            match w.class {
                FormClass::Alpha => al.push(node_symbol(kind, a, w)),
                FormClass::Beta => be.push(node_symbol(kind, a, w)),
            }
        }
        let same = |v: &[i8]| v.iter().all(|&s| s == v[0]);
        match node_rule(kind, a) {
            NodeRule::Constant => {
                let all: Vec<i8> = al.iter().chain(&be).copied().collect();
                rep.check(same(&all), || format!("{k} {x}: a = {a}, symbols {all:?} not constant"));
            }
            NodeRule::Flip if !al.is_empty() && !be.is_empty() => {
                rep.check(same(&al) && same(&be) && al[0] == -be[0], || {
                    format!("{k} {x}: a = {a}, alpha {al:?} beta {be:?} do not flip")
                });
            }
            _ => {}
        }
    }
    Ok(rep)
}

/// Agreement across tangent coprime pairs: both circles carry the same χ₂ (types with a global
/// invariant), opposite values (cubic type (0,2,3)), or a pair symbol constant up to the
/// orientation pattern (other types with a pattern).
pub fn edge_suite(config: &Config, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Edge, config.to_string());
    let ty = modular_type(config)?;
    let mut r = rng(opts);
    let mut pattern = None;
    let mut n = 0;
    let mut tries = 0usize;
    while n < opts.pairs {
        tries += 1;
        if tries > 50 * opts.pairs.max(1) {
            rep.fail(format!("only {n} tangent coprime pairs found in {tries} draws"));
            break;
        }
        let (k, x, y) = random_tangent_pair(config, &mut r, 10, 1 << 40)?;
        let (a, b) = (k.curvature(x)?, k.curvature(y)?);
        if a.gcd(&b) != 1 {
            continue;
        }
        n += 1;
        if has_global_chi2(&ty) {
            let (Some(u), Some(v)) = (rep.absorb(chi2_circle(&k, x)), rep.absorb(chi2_circle(&k, y))) else {
                continue;
            };
            let s = rep.absorb(partial_symbol(&k, x, y));
            rep.check(u == v && s == Some(u), || format!("{k} {x} {y}: χ₂ {u} and {v}, pair symbol {s:?}"));
            continue;
        }
        if has_circle_chi2(&ty) {
            let (Some(u), Some(v)) = (rep.absorb(chi2_circle(&k, x)), rep.absorb(chi2_circle(&k, y))) else {
                continue;
            };
            rep.check(u == -v, || format!("{k} {x} {y}: values {u} and {v} should be opposite"));
        }
        let Some(Some(e)) = rep.absorb(pattern_factor(&k, x, y)) else { continue };
        let Some(s) = rep.absorb(partial_symbol(&k, x, y)) else { continue };
        let p = *pattern.get_or_insert(s * e);
        rep.check(p == s * e, || format!("{k} {x} {y}: pattern value {} differs from {p}", s * e));
    }
    Ok(rep)
}

/// The pruned tree walk and the stabilized unpruned oracle give the same presence set.
pub fn oracle_suite(config: &Config, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Oracle, format!("{config}, N = {}", opts.n));
    let tree = enumerate_curvatures(config, opts.n, &opts.enumeration)?;
    let (oracle, lim) = oracle_stabilized(config, opts.n)?;
    rep.check(tree == oracle, || {
        let diff: Vec<u64> = (1..=opts.n).filter(|&k| tree.contains(k) != oracle.contains(k)).take(10).collect();
        format!("tree and oracle (ceiling {}) differ at {diff:?}", lim.ceiling)
    });
    Ok(rep)
}

fn too_big(c: &Config, cap: i64) -> bool {
    match c {
        Config::Grid(g) => g.poly.d.unsigned_abs() > cap as u128,
        _ => c.seed_values().iter().any(|v| v.abs() > cap),
    }
}

/// Modular closure: `moves` random generator applications never change the type, and no tangent
/// pair met by the enumeration up to `n` has a forbidden sum.
pub fn modular_suite(config: &Config, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(Suite::Modular, format!("{config}, N = {}", opts.n));
    let ty = modular_type(config)?;
    let mut r = rng(opts);
    let mut c = *config;
    for _ in 0..opts.moves {
        let faces: Vec<FaceId> = match c {
            Config::Grid(_) => {
                let site = CircleId::Site(r.gen_range(-1..=1), r.gen_range(-1..=1));
                c.faces_containing(site)
            }
            _ => c.all_faces(),
        };
        let next = match apply_generator(&c, *faces.choose(&mut r).unwrap()) {
            Ok(n) if !too_big(&n, 1 << 40) => n,
            _ => *config,
        };
        let got = modular_type(&next);
        rep.check(got.as_ref() == Ok(&ty), || format!("{next}: type {got:?}, expected {}", ty.label));
        c = next;
    }
    tangent_sums(config, opts, &ty, &mut rep)?;
    Ok(rep)
}

fn tangent_sums(config: &Config, opts: &SuiteOptions, ty: &ModularType, rep: &mut SuiteReport) -> Result<()> {
    let (m, bad) = forbidden_tangent_sums(ty.kind);
    let checked = AtomicU64::new(0);
    let found = Mutex::new(Vec::<String>::new());
    let n = opts.n as i128;
    let visit = |s: &Config| {
        let mut local = 0u64;
        let mut hit = |a: i128, b: i128, what: &dyn Fn() -> String| {
            local += 1;
            if bad.contains(&((a + b).rem_euclid(m as i128) as i64)) {
                found.lock().unwrap().push(what());
            }
        };
        match s {
            Config::Grid(g) => {
                let mut sites = Vec::new();
                if g.poly.d == 0 {
                    sites.push((0, 0));
                } else {
                    for_each_le(g.lattice, &g.poly, n, |i, j, _| sites.push((i, j)));
                }
                for (i, j) in sites {
                    for (i2, j2) in g.neighbors(i, j) {
                        let (a, b) = (g.at(i, j), g.at(i2, j2));
                        hit(a, b, &|| format!("{s}: sites ({i},{j}) and ({i2},{j2}) sum to {}", a + b));
                    }
                }
            }
            _ => {
                for (x, y) in s.edges() {
                    let (a, b) = (s.curvature(x).unwrap() as i128, s.curvature(y).unwrap() as i128);
                    hit(a, b, &|| format!("{s}: {x} and {y} sum to {}", a + b));
                }
            }
        }
        checked.fetch_add(local, Ordering::Relaxed);
    };
    walk_states(config, opts.n, &opts.enumeration, &visit)?;
    rep.checked += checked.into_inner();
    for f in found.into_inner().unwrap() {
        rep.fail(f);
    }
    Ok(())
}

/// For χ₂ = −1, none of the obstructed shapes appears among the curvatures up to `n`.
pub fn obstruction_suite(config: &Config, opts: &SuiteOptions) -> Result<SuiteReport> {
    let ty = modular_type(config)?;
    let chi2 = chi2_packing(config, 64, &mut rng(opts))?;
    if chi2 != Chi2Value::Minus {
        return Ok(SuiteReport::new(Suite::Obstruction, format!("{config}, χ₂ = {chi2}, no obstruction")));
    }
    let present = enumerate_curvatures(config, opts.n, &opts.enumeration)?;
    Ok(obstruction_check(config, &ty, chi2, &present))
}

/// Checks an already enumerated presence set against the obstruction of `(ty, chi2)`.
pub fn obstruction_check(config: &Config, ty: &ModularType, chi2: Chi2Value, present: &CurvaturePresence) -> SuiteReport {
    let mut rep = SuiteReport::new(Suite::Obstruction, format!("{config}, N = {}", present.n()));
    let ob = Obstruction::for_type(ty, chi2);
    for k in 1..=present.n() {
        if ob.contains(k) {
            rep.check(!present.contains(k), || format!("{k} ({}) is a curvature", ob.describe()));
        }
    }
    rep
}
