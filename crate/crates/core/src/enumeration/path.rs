use std::collections::{HashMap, VecDeque};

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{apply_generator, CircleId, Config, FaceId, Kind};

use super::tree::{for_each_child, reduce_to_root};

/// One link of a chain: apply `moves` (each fixing the current circle), then step to the
/// tangent circle `to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub moves: Vec<FaceId>,
    pub to: CircleId,
    pub curvature: i64,
}

/// A path of pairwise tangent circles with coprime consecutive curvatures, replayable from `start`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chain {
    pub start: Config,
    pub first: CircleId,
    pub first_curvature: i64,
    pub steps: Vec<ChainStep>,
}

impl Chain {
    pub fn curvatures(&self) -> Vec<i64> {
        std::iter::once(self.first_curvature).chain(self.steps.iter().map(|s| s.curvature)).collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Replays the chain, checking that every move keeps the current circle, that consecutive
    /// circles are tangent, and that consecutive curvatures are nonzero and coprime.
    pub fn verify(&self) -> Result<()> {
        let mut cfg = self.start;
        let mut cur = self.first;
        if cfg.curvature(cur)? != self.first_curvature {
            return Err(Error::Verification("first curvature does not match".into()));
        }
        for (k, s) in self.steps.iter().enumerate() {
            for &f in &s.moves {
                if !cfg.face_circles(f)?.contains(&cur) {
                    return Err(Error::Verification(format!("step {k}: move {f:?} does not fix {cur}")));
                }
                cfg = apply_generator(&cfg, f)?;
            }
            let (a, b) = (cfg.curvature(cur)?, cfg.curvature(s.to)?);
            if b != s.curvature {
                return Err(Error::Verification(format!("step {k}: expected curvature {}, found {b}", s.curvature)));
            }
            if !cfg.adjacent(cur, s.to)? {
                return Err(Error::Verification(format!("step {k}: {cur} and {} are not tangent", s.to)));
            }
            if a == 0 || b == 0 || a.gcd(&b) != 1 {
                return Err(Error::Verification(format!("step {k}: curvatures {a} and {b} are not coprime")));
            }
            cur = s.to;
        }
        Ok(())
    }
}

/// Raw link before repair: moves fixing the current circle, then a tangent step.
#[derive(Clone, Debug)]
struct Link {
    moves: Vec<FaceId>,
    to: CircleId,
}

/// Shortest tangency path between two circles of one configuration.
fn graph_path(cfg: &Config, from: CircleId, to: CircleId) -> Result<Vec<CircleId>> {
    let mut prev: HashMap<CircleId, CircleId> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    prev.insert(from, from);
    let limit = match (from, to) {
        (CircleId::Site(i, j), CircleId::Site(k, l)) => (i - k).abs().max((j - l).abs()) + 2,
        _ => 0,
    };
    let inside = |c: &CircleId| match (c, from) {
        (CircleId::Site(i, j), CircleId::Site(a, b)) => (i - a).abs() <= 2 * limit && (j - b).abs() <= 2 * limit,
        _ => true,
    };
    while let Some(c) = queue.pop_front() {
        if c == to {
            let mut path = vec![to];
            let mut x = to;
            while x != from {
                x = prev[&x];
                path.push(x);
            }
            path.reverse();
            return Ok(path);
        }
        for nb in cfg.neighbors(c)? {
            if inside(&nb) && !prev.contains_key(&nb) {
                prev.insert(nb, c);
                queue.push_back(nb);
            }
        }
    }
    Err(Error::InvalidCircle(format!("no tangency path from {from} to {to}")))
}

/// Candidates met while alternating the two faces through the edge `(p, q)`: the moves that
/// reach them, then the inserted circles in order from `p` to `q`.
fn edge_walk(cfg: &Config, p: CircleId, q: CircleId, steps: usize) -> Result<Vec<(Vec<FaceId>, Config, Vec<CircleId>)>> {
    let faces: Vec<FaceId> = cfg.faces_containing(p).into_iter().filter(|f| cfg.faces_containing(q).contains(f)).collect();
    if faces.len() != 2 {
        return Err(Error::NotTangent);
    }
    let ladder = matches!(cfg.kind(), Kind::Cube | Kind::Square);
    let found = |k: &Config| -> Result<Vec<Vec<CircleId>>> {
        let mut out = Vec::new();
        if ladder {
            for &f in &faces {
                let vs = k.face_circles(f)?;
                let near = |x: CircleId, o: CircleId| -> Result<CircleId> {
                    for &v in &vs {
                        if v != x && v != o && k.adjacent(v, x)? {
                            return Ok(v);
                        }
                    }
                    Err(Error::InvalidFace(format!("{f:?}")))
                };
                out.push(vec![near(p, q)?, near(q, p)?]);
            }
        } else {
            let nq = k.neighbors(q)?;
            for x in k.neighbors(p)? {
                if x != q && nq.contains(&x) {
                    out.push(vec![x]);
                }
            }
        }
        Ok(out)
    };
    let mut res = Vec::new();
    for c in found(cfg)? {
        res.push((Vec::new(), *cfg, c));
    }
    let mut walks = [(Vec::new(), *cfg), (Vec::new(), *cfg)];
    for s in 0..steps {
        for (start, (moves, k)) in walks.iter_mut().enumerate() {
            let f = faces[(start + s) % 2];
            let Ok(n) = apply_generator(k, f) else { continue };
            *k = n;
            moves.push(f);
            for c in found(k)? {
                res.push((moves.clone(), *k, c));
            }
        }
    }
    Ok(res)
}

const WALK: usize = 48;

/// Links from `p` to `q` (tangent in `cfg`) with coprime consecutive curvatures, plus the
/// moves that bring the configuration back to `cfg` (all fixing `q`).
fn repair(cfg: &Config, p: CircleId, q: CircleId, depth: u32) -> Result<(Vec<Link>, Vec<FaceId>)> {
    let (a, b) = (cfg.curvature(p)?, cfg.curvature(q)?);
    if a != 0 && b != 0 && a.gcd(&b) == 1 {
        return Ok((vec![Link { moves: Vec::new(), to: q }], Vec::new()));
    }
    if depth == 0 {
        return Err(Error::SearchExhausted(format!("could not separate {a} and {b}")));
    }
    let cands = edge_walk(cfg, p, q, WALK)?;
    let cop = |x: i64, y: i64| x != 0 && y != 0 && x.gcd(&y) == 1;
    let vals = |k: &Config, c: &[CircleId]| -> Result<Vec<i64>> { c.iter().map(|&x| k.curvature(x)).collect() };
    let back = |moves: &[FaceId]| -> Vec<FaceId> { moves.iter().rev().copied().collect() };
    // a direct insertion
    for (moves, k, c) in &cands {
        let v = vals(k, c)?;
        let mut chain = vec![a];
        chain.extend(&v);
        chain.push(b);
        if chain.windows(2).all(|w| cop(w[0], w[1])) {
            let mut links = vec![Link { moves: moves.clone(), to: c[0] }];
            links.extend(c[1..].iter().chain([&q]).map(|&x| Link { moves: Vec::new(), to: x }));
            return Ok((links, back(moves)));
        }
    }
    // otherwise fix the first gap and recurse on the rest
    for (moves, k, c) in &cands {
        let v = vals(k, c)?;
        if !cop(a, v[0]) {
            continue;
        }
        let mut links = vec![Link { moves: moves.clone(), to: c[0] }];
        let mut cur = c[0];
        let mut pending: Vec<FaceId> = Vec::new();
        let mut ok = true;
        for &nx in c[1..].iter().chain([&q]) {
            match repair(k, cur, nx, depth - 1) {
                Ok((mut sub, tail)) => {
                    let mut first = std::mem::take(&mut pending);
                    first.extend(sub[0].moves.drain(..));
                    sub[0].moves = first;
                    links.extend(sub);
                    pending = tail;
                    cur = nx;
                }
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            pending.extend(back(moves));
            return Ok((links, pending));
        }
    }
    Err(Error::SearchExhausted(format!("no insertion separates {a} and {b}")))
}

fn assemble(start: &Config, first: CircleId, raw: Vec<Link>) -> Result<Chain> {
    let mut cfg = *start;
    let mut cur = first;
    let mut steps: Vec<ChainStep> = Vec::new();
    // moves owed before the next step; they all fix the current circle
    let mut carry: Vec<FaceId> = Vec::new();
    for link in raw {
        for &f in &link.moves {
            cfg = apply_generator(&cfg, f)?;
        }
        carry.extend(link.moves);
        let (fixed, tail) = repair(&cfg, cur, link.to, 4)?;
        let mut k = cfg;
        for l in fixed {
            for &f in &l.moves {
                k = apply_generator(&k, f)?;
            }
            let mut moves = std::mem::take(&mut carry);
            moves.extend(l.moves);
            steps.push(ChainStep { moves, to: l.to, curvature: k.curvature(l.to)? });
        }
        // the tail brings the walk back to `cfg`
        carry = tail;
        cur = link.to;
    }
    let chain = Chain { start: *start, first, first_curvature: start.curvature(first)?, steps };
    chain.verify()?;
    Ok(chain)
}

/// A chain of tangent circles with coprime consecutive curvatures between two circles of `config`.
pub fn coprime_path(config: &Config, from: CircleId, to: CircleId) -> Result<Chain> {
    for c in [from, to] {
        if config.curvature(c)? == 0 {
            return Err(Error::InvalidCircle(format!("{c} has curvature 0")));
        }
    }
    let path = graph_path(config, from, to)?;
    let raw = path[1..].iter().map(|&c| Link { moves: Vec::new(), to: c }).collect();
    assemble(config, from, raw)
}

/// Moves from the root to a configuration containing a circle of curvature `target`,
/// searching the pruned tree up to `bound`.
fn locate(root: &Config, target: i64, bound: u64) -> Option<(Vec<FaceId>, CircleId)> {
    let mut stack = vec![(*root, Vec::<FaceId>::new())];
    let mut budget = 5_000_000u64;
    while let Some((c, moves)) = stack.pop() {
        budget = budget.checked_sub(1)?;
        if let Some(x) = circle_with(&c, target) {
            return Some((moves, x));
        }
        for_each_child(&c, bound, |f, k| {
            let mut m = moves.clone();
            m.push(f);
            stack.push((k, m));
        });
    }
    None
}

fn circle_with(c: &Config, target: i64) -> Option<CircleId> {
    match c {
        Config::Grid(g) if g.poly.d > 0 => {
            let mut hit = None;
            crate::kernel::grid::for_each_le(g.lattice, &g.poly, target as i128, |i, j, v| {
                if v == target as i128 && hit.is_none() {
                    hit = Some(CircleId::Site(i, j));
                }
            });
            hit
        }
        Config::Grid(g) => (g.poly.g == target as i128).then_some(CircleId::Site(0, 0)),
        _ => c.seed_circles().into_iter().find(|&x| c.curvature(x).ok() == Some(target)),
    }
}

/// A chain between a circle of curvature `u` and one of curvature `v` in the packing of `config`,
/// both located in the enumeration tree up to `max(u, v)`.
pub fn coprime_path_between(config: &Config, u: i64, v: i64) -> Result<Chain> {
    if u == 0 || v == 0 {
        return Err(Error::Invalid("curvatures must be nonzero".into()));
    }
    let root = reduce_to_root(config)?;
    let bound = u.max(v).max(1) as u64;
    let missing = |x: i64| Error::InvalidCircle(format!("no circle of curvature {x} found in the region"));
    let (mu, cu) = locate(&root, u, bound).ok_or_else(|| missing(u))?;
    let (mv, cv) = locate(&root, v, bound).ok_or_else(|| missing(v))?;
    let mut start = root;
    for &f in &mu {
        start = apply_generator(&start, f)?;
    }
    // back to the root, then out to the configuration holding v
    let mut raw: Vec<Link> = Vec::new();
    let mut carry: Vec<FaceId> = Vec::new();
    let mut cfg = start;
    let mut cur = cu;
    let walk_to = |cfg: &Config, cur: CircleId, target: CircleId, carry: &mut Vec<FaceId>, raw: &mut Vec<Link>| {
        for x in graph_path(cfg, cur, target)?.into_iter().skip(1) {
            raw.push(Link { moves: std::mem::take(carry), to: x });
        }
        Ok::<_, Error>(())
    };
    for f in mu.iter().rev().chain(mv.iter()).copied() {
        let face = cfg.face_circles(f)?;
        if !face.contains(&cur) {
            let target = nearest_on_face(&cfg, cur, &face)?;
            walk_to(&cfg, cur, target, &mut carry, &mut raw)?;
            cur = target;
        }
        carry.push(f);
        cfg = apply_generator(&cfg, f)?;
    }
    walk_to(&cfg, cur, cv, &mut carry, &mut raw)?;
    assemble(&start, cu, raw)
}

fn nearest_on_face(cfg: &Config, cur: CircleId, face: &[CircleId]) -> Result<CircleId> {
    let mut best: Option<(usize, CircleId)> = None;
    for &x in face {
        if cfg.curvature(x)? == 0 {
            continue;
        }
        let len = graph_path(cfg, cur, x)?.len();
        if best.map_or(true, |(b, _)| len < b) {
            best = Some((len, x));
        }
    }
    best.map(|(_, x)| x).ok_or_else(|| Error::InvalidFace("face has only lines".into()))
}
