use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::grid::{flip_coefficients, for_each_le};
use crate::kernel::{cube, oct, Config, FaceId, Grid, GridFace, Lattice};

use super::presence::{AtomicPresence, CurvaturePresence};

/// Limits and parallelism for the tree walk.
#[derive(Clone, Debug)]
pub struct EnumOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Abort once this many configurations have been visited.
    pub max_states: u64,
    /// Abort once this much wall-clock time has passed.
    pub time_budget: Option<Duration>,
    /// Largest presence bitset allowed, in bytes.
    pub max_bitset_bytes: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { threads: None, max_states: 1 << 40, time_budget: None, max_bitset_bytes: 1 << 31 }
    }
}

/// Levels of the tree expanded with parallel iterators; below this each subtree runs on one worker.
const PAR_DEPTH: u32 = 20;
const FLUSH: u64 = 1 << 12;

/// Repeatedly applies curvature-decreasing moves until none is left.
pub fn reduce_to_root(config: &Config) -> Result<Config> {
    let mut c = *config;
    loop {
        let next = match c {
            Config::Oct(o) => {
                let m = (0..8u8).min_by_key(|&m| o.growth(m)).unwrap();
                (o.growth(m) < 0).then(|| o.flip(m).map(Config::Oct)).flatten()
            }
            Config::Cube(q) => {
                let k = (0..6).min_by_key(|&k| q.growth(k)).unwrap();
                (q.growth(k) < 0).then(|| q.flip(k).map(Config::Cube)).flatten()
            }
            Config::Grid(g) => grid_parent(&g).map(Config::Grid),
        };
        match next {
            Some(n) => c = n,
            None => return Ok(c),
        }
    }
}

fn grid_shapes(lat: Lattice) -> &'static [bool] {
    match lat {
        Lattice::Square => &[true],
        Lattice::Tri => &[true, false],
    }
}

fn grid_parent(g: &Grid) -> Option<Grid> {
    if g.poly.d == 0 {
        return None;
    }
    let mut best: Option<(i128, GridFace)> = None;
    for &up in grid_shapes(g.lattice) {
        let tp = flip_coefficients(g.lattice, &g.poly, up);
        for_each_le(g.lattice, &tp, -1, |i, j, t| {
            if best.map_or(true, |(b, _)| t < b) {
                best = Some((t, GridFace { i, j, up }));
            }
        });
    }
    best.and_then(|(_, f)| g.checked_flip(&f))
}

/// Calls `f` on every curvature-increasing child that has a new curvature `<= n`.
pub fn for_each_child(state: &Config, n: u64, mut f: impl FnMut(FaceId, Config)) {
    let n = n as i64;
    match state {
        Config::Oct(o) => {
            for m in 0..8u8 {
                if o.growth(m) <= 0 {
                    continue;
                }
                if let Some(c) = o.flip(m) {
                    if oct::face_slots(m).iter().any(|&i| c.v[oct::opposite(i)] <= n) {
                        f(FaceId::Oct(m), Config::Oct(c));
                    }
                }
            }
        }
        Config::Cube(q) => {
            for k in 0..6 {
                if q.growth(k) <= 0 {
                    continue;
                }
                if let Some(c) = q.flip(k) {
                    if cube::FACES[k].iter().any(|&i| c.v[cube::antipode(i)] <= n) {
                        f(FaceId::Cube(k), Config::Cube(c));
                    }
                }
            }
        }
        Config::Grid(g) => grid_children(g, n as i128, &mut f),
    }
}

/// Off the face, a flipped grid gains at least `2 t*` (square) or `t*` (triangular) over the
/// old grid, whose real minimum is `-D/4`. That bound only filters; a child is kept when it
/// has a new site of value `<= n`.
fn grid_children(g: &Grid, n: i128, f: &mut impl FnMut(FaceId, Config)) {
    let d = g.poly.d;
    if d == 0 {
        // constant grid: every face is a translate of the origin faces
        for &up in grid_shapes(g.lattice) {
            let face = GridFace { i: 0, j: 0, up };
            if let Some(c) = g.checked_flip(&face) {
                f(FaceId::Grid(face), Config::Grid(c));
            }
        }
        return;
    }
    let bound = match g.lattice {
        Lattice::Square => (4 * n + d).div_euclid(8),
        Lattice::Tri => (4 * n + d).div_euclid(4),
    };
    for &up in grid_shapes(g.lattice) {
        let tp = flip_coefficients(g.lattice, &g.poly, up);
        for_each_le(g.lattice, &tp, bound, |i, j, t| {
            if t >= 1 {
                let face = GridFace { i, j, up };
                if let Some(c) = g.checked_flip(&face) {
                    if has_new_le(&c, &face, n) {
                        f(FaceId::Grid(face), Config::Grid(c));
                    }
                }
            }
        });
    }
}

/// Whether the flipped grid has a site off `face` with value `<= n`.
fn has_new_le(c: &Grid, face: &GridFace, n: i128) -> bool {
    if c.poly.d <= 0 {
        return true;
    }
    let keep = face.vertices(c.lattice);
    let mut found = false;
    for_each_le(c.lattice, &c.poly, n, |i, j, _| found |= !keep.contains(&(i, j)));
    found
}

struct Walk<'a, V> {
    n: u64,
    visit: &'a V,
    states: AtomicU64,
    abort: AtomicBool,
    max_states: u64,
    deadline: Option<Instant>,
}

impl<V: Fn(&Config) + Sync> Walk<'_, V> {
    fn flush(&self, local: &mut u64) {
        let total = self.states.fetch_add(*local, Ordering::Relaxed) + *local;
        *local = 0;
        if total > self.max_states || self.deadline.is_some_and(|d| Instant::now() > d) {
            self.abort.store(true, Ordering::Relaxed);
        }
    }

    fn par(&self, state: Config, depth: u32) {
        if self.abort.load(Ordering::Relaxed) {
            return;
        }
        if depth >= PAR_DEPTH {
            return self.seq(state);
        }
        (self.visit)(&state);
        self.states.fetch_add(1, Ordering::Relaxed);
        let mut kids = Vec::new();
        for_each_child(&state, self.n, |_, c| kids.push(c));
        kids.into_par_iter().for_each(|c| self.par(c, depth + 1));
    }

    fn seq(&self, root: Config) {
        let mut stack = vec![root];
        let mut local = 0u64;
        while let Some(s) = stack.pop() {
            (self.visit)(&s);
            local += 1;
            if local == FLUSH {
                self.flush(&mut local);
                if self.abort.load(Ordering::Relaxed) {
                    return;
                }
            }
            for_each_child(&s, self.n, |_, c| stack.push(c));
        }
        self.flush(&mut local);
    }
}

pub(crate) fn run_in_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(job()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
            Ok(pool.install(job))
        }
    }
}

/// Visits every configuration of the pruned tree: the root, then curvature-increasing moves
/// whose new circles include one of curvature `<= n`. Returns the number of states visited.
pub fn walk_states<V: Fn(&Config) + Sync>(config: &Config, n: u64, opts: &EnumOptions, visit: &V) -> Result<u64> {
    let root = reduce_to_root(config)?;
    let walk = Walk {
        n,
        visit,
        states: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        max_states: opts.max_states,
        deadline: opts.time_budget.map(|t| Instant::now() + t),
    };
    run_in_pool(opts.threads, || walk.par(root, 0))?;
    if walk.abort.load(Ordering::Relaxed) {
        return Err(Error::ResourceCap(format!(
            "stopped after {} states (cap {}{})",
            walk.states.load(Ordering::Relaxed),
            opts.max_states,
            opts.time_budget.map(|t| format!(", budget {t:?}")).unwrap_or_default()
        )));
    }
    Ok(walk.states.load(Ordering::Relaxed))
}

/// Records into `out` every curvature of `state` in `1..=n`.
pub(crate) fn record(state: &Config, n: u64, out: &AtomicPresence) {
    match state {
        Config::Oct(o) => o.v.iter().for_each(|&v| out.insert(v as i128)),
        Config::Cube(q) => q.v.iter().for_each(|&v| out.insert(v as i128)),
        Config::Grid(g) if g.poly.d == 0 => out.insert(g.poly.g),
        Config::Grid(g) => for_each_le(g.lattice, &g.poly, n as i128, |_, _, v| out.insert(v)),
    }
}

/// All curvatures `<= n` of the packing of `config`.
pub fn enumerate_curvatures(config: &Config, n: u64, opts: &EnumOptions) -> Result<CurvaturePresence> {
    if n == 0 {
        return Err(Error::Invalid("bound must be at least 1".into()));
    }
    if n.div_ceil(8) > opts.max_bitset_bytes {
        return Err(Error::ResourceCap(format!("a bitset for N = {n} exceeds {} bytes", opts.max_bitset_bytes)));
    }
    let bits = AtomicPresence::new(n);
    let states = walk_states(config, n, opts, &|s: &Config| record(s, n, &bits))?;
    let root = reduce_to_root(config)?;
    let mut out = bits.freeze();
    out.stats.states = states;
    out.stats.nonpositive = nonpositive(&root);
    Ok(out)
}

fn nonpositive(root: &Config) -> Vec<i64> {
    let mut v: Vec<i64> = match root {
        Config::Grid(g) if g.poly.d > 0 => {
            let mut v = Vec::new();
            for_each_le(g.lattice, &g.poly, 0, |_, _, x| v.push(x as i64));
            v
        }
        Config::Grid(g) => vec![g.poly.g as i64],
        _ => root.seed_values(),
    };
    v.retain(|&x| x <= 0);
    v.sort();
    v.dedup();
    v
}
