//! SVG drawings. Positions are solved and propagated in `f64`; every reflected circle is
//! checked against the exact curvature of the corresponding move.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write;

use serde::Serialize;

use crate::enumeration::reduce_to_root;
use crate::error::{Error, Result};
use crate::invariants::partial_colors;
use crate::kernel::grid::for_each_le;
use crate::kernel::{apply_generator, coloring, CircleId, Config, FaceId, Grid, GridFace, Lattice};

#[derive(Clone, Debug)]
pub struct RenderLimits {
    /// Generator moves applied from the root configuration.
    pub depth: u32,
    /// Circles of larger curvature are not drawn; grid windows are the sites below it.
    pub max_curvature: i64,
    pub labels: bool,
    pub colors: bool,
}

impl Default for RenderLimits {
    fn default() -> Self {
        RenderLimits { depth: 3, max_curvature: 1000, labels: false, colors: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RenderedCircle {
    pub x: f64,
    pub y: f64,
    pub r: f64,
    pub curvature: i64,
    pub color: Option<u8>,
}

#[derive(Clone, Copy, Debug)]
struct Disk {
    x: f64,
    y: f64,
    k: i64,
}

impl Disk {
    fn r(&self) -> f64 {
        1.0 / (self.k as f64).abs()
    }
}

fn touch_point(a: &Disk, b: &Disk) -> (f64, f64) {
    let (ka, kb) = (a.k as f64, b.k as f64);
    ((ka * a.x + kb * b.x) / (ka + kb), (ka * a.y + kb * b.y) / (ka + kb))
}

fn circumcircle(p: [(f64, f64); 3]) -> Option<(f64, f64, f64)> {
    let [(ax, ay), (bx, by), (cx, cy)] = p;
    let d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    if d.abs() < 1e-300 {
        return None;
    }
    let (a2, b2, c2) = (ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy);
    let ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    let uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    Some((ux, uy, ((ax - ux).powi(2) + (ay - uy).powi(2)).sqrt()))
}

/// Image of `d` under inversion in `(ox, oy, rr)`, carrying the exact curvature `k`.
fn invert(d: &Disk, (ox, oy, rr): (f64, f64, f64), k: i64) -> Result<Disk> {
    let (vx, vy) = (d.x - ox, d.y - oy);
    let s = vx * vx + vy * vy - d.r() * d.r();
    let scale = rr * rr / s;
    let out = Disk { x: ox + vx * scale, y: oy + vy * scale, k };
    let r = rr * rr * d.r() / s.abs();
    if ((r - out.r()) / out.r()).abs() > 1e-6 {
        return Err(Error::Verification(format!("reflected radius {r} disagrees with curvature {k}")));
    }
    Ok(out)
}

type Lorentz = [f64; 4];

/// `x x' + y y' + z z' - t t'`.
fn lor(u: &Lorentz, v: &Lorentz) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2] - u[3] * v[3]
}

fn axpy(a: f64, x: &Lorentz, y: &Lorentz) -> Lorentz {
    std::array::from_fn(|i| a * x[i] + y[i])
}

/// A fixed realization of the family with the kernel's labels: octahedral caps on the
/// coordinate axes, cubic caps on the cube vertices, unit circles on the grid lattices.
fn reference(root: &Config, c: CircleId) -> Result<Lorentz> {
    let r2 = std::f64::consts::SQRT_2;
    match (root, c) {
        (Config::Oct(_), CircleId::Slot(i)) if i < 6 => {
            let axis = [0, 1, 2, 2, 1, 0][i];
            let sign = if i < 3 { r2 } else { -r2 };
            let mut v = [0.0, 0.0, 0.0, 1.0];
            v[axis] = sign;
            Ok(v)
        }
        (Config::Cube(_), CircleId::Slot(i)) if i < 8 => {
            let s = |b: bool| if b { 1.0 } else { -1.0 };
            Ok([s(matches!(i % 4, 1 | 2)), s(matches!(i % 4, 2 | 3)), s(i >= 4), r2])
        }
        (Config::Grid(g), CircleId::Site(i, j)) => {
            let (i, j) = (i as f64, j as f64);
            let (x, y) = match g.lattice {
                Lattice::Square => (2.0 * i, 2.0 * j),
                Lattice::Tri => (2.0 * i + j, 3f64.sqrt() * j),
            };
            // unit circle: b = 1, cocurvature |c|^2 - 1
            let cb = x * x + y * y - 1.0;
            Ok([x, y, (cb - 1.0) / 2.0, (cb + 1.0) / 2.0])
        }
        _ => Err(Error::InvalidCircle(format!("{c:?}"))),
    }
}

fn solve4(mut m: [[f64; 5]; 4]) -> Option<[f64; 4]> {
    for col in 0..4 {
        let piv = (col..4).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))?;
        if m[piv][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, piv);
        for r in 0..4 {
            if r != col {
                let k = m[r][col] / m[col][col];
                for c in col..5 {
                    m[r][c] -= k * m[col][c];
                }
            }
        }
    }
    Some(std::array::from_fn(|i| m[i][4] / m[i][i]))
}

/// Positions of the listed circles. The curvature functional `F` with `k_c = -<w_c, F>` is
/// solved by least squares on the reference vectors and completed to a Lorentz frame.
fn realize(root: &Config, ids: &[CircleId]) -> Result<HashMap<CircleId, Disk>> {
    let refs: Vec<(CircleId, Lorentz, i64)> =
        ids.iter().map(|&c| Ok((c, reference(root, c)?, root.curvature(c)?))).collect::<Result<_>>()?;
    // rows -J w, so that the system reads (-J w) . F = k
    let mut ne = [[0.0; 5]; 4];
    for (_, w, k) in &refs {
        let a = [-w[0], -w[1], -w[2], w[3]];
        for r in 0..4 {
            for c in 0..4 {
                ne[r][c] += a[r] * a[c];
            }
            ne[r][4] += a[r] * *k as f64;
        }
    }
    let f = solve4(ne).ok_or_else(|| Error::Verification("curvatures do not fix a realization".into()))?;
    let scale = f.iter().map(|x| x.abs()).fold(0.0, f64::max);
    if lor(&f, &f).abs() > 1e-8 * scale * scale {
        return Err(Error::Verification("curvature functional is not null".into()));
    }
    // F0 null with <F, F0> = 2, then E1, E2 orthonormal and orthogonal to both
    let probe = [[0.0, 0.0, 0.0, 1.0], [0.0, 0.0, 1.0, 0.0], [1.0, 0.0, 0.0, 0.0]];
    let a = *probe.iter().max_by(|p, q| lor(p, &f).abs().total_cmp(&lor(q, &f).abs())).unwrap();
    let f0 = axpy(-lor(&a, &a) / (2.0 * lor(&a, &f)), &f, &a);
    let f0 = f0.map(|x| x * 2.0 / lor(&f, &f0));
    let mut es: Vec<Lorentz> = Vec::new();
    for e in [[1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]] {
        let mut v = axpy(-lor(&e, &f0) / 2.0, &f, &e);
        v = axpy(-lor(&e, &f) / 2.0, &f0, &v);
        for u in &es {
            v = axpy(-lor(&v, u), u, &v);
        }
        let n = lor(&v, &v);
        if n > 1e-6 && es.len() < 2 {
            es.push(v.map(|x| x / n.sqrt()));
        }
    }
    let mut out = HashMap::new();
    for (c, w, k) in refs {
        let b = -lor(&w, &f);
        if ((b - k as f64) / k as f64).abs() > 1e-6 {
            return Err(Error::Verification(format!("realized curvature {b} for {k}")));
        }
        out.insert(c, Disk { x: lor(&w, &es[0]) / b, y: lor(&w, &es[1]) / b, k });
    }
    // center the enclosing circle
    let (cx, cy) = out.values().find(|d| d.k < 0).map_or((0.0, 0.0), |d| (d.x, d.y));
    for d in out.values_mut() {
        d.x -= cx;
        d.y -= cy;
    }
    Ok(out)
}

fn dual_of(face: &[Disk]) -> Result<(f64, f64, f64)> {
    let n = face.len();
    let pts: Vec<(f64, f64)> = (0..n).map(|i| touch_point(&face[i], &face[(i + 1) % n])).collect();
    circumcircle([pts[0], pts[1], pts[2]]).ok_or_else(|| Error::Verification("degenerate face".into()))
}

/// Cyclic order of a face's circles, so consecutive ones touch.
fn cyclic(config: &Config, face: FaceId) -> Result<Vec<CircleId>> {
    let cs = config.face_circles(face)?;
    if cs.len() == 3 {
        return Ok(cs);
    }
    let mut out = vec![cs[0]];
    while out.len() < cs.len() {
        let last = *out.last().unwrap();
        let next = cs.iter().find(|c| !out.contains(c) && config.adjacent(last, **c).unwrap_or(false));
        out.push(*next.ok_or_else(|| Error::Verification("face is not a cycle".into()))?);
    }
    Ok(out)
}

fn colors_of(config: &Config, on: bool) -> impl Fn(CircleId) -> Option<u8> {
    let col = if on { coloring(config).ok() } else { None };
    let remap: Option<[u8; 3]> = on
        .then(|| partial_colors(config).ok())
        .flatten()
        .map(|p| {
            let mut m = [0u8; 3];
            m[p.yellow] = 0;
            m[p.red] = 1;
            m[p.blue] = 2;
            m
        });
    move |c| {
        let v = col.as_ref()?.color(c)?;
        Some(remap.map_or(v, |m| m[v as usize]))
    }
}

/// Circles of the packing reached within `depth` moves of its root configuration.
pub fn render_circles(config: &Config, lim: &RenderLimits) -> Result<Vec<RenderedCircle>> {
    let root = reduce_to_root(config)?;
    if root.seed_values().iter().all(|&v| v >= 0) && !matches!(root, Config::Grid(g) if g.poly.d > 0) {
        return Err(Error::NotApplicable("drawing needs a bounded packing with an enclosing circle".into()));
    }
    let color = colors_of(&root, lim.colors);
    let ids: Vec<CircleId> = match &root {
        Config::Grid(g) => grid_window(g, lim.max_curvature),
        _ => root.seed_circles(),
    };
    if ids.iter().any(|&c| root.curvature(c).map_or(true, |k| k == 0)) {
        return Err(Error::NotApplicable("drawing lines is not supported".into()));
    }
    let pos = realize(&root, &ids)?;

    let mut out: HashMap<(i64, i64, i64), RenderedCircle> = HashMap::new();
    let mut emit = |c: CircleId, d: &Disk| {
        if d.k <= lim.max_curvature {
            let key = ((d.x * 1e9).round() as i64, (d.y * 1e9).round() as i64, d.k);
            out.entry(key).or_insert(RenderedCircle { x: d.x, y: d.y, r: d.r(), curvature: d.k, color: color(c) });
        }
    };
    let mut seen = HashSet::from([root]);
    let mut queue = VecDeque::from([(root, pos, 0u32)]);
    while let Some((cfg, pos, depth)) = queue.pop_front() {
        for (c, d) in &pos {
            emit(*c, d);
        }
        if depth >= lim.depth {
            continue;
        }
        for face in faces_in(&cfg, &pos, lim.max_curvature) {
            let Ok(next) = apply_generator(&cfg, face) else { continue };
            if !seen.insert(next) {
                continue;
            }
            let ring = cyclic(&cfg, face)?;
            let fd: Vec<Disk> = ring.iter().map(|c| pos[c]).collect();
            let dual = dual_of(&fd)?;
            let mut np = HashMap::with_capacity(pos.len());
            for (&c, d) in &pos {
                let nd = if ring.contains(&c) { *d } else { invert(d, dual, next.curvature(c)?)? };
                np.insert(c, nd);
            }
            queue.push_back((next, np, depth + 1));
        }
    }
    let mut v: Vec<RenderedCircle> = out.into_values().collect();
    v.sort_by(|a, b| a.curvature.cmp(&b.curvature).then(a.x.total_cmp(&b.x)).then(a.y.total_cmp(&b.y)));
    Ok(v)
}

fn grid_window(g: &Grid, bound: i64) -> Vec<CircleId> {
    let mut v = Vec::new();
    for_each_le(g.lattice, &g.poly, bound as i128, |i, j, _| v.push(CircleId::Site(i, j)));
    v
}

fn faces_in(cfg: &Config, pos: &HashMap<CircleId, Disk>, bound: i64) -> Vec<FaceId> {
    match cfg {
        Config::Grid(g) => {
            let shapes: &[bool] = if g.lattice == Lattice::Square { &[true] } else { &[true, false] };
            let mut v = Vec::new();
            for c in pos.keys() {
                let CircleId::Site(i, j) = *c else { continue };
                for &up in shapes {
                    let f = GridFace { i, j, up };
                    let inside = f.vertices(g.lattice).iter().all(|&(x, y)| {
                        pos.get(&CircleId::Site(x, y)).is_some_and(|d| d.k <= bound)
                    });
                    if inside && g.t_star(&f) >= 1 {
                        v.push(FaceId::Grid(f));
                    }
                }
            }
            v.sort_by_key(|f| format!("{f:?}"));
            v
        }
        _ => cfg.all_faces(),
    }
}

const PALETTE: [&str; 4] = ["#f2c14e", "#d1495b", "#4a7fb5", "#7cae7a"];

/// A standalone SVG document, one `circle` element per drawn circle.
pub fn render_svg(config: &Config, lim: &RenderLimits) -> Result<String> {
    let circles = render_circles(config, lim)?;
    let outer = circles.iter().filter(|c| c.curvature < 0).map(|c| c.r).fold(0.0, f64::max);
    let extent = if outer > 0.0 { outer } else { circles.iter().map(|c| c.x.abs().max(c.y.abs()) + c.r).fold(0.0, f64::max) };
    let sw = extent / 800.0;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="800" height="800">"#,
        -extent * 1.01,
        -extent * 1.01,
        extent * 2.02,
        extent * 2.02
    );
    for c in &circles {
        let fill = match (c.curvature < 0, c.color) {
            (true, _) => "none",
            (false, Some(k)) => PALETTE[k as usize % PALETTE.len()],
            (false, None) => "#dddddd",
        };
        let _ = writeln!(
            s,
            r#"<circle cx="{:.9}" cy="{:.9}" r="{:.9}" fill="{fill}" stroke="black" stroke-width="{sw:.9}" data-curvature="{}"/>"#,
            c.x, -c.y, c.r, c.curvature
        );
        if lim.labels && c.curvature > 0 && c.r > extent / 60.0 {
            let _ = writeln!(
                s,
                r#"<text x="{:.9}" y="{:.9}" font-size="{:.9}" text-anchor="middle" dominant-baseline="central">{}</text>"#,
                c.x,
                -c.y,
                c.r * 0.6,
                c.curvature
            );
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}
