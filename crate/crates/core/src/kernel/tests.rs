use super::grid::{bilinear, for_each_le, flip_coefficients};
use super::*;
use crate::arith::QuadRat;
use crate::geometry::{inner_product, reflect};

fn cfg(kind: Kind, v: &[i64]) -> Config {
    validate_config(kind, v, Sign::Plus).unwrap()
}

#[test]
fn validate_examples() {
    let Config::Oct(o) = cfg(Kind::Oct, &[1, 0, 2, 0, 2, 1]) else { panic!() };
    assert_eq!(o.w(), 1);
    assert!(matches!(validate_config(Kind::Oct, &[1, 0, 2, 0, 2, 3], Sign::Plus), Err(crate::Error::Relation(_))));
    let Config::Cube(c) = cfg(Kind::Cube, &[-1, 2, 3, 4, 6, 7, 8, 11]) else { panic!() };
    assert_eq!(c.v, [-1, 2, 7, 4, 3, 6, 11, 8]);
    assert_eq!(c.w(), 10);
    let s = c.v[0] + c.v[2] + c.v[5] + c.v[7];
    assert_eq!(3 * s * s, 8 * (c.v[0].pow(2) + c.v[2].pow(2) + c.v[5].pow(2) + c.v[7].pow(2)));
    let t = cfg(Kind::Tri, &[1, 1, 1]);
    assert_eq!(t.seed_values(), vec![1, 1, 1]);
    assert!(validate_config(Kind::Tri, &[1, 1], Sign::Plus).is_err());
    assert!(matches!(validate_config(Kind::Oct, &[2, 0, 4, 0, 4, 2], Sign::Plus), Err(crate::Error::NotPrimitive(2))));
    assert!(matches!(validate_config(Kind::Cube, &[1, 2, 3, 4, 5, 6, 7, 8], Sign::Plus), Err(crate::Error::NoLabeling)));
    assert!(matches!(validate_config(Kind::Square, &[1, 2, 3, 4], Sign::Plus), Err(_)));
    assert!(matches!(validate_config(Kind::Tri, &[1, 2, 3], Sign::Plus), Err(crate::Error::Irrational(_))));
}

#[test]
fn completion_examples() {
    let c = complete_from_minimal(Kind::Oct, &[1, 0, 2], Sign::Minus).unwrap();
    assert_eq!(c.seed_values(), vec![1, 0, 2, 0, 2, 1]);
    let c = complete_from_minimal(Kind::Oct, &[1, 0, 2], Sign::Plus).unwrap();
    assert_eq!(c.seed_values(), vec![1, 0, 2, 8, 10, 9]);
    for (sign, d) in [(Sign::Plus, 13), (Sign::Minus, 1)] {
        let g = *complete_from_minimal(Kind::Tri, &[1, 1, 1], sign).unwrap().as_grid().unwrap();
        assert_eq!(g.at(1, 1), d);
        assert_eq!((5 - d) * (5 - d), 12 + 4 * d);
    }
    for (sign, m) in [(Sign::Plus, 9), (Sign::Minus, 1)] {
        let g = *complete_from_minimal(Kind::Square, &[1, 1, 1], sign).unwrap().as_grid().unwrap();
        assert_eq!([g.at(0, 0), g.at(1, 0), g.at(1, 1), g.at(2, 1)], [1, 1, 1, m]);
    }
    let c = complete_from_minimal(Kind::Cube, &[-1, 2, 7, 4], Sign::Minus).unwrap();
    assert_eq!(c.seed_values(), vec![-1, 2, 7, 4, 3, 6, 11, 8]);
    assert!(complete_from_minimal(Kind::Oct, &[1, 1, 1], Sign::Plus).is_err());
}

#[test]
fn generator_examples() {
    let c = cfg(Kind::Oct, &[1, 0, 2, 0, 2, 1]);
    let n = apply_generator(&c, FaceId::Oct(0)).unwrap();
    assert_eq!(n.seed_values(), vec![1, 0, 2, 8, 10, 9]);
    let c = cfg(Kind::Cube, &[-1, 2, 3, 4, 6, 7, 8, 11]);
    let n = apply_generator(&c, FaceId::Cube(0)).unwrap();
    assert_eq!(n.seed_values(), vec![-1, 2, 7, 4, 7, 10, 15, 12]);
    let Config::Cube(q) = n else { panic!() };
    let s = q.v[0] + q.v[2] + q.v[5] + q.v[7];
    assert_eq!((q.w(), 3 * s * s), (14, 8 * 294));
    let t = validate_config(Kind::Tri, &[1, 1, 1], Sign::Minus).unwrap();
    let n = apply_generator(&t, FaceId::Grid(GridFace { i: 0, j: 0, up: true })).unwrap();
    assert_eq!(n.as_grid().unwrap().at(1, 1), 6 + 2 + 6 - 1);
    assert!(apply_generator(&t, FaceId::Oct(0)).is_err());
    assert!(apply_generator(&c, FaceId::Oct(9)).is_err());
}

fn sample_configs() -> Vec<Config> {
    vec![
        cfg(Kind::Oct, &[-1, 2, 2, 4, 4, 7]),
        cfg(Kind::Oct, &[-6, 10, 17, 17, 24, 40]),
        cfg(Kind::Oct, &[-2, 3, 6, 8, 11, 16]),
        cfg(Kind::Oct, &[-2, 4, 5, 5, 6, 12]),
        cfg(Kind::Cube, &[-1, 2, 3, 4, 6, 7, 8, 11]),
        cfg(Kind::Cube, &[-7, 16, 18, 25, 41, 48, 50, 73]),
        cfg(Kind::Square, &[-1, 2, 3, 6]),
        cfg(Kind::Square, &[-27, 37, 173, 237]),
        cfg(Kind::Tri, &[-11, 13, 73]),
        cfg(Kind::Tri, &[-2, 3, 6]),
    ]
}

fn local_faces(c: &Config) -> Vec<FaceId> {
    match c {
        Config::Grid(g) => {
            let mut v = Vec::new();
            for i in -2..3 {
                for j in -2..3 {
                    v.push(FaceId::Grid(GridFace { i, j, up: true }));
                    if g.lattice == Lattice::Tri {
                        v.push(FaceId::Grid(GridFace { i, j, up: false }));
                    }
                }
            }
            v
        }
        _ => c.all_faces(),
    }
}

#[test]
fn generators_are_involutions_fixing_their_face() {
    for c in sample_configs() {
        for f in local_faces(&c) {
            let n = apply_generator(&c, f).unwrap();
            assert_eq!(apply_generator(&n, f).unwrap(), c);
            for x in c.face_circles(f).unwrap() {
                assert_eq!(c.curvature(x).unwrap(), n.curvature(x).unwrap());
            }
            // the image is again a valid configuration of the same type
            let again = validate_config(c.kind(), &n.seed_values(), Sign::Plus);
            if let Config::Grid(g) = n {
                assert_eq!(bilinear(g.lattice, &g.poly, &g.poly), 0);
            } else {
                assert!(again.is_ok(), "{n}");
            }
            assert_eq!(modular_type(&n).unwrap(), modular_type(&c).unwrap());
        }
    }
}

#[test]
fn modular_type_examples() {
    let label = |k, v: &[i64]| modular_type(&cfg(k, v)).unwrap().label;
    assert_eq!(label(Kind::Oct, &[-6, 10, 17, 17, 24, 40]), "(0,1,2)");
    assert_eq!(label(Kind::Cube, &[-1, 2, 3, 4, 6, 7, 8, 11]), "(0,2,3)");
    assert_eq!(label(Kind::Tri, &[-11, 13, 73]), "(1)");
    assert_eq!(label(Kind::Square, &[-1, 2, 3, 6]), "full");
    assert_eq!(label(Kind::Square, &[-1, 3, 3, 7]), "(3,7)");
    assert_eq!(label(Kind::Tri, &[-2, 3, 6]), "(0,1,3,4,6,7,9,10)");
    assert_eq!(label(Kind::Tri, &[-1, 2, 2]), "(2,5,8,11)");
    assert_eq!(label(Kind::Oct, &[-2, 4, 5, 5, 6, 12]), "(4,5,6)");
}

#[test]
fn grid_window_relations() {
    for c in sample_configs() {
        let Config::Grid(g) = c else { continue };
        for i in -4..4 {
            for j in -4..4 {
                match g.lattice {
                    Lattice::Square => {
                        assert_eq!(g.at(i, j) + g.at(i + 1, j + 1), g.at(i + 1, j) + g.at(i, j + 1));
                        let (jj, k, l, m) = (g.at(i, j), g.at(i + 1, j), g.at(i + 1, j + 1), g.at(i + 2, j + 1));
                        assert_eq!((jj - 3 * k).pow(2) + (m - 3 * l).pow(2), 2 * (jj + k) * (m + l));
                    }
                    Lattice::Tri => {
                        // diamond on the shared edge (i+1,j)-(i,j+1)
                        let (a, c2) = (g.at(i + 1, j), g.at(i, j + 1));
                        let (b, d) = (g.at(i, j), g.at(i + 1, j + 1));
                        assert_eq!((3 * a - b + 3 * c2 - d).pow(2), 12 * a * c2 + 4 * b * d);
                        assert_eq!(6 * a + 2 * b + 6 * c2 - d, {
                            let f = GridFace { i, j: j, up: true };
                            g.flip(&f).at(i + 1, j + 1)
                        });
                    }
                }
            }
        }
    }
}

#[test]
fn both_signs_share_the_seed_face_and_differ_by_its_flip() {
    for (k, v) in [(Kind::Square, vec![1, 1, 1, 1]), (Kind::Square, vec![-3, 5, 12, 20]), (Kind::Tri, vec![1, 1, 1]), (Kind::Tri, vec![-7, 9, 33])] {
        let p = validate_config(k, &v, Sign::Plus).unwrap();
        let m = validate_config(k, &v, Sign::Minus).unwrap();
        assert_eq!(p.seed_values(), m.seed_values());
        let f = FaceId::Grid(GridFace { i: 0, j: 0, up: true });
        assert_eq!(apply_generator(&p, f).unwrap(), m);
    }
}

#[test]
fn face_polys_vanish_on_face_and_are_positive_off_it() {
    for lat in [Lattice::Square, Lattice::Tri] {
        for up in [true, false] {
            if lat == Lattice::Square && !up {
                continue;
            }
            let f = GridFace { i: 2, j: -3, up };
            let h = f.poly(lat);
            assert_eq!(bilinear(lat, &h, &h), 1);
            let verts = f.vertices(lat);
            let floor = if lat == Lattice::Square { 2 } else { 1 };
            for i in -8..8 {
                for j in -8..8 {
                    let v = h.eval(lat, i, j);
                    if verts.contains(&(i, j)) {
                        assert_eq!(v, 0);
                    } else {
                        assert!(v >= floor, "{lat:?} {f:?} ({i},{j}) -> {v}");
                    }
                }
            }
        }
    }
}

#[test]
fn flip_coefficient_polynomial_matches_bilinear_form() {
    for c in sample_configs() {
        let Config::Grid(g) = c else { continue };
        for up in [true, false] {
            if g.lattice == Lattice::Square && !up {
                continue;
            }
            let tp = flip_coefficients(g.lattice, &g.poly, up);
            for i in -5..5 {
                for j in -5..5 {
                    assert_eq!(tp.eval(g.lattice, i, j), g.t_star(&GridFace { i, j, up }));
                }
            }
        }
    }
}

#[test]
fn lattice_enumeration_is_exact() {
    for c in sample_configs() {
        let Config::Grid(g) = c else { continue };
        let bound = 5000;
        let mut got = Vec::new();
        for_each_le(g.lattice, &g.poly, bound, |i, j, v| got.push((i, j, v)));
        got.sort();
        let mut want = Vec::new();
        for i in -200..200 {
            for j in -200..200 {
                let v = g.at(i, j);
                if v <= bound {
                    want.push((i, j, v));
                }
            }
        }
        want.sort();
        assert_eq!(got, want);
    }
}

#[test]
fn tangent_form_examples() {
    let c = cfg(Kind::Oct, &[1, 0, 2, 0, 2, 1]);
    let t = tangent_forms(&c, CircleId::Slot(0)).unwrap();
    assert_eq!((t.alpha.a, t.alpha.b, t.alpha.c), (3, -4, 2));
    assert_eq!(t.alpha.disc(), num_rational::Ratio::from_integer(-8));
    assert_eq!(t.curvature(1, 0), Some(2));
    assert!(tangent_forms(&c, CircleId::Site(0, 0)).is_err());
}

#[test]
fn tangent_forms_reproduce_neighbors_and_discriminants() {
    for c in sample_configs() {
        let circles: Vec<CircleId> = match c {
            Config::Grid(_) => (-2..3).flat_map(|i| (-2..3).map(move |j| CircleId::Site(i, j))).collect(),
            _ => c.seed_circles(),
        };
        let (da, db) = forms::expected_disc_over_a2(c.kind());
        for x in circles {
            let t = tangent_forms(&c, x).unwrap();
            let a2 = num_rational::Ratio::from_integer((t.a as i128).pow(2));
            assert_eq!(t.alpha.disc(), da * a2);
            assert_eq!(t.beta.disc(), db * a2);
            let reps: std::collections::HashSet<i64> =
                TangentForms::arguments(3).filter_map(|(p, q)| t.curvature(p, q)).collect();
            for n in c.neighbors(x).unwrap() {
                assert!(reps.contains(&c.curvature(n).unwrap()), "{c} {x:?} misses {n:?}");
            }
        }
    }
}

#[test]
fn ford_examples() {
    assert_eq!(ford_circle(Kind::Oct, 1, 1).unwrap().circle, crate::geometry::circle(2, [(4, 0), (2, 0), (0, 2), (1, 0)]));
    assert_eq!(ford_circle(Kind::Cube, 1, 0).unwrap().circle, crate::geometry::circle(2, [(8, 0), (0, 0), (0, 0), (1, 0)]));
    let t = ford_circle(Kind::Tri, 1, 1).unwrap().circle;
    assert_eq!(t, crate::geometry::circle(3, [(12, 0), (1, 0), (0, 2), (1, 0)]));
    assert_eq!(t.norm(), QuadRat::one(3));
}

fn q(d: u8, r: i64, s: i64) -> QuadRat {
    QuadRat::from_parts(d, (r, 1), (s, 1))
}

#[test]
fn oct_and_cube_reflection_tables_hold() {
    for kind in [Kind::Oct, Kind::Cube] {
        let duals = dual_circles(kind);
        let refl = ford::reflection_table(kind);
        let ips = ford::inner_product_table(kind);
        for f in ford_circles(kind, 20) {
            for (k, d) in duals.iter().enumerate() {
                let (x2, y2) = refl[k](f.x, f.y);
                let want = ford_circle(kind, x2, y2).unwrap();
                assert_eq!(reflect(&f.circle, d).unwrap(), want.circle, "{kind} d{} on ({},{})", k + 1, f.x, f.y);
                assert_eq!(want.class, f.class);
                let ip = ips[k](f.x, f.y);
                let ip = match (kind, f.class) {
                    (Kind::Oct, FormClass::Beta) => q(2, 0, ip / 2),
                    _ => q(2, 0, ip),
                };
                assert_eq!(inner_product(&f.circle, d).unwrap(), ip);
            }
        }
    }
    // d1 on the octahedral strip, as stated
    let c = ford_circle(Kind::Oct, 3, 2).unwrap().circle;
    assert_eq!(inner_product(&c, &dual_circles(Kind::Oct)[0]).unwrap(), q(2, 0, -2 * 3 * 2));
}

#[test]
fn ford_sets_closed_under_all_duals() {
    for kind in Kind::ALL {
        let duals = dual_circles(kind);
        for d in &duals {
            assert_eq!(d.norm(), QuadRat::one(kind.field_tag()));
            assert!(d.h2.is_zero(), "dual circles are orthogonal to the real axis");
        }
        for f in ford_circles(kind, 20) {
            assert_eq!(ford::ford_params(kind, &f.circle).as_ref(), Some(&f));
            for d in &duals {
                let r = reflect(&f.circle, d).unwrap();
                let back = ford::ford_params(kind, &r).unwrap_or_else(|| panic!("{kind}: ({},{}) leaves the set", f.x, f.y));
                assert_eq!(back.class, f.class);
            }
        }
    }
}

#[test]
fn only_base_circles_meet_duals() {
    let base: [(Kind, &[(i64, i64)]); 4] = [
        (Kind::Oct, &[(1, 0), (0, 1), (1, 1), (2, 1)]),
        (Kind::Cube, &[(1, 0), (0, 1), (1, 1)]),
        (Kind::Square, &[(1, 0), (0, 1), (1, 1), (-1, 1)]),
        (Kind::Tri, &[(1, 0), (0, 1), (1, 1), (1, 2), (2, 3), (1, 3)]),
    ];
    for (kind, want) in base {
        let mut got = ford::circles_meeting_duals(kind, 20);
        got.sort();
        let mut want = want.to_vec();
        want.sort();
        assert_eq!(got, want, "{kind}");
        // every such meeting is orthogonal
        for &(x, y) in &got {
            let c = ford_circle(kind, x, y).unwrap().circle;
            for d in dual_circles(kind) {
                let ip = inner_product(&c, &d).unwrap();
                assert!(ip.is_zero() || ip.to_f64().abs() >= 1.0);
            }
        }
    }
}

#[test]
fn simultaneous_examples() {
    let c = cfg(Kind::Cube, &[-1, 2, 3, 4, 6, 7, 8, 11]);
    let (k, l) = simultaneous_tangent(&c, (CircleId::Slot(0), CircleId::Slot(1)), 2).unwrap();
    assert_eq!(2 * (-1) + 2 * 2 + 4 * (-1) + 3 * 2, 4);
    assert!(k == 4 || l == Some(4));
    let strip = cfg(Kind::Oct, &[1, 0, 2, 0, 2, 1]);
    // slots b (the line) and a (curvature 1): circles 2n^2 up to the frame's shift
    let fam = simultaneous::pair_family(&strip, CircleId::Slot(1), CircleId::Slot(0)).unwrap();
    let vals: Vec<i64> = (-3..4).map(|n| fam.at(n).unwrap().0).collect();
    for v in &vals {
        let h = v / 2;
        assert_eq!(v % 2, 0);
        assert_eq!((h as f64).sqrt().round() as i64 * (h as f64).sqrt().round() as i64, h);
    }
    let t = cfg(Kind::Tri, &[-11, 13, 73]);
    let g = t.as_grid().unwrap();
    let fam = simultaneous::pair_family(&t, CircleId::Site(0, 0), CircleId::Site(0, 1)).unwrap();
    let (b, d) = (fam.at(0).unwrap().0, fam.at(1).unwrap().0);
    let tips = [g.at(1, 0) as i64, g.at(-1, 1) as i64];
    assert!(tips.contains(&b) && tips.contains(&d) && b != d || tips[0] == tips[1]);
    assert!(simultaneous_tangent(&c, (CircleId::Slot(0), CircleId::Slot(6)), 0).is_err());
}

/// Walks the circles tangent to a pair by alternating the two faces through it.
/// Ladder families report the other two vertices of each face through the pair.
fn walk(c: &Config, p: CircleId, q: CircleId, steps: usize) -> Vec<(i64, Option<i64>)> {
    let faces: Vec<FaceId> = c.faces_containing(p).into_iter().filter(|f| c.faces_containing(q).contains(f)).collect();
    assert_eq!(faces.len(), 2);
    let ladder = matches!(c.kind(), Kind::Cube | Kind::Square);
    let seen = |k: &Config| -> Vec<(i64, Option<i64>)> {
        let mut out = Vec::new();
        if ladder {
            for &f in &faces {
                let vs = k.face_circles(f).unwrap();
                let near = |x: CircleId, other: CircleId| {
                    *vs.iter().find(|&&v| v != x && v != other && k.adjacent(v, x).unwrap()).unwrap()
                };
                out.push((k.curvature(near(p, q)).unwrap(), Some(k.curvature(near(q, p)).unwrap())));
            }
        } else {
            let nq = k.neighbors(q).unwrap();
            for x in k.neighbors(p).unwrap() {
                if x != q && nq.contains(&x) {
                    out.push((k.curvature(x).unwrap(), None));
                }
            }
        }
        out
    };
    let mut vals = seen(c);
    for start in 0..2 {
        let mut k = *c;
        for s in 0..steps {
            k = apply_generator(&k, faces[(start + s) % 2]).unwrap();
            vals.extend(seen(&k));
        }
    }
    vals.sort();
    vals.dedup();
    vals
}

#[test]
fn walked_simultaneous_circles_match_formulas() {
    for c in sample_configs() {
        for (p, q) in c.edges() {
            let fam = simultaneous::pair_family(&c, p, q).unwrap();
            let walked = walk(&c, p, q, 5);
            let formula: Vec<(i64, Option<i64>)> = (-12..13).map(|n| fam.at(n).unwrap()).collect();
            for v in &walked {
                assert!(formula.contains(v), "{c} pair {p:?} {q:?}: walked {v:?} not in {formula:?}");
            }
            for n in -2..3 {
                assert!(walked.contains(&fam.at(n).unwrap()), "{c} pair {p:?} {q:?}: n = {n}, walked {walked:?}");
            }
        }
    }
}

#[test]
fn insertion_guarantees() {
    let c = cfg(Kind::Oct, &[-2, 4, 5, 5, 6, 12]);
    for (p, q) in c.edges() {
        let (a, b) = (c.curvature(p).unwrap(), c.curvature(q).unwrap());
        let ins = coprime_insert(&c, (p, q), 200).unwrap();
        use num_integer::Integer;
        if a % 2 == 0 && b % 2 == 0 {
            assert_eq!((ins.near_first.gcd(&a), ins.near_first.gcd(&b)), (1, 1));
        }
    }
    let t = cfg(Kind::Tri, &[1, 1, 1]);
    let ins = coprime_insert(&t, (CircleId::Site(0, 0), CircleId::Site(0, 1)), 10).unwrap();
    assert_eq!((ins.n, ins.near_first), (0, t.curvature(CircleId::Site(-1, 1)).unwrap()));
    let q = cfg(Kind::Cube, &[-7, 16, 18, 25, 41, 48, 50, 73]);
    for (p, r) in q.edges() {
        let ins = coprime_insert(&q, (p, r), 500).unwrap();
        let l = ins.near_second.unwrap();
        use num_integer::Integer;
        assert_eq!(ins.near_first.gcd(&q.curvature(p).unwrap()), 1);
        assert_eq!(l.gcd(&q.curvature(r).unwrap()), 1);
        assert!((ins.near_first.gcd(&l) as u64).is_power_of_two());
    }
}

#[test]
fn colorings_are_proper() {
    for c in sample_configs() {
        match coloring(&c) {
            Ok(col) => {
                let sites: Vec<CircleId> = match c {
                    Config::Grid(_) => (-3..3).flat_map(|i| (-3..3).map(move |j| CircleId::Site(i, j))).collect(),
                    _ => c.seed_circles(),
                };
                for x in sites {
                    for y in c.neighbors(x).unwrap() {
                        assert_ne!(col.color(x), col.color(y));
                    }
                }
            }
            Err(_) => assert_eq!(c.kind(), Kind::Square),
        }
    }
    let c = cfg(Kind::Oct, &[-6, 10, 17, 17, 24, 40]);
    let col = coloring(&c).unwrap();
    assert_eq!(col.color(CircleId::Slot(2)), col.color(CircleId::Slot(3)));
    assert_eq!(col.color(CircleId::Slot(0)), col.color(CircleId::Slot(5)));
    assert_eq!(coloring::odd_pair(&c), Some(2));
    assert_eq!(coloring(&cfg(Kind::Cube, &[-1, 2, 3, 4, 6, 7, 8, 11])).unwrap().classes(), 2);
}

#[test]
fn parse_helpers() {
    assert_eq!(parse_seed("-1, 2,3").unwrap(), vec![-1, 2, 3]);
    assert!(parse_seed("1,x").is_err());
    assert_eq!("tri".parse::<Kind>().unwrap(), Kind::Tri);
    assert!("hex".parse::<Kind>().is_err());
    assert_eq!("-".parse::<Sign>().unwrap(), Sign::Minus);
}
