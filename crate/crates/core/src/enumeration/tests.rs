use num_integer::Integer;

use super::*;
use crate::kernel::{validate_config, CircleId, Config, Kind, Lattice, Sign};

fn cfg(kind: Kind, v: &[i64]) -> Config {
    validate_config(kind, v, Sign::Plus).unwrap()
}

fn small_seeds() -> Vec<Config> {
    vec![
        cfg(Kind::Oct, &[-1, 2, 2, 4, 4, 7]),
        cfg(Kind::Oct, &[-2, 3, 6, 8, 11, 16]),
        cfg(Kind::Cube, &[-1, 2, 3, 4, 6, 7, 8, 11]),
        cfg(Kind::Cube, &[-2, 5, 5, 6, 12, 13, 13, 20]),
        cfg(Kind::Square, &[-1, 2, 3, 6]),
        cfg(Kind::Square, &[1, 1, 1, 1]),
        cfg(Kind::Tri, &[-11, 13, 73]),
        cfg(Kind::Tri, &[1, 1, 1]),
        cfg(Kind::Tri, &[-2, 3, 6]),
    ]
}

#[test]
fn presence_basics() {
    let mut p = CurvaturePresence::new(100);
    for k in [-3, 0, 1, 64, 65, 100, 101] {
        p.insert(k);
    }
    assert_eq!(p.iter().collect::<Vec<_>>(), vec![1, 64, 65, 100]);
    assert_eq!(p.count(), 4);
    assert_eq!(p.words().len(), 2);
    assert_eq!(p.truncated(64).iter().collect::<Vec<_>>(), vec![1, 64]);
    assert!(CurvaturePresence::from_words(100, vec![0]).is_err());
    assert!(CurvaturePresence::from_words(100, vec![0, 1 << 40]).is_err());
    let q = CurvaturePresence::from_words(100, p.words().to_vec()).unwrap();
    assert_eq!(p, q);
}

#[test]
fn seed_curvatures_present() {
    for c in small_seeds() {
        let vals = c.seed_values();
        let n = *vals.iter().max().unwrap() as u64;
        let p = enumerate_curvatures(&c, n, &EnumOptions::default()).unwrap();
        for v in vals.into_iter().filter(|&v| v > 0) {
            assert!(p.contains(v as u64), "{c}: {v}");
        }
    }
}

#[test]
fn oracle_depth_zero_is_the_seed() {
    let c = cfg(Kind::Oct, &[-1, 2, 2, 4, 4, 7]);
    let p = oracle_enumerate(&c, 100, 0, 4);
    assert_eq!(p.iter().collect::<Vec<_>>(), vec![2, 4, 7]);
    let a = oracle_enumerate(&c, 300, 3, 4);
    let b = oracle_enumerate(&c, 300, 4, 4);
    assert!(a.iter().all(|k| b.contains(k)));
}

#[test]
fn local_flips_match_the_bilinear_flip() {
    for c in small_seeds() {
        let Config::Grid(g) = c else { continue };
        for i in -3..3 {
            for j in -3..3 {
                for up in [true, false] {
                    if g.lattice == Lattice::Square && !up {
                        continue;
                    }
                    let f = crate::kernel::GridFace { i, j, up };
                    assert_eq!(oracle::flip_for_tests(g.lattice, &g.poly, i, j, up), Some(g.flip(&f).poly));
                }
            }
        }
    }
}

#[test]
fn tree_matches_oracle_at_small_bound() {
    for c in small_seeds() {
        let t = enumerate_curvatures(&c, 600, &EnumOptions::default()).unwrap();
        let (o, _) = oracle_stabilized(&c, 600).unwrap();
        let only_t: Vec<u64> = t.iter().filter(|&k| !o.contains(k)).collect();
        let only_o: Vec<u64> = o.iter().filter(|&k| !t.contains(k)).collect();
        assert!(only_t.is_empty() && only_o.is_empty(), "{c}: tree only {only_t:?}, oracle only {only_o:?}");
    }
}

#[test]
fn strip_labels() {
    let strip = cfg(Kind::Oct, &[1, 0, 2, 0, 2, 1]);
    let p = oracle_enumerate(&strip, 100, 8, 4);
    for k in [8, 9, 18, 25, 32, 49, 50, 72] {
        assert!(p.contains(k), "{k}");
    }
    let t = enumerate_curvatures(&strip, 100, &EnumOptions::default()).unwrap();
    assert!(p.iter().all(|k| t.contains(k)));
}

#[test]
fn thread_count_does_not_matter() {
    for c in small_seeds() {
        let one = enumerate_curvatures(&c, 20_000, &EnumOptions { threads: Some(1), ..Default::default() }).unwrap();
        let four = enumerate_curvatures(&c, 20_000, &EnumOptions { threads: Some(4), ..Default::default() }).unwrap();
        assert_eq!(one, four);
        assert_eq!(one.stats, four.stats);
    }
}

#[test]
fn caps_are_reported() {
    let c = cfg(Kind::Oct, &[-1, 2, 2, 4, 4, 7]);
    let e = enumerate_curvatures(&c, 100_000, &EnumOptions { max_states: 10, ..Default::default() }).unwrap_err();
    assert_eq!(e.exit_code(), 3);
    let e = enumerate_curvatures(&c, 1 << 40, &EnumOptions { max_bitset_bytes: 1 << 20, ..Default::default() });
    assert_eq!(e.unwrap_err().exit_code(), 3);
}

#[test]
fn trivial_chains() {
    let c = cfg(Kind::Oct, &[-1, 2, 2, 4, 4, 7]);
    let x = CircleId::Slot(5);
    assert_eq!(coprime_path(&c, x, x).unwrap().len(), 1);
    let ch = coprime_path(&c, CircleId::Slot(0), CircleId::Slot(5)).unwrap();
    ch.verify().unwrap();
    let ch = coprime_path(&c, CircleId::Slot(2), CircleId::Slot(5)).unwrap();
    assert_eq!(ch.curvatures(), vec![2, 7]);
}

#[test]
fn even_pair_gets_one_insertion() {
    let c = cfg(Kind::Oct, &[-1, 2, 2, 4, 4, 7]);
    let ch = coprime_path(&c, CircleId::Slot(1), CircleId::Slot(3)).unwrap();
    let v = ch.curvatures();
    assert_eq!(v.len(), 3, "{v:?}");
    assert_eq!((v[0], v[2]), (2, 4));
    assert_eq!((v[1].gcd(&2), v[1].gcd(&4)), (1, 1));
}

#[test]
fn chains_between_curvatures() {
    let cases: [(Kind, &[i64], i64, i64); 6] = [
        (Kind::Oct, &[-1, 2, 2, 4, 4, 7], 4, 34),
        (Kind::Oct, &[-2, 3, 6, 8, 11, 16], 6, 48),
        (Kind::Cube, &[-1, 2, 3, 4, 6, 7, 8, 11], 8, 52),
        (Kind::Square, &[-1, 2, 3, 6], 6, 30),
        (Kind::Tri, &[-2, 3, 6], 6, 27),
        (Kind::Tri, &[-11, 13, 73], 13, 97),
    ];
    for (k, v, u, w) in cases {
        let c = cfg(k, v);
        let p = enumerate_curvatures(&c, w as u64, &EnumOptions::default()).unwrap();
        assert!(p.contains(u as u64));
        let w = p.iter().last().unwrap() as i64;
        let ch = coprime_path_between(&c, u, w).unwrap();
        ch.verify().unwrap();
        let cv = ch.curvatures();
        assert_eq!((cv[0], *cv.last().unwrap()), (u, w));
        assert!(cv.windows(2).all(|x| x[0].gcd(&x[1]) == 1));
    }
    assert!(coprime_path_between(&cfg(Kind::Oct, &[-1, 2, 2, 4, 4, 7]), 2, 5).is_err());
}
