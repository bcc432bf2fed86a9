use super::*;
use crate::arith::QuadRat;

fn q(d: u8, r: i64, s: i64) -> QuadRat {
    QuadRat::from_parts(d, (r, 1), (s, 1))
}

#[test]
fn inner_product_examples() {
    let a = circle(2, [(4, 0), (0, 0), (0, 0), (1, 0)]);
    let b = circle(2, [(0, 0), (1, 0), (0, 0), (1, 0)]);
    assert_eq!(inner_product(&a, &b).unwrap(), q(2, -1, 0));
    assert_eq!(inner_product(&a, &a).unwrap(), q(2, 1, 0));
    assert!(tangent(&a, &b).unwrap());
}

#[test]
fn rejects_bad_input() {
    assert!(InversiveCircle::new(q(2, 1, 0), q(2, 1, 0), q(2, 0, 0), q(2, 0, 0)).is_err());
    let a = circle(2, [(4, 0), (0, 0), (0, 0), (1, 0)]);
    let b = circle(3, [(0, 0), (1, 0), (0, 0), (1, 0)]);
    assert!(inner_product(&a, &b).is_err());
    let fat = InversiveCircle::from_vec([q(2, 0, 0), q(2, 0, 0), q(2, 2, 0), q(2, 0, 0)]);
    assert_eq!(reflect(&a, &fat), Err(crate::error::Error::NonUnitMirror));
}

#[test]
fn euclidean_examples() {
    let c = circle(2, [(4, 0), (2, 0), (0, 2), (1, 0)]);
    match c.euclidean_data() {
        Euclid::Circle { center, radius } => {
            assert!((center.0 - 2f64.sqrt()).abs() < 1e-12 && (center.1 - 0.5).abs() < 1e-12);
            assert!((radius - 0.5).abs() < 1e-12);
        }
        _ => panic!("expected circle"),
    }
    assert_eq!(
        circle(2, [(0, 0), (1, 0), (0, 0), (1, 0)]).euclidean_data(),
        Euclid::Circle { center: (0.0, 1.0), radius: 1.0 }
    );
    assert_eq!(
        circle(2, [(0, 0), (0, 0), (0, 0), (-1, 0)]).euclidean_data(),
        Euclid::Line { normal: (0.0, -1.0), offset: 0.0 }
    );
}

#[test]
fn frame_map_sends_base_quadruple() {
    let src = [
        circle(2, [(0, 0), (0, 0), (0, 0), (-1, 0)]),
        circle(2, [(0, 0), (1, 0), (0, 0), (1, 0)]),
        circle(2, [(4, 0), (2, 0), (0, 2), (1, 0)]),
        circle(2, [(4, 0), (0, 0), (0, 0), (1, 0)]),
    ];
    // image under z -> 3z + 1 + i, then inversion
    let g = LinearCircleMap::inversion(2)
        .compose(&LinearCircleMap::translation(q(2, 1, 0), q(2, 1, 0)))
        .compose(&LinearCircleMap::scaling(q(2, 3, 0)).unwrap());
    let dst = src.clone().map(|c| apply_map(&g, &c).unwrap());
    let m = LinearCircleMap::from_frames(&src, &dst).unwrap();
    for (s, t) in src.iter().zip(&dst) {
        assert_eq!(&apply_map(&m, s).unwrap(), t);
    }
    assert_eq!(m, g);
}

#[test]
fn non_isometry_rejected() {
    let mut m = LinearCircleMap::identity(1).matrix().clone();
    m[2][2] = q(1, 2, 0);
    assert_eq!(LinearCircleMap::from_matrix(m), Err(crate::error::Error::NotFormPreserving));
}

#[test]
fn composition_is_linear() {
    let c = circle(3, [(12, 0), (1, 0), (0, 2), (1, 0)]);
    let m1 = LinearCircleMap::translation(q(3, 0, 1), q(3, 2, 0));
    let m2 = LinearCircleMap::inversion(3);
    let lhs = apply_map(&m1, &apply_map(&m2, &c).unwrap()).unwrap();
    let rhs = apply_map(&m1.compose(&m2), &c).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(apply_map(&LinearCircleMap::identity(3), &c).unwrap(), c);
    assert_eq!(lhs.norm(), q(3, 1, 0));
}

mod props {
    use super::*;
    use proptest::prelude::*;

    // circles through the Möbius images of the unit circle (0, 1, 0, 1)
    fn arb_circle() -> impl Strategy<Value = InversiveCircle> {
        (-5i64..5, -5i64..5, -3i64..3, 1i64..4, any::<bool>()).prop_map(|(t1, t2, ts, k, inv)| {
            let d = 2;
            let base = circle(d, [(0, 0), (1, 0), (0, 0), (1, 0)]);
            let mut m = LinearCircleMap::translation(q(d, t1, ts), q(d, t2, 0))
                .compose(&LinearCircleMap::scaling(q(d, k, 0)).unwrap());
            if inv {
                m = LinearCircleMap::inversion(d).compose(&m);
            }
            apply_map(&m, &base).unwrap()
        })
    }

    proptest! {
        #[test]
        fn reflection_preserves_inner_products(a in arb_circle(), b in arb_circle(), m in arb_circle()) {
            let ra = reflect(&a, &m).unwrap();
            let rb = reflect(&b, &m).unwrap();
            prop_assert_eq!(inner_product(&ra, &rb).unwrap(), inner_product(&a, &b).unwrap());
            prop_assert_eq!(reflect(&ra, &m).unwrap(), a);
        }
    }
}
