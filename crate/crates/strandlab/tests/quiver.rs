use proptest::prelude::*;
use strandlab::linalg::Matrix;
use strandlab::quiver::*;

#[test]
fn example_representation() {
    let q = Quiver::straight_atilde(3);
    let steps = vec![
        Step { arrow: 2, inverse: false },
        Step { arrow: 3, inverse: true },
        Step { arrow: 0, inverse: false },
        Step { arrow: 1, inverse: false },
        Step { arrow: 2, inverse: false },
    ];
    let w = Walk::new(&q, 3, steps).unwrap();
    let m = convert_notation(&q, Ijk { i: 2, j: 4, k: 6 }).unwrap();
    assert_eq!(m.walk(&q).unwrap(), w);
    let r = realize_walk(&q, &w, false).unwrap();
    assert_eq!(r.dims, vec![1, 1, 2, 2]);
    assert_eq!(r.maps[0], Matrix::from_i64(1, 1, &[1]));
    assert_eq!(r.maps[1], Matrix::from_i64(2, 1, &[1, 0]));
    assert_eq!(r.maps[2], Matrix::identity(2));
    assert_eq!(r.maps[3], Matrix::from_i64(2, 1, &[0, 1]));
    assert!(r.check(&q));
    assert_eq!(realize(&q, &m).unwrap(), r);
}

#[test]
fn type_a_examples() {
    let q = Quiver::straight_a(2);
    assert_eq!(q.arrows, vec![Arrow { source: 1, target: 2 }]);
    let r = realize(&q, &StringModule::interval(0, 2)).unwrap();
    assert_eq!((r.dims.clone(), r.maps[0].clone()), (vec![1, 1], Matrix::from_i64(1, 1, &[1])));
    let q3 = Quiver::straight_a(3);
    let s2 = realize(&q3, &StringModule::interval(1, 2)).unwrap();
    assert_eq!(s2.dims, vec![0, 1, 0]);
    assert!(s2.maps.iter().all(|m| m.is_zero()));
    assert_eq!(euler_form(&q, &[1, 1], &[1, 1]).unwrap(), 1);
    assert_eq!(euler_form(&q, &[0, 0], &[3, 1]).unwrap(), 0);
    assert!(euler_form(&q, &[1], &[1, 1]).is_err());
}

#[test]
fn classification_examples() {
    let q = Quiver::straight_atilde(3);
    use ComponentClass::*;
    let cls = |i, j, k| classify_component(&q, &convert_notation(&q, Ijk { i, j, k }).unwrap()).unwrap();
    assert_eq!(cls(3, 4, 5), Preprojective);
    assert_eq!(cls(2, 4, 6), Preprojective);
    assert_eq!(cls(4, 3, 3), Preinjective);
    assert_eq!(cls(4, 4, 4), RightRegular);
    assert_eq!(cls(1, 3, 2), LeftRegular);
    assert_eq!(classify_walk(&q, &Walk { start: 1, steps: vec![] }, true).unwrap(), Homogeneous);
    assert!(realize_walk(&q, &Walk { start: 1, steps: vec![] }, true).is_err());
    // a simple at a source with both neighbours targets: vertex 1 of the straight orientation
    let s1 = StringModule::from_start_len(4, 1, 1);
    assert_eq!(classify_component(&q, &s1).unwrap(), Preinjective);
}

#[test]
fn every_class_matches_straight_rule() {
    for n in 1..=5usize {
        let q = Quiver::straight_atilde(n);
        let nv = n + 1;
        for m in all_string_modules(&q, 3 * nv) {
            let (s, len) = m.start_len(&q).unwrap();
            let e = (s - 1 + len - 1) % nv + 1;
            let want = match (s == 1, e == nv) {
                (false, true) => ComponentClass::Preprojective,
                (true, false) => ComponentClass::Preinjective,
                (false, false) => ComponentClass::LeftRegular,
                (true, true) => ComponentClass::RightRegular,
            };
            assert_eq!(classify_component(&q, &m).unwrap(), want, "{m}");
        }
    }
}

proptest! {
    #[test]
    fn notation_round_trip(n in 1usize..6, s in 1usize..7, len in 1usize..20) {
        let nv = n + 1;
        let s = (s - 1) % nv + 1;
        let q = Quiver::straight_atilde(n);
        let m = StringModule::from_start_len(nv, s, len);
        let name = m.to_ijk(&q).unwrap();
        prop_assert_eq!(convert_notation(&q, name).unwrap(), m);
        prop_assert_eq!(m.start_len(&q).unwrap(), (s, len));
        let non_max = match m { StringModule::Winding { i, j, l } if l > 0 => Some(StringModule::Winding { i, j, l }), _ => None };
        if let Some(x) = non_max { prop_assert_eq!(x.normalized(&q).unwrap(), m); }
    }

    #[test]
    fn dims_are_visit_counts(n in 1usize..5, s in 1usize..6, len in 1usize..13) {
        let q = Quiver::straight_atilde(n);
        let nv = n + 1;
        let m = StringModule::from_start_len(nv, (s - 1) % nv + 1, len);
        let r = realize(&q, &m).unwrap();
        prop_assert!(r.check(&q));
        prop_assert_eq!(r.dims.iter().sum::<usize>(), len);
        prop_assert_eq!(r.dims, m.walk(&q).unwrap().visit_counts(&q));
    }
}
