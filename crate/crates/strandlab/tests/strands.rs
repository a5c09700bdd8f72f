use itertools::Itertools;
use strandlab::oracle::Oracle;
use strandlab::quiver::{all_string_modules, Quiver};
use strandlab::strands::{lift_module, Line, StrandDiagram};

#[test]
fn fundamental_iff_exceptional_atilde3() {
    let q = Quiver::straight_atilde(3);
    let oracle = Oracle::linear(&q);
    let mods = all_string_modules(&q, 8);
    let line = Line::straight_cover(4);
    let mut fundamental = 0;
    let mut mismatches = Vec::new();
    for set in mods.iter().copied().combinations(4) {
        let strands = set.iter().map(|m| lift_module(&q, m).unwrap()).collect();
        let d = StrandDiagram::new(line.clone(), strands);
        let f = d.is_fundamental();
        let e = oracle.sort_exceptional_set(&set).unwrap().is_some();
        if f {
            fundamental += 1;
        }
        if f != e {
            mismatches.push((set.clone(), f, e, d.violations()));
        }
    }
    for m in mismatches.iter().take(10) {
        eprintln!("{:?}", m);
    }
    assert!(mismatches.is_empty(), "{} mismatches, {} fundamental", mismatches.len(), fundamental);
    eprintln!("fundamental sets: {fundamental}");
}

#[test]
fn fundamental_iff_exceptional_atilde2_long() {
    let q = Quiver::straight_atilde(2);
    let oracle = Oracle::linear(&q);
    let mods = all_string_modules(&q, 10);
    let line = Line::straight_cover(3);
    let mut fundamental = 0;
    for set in mods.iter().copied().combinations(3) {
        let strands = set.iter().map(|m| lift_module(&q, m).unwrap()).collect();
        let d = StrandDiagram::new(line.clone(), strands);
        let f = d.is_fundamental();
        let e = oracle.sort_exceptional_set(&set).unwrap().is_some();
        assert_eq!(f, e, "{set:?} {:?}", d.violations());
        fundamental += usize::from(f);
    }
    assert!(fundamental > 0);
}

use std::collections::BTreeSet;
use strandlab::quiver::ComponentClass;
use strandlab::strands::*;

#[test]
fn phi_injective_and_psi_round_trip() {
    let q = Quiver::straight_atilde(3);
    let mods = all_string_modules(&q, 12);
    let lifts: BTreeSet<Strand> = mods.iter().map(|m| lift_module(&q, m).unwrap()).collect();
    assert_eq!(lifts.len(), mods.len());
    for m in &mods {
        let a = arc_of_module(&q, m).unwrap();
        let (back, cls) = module_of_arc(&q, &a).unwrap();
        assert_eq!(back, *m);
        assert_eq!(cls, strandlab::quiver::classify_component(&q, m).unwrap());
        if a.is_bridging() {
            let from_inner = a.from == 0;
            assert_eq!(from_inner, cls == ComponentClass::Preinjective, "{a} {m}");
        }
        assert_eq!(Arc::from_strand(3, &a.to_strand(3).unwrap()), a);
    }
}

#[test]
fn type_a_lifts() {
    let q = Quiver::straight_a(4);
    for m in all_string_modules(&q, 4) {
        let StringModule::Interval { x, y } = m else { unreachable!() };
        assert_eq!(lift_module(&q, &m).unwrap(), Strand::c(x as i64, y as i64));
    }
    let qa = Quiver::straight_atilde(3);
    // simple right-regular module at vertex 4
    let s4 = StringModule::from_start_len(4, 4, 1);
    assert_eq!(strandlab::quiver::classify_component(&qa, &s4).unwrap(), ComponentClass::Preprojective);
    let s1 = StringModule::from_start_len(4, 1, 1);
    assert_eq!(lift_module(&qa, &s1).unwrap(), Strand::c(0, 1));
}

use strandlab::quiver::StringModule;

#[test]
fn local_order_configurations() {
    let l = Line::type_a(4);
    let (s1, s2) = (Strand::c(0, 1), Strand::c(0, 2));
    assert_eq!(l.local_order(&s1, &s2, 0).unwrap(), Rotation::Clockwise);
    assert_eq!(l.local_order(&s2, &s1, 0).unwrap(), Rotation::Counterclockwise);
    let cover = Line::straight_cover(4);
    let (b1, b2) = (Strand::c(4, 5), Strand::c(4, 6));
    let r = cover.local_order(&b1, &b2, 4).unwrap();
    assert_ne!(r, cover.local_order(&b2, &b1, 4).unwrap());
    assert!(l.local_order(&Strand::c(0, 2), &Strand::c(1, 3), 0).is_err());
    assert!(l.local_order(&s1, &Strand::c(2, 3), 0).is_err());
}

#[test]
fn violations() {
    let l = Line::type_a(3);
    let tri = StrandDiagram::new(l.clone(), vec![Strand::c(0, 1), Strand::c(1, 2), Strand::c(0, 2)]);
    assert!(tri.violations().iter().any(|v| matches!(v, Violation::Cycle { .. })));
    let cross = StrandDiagram::new(l.clone(), vec![Strand::c(0, 2), Strand::c(1, 3), Strand::c(2, 3)]);
    assert!(cross.violations().iter().any(|v| matches!(v, Violation::Crossing { .. })));
    let ok = StrandDiagram::new(l, vec![Strand::c(0, 3), Strand::c(1, 3), Strand::c(1, 2)]);
    assert!(ok.is_fundamental());
    // a strand of length N on the cover loops
    let cover = Line::straight_cover(3);
    let looped = StrandDiagram::new(cover.clone(), vec![Strand::c(0, 3), Strand::c(1, 3), Strand::c(2, 3)]);
    assert!(looped.violations().iter().any(|v| matches!(v, Violation::Loop { .. })));
    assert!(cover.self_intersects(&Strand::c(1, 5)));
    assert!(!cover.self_intersects(&Strand::c(1, 6)));
    // lifts outside the image of Φ
    let shifted = StrandDiagram::new(cover, vec![Strand::c(3, 4), Strand::c(1, 2), Strand::c(0, 2)]);
    assert!(shifted.violations().iter().any(|v| matches!(v, Violation::NotInImage { .. })));
}

#[test]
fn four_arc_representative_fundamental() {
    let d = ArcDiagram::from_strands(3, &[Strand::c(0, 2), Strand::c(1, 2), Strand::c(2, 3), Strand::c(2, 4)]);
    assert!(d.is_fundamental());
    let q = Quiver::straight_atilde(3);
    assert!(Oracle::linear(&q).sort_exceptional_set(&d.modules()).unwrap().is_some());
}

#[test]
fn twists() {
    let d = ArcDiagram::new(3, vec![Arc::new(3, 0, 0)]).unwrap();
    assert_eq!(d.inner_twist(1).arcs, vec![Arc::new(3, 0, 1)]);
    assert_eq!(d.inner_twist(0), d);
    let e = ArcDiagram::new(3, vec![Arc::new(0, 2, 1)]).unwrap();
    assert_eq!(e.inner_twist(-1).arcs, vec![Arc::new(0, 2, 0)]);
    assert_eq!(ArcDiagram::new(3, vec![Arc::new(0, 2, 0)]).unwrap().inner_twist(-1).arcs, vec![Arc::new(0, 2, -1)]);
    let ext = ArcDiagram::new(3, vec![Arc::new(1, 3, 0)]).unwrap();
    assert_eq!(ext.inner_twist(5), ext);
    let q = Quiver::straight_atilde(3);
    for set in all_string_modules(&q, 6).into_iter().combinations(2) {
        let d = ArcDiagram::from_strands(3, &set.iter().map(|m| lift_module(&q, m).unwrap()).collect::<Vec<_>>());
        for k in -2..=2 {
            assert_eq!(d.inner_twist(k).inner_twist(-k), d);
            assert_eq!(d.inner_twist(k).outer_twist(), d.outer_twist().inner_twist(k));
        }
        let mut full = d.clone();
        for _ in 0..3 {
            full = full.outer_twist();
        }
        assert_eq!(full, d.inner_twist(-1));
    }
}

#[test]
fn inner_twist_keeps_bridging_diagrams_fundamental() {
    let q = Quiver::straight_atilde(3);
    let oracle = Oracle::linear(&q);
    let bridging: Vec<Arc> = (1..=3).flat_map(|i| [Arc::new(0, i, 0), Arc::new(i, 0, 0)]).collect();
    for pick in bridging.into_iter().combinations(4) {
        let d = ArcDiagram::new(3, pick).unwrap();
        for k in -1..=1 {
            let t = d.inner_twist(k);
            assert_eq!(t.is_fundamental(), d.is_fundamental());
            let exc = oracle.sort_exceptional_set(&t.modules()).unwrap().is_some();
            assert_eq!(exc, t.is_fundamental(), "{t}");
        }
    }
}

#[test]
fn json_shapes() {
    assert_eq!(serde_json::to_string(&Strand::c(0, 11)).unwrap(), r#"{"i":0,"j":11}"#);
    let a: Arc = serde_json::from_str(r#"{"from":3,"to":0,"lambda":1,"fromSide":"outer","toSide":"inner"}"#).unwrap();
    assert_eq!(a, Arc::new(3, 0, 1));
    assert!(Arc { to_side: Side::Outer, ..a }.canonical(3).is_err());
}

#[test]
fn twist_words() {
    let q = Quiver::straight_atilde(3);
    let mods = all_string_modules(&q, 6);
    let d = ArcDiagram::from_strands(3, &mods[..3].iter().map(|m| lift_module(&q, m).unwrap()).collect::<Vec<_>>());
    for inner in -2..=2 {
        for outer in -7..=7 {
            let w = TwistWord { inner_twists: inner, outer_twists: outer };
            let mut by_hand = d.inner_twist(inner);
            for _ in 0..outer.rem_euclid(3) {
                by_hand = by_hand.outer_twist();
            }
            by_hand = by_hand.inner_twist(-outer.div_euclid(3));
            assert_eq!(d.apply(w), by_hand);
            assert_eq!(d.apply(w).apply(w.inverse(3)), d);
            let v = TwistWord { inner_twists: 1, outer_twists: 2 };
            assert_eq!(d.apply(w).apply(v), d.apply(w.compose(v, 3)));
        }
    }
}
