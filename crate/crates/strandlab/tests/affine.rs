use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigUint;
use strandlab::affine::*;
use strandlab::counting::{affine_representatives, four_interval_recursion};
use strandlab::oracle::Oracle;
use strandlab::quiver::Quiver;
use strandlab::strands::{Arc, ArcDiagram, Strand, TwistWord};

fn small_arcs(n: usize) -> Vec<Arc> {
    let mut v = vec![Arc::new(0, 0, 0)];
    for i in 1..=n {
        v.push(Arc::new(0, i, 0));
        v.push(Arc::new(i, 0, 0));
        for j in 1..=n {
            v.push(Arc::new(i, j, 0));
        }
    }
    v
}

#[test]
fn representative_counts() {
    let rec = four_interval_recursion(6);
    for n in 1..=6usize {
        let reps = enumerate_representatives(n);
        assert_eq!(BigUint::from(reps.len()), affine_representatives(n as u64), "n={n}");
        assert_eq!(BigUint::from(reps.len()), rec[n], "n={n}");
        let distinct: BTreeSet<_> = reps.iter().collect();
        assert_eq!(distinct.len(), reps.len());
    }
}

#[test]
fn representatives_valid() {
    for n in 1..=5usize {
        let oracle = Oracle::linear(&Quiver::straight_atilde(n));
        for rep in enumerate_representatives(n) {
            assert!(rep.is_valid(), "{rep:?}");
            assert!(oracle_check(&oracle, &rep), "{rep:?}");
        }
    }
}

#[test]
fn families_by_brute_force() {
    // a family is an inner-twist orbit; it can hold two small members when
    // all its bridging arcs point the same way, so key families by the
    // least small member
    for n in 1..=4usize {
        let arcs = small_arcs(n);
        let mut classes = BTreeSet::new();
        let mut families = BTreeSet::new();
        for pick in arcs.iter().copied().combinations(n + 1) {
            let d = ArcDiagram::new(n, pick).unwrap();
            if !d.is_fundamental() {
                continue;
            }
            let key = (-2..=2).map(|k| d.inner_twist(k)).filter(|e| e.is_small()).min().unwrap();
            families.insert(key);
            let (rep, w) = representative_of(&d).unwrap();
            assert_eq!(d.apply(w).arcs, rep.arcs().arcs);
            classes.insert(rep);
        }
        let reps: BTreeSet<_> = enumerate_representatives(n).into_iter().collect();
        assert_eq!(classes, reps, "n={n}");
        assert_eq!(families.len(), n * reps.len(), "n={n}");
    }
}

#[test]
fn checkpoint_family_totals() {
    let fam: Vec<usize> = (1..=2).map(|n| n * enumerate_representatives(n).len()).collect();
    assert_eq!(fam, vec![1, 8]);
    assert_eq!(3 * enumerate_representatives(3).len(), 54);
}

#[test]
fn labels_and_paths() {
    for n in 1..=5usize {
        let mut paths = BTreeSet::new();
        let reps = enumerate_representatives(n);
        for rep in &reps {
            let label = label_diagram(rep).unwrap();
            assert!(label.is_complete(), "{label:?}");
            let p = label_to_path(&label);
            assert!(p.is_rothe(n - 1), "{p}");
            paths.insert(p);
        }
        assert_eq!(paths.len(), reps.len(), "n={n}");
    }
    let xs: BTreeSet<i64> = enumerate_representatives(2)
        .iter()
        .map(|r| label_to_path(&label_diagram(r).unwrap()).vertical_xs()[0])
        .collect();
    assert_eq!(xs, (0..4).collect());
}

#[test]
fn seven_point_label() {
    let c = Strand::c;
    let rep = FamilyRepresentative::new(7, vec![c(0, 4), c(4, 8), c(2, 4), c(1, 2), c(2, 3), c(4, 6), c(6, 7), c(5, 6)]);
    assert!(rep.is_valid());
    assert!(enumerate_representatives(7).contains(&rep));
    let label = label_diagram(&rep).unwrap();
    let circled: BTreeSet<(String, Strand)> = label
        .under_a
        .iter()
        .flat_map(|w| {
            let mut v = Vec::new();
            collect(w, "A.", &mut v);
            v
        })
        .chain(label.under_b.iter().flat_map(|w| {
            let mut v = Vec::new();
            collect(w, "B.", &mut v);
            v
        }))
        .collect();
    let want: BTreeSet<(String, Strand)> = [
        ("A.c", c(2, 4)),
        ("A.ca", c(1, 2)),
        ("A.cb", c(2, 3)),
        ("B.a", c(4, 6)),
        ("B.aa", c(6, 7)),
        ("B.ac", c(5, 6)),
    ]
    .iter()
    .map(|(w, s)| (w.to_string(), *s))
    .collect();
    assert_eq!(circled, want);
    let p = label_to_path(&label);
    assert_eq!(p.end(), (16, 6));
    assert!(p.is_rothe(6));
}

fn collect(w: &Word, prefix: &str, out: &mut Vec<(String, Strand)>) {
    if w.circled {
        out.push((format!("{prefix}{}", w.word), w.strand.unwrap()));
    }
    for c in &w.children {
        collect(c, prefix, out);
    }
}

#[test]
fn four_arc_representative() {
    let c = Strand::c;
    let rep = FamilyRepresentative::new(3, vec![c(0, 2), c(1, 2), c(2, 3), c(2, 4)]);
    assert!(rep.is_valid());
    assert!(enumerate_representatives(3).contains(&rep));
}

#[test]
fn orbits() {
    for n in 1..=4usize {
        for rep in enumerate_representatives(n) {
            let orbit = expand_orbit(&rep);
            assert_eq!(orbit.len(), n);
            let distinct: BTreeSet<_> = orbit.iter().map(|m| m.diagram.clone()).collect();
            assert_eq!(distinct.len(), n);
            for m in &orbit {
                assert!(m.diagram.is_small() && m.diagram.is_fundamental());
                let (back, w) = representative_of(&m.diagram).unwrap();
                assert_eq!(back, rep);
                assert_eq!(w.outer_twists, ((n - m.shift) % n) as i64);
            }
            let (same, w) = representative_of(&rep.arcs()).unwrap();
            assert_eq!((same, w), (rep.clone(), TwistWord::default()));
            let (same, w) = representative_of(&rep.arcs().inner_twist(1)).unwrap();
            assert_eq!(same, rep);
            assert_eq!(w, TwistWord { inner_twists: -1, outer_twists: 0 });
        }
    }
}
