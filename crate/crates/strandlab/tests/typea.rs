use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigUint;
use strandlab::counting::exceptional_sets_a;
use strandlab::oracle::Oracle;
use strandlab::quiver::{all_string_modules, Quiver, StringModule};
use strandlab::strands::Strand;
use strandlab::typea::*;

fn fifteen() -> (Vec<(&'static str, Strand)>, usize) {
    let c = Strand::c;
    (
        vec![
            ("R", c(0, 11)),
            ("A", c(0, 4)),
            ("Aa", c(0, 1)),
            ("Ab", c(2, 4)),
            ("Abb", c(2, 3)),
            ("Ac", c(4, 5)),
            ("B", c(7, 11)),
            ("Ba", c(10, 11)),
            ("Bb", c(7, 9)),
            ("Bbb", c(8, 9)),
            ("Bc", c(6, 7)),
            ("C", c(11, 14)),
            ("Cb", c(13, 14)),
            ("Cbc", c(12, 13)),
            ("Cc", c(14, 15)),
        ],
        15,
    )
}

fn status_sets(st: &strandlab::oracle::RelativeStatus) -> (BTreeSet<StringModule>, BTreeSet<StringModule>) {
    (st.projectives(), st.injectives())
}

#[test]
fn fifteen_strand_tree_labels() {
    let (labelled, n) = fifteen();
    let set: Vec<Strand> = labelled.iter().map(|x| x.1).sorted().collect();
    let tree = ternary_tree(n, &set).unwrap();
    let got: BTreeMap<String, Strand> =
        tree.root.as_ref().unwrap().preorder().iter().map(|t| (t.label.clone(), t.strand)).collect();
    let want: BTreeMap<String, Strand> = labelled.iter().map(|(l, s)| (l.to_string(), *s)).collect();
    assert_eq!(got, want);
    let root = tree.root.as_ref().unwrap();
    let sizes: Vec<usize> = root.children().iter().map(|c| c.as_ref().unwrap().size()).collect();
    assert_eq!(root.strand, Strand::c(0, 11));
    assert_eq!(sizes, vec![5, 5, 4]);
    // gap p: first point not reached from 0 inside (0, k)
    assert_eq!(root.a.as_ref().unwrap().size() + 1, 6);
    assert_eq!(tree_to_set(&tree), set);
}

#[test]
fn fifteen_strand_colouring() {
    let (labelled, n) = fifteen();
    let set: Vec<Strand> = labelled.iter().map(|x| x.1).sorted().collect();
    let by_label: BTreeMap<&str, Strand> = labelled.iter().copied().collect();
    let blue: BTreeSet<Strand> =
        ["R", "A", "Aa", "Ac", "Bb", "C", "Cc", "Abb"].iter().map(|l| by_label[l]).collect();
    let red: BTreeSet<Strand> =
        ["B", "Ab", "Ba", "Bc", "Cb", "Cbc", "Bbb"].iter().map(|l| by_label[l]).collect();
    let tree = ternary_tree(n, &set).unwrap();
    assert_eq!(even_b_injectives(&tree), blue);
    assert_eq!(path_injectives(&tree), blue);
    let st = combinatorial_relatives(n, &set);
    for (m, r) in &st.entries {
        let s = match m {
            StringModule::Interval { x, y } => Strand::c(*x as i64, *y as i64),
            _ => unreachable!(),
        };
        assert_eq!(r.injective, blue.contains(&s), "{s}");
        if red.contains(&s) {
            assert!(r.projective && !r.injective, "{s} should be projective only");
        }
    }
    let oracle = Oracle::interval(n);
    let seq = oracle.sort_exceptional_set(&set_modules(&set)).unwrap().unwrap();
    let ordering: Vec<Strand> = seq
        .iter()
        .map(|m| match m {
            StringModule::Interval { x, y } => Strand::c(*x as i64, *y as i64),
            _ => unreachable!(),
        })
        .collect();
    assert_eq!(forest_status(&set, &ordering).unwrap(), st);
}

#[test]
fn counts_closed_form() {
    for n in 0..=7 {
        assert_eq!(BigUint::from(enumerate_sets(n).len()), exceptional_sets_a(n as u64), "n={n}");
    }
}

#[test]
fn brute_force_matches_enumeration() {
    for n in 1..=5 {
        let q = Quiver::straight_a(n);
        let oracle = Oracle::linear(&q);
        let mods = all_string_modules(&q, n);
        let brute: BTreeSet<Vec<StringModule>> = mods
            .iter()
            .copied()
            .combinations(n)
            .filter(|s| oracle.sort_exceptional_set(s).unwrap().is_some())
            .collect();
        let enumerated: BTreeSet<Vec<StringModule>> =
            enumerate_sets(n).iter().map(|s| set_modules(s)).collect();
        assert_eq!(enumerated.len(), enumerate_sets(n).len(), "duplicates at n={n}");
        assert_eq!(brute, enumerated, "n={n}");
    }
}

#[test]
fn tree_round_trip_and_paths() {
    for n in 0..=5 {
        let mut paths = BTreeSet::new();
        for set in enumerate_sets(n) {
            let tree = ternary_tree(n, &set).unwrap();
            assert_eq!(tree_to_set(&tree), set);
            let path = tree_to_lattice_path(&tree);
            assert!(path.is_ternary(n), "{path}");
            let shape = lattice_path_to_shape(&path).unwrap();
            assert_eq!(shape, tree.root.as_ref().map(|r| r.shape()));
            paths.insert(path);
        }
        assert_eq!(paths.len(), enumerate_sets(n).len());
    }
}

#[test]
fn four_routes_agree() {
    for n in 1..=5 {
        let oracle = Oracle::interval(n);
        for set in enumerate_sets(n) {
            let st = oracle.relative_status(&set_modules(&set)).unwrap();
            let comb = combinatorial_relatives(n, &set);
            assert_eq!(status_sets(&st), status_sets(&comb), "{set:?}");
            let tree = ternary_tree(n, &set).unwrap();
            let inj: BTreeSet<Strand> = comb
                .injectives()
                .iter()
                .map(|m| match m {
                    StringModule::Interval { x, y } => Strand::c(*x as i64, *y as i64),
                    _ => unreachable!(),
                })
                .collect();
            assert_eq!(even_b_injectives(&tree), inj);
            assert_eq!(path_injectives(&tree), inj);
        }
    }
}

#[test]
fn n_table_matches_enumeration() {
    let table = n_table(6);
    for total in 0..=5usize {
        let oracle = Oracle::interval(total.max(1));
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for set in enumerate_sets(total) {
            let inj = if total == 0 { 0 } else { oracle.relative_status(&set_modules(&set)).unwrap().injectives().len() };
            *counts.entry(inj).or_default() += 1;
        }
        for n in 0..=total {
            let m = total - n;
            let want = counts.get(&n).copied().unwrap_or(0);
            assert_eq!(table[&(n, m)], BigUint::from(want), "N_{{{n},{m}}}");
        }
    }
    for n in 0..=6 {
        assert_eq!(table[&(n, 0)], strandlab::counting::catalan(n as u64));
    }
}
