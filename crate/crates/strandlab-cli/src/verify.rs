//! `verify`: property checks at a single size n, reported one per line.

use std::collections::BTreeSet;
use std::fmt;

use clap::ValueEnum;
use num_bigint::BigUint;
use strandlab::affine::{enumerate_representatives, expand_orbit, label_diagram, label_to_path, oracle_check, representative_of};
use strandlab::cluster::{conventions_coincide, hearts, small_triangulations};
use strandlab::counting::{self, RecursionKind};
use strandlab::oracle::{hom_ext, interval_hom_ext, Oracle};
use strandlab::quiver::{all_string_modules, euler_form, Quiver, StringModule};
use strandlab::strands::Strand;
use strandlab::typea::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Counts,
    Oracle,
    Typea,
    Affine,
    Clusters,
    Twists,
}

type Outcome = Result<String, String>;

pub struct Report {
    n: usize,
    lines: Vec<(&'static str, Outcome)>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.lines.iter().all(|(_, r)| r.is_ok())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, r) in &self.lines {
            match r {
                Ok(m) => writeln!(f, "ok    {name} (n={}): {m}", self.n)?,
                Err(m) => writeln!(f, "FAIL  {name} (n={}): {m}", self.n)?,
            }
        }
        let bad = self.lines.iter().filter(|(_, r)| r.is_err()).count();
        writeln!(f, "{} checks, {bad} failed", self.lines.len())
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn strand_of(m: &StringModule) -> Strand {
    match m {
        StringModule::Interval { x, y } => Strand::c(*x as i64, *y as i64),
        StringModule::Winding { .. } => unreachable!("type A modules are intervals"),
    }
}

pub fn run(suite: Suite, n: usize) -> Report {
    let mut lines: Vec<(&'static str, Outcome)> = Vec::new();
    let on = |s: Suite| suite == Suite::All || suite == s;
    if on(Suite::Counts) {
        lines.push(("rothe recursions", counts(n)));
    }
    if on(Suite::Oracle) {
        lines.push(("interval closed form", interval_closed_form(n)));
        lines.push(("euler identity", euler(n)));
    }
    if on(Suite::Typea) {
        lines.push(("exceptional set count", typea_count(n)));
        lines.push(("sets exceptional", typea_exceptional(n)));
        lines.push(("relative status routes", typea_routes(n)));
        lines.push(("tree and path bijections", typea_bijections(n)));
    }
    if n >= 1 {
        if on(Suite::Affine) {
            lines.push(("representative count", affine_count(n)));
            lines.push(("representatives exceptional", affine_valid(n)));
            lines.push(("label paths", affine_labels(n)));
        }
        if on(Suite::Clusters) {
            lines.push(("small triangulation count", cluster_count(n)));
            lines.push(("unique heart", cluster_hearts(n)));
            lines.push(("conventions coincide iff fundamental", cluster_conventions(n)));
        }
        if on(Suite::Twists) {
            lines.push(("twist laws", twists(n)));
        }
    }
    Report { n, lines }
}

fn counts(n: usize) -> Outcome {
    for kind in [RecursionKind::Fuss(2), RecursionKind::Fuss(3), RecursionKind::FourInterval] {
        let r = counting::rothe_recursion_check(kind, n.max(1));
        check(r.ok(), || format!("{kind:?} disagrees"))?;
    }
    Ok("Fuss(2), Fuss(3) and four-interval sums match closed forms".into())
}

fn interval_closed_form(n: usize) -> Outcome {
    if n == 0 {
        return Ok("no modules".into());
    }
    let q = Quiver::straight_a(n);
    let mods = all_string_modules(&q, n);
    for a in &mods {
        for b in &mods {
            let (StringModule::Interval { x: p, y: r }, StringModule::Interval { x: c, y: d }) = (*a, *b) else {
                unreachable!()
            };
            let closed = interval_hom_ext(p, r, c, d, n).map_err(|e| e.to_string())?;
            check(closed == hom_ext(&q, a, b).map_err(|e| e.to_string())?, || format!("{a} vs {b}"))?;
        }
    }
    Ok(format!("{} pairs", mods.len() * mods.len()))
}

fn euler(n: usize) -> Outcome {
    let n = n.max(1);
    let q = Quiver::straight_atilde(n);
    let mods = all_string_modules(&q, 2 * (n + 1));
    for a in &mods {
        for b in &mods {
            let he = hom_ext(&q, a, b).map_err(|e| e.to_string())?;
            let da = a.dimension_vector(&q).map_err(|e| e.to_string())?;
            let db = b.dimension_vector(&q).map_err(|e| e.to_string())?;
            let chi = euler_form(&q, &da, &db).map_err(|e| e.to_string())?;
            check(he.hom as i64 - he.ext as i64 == chi, || format!("{a} vs {b}"))?;
        }
    }
    Ok(format!("{} affine string pairs", mods.len() * mods.len()))
}

fn typea_count(n: usize) -> Outcome {
    let got = enumerate_sets(n).len();
    let want = counting::exceptional_sets_a(n as u64);
    check(BigUint::from(got) == want, || format!("{got} sets, closed form {want}"))?;
    Ok(format!("{got}"))
}

fn typea_exceptional(n: usize) -> Outcome {
    if n == 0 {
        return Ok("empty set".into());
    }
    let o = Oracle::interval(n);
    for set in enumerate_sets(n) {
        let sorted = o.sort_exceptional_set(&set_modules(&set)).map_err(|e| e.to_string())?;
        check(sorted.is_some(), || format!("{set:?} is not exceptional"))?;
    }
    Ok("every set orders into an exceptional sequence".into())
}

fn typea_routes(n: usize) -> Outcome {
    if n == 0 {
        return Ok("empty set".into());
    }
    let o = Oracle::interval(n);
    for set in enumerate_sets(n) {
        let st = o.relative_status(&set_modules(&set)).map_err(|e| e.to_string())?;
        let comb = combinatorial_relatives(n, &set);
        check(st.projectives() == comb.projectives() && st.injectives() == comb.injectives(), || {
            format!("oracle and orientation differ on {set:?}")
        })?;
        let tree = ternary_tree(n, &set).map_err(|e| e.to_string())?;
        let inj: BTreeSet<Strand> = st.injectives().iter().map(strand_of).collect();
        check(even_b_injectives(&tree) == inj, || format!("tree rule differs on {set:?}"))?;
        check(path_injectives(&tree) == inj, || format!("lattice rule differs on {set:?}"))?;
    }
    Ok("oracle, orientation, tree and lattice rules agree".into())
}

fn typea_bijections(n: usize) -> Outcome {
    let sets = enumerate_sets(n);
    let mut paths = BTreeSet::new();
    for set in &sets {
        let tree = ternary_tree(n, set).map_err(|e| e.to_string())?;
        check(&tree_to_set(&tree) == set, || format!("tree round trip fails on {set:?}"))?;
        let p = tree_to_lattice_path(&tree);
        check(p.is_ternary(n), || format!("{p} leaves the ternary region"))?;
        paths.insert(p);
    }
    check(paths.len() == sets.len(), || "two sets share a path".into())?;
    Ok(format!("{} distinct paths", paths.len()))
}

fn affine_count(n: usize) -> Outcome {
    let got = enumerate_representatives(n).len();
    let want = counting::affine_representatives(n as u64);
    check(BigUint::from(got) == want, || format!("{got} representatives, closed form {want}"))?;
    Ok(format!("{got} classes, {} families", n * got))
}

fn affine_valid(n: usize) -> Outcome {
    let o = Oracle::linear(&Quiver::straight_atilde(n));
    for rep in enumerate_representatives(n) {
        check(rep.is_valid() && oracle_check(&o, &rep), || format!("{rep:?}"))?;
    }
    Ok("every representative is fundamental and exceptional".into())
}

fn affine_labels(n: usize) -> Outcome {
    let reps = enumerate_representatives(n);
    let mut paths = BTreeSet::new();
    for rep in &reps {
        let label = label_diagram(rep).map_err(|e| e.to_string())?;
        check(label.is_complete(), || format!("incomplete label for {rep:?}"))?;
        let p = label_to_path(&label);
        check(p.is_rothe(n - 1), || format!("{p} outside the path family"))?;
        paths.insert(p);
    }
    check(paths.len() == reps.len(), || "two representatives share a path".into())?;
    Ok(format!("{} distinct paths", paths.len()))
}

fn cluster_count(n: usize) -> Outcome {
    let got = small_triangulations(n).len();
    let want = counting::small_triangulations(n as u64);
    check(BigUint::from(got) == want, || format!("{got} triangulations, closed form {want}"))?;
    Ok(format!("{got}"))
}

fn cluster_hearts(n: usize) -> Outcome {
    for t in small_triangulations(n) {
        check(hearts(&t).len() == 1, || format!("{t} has {} hearts", hearts(&t).len()))?;
    }
    Ok("one heart each".into())
}

fn cluster_conventions(n: usize) -> Outcome {
    let mut agree = 0;
    for t in small_triangulations(n) {
        let r = conventions_coincide(&t).map_err(|e| e.to_string())?;
        check(r.coincide == r.fundamental, || format!("{t}"))?;
        agree += r.coincide as usize;
    }
    Ok(format!("conventions coincide on {agree}, exactly the fundamental ones"))
}

fn twists(n: usize) -> Outcome {
    for rep in enumerate_representatives(n) {
        for m in expand_orbit(&rep) {
            let d = m.diagram;
            check(d.inner_twist(1).inner_twist(-1) == d, || format!("inner twists do not cancel on {d}"))?;
            let mut turned = d.clone();
            for _ in 0..n {
                turned = turned.outer_twist();
            }
            check(turned == d.inner_twist(-1), || format!("full outer turn on {d}"))?;
            let (back, _) = representative_of(&d).map_err(|e| e.to_string())?;
            check(back == rep, || format!("{d} left its outer class"))?;
        }
    }
    Ok("inner twists invert, a full outer turn is an inner twist".into())
}
