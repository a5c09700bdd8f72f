//! Representatives of outer equivalence classes of families of exceptional
//! collections for straight affine A with `n` outer marked points
//! (|Q₀| = n+1), their labels and lattice paths.
//!
//! A representative is stored as strands on 0..=n+1: preinjectives c(0,m),
//! one preprojective c(m,n+1) and regular strands c(a,b) with 1 <= a < b <= n.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::Oracle;
use crate::quiver::{classify_component, ComponentClass, Quiver};
use crate::strands::{module_of_arc, ArcDiagram, Line, Strand, StrandDiagram, StrandError, TwistWord};
use crate::typea::{self, enumerate_sets, right_oriented, LatticePath, PathStep, StrandSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AffineError {
    #[error("diagram is not fundamental")]
    NotFundamental,
    #[error("no small dateline-free form with one preprojective found")]
    NoRepresentative,
    #[error("malformed representative: {0}")]
    Malformed(String),
    #[error(transparent)]
    Strand(#[from] StrandError),
    #[error(transparent)]
    TypeA(#[from] typea::TypeAError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyRepresentative {
    pub n: usize,
    pub strands: Vec<Strand>,
}

impl FamilyRepresentative {
    pub fn new(n: usize, mut strands: Vec<Strand>) -> Self {
        strands.sort();
        FamilyRepresentative { n, strands }
    }

    pub fn arcs(&self) -> ArcDiagram {
        ArcDiagram::from_strands(self.n, &self.strands)
    }

    pub fn top(&self) -> i64 {
        self.n as i64 + 1
    }

    /// Longest preinjective c(0,i).
    pub fn max_preinjective(&self) -> Option<Strand> {
        self.strands.iter().filter(|s| s.i == 0).max_by_key(|s| s.j).copied()
    }

    pub fn preprojectives(&self) -> Vec<Strand> {
        self.strands.iter().filter(|s| s.j == self.top()).copied().collect()
    }

    /// Valid both on the periodic cover and on the cut segment 0..=n+1.
    pub fn is_valid(&self) -> bool {
        self.preprojectives().len() == 1
            && self.strands.iter().all(|s| s.i >= 0 && s.j <= self.top() && !(s.i == 0 && s.j == self.top()))
            && self.arcs().is_fundamental()
            && StrandDiagram::new(Line::representative(self.n), self.strands.clone()).is_fundamental()
    }
}

fn shifted(set: &StrandSet, d: i64) -> impl Iterator<Item = Strand> + '_ {
    set.iter().map(move |s| s.shift(d))
}

/// Choose c(0,k+1), c(n-j,n+1) and the gap i, then fill the four type A
/// intervals [0,i-1], [i,k+1], [k+1,n-j], [n-j,n].
pub fn enumerate_representatives(n: usize) -> Vec<FamilyRepresentative> {
    let mut memo: BTreeMap<usize, Vec<StrandSet>> = BTreeMap::new();
    let mut sets = |m: usize| memo.entry(m).or_insert_with(|| enumerate_sets(m)).clone();
    let top = n as i64 + 1;
    let mut out = Vec::new();
    for k in 0..n {
        for j in 0..n - k {
            let b0 = (n - j) as i64;
            for i in 1..=k + 1 {
                let (i, k1) = (i as i64, k as i64 + 1);
                let s1 = sets((i - 1) as usize);
                let s2 = sets((k1 - i) as usize);
                let s3 = sets((b0 - k1) as usize);
                let s4 = sets(j);
                for a in &s1 {
                    for b in &s2 {
                        for c in &s3 {
                            for d in &s4 {
                                let mut v = vec![Strand::c(0, k1), Strand::c(b0, top)];
                                v.extend(shifted(a, 0));
                                v.extend(shifted(b, i));
                                v.extend(shifted(c, k1));
                                v.extend(shifted(d, b0));
                                out.push(FamilyRepresentative::new(n, v));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn preprojective_count(d: &ArcDiagram) -> usize {
    let q = d.quiver();
    d.arcs
        .iter()
        .filter(|a| module_of_arc(&q, a).map(|(_, c)| c == ComponentClass::Preprojective).unwrap_or(false))
        .count()
}

/// The inner twist that makes a diagram small, if one does.
fn small_inner_twist(d: &ArcDiagram) -> Option<i64> {
    let bound = d.arcs.iter().map(|a| a.lambda.abs()).max().unwrap_or(0) + 2;
    (-bound..=bound).find(|&k| d.inner_twist(k).is_small())
}

fn as_representative(d: &ArcDiagram) -> Option<FamilyRepresentative> {
    if !d.is_small() || d.crosses_dateline() || preprojective_count(d) != 1 {
        return None;
    }
    let line = d.line();
    let strands = d.strands().iter().map(|s| line.canonical(s)).collect();
    Some(FamilyRepresentative::new(d.n, strands))
}

/// The representative of d's outer class and the twist word carrying d onto it.
pub fn representative_of(d: &ArcDiagram) -> Result<(FamilyRepresentative, TwistWord), AffineError> {
    if !d.is_fundamental() {
        return Err(AffineError::NotFundamental);
    }
    let mut cur = d.clone();
    for s in 0..d.n as i64 {
        if let Some(k) = small_inner_twist(&cur) {
            if let Some(rep) = as_representative(&cur.inner_twist(k)) {
                return Ok((rep, TwistWord { inner_twists: k, outer_twists: s }));
            }
        }
        cur = cur.outer_twist();
    }
    Err(AffineError::NoRepresentative)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitMember {
    pub shift: usize,
    pub diagram: ArcDiagram,
}

/// The n small diagrams in the outer class of a representative.
pub fn expand_orbit(rep: &FamilyRepresentative) -> Vec<OrbitMember> {
    let mut out = Vec::with_capacity(rep.n);
    let mut cur = rep.arcs();
    for shift in 0..rep.n {
        let k = small_inner_twist(&cur).expect("every family has a small member");
        out.push(OrbitMember { shift, diagram: cur.inner_twist(k) });
        cur = cur.outer_twist();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Word {
    pub word: String,
    pub circled: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub strand: Option<Strand>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub children: Vec<Word>,
}

impl Word {
    fn walk<'a>(&'a self, out: &mut Vec<&'a Word>) {
        out.push(self);
        for c in &self.children {
            c.walk(out);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Label {
    pub n: usize,
    #[serde(rename = "A")]
    pub under_a: Vec<Word>,
    #[serde(rename = "B")]
    pub under_b: Vec<Word>,
}

impl Label {
    /// Words in reading order: A's tree depth first, then B's.
    pub fn words(&self) -> Vec<&Word> {
        let mut out = Vec::new();
        for w in self.under_a.iter().chain(&self.under_b) {
            w.walk(&mut out);
        }
        out
    }

    pub fn circled_count(&self) -> usize {
        self.words().iter().filter(|w| w.circled).count()
    }

    pub fn is_complete(&self) -> bool {
        let words = self.words();
        self.circled_count() + 1 == self.n && words.len() == 4 + 3 * (self.n - 1)
    }
}

fn word_tree(
    slot: Option<&typea::TreeNode>,
    word: String,
    right: &BTreeMap<Strand, bool>,
    shift: i64,
) -> Word {
    match slot {
        None => Word { word, circled: false, strand: None, children: Vec::new() },
        Some(t) => {
            let kids = label_slots(t, right);
            let children = kids
                .into_iter()
                .zip(['a', 'b', 'c'])
                .map(|(k, ch)| word_tree(k, format!("{word}{ch}"), right, shift))
                .collect();
            Word { word, circled: true, strand: Some(t.strand.shift(shift)), children }
        }
    }
}

/// Label slots a, b, c in terms of the type A child slots.
fn label_slots<'a>(t: &'a typea::TreeNode, right: &BTreeMap<Strand, bool>) -> [Option<&'a typea::TreeNode>; 3] {
    let (a, b, c) = (t.a.as_deref(), t.b.as_deref(), t.c.as_deref());
    if right[&t.strand] {
        [c, a, b]
    } else {
        [c, b, a]
    }
}

pub fn label_diagram(rep: &FamilyRepresentative) -> Result<Label, AffineError> {
    let bad = |m: &str| AffineError::Malformed(m.to_string());
    let pre = rep.preprojectives();
    if pre.len() != 1 {
        return Err(bad("needs exactly one preprojective"));
    }
    let b = pre[0];
    let b0 = b.i;
    let left: Vec<Strand> = rep.strands.iter().filter(|s| s.j <= b0).copied().collect();
    let right_part: Vec<Strand> = rep.strands.iter().filter(|s| s.i >= b0).map(|s| s.shift(-b0)).collect();
    if left.len() + right_part.len() != rep.strands.len() {
        return Err(bad("a strand straddles the preprojective"));
    }
    let t1 = typea::ternary_tree(b0 as usize, &left)?;
    let m2 = (rep.top() - b0) as usize;
    let t2 = typea::ternary_tree(m2, &right_part)?;
    let (r1, r2) = (t1.root.as_ref().ok_or_else(|| bad("empty"))?, t2.root.as_ref().ok_or_else(|| bad("empty"))?);
    if r2.b.is_some() || r2.c.is_some() || r2.strand != b.shift(-b0) {
        return Err(bad("preprojective has extra neighbours"));
    }
    let o1 = right_oriented(b0 as usize, &left);
    let o2 = right_oriented(m2, &right_part);
    let under_a = label_slots(r1, &o1)
        .into_iter()
        .zip(['a', 'b', 'c'])
        .map(|(k, ch)| word_tree(k, ch.to_string(), &o1, 0))
        .collect();
    let under_b = vec![word_tree(r2.a.as_deref(), "a".into(), &o2, b0)];
    Ok(Label { n: rep.n, under_a, under_b })
}

/// Circled words are up steps, uncircled words right steps.
pub fn label_to_path(label: &Label) -> LatticePath {
    LatticePath {
        steps: label.words().iter().map(|w| if w.circled { PathStep::Up } else { PathStep::Right }).collect(),
    }
}

/// Checks a representative's modules with the homological oracle: the set
/// must sort into an exceptional sequence and contain one preprojective.
pub fn oracle_check(oracle: &Oracle, rep: &FamilyRepresentative) -> bool {
    let q: &Quiver = &oracle.quiver;
    let mods = rep.arcs().modules();
    let pre = mods
        .iter()
        .filter(|m| classify_component(q, m).map(|c| c == ComponentClass::Preprojective).unwrap_or(false))
        .count();
    pre == 1 && oracle.sort_exceptional_set(&mods).map(|s| s.is_some()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let v: Vec<usize> = (1..=4).map(|n| enumerate_representatives(n).len()).collect();
        assert_eq!(v, vec![1, 4, 18, 88]);
    }

    #[test]
    fn n1() {
        let r = enumerate_representatives(1);
        assert_eq!(r[0].strands, vec![Strand::c(0, 1), Strand::c(1, 2)]);
        assert_eq!(label_to_path(&label_diagram(&r[0]).unwrap()).to_string(), "RRRR");
    }
}
