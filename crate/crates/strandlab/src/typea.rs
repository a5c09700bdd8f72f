//! Exceptional sets of straight A_n: recursive enumeration, ternary trees,
//! lattice paths and the combinatorial descriptions of relative
//! projectives and injectives.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::{Relative, RelativeStatus};
use crate::quiver::StringModule;
use crate::strands::Strand;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TypeAError {
    #[error("not a complete exceptional set on 0..{0}")]
    NotComplete(usize),
    #[error("strand {0} is reached from two parents")]
    ParentConflict(Strand),
    #[error("strand {0} has no parent in the tree")]
    Orphan(Strand),
    #[error("ordering is not an exceptional sequence")]
    NotSequence,
    #[error("malformed tree")]
    Malformed,
    #[error("malformed lattice path {0}")]
    BadPath(String),
}

/// A complete exceptional set of A_n, as sorted strands c(x,y) = M_{x,y}.
pub type StrandSet = Vec<Strand>;

/// Memoized by width: the sets on [lo, hi] are translates of those on [0, hi - lo].
fn complete_sets(lo: i64, hi: i64, memo: &mut BTreeMap<i64, Vec<StrandSet>>) -> Vec<StrandSet> {
    if lo >= hi {
        return vec![Vec::new()];
    }
    if let Some(v) = memo.get(&(hi - lo)) {
        return v.iter().map(|s| s.iter().map(|x| x.shift(lo)).collect()).collect();
    }
    let mut out = Vec::new();
    for k in lo + 1..=hi {
        for p in lo + 1..=k {
            let left = complete_sets(lo, p - 1, memo);
            let mid = complete_sets(p, k, memo);
            let right = complete_sets(k, hi, memo);
            for a in &left {
                for b in &mid {
                    for c in &right {
                        let mut s = Vec::with_capacity((hi - lo) as usize);
                        s.push(Strand::c(lo, k));
                        s.extend_from_slice(a);
                        s.extend_from_slice(b);
                        s.extend_from_slice(c);
                        s.sort();
                        out.push(s);
                    }
                }
            }
        }
    }
    memo.insert(hi - lo, out.iter().map(|s| s.iter().map(|x| x.shift(-lo)).collect()).collect());
    out
}

/// Every complete exceptional set of A_n, ordered by the longest injective
/// c(0,k), then the gap p, then the three sub-enumerations.
pub fn enumerate_sets(n: usize) -> Vec<StrandSet> {
    complete_sets(0, n as i64, &mut BTreeMap::new())
}

/// Same sets, sorted strand lists as modules.
pub fn set_modules(set: &[Strand]) -> Vec<StringModule> {
    set.iter().map(|s| StringModule::interval(s.i as usize, s.j as usize)).collect()
}

/// Noncrossing spanning tree on 0..=n.
pub fn is_complete_set(n: usize, set: &[Strand]) -> bool {
    if set.len() != n || set.iter().any(|s| s.i < 0 || s.j > n as i64) {
        return false;
    }
    let crossing = set.iter().any(|a| set.iter().any(|b| a.i < b.i && b.i < a.j && a.j < b.j));
    if crossing {
        return false;
    }
    // union-find for connectivity
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for s in set {
        let (a, b) = (find(&mut parent, s.i as usize), find(&mut parent, s.j as usize));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Parent of each point in the strand tree rooted at `root`.
fn rooted_parents(n: usize, set: &[Strand], root: usize) -> Vec<Option<usize>> {
    let mut adj = vec![Vec::new(); n + 1];
    for s in set {
        adj[s.i as usize].push(s.j as usize);
        adj[s.j as usize].push(s.i as usize);
    }
    let mut par = vec![None; n + 1];
    let mut seen = vec![false; n + 1];
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                par[w] = Some(v);
                stack.push(w);
            }
        }
    }
    par
}

/// c(i,j) is oriented to the right when the path from 0 to j passes through i.
pub fn right_oriented(n: usize, set: &[Strand]) -> BTreeMap<Strand, bool> {
    let par = rooted_parents(n, set, 0);
    set.iter().map(|s| (*s, par[s.j as usize] == Some(s.i as usize))).collect()
}

/// Relative injectives by orientation, relative projectives by the path to n.
pub fn combinatorial_relatives(n: usize, set: &[Strand]) -> RelativeStatus {
    let right = right_oriented(n, set);
    let par_n = rooted_parents(n, set, n);
    let mut entries: Vec<_> = set
        .iter()
        .map(|s| {
            let m = StringModule::interval(s.i as usize, s.j as usize);
            let projective = par_n[s.i as usize] == Some(s.j as usize);
            (m, Relative { projective, injective: right[s] })
        })
        .collect();
    entries.sort();
    RelativeStatus { entries }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNode {
    pub label: String,
    pub strand: Strand,
    pub a: Option<Box<TreeNode>>,
    pub b: Option<Box<TreeNode>>,
    pub c: Option<Box<TreeNode>>,
}

impl TreeNode {
    pub fn children(&self) -> [&Option<Box<TreeNode>>; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.as_ref().map_or(0, |t| t.size())).sum::<usize>()
    }

    /// Preorder: the node, then the a, b and c subtrees.
    pub fn preorder(&self) -> Vec<&TreeNode> {
        let mut out = vec![self];
        for c in self.children().into_iter().flatten() {
            out.extend(c.preorder());
        }
        out
    }

    /// Preorder with leaves: Some(node) or None for a leaf.
    fn preorder_with_leaves<'a>(t: &'a Option<Box<TreeNode>>, out: &mut Vec<Option<&'a TreeNode>>) {
        match t {
            None => out.push(None),
            Some(node) => {
                out.push(Some(node));
                for c in node.children() {
                    Self::preorder_with_leaves(c, out);
                }
            }
        }
    }

    /// The bare ternary shape, with labels but without strands.
    pub fn shape(&self) -> Shape {
        let f = |c: &Option<Box<TreeNode>>| c.as_ref().map(|t| Box::new(t.shape()));
        Shape { a: f(&self.a), b: f(&self.b), c: f(&self.c) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    pub a: Option<Box<Shape>>,
    pub b: Option<Box<Shape>>,
    pub c: Option<Box<Shape>>,
}

impl Shape {
    pub fn size(&self) -> usize {
        let f = |c: &Option<Box<Shape>>| c.as_ref().map_or(0, |t| t.size());
        1 + f(&self.a) + f(&self.b) + f(&self.c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TernaryTree {
    pub n: usize,
    pub root: Option<TreeNode>,
}

fn child_label(parent: &str, slot: char) -> String {
    if parent == "R" {
        slot.to_ascii_uppercase().to_string()
    } else {
        format!("{parent}{slot}")
    }
}

/// Number of letters b or B in a label.
pub fn b_count(label: &str) -> usize {
    label.chars().filter(|c| c.eq_ignore_ascii_case(&'b')).count()
}

/// Builds the tree with root the longest injective c(0,k) and children
/// Xa, Xb, Xc chosen by the orientation of X.
pub fn ternary_tree(n: usize, set: &[Strand]) -> Result<TernaryTree, TypeAError> {
    if !is_complete_set(n, set) {
        return Err(TypeAError::NotComplete(n));
    }
    if n == 0 {
        return Ok(TernaryTree { n, root: None });
    }
    let mut nbrs: Vec<BTreeSet<i64>> = vec![BTreeSet::new(); n + 1];
    for s in set {
        nbrs[s.i as usize].insert(s.j);
        nbrs[s.j as usize].insert(s.i);
    }
    let right = right_oriented(n, set);
    let k = *nbrs[0].iter().max().ok_or(TypeAError::NotComplete(n))?;
    let mut used = BTreeSet::new();
    let root = build_node(Strand::c(0, k), "R".to_string(), &nbrs, &right, &mut used)?;
    if let Some(s) = set.iter().find(|s| !used.contains(*s)) {
        return Err(TypeAError::Orphan(*s));
    }
    Ok(TernaryTree { n, root: Some(root) })
}

fn build_node(
    x: Strand,
    label: String,
    nbrs: &[BTreeSet<i64>],
    right: &BTreeMap<Strand, bool>,
    used: &mut BTreeSet<Strand>,
) -> Result<TreeNode, TypeAError> {
    if !used.insert(x) {
        return Err(TypeAError::ParentConflict(x));
    }
    let (i, j) = (x.i, x.j);
    let inside = |v: usize| nbrs[v].range(i + 1..j).copied().collect::<Vec<_>>();
    let (a, b, c) = if right[&x] {
        (
            inside(i as usize).last().map(|&p| Strand::c(i, p)),
            inside(j as usize).first().map(|&p| Strand::c(p, j)),
            nbrs[j as usize].range(j + 1..).last().map(|&p| Strand::c(j, p)),
        )
    } else {
        (
            inside(j as usize).first().map(|&p| Strand::c(p, j)),
            inside(i as usize).last().map(|&p| Strand::c(i, p)),
            nbrs[i as usize].range(..i).next().map(|&p| Strand::c(p, i)),
        )
    };
    let mut go = |s: Option<Strand>, slot: char| -> Result<Option<Box<TreeNode>>, TypeAError> {
        s.map(|s| build_node(s, child_label(&label, slot), nbrs, right, used).map(Box::new)).transpose()
    };
    let a = go(a, 'a')?;
    let b = go(b, 'b')?;
    let c = go(c, 'c')?;
    Ok(TreeNode { label, strand: x, a, b, c })
}

/// Strands of a tree shape, recomputed from subtree sizes alone.
pub fn shape_to_set(shape: &Shape) -> StrandSet {
    fn size(s: &Option<Box<Shape>>) -> i64 {
        s.as_ref().map_or(0, |t| t.size() as i64)
    }
    // right-type: subtree covers [lo, lo+size], attached at lo
    fn right(s: &Shape, lo: i64, out: &mut StrandSet) {
        let p = lo + size(&s.a) + 1;
        let k = p + size(&s.b);
        out.push(Strand::c(lo, k));
        if let Some(a) = &s.a {
            right(a, lo, out);
        }
        if let Some(b) = &s.b {
            left(b, k, out);
        }
        if let Some(c) = &s.c {
            right(c, k, out);
        }
    }
    // left-type: subtree covers [hi-size, hi], attached at hi
    fn left(s: &Shape, hi: i64, out: &mut StrandSet) {
        let lo = hi - s.size() as i64;
        let k = lo + size(&s.c);
        out.push(Strand::c(k, hi));
        if let Some(a) = &s.a {
            left(a, hi, out);
        }
        if let Some(b) = &s.b {
            right(b, k, out);
        }
        if let Some(c) = &s.c {
            left(c, k, out);
        }
    }
    let mut out = Vec::new();
    right(shape, 0, &mut out);
    out.sort();
    out
}

pub fn tree_to_set(tree: &TernaryTree) -> StrandSet {
    match &tree.root {
        None => Vec::new(),
        Some(r) => shape_to_set(&r.shape()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PathStep {
    #[serde(rename = "U")]
    Up,
    #[serde(rename = "R")]
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    pub steps: Vec<PathStep>,
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                PathStep::Up => "U",
                PathStep::Right => "R",
            })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for LatticePath {
    type Err = TypeAError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(PathStep::Up),
                'R' => Ok(PathStep::Right),
                _ => Err(TypeAError::BadPath(s.to_string())),
            })
            .collect::<Result<_, _>>()?;
        Ok(LatticePath { steps })
    }
}

impl Serialize for LatticePath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl LatticePath {
    /// Points visited, starting at the origin.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut p = (0, 0);
        let mut out = vec![p];
        for s in &self.steps {
            match s {
                PathStep::Up => p.1 += 1,
                PathStep::Right => p.0 += 1,
            }
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> (i64, i64) {
        *self.points().last().unwrap()
    }

    /// x-coordinates of the vertical edges, in order.
    pub fn vertical_xs(&self) -> Vec<i64> {
        let pts = self.points();
        self.steps.iter().enumerate().filter(|(_, s)| **s == PathStep::Up).map(|(k, _)| pts[k].0).collect()
    }

    /// From (0,0) to (2n+1,n) with x <= 2y everywhere before the last point.
    pub fn is_ternary(&self, n: usize) -> bool {
        let pts = self.points();
        let n = n as i64;
        self.end() == (2 * n + 1, n) && pts[..pts.len() - 1].iter().all(|&(x, y)| x <= 2 * y)
    }

    /// From (0,0) to (2m+4, m), strictly above y = (x-4)/2 before the end.
    pub fn is_rothe(&self, m: usize) -> bool {
        let pts = self.points();
        let m = m as i64;
        self.end() == (2 * m + 4, m) && pts[..pts.len() - 1].iter().all(|&(x, y)| x < 2 * y + 4)
    }
}

/// Nodes give up steps and leaves give right steps, read in preorder.
pub fn tree_to_lattice_path(tree: &TernaryTree) -> LatticePath {
    let root = tree.root.clone().map(Box::new);
    let mut seq = Vec::new();
    TreeNode::preorder_with_leaves(&root, &mut seq);
    LatticePath { steps: seq.iter().map(|x| if x.is_some() { PathStep::Up } else { PathStep::Right }).collect() }
}

/// Inverse of the preorder encoding.
pub fn lattice_path_to_shape(path: &LatticePath) -> Result<Option<Shape>, TypeAError> {
    fn parse(steps: &[PathStep], pos: &mut usize) -> Result<Option<Box<Shape>>, TypeAError> {
        let s = *steps.get(*pos).ok_or(TypeAError::Malformed)?;
        *pos += 1;
        match s {
            PathStep::Right => Ok(None),
            PathStep::Up => {
                let a = parse(steps, pos)?;
                let b = parse(steps, pos)?;
                let c = parse(steps, pos)?;
                Ok(Some(Box::new(Shape { a, b, c })))
            }
        }
    }
    let mut pos = 0;
    let s = parse(&path.steps, &mut pos)?;
    if pos != path.steps.len() {
        return Err(TypeAError::Malformed);
    }
    Ok(s.map(|b| *b))
}

/// Relative injectives read off the path: vertical edges at even x, matched
/// with tree nodes in preorder.
pub fn path_injectives(tree: &TernaryTree) -> BTreeSet<Strand> {
    let path = tree_to_lattice_path(tree);
    let nodes = tree.root.as_ref().map(|r| r.preorder()).unwrap_or_default();
    nodes.iter().zip(path.vertical_xs()).filter(|(_, x)| x % 2 == 0).map(|(t, _)| t.strand).collect()
}

/// Relative injectives as the nodes with an even number of b's.
pub fn even_b_injectives(tree: &TernaryTree) -> BTreeSet<Strand> {
    let nodes = tree.root.as_ref().map(|r| r.preorder()).unwrap_or_default();
    nodes.iter().filter(|t| b_count(&t.label).is_multiple_of(2)).map(|t| t.strand).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportForest {
    /// parent[i] is the index (into the set) of the minimal strictly larger support.
    pub nodes: Vec<Strand>,
    pub parent: Vec<Option<usize>>,
}

pub fn support_forest(set: &[Strand]) -> SupportForest {
    let nodes = set.to_vec();
    let parent = nodes
        .iter()
        .map(|s| {
            nodes
                .iter()
                .enumerate()
                .filter(|(_, t)| *t != s && t.contains(s))
                .min_by_key(|(_, t)| t.len())
                .map(|(k, _)| k)
        })
        .collect();
    SupportForest { nodes, parent }
}

/// Status from an exceptional ordering: before the parent means relatively
/// projective, after means relatively injective, roots are both.
pub fn forest_status(set: &[Strand], ordering: &[Strand]) -> Result<RelativeStatus, TypeAError> {
    let forest = support_forest(set);
    let pos = |s: &Strand| ordering.iter().position(|t| t == s).ok_or(TypeAError::NotSequence);
    let mut entries = Vec::new();
    for (k, s) in forest.nodes.iter().enumerate() {
        let m = StringModule::interval(s.i as usize, s.j as usize);
        let r = match forest.parent[k] {
            None => Relative { projective: true, injective: true },
            Some(p) => {
                let before = pos(s)? < pos(&forest.nodes[p])?;
                Relative { projective: before, injective: !before }
            }
        };
        entries.push((m, r));
    }
    entries.sort();
    Ok(RelativeStatus { entries })
}

/// N_{n,m}: sets on A_{n+m} with n relative injectives, by the ternary recursion.
pub fn n_table(max_total: usize) -> BTreeMap<(usize, usize), BigUint> {
    let mut t: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
    for total in 0..=max_total {
        for n in 0..=total {
            let m = total - n;
            let v = if n == 0 {
                if m == 0 {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            } else {
                let mut acc = BigUint::zero();
                for a in 0..n {
                    for b in 0..n - a {
                        let c = n - 1 - a - b;
                        for i in 0..=m {
                            for j in 0..=m - i {
                                let k = m - i - j;
                                acc += &t[&(a, i)] * &t[&(j, b)] * &t[&(c, k)];
                            }
                        }
                    }
                }
                acc
            };
            t.insert((n, m), v);
        }
    }
    t
}
