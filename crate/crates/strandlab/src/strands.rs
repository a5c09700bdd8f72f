//! Strands on a marked line (or its periodic cover) and arcs on the annulus
//! of a straight affine quiver.
//!
//! Marked points are integers. A point lies on the top boundary when its sign
//! is `+` and on the bottom boundary when it is `-`. For the cover of the
//! straight affine quiver with N = n+1 vertices the bottom points are the
//! multiples of N (lifts of the inner marked point) and every other residue r
//! lifts the outer point r.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quiver::{build_quiver, classify_component, ComponentClass, Kind, OrientationVector, Quiver, QuiverError, Sign, StringModule};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrandError {
    #[error("a strand needs two distinct endpoints, got {0}")]
    Degenerate(i64),
    #[error("point {0} is not an endpoint of both strands")]
    NotShared(i64),
    #[error("strands cross")]
    Crossing,
    #[error("invalid arc {0}")]
    InvalidArc(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Strand {
    pub i: i64,
    pub j: i64,
}

impl Strand {
    pub fn new(a: i64, b: i64) -> Result<Self, StrandError> {
        match a.cmp(&b) {
            Ordering::Less => Ok(Strand { i: a, j: b }),
            Ordering::Greater => Ok(Strand { i: b, j: a }),
            Ordering::Equal => Err(StrandError::Degenerate(a)),
        }
    }

    /// c(a,b) for a != b, panicking otherwise.
    pub fn c(a: i64, b: i64) -> Self {
        Self::new(a, b).expect("distinct endpoints")
    }

    pub fn shift(self, d: i64) -> Self {
        Strand { i: self.i + d, j: self.j + d }
    }

    pub fn len(&self) -> i64 {
        self.j - self.i
    }

    pub fn has_endpoint(&self, p: i64) -> bool {
        self.i == p || self.j == p
    }

    fn other(&self, p: i64) -> i64 {
        if self.i == p {
            self.j
        } else {
            self.i
        }
    }

    pub fn contains(&self, other: &Strand) -> bool {
        self.i <= other.i && other.j <= self.j
    }
}

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c({},{})", self.i, self.j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rotation {
    Clockwise,
    Counterclockwise,
}

/// A marked line: a finite segment of points 0..=L, or the periodic cover
/// where the sign of p is ε_{p mod N}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Line {
    pub signs: Vec<Sign>,
    pub periodic: bool,
}

impl Line {
    pub fn cover(eps: &OrientationVector) -> Self {
        Line { signs: eps.signs.clone(), periodic: true }
    }

    pub fn straight_cover(vertex_count: usize) -> Self {
        Self::cover(&OrientationVector::straight_atilde(vertex_count - 1))
    }

    pub fn segment(signs: Vec<Sign>) -> Self {
        Line { signs, periodic: false }
    }

    /// Points 0..=n, all on the top boundary.
    pub fn type_a(n: usize) -> Self {
        Self::segment(vec![Sign::Plus; n + 1])
    }

    /// Points 0..=n+1 with ε = (−,+,…,+,−): the cover of the straight affine
    /// quiver with n outer points cut along the dateline.
    pub fn representative(n_outer: usize) -> Self {
        let mut s = vec![Sign::Plus; n_outer + 2];
        s[0] = Sign::Minus;
        s[n_outer + 1] = Sign::Minus;
        Self::segment(s)
    }

    pub fn period(&self) -> Option<i64> {
        self.periodic.then_some(self.signs.len() as i64)
    }

    /// |Q₀| for the quiver the line models.
    pub fn vertex_count(&self) -> usize {
        if self.periodic {
            self.signs.len()
        } else {
            self.signs.len() - 1
        }
    }

    pub fn sign(&self, p: i64) -> Sign {
        match self.period() {
            Some(n) => self.signs[p.rem_euclid(n) as usize],
            None => self.signs[p as usize],
        }
    }

    /// Position along the boundary: top points left to right, then bottom
    /// points right to left.
    fn key(&self, p: i64) -> (u8, i64) {
        match self.sign(p) {
            Sign::Plus => (0, p),
            Sign::Minus => (1, -p),
        }
    }

    fn in_range(&self, s: &Strand) -> bool {
        self.periodic || (s.i >= 0 && s.j < self.signs.len() as i64)
    }

    /// Crossing of these two lifts only, ignoring other translates.
    pub fn lifts_cross(&self, a: &Strand, b: &Strand) -> bool {
        self.cross_exact(a, b)
    }

    fn cross_exact(&self, a: &Strand, b: &Strand) -> bool {
        let pts = [a.i, a.j, b.i, b.j];
        let distinct: BTreeSet<i64> = pts.iter().copied().collect();
        if distinct.len() < 4 {
            return false;
        }
        let (lo, hi) = {
            let (x, y) = (self.key(a.i), self.key(a.j));
            if x < y {
                (x, y)
            } else {
                (y, x)
            }
        };
        let inside = |p: i64| {
            let k = self.key(p);
            lo < k && k < hi
        };
        inside(b.i) != inside(b.j)
    }

    /// Translates b + zN whose x-range meets that of a.
    fn translates(&self, a: &Strand, b: &Strand) -> Vec<i64> {
        match self.period() {
            None => vec![0],
            Some(n) => {
                let lo = (a.i - b.j).div_euclid(n) - 1;
                let hi = (a.j - b.i).div_euclid(n) + 1;
                (lo..=hi).collect()
            }
        }
    }

    pub fn strands_cross(&self, a: &Strand, b: &Strand) -> bool {
        let n = self.period().unwrap_or(0);
        self.translates(a, b).into_iter().any(|z| self.cross_exact(a, &b.shift(z * n)))
    }

    pub fn self_intersects(&self, s: &Strand) -> bool {
        let n = self.period().unwrap_or(0);
        self.translates(s, s).into_iter().any(|z| z != 0 && self.cross_exact(s, &s.shift(z * n)))
    }

    /// Whether `b` is clockwise or counterclockwise from `a` at their shared
    /// endpoint `p`.
    pub fn local_order(&self, a: &Strand, b: &Strand, p: i64) -> Result<Rotation, StrandError> {
        if !a.has_endpoint(p) || !b.has_endpoint(p) || a == b {
            return Err(StrandError::NotShared(p));
        }
        if self.cross_exact(a, b) {
            return Err(StrandError::Crossing);
        }
        let kp = self.key(p);
        let rot = |q: i64| {
            let k = self.key(q);
            if k > kp {
                (0u8, k)
            } else {
                (1u8, k)
            }
        };
        Ok(if rot(b.other(p)) > rot(a.other(p)) { Rotation::Clockwise } else { Rotation::Counterclockwise })
    }

    /// Translate with the smaller endpoint in [0, N) on the cover.
    pub fn canonical(&self, s: &Strand) -> Strand {
        match self.period() {
            Some(n) => s.shift(-s.i.div_euclid(n) * n),
            None => *s,
        }
    }

    fn quiver(&self) -> Option<Quiver> {
        self.periodic.then(|| {
            build_quiver(&OrientationVector { kind: Kind::ATilde, signs: self.signs.clone() }).expect("valid orientation")
        })
    }
}

/// The string module whose walk a strand traces. On the cover this is the
/// affine string starting at vertex (i mod N)+1 with j-i vertices.
pub fn module_of_strand(q: &Quiver, s: &Strand) -> Result<StringModule, StrandError> {
    match q.kind {
        Kind::A => {
            let m = StringModule::interval(s.i as usize, s.j as usize);
            if s.i < 0 {
                return Err(StrandError::InvalidArc(s.to_string()));
            }
            m.validate(q)?;
            Ok(m)
        }
        Kind::ATilde => {
            let nv = q.vertex_count as i64;
            Ok(StringModule::from_start_len(q.vertex_count, (s.i.rem_euclid(nv) + 1) as usize, s.len() as usize))
        }
    }
}

/// The fundamental lift Φ.
pub fn lift_module(q: &Quiver, m: &StringModule) -> Result<Strand, StrandError> {
    if q.kind == Kind::A {
        return match *m {
            StringModule::Interval { x, y } => {
                m.validate(q)?;
                Ok(Strand::c(x as i64, y as i64))
            }
            _ => Err(QuiverError::InvalidModule(m.to_string()).into()),
        };
    }
    let ijk = m.to_ijk(q)?;
    let (i, j, k) = (ijk.i as i64, ijk.j as i64, ijk.k as i64);
    Ok(match classify_component(q, m)? {
        ComponentClass::Preprojective | ComponentClass::LeftRegular => Strand::c(i, i + k),
        _ => Strand::c(j - k, j),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "camelCase")]
pub enum Violation {
    WrongSize { expected: usize, got: usize },
    NotInImage { strand: Strand },
    Duplicate { strand: Strand },
    Crossing { first: Strand, second: Strand },
    SelfIntersection { strand: Strand },
    Loop { strand: Strand },
    Cycle { strands: Vec<Strand> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandDiagram {
    pub line: Line,
    pub strands: Vec<Strand>,
}

/// Directed graph on strand indices: an edge a -> b for every shared endpoint
/// at which (a translate of) b is clockwise from a.
fn clockwise_edges(line: &Line, strands: &[Strand]) -> Vec<(usize, usize)> {
    let n = line.period().unwrap_or(0);
    let mut edges = Vec::new();
    for a in 0..strands.len() {
        for b in a..strands.len() {
            let (sa, sb) = (&strands[a], &strands[b]);
            for z in line.translates(sa, sb) {
                if a == b && z == 0 {
                    continue;
                }
                let t = sb.shift(z * n);
                if t == *sa {
                    continue;
                }
                for p in [sa.i, sa.j] {
                    if t.has_endpoint(p) {
                        if let Ok(r) = line.local_order(sa, &t, p) {
                            match r {
                                Rotation::Clockwise => edges.push((a, b)),
                                Rotation::Counterclockwise => edges.push((b, a)),
                            }
                        }
                    }
                }
            }
        }
    }
    edges
}

fn find_cycle(k: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in edges {
        if a != b {
            adj[a].push(b);
        }
    }
    // 0 unvisited, 1 on stack, 2 done
    let mut state = vec![0u8; k];
    let mut stack: Vec<usize> = Vec::new();
    fn dfs(v: usize, adj: &[Vec<usize>], state: &mut [u8], stack: &mut Vec<usize>) -> Option<Vec<usize>> {
        state[v] = 1;
        stack.push(v);
        for &w in &adj[v] {
            if state[w] == 1 {
                let pos = stack.iter().position(|&x| x == w).unwrap();
                return Some(stack[pos..].to_vec());
            }
            if state[w] == 0 {
                if let Some(c) = dfs(w, adj, state, stack) {
                    return Some(c);
                }
            }
        }
        stack.pop();
        state[v] = 2;
        None
    }
    for v in 0..k {
        if state[v] == 0 {
            if let Some(c) = dfs(v, &adj, &mut state, &mut stack) {
                return Some(c);
            }
        }
    }
    None
}

impl StrandDiagram {
    pub fn new(line: Line, strands: Vec<Strand>) -> Self {
        StrandDiagram { line, strands }
    }

    pub fn type_a(n: usize, strands: Vec<Strand>) -> Self {
        Self::new(Line::type_a(n), strands)
    }

    /// Every violated condition of a fundamental diagram; empty means fundamental.
    pub fn violations(&self) -> Vec<Violation> {
        let line = &self.line;
        let mut out = Vec::new();
        let expected = line.vertex_count();
        if self.strands.len() != expected {
            out.push(Violation::WrongSize { expected, got: self.strands.len() });
        }
        let q = line.quiver();
        for s in &self.strands {
            let ok = match &q {
                Some(q) => module_of_strand(q, s).and_then(|m| lift_module(q, &m)).map(|l| l == *s).unwrap_or(false),
                None => line.in_range(s),
            };
            if !ok {
                out.push(Violation::NotInImage { strand: *s });
            }
        }
        let mut seen = BTreeSet::new();
        for s in &self.strands {
            if !seen.insert(line.canonical(s)) {
                out.push(Violation::Duplicate { strand: *s });
            }
        }
        for (a, sa) in self.strands.iter().enumerate() {
            if line.self_intersects(sa) {
                out.push(Violation::SelfIntersection { strand: *sa });
            }
            for sb in &self.strands[a + 1..] {
                if line.strands_cross(sa, sb) {
                    out.push(Violation::Crossing { first: *sa, second: *sb });
                }
            }
        }
        let edges = clockwise_edges(line, &self.strands);
        for &(a, b) in &edges {
            if a == b {
                let v = Violation::Loop { strand: self.strands[a] };
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        if let Some(c) = find_cycle(self.strands.len(), &edges) {
            out.push(Violation::Cycle { strands: c.into_iter().map(|i| self.strands[i]).collect() });
        }
        out
    }

    pub fn is_fundamental(&self) -> bool {
        self.violations().is_empty()
    }
}

pub fn diagram_is_fundamental(d: &StrandDiagram) -> (bool, Vec<Violation>) {
    let v = d.violations();
    (v.is_empty(), v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Inner,
    Outer,
}

/// a(from,to)[λ] on the annulus of the straight affine quiver with n outer
/// points; the label 0 is the inner marked point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub lambda: i64,
    pub from_side: Side,
    pub to_side: Side,
}

fn side(p: usize) -> Side {
    if p == 0 {
        Side::Inner
    } else {
        Side::Outer
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})[{}]", self.from, self.to, self.lambda)
    }
}

impl Arc {
    pub fn new(from: usize, to: usize, lambda: i64) -> Self {
        Arc { from, to, lambda, from_side: side(from), to_side: side(to) }
    }

    pub fn is_bridging(&self) -> bool {
        (self.from == 0) != (self.to == 0)
    }

    pub fn is_exterior(&self) -> bool {
        self.from != 0 && self.to != 0
    }

    fn check(&self, n: usize) -> Result<(), StrandError> {
        let sides_ok = self.from_side == side(self.from) && self.to_side == side(self.to);
        if self.from > n || self.to > n || !sides_ok {
            return Err(StrandError::InvalidArc(self.to_string()));
        }
        if self.is_exterior() && self.lambda < 0 {
            return Err(StrandError::InvalidArc(self.to_string()));
        }
        Ok(())
    }

    /// A lift to the cover of the straight annulus with n outer points.
    pub fn to_strand(&self, n: usize) -> Result<Strand, StrandError> {
        self.check(n)?;
        let nn = (n + 1) as i64;
        let (i, j, l) = (self.from as i64, self.to as i64, self.lambda);
        match (self.from, self.to) {
            (0, 0) => Strand::new(0, (l + 1) * nn),
            (0, _) => Strand::new(l * nn, j),
            (_, 0) => Strand::new(i, (l + 1) * nn),
            _ => Strand::new(i, i + l * nn + (j - i - 1).rem_euclid(nn) + 1),
        }
    }

    /// The canonical name ψ of a chord on the straight cover.
    pub fn from_strand(n: usize, s: &Strand) -> Arc {
        let nn = (n + 1) as i64;
        let inner = |p: i64| p.rem_euclid(nn) == 0;
        match (inner(s.i), inner(s.j)) {
            (true, true) => Arc::new(0, 0, s.len() / nn - 1),
            (true, false) | (false, true) => {
                let (ip, op) = if inner(s.i) { (s.i, s.j) } else { (s.j, s.i) };
                let shift = op.div_euclid(nn) * nn;
                let (j, m) = ((op - shift) as usize, (ip - shift) / nn);
                if m <= 0 {
                    Arc::new(0, j, m)
                } else {
                    Arc::new(j, 0, m - 1)
                }
            }
            (false, false) => {
                let shift = s.i.div_euclid(nn) * nn;
                let (p, q) = (s.i - shift, s.j - shift);
                let lambda = (q - p - 1).div_euclid(nn);
                Arc::new(p as usize, q.rem_euclid(nn) as usize, lambda)
            }
        }
    }

    pub fn canonical(&self, n: usize) -> Result<Arc, StrandError> {
        Ok(Arc::from_strand(n, &self.to_strand(n)?))
    }

    /// Boundary segments: adjacent outer points or the inner circle itself.
    pub fn is_boundary(&self, n: usize) -> Result<bool, StrandError> {
        let s = Line::straight_cover(n + 1).canonical(&self.to_strand(n)?);
        let nn = (n + 1) as i64;
        let top = |p: i64| p.rem_euclid(nn) != 0;
        Ok(if top(s.i) && top(s.j) {
            let between = (s.i + 1..s.j).filter(|&p| top(p)).count();
            between == 0
        } else {
            !top(s.i) && !top(s.j) && s.len() == nn
        })
    }
}

pub fn arc_of_module(q: &Quiver, m: &StringModule) -> Result<Arc, StrandError> {
    if q.kind != Kind::ATilde || !q.orientation.is_straight() {
        return Err(QuiverError::WrongKind(Kind::ATilde).into());
    }
    Ok(Arc::from_strand(q.vertex_count - 1, &lift_module(q, m)?))
}

pub fn module_of_arc(q: &Quiver, a: &Arc) -> Result<(StringModule, ComponentClass), StrandError> {
    let m = module_of_strand(q, &a.to_strand(q.vertex_count - 1)?)?;
    Ok((m, classify_component(q, &m)?))
}

/// Parametrized by λ of bridging arcs: λ != 0; other arcs: the canonical lift
/// leaves the fundamental domain [0, N].
pub fn crosses_dateline(n: usize, a: &Arc) -> Result<bool, StrandError> {
    let a = a.canonical(n)?;
    if a.is_bridging() {
        return Ok(a.lambda != 0);
    }
    let s = Line::straight_cover(n + 1).canonical(&a.to_strand(n)?);
    Ok(!(s.i >= 0 && s.j <= (n + 1) as i64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TwistWord {
    pub inner_twists: i64,
    pub outer_twists: i64,
}

impl TwistWord {
    /// Reduce the outer count into 0..n; a full outer turn is an inner twist by -1.
    pub fn normalized(self, n: usize) -> TwistWord {
        let n = n as i64;
        TwistWord {
            inner_twists: self.inner_twists - self.outer_twists.div_euclid(n),
            outer_twists: self.outer_twists.rem_euclid(n),
        }
    }

    pub fn compose(self, other: TwistWord, n: usize) -> TwistWord {
        TwistWord {
            inner_twists: self.inner_twists + other.inner_twists,
            outer_twists: self.outer_twists + other.outer_twists,
        }
        .normalized(n)
    }

    pub fn inverse(self, n: usize) -> TwistWord {
        TwistWord { inner_twists: -self.inner_twists, outer_twists: -self.outer_twists }.normalized(n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArcDiagram {
    pub n: usize,
    pub arcs: Vec<Arc>,
}

impl ArcDiagram {
    pub fn new(n: usize, arcs: Vec<Arc>) -> Result<Self, StrandError> {
        let arcs = arcs.iter().map(|a| a.canonical(n)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_canonical(n, arcs))
    }

    fn from_canonical(n: usize, mut arcs: Vec<Arc>) -> Self {
        arcs.sort();
        ArcDiagram { n, arcs }
    }

    pub fn from_strands(n: usize, strands: &[Strand]) -> Self {
        Self::from_canonical(n, strands.iter().map(|s| Arc::from_strand(n, s)).collect())
    }

    pub fn line(&self) -> Line {
        Line::straight_cover(self.n + 1)
    }

    pub fn quiver(&self) -> Quiver {
        Quiver::straight_atilde(self.n)
    }

    pub fn strands(&self) -> Vec<Strand> {
        self.arcs.iter().map(|a| a.to_strand(self.n).expect("canonical arcs")).collect()
    }

    /// Lifts chosen in the image of Φ.
    pub fn fundamental_lifts(&self) -> Vec<Strand> {
        let q = self.quiver();
        self.arcs
            .iter()
            .map(|a| {
                let m = module_of_arc(&q, a).expect("canonical arcs").0;
                lift_module(&q, &m).expect("string module")
            })
            .collect()
    }

    pub fn strand_diagram(&self) -> StrandDiagram {
        StrandDiagram::new(self.line(), self.fundamental_lifts())
    }

    pub fn is_fundamental(&self) -> bool {
        self.strand_diagram().is_fundamental()
    }

    pub fn modules(&self) -> Vec<StringModule> {
        let q = self.quiver();
        let mut v: Vec<_> = self.arcs.iter().map(|a| module_of_arc(&q, a).expect("canonical arcs").0).collect();
        v.sort();
        v
    }

    pub fn is_small(&self) -> bool {
        self.arcs.iter().all(|a| a.lambda == 0)
    }

    pub fn crosses_dateline(&self) -> bool {
        self.arcs.iter().any(|a| crosses_dateline(self.n, a).expect("canonical arcs"))
    }

    pub fn noncrossing(&self) -> bool {
        let line = self.line();
        let s = self.strands();
        s.iter().all(|x| !line.self_intersects(x))
            && (0..s.len()).all(|a| (a + 1..s.len()).all(|b| !line.strands_cross(&s[a], &s[b])))
    }

    fn map_points(&self, f: impl Fn(i64) -> i64) -> ArcDiagram {
        let arcs = self
            .strands()
            .iter()
            .map(|s| Arc::from_strand(self.n, &Strand::c(f(s.i), f(s.j))))
            .collect();
        Self::from_canonical(self.n, arcs)
    }

    /// k clockwise 2π twists of the inner boundary.
    pub fn inner_twist(&self, k: i64) -> ArcDiagram {
        let nn = (self.n + 1) as i64;
        self.map_points(|p| if p.rem_euclid(nn) == 0 { p + k * nn } else { p })
    }

    /// One clockwise 2π/n twist of the outer boundary: outer point i moves to i+1 mod n.
    pub fn outer_twist(&self) -> ArcDiagram {
        let nn = (self.n + 1) as i64;
        let n = self.n as i64;
        self.map_points(|p| match p.rem_euclid(nn) {
            0 => p,
            r if r == n => p + 2,
            _ => p + 1,
        })
    }

    pub fn apply(&self, w: TwistWord) -> ArcDiagram {
        let w = w.normalized(self.n);
        let mut d = self.inner_twist(w.inner_twists);
        for _ in 0..w.outer_twists {
            d = d.outer_twist();
        }
        d
    }
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn inner_twist(d: &ArcDiagram, k: i64) -> ArcDiagram {
    d.inner_twist(k)
}

pub fn outer_twist(d: &ArcDiagram) -> ArcDiagram {
    d.outer_twist()
}

pub fn is_small(d: &ArcDiagram) -> bool {
    d.is_small()
}
