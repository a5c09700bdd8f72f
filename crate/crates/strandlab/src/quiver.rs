//! Quivers of type A and affine A built from orientation vectors, string
//! modules in interval and winding notation, walks and explicit representations.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("affine orientation vector needs both signs")]
    AllEqualSigns,
    #[error("orientation vector too short for {0:?}")]
    TooShort(Kind),
    #[error("dimension vectors have length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid module {0}")]
    InvalidModule(String),
    #[error("band modules have no string representation")]
    Band,
    #[error("operation needs a quiver of kind {0:?}")]
    WrongKind(Kind),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    A,
    ATilde,
}

/// Signs ε_0..ε_n. For A_n the entries ε_0 and ε_n are carried but never used.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientationVector {
    pub kind: Kind,
    #[serde(rename = "epsilon")]
    pub signs: Vec<Sign>,
}

impl OrientationVector {
    pub fn new(kind: Kind, signs: Vec<Sign>) -> Result<Self, QuiverError> {
        if signs.len() < 2 {
            return Err(QuiverError::TooShort(kind));
        }
        if kind == Kind::ATilde && signs.iter().all(|s| *s == signs[0]) {
            return Err(QuiverError::AllEqualSigns);
        }
        Ok(OrientationVector { kind, signs })
    }

    pub fn straight_a(n: usize) -> Self {
        assert!(n >= 1);
        OrientationVector { kind: Kind::A, signs: vec![Sign::Plus; n + 1] }
    }

    /// Straight affine A_n: ε_0 = −, every other entry +. It has n+1 vertices.
    pub fn straight_atilde(n: usize) -> Self {
        assert!(n >= 1);
        let mut signs = vec![Sign::Plus; n + 1];
        signs[0] = Sign::Minus;
        OrientationVector { kind: Kind::ATilde, signs }
    }

    pub fn vertex_count(&self) -> usize {
        match self.kind {
            Kind::A => self.signs.len() - 1,
            Kind::ATilde => self.signs.len(),
        }
    }

    pub fn is_straight(&self) -> bool {
        let n = self.signs.len() - 1;
        match self.kind {
            Kind::A => self.signs[1..n].iter().all(|s| *s == Sign::Plus),
            Kind::ATilde => {
                self.signs[0] == Sign::Minus && self.signs[1..].iter().all(|s| *s == Sign::Plus)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
}

/// Vertices are 1-based. Arrow index v-1 is α_v, the arrow between v and v+1;
/// for affine A the last index is α_0, between n+1 and 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    pub kind: Kind,
    pub orientation: OrientationVector,
    pub vertex_count: usize,
    pub arrows: Vec<Arrow>,
}

pub fn build_quiver(eps: &OrientationVector) -> Result<Quiver, QuiverError> {
    let eps = OrientationVector::new(eps.kind, eps.signs.clone())?;
    let nv = eps.vertex_count();
    let mut arrows = Vec::new();
    let last_regular = match eps.kind {
        Kind::A => nv.saturating_sub(1),
        Kind::ATilde => nv - 1,
    };
    for i in 1..=last_regular {
        let a = if eps.signs[i] == Sign::Plus {
            Arrow { source: i, target: i + 1 }
        } else {
            Arrow { source: i + 1, target: i }
        };
        arrows.push(a);
    }
    if eps.kind == Kind::ATilde {
        let a = if eps.signs[0] == Sign::Plus {
            Arrow { source: nv, target: 1 }
        } else {
            Arrow { source: 1, target: nv }
        };
        arrows.push(a);
    }
    Ok(Quiver { kind: eps.kind, orientation: eps, vertex_count: nv, arrows })
}

impl Quiver {
    pub fn straight_a(n: usize) -> Self {
        build_quiver(&OrientationVector::straight_a(n)).expect("valid")
    }

    pub fn straight_atilde(n: usize) -> Self {
        build_quiver(&OrientationVector::straight_atilde(n)).expect("valid")
    }

    /// The opposite quiver, as a plain arrow reversal.
    pub fn opposite(&self) -> Quiver {
        let signs = self
            .orientation
            .signs
            .iter()
            .map(|s| if *s == Sign::Plus { Sign::Minus } else { Sign::Plus })
            .collect();
        let orientation = OrientationVector { kind: self.kind, signs };
        let arrows = self.arrows.iter().map(|a| Arrow { source: a.target, target: a.source }).collect();
        Quiver { kind: self.kind, orientation, vertex_count: self.vertex_count, arrows }
    }

    fn successor(&self, v: usize) -> usize {
        if v == self.vertex_count {
            1
        } else {
            v + 1
        }
    }
}

/// Display form ij_k: the length-k string starting at vertex i+1 and ending at j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ijk {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl fmt::Display for Ijk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}_{}", self.i, self.j, self.k)
    }
}

/// A string module. For affine A the vertex label 0 is stored as n+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum StringModule {
    /// M_{x,y}, support [x+1, y].
    Interval { x: usize, y: usize },
    /// (i,j;l) with l maximal.
    Winding { i: usize, j: usize, l: usize },
}

impl fmt::Display for StringModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StringModule::Interval { x, y } => write!(f, "M_{{{},{}}}", x, y),
            StringModule::Winding { i, j, l } => write!(f, "({},{};{})", i, j, l),
        }
    }
}

fn cyc(v: i64, n: usize) -> usize {
    (v.rem_euclid(n as i64) as usize) + 1
}

impl StringModule {
    pub fn interval(x: usize, y: usize) -> Self {
        StringModule::Interval { x, y }
    }

    pub fn winding(i: usize, j: usize, l: usize) -> Self {
        StringModule::Winding { i, j, l }
    }

    /// The affine string starting at vertex `start` with `len` vertices, named canonically.
    pub fn from_start_len(vertex_count: usize, start: usize, len: usize) -> Self {
        assert!(len >= 1 && (1..=vertex_count).contains(&start));
        let nv = vertex_count;
        let i = if start == 1 { nv } else { start - 1 };
        let j = cyc(start as i64 - 2 + len as i64, nv);
        let r = cyc(j as i64 - i as i64 - 1, nv);
        StringModule::Winding { i, j, l: (len - r) / nv }
    }

    pub fn from_ijk(vertex_count: usize, name: Ijk) -> Result<Self, QuiverError> {
        let nv = vertex_count;
        let ok = (1..=nv).contains(&name.i)
            && (1..=nv).contains(&name.j)
            && name.k >= 1
            && (name.i + name.k) % nv == name.j % nv;
        if !ok {
            return Err(QuiverError::InvalidModule(name.to_string()));
        }
        Ok(Self::from_start_len(nv, name.i % nv + 1, name.k))
    }

    /// Normalizes a possibly non-maximal or out-of-range winding name.
    pub fn normalized(self, q: &Quiver) -> Result<Self, QuiverError> {
        self.validate(q)?;
        match (q.kind, self) {
            (Kind::ATilde, _) => {
                let (s, len) = self.start_len(q)?;
                Ok(Self::from_start_len(q.vertex_count, s, len))
            }
            _ => Ok(self),
        }
    }

    pub fn validate(&self, q: &Quiver) -> Result<(), QuiverError> {
        let nv = q.vertex_count;
        let ok = match (q.kind, *self) {
            (Kind::A, StringModule::Interval { x, y }) => x < y && y <= nv,
            (Kind::ATilde, StringModule::Winding { i, j, .. }) => {
                (1..=nv).contains(&i) && (1..=nv).contains(&j)
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(QuiverError::InvalidModule(self.to_string()))
        }
    }

    /// First vertex of the canonical walk and its number of vertices.
    pub fn start_len(&self, q: &Quiver) -> Result<(usize, usize), QuiverError> {
        self.validate(q)?;
        let nv = q.vertex_count;
        Ok(match *self {
            StringModule::Interval { x, y } => (x + 1, y - x),
            StringModule::Winding { i, j, l } => {
                let r = cyc(j as i64 - i as i64 - 1, nv);
                (i % nv + 1, l * nv + r)
            }
        })
    }

    pub fn to_ijk(&self, q: &Quiver) -> Result<Ijk, QuiverError> {
        let (s, len) = self.start_len(q)?;
        let nv = q.vertex_count;
        let i = if s == 1 { nv } else { s - 1 };
        let j = match q.kind {
            Kind::A => s + len - 1,
            Kind::ATilde => cyc(s as i64 - 2 + len as i64, nv),
        };
        Ok(Ijk { i, j, k: len })
    }

    pub fn walk(&self, q: &Quiver) -> Result<Walk, QuiverError> {
        let (s, len) = self.start_len(q)?;
        let mut steps = Vec::with_capacity(len.saturating_sub(1));
        let mut v = s;
        for _ in 1..len {
            let idx = v - 1;
            let a = q.arrows[idx];
            steps.push(Step { arrow: idx, inverse: a.source != v });
            v = q.successor(v);
        }
        Ok(Walk { start: s, steps })
    }

    pub fn length(&self, q: &Quiver) -> Result<usize, QuiverError> {
        Ok(self.start_len(q)?.1)
    }

    pub fn dimension_vector(&self, q: &Quiver) -> Result<Vec<usize>, QuiverError> {
        Ok(self.walk(q)?.visit_counts(q))
    }
}

/// Every string module over q with at most `max_len` vertices, canonical names.
pub fn all_string_modules(q: &Quiver, max_len: usize) -> Vec<StringModule> {
    let nv = q.vertex_count;
    let mut out = Vec::new();
    match q.kind {
        Kind::A => {
            for x in 0..nv {
                for y in x + 1..=nv {
                    if y - x <= max_len {
                        out.push(StringModule::Interval { x, y });
                    }
                }
            }
        }
        Kind::ATilde => {
            for s in 1..=nv {
                for len in 1..=max_len {
                    out.push(StringModule::from_start_len(nv, s, len));
                }
            }
        }
    }
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub arrow: usize,
    pub inverse: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    pub start: usize,
    pub steps: Vec<Step>,
}

impl Walk {
    /// Builds a walk from a start vertex and a list of steps, checking endpoints.
    pub fn new(q: &Quiver, start: usize, steps: Vec<Step>) -> Result<Self, QuiverError> {
        let w = Walk { start, steps };
        w.vertices(q)?;
        Ok(w)
    }

    pub fn vertices(&self, q: &Quiver) -> Result<Vec<usize>, QuiverError> {
        let mut out = vec![self.start];
        let mut v = self.start;
        for st in &self.steps {
            let a = q.arrows.get(st.arrow).ok_or_else(|| QuiverError::InvalidModule("arrow".into()))?;
            let (from, to) = if st.inverse { (a.target, a.source) } else { (a.source, a.target) };
            if from != v {
                return Err(QuiverError::InvalidModule("walk endpoints do not match".into()));
            }
            v = to;
            out.push(v);
        }
        Ok(out)
    }

    pub fn end(&self, q: &Quiver) -> usize {
        *self.vertices(q).expect("valid walk").last().unwrap()
    }

    /// A string: no step is followed by its own inverse.
    pub fn is_string(&self) -> bool {
        self.steps.windows(2).all(|w| !(w[0].arrow == w[1].arrow && w[0].inverse != w[1].inverse))
    }

    pub fn visit_counts(&self, q: &Quiver) -> Vec<usize> {
        let mut d = vec![0; q.vertex_count];
        for v in self.vertices(q).expect("valid walk") {
            d[v - 1] += 1;
        }
        d
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentClass {
    Preprojective,
    Preinjective,
    LeftRegular,
    RightRegular,
    Homogeneous,
}

/// Classification of an affine string (or band) by the arrows continuing
/// the walk past its two ends.
pub fn classify_walk(q: &Quiver, w: &Walk, band: bool) -> Result<ComponentClass, QuiverError> {
    if q.kind != Kind::ATilde {
        return Err(QuiverError::WrongKind(Kind::ATilde));
    }
    if band {
        return Ok(ComponentClass::Homogeneous);
    }
    let nv = q.vertex_count;
    let verts = w.vertices(q)?;
    let s = verts[0];
    let e = *verts.last().unwrap();
    // the walk runs counterclockwise iff its first step leaves through α_s
    let ccw = match w.steps.first() {
        Some(st) => st.arrow == s - 1,
        None => true,
    };
    let (before, after) = if ccw {
        (q.arrows[(s + nv - 2) % nv], q.arrows[e - 1])
    } else {
        (q.arrows[s - 1], q.arrows[(e + nv - 2) % nv])
    };
    let start_in = before.target == s;
    let end_in = after.target == e;
    Ok(match (start_in, end_in) {
        (true, true) => ComponentClass::Preprojective,
        (false, false) => ComponentClass::Preinjective,
        (true, false) => ComponentClass::LeftRegular,
        (false, true) => ComponentClass::RightRegular,
    })
}

pub fn classify_component(q: &Quiver, m: &StringModule) -> Result<ComponentClass, QuiverError> {
    classify_walk(q, &m.walk(q)?, false)
}

pub fn convert_notation(q: &Quiver, name: Ijk) -> Result<StringModule, QuiverError> {
    StringModule::from_ijk(q.vertex_count, name)
}

/// Dimension vector plus one dims(t) x dims(s) matrix per arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

impl Representation {
    pub fn check(&self, q: &Quiver) -> bool {
        self.dims.len() == q.vertex_count
            && self.maps.len() == q.arrows.len()
            && q.arrows.iter().zip(&self.maps).all(|(a, m)| {
                m.rows == self.dims[a.target - 1] && m.cols == self.dims[a.source - 1]
            })
    }
}

/// Basis vectors at each vertex are the visits of the walk, listed from the
/// end of the walk backwards.
pub fn realize_walk(q: &Quiver, w: &Walk, band: bool) -> Result<Representation, QuiverError> {
    if band {
        return Err(QuiverError::Band);
    }
    if !w.is_string() {
        return Err(QuiverError::InvalidModule("walk is not a string".into()));
    }
    let verts = w.vertices(q)?;
    let mut dims = vec![0usize; q.vertex_count];
    let mut slot = vec![0usize; verts.len()];
    for (p, v) in verts.iter().enumerate().rev() {
        slot[p] = dims[v - 1];
        dims[v - 1] += 1;
    }
    let mut maps: Vec<Matrix> = q
        .arrows
        .iter()
        .map(|a| Matrix::zeros(dims[a.target - 1], dims[a.source - 1]))
        .collect();
    for (p, st) in w.steps.iter().enumerate() {
        let (src, dst) = if st.inverse { (p + 1, p) } else { (p, p + 1) };
        maps[st.arrow].set(slot[dst], slot[src], BigRational::one());
    }
    Ok(Representation { dims, maps })
}

pub fn realize(q: &Quiver, m: &StringModule) -> Result<Representation, QuiverError> {
    realize_walk(q, &m.walk(q)?, false)
}

/// ⟨x,y⟩ = Σ x_v y_v − Σ_a x_{s(a)} y_{t(a)}.
pub fn euler_form(q: &Quiver, x: &[usize], y: &[usize]) -> Result<i64, QuiverError> {
    for v in [x, y] {
        if v.len() != q.vertex_count {
            return Err(QuiverError::LengthMismatch { expected: q.vertex_count, got: v.len() });
        }
    }
    let diag: i64 = x.iter().zip(y).map(|(a, b)| (a * b) as i64).sum();
    let off: i64 = q.arrows.iter().map(|a| (x[a.source - 1] * y[a.target - 1]) as i64).sum();
    Ok(diag - off)
}

/// Projective cover P_v over straight affine A, as a string module.
pub fn projective_atilde(q: &Quiver, v: usize) -> StringModule {
    let nv = q.vertex_count;
    if v == 1 {
        StringModule::from_start_len(nv, nv, nv + 1)
    } else {
        StringModule::from_start_len(nv, v, nv - v + 1)
    }
}

impl Matrix {
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}
