//! Small triangulations of the annulus of straight affine A and the map φ
//! from triangulations to clusters.
//!
//! On the cover with N = n+1, the vertical strands are X_v = c(tN+v-1, (t+1)N)
//! for v = 2..N and X_1 = c(tN-1, (t+1)N). The fundamental domain is the
//! stretch of points 0..N, with X_{n+1} = c(n, N) and X_1 = c(-1, N).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quiver::{projective_atilde, Quiver, StringModule};
use crate::strands::{arc_of_module, Arc, ArcDiagram, Line, Strand, StrandError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClusterError {
    #[error("arc {0} intersects itself")]
    SelfIntersecting(Arc),
    #[error("arc {0} crosses vertical strands that are not consecutive")]
    NotConsecutive(Arc),
    #[error("not a triangulation")]
    NotTriangulation,
    #[error(transparent)]
    Strand(#[from] StrandError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClusterObject {
    Shifted { shifted: ShiftedTag, vertex: usize },
    Module { shifted: UnshiftedTag, module: StringModule },
    Zero,
}

/// Serialized as `"shifted": true`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedTag;
/// Serialized as `"shifted": false`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnshiftedTag;

macro_rules! bool_tag {
    ($t:ident, $v:expr) => {
        impl Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_bool($v)
            }
        }
        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                if bool::deserialize(d)? == $v {
                    Ok($t)
                } else {
                    Err(serde::de::Error::custom("wrong shift tag"))
                }
            }
        }
    };
}
bool_tag!(ShiftedTag, true);
bool_tag!(UnshiftedTag, false);

impl ClusterObject {
    pub fn shifted(vertex: usize) -> Self {
        ClusterObject::Shifted { shifted: ShiftedTag, vertex }
    }

    pub fn module(m: StringModule) -> Self {
        ClusterObject::Module { shifted: UnshiftedTag, module: m }
    }
}

impl fmt::Display for ClusterObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClusterObject::Shifted { vertex, .. } => write!(f, "P_{vertex}[1]"),
            ClusterObject::Module { module, .. } => write!(f, "{module}"),
            ClusterObject::Zero => write!(f, "0"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cluster {
    pub n: usize,
    pub summands: Vec<ClusterObject>,
}

impl fmt::Display for Cluster {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Diagonal sets of every triangulation of a convex m-gon on vertices 0..m.
pub fn polygon_triangulations(m: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if hi - lo < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in lo + 1..hi {
            for a in go(lo, k) {
                for b in go(k, hi) {
                    let mut d = a.clone();
                    d.extend(b);
                    if k - lo > 1 {
                        d.push((lo, k));
                    }
                    if hi - k > 1 {
                        d.push((k, hi));
                    }
                    d.sort();
                    out.push(d);
                }
            }
        }
        out
    }
    assert!(m >= 3);
    go(0, m - 1)
}

/// Cover point of polygon vertex k: vertex 0 is the inner point N, vertices
/// 1..=n are the outer points and vertex n+1 is the next lift N+1 of outer point 1.
fn polygon_point(n: usize, k: usize) -> i64 {
    let nn = (n + 1) as i64;
    match k {
        0 => nn,
        k if k <= n => k as i64,
        _ => nn + 1,
    }
}

/// Glues an (n+2)-gon triangulation into the annulus along a(1,0)[0] and a(0,1)[0].
pub fn glue_polygon(n: usize, diagonals: &[(usize, usize)]) -> ArcDiagram {
    let mut strands = vec![Strand::c(1, (n + 1) as i64), Strand::c((n + 1) as i64, (n + 2) as i64)];
    strands.extend(diagonals.iter().map(|&(a, b)| Strand::c(polygon_point(n, a), polygon_point(n, b))));
    ArcDiagram::from_strands(n, &strands)
}

/// All n·C_n small triangulations: glued polygon triangulations and their
/// outer rotations.
pub fn small_triangulations(n: usize) -> Vec<ArcDiagram> {
    let mut out = Vec::new();
    for diag in polygon_triangulations(n + 2) {
        let mut d = glue_polygon(n, &diag);
        for _ in 0..n {
            assert!(d.is_small(), "outer rotation left the small triangulations: {d}");
            out.push(d.clone());
            d = d.outer_twist();
        }
    }
    out.sort();
    out
}

/// Outer twist followed by the inner twist that restores smallness: the
/// action of the outer rotation on families.
pub fn outer_rotation(t: &ArcDiagram) -> ArcDiagram {
    let d = t.outer_twist();
    [0, -1, 1].iter().map(|&k| d.inner_twist(k)).find(|e| e.is_small()).unwrap_or(d)
}

pub fn is_triangulation(d: &ArcDiagram) -> bool {
    let distinct: BTreeSet<&Arc> = d.arcs.iter().collect();
    distinct.len() == d.arcs.len()
        && d.arcs.len() == d.n + 1
        && d.arcs.iter().all(|a| !a.is_boundary(d.n).unwrap_or(true))
        && d.noncrossing()
}

/// Bridging arcs a(0,i)[0] and a(i,0)[0] sharing the outer point i.
pub fn hearts(d: &ArcDiagram) -> Vec<usize> {
    (1..=d.n)
        .filter(|&i| d.arcs.contains(&Arc::new(0, i, 0)) && d.arcs.contains(&Arc::new(i, 0, 0)))
        .collect()
}

fn vertical(n: usize, v: usize, t: i64) -> Strand {
    let nn = (n + 1) as i64;
    if v == 1 {
        Strand::c(t * nn - 1, (t + 1) * nn)
    } else {
        Strand::c(t * nn + v as i64 - 1, (t + 1) * nn)
    }
}

/// The cluster convention: vertical arcs give shifted projectives, boundary
/// arcs give 0, any other arc gives the string through the vertical strands it crosses.
pub fn phi(n: usize, arc: &Arc) -> Result<ClusterObject, ClusterError> {
    let line = Line::straight_cover(n + 1);
    let s = arc.to_strand(n)?;
    if line.self_intersects(&s) {
        return Err(ClusterError::SelfIntersecting(*arc));
    }
    if arc.is_boundary(n)? {
        return Ok(ClusterObject::Zero);
    }
    let nn = (n + 1) as i64;
    let canon = line.canonical(&s);
    for v in 1..=n + 1 {
        if line.canonical(&vertical(n, v, 0)) == canon {
            return Ok(ClusterObject::shifted(v));
        }
    }
    let mut crossed = Vec::new();
    for t in s.i.div_euclid(nn) - 2..=s.j.div_euclid(nn) + 2 {
        for v in 1..=n + 1 {
            let x = vertical(n, v, t);
            if line.lifts_cross(&s, &x) {
                crossed.push((x.i, x.j, v));
            }
        }
    }
    crossed.sort();
    if crossed.is_empty() {
        return Ok(ClusterObject::Zero);
    }
    let nv = n + 1;
    let ok = crossed.windows(2).all(|w| w[1].2 == w[0].2 % nv + 1);
    if !ok {
        return Err(ClusterError::NotConsecutive(*arc));
    }
    Ok(ClusterObject::module(StringModule::from_start_len(nv, crossed[0].2, crossed.len())))
}

pub fn cluster_of(t: &ArcDiagram) -> Result<Cluster, ClusterError> {
    if !is_triangulation(t) {
        return Err(ClusterError::NotTriangulation);
    }
    let mut summands = t.arcs.iter().map(|a| phi(t.n, a)).collect::<Result<Vec<_>, _>>()?;
    summands.sort();
    Ok(Cluster { n: t.n, summands })
}

/// Modules of a cluster with each P_v[1] replaced by P_v.
pub fn unshifted_modules(c: &Cluster) -> Vec<StringModule> {
    let q = Quiver::straight_atilde(c.n);
    c.summands
        .iter()
        .filter_map(|s| match s {
            ClusterObject::Shifted { vertex, .. } => Some(projective_atilde(&q, *vertex)),
            ClusterObject::Module { module, .. } => Some(*module),
            ClusterObject::Zero => None,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coincidence {
    pub coincide: bool,
    pub fundamental: bool,
}

/// Reads the unshifted cluster through the exceptional convention ψ and
/// compares with the triangulation; also tests fundamentality.
pub fn conventions_coincide(t: &ArcDiagram) -> Result<Coincidence, ClusterError> {
    let c = cluster_of(t)?;
    let q = Quiver::straight_atilde(t.n);
    let mut arcs = unshifted_modules(&c).iter().map(|m| arc_of_module(&q, m)).collect::<Result<Vec<_>, _>>()?;
    arcs.sort();
    Ok(Coincidence { coincide: arcs == t.arcs, fundamental: t.is_fundamental() })
}
