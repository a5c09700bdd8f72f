//! Hom and Ext dimensions between string modules, exceptionality and
//! relative projectivity/injectivity.

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::quiver::{all_string_modules, euler_form, realize, Kind, Quiver, QuiverError, Representation, StringModule};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("interval indices out of range for n={n}: ({a},{b}), ({c},{d})")]
    OutOfRange { a: usize, b: usize, c: usize, d: usize, n: usize },
    #[error("input is not an exceptional set")]
    NotExceptional,
    #[error("perpendicular categories are only materialized for straight type A")]
    NotStraightA,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomExt {
    pub hom: usize,
    pub ext: usize,
}

/// dim Hom(M, N): nullity of f_t M_a = N_a f_s over all arrows a: s -> t.
pub fn hom_dim_repr(q: &Quiver, m: &Representation, n: &Representation) -> usize {
    let nv = q.vertex_count;
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return 0;
    }
    // f_v[r][c] lives at offset[v] + r * m.dims[v] + c
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let mut eqs: Vec<Vec<(usize, i64)>> = Vec::new();
    for (ai, a) in q.arrows.iter().enumerate() {
        let (s, t) = (a.source - 1, a.target - 1);
        let (ma, na) = (&m.maps[ai], &n.maps[ai]);
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = Vec::new();
                for k in 0..m.dims[t] {
                    let x = ma.get(k, c);
                    if !x.is_zero() {
                        row.push((var(t, r, k), to_i64(x)));
                    }
                }
                for k in 0..n.dims[s] {
                    let x = na.get(r, k);
                    if !x.is_zero() {
                        row.push((var(s, k, c), -to_i64(x)));
                    }
                }
                if !row.is_empty() {
                    eqs.push(row);
                }
            }
        }
    }
    let mut sys = Matrix::zeros(eqs.len(), unknowns);
    for (i, row) in eqs.iter().enumerate() {
        for &(j, x) in row {
            let cur = sys.get(i, j).clone();
            sys.set(i, j, cur + num_rational::BigRational::from_integer(x.into()));
        }
    }
    unknowns - sys.rank()
}

fn to_i64(x: &num_rational::BigRational) -> i64 {
    assert!(x.is_integer(), "string representations have integer entries");
    i64::try_from(x.to_integer()).expect("small entry")
}

pub fn hom_dim(q: &Quiver, m: &StringModule, n: &StringModule) -> Result<usize, OracleError> {
    Ok(hom_dim_repr(q, &realize(q, m)?, &realize(q, n)?))
}

/// Hom minus the Euler form; higher Ext vanishes for path algebras.
pub fn ext_dim(q: &Quiver, m: &StringModule, n: &StringModule) -> Result<usize, OracleError> {
    Ok(hom_ext(q, m, n)?.ext)
}

pub fn hom_ext(q: &Quiver, m: &StringModule, n: &StringModule) -> Result<HomExt, OracleError> {
    let hom = hom_dim(q, m, n)?;
    let chi = euler_form(q, &m.dimension_vector(q)?, &n.dimension_vector(q)?)?;
    let ext = hom as i64 - chi;
    assert!(ext >= 0, "negative ext between {m} and {n}: oracle inconsistency");
    Ok(HomExt { hom, ext: ext as usize })
}

/// Closed form over straight A_n for M_{a,b} and M_{c,d}.
pub fn interval_hom_ext(a: usize, b: usize, c: usize, d: usize, n: usize) -> Result<HomExt, OracleError> {
    if !(a < b && b <= n && c < d && d <= n) {
        return Err(OracleError::OutOfRange { a, b, c, d, n });
    }
    let hom = usize::from(c <= a && a < d && d <= b);
    let ext = usize::from(a < c && c <= b && b < d);
    Ok(HomExt { hom, ext })
}

/// τ M_{a,b} = M_{a+1,b+1}; projectives M_{a,n} have no translate.
pub fn ar_translate_a(m: &StringModule, n: usize) -> Option<StringModule> {
    match *m {
        StringModule::Interval { x, y } if y < n => Some(StringModule::Interval { x: x + 1, y: y + 1 }),
        _ => None,
    }
}

pub fn ar_translate_inverse_a(m: &StringModule) -> Option<StringModule> {
    match *m {
        StringModule::Interval { x, y } if x > 0 => Some(StringModule::Interval { x: x - 1, y: y - 1 }),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Backend {
    Linear,
    Interval,
}

/// Memoizing front end to either the linear-algebra oracle or the
/// straight type A closed form.
#[derive(Debug)]
pub struct Oracle {
    pub quiver: Quiver,
    backend: Backend,
    cache: Mutex<HashMap<(StringModule, StringModule), HomExt>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Relative {
    pub projective: bool,
    pub injective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelativeStatus {
    pub entries: Vec<(StringModule, Relative)>,
}

impl RelativeStatus {
    pub fn get(&self, m: &StringModule) -> Option<Relative> {
        self.entries.iter().find(|(x, _)| x == m).map(|(_, r)| *r)
    }

    pub fn projectives(&self) -> BTreeSet<StringModule> {
        self.entries.iter().filter(|(_, r)| r.projective).map(|(m, _)| *m).collect()
    }

    pub fn injectives(&self) -> BTreeSet<StringModule> {
        self.entries.iter().filter(|(_, r)| r.injective).map(|(m, _)| *m).collect()
    }

    fn sorted(mut self) -> Self {
        self.entries.sort();
        self
    }
}

impl Oracle {
    pub fn linear(q: &Quiver) -> Self {
        Oracle { quiver: q.clone(), backend: Backend::Linear, cache: Mutex::new(HashMap::new()) }
    }

    /// Closed-form oracle for straight A_n.
    pub fn interval(n: usize) -> Self {
        Oracle {
            quiver: Quiver::straight_a(n),
            backend: Backend::Interval,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn hom_ext(&self, m: &StringModule, n: &StringModule) -> Result<HomExt, OracleError> {
        if let Some(v) = self.cache.lock().unwrap().get(&(*m, *n)) {
            return Ok(*v);
        }
        let v = match (self.backend, *m, *n) {
            (Backend::Interval, StringModule::Interval { x: a, y: b }, StringModule::Interval { x: c, y: d }) => {
                interval_hom_ext(a, b, c, d, self.quiver.vertex_count)?
            }
            (Backend::Interval, _, _) => return Err(QuiverError::WrongKind(Kind::A).into()),
            (Backend::Linear, _, _) => hom_ext(&self.quiver, m, n)?,
        };
        self.cache.lock().unwrap().insert((*m, *n), v);
        Ok(v)
    }

    pub fn hom(&self, m: &StringModule, n: &StringModule) -> Result<usize, OracleError> {
        Ok(self.hom_ext(m, n)?.hom)
    }

    pub fn ext(&self, m: &StringModule, n: &StringModule) -> Result<usize, OracleError> {
        Ok(self.hom_ext(m, n)?.ext)
    }

    fn vanish(&self, m: &StringModule, n: &StringModule) -> Result<bool, OracleError> {
        let v = self.hom_ext(m, n)?;
        Ok(v.hom == 0 && v.ext == 0)
    }

    pub fn is_exceptional_module(&self, m: &StringModule) -> Result<bool, OracleError> {
        Ok(self.hom_ext(m, m)? == HomExt { hom: 1, ext: 0 })
    }

    pub fn is_exceptional_sequence(&self, seq: &[StringModule]) -> Result<bool, OracleError> {
        if seq.len() > self.quiver.vertex_count {
            return Ok(false);
        }
        for (i, vi) in seq.iter().enumerate() {
            if !self.is_exceptional_module(vi)? {
                return Ok(false);
            }
            for vj in &seq[..i] {
                if !self.vanish(vi, vj)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Orders a set so that every nonzero Hom or Ext points forward, or
    /// returns None when no such order exists.
    pub fn sort_exceptional_set(&self, set: &[StringModule]) -> Result<Option<Vec<StringModule>>, OracleError> {
        let mut items: Vec<StringModule> = set.to_vec();
        items.sort();
        items.dedup();
        if items.len() != set.len() || items.len() > self.quiver.vertex_count {
            return Ok(None);
        }
        for m in &items {
            if !self.is_exceptional_module(m)? {
                return Ok(None);
            }
        }
        let k = items.len();
        let mut adj = vec![vec![false; k]; k];
        for i in 0..k {
            for j in 0..k {
                if i != j && !self.vanish(&items[i], &items[j])? {
                    adj[i][j] = true;
                }
            }
        }
        let mut indeg: Vec<usize> = (0..k).map(|j| (0..k).filter(|&i| adj[i][j]).count()).collect();
        let mut done = vec![false; k];
        let mut out = Vec::with_capacity(k);
        while out.len() < k {
            let Some(next) = (0..k).find(|&i| !done[i] && indeg[i] == 0) else {
                return Ok(None);
            };
            done[next] = true;
            out.push(items[next]);
            for j in 0..k {
                if adj[next][j] {
                    indeg[j] -= 1;
                }
            }
        }
        Ok(Some(out))
    }

    fn indecomposables(&self) -> Result<Vec<StringModule>, OracleError> {
        let q = &self.quiver;
        if q.kind != Kind::A || !q.orientation.is_straight() {
            return Err(OracleError::NotStraightA);
        }
        Ok(all_string_modules(q, q.vertex_count))
    }

    /// E^⊥: all W with Hom(E_i, W) = 0 = Ext(E_i, W).
    pub fn perpendicular(&self, e: &[StringModule]) -> Result<Vec<StringModule>, OracleError> {
        let mut out = Vec::new();
        for w in self.indecomposables()? {
            let mut ok = true;
            for v in e {
                if !self.vanish(v, &w)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(w);
            }
        }
        Ok(out)
    }

    /// ⊥E: all W with Hom(W, E_i) = 0 = Ext(W, E_i).
    pub fn left_perpendicular(&self, e: &[StringModule]) -> Result<Vec<StringModule>, OracleError> {
        let mut out = Vec::new();
        for w in self.indecomposables()? {
            let mut ok = true;
            for v in e {
                if !self.vanish(&w, v)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(w);
            }
        }
        Ok(out)
    }

    /// Status computed from one ordering: E_i is projective in the right
    /// perpendicular of the later terms and injective in the left
    /// perpendicular of the earlier ones.
    pub fn relative_status_of_sequence(&self, seq: &[StringModule]) -> Result<RelativeStatus, OracleError> {
        if !self.is_exceptional_sequence(seq)? {
            return Err(OracleError::NotExceptional);
        }
        let mut entries = Vec::new();
        for (i, y) in seq.iter().enumerate() {
            let mut projective = true;
            for z in self.perpendicular(&seq[i + 1..])? {
                if self.ext(y, &z)? != 0 {
                    projective = false;
                    break;
                }
            }
            let mut injective = true;
            for z in self.left_perpendicular(&seq[..i])? {
                if self.ext(&z, y)? != 0 {
                    injective = false;
                    break;
                }
            }
            entries.push((*y, Relative { projective, injective }));
        }
        Ok(RelativeStatus { entries }.sorted())
    }

    pub fn relative_status(&self, set: &[StringModule]) -> Result<RelativeStatus, OracleError> {
        let seq = self.sort_exceptional_set(set)?.ok_or(OracleError::NotExceptional)?;
        self.relative_status_of_sequence(&seq)
    }
}

/// D(M_{a,b}) = M_{n-b,n-a}, read over the opposite quiver relabelled as straight A_n.
pub fn dual_interval(m: &StringModule, n: usize) -> StringModule {
    match *m {
        StringModule::Interval { x, y } => StringModule::Interval { x: n - y, y: n - x },
        other => other,
    }
}

pub fn is_exceptional_sequence(q: &Quiver, seq: &[StringModule]) -> Result<bool, OracleError> {
    Oracle::linear(q).is_exceptional_sequence(seq)
}

pub fn sort_exceptional_set(q: &Quiver, set: &[StringModule]) -> Result<Option<Vec<StringModule>>, OracleError> {
    Oracle::linear(q).sort_exceptional_set(set)
}

pub fn perpendicular(q: &Quiver, e: &[StringModule]) -> Result<Vec<StringModule>, OracleError> {
    Oracle::linear(q).perpendicular(e)
}

pub fn relative_status(q: &Quiver, set: &[StringModule]) -> Result<RelativeStatus, OracleError> {
    Oracle::linear(q).relative_status(set)
}
