//! Exact Catalan, Fuss-Catalan and Rothe numbers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient by the multiplicative formula; every partial
/// quotient is an integer so no rounding ever happens.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= BigUint::from(n - k + i);
        acc /= BigUint::from(i);
    }
    acc
}

fn exact_div(num: BigUint, den: u64) -> BigUint {
    let den = BigUint::from(den);
    let q = &num / &den;
    assert!(q.clone() * &den == num, "closed form is not an integer");
    q
}

/// Rothe number A_n(a, b) = a/(a+bn) * C(a+bn, n).
pub fn rothe(a: u64, b: u64, n: u64) -> BigUint {
    assert!(a >= 1, "rothe needs a >= 1");
    let top = a + b * n;
    exact_div(BigUint::from(a) * binomial(top, n), top)
}

pub fn catalan(n: u64) -> BigUint {
    rothe(1, 2, n)
}

/// C^k_n = 1/(kn+1) * C(kn+1, n).
pub fn k_catalan(k: u64, n: u64) -> BigUint {
    let top = k * n + 1;
    exact_div(binomial(top, n), top)
}

/// Number of complete exceptional sets over straight A_n.
pub fn exceptional_sets_a(n: u64) -> BigUint {
    k_catalan(3, n)
}

/// Outer equivalence classes of families for straight affine A with n outer points.
pub fn affine_representatives(n: u64) -> BigUint {
    assert!(n >= 1);
    rothe(4, 3, n - 1)
}

pub fn affine_families(n: u64) -> BigUint {
    affine_representatives(n) * BigUint::from(n)
}

pub fn small_triangulations(n: u64) -> BigUint {
    catalan(n) * BigUint::from(n)
}

/// Values of A_m(1,k) for m <= max_n from the k-fold convolution
/// A_m = sum over i_1+..+i_k = m-1 of the product of A_{i_j}.
pub fn fuss_recursion(k: usize, max_n: usize) -> Vec<BigUint> {
    let mut vals: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=max_n {
        // power[t] = coefficient of z^t in (sum_{i<m} A_i z^i)^k
        let mut power = vec![BigUint::zero(); m];
        power[0] = BigUint::one();
        for _ in 0..k {
            let mut next = vec![BigUint::zero(); m];
            for (s, ps) in power.iter().enumerate() {
                if ps.is_zero() {
                    continue;
                }
                for (t, v) in vals.iter().enumerate() {
                    if s + t < m {
                        next[s + t] += ps * v;
                    }
                }
            }
            power = next;
        }
        vals.push(power[m - 1].clone());
    }
    vals
}

/// The four-interval double sum; entry n (n >= 1) is the number of outer
/// classes for n outer points, i.e. A_{n-1}(4,3). Entry 0 is unused (zero).
pub fn four_interval_recursion(max_n: usize) -> Vec<BigUint> {
    let e = fuss_recursion(3, max_n);
    let mut out = vec![BigUint::zero()];
    for n in 1..=max_n {
        let mut total = BigUint::zero();
        for k in 0..n {
            let mut left = BigUint::zero();
            for i in 0..=k {
                left += &e[i] * &e[k - i];
            }
            let mut right = BigUint::zero();
            for j in 0..n - k {
                right += &e[j] * &e[n - k - j - 1];
            }
            total += left * right;
        }
        out.push(total);
    }
    out
}

/// Coefficients of g with g = 1 + z g^3, by fixed-point iteration on truncated series.
pub fn ternary_series(max_n: usize) -> Vec<BigUint> {
    let len = max_n + 1;
    let mul = |a: &[BigUint], b: &[BigUint]| {
        let mut c = vec![BigUint::zero(); len];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate().take(len - i) {
                c[i + j] += x * y;
            }
        }
        c
    };
    let mut g = vec![BigUint::zero(); len];
    g[0] = BigUint::one();
    for _ in 0..len {
        let cube = mul(&mul(&g, &g), &g);
        let mut next = vec![BigUint::zero(); len];
        next[0] = BigUint::one();
        next[1..].clone_from_slice(&cube[..len - 1]);
        g = next;
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecursionKind {
    /// A_n(1,k) against the k-fold convolution.
    Fuss(usize),
    /// A_{n-1}(4,3) against the four-interval double sum.
    FourInterval,
}

#[derive(Debug, Clone)]
pub struct RecursionReport {
    pub kind: RecursionKind,
    pub rows: Vec<(usize, BigUint, BigUint)>,
}

impl RecursionReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|(_, a, b)| a == b)
    }
}

pub fn rothe_recursion_check(kind: RecursionKind, max_n: usize) -> RecursionReport {
    let rows = match kind {
        RecursionKind::Fuss(k) => fuss_recursion(k, max_n)
            .into_iter()
            .enumerate()
            .map(|(n, r)| (n, r, k_catalan(k as u64, n as u64)))
            .collect(),
        RecursionKind::FourInterval => four_interval_recursion(max_n)
            .into_iter()
            .enumerate()
            .skip(1)
            .map(|(n, r)| (n, r, affine_representatives(n as u64)))
            .collect(),
    };
    RecursionReport { kind, rows }
}
