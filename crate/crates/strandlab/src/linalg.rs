//! Dense rational matrices and exact rank.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let data = entries.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        Matrix { rows, cols, data }
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(piv) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
                continue;
            };
            if piv != rank {
                for c in 0..cols {
                    a.swap(piv * cols + c, rank * cols + c);
                }
            }
            let inv = a[rank * cols + col].recip();
            for c in col..cols {
                a[rank * cols + c] = &a[rank * cols + c] * &inv;
            }
            for r in 0..rows {
                if r == rank || a[r * cols + col].is_zero() {
                    continue;
                }
                let f = a[r * cols + col].clone();
                for c in col..cols {
                    let sub = &f * &a[rank * cols + c];
                    a[r * cols + c] -= sub;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::from_i64(2, 3, &[1, 2, 3, 2, 4, 6]).rank(), 1);
        assert_eq!(Matrix::from_i64(3, 2, &[0, 1, 1, 0, 1, 1]).rank(), 2);
        assert_eq!(Matrix::zeros(0, 4).rank(), 0);
    }
}
