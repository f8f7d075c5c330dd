//! Dense square matrices over the rationals and the fraction-free determinant.

use num::{BigInt, Integer, One, Zero};

use crate::seqcore::Rat;

/// Dense `n x n` matrix of rationals, row-major. Dimension 0 is allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<Rat>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix {
            n,
            entries: vec![Rat::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { n, entries }
    }

    /// Builds from nested rows; panics if the rows are not square.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix rows must have length {n}");
            entries.extend(row);
        }
        SquareMatrix { n, entries }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rat::from_integer(BigInt::from(v)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> SquareMatrix {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Leading `m x m` section; `m` must not exceed the dimension.
    pub fn leading(&self, m: usize) -> SquareMatrix {
        assert!(m <= self.n);
        Self::from_fn(m, |i, j| self.get(i, j).clone())
    }

    pub fn mul(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = SquareMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.n).all(|i| ((i + 1)..self.n).all(|j| self.get(i, j).is_zero()))
    }

    /// Exact determinant; see [`det_exact`].
    pub fn det(&self) -> Rat {
        det_exact(self)
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Each row is first scaled by the lcm of its denominators, so elimination
/// runs on integers; the product of those factors divides out at the end.
/// Pivots are the first nonzero entry at or below the diagonal. The empty
/// matrix has determinant 1.
pub fn det_exact(m: &SquareMatrix) -> Rat {
    let n = m.dim();
    if n == 0 {
        return Rat::one();
    }
    let mut cleared = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        a.push(row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect());
        cleared *= lcm;
    }

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = match (k..n).find(|&r| !a[r][k].is_zero()) {
            Some(r) => r,
            None => return Rat::zero(),
        };
        if pivot != k {
            a.swap(pivot, k);
            negate = !negate;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Bareiss: the division is exact.
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut det = a[n - 1][n - 1].clone();
    if negate {
        det = -det;
    }
    Rat::new(det, cleared)
}
