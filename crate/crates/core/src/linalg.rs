//! Exact dense rational matrices and the small amount of linear algebra the
//! engine needs: determinants, inverses, rank, definiteness tests, Newton's
//! identities, and a Jacobi eigensolver for float-input tolerance paths.

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::rational::{is_positive, Rat};
use crate::Result;

/// Dense square-or-rectangular rational matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                got: rows.iter().map(|r| r.len()).find(|&l| l != c).unwrap_or(0),
            });
        }
        Ok(RMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> RMatrix {
        let mut out = RMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn add(&self, other: &RMatrix) -> RMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn scaled(&self, factor: &Rat) -> RMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= factor;
        }
        out
    }

    pub fn matmul(&self, other: &RMatrix) -> RMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    /// tr(self^k) for k = 1..=max_power, by repeated multiplication.
    pub fn power_traces(&self, max_power: usize) -> Vec<Rat> {
        assert!(self.is_square());
        let mut traces = Vec::with_capacity(max_power);
        let mut acc = self.clone();
        for k in 1..=max_power {
            traces.push(acc.trace());
            if k < max_power {
                acc = acc.matmul(self);
            }
        }
        traces
    }

    /// Determinant by fraction-free-ish Gaussian elimination (exact).
    pub fn det(&self) -> Rat {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Rat::zero();
            };
            if pivot_row != col {
                m.swap_rows(pivot_row, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            for r in (col + 1)..n {
                let factor = &m[(r, col)] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let sub = &factor * &m[(col, c)];
                    m[(r, c)] -= sub;
                }
            }
        }
        det
    }

    /// Exact inverse; `None` if singular.
    pub fn inverse(&self) -> Option<RMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = RMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !m[(r, col)].is_zero())?;
            if pivot_row != col {
                m.swap_rows(pivot_row, col);
                inv.swap_rows(pivot_row, col);
            }
            let pivot = m[(col, col)].clone();
            for c in 0..n {
                m[(col, c)] /= &pivot;
                inv[(col, c)] /= &pivot;
            }
            for r in 0..n {
                if r == col || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in 0..n {
                    let sub_m = &factor * &m[(col, c)];
                    m[(r, c)] -= sub_m;
                    let sub_i = &factor * &inv[(col, c)];
                    inv[(r, c)] -= sub_i;
                }
            }
        }
        Some(inv)
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            let Some(pivot_row) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, row);
            let pivot = m[(row, col)].clone();
            for r in (row + 1)..m.rows {
                let factor = &m[(r, col)] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let sub = &factor * &m[(row, c)];
                    m[(r, c)] -= sub;
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    /// Leading principal minor of order k (1-based).
    pub fn leading_principal_minor(&self, k: usize) -> Rat {
        assert!(self.is_square() && k >= 1 && k <= self.rows);
        let mut sub = RMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                sub[(i, j)] = self[(i, j)].clone();
            }
        }
        sub.det()
    }

    /// Sylvester criterion: symmetric + all leading principal minors > 0.
    pub fn is_positive_definite(&self) -> bool {
        self.is_symmetric()
            && (1..=self.rows).all(|k| is_positive(&self.leading_principal_minor(k)))
    }

    /// Exact PSD test for a symmetric matrix: all elementary symmetric
    /// functions of the (real) eigenvalues are ≥ 0. They are obtained from
    /// the exact power traces through Newton's identities, so no eigenvalue
    /// is ever computed.
    pub fn is_positive_semidefinite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        let e = elementary_from_power_sums(&self.power_traces(self.rows));
        e.iter().all(|c| !c.is_negative())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Newton's identities: elementary symmetric functions e_1..e_n from power
/// sums p_1..p_n, via k e_k = Σ_{i=1}^{k} (−1)^{i−1} e_{k−i} p_i.
pub fn elementary_from_power_sums(power_sums: &[Rat]) -> Vec<Rat> {
    let n = power_sums.len();
    let mut e = vec![Rat::one()]; // e_0
    for k in 1..=n {
        let mut acc = Rat::zero();
        for i in 1..=k {
            let term = &e[k - i] * &power_sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / Rat::from_integer((k as i64).into()));
    }
    e.remove(0);
    e
}

/// Eigenvalues of a symmetric f64 matrix by the cyclic Jacobi method,
/// descending order. Used only on float inputs, where verdicts become
/// tolerance-dependent by construction.
pub fn symmetric_eigenvalues_f64(matrix: &[Vec<f64>]) -> Vec<f64> {
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a[i][j] * a[i][j];
            }
        }
        if off < 1e-300 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    eig
}

/// Tolerance-based rank for float symmetric matrices: eigenvalues below
/// 1e-10 times the largest magnitude count as zero.
pub fn float_rank_symmetric(matrix: &[Vec<f64>]) -> usize {
    let eig = symmetric_eigenvalues_f64(matrix);
    let scale = eig.iter().map(|x| x.abs()).fold(0.0f64, f64::max);
    if scale == 0.0 {
        return 0;
    }
    eig.iter().filter(|x| x.abs() > 1e-10 * scale).count()
}
