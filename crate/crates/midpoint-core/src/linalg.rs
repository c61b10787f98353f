//! Small dense linear algebra over [`Scalar`], plus plain-`f64` helpers
//! for the numeric paths (Newton refinement, least squares, search).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{Mode, Scalar, ToleranceBudget};
use crate::vector::Vector;

#[derive(Clone, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, mode: Mode) -> Matrix {
        Matrix { rows, cols, data: vec![Scalar::zero(mode); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        if rows.is_empty() {
            return Err(Error::EmptyInput("matrix needs at least one row"));
        }
        let cols = rows[0].len();
        let mode = rows[0][0].mode();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
            }
            for c in r {
                if c.mode() != mode {
                    return Err(Error::MixedMode);
                }
                data.push(c.clone());
            }
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn identity(n: usize, mode: Mode) -> Matrix {
        let mut m = Matrix::new(n, n, mode);
        for i in 0..n {
            *m.get_mut(i, i) = Scalar::one(mode);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mode(&self) -> Mode {
        self.data[0].mode()
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::new(self.cols, self.rows, self.mode());
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.get_mut(c, r) = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, x.len());
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = Scalar::zero(self.mode());
            for c in 0..self.cols {
                acc = &acc + &(self.get(r, c) * &x[c]);
            }
            out.push(acc);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub enum LinearSolution {
    Unique(Vec<Scalar>),
    Singular,
}

/// Solve A·x = b by Gaussian elimination with partial pivoting.
/// Exact mode pivots on any nonzero entry and is exact; float mode
/// treats pivots within `tol.eq_tol` of zero as singular.
pub fn solve_linear(a: &Matrix, b: &[Scalar], tol: &ToleranceBudget) -> Result<LinearSolution> {
    if a.rows != a.cols {
        return Err(Error::NonSquareMatrix);
    }
    if a.rows != b.len() {
        return Err(Error::DimensionMismatch { expected: a.rows, got: b.len() });
    }
    let n = a.rows;
    let mode = a.mode();
    if b.iter().any(|s| s.mode() != mode) {
        return Err(Error::MixedMode);
    }
    let mut m = a.clone();
    let mut rhs: Vec<Scalar> = b.to_vec();

    for col in 0..n {
        // partial pivot by absolute value in both modes (deterministic)
        let mut piv = col;
        let mut best = m.get(col, col).abs();
        for r in col + 1..n {
            let v = m.get(r, col).abs();
            if v.partial_cmp(&best) == Some(core::cmp::Ordering::Greater) {
                best = v;
                piv = r;
            }
        }
        if best.sign_banded(tol.eq_tol) == core::cmp::Ordering::Equal {
            return Ok(LinearSolution::Singular);
        }
        if piv != col {
            for c in 0..n {
                let tmp = m.get(col, c).clone();
                *m.get_mut(col, c) = m.get(piv, c).clone();
                *m.get_mut(piv, c) = tmp;
            }
            rhs.swap(col, piv);
        }
        let pivot = m.get(col, col).clone();
        for r in col + 1..n {
            if m.get(r, col).is_zero() {
                continue;
            }
            let factor = m.get(r, col) / &pivot;
            for c in col..n {
                let v = m.get(r, c) - &(&factor * m.get(col, c));
                *m.get_mut(r, c) = v;
            }
            rhs[r] = &rhs[r] - &(&factor * &rhs[col]);
        }
    }

    let mut x = vec![Scalar::zero(mode); n];
    for r in (0..n).rev() {
        let mut acc = rhs[r].clone();
        for c in r + 1..n {
            acc = &acc - &(m.get(r, c) * &x[c]);
        }
        x[r] = &acc / m.get(r, r);
    }
    Ok(LinearSolution::Unique(x))
}

/// Row echelon reduction; returns (rank, pivot column indices, reduced matrix rows).
fn echelon(a: &Matrix, band: f64) -> (usize, Vec<usize>, Matrix) {
    let mut m = a.clone();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row >= m.rows {
            break;
        }
        let mut piv = row;
        let mut best = m.get(row, col).abs();
        for r in row + 1..m.rows {
            let v = m.get(r, col).abs();
            if v.partial_cmp(&best) == Some(core::cmp::Ordering::Greater) {
                best = v;
                piv = r;
            }
        }
        if best.sign_banded(band) == core::cmp::Ordering::Equal {
            continue;
        }
        if piv != row {
            for c in 0..m.cols {
                let tmp = m.get(row, c).clone();
                *m.get_mut(row, c) = m.get(piv, c).clone();
                *m.get_mut(piv, c) = tmp;
            }
        }
        let pivot = m.get(row, col).clone();
        for r in 0..m.rows {
            if r == row || m.get(r, col).is_zero() {
                continue;
            }
            let factor = m.get(r, col) / &pivot;
            for c in 0..m.cols {
                let v = m.get(r, c) - &(&factor * m.get(row, c));
                *m.get_mut(r, c) = v;
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    (pivot_cols.len(), pivot_cols, m)
}

pub fn rank(a: &Matrix, band: f64) -> usize {
    echelon(a, band).0
}

/// One nonzero kernel vector of A, or None when A has full column rank.
pub fn nullspace_vector(a: &Matrix, band: f64) -> Option<Vec<Scalar>> {
    let mode = a.mode();
    let (_, pivot_cols, m) = echelon(a, band);
    let free = (0..a.cols).find(|c| !pivot_cols.contains(c))?;
    let mut x = vec![Scalar::zero(mode); a.cols];
    x[free] = Scalar::one(mode);
    // pivot rows are in pivot_cols order after reduction
    for (row, &pc) in pivot_cols.iter().enumerate() {
        let num = m.get(row, free).clone();
        let den = m.get(row, pc).clone();
        x[pc] = -&(&num / &den);
    }
    Some(x)
}

/// Plain-f64 helpers for the numeric paths.
pub mod fl {
    use alloc::vec;
    use alloc::vec::Vec;

    pub fn dot(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    pub fn norm2(a: &[f64]) -> f64 {
        crate::math::sqrt(dot(a, a))
    }

    pub fn norm_inf(a: &[f64]) -> f64 {
        a.iter().fold(0.0, |m, &v| m.max(crate::math::abs(v)))
    }

    pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
        a.iter().map(|x| x * s).collect()
    }

    pub fn add_scaled(a: &[f64], s: f64, b: &[f64]) -> Vec<f64> {
        a.iter().zip(b).map(|(x, y)| x + s * y).collect()
    }

    /// Gaussian elimination with partial pivoting; None when singular.
    pub fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
        let n = b.len();
        for col in 0..n {
            let mut piv = col;
            for r in col + 1..n {
                if crate::math::abs(a[r][col]) > crate::math::abs(a[piv][col]) {
                    piv = r;
                }
            }
            if crate::math::abs(a[piv][col]) < 1e-300 {
                return None;
            }
            a.swap(col, piv);
            b.swap(col, piv);
            for r in col + 1..n {
                let f = a[r][col] / a[col][col];
                if f == 0.0 {
                    continue;
                }
                for c in col..n {
                    a[r][c] -= f * a[col][c];
                }
                b[r] -= f * b[col];
            }
        }
        let mut x = vec![0.0; n];
        for r in (0..n).rev() {
            let mut acc = b[r];
            for c in r + 1..n {
                acc -= a[r][c] * x[c];
            }
            x[r] = acc / a[r][r];
        }
        Some(x)
    }

    /// Least-squares step: solves (JᵀJ + damping·I) x = -Jᵀr.
    pub fn damped_normal_step(jac: &[Vec<f64>], res: &[f64], damping: f64) -> Option<Vec<f64>> {
        let n = jac[0].len();
        let mut jtj = vec![vec![0.0; n]; n];
        let mut jtr = vec![0.0; n];
        for (row, r) in jac.iter().zip(res) {
            for i in 0..n {
                jtr[i] += row[i] * r;
                for j in 0..n {
                    jtj[i][j] += row[i] * row[j];
                }
            }
        }
        for (i, row) in jtj.iter_mut().enumerate() {
            row[i] += damping;
        }
        solve(jtj, jtr.iter().map(|v| -v).collect())
    }

    /// Eigen-decomposition of a symmetric 2×2 matrix: returns
    /// (eigenvalues, unit eigenvectors) with eigenvalues descending.
    pub fn sym_eig2(a: f64, b: f64, d: f64) -> ([f64; 2], [[f64; 2]; 2]) {
        let tr = a + d;
        let det = a * d - b * b;
        let disc = crate::math::sqrt((tr * tr / 4.0 - det).max(0.0));
        let l1 = tr / 2.0 + disc;
        let l2 = tr / 2.0 - disc;
        let v1 = if crate::math::abs(b) > 1e-14 {
            [l1 - d, b]
        } else if a >= d {
            [1.0, 0.0]
        } else {
            [0.0, 1.0]
        };
        let n1 = crate::math::sqrt(v1[0] * v1[0] + v1[1] * v1[1]);
        let v1 = [v1[0] / n1, v1[1] / n1];
        let v2 = [-v1[1], v1[0]];
        ([l1, l2], [v1, v2])
    }

    /// LDLᵀ-based check that a symmetric matrix is positive
    /// semidefinite within `tol` (pivots ≥ -tol).
    pub fn is_psd(m: &[Vec<f64>], tol: f64) -> bool {
        let n = m.len();
        let mut a: Vec<Vec<f64>> = m.to_vec();
        for k in 0..n {
            let pivot = a[k][k];
            if pivot < -tol {
                return false;
            }
            if crate::math::abs(pivot) <= tol {
                // semidefinite direction: the whole row/col must vanish
                for j in k + 1..n {
                    if crate::math::abs(a[k][j]) > crate::math::sqrt(tol) {
                        return false;
                    }
                }
                continue;
            }
            for i in k + 1..n {
                let f = a[i][k] / pivot;
                for j in k..n {
                    let akj = a[k][j];
                    a[i][j] -= f * akj;
                }
            }
        }
        true
    }

    /// Strict positive-definiteness via Cholesky pivots > tol.
    pub fn is_pd(m: &[Vec<f64>], tol: f64) -> bool {
        let n = m.len();
        let mut a: Vec<Vec<f64>> = m.to_vec();
        for k in 0..n {
            if a[k][k] <= tol {
                return false;
            }
            for i in k + 1..n {
                let f = a[i][k] / a[k][k];
                for j in k..n {
                    let akj = a[k][j];
                    a[i][j] -= f * akj;
                }
            }
        }
        true
    }
}

/// The spec-level entry point: solve A·x = b where A is given as rows of
/// [`Vector`]s and b as a [`Vector`].
pub fn solve_linear_system(rows: &[Vector], b: &Vector, tol: &ToleranceBudget) -> Result<LinearSolution> {
    let a = Matrix::from_rows(rows.iter().map(|r| r.coords().to_vec()).collect())?;
    solve_linear(&a, b.coords(), tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> ToleranceBudget {
        ToleranceBudget::default()
    }

    #[test]
    fn identity_solve() {
        let a = Matrix::identity(3, Mode::Exact);
        let b = [Scalar::from_int(1, Mode::Exact), Scalar::from_int(2, Mode::Exact), Scalar::from_int(3, Mode::Exact)];
        match solve_linear(&a, &b, &tol()).unwrap() {
            LinearSolution::Unique(x) => assert_eq!(x.to_vec(), b.to_vec()),
            LinearSolution::Singular => panic!("identity is not singular"),
        }
    }

    #[test]
    fn rank_deficient_flags_singular() {
        let a = Matrix::from_rows(vec![
            vec![Scalar::Float(1.0), Scalar::Float(1.0)],
            vec![Scalar::Float(1.0), Scalar::Float(1.0)],
        ])
        .unwrap();
        let b = [Scalar::Float(1.0), Scalar::Float(2.0)];
        assert!(matches!(solve_linear(&a, &b, &tol()).unwrap(), LinearSolution::Singular));
    }

    #[test]
    fn diagonal_solve() {
        let a = Matrix::from_rows(vec![
            vec![Scalar::from_int(2, Mode::Exact), Scalar::from_int(0, Mode::Exact)],
            vec![Scalar::from_int(0, Mode::Exact), Scalar::from_int(4, Mode::Exact)],
        ])
        .unwrap();
        let b = [Scalar::from_int(2, Mode::Exact), Scalar::from_int(4, Mode::Exact)];
        match solve_linear(&a, &b, &tol()).unwrap() {
            LinearSolution::Unique(x) => {
                assert_eq!(x[0], Scalar::from_int(1, Mode::Exact));
                assert_eq!(x[1], Scalar::from_int(1, Mode::Exact));
            }
            LinearSolution::Singular => panic!(),
        }
    }

    #[test]
    fn float_solve_residual_within_budget() {
        let a = Matrix::from_rows(vec![
            vec![Scalar::Float(2.0), Scalar::Float(1.0), Scalar::Float(-1.0)],
            vec![Scalar::Float(-3.0), Scalar::Float(-1.0), Scalar::Float(2.0)],
            vec![Scalar::Float(-2.0), Scalar::Float(1.0), Scalar::Float(2.0)],
        ])
        .unwrap();
        let b = [Scalar::Float(8.0), Scalar::Float(-11.0), Scalar::Float(-3.0)];
        let LinearSolution::Unique(x) = solve_linear(&a, &b, &tol()).unwrap() else {
            panic!("singular");
        };
        let bx = a.mul_vec(&x);
        let binf = b.iter().fold(0.0f64, |m, s| m.max(crate::math::abs(s.to_f64())));
        for (got, want) in bx.iter().zip(&b) {
            assert!(crate::math::abs(got.to_f64() - want.to_f64()) <= 1e-9 * (1.0 + binf));
        }
    }

    #[test]
    fn nullspace_of_dependent_rows() {
        let a = Matrix::from_rows(vec![
            vec![Scalar::from_int(1, Mode::Exact), Scalar::from_int(2, Mode::Exact), Scalar::from_int(3, Mode::Exact)],
            vec![Scalar::from_int(2, Mode::Exact), Scalar::from_int(4, Mode::Exact), Scalar::from_int(6, Mode::Exact)],
        ])
        .unwrap();
        let x = nullspace_vector(&a, 1e-12).expect("kernel exists");
        let ax = a.mul_vec(&x);
        assert!(ax.iter().all(|s| s.is_zero()));
        assert!(x.iter().any(|s| !s.is_zero()));
    }
}
