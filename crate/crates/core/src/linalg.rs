//! Dense linear algebra over `F_q`.
//!
//! Row-major matrices of [`FieldElement`]s with Gauss–Jordan elimination:
//! reduced row-echelon form, rank, row-space membership, right nullspaces,
//! and linear solves. Everything is exact field arithmetic; no pivoting
//! heuristics are needed.
//!
//! Orientation conventions used throughout the crate:
//! - generator matrices act by `message · G` (rows span the code);
//! - `nullspace()` returns rows `v` with `A · vᵀ = 0`, so the nullspace of a
//!   generator matrix is a parity-check matrix.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Arc<FieldCtx>,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{} [", self.rows, self.cols, self.field.q())?;
        for i in 0..self.rows {
            let row: Vec<String> =
                self.row(i).iter().map(|&c| self.field.format_element(c)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zero(field: Arc<FieldCtx>, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![FieldElement::Zero; rows * cols] }
    }

    pub fn identity(field: Arc<FieldCtx>, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_rows(field: Arc<FieldCtx>, rows: Vec<Vec<FieldElement>>) -> Result<Matrix> {
        let ncols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows_with_cols(field, rows, ncols)
    }

    /// Like [`Matrix::from_rows`] but with an explicit column count, so an
    /// empty row set still produces a `0 × ncols` matrix instead of `0 × 0`.
    pub fn from_rows_with_cols(
        field: Arc<FieldCtx>,
        rows: Vec<Vec<FieldElement>>,
        ncols: usize,
    ) -> Result<Matrix> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::shape("ragged rows in matrix constructor"));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field, rows: nrows, cols: ncols, data })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<FieldCtx> {
        Arc::clone(&self.field)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field_arc(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j));
            }
        }
        t
    }

    /// Vertical stack: `[self; other]`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols || *self.field != *other.field {
            return Err(Error::shape("stacking matrices with different widths or fields"));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field_arc(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows || *self.field != *other.field {
            return Err(Error::shape("matrix product dimension mismatch"));
        }
        let f = &*self.field;
        let mut out = Matrix::zero(self.field_arc(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, b)));
                }
            }
        }
        Ok(out)
    }

    /// `v · self` (row vector times matrix).
    pub fn vec_mul(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.rows {
            return Err(Error::shape("row vector length != row count"));
        }
        let f = &*self.field;
        let mut out = vec![FieldElement::Zero; self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() {
                    out[j] = f.add(out[j], f.mul(vi, a));
                }
            }
        }
        Ok(out)
    }

    /// `self · vᵀ` (matrix times column vector).
    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.cols {
            return Err(Error::shape("column vector length != column count"));
        }
        let f = &*self.field;
        let mut out = vec![FieldElement::Zero; self.rows];
        for i in 0..self.rows {
            let mut acc = FieldElement::Zero;
            for (j, &vj) in v.iter().enumerate() {
                let a = self.at(i, j);
                if !a.is_zero() && !vj.is_zero() {
                    acc = f.add(acc, f.mul(a, vj));
                }
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Reduced row-echelon form and the pivot column indices.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field_arc();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize; // next pivot row
        for col in 0..m.cols {
            // find a nonzero entry in this column at or below pr
            let Some(sel) = (pr..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            // swap into position
            if sel != pr {
                for j in 0..m.cols {
                    let a = m.at(pr, j);
                    let b = m.at(sel, j);
                    m.set(pr, j, b);
                    m.set(sel, j, a);
                }
            }
            // normalize pivot row
            let inv = f.inv(m.at(pr, col)).expect("nonzero pivot");
            if m.at(pr, col) != FieldElement::ONE {
                for j in col..m.cols {
                    m.set(pr, j, f.mul(inv, m.at(pr, j)));
                }
            }
            // eliminate the column everywhere else
            for r in 0..m.rows {
                if r == pr {
                    continue;
                }
                let c = m.at(r, col);
                if c.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let sub = f.mul(c, m.at(pr, j));
                    m.set(r, j, f.sub(m.at(r, j), sub));
                }
            }
            pivots.push(col);
            pr += 1;
            if pr == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// The nonzero rows of the RREF: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let rows: Vec<Vec<FieldElement>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        // keep the column count even for the zero row space
        let nrows = rows.len();
        let data = rows.into_iter().flatten().collect();
        Matrix { field: self.field_arc(), rows: nrows, cols: self.cols, data }
    }

    /// Basis of `{ v : self · vᵀ = 0 }`, returned as rows.
    pub fn nullspace(&self) -> Matrix {
        let f = &*self.field;
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![FieldElement::Zero; self.cols];
            v[free] = FieldElement::ONE;
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.at(row, free));
            }
            basis.push(v);
        }
        // keep the column count even when the nullspace is trivial
        let nrows = basis.len();
        let data = basis.into_iter().flatten().collect();
        Matrix { field: self.field_arc(), rows: nrows, cols: self.cols, data }
    }

    /// Solve `self · x = b` for a column vector `x`; `None` if inconsistent.
    pub fn solve_right(&self, b: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
        if b.len() != self.rows {
            return Err(Error::shape("rhs length != row count"));
        }
        // eliminate on the augmented matrix [self | b]
        let mut aug = Matrix::zero(self.field_arc(), self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None); // pivot in the augmented column: inconsistent
        }
        let mut x = vec![FieldElement::Zero; self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.at(row, self.cols);
        }
        Ok(Some(x))
    }

    /// Solve `x · self = target` for a row vector `x`; `None` if `target`
    /// is outside the row space.
    pub fn solve_left(&self, target: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
        if target.len() != self.cols {
            return Err(Error::shape("target length != column count"));
        }
        self.transpose().solve_right(target)
    }

    pub fn in_rowspace(&self, v: &[FieldElement]) -> Result<bool> {
        Ok(self.solve_left(v)?.is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn f9() -> Arc<FieldCtx> {
        FieldCtx::new(3, 2, &[2, 2, 1]).unwrap()
    }

    fn rand_matrix(f: &Arc<FieldCtx>, rows: usize, cols: usize, rng: &mut StdRng) -> Matrix {
        let mut m = Matrix::zero(Arc::clone(f), rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f.element_at(rng.gen_range(0..f.q())));
            }
        }
        m
    }

    #[test]
    fn rref_identity_and_idempotence() {
        let f = f9();
        let id = Matrix::identity(Arc::clone(&f), 5);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2, 3, 4]);
        let mut rng = StdRng::seed_from_u64(0xa11ce);
        for _ in 0..50 {
            let m = rand_matrix(&f, 4, 7, &mut rng);
            let (r1, p1) = m.rref();
            let (r2, p2) = r1.rref();
            assert_eq!(r1, r2);
            assert_eq!(p1, p2);
        }
    }

    #[test]
    fn rank_nullity_and_orthogonality() {
        let f = f9();
        let mut rng = StdRng::seed_from_u64(0xa11cf);
        for _ in 0..60 {
            let m = rand_matrix(&f, 5, 9, &mut rng);
            let rank = m.rank();
            let ns = m.nullspace();
            assert_eq!(rank + ns.nrows(), m.ncols(), "rank-nullity");
            assert_eq!(ns.rank(), ns.nrows(), "nullspace basis independent");
            for i in 0..ns.nrows() {
                let prod = m.mul_vec(ns.row(i)).unwrap();
                assert!(prod.iter().all(|c| c.is_zero()), "A v^T = 0");
            }
        }
    }

    #[test]
    fn solve_and_rowspace_membership() {
        let f = f9();
        let mut rng = StdRng::seed_from_u64(0xa11d0);
        for _ in 0..60 {
            let m = rand_matrix(&f, 4, 6, &mut rng);
            // a vector known to be in the row space
            let coeffs: Vec<FieldElement> =
                (0..4).map(|_| f.element_at(rng.gen_range(0..f.q()))).collect();
            let v = m.vec_mul(&coeffs).unwrap();
            assert!(m.in_rowspace(&v).unwrap());
            let x = m.solve_left(&v).unwrap().expect("solvable");
            assert_eq!(m.vec_mul(&x).unwrap(), v);
        }
        // pinned inconsistent system: rows (1,0), (1,0); target (0,1)
        let m = Matrix::from_rows(
            Arc::clone(&f),
            vec![
                vec![FieldElement::ONE, FieldElement::Zero],
                vec![FieldElement::ONE, FieldElement::Zero],
            ],
        )
        .unwrap();
        assert!(!m.in_rowspace(&[FieldElement::Zero, FieldElement::ONE]).unwrap());
        assert!(m.in_rowspace(&[FieldElement::Pow(3), FieldElement::Zero]).unwrap());
    }

    #[test]
    fn product_shapes_and_associativity() {
        let f = f9();
        let mut rng = StdRng::seed_from_u64(0xa11d1);
        let a = rand_matrix(&f, 3, 4, &mut rng);
        let b = rand_matrix(&f, 4, 5, &mut rng);
        let c = rand_matrix(&f, 5, 2, &mut rng);
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        assert_eq!(left, right);
        assert!(a.mul(&c).is_err());
        assert_eq!(a.transpose().transpose(), a);
    }
}
