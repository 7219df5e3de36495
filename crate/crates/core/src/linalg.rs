//! Dense matrices over a cyclotomic field and exact Gauss–Jordan elimination.

use alloc::{sync::Arc, vec, vec::Vec};
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::scalars::{CycField, CycNum};

#[derive(Clone)]
pub struct Matrix {
    field: Arc<CycField>,
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

impl Matrix {
    pub fn zeros(field: &Arc<CycField>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![CycNum::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &Arc<CycField>, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, CycNum::one(field));
        }
        m
    }

    pub fn diagonal(field: &Arc<CycField>, diag: &[CycNum]) -> Matrix {
        let mut m = Matrix::zeros(field, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length and
    /// all entries the conductor of `field`.
    pub fn from_rows(field: &Arc<CycField>, rows: Vec<Vec<CycNum>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch(row.len(), c));
            }
            for x in row {
                if x.conductor() != field.conductor() {
                    return Err(Error::ConductorMismatch {
                        left: field.conductor(),
                        right: x.conductor(),
                    });
                }
                data.push(x);
            }
        }
        Ok(Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: CycNum) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<CycNum>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j].add_mul(a, other.get(k, j));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = CycNum::zero(&self.field);
                for (a, x) in self.row(i).iter().zip(v) {
                    acc.add_mul(a, x);
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, s: &CycNum) -> Matrix {
        let mut m = self.clone();
        for x in &mut m.data {
            *x = &*x * s;
        }
        m
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let mut m = self.clone();
        for (x, y) in m.data.iter_mut().zip(&other.data) {
            *x += y;
        }
        m
    }

    pub fn trace(&self) -> CycNum {
        let mut acc = CycNum::zero(&self.field);
        for i in 0..self.rows.min(self.cols) {
            acc += self.get(i, i);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for j in c..self.cols {
                let x = self.get(r, j);
                if !x.is_zero() {
                    let y = x * &inv;
                    self.set(r, j, y);
                }
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let pr = self.get(r, j);
                    if pr.is_zero() {
                        continue;
                    }
                    let y = self.get(i, j) - &(&factor * pr);
                    self.set(i, j, y);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right kernel `{v : A v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<CycNum>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![CycNum::zero(&self.field); self.cols];
                v[f] = CycNum::one(&self.field);
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Result<CycNum> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(self.rows, self.cols));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = CycNum::one(&self.field);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(CycNum::zero(&self.field));
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv()?;
            for i in c + 1..n {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let y = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, y);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, CycNum::one(&self.field));
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut inv = Matrix::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }
}

/// Reduced row echelon basis of the span of `vectors` (all of length `len`).
pub fn row_basis(field: &Arc<CycField>, len: usize, vectors: &[Vec<CycNum>]) -> Vec<Vec<CycNum>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = Matrix::zeros(field, vectors.len(), len);
    for (i, v) in vectors.iter().enumerate() {
        for (j, x) in v.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    let r = m.rref_in_place().len();
    (0..r).map(|i| m.row(i).to_vec()).collect()
}

/// Rank of a list of vectors of length `len`.
pub fn span_rank(field: &Arc<CycField>, len: usize, vectors: &[Vec<CycNum>]) -> usize {
    row_basis(field, len, vectors).len()
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for Matrix {}

impl Ord for Matrix {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rows, self.cols)
            .cmp(&(other.rows, other.cols))
            .then_with(|| self.data.cmp(&other.data))
    }
}

impl PartialOrd for Matrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(field: &Arc<CycField>, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&x| CycNum::from_int(field, x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_and_nullspace() {
        let f = CycField::new(1);
        let m = ints(&f, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let image = m.mul_vec(&ns[0]);
        assert!(image.iter().all(CycNum::is_zero));
    }

    #[test]
    fn inverse_and_det_over_gaussian_integers() {
        let f = CycField::new(4);
        let i = CycNum::zeta(&f);
        let one = CycNum::one(&f);
        let m = Matrix::from_rows(
            &f,
            vec![vec![one.clone(), i.clone()], vec![i.clone(), one.clone()]],
        )
        .unwrap();
        // det = 1 - i^2 = 2
        assert_eq!(m.det().unwrap(), CycNum::from_int(&f, 2));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let singular = ints(&f, &[&[1, 1], &[1, 1]]);
        assert!(singular.inverse().is_err());
        assert!(singular.det().unwrap().is_zero());
    }
}
