use std::fmt;

use super::ring::{RingSpec, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`RingSpec`]. Empty shapes (0×n, n×0) are legal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Result of row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{}[", self.ring, self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|a| self.ring.format(a)).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(ring: &RingSpec, rows: usize, cols: usize) -> Self {
        Matrix { ring: ring.clone(), rows, cols, entries: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &RingSpec, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width when there are no rows.
    pub fn from_rows(ring: &RingSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            if let Some(bad) = r.iter().find(|a| !ring.contains(a)) {
                return Err(Error::NotRepresentable { value: format!("{bad:?}"), ring: ring.to_string() });
            }
            entries.extend(r);
        }
        Ok(Matrix { ring: ring.clone(), rows: nrows, cols, entries })
    }

    /// Integer-entry convenience constructor (entries mapped through ℤ → R).
    pub fn from_i64(ring: &RingSpec, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data = rows.iter().map(|r| r.iter().map(|&v| ring.from_i64(v)).collect()).collect();
        Self::from_rows(ring, cols, data).expect("rectangular integer rows")
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }
    pub fn nrows(&self) -> usize {
        self.rows
    }
    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|a| self.ring.is_zero(a))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: other.ring.to_string() });
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let r = &self.ring;
        let mut out = Matrix::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = r.zero();
                for l in 0..self.cols {
                    acc = r.add(&acc, &r.mul(self.get(i, l), other.get(l, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows).map(|i| dot(&self.ring, self.row(i), v)).collect())
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix { ring: self.ring.clone(), rows: self.rows + other.rows, cols: self.cols, entries })
    }

    /// Entry-wise change of scalars (see [`RingSpec::convert`]).
    pub fn convert(&self, target: &RingSpec) -> Result<Matrix> {
        let entries = self.entries.iter().map(|a| target.convert(a, &self.ring)).collect::<Result<_>>()?;
        Ok(Matrix { ring: target.clone(), rows: self.rows, cols: self.cols, entries })
    }

    /// Reduced row echelon form; ℤ matrices are reduced over ℚ.
    ///
    /// The pivot in each column is the first nonzero entry at or below the
    /// current row.
    pub fn rref(&self) -> Rref {
        let ring = self.ring.field_of_fractions();
        let mut m = if ring == self.ring { self.clone() } else { self.convert(&ring).expect("ℤ embeds in ℚ") };
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| !ring.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, piv);
            let inv = ring.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let v = ring.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || ring.is_zero(m.get(i, c)) {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = ring.sub(m.get(i, j), &ring.mul(&f, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space `{x : m·x = 0}`, returned in RREF.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { reduced, rank, pivots } = self.rref();
        let ring = reduced.ring.clone();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![ring.zero(); self.cols];
            v[f] = ring.one();
            for (i, &p) in pivots.iter().enumerate().take(rank) {
                v[p] = ring.neg(reduced.get(i, f));
            }
            basis.push(v);
        }
        let k = Matrix::from_rows(&ring, self.cols, basis).expect("well-formed kernel rows");
        k.rref().reduced.drop_zero_rows()
    }

    pub(crate) fn drop_zero_rows(mut self) -> Matrix {
        let ring = self.ring.clone();
        let keep: Vec<Vec<Scalar>> =
            self.row_vecs().into_iter().filter(|r| r.iter().any(|a| !ring.is_zero(a))).collect();
        self.rows = keep.len();
        self.entries = keep.into_iter().flatten().collect();
        self
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

pub fn dot(ring: &RingSpec, u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter().zip(v).fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
}

pub fn scale(ring: &RingSpec, a: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| ring.mul(a, x)).collect()
}

pub fn add_vec(ring: &RingSpec, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| ring.add(a, b)).collect()
}

pub fn is_zero_vec(ring: &RingSpec, v: &[Scalar]) -> bool {
    v.iter().all(|a| ring.is_zero(a))
}

/// `u ⊗ v` flattened so that coordinate `i·len(v) + j` is `u_i v_j`.
pub fn tensor_pair(ring: &RingSpec, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().flat_map(|a| v.iter().map(move |b| ring.mul(a, b))).collect()
}

/// For nonzero `x`, `y`: returns `Some(a)` with `u = a·x`, `v = a·y` exactly
/// when `x ⊗ v = u ⊗ y`, and `None` when the tensors differ.
pub fn rank_one_match(
    ring: &RingSpec,
    x: &[Scalar],
    v: &[Scalar],
    u: &[Scalar],
    y: &[Scalar],
) -> Result<Option<Scalar>> {
    if x.len() != u.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), found: u.len() });
    }
    if y.len() != v.len() {
        return Err(Error::DimensionMismatch { expected: y.len(), found: v.len() });
    }
    if is_zero_vec(ring, x) || is_zero_vec(ring, y) {
        return Err(Error::ZeroVector);
    }
    let field = ring.field_of_fractions();
    let lift = |w: &[Scalar]| -> Vec<Scalar> { w.iter().map(|a| field.convert(a, ring).unwrap()).collect() };
    let (x, v, u, y) = (lift(x), lift(v), lift(u), lift(y));
    if tensor_pair(&field, &x, &v) != tensor_pair(&field, &u, &y) {
        return Ok(None);
    }
    let i = x.iter().position(|a| !field.is_zero(a)).expect("x nonzero");
    let a = field.div(&u[i], &x[i])?;
    debug_assert_eq!(scale(&field, &a, &x), u);
    debug_assert_eq!(scale(&field, &a, &y), v);
    Ok(Some(a))
}
