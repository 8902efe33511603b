use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, RingSpec, Scalar};

/// A submodule of `R^n` stored by its canonical RREF basis (no zero rows).
///
/// Over ℤ the basis is kept over ℚ: every invariant computed here only
/// depends on the rational span.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ring: &RingSpec, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        let m = Matrix::from_rows(ring, ambient_dim, vectors)?;
        Ok(Self::from_matrix(&m))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let r = m.rref();
        let basis = r.reduced.drop_zero_rows();
        Subspace { basis, pivots: r.pivots }
    }

    /// Trusts that `rows` already form an RREF basis with the given pivots.
    pub(crate) fn from_rref_rows(ring: &RingSpec, n: usize, rows: Vec<Vec<Scalar>>, pivots: Vec<usize>) -> Self {
        let basis = Matrix::from_rows(ring, n, rows).expect("rref rows");
        debug_assert_eq!(basis.rref().reduced, basis);
        Subspace { basis, pivots }
    }

    pub fn zero(ring: &RingSpec, n: usize) -> Self {
        let f = ring.field_of_fractions();
        Subspace { basis: Matrix::zeros(&f, 0, n), pivots: vec![] }
    }

    pub fn whole(ring: &RingSpec, n: usize) -> Self {
        let f = ring.field_of_fractions();
        Subspace { basis: Matrix::identity(&f, n), pivots: (0..n).collect() }
    }

    pub fn ring(&self) -> &RingSpec {
        self.basis.ring()
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim(), found: v.len() });
        }
        Ok(())
    }

    /// Reduces `v` against the basis: the result vanishes on all pivot columns
    /// and is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_vector(v)?;
        let ring = self.ring().clone();
        let mut w: Vec<Scalar> = v.iter().map(|a| ring.convert(a, &ring_of(a, &ring)).unwrap()).collect();
        for (i, &p) in self.pivots.iter().enumerate() {
            if ring.is_zero(&w[p]) {
                continue;
            }
            let f = w[p].clone();
            for (j, b) in self.basis.row(i).iter().enumerate() {
                w[j] = ring.sub(&w[j], &ring.mul(&f, b));
            }
        }
        Ok(w)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool> {
        let ring = self.ring().clone();
        Ok(self.reduce(v)?.iter().all(|a| ring.is_zero(a)))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        for v in other.basis_vectors() {
            if !self.contains_vector(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        Ok(Subspace::from_matrix(&self.basis.stack(&other.basis)?))
    }

    /// `self ∩ other` via the kernel of `[B_self; -B_other]ᵀ`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        let ring = self.ring().clone();
        let neg = Matrix::from_rows(
            &ring,
            other.ambient_dim(),
            other.basis_vectors().into_iter().map(|r| r.iter().map(|a| ring.neg(a)).collect()).collect(),
        )?;
        let stacked = self.basis.stack(&neg)?;
        let rel = stacked.transpose().kernel_basis();
        let mut vecs = Vec::new();
        for i in 0..rel.nrows() {
            let coeffs = &rel.row(i)[..self.dim()];
            let mut v = vec![ring.zero(); self.ambient_dim()];
            for (c, b) in coeffs.iter().zip(self.basis_vectors()) {
                for (vj, bj) in v.iter_mut().zip(b) {
                    *vj = ring.add(vj, &ring.mul(c, &bj));
                }
            }
            vecs.push(v);
        }
        Subspace::span(&ring, self.ambient_dim(), vecs)
    }
}

// Vectors handed in over ℤ are interpreted in ℚ.
fn ring_of(a: &Scalar, field: &RingSpec) -> RingSpec {
    match a {
        Scalar::Integer(_) => RingSpec::integers(),
        _ => field.clone(),
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.basis_vectors().cmp(&other.basis_vectors()).then(self.ambient_dim().cmp(&other.ambient_dim()))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}^{}) {}", self.dim(), self.ring(), self.ambient_dim(), self)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.ring();
        let rows: Vec<String> = self
            .basis_vectors()
            .iter()
            .map(|r| format!("({})", r.iter().map(|a| ring.format(a)).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "<{}>", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_is_canonical() {
        let q = RingSpec::rationals();
        let v = |a: &[i64]| -> Vec<Scalar> { a.iter().map(|&x| q.from_i64(x)).collect() };
        let a = Subspace::span(&q, 3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(&q, 3, vec![v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains_vector(&v(&[3, 4, 1])).unwrap());
        assert!(!a.contains_vector(&v(&[1, 0, 0])).unwrap());
    }

    #[test]
    fn intersection() {
        let f = RingSpec::prime_field(3).unwrap();
        let v = |a: &[i64]| -> Vec<Scalar> { a.iter().map(|&x| f.from_i64(x)).collect() };
        let a = Subspace::span(&f, 3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(&f, 3, vec![v(&[1, 1, 1]), v(&[0, 1, 0])]).unwrap();
        let c = a.intersect(&b).unwrap();
        assert_eq!(c, Subspace::span(&f, 3, vec![v(&[0, 1, 0])]).unwrap());
    }

    #[test]
    fn integer_vectors_are_accepted() {
        let z = RingSpec::integers();
        let s = Subspace::whole(&z, 2);
        assert_eq!(s.ring(), &RingSpec::rationals());
        assert!(s.contains_vector(&[z.from_i64(3), z.from_i64(-1)]).unwrap());
    }
}
