use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::exactalg::{is_zero_vec, tensor_pair, Matrix, RingKind, RingSpec, Scalar};

/// A skew-symmetric bilinear map `φ: L × L → V` in fixed bases, stored as a
/// Gram tensor: `gram[t][i][j]` is the `t`-th coordinate of `φ(e_i, e_j)`.
///
/// Skew-symmetry means `gram[t][j][i] = -gram[t][i][j]`. Outside
/// characteristic 2 the diagonal must vanish; in characteristic 2 it may not,
/// so `φ(x, x) ≠ 0` is possible (the cup square on ℝP³ with GF(2) coefficients).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewBilinearMap {
    ring: RingSpec,
    dim_l: usize,
    gram: Vec<Matrix>,
}

impl SkewBilinearMap {
    pub fn new(ring: &RingSpec, dim_l: usize, gram: Vec<Matrix>) -> Result<Self> {
        for g in &gram {
            if g.ring() != ring {
                return Err(Error::RingMismatch { left: ring.to_string(), right: g.ring().to_string() });
            }
            if g.nrows() != dim_l || g.ncols() != dim_l {
                return Err(Error::DimensionMismatch { expected: dim_l, found: g.nrows().max(g.ncols()) });
            }
        }
        let map = SkewBilinearMap { ring: ring.clone(), dim_l, gram };
        map.validate()?;
        Ok(map)
    }

    fn validate(&self) -> Result<()> {
        let r = &self.ring;
        for (t, g) in self.gram.iter().enumerate() {
            for i in 0..self.dim_l {
                if r.characteristic() != 2 && !r.is_zero(g.get(i, i)) {
                    return Err(Error::NonzeroDiagonal { t, i });
                }
                for j in i + 1..self.dim_l {
                    if *g.get(j, i) != r.neg(g.get(i, j)) {
                        return Err(Error::Antisymmetry { t, i, j });
                    }
                }
            }
        }
        Ok(())
    }

    /// Integer-entry constructor; `gram[t]` is a list of rows.
    pub fn from_i64(ring: &RingSpec, dim_l: usize, gram: &[Vec<Vec<i64>>]) -> Result<Self> {
        let mats = gram
            .iter()
            .map(|g| {
                if g.len() != dim_l || g.iter().any(|r| r.len() != dim_l) {
                    return Err(Error::DimensionMismatch { expected: dim_l, found: g.len() });
                }
                Ok(if dim_l == 0 { Matrix::zeros(ring, 0, 0) } else { Matrix::from_i64(ring, g) })
            })
            .collect::<Result<_>>()?;
        Self::new(ring, dim_l, mats)
    }

    pub fn zero(ring: &RingSpec, dim_l: usize, dim_v: usize) -> Self {
        SkewBilinearMap { ring: ring.clone(), dim_l, gram: vec![Matrix::zeros(ring, dim_l, dim_l); dim_v] }
    }

    /// The standard symplectic form on `R^{2g}` with blocks `[[0,1],[-1,0]]`.
    pub fn symplectic(ring: &RingSpec, genus: usize) -> Self {
        let n = 2 * genus;
        let mut g = Matrix::zeros(ring, n, n);
        for b in 0..genus {
            g.set(2 * b, 2 * b + 1, ring.one());
            g.set(2 * b + 1, 2 * b, ring.neg(&ring.one()));
        }
        SkewBilinearMap { ring: ring.clone(), dim_l: n, gram: vec![g] }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }
    pub fn dim_l(&self) -> usize {
        self.dim_l
    }
    pub fn dim_v(&self) -> usize {
        self.gram.len()
    }
    pub fn gram(&self) -> &[Matrix] {
        &self.gram
    }

    pub fn is_zero_map(&self) -> bool {
        self.gram.iter().all(Matrix::is_zero)
    }

    /// The same map with ℤ promoted to ℚ; other rings unchanged.
    pub fn over_field(&self) -> SkewBilinearMap {
        if self.ring.is_field() {
            return self.clone();
        }
        self.convert_unchecked(&RingSpec::rationals()).expect("ℤ embeds in ℚ")
    }

    fn convert_unchecked(&self, target: &RingSpec) -> Result<SkewBilinearMap> {
        let gram = self.gram.iter().map(|g| g.convert(target)).collect::<Result<_>>()?;
        SkewBilinearMap::new(target, self.dim_l, gram)
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim_l {
            return Err(Error::DimensionMismatch { expected: self.dim_l, found: v.len() });
        }
        Ok(())
    }

    /// `φ(x, y)` as a coordinate vector in `V`: coordinate `t` is `xᵀ G_t y`.
    pub fn evaluate(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let r = &self.ring;
        Ok(self
            .gram
            .iter()
            .map(|g| {
                let mut acc = r.zero();
                for (i, xi) in x.iter().enumerate() {
                    if r.is_zero(xi) {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate() {
                        if !r.is_zero(yj) && !r.is_zero(g.get(i, j)) {
                            acc = r.add(&acc, &r.mul(&r.mul(xi, g.get(i, j)), yj));
                        }
                    }
                }
                acc
            })
            .collect())
    }

    pub(crate) fn square_vanishes(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.ring, &self.evaluate(v, v).expect("length checked by caller"))
    }

    /// `{l : φ(l, l') = 0 for all l'}`.
    pub fn kernel(&self) -> Subspace {
        let phi = self.over_field();
        let f = phi.ring.clone();
        let mut stacked = Matrix::zeros(&f, 0, self.dim_l);
        for g in &phi.gram {
            stacked = stacked.stack(&g.transpose()).expect("square blocks");
        }
        Subspace::from_matrix(&stacked.kernel_basis())
    }

    /// `W(H) = {v : φ(v, h) = 0 for all h ∈ H}`.
    pub fn orthogonal(&self, h: &Subspace) -> Result<Subspace> {
        let phi = self.over_field();
        if h.ambient_dim() != self.dim_l {
            return Err(Error::DimensionMismatch { expected: self.dim_l, found: h.ambient_dim() });
        }
        let f = phi.ring.clone();
        let mut rows = Vec::with_capacity(h.dim() * self.dim_v());
        for b in h.basis_vectors() {
            for g in &phi.gram {
                rows.push(g.mul_vec(&b)?);
            }
        }
        let cond = Matrix::from_rows(&f, self.dim_l, rows)?;
        Ok(Subspace::from_matrix(&cond.kernel_basis()))
    }

    pub fn is_isotropic(&self, h: &Subspace) -> Result<bool> {
        let phi = self.over_field();
        if h.ambient_dim() != self.dim_l {
            return Err(Error::DimensionMismatch { expected: self.dim_l, found: h.ambient_dim() });
        }
        let b = h.basis_vectors();
        for i in 0..b.len() {
            for j in i..b.len() {
                if !is_zero_vec(&phi.ring, &phi.evaluate(&b[i], &b[j])?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Maximality of an isotropic `H`.
    ///
    /// Outside characteristic 2 every `v ∈ W(H)` satisfies `φ(v, v) = 0`, so
    /// `H` is maximal iff `W(H) = H`. In characteristic 2 the representatives
    /// of `W(H)/H` are searched for one with vanishing square.
    pub fn is_maximal_isotropic(&self, h: &Subspace) -> Result<bool> {
        if !self.is_isotropic(h)? {
            return Err(Error::NotIsotropic);
        }
        let w = self.orthogonal(h)?;
        if w.dim() == h.dim() {
            return Ok(true);
        }
        if self.ring.characteristic() != 2 {
            return Ok(false);
        }
        let reps = QuotientReps::new(&w, h);
        let extendable = reps.leading_one().any(|v| self.square_vanishes(&v));
        Ok(!extendable)
    }

    /// Rank of the span of all values `φ(e_i, e_j)`, `i ≤ j`, in `V`.
    pub fn image_rank(&self) -> usize {
        let phi = self.over_field();
        let n = self.dim_l;
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i..n {
                rows.push(phi.gram.iter().map(|g| g.get(i, j).clone()).collect());
            }
        }
        Matrix::from_rows(&phi.ring, self.dim_v(), rows).expect("rows of length m").rank()
    }

    /// Change of coefficients along ℤ → ℚ, ℤ → GF(p) (reduction) or
    /// GF(p) → GF(p^k).
    pub fn extend_scalars(&self, target: &RingSpec) -> Result<SkewBilinearMap> {
        let legal = match (self.ring.kind(), target.kind()) {
            (RingKind::Integers, RingKind::Rationals | RingKind::PrimeField { .. }) => true,
            (RingKind::PrimeField { p }, RingKind::ExtField { p: q, .. }) => p == q,
            _ => false,
        };
        if !legal {
            return Err(Error::IllegalExtension { from: self.ring.to_string(), to: target.to_string() });
        }
        self.convert_unchecked(target)
    }

    fn check_same_ring(&self, other: &SkewBilinearMap) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: other.ring.to_string() });
        }
        Ok(())
    }

    /// Component-wise sum `φ(x, y) = φ₁(x₁, y₁) + φ₂(x₂, y₂)` on `L₁ ⊕ L₂`
    /// with values in `V₁ ⊕ V₂`.
    pub fn direct_sum(&self, other: &SkewBilinearMap) -> Result<SkewBilinearMap> {
        self.check_same_ring(other)?;
        let n = self.dim_l + other.dim_l;
        let mut gram = Vec::with_capacity(self.dim_v() + other.dim_v());
        for g in &self.gram {
            gram.push(embed_block(g, n, 0));
        }
        for g in &other.gram {
            gram.push(embed_block(g, n, self.dim_l));
        }
        Ok(SkewBilinearMap { ring: self.ring.clone(), dim_l: n, gram })
    }

    /// The Künneth-type map on `L₁ ⊕ L₂` with values in `V₁ ⊕ V₂ ⊕ (L₁ ⊗ L₂)`:
    /// `φ(x, y) = φ₁(x₁, y₁) + φ₂(x₂, y₂) + (x₁ ⊗ y₂ − y₁ ⊗ x₂)`.
    pub fn product_map(&self, other: &SkewBilinearMap) -> Result<SkewBilinearMap> {
        let mut out = self.direct_sum(other)?;
        let r = &self.ring;
        let (n1, n2) = (self.dim_l, other.dim_l);
        let n = n1 + n2;
        let basis = |len: usize, i: usize| -> Vec<Scalar> {
            (0..len).map(|j| if i == j { r.one() } else { r.zero() }).collect()
        };
        // coordinate (a, b) of V₃ = L₁ ⊗ L₂ only sees the pair (e_a, f_b)
        let mut cross: Vec<Matrix> = (0..n1 * n2).map(|_| Matrix::zeros(r, n, n)).collect();
        for a in 0..n1 {
            for b in 0..n2 {
                let t = tensor_pair(r, &basis(n1, a), &basis(n2, b));
                for (c, v) in t.iter().enumerate() {
                    if !r.is_zero(v) {
                        cross[c].set(a, n1 + b, v.clone());
                        cross[c].set(n1 + b, a, r.neg(v));
                    }
                }
            }
        }
        out.gram.extend(cross);
        Ok(out)
    }

    /// Restriction to the coordinate subspace spanned by `coords` (in order).
    pub fn restrict(&self, coords: &[usize]) -> SkewBilinearMap {
        let k = coords.len();
        let gram = self
            .gram
            .iter()
            .map(|g| {
                let mut m = Matrix::zeros(&self.ring, k, k);
                for (a, &i) in coords.iter().enumerate() {
                    for (b, &j) in coords.iter().enumerate() {
                        m.set(a, b, g.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        SkewBilinearMap { ring: self.ring.clone(), dim_l: k, gram }
    }

    /// Sums all codomain coordinates into one (used for the identified
    /// fundamental classes of a 2-dimensional connected sum).
    pub(crate) fn collapse_codomain(&self) -> SkewBilinearMap {
        let r = &self.ring;
        let n = self.dim_l;
        let mut g = Matrix::zeros(r, n, n);
        for m in &self.gram {
            for i in 0..n {
                for j in 0..n {
                    let v = r.add(g.get(i, j), m.get(i, j));
                    g.set(i, j, v);
                }
            }
        }
        SkewBilinearMap { ring: r.clone(), dim_l: n, gram: vec![g] }
    }
}

fn embed_block(g: &Matrix, n: usize, offset: usize) -> Matrix {
    let mut m = Matrix::zeros(g.ring(), n, n);
    for i in 0..g.nrows() {
        for j in 0..g.ncols() {
            m.set(offset + i, offset + j, g.get(i, j).clone());
        }
    }
    m
}

/// Representatives of `W/H` for `H ⊆ W`: combinations of an RREF basis of a
/// complement that vanishes on the pivot columns of `H`. Each coset has
/// exactly one such representative.
pub(crate) struct QuotientReps {
    pub ring: RingSpec,
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl QuotientReps {
    pub fn new(w: &Subspace, h: &Subspace) -> Self {
        let ring = w.ring().clone();
        let reduced: Vec<Vec<Scalar>> = w.basis_vectors().iter().map(|v| h.reduce(v).expect("same ambient")).collect();
        let m = Matrix::from_rows(&ring, w.ambient_dim(), reduced).expect("rows");
        let c = Subspace::from_matrix(&m);
        QuotientReps { ring, rows: c.basis_vectors(), pivots: c.pivots().to_vec() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Nonzero representatives with leading coefficient 1 whose first nonzero
    /// coefficient sits at row `i0`; the remaining coefficients are free.
    pub fn with_leading_row(&self, i0: usize) -> impl Iterator<Item = Vec<Scalar>> + '_ {
        let q = self.ring.order().expect("finite field") as u32;
        let free = self.rows.len() - i0 - 1;
        let count = (q as u64).pow(free as u32);
        (0..count).map(move |mut code| {
            let mut v = self.rows[i0].clone();
            for row in &self.rows[i0 + 1..] {
                let c = (code % q as u64) as u32;
                code /= q as u64;
                if c != 0 {
                    let a = self.ring.element(c);
                    for (vj, rj) in v.iter_mut().zip(row) {
                        *vj = self.ring.add(vj, &self.ring.mul(&a, rj));
                    }
                }
            }
            v
        })
    }

    /// One representative per line of `W/H`.
    pub fn leading_one(&self) -> impl Iterator<Item = Vec<Scalar>> + '_ {
        (0..self.rows.len()).flat_map(move |i0| self.with_leading_row(i0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RingSpec {
        RingSpec::rationals()
    }
    fn gf(p: u32) -> RingSpec {
        RingSpec::prime_field(p).unwrap()
    }
    fn vecs(r: &RingSpec, rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|row| row.iter().map(|&a| r.from_i64(a)).collect()).collect()
    }
    fn span(r: &RingSpec, n: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::span(r, n, vecs(r, rows)).unwrap()
    }

    /// `φ(x, y) = [[x, y], e₃]` on ℚ³.
    fn cross_product(r: &RingSpec) -> SkewBilinearMap {
        // [[x,y],e3] = (x·e3) y − (y·e3) x
        let mut g1 = vec![vec![0; 3]; 3];
        g1[2][0] = 1;
        g1[0][2] = -1;
        let mut g2 = vec![vec![0; 3]; 3];
        g2[2][1] = 1;
        g2[1][2] = -1;
        SkewBilinearMap::from_i64(r, 3, &[g1, g2, vec![vec![0; 3]; 3]]).unwrap()
    }

    #[test]
    fn cross_product_matches_vector_formula() {
        let r = q();
        let phi = cross_product(&r);
        let x = vecs(&r, &[&[1, 2, 3]]).remove(0);
        let y = vecs(&r, &[&[-2, 0, 5]]).remove(0);
        // (x·e3) y − (y·e3) x = 3y − 5x
        let expect = vecs(&r, &[&[-11, -10, 0]]).remove(0);
        assert_eq!(phi.evaluate(&x, &y).unwrap(), expect);
    }

    #[test]
    fn evaluate_examples() {
        let r = q();
        let s = SkewBilinearMap::symplectic(&r, 1);
        let e = vecs(&r, &[&[1, 0], &[0, 1]]);
        assert_eq!(s.evaluate(&e[0], &e[1]).unwrap(), vec![r.one()]);
        assert_eq!(s.evaluate(&e[1], &e[1]).unwrap(), vec![r.zero()]);
        let f2 = gf(2);
        let rp3 = SkewBilinearMap::from_i64(&f2, 1, &[vec![vec![1]]]).unwrap();
        assert_eq!(rp3.evaluate(&[f2.one()], &[f2.one()]).unwrap(), vec![f2.one()]);
        assert!(matches!(s.evaluate(&e[0], &[r.one()]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn validation_errors() {
        let r = q();
        assert_eq!(
            SkewBilinearMap::from_i64(&r, 2, &[vec![vec![1, 0], vec![0, 0]]]),
            Err(Error::NonzeroDiagonal { t: 0, i: 0 })
        );
        assert_eq!(
            SkewBilinearMap::from_i64(&r, 2, &[vec![vec![0, 1], vec![1, 0]]]),
            Err(Error::Antisymmetry { t: 0, i: 0, j: 1 })
        );
        // symmetric = antisymmetric in characteristic 2
        assert!(SkewBilinearMap::from_i64(&gf(2), 2, &[vec![vec![1, 1], vec![1, 0]]]).is_ok());
    }

    #[test]
    fn kernel_examples() {
        let r = q();
        assert_eq!(SkewBilinearMap::zero(&r, 3, 1).kernel(), Subspace::whole(&r, 3));
        assert_eq!(SkewBilinearMap::symplectic(&r, 2).kernel().dim(), 0);
        // 9×3 system solved by hand: only the zero vector pairs trivially with everything
        assert_eq!(cross_product(&r).kernel().dim(), 0);
    }

    #[test]
    fn isotropy_examples() {
        let r = q();
        let s = SkewBilinearMap::symplectic(&r, 1);
        assert!(!s.is_isotropic(&Subspace::whole(&r, 2)).unwrap());
        let f2 = gf(2);
        let rp3 = SkewBilinearMap::from_i64(&f2, 1, &[vec![vec![1]]]).unwrap();
        assert!(!rp3.is_isotropic(&Subspace::whole(&f2, 1)).unwrap());
        assert!(rp3.is_isotropic(&rp3.kernel()).unwrap());
    }

    #[test]
    fn maximality_examples() {
        let r = q();
        let s3 = SkewBilinearMap::symplectic(&r, 3);
        let lag = span(&r, 6, &[&[1, 0, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 1, 0]]);
        assert!(s3.is_maximal_isotropic(&lag).unwrap());
        let cp = cross_product(&r);
        assert!(cp.is_maximal_isotropic(&span(&r, 3, &[&[0, 0, 1]])).unwrap());
        assert!(cp.is_maximal_isotropic(&span(&r, 3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap());
        let z = SkewBilinearMap::zero(&r, 2, 1);
        assert!(!z.is_maximal_isotropic(&span(&r, 2, &[&[1, 0]])).unwrap());
        assert_eq!(s3.is_maximal_isotropic(&Subspace::whole(&r, 6)), Err(Error::NotIsotropic));
    }

    #[test]
    fn char2_maximality_uses_squares() {
        // φ = diag(1, 1) over GF(2): the line <(1,1)> is isotropic and W = everything
        let f2 = gf(2);
        let phi = SkewBilinearMap::from_i64(&f2, 2, &[vec![vec![1, 0], vec![0, 1]]]).unwrap();
        let l = span(&f2, 2, &[&[1, 1]]);
        assert!(phi.is_isotropic(&l).unwrap());
        assert!(phi.is_maximal_isotropic(&l).unwrap());
        assert!(!phi.is_maximal_isotropic(&Subspace::zero(&f2, 2)).unwrap());
    }

    #[test]
    fn direct_sum_and_product_shapes() {
        let r = q();
        let circle = SkewBilinearMap::zero(&r, 1, 0);
        let torus = circle.product_map(&circle).unwrap();
        assert_eq!(torus, SkewBilinearMap::symplectic(&r, 1));
        let point = SkewBilinearMap::zero(&r, 0, 0);
        let s = SkewBilinearMap::symplectic(&r, 2);
        assert_eq!(s.product_map(&point).unwrap(), s);
        assert_eq!(s.direct_sum(&point).unwrap(), s);
        let t1 = SkewBilinearMap::symplectic(&r, 1);
        assert_eq!(t1.direct_sum(&t1).unwrap().collapse_codomain(), s);
        let p = s.product_map(&circle).unwrap();
        assert_eq!((p.dim_l(), p.dim_v()), (5, 5));
        assert!(matches!(s.direct_sum(&SkewBilinearMap::zero(&gf(3), 1, 0)), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn scalar_changes() {
        let z = RingSpec::integers();
        let phi = SkewBilinearMap::from_i64(&z, 2, &[vec![vec![0, 2], vec![-2, 0]]]).unwrap();
        assert!(phi.extend_scalars(&gf(2)).unwrap().is_zero_map());
        assert!(!phi.extend_scalars(&gf(3)).unwrap().is_zero_map());
        assert!(phi.extend_scalars(&q()).is_ok());
        let f2map = phi.extend_scalars(&gf(2)).unwrap();
        assert!(f2map.extend_scalars(&RingSpec::gf(2, 2).unwrap()).is_ok());
        assert!(f2map.extend_scalars(&RingSpec::gf(3, 2).unwrap()).is_err());
        assert!(phi.extend_scalars(&q()).unwrap().extend_scalars(&gf(5)).is_err());
    }

    #[test]
    fn image_rank_counts_span() {
        let r = q();
        assert_eq!(cross_product(&r).image_rank(), 2);
        assert_eq!(SkewBilinearMap::zero(&r, 3, 2).image_rank(), 0);
    }
}
