//! Brute-force enumeration of isotropic subspaces over a finite field.
//!
//! Every subspace is identified with its RREF basis. The parent of a subspace
//! with RREF rows `r_1, …, r_k` is the span of `r_1, …, r_{k-1}`; the parent is
//! isotropic whenever the child is, so a depth-first walk that only appends
//! rows with a new, largest pivot reaches each isotropic subspace exactly once.
//! At each node the candidates are the representatives of `W(H)/H` (with
//! `W(H)` the φ-orthogonal of `H`) whose square vanishes; a node without any
//! such representative is maximal.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::map::{QuotientReps, SkewBilinearMap};
use super::subspace::Subspace;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_DIM: usize = 10;
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Guards for the brute-force walk. `budget` bounds both `q^n` and the
/// number of candidate extension vectors examined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_dim: usize,
    pub budget: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_dim: DEFAULT_MAX_DIM, budget: DEFAULT_BUDGET }
    }
}

impl EnumerationLimits {
    pub fn with_budget(budget: u64) -> Self {
        EnumerationLimits { budget, ..Self::default() }
    }
}

struct Walker<'a> {
    phi: &'a SkewBilinearMap,
    budget: u64,
    spent: AtomicU64,
}

struct Visited {
    subspace: Subspace,
    maximal: bool,
}

impl Walker<'_> {
    fn charge(&self) -> Result<()> {
        if self.spent.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget, required: self.budget + 1 });
        }
        Ok(())
    }

    fn visit(&self, h: Subspace) -> Result<Vec<Visited>> {
        let phi = self.phi;
        let char2 = phi.ring().characteristic() == 2;
        let w = phi.orthogonal(&h)?;
        let reps = QuotientReps::new(&w, &h);
        let h_rows = h.basis_vectors();
        let last_pivot = h.pivots().last().copied();
        let canonical = |i0: usize| {
            let p = reps.pivots[i0];
            last_pivot.is_none_or(|l| p > l) && h_rows.iter().all(|r| phi.ring().is_zero(&r[p]))
        };

        // in char 2 maximality is settled by the search below
        let mut maximal = char2 || reps.dim() == 0;
        let mut children = Vec::new();
        for i0 in 0..reps.dim() {
            let canon = canonical(i0);
            // outside char 2 every representative is admissible, so only
            // canonical rows need walking
            if !canon && (!char2 || !maximal) {
                continue;
            }
            for v in reps.with_leading_row(i0) {
                self.charge()?;
                if char2 && !phi.square_vanishes(&v) {
                    continue;
                }
                maximal = false;
                if canon {
                    let p = reps.pivots[i0];
                    let mut rows = h_rows.clone();
                    rows.push(v);
                    let mut pivots = h.pivots().to_vec();
                    pivots.push(p);
                    children.push(Subspace::from_rref_rows(h.ring(), h.ambient_dim(), rows, pivots));
                }
            }
        }

        let below: Vec<Vec<Visited>> =
            children.into_par_iter().map(|c| self.visit(c)).collect::<Result<_>>()?;
        let mut out = vec![Visited { subspace: h, maximal }];
        out.extend(below.into_iter().flatten());
        Ok(out)
    }
}

fn walk(phi: &SkewBilinearMap, limits: EnumerationLimits) -> Result<Vec<Visited>> {
    let ring = phi.ring();
    let q = ring.order().ok_or_else(|| Error::InfiniteRing(ring.to_string()))?;
    let n = phi.dim_l();
    if n > limits.max_dim {
        return Err(Error::DimensionLimit { dim: n, max: limits.max_dim });
    }
    let space = q.checked_pow(n as u32).unwrap_or(u64::MAX);
    if space > limits.budget {
        return Err(Error::BudgetExceeded { budget: limits.budget, required: space });
    }
    let walker = Walker { phi, budget: limits.budget, spent: AtomicU64::new(0) };
    walker.visit(Subspace::zero(ring, n))
}

/// All isotropic subspaces, sorted.
pub fn enumerate_isotropic(phi: &SkewBilinearMap, limits: EnumerationLimits) -> Result<Vec<Subspace>> {
    let mut all: Vec<Subspace> = walk(phi, limits)?.into_iter().map(|v| v.subspace).collect();
    all.sort();
    Ok(all)
}

/// All maximal isotropic subspaces, each in canonical RREF, sorted.
pub fn enumerate_maximal_isotropic(phi: &SkewBilinearMap, limits: EnumerationLimits) -> Result<Vec<Subspace>> {
    let mut max: Vec<Subspace> =
        walk(phi, limits)?.into_iter().filter(|v| v.maximal).map(|v| v.subspace).collect();
    max.sort();
    Ok(max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::RingSpec;

    fn gf(p: u32) -> RingSpec {
        RingSpec::prime_field(p).unwrap()
    }

    #[test]
    fn symplectic_plane_gf2() {
        let f = gf(2);
        let max = enumerate_maximal_isotropic(&SkewBilinearMap::symplectic(&f, 1), Default::default()).unwrap();
        assert_eq!(max.len(), 3);
        assert!(max.iter().all(|h| h.dim() == 1));
    }

    #[test]
    fn zero_map_has_single_maximal() {
        let f = gf(3);
        let max = enumerate_maximal_isotropic(&SkewBilinearMap::zero(&f, 2, 1), Default::default()).unwrap();
        assert_eq!(max, vec![Subspace::whole(&f, 2)]);
    }

    #[test]
    fn every_subspace_visited_once() {
        // zero map: every subspace of GF(3)^3 is isotropic; 1 + 13 + 13 + 1 of them
        let f = gf(3);
        let all = enumerate_isotropic(&SkewBilinearMap::zero(&f, 3, 0), Default::default()).unwrap();
        assert_eq!(all.len(), 28);
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 28);
    }

    #[test]
    fn guards() {
        let q = RingSpec::rationals();
        assert!(matches!(
            enumerate_maximal_isotropic(&SkewBilinearMap::zero(&q, 1, 0), Default::default()),
            Err(Error::InfiniteRing(_))
        ));
        let f = gf(3);
        let big = SkewBilinearMap::zero(&f, 11, 0);
        assert!(matches!(enumerate_isotropic(&big, Default::default()), Err(Error::DimensionLimit { .. })));
        let s = SkewBilinearMap::symplectic(&f, 2);
        assert_eq!(
            enumerate_isotropic(&s, EnumerationLimits::with_budget(10)),
            Err(Error::BudgetExceeded { budget: 10, required: 81 })
        );
        assert!(matches!(
            enumerate_isotropic(&SkewBilinearMap::zero(&f, 4, 0), EnumerationLimits::with_budget(100)),
            Err(Error::BudgetExceeded { budget: 100, .. })
        ));
    }
}
