//! Isotropy index `h(φ) = max H(φ)`: exact where possible, a certified
//! interval otherwise.

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::bounds::{bounds, Bounds};
use super::enumerate::{enumerate_maximal_isotropic, EnumerationLimits};
use super::map::{QuotientReps, SkewBilinearMap};
use super::random::random_scalar;
use super::rankset::RankSet;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::exactalg::{is_zero_vec, Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    SingleForm,
    Structural,
    BoundsGreedy,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::BruteForce => "bruteforce",
            Method::SingleForm => "single-form",
            Method::Structural => "structural",
            Method::BoundsGreedy => "bounds+greedy",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropyReport {
    pub h_lower: u64,
    pub h_upper: u64,
    pub rank_set: Option<RankSet>,
    /// One maximal isotropic witness per rank found.
    pub witnesses: Vec<Subspace>,
    pub method: Method,
}

impl IsotropyReport {
    pub fn is_exact(&self) -> bool {
        self.h_lower == self.h_upper
    }

    /// `h` when the interval is a point.
    pub fn h(&self) -> Option<u64> {
        self.is_exact().then_some(self.h_lower)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsotropyOptions {
    pub limits: EnumerationLimits,
    pub restarts: u32,
    pub seed: u64,
}

impl Default for IsotropyOptions {
    fn default() -> Self {
        IsotropyOptions { limits: EnumerationLimits::default(), restarts: 32, seed: 0 }
    }
}

/// The Gram matrix of a single form equivalent to `φ` when the Gram tensor
/// spans at most a line (outside characteristic 2 only).
fn single_form(phi: &SkewBilinearMap) -> Option<Matrix> {
    let phi = phi.over_field();
    let ring = phi.ring();
    if ring.characteristic() == 2 {
        return None;
    }
    let n = phi.dim_l();
    let flat: Vec<Vec<Scalar>> =
        phi.gram().iter().map(|g| (0..n).flat_map(|i| g.row(i).to_vec()).collect()).collect();
    match Matrix::from_rows(ring, n * n, flat).expect("n² columns").rank() {
        0 => Some(Matrix::zeros(ring, n, n)),
        1 => phi.gram().iter().find(|g| !g.is_zero()).cloned(),
        _ => None,
    }
}

fn single_form_index(form: &Matrix) -> u64 {
    (form.nrows() - form.rank() / 2) as u64
}

fn witnesses_by_rank(maximal: Vec<Subspace>) -> (RankSet, Vec<Subspace>) {
    let mut by_rank: BTreeMap<u64, Subspace> = BTreeMap::new();
    for h in maximal {
        by_rank.entry(h.dim() as u64).or_insert(h);
    }
    let set = RankSet::new(by_rank.keys().copied()).expect("maximal isotropic ranks");
    (set, by_rank.into_values().collect())
}

/// `H(φ)` together with one witness per rank.
///
/// Finite fields enumerate. Over ℤ and ℚ only maps whose Gram tensor spans
/// at most a line are handled; anything else needs [`isotropy_index`].
pub fn rank_set_with_witnesses(phi: &SkewBilinearMap, limits: EnumerationLimits) -> Result<(RankSet, Vec<Subspace>)> {
    if phi.ring().is_finite() {
        let (set, w) = witnesses_by_rank(enumerate_maximal_isotropic(phi, limits)?);
        return Ok((set, w));
    }
    match single_form(phi) {
        Some(form) => {
            let h = single_form_index(&form);
            Ok((RankSet::singleton(h), vec![greedy_maximal(phi, 0)]))
        }
        None => Err(Error::RankSetUnavailable(format!(
            "codomain rank {} over {}: no exact rank-set algorithm, use isotropy_index for an interval",
            phi.dim_v(),
            phi.ring()
        ))),
    }
}

pub fn rank_set(phi: &SkewBilinearMap, limits: EnumerationLimits) -> Result<RankSet> {
    if phi.ring().is_finite() {
        let max = enumerate_maximal_isotropic(phi, limits)?;
        return RankSet::new(max.iter().map(|h| h.dim() as u64));
    }
    rank_set_with_witnesses(phi, limits).map(|(s, _)| s)
}

/// Bounds computed from the map alone: `b1 = n`, `b2 = m`, `k = dim ker φ`,
/// surjective when the values of `φ` span `V`.
pub fn map_bounds(phi: &SkewBilinearMap) -> Bounds {
    let n = phi.dim_l() as u64;
    let k = phi.kernel().dim() as u64;
    let surjective = phi.image_rank() == phi.dim_v();
    bounds(n, phi.dim_v() as u64, k, phi.ring().characteristic() == 2, surjective).expect("k ≤ n")
}

/// Never fails: on an exhausted budget the finite-field path falls back to the
/// single-form formula or to the greedy/bounds interval.
pub fn isotropy_index(phi: &SkewBilinearMap, opts: &IsotropyOptions) -> IsotropyReport {
    if phi.ring().is_finite() {
        if let Ok(max) = enumerate_maximal_isotropic(phi, opts.limits) {
            let (set, witnesses) = witnesses_by_rank(max);
            let h = set.max();
            return IsotropyReport { h_lower: h, h_upper: h, rank_set: Some(set), witnesses, method: Method::BruteForce };
        }
    }
    if let Some(form) = single_form(phi) {
        let h = single_form_index(&form);
        return IsotropyReport {
            h_lower: h,
            h_upper: h,
            rank_set: Some(RankSet::singleton(h)),
            witnesses: vec![greedy_maximal(phi, opts.seed)],
            method: Method::SingleForm,
        };
    }
    greedy_interval(phi, opts)
}

fn greedy_interval(phi: &SkewBilinearMap, opts: &IsotropyOptions) -> IsotropyReport {
    let mut found: BTreeMap<u64, Subspace> = BTreeMap::new();
    for r in 0..opts.restarts.max(1) {
        let h = greedy_maximal(phi, opts.seed.wrapping_add(r as u64));
        found.entry(h.dim() as u64).or_insert(h);
    }
    let best = *found.keys().last().expect("at least one restart");
    let b = map_bounds(phi);
    let h_upper = b.hi.min(phi.dim_l() as u64).max(best);
    // every maximal isotropic submodule has rank in [lo, hi] outside
    // characteristic 2, so a collapsed interval pins the whole rank set
    let rank_set = (phi.ring().characteristic() != 2 && b.lo == b.hi && best == b.hi).then(|| RankSet::singleton(best));
    IsotropyReport {
        h_lower: best,
        h_upper,
        rank_set,
        witnesses: found.into_values().collect(),
        method: Method::BoundsGreedy,
    }
}

/// A maximal isotropic subspace grown from `0` by random admissible
/// extensions. Coefficients of the extension vector (with respect to a basis
/// of a complement of `H` in `W(H)`) are uniform field elements, or integers
/// in `[-3, 3]` over ℚ.
pub fn greedy_maximal(phi: &SkewBilinearMap, seed: u64) -> Subspace {
    const TRIES: usize = 32;
    let phi = phi.over_field();
    let ring = phi.ring().clone();
    let char2 = ring.characteristic() == 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = Subspace::zero(&ring, phi.dim_l());
    loop {
        let w = phi.orthogonal(&h).expect("ambient dimension");
        let reps = QuotientReps::new(&w, &h);
        if reps.dim() == 0 {
            return h;
        }
        let sample = |rng: &mut ChaCha8Rng| -> Vec<Scalar> {
            let mut v = vec![ring.zero(); phi.dim_l()];
            for row in &reps.rows {
                let c = random_scalar(&ring, rng);
                for (vj, rj) in v.iter_mut().zip(row) {
                    *vj = ring.add(vj, &ring.mul(&c, rj));
                }
            }
            v
        };
        let admissible = |v: &Vec<Scalar>| !is_zero_vec(&ring, v) && (!char2 || phi.square_vanishes(v));
        let mut pick = (0..TRIES).map(|_| sample(&mut rng)).find(admissible);
        if pick.is_none() && (char2 || ring.is_finite()) {
            pick = reps.leading_one().find(|v| admissible(v));
        }
        match pick {
            Some(v) => {
                let mut rows = h.basis_vectors();
                rows.push(v);
                h = Subspace::span(&ring, phi.dim_l(), rows).expect("rows of length n");
            }
            None => return h,
        }
    }
}
