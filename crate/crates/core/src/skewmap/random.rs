//! Random Gram tensors for property tests and self-checks.

use rand::Rng;

use super::map::SkewBilinearMap;
use crate::exactalg::{Matrix, RingSpec, Scalar};

/// Entries below the diagonal are uniform field elements (integers in
/// `[-3, 3]` over ℤ and ℚ). The diagonal is random in characteristic 2 and
/// zero otherwise.
pub fn random_map<R: Rng + ?Sized>(ring: &RingSpec, n: usize, m: usize, rng: &mut R) -> SkewBilinearMap {
    let char2 = ring.characteristic() == 2;
    let gram = (0..m)
        .map(|_| {
            let mut g = Matrix::zeros(ring, n, n);
            for i in 0..n {
                if char2 {
                    g.set(i, i, random_scalar(ring, rng));
                }
                for j in i + 1..n {
                    let a = random_scalar(ring, rng);
                    g.set(j, i, ring.neg(&a));
                    g.set(i, j, a);
                }
            }
            g
        })
        .collect();
    SkewBilinearMap::new(ring, n, gram).expect("antisymmetric by construction")
}

pub fn random_scalar<R: Rng + ?Sized>(ring: &RingSpec, rng: &mut R) -> Scalar {
    match ring.order() {
        Some(q) => ring.element(rng.random_range(0..q as u32)),
        None => ring.from_i64(rng.random_range(-3..=3)),
    }
}
