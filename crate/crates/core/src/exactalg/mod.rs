//! Exact scalar and matrix arithmetic over ℤ, ℚ, GF(p) and small GF(p^k).

mod field;
mod matrix;
mod ring;

pub use field::{default_modulus, is_irreducible, is_prime};
pub use matrix::{add_vec, dot, is_zero_vec, rank_one_match, scale, tensor_pair, Matrix, Rref};
pub use ring::{RingKind, RingSpec, Scalar};
