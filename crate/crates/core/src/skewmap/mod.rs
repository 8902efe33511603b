//! Skew-symmetric bilinear maps and their isotropic submodules.

mod bounds;
mod enumerate;
mod index;
mod map;
pub mod random;
mod rankset;
mod subspace;

pub use bounds::{bounds, Bounds};
pub use enumerate::{enumerate_isotropic, enumerate_maximal_isotropic, EnumerationLimits, DEFAULT_BUDGET, DEFAULT_MAX_DIM};
pub use index::{
    greedy_maximal, isotropy_index, map_bounds, rank_set, rank_set_with_witnesses, IsotropyOptions, IsotropyReport,
    Method,
};
pub use map::SkewBilinearMap;
pub use rankset::{rank_set_product_law, rank_set_sum_law, RankSet};
pub use subspace::Subspace;
