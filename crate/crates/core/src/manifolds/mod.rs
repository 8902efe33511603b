//! Model manifolds closed under connected sum and product, and their
//! isotropy invariants.

mod eval;
mod expr;
pub mod fixtures;
mod model;
mod parse;
mod realize;

pub use eval::{bounds_check, corank, eval_structural, BoundsReport, EvalResult};
pub use expr::{Atom, ManifoldExpr};
pub use model::{atom_model, betti, cohomology_model, compile, CohomologyModel};
pub use parse::parse_expr;
pub use realize::{realize, realize_dim3_mod2, realize_rank_set, Realization};
