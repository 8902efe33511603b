//! The fixture corpus used by self-tests: atoms and their pairwise
//! connected sums and products, plus named reference manifolds.

use super::expr::{Atom, ManifoldExpr};
use super::parse::parse_expr;
use crate::skewmap::RankSet;

pub fn corpus_atoms() -> Vec<ManifoldExpr> {
    let mut v: Vec<ManifoldExpr> = [1, 2, 3].map(ManifoldExpr::sphere).into();
    v.extend([1, 2, 3].map(ManifoldExpr::surface));
    v.extend([2, 3, 4].map(ManifoldExpr::torus));
    v.extend([Atom::RP3, Atom::Heisenberg, Atom::KodairaThurston].map(ManifoldExpr::Atom));
    v
}

/// Atoms, then every unordered pair as a product and, when the dimensions
/// agree and are at least 2, as a connected sum.
pub fn corpus() -> Vec<ManifoldExpr> {
    let atoms = corpus_atoms();
    let mut out = atoms.clone();
    for (i, a) in atoms.iter().enumerate() {
        for b in &atoms[i..] {
            if a.dim() == b.dim() && a.dim() >= 2 {
                out.push(ManifoldExpr::ConnSum(vec![a.clone(), b.clone()]));
            }
            out.push(ManifoldExpr::Product(vec![a.clone(), b.clone()]));
        }
    }
    out
}

/// A reference manifold with its known rank set (over ℚ, or over the named
/// ring) and co-rank.
pub struct Reference {
    pub expr: &'static str,
    pub ring: &'static str,
    pub rank_set: &'static [u64],
    pub b1: u64,
    pub corank: Option<u64>,
}

pub fn references() -> Vec<Reference> {
    let r = |expr, ring, rank_set, b1, corank| Reference { expr, ring, rank_set, b1, corank };
    vec![
        r("Sg(0)", "Q", &[0], 0, Some(0)),
        r("Sg(1)", "Q", &[1], 2, Some(1)),
        r("Sg(2)", "Q", &[2], 4, Some(2)),
        r("Sg(3)", "Q", &[3], 6, Some(3)),
        r("Sg(4)", "Q", &[4], 8, Some(4)),
        r("T(1)", "Q", &[1], 1, Some(1)),
        r("T(2)", "Q", &[1], 2, Some(1)),
        r("T(3)", "Q", &[1], 3, Some(1)),
        r("T(4)", "Q", &[1], 4, Some(1)),
        r("T(5)", "Q", &[1], 5, Some(1)),
        r("Sg(2) x S(1)", "Z", &[1, 2], 5, None),
        r("Sg(2) x Sg(3)", "Q", &[1, 2, 3], 10, None),
        r("(Sg(2) x S(1)) # (Sg(2) x S(1))", "Z", &[2, 3, 4], 10, None),
        r("(Sg(2) x Sg(3)) # (Sg(2) x Sg(3))", "Q", &[2, 3, 4, 5, 6], 20, None),
        r("RP3", "GF(2)", &[0], 1, None),
        r("Heis", "Z", &[2], 2, Some(1)),
        r("KT", "Z", &[1, 2], 3, Some(1)),
    ]
}

impl Reference {
    pub fn parsed(&self) -> ManifoldExpr {
        parse_expr(self.expr).expect("reference expressions parse")
    }

    pub fn expected(&self) -> RankSet {
        RankSet::new(self.rank_set.iter().copied()).expect("admissible")
    }
}
