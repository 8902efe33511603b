//! Manifolds with prescribed invariants.

use super::expr::{Atom, ManifoldExpr};
use crate::error::{Error, Result};
use crate::skewmap::RankSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub expr: ManifoldExpr,
    /// The pair is only attained with coefficients of characteristic 2.
    pub char2_only: bool,
}

fn conn_sum_or_single(mut parts: Vec<ManifoldExpr>) -> ManifoldExpr {
    if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        ManifoldExpr::conn_sum(parts).expect("summands share a dimension")
    }
}

/// A manifold `M` with `h(M; R) = h` and `b₁(M; R) = b`:
/// `♯ᵢ (T^{mᵢ} × S^{n−mᵢ})` with a balanced partition `Σ mᵢ = b` and
/// `n = 2 + ⌈b/h⌉`. `(0, 0)` gives `S³`; `(0, 1)` gives ℝP³, which works only
/// in characteristic 2.
pub fn realize(h: u64, b: u64) -> Result<Realization> {
    match (h, b) {
        (0, 0) => return Ok(Realization { expr: ManifoldExpr::sphere(3), char2_only: false }),
        (0, 1) => return Ok(Realization { expr: Atom::RP3.into(), char2_only: true }),
        (0, _) => return Err(inadmissible(h, b, "h = 0 needs b = 0, or b = 1 in characteristic 2")),
        _ if h > b => return Err(inadmissible(h, b, "h > b")),
        _ => {}
    }
    let top = b.div_ceil(h);
    let n = 2 + top;
    let big = (b % h) as usize;
    let parts = (0..h as usize)
        .map(|i| {
            let m = if big == 0 || i < big { top } else { b / h };
            ManifoldExpr::Product(vec![ManifoldExpr::torus(m as u32), ManifoldExpr::sphere((n - m) as u32)])
        })
        .collect();
    Ok(Realization { expr: conn_sum_or_single(parts), char2_only: false })
}

/// A 3-manifold with `h(M; GF(2)) = h` and `b₁(M; GF(2)) = b`:
/// `h` copies of `S¹ × S²` and `b − h` copies of ℝP³.
pub fn realize_dim3_mod2(h: u64, b: u64) -> Result<ManifoldExpr> {
    if h > b {
        return Err(inadmissible(h, b, "h > b"));
    }
    if b == 0 {
        return Ok(ManifoldExpr::sphere(3));
    }
    let s1s2 = ManifoldExpr::Product(vec![ManifoldExpr::sphere(1), ManifoldExpr::sphere(2)]);
    let parts = std::iter::repeat_n(s1s2, h as usize)
        .chain(std::iter::repeat_n(Atom::RP3.into(), (b - h) as usize))
        .collect();
    Ok(conn_sum_or_single(parts))
}

/// A manifold whose rank set is exactly `s`. With `m = min s` and
/// `s = {s₁, …, s_N}`, `N ≥ 2`:
/// `(Sg(s₁−m+1) x … x Sg(s_N−m+1)) # (Sg(m−1) x S(2N−2))`.
pub fn realize_rank_set(s: &RankSet) -> ManifoldExpr {
    let v = s.values();
    match v {
        [0] => return ManifoldExpr::sphere(3),
        [g] => return ManifoldExpr::surface(*g as u32),
        _ => {}
    }
    let m = s.min();
    let n = v.len() as u32;
    let left = ManifoldExpr::Product(v.iter().map(|&si| ManifoldExpr::surface((si - m + 1) as u32)).collect());
    let right = ManifoldExpr::Product(vec![ManifoldExpr::surface((m - 1) as u32), ManifoldExpr::sphere(2 * n - 2)]);
    ManifoldExpr::conn_sum(vec![left, right]).expect("both summands have dimension 2N")
}

fn inadmissible(h: u64, b: u64, reason: &str) -> Error {
    Error::Inadmissible { h, b, reason: reason.into() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::RingSpec;
    use crate::manifolds::{betti, corank, eval_structural, parse_expr};

    #[test]
    fn realize_examples() {
        let r = realize(2, 5).unwrap();
        assert_eq!(r.expr, parse_expr("T(3) x S(2) # T(2) x S(3)").unwrap());
        assert_eq!(realize(0, 0).unwrap().expr.to_string(), "S(3)");
        assert_eq!(realize(3, 3).unwrap().expr.to_string(), "T(1) x S(2) # T(1) x S(2) # T(1) x S(2)");
        assert!(realize(0, 1).unwrap().char2_only);
        assert!(matches!(realize(3, 2), Err(Error::Inadmissible { .. })));
        assert!(matches!(realize(0, 2), Err(Error::Inadmissible { .. })));
    }

    #[test]
    fn realize_round_trip_small() {
        let q = RingSpec::rationals();
        for b in 1..5 {
            for h in 1..=b {
                let e = realize(h, b).unwrap().expr;
                let r = eval_structural(&e, &q).unwrap();
                assert_eq!((r.h, r.b1), (h, b));
                assert_eq!(betti(&e, &q).unwrap()[1], b);
                assert_eq!(corank(&e), h);
            }
        }
    }

    #[test]
    fn dim3_mod2_examples() {
        let f2 = RingSpec::prime_field(2).unwrap();
        for (h, b, text) in [(2, 3, "S(1) x S(2) # S(1) x S(2) # RP3"), (0, 2, "RP3 # RP3"), (1, 1, "S(1) x S(2)")] {
            let e = realize_dim3_mod2(h, b).unwrap();
            assert_eq!(e.to_string(), text);
            let r = eval_structural(&e, &f2).unwrap();
            assert_eq!((r.h, r.b1), (h, b));
        }
    }

    #[test]
    fn rank_set_constructor() {
        let q = RingSpec::rationals();
        for v in [vec![1, 2], vec![2, 4, 5], vec![3], vec![0], vec![1, 2, 3, 4, 5]] {
            let s = RankSet::new(v).unwrap();
            assert_eq!(eval_structural(&realize_rank_set(&s), &q).unwrap().rank_set, s);
        }
    }
}
