//! Structural evaluation by the connected-sum and product laws.

use super::expr::{Atom, ManifoldExpr};
use super::model::{check_atom, cohomology_model};
use crate::error::Result;
use crate::exactalg::RingSpec;
use crate::skewmap::{bounds, rank_set_product_law, rank_set_sum_law, Bounds, RankSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalResult {
    pub b1: u64,
    pub rank_set: RankSet,
    pub h: u64,
    pub corank: Option<u64>,
    /// One entry per product factor that hit the `h = 0` exception.
    pub exceptions_applied: Vec<String>,
}

struct Partial {
    b1: u64,
    set: RankSet,
    /// `φ(x, x) ≠ 0` for some `x`; only possible in characteristic 2.
    nonzero_square: bool,
}

fn atom_eval(atom: Atom, ring: &RingSpec) -> Result<Partial> {
    check_atom(atom, ring)?;
    let (b1, h, sq) = match atom {
        Atom::Sphere(1) => (1, 1, false),
        Atom::Sphere(_) => (0, 0, false),
        Atom::Surface(g) => (2 * g as u64, g as u64, false),
        Atom::RP3 if ring.characteristic() == 2 => (1, 0, true),
        Atom::RP3 => (0, 0, false),
        Atom::Heisenberg => (2, 2, false),
        Atom::Torus(_) | Atom::KodairaThurston => {
            return walk(&ManifoldExpr::Atom(atom).normalize(), ring, &mut Vec::new())
        }
    };
    Ok(Partial { b1, set: RankSet::singleton(h), nonzero_square: sq })
}

fn walk(expr: &ManifoldExpr, ring: &RingSpec, tags: &mut Vec<String>) -> Result<Partial> {
    match expr {
        ManifoldExpr::Atom(a) => atom_eval(*a, ring),
        ManifoldExpr::ConnSum(children) => {
            let mut acc: Option<Partial> = None;
            for c in children {
                let p = walk(c, ring, tags)?;
                acc = Some(match acc {
                    None => p,
                    Some(a) => Partial {
                        b1: a.b1 + p.b1,
                        set: rank_set_sum_law(&a.set, &p.set),
                        nonzero_square: a.nonzero_square || p.nonzero_square,
                    },
                });
            }
            Ok(acc.expect("non-empty connected sum"))
        }
        ManifoldExpr::Product(children) => {
            let mut acc: Option<(Partial, String)> = None;
            for c in children {
                let p = walk(c, ring, tags)?;
                acc = Some(match acc {
                    None => (p, c.to_string()),
                    Some((a, name)) => {
                        for (f, fname) in [(&a, &name), (&p, &c.to_string())] {
                            if f.set.max() == 0 {
                                tags.push(exception_tag(f, fname));
                            }
                        }
                        let set = rank_set_product_law(&a.set, &p.set, a.set.max(), p.set.max());
                        let joined = format!("{name} x {c}");
                        let sq = a.nonzero_square || p.nonzero_square;
                        (Partial { b1: a.b1 + p.b1, set, nonzero_square: sq }, joined)
                    }
                });
            }
            Ok(acc.expect("non-empty product").0)
        }
    }
}

fn exception_tag(f: &Partial, name: &str) -> String {
    let why = if f.b1 == 0 {
        "b1=0".to_string()
    } else if f.b1 == 1 && f.nonzero_square {
        "b1=1, char 2, nonzero cup square".to_string()
    } else {
        format!("h=0 with b1={}", f.b1)
    };
    format!("product factor {name}: {why}")
}

/// `H(M; R)` from the atom table and the two composition laws. Over ℤ the
/// answer is the one over ℚ.
pub fn eval_structural(expr: &ManifoldExpr, ring: &RingSpec) -> Result<EvalResult> {
    expr.validate()?;
    let field = ring.field_of_fractions();
    let mut tags = Vec::new();
    let p = walk(expr, &field, &mut tags)?;
    let h = p.set.max();
    Ok(EvalResult { b1: p.b1, h, rank_set: p.set, corank: Some(corank(expr)), exceptions_applied: tags })
}

/// Co-rank of the fundamental group from the atom table: additive under
/// connected sum, maximum under product.
pub fn corank(expr: &ManifoldExpr) -> u64 {
    match expr {
        ManifoldExpr::Atom(a) => match a {
            Atom::Sphere(1) => 1,
            Atom::Sphere(_) | Atom::RP3 => 0,
            Atom::Surface(g) => *g as u64,
            Atom::Torus(_) | Atom::Heisenberg | Atom::KodairaThurston => 1,
        },
        ManifoldExpr::ConnSum(c) => c.iter().map(corank).sum(),
        ManifoldExpr::Product(c) => c.iter().map(corank).max().unwrap_or(0),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub b1: u64,
    pub b2: u64,
    pub k: u64,
    pub surjective: bool,
    pub bounds: Bounds,
    pub h: u64,
    pub pass: bool,
}

/// The Betti-number bounds with the true `b₂`, `k = dim ker` of the compiled
/// cup product and surjectivity read off the compiled map, checked against
/// the structural `h`.
pub fn bounds_check(expr: &ManifoldExpr, ring: &RingSpec) -> Result<BoundsReport> {
    let field = ring.field_of_fractions();
    let model = cohomology_model(expr, &field)?;
    let b1 = model.betti[1];
    let b2 = model.betti.get(2).copied().unwrap_or(0);
    let k = model.phi.kernel().dim() as u64;
    let surjective = model.phi.image_rank() as u64 == b2;
    let b = bounds(b1, b2, k, field.characteristic() == 2, surjective)?;
    let h = eval_structural(expr, ring)?.h;
    Ok(BoundsReport { b1, b2, k, surjective, bounds: b, h, pass: b.admits(h) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifolds::parse_expr;

    fn ev(s: &str, r: &RingSpec) -> EvalResult {
        eval_structural(&parse_expr(s).unwrap(), r).unwrap()
    }
    fn rs(v: &[u64]) -> RankSet {
        RankSet::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn examples() {
        let z = RingSpec::integers();
        let q = RingSpec::rationals();
        let e = ev("Sg(2) x S(1)", &z);
        assert_eq!((e.rank_set.clone(), e.h), (rs(&[1, 2]), 2));
        assert_eq!(ev("Sg(2) x Sg(3)", &q).rank_set, rs(&[1, 2, 3]));
        assert_eq!(ev("(Sg(2) x S(1)) # (Sg(2) x S(1))", &z).rank_set, rs(&[2, 3, 4]));
        let rp = ev("RP3", &RingSpec::prime_field(2).unwrap());
        assert_eq!((rp.h, rp.b1), (0, 1));
    }

    #[test]
    fn corank_examples() {
        let q = RingSpec::rationals();
        let h = ev("Heis", &q);
        assert_eq!((h.corank, h.h, h.b1), (Some(1), 2, 2));
        let kt = ev("KT", &q);
        assert_eq!((kt.corank, kt.h, kt.b1), (Some(1), 2, 3));
        assert_eq!(ev("Heis x S(1)", &q), kt);
    }

    #[test]
    fn exceptions_are_tagged() {
        let q = RingSpec::rationals();
        let e = ev("S(2) x S(1)", &q);
        assert_eq!(e.rank_set, rs(&[1]));
        assert_eq!(e.exceptions_applied, vec!["product factor S(2): b1=0".to_string()]);
        let f2 = RingSpec::prime_field(2).unwrap();
        let e = ev("RP3 x S(1)", &f2);
        assert_eq!(e.exceptions_applied, vec!["product factor RP3: b1=1, char 2, nonzero cup square".to_string()]);
        assert!(ev("Sg(1) x S(1)", &q).exceptions_applied.is_empty());
    }

    #[test]
    fn bounds_examples() {
        let q = RingSpec::rationals();
        for g in 1..5 {
            let r = bounds_check(&ManifoldExpr::surface(g), &q).unwrap();
            assert_eq!((r.bounds.lo, r.bounds.hi, r.h), (g as u64, g as u64, g as u64));
        }
        for n in 2..6 {
            let r = bounds_check(&ManifoldExpr::torus(n), &q).unwrap();
            assert!(r.surjective);
            assert_eq!((r.bounds.hi, r.h), (1, 1));
        }
        let r = bounds_check(&Atom::RP3.into(), &RingSpec::prime_field(2).unwrap()).unwrap();
        assert!(r.bounds.exception && r.pass);
        assert_eq!(r.h, 0);
    }
}
