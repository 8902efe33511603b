//! Cohomology models: Betti vectors and the cup product on `H¹` as an
//! explicit skew map.

use super::expr::{Atom, ManifoldExpr};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, RingSpec};
use crate::skewmap::SkewBilinearMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyModel {
    /// `b_0, …, b_dim` over the chosen coefficients.
    pub betti: Vec<u64>,
    /// Cup product `H¹ × H¹ → H²`.
    pub phi: SkewBilinearMap,
    /// Names of the `H¹` basis vectors.
    pub labels: Vec<String>,
}

pub(crate) fn check_atom(atom: Atom, ring: &RingSpec) -> Result<()> {
    match atom {
        Atom::Heisenberg | Atom::KodairaThurston if ring.is_finite() => {
            Err(Error::UnsupportedAtom { atom: atom.to_string(), ring: ring.to_string() })
        }
        _ => Ok(()),
    }
}

fn sphere_betti(n: usize) -> Vec<u64> {
    let mut b = vec![0; n + 1];
    b[0] = 1;
    b[n] += 1;
    b
}

pub fn atom_model(atom: Atom, ring: &RingSpec) -> Result<CohomologyModel> {
    check_atom(atom, ring)?;
    let model = match atom {
        Atom::Sphere(0) | Atom::Torus(0) => return Err(Error::InvalidArgument(format!("{atom}: dimension must be >= 1"))),
        Atom::Sphere(n) => {
            let b = sphere_betti(n as usize);
            let (b1, b2) = (b[1] as usize, b.get(2).copied().unwrap_or(0) as usize);
            let labels = if b1 == 1 { vec!["t".to_string()] } else { vec![] };
            CohomologyModel { phi: SkewBilinearMap::zero(ring, b1, b2), betti: b, labels }
        }
        Atom::Surface(0) => return atom_model(Atom::Sphere(2), ring),
        Atom::Surface(g) => CohomologyModel {
            betti: vec![1, 2 * g as u64, 1],
            phi: SkewBilinearMap::symplectic(ring, g as usize),
            labels: (1..=g).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect(),
        },
        Atom::RP3 if ring.characteristic() == 2 => CohomologyModel {
            betti: vec![1, 1, 1, 1],
            phi: SkewBilinearMap::new(ring, 1, vec![Matrix::identity(ring, 1)])?,
            labels: vec!["alpha".into()],
        },
        Atom::RP3 => CohomologyModel { betti: vec![1, 0, 0, 1], phi: SkewBilinearMap::zero(ring, 0, 0), labels: vec![] },
        Atom::Heisenberg => CohomologyModel {
            betti: vec![1, 2, 2, 1],
            phi: SkewBilinearMap::zero(ring, 2, 2),
            labels: vec!["x".into(), "y".into()],
        },
        Atom::Torus(_) | Atom::KodairaThurston => return model(&ManifoldExpr::Atom(atom).normalize(), ring),
    };
    Ok(model)
}

fn prefixed(i: usize, labels: &[String]) -> impl Iterator<Item = String> + '_ {
    labels.iter().map(move |l| format!("{}.{l}", i + 1))
}

fn model(expr: &ManifoldExpr, ring: &RingSpec) -> Result<CohomologyModel> {
    match expr {
        ManifoldExpr::Atom(a) => atom_model(*a, ring),
        ManifoldExpr::ConnSum(children) => {
            let d = expr.dim();
            let parts = children.iter().map(|c| model(c, ring)).collect::<Result<Vec<_>>>()?;
            let mut betti = vec![0; d + 1];
            betti[0] = 1;
            betti[d] = 1;
            let mut phi = SkewBilinearMap::zero(ring, 0, 0);
            let mut labels = Vec::new();
            for (i, p) in parts.iter().enumerate() {
                for (b, pb) in betti[1..d].iter_mut().zip(&p.betti[1..d]) {
                    *b += pb;
                }
                phi = phi.direct_sum(&p.phi)?;
                labels.extend(prefixed(i, &p.labels));
            }
            if d == 2 {
                // the summands' fundamental classes are identified
                phi = phi.collapse_codomain();
            }
            Ok(CohomologyModel { betti, phi, labels })
        }
        ManifoldExpr::Product(children) => {
            let mut acc = CohomologyModel { betti: vec![1], phi: SkewBilinearMap::zero(ring, 0, 0), labels: vec![] };
            for (i, c) in children.iter().enumerate() {
                let p = model(c, ring)?;
                let mut betti = vec![0; acc.betti.len() + p.betti.len() - 1];
                for (a, x) in acc.betti.iter().enumerate() {
                    for (b, y) in p.betti.iter().enumerate() {
                        betti[a + b] += x * y;
                    }
                }
                acc.phi = acc.phi.product_map(&p.phi)?;
                acc.labels.extend(prefixed(i, &p.labels));
                acc.betti = betti;
            }
            Ok(acc)
        }
    }
}

/// The model of `expr`. Over ℤ the map is kept over ℤ; see [`compile`].
pub fn cohomology_model(expr: &ManifoldExpr, ring: &RingSpec) -> Result<CohomologyModel> {
    expr.validate()?;
    model(expr, ring)
}

pub fn betti(expr: &ManifoldExpr, ring: &RingSpec) -> Result<Vec<u64>> {
    Ok(cohomology_model(expr, ring)?.betti)
}

/// The cup product on `H¹` as an explicit map over a field (ℤ compiles
/// over ℚ). The codomain is the Künneth / Mayer–Vietoris one, of rank `b₂`.
pub fn compile(expr: &ManifoldExpr, ring: &RingSpec) -> Result<SkewBilinearMap> {
    let field = ring.field_of_fractions();
    Ok(cohomology_model(expr, &field)?.phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifolds::parse_expr;

    fn q() -> RingSpec {
        RingSpec::rationals()
    }
    fn gf2() -> RingSpec {
        RingSpec::prime_field(2).unwrap()
    }

    #[test]
    fn atom_examples() {
        let s2 = atom_model(Atom::Surface(2), &q()).unwrap();
        assert_eq!(s2.betti, vec![1, 4, 1]);
        assert_eq!(s2.phi, SkewBilinearMap::symplectic(&q(), 2));
        let rp = atom_model(Atom::RP3, &gf2()).unwrap();
        assert_eq!(rp.betti, vec![1, 1, 1, 1]);
        assert_eq!(rp.phi, SkewBilinearMap::from_i64(&gf2(), 1, &[vec![vec![1]]]).unwrap());
        let rq = atom_model(Atom::RP3, &q()).unwrap();
        assert_eq!(rq.betti, vec![1, 0, 0, 1]);
        assert_eq!((rq.phi.dim_l(), rq.phi.dim_v()), (0, 0));
        assert!(matches!(atom_model(Atom::Heisenberg, &gf2()), Err(Error::UnsupportedAtom { .. })));
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti(&ManifoldExpr::torus(3), &q()).unwrap(), vec![1, 3, 3, 1]);
        assert_eq!(betti(&parse_expr("RP3 # T(3)").unwrap(), &gf2()).unwrap()[1], 4);
        assert_eq!(betti(&Atom::KodairaThurston.into(), &q()).unwrap(), vec![1, 3, 4, 3, 1]);
    }

    #[test]
    fn compile_examples() {
        let t2 = compile(&ManifoldExpr::torus(2), &q()).unwrap();
        assert_eq!(t2, SkewBilinearMap::symplectic(&q(), 1));
        let m = cohomology_model(&parse_expr("Sg(2) x S(1)").unwrap(), &RingSpec::integers()).unwrap();
        assert_eq!(m.phi.dim_l(), 5);
        assert_eq!(m.labels, vec!["1.a1", "1.b1", "1.a2", "1.b2", "2.t"]);
        assert_eq!(compile(&parse_expr("Sg(1) # Sg(1)").unwrap(), &q()).unwrap(), SkewBilinearMap::symplectic(&q(), 2));
    }

    #[test]
    fn codomain_rank_is_b2() {
        for s in ["Sg(2) x S(1)", "RP3 # RP3", "T(4)", "Sg(1) x Sg(2)", "(S(1) x S(2)) # RP3", "KT", "S(2) x S(2)"] {
            let e = parse_expr(s).unwrap();
            for r in [q(), gf2()] {
                let Ok(m) = cohomology_model(&e, &r) else { continue };
                assert_eq!(m.phi.dim_l() as u64, m.betti[1], "{s}");
                assert_eq!(m.phi.dim_v() as u64, m.betti[2], "{s}");
            }
        }
    }
}
