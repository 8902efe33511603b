use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// `S^n`, `n ≥ 1`.
    Sphere(u32),
    /// Closed orientable surface of genus `g`.
    Surface(u32),
    /// `T^n`, `n ≥ 1`.
    Torus(u32),
    RP3,
    /// The Heisenberg nilmanifold.
    Heisenberg,
    /// Kodaira–Thurston manifold, `H³ × S¹`.
    KodairaThurston,
}

impl Atom {
    pub fn dim(self) -> usize {
        match self {
            Atom::Sphere(n) | Atom::Torus(n) => n as usize,
            Atom::Surface(_) => 2,
            Atom::RP3 | Atom::Heisenberg => 3,
            Atom::KodairaThurston => 4,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Sphere(n) => write!(f, "S({n})"),
            Atom::Surface(g) => write!(f, "Sg({g})"),
            Atom::Torus(n) => write!(f, "T({n})"),
            Atom::RP3 => f.write_str("RP3"),
            Atom::Heisenberg => f.write_str("Heis"),
            Atom::KodairaThurston => f.write_str("KT"),
        }
    }
}

/// A manifold built from atoms by connected sum and direct product.
///
/// Both operations are n-ary. Connected sums need summands of one common
/// dimension `≥ 2`; the checked constructors enforce it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ManifoldExpr {
    Atom(Atom),
    ConnSum(Vec<ManifoldExpr>),
    Product(Vec<ManifoldExpr>),
}

impl From<Atom> for ManifoldExpr {
    fn from(a: Atom) -> Self {
        ManifoldExpr::Atom(a)
    }
}

impl ManifoldExpr {
    pub fn sphere(n: u32) -> Self {
        Atom::Sphere(n).into()
    }
    pub fn surface(g: u32) -> Self {
        Atom::Surface(g).into()
    }
    pub fn torus(n: u32) -> Self {
        Atom::Torus(n).into()
    }

    pub fn conn_sum(children: Vec<ManifoldExpr>) -> Result<Self> {
        let first = children.first().ok_or_else(|| Error::InvalidArgument("empty connected sum".into()))?;
        let d = first.dim();
        for c in &children[1..] {
            if c.dim() != d {
                return Err(Error::ConnSumDimension { left: d, right: c.dim() });
            }
        }
        if d < 2 {
            return Err(Error::ConnSumLowDimension(d));
        }
        Ok(ManifoldExpr::ConnSum(children))
    }

    pub fn product(children: Vec<ManifoldExpr>) -> Result<Self> {
        if children.is_empty() {
            return Err(Error::InvalidArgument("empty product".into()));
        }
        Ok(ManifoldExpr::Product(children))
    }

    pub fn dim(&self) -> usize {
        match self {
            ManifoldExpr::Atom(a) => a.dim(),
            ManifoldExpr::ConnSum(c) => c.first().map_or(0, ManifoldExpr::dim),
            ManifoldExpr::Product(c) => c.iter().map(ManifoldExpr::dim).sum(),
        }
    }

    /// Checks atom parameters and connected-sum dimensions throughout.
    pub fn validate(&self) -> Result<()> {
        match self {
            ManifoldExpr::Atom(Atom::Sphere(0)) => Err(Error::InvalidArgument("S(0): sphere dimension must be >= 1".into())),
            ManifoldExpr::Atom(Atom::Torus(0)) => Err(Error::InvalidArgument("T(0): torus dimension must be >= 1".into())),
            ManifoldExpr::Atom(_) => Ok(()),
            ManifoldExpr::ConnSum(c) => {
                c.iter().try_for_each(ManifoldExpr::validate)?;
                Self::conn_sum(c.clone()).map(drop)
            }
            ManifoldExpr::Product(c) => {
                c.iter().try_for_each(ManifoldExpr::validate)?;
                Self::product(c.clone()).map(drop)
            }
        }
    }

    /// Rewrites `T(n)` as a product of circles, `KT` as `Heis x S(1)` and
    /// `Sg(0)` as `S(2)`.
    pub fn normalize(&self) -> ManifoldExpr {
        match self {
            ManifoldExpr::Atom(Atom::Torus(1)) => ManifoldExpr::sphere(1),
            ManifoldExpr::Atom(Atom::Torus(n)) => ManifoldExpr::Product(vec![ManifoldExpr::sphere(1); *n as usize]),
            ManifoldExpr::Atom(Atom::KodairaThurston) => {
                ManifoldExpr::Product(vec![Atom::Heisenberg.into(), ManifoldExpr::sphere(1)])
            }
            ManifoldExpr::Atom(Atom::Surface(0)) => ManifoldExpr::sphere(2),
            ManifoldExpr::Atom(a) => ManifoldExpr::Atom(*a),
            ManifoldExpr::ConnSum(c) => ManifoldExpr::ConnSum(c.iter().map(Self::normalize).collect()),
            ManifoldExpr::Product(c) => ManifoldExpr::Product(c.iter().map(Self::normalize).collect()),
        }
    }

    pub fn atoms(&self) -> Vec<Atom> {
        match self {
            ManifoldExpr::Atom(a) => vec![*a],
            ManifoldExpr::ConnSum(c) | ManifoldExpr::Product(c) => c.iter().flat_map(Self::atoms).collect(),
        }
    }
}

impl fmt::Display for ManifoldExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldExpr::Atom(a) => write!(f, "{a}"),
            ManifoldExpr::ConnSum(c) => {
                for (i, e) in c.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" # ")?;
                    }
                    match e {
                        ManifoldExpr::ConnSum(_) => write!(f, "({e})")?,
                        _ => write!(f, "{e}")?,
                    }
                }
                Ok(())
            }
            ManifoldExpr::Product(c) => {
                for (i, e) in c.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    match e {
                        ManifoldExpr::Atom(_) => write!(f, "{e}")?,
                        _ => write!(f, "({e})")?,
                    }
                }
                Ok(())
            }
        }
    }
}
