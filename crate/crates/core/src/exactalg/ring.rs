use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{default_modulus, FiniteTables};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    Rationals,
    PrimeField { p: u32 },
    ExtField { p: u32, k: u32, modulus: Vec<u32> },
}

/// Coefficient domain: ℤ, ℚ, GF(p) with p ≤ 97, or GF(p^k) with p^k ≤ 16.
///
/// Cheap to clone; finite fields share their arithmetic tables.
#[derive(Clone)]
pub struct RingSpec {
    kind: RingKind,
    tables: Option<Arc<FiniteTables>>,
}

/// An exact scalar. Its meaning depends on the ring it is used with:
/// `Integer` for ℤ, `Rational` (lowest terms) for ℚ, `Residue` (a field
/// element code in `[0, q)`) for finite fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Integer(BigInt),
    Rational(BigRational),
    Residue(u32),
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}
impl Eq for RingSpec {}

impl Hash for RingSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.kind.hash(state)
    }
}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            RingKind::ExtField { modulus, .. } if !self.has_default_modulus() => {
                write!(f, "{self}[modulus {modulus:?}]")
            }
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            RingKind::Integers => write!(f, "Z"),
            RingKind::Rationals => write!(f, "Q"),
            RingKind::PrimeField { p } => write!(f, "GF({p})"),
            RingKind::ExtField { p, k, .. } => write!(f, "GF({p},{k})"),
        }
    }
}

impl std::str::FromStr for RingSpec {
    type Err = Error;

    /// Accepts `Z`, `Q`, `GF(p)` and `GF(p,k)`; extension fields get the
    /// first irreducible monic modulus in code order.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::BadRingSpec(s.to_string());
        match t.as_str() {
            "Z" => return Ok(Self::integers()),
            "Q" => return Ok(Self::rationals()),
            _ => {}
        }
        let inner = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').collect();
        let num = |x: &str| x.parse::<u32>().map_err(|_| bad());
        match parts.as_slice() {
            [p] => Self::prime_field(num(p)?),
            [p, k] => Self::gf(num(p)?, num(k)?),
            _ => Err(bad()),
        }
    }
}

impl RingSpec {
    pub fn integers() -> Self {
        RingSpec { kind: RingKind::Integers, tables: None }
    }

    pub fn rationals() -> Self {
        RingSpec { kind: RingKind::Rationals, tables: None }
    }

    pub fn prime_field(p: u32) -> Result<Self> {
        let t = FiniteTables::prime(p)?;
        Ok(RingSpec { kind: RingKind::PrimeField { p }, tables: Some(Arc::new(t)) })
    }

    pub fn ext_field(p: u32, k: u32, modulus: Vec<u32>) -> Result<Self> {
        let t = FiniteTables::extension(p, k, &modulus)?;
        Ok(RingSpec { kind: RingKind::ExtField { p, k, modulus }, tables: Some(Arc::new(t)) })
    }

    /// GF(p^k) with the default modulus; `k = 1` gives the prime field.
    pub fn gf(p: u32, k: u32) -> Result<Self> {
        match k {
            0 => Err(Error::UnsupportedField("degree 0".into())),
            1 => Self::prime_field(p),
            _ => {
                if !super::field::is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                if p.checked_pow(k).is_none_or(|q| q > super::field::MAX_EXT_ORDER) {
                    return Err(Error::UnsupportedField(format!("GF({p}^{k})")));
                }
                Self::ext_field(p, k, default_modulus(p, k))
            }
        }
    }

    fn has_default_modulus(&self) -> bool {
        match &self.kind {
            RingKind::ExtField { p, k, modulus } => *modulus == default_modulus(*p, *k),
            _ => true,
        }
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn is_field(&self) -> bool {
        !matches!(self.kind, RingKind::Integers)
    }

    pub fn is_finite(&self) -> bool {
        self.tables.is_some()
    }

    /// 0 for ℤ and ℚ.
    pub fn characteristic(&self) -> u32 {
        self.tables.as_ref().map_or(0, |t| t.p)
    }

    pub fn order(&self) -> Option<u64> {
        self.tables.as_ref().map(|t| t.q as u64)
    }

    /// ℚ for ℤ, the ring itself otherwise.
    pub fn field_of_fractions(&self) -> RingSpec {
        match self.kind {
            RingKind::Integers => Self::rationals(),
            _ => self.clone(),
        }
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        match &self.kind {
            RingKind::ExtField { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    fn tables(&self) -> &FiniteTables {
        self.tables.as_deref().expect("finite field")
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    /// Image of an integer under the canonical map ℤ → R.
    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match &self.kind {
            RingKind::Integers => Scalar::Integer(v.clone()),
            RingKind::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            _ => {
                let p = BigInt::from(self.characteristic());
                Scalar::Residue(v.mod_floor(&p).to_u32().unwrap())
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        match self.kind {
            RingKind::Integers => {
                if num % den == 0 {
                    Ok(self.from_i64(num / den))
                } else {
                    Err(Error::NotRepresentable { value: format!("{num}/{den}"), ring: self.to_string() })
                }
            }
            _ => self.div(&n, &d),
        }
    }

    /// Field element with the given code in `[0, q)`.
    pub fn element(&self, code: u32) -> Scalar {
        debug_assert!(code < self.tables().q);
        Scalar::Residue(code)
    }

    /// All elements of a finite field, in code order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> + '_ {
        (0..self.tables().q).map(Scalar::Residue)
    }

    /// Code of a finite-field element.
    pub fn code(&self, a: &Scalar) -> u32 {
        match a {
            Scalar::Residue(c) => *c,
            _ => panic!("{a:?} is not a finite-field element"),
        }
    }

    /// Coefficient vector (low degree first) of a finite-field element.
    pub fn coefficients(&self, a: &Scalar) -> Vec<u32> {
        self.tables().coefficients(self.code(a))
    }

    /// Checks that `a` is a valid, fully reduced element of this ring.
    pub fn contains(&self, a: &Scalar) -> bool {
        match (&self.kind, a) {
            (RingKind::Integers, Scalar::Integer(_)) => true,
            (RingKind::Rationals, Scalar::Rational(r)) => {
                r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
            }
            (RingKind::PrimeField { .. } | RingKind::ExtField { .. }, Scalar::Residue(c)) => {
                *c < self.tables().q
            }
            _ => false,
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Integer(v) => v.is_zero(),
            Scalar::Rational(v) => v.is_zero(),
            Scalar::Residue(c) => *c == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Integer(v) => v.is_one(),
            Scalar::Rational(v) => v.is_one(),
            Scalar::Residue(c) => *c == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Integer(x), Scalar::Integer(y)) => Scalar::Integer(x + y),
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Residue(x), Scalar::Residue(y)) => Scalar::Residue(self.tables().add(*x, *y)),
            _ => panic!("mixed scalar kinds {a:?}, {b:?}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Integer(x) => Scalar::Integer(-x),
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Residue(x) => Scalar::Residue(self.tables().neg(*x)),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Integer(x), Scalar::Integer(y)) => Scalar::Integer(x * y),
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Residue(x), Scalar::Residue(y)) => Scalar::Residue(self.tables().mul(*x, *y)),
            _ => panic!("mixed scalar kinds {a:?}, {b:?}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match a {
            Scalar::Integer(x) => {
                if x.abs().is_one() {
                    Ok(a.clone())
                } else {
                    Err(Error::NotRepresentable { value: format!("1/{x}"), ring: self.to_string() })
                }
            }
            Scalar::Rational(x) => Ok(Scalar::Rational(x.recip())),
            Scalar::Residue(x) => Ok(Scalar::Residue(self.tables().inv(*x))),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Converts a scalar of `from` into this ring along the canonical map.
    ///
    /// Legal: identity, ℤ → anything, GF(p) → GF(p^k). Rationals convert into
    /// a finite field only when the denominator is invertible.
    pub fn convert(&self, a: &Scalar, from: &RingSpec) -> Result<Scalar> {
        if self == from {
            return Ok(a.clone());
        }
        let illegal = || Error::IllegalExtension { from: from.to_string(), to: self.to_string() };
        match (&from.kind, a) {
            (RingKind::Integers, Scalar::Integer(v)) => Ok(self.from_bigint(v)),
            (RingKind::Rationals, Scalar::Rational(r)) => match self.kind {
                RingKind::Integers if r.is_integer() => Ok(Scalar::Integer(r.to_integer())),
                RingKind::Integers => Err(Error::NotRepresentable { value: r.to_string(), ring: self.to_string() }),
                _ => {
                    let d = self.from_bigint(r.denom());
                    if self.is_zero(&d) {
                        return Err(Error::NotRepresentable { value: r.to_string(), ring: self.to_string() });
                    }
                    self.div(&self.from_bigint(r.numer()), &d)
                }
            },
            (RingKind::PrimeField { p }, Scalar::Residue(c)) => match self.kind {
                RingKind::ExtField { p: q, .. } if q == *p => Ok(Scalar::Residue(*c)),
                _ => Err(illegal()),
            },
            _ => Err(illegal()),
        }
    }

    /// Human-readable form: integers, `a/b`, field codes.
    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Integer(v) => v.to_string(),
            Scalar::Rational(r) => r.to_string(),
            Scalar::Residue(c) => c.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["Z", "Q", "GF(2)", "GF(97)", "GF(2,2)", "GF(3,2)", "GF(2,4)"] {
            let r: RingSpec = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("GF( 5 )".parse::<RingSpec>().unwrap(), RingSpec::prime_field(5).unwrap());
        assert!("GF(4)".parse::<RingSpec>().is_err());
        assert!("GF(5,2)".parse::<RingSpec>().is_err());
        assert!("R".parse::<RingSpec>().is_err());
    }

    #[test]
    fn rationals_stay_reduced() {
        let q = RingSpec::rationals();
        let a = q.from_ratio(2, 4).unwrap();
        let b = q.from_ratio(-1, -2).unwrap();
        assert_eq!(a, b);
        let s = q.add(&a, &q.from_ratio(1, 6).unwrap());
        assert!(q.contains(&s));
        assert_eq!(q.format(&s), "2/3");
    }

    #[test]
    fn conversions() {
        let z = RingSpec::integers();
        let f2 = RingSpec::prime_field(2).unwrap();
        let f4 = RingSpec::gf(2, 2).unwrap();
        assert_eq!(f2.convert(&z.from_i64(-3), &z).unwrap(), f2.one());
        assert_eq!(f4.convert(&f2.one(), &f2).unwrap(), f4.one());
        assert!(f2.convert(&f4.one(), &f4).is_err());
        let q = RingSpec::rationals();
        let half = q.from_ratio(1, 2).unwrap();
        assert!(f2.convert(&half, &q).is_err());
        let f3 = RingSpec::prime_field(3).unwrap();
        assert_eq!(f3.convert(&half, &q).unwrap(), f3.from_i64(2));
    }

    #[test]
    fn integer_inverse_only_for_units() {
        let z = RingSpec::integers();
        assert_eq!(z.inv(&z.from_i64(-1)).unwrap(), z.from_i64(-1));
        assert!(z.inv(&z.from_i64(2)).is_err());
    }
}
