//! Table-driven arithmetic for the small finite fields GF(p) and GF(p^k).
//!
//! Elements are encoded as integers in `[0, q)`. For an extension field the
//! code of `c_0 + c_1 x + ... + c_{k-1} x^{k-1}` is `sum c_i p^i`, so the prime
//! subfield is embedded as the codes `0..p`.

use crate::error::{Error, Result};

pub const MAX_PRIME: u32 = 97;
pub const MAX_EXT_ORDER: u32 = 16;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomials over GF(p), coefficient lists low degree first.
mod poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        (1..p).find(|&x| (a * x) % p == 1).expect("nonzero residue")
    }

    /// Remainder of `a` modulo the nonzero polynomial `b`.
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        let lead_inv = inv_mod(*b.last().unwrap(), p);
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let factor = (r.last().unwrap() * lead_inv) % p;
            for (i, &bi) in b.iter().enumerate() {
                let sub = (factor * bi) % p;
                r[i + shift] = (r[i + shift] + p - sub) % p;
            }
            r = trim(r);
        }
        r
    }

    /// All monic polynomials of the given degree, in code order.
    pub fn monic_of_degree(deg: usize, p: u32) -> impl Iterator<Item = Vec<u32>> {
        let count = p.pow(deg as u32);
        (0..count).map(move |mut code| {
            let mut c = Vec::with_capacity(deg + 1);
            for _ in 0..deg {
                c.push(code % p);
                code /= p;
            }
            c.push(1);
            c
        })
    }
}

/// Exhaustive factor search: no monic polynomial of degree `1..=k/2` divides it.
pub fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let k = modulus.len().saturating_sub(1);
    if k == 0 {
        return false;
    }
    (1..=k / 2).all(|d| poly::monic_of_degree(d, p).all(|f| !poly::rem(modulus, &f, p).is_empty()))
}

/// The first irreducible monic polynomial of degree `k` in code order.
pub fn default_modulus(p: u32, k: u32) -> Vec<u32> {
    poly::monic_of_degree(k as usize, p)
        .find(|m| is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree")
}

#[derive(Debug)]
pub(crate) struct FiniteTables {
    pub p: u32,
    pub k: u32,
    pub q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl FiniteTables {
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_PRIME {
            return Err(Error::UnsupportedField(format!("GF({p}) exceeds GF({MAX_PRIME})")));
        }
        Ok(Self::build(p, 1, |a, b| (a + b) % p, |a, b| (a * b) % p))
    }

    pub fn extension(p: u32, k: u32, modulus: &[u32]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k < 2 {
            return Err(Error::UnsupportedField(format!("extension degree {k} < 2")));
        }
        let q = p.checked_pow(k).filter(|&q| q <= MAX_EXT_ORDER).ok_or_else(|| {
            Error::UnsupportedField(format!("GF({p}^{k}) exceeds order {MAX_EXT_ORDER}"))
        })?;
        if modulus.len() != k as usize + 1 {
            return Err(Error::BadModulus(format!("expected {} coefficients, got {}", k + 1, modulus.len())));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus("coefficients must lie in [0, p)".into()));
        }
        if modulus[k as usize] != 1 {
            return Err(Error::BadModulus("modulus must be monic".into()));
        }
        if !is_irreducible(modulus, p) {
            return Err(Error::BadModulus(format!("{modulus:?} is reducible over GF({p})")));
        }
        let decode = |mut code: u32| -> Vec<u32> {
            (0..k)
                .map(|_| {
                    let c = code % p;
                    code /= p;
                    c
                })
                .collect()
        };
        let encode = |c: &[u32]| -> u32 { c.iter().rev().fold(0, |acc, &ci| acc * p + ci) };
        let add = |a: u32, b: u32| {
            let (x, y) = (decode(a), decode(b));
            let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
            encode(&s)
        };
        let mul = |a: u32, b: u32| {
            let (x, y) = (decode(a), decode(b));
            let mut prod = vec![0u32; 2 * k as usize - 1];
            for (i, u) in x.iter().enumerate() {
                for (j, v) in y.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + u * v) % p;
                }
            }
            let mut r = poly::rem(&prod, modulus, p);
            r.resize(k as usize, 0);
            encode(&r)
        };
        let t = Self::build(p, k, add, mul);
        debug_assert_eq!(t.q, q);
        Ok(t)
    }

    fn build(p: u32, k: u32, add: impl Fn(u32, u32) -> u32, mul: impl Fn(u32, u32) -> u32) -> Self {
        let q = p.pow(k);
        let n = q as usize;
        let mut at = vec![0; n * n];
        let mut mt = vec![0; n * n];
        for a in 0..q {
            for b in 0..q {
                at[a as usize * n + b as usize] = add(a, b);
                mt[a as usize * n + b as usize] = mul(a, b);
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| at[a as usize * n + b as usize] == 0).unwrap()).collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mt[a as usize * n + b as usize] == 1).unwrap() })
            .collect();
        FiniteTables { p, k, q, add: at, mul: mt, neg, inv }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }
    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }
    /// Inverse of a nonzero element.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn coefficients(&self, mut code: u32) -> Vec<u32> {
        (0..self.k)
            .map(|_| {
                let c = code % self.p;
                code /= self.p;
                c
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli() {
        assert_eq!(default_modulus(2, 2), vec![1, 1, 1]);
        assert_eq!(default_modulus(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(default_modulus(2, 4), vec![1, 1, 0, 0, 1]);
        assert_eq!(default_modulus(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(matches!(FiniteTables::extension(2, 2, &[1, 0, 1]), Err(Error::BadModulus(_))));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no roots but is reducible
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn field_axioms_gf9() {
        let f = FiniteTables::extension(3, 2, &default_modulus(3, 2)).unwrap();
        for a in 0..9 {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..9 {
                for c in 0..9 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn size_limits() {
        assert!(FiniteTables::prime(101).is_err());
        assert!(FiniteTables::prime(9).is_err());
        assert!(FiniteTables::extension(5, 2, &[2, 0, 1]).is_err());
    }
}
