use std::sync::Arc;

use rand::Rng;

use super::poly::{self, add_mod, inv_mod, mul_mod, sub_mod, Coeffs};
use super::{Field, FieldDescriptor};
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    p: u32,
    k: usize,
    modulus: Coeffs,
}

/// The finite field `F_p[w]/(m(w))`. Elements are coefficient vectors of
/// length exactly `k`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaloisField {
    inner: Arc<Inner>,
}

impl GaloisField {
    /// `F_{p^k}` with the default (least irreducible) modulus.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !poly::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if k == 0 {
            return Err(Error::BadModulus("extension degree must be positive".into()));
        }
        if k == 1 {
            return Ok(Self::prime(p));
        }
        Self::with_modulus(p, &poly::least_irreducible(k as usize, p))
    }

    /// `F_p` viewed as a degree-one extension, modulus `w`.
    pub fn prime(p: u32) -> Self {
        GaloisField {
            inner: Arc::new(Inner {
                p,
                k: 1,
                modulus: vec![0, 1],
            }),
        }
    }

    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        if !poly::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let m = poly::trim(modulus.iter().map(|c| c % p).collect());
        let k = match poly::degree(&m) {
            Some(k) if k >= 1 && m[k] == 1 => k,
            _ => {
                return Err(Error::BadModulus(format!(
                    "{} is not monic of positive degree",
                    poly::format_list(&m)
                )))
            }
        };
        if !poly::is_irreducible(&m, p) {
            return Err(Error::BadModulus(format!(
                "{} is reducible over F_{p}",
                poly::format_list(&m)
            )));
        }
        Ok(GaloisField {
            inner: Arc::new(Inner { p, k, modulus: m }),
        })
    }

    /// Skips the irreducibility check; `modulus` comes from a validated
    /// descriptor.
    pub(crate) fn trusted(p: u32, modulus: &[u32]) -> Self {
        GaloisField {
            inner: Arc::new(Inner {
                p,
                k: modulus.len() - 1,
                modulus: modulus.to_vec(),
            }),
        }
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> usize {
        self.inner.k
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// The class of `w`.
    pub fn generator(&self) -> Vec<u32> {
        self.from_poly(&[0, 1])
    }

    /// Embeds `c ∈ F_p`.
    pub fn scalar(&self, c: u32) -> Vec<u32> {
        let mut v = vec![0; self.inner.k];
        v[0] = c % self.inner.p;
        self.reduce(v)
    }

    /// Reduces an arbitrary polynomial modulo the defining polynomial.
    pub fn from_poly(&self, a: &[u32]) -> Vec<u32> {
        self.reduce(a.iter().map(|c| c % self.inner.p).collect())
    }

    fn reduce(&self, mut a: Vec<u32>) -> Vec<u32> {
        let Inner { p, k, modulus } = &*self.inner;
        let (p, k) = (*p, *k);
        while a.len() > k {
            let top = a.pop().unwrap();
            if top != 0 {
                let shift = a.len() - k;
                for (i, &m) in modulus[..k].iter().enumerate() {
                    a[shift + i] = sub_mod(a[shift + i], mul_mod(top, m, p), p);
                }
            }
        }
        a.resize(k, 0);
        a
    }

    /// `x^(p^m)`.
    pub fn frobenius(&self, x: &[u32], m: u32) -> Vec<u32> {
        let e = (self.inner.p as u64).pow(m % self.inner.k as u32);
        self.pow(&x.to_vec(), e)
    }

    /// Index of `x` in the canonical enumeration (base-`p` digits, `c0` least
    /// significant).
    pub fn index_of(&self, x: &[u32]) -> u64 {
        x.iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.inner.p as u64 + c as u64)
    }
}

impl Field for GaloisField {
    type Elem = Vec<u32>;

    fn zero(&self) -> Vec<u32> {
        vec![0; self.inner.k]
    }

    fn one(&self) -> Vec<u32> {
        self.scalar(1)
    }

    fn add(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let p = self.inner.p;
        a.iter().zip(b).map(|(&x, &y)| add_mod(x, y, p)).collect()
    }

    fn sub(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let p = self.inner.p;
        a.iter().zip(b).map(|(&x, &y)| sub_mod(x, y, p)).collect()
    }

    fn mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let p = self.inner.p;
        let k = self.inner.k;
        let mut out = vec![0u32; 2 * k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
            }
        }
        self.reduce(out)
    }

    fn neg(&self, a: &Vec<u32>) -> Vec<u32> {
        let p = self.inner.p;
        a.iter().map(|&x| sub_mod(0, x, p)).collect()
    }

    fn inv(&self, a: &Vec<u32>) -> Option<Vec<u32>> {
        let Inner { p, k, .. } = &*self.inner;
        if a.iter().all(|&c| c == 0) {
            return None;
        }
        if *k == 1 {
            return Some(vec![inv_mod(a[0], *p)?]);
        }
        // a^(q-2)
        let q = (*p as u64).pow(*k as u32);
        Some(self.pow(a, q - 2))
    }

    fn is_zero(&self, a: &Vec<u32>) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn characteristic(&self) -> u32 {
        self.inner.p
    }

    fn size(&self) -> Option<u64> {
        Some((self.inner.p as u64).pow(self.inner.k as u32))
    }

    fn element_at(&self, mut index: u64) -> Option<Vec<u32>> {
        if index >= self.size()? {
            return None;
        }
        let p = self.inner.p as u64;
        let mut v = vec![0; self.inner.k];
        for slot in v.iter_mut() {
            *slot = (index % p) as u32;
            index /= p;
        }
        Some(v)
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u32> {
        (0..self.inner.k)
            .map(|_| rng.gen_range(0..self.inner.p))
            .collect()
    }

    fn descriptor(&self) -> FieldDescriptor {
        if self.inner.k == 1 {
            FieldDescriptor::Prime { p: self.inner.p }
        } else {
            FieldDescriptor::Extension {
                p: self.inner.p,
                k: self.inner.k as u32,
                modulus: self.inner.modulus.clone(),
            }
        }
    }

    fn format(&self, a: &Vec<u32>) -> String {
        if self.inner.k == 1 {
            return a[0].to_string();
        }
        let parts: Vec<String> = a.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    fn parse(&self, s: &str) -> Result<Vec<u32>> {
        let c = poly::parse_poly(s, "w", self.inner.p)?;
        if s.trim().starts_with('[') && c.len() > self.inner.k {
            return Err(Error::Parse(format!(
                "`{s}` has more than {} coefficients",
                self.inner.k
            )));
        }
        Ok(self.from_poly(&c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicative_group_is_cyclic_of_order_q_minus_1() {
        for (p, k) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2)] {
            let f = GaloisField::new(p, k).unwrap();
            let q = f.size().unwrap();
            for x in f.elements().unwrap() {
                if f.is_zero(&x) {
                    continue;
                }
                assert!(f.is_one(&f.pow(&x, q - 1)));
            }
        }
    }

    #[test]
    fn index_round_trip() {
        let f = GaloisField::new(3, 3).unwrap();
        for i in 0..27 {
            assert_eq!(f.index_of(&f.element_at(i).unwrap()), i);
        }
    }

    #[test]
    fn expression_parsing_reduces() {
        let f4 = GaloisField::new(2, 2).unwrap();
        assert_eq!(f4.parse("w^2").unwrap(), vec![1, 1]);
        assert_eq!(f4.parse("w^3").unwrap(), vec![1, 0]);
        assert!(f4.parse("[1,0,1]").is_err());
    }
}
