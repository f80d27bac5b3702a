use rand::Rng;

use super::poly::{self, add_mod, inv_mod, mul_mod, sub_mod};
use super::{Field, FieldDescriptor};
use crate::error::{Error, Result};

/// The prime field `F_p`, elements stored as residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !poly::is_prime(p as u64) || p > 1 << 16 {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }

    #[inline]
    fn one(&self) -> u32 {
        1
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        add_mod(*a, *b, self.p)
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        sub_mod(*a, *b, self.p)
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        mul_mod(*a, *b, self.p)
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        sub_mod(0, *a, self.p)
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        inv_mod(*a, self.p)
    }

    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    fn characteristic(&self) -> u32 {
        self.p
    }

    fn size(&self) -> Option<u64> {
        Some(self.p as u64)
    }

    fn element_at(&self, index: u64) -> Option<u32> {
        (index < self.p as u64).then_some(index as u32)
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime { p: self.p }
    }

    fn format(&self, a: &u32) -> String {
        a.to_string()
    }

    fn parse(&self, s: &str) -> Result<u32> {
        let c = poly::parse_poly(s, "w", self.p)?;
        match c.len() {
            0 => Ok(0),
            1 => Ok(c[0]),
            _ => Err(Error::Parse(format!("`{s}` is not an element of F_{}", self.p))),
        }
    }
}
