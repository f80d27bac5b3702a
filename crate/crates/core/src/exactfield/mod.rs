//! Exact scalar fields: prime fields, finite extension fields and rational
//! function fields in one variable over `F_p`.
//!
//! Every algorithm in this crate is generic over the [`Field`] trait. A
//! field value is a small context object (the modulus, the characteristic)
//! and elements are plain data interpreted relative to it, which lets the
//! modulus be chosen at run time while keeping prime-field arithmetic on
//! bare `u32`s.

pub mod poly;

mod galois;
mod prime;
mod ratfun;

use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;
use serde::{Deserialize, Serialize};

pub use galois::GaloisField;
pub use prime::PrimeField;
pub use ratfun::{RatFun, RatFunField, DEFAULT_DEGREE_CAP};

use crate::error::{Error, Result};

/// A field with exact arithmetic.
pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn characteristic(&self) -> u32;
    /// Number of elements, `None` for infinite fields.
    fn size(&self) -> Option<u64>;
    /// The `index`-th element in the canonical enumeration of a finite field.
    fn element_at(&self, index: u64) -> Option<Self::Elem>;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn descriptor(&self) -> FieldDescriptor;
    /// Canonical string form of an element.
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        let p = self.characteristic() as i64;
        let r = n.rem_euclid(p);
        let mut acc = self.zero();
        let one = self.one();
        for _ in 0..r {
            acc = self.add(&acc, &one);
        }
        acc
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// All elements of a finite field in canonical order.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let n = self.size()?;
        (0..n).map(|i| self.element_at(i)).collect()
    }
}

/// Run-time description of one of the supported fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldDescriptor {
    Prime { p: u32 },
    Extension { p: u32, k: u32, modulus: Vec<u32> },
    RationalFunction { p: u32, var: String },
}

/// An element of a field described by a [`FieldDescriptor`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    /// Coefficients over `F_p` of a prime or extension field element,
    /// lowest degree first, always of length `k` (1 for prime fields).
    Coeffs(Vec<u32>),
    Fraction(RatFun),
}

/// Builds the descriptor of `F_{p^k}`.
///
/// Without an explicit modulus the least irreducible monic polynomial of
/// degree `k` is used, ordering candidates lexicographically by
/// `(a_{k-1}, ..., a_0)`.
pub fn ff_make(p: u32, k: u32, modulus: Option<&[u32]>) -> Result<FieldDescriptor> {
    if !poly::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if k == 0 {
        return Err(Error::BadModulus("extension degree must be positive".into()));
    }
    if let Some(m) = modulus {
        let m = poly::trim(m.to_vec());
        if poly::degree(&m) != Some(k as usize) || m[k as usize] != 1 {
            return Err(Error::BadModulus(format!(
                "{} is not monic of degree {k}",
                poly::format_list(&m)
            )));
        }
        if !poly::is_irreducible(&m, p) {
            return Err(Error::BadModulus(format!(
                "{} is reducible over F_{p}",
                poly::format_list(&m)
            )));
        }
        if k == 1 {
            return Ok(FieldDescriptor::Prime { p });
        }
        return Ok(FieldDescriptor::Extension { p, k, modulus: m });
    }
    if k == 1 {
        return Ok(FieldDescriptor::Prime { p });
    }
    Ok(FieldDescriptor::Extension {
        p,
        k,
        modulus: poly::least_irreducible(k as usize, p),
    })
}

/// `x^(p^m)`; the identity on prime fields.
pub fn frobenius(field: &FieldDescriptor, x: &FieldElement, m: u32) -> Result<FieldElement> {
    match (field, x) {
        (FieldDescriptor::Prime { .. }, FieldElement::Coeffs(_)) => Ok(x.clone()),
        (FieldDescriptor::Extension { .. }, FieldElement::Coeffs(c)) => {
            let gf = field.galois().expect("extension descriptor");
            Ok(FieldElement::Coeffs(gf.frobenius(c, m)))
        }
        (FieldDescriptor::RationalFunction { .. }, _) => Err(Error::Unsupported(
            "Frobenius on a rational function field".into(),
        )),
        _ => Err(Error::Validation("element does not belong to field".into())),
    }
}

impl FieldDescriptor {
    pub fn p(&self) -> u32 {
        match self {
            FieldDescriptor::Prime { p }
            | FieldDescriptor::Extension { p, .. }
            | FieldDescriptor::RationalFunction { p, .. } => *p,
        }
    }

    pub fn galois(&self) -> Option<GaloisField> {
        match self {
            FieldDescriptor::Extension { p, modulus, .. } => {
                Some(GaloisField::trusted(*p, modulus))
            }
            FieldDescriptor::Prime { p } => Some(GaloisField::prime(*p)),
            FieldDescriptor::RationalFunction { .. } => None,
        }
    }

    fn ratfun(&self) -> Option<RatFunField> {
        match self {
            FieldDescriptor::RationalFunction { p, var } => Some(RatFunField::new(*p, var)),
            _ => None,
        }
    }

    fn coeffs<'a>(&self, a: &'a FieldElement) -> &'a Vec<u32> {
        match a {
            FieldElement::Coeffs(c) => c,
            FieldElement::Fraction(_) => panic!("fraction used in finite field {self:?}"),
        }
    }

    fn frac<'a>(&self, a: &'a FieldElement) -> &'a RatFun {
        match a {
            FieldElement::Fraction(f) => f,
            FieldElement::Coeffs(_) => panic!("coefficient vector used in {self:?}"),
        }
    }
}

macro_rules! dispatch_binary {
    ($self:ident, $a:ident, $b:ident, $op:ident) => {
        match $self {
            FieldDescriptor::RationalFunction { .. } => {
                let f = $self.ratfun().unwrap();
                FieldElement::Fraction(f.$op($self.frac($a), $self.frac($b)))
            }
            _ => {
                let g = $self.galois().unwrap();
                FieldElement::Coeffs(g.$op($self.coeffs($a), $self.coeffs($b)))
            }
        }
    };
}

impl Field for FieldDescriptor {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        match self {
            FieldDescriptor::RationalFunction { .. } => {
                FieldElement::Fraction(self.ratfun().unwrap().zero())
            }
            _ => FieldElement::Coeffs(self.galois().unwrap().zero()),
        }
    }

    fn one(&self) -> FieldElement {
        match self {
            FieldDescriptor::RationalFunction { .. } => {
                FieldElement::Fraction(self.ratfun().unwrap().one())
            }
            _ => FieldElement::Coeffs(self.galois().unwrap().one()),
        }
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        dispatch_binary!(self, a, b, add)
    }

    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        dispatch_binary!(self, a, b, sub)
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        dispatch_binary!(self, a, b, mul)
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        match self {
            FieldDescriptor::RationalFunction { .. } => {
                FieldElement::Fraction(self.ratfun().unwrap().neg(self.frac(a)))
            }
            _ => FieldElement::Coeffs(self.galois().unwrap().neg(self.coeffs(a))),
        }
    }

    fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        match self {
            FieldDescriptor::RationalFunction { .. } => self
                .ratfun()
                .unwrap()
                .inv(self.frac(a))
                .map(FieldElement::Fraction),
            _ => self
                .galois()
                .unwrap()
                .inv(self.coeffs(a))
                .map(FieldElement::Coeffs),
        }
    }

    fn characteristic(&self) -> u32 {
        self.p()
    }

    fn size(&self) -> Option<u64> {
        self.galois().and_then(|g| g.size())
    }

    fn element_at(&self, index: u64) -> Option<FieldElement> {
        self.galois()
            .and_then(|g| g.element_at(index))
            .map(FieldElement::Coeffs)
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        match self {
            FieldDescriptor::RationalFunction { .. } => {
                FieldElement::Fraction(self.ratfun().unwrap().random(rng))
            }
            _ => FieldElement::Coeffs(self.galois().unwrap().random(rng)),
        }
    }

    fn descriptor(&self) -> FieldDescriptor {
        self.clone()
    }

    fn format(&self, a: &FieldElement) -> String {
        match self {
            FieldDescriptor::RationalFunction { .. } => self.ratfun().unwrap().format(self.frac(a)),
            FieldDescriptor::Prime { .. } => self.coeffs(a)[0].to_string(),
            FieldDescriptor::Extension { .. } => {
                self.galois().unwrap().format(self.coeffs(a))
            }
        }
    }

    fn parse(&self, s: &str) -> Result<FieldElement> {
        match self {
            FieldDescriptor::RationalFunction { .. } => {
                self.ratfun().unwrap().parse(s).map(FieldElement::Fraction)
            }
            _ => self.galois().unwrap().parse(s).map(FieldElement::Coeffs),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check_axioms<F: Field>(f: &F, samples: usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..samples {
            let a = f.random(&mut rng);
            let b = f.random(&mut rng);
            let c = f.random(&mut rng);
            assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            assert_eq!(
                f.mul(&a, &f.add(&b, &c)),
                f.add(&f.mul(&a, &b), &f.mul(&a, &c))
            );
            assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
            assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
            if !f.is_zero(&a) {
                let ai = f.inv(&a).unwrap();
                assert!(f.is_one(&f.mul(&a, &ai)));
            } else {
                assert!(f.inv(&a).is_none());
            }
        }
    }

    #[test]
    fn field_axioms_on_random_triples() {
        check_axioms(&PrimeField::new(2).unwrap(), 1000);
        check_axioms(&PrimeField::new(7).unwrap(), 1000);
        check_axioms(&GaloisField::new(2, 2).unwrap(), 1000);
        check_axioms(&GaloisField::new(3, 2).unwrap(), 1000);
        check_axioms(&GaloisField::new(2, 4).unwrap(), 1000);
        check_axioms(&ff_make(5, 3, None).unwrap(), 1000);
        check_axioms(&RatFunField::new(2, "v"), 300);
        check_axioms(&RatFunField::new(3, "v"), 300);
    }

    #[test]
    fn ff_make_examples() {
        assert_eq!(ff_make(2, 1, None).unwrap(), FieldDescriptor::Prime { p: 2 });
        assert_eq!(ff_make(2, 1, None).unwrap().elements().unwrap().len(), 2);
        let f4 = ff_make(2, 2, Some(&[1, 1, 1])).unwrap();
        let w = f4.parse("[0,1]").unwrap();
        let w2 = f4.mul(&w, &w);
        assert_eq!(w2, f4.add(&w, &f4.one()));
        assert_eq!(ff_make(3, 1, None).unwrap(), FieldDescriptor::Prime { p: 3 });
    }

    #[test]
    fn ff_make_rejects_bad_input() {
        assert_eq!(ff_make(4, 1, None), Err(Error::NotPrime(4)));
        assert!(matches!(
            ff_make(2, 2, Some(&[1, 0, 1])),
            Err(Error::BadModulus(_))
        ));
        assert!(matches!(
            ff_make(2, 3, Some(&[1, 1, 1])),
            Err(Error::BadModulus(_))
        ));
    }

    #[test]
    fn frobenius_examples() {
        let f4 = ff_make(2, 2, None).unwrap();
        let w = f4.parse("[0,1]").unwrap();
        assert_eq!(frobenius(&f4, &w, 1).unwrap(), f4.parse("[1,1]").unwrap());
        assert_eq!(frobenius(&f4, &f4.zero(), 3).unwrap(), f4.zero());
        let f5 = ff_make(5, 1, None).unwrap();
        for x in f5.elements().unwrap() {
            assert_eq!(frobenius(&f5, &x, 2).unwrap(), x);
        }
        let rf = FieldDescriptor::RationalFunction { p: 2, var: "v".into() };
        assert!(matches!(
            frobenius(&rf, &rf.one(), 1),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn frobenius_is_a_field_automorphism_of_order_k() {
        let f16 = ff_make(2, 4, None).unwrap();
        let elems = f16.elements().unwrap();
        for x in &elems {
            assert_eq!(&frobenius(&f16, x, 4).unwrap(), x);
            for y in elems.iter().step_by(3) {
                let fx = frobenius(&f16, x, 1).unwrap();
                let fy = frobenius(&f16, y, 1).unwrap();
                assert_eq!(frobenius(&f16, &f16.mul(x, y), 1).unwrap(), f16.mul(&fx, &fy));
                assert_eq!(frobenius(&f16, &f16.add(x, y), 1).unwrap(), f16.add(&fx, &fy));
            }
        }
    }

    #[test]
    fn canonical_strings_round_trip() {
        let f9 = ff_make(3, 2, None).unwrap();
        for x in f9.elements().unwrap() {
            assert_eq!(f9.parse(&f9.format(&x)).unwrap(), x);
        }
        let f4 = ff_make(2, 2, None).unwrap();
        assert_eq!(f4.format(&f4.parse("1+w").unwrap()), "[1,1]");
        let rf = FieldDescriptor::RationalFunction { p: 3, var: "v".into() };
        let x = rf.parse("[1,1]/[0,1]").unwrap();
        assert_eq!(rf.format(&x), "[1,1]/[0,1]");
    }
}
