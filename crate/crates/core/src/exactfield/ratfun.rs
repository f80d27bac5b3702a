use rand::Rng;

use super::poly::{self, inv_mod, Coeffs};
use super::{Field, FieldDescriptor};
use crate::error::{Error, Result};

/// Numerator and denominator degrees above this abort the computation.
pub const DEFAULT_DEGREE_CAP: usize = 64;

/// A reduced fraction `num/den` over `F_p`: `den` monic, `gcd(num, den) = 1`,
/// and zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    pub num: Coeffs,
    pub den: Coeffs,
}

/// The rational function field `F_p(var)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunField {
    p: u32,
    var: String,
    cap: usize,
}

impl RatFunField {
    pub fn new(p: u32, var: &str) -> Self {
        Self::with_cap(p, var, DEFAULT_DEGREE_CAP)
    }

    pub fn with_cap(p: u32, var: &str, cap: usize) -> Self {
        assert!(poly::is_prime(p as u64), "{p} is not prime");
        RatFunField {
            p,
            var: var.to_string(),
            cap,
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    /// Builds `num/den` in lowest terms.
    pub fn fraction(&self, num: &[u32], den: &[u32]) -> Result<RatFun> {
        let num = poly::trim(num.iter().map(|c| c % self.p).collect());
        let den = poly::trim(den.iter().map(|c| c % self.p).collect());
        if den.is_empty() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.normalize(num, den))
    }

    pub fn from_poly(&self, num: &[u32]) -> RatFun {
        self.fraction(num, &[1]).unwrap()
    }

    /// The generator `var`.
    pub fn generator(&self) -> RatFun {
        self.from_poly(&[0, 1])
    }

    fn normalize(&self, num: Coeffs, den: Coeffs) -> RatFun {
        let p = self.p;
        if num.is_empty() {
            return RatFun {
                num: Vec::new(),
                den: vec![1],
            };
        }
        let g = poly::gcd(&num, &den, p);
        let (mut num, mut den) = if g.len() > 1 {
            (
                poly::divrem(&num, &g, p).unwrap().0,
                poly::divrem(&den, &g, p).unwrap().0,
            )
        } else {
            (num, den)
        };
        let lead = *den.last().unwrap();
        if lead != 1 {
            let c = inv_mod(lead, p).unwrap();
            num = poly::scale(&num, c, p);
            den = poly::scale(&den, c, p);
        }
        if num.len() > self.cap + 1 || den.len() > self.cap + 1 {
            panic!(
                "rational function degree cap {} exceeded (numerator degree {}, denominator degree {})",
                self.cap,
                num.len() - 1,
                den.len() - 1
            );
        }
        RatFun { num, den }
    }

    /// Formal derivative `d/d var`.
    pub fn derivative(&self, a: &RatFun) -> RatFun {
        let p = self.p;
        let n1 = poly::mul(&poly::derivative(&a.num, p), &a.den, p);
        let n2 = poly::mul(&a.num, &poly::derivative(&a.den, p), p);
        self.normalize(poly::sub(&n1, &n2, p), poly::mul(&a.den, &a.den, p))
    }

    /// Substitutes `var -> var^e` in numerator and denominator.
    pub fn compose_power(&self, a: &RatFun, e: usize) -> RatFun {
        let spread = |c: &[u32]| {
            let mut out = vec![0; c.len().saturating_sub(1) * e + 1];
            for (i, &x) in c.iter().enumerate() {
                out[i * e] = x;
            }
            poly::trim(out)
        };
        self.normalize(spread(&a.num), spread(&a.den))
    }
}

impl Field for RatFunField {
    type Elem = RatFun;

    fn zero(&self) -> RatFun {
        RatFun {
            num: Vec::new(),
            den: vec![1],
        }
    }

    fn one(&self) -> RatFun {
        RatFun {
            num: vec![1],
            den: vec![1],
        }
    }

    fn add(&self, a: &RatFun, b: &RatFun) -> RatFun {
        let p = self.p;
        if a.den == b.den {
            return self.normalize(poly::add(&a.num, &b.num, p), a.den.clone());
        }
        let num = poly::add(
            &poly::mul(&a.num, &b.den, p),
            &poly::mul(&b.num, &a.den, p),
            p,
        );
        self.normalize(num, poly::mul(&a.den, &b.den, p))
    }

    fn sub(&self, a: &RatFun, b: &RatFun) -> RatFun {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &RatFun, b: &RatFun) -> RatFun {
        let p = self.p;
        self.normalize(
            poly::mul(&a.num, &b.num, p),
            poly::mul(&a.den, &b.den, p),
        )
    }

    fn neg(&self, a: &RatFun) -> RatFun {
        RatFun {
            num: poly::neg(&a.num, self.p),
            den: a.den.clone(),
        }
    }

    fn inv(&self, a: &RatFun) -> Option<RatFun> {
        if a.num.is_empty() {
            return None;
        }
        Some(self.normalize(a.den.clone(), a.num.clone()))
    }

    fn is_zero(&self, a: &RatFun) -> bool {
        a.num.is_empty()
    }

    fn characteristic(&self) -> u32 {
        self.p
    }

    fn size(&self) -> Option<u64> {
        None
    }

    fn element_at(&self, _index: u64) -> Option<RatFun> {
        None
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> RatFun {
        let p = self.p;
        let nd = rng.gen_range(0..4);
        let num: Coeffs = (0..=nd).map(|_| rng.gen_range(0..p)).collect();
        let dd = rng.gen_range(0..3);
        let mut den: Coeffs = (0..dd).map(|_| rng.gen_range(0..p)).collect();
        den.push(1);
        self.normalize(poly::trim(num), den)
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::RationalFunction {
            p: self.p,
            var: self.var.clone(),
        }
    }

    fn format(&self, a: &RatFun) -> String {
        format!("{}/{}", poly::format_list(&a.num), poly::format_list(&a.den))
    }

    fn parse(&self, s: &str) -> Result<RatFun> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num = poly::parse_poly(n, &self.var, self.p)?;
        let den = poly::parse_poly(d, &self.var, self.p)?;
        self.fraction(&num, &den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_is_canonical() {
        let f = RatFunField::new(3, "v");
        // (v^2 - 1) / (2v - 2) = (v + 1) / 2 = 2v + 2
        let a = f.fraction(&[2, 0, 1], &[1, 2]).unwrap();
        assert_eq!(a, f.from_poly(&[2, 2]));
        assert_eq!(f.fraction(&[0], &[2, 1]).unwrap(), f.zero());
        assert!(f.fraction(&[1], &[0]).is_err());
    }

    #[test]
    fn derivative_obeys_leibniz() {
        let f = RatFunField::new(5, "v");
        let a = f.parse("v^2+1/v+3").unwrap();
        let b = f.parse("2*v/v^2+v+1").unwrap();
        let lhs = f.derivative(&f.mul(&a, &b));
        let rhs = f.add(
            &f.mul(&f.derivative(&a), &b),
            &f.mul(&a, &f.derivative(&b)),
        );
        assert_eq!(lhs, rhs);
        // d/dv (v^p) = 0
        assert!(f.is_zero(&f.derivative(&f.from_poly(&[0, 0, 0, 0, 0, 1]))));
    }

    #[test]
    #[should_panic(expected = "degree cap")]
    fn degree_cap_is_enforced() {
        let f = RatFunField::with_cap(2, "v", 8);
        let v = f.generator();
        let _ = f.pow(&f.add(&v, &f.one()), 9);
    }
}
