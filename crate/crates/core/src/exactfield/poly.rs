//! Dense univariate polynomials over a prime field `F_p` with a runtime `p`.
//!
//! Polynomials are coefficient vectors, lowest degree first, with trailing
//! zeros stripped; the zero polynomial is the empty vector.

use crate::error::{Error, Result};

pub type Coeffs = Vec<u32>;

#[inline]
pub fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow_mod(mut base: u32, mut e: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse in `F_p`; `None` for zero.
pub fn inv_mod(a: u32, p: u32) -> Option<u32> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, (p - 2) as u64, p))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn trim(mut a: Coeffs) -> Coeffs {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add(a: &[u32], b: &[u32], p: u32) -> Coeffs {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| add_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
        .collect();
    trim(out)
}

pub fn sub(a: &[u32], b: &[u32], p: u32) -> Coeffs {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| sub_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
        .collect();
    trim(out)
}

pub fn neg(a: &[u32], p: u32) -> Coeffs {
    trim(a.iter().map(|&c| sub_mod(0, c, p)).collect())
}

pub fn scale(a: &[u32], c: u32, p: u32) -> Coeffs {
    trim(a.iter().map(|&x| mul_mod(x, c, p)).collect())
}

pub fn mul(a: &[u32], b: &[u32], p: u32) -> Coeffs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    let p64 = p as u64;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Euclidean division `a = q*b + r`, `deg r < deg b`.
pub fn divrem(a: &[u32], b: &[u32], p: u32) -> Result<(Coeffs, Coeffs)> {
    let db = degree(b).ok_or(Error::DivisionByZero)?;
    let lead_inv = inv_mod(b[db], p).ok_or(Error::DivisionByZero)?;
    let mut r: Coeffs = trim(a.to_vec());
    let mut q = vec![0u32; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = mul_mod(r[dr], lead_inv, p);
        let shift = dr - db;
        q[shift] = c;
        for (i, &bc) in b.iter().enumerate().take(db + 1) {
            r[i + shift] = sub_mod(r[i + shift], mul_mod(c, bc, p), p);
        }
        r = trim(r);
    }
    Ok((trim(q), r))
}

pub fn rem(a: &[u32], b: &[u32], p: u32) -> Result<Coeffs> {
    Ok(divrem(a, b, p)?.1)
}

pub fn make_monic(a: &[u32], p: u32) -> Coeffs {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = inv_mod(a[d], p).expect("nonzero leading coefficient");
            scale(a, inv, p)
        }
    }
}

/// Monic greatest common divisor (zero if both are zero).
pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Coeffs {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p).expect("nonzero divisor");
        x = y;
        y = r;
    }
    make_monic(&x, p)
}

/// Formal derivative.
pub fn derivative(a: &[u32], p: u32) -> Coeffs {
    if a.len() <= 1 {
        return Vec::new();
    }
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, (i as u64 % p as u64) as u32, p))
            .collect(),
    )
}

/// `base^e mod modulus`.
pub fn pow_rem(base: &[u32], mut e: u64, modulus: &[u32], p: u32) -> Result<Coeffs> {
    let mut acc = rem(&[1], modulus, p)?;
    let mut b = rem(base, modulus, p)?;
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), modulus, p)?;
        }
        b = rem(&mul(&b, &b, p), modulus, p)?;
        e >>= 1;
    }
    Ok(acc)
}

pub fn pow(base: &[u32], mut e: u64, p: u32) -> Coeffs {
    let mut acc = vec![1 % p];
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &b, p);
        }
        e >>= 1;
        if e > 0 {
            b = mul(&b, &b, p);
        }
    }
    trim(acc)
}

/// Ben-Or irreducibility test for a polynomial of degree >= 1 over `F_p`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let Some(k) = degree(f) else { return false };
    if k == 0 {
        return false;
    }
    let f = make_monic(f, p);
    let x: Coeffs = vec![0, 1];
    let mut xp = x.clone();
    for _ in 0..k / 2 {
        xp = pow_rem(&xp, p as u64, &f, p).expect("monic modulus");
        let g = gcd(&sub(&xp, &x, p), &f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Monic polynomial of degree `k` with the given index in the canonical
/// order: `a_{k-1}` is the most significant base-`p` digit, `a_0` the least.
pub fn monic_from_index(mut index: u64, k: usize, p: u32) -> Coeffs {
    let mut c = vec![0u32; k + 1];
    c[k] = 1;
    for slot in c.iter_mut().take(k) {
        *slot = (index % p as u64) as u32;
        index /= p as u64;
    }
    c
}

/// The least irreducible monic polynomial of degree `k` in the order of
/// [`monic_from_index`].
pub fn least_irreducible(k: usize, p: u32) -> Coeffs {
    let total = (p as u64).pow(k as u32);
    (0..total)
        .map(|i| monic_from_index(i, k, p))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

pub fn eval(a: &[u32], x: u32, p: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

/// Parses either a bracketed coefficient list `[c0,c1,...]` or a sum of
/// terms in the named variable such as `2*w^2+w+1`.
pub fn parse_poly(s: &str, var: &str, p: u32) -> Result<Coeffs> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("unterminated list `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        let coeffs = inner
            .split(',')
            .map(|c| parse_int_mod(c.trim(), p))
            .collect::<Result<Vec<_>>>()?;
        return Ok(trim(coeffs));
    }
    let mut out: Coeffs = Vec::new();
    // Normalize binary minus into `+-` so a plain split on '+' works.
    let normalized = s.replace(' ', "").replace('-', "+-");
    for raw in normalized.split('+') {
        if raw.is_empty() {
            continue;
        }
        let (negate, term) = match raw.strip_prefix('-') {
            Some(t) => (true, t),
            None => (false, raw),
        };
        let (coef, exp) = parse_term(term, var, p)?;
        let coef = if negate { sub_mod(0, coef, p) } else { coef };
        if out.len() <= exp {
            out.resize(exp + 1, 0);
        }
        out[exp] = add_mod(out[exp], coef, p);
    }
    Ok(trim(out))
}

fn parse_term(term: &str, var: &str, p: u32) -> Result<(u32, usize)> {
    let (coef_part, var_part) = match term.find(var) {
        None => return Ok((parse_int_mod(term, p)?, 0)),
        Some(pos) => (&term[..pos], &term[pos + var.len()..]),
    };
    let coef = match coef_part.trim_end_matches('*') {
        "" => 1 % p,
        c => parse_int_mod(c, p)?,
    };
    let exp = match var_part {
        "" => 1,
        e => e
            .strip_prefix('^')
            .ok_or_else(|| Error::Parse(format!("bad term `{term}`")))?
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?,
    };
    Ok((coef, exp))
}

fn parse_int_mod(s: &str, p: u32) -> Result<u32> {
    let v: i64 = s
        .parse()
        .map_err(|_| Error::Parse(format!("not an integer: `{s}`")))?;
    Ok(v.rem_euclid(p as i64) as u32)
}

pub fn format_list(a: &[u32]) -> String {
    if a.is_empty() {
        return "[0]".to_string();
    }
    let parts: Vec<String> = a.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_reconstructs() {
        let a = vec![1, 0, 2, 1, 1];
        let b = vec![2, 1, 1];
        let (q, r) = divrem(&a, &b, 3).unwrap();
        assert!(degree(&r).is_none_or(|d| d < 2));
        assert_eq!(add(&mul(&q, &b, 3), &r, 3), trim(a));
    }

    #[test]
    fn irreducibility_small_cases() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 0, 1], 2));
    }

    #[test]
    fn least_irreducibles() {
        assert_eq!(least_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(least_irreducible(3, 2), vec![1, 1, 0, 1]);
        assert_eq!(least_irreducible(4, 2), vec![1, 1, 0, 0, 1]);
        assert_eq!(least_irreducible(2, 3), vec![1, 0, 1]);
    }

    #[test]
    fn parse_expressions() {
        assert_eq!(parse_poly("w^2+w+1", "w", 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(parse_poly("2*w-1", "w", 3).unwrap(), vec![2, 2]);
        assert_eq!(parse_poly("[1,0,1]", "w", 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(parse_poly("w", "w", 5).unwrap(), vec![0, 1]);
        assert!(parse_poly("w^x", "w", 2).is_err());
    }

    #[test]
    fn derivative_char_p() {
        // d/dv v^2 = 2v = 0 in characteristic 2
        assert!(derivative(&[0, 0, 1], 2).is_empty());
        assert_eq!(derivative(&[5, 1], 7), vec![1]);
    }
}
