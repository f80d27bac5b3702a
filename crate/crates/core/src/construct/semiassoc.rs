use serde::Serialize;

use super::in_nucleus;
use crate::error::{Error, Result};
use crate::etale::{count_primitive_idempotents, trace_form_nondegenerate};
use crate::exactfield::Field;
use crate::exactla::span_rank;
use crate::nalg::{frobenius_fixed_space, nilradical_dim, AlgebraSC, Subalgebra};

/// The four conditions for `A` to be `E`-semiassociative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemiassocReport {
    pub etale: bool,
    pub in_nucleus: bool,
    pub dim_match: bool,
    /// Rank of `E ⊗ E → End(A)`, `e ⊗ e' ↦ (a ↦ e a e')`.
    pub faithful_rank: usize,
    pub faithful: bool,
    /// All of the above; cyclicity follows from faithfulness and the
    /// dimension count.
    pub semiassociative: bool,
}

/// Checks `E` étale, `E ⊆ Nuc(A)`, `(dim E)^2 = dim A` and that `A` is a
/// faithful `E ⊗ E`-module. `e` spans `E`; it must be a unital subalgebra.
pub fn semiassoc_check<F: Field>(a: &AlgebraSC<F>, e: &[Vec<F::Elem>]) -> Result<SemiassocReport> {
    let sub = Subalgebra::new(a, e)?;
    let ea = sub.algebra();
    let etale = ea.is_commutative() && ea.is_associative() && trace_form_nondegenerate(ea)?;
    let in_nuc = sub.basis().iter().all(|x| in_nucleus(a, x));
    let k = sub.dim();
    let dim_match = k * k == a.dim();
    let n = a.dim();
    let mut operators = Vec::with_capacity(k * k);
    for x in sub.basis() {
        for y in sub.basis() {
            let mut flat = Vec::with_capacity(n * n);
            for j in 0..n {
                flat.extend(a.mul(&a.mul(x, &a.basis(j)), y));
            }
            operators.push(flat);
        }
    }
    let faithful_rank = span_rank(a.field(), n * n, &operators);
    let faithful = faithful_rank == k * k;
    Ok(SemiassocReport {
        etale,
        in_nucleus: in_nuc,
        dim_match,
        faithful_rank,
        faithful,
        semiassociative: etale && in_nuc && dim_match && faithful,
    })
}

/// Whether `x` generates `A` as an `E ⊗ E`-module: `span{e x e'} = A`.
pub fn cyclic_module_check<F: Field>(a: &AlgebraSC<F>, e: &[Vec<F::Elem>], x: &[F::Elem]) -> bool {
    let mut images = Vec::with_capacity(e.len() * e.len());
    for u in e {
        for v in e {
            images.push(a.mul(&a.mul(u, x), v));
        }
    }
    span_rank(a.field(), a.dim(), &images) == a.dim()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitVerdict {
    SplitCertified,
    NotSplitCertified,
    Inconclusive,
}

impl SplitVerdict {
    pub fn name(self) -> &'static str {
        match self {
            SplitVerdict::SplitCertified => "split-certified",
            SplitVerdict::NotSplitCertified => "not-split-certified",
            SplitVerdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    /// `sqrt(dim A)`.
    pub degree: usize,
    pub idempotent_count: usize,
    pub nucleus_dim: usize,
    /// Whether `E` is the whole nucleus.
    pub e_is_nucleus: bool,
    /// Upper bound on orthogonal idempotents in the nucleus, when one is
    /// known: exact for a commutative nucleus, `r` for `Nuc ≅ M_r(Z)`.
    pub nucleus_idempotent_bound: Option<usize>,
    pub verdict: SplitVerdict,
}

/// `A` of degree `n` is split iff `F^n` is a unital subalgebra of the
/// nucleus. Certifies splitting when `E` has at least `n` primitive
/// idempotents, and non-splitting when the nucleus cannot hold `n`
/// orthogonal idempotents.
pub fn split_certificate<F: Field>(a: &AlgebraSC<F>, e: &[Vec<F::Elem>]) -> Result<SplitReport> {
    let degree = (0..=a.dim())
        .find(|d| d * d >= a.dim())
        .filter(|d| d * d == a.dim())
        .ok_or_else(|| Error::Precondition(format!("dimension {} is not a square", a.dim())))?;
    let sub = Subalgebra::new(a, e)?;
    if !sub.basis().iter().all(|x| in_nucleus(a, x)) {
        return Err(Error::Precondition("E is not contained in the nucleus".into()));
    }
    let idempotent_count = count_primitive_idempotents(sub.algebra())?;
    let nucleus = a.nucleus();
    let e_is_nucleus = nucleus.dim() == sub.dim();
    let nucleus_idempotent_bound = idempotent_bound(nucleus.algebra())?;
    let verdict = if idempotent_count >= degree {
        SplitVerdict::SplitCertified
    } else if nucleus_idempotent_bound.is_some_and(|b| b < degree) {
        SplitVerdict::NotSplitCertified
    } else {
        SplitVerdict::Inconclusive
    };
    Ok(SplitReport {
        degree,
        idempotent_count,
        nucleus_dim: nucleus.dim(),
        e_is_nucleus,
        nucleus_idempotent_bound,
        verdict,
    })
}

/// Maximal number of orthogonal idempotents of an associative `N`, when
/// cheaply known. Commutative: the primitive idempotent count. Otherwise, if
/// the center `Z` is a field and `x ⊗ y ↦ (a ↦ x a y)` has rank
/// `(dim N)^2 / dim Z`, `N` is central simple over `Z`, hence `M_r(Z)` over a
/// finite field, and the bound is `r`.
fn idempotent_bound<F: Field>(n: &AlgebraSC<F>) -> Result<Option<usize>> {
    if n.field().size().is_none() {
        return Ok(None);
    }
    if n.is_commutative() {
        return Ok(Some(frobenius_fixed_space(n)?.len()));
    }
    let center = n.center();
    let z = center.algebra();
    if frobenius_fixed_space(z)?.len() != 1 || nilradical_dim(z)? != 0 {
        return Ok(None);
    }
    let (dim, c) = (n.dim(), z.dim());
    if dim % c != 0 {
        return Ok(None);
    }
    let r2 = dim / c;
    let Some(r) = (1..=r2).find(|r| r * r == r2) else {
        return Ok(None);
    };
    let mut operators = Vec::with_capacity(dim * dim);
    for x in 0..dim {
        for y in 0..dim {
            let mut flat = Vec::with_capacity(dim * dim);
            for j in 0..dim {
                flat.extend(n.mul(&n.mul(&n.basis(x), &n.basis(j)), &n.basis(y)));
            }
            operators.push(flat);
        }
    }
    Ok((span_rank(n.field(), dim * dim, &operators) == dim * r2).then_some(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::cyclic_algebra;
    use crate::etale::{make_cyclic_ext, make_split_etale};
    use crate::exactfield::PrimeField;
    use crate::nalg::{base_field_algebra, matrix_algebra};

    #[test]
    fn quaternion_is_semiassociative_but_not_split() {
        let k = make_cyclic_ext(2, 2).unwrap();
        let a = cyclic_algebra(&k, &k.parse("w").unwrap()).unwrap();
        let e = vec![a.basis(0), a.basis(1)];
        let r = semiassoc_check(&a, &e).unwrap();
        assert!(r.semiassociative);
        assert_eq!(r.faithful_rank, 4);
        assert!(cyclic_module_check(&a, &e, &[1, 0, 1, 0]));
        assert!(!cyclic_module_check(&a, &e, &a.zero()));
        let s = split_certificate(&a, &e).unwrap();
        assert_eq!(s.verdict, SplitVerdict::NotSplitCertified);
        assert_eq!((s.degree, s.idempotent_count), (2, 1));
    }

    #[test]
    fn split_etale_and_matrices_are_split() {
        let k = make_split_etale(2, 2).unwrap();
        let a = cyclic_algebra(&k, &[1, 1]).unwrap();
        let e = vec![a.basis(0), a.basis(1)];
        assert!(semiassoc_check(&a, &e).unwrap().semiassociative);
        assert_eq!(split_certificate(&a, &e).unwrap().verdict, SplitVerdict::SplitCertified);

        let f = PrimeField::new(2).unwrap();
        let m = matrix_algebra(&f, 2);
        let diag = vec![m.basis(0), m.basis(3)];
        assert!(semiassoc_check(&m, &diag).unwrap().semiassociative);
        assert_eq!(split_certificate(&m, &diag).unwrap().verdict, SplitVerdict::SplitCertified);

        let one = base_field_algebra(&f);
        assert_eq!(idempotent_bound(&m).unwrap(), Some(2));
        assert!(semiassoc_check(&one, &[vec![1]]).unwrap().semiassociative);
        assert!(cyclic_module_check(&one, &[vec![1]], &[1]));
    }

    #[test]
    fn non_subalgebra_is_rejected() {
        let f = PrimeField::new(2).unwrap();
        let m = matrix_algebra(&f, 2);
        assert!(semiassoc_check(&m, &[m.basis(1)]).is_err());
        // a non-étale E fails the first condition
        let r = semiassoc_check(&m, &[m.unit().to_vec(), m.basis(1)]).unwrap();
        assert!(!r.etale && !r.semiassociative);
    }

    #[test]
    fn matrix_nucleus_certifies_non_split() {
        use crate::construct::{generalized_cyclic, matrix_ring_over_extension};
        let ring = matrix_ring_over_extension(2, 2, 2).unwrap();
        let k = crate::exactfield::GaloisField::new(2, 2).unwrap();
        let w = crate::exactfield::Field::parse(&k, "w").unwrap();
        let mut d = vec![0; 8];
        d[0..2].copy_from_slice(&w);
        d[6..8].copy_from_slice(&w);
        let g = generalized_cyclic(&ring, &d).unwrap();
        let a = &g.algebra;
        let diag: Vec<Vec<u32>> = [0, 1, 6, 7].iter().map(|&i| a.basis(i)).collect();
        assert!(semiassoc_check(a, &diag).unwrap().semiassociative);
        let s = split_certificate(a, &diag).unwrap();
        assert_eq!((s.degree, s.nucleus_dim, s.idempotent_count), (4, 8, 2));
        assert_eq!(s.nucleus_idempotent_bound, Some(2));
        assert_eq!(s.verdict, SplitVerdict::NotSplitCertified);
    }
}
