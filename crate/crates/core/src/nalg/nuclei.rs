use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::AlgebraSC;
use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::exactla::{echelon_basis, echelon_coords, pivot_columns, refine, unit_vec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NucleusKind {
    Left,
    Middle,
    Right,
    Nucleus,
    Center,
}

impl NucleusKind {
    pub const ALL: [NucleusKind; 5] = [
        NucleusKind::Left,
        NucleusKind::Middle,
        NucleusKind::Right,
        NucleusKind::Nucleus,
        NucleusKind::Center,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NucleusKind::Left => "left nucleus",
            NucleusKind::Middle => "middle nucleus",
            NucleusKind::Right => "right nucleus",
            NucleusKind::Nucleus => "nucleus",
            NucleusKind::Center => "center",
        }
    }
}

/// A unital subalgebra, stored as an echelon basis in parent coordinates
/// together with the induced structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct Subalgebra<F: Field> {
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    algebra: AlgebraSC<F>,
}

impl<F: Field> Subalgebra<F> {
    /// The span of `vectors`, which must be closed under multiplication and
    /// contain the parent unit.
    pub fn new(parent: &AlgebraSC<F>, vectors: &[Vec<F::Elem>]) -> Result<Self> {
        let f = parent.field();
        if let Some(v) = vectors.iter().find(|v| v.len() != parent.dim()) {
            return Err(Error::DimensionMismatch {
                expected: parent.dim(),
                got: v.len(),
            });
        }
        let basis = echelon_basis(f, parent.dim(), vectors);
        let pivots = pivot_columns(f, &basis);
        let r = basis.len();
        if r == 0 {
            return Err(Error::Validation("subalgebra must contain the unit".into()));
        }
        let unit = echelon_coords(f, &basis, &pivots, parent.unit())
            .ok_or_else(|| Error::Validation("subspace does not contain the unit".into()))?;
        let mut sc = Vec::with_capacity(r * r * r);
        for a in &basis {
            for b in &basis {
                let c = echelon_coords(f, &basis, &pivots, &parent.mul(a, b)).ok_or_else(|| {
                    Error::Validation("subspace is not closed under multiplication".into())
                })?;
                sc.extend(c);
            }
        }
        let algebra = AlgebraSC::new(f, r, sc, unit)?;
        Ok(Subalgebra {
            basis,
            pivots,
            algebra,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Echelon basis in parent coordinates.
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    /// The induced algebra on [`Self::basis`].
    pub fn algebra(&self) -> &AlgebraSC<F> {
        &self.algebra
    }

    pub fn coords(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        echelon_coords(self.algebra.field(), &self.basis, &self.pivots, v)
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_all(&self, vectors: &[Vec<F::Elem>]) -> bool {
        vectors.iter().all(|v| self.contains(v))
    }

    /// Parent coordinates of an element given in subalgebra coordinates.
    pub fn embed(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.algebra.field();
        let n = self.basis.first().map_or(0, |b| b.len());
        let mut out = vec![f.zero(); n];
        for (c, b) in coords.iter().zip(&self.basis) {
            crate::exactla::axpy(f, &mut out, c, b);
        }
        out
    }

    /// Equality as subspaces of the parent.
    pub fn same_subspace(&self, other: &[Vec<F::Elem>]) -> bool {
        let f = self.algebra.field();
        let n = self.basis[0].len();
        echelon_basis(f, n, other) == self.basis
    }
}

type Elem<F> = <F as Field>::Elem;

impl<F: Field> AlgebraSC<F> {
    /// Runs one round of linear conditions per basis index `i`, shrinking the
    /// candidate space after each round.
    fn refine_space(
        &self,
        conditions: impl Fn(&[Elem<F>], usize) -> Vec<Elem<F>> + Sync,
    ) -> Vec<Vec<Elem<F>>> {
        let f = self.field();
        let n = self.dim();
        let mut space: Vec<Vec<Elem<F>>> = (0..n).map(|i| unit_vec(f, n, i)).collect();
        for i in 0..n {
            if space.len() <= 1 {
                break;
            }
            let images: Vec<Vec<Elem<F>>> = space.par_iter().map(|v| conditions(v, i)).collect();
            space = refine(f, &space, &images);
        }
        echelon_basis(f, n, &space)
    }

    fn left_conditions(&self, v: &[Elem<F>], i: usize, out: &mut Vec<Elem<F>>) {
        // (v b_i) b_j - v (b_i b_j)
        let n = self.dim();
        let u = self.mul_basis_right(v, i);
        let vb: Vec<_> = (0..n).map(|k| self.mul_basis_right(v, k)).collect();
        for j in 0..n {
            let mut d = self.mul_basis_right(&u, j);
            for (k, c) in self.basis_product(i, j) {
                let f = self.field();
                for (s, x) in d.iter_mut().zip(&vb[*k]) {
                    *s = f.sub(s, &f.mul(c, x));
                }
            }
            out.extend(d);
        }
    }

    fn middle_conditions(&self, v: &[Elem<F>], i: usize, out: &mut Vec<Elem<F>>) {
        // (b_i v) b_j - b_i (v b_j)
        let n = self.dim();
        let a = self.mul_basis_left(i, v);
        for j in 0..n {
            let lhs = self.mul_basis_right(&a, j);
            let rhs = self.mul_basis_left(i, &self.mul_basis_right(v, j));
            out.extend(self.sub(&lhs, &rhs));
        }
    }

    fn right_conditions(&self, v: &[Elem<F>], i: usize, out: &mut Vec<Elem<F>>) {
        // (b_i b_j) v - b_i (b_j v)
        let n = self.dim();
        let bv: Vec<_> = (0..n).map(|k| self.mul_basis_left(k, v)).collect();
        let f = self.field();
        for j in 0..n {
            let mut d = self.mul_basis_left(i, &bv[j]);
            for s in d.iter_mut() {
                *s = f.neg(s);
            }
            for (k, c) in self.basis_product(i, j) {
                for (s, x) in d.iter_mut().zip(&bv[*k]) {
                    *s = f.add(s, &f.mul(c, x));
                }
            }
            out.extend(d);
        }
    }

    fn commuting_conditions(&self, v: &[Elem<F>], i: usize, out: &mut Vec<Elem<F>>) {
        out.extend(self.sub(&self.mul_basis_right(v, i), &self.mul_basis_left(i, v)));
    }

    /// Echelon basis of the requested nucleus (or the center).
    pub fn nucleus_space(&self, kind: NucleusKind) -> Vec<Vec<Elem<F>>> {
        self.refine_space(|v, i| {
            let mut out = Vec::new();
            match kind {
                NucleusKind::Left => self.left_conditions(v, i, &mut out),
                NucleusKind::Middle => self.middle_conditions(v, i, &mut out),
                NucleusKind::Right => self.right_conditions(v, i, &mut out),
                NucleusKind::Nucleus | NucleusKind::Center => {
                    self.left_conditions(v, i, &mut out);
                    self.middle_conditions(v, i, &mut out);
                    self.right_conditions(v, i, &mut out);
                    if kind == NucleusKind::Center {
                        self.commuting_conditions(v, i, &mut out);
                    }
                }
            }
            out
        })
    }

    pub fn nucleus_of(&self, kind: NucleusKind) -> Subalgebra<F> {
        Subalgebra::new(self, &self.nucleus_space(kind)).expect("nuclei are unital subalgebras")
    }

    /// `Nuc_l(A) = {x : [x, A, A] = 0}`.
    pub fn nucleus_left(&self) -> Subalgebra<F> {
        self.nucleus_of(NucleusKind::Left)
    }

    /// `Nuc_m(A) = {x : [A, x, A] = 0}`.
    pub fn nucleus_middle(&self) -> Subalgebra<F> {
        self.nucleus_of(NucleusKind::Middle)
    }

    /// `Nuc_r(A) = {x : [A, A, x] = 0}`.
    pub fn nucleus_right(&self) -> Subalgebra<F> {
        self.nucleus_of(NucleusKind::Right)
    }

    pub fn nucleus(&self) -> Subalgebra<F> {
        self.nucleus_of(NucleusKind::Nucleus)
    }

    /// Elements of the nucleus commuting with everything.
    pub fn center(&self) -> Subalgebra<F> {
        self.nucleus_of(NucleusKind::Center)
    }

    /// The subspace `{x : x b_i = b_i x for all i}`.
    pub fn commutant_space(&self) -> Vec<Vec<Elem<F>>> {
        self.refine_space(|v, i| {
            let mut out = Vec::new();
            self.commuting_conditions(v, i, &mut out);
            out
        })
    }
}
