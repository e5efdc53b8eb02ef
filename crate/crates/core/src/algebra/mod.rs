//! Finite effect algebras and q-effect algebras.
//!
//! Elements are addressed by dense indices `0..size()`. Two concrete
//! representations exist: [`EffectAlgebra`]/[`QEffectAlgebra`] store explicit
//! tables, [`PowerAlgebra`] computes direct powers componentwise without
//! materializing them. Every checker in the crate is written against the
//! [`FinitePoset`], [`EffectOps`] and [`QEffect`] traits so it applies to both.

mod classify;
mod ideal;
pub mod library;
mod morphism;
mod order;
mod power;
mod table;
mod validate;

pub use classify::{classify, lattice_oplus, lattice_q_maps, Classification, LatticeWitness};
pub use ideal::{
    check_rdp, check_riesz, enumerate_ideals, generated_filter, generated_ideal, quotient,
    IdealFlavor, IdealOrFilter, QuotientAlgebra, RdpWitness,
};
pub use morphism::{
    check_morphism, check_order_reflecting_family, find_isomorphism, AlgebraMap, FamilyReport,
    MorphismKind, MorphismReport,
};
pub use order::{derive_order, join, meet, OrderRelation};
pub use power::{direct_power, PowerAlgebra, DEFAULT_POWER_CAP};
pub use table::{EffectAlgebra, QEffectAlgebra, RawEffectTable, DEFAULT_VALIDATION_CAP};
pub use validate::{check_q_axioms, validate_q_axioms, Axiom, ValidationReport, Violation};

/// A finite poset whose elements are the indices `0..size()`.
pub trait FinitePoset {
    fn size(&self) -> usize;
    fn leq(&self, a: usize, b: usize) -> bool;
    fn element_name(&self, a: usize) -> String;

    fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }
}

/// Effect-algebra operations over a finite carrier.
pub trait EffectOps: FinitePoset {
    fn zero(&self) -> usize;
    fn one(&self) -> usize;
    /// The partial sum; `None` when undefined.
    fn sum(&self, a: usize, b: usize) -> Option<usize>;
    fn supplement(&self, a: usize) -> usize;

    /// `a · b = (a' + b')'`, defined iff `a' <= b`.
    fn prod(&self, a: usize, b: usize) -> Option<usize> {
        self.sum(self.supplement(a), self.supplement(b))
            .map(|s| self.supplement(s))
    }

    /// `y - x`, defined iff `x <= y`.
    fn diff(&self, x: usize, y: usize) -> Option<usize> {
        self.sum(x, self.supplement(y)).map(|s| self.supplement(s))
    }
}

/// An effect algebra equipped with the unary maps `q` and `d`.
pub trait QEffect: EffectOps {
    fn q(&self, a: usize) -> usize;
    fn d(&self, a: usize) -> usize;
}

impl<T: FinitePoset + ?Sized> FinitePoset for &T {
    fn size(&self) -> usize {
        (**self).size()
    }
    fn leq(&self, a: usize, b: usize) -> bool {
        (**self).leq(a, b)
    }
    fn element_name(&self, a: usize) -> String {
        (**self).element_name(a)
    }
}

impl<T: EffectOps + ?Sized> EffectOps for &T {
    fn zero(&self) -> usize {
        (**self).zero()
    }
    fn one(&self) -> usize {
        (**self).one()
    }
    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        (**self).sum(a, b)
    }
    fn supplement(&self, a: usize) -> usize {
        (**self).supplement(a)
    }
}

impl<T: QEffect + ?Sized> QEffect for &T {
    fn q(&self, a: usize) -> usize {
        (**self).q(a)
    }
    fn d(&self, a: usize) -> usize {
        (**self).d(a)
    }
}

/// A plain finite poset given by an explicit order matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixPoset {
    names: Vec<String>,
    order: Vec<bool>,
}

impl MatrixPoset {
    /// Builds a poset from `leq`; the relation is not checked here, see
    /// [`OrderRelation::is_partial_order`].
    pub fn new(names: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Self {
        let n = names.len();
        let mut order = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                order[a * n + b] = leq(a, b);
            }
        }
        MatrixPoset { names, order }
    }

    pub fn from_poset<P: FinitePoset>(p: &P) -> Self {
        let names = (0..p.size()).map(|a| p.element_name(a)).collect();
        Self::new(names, |a, b| p.leq(a, b))
    }
}

impl FinitePoset for MatrixPoset {
    fn size(&self) -> usize {
        self.names.len()
    }
    fn leq(&self, a: usize, b: usize) -> bool {
        self.order[a * self.names.len() + b]
    }
    fn element_name(&self, a: usize) -> String {
        self.names[a].clone()
    }
}
