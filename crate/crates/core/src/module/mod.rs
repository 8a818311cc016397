//! Hopf module algebras, the coinvariant projections, convolution and Radford
//! pairs.

mod check;
mod radford;

use crate::freemod::{Element, Pair};
use crate::hopf::{Algebra, HopfAlgebra};
use crate::scalars::Scalar;

pub use check::{check_left_hopf_module_algebra, check_right_hopf_module_algebra, IgnoreAction};
pub use radford::{graded_pair, radford_pair, RadfordPair};

/// Basis keys of the Hopf algebra an algebra is defined over.
pub type HKey<M, S> = <<M as OverHopf<S>>::Hopf as Algebra<S>>::Key;

/// An algebra carrying some structure over a Hopf algebra.
pub trait OverHopf<S: Scalar>: Algebra<S> {
    type Hopf: HopfAlgebra<S>;

    fn hopf(&self) -> &Self::Hopf;
}

/// `M` with a right `H`-action and a right `H`-coaction `δ_R`.
pub trait RightHopfModuleAlgebra<S: Scalar>: OverHopf<S> {
    fn right_act_basis(&self, m: &Self::Key, h: &HKey<Self, S>) -> Element<Self::Key, S>;

    fn right_coact_basis(&self, m: &Self::Key) -> Element<Pair<Self::Key, HKey<Self, S>>, S>;

    fn right_act(&self, m: &Element<Self::Key, S>, h: &Element<HKey<Self, S>, S>) -> Element<Self::Key, S> {
        m.bilinear(h, |a, b| self.right_act_basis(a, b))
    }

    fn right_coact(&self, m: &Element<Self::Key, S>) -> Element<Pair<Self::Key, HKey<Self, S>>, S> {
        m.map_linear(|k| self.right_coact_basis(k))
    }
}

/// `M` with a left `H`-action and a left `H`-coaction `δ_L`.
pub trait LeftHopfModuleAlgebra<S: Scalar>: OverHopf<S> {
    fn left_act_basis(&self, h: &HKey<Self, S>, m: &Self::Key) -> Element<Self::Key, S>;

    fn left_coact_basis(&self, m: &Self::Key) -> Element<Pair<HKey<Self, S>, Self::Key>, S>;

    fn left_act(&self, h: &Element<HKey<Self, S>, S>, m: &Element<Self::Key, S>) -> Element<Self::Key, S> {
        h.bilinear(m, |a, b| self.left_act_basis(a, b))
    }

    fn left_coact(&self, m: &Element<Self::Key, S>) -> Element<Pair<HKey<Self, S>, Self::Key>, S> {
        m.map_linear(|k| self.left_coact_basis(k))
    }
}

/// `P_R(m) = Σ m₍₀₎·S(m₍₁₎)`
pub fn p_right<M: RightHopfModuleAlgebra<S> + ?Sized, S: Scalar>(
    m_alg: &M,
    m: &Element<M::Key, S>,
) -> Element<M::Key, S> {
    let h = m_alg.hopf();
    m_alg
        .right_coact(m)
        .map_linear(|Pair(a, b)| m_alg.right_act(&Element::basis(a.clone()), &h.antipode_basis(b)))
}

/// `P_L(m) = Σ S(m₍₋₁₎)·m₍₀₎`
pub fn p_left<M: LeftHopfModuleAlgebra<S> + ?Sized, S: Scalar>(
    m_alg: &M,
    m: &Element<M::Key, S>,
) -> Element<M::Key, S> {
    let h = m_alg.hopf();
    m_alg
        .left_coact(m)
        .map_linear(|Pair(b, a)| m_alg.left_act(&h.antipode_basis(b), &Element::basis(a.clone())))
}

/// `δ_R(m) = m ⊗ 1_H`
pub fn is_right_coinvariant<M: RightHopfModuleAlgebra<S> + ?Sized, S: Scalar>(
    m_alg: &M,
    m: &Element<M::Key, S>,
) -> bool {
    m_alg.right_coact(m) == m.tensor(&m_alg.hopf().one())
}

/// `δ_L(m) = 1_H ⊗ m`
pub fn is_left_coinvariant<M: LeftHopfModuleAlgebra<S> + ?Sized, S: Scalar>(
    m_alg: &M,
    m: &Element<M::Key, S>,
) -> bool {
    m_alg.left_coact(m) == m_alg.hopf().one().tensor(m)
}

type BasisRule<'a, K, S> = Box<dyn Fn(&K) -> Element<K, S> + Send + Sync + 'a>;

/// A linear endomorphism given on basis keys.
pub struct EndMap<'a, K, S> {
    rule: BasisRule<'a, K, S>,
}

impl<'a, K: crate::freemod::BasisKey, S: Scalar> EndMap<'a, K, S> {
    pub fn new(rule: impl Fn(&K) -> Element<K, S> + Send + Sync + 'a) -> Self {
        EndMap { rule: Box::new(rule) }
    }

    pub fn identity() -> Self {
        Self::new(|k| Element::basis(k.clone()))
    }

    pub fn apply_basis(&self, k: &K) -> Element<K, S> {
        (self.rule)(k)
    }

    pub fn apply(&self, x: &Element<K, S>) -> Element<K, S> {
        x.map_linear(|k| (self.rule)(k))
    }
}

/// `(f ⋆ g)(a) = Σ f(a₍₁₎) g(a₍₂₎)`
pub fn convolution<'a, H: HopfAlgebra<S> + ?Sized, S: Scalar>(
    h: &'a H,
    f: EndMap<'a, H::Key, S>,
    g: EndMap<'a, H::Key, S>,
) -> EndMap<'a, H::Key, S> {
    EndMap::new(move |k| {
        h.coproduct_basis(k)
            .map_linear(|Pair(a, b)| h.mul(&f.apply_basis(a), &g.apply_basis(b)))
    })
}

/// `u ∘ ε`
pub fn unit_counit<'a, H: HopfAlgebra<S> + ?Sized, S: Scalar>(h: &'a H) -> EndMap<'a, H::Key, S> {
    EndMap::new(move |k| h.one().scale(&h.counit_basis(k)))
}

/// The antipode as an [`EndMap`].
pub fn antipode_map<'a, H: HopfAlgebra<S> + ?Sized, S: Scalar>(h: &'a H) -> EndMap<'a, H::Key, S> {
    EndMap::new(move |k| h.antipode_basis(k))
}

#[cfg(test)]
mod tests;
