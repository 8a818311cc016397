use super::{Algebra, HopfAlgebra};
use crate::freemod::{Element, Pair};
use crate::scalars::Scalar;
use crate::verify::{SamplePlan, SampleRng};

/// Negative control: `H` with its antipode replaced by the identity on basis
/// keys. On a group algebra the antipode law fails at any `g ≠ 1`.
#[derive(Debug, Clone)]
pub struct BrokenAntipode<H>(pub H);

impl<S: Scalar, H: HopfAlgebra<S>> Algebra<S> for BrokenAntipode<H> {
    type Key = H::Key;

    fn mul_basis(&self, a: &H::Key, b: &H::Key) -> Element<H::Key, S> {
        self.0.mul_basis(a, b)
    }

    fn unit(&self) -> Option<Element<H::Key, S>> {
        self.0.unit()
    }

    fn sample_basis_element(&self, rng: &mut SampleRng, plan: &SamplePlan) -> Element<H::Key, S> {
        self.0.sample_basis_element(rng, plan)
    }

    fn finite_basis(&self) -> Option<Vec<H::Key>> {
        self.0.finite_basis()
    }
}

impl<S: Scalar, H: HopfAlgebra<S>> HopfAlgebra<S> for BrokenAntipode<H> {
    fn unit_key(&self) -> H::Key {
        self.0.unit_key()
    }

    fn coproduct_basis(&self, k: &H::Key) -> Element<Pair<H::Key, H::Key>, S> {
        self.0.coproduct_basis(k)
    }

    fn counit_basis(&self, k: &H::Key) -> S {
        self.0.counit_basis(k)
    }

    fn antipode_basis(&self, k: &H::Key) -> Element<H::Key, S> {
        Element::basis(k.clone())
    }

    fn sample_key(&self, rng: &mut SampleRng, plan: &SamplePlan) -> H::Key {
        self.0.sample_key(rng, plan)
    }

    fn distinguished_keys(&self) -> Vec<H::Key> {
        self.0.distinguished_keys()
    }
}
