use super::{Algebra, HopfAlgebra};
use crate::freemod::{Element, GroupElt, GroupSpec, Pair};
use crate::scalars::Scalar;
use crate::verify::{SamplePlan, SampleRng};

/// Group algebra `𝕂[G]` of a finitely generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebra {
    spec: GroupSpec,
}

pub fn group_algebra(spec: GroupSpec) -> GroupAlgebra {
    GroupAlgebra { spec }
}

/// Finite groups up to this order are enumerated in full by the checkers.
const ENUMERATION_LIMIT: u64 = 64;

impl GroupAlgebra {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// `K_i`, numbered from 1.
    pub fn generator(&self, i: usize) -> GroupElt {
        self.spec.generator_power(i, 1)
    }

    pub fn elements(&self) -> Option<Vec<GroupElt>> {
        if self.spec.free_rank() > 0 {
            return None;
        }
        let order: u64 = self.spec.torsion().iter().map(|&l| l as u64).product();
        if order > ENUMERATION_LIMIT {
            return None;
        }
        let mut out = vec![Vec::new()];
        for &l in self.spec.torsion() {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (0..l as i64).map(move |e| {
                        let mut w = v.clone();
                        w.push(e);
                        w
                    })
                })
                .collect();
        }
        Some(out.into_iter().map(GroupElt).collect())
    }

    pub fn random_elt(&self, rng: &mut SampleRng, plan: &SamplePlan) -> GroupElt {
        let exps = (0..self.spec.rank()).map(|_| plan.exponent(rng)).collect();
        self.spec.reduce(exps)
    }
}

impl<S: Scalar> Algebra<S> for GroupAlgebra {
    type Key = GroupElt;

    fn mul_basis(&self, a: &GroupElt, b: &GroupElt) -> Element<GroupElt, S> {
        Element::basis(self.spec.mul(a, b))
    }

    fn unit(&self) -> Option<Element<GroupElt, S>> {
        Some(Element::basis(self.spec.identity()))
    }

    fn sample_basis_element(&self, rng: &mut SampleRng, plan: &SamplePlan) -> Element<GroupElt, S> {
        Element::basis(self.random_elt(rng, plan))
    }

    fn finite_basis(&self) -> Option<Vec<GroupElt>> {
        self.elements()
    }
}

impl<S: Scalar> HopfAlgebra<S> for GroupAlgebra {
    fn unit_key(&self) -> GroupElt {
        self.spec.identity()
    }

    fn coproduct_basis(&self, k: &GroupElt) -> Element<Pair<GroupElt, GroupElt>, S> {
        Element::basis(Pair(k.clone(), k.clone()))
    }

    fn counit_basis(&self, _: &GroupElt) -> S {
        S::one()
    }

    fn antipode_basis(&self, k: &GroupElt) -> Element<GroupElt, S> {
        Element::basis(self.spec.inverse(k))
    }

    fn sample_key(&self, rng: &mut SampleRng, plan: &SamplePlan) -> GroupElt {
        self.random_elt(rng, plan)
    }

    fn distinguished_keys(&self) -> Vec<GroupElt> {
        let mut out = vec![self.spec.identity()];
        out.extend((1..=self.spec.rank()).map(|i| self.generator(i)));
        out
    }
}

