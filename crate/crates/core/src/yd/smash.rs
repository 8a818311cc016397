use super::YetterDrinfeld;
use crate::freemod::{Element, Pair, SmashKey, Tensor};
use crate::hopf::{Algebra, HopfAlgebra};
use crate::module::{HKey, LeftHopfModuleAlgebra, OverHopf, RightHopfModuleAlgebra};
use crate::scalars::Scalar;
use crate::verify::{SamplePlan, SampleRng};

/// The smash product `V#H` with `(v#h)(v'#h') = Σ v(h₍₁₎·v') # h₍₂₎h'`.
///
/// It carries both Hopf module algebra structures: on the right
/// `(v#h)·x = v#hx`, `δ_R(v#h) = Σ (v#h₍₁₎) ⊗ h₍₂₎`; on the left
/// `x·(v#h) = Σ x₍₁₎·v # x₍₂₎h`, `δ_L(v#h) = Σ v₍₋₁₎h₍₁₎ ⊗ (v₍₀₎#h₍₂₎)`.
#[derive(Debug, Clone)]
pub struct Smash<V> {
    v: V,
}

pub fn smash<V>(v: V) -> Smash<V> {
    Smash { v }
}

type Key<V, S> = SmashKey<<V as Algebra<S>>::Key, HKey<V, S>>;

fn to_smash<A: crate::freemod::BasisKey, B: crate::freemod::BasisKey, S: Scalar>(
    e: Element<Pair<A, B>, S>,
) -> Element<SmashKey<A, B>, S> {
    e.map_keys(|Pair(a, b)| SmashKey::new(a.clone(), b.clone()))
}

impl<V> Smash<V> {
    pub fn inner(&self) -> &V {
        &self.v
    }
}

impl<V: YetterDrinfeld<S>, S: Scalar> Algebra<S> for Smash<V> {
    type Key = Key<V, S>;

    fn mul_basis(&self, a: &Key<V, S>, b: &Key<V, S>) -> Element<Key<V, S>, S> {
        let h = self.v.hopf();
        let left = Element::basis(a.v.clone());
        to_smash(h.coproduct_basis(&a.h).map_linear(|Pair(h1, h2)| {
            self.v
                .mul(&left, &self.v.yd_act_basis(h1, &b.v))
                .tensor(&h.mul_basis(h2, &b.h))
        }))
    }

    fn unit(&self) -> Option<Element<Key<V, S>, S>> {
        let u = self.v.unit()?;
        Some(to_smash(u.tensor(&self.v.hopf().one())))
    }

    fn sample_basis_element(&self, rng: &mut SampleRng, plan: &SamplePlan) -> Element<Key<V, S>, S> {
        let v = self.v.sample_basis_element(rng, plan);
        let h = self.v.hopf().sample_key(rng, plan);
        to_smash(v.tensor(&Element::basis(h)))
    }

    fn finite_basis(&self) -> Option<Vec<Key<V, S>>> {
        let vs = self.v.finite_basis()?;
        let hs = self.v.hopf().finite_basis()?;
        Some(vs.iter().flat_map(|v| hs.iter().map(move |h| SmashKey::new(v.clone(), h.clone()))).collect())
    }
}

impl<V: YetterDrinfeld<S>, S: Scalar> OverHopf<S> for Smash<V> {
    type Hopf = V::Hopf;

    fn hopf(&self) -> &V::Hopf {
        self.v.hopf()
    }
}

impl<V: YetterDrinfeld<S>, S: Scalar> RightHopfModuleAlgebra<S> for Smash<V> {
    fn right_act_basis(&self, m: &Key<V, S>, x: &HKey<V, S>) -> Element<Key<V, S>, S> {
        to_smash(Element::basis(m.v.clone()).tensor(&self.hopf().mul_basis(&m.h, x)))
    }

    fn right_coact_basis(&self, m: &Key<V, S>) -> Element<Pair<Key<V, S>, HKey<V, S>>, S> {
        self.hopf()
            .coproduct_basis(&m.h)
            .map_keys(|Pair(h1, h2)| Pair(SmashKey::new(m.v.clone(), h1.clone()), h2.clone()))
    }
}

impl<V: YetterDrinfeld<S>, S: Scalar> LeftHopfModuleAlgebra<S> for Smash<V> {
    fn left_act_basis(&self, x: &HKey<V, S>, m: &Key<V, S>) -> Element<Key<V, S>, S> {
        let h = self.hopf();
        to_smash(h.coproduct_basis(x).map_linear(|Pair(x1, x2)| {
            self.v.yd_act_basis(x1, &m.v).tensor(&h.mul_basis(x2, &m.h))
        }))
    }

    fn left_coact_basis(&self, m: &Key<V, S>) -> Element<Pair<HKey<V, S>, Key<V, S>>, S> {
        let h = self.hopf();
        self.v.yd_coact_basis(&m.v).bilinear(&h.coproduct_basis(&m.h), |Pair(v1, v0), Pair(h1, h2)| {
            h.mul_basis(v1, h1)
                .map_keys(|k| Pair(k.clone(), SmashKey::new(v0.clone(), h2.clone())))
        })
    }
}

/// Closed form of `P_R` on a smash product: `v#h ↦ ε(h)·(v#1)`.
pub fn smash_pr_closed<V: YetterDrinfeld<S>, S: Scalar>(
    s: &Smash<V>,
    m: &Element<Key<V, S>, S>,
) -> Element<Key<V, S>, S> {
    let h = s.hopf();
    m.map_linear(|k| Element::monomial(SmashKey::new(k.v.clone(), h.unit_key()), h.counit_basis(&k.h)))
}

/// Closed form of `P_L` on a smash product:
/// `v#h ↦ Σ S(v₍₋₁₎h₍₂₎)·v₍₀₎ # S(v₍₋₂₎h₍₁₎)h₍₃₎`.
pub fn smash_pl_closed<V: YetterDrinfeld<S>, S: Scalar>(
    s: &Smash<V>,
    m: &Element<Key<V, S>, S>,
) -> Element<Key<V, S>, S> {
    let h = s.hopf();
    let v_alg = s.inner();
    m.map_linear(|k| {
        let hs = h.iterated_coproduct(&k.h, 3);
        v_alg.yd_coact2(&k.v).bilinear(&hs, |Pair(Pair(a, b), v0), Tensor(t)| {
            let left = v_alg.yd_act(&h.antipode(&h.mul_basis(b, &t[1])), &Element::basis(v0.clone()));
            let right = h.mul(&h.antipode(&h.mul_basis(a, &t[0])), &Element::basis(t[2].clone()));
            to_smash(left.tensor(&right))
        })
    })
}
