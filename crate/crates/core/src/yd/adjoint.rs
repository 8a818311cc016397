use super::{Smash, YetterDrinfeld};
use crate::freemod::{Element, Pair, SmashKey, Tensor};
use crate::hopf::{Algebra, HopfAlgebra};
use crate::module::OverHopf;
use crate::scalars::Scalar;
use crate::verify::{SamplePlan, SampleRng};

/// `H` as an algebra in its own Yetter-Drinfeld category: the adjoint action
/// `x·h = Σ x₍₁₎ h S(x₍₂₎)` and the coaction `ρ = Δ`.
#[derive(Debug, Clone)]
pub struct AdjointYd<H>(pub H);

impl<H: HopfAlgebra<S>, S: Scalar> Algebra<S> for AdjointYd<H> {
    type Key = H::Key;

    fn mul_basis(&self, a: &H::Key, b: &H::Key) -> Element<H::Key, S> {
        self.0.mul_basis(a, b)
    }

    fn unit(&self) -> Option<Element<H::Key, S>> {
        Some(self.0.one())
    }

    fn sample_basis_element(&self, rng: &mut SampleRng, plan: &SamplePlan) -> Element<H::Key, S> {
        Element::basis(self.0.sample_key(rng, plan))
    }

    fn finite_basis(&self) -> Option<Vec<H::Key>> {
        self.0.finite_basis()
    }
}

impl<H: HopfAlgebra<S>, S: Scalar> OverHopf<S> for AdjointYd<H> {
    type Hopf = H;

    fn hopf(&self) -> &H {
        &self.0
    }
}

impl<H: HopfAlgebra<S>, S: Scalar> YetterDrinfeld<S> for AdjointYd<H> {
    fn yd_act_basis(&self, x: &H::Key, v: &H::Key) -> Element<H::Key, S> {
        let h = &self.0;
        let v = Element::basis(v.clone());
        h.coproduct_basis(x)
            .map_linear(|Pair(x1, x2)| h.mul(&h.mul(&Element::basis(x1.clone()), &v), &h.antipode_basis(x2)))
    }

    fn yd_coact_basis(&self, v: &H::Key) -> Element<Pair<H::Key, H::Key>, S> {
        self.0.coproduct_basis(v)
    }
}

/// Closed form of `P_L` on `H#H` with the adjoint structure:
/// `h#h' ↦ Σ S(S(h₍₂₎h'₍₂₎)h'₍₃₎) # S(h₍₁₎h'₍₁₎)h'₍₄₎`.
pub fn hsmash_pl_closed<H: HopfAlgebra<S>, S: Scalar>(
    s: &Smash<AdjointYd<H>>,
    m: &Element<SmashKey<H::Key, H::Key>, S>,
) -> Element<SmashKey<H::Key, H::Key>, S> {
    let h = &s.inner().0;
    m.map_linear(|k| {
        let a = h.coproduct_basis(&k.v);
        let b = h.iterated_coproduct(&k.h, 4);
        a.bilinear(&b, |Pair(h1, h2), Tensor(t)| {
            let left = h.antipode(&h.mul(&h.antipode(&h.mul_basis(h2, &t[1])), &Element::basis(t[2].clone())));
            let right = h.mul(&h.antipode(&h.mul_basis(h1, &t[0])), &Element::basis(t[3].clone()));
            left.tensor(&right).map_keys(|Pair(x, y)| SmashKey::new(x.clone(), y.clone()))
        })
    })
}
