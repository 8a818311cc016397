//! Yetter-Drinfeld module algebras, smash products and the adjoint structure.

mod adjoint;
mod smash;

use crate::freemod::{Element, Pair};
use crate::hopf::{random_element, tensor_mul, Algebra, HopfAlgebra};
use crate::module::{HKey, OverHopf};
use crate::scalars::Scalar;
use crate::verify::{compare, witness, ReportBuilder, SamplePlan, VerificationReport};

pub use adjoint::{hsmash_pl_closed, AdjointYd};
pub use smash::{smash, smash_pl_closed, smash_pr_closed, Smash};

/// An algebra `V` in the category of Yetter-Drinfeld modules over `H`: a left
/// `H`-action `h·v` and a left coaction `ρ(v) = Σ v₍₋₁₎ ⊗ v₍₀₎`.
pub trait YetterDrinfeld<S: Scalar>: OverHopf<S> {
    fn yd_act_basis(&self, h: &HKey<Self, S>, v: &Self::Key) -> Element<Self::Key, S>;

    fn yd_coact_basis(&self, v: &Self::Key) -> Element<Pair<HKey<Self, S>, Self::Key>, S>;

    fn yd_act(&self, h: &Element<HKey<Self, S>, S>, v: &Element<Self::Key, S>) -> Element<Self::Key, S> {
        h.bilinear(v, |a, b| self.yd_act_basis(a, b))
    }

    fn yd_coact(&self, v: &Element<Self::Key, S>) -> Element<Pair<HKey<Self, S>, Self::Key>, S> {
        v.map_linear(|k| self.yd_coact_basis(k))
    }

    /// `Σ v₍₋₂₎ ⊗ v₍₋₁₎ ⊗ v₍₀₎`, as `ρ` followed by `Δ` on the `H` leg. Debug
    /// builds also compute `(id⊗ρ)ρ` and assert equality.
    #[allow(clippy::type_complexity)]
    fn yd_coact2(&self, v: &Self::Key) -> Element<Pair<Pair<HKey<Self, S>, HKey<Self, S>>, Self::Key>, S> {
        let h = self.hopf();
        let rho = self.yd_coact_basis(v);
        let out = rho.map_linear(|Pair(a, w)| {
            h.coproduct_basis(a).map_keys(|p| Pair(p.clone(), w.clone()))
        });
        if cfg!(debug_assertions) {
            let other = rho.map_linear(|Pair(a, w)| {
                self.yd_coact_basis(w).map_keys(|Pair(b, u)| Pair(Pair(a.clone(), b.clone()), u.clone()))
            });
            assert_eq!(out, other, "coaction is not coassociative at {v}");
        }
        out
    }
}

/// Exact check of the Yetter-Drinfeld algebra axioms on sampled pairs:
/// module and comodule laws, the Yetter-Drinfeld condition
/// `Σ h₍₁₎v₍₋₁₎ ⊗ h₍₂₎·v₍₀₎ = Σ (h₍₁₎·v)₍₋₁₎h₍₂₎ ⊗ (h₍₁₎·v)₍₀₎`, and the
/// module-algebra and comodule-algebra laws of the product.
pub fn yd_check<V: YetterDrinfeld<S> + ?Sized, S: Scalar>(v_alg: &V, plan: &SamplePlan) -> VerificationReport {
    let h = v_alg.hopf();
    let mut rng = plan.rng(6);
    let hs: Vec<_> = h.distinguished_keys().into_iter().map(Element::basis).collect();
    let count = plan.samples.max(hs.len());
    let items: Vec<_> = (0..count)
        .map(|t| {
            let x = hs.get(t).cloned().unwrap_or_else(|| random_element(h, &mut rng, plan));
            let y = random_element(h, &mut rng, plan);
            let v = random_element(v_alg, &mut rng, plan);
            let w = random_element(v_alg, &mut rng, plan);
            (x, y, v, w)
        })
        .collect();
    let one = h.one();
    let mut rb = ReportBuilder::new("check-yd", plan);

    rb.check("action 1·v = v and x·(y·v) = (xy)·v", &items, |(x, y, v, _)| {
        compare(&v_alg.yd_act(&one, v), v, witness![("v", v)]).or_else(|| {
            compare(
                &v_alg.yd_act(x, &v_alg.yd_act(y, v)),
                &v_alg.yd_act(&h.mul(x, y), v),
                witness![("h", x), ("h'", y), ("v", v)],
            )
        })
    });
    rb.check("coaction (Δ⊗id)ρ = (id⊗ρ)ρ and (ε⊗id)ρ = id", &items, |(_, _, v, _)| {
        let rho = v_alg.yd_coact(v);
        let lhs = rho.map_linear(|Pair(a, w)| {
            h.coproduct_basis(a).map_keys(|p| Pair(p.clone(), w.clone()))
        });
        let rhs = rho.map_linear(|Pair(a, w)| {
            v_alg.yd_coact_basis(w).map_keys(|Pair(b, u)| Pair(Pair(a.clone(), b.clone()), u.clone()))
        });
        let counit = rho.map_linear(|Pair(a, w)| Element::monomial(w.clone(), h.counit_basis(a)));
        compare(&lhs, &rhs, witness![("v", v)]).or_else(|| compare(&counit, v, witness![("v", v)]))
    });
    rb.check("Yetter-Drinfeld condition", &items, |(x, _, v, _)| {
        let dx = h.coproduct(x);
        let lhs = dx.bilinear(&v_alg.yd_coact(v), |Pair(h1, h2), Pair(v1, v0)| {
            h.mul_basis(h1, v1).tensor(&v_alg.yd_act_basis(h2, v0))
        });
        let rhs = v.map_linear(|k| {
            dx.map_linear(|Pair(h1, h2)| {
                v_alg
                    .yd_coact(&v_alg.yd_act_basis(h1, k))
                    .map_linear(|Pair(w1, w0)| h.mul_basis(w1, h2).tensor(&Element::basis(w0.clone())))
            })
        });
        compare(&lhs, &rhs, witness![("h", x), ("v", v)])
    });
    rb.check("module algebra h·(vw) = Σ (h₍₁₎·v)(h₍₂₎·w)", &items, |(x, _, v, w)| {
        let lhs = v_alg.yd_act(x, &v_alg.mul(v, w));
        let rhs = h.coproduct(x).map_linear(|Pair(h1, h2)| {
            v_alg.mul(&v_alg.yd_act(&Element::basis(h1.clone()), v), &v_alg.yd_act(&Element::basis(h2.clone()), w))
        });
        compare(&lhs, &rhs, witness![("h", x), ("v", v), ("w", w)])
    });
    rb.check("comodule algebra ρ(vw) = Σ v₍₋₁₎w₍₋₁₎ ⊗ v₍₀₎w₍₀₎", &items, |(_, _, v, w)| {
        compare(
            &v_alg.yd_coact(&v_alg.mul(v, w)),
            &tensor_mul(h, v_alg, &v_alg.yd_coact(v), &v_alg.yd_coact(w)),
            witness![("v", v), ("w", w)],
        )
    });
    rb.finish()
}


#[cfg(test)]
mod tests;
