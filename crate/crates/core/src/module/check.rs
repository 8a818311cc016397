use super::{HKey, LeftHopfModuleAlgebra, OverHopf, RightHopfModuleAlgebra};
use crate::freemod::{Element, Pair};
use crate::hopf::{random_element, tensor_mul, Algebra, HopfAlgebra};
use crate::scalars::Scalar;
use crate::verify::{compare, witness, ReportBuilder, SamplePlan, SampleRng, VerificationReport};

/// Two elements of `M` and two of `H`.
struct Sample<MK, HK, S> {
    m: Element<MK, S>,
    n: Element<MK, S>,
    h: Element<HK, S>,
    k: Element<HK, S>,
}

/// The unit of `M` (when present) and the distinguished keys of `H` come
/// first.
fn samples<M: OverHopf<S> + ?Sized, S: Scalar>(
    m_alg: &M,
    rng: &mut SampleRng,
    plan: &SamplePlan,
) -> Vec<Sample<M::Key, HKey<M, S>, S>> {
    let h = m_alg.hopf();
    let hs: Vec<_> = h.distinguished_keys().into_iter().map(Element::basis).collect();
    let count = plan.samples.max(hs.len());
    (0..count)
        .map(|t| {
            let m = match (t, m_alg.unit()) {
                (0, Some(u)) => u,
                _ => random_element(m_alg, rng, plan),
            };
            let n = random_element(m_alg, rng, plan);
            let hh = hs.get(t).cloned().unwrap_or_else(|| random_element(h, rng, plan));
            let k = random_element(h, rng, plan);
            Sample { m, n, h: hh, k }
        })
        .collect()
}

/// Exact check of the right Hopf module algebra axioms: the action is unital
/// and associative, `δ_R` is coassociative and counital,
/// `δ_R(m·h) = δ_R(m)Δ(h)`, `(mm')·h = m(m'·h)` and
/// `δ_R(mm') = Σ m₍₀₎m'₍₀₎ ⊗ m₍₁₎m'₍₁₎`.
pub fn check_right_hopf_module_algebra<M: RightHopfModuleAlgebra<S> + ?Sized, S: Scalar>(
    m_alg: &M,
    plan: &SamplePlan,
) -> VerificationReport {
    let h = m_alg.hopf();
    let mut rng = plan.rng(2);
    let items = samples(m_alg, &mut rng, plan);
    let one = h.one();
    let mut rb = ReportBuilder::new("check-hopf-module", plan);

    rb.check("right action m·1 = m", &items, |s| {
        compare(&m_alg.right_act(&s.m, &one), &s.m, witness![("m", s.m)])
    });
    rb.check("right action (m·h)·h' = m·(hh')", &items, |s| {
        compare(
            &m_alg.right_act(&m_alg.right_act(&s.m, &s.h), &s.k),
            &m_alg.right_act(&s.m, &h.mul(&s.h, &s.k)),
            witness![("m", s.m), ("h", s.h), ("h'", s.k)],
        )
    });
    rb.check("coassociativity (δ_R⊗id)δ_R = (id⊗Δ)δ_R", &items, |s| {
        let d = m_alg.right_coact(&s.m);
        let lhs = d.map_linear(|Pair(a, b)| {
            m_alg.right_coact_basis(a).map_keys(|p| Pair(p.clone(), b.clone()))
        });
        let rhs = d.map_linear(|Pair(a, b)| {
            h.coproduct_basis(b).map_keys(|Pair(b1, b2)| Pair(Pair(a.clone(), b1.clone()), b2.clone()))
        });
        compare(&lhs, &rhs, witness![("m", s.m)])
    });
    rb.check("counit (id⊗ε)δ_R(m) = m", &items, |s| {
        let lhs = m_alg
            .right_coact(&s.m)
            .map_linear(|Pair(a, b)| Element::monomial(a.clone(), h.counit_basis(b)));
        compare(&lhs, &s.m, witness![("m", s.m)])
    });
    rb.check("Hopf module δ_R(m·h) = δ_R(m)Δ(h)", &items, |s| {
        let lhs = m_alg.right_coact(&m_alg.right_act(&s.m, &s.h));
        let rhs = m_alg.right_coact(&s.m).bilinear(&h.coproduct(&s.h), |Pair(m0, m1), Pair(h1, h2)| {
            m_alg.right_act_basis(m0, h1).tensor(&h.mul_basis(m1, h2))
        });
        compare(&lhs, &rhs, witness![("m", s.m), ("h", s.h)])
    });
    rb.check("module algebra (mm')·h = m(m'·h)", &items, |s| {
        compare(
            &m_alg.right_act(&m_alg.mul(&s.m, &s.n), &s.h),
            &m_alg.mul(&s.m, &m_alg.right_act(&s.n, &s.h)),
            witness![("m", s.m), ("m'", s.n), ("h", s.h)],
        )
    });
    rb.check("comodule algebra δ_R(mm') = δ_R(m)δ_R(m')", &items, |s| {
        compare(
            &m_alg.right_coact(&m_alg.mul(&s.m, &s.n)),
            &tensor_mul(m_alg, h, &m_alg.right_coact(&s.m), &m_alg.right_coact(&s.n)),
            witness![("m", s.m), ("m'", s.n)],
        )
    });
    rb.finish()
}

/// Left mirror of [`check_right_hopf_module_algebra`], with
/// `δ_L(h·m) = Δ(h)δ_L(m)` and `h·(mm') = (h·m)m'`.
pub fn check_left_hopf_module_algebra<M: LeftHopfModuleAlgebra<S> + ?Sized, S: Scalar>(
    m_alg: &M,
    plan: &SamplePlan,
) -> VerificationReport {
    let h = m_alg.hopf();
    let mut rng = plan.rng(3);
    let items = samples(m_alg, &mut rng, plan);
    let one = h.one();
    let mut rb = ReportBuilder::new("check-hopf-module", plan);

    rb.check("left action 1·m = m", &items, |s| {
        compare(&m_alg.left_act(&one, &s.m), &s.m, witness![("m", s.m)])
    });
    rb.check("left action h·(h'·m) = (hh')·m", &items, |s| {
        compare(
            &m_alg.left_act(&s.h, &m_alg.left_act(&s.k, &s.m)),
            &m_alg.left_act(&h.mul(&s.h, &s.k), &s.m),
            witness![("h", s.h), ("h'", s.k), ("m", s.m)],
        )
    });
    rb.check("coassociativity (id⊗δ_L)δ_L = (Δ⊗id)δ_L", &items, |s| {
        let d = m_alg.left_coact(&s.m);
        let lhs = d.map_linear(|Pair(b, a)| {
            m_alg.left_coact_basis(a).map_keys(|p| Pair(b.clone(), p.clone()))
        });
        let rhs = d.map_linear(|Pair(b, a)| {
            h.coproduct_basis(b).map_keys(|Pair(b1, b2)| Pair(b1.clone(), Pair(b2.clone(), a.clone())))
        });
        compare(&lhs, &rhs, witness![("m", s.m)])
    });
    rb.check("counit (ε⊗id)δ_L(m) = m", &items, |s| {
        let lhs = m_alg
            .left_coact(&s.m)
            .map_linear(|Pair(b, a)| Element::monomial(a.clone(), h.counit_basis(b)));
        compare(&lhs, &s.m, witness![("m", s.m)])
    });
    rb.check("Hopf module δ_L(h·m) = Δ(h)δ_L(m)", &items, |s| {
        let lhs = m_alg.left_coact(&m_alg.left_act(&s.h, &s.m));
        let rhs = h.coproduct(&s.h).bilinear(&m_alg.left_coact(&s.m), |Pair(h1, h2), Pair(m1, m0)| {
            h.mul_basis(h1, m1).tensor(&m_alg.left_act_basis(h2, m0))
        });
        compare(&lhs, &rhs, witness![("h", s.h), ("m", s.m)])
    });
    rb.check("module algebra h·(mm') = (h·m)m'", &items, |s| {
        compare(
            &m_alg.left_act(&s.h, &m_alg.mul(&s.m, &s.n)),
            &m_alg.mul(&m_alg.left_act(&s.h, &s.m), &s.n),
            witness![("h", s.h), ("m", s.m), ("m'", s.n)],
        )
    });
    rb.check("comodule algebra δ_L(mm') = δ_L(m)δ_L(m')", &items, |s| {
        compare(
            &m_alg.left_coact(&m_alg.mul(&s.m, &s.n)),
            &tensor_mul(h, m_alg, &m_alg.left_coact(&s.m), &m_alg.left_coact(&s.n)),
            witness![("m", s.m), ("m'", s.n)],
        )
    });
    rb.finish()
}

/// Negative control: the right action replaced by `m·h := m`.
pub struct IgnoreAction<M>(pub M);

impl<M: Algebra<S>, S: Scalar> Algebra<S> for IgnoreAction<M> {
    type Key = M::Key;

    fn mul_basis(&self, a: &M::Key, b: &M::Key) -> Element<M::Key, S> {
        self.0.mul_basis(a, b)
    }

    fn unit(&self) -> Option<Element<M::Key, S>> {
        self.0.unit()
    }

    fn sample_basis_element(&self, rng: &mut SampleRng, plan: &SamplePlan) -> Element<M::Key, S> {
        self.0.sample_basis_element(rng, plan)
    }

    fn finite_basis(&self) -> Option<Vec<M::Key>> {
        self.0.finite_basis()
    }
}

impl<M: OverHopf<S>, S: Scalar> OverHopf<S> for IgnoreAction<M> {
    type Hopf = M::Hopf;

    fn hopf(&self) -> &M::Hopf {
        self.0.hopf()
    }
}

impl<M: RightHopfModuleAlgebra<S>, S: Scalar> RightHopfModuleAlgebra<S> for IgnoreAction<M> {
    fn right_act_basis(&self, m: &M::Key, _: &HKey<M, S>) -> Element<M::Key, S> {
        Element::basis(m.clone())
    }

    fn right_coact_basis(&self, m: &M::Key) -> Element<Pair<M::Key, HKey<M, S>>, S> {
        self.0.right_coact_basis(m)
    }
}
