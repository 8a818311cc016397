//! Hopf algebras given by rules on basis keys, the shipped instances, and the
//! axiom checker.
//!
//! Structures are never materialized as tables: each rule is evaluated on
//! demand and extended (bi)linearly, so infinite-dimensional group algebras
//! cost nothing beyond the support of the elements involved.

mod binomial;
mod corrupted;
mod group;
mod sweedler;

use crate::freemod::{BasisKey, Element, Pair, Tensor};
use crate::scalars::Scalar;
use crate::verify::{
    compare, random_combination, witness, ReportBuilder, SamplePlan, SampleRng,
    VerificationReport,
};

pub use binomial::{binomial_fixture, BinomialHopf, XPow};
pub use corrupted::BrokenAntipode;
pub use group::{group_algebra, GroupAlgebra};
pub use sweedler::{sweedler_fixture, SweedlerHopf, SweedlerKey};

/// An associative algebra, not necessarily unital, given by its product on
/// basis keys.
pub trait Algebra<S: Scalar>: Send + Sync {
    type Key: BasisKey;

    fn mul_basis(&self, a: &Self::Key, b: &Self::Key) -> Element<Self::Key, S>;

    fn unit(&self) -> Option<Element<Self::Key, S>> {
        None
    }

    fn mul(&self, x: &Element<Self::Key, S>, y: &Element<Self::Key, S>) -> Element<Self::Key, S> {
        x.bilinear(y, |a, b| self.mul_basis(a, b))
    }

    /// One "basis-like" element for random sampling. Usually a single key;
    /// subalgebras spanned by non-basis vectors return such a vector.
    fn sample_basis_element(&self, rng: &mut SampleRng, plan: &SamplePlan) -> Element<Self::Key, S>;

    /// The whole basis, when it is finite and small enough to enumerate.
    fn finite_basis(&self) -> Option<Vec<Self::Key>> {
        None
    }
}

/// A Hopf algebra `(H, Δ, ε, S)` given by rules on basis keys.
pub trait HopfAlgebra<S: Scalar>: Algebra<S> {
    fn unit_key(&self) -> Self::Key;

    fn coproduct_basis(&self, k: &Self::Key) -> Element<Pair<Self::Key, Self::Key>, S>;

    fn counit_basis(&self, k: &Self::Key) -> S;

    fn antipode_basis(&self, k: &Self::Key) -> Element<Self::Key, S>;

    fn sample_key(&self, rng: &mut SampleRng, plan: &SamplePlan) -> Self::Key;

    /// Keys worth checking before random samples, e.g. the generators.
    fn distinguished_keys(&self) -> Vec<Self::Key> {
        vec![self.unit_key()]
    }

    fn one(&self) -> Element<Self::Key, S> {
        Element::basis(self.unit_key())
    }

    fn coproduct(&self, x: &Element<Self::Key, S>) -> Element<Pair<Self::Key, Self::Key>, S> {
        x.map_linear(|k| self.coproduct_basis(k))
    }

    fn counit(&self, x: &Element<Self::Key, S>) -> S {
        x.iter().fold(S::zero(), |acc, (k, c)| acc.add_ref(&c.mul_ref(&self.counit_basis(k))))
    }

    fn antipode(&self, x: &Element<Self::Key, S>) -> Element<Self::Key, S> {
        x.map_linear(|k| self.antipode_basis(k))
    }

    /// `Δ^{(n-1)}(k)` as an `n`-fold tensor, coassociativity assumed: the last
    /// leg is split repeatedly.
    fn iterated_coproduct(&self, k: &Self::Key, n: usize) -> Element<Tensor<Self::Key>, S> {
        assert!(n >= 1);
        let mut acc: Element<Tensor<Self::Key>, S> = Element::basis(Tensor(vec![k.clone()]));
        for _ in 1..n {
            acc = acc.map_linear(|t| {
                let (last, init) = t.0.split_last().expect("nonempty tensor");
                self.coproduct_basis(last).map_keys(|Pair(a, b)| {
                    let mut v = init.to_vec();
                    v.push(a.clone());
                    v.push(b.clone());
                    Tensor(v)
                })
            });
        }
        acc
    }
}

/// Product in `A ⊗ B` with factorwise multiplication.
pub fn tensor_mul<S, A, B>(
    a: &A,
    b: &B,
    x: &Element<Pair<A::Key, B::Key>, S>,
    y: &Element<Pair<A::Key, B::Key>, S>,
) -> Element<Pair<A::Key, B::Key>, S>
where
    S: Scalar,
    A: Algebra<S> + ?Sized,
    B: Algebra<S> + ?Sized,
{
    x.bilinear(y, |Pair(x1, x2), Pair(y1, y2)| {
        a.mul_basis(x1, y1).tensor(&b.mul_basis(x2, y2))
    })
}

/// A random element built from [`Algebra::sample_basis_element`].
pub fn random_element<A: Algebra<S> + ?Sized, S: Scalar>(
    alg: &A,
    rng: &mut SampleRng,
    plan: &SamplePlan,
) -> Element<A::Key, S> {
    random_combination(rng, plan, |r| alg.sample_basis_element(r, plan))
}

/// The basis enumerated as elements when finite, otherwise `plan.samples`
/// random elements preceded by single-key distinguished elements.
pub(crate) fn hopf_samples<H: HopfAlgebra<S> + ?Sized, S: Scalar>(
    h: &H,
    rng: &mut SampleRng,
    plan: &SamplePlan,
) -> Vec<Element<H::Key, S>> {
    if let Some(basis) = h.finite_basis() {
        return basis.into_iter().map(Element::basis).collect();
    }
    let mut out: Vec<_> = h.distinguished_keys().into_iter().map(Element::basis).collect();
    out.extend((0..plan.samples).map(|_| random_element(h, rng, plan)));
    out
}

/// Triples: every basis triple when the basis is finite, otherwise random.
pub(crate) fn triples<A: Algebra<S> + ?Sized, S: Scalar>(
    alg: &A,
    rng: &mut SampleRng,
    plan: &SamplePlan,
) -> Vec<[Element<A::Key, S>; 3]> {
    if let Some(basis) = alg.finite_basis() {
        let mut out = Vec::new();
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    out.push([a, b, c].map(|k| Element::basis(k.clone())));
                }
            }
        }
        return out;
    }
    (0..plan.samples)
        .map(|_| std::array::from_fn(|_| random_element(alg, rng, plan)))
        .collect()
}

fn three_fold_left<H: HopfAlgebra<S> + ?Sized, S: Scalar>(
    h: &H,
    x: &Element<H::Key, S>,
) -> Element<Tensor<H::Key>, S> {
    h.coproduct(x).map_linear(|Pair(a, b)| {
        h.coproduct_basis(a).map_keys(|Pair(a1, a2)| Tensor(vec![a1.clone(), a2.clone(), b.clone()]))
    })
}

fn three_fold_right<H: HopfAlgebra<S> + ?Sized, S: Scalar>(
    h: &H,
    x: &Element<H::Key, S>,
) -> Element<Tensor<H::Key>, S> {
    h.coproduct(x).map_linear(|Pair(a, b)| {
        h.coproduct_basis(b).map_keys(|Pair(b1, b2)| Tensor(vec![a.clone(), b1.clone(), b2.clone()]))
    })
}

/// Exact verification of the Hopf algebra axioms on sampled elements:
/// associativity, unitality, coassociativity, counit laws, multiplicativity of
/// `Δ` and `ε`, and both antipode laws. Finite bases are enumerated in full.
pub fn check_hopf_axioms<H: HopfAlgebra<S> + ?Sized, S: Scalar>(
    h: &H,
    plan: &SamplePlan,
) -> VerificationReport {
    let mut rng = plan.rng(0);
    let singles = hopf_samples(h, &mut rng, plan);
    let trips = triples(h, &mut rng, plan);
    let one = h.one();
    let mut rb = ReportBuilder::new("check-hopf", plan);

    rb.check("associativity (xy)z = x(yz)", &trips, |[x, y, z]| {
        compare(&h.mul(&h.mul(x, y), z), &h.mul(x, &h.mul(y, z)), witness![("x", x), ("y", y), ("z", z)])
    });
    rb.check("unit 1x = x = x1", &singles, |x| {
        compare(&h.mul(&one, x), x, witness![("x", x)])
            .or_else(|| compare(&h.mul(x, &one), x, witness![("x", x)]))
    });
    rb.check("coassociativity (Δ⊗id)Δ = (id⊗Δ)Δ", &singles, |x| {
        compare(&three_fold_left(h, x), &three_fold_right(h, x), witness![("x", x)])
    });
    rb.check("counit (ε⊗id)Δ(x) = x = (id⊗ε)Δ(x)", &singles, |x| {
        let d = h.coproduct(x);
        let left = d.map_linear(|Pair(a, b)| Element::monomial(b.clone(), h.counit_basis(a)));
        let right = d.map_linear(|Pair(a, b)| Element::monomial(a.clone(), h.counit_basis(b)));
        compare(&left, x, witness![("x", x)]).or_else(|| compare(&right, x, witness![("x", x)]))
    });
    let pairs: Vec<_> = trips.iter().map(|[x, y, _]| (x.clone(), y.clone())).collect();
    rb.check("bialgebra Δ(xy) = Δ(x)Δ(y)", &pairs, |(x, y)| {
        compare(
            &h.coproduct(&h.mul(x, y)),
            &tensor_mul(h, h, &h.coproduct(x), &h.coproduct(y)),
            witness![("x", x), ("y", y)],
        )
    });
    rb.check("bialgebra ε(xy) = ε(x)ε(y)", &pairs, |(x, y)| {
        let lhs = h.counit(&h.mul(x, y));
        let rhs = h.counit(x).mul_ref(&h.counit(y));
        compare(&lhs, &rhs, witness![("x", x), ("y", y)])
    });
    rb.check("Δ(1) = 1⊗1 and ε(1) = 1", &[()], |_| {
        compare(&h.coproduct(&one), &one.tensor(&one), witness![("1", one)])
            .or_else(|| compare(&h.counit(&one), &S::one(), witness![("1", one)]))
    });
    rb.check("antipode Σ x₍₁₎S(x₍₂₎) = ε(x)1 = Σ S(x₍₁₎)x₍₂₎", &singles, |x| {
        let d = h.coproduct(x);
        let eps = one.scale(&h.counit(x));
        let left = d.map_linear(|Pair(a, b)| h.mul(&Element::basis(a.clone()), &h.antipode_basis(b)));
        let right = d.map_linear(|Pair(a, b)| h.mul(&h.antipode_basis(a), &Element::basis(b.clone())));
        compare(&left, &eps, witness![("x", x)]).or_else(|| compare(&right, &eps, witness![("x", x)]))
    });
    rb.finish()
}

/// A Hopf algebra with a grading compatible with product and coproduct.
pub trait GradedHopf<S: Scalar>: HopfAlgebra<S> {
    fn degree(&self, k: &Self::Key) -> u32;
}

/// Checks `deg(ab) = deg a + deg b` on every output term and that `Δ` splits
/// degrees, on sampled keys.
pub fn check_grading<H: GradedHopf<S> + ?Sized, S: Scalar>(
    h: &H,
    plan: &SamplePlan,
) -> VerificationReport {
    let mut rng = plan.rng(1);
    let keys: Vec<_> = (0..plan.samples)
        .map(|_| (h.sample_key(&mut rng, plan), h.sample_key(&mut rng, plan)))
        .collect();
    let mut rb = ReportBuilder::new("check-grading", plan);
    rb.check("H_k H_l ⊂ H_(k+l)", &keys, |(a, b)| {
        let want = h.degree(a) + h.degree(b);
        let prod = h.mul_basis(a, b);
        let bad = prod.keys().find(|k| h.degree(k) != want)?;
        Some(witness![("a", a), ("b", b), ("term", bad)])
    });
    rb.check("Δ(H_k) ⊂ ⊕ H_r ⊗ H_(k-r)", &keys, |(a, _)| {
        let d = h.coproduct_basis(a);
        let bad = d.keys().find(|Pair(x, y)| h.degree(x) + h.degree(y) != h.degree(a))?;
        Some(witness![("a", a), ("term", bad)])
    });
    rb.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freemod::{GroupElt, GroupSpec};
    use crate::scalars::{LaurentPoly, Rational, ScalarMode};

    type E<K> = Element<K, LaurentPoly>;

    fn plan() -> SamplePlan {
        SamplePlan::new(ScalarMode::GenericQ, 11).with_samples(40)
    }

    #[test]
    fn group_products_and_antipode() {
        let z = group_algebra(GroupSpec::free(1));
        let p: E<GroupElt> = Algebra::mul_basis(&z, &GroupElt(vec![2]), &GroupElt(vec![-1]));
        assert_eq!(p, Element::basis(GroupElt(vec![1])));
        let z3 = group_algebra(GroupSpec::cyclic(3, 1));
        let p: E<GroupElt> = Algebra::mul_basis(&z3, &GroupElt(vec![2]), &GroupElt(vec![2]));
        assert_eq!(p, Element::basis(GroupElt(vec![1])));
        let z2 = group_algebra(GroupSpec::free(2));
        let s: E<GroupElt> = z2.antipode_basis(&GroupElt(vec![2, -1]));
        assert_eq!(s.to_string(), "K1^-2*K2");
    }

    #[test]
    fn sweedler_relations() {
        let h = sweedler_fixture();
        let xg: E<SweedlerKey> = h.mul_basis(&SweedlerKey::X, &SweedlerKey::G);
        assert_eq!(xg.to_string(), "-g*x");
        let d: Element<_, LaurentPoly> = h.coproduct_basis(&SweedlerKey::GX);
        assert_eq!(d.to_string(), "1⊗g*x + g*x⊗g");
        let d: Element<_, Rational> = h.coproduct_basis(&SweedlerKey::X);
        let s = d.map_linear(|Pair(a, b)| h.mul(&Element::basis(*a), &h.antipode_basis(b)));
        assert!(s.is_zero());
    }

    #[test]
    fn binomial_structure() {
        let b = binomial_fixture();
        let d: Element<_, Rational> = b.coproduct_basis(&XPow(2));
        assert_eq!(d.to_string(), "1⊗x^2 + 2*x⊗x + x^2⊗1");
        let s: Element<_, Rational> = b.antipode_basis(&XPow(1));
        assert_eq!(s.to_string(), "-x");
        assert_eq!(HopfAlgebra::<Rational>::counit_basis(&b, &XPow(3)), Rational::from_integer(0.into()));
        assert_eq!(HopfAlgebra::<Rational>::counit_basis(&b, &XPow(0)), Rational::from_integer(1.into()));
    }

    #[test]
    fn iterated_coproduct_of_x_squared() {
        let b = binomial_fixture();
        let d: Element<_, Rational> = b.iterated_coproduct(&XPow(2), 3);
        assert_eq!(d.len(), 6);
        assert_eq!(d.coeff(&Tensor(vec![XPow(0), XPow(1), XPow(1)])), Rational::from_integer(2.into()));
    }

    #[test]
    fn shipped_hopf_algebras_pass() {
        assert!(check_hopf_axioms::<_, LaurentPoly>(&group_algebra(GroupSpec::free(2)), &plan()).passed());
        assert!(check_hopf_axioms::<_, LaurentPoly>(&group_algebra(GroupSpec::cyclic(3, 1)), &plan()).passed());
        let r = check_hopf_axioms::<_, LaurentPoly>(&sweedler_fixture(), &plan());
        assert!(r.passed(), "{:?}", r.failure);
        assert_eq!(r.checks, 3 * 64 + 4 * 4 + 1);
        assert!(check_hopf_axioms::<_, LaurentPoly>(&binomial_fixture(), &plan()).passed());
        assert!(check_grading::<_, LaurentPoly>(&binomial_fixture(), &plan()).passed());
    }

    #[test]
    fn broken_antipode_fails_at_k1() {
        let h = BrokenAntipode(group_algebra(GroupSpec::free(1)));
        let r = check_hopf_axioms::<_, LaurentPoly>(&h, &plan());
        let cx = r.failure.expect("must fail");
        assert!(cx.identity.starts_with("antipode"));
        assert_eq!(cx.witnesses[0], ("x".to_string(), "K1".to_string()));
        assert!(cx.witnesses.iter().any(|(n, v)| n == "lhs" && v == "K1^2"));
    }

    #[test]
    fn group_antipode_is_involutive() {
        let g = group_algebra(GroupSpec::new(1, vec![4]).unwrap());
        let mut rng = plan().rng(3);
        for _ in 0..50 {
            let k = HopfAlgebra::<Rational>::sample_key(&g, &mut rng, &plan());
            let s: Element<_, Rational> = g.antipode_basis(&k);
            assert_eq!(g.antipode(&s), Element::basis(k));
        }
    }
}
