//! Rota-Baxter identity checks, weight rescaling, idempotency and the
//! image/kernel decomposition.

use std::fmt;

use crate::freemod::{BasisKey, Element};
use crate::hopf::{random_element, Algebra};
use crate::scalars::{Scalar, ScalarError};
use crate::verify::{compare, first_failure, witness, ReportBuilder, SamplePlan, VerificationReport};

/// Sampled `(x, y)` arguments of the identity.
pub type Pairs<K, S> = Vec<(Element<K, S>, Element<K, S>)>;

type Rule<'a, K, S> = Box<dyn Fn(&Element<K, S>) -> Element<K, S> + Send + Sync + 'a>;

/// A linear operator on an algebra, applied to whole elements.
pub struct RbOperator<'a, K, S> {
    rule: Rule<'a, K, S>,
}

impl<'a, K: BasisKey, S: Scalar> RbOperator<'a, K, S> {
    pub fn new(rule: impl Fn(&Element<K, S>) -> Element<K, S> + Send + Sync + 'a) -> Self {
        RbOperator { rule: Box::new(rule) }
    }

    /// Extends a rule on basis keys linearly.
    pub fn from_basis(rule: impl Fn(&K) -> Element<K, S> + Send + Sync + 'a) -> Self {
        Self::new(move |x| x.map_linear(&rule))
    }

    pub fn identity() -> Self {
        Self::new(|x| x.clone())
    }

    pub fn zero() -> Self {
        Self::new(|_| Element::zero())
    }

    /// `m ↦ c·P(m)`
    pub fn scaled(self, c: S) -> Self {
        Self::new(move |x| (self.rule)(x).scale(&c))
    }

    pub fn apply(&self, x: &Element<K, S>) -> Element<K, S> {
        (self.rule)(x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbCounterexample {
    pub x: String,
    pub y: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for RbCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x = {}; y = {}; lhs = {}; rhs = {}", self.x, self.y, self.lhs, self.rhs)
    }
}

/// Outcome of [`rb_check`]. `failure` is set iff some pair violates the
/// identity; `pairs` counts the pairs evaluated up to and including it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbReport {
    pub weight: String,
    pub pairs: usize,
    pub seed: u64,
    pub failure: Option<RbCounterexample>,
}

impl RbReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// `plan.samples` random pairs. The draw depends only on the plan, so two
/// checks with equal plans see the same pairs.
pub fn sample_pairs<A: Algebra<S> + ?Sized, S: Scalar>(
    alg: &A,
    plan: &SamplePlan,
) -> Pairs<A::Key, S> {
    let mut rng = plan.rng(4);
    (0..plan.samples)
        .map(|_| (random_element(alg, &mut rng, plan), random_element(alg, &mut rng, plan)))
        .collect()
}

/// Checks `P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy)` on the given pairs.
pub fn rb_check_pairs<A: Algebra<S> + ?Sized, S: Scalar>(
    alg: &A,
    p: &RbOperator<'_, A::Key, S>,
    weight: &S,
    pairs: &Pairs<A::Key, S>,
    plan: &SamplePlan,
) -> RbReport {
    let found = first_failure(pairs, plan.parallel, |(x, y)| {
        let (px, py) = (p.apply(x), p.apply(y));
        let lhs = alg.mul(&px, &py);
        let rhs = p.apply(&alg.mul(x, &py)) + p.apply(&alg.mul(&px, y))
            + p.apply(&alg.mul(x, y)).scale(weight);
        (lhs != rhs).then(|| RbCounterexample {
            x: x.to_string(),
            y: y.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    });
    RbReport {
        weight: weight.to_string(),
        pairs: found.as_ref().map_or(pairs.len(), |(i, _)| i + 1),
        seed: plan.seed,
        failure: found.map(|(_, w)| w),
    }
}

/// [`rb_check_pairs`] on [`sample_pairs`].
pub fn rb_check<A: Algebra<S> + ?Sized, S: Scalar>(
    alg: &A,
    p: &RbOperator<'_, A::Key, S>,
    weight: &S,
    plan: &SamplePlan,
) -> RbReport {
    rb_check_pairs(alg, p, weight, &sample_pairs(alg, plan), plan)
}

/// `νλ⁻¹P`, a Rota-Baxter operator of weight `ν` when `P` has weight `λ`.
pub fn rescale<'a, K: BasisKey, S: Scalar>(
    p: RbOperator<'a, K, S>,
    lambda: &S,
    nu: &S,
) -> Result<RbOperator<'a, K, S>, ScalarError> {
    let inv = lambda
        .inverse()
        .ok_or_else(|| ScalarError::Usage(format!("weight {lambda} is not a unit")))?;
    Ok(p.scaled(nu.mul_ref(&inv)))
}

fn singles<A: Algebra<S> + ?Sized, S: Scalar>(alg: &A, plan: &SamplePlan) -> Vec<Element<A::Key, S>> {
    let mut rng = plan.rng(5);
    (0..plan.samples).map(|_| random_element(alg, &mut rng, plan)).collect()
}

/// `P(P(m)) = P(m)` on sampled elements.
pub fn idempotent_check<A: Algebra<S> + ?Sized, S: Scalar>(
    alg: &A,
    p: &RbOperator<'_, A::Key, S>,
    plan: &SamplePlan,
) -> VerificationReport {
    let items = singles(alg, plan);
    let mut rb = ReportBuilder::new("idempotency", plan);
    rb.check("P(P(m)) = P(m)", &items, |m| {
        let pm = p.apply(m);
        compare(&p.apply(&pm), &pm, witness![("m", m)])
    });
    rb.finish()
}

/// `P(x + cy) = P(x) + cP(y)` on sampled pairs.
pub fn linearity_check<A: Algebra<S> + ?Sized, S: Scalar>(
    alg: &A,
    p: &RbOperator<'_, A::Key, S>,
    plan: &SamplePlan,
) -> VerificationReport {
    let pairs = sample_pairs(alg, plan);
    let c = S::from_int(2) - S::q_pow(1, &plan.mode).unwrap_or_else(|_| S::one());
    let mut rb = ReportBuilder::new("linearity", plan);
    rb.check("P(x + cy) = P(x) + cP(y)", &pairs, |(x, y)| {
        let lhs = p.apply(&(x + &y.scale(&c)));
        let rhs = p.apply(x) + p.apply(y).scale(&c);
        compare(&lhs, &rhs, witness![("x", x), ("y", y)])
    });
    rb.finish()
}

/// For an idempotent `P`: `Im P` and `Ker P` are subalgebras. Idempotency is
/// checked first; a failure there is reported as this suite's failure.
pub fn decomposition_check<A: Algebra<S> + ?Sized, S: Scalar>(
    alg: &A,
    p: &RbOperator<'_, A::Key, S>,
    plan: &SamplePlan,
) -> VerificationReport {
    let items = singles(alg, plan);
    let pairs = sample_pairs(alg, plan);
    let mut rb = ReportBuilder::new("decomposition", plan);
    rb.check("P(P(m)) = P(m)", &items, |m| {
        let pm = p.apply(m);
        compare(&p.apply(&pm), &pm, witness![("m", m)])
    });
    rb.check("image closed: P(P(x)P(y)) = P(x)P(y)", &pairs, |(x, y)| {
        let prod = alg.mul(&p.apply(x), &p.apply(y));
        compare(&p.apply(&prod), &prod, witness![("x", x), ("y", y)])
    });
    rb.check("kernel closed: P((x−P(x))(y−P(y))) = 0", &pairs, |(x, y)| {
        let kx = x - &p.apply(x);
        let ky = y - &p.apply(y);
        compare(&p.apply(&alg.mul(&kx, &ky)), &Element::zero(), witness![("x", x), ("y", y)])
    });
    rb.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freemod::{GroupElt, GroupSpec};
    use crate::hopf::{group_algebra, sweedler_fixture};
    use crate::scalars::{LaurentPoly, ScalarMode};

    fn plan() -> SamplePlan {
        SamplePlan::new(ScalarMode::GenericQ, 3).with_samples(30)
    }

    #[test]
    fn identity_and_zero_are_rota_baxter() {
        let h = sweedler_fixture();
        let m1 = LaurentPoly::from_int(-1);
        assert!(rb_check::<_, LaurentPoly>(&h, &RbOperator::identity(), &m1, &plan()).passed());
        assert!(rb_check::<_, LaurentPoly>(&h, &RbOperator::zero(), &LaurentPoly::q(), &plan()).passed());
    }

    #[test]
    fn doubling_is_not_idempotent() {
        let g = group_algebra(GroupSpec::free(1));
        let p = RbOperator::<GroupElt, LaurentPoly>::identity().scaled(LaurentPoly::from_int(2));
        let r = idempotent_check(&g, &p, &plan());
        assert!(!r.passed());
        assert!(idempotent_check(&g, &RbOperator::<_, LaurentPoly>::identity(), &plan()).passed());
        assert!(linearity_check(&g, &p, &plan()).passed());
    }

    #[test]
    fn rescale_requires_a_unit_weight() {
        let p = RbOperator::<GroupElt, LaurentPoly>::identity();
        let two = LaurentPoly::from_int(2);
        assert!(rescale(p, &(LaurentPoly::one() + LaurentPoly::q()), &two).is_err());
        let p = rescale(RbOperator::<GroupElt, LaurentPoly>::identity(), &two, &two).unwrap();
        let x = Element::basis(GroupElt(vec![1]));
        assert_eq!(p.apply(&x), x);
    }

    #[test]
    fn parallel_and_sequential_reports_agree() {
        let g = group_algebra(GroupSpec::free(2));
        let p = RbOperator::<GroupElt, LaurentPoly>::identity().scaled(LaurentPoly::from_int(3));
        let w = LaurentPoly::from_int(-1);
        let a = rb_check(&g, &p, &w, &plan());
        let b = rb_check(&g, &p, &w, &plan().with_parallel(true));
        assert!(!a.passed());
        assert_eq!(a, b);
    }

    use num_traits::One;
}
