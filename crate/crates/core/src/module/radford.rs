use super::{convolution, EndMap, OverHopf, RightHopfModuleAlgebra};
use crate::freemod::{Element, GroupElt, GroupSpec, Pair};
use crate::hopf::{group_algebra, hopf_samples, Algebra, GradedHopf, GroupAlgebra, HopfAlgebra};
use crate::scalars::Scalar;
use crate::verify::{witness, Counterexample, SamplePlan, SampleRng};

type Map<'a, X, Y, S> = Box<dyn Fn(&X) -> Element<Y, S> + Send + Sync + 'a>;

/// Bialgebra maps `i: H → A` and `π: A → H` with `π∘i = id_H`. `A` becomes a
/// right `H`-Hopf module algebra with `a·h = a i(h)` and
/// `δ_R(a) = Σ a₍₁₎ ⊗ π(a₍₂₎)`.
pub struct RadfordPair<'a, A: Algebra<S>, H: Algebra<S>, S: Scalar> {
    a: A,
    h: H,
    i: Map<'a, H::Key, A::Key, S>,
    pi: Map<'a, A::Key, H::Key, S>,
}

/// Builds the pair after checking `π(i(k)) = k` on the basis of `H` (sampled
/// when infinite). A failing key is returned as the counterexample.
pub fn radford_pair<'a, A, H, S>(
    a: A,
    h: H,
    i: impl Fn(&H::Key) -> Element<A::Key, S> + Send + Sync + 'a,
    pi: impl Fn(&A::Key) -> Element<H::Key, S> + Send + Sync + 'a,
    plan: &SamplePlan,
) -> Result<RadfordPair<'a, A, H, S>, Counterexample>
where
    A: HopfAlgebra<S>,
    H: HopfAlgebra<S>,
    S: Scalar,
{
    let mut rng: SampleRng = plan.rng(7);
    for x in hopf_samples(&h, &mut rng, plan) {
        let back = i_then_pi(&x, &i, &pi);
        if back != x {
            return Err(Counterexample {
                identity: "π∘i = id_H".into(),
                witnesses: witness![("h", x), ("π(i(h))", back)],
            });
        }
    }
    Ok(RadfordPair { a, h, i: Box::new(i), pi: Box::new(pi) })
}

fn i_then_pi<HK, AK, S>(
    x: &Element<HK, S>,
    i: &dyn Fn(&HK) -> Element<AK, S>,
    pi: &dyn Fn(&AK) -> Element<HK, S>,
) -> Element<HK, S>
where
    HK: crate::freemod::BasisKey,
    AK: crate::freemod::BasisKey,
    S: Scalar,
{
    x.map_linear(i).map_linear(pi)
}

impl<'a, A: HopfAlgebra<S>, H: HopfAlgebra<S>, S: Scalar> RadfordPair<'a, A, H, S> {
    pub fn outer(&self) -> &A {
        &self.a
    }

    pub fn include(&self, x: &Element<H::Key, S>) -> Element<A::Key, S> {
        x.map_linear(|k| (self.i)(k))
    }

    pub fn project(&self, x: &Element<A::Key, S>) -> Element<H::Key, S> {
        x.map_linear(|k| (self.pi)(k))
    }

    /// `Π = id_A ⋆ (i∘S∘π)`
    pub fn pi_operator(&self) -> EndMap<'_, A::Key, S> {
        let isp = EndMap::new(move |k: &A::Key| self.include(&self.h.antipode(&(self.pi)(k))));
        convolution(&self.a, EndMap::identity(), isp)
    }
}

impl<A: HopfAlgebra<S>, H: HopfAlgebra<S>, S: Scalar> Algebra<S> for RadfordPair<'_, A, H, S> {
    type Key = A::Key;

    fn mul_basis(&self, x: &A::Key, y: &A::Key) -> Element<A::Key, S> {
        self.a.mul_basis(x, y)
    }

    fn unit(&self) -> Option<Element<A::Key, S>> {
        Some(self.a.one())
    }

    fn sample_basis_element(&self, rng: &mut SampleRng, plan: &SamplePlan) -> Element<A::Key, S> {
        self.a.sample_basis_element(rng, plan)
    }

    fn finite_basis(&self) -> Option<Vec<A::Key>> {
        self.a.finite_basis()
    }
}

impl<A: HopfAlgebra<S>, H: HopfAlgebra<S>, S: Scalar> OverHopf<S> for RadfordPair<'_, A, H, S> {
    type Hopf = H;

    fn hopf(&self) -> &H {
        &self.h
    }
}

impl<A: HopfAlgebra<S>, H: HopfAlgebra<S>, S: Scalar> RightHopfModuleAlgebra<S>
    for RadfordPair<'_, A, H, S>
{
    fn right_act_basis(&self, m: &A::Key, h: &H::Key) -> Element<A::Key, S> {
        self.a.mul(&Element::basis(m.clone()), &(self.i)(h))
    }

    fn right_coact_basis(&self, m: &A::Key) -> Element<Pair<A::Key, H::Key>, S> {
        self.a
            .coproduct_basis(m)
            .map_linear(|Pair(a1, a2)| Element::basis(a1.clone()).tensor(&(self.pi)(a2)))
    }
}

/// The pair `H₀ ↪ H ↠ H₀` of a connected graded Hopf algebra, `H₀ = 𝕂`
/// realized as the group algebra of the trivial group. `π` kills positive
/// degrees.
pub fn graded_pair<'a, G, S>(
    g: G,
    plan: &SamplePlan,
) -> Result<RadfordPair<'a, G, GroupAlgebra, S>, Counterexample>
where
    G: GradedHopf<S> + Clone + 'a,
    S: Scalar,
{
    let unit = g.unit_key();
    let deg = g.clone();
    radford_pair(
        g,
        group_algebra(GroupSpec::trivial()),
        move |_: &GroupElt| Element::basis(unit.clone()),
        move |k: &G::Key| {
            if deg.degree(k) == 0 {
                Element::monomial(GroupElt(Vec::new()), deg.counit_basis(k))
            } else {
                Element::zero()
            }
        },
        plan,
    )
}
