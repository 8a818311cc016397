use super::*;
use crate::freemod::{GroupElt, GroupSpec, SmashKey};
use crate::hopf::{group_algebra, sweedler_fixture, SweedlerKey};
use crate::module::{
    check_left_hopf_module_algebra, check_right_hopf_module_algebra, is_left_coinvariant, is_right_coinvariant,
    p_left, p_right, RightHopfModuleAlgebra,
};
use crate::rb::{idempotent_check, rb_check, RbOperator};
use crate::scalars::{LaurentPoly, ScalarMode};

type S = LaurentPoly;

fn plan() -> SamplePlan {
    SamplePlan::new(ScalarMode::GenericQ, 9).with_samples(50)
}

fn sk<A, B>(a: A, b: B) -> Element<SmashKey<A, B>, S>
where
    A: crate::freemod::BasisKey,
    B: crate::freemod::BasisKey,
{
    Element::basis(SmashKey::new(a, b))
}

#[test]
fn adjoint_action_on_sweedler() {
    let a = AdjointYd(sweedler_fixture());
    let xg: Element<_, S> = a.yd_act_basis(&SweedlerKey::X, &SweedlerKey::G);
    assert_eq!(xg.to_string(), "-2*g*x");
    let gx: Element<_, S> = a.yd_act_basis(&SweedlerKey::G, &SweedlerKey::X);
    assert_eq!(gx.to_string(), "-x");
    let z = AdjointYd(group_algebra(GroupSpec::free(2)));
    let h = GroupElt(vec![1, -2]);
    let e: Element<_, S> = z.yd_act_basis(&GroupElt(vec![3, 1]), &h);
    assert_eq!(e, Element::basis(h));
}

#[test]
fn sweedler_smash_product() {
    let s = smash(AdjointYd(sweedler_fixture()));
    let p = s.mul(&sk(SweedlerKey::ONE, SweedlerKey::X), &sk(SweedlerKey::G, SweedlerKey::ONE));
    assert_eq!(p.to_string(), "g#x - 2*g*x#1");
    let q = s.mul(&sk(SweedlerKey::ONE, SweedlerKey::X), &sk(SweedlerKey::ONE, SweedlerKey::G));
    assert_eq!(q.to_string(), "-1#g*x");
}

#[test]
fn group_smash_multiplies_componentwise() {
    let s = smash(AdjointYd(group_algebra(GroupSpec::free(1))));
    let g = |e| GroupElt(vec![e]);
    assert_eq!(s.mul(&sk(g(1), g(2)), &sk(g(-3), g(1))), sk(g(-2), g(3)));
}

#[test]
fn right_structure_examples() {
    let s = smash(AdjointYd(group_algebra(GroupSpec::free(1))));
    let g = |e| GroupElt(vec![e]);
    let m: Element<_, S> = s.right_act_basis(&SmashKey::new(g(2), g(1)), &g(-1));
    assert_eq!(m, sk(g(2), g(0)));
    assert_eq!(s.right_coact(&sk(g(2), g(1))).to_string(), "K1^2#K1⊗K1");
    assert_eq!(p_right(&s, &sk(g(5), g(2))), sk(g(5), g(0)));
    assert!(is_right_coinvariant(&s, &sk(g(5), g(0))));
    assert!(!is_right_coinvariant(&s, &sk(g(1), g(1))));
}

#[test]
fn hsmash_left_projection_on_group_likes() {
    for spec in [GroupSpec::free(1), GroupSpec::cyclic(3, 1)] {
        let s = smash(AdjointYd(group_algebra(spec.clone())));
        for a in -3..=3 {
            for b in -3..=3 {
                let (ga, gb) = (spec.reduce(vec![a]), spec.reduce(vec![b]));
                let m = sk(ga.clone(), gb);
                let want = sk(ga.clone(), spec.inverse(&ga));
                let generic = p_left(&s, &m);
                assert_eq!(generic, want);
                assert_eq!(hsmash_pl_closed(&s, &m), want);
                assert_eq!(smash_pl_closed(&s, &m), want);
                assert_eq!(p_left(&s, &generic), generic);
                assert!(is_left_coinvariant(&s, &generic));
            }
        }
    }
}

#[test]
fn hsmash_sweedler_closed_formula_matches_generic() {
    let s = smash(AdjointYd(sweedler_fixture()));
    let basis = Algebra::<S>::finite_basis(&s).unwrap();
    assert_eq!(basis.len(), 16);
    for k in basis {
        let m: Element<_, S> = Element::basis(k);
        let generic = p_left(&s, &m);
        assert_eq!(hsmash_pl_closed(&s, &m), generic, "at {m}");
        assert_eq!(smash_pl_closed(&s, &m), generic, "at {m}");
        assert_eq!(smash_pr_closed(&s, &m), p_right(&s, &m), "at {m}");
    }
}

#[test]
fn adjoint_structures_pass_all_checks() {
    let s = smash(AdjointYd(sweedler_fixture()));
    let r = yd_check::<_, S>(s.inner(), &plan());
    assert!(r.passed(), "{:?}", r.failure);
    assert!(check_right_hopf_module_algebra::<_, S>(&s, &plan()).passed());
    let r = check_left_hopf_module_algebra::<_, S>(&s, &plan());
    assert!(r.passed(), "{:?}", r.failure);
    let pl = RbOperator::new(|x| p_left(&s, x));
    let pr = RbOperator::new(|x| p_right(&s, x));
    assert!(rb_check(&s, &pl, &S::from_int(-1), &plan()).passed());
    assert!(rb_check(&s, &pr, &S::from_int(-1), &plan()).passed());
    assert!(idempotent_check(&s, &pl, &plan()).passed());
    let z3 = smash(AdjointYd(group_algebra(GroupSpec::cyclic(3, 1))));
    assert!(yd_check::<_, S>(z3.inner(), &plan()).passed());
    assert!(check_left_hopf_module_algebra::<_, S>(&z3, &plan()).passed());
}
