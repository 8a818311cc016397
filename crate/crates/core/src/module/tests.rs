use super::*;
use crate::freemod::{GroupElt, GroupSpec};
use crate::hopf::{binomial_fixture, group_algebra, GroupAlgebra, XPow};
use crate::rb::{decomposition_check, idempotent_check, rb_check, RbOperator};
use crate::scalars::{LaurentPoly, ScalarMode};
use crate::verify::SamplePlan;

type S = LaurentPoly;

fn plan() -> SamplePlan {
    SamplePlan::new(ScalarMode::GenericQ, 5).with_samples(60)
}

fn z2() -> RadfordPair<'static, GroupAlgebra, GroupAlgebra, S> {
    radford_pair(
        group_algebra(GroupSpec::free(2)),
        group_algebra(GroupSpec::free(1)),
        |k: &GroupElt| Element::basis(GroupElt(vec![k.0[0], 0])),
        |k: &GroupElt| Element::basis(GroupElt(vec![k.0[0]])),
        &plan(),
    )
    .unwrap()
}

fn k(a: i64, b: i64) -> Element<GroupElt, S> {
    Element::basis(GroupElt(vec![a, b]))
}

#[test]
fn radford_projection_keeps_the_k2_part() {
    let m = z2();
    let pi = m.pi_operator();
    for a in -3..=3 {
        for b in -3..=3 {
            assert_eq!(p_right(&m, &k(a, b)), k(0, b));
            assert_eq!(pi.apply(&k(a, b)), k(0, b));
        }
    }
}

#[test]
fn radford_pair_passes_its_checks() {
    let m = z2();
    let r = check_right_hopf_module_algebra(&m, &plan());
    assert!(r.passed(), "{:?}", r.failure);
    let p = RbOperator::new(|x| p_right(&m, x));
    assert!(rb_check(&m, &p, &S::from_int(-1), &plan()).passed());
    assert!(idempotent_check(&m, &p, &plan()).passed());
    assert!(decomposition_check(&m, &p, &plan()).passed());
}

#[test]
fn rota_baxter_example_pair() {
    let m = z2();
    let (px, py) = (p_right(&m, &k(1, 1)), p_right(&m, &k(1, 1)));
    assert_eq!(m.mul(&px, &py), k(0, 2));
}

#[test]
fn broken_section_is_rejected() {
    let r = radford_pair(
        group_algebra(GroupSpec::free(2)),
        group_algebra(GroupSpec::free(1)),
        |k: &GroupElt| Element::<_, S>::basis(GroupElt(vec![0, k.0[0]])),
        |k: &GroupElt| Element::basis(GroupElt(vec![k.0[0]])),
        &plan(),
    );
    let cx = r.err().expect("π∘i ≠ id");
    assert_eq!(cx.witnesses[0].1, "K1");
}

#[test]
fn ignoring_the_action_breaks_the_hopf_module_law() {
    let m = IgnoreAction(z2());
    let cx = check_right_hopf_module_algebra(&m, &plan()).failure.expect("must fail");
    assert!(cx.identity.starts_with("Hopf module"));
    assert_eq!(cx.witnesses[1], ("h".to_string(), "K1".to_string()));
}

#[test]
fn graded_pair_projection_is_identity() {
    let m = graded_pair::<_, S>(binomial_fixture(), &plan()).unwrap();
    let x: Element<XPow, S> = Element::basis(XPow(1));
    assert_eq!(m.right_coact(&x).to_string(), "x⊗1");
    assert!(is_right_coinvariant(&m, &x));
    let pi = m.pi_operator();
    for n in 0..5 {
        let e = Element::basis(XPow(n));
        assert_eq!(pi.apply(&e), e);
        assert_eq!(p_right(&m, &e), e);
    }
    assert_eq!(m.project(&Element::basis(XPow(0))).to_string(), "1");
    assert!(check_right_hopf_module_algebra(&m, &plan()).passed());
}

#[test]
fn convolution_laws_on_a_group_algebra() {
    let h = group_algebra(GroupSpec::free(1));
    let g: Element<GroupElt, S> = Element::basis(GroupElt(vec![1]));
    let idid = convolution(&h, EndMap::identity(), EndMap::identity());
    assert_eq!(idid.apply(&g).to_string(), "K1^2");
    let ids = convolution(&h, EndMap::identity(), antipode_map(&h));
    assert_eq!(ids.apply(&g), unit_counit(&h).apply(&g));
    let uf = convolution(&h, unit_counit(&h), antipode_map(&h));
    assert_eq!(uf.apply(&g), h.antipode(&g));
}

#[test]
fn trivially_coacted_elements_are_fixed() {
    let m = z2();
    let x = k(0, 2) + k(0, -1).scale(&S::q());
    assert!(is_right_coinvariant(&m, &x));
    assert_eq!(p_right(&m, &x), x);
    assert!(!is_right_coinvariant(&m, &k(1, 0)));
}
