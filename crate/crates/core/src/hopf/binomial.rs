use std::fmt;

use num_bigint::BigInt;
use rand::Rng;

use super::{Algebra, GradedHopf, HopfAlgebra};
use crate::freemod::{Element, KeyContext, Pair, ParseKey};
use crate::parse::{KeyFactor, ParseError};
use crate::scalars::{Rational, Scalar};
use crate::verify::{SamplePlan, SampleRng};

/// The monomial `x^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XPow(pub u32);

impl fmt::Display for XPow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            1 => write!(f, "x"),
            n => write!(f, "x^{n}"),
        }
    }
}

impl ParseKey for XPow {
    fn from_factors(factors: &[KeyFactor], _: &KeyContext, position: usize) -> Result<Self, ParseError> {
        let mut n = 0i64;
        for f in factors {
            match *f {
                KeyFactor::Symbol { name: 'x', exp } if exp >= 0 => n += exp,
                _ => return Err(ParseError::new(position, "expected a monomial x^n with n >= 0")),
            }
        }
        u32::try_from(n)
            .map(XPow)
            .map_err(|_| ParseError::new(position, "exponent too large"))
    }
}

/// `𝕂[x]` with `x` primitive, graded by degree.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BinomialHopf;

pub fn binomial_fixture() -> BinomialHopf {
    BinomialHopf
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl<S: Scalar> Algebra<S> for BinomialHopf {
    type Key = XPow;

    fn mul_basis(&self, a: &XPow, b: &XPow) -> Element<XPow, S> {
        Element::basis(XPow(a.0 + b.0))
    }

    fn unit(&self) -> Option<Element<XPow, S>> {
        Some(Element::basis(XPow(0)))
    }

    fn sample_basis_element(&self, rng: &mut SampleRng, plan: &SamplePlan) -> Element<XPow, S> {
        Element::basis(<Self as HopfAlgebra<S>>::sample_key(self, rng, plan))
    }
}

impl<S: Scalar> HopfAlgebra<S> for BinomialHopf {
    fn unit_key(&self) -> XPow {
        XPow(0)
    }

    fn coproduct_basis(&self, k: &XPow) -> Element<Pair<XPow, XPow>, S> {
        Element::normalize((0..=k.0).map(|i| {
            let c = S::from_rational(Rational::from_integer(binomial(k.0, i)));
            (Pair(XPow(i), XPow(k.0 - i)), c)
        }))
    }

    fn counit_basis(&self, k: &XPow) -> S {
        if k.0 == 0 {
            S::one()
        } else {
            S::zero()
        }
    }

    fn antipode_basis(&self, k: &XPow) -> Element<XPow, S> {
        Element::monomial(*k, S::from_int(if k.0.is_multiple_of(2) { 1 } else { -1 }))
    }

    fn sample_key(&self, rng: &mut SampleRng, plan: &SamplePlan) -> XPow {
        XPow(rng.gen_range(0..=plan.max_degree))
    }

    fn distinguished_keys(&self) -> Vec<XPow> {
        vec![XPow(0), XPow(1)]
    }
}

impl<S: Scalar> GradedHopf<S> for BinomialHopf {
    fn degree(&self, k: &XPow) -> u32 {
        k.0
    }
}
