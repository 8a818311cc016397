use std::fmt;

use rand::Rng;

use super::{Algebra, HopfAlgebra};
use crate::freemod::{Element, KeyContext, Pair, ParseKey};
use crate::parse::{KeyFactor, ParseError};
use crate::scalars::Scalar;
use crate::verify::{SamplePlan, SampleRng};

/// Basis `g^g x^x` of the Sweedler algebra, exponents in `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SweedlerKey {
    pub x: u8,
    pub g: u8,
}

impl SweedlerKey {
    pub const ONE: SweedlerKey = SweedlerKey { x: 0, g: 0 };
    pub const G: SweedlerKey = SweedlerKey { x: 0, g: 1 };
    pub const X: SweedlerKey = SweedlerKey { x: 1, g: 0 };
    pub const GX: SweedlerKey = SweedlerKey { x: 1, g: 1 };

    pub const ALL: [SweedlerKey; 4] = [Self::ONE, Self::G, Self::X, Self::GX];

    fn new(g: u8, x: u8) -> Self {
        SweedlerKey { x, g: g % 2 }
    }
}

impl fmt::Display for SweedlerKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match (self.g, self.x) {
            (0, 0) => "1",
            (1, 0) => "g",
            (0, 1) => "x",
            _ => "g*x",
        };
        f.write_str(s)
    }
}

impl ParseKey for SweedlerKey {
    fn from_factors(factors: &[KeyFactor], _: &KeyContext, position: usize) -> Result<Self, ParseError> {
        let mut g = 0;
        let mut x = 0;
        for f in factors {
            match *f {
                KeyFactor::Symbol { name: 'g', exp } if x == 0 => g += exp,
                KeyFactor::Symbol { name: 'x', exp } if exp == 0 || exp == 1 => x += exp,
                _ => {
                    return Err(ParseError::new(position, "Sweedler keys are written g^a*x^b with b in {0,1}"))
                }
            }
        }
        if x > 1 {
            return Err(ParseError::new(position, "x^2 = 0 is not a basis key"));
        }
        Ok(SweedlerKey::new(g.rem_euclid(2) as u8, x as u8))
    }
}

/// Sweedler's four-dimensional Hopf algebra: `g² = 1`, `x² = 0`, `xg = −gx`,
/// `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `S(x) = −gx`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweedlerHopf;

pub fn sweedler_fixture() -> SweedlerHopf {
    SweedlerHopf
}

fn sign<S: Scalar>(negative: bool) -> S {
    if negative {
        S::from_int(-1)
    } else {
        S::one()
    }
}

impl<S: Scalar> Algebra<S> for SweedlerHopf {
    type Key = SweedlerKey;

    fn mul_basis(&self, a: &SweedlerKey, b: &SweedlerKey) -> Element<SweedlerKey, S> {
        if a.x + b.x >= 2 {
            return Element::zero();
        }
        // x g^c = (−1)^c g^c x
        let negative = a.x == 1 && b.g == 1;
        Element::monomial(SweedlerKey::new(a.g + b.g, a.x + b.x), sign(negative))
    }

    fn unit(&self) -> Option<Element<SweedlerKey, S>> {
        Some(Element::basis(SweedlerKey::ONE))
    }

    fn sample_basis_element(&self, rng: &mut SampleRng, _: &SamplePlan) -> Element<SweedlerKey, S> {
        Element::basis(SweedlerKey::ALL[rng.gen_range(0..4)])
    }

    fn finite_basis(&self) -> Option<Vec<SweedlerKey>> {
        Some(SweedlerKey::ALL.to_vec())
    }
}

impl<S: Scalar> HopfAlgebra<S> for SweedlerHopf {
    fn unit_key(&self) -> SweedlerKey {
        SweedlerKey::ONE
    }

    fn coproduct_basis(&self, k: &SweedlerKey) -> Element<Pair<SweedlerKey, SweedlerKey>, S> {
        let ga = SweedlerKey::new(k.g, 0);
        if k.x == 0 {
            return Element::basis(Pair(ga, ga));
        }
        // Δ(g^a x) = g^a x ⊗ g^a + g^{a+1} ⊗ g^a x
        Element::normalize([
            (Pair(*k, ga), S::one()),
            (Pair(SweedlerKey::new(k.g + 1, 0), *k), S::one()),
        ])
    }

    fn counit_basis(&self, k: &SweedlerKey) -> S {
        if k.x == 0 {
            S::one()
        } else {
            S::zero()
        }
    }

    fn antipode_basis(&self, k: &SweedlerKey) -> Element<SweedlerKey, S> {
        if k.x == 0 {
            return Element::basis(*k);
        }
        // S(g^a x) = −(−1)^a g^{a+1} x
        Element::monomial(SweedlerKey::new(k.g + 1, 1), sign(k.g == 0))
    }

    fn sample_key(&self, rng: &mut SampleRng, _: &SamplePlan) -> SweedlerKey {
        SweedlerKey::ALL[rng.gen_range(0..4)]
    }

    fn distinguished_keys(&self) -> Vec<SweedlerKey> {
        SweedlerKey::ALL.to_vec()
    }
}
