//! Exact coefficient rings.
//!
//! Three scalar types implement [`Scalar`]:
//!
//! * [`Rational`]: `ℚ`, with `q` specialized to a fixed nonzero rational point;
//! * [`LaurentPoly`]: `ℚ[q, q⁻¹]`, the generic-`q` mode;
//! * [`CycloRes`]: `ℚ[q]/Φ_l(q)`, where `q` is a primitive `l`-th root of unity.
//!
//! Everything above this module is generic over the scalar type.

mod cyclo;
mod laurent;
pub(crate) mod qpoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

pub use cyclo::{cyclotomic_poly, CycloRes};
pub use laurent::LaurentPoly;

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("scalar mode mismatch: expected {expected}, found {found}")]
    ModeMismatch { expected: String, found: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0} is not a unit")]
    NotUnit(String),
}

/// Which coefficient ring a computation runs over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ScalarMode {
    /// `ℚ`, with `q` evaluated at the given nonzero point.
    Rational { q: Rational },
    /// Laurent polynomials in an indeterminate `q`.
    GenericQ,
    /// `ℚ[q]/Φ_l(q)`.
    Cyclotomic(u32),
}

impl ScalarMode {
    /// Rational mode at the classical point `q = 1`.
    pub fn rational() -> Self {
        ScalarMode::Rational { q: Rational::one() }
    }
}

impl fmt::Display for ScalarMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarMode::Rational { q } if q.is_one() => write!(f, "rational"),
            ScalarMode::Rational { q } => write!(f, "rational:{q}"),
            ScalarMode::GenericQ => write!(f, "generic"),
            ScalarMode::Cyclotomic(l) => write!(f, "cyclotomic:{l}"),
        }
    }
}

impl FromStr for ScalarMode {
    type Err = ScalarError;

    /// Accepts `generic`, `cyclotomic:L` (or `cyclotomic L`), `rational` and
    /// `rational:Q0`.
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let s = s.trim();
        let (head, arg) = match s.split_once([':', ' ']) {
            Some((h, a)) => (h.trim(), Some(a.trim())),
            None => (s, None),
        };
        let bad = || ScalarError::Usage(format!("unrecognized scalar mode `{s}`"));
        match (head, arg) {
            ("generic", None) => Ok(ScalarMode::GenericQ),
            ("rational", None) => Ok(ScalarMode::rational()),
            ("rational", Some(a)) => {
                let q: Rational = a.parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(ScalarError::Domain("q must be a nonzero rational".into()));
                }
                Ok(ScalarMode::Rational { q })
            }
            ("cyclotomic", Some(a)) => {
                let l: u32 = a.parse().map_err(|_| bad())?;
                if l == 0 {
                    return Err(ScalarError::Usage("cyclotomic level must be at least 1".into()));
                }
                Ok(ScalarMode::Cyclotomic(l))
            }
            _ => Err(bad()),
        }
    }
}

/// An exact commutative coefficient ring.
///
/// Besides the ring operations every scalar type knows how to receive the
/// image of a Laurent polynomial under the ring map `q ↦ class of q` of a
/// [`ScalarMode`], how to invert units and how to divide exactly.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Whether every nonzero element is a unit.
    const IS_FIELD: bool;

    fn from_rational(r: Rational) -> Self;

    /// Image of `p` under the ring map selected by `mode`.
    fn specialize(p: &LaurentPoly, mode: &ScalarMode) -> Result<Self, ScalarError>;

    fn inverse(&self) -> Option<Self>;

    /// `self / divisor` when the division is exact in this ring.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// The class of `q^e` in `mode`.
    fn q_pow(e: i64, mode: &ScalarMode) -> Result<Self, ScalarError> {
        Self::specialize(&LaurentPoly::q_pow(e), mode)
    }

    fn pow_i(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        Some(acc)
    }
}

impl Scalar for Rational {
    const IS_FIELD: bool = true;

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn specialize(p: &LaurentPoly, mode: &ScalarMode) -> Result<Self, ScalarError> {
        match mode {
            ScalarMode::Rational { q } => p.eval_at(q),
            other => Err(ScalarError::ModeMismatch {
                expected: "rational".into(),
                found: other.to_string(),
            }),
        }
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Image of `p` in `mode`, as a scalar of type `S`.
pub fn specialize<S: Scalar>(p: &LaurentPoly, mode: &ScalarMode) -> Result<S, ScalarError> {
    S::specialize(p, mode)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rational_addition() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
    }

    #[test]
    fn rational_is_kept_in_lowest_terms() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &(-3).into());
        assert_eq!(r.denom(), &2.into());
    }

    #[test]
    fn modes_parse_and_render() {
        for s in ["generic", "cyclotomic:3", "rational", "rational:2/3"] {
            let m: ScalarMode = s.parse().unwrap();
            assert_eq!(m.to_string(), s);
        }
        assert_eq!("cyclotomic 5".parse::<ScalarMode>().unwrap(), ScalarMode::Cyclotomic(5));
        assert!("cyclotomic:0".parse::<ScalarMode>().is_err());
        assert!("rational:0".parse::<ScalarMode>().is_err());
        assert!("complex".parse::<ScalarMode>().is_err());
    }

    #[test]
    fn specialize_constants_in_every_mode() {
        let five = LaurentPoly::from_int(5);
        assert_eq!(specialize::<Rational>(&five, &ScalarMode::rational()).unwrap(), rat(5, 1));
        assert_eq!(specialize::<LaurentPoly>(&five, &ScalarMode::GenericQ).unwrap(), five);
        assert_eq!(
            specialize::<CycloRes>(&five, &ScalarMode::Cyclotomic(3)).unwrap(),
            CycloRes::from_int(5)
        );
    }

    #[test]
    fn specialize_to_wrong_type_is_a_mode_mismatch() {
        let q = LaurentPoly::q();
        assert!(matches!(
            specialize::<Rational>(&q, &ScalarMode::GenericQ),
            Err(ScalarError::ModeMismatch { .. })
        ));
        assert!(matches!(
            specialize::<LaurentPoly>(&q, &ScalarMode::Cyclotomic(3)),
            Err(ScalarError::ModeMismatch { .. })
        ));
    }

    #[test]
    fn rational_specialization_at_zero_is_a_domain_error() {
        let mode = ScalarMode::Rational { q: Rational::zero() };
        assert!(matches!(
            specialize::<Rational>(&LaurentPoly::q_pow(-1), &mode),
            Err(ScalarError::Domain(_))
        ));
    }

    #[test]
    fn pow_i_uses_inverse_for_negative_exponents() {
        let q = LaurentPoly::q();
        assert_eq!(q.pow_i(-3).unwrap(), LaurentPoly::q_pow(-3));
        assert_eq!((LaurentPoly::one() + q).pow_i(-1), None);
    }
}
