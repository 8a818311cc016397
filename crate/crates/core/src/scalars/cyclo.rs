//! Residues of `ℚ[q]` modulo a cyclotomic polynomial `Φ_l(q)`.
//!
//! The class of `q` in `ℚ[q]/Φ_l` is a primitive `l`-th root of unity. Since
//! `Φ_l` is irreducible the quotient is a field; inverses come from the
//! extended Euclidean algorithm.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::laurent::{fmt_qpoly, forward_owned};
use super::qpoly::{cyclotomic_qpoly, QPoly};
use super::{LaurentPoly, Rational, Scalar, ScalarError, ScalarMode};

/// Returns `Φ_l(q)` as a Laurent polynomial with nonnegative exponents.
pub fn cyclotomic_poly(l: u32) -> Result<LaurentPoly, ScalarError> {
    if l == 0 {
        return Err(ScalarError::Usage("cyclotomic level must be at least 1".into()));
    }
    Ok(LaurentPoly::from_shifted_poly(0, &cyclotomic_qpoly(l)))
}

#[derive(Debug, PartialEq, Eq)]
struct Modulus {
    level: u32,
    phi: QPoly,
}

/// An element of `ℚ[q]/Φ_l(q)`.
///
/// Rational constants are valid in every level; they carry no modulus until
/// combined with a residue that does. Combining residues from two different
/// levels panics in the operator impls; use [`CycloRes::try_add`] and friends
/// for a checked variant.
#[derive(Clone)]
pub struct CycloRes {
    modulus: Option<Arc<Modulus>>,
    residue: QPoly,
}

impl CycloRes {
    /// Reduces `p` into level `l`.
    pub fn new(l: u32, p: &LaurentPoly) -> Result<Self, ScalarError> {
        let phi = cyclotomic_qpoly(if l == 0 {
            return Err(ScalarError::Usage("cyclotomic level must be at least 1".into()));
        } else {
            l
        });
        let modulus = Arc::new(Modulus { level: l, phi });
        // Φ_l divides q^l − 1: reduce exponents mod l first.
        let l = l as i64;
        let mut acc = QPoly::zero();
        for (e, c) in p.terms() {
            acc = acc.add(&QPoly::monomial(c.clone(), e.rem_euclid(l) as usize));
        }
        Ok(CycloRes { residue: acc.rem(&modulus.phi), modulus: Some(modulus) })
    }

    pub fn constant(c: Rational) -> Self {
        CycloRes { modulus: None, residue: QPoly::constant(c) }
    }

    /// The level `l`, or `None` for an unbound rational constant.
    pub fn level(&self) -> Option<u32> {
        self.modulus.as_ref().map(|m| m.level)
    }

    /// Coefficients of the reduced residue, lowest degree first.
    pub fn residue(&self) -> &[Rational] {
        self.residue.coeffs()
    }

    fn join(&self, other: &Self) -> Result<Option<Arc<Modulus>>, ScalarError> {
        match (&self.modulus, &other.modulus) {
            (Some(a), Some(b)) if a.level != b.level => Err(ScalarError::ModeMismatch {
                expected: ScalarMode::Cyclotomic(a.level).to_string(),
                found: ScalarMode::Cyclotomic(b.level).to_string(),
            }),
            (Some(a), _) => Ok(Some(a.clone())),
            (None, b) => Ok(b.clone()),
        }
    }

    fn reduced(modulus: Option<Arc<Modulus>>, p: QPoly) -> Self {
        let residue = match &modulus {
            Some(m) => p.rem(&m.phi),
            None => p,
        };
        CycloRes { modulus, residue }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(Self::reduced(self.join(other)?, self.residue.add(&other.residue)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(Self::reduced(self.join(other)?, self.residue.sub(&other.residue)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(Self::reduced(self.join(other)?, self.residue.mul(&other.residue)))
    }
}

impl PartialEq for CycloRes {
    fn eq(&self, other: &Self) -> bool {
        self.join(other).is_ok() && self.residue == other.residue
    }
}

impl Eq for CycloRes {}

impl fmt::Debug for CycloRes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.level() {
            Some(l) => write!(f, "{self} (mod Φ_{l})"),
            None => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for CycloRes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_qpoly(&self.residue, f)
    }
}

impl Zero for CycloRes {
    fn zero() -> Self {
        CycloRes::constant(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }
}

impl One for CycloRes {
    fn one() -> Self {
        CycloRes::constant(Rational::one())
    }
}

impl<'a> Add<&'a CycloRes> for &'a CycloRes {
    type Output = CycloRes;
    fn add(self, rhs: &'a CycloRes) -> CycloRes {
        self.try_add(rhs).expect("cyclotomic level mismatch")
    }
}

impl<'a> Sub<&'a CycloRes> for &'a CycloRes {
    type Output = CycloRes;
    fn sub(self, rhs: &'a CycloRes) -> CycloRes {
        self.try_sub(rhs).expect("cyclotomic level mismatch")
    }
}

impl<'a> Mul<&'a CycloRes> for &'a CycloRes {
    type Output = CycloRes;
    fn mul(self, rhs: &'a CycloRes) -> CycloRes {
        self.try_mul(rhs).expect("cyclotomic level mismatch")
    }
}

impl Neg for &CycloRes {
    type Output = CycloRes;
    fn neg(self) -> CycloRes {
        CycloRes { modulus: self.modulus.clone(), residue: self.residue.neg() }
    }
}

forward_owned!(CycloRes);

impl Scalar for CycloRes {
    const IS_FIELD: bool = true;

    fn from_rational(r: Rational) -> Self {
        CycloRes::constant(r)
    }

    fn specialize(p: &LaurentPoly, mode: &ScalarMode) -> Result<Self, ScalarError> {
        match mode {
            ScalarMode::Cyclotomic(l) => CycloRes::new(*l, p),
            other => Err(ScalarError::ModeMismatch {
                expected: "cyclotomic:<l>".into(),
                found: other.to_string(),
            }),
        }
    }

    fn inverse(&self) -> Option<Self> {
        if self.residue.is_zero() {
            return None;
        }
        let Some(m) = &self.modulus else {
            let c = self.residue.coeffs()[0].recip();
            return Some(CycloRes::constant(c));
        };
        let (g, s) = self.residue.ext_gcd(&m.phi);
        (g == QPoly::one()).then(|| CycloRes::reduced(Some(m.clone()), s))
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        divisor.inverse().map(|inv| self * &inv)
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

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(l: u32, p: LaurentPoly) -> CycloRes {
        CycloRes::new(l, &p).unwrap()
    }

    #[test]
    fn q_cubed_is_one_at_level_three() {
        let q = cyc(3, LaurentPoly::q());
        let q2 = &q * &q;
        assert_eq!(&q2 * &q, CycloRes::one());
    }

    #[test]
    fn cyclotomic_polynomials() {
        let p = |cs: &[i64]| LaurentPoly::from_shifted_poly(0, &QPoly::from_ints(cs));
        assert_eq!(cyclotomic_poly(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic_poly(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(6).unwrap(), p(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12).unwrap(), p(&[1, 0, -1, 0, 1]));
        assert!(matches!(cyclotomic_poly(0), Err(ScalarError::Usage(_))));
    }

    #[test]
    fn product_of_divisor_cyclotomics_is_q_l_minus_one() {
        for l in 1..=12u32 {
            let mut prod = LaurentPoly::one();
            for d in (1..=l).filter(|d| l % d == 0) {
                prod = &prod * &cyclotomic_poly(d).unwrap();
            }
            assert_eq!(prod, &LaurentPoly::q_pow(l as i64) - &LaurentPoly::one(), "l = {l}");
        }
    }

    #[test]
    fn specialization_examples() {
        let sum = LaurentPoly::one() + LaurentPoly::q() + LaurentPoly::q_pow(2);
        assert!(cyc(3, sum).is_zero());
        assert_eq!(cyc(3, LaurentPoly::q_pow(-1)), cyc(3, LaurentPoly::q_pow(2)));
        let five = LaurentPoly::from_int(5);
        assert_eq!(cyc(7, five.clone()), CycloRes::constant(Rational::from_integer(5.into())));
    }

    #[test]
    fn inverses_exist_for_nonzero_residues() {
        let x = cyc(5, &LaurentPoly::one() + &LaurentPoly::q_pow(3));
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, CycloRes::one());
        assert_eq!(CycloRes::zero().inverse(), None);
    }

    #[test]
    fn mixing_levels_is_rejected() {
        let a = cyc(3, LaurentPoly::q());
        let b = cyc(4, LaurentPoly::q());
        assert!(matches!(a.try_add(&b), Err(ScalarError::ModeMismatch { .. })));
        assert_ne!(a, b);
    }
}
