//! Sparse Laurent polynomials in one variable `q` over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::qpoly::QPoly;
use super::{Rational, Scalar, ScalarError, ScalarMode};

/// A finite sum `Σ c_e q^e` with `e ∈ ℤ`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut out = LaurentPoly::default();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The constant value, if this polynomial has no `q` dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a rational point. Negative exponents at `q0 = 0` are a
    /// domain error.
    pub fn eval_at(&self, q0: &Rational) -> Result<Rational, ScalarError> {
        if q0.is_zero() && self.min_exponent().is_some_and(|e| e < 0) {
            return Err(ScalarError::Domain(format!(
                "cannot evaluate {self} at q = 0: negative power of q"
            )));
        }
        let mut acc = Rational::zero();
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                num_traits::pow(q0.clone(), e as usize)
            } else {
                num_traits::pow(q0.recip(), (-e) as usize)
            };
            acc += c * p;
        }
        Ok(acc)
    }

    /// Splits `self = q^shift * P(q)` with `P` an ordinary polynomial with
    /// nonzero constant term.
    pub(crate) fn to_shifted_poly(&self) -> (i64, QPoly) {
        let Some(lo) = self.min_exponent() else {
            return (0, QPoly::zero());
        };
        let hi = self.max_exponent().unwrap_or(lo);
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - lo) as usize] = c.clone();
        }
        (lo, QPoly::from_coeffs(coeffs))
    }

    pub(crate) fn from_shifted_poly(shift: i64, p: &QPoly) -> Self {
        Self::from_terms(
            p.coeffs().iter().enumerate().map(|(i, c)| (shift + i as i64, c.clone())),
        )
    }

    /// A unit of `ℚ[q, q⁻¹]` is a nonzero monomial.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders terms in increasing exponent order without spaces, for example
/// `-1/3*q^-1+2*q^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            if neg {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            write_monomial(f, &abs, e)?;
        }
        Ok(())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, abs: &Rational, e: i64) -> fmt::Result {
    if e == 0 {
        return write!(f, "{abs}");
    }
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    match e {
        1 => write!(f, "q"),
        _ => write!(f, "q^{e}"),
    }
}

pub(crate) fn fmt_qpoly(p: &QPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    fmt::Display::fmt(&LaurentPoly::from_shifted_poly(0, p), f)
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(LaurentPoly);

impl Scalar for LaurentPoly {
    const IS_FIELD: bool = false;

    fn from_rational(r: Rational) -> Self {
        LaurentPoly::constant(r)
    }

    fn specialize(p: &LaurentPoly, mode: &ScalarMode) -> Result<Self, ScalarError> {
        match mode {
            ScalarMode::GenericQ => Ok(p.clone()),
            other => Err(ScalarError::ModeMismatch {
                expected: ScalarMode::GenericQ.to_string(),
                found: other.to_string(),
            }),
        }
    }

    fn inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms().next()?;
        Some(LaurentPoly::monomial(c.recip(), -e))
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (sa, pa) = self.to_shifted_poly();
        let (sb, pb) = divisor.to_shifted_poly();
        let (quot, rem) = pa.div_rem(&pb);
        rem.is_zero().then(|| LaurentPoly::from_shifted_poly(sa - sb, &quot))
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

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn q_powers_multiply_by_adding_exponents() {
        assert_eq!(&LaurentPoly::q_pow(-1) * &LaurentPoly::q_pow(2), LaurentPoly::q());
    }

    #[test]
    fn cancellation_leaves_no_stored_zero() {
        let p = &LaurentPoly::q() - &LaurentPoly::q();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn rendering() {
        let p = LaurentPoly::from_terms([(2, rat(2, 1)), (-1, rat(-1, 3))]);
        assert_eq!(p.to_string(), "-1/3*q^-1+2*q^2");
        assert_eq!((LaurentPoly::one() + LaurentPoly::q_pow(2)).to_string(), "1+q^2");
        assert_eq!((-LaurentPoly::q()).to_string(), "-q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn eval_rejects_negative_powers_at_zero() {
        let p = LaurentPoly::q_pow(-1);
        assert!(matches!(p.eval_at(&Rational::zero()), Err(ScalarError::Domain(_))));
        assert_eq!(p.eval_at(&rat(2, 1)).unwrap(), rat(1, 2));
    }

    #[test]
    fn exact_division() {
        // (1 + q)(q^-1 - 2q) / (1 + q) = q^-1 - 2q
        let a = LaurentPoly::one() + LaurentPoly::q();
        let b = LaurentPoly::q_pow(-1) - LaurentPoly::from_int(2) * LaurentPoly::q();
        assert_eq!((&a * &b).exact_div(&a), Some(b));
        assert_eq!(LaurentPoly::q().exact_div(&a), None);
    }

    #[test]
    fn only_monomials_are_units() {
        let m = LaurentPoly::monomial(rat(3, 2), -4);
        assert_eq!(&m * &m.inverse().unwrap(), LaurentPoly::one());
        assert_eq!((LaurentPoly::one() + LaurentPoly::q()).inverse(), None);
    }
}
