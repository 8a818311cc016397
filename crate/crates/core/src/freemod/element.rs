use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use thiserror::Error;

use super::keys::{BasisKey, KeyContext, Pair, ParseKey};
use crate::parse::{self, ParseError};
use crate::scalars::{Scalar, ScalarError, ScalarMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElementError {
    #[error("syntax error: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A finite linear combination of basis keys.
///
/// Always normalized: no zero coefficients, terms in key order. The empty map
/// is the zero element.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<K, S> {
    terms: BTreeMap<K, S>,
}

impl<K: BasisKey, S: Scalar> Element<K, S> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn basis(key: K) -> Self {
        Self::monomial(key, S::one())
    }

    pub fn monomial(key: K, coeff: S) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    /// Sums coefficients of equal keys and drops zeros.
    pub fn normalize<I: IntoIterator<Item = (K, S)>>(raw: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in raw {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, key: K, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add_ref(&coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self += coeff * other`
    pub fn add_scaled(&mut self, other: &Self, coeff: &S) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.mul_ref(coeff));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &S)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> S {
        self.terms.get(key).cloned().unwrap_or_else(S::zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::normalize(self.terms.iter().map(|(k, v)| (k.clone(), v.mul_ref(c))))
    }

    /// Extends a rule on basis keys linearly.
    pub fn map_linear<K2: BasisKey>(&self, mut rule: impl FnMut(&K) -> Element<K2, S>) -> Element<K2, S> {
        let mut out = Element::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&rule(k), c);
        }
        out
    }

    /// Maps keys one-to-one (or many-to-one) keeping coefficients.
    pub fn map_keys<K2: BasisKey>(&self, mut f: impl FnMut(&K) -> K2) -> Element<K2, S> {
        Element::normalize(self.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// `Σ_{k,k'} x_k y_{k'} rule(k, k')`.
    pub fn bilinear<K2: BasisKey, K3: BasisKey>(
        &self,
        other: &Element<K2, S>,
        mut rule: impl FnMut(&K, &K2) -> Element<K3, S>,
    ) -> Element<K3, S> {
        let mut out = Element::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_scaled(&rule(a, b), &ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn tensor<K2: BasisKey>(&self, other: &Element<K2, S>) -> Element<Pair<K, K2>, S> {
        self.bilinear(other, |a, b| Element::basis(Pair(a.clone(), b.clone())))
    }

    /// Parses text in the element grammar, specializing coefficients into
    /// `mode`.
    pub fn parse(text: &str, ctx: &KeyContext, mode: &ScalarMode) -> Result<Self, ElementError>
    where
        K: ParseKey,
    {
        let mut out = Self::zero();
        for t in parse::parse_terms(text)? {
            let key = K::from_raw(&t.key, ctx)?;
            out.add_term(key, S::specialize(&t.coeff, mode)?);
        }
        Ok(out)
    }
}

impl<K: BasisKey, S: Scalar> Default for Element<K, S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: BasisKey, S: Scalar> FromIterator<(K, S)> for Element<K, S> {
    fn from_iter<I: IntoIterator<Item = (K, S)>>(iter: I) -> Self {
        Self::normalize(iter)
    }
}

impl<'a, K: BasisKey, S: Scalar> Add<&'a Element<K, S>> for &'a Element<K, S> {
    type Output = Element<K, S>;
    fn add(self, rhs: &'a Element<K, S>) -> Element<K, S> {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl<'a, K: BasisKey, S: Scalar> Sub<&'a Element<K, S>> for &'a Element<K, S> {
    type Output = Element<K, S>;
    fn sub(self, rhs: &'a Element<K, S>) -> Element<K, S> {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(k.clone(), c.neg_ref());
        }
        out
    }
}

impl<K: BasisKey, S: Scalar> Neg for &Element<K, S> {
    type Output = Element<K, S>;
    fn neg(self) -> Element<K, S> {
        Element { terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg_ref())).collect() }
    }
}

impl<K: BasisKey, S: Scalar> Add for Element<K, S> {
    type Output = Element<K, S>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<K: BasisKey, S: Scalar> Sub for Element<K, S> {
    type Output = Element<K, S>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<K: BasisKey, S: Scalar> Neg for Element<K, S> {
    type Output = Element<K, S>;
    fn neg(self) -> Self {
        -&self
    }
}

/// Whether a rendered coefficient needs parentheses before `*key`.
fn is_compound(s: &str) -> bool {
    let b = s.as_bytes();
    (1..b.len()).any(|i| (b[i] == b'+' || b[i] == b'-') && b[i - 1] != b'^')
}

fn render_term<K: fmt::Display, S: fmt::Display>(key: &K, c: &S) -> String {
    let cs = c.to_string();
    match cs.as_str() {
        "1" => key.to_string(),
        "-1" => format!("-{key}"),
        _ if is_compound(&cs) => format!("({cs})*{key}"),
        _ => format!("{cs}*{key}"),
    }
}

/// Renders as `t1 + t2 - t3`, or `0` for the zero element.
impl<K: fmt::Display, S: fmt::Display> fmt::Display for Element<K, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let t = render_term(k, c);
            match (i, t.strip_prefix('-')) {
                (0, _) => write!(f, "{t}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {t}")?,
            }
        }
        Ok(())
    }
}

impl<K: fmt::Display, S: fmt::Display> fmt::Debug for Element<K, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freemod::{GroupElt, GroupSpec, SmashKey, Word};
    use crate::scalars::LaurentPoly;
    use num_traits::One;

    type E = Element<Word, LaurentPoly>;

    fn w(ls: &[u32]) -> Word {
        Word(ls.to_vec())
    }

    fn lp(n: i64) -> LaurentPoly {
        LaurentPoly::from_int(n)
    }

    #[test]
    fn normalize_sums_equal_keys() {
        let e = E::normalize([(w(&[1]), lp(2)), (w(&[1]), lp(3))]);
        assert_eq!(e, E::monomial(w(&[1]), lp(5)));
    }

    #[test]
    fn normalize_drops_cancelled_terms() {
        let q = LaurentPoly::q();
        let e = E::normalize([(w(&[1]), q.clone()), (w(&[1]), -q)]);
        assert!(e.is_zero());
        assert_eq!(e.to_string(), "0");
    }

    #[test]
    fn normalize_orders_keys() {
        let e = E::normalize([(w(&[2]), lp(1)), (w(&[1]), lp(1))]);
        let keys: Vec<_> = e.keys().cloned().collect();
        assert_eq!(keys, vec![w(&[1]), w(&[2])]);
        assert_eq!(e.to_string(), "[e1] + [e2]");
    }

    #[test]
    fn bilinear_extension() {
        let rule = |a: &Word, b: &Word| {
            let mut v = a.0.clone();
            v.extend_from_slice(&b.0);
            E::basis(Word(v))
        };
        let a = E::basis(w(&[1]));
        let b = E::basis(w(&[2]));
        assert!(E::zero().bilinear(&b, rule).is_zero());
        assert_eq!(
            a.scale(&lp(2)).bilinear(&b.scale(&lp(3)), rule),
            E::monomial(w(&[1, 2]), lp(6))
        );
        let c = E::basis(w(&[3]));
        assert_eq!((&a + &b).bilinear(&c, rule), &a.bilinear(&c, rule) + &b.bilinear(&c, rule));
    }

    #[test]
    fn tensor_multiplies_coefficients() {
        let q = LaurentPoly::q();
        let a = E::monomial(w(&[1]), q.clone());
        let b = E::monomial(w(&[2]), q.clone());
        let t = a.tensor(&b);
        assert_eq!(t.coeff(&Pair(w(&[1]), w(&[2]))), &q * &q);
        let sum = (&E::basis(w(&[1])) + &E::basis(w(&[2]))).tensor(&E::basis(w(&[3])));
        assert_eq!(sum.len(), 2);
    }

    #[test]
    fn rendering_parenthesizes_compound_coefficients() {
        let c = LaurentPoly::one() + LaurentPoly::q_pow(2);
        assert_eq!(E::monomial(w(&[1, 1]), c).to_string(), "(1+q^2)*[e1,e1]");
        assert_eq!(E::monomial(w(&[1]), LaurentPoly::q_pow(-1)).to_string(), "q^-1*[e1]");
        let e = E::normalize([(w(&[1]), lp(1)), (w(&[2]), lp(-2))]);
        assert_eq!(e.to_string(), "[e1] - 2*[e2]");
        let neg = E::normalize([(w(&[1]), -(LaurentPoly::one() + LaurentPoly::q()))]);
        assert_eq!(neg.to_string(), "(-1-q)*[e1]");
    }

    #[test]
    fn parse_smash_and_errors() {
        let ctx = KeyContext { letters: Some(2), group: Some(GroupSpec::free(2)) };
        type Sm = Element<SmashKey<Word, GroupElt>, LaurentPoly>;
        let e = Sm::parse("[e1,e2] # K1^2*K2^-1", &ctx, &ScalarMode::GenericQ).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.to_string(), "[e1,e2]#K1^2*K2^-1");
        let err = E::parse("[e3]", &ctx, &ScalarMode::GenericQ).unwrap_err();
        assert!(err.to_string().contains("letter out of range"));
        assert!(Sm::parse("[e1] + [e2]#K1", &ctx, &ScalarMode::GenericQ).is_err());
        let two = E::parse("(q^2+1)*[e1] + [e2]", &ctx, &ScalarMode::GenericQ).unwrap();
        assert_eq!(two.len(), 2);
    }
}
