use std::fmt;
use std::hash::Hash;

use crate::parse::{KeyFactor, ParseError, RawKey};

/// Labels of basis vectors. The derived `Ord` is the canonical term order.
pub trait BasisKey: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {}

impl<T> BasisKey for T where T: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {}

/// `ℤ^r × ℤ/l_1 × ⋯ × ℤ/l_p` with generators `K_1, …, K_N`, `N = r + p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    free_rank: usize,
    torsion: Vec<u32>,
}

impl GroupSpec {
    /// Torsion orders must be at least 2.
    pub fn new(free_rank: usize, torsion: Vec<u32>) -> Result<Self, String> {
        if let Some(bad) = torsion.iter().find(|&&l| l < 2) {
            return Err(format!("torsion order {bad} is below 2"));
        }
        Ok(GroupSpec { free_rank, torsion })
    }

    pub fn free(rank: usize) -> Self {
        GroupSpec { free_rank: rank, torsion: Vec::new() }
    }

    pub fn cyclic(order: u32, copies: usize) -> Self {
        GroupSpec { free_rank: 0, torsion: vec![order; copies] }
    }

    /// The trivial group; its group algebra is the ground field.
    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u32] {
        &self.torsion
    }

    /// Modulus of coordinate `i`, 0 for a free coordinate.
    pub fn modulus(&self, i: usize) -> u32 {
        if i < self.free_rank {
            0
        } else {
            self.torsion[i - self.free_rank]
        }
    }

    pub fn reduce(&self, mut exps: Vec<i64>) -> GroupElt {
        debug_assert_eq!(exps.len(), self.rank());
        for (i, e) in exps.iter_mut().enumerate() {
            let m = self.modulus(i);
            if m != 0 {
                *e = e.rem_euclid(m as i64);
            }
        }
        GroupElt(exps)
    }

    pub fn identity(&self) -> GroupElt {
        GroupElt(vec![0; self.rank()])
    }

    /// `K_i^e` with `i` starting at 1.
    pub fn generator_power(&self, i: usize, e: i64) -> GroupElt {
        let mut exps = vec![0; self.rank()];
        exps[i - 1] = e;
        self.reduce(exps)
    }

    pub fn mul(&self, a: &GroupElt, b: &GroupElt) -> GroupElt {
        self.reduce(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn inverse(&self, a: &GroupElt) -> GroupElt {
        self.reduce(a.0.iter().map(|x| -x).collect())
    }
}

/// A group element as its exponent vector over `K_1, …, K_N`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElt(pub Vec<i64>);

impl GroupElt {
    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for GroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match e {
                1 => write!(f, "K{}", i + 1)?,
                _ => write!(f, "K{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

/// A tensor word `e_{i_1} ⊗ ⋯ ⊗ e_{i_n}`, letters numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: u32) -> Self {
        Word(vec![i])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter multiplicities, indexed from letter 1.
    pub fn content(&self, n_letters: usize) -> Vec<u32> {
        let mut c = vec![0; n_letters];
        for &l in &self.0 {
            c[l as usize - 1] += 1;
        }
        c
    }

    /// `e_i ⊗ self`
    pub fn prepend(&self, i: u32) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(i);
        v.extend_from_slice(&self.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "e{l}")?;
        }
        write!(f, "]")
    }
}

/// `v # h` in a smash product.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmashKey<V, H> {
    pub v: V,
    pub h: H,
}

impl<V, H> SmashKey<V, H> {
    pub fn new(v: V, h: H) -> Self {
        SmashKey { v, h }
    }
}

impl<V: fmt::Display, H: fmt::Display> fmt::Display for SmashKey<V, H> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.v, self.h)
    }
}

/// A pure tensor `a ⊗ b` of basis keys.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.0, self.1)
    }
}

/// A pure tensor `a_1 ⊗ ⋯ ⊗ a_n` of basis keys of one kind, used for
/// iterated coproducts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<K>(pub Vec<K>);

impl<K: fmt::Display> fmt::Display for Tensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// What the parser needs to know to validate keys.
#[derive(Debug, Clone, Default)]
pub struct KeyContext {
    /// Number of letters `e_1..e_N` for words.
    pub letters: Option<u32>,
    /// Group for `K_i` factors.
    pub group: Option<GroupSpec>,
}

/// Turns parsed key factors into a typed basis key.
pub trait ParseKey: Sized {
    fn from_factors(factors: &[KeyFactor], ctx: &KeyContext, position: usize)
        -> Result<Self, ParseError>;

    fn from_raw(raw: &RawKey, ctx: &KeyContext) -> Result<Self, ParseError> {
        if raw.right.is_some() {
            return Err(ParseError::new(raw.position, "unexpected `#` for this key kind"));
        }
        Self::from_factors(&raw.left, ctx, raw.position)
    }
}

impl ParseKey for GroupElt {
    fn from_factors(
        factors: &[KeyFactor],
        ctx: &KeyContext,
        position: usize,
    ) -> Result<Self, ParseError> {
        let spec = ctx
            .group
            .as_ref()
            .ok_or_else(|| ParseError::new(position, "no group configured"))?;
        let mut exps = vec![0i64; spec.rank()];
        for f in factors {
            match f {
                KeyFactor::K { index, exp } => {
                    let i = *index as usize;
                    if i > spec.rank() {
                        return Err(ParseError::new(
                            position,
                            format!("group generator K{i} out of range (N = {})", spec.rank()),
                        ));
                    }
                    exps[i - 1] += exp;
                }
                _ => return Err(ParseError::new(position, "expected a group element")),
            }
        }
        Ok(spec.reduce(exps))
    }
}

impl ParseKey for Word {
    fn from_factors(
        factors: &[KeyFactor],
        ctx: &KeyContext,
        position: usize,
    ) -> Result<Self, ParseError> {
        let [KeyFactor::Word(letters)] = factors else {
            return Err(ParseError::new(position, "expected a single word `[e..]`"));
        };
        if let Some(n) = ctx.letters {
            if let Some(bad) = letters.iter().find(|&&l| l > n) {
                return Err(ParseError::new(
                    position,
                    format!("letter out of range: e{bad} with N = {n}"),
                ));
            }
        }
        Ok(Word(letters.clone()))
    }
}

impl<V: ParseKey, H: ParseKey> ParseKey for SmashKey<V, H> {
    fn from_factors(_: &[KeyFactor], _: &KeyContext, position: usize) -> Result<Self, ParseError> {
        Err(ParseError::new(position, "expected a smash key `v # h`"))
    }

    fn from_raw(raw: &RawKey, ctx: &KeyContext) -> Result<Self, ParseError> {
        let Some(right) = &raw.right else {
            return Self::from_factors(&raw.left, ctx, raw.position);
        };
        Ok(SmashKey {
            v: V::from_factors(&raw.left, ctx, raw.position)?,
            h: H::from_factors(right, ctx, raw.position)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torsion_exponents_reduce() {
        let g = GroupSpec::cyclic(3, 1);
        let a = g.generator_power(1, 2);
        assert_eq!(g.mul(&a, &a), g.generator_power(1, 1));
        assert_eq!(g.inverse(&a).0, vec![1]);
    }

    #[test]
    fn group_rendering() {
        let g = GroupSpec::free(2);
        assert_eq!(g.identity().to_string(), "1");
        assert_eq!(g.reduce(vec![2, -1]).to_string(), "K1^2*K2^-1");
        assert_eq!(g.reduce(vec![1, 0]).to_string(), "K1");
    }

    #[test]
    fn word_order_and_content() {
        let mut ws = vec![Word(vec![2]), Word(vec![1, 2]), Word::empty(), Word(vec![1])];
        ws.sort();
        assert_eq!(ws, vec![Word::empty(), Word(vec![1]), Word(vec![1, 2]), Word(vec![2])]);
        assert_eq!(Word(vec![1, 2, 1]).content(3), vec![2, 1, 0]);
        assert_eq!(Word(vec![1, 2]).to_string(), "[e1,e2]");
    }

    #[test]
    fn bad_torsion_is_rejected() {
        assert!(GroupSpec::new(1, vec![1]).is_err());
        assert_eq!(GroupSpec::new(1, vec![3]).unwrap().rank(), 2);
    }
}
