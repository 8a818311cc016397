use std::collections::HashMap;
use std::sync::Mutex;

use rand::Rng;

use super::cartan::{check_group, CartanData};
use super::ShuffleError;
use crate::freemod::{Element, GroupElt, GroupSpec, Pair, Word};
use crate::hopf::{group_algebra, Algebra, GroupAlgebra};
use crate::module::OverHopf;
use crate::scalars::Scalar;
use crate::verify::{SamplePlan, SampleRng};
use crate::yd::YetterDrinfeld;

/// Which coaction the letters carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coaction {
    /// `δ(e_i) = K_i ⊗ e_i`, extended multiplicatively to words.
    Diagonal,
    /// Negative control: single letters get `1 ⊗ e_i` while longer words
    /// keep the diagonal coaction, so `δ` is no longer multiplicative.
    CorruptLetters,
}

/// The quantum shuffle algebra on `T(V)` for a diagonal Yetter-Drinfeld
/// module `V` over `𝕂[G]`: `K_i·e_j = q_ij e_j`, `δ(e_i) = K_i ⊗ e_i`.
///
/// Samples are drawn from the Nichols algebra `S(V)`: shuffle products of
/// random letters.
pub struct ShuffleAlgebra<S> {
    cartan: CartanData,
    group: GroupAlgebra,
    q: Vec<Vec<S>>,
    coaction: Coaction,
    memo: Mutex<HashMap<(Word, Word), Element<Word, S>>>,
}

impl<S: Scalar> ShuffleAlgebra<S> {
    /// Fails when `S` does not match the datum's mode or the group does not
    /// match the mode.
    pub fn new(cartan: CartanData, group: GroupSpec) -> Result<Self, ShuffleError> {
        Self::with_coaction(cartan, group, Coaction::Diagonal)
    }

    pub fn with_coaction(cartan: CartanData, group: GroupSpec, coaction: Coaction) -> Result<Self, ShuffleError> {
        check_group(&cartan, &group)?;
        let n = cartan.rank();
        let q = (1..=n)
            .map(|i| (1..=n).map(|j| cartan.qij(i, j)).collect::<Result<Vec<S>, _>>())
            .collect::<Result<_, _>>()?;
        Ok(ShuffleAlgebra { cartan, group: group_algebra(group), q, coaction, memo: Mutex::new(HashMap::new()) })
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn letters(&self) -> u32 {
        self.cartan.rank() as u32
    }

    /// `q_ij` with letters numbered from 1.
    pub fn q(&self, i: u32, j: u32) -> &S {
        &self.q[i as usize - 1][j as usize - 1]
    }

    /// Quantum shuffle of basis words:
    /// `(e_{i_1}u') ∗ (e_{j_1}w') = e_{i_1}(u' ∗ w) + Π_k q_{i_k j_1} · e_{j_1}(u ∗ w')`.
    pub fn shuffle_words(&self, u: &Word, w: &Word) -> Element<Word, S> {
        if u.is_empty() {
            return Element::basis(w.clone());
        }
        if w.is_empty() {
            return Element::basis(u.clone());
        }
        let key = (u.clone(), w.clone());
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let i1 = u.0[0];
        let j1 = w.0[0];
        let mut out = self.shuffle_words(&Word(u.0[1..].to_vec()), w).map_keys(|k| k.prepend(i1));
        let coeff = u.0.iter().fold(S::one(), |acc, &i| acc.mul_ref(self.q(i, j1)));
        let tail = self.shuffle_words(u, &Word(w.0[1..].to_vec())).map_keys(|k| k.prepend(j1));
        out.add_scaled(&tail, &coeff);
        self.memo.lock().expect("memo lock").insert(key, out.clone());
        out
    }

    pub fn shuffle(&self, u: &Element<Word, S>, w: &Element<Word, S>) -> Element<Word, S> {
        u.bilinear(w, |a, b| self.shuffle_words(a, b))
    }

    /// `e_{s_1} ∗ e_{s_2} ∗ ⋯ ∗ e_{s_n}`, the empty word for an empty sequence.
    pub fn letter_product(&self, seq: &[u32]) -> Element<Word, S> {
        seq.iter().fold(Element::basis(Word::empty()), |acc, &l| self.shuffle(&acc, &Element::basis(Word::letter(l))))
    }

    /// The `n`-fold shuffle power of `e_i`.
    pub fn shuffle_power(&self, i: u32, n: usize) -> Element<Word, S> {
        self.letter_product(&vec![i; n])
    }

    /// `Σ_i a_i d_i a_{i,l}` summed over the letters `l` of `w`: the
    /// exponent of `q` in `K^a·w`.
    fn action_exponent(&self, g: &GroupElt, w: &Word) -> i64 {
        let mut e = 0;
        for &l in w.letters() {
            for (i, &a) in g.exponents().iter().enumerate() {
                e += a * self.cartan.q_exponent(i + 1, l as usize);
            }
        }
        e
    }

    fn grade(&self, w: &Word) -> GroupElt {
        let content = w.content(self.cartan.rank());
        self.group.spec().reduce(content.into_iter().map(i64::from).collect())
    }
}

/// `[n]_t! = Π_{k=1}^{n} (1 + t + ⋯ + t^{k−1})`
pub fn q_factorial<S: Scalar>(t: &S, n: usize) -> S {
    let mut acc = S::one();
    let mut bracket = S::zero();
    let mut power = S::one();
    for _ in 0..n {
        bracket = bracket.add_ref(&power);
        power = power.mul_ref(t);
        acc = acc.mul_ref(&bracket);
    }
    acc
}

impl<S: Scalar> Algebra<S> for ShuffleAlgebra<S> {
    type Key = Word;

    fn mul_basis(&self, a: &Word, b: &Word) -> Element<Word, S> {
        self.shuffle_words(a, b)
    }

    fn unit(&self) -> Option<Element<Word, S>> {
        Some(Element::basis(Word::empty()))
    }

    fn sample_basis_element(&self, rng: &mut SampleRng, plan: &SamplePlan) -> Element<Word, S> {
        let len = rng.gen_range(0..=plan.max_degree as usize);
        let seq: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=self.letters())).collect();
        self.letter_product(&seq)
    }
}

impl<S: Scalar> OverHopf<S> for ShuffleAlgebra<S> {
    type Hopf = GroupAlgebra;

    fn hopf(&self) -> &GroupAlgebra {
        &self.group
    }
}

impl<S: Scalar> YetterDrinfeld<S> for ShuffleAlgebra<S> {
    fn yd_act_basis(&self, g: &GroupElt, w: &Word) -> Element<Word, S> {
        let c = S::q_pow(self.action_exponent(g, w), self.cartan.mode()).expect("mode fixed at construction");
        Element::monomial(w.clone(), c)
    }

    fn yd_coact_basis(&self, w: &Word) -> Element<Pair<GroupElt, Word>, S> {
        let g = match self.coaction {
            Coaction::CorruptLetters if w.len() == 1 => self.group.spec().identity(),
            _ => self.grade(w),
        };
        Element::basis(Pair(g, w.clone()))
    }
}
