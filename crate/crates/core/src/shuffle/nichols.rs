use num_traits::Zero;

use super::algebra::ShuffleAlgebra;
use super::ShuffleError;
use crate::freemod::{DomainMatrix, Element, Word};
use crate::scalars::{LaurentPoly, Rational, Scalar};

/// Default bound on the number of words of one content.
pub const WORD_LIMIT: usize = 720;

/// One content-graded piece of the Nichols algebra: the products
/// `e_{s_1} ∗ ⋯ ∗ e_{s_n}` over all letter sequences `s` of the content,
/// their coefficient matrix against the words of that content, and its rank.
#[derive(Clone)]
pub struct NicholsComponent<S> {
    pub content: Vec<u32>,
    /// Letter sequences, which are also the column words, in lexicographic order.
    pub words: Vec<Word>,
    pub products: Vec<Element<Word, S>>,
    pub matrix: DomainMatrix<S>,
    pub rank: usize,
}

/// All distinct arrangements of the multiset given by `content`, sorted.
pub fn words_of_content(content: &[u32]) -> Vec<Word> {
    fn go(content: &mut [u32], prefix: &mut Vec<u32>, out: &mut Vec<Word>) {
        if content.iter().all(|&c| c == 0) {
            out.push(Word(prefix.clone()));
            return;
        }
        for i in 0..content.len() {
            if content[i] > 0 {
                content[i] -= 1;
                prefix.push(i as u32 + 1);
                go(content, prefix, out);
                prefix.pop();
                content[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut content.to_vec(), &mut Vec::new(), &mut out);
    out
}

fn word_count(content: &[u32]) -> u128 {
    let mut total = 0u128;
    let mut acc = 1u128;
    for &c in content {
        for k in 1..=c as u128 {
            total += 1;
            acc = acc * total / k;
        }
    }
    acc
}

/// Builds the content-graded piece. Contents with more than [`WORD_LIMIT`]
/// words are refused unless `allow_large`.
pub fn nichols_component<S: Scalar>(
    alg: &ShuffleAlgebra<S>,
    content: &[u32],
    allow_large: bool,
) -> Result<NicholsComponent<S>, ShuffleError> {
    if content.len() != alg.letters() as usize {
        return Err(ShuffleError::Usage(format!(
            "content has {} entries but there are {} letters",
            content.len(),
            alg.letters()
        )));
    }
    let count = word_count(content);
    if count > WORD_LIMIT as u128 && !allow_large {
        return Err(ShuffleError::Resource(format!(
            "content {content:?} spans {count} words, above the limit of {WORD_LIMIT}"
        )));
    }
    let words = words_of_content(content);
    let products: Vec<_> = words.iter().map(|s| alg.letter_product(s.letters())).collect();
    let matrix = coefficient_matrix(&products, &words);
    let rank = matrix.rank();
    Ok(NicholsComponent { content: content.to_vec(), words, products, matrix, rank })
}

/// Row `r` holds the coefficients of `rows[r]` on `cols`.
pub fn coefficient_matrix<S: Scalar>(rows: &[Element<Word, S>], cols: &[Word]) -> DomainMatrix<S> {
    DomainMatrix::from_rows(rows.iter().map(|e| cols.iter().map(|w| e.coeff(w)).collect()).collect())
}

/// Linear relations among the products of generators of content
/// `(1 − a_ij)ε_i + ε_j`: the q-Serre relation.
#[derive(Clone)]
pub struct SerreRelation<S> {
    pub component: NicholsComponent<S>,
    /// Basis of the left kernel: coefficient vectors over the sequences.
    pub kernel: Vec<Vec<S>>,
}

pub fn serre_kernel<S: Scalar>(alg: &ShuffleAlgebra<S>, i: u32, j: u32) -> Result<SerreRelation<S>, ShuffleError> {
    let n = alg.letters();
    if i == j {
        return Err(ShuffleError::Usage("serre_kernel needs two distinct letters".into()));
    }
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(ShuffleError::Usage(format!("letters must lie in 1..={n}")));
    }
    let mut content = vec![0u32; n as usize];
    content[i as usize - 1] = (1 - alg.cartan().entry(i as usize, j as usize)) as u32;
    content[j as usize - 1] = 1;
    let component = nichols_component(alg, &content, false)?;
    let kernel = component.matrix.left_kernel();
    Ok(SerreRelation { component, kernel })
}

/// The classical limit of a kernel vector: evaluate at `q = 1`, first
/// dividing out the largest power of `(q − 1)` common to all entries so the
/// result is nonzero.
pub fn specialize_at_one(v: &[LaurentPoly]) -> Vec<Rational> {
    let one = Rational::from_integer(1.into());
    let q_minus_one = LaurentPoly::q() - LaurentPoly::from_int(1);
    let mut v = v.to_vec();
    loop {
        let at_one: Vec<Rational> = v.iter().map(|p| p.eval_at(&one).expect("q = 1 is never a pole")).collect();
        if at_one.iter().any(|x| !x.is_zero()) || v.iter().all(|p| p.is_zero()) {
            return at_one;
        }
        v = v.iter().map(|p| p.exact_div(&q_minus_one).expect("every entry vanishes at 1")).collect();
    }
}

/// `a` and `b` span the same line (both nonzero).
pub fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    let Some(k) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[k].is_zero() {
        return false;
    }
    let r = &b[k] / &a[k];
    a.iter().zip(b).all(|(x, y)| &(x * &r) == y)
}
