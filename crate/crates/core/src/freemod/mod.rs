//! Normalized finite linear combinations over canonical basis keys, tensor
//! keys, and exact linear algebra over the scalar domain.

mod element;
mod keys;
mod matrix;

pub use element::{Element, ElementError};
pub use keys::{BasisKey, GroupElt, GroupSpec, KeyContext, Pair, ParseKey, SmashKey, Tensor, Word};
pub use matrix::{rank_fraction_free, DomainMatrix, Echelon};

/// `x ⊗ y` over [`Pair`] keys.
pub fn tensor<A: BasisKey, B: BasisKey, S: crate::scalars::Scalar>(
    x: &Element<A, S>,
    y: &Element<B, S>,
) -> Element<Pair<A, B>, S> {
    x.tensor(y)
}
