//! Cartan data, the diagonal Yetter-Drinfeld module, the quantum shuffle
//! product on `T(V)`, Nichols algebra components and the bosonization
//! `S(V)#𝕂[G]`.

mod algebra;
mod cartan;
mod nichols;

use thiserror::Error;

use crate::scalars::ScalarError;
use crate::yd::{smash, Smash};

pub use algebra::{q_factorial, Coaction, ShuffleAlgebra};
pub use cartan::{check_group, parse_cartan_config, validate_cartan, CartanConfig, CartanData};
pub use nichols::{
    coefficient_matrix, nichols_component, proportional, serre_kernel, specialize_at_one, words_of_content,
    NicholsComponent, SerreRelation, WORD_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShuffleError {
    #[error("invalid Cartan datum: {0}")]
    Cartan(String),
    #[error("{0}")]
    Usage(String),
    #[error("resource guard: {0}")]
    Resource(String),
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `S(V)#𝕂[G]`, the model of `U_q⁺` (generic `q`) or `u_q⁺` (root of unity).
pub type Bosonization<S> = Smash<ShuffleAlgebra<S>>;

pub fn bosonize<S: crate::scalars::Scalar>(cfg: &CartanConfig) -> Result<Bosonization<S>, ShuffleError> {
    Ok(smash(ShuffleAlgebra::new(cfg.cartan.clone(), cfg.group.clone())?))
}
