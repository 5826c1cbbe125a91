//! Ground-truth instances.
//!
//! [`generate_an`] builds `mod kA_n` over GF(2) from scratch by linear
//! algebra; [`Fixture`] builds finite windows of the derived category of
//! `kA_3` from its Auslander-Reiten quiver.

mod an;
mod fixtures;
pub mod gf2;
pub mod rep;

use thiserror::Error;

use crate::catspec::SpecError;

pub use an::{
    generate_an, generate_an_with_guard, intervals, IntervalModule, AN_CROSS_CHECK, AN_GUARD, AN_THETA_CAP,
};
pub use fixtures::{
    ext as za3_ext, fixture, hom as za3_hom, window, Fixture, Row, Vertex, TRIANGLES, WINDOW_GUARD,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("{what} = {value} is outside the supported range 1..={limit}")]
    GuardExceeded {
        what: String,
        value: usize,
        limit: usize,
    },
    #[error("unknown fixture `{0}` (expected final-example or db-window)")]
    UnknownFixture(String),
    #[error("missing parameter `{0}`")]
    MissingParameter(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
}
