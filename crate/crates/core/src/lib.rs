//! Self-verifying calculator for the fusion categories attached to simple
//! Lie groups: quantum and classical Weyl denominators, Lie superfactorials,
//! global dimensions of fusion and module categories, and the periodic
//! quiver tables of the quantum McKay correspondence. Closed formulas are
//! cross-checked against independent brute-force routes throughout.

pub mod checks;
pub mod embeddings;
pub mod error;
pub mod golden;
pub mod lie;
pub mod linalg;
pub mod moddim;
pub mod qnum;
pub mod quiver;
pub mod scalar;

pub use error::Error;
pub use lie::{Family, LieData, Root, Weight};
pub use qnum::QContext;
pub use scalar::Scalar;
