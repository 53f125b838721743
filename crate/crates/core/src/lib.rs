//! Exact computations in right-angled Coxeter groups and in the semi-regular
//! right-angled buildings built over them.
//!
//! * [`coxeter`]: diagrams, ShortLex normal forms, the dependence order on
//!   letters of a reduced word and firmness.
//! * [`lab`]: exhaustive searches for reduced increasing sequences and the
//!   length bound past which firmness exceeds `n`.

pub mod auto;
pub mod building;
pub mod coxeter;
pub mod error;
pub mod fixtures;
pub mod flex;
pub mod lab;

pub use error::{Error, Result};
