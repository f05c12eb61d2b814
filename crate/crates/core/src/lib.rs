//! Exact computation of fields of definition of iterated rational maps.

pub mod classify;
pub mod error;
pub mod families;
pub mod numfield;
pub mod pgl2;
pub mod polyrat;

pub use error::{Error, Result};
