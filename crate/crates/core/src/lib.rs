//! Exact computer algebra for Hodge invariants of nodal hypersurfaces in P^4
//! and Picard-Fuchs operators of one-parameter pencils.

pub mod cli;
pub mod error;
pub mod groebner;
pub mod hodge;
pub mod linalg;
pub mod pencil;
pub mod polyring;
pub mod scalars;

pub use error::{Error, Result};
