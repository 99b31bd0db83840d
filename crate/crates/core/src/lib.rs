//! Block structure, BGG resolutions, cohomology and Ext tables for Category O
//! of the Virasoro algebra, computed exactly from highest-weight data `(h, c)`,
//! together with a brute-force quiver-algebra oracle for chain blocks.

pub mod arith;
pub mod block;
pub mod characters;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
