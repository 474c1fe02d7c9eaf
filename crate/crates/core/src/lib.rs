//! Exact computation of cohomology jump loci: resonance varieties, tangent
//! cones of characteristic varieties, straightness and Dwyer–Fried sets, for
//! toric complexes, link complements, line arrangements and user-supplied
//! models.

pub mod aomoto;
pub mod arrangements;
pub mod cvmodel;
pub mod error;
pub mod laurent;
pub mod qlinalg;
pub mod simplicial;
pub mod toric;

pub use error::{Error, Result};
