//! Kauffman brackets, colored Jones polynomials and adequacy-based
//! crossing number tools for knot diagrams.

pub mod bounds;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod jones;
pub mod laurent;
pub mod par;
pub mod skein;
mod util;

pub use diagram::{parse_pd, Diagram};
pub use error::{Error, Result};
pub use laurent::{DegreeBounds, LaurentPoly, LaurentRatio};
pub use par::Exec;
