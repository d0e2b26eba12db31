//! Exact machinery for rational distance sets: quadratic-field arithmetic,
//! polynomial algebra, plane-curve analysis, finiteness certificates and
//! point-set constructions.

pub mod arith;
pub mod certify;
pub mod construct;
pub mod curveops;
pub mod error;
pub mod geom;
pub mod poly;

pub use error::{Error, ErrorKind, Result};
