//! Exact univariate and bivariate polynomials over [`Rat`](crate::arith::Rat),
//! [`QF`](crate::arith::QF) and [`GQF`](crate::arith::GQF).

mod bpoly;
mod gcd;
mod print;
mod resultant;
mod roots;
mod upoly;

pub use bpoly::BPoly;
pub use gcd::{is_squarefree, poly_gcd, simple_root_count, squarefree_decomposition, squarefree_part};
pub use print::Coeff;
pub use resultant::{bareiss_det, discriminant, resultant, sylvester_matrix, sylvester_resultant, Domain};
pub use roots::rational_roots;
pub use upoly::{exact_divide, UPoly};
