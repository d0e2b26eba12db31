//! Finiteness certificates: Riemann–Hurwitz bounds, hyperelliptic models,
//! the obstruction for points off a line, and the decision pipeline.

mod hyper;
mod obstruction;
mod pipeline;

pub use hyper::{hyperelliptic_genus, rh_lower_bound, squarefree_product, HyperModel, RamificationReport};
pub use obstruction::{build_line_obstruction, reduce_circle_to_line, ImageRole, Provenance};
pub use pipeline::{certify_curve, CaseTag, Certificate, CertifyOptions, Conclusion, GenusBasis, Witness};
