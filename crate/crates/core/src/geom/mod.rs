//! Points, rational sets and their transformations, position predicates,
//! and curve fitting.

mod fit;
mod integral;
mod point;
mod position;
mod rational;

pub use fit::{extract_curve_general, fit_curve, monomial_order, points_for_degree, points_on_curve};
pub use point::{dist2, NPt, NormalizedSet, Pt, Similarity};
pub use position::{collinear, concyclic, verify_general_position, Concyclicity};
pub use rational::{invert_set, normalize_set, rational_distance, verify_rational_set, y_coordinate, Verdict};
