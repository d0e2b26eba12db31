//! Point-set generators: rational sets on the unit circle and on a line,
//! the inversion taking one to the other, and an exhaustive search for
//! small integral sets in general position.

mod generators;
mod search;

pub use generators::{line_rational_set, transfer_line_to_circle, unit_circle_rational_set};
pub use search::{integral_search, search_estimate, IntegralSet, SearchConfig, SEARCH_LIMIT};
