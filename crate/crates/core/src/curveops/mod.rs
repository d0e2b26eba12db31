//! Plane-curve analysis: slices through the origin, bad slopes, isotropic
//! ramification, inversion, singular points, line/circle components and the
//! normal form of singular cubics through the circular points.

mod cubic;
mod curve;
mod factors;
mod inversion;
mod ramification;
mod singular;
mod slopes;
mod solve;

pub use cubic::{
    check_identity, closed_form, cubic_k2_normalize, cubic_parametrize, distance_numerator, forced_roots,
    product_hyperelliptic, qj_build, select_coprime_qj, CubicNormalForm, IdentityCheck, QjData,
};
pub use curve::Curve;
pub use factors::{line_circle_factor, Factor, FactorKind, FactorReport};
pub use inversion::{invert_curve, isotropic_norm};
pub use ramification::{cone_ramification_count, cone_slices, simple_roots_excluding, ConeSlices};
pub use singular::{
    conic_determinant, conic_is_degenerate, cubic_is_union_of_lines, find_singular_points, hessian,
    is_projectively_nonsingular,
};
pub use slopes::{
    bad_slope_discriminant, isotropic_slices, line_slice, origin_nonsingular, rotate_to_axis, slice_at,
    slice_leading_coefficient, Rotation,
};
pub use solve::{common_zeros, qf_roots, specialize_x, RootField};
