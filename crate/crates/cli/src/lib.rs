//! Command-line front end: text formats for point sets, polynomials and
//! certificates, and the `ratdist` subcommands.

pub mod app;
pub mod cert_text;
pub mod expr;
pub mod formats;

pub use app::run;
