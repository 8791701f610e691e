//! Exact scalar and polynomial kernel.

pub mod binary_form;
pub mod matrix;
pub mod poly;
pub mod rat;
pub mod resultant;

pub use binary_form::{discriminant3, implicitize_cubic_curve, BinaryForm3};
pub use matrix::{det_rat, kernel_rat, mat_mul_rat, mat_vec_rat, solve_rat, MatR};
pub use poly::Poly;
pub use rat::{fmt_rat, int, parse_rat, rat, Rat};
pub use resultant::{resultant, sylvester};
