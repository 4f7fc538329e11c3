//! Exact finite-dimensional representations of the Jordanian quantum
//! algebra `U_h(sl(2))`, built from classical `sl(2)` through a nonlinear
//! change of generators, together with their universal R-matrix images and
//! Yang-Baxter checks. All matrix entries are polynomials in the formal
//! parameter `h` with rational coefficients.

pub mod error;
pub mod fcoeff;
pub mod matrix;
pub mod numeric;
pub mod represent;
pub mod ring;
pub mod rmatrix;
pub mod series;
pub mod spin;
pub mod symmetric;
pub mod verify;
pub mod verma;

pub use error::{Error, Result};
pub use matrix::PolyMatrix;
pub use represent::{build_irrep, Irrep};
pub use ring::{HPoly, Rational};
pub use spin::{Epsilon, HalfInt};
