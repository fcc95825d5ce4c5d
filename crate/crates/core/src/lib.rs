//! Harmonic analysis for the rank-one trigonometric Dunkl (Opdam) setting
//! on the circle: non-symmetric Jacobi polynomials, Gauss rules, spectral
//! multipliers, the Poisson integral, generalized translation and the
//! singular integral operators built from them.

mod chord;
pub mod expr;
pub mod error;
pub mod poisson;
pub mod product;
pub mod quadrature;
pub mod singular;
pub mod special_fn;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use quadrature::{GridFunction, QuadratureRule};
pub use special_fn::Multiplicity;
pub use spectral::SpectralExpansion;
