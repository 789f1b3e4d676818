//! Weighted orthogonality of Legendre polynomials under the arcsine measure
//! divided by the normalized Christoffel function.
//!
//! For `0 <= i, j <= n`,
//!
//! ```text
//! ∫_{-1}^{1} P_i^*(x) P_j^*(x) / K_n(x) · dx / (π sqrt(1 - x²)) = δ_ij,
//! K_n(x) = (1/(n+1)) Σ_{k<=n} P_k^*(x)²,
//! ```
//!
//! where `P_k^*` are the orthonormal Legendre polynomials. The crate checks
//! this identity two ways: exactly, in rational arithmetic, through the
//! explicit factorization `K_n(J(z)) = F_n(z) F_n(1/z) / (2(n+1))` and a
//! partial-fraction reduction of the contour moments; and numerically, with
//! the periodic trapezoid rule. The [`sampling_ls`] module applies it to
//! least-squares regression from arcsine-distributed samples in the basis
//! `Q_j = P_j^* / sqrt(K_n)`, whose stability factor is exactly `n + 1`.

pub mod certificate;
pub mod christoffel;
pub mod cli;
pub mod error;
pub mod factorization;
pub mod legendre;
pub mod partial_fractions;
pub mod quadrature_verify;
pub mod ratpoly;
pub mod sampling_ls;

pub use certificate::{Certificate, Status};
pub use error::{Error, Result};
pub use ratpoly::{LaurentPoly, Rational, Surd};
