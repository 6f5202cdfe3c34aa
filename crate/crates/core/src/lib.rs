//! Exact two-base ("post-quantum") calculus over Gaussian rationals.
//!
//! The crate is organised around a sparse multivariate Laurent polynomial
//! ring with exact complex-rational coefficients.  On top of it sit the
//! (p,q)-combinatorial primitives (brackets, factorials, shifted factorials,
//! Gauss binomials, power bases), two-base derivative operators, truncated
//! formal power series with per-degree denominator schedules, the bivariate
//! Hermite-type polynomial families H, G and their modified variants, and a
//! catalog of exactly checkable identities relating all of the above.
//!
//! Everything symbolic is exact: the base pair (p, q) is represented as
//! (s^2, t^2) so that half-integer powers of p and q stay inside the Laurent
//! ring, and every identity with a non-monomial denominator is compared in
//! denominator-cleared form.  Floating point appears only in the `numeric`
//! module, which cross-checks the exact tables against direct evaluation.

pub mod scalar;
pub mod vars;
pub mod poly;
pub mod frac;
pub mod pqcore;
pub mod calculus;
pub mod series;
pub mod hermite;
pub mod verify;
pub mod numeric;
pub mod exprlang;
pub mod emit;

pub use frac::{Coef, FactorBag};
pub use poly::LaurentPoly;
pub use scalar::GaussianRational;
pub use series::{ExpSpec, TruncSeries, Truncation};
pub use vars::{Monomial, Term, VarId};

/// Complex double precision, the default numeric evaluation scalar.
pub type Complex64 = num_complex::Complex<f64>;
/// Complex single precision, for callers that trade accuracy for size.
pub type Complex32 = num_complex::Complex<f32>;
