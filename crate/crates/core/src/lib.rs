//! LQR synthesis for discrete-time linear systems with multiplicative noise,
//! together with certified perturbation bounds for the case where the noise
//! covariance is estimated from samples.
//!
//! The library covers the full pipeline:
//!
//! * [`system`] — the stacked system representation `x_{k+1} = A(w)x + B(w)u`
//!   and the Kronecker-lifted quadratic operators it induces;
//! * [`riccati`] — the stochastic Riccati equation, optimal gain synthesis and
//!   mean-square stability certification;
//! * [`lyapunov`] — generalized Lyapunov solves, exact closed-loop costs and
//!   operator norms;
//! * [`covariance`] — sample covariance, sub-Gaussian confidence radii and the
//!   tightest relative PSD band between a true and an estimated covariance;
//! * [`bounds`] — the sensitivity/offset constants table and the certified
//!   gain/value/suboptimality bounds, plus fixed-point diagnostics;
//! * [`sim`] / [`harness`] — seeded trajectory simulation and the
//!   estimate → synthesize → certify → measure experiment pipeline;
//! * [`io`] — CSV matrix files, system directories and flat key-value configs.
//!
//! All numerics are generic over the scalar type through [`Scalar`]; the
//! aliases at the crate root pin `f64`, which is what the CLI and the
//! experiment harness use. The bound arithmetic subtracts nearly equal
//! quantities, so `f32` is available but not recommended for certification.

use nalgebra::RealField;
use num_traits::{FromPrimitive, ToPrimitive};

pub mod bounds;
pub mod covariance;
pub mod error;
pub mod harness;
pub mod io;
pub mod linalg;
pub mod lyapunov;
pub mod riccati;
pub mod sim;
pub mod system;

/// Scalar type for all matrix computations: `f32` or `f64`.
pub trait Scalar: RealField + Copy + FromPrimitive + ToPrimitive {
    /// Lossless-enough conversion from `f64` for tolerances and literals.
    fn from_config(value: f64) -> Self {
        Self::from_f64(value).expect("scalar conversion from f64")
    }
}

impl<T: RealField + Copy + FromPrimitive + ToPrimitive> Scalar for T {}

pub use error::Error;

/// Result alias used across the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;

pub type SystemModel64 = system::SystemModel<f64>;
pub type AugmentedCovariance64 = system::AugmentedCovariance<f64>;
pub type StackedMatrix64 = system::StackedMatrix<f64>;
pub type RiccatiSolution64 = riccati::RiccatiSolution<f64>;
pub type LyapunovSolution64 = lyapunov::LyapunovSolution<f64>;
pub type CovarianceEstimate64 = covariance::CovarianceEstimate<f64>;
pub type RelativeBand64 = covariance::RelativeBand<f64>;
pub type ConstantsTable64 = bounds::ConstantsTable<f64>;
pub type BoundReport64 = bounds::BoundReport<f64>;
