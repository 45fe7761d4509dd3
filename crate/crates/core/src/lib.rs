//! Numerical toolkit for striped phases of the Swift-Hohenberg equation
//! pinned by a localized inhomogeneity.
//!
//! The pipeline solves the 1D periodic stripe profile spectrally, continues
//! the critical Bloch eigenvalue branch to obtain effective diffusivities,
//! locates pinning offsets as nondegenerate zeros of the projection of the
//! forcing onto the translation mode, predicts the far-field dipole
//! deformation from moments of the forcing, and verifies the predictions
//! against direct 2D Newton-Krylov solves of the forced stationary equation.
//!
//! Modules map onto pipeline stages:
//! - [`stripe`]: periodic stripe profile and its wavenumber derivative family
//! - [`bloch`]: Bloch operators, eigenvalue branch, effective diffusivities
//! - [`inhomogeneity`], [`pinning`]: forcing closures, Melnikov function,
//!   pinning zeros, dipole coefficients
//! - [`farfield`]: Green's function, cutoffs, phase ansatz, residual decay,
//!   algebraic identity checks
//! - [`solver`]: 2D spectral grid, discrete Bloch transform, mode filters,
//!   Newton-Krylov solve, phase demodulation
//! - [`pipeline`], [`config`], [`report`]: batch driver and artifact I/O

pub mod bloch;
pub mod config;
pub mod farfield;
pub mod fft;
pub mod fitting;
pub mod grid;
pub mod inhomogeneity;
pub mod io;
pub mod pinning;
pub mod pipeline;
pub mod report;
pub mod solver;
pub mod stripe;
pub mod taylor;
pub mod weighted;

pub use bloch::{BlochBranch, BlochOperator, EffectiveDiffusivities};
pub use grid::Grid2;
pub use inhomogeneity::Inhomogeneity;
pub use pinning::PinningReport;
pub use stripe::StripeProfile;
