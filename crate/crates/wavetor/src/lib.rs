//! Spectral verification and simulation toolkit for 2-D gravity water waves
//! posed on a large torus of circumference `2*pi*R`.
//!
//! The crate is organized bottom-up:
//!
//! * [`cutoff`]: the smooth bump profile and the two-frequency cutoff `chi`
//!   underlying every paradifferential decomposition in the crate.
//! * [`grid`]: torus grids, FFT-backed spectral fields, Littlewood-Paley
//!   projections, paraproducts and multilinear symbol application.
//! * [`norms`]: the weighted Sobolev / Besov style norms used as diagnostics.
//! * [`symbols`]: the quadratic/cubic/quartic symbol catalog, including the
//!   closed-form evaluations used as independent cross-checks.
//! * [`resonance`]: phase functions, the degenerate (Benjamin-Feir type)
//!   resonant quadruples and the factorized phase formulas.
//! * [`exact`]: exact rational-polynomial verification that the symmetrized
//!   quartic symbol combination vanishes on the resonant set.
//! * [`dn`]: Dirichlet-Neumann operator via the singular-integral series, a
//!   harmonic collocation oracle and the good-unknown change of variables.
//! * [`sim`]: RK4 time stepping of the truncated water-wave system with
//!   energy diagnostics.
//! * [`dispersive`]: oscillatory kernel bounds and discrete Strichartz
//!   quotients for the half-wave evolution on the torus.
//! * [`suite`]: seeded randomized sweeps over the identity catalog, shared
//!   by the command-line verifiers and the acceptance checks.

pub mod cutoff;
pub mod dispersive;
pub mod dn;
pub mod exact;
pub mod grid;
pub mod norms;
pub mod resonance;
pub mod sim;
pub mod suite;
pub mod symbols;

pub use cutoff::CutoffProfile;
pub use grid::{SpectralField, TorusGrid};
