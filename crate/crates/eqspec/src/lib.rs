//! Equivariant eigenvalue optimization on the 2-sphere and the unit disk.
//!
//! The crate evaluates the closed-form maximal normalized eigenvalues
//! `Λ_k(S²; Γ)` and `𝔖_k(D²; Γ)` for every finite conformal group action,
//! cross-checks them with dense Fourier/spherical-harmonic Galerkin solvers
//! for measure densities, and carries the supporting machinery: orbit
//! semigroups of point groups, Blaschke-product boundary densities and their
//! Morse index, Wronskian/nullity computations for rational maps,
//! McKay symmetric-power decompositions, concentrating (gluing) density
//! families, and a projected-subgradient density maximizer.

pub mod acceptance;
pub mod blaschke;
pub mod closed_form;
pub mod disk_steklov;
pub mod error;
pub mod linalg;
pub mod mckay;
pub mod rational_maps;
pub mod semigroup;
pub mod sphere_laplace;
pub mod symmetry;

pub use error::{Error, Result};
