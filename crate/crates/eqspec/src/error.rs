use thiserror::Error;

/// Errors surfaced by the spectral solvers and the algebraic machinery.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Two candidate orbit images landed in the dead band between "same
    /// point" and "distinct points"; the seed point sits numerically
    /// between strata.
    #[error("ambiguous orbit dedup: candidate images at distance {dist:.3e} with tolerance {tol:.3e}")]
    AmbiguousDedup { dist: f64, tol: f64 },

    /// The mass matrix of a generalized pencil failed its Cholesky
    /// factorization: the density is non-positive or under-resolved.
    #[error("mass matrix is not positive definite (non-positive or under-resolved density)")]
    NotPositiveDefinite,

    /// The two polynomials of a rational map share a root.
    #[error("polynomials share a common root: |resultant| = {resultant:.3e} below threshold")]
    CommonRoot { resultant: f64 },

    /// A singular value fell inside the ambiguity band of the rank test.
    #[error("rank decision ambiguous: relative singular value {sigma:.3e} inside ({lo:.1e}, {hi:.1e})")]
    RankAmbiguous { sigma: f64, lo: f64, hi: f64 },

    /// No eigenvalue of the pencil lies within tolerance of 1 at the
    /// requested resolution.
    #[error("no eigenvalue within {tol:.3e} of 1 at basis size {basis}")]
    NoUnitEigenvalue { tol: f64, basis: usize },

    /// The symmetric-power recurrence produced a negative multiplicity,
    /// which can only come from a mis-entered graph.
    #[error("negative multiplicity {value} at vertex {vertex} for k = {k}")]
    NegativeMultiplicity { vertex: String, k: u32, value: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
