//! Dense Fourier–Galerkin solver for Steklov eigenvalues of boundary
//! densities on the unit disk, index counting for the associated quadratic
//! form, concentrating (gluing) density families, and a projected
//! subgradient maximizer over symmetric densities.
//!
//! The pencil is `diag(|n|) v = σ Toeplitz(ρ̂(m−n)) v` over Fourier modes
//! `n = −N..N`; it is assembled here in the equivalent real cos/sin basis,
//! which keeps the eigensolve real symmetric. The eigenvalue is invariant
//! under a common positive rescaling of the density; the normalization
//! `σ̄_k = σ_k · mass` uses the true mass `∫ρ dθ = 2π ρ̂(0)`.

use std::f64::consts::{PI, TAU};
use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::linalg::{pencil_eigen, pencil_eigenvalues, SymMatrix};

/// A positive density `ρ(θ) dθ` on the boundary circle.
///
/// Carries an evaluator plus, when the density is a Poisson-kernel sum, the
/// closed-form Fourier coefficients (geometric decay); otherwise the
/// coefficients come from trapezoidal quadrature at `8N` nodes, which is
/// spectrally accurate for smooth periodic integrands.
#[derive(Clone)]
pub struct BoundaryDensity {
    eval: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    closed_fourier: Option<Arc<dyn Fn(u64) -> Complex64 + Send + Sync>>,
}

impl std::fmt::Debug for BoundaryDensity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BoundaryDensity")
            .field("mass", &self.mass())
            .field("closed_fourier", &self.closed_fourier.is_some())
            .finish()
    }
}

impl BoundaryDensity {
    pub fn from_evaluator<F: Fn(f64) -> f64 + Send + Sync + 'static>(f: F) -> Self {
        Self { eval: Arc::new(f), closed_fourier: None }
    }

    pub fn uniform(c: f64) -> Self {
        assert!(c > 0.0);
        Self {
            eval: Arc::new(move |_| c),
            closed_fourier: Some(Arc::new(move |j| {
                if j == 0 {
                    Complex64::new(c, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })),
        }
    }

    /// `ρ(θ) = c + Σ w_i · P_{a_i}(θ)` where `P_a` is the Poisson kernel
    /// `(1−|a|²)/|e^{iθ}−a|²`. Fourier coefficients are exact:
    /// `ρ̂(j) = c·δ_{j0} + Σ w_i ā_i^j`.
    pub fn poisson_sum(constant: f64, terms: Vec<(Complex64, f64)>) -> Self {
        for (a, _) in &terms {
            assert!(a.norm() < 1.0, "Poisson kernel pole must be inside the disk");
        }
        let t2 = terms.clone();
        Self {
            eval: Arc::new(move |theta| {
                let z = Complex64::from_polar(1.0, theta);
                let mut v = constant;
                for (a, w) in &terms {
                    v += w * (1.0 - a.norm_sqr()) / (z - a).norm_sqr();
                }
                v
            }),
            closed_fourier: Some(Arc::new(move |j| {
                let mut v = if j == 0 {
                    Complex64::new(constant, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                for (a, w) in &t2 {
                    v += w * a.conj().powu(j as u32);
                }
                v
            })),
        }
    }

    /// Density defined by its values at `M` uniform nodes `θ_p = 2πp/M`,
    /// understood through its discrete Fourier series (trigonometric
    /// interpolation). Used by the maximizer.
    pub fn from_node_values(values: Vec<f64>) -> Self {
        let m = values.len();
        assert!(m >= 4);
        let vals = Arc::new(values);
        let v2 = vals.clone();
        // DFT coefficients up to m/2 − 1 (no aliasing in the solver range)
        Self {
            eval: Arc::new(move |theta| {
                // trigonometric interpolation через the DFT
                let mut acc = 0.0;
                let half = (m - 1) / 2;
                for j in 0..=half {
                    let mut re = 0.0;
                    let mut im = 0.0;
                    for (p, &v) in vals.iter().enumerate() {
                        let ang = j as f64 * TAU * p as f64 / m as f64;
                        re += v * ang.cos();
                        im -= v * ang.sin();
                    }
                    re /= m as f64;
                    im /= m as f64;
                    if j == 0 {
                        acc += re;
                    } else {
                        acc += 2.0 * (re * (j as f64 * theta).cos() - im * (j as f64 * theta).sin());
                    }
                }
                acc
            }),
            closed_fourier: Some(Arc::new(move |j| {
                let j = j as usize;
                if j >= (m - 1) / 2 + 1 {
                    return Complex64::new(0.0, 0.0);
                }
                let mut c = Complex64::new(0.0, 0.0);
                for (p, &v) in v2.iter().enumerate() {
                    let ang = j as f64 * TAU * p as f64 / m as f64;
                    c += v * Complex64::new(ang.cos(), -ang.sin());
                }
                c / m as f64
            })),
        }
    }

    pub fn value(&self, theta: f64) -> f64 {
        (self.eval)(theta)
    }

    /// Fourier coefficients `ρ̂(0..=max_j)`, `ρ̂(j) = (1/2π)∫ρ e^{−ijθ} dθ`.
    pub fn fourier_table(&self, max_j: u64, quad_nodes: usize) -> Vec<Complex64> {
        if let Some(cf) = &self.closed_fourier {
            return (0..=max_j).map(|j| cf(j)).collect();
        }
        let m = quad_nodes.max(2 * max_j as usize + 8);
        let vals: Vec<f64> = (0..m).map(|p| self.value(TAU * p as f64 / m as f64)).collect();
        (0..=max_j)
            .map(|j| {
                let mut c = Complex64::new(0.0, 0.0);
                for (p, &v) in vals.iter().enumerate() {
                    let ang = j as f64 * TAU * p as f64 / m as f64;
                    c += v * Complex64::new(ang.cos(), -ang.sin());
                }
                c / m as f64
            })
            .collect()
    }

    /// Total mass `∫₀^{2π} ρ dθ = 2π·ρ̂(0)`.
    pub fn mass(&self) -> f64 {
        TAU * self.fourier_table(0, 4096)[0].re
    }

    /// Minimum over `n` quadrature nodes; positive for a valid density.
    pub fn min_value(&self, n: usize) -> f64 {
        (0..n)
            .map(|p| self.value(TAU * p as f64 / n as f64))
            .fold(f64::INFINITY, f64::min)
    }

    /// Pointwise rescaling by a positive constant.
    pub fn scaled(&self, c: f64) -> Self {
        assert!(c > 0.0);
        let eval = self.eval.clone();
        let cf = self.closed_fourier.clone();
        Self {
            eval: Arc::new(move |t| c * eval(t)),
            closed_fourier: cf.map(|f| {
                Arc::new(move |j: u64| c * f(j)) as Arc<dyn Fn(u64) -> Complex64 + Send + Sync>
            }),
        }
    }
}

/// Ascending Steklov eigenvalues of a boundary density.
#[derive(Debug, Clone)]
pub struct SteklovSpectrum {
    pub sigmas: Vec<f64>,
    pub mass: f64,
    pub basis_size: usize,
}

impl SteklovSpectrum {
    /// `σ̄_k = σ_k · mass`.
    pub fn normalized(&self, k: usize) -> f64 {
        self.sigmas[k] * self.mass
    }
}

/// Spectrum together with `B`-orthonormal eigenvectors in the real
/// trigonometric basis `[1, cos θ, sin θ, …, cos Nθ, sin Nθ]`.
#[derive(Debug, Clone)]
pub struct SteklovEigen {
    pub spectrum: SteklovSpectrum,
    vectors: Vec<Vec<f64>>,
}

impl SteklovEigen {
    /// Boundary values of eigenfunction `k` (B-orthonormal scaling).
    pub fn eigenfunction_values(&self, k: usize, thetas: &[f64]) -> Vec<f64> {
        let v = &self.vectors[k];
        let n_max = (v.len() - 1) / 2;
        thetas
            .iter()
            .map(|&t| {
                let mut acc = v[0];
                for n in 1..=n_max {
                    acc += v[2 * n - 1] * (n as f64 * t).cos() + v[2 * n] * (n as f64 * t).sin();
                }
                acc
            })
            .collect()
    }

    /// Dirichlet energy of the harmonic extension of eigenfunction `k`.
    pub fn dirichlet_energy(&self, k: usize) -> f64 {
        let v = &self.vectors[k];
        let n_max = (v.len() - 1) / 2;
        let mut e = 0.0;
        for n in 1..=n_max {
            e += n as f64 * (v[2 * n - 1].powi(2) + v[2 * n].powi(2));
        }
        PI * e
    }
}

fn assemble_pencil(density: &BoundaryDensity, n: usize) -> (SymMatrix, SymMatrix, f64) {
    let max_j = 2 * n as u64;
    let table = density.fourier_table(max_j, 8 * n);
    let mass = TAU * table[0].re;
    let x = |j: i64| table[j.unsigned_abs() as usize].re;
    let y = |j: i64| {
        // −Im ρ̂(j), odd in j
        if j >= 0 {
            -table[j as usize].im
        } else {
            table[(-j) as usize].im
        }
    };

    let dim = 2 * n + 1;
    let mut a = SymMatrix::zeros(dim);
    let mut b = SymMatrix::zeros(dim);
    // basis index 0 = constant, 2m−1 = cos mθ, 2m = sin mθ
    a.set(0, 0, 0.0);
    for m in 1..=n {
        a.set(2 * m - 1, 2 * m - 1, m as f64);
        a.set(2 * m, 2 * m, m as f64);
    }
    // B = 2·(1/2π)∫ρ t_i t_j dθ, so the pencil matches diag(|n|) v = σ B v
    b.set(0, 0, 2.0 * x(0));
    for m in 1..=n {
        b.set(0, 2 * m - 1, 2.0 * x(m as i64));
        b.set(0, 2 * m, 2.0 * y(m as i64));
        for l in m..=n {
            let (mi, li) = (m as i64, l as i64);
            b.set(2 * m - 1, 2 * l - 1, x(mi - li) + x(mi + li));
            b.set(2 * m, 2 * l, x(mi - li) - x(mi + li));
            b.set(2 * m, 2 * l - 1, y(mi + li) + y(mi - li));
            if m != l {
                b.set(2 * m - 1, 2 * l, y(mi + li) + y(li - mi));
            }
        }
    }
    (a, b, mass)
}

/// Solve the Steklov pencil for a boundary density at Fourier cutoff `N`.
pub fn steklov_solve(density: &BoundaryDensity, n: usize) -> Result<SteklovSpectrum> {
    assert!(n >= 8, "basis cutoff too small");
    let (a, b, mass) = assemble_pencil(density, n);
    let sigmas = pencil_eigenvalues(&a, &b)?;
    debug_assert!(sigmas[0].abs() <= 1e-9, "constants must be harmonic");
    Ok(SteklovSpectrum { sigmas, mass, basis_size: n })
}

/// Solve with eigenvectors (needed for the quadratic form and the
/// maximizer).
pub fn steklov_solve_full(density: &BoundaryDensity, n: usize) -> Result<SteklovEigen> {
    assert!(n >= 8, "basis cutoff too small");
    let (a, b, mass) = assemble_pencil(density, n);
    let eig = pencil_eigen(&a, &b)?;
    Ok(SteklovEigen {
        spectrum: SteklovSpectrum { sigmas: eig.values, mass, basis_size: n },
        vectors: eig.vectors,
    })
}

/// Counts of eigenvalues below / at the unit eigenvalue of a pencil.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexReport {
    /// `#{k : σ_k < 1 − tol}`.
    pub index: usize,
    /// `#{k : |σ_k − 1| ≤ tol}`.
    pub nullity: usize,
    /// Classification threshold around the unit eigenvalue.
    pub tol: f64,
    pub basis_size: usize,
}

impl IndexReport {
    pub fn from_spectrum(values: &[f64], tol: f64, basis_size: usize) -> Self {
        assert!(tol > 0.0 && tol < 0.5);
        let index = values.iter().filter(|&&s| s < 1.0 - tol).count();
        let nullity = values.iter().filter(|&&s| (s - 1.0).abs() <= tol).count();
        Self { index, nullity, tol, basis_size }
    }
}

/// Morse data of the boundary quadratic form
/// `Q(u) = ∫(u ∂_r û − ρ u²) dθ`: eigenvalues of the Steklov pencil below 1
/// are negative directions, eigenvalues at 1 its kernel.
pub fn q_form_index(density: &BoundaryDensity, n: usize, tol: f64) -> Result<IndexReport> {
    let spec = steklov_solve(density, n)?;
    Ok(IndexReport::from_spectrum(&spec.sigmas, tol, n))
}

/// Concentrating family `ρ_t(θ) = 1 + Σ_j w_j·P_{t e^{2πij/n}}(θ)`.
///
/// Each Poisson kernel carries mass `2π`, so the total mass is
/// `2π(1 + Σ w_j)` for every `t`; the family is `Z_n`-symmetric by
/// construction and concentrates at the n-th roots of unity as `t → 1`.
pub fn glue_family(n: u32, bumps_per_point: u32, t: f64, weights: Option<Vec<f64>>) -> BoundaryDensity {
    assert!(n >= 1);
    assert!((0.0..1.0).contains(&t));
    let w = weights.unwrap_or_else(|| vec![bumps_per_point as f64; n as usize]);
    assert_eq!(w.len(), n as usize);
    let terms: Vec<(Complex64, f64)> = (0..n)
        .map(|j| (Complex64::from_polar(t, TAU * j as f64 / n as f64), w[j as usize]))
        .collect();
    BoundaryDensity::poisson_sum(1.0, terms)
}

/// `σ̄_k(ρ_t)` along the concentration parameter, `steps` points from 0 to
/// `t_max` inclusive; solves run in parallel, output ordered by `t`.
pub fn glue_sweep(
    n: u32,
    bumps_per_point: u32,
    k: usize,
    t_max: f64,
    steps: usize,
    basis: usize,
) -> Result<Vec<(f64, f64)>> {
    use rayon::prelude::*;
    assert!(steps >= 2);
    let ts: Vec<f64> = (0..steps)
        .map(|i| t_max * i as f64 / (steps - 1) as f64)
        .collect();
    ts.par_iter()
        .map(|&t| {
            let d = glue_family(n, bumps_per_point, t, None);
            let s = steklov_solve(&d, basis)?;
            Ok((t, s.normalized(k)))
        })
        .collect()
}

/// Per-iteration record of the subgradient maximizer.
#[derive(Debug, Clone, Copy)]
pub struct TraceStep {
    pub iter: usize,
    pub sigma_bar: f64,
    pub step: f64,
    pub best_so_far: f64,
    pub stagnating: bool,
}

/// Full maximizer outcome. `node_values` are the best iterate's density
/// values at the uniform grid; `density` is the same iterate as a solvable
/// object.
pub struct MaximizeOutcome {
    pub density: BoundaryDensity,
    pub node_values: Vec<f64>,
    pub best_sigma_bar: f64,
    pub trace: Vec<TraceStep>,
    pub params: MaximizerParams,
    /// Set when no improvement happened over the stagnation window; a
    /// warning, not a failure.
    pub stagnation_warning: bool,
    /// True when every iterate satisfied the cap, the `Z_{n_sym}` symmetry
    /// (deviation ≤ 1e−10) and unit mass (≤ 1e−12).
    pub invariants_ok: bool,
}

/// The three scheme constants, reported alongside every run.
#[derive(Debug, Clone, Copy)]
pub struct MaximizerParams {
    pub cluster_width_rel: f64,
    pub step0: f64,
    pub rho_min: f64,
    pub basis: usize,
    pub nodes: usize,
}

/// Projected subgradient ascent on `σ̄_k` over `Z_{n_sym}`-symmetric
/// probability densities bounded by `cap`.
///
/// Each step averages `φ²` over the eigenvalue cluster at `σ_k` (the
/// subgradient direction of `σ_k⁻¹`), moves against it with a diminishing
/// step, symmetrizes, and projects back onto
/// `{ρ_min ≤ ρ ≤ cap, ∫ρ dθ = 1}`. Deterministic for a fixed seed.
pub fn maximize_density(
    k: usize,
    n_sym: usize,
    cap: f64,
    iterations: usize,
    seed: u64,
) -> Result<MaximizeOutcome> {
    assert!(k >= 1);
    assert!(n_sym >= 1);
    assert!(cap > 1.0 / TAU, "cap must leave room for a probability density");

    let basis = 48usize.max(4 * (k + 2));
    let mut nodes = 8 * basis;
    if nodes % n_sym != 0 {
        nodes += n_sym - nodes % n_sym;
    }
    let params = MaximizerParams {
        cluster_width_rel: 1e-4,
        step0: 0.5,
        rho_min: 1e-6 * cap,
        basis,
        nodes,
    };

    let thetas: Vec<f64> = (0..nodes).map(|p| TAU * p as f64 / nodes as f64).collect();

    // seeded smooth initial perturbation of the uniform density
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rho: Vec<f64> = {
        let modes: Vec<(f64, f64, f64)> = (0..4)
            .map(|_| {
                (
                    rng.random_range(1.0..4.0f64).round(),
                    rng.random_range(0.0..TAU),
                    rng.random_range(0.05..0.10),
                )
            })
            .collect();
        thetas
            .iter()
            .map(|&t| {
                let mut v = 1.0;
                for &(f, ph, amp) in &modes {
                    v += amp * (f * t + ph).cos();
                }
                v / TAU
            })
            .collect()
    };
    symmetrize(&mut rho, n_sym);
    project(&mut rho, params.rho_min, cap);

    let mut best_rho = rho.clone();
    let mut best_sigma = f64::NEG_INFINITY;
    let mut trace = Vec::with_capacity(iterations);
    let mut last_improvement = 0usize;
    let window = 50usize;
    let mut stagnation_warning = false;
    let mut invariants_ok = true;

    let feasible = |rho: &[f64]| -> bool {
        let m = rho.len();
        let mass = TAU * rho.iter().sum::<f64>() / m as f64;
        if (mass - 1.0).abs() > 1e-12 || rho.iter().any(|&v| v > cap + 1e-12 || v <= 0.0) {
            return false;
        }
        let shift = m / n_sym;
        (0..m).all(|p| (rho[p] - rho[(p + shift) % m]).abs() <= 1e-10)
    };

    for iter in 0..iterations {
        invariants_ok &= feasible(&rho);
        let density = BoundaryDensity::from_node_values(rho.clone());
        let eig = steklov_solve_full(&density, basis)?;
        let sigma_k = eig.spectrum.sigmas[k];
        let sigma_bar = eig.spectrum.normalized(k);

        if sigma_bar > best_sigma {
            best_sigma = sigma_bar;
            best_rho = rho.clone();
            last_improvement = iter;
        }
        let stagnating = iter >= last_improvement + window;
        stagnation_warning |= stagnating;

        let step = params.step0 / ((iter + 1) as f64).sqrt();
        trace.push(TraceStep { iter, sigma_bar, step, best_so_far: best_sigma, stagnating });

        // subgradient direction: average of φ² over the eigenvalue cluster
        let width = params.cluster_width_rel * sigma_k.abs().max(1e-12);
        let cluster: Vec<usize> = (0..eig.spectrum.sigmas.len())
            .filter(|&i| (eig.spectrum.sigmas[i] - sigma_k).abs() <= width)
            .collect();
        let mut psi = vec![0.0; nodes];
        for &i in &cluster {
            let u = eig.eigenfunction_values(i, &thetas);
            let energy = eig.dirichlet_energy(i).max(1e-300);
            for (p, &v) in u.iter().enumerate() {
                psi[p] += v * v / energy;
            }
        }
        for p in 0..nodes {
            psi[p] /= cluster.len() as f64;
        }

        // move mass away from where the eigenfunctions concentrate
        for p in 0..nodes {
            rho[p] -= step * psi[p];
        }
        symmetrize(&mut rho, n_sym);
        project(&mut rho, params.rho_min, cap);
    }

    Ok(MaximizeOutcome {
        density: BoundaryDensity::from_node_values(best_rho.clone()),
        node_values: best_rho,
        best_sigma_bar: best_sigma,
        trace,
        params,
        stagnation_warning,
        invariants_ok,
    })
}

fn symmetrize(rho: &mut [f64], n_sym: usize) {
    if n_sym <= 1 {
        return;
    }
    let m = rho.len();
    debug_assert_eq!(m % n_sym, 0);
    let shift = m / n_sym;
    let src = rho.to_vec();
    for p in 0..m {
        let mut acc = 0.0;
        for s in 0..n_sym {
            acc += src[(p + s * shift) % m];
        }
        rho[p] = acc / n_sym as f64;
    }
}

/// Euclidean projection onto `{rho_min ≤ ρ ≤ cap, mean ρ = 1/2π}` via a
/// bisection on the additive shift.
fn project(rho: &mut [f64], rho_min: f64, cap: f64) {
    let m = rho.len() as f64;
    let target = 1.0 / TAU;
    let mean_clamped = |t: f64, rho: &[f64]| -> f64 {
        rho.iter().map(|&v| (v + t).clamp(rho_min, cap)).sum::<f64>() / m
    };
    let (mut lo, mut hi) = (-cap, cap);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mean_clamped(mid, rho) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    for v in rho.iter_mut() {
        *v = (*v + t).clamp(rho_min, cap);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::disk_bar_sigma;
    use crate::error::Error;

    #[test]
    fn uniform_density_reproduces_round_disk() {
        let spec = steklov_solve(&BoundaryDensity::uniform(1.0), 64).unwrap();
        assert!(spec.sigmas[0].abs() <= 1e-9);
        for k in 0..=20 {
            let expect = disk_bar_sigma(k as u64).as_f64();
            assert!(
                (spec.normalized(k) - expect).abs() <= 1e-10,
                "k={k}: {} vs {}",
                spec.normalized(k),
                expect
            );
        }
    }

    #[test]
    fn normalized_spectrum_is_scale_invariant() {
        let base = steklov_solve(&BoundaryDensity::uniform(1.0), 32).unwrap();
        for c in [1e3, 1e-3] {
            let s = steklov_solve(&BoundaryDensity::uniform(c), 32).unwrap();
            for k in 0..=15 {
                assert!((s.normalized(k) - base.normalized(k)).abs() <= 1e-10);
            }
        }
        // a non-constant density, rescaled
        let d = glue_family(3, 1, 0.4, None);
        let s1 = steklov_solve(&d, 48).unwrap();
        let s2 = steklov_solve(&d.scaled(1e3), 48).unwrap();
        let s3 = steklov_solve(&d.scaled(1e-3), 48).unwrap();
        for k in 0..=15 {
            assert!((s1.normalized(k) - s2.normalized(k)).abs() <= 1e-10);
            assert!((s1.normalized(k) - s3.normalized(k)).abs() <= 1e-10);
        }
    }

    #[test]
    fn poisson_pushforward_matches_uniform() {
        // density of a disk automorphism: normalized spectrum unchanged;
        // the basis must absorb the mode spread ~ (1+a)/(1−a)
        for (a, n) in [(0.3, 96), (0.5, 96), (0.85, 320)] {
            let d = BoundaryDensity::poisson_sum(0.0, vec![(Complex64::new(a, 0.0), 1.0)]);
            let s = steklov_solve(&d, n).unwrap();
            for k in 0..=20 {
                let expect = disk_bar_sigma(k as u64).as_f64();
                assert!(
                    (s.normalized(k) - expect).abs() <= 1e-8,
                    "a={a} k={k}: {} vs {}",
                    s.normalized(k),
                    expect
                );
            }
        }
    }

    #[test]
    fn closed_fourier_matches_quadrature() {
        let a = Complex64::new(0.4, 0.25);
        let closed = BoundaryDensity::poisson_sum(1.0, vec![(a, 2.0)]);
        let via_eval = BoundaryDensity::from_evaluator({
            let c = closed.clone();
            move |t| c.value(t)
        });
        let t1 = closed.fourier_table(40, 512);
        let t2 = via_eval.fourier_table(40, 512);
        for j in 0..=40 {
            assert!((t1[j] - t2[j]).norm() <= 1e-12, "j={j}");
        }
    }

    #[test]
    fn spectral_convergence_under_refinement() {
        let d = glue_family(2, 1, 0.5, None);
        let s1 = steklov_solve(&d, 64).unwrap();
        let s2 = steklov_solve(&d, 128).unwrap();
        for k in 0..=20 {
            assert!(
                (s1.normalized(k) - s2.normalized(k)).abs() <= 1e-8,
                "k={k}: {} vs {}",
                s1.normalized(k),
                s2.normalized(k)
            );
        }
    }

    #[test]
    fn pointwise_domination_reverses_eigenvalues() {
        let small = BoundaryDensity::uniform(1.0);
        let big = BoundaryDensity::poisson_sum(1.0, vec![(Complex64::new(0.5, 0.0), 1.0)]);
        let s_small = steklov_solve(&small, 48).unwrap();
        let s_big = steklov_solve(&big, 48).unwrap();
        for k in 0..=20 {
            assert!(s_big.sigmas[k] <= s_small.sigmas[k] + 1e-12, "k={k}");
        }
    }

    #[test]
    fn non_positive_density_is_rejected() {
        let d = BoundaryDensity::from_evaluator(|t| 1.0 + 2.0 * t.cos());
        assert!(matches!(steklov_solve(&d, 32), Err(Error::NotPositiveDefinite)));
    }

    #[test]
    fn uniform_q_form_counts() {
        let rep = q_form_index(&BoundaryDensity::uniform(1.0), 48, 1e-6).unwrap();
        assert_eq!(rep.index, 1);
        assert_eq!(rep.nullity, 2);
    }

    #[test]
    fn glue_family_basics() {
        // t = 0: every kernel degenerates to the constant 1
        let d0 = glue_family(2, 1, 0.0, None);
        for p in 0..32 {
            let t = TAU * p as f64 / 32.0;
            assert!((d0.value(t) - 3.0).abs() <= 1e-12);
        }
        // mass 2π(1+n) for unit weights, any t
        for t in [0.0, 0.3, 0.9, 0.99] {
            for n in [1u32, 2, 3, 5] {
                let d = glue_family(n, 1, t, None);
                assert!((d.mass() - TAU * (1.0 + n as f64)).abs() <= 1e-9, "n={n} t={t}");
            }
        }
        // Z_n symmetry
        let d = glue_family(3, 2, 0.7, None);
        for p in 0..60 {
            let t = TAU * p as f64 / 60.0;
            assert!((d.value(t) - d.value(t + TAU / 3.0)).abs() <= 1e-10);
        }
    }

    #[test]
    fn maximizer_iterates_stay_feasible() {
        let out = maximize_density(1, 2, 10.0, 25, 0x5EED).unwrap();
        let m = out.node_values.len();
        let mass = TAU * out.node_values.iter().sum::<f64>() / m as f64;
        assert!((mass - 1.0).abs() <= 1e-12);
        assert!(out.node_values.iter().all(|&v| v <= 10.0 + 1e-12 && v > 0.0));
        // symmetry under rotation by π
        for p in 0..m {
            let q = (p + m / 2) % m;
            assert!((out.node_values[p] - out.node_values[q]).abs() <= 1e-10);
        }
        assert_eq!(out.trace.len(), 25);
    }

    #[test]
    fn maximizer_deterministic_for_fixed_seed() {
        let a = maximize_density(1, 1, 10.0, 10, 42).unwrap();
        let b = maximize_density(1, 1, 10.0, 10, 42).unwrap();
        assert_eq!(a.node_values, b.node_values);
        assert_eq!(a.best_sigma_bar, b.best_sigma_bar);
    }
}
