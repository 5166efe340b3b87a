//! Finite Blaschke products viewed as free-boundary harmonic self-maps of
//! the disk: boundary densities, the combinatorial index lower bound from
//! subproducts, and the sharpness comparison against the round disk.
//!
//! The boundary density of a product is a Poisson-kernel sum,
//! `|∂_θ Φ| = Σ m_i (1−|a_i|²)/|e^{iθ}−a_i|²`; see `docs/derivations.md`
//! for the per-factor identity.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::closed_form::disk_bar_sigma;
use crate::disk_steklov::{steklov_solve, BoundaryDensity};
use crate::error::{Error, Result};

/// `Φ(z) = e^{iθ₀} ∏ ((z−a_i)/(1−ā_i z))^{m_i}` with distinct `|a_i| < 1`.
#[derive(Debug, Clone)]
pub struct BlaschkeProduct {
    pub phase: f64,
    pub factors: Vec<(Complex64, u32)>,
}

impl BlaschkeProduct {
    pub fn new(phase: f64, factors: Vec<(Complex64, u32)>) -> Self {
        assert!(!factors.is_empty());
        for (i, (a, m)) in factors.iter().enumerate() {
            assert!(a.norm() < 1.0, "zero {a} outside the open disk");
            assert!(*m >= 1);
            for (b, _) in &factors[..i] {
                assert!((a - b).norm() > 1e-12, "zeros must be pairwise distinct");
            }
        }
        Self { phase, factors }
    }

    /// `z^d` as a one-factor product.
    pub fn power(d: u32) -> Self {
        Self::new(0.0, vec![(Complex64::new(0.0, 0.0), d)])
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    /// Number of distinct factors `s`.
    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut v = Complex64::from_polar(1.0, self.phase);
        for (a, m) in &self.factors {
            v *= ((z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z)).powu(*m);
        }
        v
    }

    /// `∂_θ arg Φ(e^{iθ}) = Re(z Φ′(z)/Φ(z))` on the circle, computed from
    /// the logarithmic derivative. An independent route to the boundary
    /// density.
    pub fn boundary_arg_derivative(&self, theta: f64) -> f64 {
        let z = Complex64::from_polar(1.0, theta);
        let mut logd = Complex64::new(0.0, 0.0);
        for (a, m) in &self.factors {
            let m = *m as f64;
            logd += m / (z - a) + m * a.conj() / (Complex64::new(1.0, 0.0) - a.conj() * z);
        }
        (z * logd).re
    }

    /// All subproducts obtained by lowering factor multiplicities,
    /// excluding the full product itself; the empty subproduct (the
    /// constant) is included. Capped at 1024 subproducts.
    pub fn proper_subproducts(&self) -> Vec<BlaschkeSubproduct> {
        let total: u64 = self.factors.iter().map(|(_, m)| *m as u64 + 1).product();
        assert!(total <= 1024, "subproduct sweep too large");
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.factors.len()];
        loop {
            let is_full = exps.iter().zip(&self.factors).all(|(e, (_, m))| e == m);
            if !is_full {
                out.push(BlaschkeSubproduct {
                    factors: self
                        .factors
                        .iter()
                        .zip(&exps)
                        .filter(|(_, e)| **e > 0)
                        .map(|((a, _), e)| (*a, *e))
                        .collect(),
                });
            }
            let mut i = 0;
            loop {
                if i == exps.len() {
                    return out;
                }
                if exps[i] < self.factors[i].1 {
                    exps[i] += 1;
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }
}

/// A subproduct `Φ′ ⊆ Φ`; empty factor list means the constant 1.
#[derive(Debug, Clone)]
pub struct BlaschkeSubproduct {
    pub factors: Vec<(Complex64, u32)>,
}

impl BlaschkeSubproduct {
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut v = Complex64::new(1.0, 0.0);
        for (a, m) in &self.factors {
            v *= ((z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z)).powu(*m);
        }
        v
    }

    pub fn label(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|(a, m)| format!("phi[{:.3}{:+.3}i]^{}", a.re, a.im, m))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Boundary density `ρ = |∂_θ Φ| = Σ m_i P_{a_i}` with exact geometric
/// Fourier coefficients and mass `2π·deg Φ`.
pub fn boundary_density(b: &BlaschkeProduct) -> BoundaryDensity {
    let terms: Vec<(Complex64, f64)> = b.factors.iter().map(|(a, m)| (*a, *m as f64)).collect();
    BoundaryDensity::poisson_sum(0.0, terms)
}

/// Combinatorial lower bound `ind Φ ≥ 2·∏(m_i+1) − 3` coming from the
/// subproduct test functions.
pub fn index_lower_bound(b: &BlaschkeProduct) -> u64 {
    let prod: u64 = b.factors.iter().map(|(_, m)| *m as u64 + 1).product();
    2 * prod - 3
}

/// Sharpness comparison at the unit eigenvalue: for every `k` with
/// `|σ_k − 1| ≤ tol`, reports `σ̄_k(ρ_Φ)` against the round value
/// `σ̄_k(1)`.
#[derive(Debug, Clone)]
pub struct SharpnessReport {
    /// Indices of eigenvalues within `tol` of 1.
    pub k_list: Vec<usize>,
    /// `σ̄_k(ρ_Φ)` at those indices (theoretical value `2π·deg Φ`).
    pub sigma_bar_at_unit: Vec<f64>,
    /// `σ̄_k(1) − σ̄_k(ρ_Φ)` at those indices.
    pub gap_to_uniform: Vec<f64>,
    /// True when every gap exceeds `1e−6`. Measured: false for every finite
    /// Blaschke product — the unit eigenvalue lands at `k ∈ {2d−1, 2d}`
    /// where `σ̄_k(1) = 2πd` as well.
    pub strict: bool,
}

pub fn sharpness_check(b: &BlaschkeProduct, n: usize, tol: f64) -> Result<SharpnessReport> {
    let density = boundary_density(b);
    let spec = steklov_solve(&density, n)?;
    let k_list: Vec<usize> = (0..spec.sigmas.len())
        .filter(|&k| (spec.sigmas[k] - 1.0).abs() <= tol)
        .collect();
    if k_list.is_empty() {
        return Err(Error::NoUnitEigenvalue { tol, basis: n });
    }
    let sigma_bar_at_unit: Vec<f64> = k_list.iter().map(|&k| spec.normalized(k)).collect();
    let gap_to_uniform: Vec<f64> = k_list
        .iter()
        .zip(&sigma_bar_at_unit)
        .map(|(&k, &v)| disk_bar_sigma(k as u64).as_f64() - v)
        .collect();
    let strict = gap_to_uniform.iter().all(|&g| g > 1e-6);
    Ok(SharpnessReport { k_list, sigma_bar_at_unit, gap_to_uniform, strict })
}

/// One subproduct test-function evaluation of the quadratic form
/// `Q_Φ(u) = ∫(u ∂_r û − ρ u²) dθ`.
#[derive(Debug, Clone)]
pub struct SubproductEntry {
    pub label: String,
    pub part: &'static str,
    pub q_value: f64,
}

#[derive(Debug, Clone)]
pub struct SubproductReport {
    /// `Q_Φ` on the real/imaginary parts of every proper subproduct
    /// (imaginary part of the constant omitted: it vanishes identically).
    pub entries: Vec<SubproductEntry>,
    /// `Q_Φ` on `Re Φ` and `Im Φ`; both vanish at the eigenvalue 1.
    pub full_product_q: (f64, f64),
    pub all_negative: bool,
}

/// Evaluate `Q_Φ` on boundary data given at `m` uniform nodes, through the
/// Fourier pencil: `Q(u) = 2π(Σ|û_j|²|j| − Σ û̄_l û_j ρ̂(l−j))`.
fn q_form(rho_hat: &[Complex64], u_vals: &[f64], max_j: i64) -> f64 {
    let m = u_vals.len();
    let hat: Vec<Complex64> = (-max_j..=max_j)
        .map(|j| {
            let mut c = Complex64::new(0.0, 0.0);
            for (p, &v) in u_vals.iter().enumerate() {
                let ang = j as f64 * TAU * p as f64 / m as f64;
                c += v * Complex64::new(ang.cos(), -ang.sin());
            }
            c / m as f64
        })
        .collect();
    let idx = |j: i64| (j + max_j) as usize;
    let rho = |j: i64| {
        if j >= 0 {
            rho_hat[j as usize]
        } else {
            rho_hat[(-j) as usize].conj()
        }
    };
    let mut energy = 0.0;
    for j in -max_j..=max_j {
        energy += hat[idx(j)].norm_sqr() * j.unsigned_abs() as f64;
    }
    let mut weighted = Complex64::new(0.0, 0.0);
    for l in -max_j..=max_j {
        for j in -max_j..=max_j {
            if (l - j).unsigned_abs() as usize >= rho_hat.len() {
                continue;
            }
            weighted += hat[idx(l)].conj() * hat[idx(j)] * rho(l - j);
        }
    }
    TAU * (energy - weighted.re)
}

/// Confirm that every proper subproduct gives a strictly negative direction
/// of `Q_Φ`, while the full product sits in its kernel.
pub fn verify_subproduct_eigenfunctions(b: &BlaschkeProduct, n: usize) -> SubproductReport {
    let density = boundary_density(b);
    let max_j = n as i64;
    let rho_hat = density.fourier_table(2 * max_j as u64, 16 * n);
    let m_nodes = 8 * n;
    let thetas: Vec<f64> = (0..m_nodes).map(|p| TAU * p as f64 / m_nodes as f64).collect();

    let mut entries = Vec::new();
    for sub in b.proper_subproducts() {
        let vals: Vec<Complex64> = thetas
            .iter()
            .map(|&t| sub.eval(Complex64::from_polar(1.0, t)))
            .collect();
        let re: Vec<f64> = vals.iter().map(|v| v.re).collect();
        let q_re = q_form(&rho_hat, &re, max_j);
        entries.push(SubproductEntry { label: sub.label(), part: "re", q_value: q_re });
        if !sub.factors.is_empty() {
            let im: Vec<f64> = vals.iter().map(|v| v.im).collect();
            let q_im = q_form(&rho_hat, &im, max_j);
            entries.push(SubproductEntry { label: sub.label(), part: "im", q_value: q_im });
        }
    }

    let full: Vec<Complex64> = thetas
        .iter()
        .map(|&t| b.eval(Complex64::from_polar(1.0, t)))
        .collect();
    let q_full_re = q_form(&rho_hat, &full.iter().map(|v| v.re).collect::<Vec<_>>(), max_j);
    let q_full_im = q_form(&rho_hat, &full.iter().map(|v| v.im).collect::<Vec<_>>(), max_j);

    let all_negative = entries.iter().all(|e| e.q_value < 0.0);
    SubproductReport {
        entries,
        full_product_q: (q_full_re, q_full_im),
        all_negative,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk_steklov::q_form_index;

    #[test]
    fn density_of_identity_is_uniform() {
        let b = BlaschkeProduct::power(1);
        let d = boundary_density(&b);
        for p in 0..64 {
            assert!((d.value(TAU * p as f64 / 64.0) - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn density_of_power_is_constant_d() {
        for deg in 1..=6u32 {
            let d = boundary_density(&BlaschkeProduct::power(deg));
            assert!((d.value(0.37) - deg as f64).abs() <= 1e-12);
            assert!((d.mass() - TAU * deg as f64).abs() <= 1e-12);
        }
    }

    #[test]
    fn moebius_density_values() {
        let b = BlaschkeProduct::new(0.0, vec![(Complex64::new(0.5, 0.0), 1)]);
        let d = boundary_density(&b);
        assert!((d.value(0.0) - 3.0).abs() <= 1e-12);
        assert!((d.value(std::f64::consts::PI) - 1.0 / 3.0).abs() <= 1e-12);
    }

    #[test]
    fn mass_is_2_pi_degree() {
        let b = BlaschkeProduct::new(
            0.3,
            vec![
                (Complex64::new(0.5, 0.1), 2),
                (Complex64::new(-0.2, 0.4), 1),
                (Complex64::new(0.0, -0.6), 1),
            ],
        );
        assert!((boundary_density(&b).mass() - TAU * 4.0).abs() <= 1e-12);
    }

    #[test]
    fn arg_derivative_matches_poisson_sum() {
        let b = BlaschkeProduct::new(
            0.7,
            vec![(Complex64::new(0.3, -0.2), 2), (Complex64::new(-0.5, 0.25), 1)],
        );
        let d = boundary_density(&b);
        for p in 0..1024 {
            let t = TAU * p as f64 / 1024.0;
            assert!(
                (b.boundary_arg_derivative(t) - d.value(t)).abs() <= 1e-10,
                "theta = {t}"
            );
        }
    }

    #[test]
    fn index_lower_bound_examples() {
        assert_eq!(index_lower_bound(&BlaschkeProduct::power(3)), 5); // 2d−1
        let simple = BlaschkeProduct::new(0.0, vec![(Complex64::new(0.4, 0.0), 1)]);
        assert_eq!(index_lower_bound(&simple), 1);
        let two = BlaschkeProduct::new(
            0.0,
            vec![(Complex64::new(0.0, 0.0), 1), (Complex64::new(0.5, 0.0), 1)],
        );
        assert_eq!(index_lower_bound(&two), 5); // 2d+1 with d = 2
    }

    #[test]
    fn power_density_index_is_exact() {
        for d in 1..=4u32 {
            let rep =
                q_form_index(&boundary_density(&BlaschkeProduct::power(d)), 48, 1e-6).unwrap();
            assert_eq!(rep.index as u64, 2 * d as u64 - 1);
            assert_eq!(rep.nullity, 2);
        }
    }

    /// Measured behavior of the whole battery: the Morse index of the
    /// boundary form is exactly `2d−1` with a two-dimensional kernel,
    /// regardless of the factor structure. The combinatorial count
    /// `2∏(m_i+1)−3` over-counts for multi-factor products: negativity of
    /// `Q` on each subproduct test function does not make `Q` negative
    /// definite on their span (the 5×5 Gram for z·φ_a has two zero
    /// eigenvalues).
    #[test]
    fn index_is_2d_minus_1_with_nullity_2() {
        let battery = [
            BlaschkeProduct::new(
                0.0,
                vec![(Complex64::new(0.0, 0.0), 1), (Complex64::new(0.5, 0.0), 1)],
            ),
            BlaschkeProduct::new(
                0.0,
                vec![(Complex64::new(0.3, 0.3), 2), (Complex64::new(-0.4, 0.1), 1)],
            ),
            BlaschkeProduct::new(
                1.0,
                vec![(Complex64::new(0.2, -0.5), 1), (Complex64::new(-0.3, -0.3), 2)],
            ),
            BlaschkeProduct::new(
                0.0,
                vec![
                    (Complex64::new(0.0, 0.0), 1),
                    (Complex64::new(0.5, 0.0), 1),
                    (Complex64::new(-0.4, 0.3), 1),
                ],
            ),
        ];
        for b in &battery {
            let rep = q_form_index(&boundary_density(b), 128, 1e-6).unwrap();
            let d = b.degree() as usize;
            assert_eq!(rep.index, 2 * d - 1, "{b:?}");
            assert_eq!(rep.nullity, 2, "{b:?}");
        }
    }

    #[test]
    fn automorphism_achieves_equality() {
        let b = BlaschkeProduct::new(0.0, vec![(Complex64::new(0.4, 0.2), 1)]);
        let rep = sharpness_check(&b, 96, 1e-6).unwrap();
        assert!(!rep.strict);
        for g in &rep.gap_to_uniform {
            assert!(g.abs() <= 1e-8);
        }
    }

    /// The unit eigenvalue of z·φ_a sits at indices {2d−1, 2d} = {3, 4},
    /// where the round disk's normalized eigenvalue is also 2πd: the
    /// comparison is an equality for two-factor products as well.
    #[test]
    fn two_factor_product_unit_eigenvalue_placement() {
        let b = BlaschkeProduct::new(
            0.0,
            vec![(Complex64::new(0.0, 0.0), 1), (Complex64::new(0.5, 0.0), 1)],
        );
        let rep = sharpness_check(&b, 96, 1e-6).unwrap();
        assert_eq!(rep.k_list, vec![3, 4]);
        for (&k, &v) in rep.k_list.iter().zip(&rep.sigma_bar_at_unit) {
            assert!((v - 2.0 * TAU).abs() <= 1e-7, "sigma_bar at {k} = {v}");
        }
        assert!(!rep.strict);
        for g in &rep.gap_to_uniform {
            assert!(g.abs() <= 1e-8);
        }
    }

    #[test]
    fn single_factor_power_reports_zero_gap() {
        // s = 1 edge case: the density is a pushforward multiple of the
        // uniform one, so the comparison is an equality.
        let b = BlaschkeProduct::new(0.0, vec![(Complex64::new(0.5, 0.0), 2)]);
        let rep = sharpness_check(&b, 160, 1e-6).unwrap();
        assert!(!rep.strict);
        for g in &rep.gap_to_uniform {
            assert!(g.abs() <= 1e-8);
        }
    }

    #[test]
    fn rotating_zeros_preserves_spectrum() {
        let zeros = [Complex64::new(0.3, 0.1), Complex64::new(-0.2, 0.4)];
        let b1 = BlaschkeProduct::new(0.0, zeros.iter().map(|&a| (a, 1)).collect());
        let rot = Complex64::from_polar(1.0, 0.9);
        let b2 = BlaschkeProduct::new(0.0, zeros.iter().map(|&a| (rot * a, 1)).collect());
        let s1 = steklov_solve(&boundary_density(&b1), 64).unwrap();
        let s2 = steklov_solve(&boundary_density(&b2), 64).unwrap();
        for k in 0..=20 {
            assert!((s1.normalized(k) - s2.normalized(k)).abs() <= 1e-10);
        }
    }

    #[test]
    fn subproducts_of_z_squared() {
        let b = BlaschkeProduct::power(2);
        let rep = verify_subproduct_eigenfunctions(&b, 48);
        // subproducts: constant (re only) and z (re + im)
        assert_eq!(rep.entries.len(), 3);
        assert!(rep.all_negative);
        assert!(rep.full_product_q.0.abs() <= 1e-8);
        assert!(rep.full_product_q.1.abs() <= 1e-8);
    }

    #[test]
    fn subproducts_of_z_phi() {
        let b = BlaschkeProduct::new(
            0.0,
            vec![(Complex64::new(0.0, 0.0), 1), (Complex64::new(0.5, 0.0), 1)],
        );
        let rep = verify_subproduct_eigenfunctions(&b, 64);
        // 3 proper subproducts; the constant contributes only its real part
        assert_eq!(rep.entries.len(), 5);
        assert!(rep.all_negative);
        assert!(rep.full_product_q.0.abs() <= 1e-8);
    }

    #[test]
    fn under_resolution_reports_no_unit_eigenvalue() {
        // at this basis size the unit eigenvalue of z·φ_0.9 carries a
        // discretization error far above the requested tolerance
        let b = BlaschkeProduct::new(
            0.0,
            vec![(Complex64::new(0.0, 0.0), 1), (Complex64::new(0.9, 0.0), 1)],
        );
        let res = sharpness_check(&b, 48, 1e-13);
        assert!(matches!(res, Err(Error::NoUnitEigenvalue { .. })));
    }

    #[test]
    fn identity_has_no_proper_nonconstant_subproduct() {
        let b = BlaschkeProduct::power(1);
        let rep = verify_subproduct_eigenfunctions(&b, 32);
        assert_eq!(rep.entries.len(), 1); // the constant's real part
        assert!(rep.full_product_q.0.abs() <= 1e-9);
        assert!(rep.full_product_q.1.abs() <= 1e-9);
    }
}
