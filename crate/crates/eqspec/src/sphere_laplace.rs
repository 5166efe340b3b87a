//! Spherical-harmonic Galerkin solver for Laplace eigenvalues of conformal
//! densities on `S²`, density builders from rational maps and
//! concentration bumps, and spectral index/nullity counts for harmonic
//! maps.
//!
//! The pencil is `diag(ℓ(ℓ+1)) v = λ B v` over real spherical harmonics of
//! degree `≤ L`; `B = ∫ ρ Y_i Y_j dv` is assembled by product quadrature
//! (Gauss–Legendre in the latitude cosine × uniform longitude), with the
//! longitude integral routed through the discrete Fourier coefficients of
//! the density on each ring — exactly equal to the node sum, entry by
//! entry, but a ring-length factor cheaper.

use std::f64::consts::{PI, TAU};
use std::sync::Arc;

use nalgebra::{Matrix3, Rotation3, Vector3};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::disk_steklov::IndexReport;
use crate::error::Result;
use crate::linalg::{pencil_eigenvalues, SymMatrix};
use crate::rational_maps::{wronskian, ComplexPolynomial, RationalMap};

/// How a density came to be; carried for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Constant,
    RationalMap,
    BumpSum,
    Custom,
}

/// A positive conformal density `ρ dv` on the unit sphere.
#[derive(Clone)]
pub struct SphereDensity {
    eval: Arc<dyn Fn(&Vector3<f64>) -> f64 + Send + Sync>,
    pub provenance: Provenance,
}

impl std::fmt::Debug for SphereDensity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SphereDensity")
            .field("provenance", &self.provenance)
            .finish()
    }
}

impl SphereDensity {
    pub fn constant(c: f64) -> Self {
        assert!(c > 0.0);
        Self { eval: Arc::new(move |_| c), provenance: Provenance::Constant }
    }

    pub fn from_evaluator<F: Fn(&Vector3<f64>) -> f64 + Send + Sync + 'static>(f: F) -> Self {
        Self { eval: Arc::new(f), provenance: Provenance::Custom }
    }

    pub fn value(&self, v: &Vector3<f64>) -> f64 {
        (self.eval)(v)
    }

    /// Rotate the density by an orthogonal matrix: `ρ′(x) = ρ(Rᵀx)`.
    pub fn rotated(&self, r: &Matrix3<f64>) -> Self {
        let rt = r.transpose();
        let eval = self.eval.clone();
        Self {
            eval: Arc::new(move |v| eval(&(rt * v))),
            provenance: self.provenance,
        }
    }

    /// Total mass `∫ρ dv` by dedicated high-order quadrature, independent
    /// of any solver cutoff.
    pub fn mass(&self) -> f64 {
        quadrature_mass(self, 320, 720)
    }
}

/// `∫ρ dv` over a Gauss–Legendre × uniform product grid.
fn quadrature_mass(density: &SphereDensity, n_lat: usize, n_lon: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(n_lat);
    let mut total = 0.0;
    for (x, w) in nodes.iter().zip(&weights) {
        let sin_t = (1.0 - x * x).sqrt();
        let mut ring = 0.0;
        for p in 0..n_lon {
            let phi = TAU * p as f64 / n_lon as f64;
            let v = Vector3::new(sin_t * phi.cos(), sin_t * phi.sin(), *x);
            ring += density.value(&v);
        }
        total += w * ring * TAU / n_lon as f64;
    }
    total
}

/// Density `|dΦ|²` of a holomorphic map `[p : q]` in the round metric:
/// `ρ(z) = 2|𝓡(p,q)|²(1+|z|²)² / (|p|²+|q|²)²` in the stereographic
/// coordinate, evaluated through the reversed polynomials on the outer
/// hemisphere so poles never appear. Mass is `8π·deg`.
pub fn rational_map_density(map: &RationalMap) -> SphereDensity {
    let d = map.degree();
    let p = map.p.clone();
    let q = map.q.clone();
    let w = wronskian(&p, &q);
    let pr = p.reversed(d);
    let qr = q.reversed(d);
    let wr = wronskian(&pr, &qr);
    let eval = move |v: &Vector3<f64>| {
        // southern hemisphere: z = (x+iy)/(1−z₃), |z| ≤ 1; northern:
        // w = 1/z = (x−iy)/(1+z₃) with the reversed polynomials
        let (z, p, q, w): (Complex64, &ComplexPolynomial, &ComplexPolynomial, &ComplexPolynomial) =
            if v.z <= 0.0 {
                (Complex64::new(v.x, v.y) / (1.0 - v.z), &p, &q, &w)
            } else {
                (Complex64::new(v.x, -v.y) / (1.0 + v.z), &pr, &qr, &wr)
            };
        let denom = p.eval(z).norm_sqr() + q.eval(z).norm_sqr();
        let s = 1.0 + z.norm_sqr();
        2.0 * w.eval(z).norm_sqr() * s * s / (denom * denom)
    };
    SphereDensity { eval: Arc::new(eval), provenance: Provenance::RationalMap }
}

/// Constant density `m(m+1)` of the degree-`m` spherical-harmonic map;
/// mass `4π·m(m+1) = 8π·(m(m+1)/2)`.
pub fn spherical_harmonic_density(m: u32) -> SphereDensity {
    assert!(m >= 1);
    let c = (m * (m + 1)) as f64;
    SphereDensity { eval: Arc::new(move |_| c), provenance: Provenance::Constant }
}

/// Sum of degree-1 map densities `z ↦ z/ε` concentrated at the given
/// points (each bump defined at the north pole and rotated into place).
/// Each bump has mass exactly `8π`.
pub fn bump_density(points: &[Vector3<f64>], epsilon: f64) -> SphereDensity {
    assert!(epsilon > 0.0 && epsilon <= 1.0);
    assert!(!points.is_empty());
    for (i, p) in points.iter().enumerate() {
        assert!((p.norm() - 1.0).abs() <= 1e-10);
        for q in &points[..i] {
            assert!((p - q).norm() > 1e-10, "bump points must be distinct");
        }
    }
    // density of z ↦ εz concentrates at the north pole (z = ∞); evaluate
    // through whichever stereographic chart keeps |coordinate| ≤ 1
    let e2 = epsilon * epsilon;
    let north_bump = move |u: &Vector3<f64>| {
        if u.z <= 0.0 {
            let z = Complex64::new(u.x, u.y) / (1.0 - u.z);
            let zz = z.norm_sqr();
            let s = 1.0 + zz;
            let denom = e2 * zz + 1.0;
            2.0 * e2 * s * s / (denom * denom)
        } else {
            // w = 1/z: density of the reversed map w ↦ w/ε
            let w = Complex64::new(u.x, -u.y) / (1.0 + u.z);
            let ww = w.norm_sqr();
            let s = 1.0 + ww;
            let denom = ww + e2;
            2.0 * e2 * s * s / (denom * denom)
        }
    };
    let rotations: Vec<Matrix3<f64>> = points
        .iter()
        .map(|p| rotation_taking_north_to(p).transpose())
        .collect();
    let eval = move |v: &Vector3<f64>| {
        let mut acc = 0.0;
        for r in &rotations {
            let u = r * v;
            acc += north_bump(&u);
        }
        acc
    };
    SphereDensity { eval: Arc::new(eval), provenance: Provenance::BumpSum }
}

/// An explicit rotation with `R·e_z = p`.
pub fn rotation_taking_north_to(p: &Vector3<f64>) -> Matrix3<f64> {
    let north = Vector3::z();
    match Rotation3::rotation_between(&north, p) {
        Some(r) => *r.matrix(),
        // antipodal: half-turn about the x-axis
        None => Matrix3::from_diagonal(&Vector3::new(1.0, -1.0, -1.0)),
    }
}

/// Ascending Laplace eigenvalues of a sphere density.
#[derive(Debug, Clone)]
pub struct LaplaceSpectrum {
    pub lambdas: Vec<f64>,
    pub mass: f64,
    pub cutoff: usize,
}

impl LaplaceSpectrum {
    /// `λ̄_k = λ_k · mass`.
    pub fn normalized(&self, k: usize) -> f64 {
        self.lambdas[k] * self.mass
    }
}

/// Gauss–Legendre nodes and weights on `[−1, 1]` by Newton iteration on
/// the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // P_n(x) and P_n'(x)
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Fully normalized associated Legendre values `P̄_{ℓm}(x)` for all
/// `0 ≤ m ≤ ℓ ≤ lmax`, so that `Y_{ℓm}` built from them are orthonormal
/// on the sphere. Layout: index `ℓ(ℓ+1)/2 + m`.
pub fn normalized_legendre_table(lmax: usize, x: f64) -> Vec<f64> {
    let size = (lmax + 1) * (lmax + 2) / 2;
    let mut t = vec![0.0; size];
    let idx = |l: usize, m: usize| l * (l + 1) / 2 + m;
    let sx = (1.0 - x * x).sqrt();
    t[idx(0, 0)] = (1.0 / (4.0 * PI)).sqrt();
    for m in 1..=lmax {
        // P̄_mm = √((2m+1)/(2m)) · sinθ · P̄_{m−1,m−1}
        t[idx(m, m)] = ((2 * m + 1) as f64 / (2 * m) as f64).sqrt() * sx * t[idx(m - 1, m - 1)];
    }
    for m in 0..lmax {
        t[idx(m + 1, m)] = ((2 * m + 3) as f64).sqrt() * x * t[idx(m, m)];
    }
    for m in 0..=lmax {
        for l in (m + 2)..=lmax {
            let a = ((4 * l * l - 1) as f64 / ((l * l - m * m) as f64)).sqrt();
            let b = ((((l - 1) * (l - 1) - m * m) as f64) / ((4 * (l - 1) * (l - 1) - 1) as f64))
                .sqrt();
            t[idx(l, m)] = a * (x * t[idx(l - 1, m)] - b * t[idx(l - 2, m)]);
        }
    }
    t
}

/// Assemble the Galerkin pencil over real spherical harmonics of degree
/// `≤ L`. Basis order: `i = ℓ² + (m + ℓ)`, `m < 0` are the sine
/// harmonics, `m > 0` the cosines, `m = 0` zonal.
fn assemble_pencil(density: &SphereDensity, l_max: usize) -> (SymMatrix, SymMatrix, f64) {
    let n_lat = 2 * l_max + 8;
    let n_lon = 4 * l_max + 17;
    let (nodes, gl_weights) = gauss_legendre(n_lat);

    // per-ring data: Legendre table and density Fourier sums
    struct Ring {
        w: f64,
        plm: Vec<f64>,
        ic: Vec<f64>,
        is: Vec<f64>,
    }
    let rings: Vec<Ring> = nodes
        .par_iter()
        .zip(gl_weights.par_iter())
        .map(|(&x, &w)| {
            let sin_t = (1.0 - x * x).sqrt();
            let rho: Vec<f64> = (0..n_lon)
                .map(|p| {
                    let phi = TAU * p as f64 / n_lon as f64;
                    density.value(&Vector3::new(sin_t * phi.cos(), sin_t * phi.sin(), x))
                })
                .collect();
            // I_c[j] = (2π/M)Σ ρ_p cos(jφ_p), I_s likewise with sine
            let mut ic = vec![0.0; 2 * l_max + 1];
            let mut is = vec![0.0; 2 * l_max + 1];
            for j in 0..=2 * l_max {
                let mut c = 0.0;
                let mut s = 0.0;
                for (p, &r) in rho.iter().enumerate() {
                    let ang = j as f64 * TAU * p as f64 / n_lon as f64;
                    c += r * ang.cos();
                    s += r * ang.sin();
                }
                ic[j] = c * TAU / n_lon as f64;
                is[j] = s * TAU / n_lon as f64;
            }
            Ring { w, plm: normalized_legendre_table(l_max, x), ic, is }
        })
        .collect();

    let mass: f64 = rings.iter().map(|r| r.w * r.ic[0]).sum();

    let dim = (l_max + 1) * (l_max + 1);
    // basis decode tables
    let mut ls = vec![0usize; dim];
    let mut ms = vec![0i64; dim];
    for l in 0..=l_max {
        for m in -(l as i64)..=(l as i64) {
            let i = l * l + (m + l as i64) as usize;
            ls[i] = l;
            ms[i] = m;
        }
    }
    let pidx = |l: usize, m: usize| l * (l + 1) / 2 + m;
    let sqrt2 = 2.0f64.sqrt();

    // longitude factor for the pair (m_i, m_j) on a ring
    let phi_factor = |ring: &Ring, mi: i64, mj: i64| -> f64 {
        let ic = |j: i64| ring.ic[j.unsigned_abs() as usize];
        let is = |j: i64| {
            let v = ring.is[j.unsigned_abs() as usize];
            if j >= 0 {
                v
            } else {
                -v
            }
        };
        match (mi.signum(), mj.signum()) {
            (0, 0) => ic(0),
            (0, 1) => sqrt2 * ic(mj),
            (1, 0) => sqrt2 * ic(mi),
            (0, -1) => sqrt2 * is(-mj),
            (-1, 0) => sqrt2 * is(-mi),
            (1, 1) => ic(mi - mj) + ic(mi + mj),
            (-1, -1) => ic(mi - mj) - ic(-mi - mj),
            (-1, 1) => is(-mi + mj) + is(-mi - mj),
            (1, -1) => is(mi - mj) + is(-mj - mi),
            _ => unreachable!(),
        }
    };

    let mut a = SymMatrix::zeros(dim);
    for i in 0..dim {
        let l = ls[i];
        a.set(i, i, (l * (l + 1)) as f64);
    }

    // B entries: each is an independent fixed-order sum over rings
    let entries: Vec<Vec<f64>> = (0..dim)
        .into_par_iter()
        .map(|i| {
            let li = ls[i];
            let mi = ms[i];
            let absmi = mi.unsigned_abs() as usize;
            let mut row = vec![0.0; dim - i];
            for j in i..dim {
                let lj = ls[j];
                let mj = ms[j];
                let absmj = mj.unsigned_abs() as usize;
                let mut acc = 0.0;
                for ring in &rings {
                    acc += ring.w
                        * ring.plm[pidx(li, absmi)]
                        * ring.plm[pidx(lj, absmj)]
                        * phi_factor(ring, mi, mj);
                }
                row[j - i] = acc;
            }
            row
        })
        .collect();
    let mut b = SymMatrix::zeros(dim);
    for i in 0..dim {
        for j in i..dim {
            b.set(i, j, entries[i][j - i]);
        }
    }
    (a, b, mass)
}

/// Solve the Laplace pencil at spherical-harmonic cutoff `L`.
pub fn laplace_solve(density: &SphereDensity, l_max: usize) -> Result<LaplaceSpectrum> {
    assert!(l_max >= 4, "cutoff too small");
    let (a, b, mass) = assemble_pencil(density, l_max);
    let lambdas = pencil_eigenvalues(&a, &b)?;
    Ok(LaplaceSpectrum { lambdas, mass, cutoff: l_max })
}

/// Morse data of the harmonic-map form `Q(u) = ∫(|du|² − ρu²) dv`:
/// pencil eigenvalues below 1 are negative directions, eigenvalues at 1
/// its kernel.
pub fn index_nullity(density: &SphereDensity, l_max: usize, tol: f64) -> Result<IndexReport> {
    let spec = laplace_solve(density, l_max)?;
    Ok(IndexReport::from_spectrum(&spec.lambdas, tol, (l_max + 1) * (l_max + 1)))
}

/// `λ̄_k` of the bump density along a concentration sweep, ordered as the
/// input epsilons.
pub fn bump_sweep(
    points: &[Vector3<f64>],
    epsilons: &[f64],
    k: usize,
    l_max: usize,
) -> Result<Vec<(f64, f64)>> {
    epsilons
        .iter()
        .map(|&eps| {
            let d = bump_density(points, eps);
            let s = laplace_solve(&d, l_max)?;
            Ok((eps, s.normalized(k)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::sphere_bar_lambda;
    use crate::symmetry::{build_group, GroupSpec};

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let (x, w) = gauss_legendre(12);
        // ∫ x^k on [−1,1]
        for k in 0..=23 {
            let got: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(k)).sum();
            let expect = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
            assert!((got - expect).abs() <= 1e-13, "k={k}");
        }
    }

    #[test]
    fn gram_of_unit_density_is_identity() {
        let l = 8;
        let (_, b, mass) = assemble_pencil(&SphereDensity::constant(1.0), l);
        assert!((mass - 4.0 * PI).abs() <= 1e-12);
        for i in 0..b.n {
            for j in 0..b.n {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (b.get(i, j) - expect).abs() <= 1e-12,
                    "B[{i}][{j}] = {}",
                    b.get(i, j)
                );
            }
        }
    }

    #[test]
    fn round_sphere_spectrum() {
        let spec = laplace_solve(&SphereDensity::constant(2.0), 12).unwrap();
        assert!(spec.lambdas[0].abs() <= 1e-9);
        for k in 0..=20 {
            let expect = sphere_bar_lambda(k as u64).as_f64();
            assert!(
                (spec.normalized(k) - expect).abs() <= 1e-8,
                "k={k}: {} vs {expect}",
                spec.normalized(k)
            );
        }
    }

    #[test]
    fn normalized_spectrum_scale_invariant() {
        let s1 = laplace_solve(&SphereDensity::constant(2.0), 8).unwrap();
        let s2 = laplace_solve(&SphereDensity::constant(6.0), 8).unwrap();
        for k in 0..=10 {
            assert!((s1.normalized(k) - s2.normalized(k)).abs() <= 1e-9);
        }
    }

    #[test]
    fn identity_map_density_is_constant_2() {
        let d = rational_map_density(&RationalMap::identity());
        for v in [
            Vector3::new(0.0, 0.0, 1.0),
            Vector3::new(0.0, 0.0, -1.0),
            Vector3::new(1.0, 0.0, 0.0),
            Vector3::new(0.6, -0.48, 0.64).normalize(),
        ] {
            assert!((d.value(&v) - 2.0).abs() <= 1e-12, "{v:?}");
        }
        assert!((d.mass() - 8.0 * PI).abs() <= 1e-8);
    }

    #[test]
    fn rational_map_masses_are_8_pi_d() {
        let cases: Vec<(RationalMap, usize)> = vec![
            (RationalMap::octahedral_degree4(), 4),
            (RationalMap::icosahedral_degree7(), 7),
            (RationalMap::power(2), 2),
            (RationalMap::power(3), 3),
        ];
        for (map, d) in cases {
            let density = rational_map_density(&map);
            let mass = density.mass();
            let expect = 8.0 * PI * d as f64;
            assert!(
                ((mass - expect) / expect).abs() <= 1e-6,
                "d={d}: mass {mass} vs {expect}"
            );
        }
    }

    #[test]
    fn bump_mass_is_8_pi_per_point() {
        let pts = vec![
            Vector3::new(0.0, 0.0, 1.0),
            Vector3::new(0.0, 0.0, -1.0),
            Vector3::new(1.0, 0.0, 0.0),
        ];
        for eps in [1.0, 0.5, 0.2] {
            let d = bump_density(&pts, eps);
            let expect = 8.0 * PI * pts.len() as f64;
            assert!(
                (d.mass() - expect).abs() <= 1e-8,
                "eps={eps}: {} vs {expect}",
                d.mass()
            );
        }
        // single bump at ε = 1 is the round density 2
        let d = bump_density(&[Vector3::new(0.0, 1.0, 0.0)], 1.0);
        for v in [Vector3::new(0.0, 0.0, 1.0), Vector3::new(0.5, 0.5, 0.71).normalize()] {
            assert!((d.value(&v) - 2.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn spherical_harmonic_density_counts() {
        // index m², nullity 2m+1
        for m in 1..=3u32 {
            let rep = index_nullity(&spherical_harmonic_density(m), 10, 0.02).unwrap();
            assert_eq!(rep.index, (m * m) as usize, "m={m}");
            assert_eq!(rep.nullity, (2 * m + 1) as usize, "m={m}");
        }
    }

    #[test]
    fn rotation_leaves_spectrum_invariant() {
        let g = build_group(GroupSpec::T);
        let map = RationalMap::octahedral_degree4();
        let d = rational_map_density(&map);
        let dr = d.rotated(&g.elements[5].matrix);
        let s1 = laplace_solve(&d, 26).unwrap();
        let s2 = laplace_solve(&dr, 26).unwrap();
        for k in 0..=12 {
            assert!(
                (s1.normalized(k) - s2.normalized(k)).abs() <= 1e-8,
                "k={k}: {} vs {}",
                s1.normalized(k),
                s2.normalized(k)
            );
        }
    }

    #[test]
    fn octahedral_map_index_nullity() {
        let d = rational_map_density(&RationalMap::octahedral_degree4());
        let rep = index_nullity(&d, 20, 0.02).unwrap();
        assert_eq!(rep.index, 7);
        assert_eq!(rep.nullity, 3);
    }

    #[test]
    fn map_density_index_dominates_degree_bound() {
        use crate::rational_maps::index_lower_bound_harmonic;
        let cases = [
            (RationalMap::identity(), 1usize),
            (RationalMap::power(2), 2),
            (RationalMap::power(3), 3),
            (RationalMap::octahedral_degree4(), 4),
        ];
        for (map, d) in cases {
            let rep = index_nullity(&rational_map_density(&map), 20, 0.02).unwrap();
            let bound = index_lower_bound_harmonic(d as u64) as usize;
            assert!(rep.index >= bound, "d={d}: index {} < bound {bound}", rep.index);
        }
    }
}
