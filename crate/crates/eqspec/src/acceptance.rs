//! The verification battery behind `eqspec verify-all` and the
//! `acceptance` test target: every numbered check the toolkit is expected
//! to satisfy, each with its tolerance pinned in code, returning
//! structured results so callers can print one line per criterion.

use std::f64::consts::PI;
use std::time::Instant;

use nalgebra::Vector3;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blaschke::{boundary_density, index_lower_bound, sharpness_check, BlaschkeProduct};
use crate::closed_form::{
    disk_bar_sigma, hps_sharp, lambda_equivariant_sphere, sphere_bar_lambda,
    steklov_equivariant_disk, NormalizedEigenvalue,
};
use crate::disk_steklov::{glue_sweep, maximize_density, q_form_index, steklov_solve, BoundaryDensity};
use crate::mckay::{
    generators, symmetric_power_character, symmetric_power_decomposition, su2_symmetric_action,
    verify_invariant_subspace, McKayGraph,
};
use crate::rational_maps::{
    admissible_pairs, dpsi_kernel, wronskian, ComplexPolynomial, RationalMap,
};
use crate::semigroup::NumericalSemigroup;
use crate::sphere_laplace::{
    bump_sweep, index_nullity, laplace_solve, rational_map_density, spherical_harmonic_density,
    SphereDensity,
};
use crate::symmetry::{build_group, orbit, GroupSpec};

/// Where a check's expected value comes from: a literature value, an exact
/// identity, or an independently computed oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Reference,
    Exact,
    Computed,
}

impl Source {
    pub fn as_str(&self) -> &'static str {
        match self {
            Source::Reference => "reference",
            Source::Exact => "exact",
            Source::Computed => "computed",
        }
    }
}

/// One verified statement.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub source: Source,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>, source: Source) -> Self {
        Self { name: name.into(), passed, detail: detail.into(), source }
    }
}

/// All checks of one numbered criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn summary_line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        format!(
            "criterion {:>2} [{status}] {} ({} checks, {} failed, {:.2}s)",
            self.id,
            self.title,
            self.checks.len(),
            failed,
            self.seconds
        )
    }
}

pub const CRITERIA_COUNT: u32 = 13;

/// Run one criterion by number (1-based).
pub fn run_criterion(id: u32) -> CriterionResult {
    let start = Instant::now();
    let (title, checks) = match id {
        1 => ("closed-form spectral tables", criterion_golden_tables()),
        2 => ("disk closed form vs combinatorial oracle", criterion_disk_oracle()),
        3 => ("disk solver accuracy on the round disk", criterion_disk_accuracy()),
        4 => ("boundary-form index counts", criterion_blaschke_index()),
        5 => ("covering-density sharpness gaps", criterion_sharpness()),
        6 => ("sphere solver accuracy on the round sphere", criterion_sphere_accuracy()),
        7 => ("harmonic-map index and nullity", criterion_index_nullity()),
        8 => ("Wronskians and kernel nullities", criterion_wronskian()),
        9 => ("density mass identities", criterion_masses()),
        10 => ("symmetric-power decompositions", criterion_mckay()),
        11 => ("admissible degree pairs", criterion_admissible()),
        12 => ("concentration sweeps", criterion_sweeps()),
        13 => ("projected-subgradient maximizer", criterion_maximizer()),
        _ => panic!("criterion id out of range"),
    };
    CriterionResult { id, title, checks, seconds: start.elapsed().as_secs_f64() }
}

/// Run the whole battery in order.
pub fn all_criteria() -> Vec<CriterionResult> {
    (1..=CRITERIA_COUNT).map(run_criterion).collect()
}

fn pi_mult(n: i64) -> NormalizedEigenvalue {
    NormalizedEigenvalue::from_pi_multiple(n, 1)
}

// 1 ───────────────────────────────────────────────────────────────────────

/// Expected table value when a case bullet covers (family, k); None where
/// the general formula is the only statement.
pub fn golden_table_expectation(spec: GroupSpec, k: u64) -> Option<NormalizedEigenvalue> {
    match spec {
        GroupSpec::T | GroupSpec::Td => Some(if k <= 3 { pi_mult(8) } else { pi_mult(8 * k as i64) }),
        GroupSpec::Th | GroupSpec::O | GroupSpec::Oh => {
            if (1..=5).contains(&k) {
                Some(sphere_bar_lambda(k))
            } else if k == 10 || k == 11 {
                Some(pi_mult(72))
            } else {
                Some(pi_mult(8 * k as i64))
            }
        }
        GroupSpec::I | GroupSpec::Ih => {
            let n_i = NumericalSemigroup::new([12, 20, 30]);
            if (1..=11).contains(&k) {
                Some(sphere_bar_lambda(k))
            } else if k >= 60 || n_i.contains(k) {
                Some(pi_mult(8 * k as i64))
            } else {
                None
            }
        }
        _ => None,
    }
}

fn criterion_golden_tables() -> Vec<Check> {
    let t0 = Instant::now();
    let mut checks = Vec::new();
    let families = [
        GroupSpec::T,
        GroupSpec::Td,
        GroupSpec::Th,
        GroupSpec::O,
        GroupSpec::Oh,
        GroupSpec::I,
        GroupSpec::Ih,
    ];
    for spec in families {
        let mut bad = Vec::new();
        let mut covered = 0;
        for k in 1..=70u64 {
            let Some(expect) = golden_table_expectation(spec, k) else { continue };
            covered += 1;
            let (got, _, _) = lambda_equivariant_sphere(spec, k);
            if got != expect {
                bad.push(format!("k={k}: {} vs {}", got.symbolic(), expect.symbolic()));
            }
        }
        checks.push(Check::new(
            format!("{} case list, k ≤ 70, exact", spec.name()),
            bad.is_empty(),
            if bad.is_empty() {
                format!("{covered} covered levels match exactly")
            } else {
                bad.join("; ")
            },
            Source::Reference,
        ));
    }
    // spot values called out explicitly
    let (v10, _, _) = lambda_equivariant_sphere(GroupSpec::O, 10);
    let (v11, _, _) = lambda_equivariant_sphere(GroupSpec::O, 11);
    checks.push(Check::new(
        "octahedral levels 10 and 11 both give 72π",
        v10 == pi_mult(72) && v11 == pi_mult(72),
        format!("{} and {}", v10.symbolic(), v11.symbolic()),
        Source::Reference,
    ));
    let elapsed = t0.elapsed().as_secs_f64();
    checks.push(Check::new(
        "runtime under 1 s",
        elapsed < 1.0,
        format!("{elapsed:.3}s"),
        Source::Computed,
    ));
    checks
}

// 2 ───────────────────────────────────────────────────────────────────────

fn criterion_disk_oracle() -> Vec<Check> {
    let mut worst: Option<String> = None;
    let mut all_eq = true;
    for n in 1..=12u64 {
        for k in 1..=200u64 {
            let direct = steklov_equivariant_disk(n, k);
            let brute = (0..=k)
                .filter(|b| b % n == 0)
                .map(|b| pi_mult(2 * b as i64) + disk_bar_sigma(k - b))
                .max()
                .unwrap();
            if direct != brute {
                all_eq = false;
                worst.get_or_insert(format!("n={n} k={k}: {} vs {}", direct.symbolic(), brute.symbolic()));
            }
        }
    }
    let mut hps_ok = true;
    for n in 1..=12u64 {
        for k in 1..=200u64 {
            if hps_sharp(n, k) != (k % n <= 1) {
                hps_ok = false;
            }
        }
    }
    vec![
        Check::new(
            "closed form equals the semigroup maximum, n ≤ 12, k ≤ 200, exact",
            all_eq,
            worst.unwrap_or_else(|| "2400 (n, k) pairs".into()),
            Source::Computed,
        ),
        Check::new(
            "sharpness test matches the congruence k mod n ∈ {0, 1}",
            hps_ok,
            "same range",
            Source::Exact,
        ),
    ]
}

// 3 ───────────────────────────────────────────────────────────────────────

fn criterion_disk_accuracy() -> Vec<Check> {
    let t0 = Instant::now();
    let spec = steklov_solve(&BoundaryDensity::uniform(1.0), 64).unwrap();
    let mut worst = 0.0f64;
    for k in 0..=20usize {
        worst = worst.max((spec.normalized(k) - disk_bar_sigma(k as u64).as_f64()).abs());
    }
    let elapsed = t0.elapsed().as_secs_f64();
    vec![
        Check::new(
            "uniform density at N = 64 matches 2π⌊(k+1)/2⌋ to 1e−8, k ≤ 20",
            worst <= 1e-8,
            format!("max deviation {worst:.2e}"),
            Source::Reference,
        ),
        Check::new("runtime under 1 s", elapsed < 1.0, format!("{elapsed:.3}s"), Source::Computed),
    ]
}

// 4 ───────────────────────────────────────────────────────────────────────

fn multi_factor_battery() -> Vec<BlaschkeProduct> {
    let c = Complex64::new;
    vec![
        BlaschkeProduct::new(0.0, vec![(c(0.0, 0.0), 1), (c(0.5, 0.0), 1)]),
        BlaschkeProduct::new(0.0, vec![(c(0.0, 0.0), 1), (c(-0.3, 0.2), 1)]),
        BlaschkeProduct::new(0.3, vec![(c(0.4, 0.1), 1), (c(-0.5, -0.2), 1)]),
        BlaschkeProduct::new(0.0, vec![(c(0.0, 0.0), 2), (c(0.5, 0.0), 1)]),
        BlaschkeProduct::new(0.0, vec![(c(0.3, 0.3), 2), (c(-0.4, 0.1), 1)]),
        BlaschkeProduct::new(0.0, vec![(c(0.2, -0.5), 1), (c(-0.3, -0.3), 2)]),
        BlaschkeProduct::new(0.0, vec![(c(0.0, 0.0), 1), (c(0.5, 0.0), 1), (c(-0.4, 0.3), 1)]),
        BlaschkeProduct::new(0.0, vec![(c(0.1, 0.6), 1), (c(-0.6, 0.0), 1), (c(0.0, -0.4), 1)]),
        BlaschkeProduct::new(0.0, vec![(c(0.0, 0.0), 2), (c(0.5, 0.0), 2)]),
        BlaschkeProduct::new(0.0, vec![(c(0.0, 0.0), 3), (c(0.0, 0.4), 1)]),
        BlaschkeProduct::new(0.0, vec![(c(0.35, 0.0), 2), (c(-0.35, 0.0), 2)]),
        BlaschkeProduct::new(0.0, vec![(c(0.0, 0.0), 2), (c(0.4, 0.2), 1), (c(-0.5, 0.1), 1)]),
    ]
}

fn criterion_blaschke_index() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut powers_ok = true;
    let mut powers_detail = String::new();
    for d in 1..=6u32 {
        let rep = q_form_index(&boundary_density(&BlaschkeProduct::power(d)), 64, 1e-6).unwrap();
        if rep.index != (2 * d - 1) as usize || rep.nullity != 2 {
            powers_ok = false;
            powers_detail = format!("d={d}: ({}, {})", rep.index, rep.nullity);
        }
    }
    checks.push(Check::new(
        "power density index exactly 2d−1 with nullity 2, d = 1..6",
        powers_ok,
        if powers_ok { "threshold 1e−6".into() } else { powers_detail },
        Source::Reference,
    ));

    // combinatorial battery as stated; the measured index is 2d−1, which
    // is below the combinatorial count whenever the product has more than
    // one distinct factor (see the sharpness analysis in the module docs)
    let battery = multi_factor_battery();
    let mut fails = Vec::new();
    for b in &battery {
        let rep = q_form_index(&boundary_density(b), 128, 1e-6).unwrap();
        let bound = index_lower_bound(b);
        if (rep.index as u64) < bound {
            fails.push(format!(
                "d={} #factors={}: index {} < combinatorial count {}",
                b.degree(),
                b.num_factors(),
                rep.index,
                bound
            ));
        }
    }
    checks.push(Check::new(
        format!("battery of {} multi-factor products: index ≥ 2∏(m_i+1)−3", battery.len()),
        fails.is_empty(),
        if fails.is_empty() { "all above the bound".into() } else { fails.join("; ") },
        Source::Reference,
    ));
    checks
}

// 5 ───────────────────────────────────────────────────────────────────────

fn criterion_sharpness() -> Vec<Check> {
    let mut checks = Vec::new();
    for a in [0.3f64, 0.6, 0.9] {
        let b = BlaschkeProduct::new(
            0.0,
            vec![(Complex64::new(0.0, 0.0), 1), (Complex64::new(a, 0.0), 1)],
        );
        let rep = sharpness_check(&b, 320, 1e-6).unwrap();
        let value_ok = rep
            .sigma_bar_at_unit
            .iter()
            .all(|&v| (v - 4.0 * PI).abs() <= 1e-5);
        checks.push(Check::new(
            format!("z·φ_{a}: σ̄ at every unit eigenvalue equals 4π"),
            value_ok,
            format!("indices {:?}, values {:?}", rep.k_list, rep.sigma_bar_at_unit),
            Source::Computed,
        ));
        let gap_ok = rep.gap_to_uniform.iter().all(|&g| g >= 2.0 * PI - 1e-6);
        checks.push(Check::new(
            format!("z·φ_{a}: strict gap ≥ 2π − 1e−6 at every unit index"),
            gap_ok,
            format!(
                "gaps {:?} (unit eigenvalue sits at k ∈ {{2d−1, 2d}} where the round value is also 2πd)",
                rep.gap_to_uniform
            ),
            Source::Reference,
        ));
    }
    for (a, m) in [(0.5f64, 2u32), (0.3, 3)] {
        let b = BlaschkeProduct::new(0.0, vec![(Complex64::new(a, 0.0), m)]);
        let rep = sharpness_check(&b, 320, 1e-6).unwrap();
        let ok = rep.gap_to_uniform.iter().all(|&g| g.abs() <= 1e-8);
        checks.push(Check::new(
            format!("single-factor φ_{a}^{m}: gap 0 within 1e−8"),
            ok,
            format!("gaps {:?}", rep.gap_to_uniform),
            Source::Computed,
        ));
    }
    checks
}

// 6 ───────────────────────────────────────────────────────────────────────

fn criterion_sphere_accuracy() -> Vec<Check> {
    let t0 = Instant::now();
    let spec = laplace_solve(&SphereDensity::constant(2.0), 25).unwrap();
    let mut worst = 0.0f64;
    for k in 0..=35usize {
        let m = (k as u64).isqrt();
        let expect = 4.0 * PI * (m * (m + 1)) as f64;
        worst = worst.max((spec.normalized(k) - expect).abs());
    }
    let elapsed = t0.elapsed().as_secs_f64();
    vec![
        Check::new(
            "round density at L = 25 matches 4π·m(m+1) to 1e−6, k ≤ 35",
            worst <= 1e-6,
            format!("max deviation {worst:.2e}"),
            Source::Reference,
        ),
        Check::new("runtime under 30 s", elapsed < 30.0, format!("{elapsed:.2}s"), Source::Computed),
    ]
}

// 7 ───────────────────────────────────────────────────────────────────────

fn criterion_index_nullity() -> Vec<Check> {
    let t0 = Instant::now();
    let mut checks = Vec::new();
    let phi1 = rational_map_density(&RationalMap::octahedral_degree4());
    let phi2 = rational_map_density(&RationalMap::icosahedral_degree7());
    for (name, d, l, expect) in [
        ("degree-4 octahedral map", &phi1, 30usize, (7usize, 3usize)),
        ("degree-4 octahedral map (refined)", &phi1, 36, (7, 3)),
        ("degree-7 icosahedral map", &phi2, 36, (13, 3)),
        ("degree-7 icosahedral map (refined)", &phi2, 42, (13, 3)),
    ] {
        let rep = index_nullity(d, l, 0.02).unwrap();
        checks.push(Check::new(
            format!("{name} at L = {l}: (index, nullity) = ({}, {})", expect.0, expect.1),
            (rep.index, rep.nullity) == expect,
            format!("got ({}, {})", rep.index, rep.nullity),
            Source::Reference,
        ));
    }
    let mut sh_ok = true;
    let mut sh_detail = String::from("threshold 0.02, L = 12");
    for m in 1..=4u32 {
        let rep = index_nullity(&spherical_harmonic_density(m), 12, 0.02).unwrap();
        if rep.index != (m * m) as usize || rep.nullity != (2 * m + 1) as usize {
            sh_ok = false;
            sh_detail = format!("m={m}: ({}, {})", rep.index, rep.nullity);
        }
    }
    checks.push(Check::new(
        "spherical-harmonic densities give (m², 2m+1), m ≤ 4",
        sh_ok,
        sh_detail,
        Source::Reference,
    ));
    let elapsed = t0.elapsed().as_secs_f64();
    checks.push(Check::new(
        "runtime under 2 min",
        elapsed < 120.0,
        format!("{elapsed:.1}s"),
        Source::Computed,
    ));
    checks
}

// 8 ───────────────────────────────────────────────────────────────────────

fn criterion_wronskian() -> Vec<Check> {
    let mut checks = Vec::new();

    let p = ComplexPolynomial::from_gaussian_integers(&[(1, 0), (0, 0), (0, 0), (0, 0), (1, 0)]);
    let q = ComplexPolynomial::from_gaussian_integers(&[(0, 0), (0, 0), (1, 0)]);
    let w = wronskian(&p, &q);
    let e1 = ComplexPolynomial::from_gaussian_integers(&[(0, 0), (-2, 0), (0, 0), (0, 0), (0, 0), (2, 0)]);
    checks.push(Check::new(
        "Wronskian of (z⁴+1, z²) equals 2(z⁵−z) exactly",
        w.exact_coeffs() == e1.exact_coeffs(),
        "Gaussian-rational arithmetic",
        Source::Reference,
    ));

    let m2 = RationalMap::icosahedral_degree7();
    let w2 = wronskian(&m2.p, &m2.q);
    let mut e2 = vec![(0i64, 0i64); 12];
    e2[1] = (-14, 0);
    e2[6] = (154, 0);
    e2[11] = (14, 0);
    let e2 = ComplexPolynomial::from_gaussian_integers(&e2);
    checks.push(Check::new(
        "Wronskian of (z⁷−7z², 7z⁵+1) equals 14(z¹¹+11z⁶−z) exactly",
        w2.exact_coeffs() == e2.exact_coeffs(),
        "Gaussian-rational arithmetic",
        Source::Reference,
    ));

    let mut kernel_ok = true;
    let mut detail = String::new();
    for (map, name) in [
        (RationalMap::octahedral_degree4_rational(), "degree-4"),
        (RationalMap::icosahedral_degree7(), "degree-7"),
        (RationalMap::identity(), "identity"),
    ] {
        let rep = dpsi_kernel(&map).unwrap();
        if rep.kernel_dim != 0 || rep.nullity != 3 {
            kernel_ok = false;
            detail = format!("{name}: kernel {} nullity {}", rep.kernel_dim, rep.nullity);
        }
    }
    checks.push(Check::new(
        "ramification differential has trivial kernel, nullity 3",
        kernel_ok,
        if detail.is_empty() { "all three maps".into() } else { detail },
        Source::Reference,
    ));

    // cross-module: the spectral nullity of the same maps' densities
    let n1 = index_nullity(&rational_map_density(&RationalMap::octahedral_degree4()), 30, 0.02)
        .unwrap()
        .nullity;
    let n2 = index_nullity(&rational_map_density(&RationalMap::icosahedral_degree7()), 36, 0.02)
        .unwrap()
        .nullity;
    checks.push(Check::new(
        "algebraic nullity agrees with the spectral count",
        n1 == 3 && n2 == 3,
        format!("spectral nullities ({n1}, {n2})"),
        Source::Computed,
    ));
    checks
}

// 9 ───────────────────────────────────────────────────────────────────────

fn random_degree3_maps(seed: u64, count: usize) -> Vec<RationalMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut pc: Vec<(i64, i64)> = (0..4)
            .map(|_| (rng.random_range(-5..=5i64), rng.random_range(-5..=5i64)))
            .collect();
        pc[3] = (rng.random_range(1..=5i64), 0); // honest degree 3
        let qc: Vec<(i64, i64)> = (0..3)
            .map(|_| (rng.random_range(-5..=5i64), rng.random_range(-5..=5i64)))
            .collect();
        let p = ComplexPolynomial::from_gaussian_integers(&pc);
        let q = ComplexPolynomial::from_gaussian_integers(&qc);
        if q.is_zero() {
            continue;
        }
        if let Ok(map) = RationalMap::new(p, q) {
            out.push(map);
        }
    }
    out
}

fn criterion_masses() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut battery: Vec<(String, RationalMap)> = (1..=7usize)
        .map(|d| (format!("z^{d}"), RationalMap::power(d)))
        .collect();
    battery.push(("degree-4 octahedral".into(), RationalMap::octahedral_degree4()));
    battery.push(("degree-7 icosahedral".into(), RationalMap::icosahedral_degree7()));
    for (i, map) in random_degree3_maps(0x5EED, 3).into_iter().enumerate() {
        battery.push((format!("random degree-3 #{i}"), map));
    }
    let mut worst_rel = 0.0f64;
    let mut worst_name = String::new();
    for (name, map) in &battery {
        let d = map.degree();
        let mass = rational_map_density(map).mass();
        let expect = 8.0 * PI * d as f64;
        let rel = ((mass - expect) / expect).abs();
        if rel > worst_rel {
            worst_rel = rel;
            worst_name = name.clone();
        }
    }
    checks.push(Check::new(
        format!("{} map densities integrate to 8πd within 1e−6 relative", battery.len()),
        worst_rel <= 1e-6,
        format!("worst {worst_rel:.2e} ({worst_name})"),
        Source::Reference,
    ));

    let g = build_group(GroupSpec::T);
    let vertex = Vector3::new(1.0, 1.0, 1.0).normalize();
    let orb = orbit(&g, &vertex, 1e-8).unwrap();
    let mut worst = 0.0f64;
    for (pts, eps) in [
        (vec![Vector3::z()], 1.0),
        (vec![Vector3::z(), -Vector3::z()], 0.5),
        (orb.points.clone(), 0.3),
        (orb.points.clone(), 0.15),
    ] {
        let d = crate::sphere_laplace::bump_density(&pts, eps);
        let expect = 8.0 * PI * pts.len() as f64;
        worst = worst.max((d.mass() - expect).abs());
    }
    checks.push(Check::new(
        "bump densities integrate to 8π per point within 1e−8",
        worst <= 1e-8,
        format!("worst absolute deviation {worst:.2e}"),
        Source::Exact,
    ));
    checks
}

// 10 ──────────────────────────────────────────────────────────────────────

fn criterion_mckay() -> Vec<Check> {
    let mut checks = Vec::new();
    let g2t = McKayGraph::binary_tetrahedral();
    let g2o = McKayGraph::binary_octahedral();
    let g2i = McKayGraph::binary_icosahedral();

    let cases: Vec<(&McKayGraph, u32, Vec<u32>)> = vec![
        (&g2t, 4, vec![1, 1, 3]),
        (&g2o, 4, vec![2, 3]),
        (&g2i, 4, vec![5]),
        (&g2i, 6, vec![3, 4]),
        (&g2i, 7, vec![2, 6]),
    ];
    let mut dec_ok = true;
    let mut detail = String::new();
    for (g, k, expect) in cases {
        let dims = symmetric_power_decomposition(g, k).unwrap().dims(g);
        if dims != expect {
            dec_ok = false;
            detail = format!("{} S^{k}: {:?} vs {:?}", g.name, dims, expect);
        }
    }
    checks.push(Check::new(
        "documented symmetric-power decompositions",
        dec_ok,
        if detail.is_empty() { "S⁴ for 2T/2O/2I, S⁶ and S⁷ for 2I".into() } else { detail },
        Source::Reference,
    ));

    let mut dim_ok = true;
    for g in [&g2t, &g2o, &g2i] {
        for k in 0..=40 {
            let d = symmetric_power_decomposition(g, k).unwrap();
            if d.total_dimension(g) != k as i64 + 1 {
                dim_ok = false;
            }
        }
    }
    checks.push(Check::new(
        "dimension identity Σ mult·dim = k+1 for k ≤ 40",
        dim_ok,
        "all three graphs",
        Source::Exact,
    ));

    let one = Complex64::new(1.0, 0.0);
    let mut basis0 = vec![Complex64::ZERO; 8];
    basis0[0] = one;
    basis0[5] = -7.0 * one;
    let mut basis1 = vec![Complex64::ZERO; 8];
    basis1[7] = one;
    basis1[2] = 7.0 * one;
    let rep = verify_invariant_subspace(&generators::binary_icosahedral(), 7, &[basis0, basis1]);
    checks.push(Check::new(
        "2I invariant 2-plane in S⁷ has residual ≤ 1e−10",
        rep.invariant,
        format!("residual {:.2e}", rep.residual),
        Source::Reference,
    ));

    let mut char_ok = true;
    let mut worst = 0.0f64;
    for (gens, order) in [
        (generators::binary_tetrahedral(), 24),
        (generators::binary_octahedral(), 48),
        (generators::binary_icosahedral(), 120),
    ] {
        let group = crate::mckay::close_su2(&gens, order);
        if group.len() != order {
            char_ok = false;
        }
        for g in &group {
            for k in 0..=12 {
                let tr: Complex64 = su2_symmetric_action(g, k).diagonal().sum();
                let chi = symmetric_power_character(g, k);
                let err = (tr.re - chi).abs().max(tr.im.abs());
                worst = worst.max(err);
                if err > 1e-10 {
                    char_ok = false;
                }
            }
        }
    }
    checks.push(Check::new(
        "character identity on every binary-group element, k ≤ 12",
        char_ok,
        format!("worst deviation {worst:.2e}"),
        Source::Exact,
    ));
    checks
}

// 11 ──────────────────────────────────────────────────────────────────────

fn criterion_admissible() -> Vec<Check> {
    let mut checks = Vec::new();
    let mut small_ok = true;
    for spec in [GroupSpec::O, GroupSpec::I] {
        for k in 1..=3 {
            small_ok &= admissible_pairs(spec, k) == vec![(1, 1)];
        }
    }
    checks.push(Check::new(
        "only the automorphism pair (1,1) at small levels",
        small_ok,
        "octahedral and icosahedral families, k ≤ 3",
        Source::Reference,
    ));
    let mut mid_ok = admissible_pairs(GroupSpec::O, 4) == vec![(1, 1), (2, 3)];
    for k in 4..=8 {
        mid_ok &= admissible_pairs(GroupSpec::I, k) == vec![(1, 1), (2, 3)];
    }
    checks.push(Check::new(
        "{(1,1),(2,3)} at the intermediate levels",
        mid_ok,
        "octahedral k = 4; icosahedral k = 4..8",
        Source::Reference,
    ));
    checks.push(Check::new(
        "octahedral level 5 list {(1,1),(2,3),(1,4)}",
        admissible_pairs(GroupSpec::O, 5) == vec![(1, 1), (2, 3), (1, 4)],
        format!("{:?}", admissible_pairs(GroupSpec::O, 5)),
        Source::Reference,
    ));
    let mut high_ok = true;
    for k in 9..=11 {
        high_ok &= admissible_pairs(GroupSpec::I, k) == vec![(1, 1), (2, 3), (3, 6), (1, 7)];
    }
    checks.push(Check::new(
        "icosahedral levels 9–11 list {(1,1),(2,3),(3,6),(1,7)}",
        high_ok,
        format!("{:?}", admissible_pairs(GroupSpec::I, 10)),
        Source::Reference,
    ));
    checks
}

// 12 ──────────────────────────────────────────────────────────────────────

fn criterion_sweeps() -> Vec<Check> {
    let t0 = Instant::now();
    let mut checks = Vec::new();
    for (n, k, target) in [(2u32, 3usize, 6.0 * PI), (3, 5, 8.0 * PI)] {
        let sweep = glue_sweep(n, 1, k, 0.995, 20, 512).unwrap();
        let monotone = sweep.windows(2).all(|w| w[1].1 >= w[0].1 - 1e-6);
        let final_v = sweep.last().unwrap().1;
        let rel = (final_v - target).abs() / target;
        checks.push(Check::new(
            format!("glue sweep (n={n}, k={k}) monotone over 20 points"),
            monotone,
            format!(
                "min {:.4}, start {:.4}, end {:.4}",
                sweep.iter().map(|p| p.1).fold(f64::INFINITY, f64::min),
                sweep[0].1,
                final_v
            ),
            Source::Computed,
        ));
        checks.push(Check::new(
            format!("glue sweep (n={n}, k={k}) endpoint within 2% of {:.4}", target),
            rel <= 0.02,
            format!("σ̄ = {final_v:.4}, relative gap {rel:.4}"),
            Source::Reference,
        ));
    }
    let glue_elapsed = t0.elapsed().as_secs_f64();
    checks.push(Check::new(
        "glue sweeps run under 1 min",
        glue_elapsed < 60.0,
        format!("{glue_elapsed:.1}s"),
        Source::Computed,
    ));

    let g = build_group(GroupSpec::T);
    let vertex = Vector3::new(1.0, 1.0, 1.0).normalize();
    let orb = orbit(&g, &vertex, 1e-8).unwrap();
    let sweep = bump_sweep(&orb.points, &[0.4, 0.2, 0.1], 4, 40).unwrap();
    let increasing = sweep.windows(2).all(|w| w[1].1 > w[0].1);
    let final_v = sweep.last().unwrap().1;
    let rel = (final_v - 32.0 * PI).abs() / (32.0 * PI);
    checks.push(Check::new(
        "tetrahedral bump sweep increases as ε decreases",
        increasing,
        format!("{:?}", sweep.iter().map(|p| p.1).collect::<Vec<_>>()),
        Source::Computed,
    ));
    checks.push(Check::new(
        "λ̄₄ within 10% of 32π at ε = 0.1, L = 40",
        rel <= 0.10,
        format!("λ̄₄ = {final_v:.3}, relative gap {rel:.4}"),
        Source::Reference,
    ));
    checks
}

// 13 ──────────────────────────────────────────────────────────────────────

fn criterion_maximizer() -> Vec<Check> {
    let mut checks = Vec::new();
    for (k, n_sym) in [(1usize, 1usize), (2, 4)] {
        let out = maximize_density(k, n_sym, 10.0, 300, 0x5EED).unwrap();
        let rel = (out.best_sigma_bar - 2.0 * PI).abs() / (2.0 * PI);
        checks.push(Check::new(
            format!("maximizer (k={k}, symmetry {n_sym}) reaches within 1% of 2π"),
            rel <= 0.01,
            format!(
                "best σ̄ = {:.6}, relative gap {rel:.5}, stagnation={}",
                out.best_sigma_bar, out.stagnation_warning
            ),
            Source::Computed,
        ));
        checks.push(Check::new(
            format!("maximizer (k={k}, symmetry {n_sym}) iterates stay feasible"),
            out.invariants_ok,
            "cap, symmetry ≤ 1e−10, unit mass ≤ 1e−12 at every iterate",
            Source::Exact,
        ));
    }
    // unattained supremum: reported, never asserted
    let out = maximize_density(2, 2, 100.0, 120, 0x5EED).unwrap();
    let uniform = steklov_solve(&BoundaryDensity::uniform(1.0 / std::f64::consts::TAU), 48)
        .unwrap()
        .normalized(2);
    checks.push(Check::new(
        "report: two-fold symmetric σ̄₂ run (supremum 4π not attained)",
        true,
        format!(
            "best σ̄₂ = {:.4} vs uniform {:.4}, supremum 4π = {:.4}, improved={}",
            out.best_sigma_bar,
            uniform,
            4.0 * PI,
            out.best_sigma_bar > uniform
        ),
        Source::Computed,
    ));
    checks
}
