//! Finite conformal symmetry groups of the sphere and the disk.
//!
//! Groups are generated from hardcoded matrices (tetrahedron inscribed in
//! the cube, icosahedron in golden-ratio coordinates) and closed under
//! multiplication. Orbits, stabilizers and the set of distinct orbit
//! cardinalities feed the orbit semigroup used by the closed forms.

use std::collections::BTreeSet;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::{Matrix3, Vector3};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Deterministic seed for the generic sample points.
pub const GENERIC_POINT_SEED: u64 = 0x5EED;

/// Default dedup tolerance for orbit points.
pub const DEDUP_TOL: f64 = 1e-8;

const MATCH_TOL: f64 = 1e-10;

/// The families of finite groups acting conformally on `S²` or `D²`.
///
/// Sphere families are subgroups of `O(3)`; disk families are plane
/// orthogonal groups embedded as 3×3 matrices fixing the `z`-axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    CyclicSphere(u32),
    DihedralSphere(u32),
    /// Rotational tetrahedral group, order 12.
    T,
    /// Full tetrahedral group `T ∪ (O∖T)·(−I)`, order 24.
    Td,
    /// Pyritohedral group `T × {±I}`, order 24.
    Th,
    /// Rotational octahedral group, order 24.
    O,
    /// Full octahedral group `O × {±I}`, order 48.
    Oh,
    /// Rotational icosahedral group, order 60.
    I,
    /// Full icosahedral group `I × {±I}`, order 120.
    Ih,
    CyclicDisk(u32),
    DihedralDisk(u32),
}

impl GroupSpec {
    pub fn is_disk(&self) -> bool {
        matches!(self, GroupSpec::CyclicDisk(_) | GroupSpec::DihedralDisk(_))
    }

    pub fn is_sphere(&self) -> bool {
        !self.is_disk()
    }

    /// Group order implied by the family.
    pub fn expected_order(&self) -> usize {
        match *self {
            GroupSpec::CyclicSphere(n) | GroupSpec::CyclicDisk(n) => n as usize,
            GroupSpec::DihedralSphere(n) | GroupSpec::DihedralDisk(n) => 2 * n as usize,
            GroupSpec::T => 12,
            GroupSpec::Td | GroupSpec::Th | GroupSpec::O => 24,
            GroupSpec::Oh => 48,
            GroupSpec::I => 60,
            GroupSpec::Ih => 120,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            GroupSpec::CyclicSphere(n) => format!("Z{n}"),
            GroupSpec::DihedralSphere(n) => format!("D{n}"),
            GroupSpec::T => "T".into(),
            GroupSpec::Td => "Td".into(),
            GroupSpec::Th => "Th".into(),
            GroupSpec::O => "O".into(),
            GroupSpec::Oh => "Oh".into(),
            GroupSpec::I => "I".into(),
            GroupSpec::Ih => "Ih".into(),
            GroupSpec::CyclicDisk(n) => format!("Z{n}-disk"),
            GroupSpec::DihedralDisk(n) => format!("D{n}-disk"),
        }
    }
}

/// One orthogonal 3×3 matrix together with its determinant sign.
#[derive(Debug, Clone, Copy)]
pub struct GroupElement {
    pub matrix: Matrix3<f64>,
    pub det: f64,
}

impl GroupElement {
    pub fn new(matrix: Matrix3<f64>) -> Self {
        let g = matrix.transpose() * matrix;
        let defect = (g - Matrix3::identity()).abs().max();
        assert!(defect <= 1e-12, "matrix is not orthogonal: defect {defect:.3e}");
        let det = matrix.determinant();
        assert!((det.abs() - 1.0).abs() <= 1e-12, "determinant {det} not ±1");
        Self { matrix, det: det.signum() }
    }

    pub fn is_rotation(&self) -> bool {
        self.det > 0.0
    }

    pub fn is_identity(&self) -> bool {
        (self.matrix - Matrix3::identity()).abs().max() <= MATCH_TOL
    }

    /// True for improper elements with eigenvalues `{1, 1, −1}`.
    pub fn is_reflection(&self) -> bool {
        !self.is_rotation() && (self.matrix.trace() - 1.0).abs() <= 1e-9
    }

    pub fn apply(&self, p: &Vector3<f64>) -> Vector3<f64> {
        self.matrix * p
    }
}

/// A finite subgroup of `O(3)`, closed under multiplication and inverse.
#[derive(Debug, Clone)]
pub struct SymmetryGroup {
    pub spec: GroupSpec,
    pub elements: Vec<GroupElement>,
}

impl SymmetryGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Conjugate every element by an orthogonal matrix. The abstract group
    /// and all orbit cardinalities are unchanged.
    pub fn conjugated(&self, r: &Matrix3<f64>) -> Self {
        let ri = r.transpose();
        let elements = self
            .elements
            .iter()
            .map(|e| GroupElement::new(reorthogonalize(r * e.matrix * ri)))
            .collect();
        Self { spec: self.spec, elements }
    }

    /// Index of the element matching `m`, within `MATCH_TOL`.
    fn find(&self, m: &Matrix3<f64>) -> Option<usize> {
        self.elements
            .iter()
            .position(|e| (e.matrix - m).abs().max() <= MATCH_TOL)
    }

    /// Largest pairwise product mismatch against the element list; a closed
    /// group returns a small number (≤ 1e−10 by construction).
    pub fn closure_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in &self.elements {
            for b in &self.elements {
                let p = a.matrix * b.matrix;
                let best = self
                    .elements
                    .iter()
                    .map(|e| (e.matrix - p).abs().max())
                    .fold(f64::INFINITY, f64::min);
                worst = worst.max(best);
            }
        }
        worst
    }

    /// Number of elements fixing `p` within `tol`.
    pub fn stabilizer_order(&self, p: &Vector3<f64>, tol: f64) -> usize {
        self.elements
            .iter()
            .filter(|e| (e.apply(p) - p).norm() <= tol)
            .count()
    }
}

/// An orbit `Γ·p` as a deduplicated point list.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub seed: Vector3<f64>,
    pub points: Vec<Vector3<f64>>,
}

impl Orbit {
    pub fn cardinality(&self) -> usize {
        self.points.len()
    }
}

fn reorthogonalize(m: Matrix3<f64>) -> Matrix3<f64> {
    // One Newton step of the polar decomposition; keeps conjugated
    // elements inside the 1e−12 orthogonality budget.
    let g = m.transpose() * m;
    m * (Matrix3::identity() * 1.5 - 0.5 * g)
}

fn rot_axis(axis: Vector3<f64>, angle: f64) -> Matrix3<f64> {
    let a = axis.normalize();
    let (s, c) = angle.sin_cos();
    let k = Matrix3::new(0.0, -a.z, a.y, a.z, 0.0, -a.x, -a.y, a.x, 0.0);
    Matrix3::identity() + s * k + (1.0 - c) * (k * k)
}

fn rot_z(angle: f64) -> Matrix3<f64> {
    rot_axis(Vector3::z(), angle)
}

/// Close a generator set under multiplication.
fn close_group(generators: &[Matrix3<f64>], expected_order: usize) -> Vec<GroupElement> {
    let mut elements: Vec<Matrix3<f64>> = vec![Matrix3::identity()];
    let mut frontier: Vec<Matrix3<f64>> = vec![Matrix3::identity()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in generators {
                let p = reorthogonalize(g * f);
                if !elements.iter().any(|e| (e - p).abs().max() <= MATCH_TOL) {
                    elements.push(p);
                    next.push(p);
                }
            }
        }
        frontier = next;
        assert!(
            elements.len() <= expected_order,
            "closure exceeded expected order {expected_order}"
        );
    }
    assert_eq!(
        elements.len(),
        expected_order,
        "closure produced wrong order"
    );
    elements.into_iter().map(GroupElement::new).collect()
}

/// Construct the group of a family spec. Rotation groups come from
/// hardcoded generators; the full groups are `G × {±I}`, except `T_d`,
/// which is the index-2 lift `T ∪ (O∖T)·(−I)` of the sign character of `S₄`.
pub fn build_group(spec: GroupSpec) -> SymmetryGroup {
    let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
    // cyclic coordinate permutation = 2π/3 rotation about (1,1,1)
    let perm = Matrix3::new(0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0);
    let c2z = Matrix3::from_diagonal(&Vector3::new(-1.0, -1.0, 1.0));
    let c4z = Matrix3::new(0.0, -1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0);

    let elements = match spec {
        GroupSpec::CyclicSphere(n) | GroupSpec::CyclicDisk(n) => {
            assert!(n >= 1);
            close_group(&[rot_z(std::f64::consts::TAU / n as f64)], n as usize)
        }
        GroupSpec::DihedralSphere(n) => {
            assert!(n >= 1);
            let c2x = Matrix3::from_diagonal(&Vector3::new(1.0, -1.0, -1.0));
            close_group(&[rot_z(std::f64::consts::TAU / n as f64), c2x], 2 * n as usize)
        }
        GroupSpec::DihedralDisk(n) => {
            assert!(n >= 1);
            let mirror = Matrix3::from_diagonal(&Vector3::new(1.0, -1.0, 1.0));
            close_group(&[rot_z(std::f64::consts::TAU / n as f64), mirror], 2 * n as usize)
        }
        GroupSpec::T => close_group(&[c2z, perm], 12),
        GroupSpec::O => close_group(&[c2z, perm, c4z], 24),
        GroupSpec::I => {
            let c5 = rot_axis(Vector3::new(0.0, 1.0, phi), std::f64::consts::TAU / 5.0);
            close_group(&[perm, c5], 60)
        }
        GroupSpec::Th => with_antipodal(build_group(GroupSpec::T).elements),
        GroupSpec::Oh => with_antipodal(build_group(GroupSpec::O).elements),
        GroupSpec::Ih => with_antipodal(build_group(GroupSpec::I).elements),
        GroupSpec::Td => {
            let t = build_group(GroupSpec::T);
            let o = build_group(GroupSpec::O);
            let mut elements = t.elements.clone();
            for e in &o.elements {
                if t.find(&e.matrix).is_none() {
                    elements.push(GroupElement::new(-e.matrix));
                }
            }
            assert_eq!(elements.len(), 24);
            elements
        }
    };
    SymmetryGroup { spec, elements }
}

fn with_antipodal(rotations: Vec<GroupElement>) -> Vec<GroupElement> {
    let mut out = rotations.clone();
    out.extend(rotations.iter().map(|e| GroupElement::new(-e.matrix)));
    out
}

/// Enumerate `Γ·p`, deduplicating within `tol`.
///
/// Points closer than `tol/10` are merged; a pair landing strictly between
/// `tol/10` and `tol` is reported as `AmbiguousDedup` rather than guessed.
pub fn orbit(group: &SymmetryGroup, point: &Vector3<f64>, tol: f64) -> Result<Orbit> {
    assert!(tol > 0.0);
    assert!(
        (point.norm() - 1.0).abs() <= 1e-12,
        "orbit seed must be a unit vector"
    );
    let mut points: Vec<Vector3<f64>> = Vec::new();
    for e in &group.elements {
        let q = e.apply(point);
        let mut nearest = f64::INFINITY;
        for r in &points {
            nearest = nearest.min((q - r).norm());
        }
        if nearest <= tol / 10.0 {
            continue;
        }
        if nearest < tol {
            return Err(Error::AmbiguousDedup { dist: nearest, tol });
        }
        points.push(q);
    }
    Ok(Orbit { seed: *point, points })
}

/// Special points whose orbits realize every distinct orbit cardinality:
/// rotation-axis poles, one generic point per reflection circle, and one
/// fully generic point (seeded for determinism).
fn special_points(group: &SymmetryGroup) -> Vec<Vector3<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(GENERIC_POINT_SEED);
    let mut pts: Vec<Vector3<f64>> = Vec::new();

    if group.spec.is_disk() {
        // Orbit sizes are taken on the boundary circle only.
        for e in &group.elements {
            if e.is_rotation() {
                continue;
            }
            // in-plane mirror: fixed line = eigenvector of +1 in the plane
            let m = e.matrix;
            let dir = plane_mirror_axis(&m);
            pts.push(dir);
        }
        // generic boundary point
        let theta: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        pts.push(Vector3::new(theta.cos(), theta.sin(), 0.0));
        return pts;
    }

    for e in &group.elements {
        if e.is_identity() {
            continue;
        }
        if e.is_rotation() {
            let axis = rotation_axis(&e.matrix);
            pts.push(axis);
            pts.push(-axis);
        } else if e.is_reflection() {
            // normal of the mirror plane = eigenvector of −1
            let n = reflection_normal(&e.matrix);
            // a few generic points on the mirror circle
            for _ in 0..3 {
                let u = random_unit(&mut rng);
                let v = u - n * u.dot(&n);
                if v.norm() > 1e-3 {
                    pts.push(v.normalize());
                }
            }
        }
    }
    pts.push(random_unit(&mut rng));
    pts
}

fn random_unit(rng: &mut ChaCha8Rng) -> Vector3<f64> {
    loop {
        let v = Vector3::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 0.1 && n < 1.0 {
            return v / n;
        }
    }
}

/// Axis of a non-identity rotation matrix.
pub fn rotation_axis(m: &Matrix3<f64>) -> Vector3<f64> {
    let anti = Vector3::new(
        m[(2, 1)] - m[(1, 2)],
        m[(0, 2)] - m[(2, 0)],
        m[(1, 0)] - m[(0, 1)],
    );
    if anti.norm() > 1e-8 {
        return anti.normalize();
    }
    // angle π: M + I = 2 a aᵀ
    let s = m + Matrix3::identity();
    let col = (0..3)
        .map(|j| s.column(j).into_owned())
        .max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap())
        .unwrap();
    col.normalize()
}

fn reflection_normal(m: &Matrix3<f64>) -> Vector3<f64> {
    // S = I − 2 n nᵀ, so I − S = 2 n nᵀ
    let s = Matrix3::identity() - m;
    let col = (0..3)
        .map(|j| s.column(j).into_owned())
        .max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap())
        .unwrap();
    col.normalize()
}

fn plane_mirror_axis(m: &Matrix3<f64>) -> Vector3<f64> {
    // 2×2 reflection embedded in the plane; fixed direction = +1 eigenvector
    let s = m + Matrix3::identity();
    let mut best = Vector3::zeros();
    for j in 0..2 {
        let c = Vector3::new(s[(0, j)], s[(1, j)], 0.0);
        if c.norm() > best.norm() {
            best = c;
        }
    }
    best.normalize()
}

/// The complete set of distinct orbit cardinalities of the group action
/// (on `S²`, or on the boundary circle for disk families).
pub fn orbit_size_generators(group: &SymmetryGroup) -> BTreeSet<u64> {
    let order = group.order();
    let mut sizes = BTreeSet::new();
    for p in special_points(group) {
        // orbit size via stabilizer counting
        let stab = group.stabilizer_order(&p, DEDUP_TOL);
        debug_assert_eq!(order % stab, 0);
        sizes.insert((order / stab) as u64);
    }
    sizes
}

/// The additive semigroup generated by the orbit cardinalities.
pub fn orbit_semigroup(group: &SymmetryGroup) -> NumericalSemigroup {
    NumericalSemigroup::new(orbit_size_generators(group))
}

/// Memoized `build_group` + `orbit_semigroup` keyed by spec; the closed-form
/// tables query the same few groups repeatedly.
pub fn orbit_semigroup_cached(spec: GroupSpec) -> Arc<NumericalSemigroup> {
    static CACHE: OnceLock<Mutex<Vec<(GroupSpec, Arc<NumericalSemigroup>)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut guard = cache.lock().unwrap();
    if let Some((_, s)) = guard.iter().find(|(k, _)| *k == spec) {
        return s.clone();
    }
    let s = Arc::new(orbit_semigroup(&build_group(spec)));
    guard.push((spec, s.clone()));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn north() -> Vector3<f64> {
        Vector3::z()
    }

    #[test]
    fn group_orders_match_families() {
        let cases = [
            (GroupSpec::T, 12),
            (GroupSpec::Td, 24),
            (GroupSpec::Th, 24),
            (GroupSpec::O, 24),
            (GroupSpec::Oh, 48),
            (GroupSpec::I, 60),
            (GroupSpec::Ih, 120),
            (GroupSpec::CyclicSphere(1), 1),
            (GroupSpec::CyclicSphere(5), 5),
            (GroupSpec::DihedralSphere(4), 8),
            (GroupSpec::CyclicDisk(6), 6),
            (GroupSpec::DihedralDisk(6), 12),
        ];
        for (spec, order) in cases {
            let g = build_group(spec);
            assert_eq!(g.order(), order, "{spec:?}");
            assert_eq!(g.order(), spec.expected_order());
        }
    }

    #[test]
    fn closure_defect_small_for_every_family() {
        for spec in [
            GroupSpec::T,
            GroupSpec::Td,
            GroupSpec::Th,
            GroupSpec::O,
            GroupSpec::Oh,
            GroupSpec::I,
            GroupSpec::DihedralSphere(3),
            GroupSpec::DihedralDisk(5),
        ] {
            let g = build_group(spec);
            assert!(g.closure_defect() <= 1e-10, "{spec:?}");
        }
    }

    #[test]
    fn ih_has_order_120_and_closes() {
        let g = build_group(GroupSpec::Ih);
        assert_eq!(g.order(), 120);
        assert!(g.closure_defect() <= 1e-10);
    }

    #[test]
    fn cyclic_north_pole_is_fixed() {
        let g = build_group(GroupSpec::CyclicSphere(7));
        let orb = orbit(&g, &north(), DEDUP_TOL).unwrap();
        assert_eq!(orb.cardinality(), 1);
    }

    #[test]
    fn icosahedron_vertex_orbit_has_12_points() {
        let g = build_group(GroupSpec::I);
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        let v = Vector3::new(0.0, 1.0, phi).normalize();
        let orb = orbit(&g, &v, DEDUP_TOL).unwrap();
        assert_eq!(orb.cardinality(), 12);
    }

    #[test]
    fn generic_tetrahedral_orbit_has_group_order() {
        let g = build_group(GroupSpec::T);
        let p = Vector3::new(0.3, 0.5, 0.81).normalize();
        let orb = orbit(&g, &p, DEDUP_TOL).unwrap();
        assert_eq!(orb.cardinality(), 12);
    }

    #[test]
    fn orbit_times_stabilizer_equals_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for spec in [
            GroupSpec::T,
            GroupSpec::Td,
            GroupSpec::Th,
            GroupSpec::O,
            GroupSpec::Oh,
            GroupSpec::I,
            GroupSpec::DihedralSphere(5),
        ] {
            let g = build_group(spec);
            for _ in 0..5 {
                let p = random_unit(&mut rng);
                let orb = orbit(&g, &p, DEDUP_TOL).unwrap();
                let stab = g.stabilizer_order(&p, DEDUP_TOL);
                assert_eq!(orb.cardinality() * stab, g.order(), "{spec:?}");
            }
        }
    }

    #[test]
    fn orbit_point_set_is_group_invariant() {
        let g = build_group(GroupSpec::O);
        let p = Vector3::new(0.2, -0.7, 0.6857).normalize();
        let orb = orbit(&g, &p, DEDUP_TOL).unwrap();
        for e in &g.elements {
            for q in &orb.points {
                let img = e.apply(q);
                let hit = orb.points.iter().any(|r| (img - r).norm() <= 1e-10);
                assert!(hit);
            }
        }
    }

    #[test]
    fn orbit_size_generator_sets() {
        let cases: Vec<(GroupSpec, Vec<u64>)> = vec![
            (GroupSpec::T, vec![4, 6, 12]),
            (GroupSpec::Td, vec![4, 6, 12, 24]),
            (GroupSpec::Th, vec![6, 8, 12, 24]),
            (GroupSpec::O, vec![6, 8, 12, 24]),
            (GroupSpec::Oh, vec![6, 8, 12, 24, 48]),
            (GroupSpec::I, vec![12, 20, 30, 60]),
            (GroupSpec::Ih, vec![12, 20, 30, 60, 120]),
            (GroupSpec::CyclicSphere(4), vec![1, 4]),
            (GroupSpec::DihedralSphere(4), vec![2, 4, 8]),
            (GroupSpec::CyclicDisk(5), vec![5]),
            (GroupSpec::DihedralDisk(5), vec![5, 10]),
        ];
        for (spec, expect) in cases {
            let g = build_group(spec);
            let got: Vec<u64> = orbit_size_generators(&g).into_iter().collect();
            assert_eq!(got, expect, "{spec:?}");
        }
    }

    #[test]
    fn generator_set_invariant_under_conjugation() {
        let r = rot_axis(Vector3::new(0.3, -1.1, 0.7), 0.83);
        for spec in [GroupSpec::T, GroupSpec::Th, GroupSpec::O, GroupSpec::I] {
            let g = build_group(spec);
            let h = g.conjugated(&r);
            assert_eq!(orbit_size_generators(&g), orbit_size_generators(&h), "{spec:?}");
        }
    }

    #[test]
    fn full_group_orbit_sizes_persist_or_double() {
        for (rot, full) in [
            (GroupSpec::T, GroupSpec::Th),
            (GroupSpec::O, GroupSpec::Oh),
            (GroupSpec::I, GroupSpec::Ih),
        ] {
            let g = build_group(rot);
            let gf = build_group(full);
            let sizes = orbit_size_generators(&g);
            let full_sizes = orbit_size_generators(&gf);
            for &s in &sizes {
                assert!(
                    full_sizes.contains(&s) || full_sizes.contains(&(2 * s)),
                    "{rot:?} size {s} neither persists nor doubles"
                );
            }
            // generic orbit sizes equal the group orders
            assert!(sizes.contains(&(g.order() as u64)));
            assert!(full_sizes.contains(&(gf.order() as u64)));
        }
    }

    #[test]
    fn long_products_stay_orthogonal() {
        let g = build_group(GroupSpec::Ih);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut m: Matrix3<f64> = Matrix3::identity();
        for _ in 0..100 {
            let k = rng.random_range(0..g.order());
            m *= g.elements[k].matrix;
        }
        let defect: f64 = (m.transpose() * m - Matrix3::identity()).abs().max();
        assert!(defect <= 1e-9, "orthogonality drifted to {defect:.3e}");
    }

    #[test]
    fn ambiguous_dedup_is_detected() {
        // Z_n with a point very close to the pole: images are separated by
        // ~theta, inside the dead band for a coarse tolerance.
        let g = build_group(GroupSpec::CyclicSphere(4));
        let p = Vector3::new(1e-4, 0.0, 1.0).normalize();
        let res = orbit(&g, &p, 1e-3);
        assert!(matches!(res, Err(Error::AmbiguousDedup { .. })));
    }

    #[test]
    fn orbit_semigroups_match_documented_generators() {
        let s = orbit_semigroup(&build_group(GroupSpec::I));
        assert!(s.contains(42));
        assert!(!s.contains(7));
        let s = orbit_semigroup(&build_group(GroupSpec::T));
        assert!(!s.contains(7));
        assert!(s.contains(10));
    }
}
