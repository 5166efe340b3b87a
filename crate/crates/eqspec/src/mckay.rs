//! Symmetric-power decompositions for binary polyhedral groups through
//! their McKay graphs, explicit `SU(2)` actions on `S^k C²`,
//! invariant-subspace certification, and the multiplicity-freeness test.
//!
//! The decomposition of `S^k C²` follows the tensor recurrence
//! `S^{k}C² ⊕ S^{k−2}C² = S^{k−1}C² ⊗ C²`, which on multiplicity vectors
//! reads `v_{k+1} = A·v_k − v_{k−1}` with `A` the graph adjacency; the
//! character identity ties the recurrence back to actual group elements.

use nalgebra::{DMatrix, Matrix2};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// An affine McKay graph: vertices are irreducible representations with
/// their dimensions; edges encode tensoring with the canonical
/// 2-dimensional representation.
#[derive(Debug, Clone)]
pub struct McKayGraph {
    pub name: &'static str,
    /// `(label, dimension)` per vertex.
    pub vertices: Vec<(&'static str, u32)>,
    pub adjacency: Vec<Vec<bool>>,
    pub trivial_vertex: usize,
    pub canonical_vertex: usize,
}

impl McKayGraph {
    fn build(
        name: &'static str,
        vertices: Vec<(&'static str, u32)>,
        edges: &[(usize, usize)],
        trivial_vertex: usize,
        canonical_vertex: usize,
    ) -> Self {
        let n = vertices.len();
        let mut adjacency = vec![vec![false; n]; n];
        for &(a, b) in edges {
            adjacency[a][b] = true;
            adjacency[b][a] = true;
        }
        let g = Self { name, vertices, adjacency, trivial_vertex, canonical_vertex };
        assert!(g.balanced(), "{name}: affine Dynkin balance violated");
        assert_eq!(g.vertices[canonical_vertex].1, 2);
        assert_eq!(g.vertices[trivial_vertex].1, 1);
        g
    }

    /// Binary tetrahedral group 2T (affine E₆ shape):
    /// a 1—2—3—2′—1′ chain with the canonical 2 below the 3 and the
    /// trivial 1 below that.
    pub fn binary_tetrahedral() -> Self {
        Self::build(
            "2T",
            vec![("1", 1), ("2", 2), ("3", 3), ("2'", 2), ("1'", 1), ("2''", 2), ("1''", 1)],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)],
            6,
            5,
        )
    }

    /// Binary octahedral group 2O (affine E₇ shape):
    /// 1—②—3—4—3′—2′—1′ with a 2″ hanging off the middle 4.
    pub fn binary_octahedral() -> Self {
        Self::build(
            "2O",
            vec![
                ("1", 1),
                ("2", 2),
                ("3", 3),
                ("4", 4),
                ("3'", 3),
                ("2'", 2),
                ("1'", 1),
                ("2''", 2),
            ],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)],
            0,
            1,
        )
    }

    /// Binary icosahedral group 2I (affine E₈ shape):
    /// 2—4—6—5—4′—3—②—1 with a 3′ hanging off the 6.
    pub fn binary_icosahedral() -> Self {
        Self::build(
            "2I",
            vec![
                ("2", 2),
                ("4", 4),
                ("6", 6),
                ("5", 5),
                ("4'", 4),
                ("3", 3),
                ("2c", 2),
                ("1", 1),
                ("3'", 3),
            ],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8)],
            7,
            6,
        )
    }

    /// Affine Dynkin balance: neighbor dimensions sum to twice the own
    /// dimension at every vertex.
    pub fn balanced(&self) -> bool {
        (0..self.vertices.len()).all(|v| {
            let sum: u32 = (0..self.vertices.len())
                .filter(|&u| self.adjacency[v][u])
                .map(|u| self.vertices[u].1)
                .sum();
            sum == 2 * self.vertices[v].1
        })
    }
}

/// Multiplicities of the irreducibles inside `S^k C²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub k: u32,
    pub multiplicities: Vec<i64>,
}

impl Decomposition {
    /// Dimensions of the summands, with multiplicity, ascending.
    pub fn dims(&self, graph: &McKayGraph) -> Vec<u32> {
        let mut out = Vec::new();
        for (v, &m) in self.multiplicities.iter().enumerate() {
            for _ in 0..m {
                out.push(graph.vertices[v].1);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn total_dimension(&self, graph: &McKayGraph) -> i64 {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(v, &m)| m * graph.vertices[v].1 as i64)
            .sum()
    }
}

/// Decompose `S^k C²` by the adjacency recurrence
/// `v_{k+1} = A·v_k − v_{k−1}`, `v_0` = trivial, `v_1` = canonical.
pub fn symmetric_power_decomposition(graph: &McKayGraph, k: u32) -> Result<Decomposition> {
    let n = graph.vertices.len();
    let mut prev = vec![0i64; n];
    prev[graph.trivial_vertex] = 1;
    if k == 0 {
        return Ok(Decomposition { k, multiplicities: prev });
    }
    let mut cur = vec![0i64; n];
    cur[graph.canonical_vertex] = 1;
    for step in 1..k {
        let mut next = vec![0i64; n];
        for v in 0..n {
            let mut acc = -prev[v];
            for u in 0..n {
                if graph.adjacency[v][u] {
                    acc += cur[u];
                }
            }
            if acc < 0 {
                return Err(Error::NegativeMultiplicity {
                    vertex: graph.vertices[v].0.to_string(),
                    k: step + 1,
                    value: acc,
                });
            }
            next[v] = acc;
        }
        prev = cur;
        cur = next;
    }
    let dec = Decomposition { k, multiplicities: cur };
    debug_assert_eq!(dec.total_dimension(graph), k as i64 + 1);
    Ok(dec)
}

/// True when every multiplicity in `S^k C²` is at most 1. Meaningful for
/// the underlying rotation group when `k` is even.
pub fn is_multiplicity_free(graph: &McKayGraph, k: u32) -> Result<bool> {
    assert!(k % 2 == 0, "representations of the rotation group need even k");
    Ok(symmetric_power_decomposition(graph, k)?
        .multiplicities
        .iter()
        .all(|&m| m <= 1))
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Induced action of `M ∈ SU(2)` on `S^k C²` in the orthonormal monomial
/// basis `ê_j = √C(k,j)·v₀^{k−j}v₁^j`. Multiplicative and unitary;
/// `diag(α, ᾱ)` acts diagonally with entries `α^{k−2j}`.
pub fn su2_symmetric_action(m: &Matrix2<Complex64>, k: u32) -> DMatrix<Complex64> {
    let defect = (m.adjoint() * m - Matrix2::identity()).norm();
    assert!(defect <= 1e-12, "matrix is not unitary: defect {defect:.3e}");
    let k = k as usize;
    let n = k + 1;
    // variable substitution v₀ ↦ m₀₀v₀ + m₁₀v₁, v₁ ↦ m₀₁v₀ + m₁₁v₁
    let sub0 = [m[(0, 0)], m[(1, 0)]];
    let sub1 = [m[(0, 1)], m[(1, 1)]];
    let mut out = DMatrix::<Complex64>::zeros(n, n);
    for l in 0..n {
        // expand (sub0)^{k−l} (sub1)^l over v₁-degree
        let mut poly = vec![Complex64::new(0.0, 0.0); n];
        poly[0] = Complex64::new(1.0, 0.0);
        let mut deg = 0usize;
        for (factor, reps) in [(sub0, k - l), (sub1, l)] {
            for _ in 0..reps {
                let mut next = vec![Complex64::new(0.0, 0.0); n];
                for t in 0..=deg {
                    next[t] += poly[t] * factor[0];
                    next[t + 1] += poly[t] * factor[1];
                }
                poly = next;
                deg += 1;
            }
        }
        let cl = binomial(k, l).sqrt();
        for j in 0..n {
            out[(j, l)] = poly[j] * cl / binomial(k, j).sqrt();
        }
    }
    out
}

/// `SU(2)` lifts of the generators of the rotation groups.
pub mod generators {
    use super::*;

    /// 2O: lifts of the 4-fold rotation `z ↦ iz` and the half-turn
    /// `z ↦ (z−1)/(z+1)` (a 4-fold rotation about the y-axis).
    pub fn binary_octahedral() -> Vec<Matrix2<Complex64>> {
        let e = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let g0 = Matrix2::new(e, Complex64::ZERO, Complex64::ZERO, e.conj());
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let g1 = Matrix2::new(
            Complex64::new(s, 0.0),
            Complex64::new(-s, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(s, 0.0),
        );
        vec![g0, g1]
    }

    /// 2T ⊂ 2O: the lifted half-turn `z ↦ −z` and the 3-fold element
    /// (product of the two 4-fold lifts).
    pub fn binary_tetrahedral() -> Vec<Matrix2<Complex64>> {
        let o = binary_octahedral();
        vec![o[0] * o[0], o[0] * o[1]]
    }

    /// 2I: the order-10 lift `diag(ε⁻², ε²)` with `ε = e^{2πi/5}` and the
    /// standard real mixing element.
    pub fn binary_icosahedral() -> Vec<Matrix2<Complex64>> {
        let eps = Complex64::from_polar(1.0, std::f64::consts::TAU / 5.0);
        let g0 = Matrix2::new(
            eps.powi(-2),
            Complex64::ZERO,
            Complex64::ZERO,
            eps.powi(2),
        );
        let d1 = eps - eps.powi(-1);
        let d2 = eps.powi(2) - eps.powi(-2);
        let s5 = 5.0f64.sqrt();
        let g1 = Matrix2::new(-d1 / s5, d2 / s5, d2 / s5, d1 / s5);
        vec![g0, g1]
    }
}

/// Close a set of 2×2 unitaries under multiplication (dedup tolerance
/// 1e−10); used to tie the graphs to actual group elements.
pub fn close_su2(generators: &[Matrix2<Complex64>], max_order: usize) -> Vec<Matrix2<Complex64>> {
    let mut elements: Vec<Matrix2<Complex64>> = vec![Matrix2::identity()];
    let mut frontier = elements.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in generators {
                let p = g * f;
                if !elements.iter().any(|e| (e - p).norm() <= 1e-10) {
                    elements.push(p);
                    next.push(p);
                }
            }
        }
        frontier = next;
        assert!(elements.len() <= max_order, "closure exceeded {max_order}");
    }
    elements
}

/// Character of `S^k C²` at a unitary with eigenphases `e^{±iθ}`:
/// `sin((k+1)θ)/sin(θ)`, evaluated stably as `Σ_j cos((k−2j)θ)`.
pub fn symmetric_power_character(m: &Matrix2<Complex64>, k: u32) -> f64 {
    let tr = (m[(0, 0)] + m[(1, 1)]).re / 2.0;
    let theta = tr.clamp(-1.0, 1.0).acos();
    (0..=k)
        .map(|j| ((k as f64 - 2.0 * j as f64) * theta).cos())
        .sum()
}

/// Result of checking that a subspace is preserved by a set of group
/// actions on `S^k C²`.
#[derive(Debug, Clone)]
pub struct SubspaceReport {
    pub invariant: bool,
    /// Largest projection defect `‖(I − P)·U·basis‖` over the generators.
    pub residual: f64,
}

/// Check that the span of the given degree-`k` polynomials (monomial
/// coefficients, index `j` for `v₀^{k−j}v₁^j`) is invariant under every
/// generator's induced action.
pub fn verify_invariant_subspace(
    generators: &[Matrix2<Complex64>],
    k: u32,
    basis: &[Vec<Complex64>],
) -> SubspaceReport {
    let n = k as usize + 1;
    assert!(!basis.is_empty());
    for b in basis {
        assert_eq!(b.len(), n);
    }
    // convert monomial coefficients to the orthonormal basis
    let mut s = DMatrix::<Complex64>::zeros(n, basis.len());
    for (c, b) in basis.iter().enumerate() {
        for j in 0..n {
            s[(j, c)] = b[j] / binomial(k as usize, j).sqrt();
        }
    }
    // orthonormalize columns (modified Gram–Schmidt, twice)
    let cols = basis.len();
    for pass in 0..2 {
        for c in 0..cols {
            for p in 0..c {
                let mut dot = Complex64::ZERO;
                for j in 0..n {
                    dot += s[(j, p)].conj() * s[(j, c)];
                }
                for j in 0..n {
                    let v = s[(j, p)];
                    s[(j, c)] -= dot * v;
                }
            }
            let norm: f64 = (0..n).map(|j| s[(j, c)].norm_sqr()).sum::<f64>().sqrt();
            assert!(
                norm > 1e-12 || pass > 0,
                "basis vectors are linearly dependent"
            );
            for j in 0..n {
                s[(j, c)] /= Complex64::new(norm, 0.0);
            }
        }
    }

    let mut residual = 0.0f64;
    for g in generators {
        let u = su2_symmetric_action(g, k);
        let w = &u * &s;
        // defect = ‖w − S(Sᴴw)‖
        let proj = &s * (s.adjoint() * &w);
        residual = residual.max((w - proj).norm());
    }
    SubspaceReport { invariant: residual <= 1e-10, residual }
}
