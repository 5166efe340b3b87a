//! Polynomial machinery for holomorphic maps `S² → CP¹`: Wronskians,
//! ramification, the nullity computation through the kernel of the
//! ramification differential, and the admissible `(m, d)` search for
//! equivariant harmonic maps.
//!
//! Wronskians and kernel ranks are computed in exact Gaussian-rational
//! arithmetic whenever the inputs are rational; a floating SVD path with
//! documented thresholds covers randomized inputs.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::symmetry::{orbit_semigroup_cached, GroupSpec};

type CBig = num_complex::Complex<BigRational>;

/// Dense complex polynomial, coefficients ascending in degree. The exact
/// Gaussian-rational coefficients are kept alongside the float view when
/// the polynomial was built from rational data.
#[derive(Debug, Clone)]
pub struct ComplexPolynomial {
    pub coeffs: Vec<Complex64>,
    exact: Option<Vec<CBig>>,
}

fn cbig(re: i64, im: i64) -> CBig {
    CBig::new(
        BigRational::from_integer(BigInt::from(re)),
        BigRational::from_integer(BigInt::from(im)),
    )
}

fn cbig_to_f64(c: &CBig) -> Complex64 {
    let f = |r: &BigRational| {
        let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
        let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
        n / d
    };
    Complex64::new(f(&c.re), f(&c.im))
}

impl ComplexPolynomial {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = Self { coeffs, exact: None };
        p.trim();
        p
    }

    /// Build from Gaussian-integer coefficients `(re, im)`, ascending.
    pub fn from_gaussian_integers(coeffs: &[(i64, i64)]) -> Self {
        let exact: Vec<CBig> = coeffs.iter().map(|&(re, im)| cbig(re, im)).collect();
        let coeffs = exact.iter().map(cbig_to_f64).collect();
        let mut p = Self { coeffs, exact: Some(exact) };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![], exact: Some(vec![]) }
    }

    /// Monomial `c·z^k`.
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.norm() == 0.0) {
            self.coeffs.pop();
        }
        if let Some(e) = &mut self.exact {
            while matches!(e.last(), Some(c) if c.is_zero()) {
                e.pop();
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports −1.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn has_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn exact_coeffs(&self) -> Option<&[CBig]> {
        self.exact.as_deref()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * k as f64)
            .collect();
        let exact = self.exact.as_ref().map(|e| exact_derivative(e));
        let mut p = Self { coeffs, exact };
        p.trim();
        p
    }

    /// Reversal at formal degree `d`: `P(w) = w^d·p(1/w)`.
    pub fn reversed(&self, d: usize) -> Self {
        assert!(self.degree() <= d as i64);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[d - k] = *c;
        }
        Self::new(coeffs)
    }

    /// Roots by Durand–Kerner iteration; plenty for the small degrees used
    /// by the ramification checks.
    pub fn roots(&self) -> Vec<Complex64> {
        if self.degree() <= 0 {
            return vec![];
        }
        durand_kerner(&self.coeffs)
    }
}

fn durand_kerner(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(1.2, 0.7 + 2.1 * k as f64))
        .collect();
    for _ in 0..400 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    roots
}

/// `𝓡(p, q) = p′q − pq′`; bilinear and antisymmetric,
/// `deg ≤ deg p + deg q − 1`. Exact when both inputs carry exact
/// coefficients.
pub fn wronskian(p: &ComplexPolynomial, q: &ComplexPolynomial) -> ComplexPolynomial {
    let a = mul(&p.derivative(), q);
    let b = mul(p, &q.derivative());
    sub(&a, &b)
}

fn mul(a: &ComplexPolynomial, b: &ComplexPolynomial) -> ComplexPolynomial {
    if a.is_zero() || b.is_zero() {
        return ComplexPolynomial::zero();
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        for (j, y) in b.coeffs.iter().enumerate() {
            coeffs[i + j] += x * y;
        }
    }
    let exact = match (&a.exact, &b.exact) {
        (Some(ea), Some(eb)) => Some(exact_poly_mul(ea, eb)),
        _ => None,
    };
    let mut p = ComplexPolynomial { coeffs, exact };
    p.trim();
    p
}

fn sub(a: &ComplexPolynomial, b: &ComplexPolynomial) -> ComplexPolynomial {
    let n = a.coeffs.len().max(b.coeffs.len());
    let get = |v: &[Complex64], i: usize| v.get(i).copied().unwrap_or(Complex64::new(0.0, 0.0));
    let coeffs: Vec<Complex64> = (0..n).map(|i| get(&a.coeffs, i) - get(&b.coeffs, i)).collect();
    let exact = match (&a.exact, &b.exact) {
        (Some(ea), Some(eb)) => {
            let m = ea.len().max(eb.len());
            let gete = |v: &[CBig], i: usize| v.get(i).cloned().unwrap_or_else(CBig::zero);
            Some((0..m).map(|i| gete(ea, i) - gete(eb, i)).collect())
        }
        _ => None,
    };
    let mut p = ComplexPolynomial { coeffs, exact };
    p.trim();
    p
}

/// `|resultant|` of the monic normalizations of `p` and `q` at their
/// actual degrees, via the Sylvester determinant; the threshold test for
/// common roots.
pub fn resultant_monic(p: &ComplexPolynomial, q: &ComplexPolynomial) -> f64 {
    let dp = p.degree();
    let dq = q.degree();
    assert!(dp >= 0 && dq >= 0, "resultant of the zero polynomial");
    if dp == 0 || dq == 0 {
        return 1.0; // a nonzero constant shares no root with anything
    }
    let pm: Vec<Complex64> = p.coeffs.iter().map(|c| c / p.coeffs[dp as usize]).collect();
    let qm: Vec<Complex64> = q.coeffs.iter().map(|c| c / q.coeffs[dq as usize]).collect();
    let n = (dp + dq) as usize;
    let mut s = DMatrix::<Complex64>::zeros(n, n);
    for row in 0..dq as usize {
        for (k, c) in pm.iter().enumerate() {
            s[(row, row + (dp as usize - k))] = *c;
        }
    }
    for row in 0..dp as usize {
        for (k, c) in qm.iter().enumerate() {
            s[(dq as usize + row, row + (dq as usize - k))] = *c;
        }
    }
    s.lu().determinant().norm()
}

/// A holomorphic map `[p : q]` of degree `d = max(deg p, deg q)`;
/// construction fails when the polynomials share a root.
#[derive(Debug, Clone)]
pub struct RationalMap {
    pub p: ComplexPolynomial,
    pub q: ComplexPolynomial,
}

impl RationalMap {
    pub fn new(p: ComplexPolynomial, q: ComplexPolynomial) -> Result<Self> {
        assert!(!p.is_zero() && !q.is_zero(), "both polynomials must be nonzero");
        let d = p.degree().max(q.degree());
        assert!(d >= 1, "a rational map needs degree at least 1");
        let res = resultant_monic(&p, &q);
        if res <= 1e-10 {
            return Err(Error::CommonRoot { resultant: res });
        }
        Ok(Self { p, q })
    }

    pub fn degree(&self) -> usize {
        self.p.degree().max(self.q.degree()) as usize
    }

    pub fn has_exact(&self) -> bool {
        self.p.has_exact() && self.q.has_exact()
    }

    /// `[z⁴ + 1 : √2 z²]`, the degree-4 equivariant map of the octahedral
    /// family; the √2 keeps the two invariant lines unitary and does not
    /// change the kernel datum.
    pub fn octahedral_degree4() -> Self {
        let p = ComplexPolynomial::from_gaussian_integers(&[(1, 0), (0, 0), (0, 0), (0, 0), (1, 0)]);
        let q = ComplexPolynomial::monomial(Complex64::new(2.0f64.sqrt(), 0.0), 2);
        Self::new(p, q).unwrap()
    }

    /// The rational pair `[z⁴ + 1 : z²]` used for exact kernel arithmetic.
    pub fn octahedral_degree4_rational() -> Self {
        let p = ComplexPolynomial::from_gaussian_integers(&[(1, 0), (0, 0), (0, 0), (0, 0), (1, 0)]);
        let q = ComplexPolynomial::from_gaussian_integers(&[(0, 0), (0, 0), (1, 0)]);
        Self::new(p, q).unwrap()
    }

    /// `[z⁷ − 7z² : 7z⁵ + 1]`, the degree-7 icosahedral map.
    pub fn icosahedral_degree7() -> Self {
        let p = ComplexPolynomial::from_gaussian_integers(&[
            (0, 0),
            (0, 0),
            (-7, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (1, 0),
        ]);
        let q = ComplexPolynomial::from_gaussian_integers(&[
            (1, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (0, 0),
            (7, 0),
        ]);
        Self::new(p, q).unwrap()
    }

    /// The identity `[z : 1]`.
    pub fn identity() -> Self {
        let p = ComplexPolynomial::from_gaussian_integers(&[(0, 0), (1, 0)]);
        let q = ComplexPolynomial::from_gaussian_integers(&[(1, 0)]);
        Self::new(p, q).unwrap()
    }

    /// `[z^d : 1]`.
    pub fn power(d: usize) -> Self {
        let mut coeffs = vec![(0i64, 0i64); d + 1];
        coeffs[d] = (1, 0);
        let p = ComplexPolynomial::from_gaussian_integers(&coeffs);
        let q = ComplexPolynomial::from_gaussian_integers(&[(1, 0)]);
        Self::new(p, q).unwrap()
    }
}

/// Kernel data of the ramification differential and the resulting nullity
/// `nul Φ = 3 + 2·dim ker`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelReport {
    pub kernel_dim: usize,
    pub nullity: usize,
}

/// Exact Gaussian elimination rank over the Gaussian rationals.
fn rank_exact(mut m: Vec<Vec<CBig>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let pivot = (rank..rows).find(|&r| !m[r][col].is_zero());
        let Some(pr) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, pr);
        let pv = m[rank][col].clone();
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pv;
            for c in col..cols {
                let s = &m[rank][c] * &factor;
                m[r][c] = &m[r][c] - &s;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Exact nullspace basis of a small exact matrix (rows = equations).
fn nullspace_exact(m: &[Vec<CBig>], cols: usize) -> Vec<Vec<CBig>> {
    let mut a: Vec<Vec<CBig>> = m.to_vec();
    let rows = a.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| !a[r][col].is_zero());
        let Some(pr) = pivot else { continue };
        a.swap(rank, pr);
        let pv = a[rank][col].clone();
        for c in 0..cols {
            a[rank][c] = &a[rank][c] / &pv;
        }
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..cols {
                    let s = &a[rank][c] * &f;
                    a[r][c] = &a[r][c] - &s;
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    (0..cols)
        .filter(|c| !pivot_cols.contains(c))
        .map(|fc| {
            let mut v = vec![CBig::zero(); cols];
            v[fc] = CBig::one();
            for &(pr, pc) in &pivots {
                v[pc] = -a[pr][fc].clone();
            }
            v
        })
        .collect()
}

fn exact_poly_mul(a: &[CBig], b: &[CBig]) -> Vec<CBig> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![CBig::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn exact_derivative(a: &[CBig]) -> Vec<CBig> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| {
            c * CBig::new(BigRational::from_integer(BigInt::from(k)), BigRational::zero())
        })
        .collect()
}

pub(crate) fn exact_wronskian(p: &[CBig], q: &[CBig]) -> Vec<CBig> {
    let a = exact_poly_mul(&exact_derivative(p), q);
    let b = exact_poly_mul(p, &exact_derivative(q));
    let n = a.len().max(b.len());
    let get = |v: &[CBig], i: usize| v.get(i).cloned().unwrap_or_else(CBig::zero);
    (0..n).map(|i| get(&a, i) - get(&b, i)).collect()
}

fn pad_exact(v: &[CBig], len: usize) -> Vec<CBig> {
    let mut out = v.to_vec();
    out.resize(len, CBig::zero());
    out
}

/// Kernel of the differential of `[p∧q] ↦ [𝓡(p,q)]` at the map, in a
/// chart transverse to `span{p, q}`.
///
/// The chart is the orthogonal complement of `span{p, q}` inside the
/// degree-`≤ d` polynomials; the differential sends `(δp, δq)` to
/// `𝓡(p, δq) − 𝓡(q, δp)` modulo the line through `𝓡(p, q)`. The kernel
/// dimension does not depend on the chart.
pub fn dpsi_kernel(map: &RationalMap) -> Result<KernelReport> {
    if map.has_exact() {
        Ok(dpsi_kernel_exact(map))
    } else {
        dpsi_kernel_float(map, None)
    }
}

fn dpsi_kernel_exact(map: &RationalMap) -> KernelReport {
    let d = map.degree();
    let p = pad_exact(map.p.exact_coeffs().unwrap(), d + 1);
    let q = pad_exact(map.q.exact_coeffs().unwrap(), d + 1);

    let conj_rows = vec![
        p.iter().map(|c| c.conj()).collect::<Vec<_>>(),
        q.iter().map(|c| c.conj()).collect::<Vec<_>>(),
    ];
    let complement = nullspace_exact(&conj_rows, d + 1);
    assert_eq!(complement.len(), d - 1);

    let rdim = 2 * d - 1;
    let rpq = pad_exact(&exact_wronskian(&p, &q), rdim);
    let mut cols: Vec<Vec<CBig>> = Vec::new();
    for v in &complement {
        // (δp, 0) ↦ −𝓡(q, δp)
        cols.push(
            pad_exact(&exact_wronskian(&q, v), rdim)
                .into_iter()
                .map(|c| -c)
                .collect(),
        );
    }
    for v in &complement {
        // (0, δq) ↦ 𝓡(p, δq)
        cols.push(pad_exact(&exact_wronskian(&p, v), rdim));
    }

    let mut rows_mat: Vec<Vec<CBig>> = Vec::new();
    for r in 0..rdim {
        let mut row: Vec<CBig> = cols.iter().map(|c| c[r].clone()).collect();
        row.push(rpq[r].clone());
        rows_mat.push(row);
    }
    let rank_aug = rank_exact(rows_mat);
    // rank of the quotient map = rank([cols | R]) − rank([R]) = rank_aug − 1
    let kernel_dim = 2 * (d - 1) - (rank_aug - 1);
    KernelReport { kernel_dim, nullity: 3 + 2 * kernel_dim }
}

/// Floating path with singular-value thresholding at 1e−9 relative and an
/// ambiguity band (1e−11, 1e−7); `chart_seed` replaces the orthogonal
/// complement by a randomized unitary mix of it.
pub fn dpsi_kernel_float(map: &RationalMap, chart_seed: Option<u64>) -> Result<KernelReport> {
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;

    let d = map.degree();
    let pad = |p: &ComplexPolynomial| {
        let mut v = p.coeffs.clone();
        v.resize(d + 1, Complex64::new(0.0, 0.0));
        v
    };
    let p = pad(&map.p);
    let q = pad(&map.q);

    // orthogonal complement of span{p, q} by Gram–Schmidt completion
    let dot = |a: &[Complex64], b: &[Complex64]| -> Complex64 {
        a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
    };
    let norm = |a: &[Complex64]| dot(a, a).re.sqrt();
    let mut ortho: Vec<Vec<Complex64>> = Vec::new();
    let push_orthogonalized = |v: &[Complex64], ortho: &mut Vec<Vec<Complex64>>| -> bool {
        let mut w = v.to_vec();
        for _ in 0..2 {
            for u in ortho.iter() {
                let c = dot(u, &w);
                for (wi, ui) in w.iter_mut().zip(u) {
                    *wi -= c * ui;
                }
            }
        }
        let n = norm(&w);
        if n > 1e-10 {
            for wi in w.iter_mut() {
                *wi /= n;
            }
            ortho.push(w);
            true
        } else {
            false
        }
    };
    assert!(push_orthogonalized(&p, &mut ortho));
    assert!(push_orthogonalized(&q, &mut ortho));
    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    for i in 0..d + 1 {
        let mut e = vec![Complex64::new(0.0, 0.0); d + 1];
        e[i] = Complex64::new(1.0, 0.0);
        if push_orthogonalized(&e, &mut ortho) {
            basis.push(ortho.last().unwrap().clone());
        }
        if basis.len() == d - 1 {
            break;
        }
    }
    assert_eq!(basis.len(), d - 1);
    if let Some(seed) = chart_seed {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = basis.len();
        for _ in 0..4 * n {
            let i = rng.random_range(0..n);
            let mut j = rng.random_range(0..n);
            if i == j {
                j = (j + 1) % n;
            }
            let ang: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let ph: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let (c, s) = (ang.cos(), ang.sin());
            let e = Complex64::from_polar(1.0, ph);
            for k in 0..d + 1 {
                let a = basis[i][k];
                let b = basis[j][k];
                basis[i][k] = c * a + s * e * b;
                basis[j][k] = -s * e.conj() * a + c * b;
            }
        }
    }

    let polyv = |v: &[Complex64]| ComplexPolynomial::new(v.to_vec());
    let rdim = 2 * d - 1;
    let padw = |w: &ComplexPolynomial| {
        let mut v = w.coeffs.clone();
        v.resize(rdim, Complex64::new(0.0, 0.0));
        v
    };
    let rpq = padw(&wronskian(&map.p, &map.q));
    let mut cols: Vec<Vec<Complex64>> = Vec::new();
    for v in &basis {
        let w = wronskian(&map.q, &polyv(v));
        cols.push(padw(&w).into_iter().map(|c| -c).collect());
    }
    for v in &basis {
        cols.push(padw(&wronskian(&map.p, &polyv(v))));
    }
    cols.push(rpq);

    let m = DMatrix::<Complex64>::from_fn(rdim, cols.len(), |r, c| cols[c][r]);
    let svd = m.svd(false, false);
    let smax = svd.singular_values.max();
    let mut rank_aug = 0;
    for s in svd.singular_values.iter() {
        let rel = s / smax;
        if rel >= 1e-7 {
            rank_aug += 1;
        } else if rel > 1e-11 {
            return Err(Error::RankAmbiguous { sigma: rel, lo: 1e-11, hi: 1e-7 });
        }
    }
    let kernel_dim = 2 * (d - 1) - (rank_aug - 1);
    Ok(KernelReport { kernel_dim, nullity: 3 + 2 * kernel_dim })
}

/// Greatest odd integer `≤ √(8d+1)`.
fn odd_floor_sqrt(d: u64) -> u64 {
    let r = (8 * d + 1).isqrt();
    if r % 2 == 1 {
        r
    } else {
        r - 1
    }
}

/// Index lower bound `2d + 2 − ⌊√(8d+1)⌋_odd` for degree-`d` harmonic
/// sphere maps, with the odd floor read as "greatest odd integer ≤ x".
pub fn index_lower_bound_harmonic(d: u64) -> u64 {
    assert!(d >= 1);
    2 * d + 2 - odd_floor_sqrt(d)
}

/// Degree constraint for an equivariant map: `2d ∈ m(m+1) + N_Γ`.
pub fn equivariant_degree_check(semigroup: &NumericalSemigroup, m: u64, d: u64) -> bool {
    assert!(m >= 1 && d >= 1);
    let base = m * (m + 1);
    2 * d >= base && semigroup.contains(2 * d - base)
}

/// Index constraint used by the admissibility search. For minimal-degree
/// pairs `d = m(m+1)/2` the only equivariant candidate is the
/// spherical-harmonic map, whose index is exactly `m²`; for other degrees
/// the generic bound applies with the odd floor read strictly at exact odd
/// integers (greatest odd < x), the reading that excludes degree-3 maps at
/// spectral level 3.
fn admissible_index_bound(m: u64, d: u64) -> u64 {
    if d == m * (m + 1) / 2 {
        return m * m;
    }
    let r = (8 * d + 1).isqrt();
    let odd = if r % 2 == 1 {
        if r * r == 8 * d + 1 {
            r - 2
        } else {
            r
        }
    } else {
        r - 1
    };
    2 * d + 2 - odd
}

/// All admissible `(m, d)` pairs at spectral level `k`, sorted by `d` then
/// `m`: `m ≥ 1`, `d ≥ m(m+1)/2`, the degree constraint on the group's
/// orbit semigroup, and the index constraint at level `k`.
pub fn admissible_pairs(spec: GroupSpec, k: u64) -> Vec<(u64, u64)> {
    assert!(spec.is_sphere());
    assert!(k >= 1);
    let semigroup = orbit_semigroup_cached(spec);
    // the generic bound grows like 2d − O(√d), so d is capped well below
    // 2(k + 3); minimal degrees are capped by m² ≤ k
    let d_max = 2 * (k + 3);
    let mut out = Vec::new();
    for d in 1..=d_max {
        let mut m = 1u64;
        while m * (m + 1) / 2 <= d {
            if admissible_index_bound(m, d) <= k && equivariant_degree_check(&semigroup, m, d) {
                out.push((m, d));
            }
            m += 1;
        }
    }
    out.sort_by_key(|&(m, d)| (d, m));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gip(coeffs: &[(i64, i64)]) -> ComplexPolynomial {
        ComplexPolynomial::from_gaussian_integers(coeffs)
    }

    #[test]
    fn wronskian_of_octahedral_pair_is_exact() {
        // 2(z⁵ − z)
        let p = gip(&[(1, 0), (0, 0), (0, 0), (0, 0), (1, 0)]);
        let q = gip(&[(0, 0), (0, 0), (1, 0)]);
        let w = wronskian(&p, &q);
        let expect: Vec<CBig> = vec![
            cbig(0, 0),
            cbig(-2, 0),
            cbig(0, 0),
            cbig(0, 0),
            cbig(0, 0),
            cbig(2, 0),
        ];
        assert_eq!(w.exact_coeffs().unwrap(), &expect[..]);
    }

    #[test]
    fn wronskian_of_icosahedral_pair_is_exact() {
        // 14(z¹¹ + 11z⁶ − z)
        let m = RationalMap::icosahedral_degree7();
        let w = wronskian(&m.p, &m.q);
        let mut expect = vec![cbig(0, 0); 12];
        expect[1] = cbig(-14, 0);
        expect[6] = cbig(154, 0);
        expect[11] = cbig(14, 0);
        assert_eq!(w.exact_coeffs().unwrap(), &expect[..]);
    }

    #[test]
    fn wronskian_is_antisymmetric_and_bilinear() {
        let p = gip(&[(3, 1), (0, -2), (5, 0), (1, 1)]);
        let q = gip(&[(-1, 2), (4, 0), (0, 3)]);
        let r = gip(&[(2, 0), (1, 1)]);
        let wpp = wronskian(&p, &p);
        assert!(wpp.is_zero());
        let wpq = wronskian(&p, &q);
        let wqp = wronskian(&q, &p);
        for (a, b) in wpq
            .exact_coeffs()
            .unwrap()
            .iter()
            .zip(wqp.exact_coeffs().unwrap())
        {
            assert!((a.clone() + b.clone()).is_zero());
        }
        // additivity in the first slot, exact
        let pr = sub(&p, &negate(&r));
        let lhs = wronskian(&pr, &q);
        let rhs = sub(&wronskian(&p, &q), &negate(&wronskian(&r, &q)));
        assert_eq!(lhs.exact_coeffs().unwrap(), rhs.exact_coeffs().unwrap());
    }

    fn negate(p: &ComplexPolynomial) -> ComplexPolynomial {
        sub(&ComplexPolynomial::zero(), p)
    }

    #[test]
    fn common_root_is_rejected() {
        let p = gip(&[(-1, 0), (1, 0)]); // z − 1
        let q = gip(&[(-1, 0), (0, 0), (1, 0)]); // z² − 1
        assert!(matches!(RationalMap::new(p, q), Err(Error::CommonRoot { .. })));
    }

    #[test]
    fn kernel_reports_for_named_maps() {
        for (map, name) in [
            (RationalMap::octahedral_degree4_rational(), "deg4"),
            (RationalMap::icosahedral_degree7(), "deg7"),
            (RationalMap::identity(), "identity"),
        ] {
            let rep = dpsi_kernel(&map).unwrap();
            assert_eq!(rep.kernel_dim, 0, "{name}");
            assert_eq!(rep.nullity, 3, "{name}");
        }
    }

    #[test]
    fn float_path_matches_exact_path() {
        for map in [
            RationalMap::octahedral_degree4_rational(),
            RationalMap::icosahedral_degree7(),
            RationalMap::power(3),
        ] {
            let exact = dpsi_kernel(&map).unwrap();
            let float = dpsi_kernel_float(&map, None).unwrap();
            assert_eq!(exact, float);
        }
        let f = dpsi_kernel_float(&RationalMap::octahedral_degree4(), None).unwrap();
        assert_eq!(f.nullity, 3);
    }

    #[test]
    fn kernel_dim_is_chart_independent() {
        for seed in [1u64, 7, 42, 1234] {
            let rep =
                dpsi_kernel_float(&RationalMap::octahedral_degree4_rational(), Some(seed)).unwrap();
            assert_eq!(rep.kernel_dim, 0);
            let rep = dpsi_kernel_float(&RationalMap::icosahedral_degree7(), Some(seed)).unwrap();
            assert_eq!(rep.kernel_dim, 0);
        }
    }

    #[test]
    fn index_lower_bound_values() {
        assert_eq!(index_lower_bound_harmonic(1), 1);
        assert_eq!(index_lower_bound_harmonic(3), 3);
        assert_eq!(index_lower_bound_harmonic(4), 5);
        assert_eq!(index_lower_bound_harmonic(6), 7);
        assert_eq!(index_lower_bound_harmonic(7), 9);
        assert_eq!(index_lower_bound_harmonic(8), 11);
    }

    #[test]
    fn degree_check_examples() {
        let n_i = NumericalSemigroup::new([12, 20, 30]);
        let n_t = NumericalSemigroup::new([4, 6]);
        assert!(equivariant_degree_check(&n_i, 1, 7)); // 12 ∈ N_I
        assert!(!equivariant_degree_check(&n_t, 1, 2)); // 2 ∉ ⟨4,6⟩
        assert!(equivariant_degree_check(&n_t, 2, 3)); // 0 ∈ N
        assert!(equivariant_degree_check(&n_i, 3, 6));
    }

    #[test]
    fn admissible_pair_lists() {
        assert_eq!(admissible_pairs(GroupSpec::O, 5), vec![(1, 1), (2, 3), (1, 4)]);
        assert_eq!(admissible_pairs(GroupSpec::I, 3), vec![(1, 1)]);
        assert_eq!(
            admissible_pairs(GroupSpec::I, 10),
            vec![(1, 1), (2, 3), (3, 6), (1, 7)]
        );
        for k in 1..=3 {
            assert_eq!(admissible_pairs(GroupSpec::O, k), vec![(1, 1)], "k={k}");
            assert_eq!(admissible_pairs(GroupSpec::Th, k), vec![(1, 1)], "k={k}");
            assert_eq!(admissible_pairs(GroupSpec::T, k), vec![(1, 1)], "k={k}");
        }
        assert_eq!(admissible_pairs(GroupSpec::O, 4), vec![(1, 1), (2, 3)]);
        for k in 4..=8 {
            assert_eq!(admissible_pairs(GroupSpec::I, k), vec![(1, 1), (2, 3)], "k={k}");
        }
        for k in 9..=11 {
            assert_eq!(
                admissible_pairs(GroupSpec::I, k),
                vec![(1, 1), (2, 3), (3, 6), (1, 7)],
                "k={k}"
            );
        }
    }

    #[test]
    fn admissible_pairs_monotone_in_k() {
        for spec in [GroupSpec::O, GroupSpec::I, GroupSpec::Td] {
            let mut prev: Vec<(u64, u64)> = vec![];
            for k in 1..=20 {
                let cur = admissible_pairs(spec, k);
                for pair in &prev {
                    assert!(cur.contains(pair), "{spec:?} k={k} lost {pair:?}");
                }
                prev = cur;
            }
        }
    }

    #[test]
    fn ramification_degree_sums_to_2d_minus_2() {
        let maps = [
            RationalMap::octahedral_degree4_rational(),
            RationalMap::icosahedral_degree7(),
            RationalMap::power(5),
        ];
        for map in maps {
            let d = map.degree();
            let w = wronskian(&map.p, &map.q);
            let finite = w.degree().max(0) as usize;
            // vanishing order of the reversed-pair Wronskian at 0 is the
            // ramification at infinity
            let pr = map.p.reversed(d);
            let qr = map.q.reversed(d);
            let wr = wronskian(&pr, &qr);
            let at_infinity = wr
                .coeffs
                .iter()
                .position(|c| c.norm() > 1e-9)
                .unwrap_or(wr.coeffs.len());
            assert_eq!(finite + at_infinity, 2 * d - 2, "degree {d}");
            let roots = w.roots();
            assert_eq!(roots.len(), finite);
            for r in roots {
                assert!(w.eval(r).norm() <= 1e-6);
            }
        }
    }
}
