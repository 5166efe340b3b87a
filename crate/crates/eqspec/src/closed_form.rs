//! Closed-form spectral quantities: round spectra of the sphere and the
//! disk, the equivariant maxima over symmetric conformal densities, the
//! maximizing bubble configurations, and the Hersch–Payne–Schiffer
//! sharpness test.
//!
//! All values are exact rational multiples of π, so the golden-table tests
//! are equality tests rather than tolerance tests.

use num_rational::Ratio;

use crate::symmetry::{orbit_semigroup_cached, GroupSpec};

/// A normalized eigenvalue (eigenvalue × total mass) kept symbolically as a
/// rational multiple of π.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct NormalizedEigenvalue {
    /// Exact coefficient `c` in `value = c·π`.
    pub pi_multiple: Ratio<i64>,
}

impl NormalizedEigenvalue {
    pub fn from_pi_multiple(num: i64, den: i64) -> Self {
        Self { pi_multiple: Ratio::new(num, den) }
    }

    pub fn zero() -> Self {
        Self::from_pi_multiple(0, 1)
    }

    pub fn as_f64(&self) -> f64 {
        *self.pi_multiple.numer() as f64 / *self.pi_multiple.denom() as f64
            * std::f64::consts::PI
    }

    /// Symbolic rendering, e.g. `72*pi` or `(3/2)*pi`.
    pub fn symbolic(&self) -> String {
        let r = self.pi_multiple;
        if r.is_integer() {
            format!("{}*pi", r.numer())
        } else {
            format!("({}/{})*pi", r.numer(), r.denom())
        }
    }
}

impl std::ops::Add for NormalizedEigenvalue {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { pi_multiple: self.pi_multiple + rhs.pi_multiple }
    }
}

/// `λ̄_s(g_{S²}) = 4π·m(m+1)` with `m = ⌊√s⌋`: the round sphere has
/// eigenvalue `m(m+1)` with multiplicity `2m+1`, and unit area `4π`.
pub fn sphere_bar_lambda(s: u64) -> NormalizedEigenvalue {
    let m = s.isqrt() as i64;
    NormalizedEigenvalue::from_pi_multiple(4 * m * (m + 1), 1)
}

/// `σ̄_k(g_{R²}) = 2π·⌊(k+1)/2⌋`: the Steklov spectrum of the unit disk is
/// `{0, 1, 1, 2, 2, …}` with perimeter `2π`.
pub fn disk_bar_sigma(k: u64) -> NormalizedEigenvalue {
    NormalizedEigenvalue::from_pi_multiple(2 * ((k as i64 + 1) / 2), 1)
}

/// `Λ_k(S²; Γ) = 8πk′ + λ̄_s(g_{S²})` where `k = k′ + s` and
/// `k′ = max(N_Γ ∩ [0, k])` over the orbit semigroup of the group.
///
/// Returns `(value, k′, s)`. The same formula covers the cyclic and
/// dihedral families: their orbit semigroups contain 1 or 2, so the value
/// collapses to `8πk`.
pub fn lambda_equivariant_sphere(spec: GroupSpec, k: u64) -> (NormalizedEigenvalue, u64, u64) {
    assert!(k >= 1);
    assert!(spec.is_sphere(), "Λ_k is a sphere quantity");
    let semigroup = orbit_semigroup_cached(spec);
    let kp = semigroup.max_element_leq(k);
    let s = k - kp;
    let value = NormalizedEigenvalue::from_pi_multiple(8 * kp as i64, 1) + sphere_bar_lambda(s);
    (value, kp, s)
}

/// `𝔖_k(D²; Γ) = 2π(mn + ⌊(r+1)/2⌋)` with `k = mn + r`, `0 ≤ r < n`.
/// The same formula holds for the cyclic and dihedral disk groups.
pub fn steklov_equivariant_disk(n: u64, k: u64) -> NormalizedEigenvalue {
    assert!(n >= 1 && k >= 1);
    let m = k / n;
    let r = k % n;
    NormalizedEigenvalue::from_pi_multiple(2 * (m * n) as i64, 1) + disk_bar_sigma(r)
}

/// One maximizing bubble configuration: `b` spheres (or disks) of unit
/// measure plus one carrying the residual spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BubbleConfiguration {
    /// Semigroup part of the split `k = b + s`.
    pub b: u64,
    /// Remainder index.
    pub s: u64,
    pub value: NormalizedEigenvalue,
    /// `b + 1` pieces when `s ≠ 0`, else `b`.
    pub pieces: u64,
}

/// All `b ∈ N_Γ ∩ [0, k]` attaining the maximum of `8πb + λ̄_{k−b}`.
pub fn sphere_maximizing_configurations(spec: GroupSpec, k: u64) -> Vec<BubbleConfiguration> {
    assert!(k >= 1);
    let semigroup = orbit_semigroup_cached(spec);
    let candidates: Vec<u64> = semigroup.members_leq(k);
    let value_of = |b: u64| {
        NormalizedEigenvalue::from_pi_multiple(8 * b as i64, 1) + sphere_bar_lambda(k - b)
    };
    let best = candidates.iter().map(|&b| value_of(b)).max().unwrap();
    candidates
        .into_iter()
        .filter(|&b| value_of(b) == best)
        .map(|b| BubbleConfiguration {
            b,
            s: k - b,
            value: best,
            pieces: b + u64::from(k - b != 0),
        })
        .collect()
}

/// All `b ∈ nN ∩ [0, k]` attaining the maximum of `2πb + σ̄_{k−b}`.
pub fn disk_maximizing_configurations(n: u64, k: u64) -> Vec<BubbleConfiguration> {
    assert!(n >= 1 && k >= 1);
    let value_of = |b: u64| {
        NormalizedEigenvalue::from_pi_multiple(2 * b as i64, 1) + disk_bar_sigma(k - b)
    };
    let candidates: Vec<u64> = (0..=k).filter(|b| b % n == 0).collect();
    let best = candidates.iter().map(|&b| value_of(b)).max().unwrap();
    candidates
        .into_iter()
        .filter(|&b| value_of(b) == best)
        .map(|b| BubbleConfiguration {
            b,
            s: k - b,
            value: best,
            pieces: b + u64::from(k - b != 0),
        })
        .collect()
}

/// Whether the Hersch–Payne–Schiffer bound `𝔖_k ≤ 2πk` is attained under
/// `n`-fold symmetry; equivalent to `k mod n ∈ {0, 1}`.
pub fn hps_sharp(n: u64, k: u64) -> bool {
    steklov_equivariant_disk(n, k) == NormalizedEigenvalue::from_pi_multiple(2 * k as i64, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_sphere_values() {
        assert_eq!(sphere_bar_lambda(0), NormalizedEigenvalue::zero());
        assert_eq!(sphere_bar_lambda(1), NormalizedEigenvalue::from_pi_multiple(8, 1));
        assert_eq!(sphere_bar_lambda(4), NormalizedEigenvalue::from_pi_multiple(24, 1));
        // eigenvalue bands: indices m²..(m+1)²−1 share 4π·m(m+1)
        for m in 1u64..6 {
            for s in m * m..(m + 1) * (m + 1) {
                assert_eq!(
                    sphere_bar_lambda(s),
                    NormalizedEigenvalue::from_pi_multiple(4 * (m * (m + 1)) as i64, 1)
                );
            }
        }
    }

    #[test]
    fn round_disk_values() {
        assert_eq!(disk_bar_sigma(0), NormalizedEigenvalue::zero());
        assert_eq!(disk_bar_sigma(1), NormalizedEigenvalue::from_pi_multiple(2, 1));
        assert_eq!(disk_bar_sigma(6), NormalizedEigenvalue::from_pi_multiple(6, 1));
    }

    #[test]
    fn lambda_examples() {
        let (v, kp, _s) = lambda_equivariant_sphere(GroupSpec::O, 10);
        assert_eq!(v, NormalizedEigenvalue::from_pi_multiple(72, 1));
        assert_eq!(kp, 8);

        let (v, kp, s) = lambda_equivariant_sphere(GroupSpec::T, 2);
        assert_eq!(v, NormalizedEigenvalue::from_pi_multiple(8, 1));
        assert_eq!((kp, s), (0, 2));

        let (v, kp, s) = lambda_equivariant_sphere(GroupSpec::I, 13);
        assert_eq!(v, NormalizedEigenvalue::from_pi_multiple(104, 1));
        assert_eq!((kp, s), (12, 1));
    }

    #[test]
    fn cyclic_and_dihedral_collapse_to_8_pi_k() {
        for n in 1..6 {
            for k in 1..25 {
                let (v, _, _) = lambda_equivariant_sphere(GroupSpec::CyclicSphere(n), k);
                assert_eq!(v, NormalizedEigenvalue::from_pi_multiple(8 * k as i64, 1));
                let (v, _, _) = lambda_equivariant_sphere(GroupSpec::DihedralSphere(n), k);
                assert_eq!(v, NormalizedEigenvalue::from_pi_multiple(8 * k as i64, 1));
            }
        }
    }

    #[test]
    fn steklov_examples() {
        assert_eq!(
            steklov_equivariant_disk(3, 5),
            NormalizedEigenvalue::from_pi_multiple(8, 1)
        );
        for k in 1..40 {
            assert_eq!(
                steklov_equivariant_disk(1, k),
                NormalizedEigenvalue::from_pi_multiple(2 * k as i64, 1)
            );
        }
        // disk realizes the supremum iff k ≤ n−1
        for n in 2..10u64 {
            for k in 1..(3 * n) {
                let eq = steklov_equivariant_disk(n, k) == disk_bar_sigma(k);
                assert_eq!(eq, k <= n - 1, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn steklov_matches_brute_force_semigroup_maximum() {
        for n in 1..=12u64 {
            for k in 1..=200u64 {
                let direct = steklov_equivariant_disk(n, k);
                let brute = (0..=k)
                    .filter(|b| b % n == 0)
                    .map(|b| {
                        NormalizedEigenvalue::from_pi_multiple(2 * b as i64, 1)
                            + disk_bar_sigma(k - b)
                    })
                    .max()
                    .unwrap();
                assert_eq!(direct, brute, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn maximizing_configurations_examples() {
        let cfgs = sphere_maximizing_configurations(GroupSpec::O, 10);
        let bs: Vec<u64> = cfgs.iter().map(|c| c.b).collect();
        assert_eq!(bs, vec![6, 8]);
        assert!(cfgs
            .iter()
            .all(|c| c.value == NormalizedEigenvalue::from_pi_multiple(72, 1)));
        let pieces: Vec<u64> = cfgs.iter().map(|c| c.pieces).collect();
        assert_eq!(pieces, vec![7, 9]);

        let cfgs = sphere_maximizing_configurations(GroupSpec::T, 2);
        assert_eq!(cfgs.len(), 1);
        assert_eq!((cfgs[0].b, cfgs[0].s), (0, 2));

        let cfgs = disk_maximizing_configurations(3, 5);
        assert_eq!(cfgs.len(), 1);
        assert_eq!((cfgs[0].b, cfgs[0].s), (3, 2));
        assert_eq!(cfgs[0].pieces, 4);
    }

    #[test]
    fn hps_sharpness_is_the_congruence_test() {
        assert!(!hps_sharp(3, 5));
        assert!(hps_sharp(3, 4));
        for k in 1..50 {
            assert!(hps_sharp(1, k));
        }
        for n in 1..=12u64 {
            for k in 1..=200u64 {
                assert_eq!(hps_sharp(n, k), k % n == 0 || k % n == 1, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn lambda_monotone_and_superadditive() {
        for spec in [GroupSpec::T, GroupSpec::O, GroupSpec::I, GroupSpec::Th] {
            let mut prev = NormalizedEigenvalue::zero();
            for k in 1..=80u64 {
                let (v, _, _) = lambda_equivariant_sphere(spec, k);
                assert!(v >= prev, "{spec:?} k={k}");
                prev = v;
                // super-additivity over semigroup elements
                let sg = crate::symmetry::orbit_semigroup_cached(spec);
                for b in sg.members_leq(k) {
                    if b == 0 || b == k {
                        continue;
                    }
                    let (rest, _, _) = lambda_equivariant_sphere(spec, k - b);
                    let sum = rest + NormalizedEigenvalue::from_pi_multiple(8 * b as i64, 1);
                    assert!(v >= sum, "{spec:?} k={k} b={b}");
                }
            }
        }
    }

    #[test]
    fn steklov_monotone_in_k() {
        for n in 1..=12u64 {
            let mut prev = NormalizedEigenvalue::zero();
            for k in 1..=100 {
                let v = steklov_equivariant_disk(n, k);
                assert!(v >= prev);
                prev = v;
            }
        }
    }
}
