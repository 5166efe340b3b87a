//! Numerical semigroups generated by orbit cardinalities.
//!
//! Membership is decided by coin-problem dynamic programming over a boolean
//! table. The table starts at twice the lcm of the generators and is
//! extended lazily behind a lock, so concurrent `contains` calls never
//! observe a partially built table.

use std::collections::BTreeSet;
use std::sync::RwLock;

use num_integer::Integer;

/// Additive semigroup of non-negative integers spanned by a generator set.
/// Zero is always a member.
#[derive(Debug)]
pub struct NumericalSemigroup {
    generators: BTreeSet<u64>,
    table: RwLock<Vec<bool>>,
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        Self {
            generators: self.generators.clone(),
            table: RwLock::new(self.table.read().unwrap().clone()),
        }
    }
}

impl NumericalSemigroup {
    /// Build from a non-empty set of positive generators. The generators are
    /// kept as given (no reduction to a minimal system) so they stay
    /// traceable to orbit sizes.
    pub fn new<I: IntoIterator<Item = u64>>(generators: I) -> Self {
        let generators: BTreeSet<u64> = generators.into_iter().collect();
        assert!(!generators.is_empty(), "semigroup needs at least one generator");
        assert!(!generators.contains(&0), "generators must be positive");
        let lcm = generators.iter().fold(1u64, |acc, &g| acc.lcm(&g));
        let horizon = (2 * lcm) as usize;
        let table = build_table(&generators, horizon);
        Self { generators, table: RwLock::new(table) }
    }

    pub fn generators(&self) -> impl Iterator<Item = u64> + '_ {
        self.generators.iter().copied()
    }

    fn ensure_horizon(&self, n: u64) {
        let needed = n as usize + 1;
        {
            let t = self.table.read().unwrap();
            if t.len() >= needed {
                return;
            }
        }
        let mut t = self.table.write().unwrap();
        if t.len() < needed {
            extend_table(&self.generators, &mut t, needed);
        }
    }

    /// True iff `b` is a non-negative integer combination of the generators.
    pub fn contains(&self, b: u64) -> bool {
        self.ensure_horizon(b);
        self.table.read().unwrap()[b as usize]
    }

    /// Largest member `≤ k`; always `≥ 0` since 0 is a member.
    pub fn max_element_leq(&self, k: u64) -> u64 {
        self.ensure_horizon(k);
        let t = self.table.read().unwrap();
        (0..=k).rev().find(|&b| t[b as usize]).unwrap_or(0)
    }

    /// All members in `[0, k]`, ascending.
    pub fn members_leq(&self, k: u64) -> Vec<u64> {
        self.ensure_horizon(k);
        let t = self.table.read().unwrap();
        (0..=k).filter(|&b| t[b as usize]).collect()
    }
}

fn build_table(generators: &BTreeSet<u64>, horizon: usize) -> Vec<bool> {
    let mut t = vec![false; horizon + 1];
    t[0] = true;
    for &g in generators {
        let g = g as usize;
        for i in g..t.len() {
            if t[i - g] {
                t[i] = true;
            }
        }
    }
    t
}

fn extend_table(generators: &BTreeSet<u64>, t: &mut Vec<bool>, needed: usize) {
    let old = t.len();
    t.resize(needed, false);
    for i in old..needed {
        t[i] = generators.iter().any(|&g| i >= g as usize && t[i - g as usize]);
    }
}
