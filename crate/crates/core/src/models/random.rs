//! Seeded instance generators for property tests.
//!
//! The generator is SplitMix64 (Steele, Lea and Flood, 2014) with the state
//! initialized to the seed, as provided by `rand_xoshiro`. Integers below `n`
//! are drawn as `next_u64() % n`, shuffles are Fisher–Yates from the back, so
//! every corpus can be regenerated from its seed in any language.

use std::sync::Arc;

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::models::Utility;
use crate::rational::Rational;
use crate::scf::{domain_menus, DomainKind, StochasticChoiceFunction};
use crate::universe::Universe;

/// Deterministic random source.
#[derive(Debug, Clone)]
pub struct SeededRng(SplitMix64);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish integer in `0..n` by modulo reduction; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        self.next_u64() % n
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }

    /// `parts` nonnegative integers summing to `total`, via sorted cut points.
    pub fn composition(&mut self, total: u64, parts: usize) -> Vec<u64> {
        let mut cuts: Vec<u64> = (1..parts).map(|_| self.below(total + 1)).collect();
        cuts.sort_unstable();
        let mut out = Vec::with_capacity(parts);
        let mut prev = 0;
        for c in cuts.into_iter().chain([total]) {
            out.push(c - prev);
            prev = c;
        }
        out
    }

    /// An injective utility on `n` alternatives: a random permutation of
    /// `1..=n`.
    pub fn utility(&mut self, n: usize) -> Utility {
        let mut values: Vec<i64> = (1..=n as i64).collect();
        self.shuffle(&mut values);
        Utility::new(
            values
                .into_iter()
                .map(|v| Rational::from_integer(v.into()))
                .collect(),
        )
    }

    /// A strictly positive utility with values in `1..=bound`.
    pub fn positive_utility(&mut self, n: usize, bound: u64) -> Utility {
        Utility::new(
            (0..n)
                .map(|_| Rational::from_integer(((self.below(bound) + 1) as i64).into()))
                .collect(),
        )
    }

    /// A rational `k / denominator` with `k` uniform in `lo..=hi`.
    pub fn rational_between(&mut self, lo: u64, hi: u64, denominator: u64) -> Rational {
        let k = lo + self.below(hi - lo + 1);
        Rational::new((k as i64).into(), (denominator as i64).into())
    }
}

/// A random function on the given domain. Each menu's probabilities are
/// `k_i / bound` for a random composition `Σ k_i = bound`, drawn in canonical
/// menu order, so every denominator divides `denominator_bound`.
pub fn random_scf(
    seed: u64,
    universe: Arc<Universe>,
    denominator_bound: u64,
    kind: DomainKind,
) -> Result<StochasticChoiceFunction> {
    if denominator_bound < 2 {
        return Err(Error::invalid(format!(
            "denominator bound must be at least 2, got {denominator_bound}"
        )));
    }
    let mut rng = SeededRng::new(seed);
    let bound = Rational::from_integer((denominator_bound as i64).into());
    // menus visited in the same order from_fn uses
    let rows: Vec<Vec<Rational>> = domain_menus(universe.len(), kind)
        .map(|m| {
            rng.composition(denominator_bound, m.len())
                .into_iter()
                .map(|k| Rational::from_integer((k as i64).into()) / &bound)
                .collect()
        })
        .collect();
    let mut rows = rows.into_iter();
    StochasticChoiceFunction::from_fn(universe, kind, |_| rows.next().expect("one row per menu"))
}

/// Universe `a0, a1, …` of the given size.
pub fn indexed_universe(n: usize) -> Arc<Universe> {
    let width = n.saturating_sub(1).to_string().len();
    Arc::new(Universe::new((0..n).map(|i| format!("a{i:0width$}"))).expect("generated labels are distinct"))
}
