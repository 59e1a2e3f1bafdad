#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use num::Zero;
use stochrat::choice::{ChoiceCorrespondence, Preorder};
use stochrat::io::{ChoiceDataset, DatasetFormat};
use stochrat::models::{indexed_universe, RandomUtilityModel, SeededRng, Utility};
use stochrat::rational::{rat, Rational};
use stochrat::scf::domain_menus;
use stochrat::universe::{Alternative, Menu, Universe};
use stochrat::{DomainKind, StochasticChoiceFunction};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn load_fixture(name: &str) -> ChoiceDataset {
    let path = fixture(name);
    ChoiceDataset::read(&path, DatasetFormat::from_path(&path)).expect("fixture parses")
}

pub fn xyz() -> Arc<Universe> {
    Arc::new(Universe::new(["x", "y", "z"]).unwrap())
}

pub fn ranking(u: &Universe, best_first: &[&str]) -> Utility {
    Utility::from_ranking(u, best_first).unwrap()
}

/// Full-domain function on `{x,y,z}` from its three pairwise probabilities
/// `P(x,{x,y})`, `P(y,{y,z})`, `P(z,{x,z})` and the triple-menu row.
pub fn xyz_full(
    pxy: Rational,
    pyz: Rational,
    pzx: Rational,
    triple: [Rational; 3],
) -> StochasticChoiceFunction {
    let u = xyz();
    let uu = u.clone();
    let one = Rational::from_integer(1.into());
    StochasticChoiceFunction::from_fn(u, DomainKind::Full, move |m| match uu.menu_labels(m).as_slice() {
        ["x", "y"] => vec![pxy.clone(), &one - &pxy],
        ["y", "z"] => vec![pyz.clone(), &one - &pyz],
        ["x", "z"] => vec![&one - &pzx, pzx.clone()],
        _ => triple.to_vec(),
    })
    .unwrap()
}

/// Pairwise-domain cycle with `P(x,{x,y}) = P(y,{y,z}) = P(z,{x,z}) = q`.
pub fn xyz_cycle(q: Rational) -> StochasticChoiceFunction {
    xyz_full(q.clone(), q.clone(), q, [rat(1, 3), rat(1, 3), rat(1, 3)]).restrict_to_pairwise()
}

/// The same function with alternative `i` of the result standing for
/// alternative `perm[i]` of `p` (labels travel with their alternatives).
pub fn relabel(p: &StochasticChoiceFunction, perm: &[usize]) -> StochasticChoiceFunction {
    let old = p.universe();
    let labels: Vec<&str> = perm.iter().map(|&i| old.label(Alternative::new(i))).collect();
    let universe = Arc::new(Universe::new(labels).unwrap());
    let mut inverse = vec![0; perm.len()];
    for (new, &o) in perm.iter().enumerate() {
        inverse[o] = new;
    }
    let rows: Vec<(Menu, Vec<(Alternative, Rational)>)> = p
        .menus()
        .map(|m| {
            let image = Menu::of(m.iter().map(|a| Alternative::new(inverse[a.index()])));
            let probs = p.probabilities(m).unwrap();
            let entries = m
                .iter()
                .zip(probs)
                .map(|(a, q)| (Alternative::new(inverse[a.index()]), q.clone()))
                .collect();
            (image, entries)
        })
        .collect();
    StochasticChoiceFunction::new(universe, p.kind(), rows).unwrap()
}

/// Every preorder on `n ≤ 4` alternatives.
pub fn all_preorders(n: usize) -> Vec<Preorder> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    (0u32..1 << off.len())
        .filter_map(|mask| {
            let mut rel = vec![false; n * n];
            for a in 0..n {
                rel[a * n + a] = true;
            }
            for (k, &(a, b)) in off.iter().enumerate() {
                rel[a * n + b] = mask & (1 << k) != 0;
            }
            Preorder::from_matrix(n, rel).ok()
        })
        .collect()
}

/// Whether some preorder rationalizes `c` on its domain, by exhaustive search.
pub fn rationalizable_by_search(c: &ChoiceCorrespondence, preorders: &[Preorder]) -> bool {
    let entries: Vec<(Menu, Menu)> = c.entries().collect();
    preorders
        .iter()
        .any(|r| entries.iter().all(|&(m, chosen)| r.maximal(m) == chosen))
}

/// `I_swap` by scanning all orders of the universe.
pub fn naive_swap(p: &StochasticChoiceFunction) -> (Rational, u64) {
    let n = p.len();
    let mut order: Vec<usize> = (0..n).collect();
    let mut best: Option<Rational> = None;
    let mut ties = 0;
    permute_all(&mut order, 0, &mut |order| {
        let rank: Vec<usize> = {
            let mut r = vec![0; n];
            for (pos, &a) in order.iter().enumerate() {
                r[a] = pos;
            }
            r
        };
        let mut cost = Rational::zero();
        for (m, x, q) in p.rows() {
            let above = m.iter().filter(|w| rank[w.index()] < rank[x.index()]).count();
            cost += q * Rational::from_integer((above as i64).into());
        }
        match &best {
            Some(b) if cost > *b => {}
            Some(b) if cost == *b => ties += 1,
            _ => {
                best = Some(cost);
                ties = 1;
            }
        }
    });
    (best.unwrap(), ties)
}

fn permute_all(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, f);
        items.swap(k, i);
    }
}

/// `parts` positive weights summing to `total / den`, each a multiple of `1/den`.
pub fn weights(rng: &mut SeededRng, total: u64, parts: usize, den: u64) -> Vec<Rational> {
    let extra = rng.composition(total - parts as u64, parts);
    extra
        .into_iter()
        .map(|k| Rational::new(((k + 1) as i64).into(), (den as i64).into()))
        .collect()
}

/// Random positive-weight RUM with `components` random linear orders.
pub fn random_rum(rng: &mut SeededRng, n: usize, components: usize) -> RandomUtilityModel {
    let den = 24;
    let w = weights(rng, den, components, den);
    let comps = w.into_iter().map(|t| (rng.utility(n), t)).collect();
    RandomUtilityModel::new(indexed_universe(n), comps).unwrap()
}

/// `u` with some disjoint pairs of adjacent (under `u`) alternatives swapped.
pub fn adjacent_swaps(rng: &mut SeededRng, u: &Utility) -> Utility {
    let n = u.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| u.value(Alternative::new(b)).cmp(u.value(Alternative::new(a))));
    let mut i = 0;
    while i + 1 < n {
        if rng.below(2) == 1 {
            order.swap(i, i + 1);
            i += 2;
        } else {
            i += 1;
        }
    }
    let mut values = vec![Rational::zero(); n];
    for (pos, &a) in order.iter().enumerate() {
        values[a] = Rational::from_integer(((n - pos) as i64).into());
    }
    Utility::new(values)
}

/// Random strict partial order (as a preorder) together with a positive
/// utility strictly increasing along it.
pub fn random_proper_two_stage(rng: &mut SeededRng, n: usize) -> (Preorder, Utility) {
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.below(3) == 0 {
                pairs.push((Alternative::new(order[i]), Alternative::new(order[j])));
            }
        }
    }
    let mut values = vec![Rational::zero(); n];
    for (pos, &a) in order.iter().enumerate() {
        values[a] = Rational::from_integer(((n - pos) as i64).into());
    }
    (Preorder::closure(n, &pairs), Utility::new(values))
}

pub fn full_menus(n: usize) -> Vec<Menu> {
    domain_menus(n, DomainKind::Full).collect()
}
