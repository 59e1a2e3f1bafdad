use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scf::StochasticChoiceFunction;
use crate::universe::Alternative;

/// Minimum of the swap objective over linear orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapResult {
    #[serde(with = "crate::rational::serde_str")]
    pub value: Rational,
    /// Best first; the lexicographically least optimal order.
    #[serde(skip)]
    pub minimizing_order: Vec<Alternative>,
    /// Number of optimal linear orders.
    pub ties: u64,
}

/// `c[x][w] = Σ_{S ∋ x,w} P(x,S)`: the expected cost charged to `x` for each
/// menu where `w` is ranked above it.
fn pair_costs(p: &StochasticChoiceFunction) -> Vec<Vec<Rational>> {
    let n = p.len();
    let mut c = vec![vec![Rational::zero(); n]; n];
    for (menu, x, prob) in p.rows() {
        if prob.is_zero() {
            continue;
        }
        for w in menu.iter().filter(|&w| w != x) {
            c[x.index()][w.index()] += prob;
        }
    }
    c
}

/// `I_swap(P) = min_≻ Σ_S Σ_{x∈S} P(x,S) |{w ∈ S : w ≻ x}|` over the stored
/// menus.
///
/// The objective splits into the pairwise costs above, so a dynamic program
/// over the set of alternatives already placed at the top of the order finds
/// the exact minimum in `O(2^n n^2)` instead of scanning all `n!` orders.
pub fn swap_index(p: &StochasticChoiceFunction, max_universe: usize) -> Result<SwapResult> {
    let n = p.len();
    if n > max_universe {
        return Err(Error::Capacity {
            what: "universe size for the swap index",
            actual: n,
            limit: max_universe,
        });
    }
    let c = pair_costs(p);
    let full = (1usize << n) - 1;
    // best[a]: least cost of ordering the complement of `a` below `a`
    let mut best: Vec<Rational> = vec![Rational::zero(); full + 1];
    let mut count = vec![0u64; full + 1];
    count[full] = 1;
    for placed in (0..full).rev() {
        let mut min: Option<Rational> = None;
        let mut ways = 0u64;
        for x in (0..n).filter(|x| placed & (1 << x) == 0) {
            let cost = step_cost(&c, placed, x) + &best[placed | (1 << x)];
            match &min {
                Some(m) if cost > *m => {}
                Some(m) if cost == *m => ways += count[placed | (1 << x)],
                _ => {
                    min = Some(cost);
                    ways = count[placed | (1 << x)];
                }
            }
        }
        best[placed] = min.expect("some alternative remains");
        count[placed] = ways;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = 0usize;
    while placed != full {
        let x = (0..n)
            .filter(|x| placed & (1 << x) == 0)
            .find(|&x| step_cost(&c, placed, x) + &best[placed | (1 << x)] == best[placed])
            .expect("an optimal step exists");
        order.push(Alternative::new(x));
        placed |= 1 << x;
    }
    Ok(SwapResult {
        value: best[0].clone(),
        minimizing_order: order,
        ties: count[0],
    })
}

/// Cost of placing `x` directly below the alternatives in `placed`.
fn step_cost(c: &[Vec<Rational>], placed: usize, x: usize) -> Rational {
    (0..c.len())
        .filter(|w| placed & (1 << w) != 0)
        .map(|w| &c[x][w])
        .sum()
}
