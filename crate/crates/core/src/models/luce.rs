use std::sync::Arc;

use num::Zero;

use crate::choice::Preorder;
use crate::error::{Error, Result};
use crate::models::Utility;
use crate::rational::Rational;
use crate::scf::{DomainKind, StochasticChoiceFunction};
use crate::universe::{Menu, Universe};

/// `P(a,S) = u(a) / Σ_{b∈S} u(b)`.
pub fn luce(universe: Arc<Universe>, u: &Utility) -> Result<StochasticChoiceFunction> {
    general_luce(universe, u, |m| m)
}

/// Luce weights renormalized over the constraint set `Γ(S) ⊆ S`, zero
/// outside it.
pub fn general_luce(
    universe: Arc<Universe>,
    u: &Utility,
    gamma: impl Fn(Menu) -> Menu,
) -> Result<StochasticChoiceFunction> {
    u.check_len(universe.len(), "utility")?;
    u.require_positive(&universe, "utility")?;
    let mut bad = None;
    let p = StochasticChoiceFunction::from_fn(universe.clone(), DomainKind::Full, |m| {
        let g = gamma(m);
        if g.is_empty() || !g.is_subset(m) {
            bad.get_or_insert((m, g));
            return vec![Rational::zero(); m.len()];
        }
        luce_on(u, m, g)
    });
    if let Some((m, g)) = bad {
        return Err(Error::invalid(format!(
            "constraint set {} is not a nonempty subset of {}",
            universe.display_menu(g),
            universe.display_menu(m)
        )));
    }
    p
}

fn luce_on(u: &Utility, menu: Menu, support: Menu) -> Vec<Rational> {
    let total: Rational = support.iter().map(|a| u.value(a)).sum();
    menu.iter()
        .map(|a| {
            if support.contains(a) {
                u.value(a) / &total
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// A 2-stage Luce model: Luce choice among the `≽`-maximal members.
#[derive(Debug, Clone)]
pub struct TwoStageLuce {
    pub scf: StochasticChoiceFunction,
    /// `u` is increasing with respect to the strict part of `≽`.
    pub is_proper: bool,
}

/// `P(x,S) = u(x) / Σ_{ω ∈ MAX(S,≽)} u(ω)` for `x ∈ MAX(S,≽)`, zero otherwise.
/// `order` must be a partial order.
pub fn two_stage_luce(universe: Arc<Universe>, u: &Utility, order: &Preorder) -> Result<TwoStageLuce> {
    if order.len() != universe.len() {
        return Err(Error::invalid("order and universe sizes differ"));
    }
    if !order.is_antisymmetric() {
        return Err(Error::invalid("the first-stage relation must be a partial order"));
    }
    let scf = general_luce(universe.clone(), u, |m| order.maximal(m))?;
    let is_proper = universe.alternatives().all(|x| {
        universe
            .alternatives()
            .all(|y| !order.strictly_prefers(x, y) || u.prefers(x, y))
    });
    Ok(TwoStageLuce { scf, is_proper })
}
