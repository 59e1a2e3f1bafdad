use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::IntervalUnion;
use crate::models::Utility;
use crate::rational::{format_rational, half, in_unit_interval, Rational};
use crate::scf::{DomainKind, StochasticChoiceFunction};
use crate::universe::{distinct_triples, Menu, Universe};

/// A random utility model: utility `u_i` is maximized with probability
/// `θ_i`. Components are kept in decreasing order of weight (stable for
/// ties), so `θ_1` is the largest.
#[derive(Debug, Clone)]
pub struct RandomUtilityModel {
    universe: Arc<Universe>,
    components: Vec<(Utility, Rational)>,
}

impl RandomUtilityModel {
    pub fn new(universe: Arc<Universe>, mut components: Vec<(Utility, Rational)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::invalid(
                "a random utility model needs at least one utility",
            ));
        }
        for (i, (u, theta)) in components.iter().enumerate() {
            let name = format!("utility #{}", i + 1);
            u.check_len(universe.len(), &name)?;
            u.require_injective(&universe, &name)?;
            if !theta.is_positive() {
                return Err(Error::invalid(format!(
                    "weight of {name} must be positive, got {}",
                    format_rational(theta)
                )));
            }
        }
        let total: Rational = components.iter().map(|(_, t)| t).sum();
        if !total.is_one() {
            return Err(Error::invalid(format!(
                "weights sum to {}, not 1",
                format_rational(&total)
            )));
        }
        components.sort_by(|a, b| b.1.cmp(&a.1));
        Ok(RandomUtilityModel { universe, components })
    }

    pub fn components(&self) -> &[(Utility, Rational)] {
        &self.components
    }

    pub fn utilities(&self) -> Vec<Utility> {
        self.components.iter().map(|(u, _)| u.clone()).collect()
    }

    /// The largest weight `θ_1`.
    pub fn leading_weight(&self) -> &Rational {
        &self.components[0].1
    }

    /// `P(x,S) = Σ_i θ_i 1[x = argmax u_i(S)]` on the full domain.
    pub fn scf(&self) -> Result<StochasticChoiceFunction> {
        mixture(self.universe.clone(), |m| {
            self.components
                .iter()
                .map(|(u, t)| (u.argmax(m), t.clone()))
                .collect()
        })
    }
}

/// Builds a full-domain function from per-menu point masses.
fn mixture(
    universe: Arc<Universe>,
    masses: impl Fn(Menu) -> Vec<(crate::universe::Alternative, Rational)>,
) -> Result<StochasticChoiceFunction> {
    StochasticChoiceFunction::from_fn(universe, DomainKind::Full, |m| {
        let mut probs = vec![Rational::zero(); m.len()];
        for (a, t) in masses(m) {
            probs[m.position(a).expect("argmax is a member")] += t;
        }
        probs
    })
}

fn check_pair(universe: &Universe, u: &Utility, v: &Utility) -> Result<()> {
    for (name, w) in [("u", u), ("v", v)] {
        w.check_len(universe.len(), name)?;
        w.require_injective(universe, name)?;
    }
    Ok(())
}

/// Uniform dual RUM: `P(x,S) = θ 1[x = argmax u(S)] + (1−θ) 1[x = argmax v(S)]`.
pub fn uniform_drum(
    universe: Arc<Universe>,
    u: &Utility,
    v: &Utility,
    theta: &Rational,
) -> Result<StochasticChoiceFunction> {
    check_pair(&universe, u, v)?;
    if !in_unit_interval(theta) {
        return Err(Error::invalid(format!(
            "θ must lie in [0,1], got {}",
            format_rational(theta)
        )));
    }
    let rest = Rational::one() - theta;
    mixture(universe, |m| {
        vec![(u.argmax(m), theta.clone()), (v.argmax(m), rest.clone())]
    })
}

/// Dual RUM with a menu-dependent weight `θ(S)`; every menu with at least
/// two members must be assigned.
pub fn drum(
    universe: Arc<Universe>,
    u: &Utility,
    v: &Utility,
    theta: &BTreeMap<Menu, Rational>,
) -> Result<StochasticChoiceFunction> {
    check_pair(&universe, u, v)?;
    for (&m, t) in theta {
        if !in_unit_interval(t) {
            return Err(Error::invalid(format!(
                "θ({}) must lie in [0,1], got {}",
                universe.display_menu(m),
                format_rational(t)
            )));
        }
    }
    if let Some(m) =
        crate::scf::domain_menus(universe.len(), DomainKind::Full).find(|m| !theta.contains_key(m))
    {
        return Err(Error::invalid(format!(
            "θ is not given for menu {}",
            universe.display_menu(m)
        )));
    }
    mixture(universe, |m| {
        let t = &theta[&m];
        vec![(u.argmax(m), t.clone()), (v.argmax(m), Rational::one() - t)]
    })
}

/// No `x, y, z` with `u(x) > u(y) > u(z)` and `v(z) > v(y) > v(x)`.
pub fn consistent_over_triplets(u: &Utility, v: &Utility) -> bool {
    consistent_with_over_triplets(u, std::slice::from_ref(v))
}

/// No `x, y, z` with `u_1(x) > u_1(y) > u_1(z)` while every other utility
/// ranks them in exactly the opposite order.
pub fn consistent_with_over_triplets(first: &Utility, rest: &[Utility]) -> bool {
    !distinct_triples(first.len()).any(|(x, y, z)| {
        first.prefers(x, y) && first.prefers(y, z) && rest.iter().all(|u| u.prefers(z, y) && u.prefers(y, x))
    })
}

/// No `x, x_1, …, x_n` with `u_j(x_j) > u_j(x) > max_{i≠j} u_j(x_i)` for
/// every `j`.
///
/// Fixing `x`, the condition on each `x_i` only involves `x_i` itself: it
/// must beat `x` under `u_i` and lose to `x` under every other `u_j`. So a
/// pattern exists iff some `x` admits such an `x_i` for every `i`.
pub fn consistent_over_ntuples(utilities: &[Utility]) -> bool {
    let Some(first) = utilities.first() else {
        return true;
    };
    let n = first.len();
    let alts = || (0..n).map(crate::universe::Alternative::new);
    !alts().any(|x| {
        (0..utilities.len()).all(|i| {
            alts().any(|xi| {
                xi != x
                    && utilities[i].prefers(xi, x)
                    && utilities
                        .iter()
                        .enumerate()
                        .all(|(j, u)| j == i || u.prefers(x, xi))
            })
        })
    })
}

/// For all `x, y, z`: `u_1(x) > u_1(y) > u_1(z)` implies `u_i(x) > u_i(z)`
/// for every `i`. `utilities[0]` is the leading utility.
pub fn leading_order_preserved(utilities: &[Utility]) -> bool {
    let Some(first) = utilities.first() else {
        return true;
    };
    distinct_triples(first.len()).all(|(x, y, z)| {
        !(first.prefers(x, y) && first.prefers(y, z)) || utilities.iter().all(|u| u.prefers(x, z))
    })
}

/// `Λ` of the uniform dual RUM `(u, v, θ)` in closed form: empty when `u`
/// and `v` are consistent over triplets, otherwise `(0, (1−θ)/θ]` after
/// relabelling so that `θ ≥ 1/2`.
pub fn drum_lambda_closed_form(u: &Utility, v: &Utility, theta: &Rational) -> Result<IntervalUnion> {
    if !in_unit_interval(theta) {
        return Err(Error::invalid(format!(
            "θ must lie in [0,1], got {}",
            format_rational(theta)
        )));
    }
    let theta = if *theta < half() {
        Rational::one() - theta
    } else {
        theta.clone()
    };
    if consistent_over_triplets(u, v) {
        return Ok(IntervalUnion::empty());
    }
    let hi = (Rational::one() - &theta) / &theta;
    IntervalUnion::interval(Rational::zero(), hi)
}
