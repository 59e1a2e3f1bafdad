use std::collections::{BTreeMap, BTreeSet};

use num::{One, Signed, Zero};

use crate::choice::{check_axioms, Axiom, AxiomReport, ChoiceCorrespondence};
use crate::error::{Error, Result};
use crate::rational::{format_rational, in_unit_interval, Rational};
use crate::scf::StochasticChoiceFunction;
use crate::universe::{Alternative, Menu};

/// `P*(x, S)`; errors when `x ∉ S` or `S` is outside the domain.
pub fn p_star(p: &StochasticChoiceFunction, x: Alternative, menu: Menu) -> Result<Rational> {
    p.star(x, menu)
}

fn check_lambda(lambda: &Rational) -> Result<()> {
    if !in_unit_interval(lambda) {
        return Err(Error::domain(format!(
            "threshold λ must lie in [0,1], got {}",
            format_rational(lambda)
        )));
    }
    Ok(())
}

/// `C_{P,λ}(S) = {x ∈ S : P*(x,S) ≥ λ}` for `λ > 0`, and the support of
/// `P(·,S)` for `λ = 0`.
pub fn fishburn_correspondence(
    p: &StochasticChoiceFunction,
    lambda: &Rational,
) -> Result<ChoiceCorrespondence> {
    check_lambda(lambda)?;
    let choices: BTreeMap<Menu, Menu> = p
        .menus()
        .map(|m| {
            let chosen = if lambda.is_zero() {
                let probs = p.probabilities(m).expect("stored menu");
                Menu::of(
                    m.iter()
                        .zip(probs)
                        .filter(|(_, q)| q.is_positive())
                        .map(|(a, _)| a),
                )
            } else {
                let stars = p.stars(m).expect("stored menu");
                Menu::of(m.iter().zip(stars).filter(|(_, s)| *s >= lambda).map(|(a, _)| a))
            };
            (m, chosen)
        })
        .collect();
    Ok(ChoiceCorrespondence::from_map(p.universe().clone(), choices))
}

/// Smallest positive `P*` value. `C_{P,0} = C_{P,λ}` for every `λ` up to it.
pub fn lambda_floor(p: &StochasticChoiceFunction) -> Rational {
    let floor = p
        .menus()
        .flat_map(|m| p.stars(m).expect("stored menu").iter())
        .filter(|s| s.is_positive())
        .min()
        .cloned()
        .unwrap_or_else(Rational::one);
    debug_assert_eq!(
        fishburn_correspondence(p, &Rational::zero()).ok(),
        fishburn_correspondence(p, &floor).ok(),
        "continuity at zero"
    );
    floor
}

/// Outcome of a λ-rationality check: the induced correspondence and which of
/// the λ-stochastic Chernoff, Condorcet and Transitivity axioms fail.
#[derive(Debug, Clone)]
pub struct LambdaRationality {
    pub lambda: Rational,
    pub correspondence: ChoiceCorrespondence,
    pub axioms: AxiomReport,
}

impl LambdaRationality {
    pub fn is_rational(&self) -> bool {
        self.axioms.is_rational()
    }

    pub fn failed_axioms(&self) -> Vec<Axiom> {
        self.axioms.violations().map(|v| v.axiom()).collect()
    }

    /// One line per failed axiom, e.g. `Condorcet violation at ({x,y,z}, y)`.
    pub fn diagnostics(&self) -> Vec<String> {
        let u = self.correspondence.universe();
        self.axioms
            .violations()
            .map(|v| format!("{} violation at {}", v.axiom().stochastic_name(), v.describe(u)))
            .collect()
    }
}

/// Whether `C_{P,λ}` is rational, with per-axiom diagnostics.
pub fn is_lambda_rational(p: &StochasticChoiceFunction, lambda: &Rational) -> Result<LambdaRationality> {
    let correspondence = fishburn_correspondence(p, lambda)?;
    let axioms = check_axioms(&correspondence);
    Ok(LambdaRationality {
        lambda: lambda.clone(),
        correspondence,
        axioms,
    })
}

/// Sorted distinct positive `P*` values. Every threshold correspondence is
/// constant on each cell `(v_i, v_{i+1}]` between consecutive values (with
/// `v_0 = 0`), and the last value is always 1.
pub fn star_values(p: &StochasticChoiceFunction) -> Vec<Rational> {
    let mut set: BTreeSet<Rational> = p
        .menus()
        .flat_map(|m| p.stars(m).expect("stored menu").iter())
        .filter(|s| s.is_positive())
        .cloned()
        .collect();
    set.insert(Rational::one());
    set.into_iter().collect()
}

/// The positive `P*` values plus the midpoints between consecutive ones: a
/// finite grid on which λ-rationality can be tested exhaustively.
pub fn critical_lambdas(p: &StochasticChoiceFunction) -> Vec<Rational> {
    let values = star_values(p);
    let two = Rational::from_integer(2.into());
    let mut out: Vec<Rational> = values
        .windows(2)
        .map(|w| (&w[0] + &w[1]) / &two)
        .chain(values.iter().cloned())
        .collect();
    out.sort();
    out
}
