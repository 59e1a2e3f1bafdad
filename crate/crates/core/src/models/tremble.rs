use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::interval::IntervalUnion;
use crate::models::Utility;
use crate::rational::{format_rational, in_unit_interval, Rational};
use crate::scf::{DomainKind, StochasticChoiceFunction};
use crate::universe::Universe;

fn check_alpha(alpha: &Rational) -> Result<()> {
    if !in_unit_interval(alpha) {
        return Err(Error::invalid(format!(
            "α must lie in [0,1], got {}",
            format_rational(alpha)
        )));
    }
    Ok(())
}

/// `P(x,S) = α 1[x = argmax u(S)] + (1−α)/|S|`.
///
/// `α` weights utility maximization; the agent trembles to a uniform pick
/// with probability `1 − α`.
pub fn tremble(universe: Arc<Universe>, u: &Utility, alpha: &Rational) -> Result<StochasticChoiceFunction> {
    u.check_len(universe.len(), "utility")?;
    u.require_injective(&universe, "utility")?;
    check_alpha(alpha)?;
    let noise = Rational::one() - alpha;
    StochasticChoiceFunction::from_fn(universe, DomainKind::Full, |m| {
        let uniform = &noise / Rational::from_integer((m.len() as i64).into());
        let best = u.argmax(m);
        m.iter()
            .map(|a| {
                if a == best {
                    alpha + &uniform
                } else {
                    uniform.clone()
                }
            })
            .collect()
    })
}

fn check_k(k: usize) -> Result<Rational> {
    if k < 3 {
        return Err(Error::invalid(format!(
            "closed forms need k ≥ 3 alternatives, got {k}"
        )));
    }
    Ok(Rational::from_integer((k as i64).into()))
}

/// `Λ = ((1−α)/(1+(k−1)α), (1−α)/(1+α)]` for `α ∈ (0,1)`, empty at the
/// endpoints.
pub fn tremble_lambda_closed_form(k: usize, alpha: &Rational) -> Result<IntervalUnion> {
    let k = check_k(k)?;
    check_alpha(alpha)?;
    if alpha.is_zero() || alpha.is_one() {
        return Ok(IntervalUnion::empty());
    }
    let one = Rational::one();
    let lo = (&one - alpha) / (&one + (&k - &one) * alpha);
    let hi = (&one - alpha) / (&one + alpha);
    IntervalUnion::interval(lo, hi)
}

/// `I_rat = 1 − ((1−α)/(1+α)) · ((k−2)α/(1+(k−1)α))`.
pub fn tremble_index_closed_form(k: usize, alpha: &Rational) -> Result<Rational> {
    let k = check_k(k)?;
    check_alpha(alpha)?;
    let one = Rational::one();
    let two = Rational::from_integer(2.into());
    Ok(&one - ((&one - alpha) / (&one + alpha)) * ((&k - &two) * alpha / (&one + (&k - &one) * alpha)))
}
