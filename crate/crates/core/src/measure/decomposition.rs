use num::One;
use serde::Serialize;

use crate::choice::{Axiom, Violation};
use crate::error::Result;
use crate::interval::IntervalUnion;
use crate::limits::Limits;
use crate::measure::sets::{chernoff_set, chernoff_set_exhaustive, condorcet_set, st_set};
use crate::rational::Rational;
use crate::scf::{is_lambda_rational, StochasticChoiceFunction};

/// One violating tuple for a maximal component `(lo, hi]` of `Λ(P)`,
/// observed in `C_{P,hi}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub lo: Rational,
    pub hi: Rational,
    pub violation: Violation,
}

impl Witness {
    pub fn axiom(&self) -> Axiom {
        self.violation.axiom()
    }
}

/// `Λ(P) = Ch(P) ∪ Con(P) ∪ ST(P)` together with its parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaDecomposition {
    pub chernoff: IntervalUnion,
    pub condorcet: IntervalUnion,
    pub st: IntervalUnion,
    pub lambda_set: IntervalUnion,
    #[serde(skip)]
    pub witnesses: Vec<Witness>,
}

impl LambdaDecomposition {
    /// `I_rat = 1 − Leb(Λ(P))`.
    pub fn index(&self) -> Rational {
        Rational::one() - self.lambda_set.measure()
    }

    /// `Λ(P) = ∅`.
    pub fn is_maximally_rational(&self) -> bool {
        self.lambda_set.is_empty()
    }

    /// `Λ(P) = (0,1]`.
    pub fn is_minimally_rational(&self) -> bool {
        self.lambda_set == IntervalUnion::unit()
    }
}

/// Options for [`lambda_decomposition_with`].
#[derive(Debug, Clone, Default)]
pub struct DecompositionOptions {
    pub limits: Limits,
    /// Also compute `Ch(P)` by exhaustive nested-pair enumeration and
    /// assert that it matches.
    pub oracle: bool,
}

/// Decomposition under default caps.
pub fn lambda_decomposition(p: &StochasticChoiceFunction) -> Result<LambdaDecomposition> {
    lambda_decomposition_with(p, &DecompositionOptions::default())
}

pub fn lambda_decomposition_with(
    p: &StochasticChoiceFunction,
    options: &DecompositionOptions,
) -> Result<LambdaDecomposition> {
    p.check_limits(&options.limits)?;
    let chernoff = chernoff_set(p);
    if options.oracle {
        assert_eq!(
            chernoff,
            chernoff_set_exhaustive(p),
            "adjacent and exhaustive Chernoff sets differ"
        );
    }
    let condorcet = condorcet_set(p);
    let st = st_set(p);
    let lambda_set = chernoff.union(&condorcet).union(&st);
    let witnesses = lambda_set
        .intervals()
        .iter()
        .map(|(lo, hi)| {
            let check = is_lambda_rational(p, hi).expect("endpoint lies in (0,1]");
            let violation = *check
                .axioms
                .first_violation()
                .expect("right endpoint of a component of Λ is not λ-rational");
            Witness {
                lo: lo.clone(),
                hi: hi.clone(),
                violation,
            }
        })
        .collect();
    Ok(LambdaDecomposition {
        chernoff,
        condorcet,
        st,
        lambda_set,
        witnesses,
    })
}

/// `I_rat(P)` under default caps.
pub fn rationality_index(p: &StochasticChoiceFunction) -> Result<Rational> {
    Ok(lambda_decomposition(p)?.index())
}
