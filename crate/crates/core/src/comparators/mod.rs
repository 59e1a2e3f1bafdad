//! Baseline comparators: the swap index, and the orderings obtained by
//! replacing plain rationality of each `C_{P,λ}` with the Houtman–Maks index
//! or with total rationality.

mod swap;

use std::collections::BTreeSet;

use num::Zero;

use crate::choice::{houtman_maks, is_totally_rational};
use crate::error::Result;
use crate::interval::IntervalUnion;
use crate::limits::Limits;
use crate::measure::ComparisonResult;
use crate::rational::Rational;
use crate::scf::{fishburn_correspondence, star_values, StochasticChoiceFunction};

pub use swap::{swap_index, SwapResult};

/// Cells `(lo, hi]` partitioning `(0,1]` on which both threshold families are
/// constant: the breakpoints are the `P*` values of either function.
fn merged_cells(p: &StochasticChoiceFunction, q: &StochasticChoiceFunction) -> Vec<(Rational, Rational)> {
    let points: BTreeSet<Rational> = star_values(p).into_iter().chain(star_values(q)).collect();
    let mut lo = Rational::zero();
    points
        .into_iter()
        .map(|hi| {
            let cell = (lo.clone(), hi.clone());
            lo = hi;
            cell
        })
        .collect()
}

/// Houtman–Maks index of `C_{P,λ}` on each cell of `p`'s own grid.
pub fn houtman_maks_profile(
    p: &StochasticChoiceFunction,
    limits: &Limits,
) -> Result<Vec<((Rational, Rational), usize)>> {
    merged_cells(p, p)
        .into_iter()
        .map(|(lo, hi)| {
            let c = fishburn_correspondence(p, &hi)?;
            Ok(((lo, hi), houtman_maks(&c, limits.max_houtman_maks_menus)?))
        })
        .collect()
}

/// `P ⊵′ Q` iff `I_HM(C_{P,λ}) ≤ I_HM(C_{Q,λ})` for every `λ ∈ (0,1]`.
///
/// `left_minus_right` holds the levels where `P` needs strictly more menu
/// removals than `Q`, and `right_minus_left` the reverse.
pub fn hybrid_compare(
    p: &StochasticChoiceFunction,
    q: &StochasticChoiceFunction,
    limits: &Limits,
) -> Result<ComparisonResult> {
    let mut p_worse = IntervalUnion::empty();
    let mut q_worse = IntervalUnion::empty();
    for (lo, hi) in merged_cells(p, q) {
        let hp = houtman_maks(&fishburn_correspondence(p, &hi)?, limits.max_houtman_maks_menus)?;
        let hq = houtman_maks(&fishburn_correspondence(q, &hi)?, limits.max_houtman_maks_menus)?;
        if hp > hq {
            p_worse.insert_unchecked(lo, hi);
        } else if hq > hp {
            q_worse.insert_unchecked(lo, hi);
        }
    }
    Ok(ComparisonResult::from_differences(p_worse, q_worse))
}

/// The levels `λ ∈ (0,1]` at which `C_{P,λ}` is not totally rational.
pub fn non_total_rationality_set(p: &StochasticChoiceFunction, limits: &Limits) -> Result<IntervalUnion> {
    let mut out = IntervalUnion::empty();
    for (lo, hi) in merged_cells(p, p) {
        let c = fishburn_correspondence(p, &hi)?;
        if !is_totally_rational(&c, limits.max_total_rationality_universe)? {
            out.insert_unchecked(lo, hi);
        }
    }
    Ok(out)
}

/// `P ⊵″ Q` iff `C_{P,λ}` is totally rational whenever `C_{Q,λ}` is.
pub fn total_compare(
    p: &StochasticChoiceFunction,
    q: &StochasticChoiceFunction,
    limits: &Limits,
) -> Result<ComparisonResult> {
    let bad_p = non_total_rationality_set(p, limits)?;
    let bad_q = non_total_rationality_set(q, limits)?;
    Ok(ComparisonResult::of_sets(&bad_p, &bad_q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::Verdict;
    use crate::rational::rat;
    use crate::scf::DomainKind;
    use crate::universe::{Menu, Universe};
    use std::sync::Arc;

    fn uniform3() -> StochasticChoiceFunction {
        let u = Arc::new(Universe::new(["x", "y", "z"]).unwrap());
        StochasticChoiceFunction::from_fn(u, DomainKind::Full, |m: Menu| {
            vec![rat(1, m.len() as i64); m.len()]
        })
        .unwrap()
    }

    fn nonmonotone() -> StochasticChoiceFunction {
        let u = Arc::new(Universe::new(["x", "y", "z"]).unwrap());
        let uu = u.clone();
        StochasticChoiceFunction::from_fn(u, DomainKind::Full, move |m| match uu.menu_labels(m).as_slice() {
            ["x", "y"] => vec![rat(4, 5), rat(1, 5)],
            ["y", "z"] => vec![rat(2, 3), rat(1, 3)],
            ["x", "z"] => vec![rat(1, 3), rat(2, 3)],
            _ => vec![rat(6, 13), rat(1, 13), rat(6, 13)],
        })
        .unwrap()
    }

    #[test]
    fn hybrid_verdicts() {
        let limits = Limits::default();
        let (u, e) = (uniform3(), nonmonotone());
        assert_eq!(
            hybrid_compare(&u, &u, &limits).unwrap().verdict,
            Verdict::Equivalent
        );
        let r = hybrid_compare(&u, &e, &limits).unwrap();
        assert_eq!(r.verdict, Verdict::LeftMoreRational);
        assert_eq!(r.right_minus_left.to_string(), "(1/6,1/4] ∪ (1/2,1]");
        assert!(houtman_maks_profile(&u, &limits)
            .unwrap()
            .iter()
            .all(|(_, k)| *k == 0));
    }

    #[test]
    fn total_rationality_of_uniform() {
        let limits = Limits::default();
        assert!(non_total_rationality_set(&uniform3(), &limits)
            .unwrap()
            .is_empty());
        assert_eq!(
            total_compare(&uniform3(), &nonmonotone(), &limits)
                .unwrap()
                .verdict,
            Verdict::LeftMoreRational
        );
    }
}
