use serde::Serialize;

use crate::rational::{half, Rational};
use crate::scf::{DomainKind, StochasticChoiceFunction};
use crate::universe::{distinct_triples, Alternative, Menu};

/// The s-transitivity notions, each over all distinct `x, y, z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TransitivityFlags {
    pub weak: bool,
    pub almost_weak: bool,
    pub moderate: bool,
    pub almost_moderate: bool,
    pub strong: bool,
}

/// Classifies `P` by the pairwise probabilities `p(a,b) = P(a,{a,b})`.
pub fn classify_transitivity(p: &StochasticChoiceFunction) -> TransitivityFlags {
    let h = half();
    let mut f = TransitivityFlags {
        weak: true,
        almost_weak: true,
        moderate: true,
        almost_moderate: true,
        strong: true,
    };
    for (x, y, z) in distinct_triples(p.len()) {
        let pxy = p.pair_prob(x, y);
        let pyz = p.pair_prob(y, z);
        if *pxy < h || *pyz < h {
            continue;
        }
        let pxz = p.pair_prob(x, z);
        let strict = *pxy > h && *pyz > h;
        let weak_ok = *pxz >= h;
        let moderate_ok = pxz >= pxy.min(pyz);
        f.weak &= weak_ok;
        f.moderate &= moderate_ok;
        f.strong &= pxz >= pxy.max(pyz);
        if strict {
            f.almost_weak &= weak_ok;
            f.almost_moderate &= moderate_ok;
        }
    }
    f
}

/// Whether `P(x,{x,y}) + P(y,{y,z}) + P(z,{x,z}) ≤ 2` for all distinct
/// triples; on failure the first violating `(x, y, z)`.
pub fn triangular_condition(
    p: &StochasticChoiceFunction,
) -> std::result::Result<(), (Alternative, Alternative, Alternative)> {
    let two = Rational::from_integer(2.into());
    for (x, y, z) in distinct_triples(p.len()) {
        let sum = p.pair_prob(x, y) + p.pair_prob(y, z) + p.pair_prob(z, x);
        if sum > two {
            return Err((x, y, z));
        }
    }
    Ok(())
}

/// First `(S, T, x, y)` breaking selectivity for `S ⊂ T`. With `from = T`
/// and `to = S` (contractions) the requirement is `P(x,T) > P(y,T) ⇒
/// P(y,T)/P(x,T) ≥ P(y,S)/P(x,S)`; expansions swap the roles. Ratios are
/// cross-multiplied so zero probabilities need no special case.
fn selectivity_violation(
    p: &StochasticChoiceFunction,
    expansions: bool,
) -> Option<(Menu, Menu, Alternative, Alternative)> {
    if p.kind() == DomainKind::Pairwise {
        return None;
    }
    let menus: Vec<Menu> = p.menus().collect();
    for &small in &menus {
        for &big in &menus {
            if !small.is_proper_subset(big) {
                continue;
            }
            let (from, to) = if expansions { (small, big) } else { (big, small) };
            for x in small.iter() {
                for y in small.iter() {
                    let (fx, fy) = (p.probability(x, from).ok()?, p.probability(y, from).ok()?);
                    if fx <= fy {
                        continue;
                    }
                    let (tx, ty) = (p.probability(x, to).ok()?, p.probability(y, to).ok()?);
                    let ok = &fy * &tx >= &ty * &fx;
                    if !ok {
                        return Some((small, big, x, y));
                    }
                }
            }
        }
    }
    None
}

/// Selectivity with respect to contractions: for `S ⊂ T` and `x, y ∈ S`,
/// `P(x,T) > P(y,T)` implies `P(y,T)/P(x,T) ≥ P(y,S)/P(x,S)`.
/// Vacuously true on the pairwise domain.
pub fn is_selective_contractions(p: &StochasticChoiceFunction) -> bool {
    selectivity_violation(p, false).is_none()
}

/// Selectivity with respect to expansions: for `S ⊂ T` and `x, y ∈ S`,
/// `P(x,S) > P(y,S)` implies `P(y,S)/P(x,S) ≥ P(y,T)/P(x,T)`.
/// Vacuously true on the pairwise domain.
pub fn is_selective_expansions(p: &StochasticChoiceFunction) -> bool {
    selectivity_violation(p, true).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::universe::Universe;
    use std::sync::Arc;

    fn pairwise(n: usize, f: impl Fn(usize, usize) -> Rational) -> StochasticChoiceFunction {
        let labels: Vec<String> = (0..n).map(|i| ((b'x' + i as u8) as char).to_string()).collect();
        let u = Arc::new(Universe::new(labels).unwrap());
        StochasticChoiceFunction::from_fn(u, DomainKind::Pairwise, |m| {
            let a: Vec<usize> = m.iter().map(|a| a.index()).collect();
            let p = f(a[0], a[1]);
            vec![p.clone(), Rational::from_integer(1.into()) - p]
        })
        .unwrap()
    }

    // x beats y, y beats z, z beats x, each with probability q
    fn cycle(q: Rational) -> StochasticChoiceFunction {
        pairwise(3, move |i, j| match (i, j) {
            (0, 1) | (1, 2) => q.clone(),
            _ => Rational::from_integer(1.into()) - q.clone(),
        })
    }

    #[test]
    fn all_halves_satisfy_everything() {
        let f = classify_transitivity(&pairwise(4, |_, _| rat(1, 2)));
        assert!(f.weak && f.almost_weak && f.moderate && f.almost_moderate && f.strong);
    }

    #[test]
    fn cycles() {
        let seven = cycle(rat(7, 10));
        let f = classify_transitivity(&seven);
        assert!(!f.weak && !f.almost_weak && !f.moderate);
        let u = seven.universe();
        let (x, y, z) = triangular_condition(&seven).unwrap_err();
        assert_eq!([u.label(x), u.label(y), u.label(z)], ["x", "y", "z"]);
        assert!(triangular_condition(&cycle(rat(2, 3))).is_ok());
    }

    #[test]
    fn selectivity_is_vacuous_on_pairs() {
        let p = cycle(rat(2, 3));
        assert!(is_selective_contractions(&p) && is_selective_expansions(&p));
    }
}
