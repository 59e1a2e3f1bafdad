use crate::interval::IntervalUnion;
use crate::scf::{DomainKind, StochasticChoiceFunction};
use crate::universe::{distinct_triples, Menu};

/// `Ch(P)`: the union of `(P*(x,S), P*(x,T)]` over nested menus `S ⊂ T` and
/// `x ∈ S`.
///
/// Only pairs with `|T| = |S| + 1` are enumerated. Along any chain from `S` to
/// `T` the normalized likelihood of `x` has to cross each level in between at
/// some single step, so the unions agree. Empty on the pairwise domain.
pub fn chernoff_set(p: &StochasticChoiceFunction) -> IntervalUnion {
    let mut out = IntervalUnion::empty();
    if p.kind() == DomainKind::Pairwise {
        return out;
    }
    for big in p.menus().filter(|m| m.len() >= 3) {
        for dropped in big.iter() {
            let small = big.without(dropped).expect("menu has three members");
            for x in small.iter() {
                out.insert_unchecked(p.star_ref(x, small).clone(), p.star_ref(x, big).clone());
            }
        }
    }
    out
}

/// `Ch(P)` by enumerating every nested pair `S ⊂ T`. Quadratic in the number
/// of menus; kept as a cross-check for [`chernoff_set`].
pub fn chernoff_set_exhaustive(p: &StochasticChoiceFunction) -> IntervalUnion {
    let mut out = IntervalUnion::empty();
    if p.kind() == DomainKind::Pairwise {
        return out;
    }
    let menus: Vec<Menu> = p.menus().collect();
    for &small in &menus {
        for &big in &menus {
            if !small.is_proper_subset(big) {
                continue;
            }
            for x in small.iter() {
                out.insert_unchecked(p.star_ref(x, small).clone(), p.star_ref(x, big).clone());
            }
        }
    }
    out
}

/// `Con(P)`: the union of `(P*(x,S), min_{y ∈ S∖{x}} P*(x,{x,y})]` over menus
/// `S` and `x ∈ S`. Empty on the pairwise domain.
pub fn condorcet_set(p: &StochasticChoiceFunction) -> IntervalUnion {
    let mut out = IntervalUnion::empty();
    if p.kind() == DomainKind::Pairwise {
        return out;
    }
    for menu in p.menus().filter(|m| m.len() >= 3) {
        for x in menu.iter() {
            let hi = menu
                .iter()
                .filter(|&y| y != x)
                .map(|y| p.pair_star(x, y))
                .min()
                .expect("menu has other members");
            out.insert_unchecked(p.star_ref(x, menu).clone(), hi.clone());
        }
    }
    out
}

/// `ST(P)`: the union over distinct `x, y, z` of
/// `(max{P*(y,{x,y}), P*(z,{y,z})}, P*(z,{x,z})]`.
pub fn st_set(p: &StochasticChoiceFunction) -> IntervalUnion {
    let mut out = IntervalUnion::empty();
    for (x, y, z) in distinct_triples(p.len()) {
        let lo = p.pair_star(y, x).max(p.pair_star(z, y));
        out.insert_unchecked(lo.clone(), p.pair_star(z, x).clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::universe::Universe;
    use std::sync::Arc;

    fn luce(weights: &[i64]) -> StochasticChoiceFunction {
        let labels: Vec<String> = (0..weights.len()).map(|i| format!("a{i}")).collect();
        let u = Arc::new(Universe::new(labels).unwrap());
        StochasticChoiceFunction::from_fn(u, DomainKind::Full, |m| {
            let total: i64 = m.iter().map(|a| weights[a.index()]).sum();
            m.iter().map(|a| rat(weights[a.index()], total)).collect()
        })
        .unwrap()
    }

    #[test]
    fn luce_sets_are_empty() {
        let p = luce(&[20, 19, 18, 3]);
        assert!(chernoff_set(&p).is_empty());
        assert!(chernoff_set_exhaustive(&p).is_empty());
        assert!(condorcet_set(&p).is_empty());
        assert!(st_set(&p).is_empty());
    }

    #[test]
    fn pairwise_cycle() {
        let u = Arc::new(Universe::new(["x", "y", "z"]).unwrap());
        let (x, y, z) = (
            u.alternative("x").unwrap(),
            u.alternative("y").unwrap(),
            u.alternative("z").unwrap(),
        );
        let beats = |a, b| {
            Menu::pair(a, b)
                .iter()
                .map(move |m| if m == a { rat(2, 3) } else { rat(1, 3) })
                .collect::<Vec<_>>()
        };
        let p = StochasticChoiceFunction::new(
            u.clone(),
            DomainKind::Pairwise,
            [
                (
                    Menu::pair(x, y),
                    Menu::pair(x, y).iter().zip(beats(x, y)).collect::<Vec<_>>(),
                ),
                (
                    Menu::pair(y, z),
                    Menu::pair(y, z).iter().zip(beats(y, z)).collect(),
                ),
                (
                    Menu::pair(x, z),
                    Menu::pair(x, z).iter().zip(beats(z, x)).collect(),
                ),
            ],
        )
        .unwrap();
        assert_eq!(st_set(&p), IntervalUnion::interval(rat(1, 2), rat(1, 1)).unwrap());
        assert!(chernoff_set(&p).is_empty());
        assert!(condorcet_set(&p).is_empty());
    }
}
