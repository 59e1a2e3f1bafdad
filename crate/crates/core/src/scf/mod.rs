//! Stochastic choice functions over a full or pairwise menu domain.

mod fishburn;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rational::{format_rational, in_unit_interval, Rational};
use crate::universe::{doubletons, menus_of_size_at_least, Alternative, Menu, Universe};

pub use fishburn::{
    critical_lambdas, fishburn_correspondence, is_lambda_rational, lambda_floor, p_star, star_values,
    LambdaRationality,
};

/// Hard ceiling on full-domain universes, independent of [`Limits`]: beyond it
/// the menu table itself becomes unreasonable to materialize.
pub const MAX_FULL_STORAGE: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainKind {
    /// Every menu with at least two members.
    Full,
    /// Exactly the two-element menus.
    Pairwise,
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DomainKind::Full => "full",
            DomainKind::Pairwise => "pairwise",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Distribution {
    // both aligned with the menu's ascending member order
    probs: Vec<Rational>,
    stars: Vec<Rational>,
}

impl Distribution {
    fn new(probs: Vec<Rational>) -> Self {
        let max = probs.iter().max().cloned().expect("menus are nonempty");
        debug_assert!(max.is_positive());
        let stars = probs.iter().map(|p| p / &max).collect();
        Distribution { probs, stars }
    }
}

/// An exact stochastic choice function `P(x, S)`.
///
/// Singleton menus are implicit with probability one. Every stored menu's
/// distribution sums to exactly one. The normalized likelihoods `P*(x,S)` are
/// precomputed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StochasticChoiceFunction {
    universe: Arc<Universe>,
    kind: DomainKind,
    menus: BTreeMap<Menu, Distribution>,
}

impl StochasticChoiceFunction {
    /// Builds and validates a function from per-menu `(alternative,
    /// probability)` rows. Members without a row get probability zero.
    pub fn new<I, R>(universe: Arc<Universe>, kind: DomainKind, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Menu, R)>,
        R: IntoIterator<Item = (Alternative, Rational)>,
    {
        let mut table: BTreeMap<Menu, Vec<Rational>> = BTreeMap::new();
        for (menu, entries) in rows {
            let mut probs = vec![Rational::zero(); menu.len()];
            let mut seen = 0u64;
            for (a, p) in entries {
                let pos = menu.position(a).ok_or_else(|| {
                    Error::invalid(format!(
                        "alternative {} is not a member of menu {}",
                        label_or_index(&universe, a),
                        universe.display_menu(menu)
                    ))
                })?;
                if seen & (1 << pos) != 0 {
                    return Err(Error::invalid(format!(
                        "alternative {} listed twice for menu {}",
                        universe.label(a),
                        universe.display_menu(menu)
                    )));
                }
                seen |= 1 << pos;
                probs[pos] = p;
            }
            if table.insert(menu, probs).is_some() {
                return Err(Error::invalid(format!(
                    "menu {} listed twice",
                    universe.display_menu(menu)
                )));
            }
        }
        Self::from_table(universe, kind, table)
    }

    /// Builds a function from a generator returning, for each menu in the
    /// domain, probabilities aligned with the menu's ascending member order.
    pub fn from_fn<F>(universe: Arc<Universe>, kind: DomainKind, mut f: F) -> Result<Self>
    where
        F: FnMut(Menu) -> Vec<Rational>,
    {
        check_structure(&universe, kind)?;
        let table = domain_menus(universe.len(), kind).map(|m| (m, f(m))).collect();
        Self::from_table(universe, kind, table)
    }

    fn from_table(
        universe: Arc<Universe>,
        kind: DomainKind,
        mut table: BTreeMap<Menu, Vec<Rational>>,
    ) -> Result<Self> {
        check_structure(&universe, kind)?;
        let full = universe.full_menu();
        // singletons carry no information; accept them only when degenerate-correct
        let singletons: Vec<Menu> = table.keys().filter(|m| m.len() == 1).copied().collect();
        for m in singletons {
            let probs = table.remove(&m).expect("present");
            if probs[0] != Rational::one() {
                return Err(Error::invalid(format!(
                    "singleton menu {} must have probability 1",
                    universe.display_menu(m)
                )));
            }
        }
        for (&menu, probs) in &table {
            if !menu.is_subset(full) {
                return Err(Error::invalid("menu outside the universe"));
            }
            if kind == DomainKind::Pairwise && menu.len() != 2 {
                return Err(Error::invalid(format!(
                    "pairwise domain cannot contain menu {}",
                    universe.display_menu(menu)
                )));
            }
            if probs.len() != menu.len() {
                return Err(Error::invalid(format!(
                    "menu {} has {} probabilities for {} members",
                    universe.display_menu(menu),
                    probs.len(),
                    menu.len()
                )));
            }
            if let Some(p) = probs.iter().find(|p| !in_unit_interval(p)) {
                return Err(Error::invalid(format!(
                    "probability {} outside [0,1] in menu {}",
                    format_rational(p),
                    universe.display_menu(menu)
                )));
            }
            let total: Rational = probs.iter().sum();
            if !total.is_one() {
                return Err(Error::invalid(format!(
                    "probabilities in menu {} sum to {}, not 1",
                    universe.display_menu(menu),
                    format_rational(&total)
                )));
            }
        }
        let expected = domain_menus(universe.len(), kind).count();
        if table.len() != expected {
            let missing = domain_menus(universe.len(), kind)
                .find(|m| !table.contains_key(m))
                .map(|m| universe.display_menu(m))
                .unwrap_or_default();
            return Err(Error::invalid(format!(
                "{kind} domain over {} alternatives needs {expected} menus, got {} (missing {missing})",
                universe.len(),
                table.len()
            )));
        }
        let menus = table
            .into_iter()
            .map(|(m, probs)| (m, Distribution::new(probs)))
            .collect();
        Ok(StochasticChoiceFunction {
            universe,
            kind,
            menus,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn kind(&self) -> DomainKind {
        self.kind
    }

    /// Number of alternatives.
    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    /// Stored (non-singleton) menus in canonical order.
    pub fn menus(&self) -> impl Iterator<Item = Menu> + '_ {
        self.menus.keys().copied()
    }

    pub fn contains_menu(&self, menu: Menu) -> bool {
        menu.len() == 1 || self.menus.contains_key(&menu)
    }

    /// `P(x, S)`.
    pub fn probability(&self, x: Alternative, menu: Menu) -> Result<Rational> {
        self.lookup(x, menu, |d, i| d.probs[i].clone())
    }

    /// `P*(x, S) = P(x, S) / max_ω P(ω, S)`.
    pub fn star(&self, x: Alternative, menu: Menu) -> Result<Rational> {
        self.lookup(x, menu, |d, i| d.stars[i].clone())
    }

    fn lookup(
        &self,
        x: Alternative,
        menu: Menu,
        pick: impl Fn(&Distribution, usize) -> Rational,
    ) -> Result<Rational> {
        let pos = menu.position(x).ok_or_else(|| {
            Error::domain(format!(
                "{} is not a member of {}",
                label_or_index(&self.universe, x),
                self.universe.display_menu(menu)
            ))
        })?;
        if menu.len() == 1 {
            return Ok(Rational::one());
        }
        let d = self.menus.get(&menu).ok_or_else(|| {
            Error::domain(format!(
                "menu {} is not in the domain",
                self.universe.display_menu(menu)
            ))
        })?;
        Ok(pick(d, pos))
    }

    /// Probabilities of a stored menu, aligned with its member order.
    pub fn probabilities(&self, menu: Menu) -> Option<&[Rational]> {
        self.menus.get(&menu).map(|d| d.probs.as_slice())
    }

    /// Normalized likelihoods of a stored menu, aligned with its member order.
    pub fn stars(&self, menu: Menu) -> Option<&[Rational]> {
        self.menus.get(&menu).map(|d| d.stars.as_slice())
    }

    pub(crate) fn star_ref(&self, x: Alternative, menu: Menu) -> &Rational {
        let d = &self.menus[&menu];
        &d.stars[menu.position(x).expect("member")]
    }

    /// `P(x, {x,y})` for distinct `x`, `y`.
    pub(crate) fn pair_prob(&self, x: Alternative, y: Alternative) -> &Rational {
        let m = Menu::pair(x, y);
        &self.menus[&m].probs[m.position(x).expect("member")]
    }

    /// `P*(x, {x,y})` for distinct `x`, `y`.
    pub(crate) fn pair_star(&self, x: Alternative, y: Alternative) -> &Rational {
        self.star_ref(x, Menu::pair(x, y))
    }

    /// Errors when the universe exceeds the cap for this domain kind.
    pub fn check_limits(&self, limits: &Limits) -> Result<()> {
        let (cap, what) = match self.kind {
            DomainKind::Full => (limits.max_full_universe, "full-domain universe size"),
            DomainKind::Pairwise => (limits.max_pairwise_universe, "pairwise-domain universe size"),
        };
        if self.len() > cap {
            return Err(Error::Capacity {
                what,
                actual: self.len(),
                limit: cap,
            });
        }
        Ok(())
    }

    /// `(menu, alternative, probability)` for every stored entry, including
    /// zero-probability members, in canonical order.
    pub fn rows(&self) -> impl Iterator<Item = (Menu, Alternative, &Rational)> + '_ {
        self.menus
            .iter()
            .flat_map(|(&m, d)| m.iter().zip(d.probs.iter()).map(move |(a, p)| (m, a, p)))
    }

    /// The restriction to two-element menus.
    pub fn restrict_to_pairwise(&self) -> StochasticChoiceFunction {
        StochasticChoiceFunction {
            universe: self.universe.clone(),
            kind: DomainKind::Pairwise,
            menus: self
                .menus
                .iter()
                .filter(|(m, _)| m.len() == 2)
                .map(|(&m, d)| (m, d.clone()))
                .collect(),
        }
    }

    /// Whether every probability is 0 or 1.
    pub fn is_deterministic(&self) -> bool {
        self.menus
            .values()
            .all(|d| d.probs.iter().all(|p| p.is_zero() || p.is_one()))
    }
}

fn label_or_index(u: &Universe, a: Alternative) -> String {
    if a.index() < u.len() {
        u.label(a).to_owned()
    } else {
        format!("#{}", a.index())
    }
}

fn check_structure(universe: &Universe, kind: DomainKind) -> Result<()> {
    if universe.len() < 2 {
        return Err(Error::invalid(
            "a stochastic choice function needs at least two alternatives",
        ));
    }
    if kind == DomainKind::Full && universe.len() > MAX_FULL_STORAGE {
        return Err(Error::Capacity {
            what: "full-domain universe size",
            actual: universe.len(),
            limit: MAX_FULL_STORAGE,
        });
    }
    Ok(())
}

/// The stored menus of a domain kind, in ascending bitmask order.
pub fn domain_menus(n: usize, kind: DomainKind) -> Box<dyn Iterator<Item = Menu>> {
    match kind {
        DomainKind::Full => Box::new(menus_of_size_at_least(n, 2)),
        DomainKind::Pairwise => Box::new(doubletons(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn xyz() -> Arc<Universe> {
        Arc::new(Universe::new(["x", "y", "z"]).unwrap())
    }

    #[test]
    fn full_domain_requires_every_menu() {
        let u = xyz();
        let m = u.menu(&["x", "y"]).unwrap();
        let err = StochasticChoiceFunction::new(
            u.clone(),
            DomainKind::Full,
            [(m, vec![(Alternative::new(0), rat(1, 1))])],
        )
        .unwrap_err();
        assert!(err.to_string().contains("needs 4 menus"), "{err}");
    }

    #[test]
    fn probabilities_must_sum_to_one() {
        let u = xyz();
        let err = StochasticChoiceFunction::from_fn(u, DomainKind::Pairwise, |m| {
            vec![rat(1, 2); m.len() - 1]
                .into_iter()
                .chain([rat(1, 3)])
                .collect()
        })
        .unwrap_err();
        assert!(err.to_string().contains("sum to 5/6"), "{err}");
    }

    #[test]
    fn rejects_foreign_alternative() {
        let u = xyz();
        let m = u.menu(&["x", "y"]).unwrap();
        let z = u.alternative("z").unwrap();
        let err =
            StochasticChoiceFunction::new(u, DomainKind::Pairwise, [(m, vec![(z, rat(1, 1))])]).unwrap_err();
        assert!(err.to_string().contains("not a member"));
    }

    #[test]
    fn zero_probabilities_are_legal() {
        let u = xyz();
        let p = StochasticChoiceFunction::from_fn(u.clone(), DomainKind::Full, |m| {
            let mut v = vec![rat(0, 1); m.len()];
            v[0] = rat(1, 1);
            v
        })
        .unwrap();
        assert!(p.is_deterministic());
        let x = u.alternative("x").unwrap();
        let y = u.alternative("y").unwrap();
        let xy = u.menu(&["x", "y"]).unwrap();
        assert_eq!(p.star(y, xy).unwrap(), rat(0, 1));
        assert_eq!(p.star(x, xy).unwrap(), rat(1, 1));
        assert_eq!(p.probability(x, Menu::singleton(x)).unwrap(), rat(1, 1));
    }

    #[test]
    fn unknown_menu_is_a_domain_error() {
        let u = xyz();
        let p =
            StochasticChoiceFunction::from_fn(u.clone(), DomainKind::Pairwise, |m| vec![rat(1, 2); m.len()])
                .unwrap();
        let x = u.alternative("x").unwrap();
        assert!(matches!(p.probability(x, u.full_menu()), Err(Error::Domain(_))));
        let y = u.alternative("y").unwrap();
        assert!(p.star(x, Menu::pair(y, u.alternative("z").unwrap())).is_err());
    }

    #[test]
    fn limits_are_checked_per_kind() {
        let u = Arc::new(Universe::new(["a", "b", "c", "d"]).unwrap());
        let p = StochasticChoiceFunction::from_fn(u, DomainKind::Full, |m| {
            vec![Rational::new(1.into(), (m.len() as i64).into()); m.len()]
        })
        .unwrap();
        assert!(p.check_limits(&Limits::default()).is_ok());
        assert!(p
            .check_limits(&Limits::default().with_max_universe(3))
            .unwrap_err()
            .is_capacity());
    }
}
