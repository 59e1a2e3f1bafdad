use std::fmt;

use crate::choice::ChoiceCorrespondence;
use crate::universe::{Alternative, Menu, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Chernoff,
    Condorcet,
    NoCycle,
}

impl Axiom {
    /// Name of the threshold-level counterpart used for stochastic choice:
    /// No-Cycle of `C_{P,λ}` corresponds to λ-stochastic transitivity.
    pub fn stochastic_name(self) -> &'static str {
        match self {
            Axiom::Chernoff => "Chernoff",
            Axiom::Condorcet => "Condorcet",
            Axiom::NoCycle => "Transitivity",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Chernoff => "Chernoff",
            Axiom::Condorcet => "Condorcet",
            Axiom::NoCycle => "No-Cycle",
        })
    }
}

/// A concrete violating tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Violation {
    /// `x ∈ C(T) ∩ S` but `x ∉ C(S)` for `S ⊂ T`.
    Chernoff {
        smaller: Menu,
        larger: Menu,
        alternative: Alternative,
    },
    /// `x ∈ C{x,y}` for every stored pair in `S`, yet `x ∉ C(S)`.
    Condorcet { menu: Menu, alternative: Alternative },
    /// `{x} = C{x,y}` and `{y} = C{y,z}` but `C{x,z} ≠ {x}`.
    NoCycle {
        x: Alternative,
        y: Alternative,
        z: Alternative,
    },
}

impl Violation {
    pub fn axiom(&self) -> Axiom {
        match self {
            Violation::Chernoff { .. } => Axiom::Chernoff,
            Violation::Condorcet { .. } => Axiom::Condorcet,
            Violation::NoCycle { .. } => Axiom::NoCycle,
        }
    }

    /// The tuple in label form, e.g. `({x,y,z}, y)` or `(x,y,z)`.
    pub fn describe(&self, u: &Universe) -> String {
        match *self {
            Violation::Chernoff {
                smaller,
                larger,
                alternative,
            } => format!(
                "({}, {}, {})",
                u.display_menu(smaller),
                u.display_menu(larger),
                u.label(alternative)
            ),
            Violation::Condorcet { menu, alternative } => {
                format!("({}, {})", u.display_menu(menu), u.label(alternative))
            }
            Violation::NoCycle { x, y, z } => {
                format!("({},{},{})", u.label(x), u.label(y), u.label(z))
            }
        }
    }
}

/// Per-axiom outcome; `None` means the axiom holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub chernoff: Option<Violation>,
    pub condorcet: Option<Violation>,
    pub no_cycle: Option<Violation>,
}

impl AxiomReport {
    pub fn is_rational(&self) -> bool {
        self.chernoff.is_none() && self.condorcet.is_none() && self.no_cycle.is_none()
    }

    /// Violations in axiom order.
    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        [&self.chernoff, &self.condorcet, &self.no_cycle]
            .into_iter()
            .flatten()
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations().next()
    }
}

/// Checks all three axioms, reporting the lexicographically least violating
/// tuple for each.
pub fn check_axioms(c: &ChoiceCorrespondence) -> AxiomReport {
    AxiomReport {
        chernoff: chernoff_violation(c),
        condorcet: condorcet_violation(c),
        no_cycle: no_cycle_violation(c),
    }
}

/// Rational iff Chernoff, Condorcet and No-Cycle all hold on the domain.
pub fn is_rational(c: &ChoiceCorrespondence) -> bool {
    chernoff_violation(c).is_none() && condorcet_violation(c).is_none() && no_cycle_violation(c).is_none()
}

fn chernoff_violation(c: &ChoiceCorrespondence) -> Option<Violation> {
    for (small, c_small) in c.entries() {
        for (large, c_large) in c.entries() {
            if !small.is_proper_subset(large) {
                continue;
            }
            let bad = c_large.bits() & small.bits() & !c_small.bits();
            if bad != 0 {
                return Some(Violation::Chernoff {
                    smaller: small,
                    larger: large,
                    alternative: Alternative::new(bad.trailing_zeros() as usize),
                });
            }
        }
    }
    None
}

fn condorcet_violation(c: &ChoiceCorrespondence) -> Option<Violation> {
    for (menu, chosen) in c.entries() {
        if menu.len() < 3 {
            continue;
        }
        for x in menu.iter() {
            if chosen.contains(x) {
                continue;
            }
            let wins_all_pairs = menu.iter().filter(|&y| y != x).all(|y| {
                c.get(Menu::pair(x, y))
                    .is_none_or(|pair_choice| pair_choice.contains(x))
            });
            if wins_all_pairs {
                return Some(Violation::Condorcet { menu, alternative: x });
            }
        }
    }
    None
}

fn no_cycle_violation(c: &ChoiceCorrespondence) -> Option<Violation> {
    let n = c.universe().len();
    let strictly = |a: Alternative, b: Alternative| c.get(Menu::pair(a, b)) == Some(Menu::singleton(a));
    for (x, y, z) in crate::universe::distinct_triples(n) {
        if !strictly(x, y) || !strictly(y, z) {
            continue;
        }
        match c.get(Menu::pair(x, z)) {
            Some(chosen) if chosen != Menu::singleton(x) => return Some(Violation::NoCycle { x, y, z }),
            _ => {}
        }
    }
    None
}
