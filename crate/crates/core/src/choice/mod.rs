//! Deterministic choice correspondences and their rationality.
//!
//! A correspondence is rational when some preorder `≿` gives `C(S) =
//! MAX(S, ≿)` on every menu. That is decided through the Chernoff, Condorcet
//! and No-Cycle axioms, with quantifiers ranging over the menus actually
//! present in the correspondence's domain.

mod axioms;
mod indices;
mod preorder;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::universe::{Menu, Universe};

pub use axioms::{check_axioms, is_rational, Axiom, AxiomReport, Violation};
pub use indices::{houtman_maks, is_totally_rational};
pub use preorder::{Preorder, WeakOrder};

/// A map from menus to nonempty chosen submenus.
///
/// Singleton menus are implicit (`C({x}) = {x}`) and never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoiceCorrespondence {
    universe: Arc<Universe>,
    choices: BTreeMap<Menu, Menu>,
}

impl ChoiceCorrespondence {
    pub fn new(universe: Arc<Universe>, choices: impl IntoIterator<Item = (Menu, Menu)>) -> Result<Self> {
        let full = universe.full_menu();
        let mut map = BTreeMap::new();
        for (menu, chosen) in choices {
            if !menu.is_subset(full) {
                return Err(Error::invalid(format!(
                    "menu {:#x} is outside the universe",
                    menu.bits()
                )));
            }
            if !chosen.is_subset(menu) {
                return Err(Error::invalid(format!(
                    "choice {} is not a subset of menu {}",
                    universe.display_menu(chosen),
                    universe.display_menu(menu)
                )));
            }
            if menu.len() == 1 {
                continue;
            }
            if map.insert(menu, chosen).is_some() {
                return Err(Error::invalid(format!(
                    "menu {} listed twice",
                    universe.display_menu(menu)
                )));
            }
        }
        Ok(ChoiceCorrespondence {
            universe,
            choices: map,
        })
    }

    /// `MAX(·, ≿)` on the given menus.
    pub fn rationalized_by(
        universe: Arc<Universe>,
        preorder: &Preorder,
        menus: impl IntoIterator<Item = Menu>,
    ) -> Self {
        let choices = menus
            .into_iter()
            .filter(|m| m.len() > 1)
            .map(|m| (m, preorder.maximal(m)))
            .collect();
        ChoiceCorrespondence { universe, choices }
    }

    pub(crate) fn from_map(universe: Arc<Universe>, choices: BTreeMap<Menu, Menu>) -> Self {
        ChoiceCorrespondence { universe, choices }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// `C(S)`, or `None` when `S` is outside the domain. Singletons map to
    /// themselves.
    pub fn get(&self, menu: Menu) -> Option<Menu> {
        if menu.len() == 1 {
            return Some(menu);
        }
        self.choices.get(&menu).copied()
    }

    /// Stored menus in canonical order.
    pub fn domain(&self) -> impl Iterator<Item = Menu> + '_ {
        self.choices.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Menu, Menu)> + '_ {
        self.choices.iter().map(|(&m, &c)| (m, c))
    }

    pub fn domain_size(&self) -> usize {
        self.choices.len()
    }

    /// The correspondence with the given menus removed from its domain.
    pub fn without_menus(&self, removed: &[Menu]) -> Self {
        let choices = self
            .choices
            .iter()
            .filter(|(m, _)| !removed.contains(m))
            .map(|(&m, &c)| (m, c))
            .collect();
        ChoiceCorrespondence {
            universe: self.universe.clone(),
            choices,
        }
    }

    pub fn to_document(&self) -> CorrespondenceDocument {
        CorrespondenceDocument {
            menus: self
                .choices
                .iter()
                .map(|(&m, &c)| MenuChoice {
                    menu: labels(&self.universe, m),
                    chosen: labels(&self.universe, c),
                })
                .collect(),
        }
    }

    /// Builds a correspondence from its JSON document. The universe is the
    /// set of labels mentioned in any menu.
    pub fn from_document(doc: &CorrespondenceDocument) -> Result<Self> {
        let mut all: Vec<&str> = doc
            .menus
            .iter()
            .flat_map(|mc| mc.menu.iter().map(String::as_str))
            .collect();
        all.sort_unstable();
        all.dedup();
        let universe = Arc::new(Universe::new(all)?);
        let mut entries = Vec::with_capacity(doc.menus.len());
        for mc in &doc.menus {
            let menu = universe.menu(&mc.menu)?;
            if mc.chosen.is_empty() {
                return Err(Error::invalid(format!(
                    "empty choice for menu {}",
                    universe.display_menu(menu)
                )));
            }
            let chosen = universe.menu(&mc.chosen)?;
            entries.push((menu, chosen));
        }
        Self::new(universe, entries)
    }
}

fn labels(universe: &Universe, m: Menu) -> Vec<String> {
    universe.menu_labels(m).into_iter().map(str::to_owned).collect()
}

/// JSON form: `{"menus": [{"menu": [labels], "chosen": [labels]}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceDocument {
    pub menus: Vec<MenuChoice>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MenuChoice {
    pub menu: Vec<String>,
    pub chosen: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_choice_outside_menu() {
        let u = Arc::new(Universe::new(["x", "y", "z"]).unwrap());
        let m = u.menu(&["x", "y"]).unwrap();
        let c = u.menu(&["z"]).unwrap();
        assert!(ChoiceCorrespondence::new(u, [(m, c)]).is_err());
    }

    #[test]
    fn json_document_round_trip() {
        let json = r#"{"menus":[{"menu":["x","y"],"chosen":["x"]},{"menu":["y","z"],"chosen":["y","z"]}]}"#;
        let doc: CorrespondenceDocument = serde_json::from_str(json).unwrap();
        let c = ChoiceCorrespondence::from_document(&doc).unwrap();
        assert_eq!(c.domain_size(), 2);
        assert_eq!(serde_json::to_string(&c.to_document()).unwrap(), json);
    }

    #[test]
    fn empty_choice_rejected() {
        let json = r#"{"menus":[{"menu":["x","y"],"chosen":[]}]}"#;
        let doc: CorrespondenceDocument = serde_json::from_str(json).unwrap();
        assert!(ChoiceCorrespondence::from_document(&doc).is_err());
    }
}
