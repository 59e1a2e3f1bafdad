use std::collections::BTreeSet;

use num::Signed;

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};
use crate::universe::{Alternative, Menu, Universe};

/// A real-valued map on the universe, stored in alternative order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Utility {
    values: Vec<Rational>,
}

impl Utility {
    pub fn new(values: Vec<Rational>) -> Self {
        Utility { values }
    }

    /// Values by label; every label of the universe must be assigned once.
    pub fn from_labels<S: AsRef<str>>(universe: &Universe, entries: &[(S, Rational)]) -> Result<Self> {
        let mut values: Vec<Option<Rational>> = vec![None; universe.len()];
        for (label, v) in entries {
            let a = universe.alternative(label.as_ref())?;
            if values[a.index()].replace(v.clone()).is_some() {
                return Err(Error::invalid(format!(
                    "utility of {} given twice",
                    label.as_ref()
                )));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    Error::invalid(format!(
                        "utility of {} is missing",
                        universe.label(Alternative::new(i))
                    ))
                })
            })
            .collect::<Result<_>>()?;
        Ok(Utility { values })
    }

    /// A utility ranking the given labels from best to worst.
    pub fn from_ranking<S: AsRef<str>>(universe: &Universe, best_first: &[S]) -> Result<Self> {
        let n = best_first.len() as i64;
        let entries: Vec<(&str, Rational)> = best_first
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_ref(), Rational::from_integer((n - i as i64).into())))
            .collect();
        Self::from_labels(universe, &entries)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, a: Alternative) -> &Rational {
        &self.values[a.index()]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_injective(&self) -> bool {
        self.values.iter().collect::<BTreeSet<_>>().len() == self.values.len()
    }

    /// Errors unless the utility covers exactly `n` alternatives.
    pub(crate) fn check_len(&self, n: usize, name: &str) -> Result<()> {
        if self.values.len() != n {
            return Err(Error::invalid(format!(
                "{name} assigns {} values for {n} alternatives",
                self.values.len()
            )));
        }
        Ok(())
    }

    pub(crate) fn require_injective(&self, universe: &Universe, name: &str) -> Result<()> {
        for i in 0..self.values.len() {
            for j in i + 1..self.values.len() {
                if self.values[i] == self.values[j] {
                    return Err(Error::invalid(format!(
                        "{name} is not injective: {} and {} both have utility {}",
                        universe.label(Alternative::new(i)),
                        universe.label(Alternative::new(j)),
                        format_rational(&self.values[i])
                    )));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn require_positive(&self, universe: &Universe, name: &str) -> Result<()> {
        if let Some(i) = self.values.iter().position(|v| !v.is_positive()) {
            return Err(Error::invalid(format!(
                "{name} must be strictly positive, {} has {}",
                universe.label(Alternative::new(i)),
                format_rational(&self.values[i])
            )));
        }
        Ok(())
    }

    /// The unique maximizer on `menu`; the utility must be injective.
    pub fn argmax(&self, menu: Menu) -> Alternative {
        menu.iter()
            .max_by(|a, b| self.value(*a).cmp(self.value(*b)))
            .expect("menus are nonempty")
    }

    /// `u(a) > u(b)`.
    pub fn prefers(&self, a: Alternative, b: Alternative) -> bool {
        self.value(a) > self.value(b)
    }
}
