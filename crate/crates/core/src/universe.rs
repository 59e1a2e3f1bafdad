//! Alternatives, menus and the finite universe they live in.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest universe representable by a [`Menu`] bitmask.
pub const MAX_ALTERNATIVES: usize = 64;

/// Index of an alternative within its [`Universe`].
///
/// Indices follow the universe's canonical (sorted-label) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alternative(u8);

impl Alternative {
    pub fn new(index: usize) -> Self {
        assert!(index < MAX_ALTERNATIVES, "alternative index {index} out of range");
        Alternative(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    fn bit(self) -> u64 {
        1u64 << self.0
    }
}

/// A nonempty finite set of alternatives, stored as a bitmask.
///
/// Menus order lexicographically by their ascending member lists, so
/// `{x} < {x,y} < {x,y,z} < {x,z} < {y}`. Witness selection relies on this.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Menu(u64);

impl Menu {
    pub fn from_bits(bits: u64) -> Result<Self> {
        if bits == 0 {
            return Err(Error::invalid("menus must be nonempty"));
        }
        Ok(Menu(bits))
    }

    pub fn singleton(a: Alternative) -> Self {
        Menu(a.bit())
    }

    pub fn pair(a: Alternative, b: Alternative) -> Self {
        Menu(a.bit() | b.bit())
    }

    /// Builds a menu from alternatives; panics when the iterator is empty.
    pub fn of(members: impl IntoIterator<Item = Alternative>) -> Self {
        let bits = members.into_iter().fold(0u64, |acc, a| acc | a.bit());
        Menu::from_bits(bits).expect("menu must be nonempty")
    }

    /// The menu holding every alternative of a universe of size `n`.
    pub fn full(n: usize) -> Self {
        assert!((1..=MAX_ALTERNATIVES).contains(&n));
        Menu(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Menus are never empty; provided for API symmetry.
    pub fn is_empty(self) -> bool {
        false
    }

    pub fn contains(self, a: Alternative) -> bool {
        self.0 & a.bit() != 0
    }

    pub fn is_subset(self, other: Menu) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Menu) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn union(self, other: Menu) -> Menu {
        Menu(self.0 | other.0)
    }

    pub fn intersect(self, other: Menu) -> Option<Menu> {
        let bits = self.0 & other.0;
        (bits != 0).then_some(Menu(bits))
    }

    pub fn with(self, a: Alternative) -> Menu {
        Menu(self.0 | a.bit())
    }

    pub fn without(self, a: Alternative) -> Option<Menu> {
        let bits = self.0 & !a.bit();
        (bits != 0).then_some(Menu(bits))
    }

    /// Position of `a` among the menu's members in ascending order.
    pub fn position(self, a: Alternative) -> Option<usize> {
        self.contains(a)
            .then(|| (self.0 & (a.bit() - 1)).count_ones() as usize)
    }

    /// Members in ascending index order.
    pub fn iter(self) -> MenuIter {
        MenuIter(self.0)
    }

    pub fn first(self) -> Alternative {
        Alternative(self.0.trailing_zeros() as u8)
    }
}

impl Ord for Menu {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Menu {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl IntoIterator for Menu {
    type Item = Alternative;
    type IntoIter = MenuIter;

    fn into_iter(self) -> MenuIter {
        self.iter()
    }
}

#[derive(Debug, Clone)]
pub struct MenuIter(u64);

impl Iterator for MenuIter {
    type Item = Alternative;

    fn next(&mut self) -> Option<Alternative> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(Alternative(i as u8))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for MenuIter {}

/// All menus over `n` alternatives with at least `min_size` members, in
/// ascending bitmask order.
pub fn menus_of_size_at_least(n: usize, min_size: usize) -> impl Iterator<Item = Menu> {
    let full = Menu::full(n).bits();
    (1..=full)
        .filter(move |b| b.count_ones() as usize >= min_size)
        .map(Menu)
}

/// All two-element menus over `n` alternatives.
pub fn doubletons(n: usize) -> impl Iterator<Item = Menu> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| Menu::pair(Alternative::new(i), Alternative::new(j))))
}

/// Ordered triples of pairwise distinct alternatives, lexicographic.
pub fn distinct_triples(n: usize) -> impl Iterator<Item = (Alternative, Alternative, Alternative)> {
    (0..n).flat_map(move |x| {
        (0..n).flat_map(move |y| {
            (0..n)
                .filter(move |&z| x != y && y != z && x != z)
                .map(move |z| (Alternative::new(x), Alternative::new(y), Alternative::new(z)))
        })
    })
}

/// A finite set of labelled alternatives.
///
/// Labels are kept sorted, which fixes the canonical alternative order used for
/// iteration and witness selection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::invalid("universe must contain at least one alternative"));
        }
        if let Some(bad) = labels.iter().find(|l| l.trim().is_empty()) {
            return Err(Error::invalid(format!("empty alternative label {bad:?}")));
        }
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate alternative label {:?}", w[0])));
        }
        if labels.len() > MAX_ALTERNATIVES {
            return Err(Error::Capacity {
                what: "universe size",
                actual: labels.len(),
                limit: MAX_ALTERNATIVES,
            });
        }
        Ok(Universe { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: Alternative) -> &str {
        &self.labels[a.index()]
    }

    pub fn find(&self, label: &str) -> Option<Alternative> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .ok()
            .map(Alternative::new)
    }

    pub fn alternative(&self, label: &str) -> Result<Alternative> {
        self.find(label)
            .ok_or_else(|| Error::domain(format!("unknown alternative {label:?}")))
    }

    pub fn alternatives(&self) -> impl Iterator<Item = Alternative> + '_ {
        (0..self.labels.len()).map(Alternative::new)
    }

    pub fn full_menu(&self) -> Menu {
        Menu::full(self.len())
    }

    pub fn menu<S: AsRef<str>>(&self, labels: &[S]) -> Result<Menu> {
        let mut bits = 0u64;
        for l in labels {
            bits |= self.alternative(l.as_ref())?.bit();
        }
        Menu::from_bits(bits)
    }

    pub fn menu_labels(&self, menu: Menu) -> Vec<&str> {
        menu.iter().map(|a| self.label(a)).collect()
    }

    /// `{x,y,z}` rendering of a menu.
    pub fn display_menu(&self, menu: Menu) -> String {
        format!("{{{}}}", self.menu_labels(menu).join(","))
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(","))
    }
}
