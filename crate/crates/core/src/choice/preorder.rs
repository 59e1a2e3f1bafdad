use crate::error::{Error, Result};
use crate::universe::{Alternative, Menu};

/// A reflexive, transitive relation `≿` on `n` alternatives.
///
/// `weakly_prefers(a, b)` reads `a ≿ b`. The relation need not be complete.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    n: usize,
    // row-major: rel[a * n + b] is a ≿ b
    rel: Vec<bool>,
}

impl Preorder {
    /// Validates an explicit relation matrix (row-major, `rel[a*n+b]` is `a ≿ b`).
    pub fn from_matrix(n: usize, rel: Vec<bool>) -> Result<Self> {
        if rel.len() != n * n {
            return Err(Error::invalid(format!(
                "relation matrix has {} entries, expected {}",
                rel.len(),
                n * n
            )));
        }
        for a in 0..n {
            if !rel[a * n + a] {
                return Err(Error::invalid(format!("relation is not reflexive at {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !rel[a * n + b] {
                    continue;
                }
                for c in 0..n {
                    if rel[b * n + c] && !rel[a * n + c] {
                        return Err(Error::invalid(format!(
                            "relation is not transitive: {a}≿{b}, {b}≿{c} but not {a}≿{c}"
                        )));
                    }
                }
            }
        }
        Ok(Preorder { n, rel })
    }

    /// The smallest preorder containing the given `a ≿ b` pairs.
    pub fn closure(n: usize, pairs: &[(Alternative, Alternative)]) -> Self {
        let mut rel = vec![false; n * n];
        for a in 0..n {
            rel[a * n + a] = true;
        }
        for &(a, b) in pairs {
            rel[a.index() * n + b.index()] = true;
        }
        // Warshall
        for k in 0..n {
            for a in 0..n {
                if !rel[a * n + k] {
                    continue;
                }
                for b in 0..n {
                    if rel[k * n + b] {
                        rel[a * n + b] = true;
                    }
                }
            }
        }
        Preorder { n, rel }
    }

    /// The equality relation: nothing is comparable to anything else.
    pub fn identity(n: usize) -> Self {
        Self::closure(n, &[])
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn weakly_prefers(&self, a: Alternative, b: Alternative) -> bool {
        self.rel[a.index() * self.n + b.index()]
    }

    pub fn strictly_prefers(&self, a: Alternative, b: Alternative) -> bool {
        self.weakly_prefers(a, b) && !self.weakly_prefers(b, a)
    }

    pub fn indifferent(&self, a: Alternative, b: Alternative) -> bool {
        self.weakly_prefers(a, b) && self.weakly_prefers(b, a)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.rel[a * self.n + b] || self.rel[b * self.n + a]))
    }

    /// Antisymmetric as well, i.e. a partial order.
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n)
            .all(|a| (0..self.n).all(|b| a == b || !(self.rel[a * self.n + b] && self.rel[b * self.n + a])))
    }

    /// `MAX(S, ≿)`: members of `S` not strictly beaten by another member.
    pub fn maximal(&self, menu: Menu) -> Menu {
        Menu::of(
            menu.iter()
                .filter(|&x| !menu.iter().any(|y| self.strictly_prefers(y, x))),
        )
    }
}

/// A complete preorder, stored as indifference levels (higher is better).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeakOrder {
    levels: Vec<u8>,
}

impl WeakOrder {
    pub fn from_levels(levels: Vec<u8>) -> Self {
        WeakOrder { levels }
    }

    pub fn level(&self, a: Alternative) -> u8 {
        self.levels[a.index()]
    }

    /// `max(S, ≿)`: the members on the top level present in `S`.
    pub fn maximum(&self, menu: Menu) -> Menu {
        let top = menu
            .iter()
            .map(|a| self.level(a))
            .max()
            .expect("menus are nonempty");
        Menu::of(menu.iter().filter(|&a| self.level(a) == top))
    }

    pub fn to_preorder(&self) -> Preorder {
        let n = self.levels.len();
        let rel = (0..n * n)
            .map(|k| self.levels[k / n] >= self.levels[k % n])
            .collect();
        Preorder { n, rel }
    }

    /// Every complete preorder on `n` alternatives (the ordered Bell number
    /// of them), i.e. every ordered partition into indifference classes.
    pub fn enumerate(n: usize) -> Vec<WeakOrder> {
        let mut out = Vec::new();
        let mut levels = vec![0u8; n];
        fn rec(i: usize, n: usize, levels: &mut Vec<u8>, out: &mut Vec<WeakOrder>) {
            if i == n {
                // keep only surjections onto 0..k so each partition appears once
                let k = levels.iter().copied().max().map_or(0, |m| m as usize + 1);
                let mut seen = vec![false; k];
                for &l in levels.iter() {
                    seen[l as usize] = true;
                }
                if seen.iter().all(|&s| s) {
                    out.push(WeakOrder {
                        levels: levels.clone(),
                    });
                }
                return;
            }
            for l in 0..n as u8 {
                levels[i] = l;
                rec(i + 1, n, levels, out);
            }
        }
        if n == 0 {
            return vec![WeakOrder { levels }];
        }
        rec(0, n, &mut levels, &mut out);
        out
    }
}
