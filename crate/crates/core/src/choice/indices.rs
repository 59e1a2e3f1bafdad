use crate::choice::{is_rational, ChoiceCorrespondence, WeakOrder};
use crate::error::{Error, Result};
use crate::universe::Menu;

/// Whether `C = max(·, ≿)` for some complete preorder, by brute force over
/// all weak orders. `max_universe` caps the universe size.
pub fn is_totally_rational(c: &ChoiceCorrespondence, max_universe: usize) -> Result<bool> {
    let n = c.universe().len();
    if n > max_universe {
        return Err(Error::Capacity {
            what: "universe size for total rationality",
            actual: n,
            limit: max_universe,
        });
    }
    let entries: Vec<(Menu, Menu)> = c.entries().collect();
    Ok(WeakOrder::enumerate(n)
        .iter()
        .any(|w| entries.iter().all(|&(m, chosen)| w.maximum(m) == chosen)))
}

/// Houtman–Maks index: fewest menus whose removal leaves a rational
/// correspondence. Exact search by increasing cardinality.
pub fn houtman_maks(c: &ChoiceCorrespondence, max_menus: usize) -> Result<usize> {
    let m = c.domain_size();
    if m > max_menus {
        return Err(Error::Capacity {
            what: "correspondence domain size for Houtman-Maks",
            actual: m,
            limit: max_menus,
        });
    }
    if is_rational(c) {
        return Ok(0);
    }
    let domain: Vec<Menu> = c.domain().collect();
    for k in 1..=m {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let removed: Vec<Menu> = idx.iter().map(|&i| domain[i]).collect();
            if is_rational(&c.without_menus(&removed)) {
                return Ok(k);
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    // removing every menu leaves the vacuously rational empty correspondence
    Ok(m)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
