/// Size caps for the exponential enumerations in the analysis pipeline.
///
/// Exceeding a cap is reported as [`crate::Error::Capacity`]; nothing falls
/// back to an approximation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest full-domain universe analysed (`2^n − n − 1` stored menus).
    pub max_full_universe: usize,
    /// Largest pairwise-domain universe analysed.
    pub max_pairwise_universe: usize,
    /// Largest correspondence domain searched exactly by Houtman–Maks.
    pub max_houtman_maks_menus: usize,
    /// Largest universe for the swap index.
    pub max_swap_universe: usize,
    /// Largest universe for total-rationality brute force over weak orders.
    pub max_total_rationality_universe: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_full_universe: 12,
            max_pairwise_universe: 64,
            max_houtman_maks_menus: 20,
            max_swap_universe: 9,
            max_total_rationality_universe: 6,
        }
    }
}

impl Limits {
    /// Overrides the universe caps (full and pairwise) at once, as the CLI's
    /// `--max-universe` flag does.
    pub fn with_max_universe(mut self, n: usize) -> Self {
        self.max_full_universe = n;
        self.max_pairwise_universe = n.min(crate::universe::MAX_ALTERNATIVES);
        self
    }
}
