//! The irrationality set `Λ(P)`, the index `I_rat`, the comparative ordering
//! `⊵_rat`, and the classical stochastic-transitivity predicates.

mod compare;
mod decomposition;
mod sets;
mod transitivity;

pub use compare::{compare, compare_many, ComparisonResult, PartialOrderSummary, Verdict};
pub use decomposition::{
    lambda_decomposition, lambda_decomposition_with, rationality_index, DecompositionOptions,
    LambdaDecomposition, Witness,
};
pub use sets::{chernoff_set, chernoff_set_exhaustive, condorcet_set, st_set};
pub use transitivity::{
    classify_transitivity, is_selective_contractions, is_selective_expansions, triangular_condition,
    TransitivityFlags,
};
