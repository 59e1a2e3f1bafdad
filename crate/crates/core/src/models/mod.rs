//! Random-choice model generators, their consistency predicates and
//! closed-form answers, and a seeded random instance generator.

mod luce;
mod mum;
mod random;
mod rum;
mod spec;
mod tremble;
mod utility;

pub use luce::{general_luce, luce, two_stage_luce, TwoStageLuce};
pub use mum::{mum_pairwise, Metric, ResponseTable};
pub use random::{indexed_universe, random_scf, SeededRng};
pub use rum::{
    consistent_over_ntuples, consistent_over_triplets, consistent_with_over_triplets, drum,
    drum_lambda_closed_form, leading_order_preserved, uniform_drum, RandomUtilityModel,
};
pub use spec::{Component, Constraint, Distance, GeneratedModel, MenuWeight, ModelSpec, Number};
pub use tremble::{tremble, tremble_index_closed_form, tremble_lambda_closed_form};
pub use utility::Utility;
