//! Rationality measurement for stochastic choice functions.
//!
//! A stochastic choice function assigns an exact probability distribution to
//! every menu of a finite set of alternatives. Thresholding the normalized
//! likelihood `P*(x,S) = P(x,S) / max P(·,S)` at a level `λ` yields a
//! deterministic choice correspondence `C_{P,λ}`; the function is called
//! λ-rational when that correspondence is rationalized by a preorder.
//!
//! This crate computes the set `Λ(P)` of levels at which rationality fails as an
//! exact union of half-open intervals, the index `I_rat = 1 − Leb(Λ(P))`, and
//! the comparative ordering induced by inclusion of these sets. It also ships
//! generators for the standard random-choice models with their closed-form
//! answers, baseline comparators, and dataset/report plumbing for the CLI.
//!
//! All analysis is carried out in exact rational arithmetic.

pub mod choice;
pub mod comparators;
pub mod interval;
pub mod io;
pub mod limits;
pub mod measure;
pub mod models;
pub mod rational;
pub mod scf;
pub mod universe;

mod error;

pub use choice::{AxiomReport, ChoiceCorrespondence, Preorder, Violation, WeakOrder};
pub use error::{Error, Result};
pub use interval::IntervalUnion;
pub use limits::Limits;
pub use measure::{
    compare, compare_many, lambda_decomposition, rationality_index, ComparisonResult, LambdaDecomposition,
    Verdict,
};
pub use rational::Rational;
pub use scf::{DomainKind, StochasticChoiceFunction};
pub use universe::{Alternative, Menu, Universe};
