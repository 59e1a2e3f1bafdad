//! JSON model descriptions, as consumed by the `model` command.
//!
//! Every number is a rational string (`"2/3"`, `"0.8"`, `"5"`) or a JSON
//! integer; floating-point literals are rejected so nothing is rounded.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::choice::Preorder;
use crate::error::{Error, Result};
use crate::interval::IntervalUnion;
use crate::models::{
    drum, drum_lambda_closed_form, general_luce, luce, mum_pairwise, random_scf, tremble,
    tremble_index_closed_form, tremble_lambda_closed_form, two_stage_luce, uniform_drum, Metric,
    RandomUtilityModel, ResponseTable, Utility,
};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::scf::{DomainKind, StochasticChoiceFunction};
use crate::universe::{Menu, Universe};

/// A number written exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Text(String),
    Integer(i64),
}

impl Number {
    pub fn value(&self) -> Result<Rational> {
        match self {
            Number::Text(s) => parse_rational(s),
            Number::Integer(i) => Ok(Rational::from_integer((*i).into())),
        }
    }
}

impl From<&Rational> for Number {
    fn from(r: &Rational) -> Self {
        Number::Text(format_rational(r))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Constraint {
    pub menu: Vec<String>,
    pub allowed: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MenuWeight {
    pub menu: Vec<String>,
    pub theta: Number,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub utility: BTreeMap<String, Number>,
    pub weight: Number,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Distance {
    pub a: String,
    pub b: String,
    pub d: Number,
}

/// A model with its parameters. Utilities map labels to values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModelSpec {
    Luce {
        alternatives: Vec<String>,
        utility: BTreeMap<String, Number>,
    },
    /// Menus without an entry in `constraints` are unconstrained.
    GeneralLuce {
        alternatives: Vec<String>,
        utility: BTreeMap<String, Number>,
        constraints: Vec<Constraint>,
    },
    /// `order` lists strict pairs `[better, worse]`; the partial order is
    /// their transitive closure.
    TwoStageLuce {
        alternatives: Vec<String>,
        utility: BTreeMap<String, Number>,
        order: Vec<[String; 2]>,
    },
    UniformDrum {
        alternatives: Vec<String>,
        u: BTreeMap<String, Number>,
        v: BTreeMap<String, Number>,
        theta: Number,
    },
    Drum {
        alternatives: Vec<String>,
        u: BTreeMap<String, Number>,
        v: BTreeMap<String, Number>,
        theta: Vec<MenuWeight>,
    },
    Rum {
        alternatives: Vec<String>,
        components: Vec<Component>,
    },
    Tremble {
        alternatives: Vec<String>,
        utility: BTreeMap<String, Number>,
        alpha: Number,
    },
    /// Pairwise moderate utility model. Without `distances` every pair is at
    /// distance 1. `response` lists `[t, F(t)]` samples.
    MumPairwise {
        alternatives: Vec<String>,
        utility: BTreeMap<String, Number>,
        #[serde(default)]
        distances: Option<Vec<Distance>>,
        response: Vec<[Number; 2]>,
    },
    /// A seeded random function; the CLI `--seed` flag overrides `seed`.
    Random {
        alternatives: Vec<String>,
        denominator_bound: u64,
        #[serde(default = "default_domain")]
        domain: DomainKind,
        #[serde(default)]
        seed: u64,
    },
}

fn default_domain() -> DomainKind {
    DomainKind::Full
}

/// A generated function plus whatever the model predicts in closed form.
#[derive(Debug, Clone)]
pub struct GeneratedModel {
    pub scf: StochasticChoiceFunction,
    pub expected_lambda: Option<IntervalUnion>,
    pub expected_index: Option<Rational>,
    /// For 2-stage Luce models: whether `u` increases along the order.
    pub is_proper: Option<bool>,
}

impl GeneratedModel {
    fn plain(scf: StochasticChoiceFunction) -> Self {
        GeneratedModel {
            scf,
            expected_lambda: None,
            expected_index: None,
            is_proper: None,
        }
    }
}

fn utility(universe: &Universe, map: &BTreeMap<String, Number>) -> Result<Utility> {
    let entries = map
        .iter()
        .map(|(k, v)| Ok((k.as_str(), v.value()?)))
        .collect::<Result<Vec<_>>>()?;
    Utility::from_labels(universe, &entries)
}

impl ModelSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }

    pub fn alternatives(&self) -> &[String] {
        match self {
            ModelSpec::Luce { alternatives, .. }
            | ModelSpec::GeneralLuce { alternatives, .. }
            | ModelSpec::TwoStageLuce { alternatives, .. }
            | ModelSpec::UniformDrum { alternatives, .. }
            | ModelSpec::Drum { alternatives, .. }
            | ModelSpec::Rum { alternatives, .. }
            | ModelSpec::Tremble { alternatives, .. }
            | ModelSpec::MumPairwise { alternatives, .. }
            | ModelSpec::Random { alternatives, .. } => alternatives,
        }
    }

    /// Builds the function. `seed` replaces the seed of a random spec.
    pub fn generate(&self, seed: Option<u64>) -> Result<GeneratedModel> {
        let universe = Arc::new(Universe::new(self.alternatives())?);
        let u = universe.clone();
        Ok(match self {
            ModelSpec::Luce { utility: w, .. } => GeneratedModel::plain(luce(u, &utility(&universe, w)?)?),
            ModelSpec::GeneralLuce {
                utility: w,
                constraints,
                ..
            } => {
                let mut gamma: BTreeMap<Menu, Menu> = BTreeMap::new();
                for c in constraints {
                    let m = universe.menu(&c.menu)?;
                    if gamma.insert(m, universe.menu(&c.allowed)?).is_some() {
                        return Err(Error::invalid(format!(
                            "constraint for {} given twice",
                            universe.display_menu(m)
                        )));
                    }
                }
                let util = utility(&universe, w)?;
                GeneratedModel::plain(general_luce(u, &util, |m| gamma.get(&m).copied().unwrap_or(m))?)
            }
            ModelSpec::TwoStageLuce {
                utility: w, order, ..
            } => {
                let pairs = order
                    .iter()
                    .map(|[a, b]| Ok((universe.alternative(a)?, universe.alternative(b)?)))
                    .collect::<Result<Vec<_>>>()?;
                let t = two_stage_luce(
                    u,
                    &utility(&universe, w)?,
                    &Preorder::closure(universe.len(), &pairs),
                )?;
                GeneratedModel {
                    expected_lambda: t.is_proper.then(IntervalUnion::empty),
                    is_proper: Some(t.is_proper),
                    ..GeneratedModel::plain(t.scf)
                }
            }
            ModelSpec::UniformDrum {
                u: fu, v: fv, theta, ..
            } => {
                let (a, b, t) = (utility(&universe, fu)?, utility(&universe, fv)?, theta.value()?);
                let scf = uniform_drum(u, &a, &b, &t)?;
                GeneratedModel {
                    expected_lambda: Some(drum_lambda_closed_form(&a, &b, &t)?),
                    ..GeneratedModel::plain(scf)
                }
            }
            ModelSpec::Drum {
                u: fu, v: fv, theta, ..
            } => {
                let mut map = BTreeMap::new();
                for w in theta {
                    let m = universe.menu(&w.menu)?;
                    if map.insert(m, w.theta.value()?).is_some() {
                        return Err(Error::invalid(format!(
                            "θ for {} given twice",
                            universe.display_menu(m)
                        )));
                    }
                }
                GeneratedModel::plain(drum(u, &utility(&universe, fu)?, &utility(&universe, fv)?, &map)?)
            }
            ModelSpec::Rum { components, .. } => {
                let comps = components
                    .iter()
                    .map(|c| Ok((utility(&universe, &c.utility)?, c.weight.value()?)))
                    .collect::<Result<Vec<_>>>()?;
                GeneratedModel::plain(RandomUtilityModel::new(u, comps)?.scf()?)
            }
            ModelSpec::Tremble {
                utility: w, alpha, ..
            } => {
                let a = alpha.value()?;
                let scf = tremble(u, &utility(&universe, w)?, &a)?;
                let k = universe.len();
                GeneratedModel {
                    expected_lambda: (k >= 3).then(|| tremble_lambda_closed_form(k, &a)).transpose()?,
                    expected_index: (k >= 3).then(|| tremble_index_closed_form(k, &a)).transpose()?,
                    ..GeneratedModel::plain(scf)
                }
            }
            ModelSpec::MumPairwise {
                utility: w,
                distances,
                response,
                ..
            } => {
                let metric = match distances {
                    None => Metric::discrete(universe.len()),
                    Some(list) => {
                        let n = universe.len();
                        let mut rows = vec![vec![None; n]; n];
                        for (i, row) in rows.iter_mut().enumerate() {
                            row[i] = Some(Rational::from_integer(0.into()));
                        }
                        for e in list {
                            let (a, b) = (
                                universe.alternative(&e.a)?.index(),
                                universe.alternative(&e.b)?.index(),
                            );
                            let d = e.d.value()?;
                            rows[a][b] = Some(d.clone());
                            rows[b][a] = Some(d);
                        }
                        let rows = rows
                            .into_iter()
                            .map(|r| r.into_iter().collect::<Option<Vec<_>>>())
                            .collect::<Option<Vec<_>>>()
                            .ok_or_else(|| Error::invalid("distances must cover every pair"))?;
                        Metric::new(rows)?
                    }
                };
                let table = ResponseTable::new(
                    response
                        .iter()
                        .map(|[t, f]| Ok((t.value()?, f.value()?)))
                        .collect::<Result<Vec<_>>>()?,
                )?;
                let scf = mum_pairwise(u, &utility(&universe, w)?, &metric, &table)?;
                GeneratedModel {
                    expected_lambda: Some(IntervalUnion::empty()),
                    ..GeneratedModel::plain(scf)
                }
            }
            ModelSpec::Random {
                denominator_bound,
                domain,
                seed: own,
                ..
            } => GeneratedModel::plain(random_scf(seed.unwrap_or(*own), u, *denominator_bound, *domain)?),
        })
    }
}
