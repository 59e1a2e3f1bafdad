use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::Arc;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::Number;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::scf::{DomainKind, StochasticChoiceFunction};
use crate::universe::{Alternative, Menu, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DatasetFormat {
    Csv,
    Json,
}

impl DatasetFormat {
    /// `.json` files are JSON, everything else CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => DatasetFormat::Json,
            _ => DatasetFormat::Csv,
        }
    }
}

/// Raw observations for one menu: either choice counts or probabilities.
#[derive(Debug, Clone, PartialEq, Eq)]
enum MenuData {
    Counts(BTreeMap<String, u64>),
    Probs(BTreeMap<String, Rational>),
}

/// Choice observations grouped by subject and menu. Menus are kept as sorted
/// label lists.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChoiceDataset {
    subjects: BTreeMap<String, BTreeMap<Vec<String>, MenuData>>,
}

enum Quantity {
    Count(u64),
    Prob(Rational),
}

/// One row of the JSON dataset form.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonRow {
    subject: String,
    menu: Vec<String>,
    alternative: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    count: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    prob: Option<Number>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDataset {
    rows: Vec<JsonRow>,
}

fn clean_menu(labels: impl IntoIterator<Item = String>) -> std::result::Result<Vec<String>, String> {
    let mut menu: Vec<String> = labels.into_iter().map(|l| l.trim().to_owned()).collect();
    if menu.iter().any(String::is_empty) {
        return Err("menu contains an empty label".into());
    }
    menu.sort();
    let len = menu.len();
    menu.dedup();
    if menu.len() != len {
        return Err("menu lists an alternative twice".into());
    }
    if menu.is_empty() {
        return Err("menu is empty".into());
    }
    Ok(menu)
}

impl ChoiceDataset {
    pub fn read(path: &Path, format: DatasetFormat) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        match format {
            DatasetFormat::Csv => Self::from_csv(&text),
            DatasetFormat::Json => Self::from_json(&text),
        }
    }

    /// CSV with header `subject,menu,alternative` plus a `count` and/or
    /// `prob` column; each row fills exactly one of them. `menu` lists labels
    /// separated by `|`.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let header_err = |message: String| Error::Parse { line: 1, message };
        let headers = reader.headers().map_err(|e| header_err(e.to_string()))?.clone();
        let column = |name: &str| headers.iter().position(|h| h == name);
        let (subject, menu, alternative) = match (column("subject"), column("menu"), column("alternative")) {
            (Some(s), Some(m), Some(a)) => (s, m, a),
            _ => {
                return Err(header_err(
                    "header must name the columns subject, menu and alternative".into(),
                ))
            }
        };
        let (count, prob) = (column("count"), column("prob"));
        if count.is_none() && prob.is_none() {
            return Err(header_err("header needs a count or prob column".into()));
        }
        let mut data = ChoiceDataset::default();
        for record in reader.records() {
            let record = record.map_err(|e| Error::Parse {
                line: e.position().map_or(0, |p| p.line() as usize),
                message: e.to_string(),
            })?;
            let line = record.position().map_or(0, |p| p.line() as usize);
            let at = |message: String| Error::Parse { line, message };
            let field = |i: Option<usize>| i.and_then(|i| record.get(i)).filter(|s| !s.is_empty());
            let subject = field(Some(subject)).ok_or_else(|| at("missing subject".into()))?;
            let menu_text = field(Some(menu)).ok_or_else(|| at("missing menu".into()))?;
            let alternative = field(Some(alternative)).ok_or_else(|| at("missing alternative".into()))?;
            let quantity = match (field(count), field(prob)) {
                (Some(c), None) => Quantity::Count(
                    c.parse()
                        .map_err(|_| at(format!("count {c:?} is not a nonnegative integer")))?,
                ),
                (None, Some(p)) => Quantity::Prob(parse_rational(p).map_err(|e| at(e.to_string()))?),
                (Some(_), Some(_)) => return Err(at("row gives both count and prob".into())),
                (None, None) => return Err(at("row gives neither count nor prob".into())),
            };
            let menu = clean_menu(menu_text.split('|').map(str::to_owned)).map_err(at)?;
            data.add(subject, menu, alternative, quantity).map_err(at)?;
        }
        data.validate()?;
        Ok(data)
    }

    /// JSON: `{"rows": [{"subject", "menu": [labels], "alternative",
    /// "count" | "prob"}]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: JsonDataset = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let mut data = ChoiceDataset::default();
        for (i, row) in doc.rows.into_iter().enumerate() {
            let at = |m: String| Error::Invalid(format!("row {}: {m}", i + 1));
            let quantity = match (row.count, row.prob) {
                (Some(c), None) => Quantity::Count(c),
                (None, Some(p)) => Quantity::Prob(p.value().map_err(|e| at(e.to_string()))?),
                _ => return Err(at("exactly one of count and prob must be given".into())),
            };
            if row.subject.trim().is_empty() {
                return Err(at("missing subject".into()));
            }
            let menu = clean_menu(row.menu).map_err(at)?;
            data.add(row.subject.trim(), menu, row.alternative.trim(), quantity)
                .map_err(at)?;
        }
        data.validate()?;
        Ok(data)
    }

    fn add(
        &mut self,
        subject: &str,
        menu: Vec<String>,
        alternative: &str,
        quantity: Quantity,
    ) -> std::result::Result<(), String> {
        if !menu.iter().any(|l| l == alternative) {
            return Err(format!(
                "alternative {alternative} is not in menu {{{}}}",
                menu.join(",")
            ));
        }
        let entry = self.subjects.entry(subject.to_owned()).or_default().entry(menu);
        let mixed = || "menu mixes count and prob rows".to_string();
        match quantity {
            Quantity::Count(c) => {
                let data = entry.or_insert_with(|| MenuData::Counts(BTreeMap::new()));
                let MenuData::Counts(map) = data else {
                    return Err(mixed());
                };
                let slot = map.entry(alternative.to_owned()).or_insert(0);
                *slot = slot.checked_add(c).ok_or("count overflow")?;
            }
            Quantity::Prob(p) => {
                let data = entry.or_insert_with(|| MenuData::Probs(BTreeMap::new()));
                let MenuData::Probs(map) = data else {
                    return Err(mixed());
                };
                *map.entry(alternative.to_owned()).or_insert_with(Rational::zero) += p;
            }
        }
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        for (subject, menus) in &self.subjects {
            for (menu, data) in menus {
                let name = format!("{{{}}}", menu.join(","));
                match data {
                    MenuData::Counts(c) if c.values().all(|&k| k == 0) => {
                        return Err(Error::Invalid(format!(
                            "subject {subject}: all counts for menu {name} are zero"
                        )));
                    }
                    MenuData::Probs(p) => {
                        let total: Rational = p.values().sum();
                        if total != Rational::from_integer(1.into()) {
                            return Err(Error::Invalid(format!(
                                "subject {subject}: probabilities for menu {name} sum to {}, not 1",
                                format_rational(&total)
                            )));
                        }
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    /// Adds the subjects of `other`, replacing any with the same id.
    pub fn merge(&mut self, other: ChoiceDataset) {
        self.subjects.extend(other.subjects);
    }

    pub fn subjects(&self) -> impl Iterator<Item = &str> {
        self.subjects.keys().map(String::as_str)
    }

    pub fn contains_subject(&self, subject: &str) -> bool {
        self.subjects.contains_key(subject)
    }

    pub fn len(&self) -> usize {
        self.subjects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subjects.is_empty()
    }

    /// The stochastic choice function of one subject.
    ///
    /// The universe is every label the subject's menus mention. If every
    /// menu is a doubleton the domain is pairwise and all doubletons must be
    /// present; otherwise every menu with two or more members must be.
    /// Counts become exact relative frequencies.
    pub fn subject_scf(&self, subject: &str) -> Result<StochasticChoiceFunction> {
        let menus = self
            .subjects
            .get(subject)
            .ok_or_else(|| Error::Invalid(format!("unknown subject {subject}")))?;
        let labels: BTreeSet<&str> = menus.keys().flatten().map(String::as_str).collect();
        let universe = Arc::new(Universe::new(labels)?);
        let pairwise = menus.keys().all(|m| m.len() <= 2);
        let kind = if pairwise {
            DomainKind::Pairwise
        } else {
            DomainKind::Full
        };
        let rows = menus
            .iter()
            .filter(|(m, _)| m.len() >= 2)
            .map(|(m, data)| {
                let menu = universe.menu(m)?;
                let entries: Vec<(Alternative, Rational)> = match data {
                    MenuData::Counts(c) => {
                        let total: u64 = c.values().sum();
                        let total = Rational::from_integer(total.into());
                        c.iter()
                            .map(|(l, &k)| {
                                Ok((
                                    universe.alternative(l)?,
                                    Rational::from_integer(k.into()) / &total,
                                ))
                            })
                            .collect::<Result<_>>()?
                    }
                    MenuData::Probs(p) => p
                        .iter()
                        .map(|(l, q)| Ok((universe.alternative(l)?, q.clone())))
                        .collect::<Result<_>>()?,
                };
                Ok((menu, entries))
            })
            .collect::<Result<Vec<(Menu, Vec<(Alternative, Rational)>)>>>()?;
        StochasticChoiceFunction::new(universe, kind, rows)
            .map_err(|e| Error::Invalid(format!("subject {subject}: {e}")))
    }

    /// A dataset of probability rows, one per stored menu member (zeros
    /// included), reproducing the given functions exactly.
    pub fn from_scfs<'a>(entries: impl IntoIterator<Item = (&'a str, &'a StochasticChoiceFunction)>) -> Self {
        let mut data = ChoiceDataset::default();
        for (subject, p) in entries {
            let u = p.universe();
            let menus = data.subjects.entry(subject.to_owned()).or_default();
            for m in p.menus() {
                let labels: Vec<String> = u.menu_labels(m).into_iter().map(str::to_owned).collect();
                let probs = p
                    .probabilities(m)
                    .expect("stored menu")
                    .iter()
                    .zip(m.iter())
                    .map(|(q, a)| (u.label(a).to_owned(), q.clone()))
                    .collect();
                menus.insert(labels, MenuData::Probs(probs));
            }
        }
        data
    }

    fn rows(&self) -> impl Iterator<Item = (&str, &[String], &str, String, bool)> + '_ {
        self.subjects.iter().flat_map(|(s, menus)| {
            menus.iter().flat_map(move |(m, data)| -> Vec<_> {
                match data {
                    MenuData::Counts(c) => c
                        .iter()
                        .map(|(a, k)| (s.as_str(), m.as_slice(), a.as_str(), k.to_string(), true))
                        .collect(),
                    MenuData::Probs(p) => p
                        .iter()
                        .map(|(a, q)| (s.as_str(), m.as_slice(), a.as_str(), format_rational(q), false))
                        .collect(),
                }
            })
        })
    }

    /// CSV with columns `subject,menu,alternative,count,prob`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["subject", "menu", "alternative", "count", "prob"])
            .expect("in-memory write");
        for (s, m, a, value, is_count) in self.rows() {
            let menu = m.join("|");
            let (count, prob) = if is_count {
                (value.as_str(), "")
            } else {
                ("", value.as_str())
            };
            w.write_record([s, menu.as_str(), a, count, prob])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    pub fn to_json(&self) -> String {
        let rows = self
            .rows()
            .map(|(s, m, a, value, is_count)| JsonRow {
                subject: s.to_owned(),
                menu: m.to_vec(),
                alternative: a.to_owned(),
                count: is_count.then(|| value.parse().expect("formatted count")),
                prob: (!is_count).then(|| Number::Text(value.clone())),
            })
            .collect();
        let mut text = serde_json::to_string_pretty(&JsonDataset { rows }).expect("serializable");
        text.push('\n');
        text
    }
}
