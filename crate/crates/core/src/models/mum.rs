use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::models::Utility;
use crate::rational::{format_rational, in_unit_interval, Rational};
use crate::scf::{DomainKind, StochasticChoiceFunction};
use crate::universe::{Alternative, Universe};

/// A metric on the universe as a symmetric distance matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metric {
    n: usize,
    d: Vec<Rational>,
}

impl Metric {
    /// Validates zero diagonal, symmetry, positivity off the diagonal and the
    /// triangle inequality. `rows[i][j]` is `d(i, j)`.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("distance matrix must be square"));
        }
        let d: Vec<Rational> = rows.into_iter().flatten().collect();
        let at = |i: usize, j: usize| &d[i * n + j];
        for i in 0..n {
            if !at(i, i).is_zero() {
                return Err(Error::invalid(format!("d({i},{i}) must be 0")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if at(i, j) != at(j, i) {
                    return Err(Error::invalid(format!("d is not symmetric at ({i},{j})")));
                }
                if !at(i, j).is_positive() {
                    return Err(Error::invalid(format!("d({i},{j}) must be positive")));
                }
                for k in 0..n {
                    if *at(i, k) > at(i, j) + at(j, k) {
                        return Err(Error::invalid(format!(
                            "triangle inequality fails for ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(Metric { n, d })
    }

    /// `d(x,y) = 1` for distinct points.
    pub fn discrete(n: usize) -> Self {
        let d = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    Rational::zero()
                } else {
                    Rational::one()
                }
            })
            .collect();
        Metric { n, d }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn distance(&self, a: Alternative, b: Alternative) -> &Rational {
        &self.d[a.index() * self.n + b.index()]
    }
}

/// A response curve sampled at finitely many points, strictly increasing and
/// odd-symmetric (`F(t) = 1 − F(−t)`), with values in `[0,1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResponseTable {
    points: BTreeMap<Rational, Rational>,
}

impl ResponseTable {
    pub fn new(points: impl IntoIterator<Item = (Rational, Rational)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (t, f) in points {
            if !in_unit_interval(&f) {
                return Err(Error::invalid(format!(
                    "F({}) = {} lies outside [0,1]",
                    format_rational(&t),
                    format_rational(&f)
                )));
            }
            if map.insert(t.clone(), f).is_some() {
                return Err(Error::invalid(format!("F({}) given twice", format_rational(&t))));
            }
        }
        let values: Vec<&Rational> = map.values().collect();
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid(
                "F must be strictly increasing on its sample points",
            ));
        }
        for (t, f) in &map {
            let mirrored = map.get(&-t);
            if mirrored != Some(&(Rational::one() - f)) {
                return Err(Error::invalid(format!(
                    "F is not odd-symmetric at {}: F(−t) must be 1 − F(t)",
                    format_rational(t)
                )));
            }
        }
        Ok(ResponseTable { points: map })
    }

    /// `F(t)`; `t` must be a sample point.
    pub fn eval(&self, t: &Rational) -> Result<&Rational> {
        self.points.get(t).ok_or_else(|| {
            Error::invalid(format!(
                "response table has no entry for argument {}",
                format_rational(t)
            ))
        })
    }

    pub fn points(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.points.iter()
    }
}

/// Moderate utility model on the pairwise domain:
/// `P(x,{x,y}) = F((u(x) − u(y)) / d(x,y))`.
pub fn mum_pairwise(
    universe: Arc<Universe>,
    u: &Utility,
    d: &Metric,
    f: &ResponseTable,
) -> Result<StochasticChoiceFunction> {
    u.check_len(universe.len(), "utility")?;
    if d.len() != universe.len() {
        return Err(Error::invalid("metric and universe sizes differ"));
    }
    let mut missing = None;
    let p = StochasticChoiceFunction::from_fn(universe.clone(), DomainKind::Pairwise, |m| {
        let (x, y) = (m.first(), m.iter().nth(1).expect("doubleton"));
        let t = (u.value(x) - u.value(y)) / d.distance(x, y);
        match f.eval(&t) {
            Ok(px) => vec![px.clone(), Rational::one() - px],
            Err(e) => {
                missing.get_or_insert(e);
                vec![Rational::one(), Rational::zero()]
            }
        }
    });
    if let Some(e) = missing {
        return Err(e);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{classify_transitivity, lambda_decomposition};
    use crate::rational::{int, rat};

    fn logistic_like() -> ResponseTable {
        ResponseTable::new([
            (int(-2), rat(1, 10)),
            (int(-1), rat(1, 4)),
            (int(0), rat(1, 2)),
            (int(1), rat(3, 4)),
            (int(2), rat(9, 10)),
        ])
        .unwrap()
    }

    #[test]
    fn constant_utility_gives_coin_flips() {
        let u = Arc::new(Universe::new(["a", "b", "c"]).unwrap());
        let p = mum_pairwise(
            u,
            &Utility::new(vec![int(1); 3]),
            &Metric::discrete(3),
            &logistic_like(),
        )
        .unwrap();
        assert!(p.rows().all(|(_, _, q)| *q == rat(1, 2)));
    }

    #[test]
    fn fechnerian_instance_is_maximally_rational() {
        let u = Arc::new(Universe::new(["a", "b", "c"]).unwrap());
        let util = Utility::new(vec![int(2), int(1), int(0)]);
        let p = mum_pairwise(u, &util, &Metric::discrete(3), &logistic_like()).unwrap();
        assert!(classify_transitivity(&p).moderate);
        assert!(lambda_decomposition(&p).unwrap().lambda_set.is_empty());
    }

    #[test]
    fn validation() {
        assert!(ResponseTable::new([(int(1), rat(3, 4))]).is_err());
        assert!(
            ResponseTable::new([(int(-1), rat(1, 2)), (int(0), rat(1, 2)), (int(1), rat(1, 2))]).is_err()
        );
        let bad = vec![
            vec![int(0), int(1), int(5)],
            vec![int(1), int(0), int(1)],
            vec![int(5), int(1), int(0)],
        ];
        assert!(Metric::new(bad).is_err());
        let u = Arc::new(Universe::new(["a", "b", "c"]).unwrap());
        let util = Utility::new(vec![int(7), int(1), int(0)]);
        let err = mum_pairwise(u, &util, &Metric::discrete(3), &logistic_like()).unwrap_err();
        assert!(err.to_string().contains("no entry"), "{err}");
    }
}
