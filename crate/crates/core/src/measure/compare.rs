use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::interval::IntervalUnion;
use crate::measure::decomposition::lambda_decomposition;
use crate::scf::StochasticChoiceFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    LeftMoreRational,
    RightMoreRational,
    Equivalent,
    Incomparable,
}

impl Verdict {
    /// The verdict with the arguments swapped.
    pub fn flip(self) -> Verdict {
        match self {
            Verdict::LeftMoreRational => Verdict::RightMoreRational,
            Verdict::RightMoreRational => Verdict::LeftMoreRational,
            v => v,
        }
    }

    /// Left is at least as rational as right.
    pub fn left_dominates(self) -> bool {
        matches!(self, Verdict::LeftMoreRational | Verdict::Equivalent)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::LeftMoreRational => "left more rational",
            Verdict::RightMoreRational => "right more rational",
            Verdict::Equivalent => "equivalent",
            Verdict::Incomparable => "incomparable",
        })
    }
}

/// Outcome of comparing two "bad" sets, smaller meaning more rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonResult {
    pub verdict: Verdict,
    pub left_minus_right: IntervalUnion,
    pub right_minus_left: IntervalUnion,
}

impl ComparisonResult {
    /// Left is more rational when its bad set is contained in the right's.
    pub fn of_sets(left: &IntervalUnion, right: &IntervalUnion) -> Self {
        Self::from_differences(left.difference(right), right.difference(left))
    }

    pub fn from_differences(left_minus_right: IntervalUnion, right_minus_left: IntervalUnion) -> Self {
        let verdict = match (left_minus_right.is_empty(), right_minus_left.is_empty()) {
            (true, true) => Verdict::Equivalent,
            (true, false) => Verdict::LeftMoreRational,
            (false, true) => Verdict::RightMoreRational,
            (false, false) => Verdict::Incomparable,
        };
        ComparisonResult {
            verdict,
            left_minus_right,
            right_minus_left,
        }
    }
}

/// `P ⊵_rat Q` iff `Λ(P) ⊆ Λ(Q)`.
pub fn compare(p: &StochasticChoiceFunction, q: &StochasticChoiceFunction) -> Result<ComparisonResult> {
    let lp = lambda_decomposition(p)?.lambda_set;
    let lq = lambda_decomposition(q)?.lambda_set;
    Ok(ComparisonResult::of_sets(&lp, &lq))
}

/// The preorder induced by set inclusion on a named family of `Λ` sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialOrderSummary {
    /// Names in ascending order; rows and columns of `matrix` follow it.
    pub names: Vec<String>,
    /// `matrix[i][j]` compares `names[i]` (left) with `names[j]` (right).
    pub matrix: Vec<Vec<Verdict>>,
    /// Classes of equivalent members, each sorted, ordered by least member.
    pub classes: Vec<Vec<String>>,
    /// Covering pairs `(a, b)` of class indices: class `a` is strictly more
    /// rational than `b` with no class in between.
    pub hasse: Vec<(usize, usize)>,
}

impl PartialOrderSummary {
    /// Builds the summary from `(name, Λ)` pairs. Names must be distinct.
    pub fn from_sets(entries: &[(String, IntervalUnion)]) -> Self {
        let mut sorted: Vec<&(String, IntervalUnion)> = entries.iter().collect();
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        let names: Vec<String> = sorted.iter().map(|e| e.0.clone()).collect();
        let n = sorted.len();
        let matrix: Vec<Vec<Verdict>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| ComparisonResult::of_sets(&sorted[i].1, &sorted[j].1).verdict)
                    .collect()
            })
            .collect();

        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let members: Vec<usize> = (i..n).filter(|&j| matrix[i][j] == Verdict::Equivalent).collect();
            for &j in &members {
                class_of[j] = id;
            }
            classes.push(members);
        }

        let k = classes.len();
        let above = |a: usize, b: usize| matrix[classes[a][0]][classes[b][0]] == Verdict::LeftMoreRational;
        let mut hasse = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if above(a, b) && !(0..k).any(|c| above(a, c) && above(c, b)) {
                    hasse.push((a, b));
                }
            }
        }

        PartialOrderSummary {
            classes: classes
                .iter()
                .map(|c| c.iter().map(|&i| names[i].clone()).collect())
                .collect(),
            names,
            matrix,
            hasse,
        }
    }

    /// Index of the class containing `name`.
    pub fn class_of(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.iter().any(|m| m == name))
    }
}

/// Compares every pair of named functions under `⊵_rat`.
pub fn compare_many(entries: &[(String, StochasticChoiceFunction)]) -> Result<PartialOrderSummary> {
    let sets = entries
        .iter()
        .map(|(name, p)| Ok((name.clone(), lambda_decomposition(p)?.lambda_set)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PartialOrderSummary::from_sets(&sets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn up_to(a: i64, b: i64) -> IntervalUnion {
        IntervalUnion::interval(rat(0, 1), rat(a, b)).unwrap()
    }

    #[test]
    fn verdicts_from_sets() {
        let a = up_to(1, 4);
        let b = up_to(1, 2);
        assert_eq!(
            ComparisonResult::of_sets(&a, &b).verdict,
            Verdict::LeftMoreRational
        );
        assert_eq!(
            ComparisonResult::of_sets(&b, &a).verdict,
            Verdict::RightMoreRational
        );
        assert_eq!(ComparisonResult::of_sets(&a, &a).verdict, Verdict::Equivalent);
        let c = IntervalUnion::interval(rat(1, 2), rat(1, 1)).unwrap();
        let r = ComparisonResult::of_sets(&a, &c);
        assert_eq!(r.verdict, Verdict::Incomparable);
        assert_eq!(r.left_minus_right, a);
    }

    #[test]
    fn chain_and_classes() {
        let entries = vec![
            ("c".to_string(), up_to(3, 4)),
            ("a".to_string(), up_to(1, 4)),
            ("b".to_string(), up_to(1, 2)),
            ("d".to_string(), up_to(1, 4)),
            ("e".to_string(), IntervalUnion::empty()),
        ];
        let s = PartialOrderSummary::from_sets(&entries);
        assert_eq!(s.names, vec!["a", "b", "c", "d", "e"]);
        assert_eq!(
            s.classes,
            vec![
                vec!["a".to_string(), "d".to_string()],
                vec!["b".into()],
                vec!["c".into()],
                vec!["e".into()]
            ]
        );
        // e above a/d above b above c
        assert_eq!(s.hasse, vec![(0, 1), (1, 2), (3, 0)]);
        assert_eq!(s.matrix[0][3], Verdict::Equivalent);
        assert_eq!(s.matrix[4][2], Verdict::LeftMoreRational);
    }
}
