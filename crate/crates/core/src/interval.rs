//! Finite unions of right-semiclosed intervals `(lo, hi]` inside `(0, 1]`.

use std::fmt;

use num::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, in_unit_interval, parse_rational, Rational};

/// Canonical finite union of half-open intervals `(lo, hi]` with
/// `0 ≤ lo < hi ≤ 1`.
///
/// Components are sorted, pairwise disjoint and non-adjacent (`next.lo >
/// prev.hi`), so two unions describe the same point set iff they are equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntervalUnion {
    parts: Vec<(Rational, Rational)>,
}

impl IntervalUnion {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The whole range `(0, 1]`.
    pub fn unit() -> Self {
        Self {
            parts: vec![(Rational::zero(), Rational::one())],
        }
    }

    /// A single interval `(lo, hi]`, empty when `lo >= hi`.
    pub fn interval(lo: Rational, hi: Rational) -> Result<Self> {
        let mut u = Self::empty();
        u.insert(lo, hi)?;
        Ok(u)
    }

    /// Adds `(lo, hi]`, merging overlapping and touching components.
    ///
    /// An empty interval (`lo >= hi`) leaves the union unchanged.
    pub fn insert(&mut self, lo: Rational, hi: Rational) -> Result<()> {
        if !in_unit_interval(&lo) || !in_unit_interval(&hi) {
            return Err(Error::domain(format!(
                "interval endpoints must lie in [0,1], got ({}, {}]",
                format_rational(&lo),
                format_rational(&hi)
            )));
        }
        if lo >= hi {
            return Ok(());
        }
        self.insert_unchecked(lo, hi);
        Ok(())
    }

    /// Like [`insert`](Self::insert) without the range check; endpoints must
    /// already lie in `[0,1]`.
    pub(crate) fn insert_unchecked(&mut self, mut lo: Rational, mut hi: Rational) {
        debug_assert!(in_unit_interval(&lo) && in_unit_interval(&hi));
        if lo >= hi {
            return;
        }
        // First component that could touch (lo, hi]: its hi must be >= lo.
        let start = self.parts.partition_point(|(_, h)| *h < lo);
        let mut end = start;
        while end < self.parts.len() && self.parts[end].0 <= hi {
            end += 1;
        }
        if start < end {
            if self.parts[start].0 < lo {
                lo = self.parts[start].0.clone();
            }
            if self.parts[end - 1].1 > hi {
                hi = self.parts[end - 1].1.clone();
            }
        }
        self.parts.splice(start..end, std::iter::once((lo, hi)));
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Components in ascending order.
    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.parts
    }

    /// Lebesgue measure, exactly.
    pub fn measure(&self) -> Rational {
        self.parts
            .iter()
            .fold(Rational::zero(), |acc, (lo, hi)| acc + hi - lo)
    }

    /// Half-open membership: `lo < t <= hi` for some component.
    pub fn contains(&self, t: &Rational) -> bool {
        let i = self.parts.partition_point(|(_, h)| h < t);
        i < self.parts.len() && self.parts[i].0 < *t
    }

    /// Whether every point of `self` lies in `other`.
    pub fn is_subset(&self, other: &IntervalUnion) -> bool {
        // Canonical components are maximal, so each of ours must sit inside
        // a single component of `other`.
        self.parts.iter().all(|(lo, hi)| {
            let i = other.parts.partition_point(|(_, h)| h < hi);
            i < other.parts.len() && other.parts[i].0 <= *lo
        })
    }

    pub fn union(&self, other: &IntervalUnion) -> IntervalUnion {
        let mut out = self.clone();
        for (lo, hi) in &other.parts {
            out.insert_unchecked(lo.clone(), hi.clone());
        }
        out
    }

    pub fn intersection(&self, other: &IntervalUnion) -> IntervalUnion {
        let mut out = IntervalUnion::empty();
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            let (a_lo, a_hi) = &self.parts[i];
            let (b_lo, b_hi) = &other.parts[j];
            let lo = a_lo.max(b_lo);
            let hi = a_hi.min(b_hi);
            if lo < hi {
                out.parts.push((lo.clone(), hi.clone()));
            }
            if a_hi < b_hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        out
    }

    /// Complement relative to `(0, 1]`.
    pub fn complement(&self) -> IntervalUnion {
        let mut out = IntervalUnion::empty();
        let mut cursor = Rational::zero();
        for (lo, hi) in &self.parts {
            if cursor < *lo {
                out.parts.push((cursor.clone(), lo.clone()));
            }
            cursor = hi.clone();
        }
        if cursor < Rational::one() {
            out.parts.push((cursor, Rational::one()));
        }
        out
    }

    pub fn difference(&self, other: &IntervalUnion) -> IntervalUnion {
        self.intersection(&other.complement())
    }
}

impl FromIterator<(Rational, Rational)> for IntervalUnion {
    /// Collects intervals, skipping empty ones. Endpoints must already be in
    /// `[0,1]`; out-of-range endpoints panic in debug builds.
    fn from_iter<I: IntoIterator<Item = (Rational, Rational)>>(iter: I) -> Self {
        let mut out = IntervalUnion::empty();
        for (lo, hi) in iter {
            out.insert_unchecked(lo, hi);
        }
        out
    }
}

impl fmt::Display for IntervalUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        for (k, (lo, hi)) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "({lo},{hi}]")?;
        }
        Ok(())
    }
}

impl Serialize for IntervalUnion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[String; 2]> = self
            .parts
            .iter()
            .map(|(lo, hi)| [format_rational(lo), format_rational(hi)])
            .collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntervalUnion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[String; 2]>::deserialize(d)?;
        let mut out = IntervalUnion::empty();
        for [lo, hi] in pairs {
            let lo = parse_rational(&lo).map_err(serde::de::Error::custom)?;
            let hi = parse_rational(&hi).map_err(serde::de::Error::custom)?;
            out.insert(lo, hi).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn iv(parts: &[(Rational, Rational)]) -> IntervalUnion {
        let mut u = IntervalUnion::empty();
        for (lo, hi) in parts {
            u.insert(lo.clone(), hi.clone()).unwrap();
        }
        u
    }

    #[test]
    fn empty_insert_is_noop() {
        let u = iv(&[(rat(1, 4), rat(1, 6))]);
        assert!(u.is_empty());
    }

    #[test]
    fn adjacent_intervals_merge() {
        let u = iv(&[(int(0), rat(1, 2)), (rat(1, 2), int(1))]);
        assert_eq!(u, IntervalUnion::unit());
    }

    #[test]
    fn separated_intervals_stay_apart() {
        let u = iv(&[(rat(1, 2), int(1)), (rat(1, 6), rat(1, 4))]);
        assert_eq!(u.intervals(), &[(rat(1, 6), rat(1, 4)), (rat(1, 2), int(1))]);
        assert_eq!(u.measure(), rat(7, 12));
    }

    #[test]
    fn insert_spanning_several_components() {
        let mut u = iv(&[
            (rat(1, 10), rat(2, 10)),
            (rat(3, 10), rat(4, 10)),
            (rat(8, 10), int(1)),
        ]);
        u.insert(rat(15, 100), rat(35, 100)).unwrap();
        assert_eq!(u.intervals(), &[(rat(1, 10), rat(4, 10)), (rat(8, 10), int(1))]);
    }

    #[test]
    fn rejects_out_of_range_endpoints() {
        let mut u = IntervalUnion::empty();
        assert!(u.insert(rat(-1, 2), rat(1, 2)).is_err());
        assert!(u.insert(rat(1, 2), rat(3, 2)).is_err());
    }

    #[test]
    fn measure_of_basic_sets() {
        assert_eq!(IntervalUnion::empty().measure(), int(0));
        assert_eq!(IntervalUnion::unit().measure(), int(1));
    }

    #[test]
    fn subset_cases() {
        let any = iv(&[(rat(1, 3), rat(2, 3))]);
        assert!(IntervalUnion::empty().is_subset(&any));
        let small = iv(&[(rat(1, 4), rat(1, 3))]);
        let half = iv(&[(int(0), rat(1, 2))]);
        assert!(small.is_subset(&half));
        let lam = iv(&[(rat(1, 6), rat(1, 4)), (rat(1, 2), int(1))]);
        assert!(!lam.is_subset(&half));
        // 3/4 witnesses the non-containment
        assert!(lam.contains(&rat(3, 4)) && !half.contains(&rat(3, 4)));
    }

    #[test]
    fn half_open_membership() {
        let u = iv(&[(rat(1, 6), rat(1, 4))]);
        assert!(u.contains(&rat(1, 4)));
        assert!(!u.contains(&rat(1, 6)));
        let lam = iv(&[(rat(1, 6), rat(1, 4)), (rat(1, 2), int(1))]);
        assert!(!lam.contains(&rat(1, 3)));
        assert!(!lam.contains(&rat(1, 2)));
        assert!(lam.contains(&int(1)));
    }

    #[test]
    fn complement_and_difference() {
        let lam = iv(&[(rat(1, 6), rat(1, 4)), (rat(1, 2), int(1))]);
        let c = lam.complement();
        assert_eq!(c.intervals(), &[(int(0), rat(1, 6)), (rat(1, 4), rat(1, 2))]);
        assert_eq!(lam.difference(&IntervalUnion::unit()), IntervalUnion::empty());
        assert_eq!(IntervalUnion::unit().difference(&lam), c);
    }

    #[test]
    fn display_and_json() {
        let lam = iv(&[(rat(1, 6), rat(1, 4)), (rat(1, 2), int(1))]);
        assert_eq!(lam.to_string(), "(1/6,1/4] ∪ (1/2,1]");
        let json = serde_json::to_string(&lam).unwrap();
        assert_eq!(json, r#"[["1/6","1/4"],["1/2","1"]]"#);
        let back: IntervalUnion = serde_json::from_str(&json).unwrap();
        assert_eq!(back, lam);
        assert_eq!(IntervalUnion::empty().to_string(), "∅");
    }

    // Random unions over a grid of denominator 12.
    fn arb_union() -> impl Strategy<Value = Vec<(i64, i64)>> {
        prop::collection::vec((0i64..=12, 0i64..=12), 0..6)
    }

    fn build(raw: &[(i64, i64)]) -> IntervalUnion {
        raw.iter().map(|&(a, b)| (rat(a, 12), rat(b, 12))).collect()
    }

    proptest! {
        #[test]
        fn insertion_order_is_irrelevant(raw in arb_union(), seed in any::<u64>()) {
            let u = build(&raw);
            let mut parts = u.intervals().to_vec();
            // deterministic shuffle
            let n = parts.len();
            for i in (1..n).rev() {
                let j = (seed.rotate_left(i as u32) as usize) % (i + 1);
                parts.swap(i, j);
            }
            let v: IntervalUnion = parts.into_iter().collect();
            prop_assert_eq!(u, v);
        }

        #[test]
        fn measure_is_modular(a in arb_union(), b in arb_union()) {
            let (a, b) = (build(&a), build(&b));
            let lhs = a.union(&b).measure() + a.intersection(&b).measure();
            let rhs = a.measure() + b.measure();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn subset_iff_union_measure(a in arb_union(), b in arb_union()) {
            let (a, b) = (build(&a), build(&b));
            prop_assert_eq!(a.is_subset(&b), a.union(&b).measure() == b.measure());
        }

        #[test]
        fn membership_matches_components(raw in arb_union(), k in 0i64..=24) {
            let u = build(&raw);
            let t = rat(k, 24);
            let naive = raw.iter().any(|&(a, b)| rat(a, 12) < t && t <= rat(b, 12));
            prop_assert_eq!(u.contains(&t), naive);
        }

        #[test]
        fn canonical_form_holds(raw in arb_union()) {
            let u = build(&raw);
            for w in u.intervals().windows(2) {
                prop_assert!(w[1].0 > w[0].1);
            }
            for (lo, hi) in u.intervals() {
                prop_assert!(lo < hi);
            }
        }
    }
}
