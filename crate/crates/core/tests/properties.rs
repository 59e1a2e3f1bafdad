mod common;

use common::*;
use num::{One, Zero};
use proptest::prelude::*;
use stochrat::comparators::{hybrid_compare, swap_index};
use stochrat::io::ChoiceDataset;
use stochrat::measure::{
    classify_transitivity, compare, lambda_decomposition, triangular_condition, Verdict,
};
use stochrat::models::{
    consistent_over_ntuples, consistent_with_over_triplets, drum_lambda_closed_form, indexed_universe,
    random_scf, uniform_drum, RandomUtilityModel, SeededRng, Utility,
};
use stochrat::rational::{half, int, rat, Rational};
use stochrat::scf::{critical_lambdas, fishburn_correspondence, is_lambda_rational};
use stochrat::{ComparisonResult, DomainKind, IntervalUnion, Limits, StochasticChoiceFunction};

fn kind_of(full: bool) -> DomainKind {
    if full {
        DomainKind::Full
    } else {
        DomainKind::Pairwise
    }
}

fn scf_strategy(max_n: usize) -> impl Strategy<Value = StochasticChoiceFunction> {
    (any::<u64>(), 3..=max_n, any::<bool>(), 2u64..13).prop_map(|(seed, n, full, bound)| {
        random_scf(seed, indexed_universe(n), bound, kind_of(full)).unwrap()
    })
}

fn interval_strategy() -> impl Strategy<Value = IntervalUnion> {
    prop::collection::vec((0i64..=12, 0i64..=12), 0..5).prop_map(|pairs| {
        let mut u = IntervalUnion::empty();
        for (a, b) in pairs {
            if a < b {
                u.insert(rat(a, 12), rat(b, 12)).unwrap();
            }
        }
        u
    })
}

fn permutation(seed: u64, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    SeededRng::new(seed).shuffle(&mut perm);
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn axiom_checks_agree_with_preorder_search(p in scf_strategy(4)) {
        let preorders = all_preorders(p.len());
        let lambda = lambda_decomposition(&p).unwrap().lambda_set;
        for t in critical_lambdas(&p) {
            let c = fishburn_correspondence(&p, &t).unwrap();
            let by_search = rationalizable_by_search(&c, &preorders);
            prop_assert_eq!(is_lambda_rational(&p, &t).unwrap().is_rational(), by_search);
            prop_assert_eq!(lambda.contains(&t), !by_search);
        }
    }

    #[test]
    fn swap_program_matches_enumeration(p in scf_strategy(5)) {
        let fast = swap_index(&p, 9).unwrap();
        let (value, ties) = naive_swap(&p);
        prop_assert_eq!(&fast.value, &value);
        prop_assert_eq!(fast.ties, ties);
    }

    #[test]
    fn relabelling_preserves_lambda_and_swap(p in scf_strategy(5), seed in any::<u64>()) {
        let q = relabel(&p, &permutation(seed, p.len()));
        let (dp, dq) = (lambda_decomposition(&p).unwrap(), lambda_decomposition(&q).unwrap());
        prop_assert_eq!(&dp.lambda_set, &dq.lambda_set);
        prop_assert_eq!(&dp.chernoff, &dq.chernoff);
        prop_assert_eq!(&dp.condorcet, &dq.condorcet);
        prop_assert_eq!(swap_index(&p, 9).unwrap().value, swap_index(&q, 9).unwrap().value);
        prop_assert_eq!(classify_transitivity(&p), classify_transitivity(&q));
    }

    #[test]
    fn lambda_sets_are_well_formed(p in scf_strategy(5)) {
        let d = lambda_decomposition(&p).unwrap();
        prop_assert!(d.lambda_set.is_subset(&IntervalUnion::unit()));
        let index = d.index();
        prop_assert!(index >= Rational::zero() && index <= Rational::one());
        prop_assert_eq!(d.witnesses.len(), d.lambda_set.intervals().len());
        for w in &d.witnesses {
            prop_assert!(d.lambda_set.contains(&w.hi));
            let check = is_lambda_rational(&p, &w.hi).unwrap();
            prop_assert_eq!(check.axioms.first_violation(), Some(&w.violation));
        }
        if p.kind() == DomainKind::Pairwise {
            prop_assert!(d.chernoff.is_empty() && d.condorcet.is_empty());
            if d.is_maximally_rational() {
                prop_assert!(triangular_condition(&p).is_ok());
            }
        }
    }

    #[test]
    fn comparison_is_antisymmetric(p in scf_strategy(4), seed in any::<u64>(), full in any::<bool>()) {
        let q = random_scf(seed, indexed_universe(p.len()), 6, kind_of(full)).unwrap();
        let (pq, qp) = (compare(&p, &q).unwrap(), compare(&q, &p).unwrap());
        prop_assert_eq!(pq.verdict, qp.verdict.flip());
        prop_assert_eq!(&pq.left_minus_right, &qp.right_minus_left);
        prop_assert_eq!(compare(&p, &p).unwrap().verdict, Verdict::Equivalent);
    }

    #[test]
    fn hybrid_order_never_contradicts(seed in any::<u64>(), n in 3usize..=4) {
        let u = indexed_universe(n);
        let p = random_scf(seed, u.clone(), 8, DomainKind::Full).unwrap();
        let q = random_scf(seed ^ 0x9e37_79b9, u, 8, DomainKind::Full).unwrap();
        let strict = compare(&p, &q).unwrap().verdict;
        let hybrid = hybrid_compare(&p, &q, &Limits::default()).unwrap().verdict;
        let opposite = matches!(
            (strict, hybrid),
            (Verdict::LeftMoreRational, Verdict::RightMoreRational) | (Verdict::RightMoreRational, Verdict::LeftMoreRational)
        );
        prop_assert!(!opposite, "rationality order {} vs hybrid {}", strict, hybrid);
    }

    #[test]
    fn interval_measure_is_modular(a in interval_strategy(), b in interval_strategy()) {
        let lhs = a.union(&b).measure() + a.intersection(&b).measure();
        prop_assert_eq!(lhs, a.measure() + b.measure());
        prop_assert_eq!(a.complement().measure(), Rational::one() - a.measure());
        prop_assert_eq!(a.difference(&b).union(&a.intersection(&b)), a.clone());
        prop_assert_eq!(ComparisonResult::of_sets(&a, &a).verdict, Verdict::Equivalent);
    }

    #[test]
    fn datasets_round_trip(p in scf_strategy(5)) {
        let data = ChoiceDataset::from_scfs([("s", &p)]);
        let from_csv = ChoiceDataset::from_csv(&data.to_csv()).unwrap();
        let from_json = ChoiceDataset::from_json(&data.to_json()).unwrap();
        prop_assert_eq!(&from_csv, &data);
        prop_assert_eq!(&from_json, &data);
        prop_assert_eq!(from_csv.subject_scf("s").unwrap(), p);
    }

    #[test]
    fn random_functions_are_reproducible(seed in any::<u64>(), n in 2usize..=5, bound in 2u64..20) {
        let u = indexed_universe(n);
        let p = random_scf(seed, u.clone(), bound, DomainKind::Full).unwrap();
        prop_assert_eq!(&p, &random_scf(seed, u, bound, DomainKind::Full).unwrap());
        let b = Rational::from_integer((bound as i64).into());
        for (_, _, q) in p.rows() {
            prop_assert!((q * &b).is_integer());
        }
    }

    #[test]
    fn dual_rum_closed_form(seed in any::<u64>(), n in 3usize..=5, k in 0i64..=10) {
        let mut rng = SeededRng::new(seed);
        let (u, v) = (rng.utility(n), rng.utility(n));
        let theta = rat(k, 10);
        let p = uniform_drum(indexed_universe(n), &u, &v, &theta).unwrap();
        prop_assert_eq!(lambda_decomposition(&p).unwrap().lambda_set, drum_lambda_closed_form(&u, &v, &theta).unwrap());
    }

    #[test]
    fn two_alternative_swap_is_at_most_one_half(seed in any::<u64>(), bound in 2u64..30) {
        let p = random_scf(seed, indexed_universe(2), bound, DomainKind::Full).unwrap();
        prop_assert!(swap_index(&p, 9).unwrap().value <= half());
    }
}

#[test]
fn rum_with_reversed_patterns_matches_its_bounds() {
    let (mut low, mut high) = (0, 0);
    for seed in 0..400u64 {
        let mut rng = SeededRng::new(seed);
        let n = 3 + (seed % 3) as usize;
        let parts = 2 + (seed % 2) as usize;
        let rum = random_rum(&mut rng, n, parts);
        let utilities: Vec<Utility> = rum.utilities();
        let lead = rum.leading_weight().clone();
        let lambda = lambda_decomposition(&rum.scf().unwrap()).unwrap().lambda_set;
        if lead <= half() && !consistent_over_ntuples(&utilities) {
            low += 1;
            assert_eq!(lambda, IntervalUnion::unit(), "seed {seed}");
        }
        if lead > half()
            && lead < Rational::one()
            && !consistent_with_over_triplets(&utilities[0], &utilities[1..])
        {
            high += 1;
            let expected =
                IntervalUnion::interval(Rational::zero(), (Rational::one() - &lead) / &lead).unwrap();
            assert_eq!(lambda, expected, "seed {seed}");
        }
    }
    assert!(low > 0 && high > 0, "vacuous: {low}/{high}");
}

#[test]
fn single_component_rum_is_deterministic_and_rational() {
    let u = xyz();
    let rum = RandomUtilityModel::new(u.clone(), vec![(ranking(&u, &["y", "z", "x"]), int(1))]).unwrap();
    let p = rum.scf().unwrap();
    assert!(p.is_deterministic());
    assert!(lambda_decomposition(&p).unwrap().is_maximally_rational());
}
