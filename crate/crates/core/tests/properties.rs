//! Property-based checks of the invariants each module promises.

mod common;

use std::collections::BTreeSet;

use axis_rules::format::{parse_profile, write_approval, ProfileDocument};
use axis_rules::{
    approval_vector, axis_distance, ballot_cost, canonicalize, check_instance, coapproval_partition,
    consistent_axes, generate, interfering_candidates, is_interval, is_single_peaked, preprocess, profile_cost,
    ranking_cost, solve, AxiomId, Axis, Ballot, Candidates, CostRule, NoiseModel, NoiseModelConfig, RankingBallot,
    RankingRule, SolveOptions, Weight, WeightedProfile,
};
use common::{oracle_solve, orders, permutations};
use proptest::prelude::*;
use proptest::sample::select;

fn rule() -> impl Strategy<Value = CostRule> {
    select(CostRule::ALL.to_vec())
}

fn order(m: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..m).collect::<Vec<usize>>()).prop_shuffle()
}

fn axis_of(m: usize) -> impl Strategy<Value = Axis> {
    order(m).prop_map(|o| Axis::new(o).unwrap())
}

fn ballot_of(m: usize) -> impl Strategy<Value = Ballot> {
    (1..1u64 << m).prop_map(|mask| Ballot::from_mask(mask).unwrap())
}

/// A ballot and an axis over the same `m` candidates.
fn pair(max_m: usize) -> impl Strategy<Value = (Ballot, Axis)> {
    (1..=max_m).prop_flat_map(|m| (ballot_of(m), axis_of(m)))
}

fn weight() -> impl Strategy<Value = Weight> {
    (1u64..=6, select(vec![1u64, 1, 2, 3])).prop_map(|(n, d)| Weight::new(n, d))
}

fn profile_of(m: usize, max_n: usize) -> impl Strategy<Value = WeightedProfile> {
    prop::collection::vec((ballot_of(m), weight()), 1..=max_n)
        .prop_map(move |entries| WeightedProfile::new(Candidates::letters(m), entries).unwrap())
}

/// A profile and an axis over the same candidates.
fn profile_and_axis(min_m: usize, max_m: usize, max_n: usize) -> impl Strategy<Value = (WeightedProfile, Axis)> {
    (min_m..=max_m).prop_flat_map(move |m| (profile_of(m, max_n), axis_of(m)))
}

fn relabel(ballot: Ballot, sigma: &[usize]) -> Ballot {
    Ballot::new(ballot.members().map(|c| sigma[c])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn vector_of_reversed_axis_is_reversed((b, a) in pair(12)) {
        prop_assert_eq!(approval_vector(b, &a).unwrap().reversed(), approval_vector(b, &a.reverse()).unwrap());
    }

    #[test]
    fn three_interval_tests_agree((b, a) in pair(12)) {
        let interval = is_interval(b, &a).unwrap();
        prop_assert_eq!(interval, interfering_candidates(b, &a).unwrap().is_empty());
        prop_assert_eq!(interval, approval_vector(b, &a).unwrap().is_contiguous());
    }

    #[test]
    fn canonical_form_is_idempotent_and_reversal_blind(a in (1usize..=12).prop_flat_map(axis_of)) {
        let c = canonicalize(&a);
        prop_assert_eq!(canonicalize(&c), c.clone());
        prop_assert_eq!(canonicalize(&a.reverse()), c.clone());
        prop_assert!(c.is_canonical());
        prop_assert!(c.equivalent(&a));
    }

    #[test]
    fn preprocessing_keeps_every_cost((p, a) in profile_and_axis(1, 6, 8), r in rule()) {
        prop_assert_eq!(profile_cost(r, &preprocess(&p), &a).unwrap(), profile_cost(r, &p, &a).unwrap());
    }

    #[test]
    fn hierarchy_chain((b, a) in pair(10)) {
        let costs: Vec<u64> = CostRule::HIERARCHY.iter().map(|&r| ballot_cost(r, b, &a).unwrap()).collect();
        prop_assert!(costs.windows(2).all(|w| w[0] <= w[1]), "{costs:?}");
    }

    #[test]
    fn costs_ignore_direction((b, a) in pair(12), r in rule()) {
        prop_assert_eq!(ballot_cost(r, b, &a).unwrap(), ballot_cost(r, b, &a.reverse()).unwrap());
    }

    #[test]
    fn zero_cost_means_interval((b, a) in pair(12), r in rule()) {
        prop_assert_eq!(ballot_cost(r, b, &a).unwrap() == 0, is_interval(b, &a).unwrap());
    }

    #[test]
    fn costs_depend_on_the_vector_only(
        (b, a, sigma) in (1usize..=10).prop_flat_map(|m| (ballot_of(m), axis_of(m), order(m))),
        r in rule(),
    ) {
        let renamed = Axis::new(a.order().iter().map(|&c| sigma[c]).collect()).unwrap();
        let rb = relabel(b, &sigma);
        prop_assert_eq!(approval_vector(rb, &renamed).unwrap(), approval_vector(b, &a).unwrap());
        prop_assert_eq!(ballot_cost(r, rb, &renamed).unwrap(), ballot_cost(r, b, &a).unwrap());
    }

    #[test]
    fn consistent_axes_make_every_ballot_an_interval(p in (2usize..=7).prop_flat_map(|m| profile_of(m, 5))) {
        for a in consistent_axes(&p).unwrap() {
            for &(b, _) in p.entries() {
                prop_assert!(is_interval(b, &a).unwrap());
            }
        }
    }

    #[test]
    fn partition_ignores_duplicates_and_weights(
        p in (2usize..=8).prop_flat_map(|m| profile_of(m, 6)),
        scale in 2u64..5,
    ) {
        let doubled = p.combine(&p).unwrap();
        let reweighted = WeightedProfile::new(
            p.candidates().clone(),
            p.entries().iter().map(|&(b, w)| (b, w * Weight::from_integer(scale))).collect(),
        )
        .unwrap();
        let base = coapproval_partition(&p);
        prop_assert_eq!(&coapproval_partition(&doubled), &base);
        prop_assert_eq!(&coapproval_partition(&reweighted), &base);

        let mut seen = BTreeSet::new();
        for class in base.classes() {
            for &c in class {
                prop_assert!(seen.insert(c), "classes overlap");
            }
        }
        prop_assert_eq!(seen.len(), p.num_candidates());
        for &(b, _) in p.entries() {
            let classes: BTreeSet<_> = b.members().map(|c| base.class_of(c)).collect();
            prop_assert_eq!(classes.len(), 1, "a ballot spans two classes");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_output_is_exact_and_canonical(p in (2usize..=6).prop_flat_map(|m| profile_of(m, 6)), r in rule()) {
        let res = solve(&p, r, &SolveOptions::default()).unwrap();
        let (best, all) = oracle_solve(r, &p);
        prop_assert_eq!(res.optimal_cost, best);
        prop_assert_eq!(orders(&res.optimal_axes), all);
        for a in &res.optimal_axes {
            prop_assert!(a.is_canonical());
            prop_assert_eq!(profile_cost(r, &p, a).unwrap(), res.optimal_cost);
        }
    }

    #[test]
    fn search_switches_do_not_change_results(p in (3usize..=7).prop_flat_map(|m| profile_of(m, 6)), r in rule()) {
        let base = solve(&p, r, &SolveOptions::exhaustive()).unwrap();
        let mut no_abort = SolveOptions::default();
        no_abort.use_early_abort = false;
        let mut no_prune = SolveOptions::default();
        no_prune.use_pair_pruning = false;
        for options in [SolveOptions::default(), SolveOptions::default().with_threads(3), no_abort, no_prune] {
            let other = solve(&p, r, &options).unwrap();
            prop_assert_eq!(other.optimal_cost, base.optimal_cost);
            prop_assert_eq!(&other.optimal_axes, &base.optimal_axes);
        }
    }

    #[test]
    fn warm_start_does_not_change_results((p, start) in profile_and_axis(3, 7, 6), r in rule()) {
        let base = solve(&p, r, &SolveOptions::default()).unwrap();
        let warm = SolveOptions { warm_start: Some(start), ..SolveOptions::default() };
        let other = solve(&p, r, &warm).unwrap();
        prop_assert_eq!(other.optimal_cost, base.optimal_cost);
        prop_assert_eq!(other.optimal_axes, base.optimal_axes);
    }

    #[test]
    fn rank_costs_vanish_exactly_on_single_peaked_rankings(
        (r, a) in (1usize..=8).prop_flat_map(|m| (order(m), axis_of(m))),
    ) {
        let r = RankingBallot::new(r).unwrap();
        let sp = is_single_peaked(&r, &a).unwrap();
        for rule in RankingRule::ALL {
            prop_assert_eq!(ranking_cost(rule, &r, &a).unwrap() == 0, sp);
            prop_assert_eq!(ranking_cost(rule, &r, &a).unwrap(), ranking_cost(rule, &r, &a.reverse()).unwrap());
        }
    }

    #[test]
    fn axis_distance_sees_only_reversal_classes(
        (a, b) in (1usize..=12).prop_flat_map(|m| (axis_of(m), axis_of(m))),
    ) {
        let d = axis_distance(&a, &b).unwrap();
        prop_assert_eq!(d, axis_distance(&canonicalize(&a), &canonicalize(&b)).unwrap());
        let m = a.len() as u64;
        prop_assert!(d <= m * m.saturating_sub(1) / 4);
    }

    #[test]
    fn equal_seeds_equal_samples(seed in any::<u64>(), which in 0usize..5) {
        let model = [
            NoiseModel::Maverick { p: 0.2 },
            NoiseModel::Flips { p: 0.1 },
            NoiseModel::Omissions { p: 0.3 },
            NoiseModel::Swaps { phi: 0.5 },
            NoiseModel::Noisy { sigma: 0.2, radius: 0.3 },
        ][which];
        let config = NoiseModelConfig { model, m: 6, n: 30, seed };
        let s = generate(&config).unwrap();
        prop_assert_eq!(&s, &generate(&config).unwrap());
        if let NoiseModel::Omissions { .. } = model {
            // an omission only removes approvals, so the ballot fits inside
            // the interval spanned by its own extremes on the truth
            for &(b, _) in s.profile.entries() {
                let span = s.axis.completion(b).unwrap();
                prop_assert_eq!(span.mask() & b.mask(), b.mask());
            }
        }
    }

    #[test]
    fn approval_files_round_trip(p in (1usize..=8).prop_flat_map(|m| profile_of(m, 8))) {
        let ProfileDocument::Approval(back) = parse_profile(&write_approval(&p)).unwrap() else {
            panic!("an approval file came back as rankings");
        };
        prop_assert_eq!(back.candidates().names(), p.candidates().names());
        prop_assert_eq!(preprocess(&back), preprocess(&p));
    }
}

/// Prefix definition: every top-k set is an interval.
fn single_peaked_by_prefixes(r: &[usize], a: &Axis) -> bool {
    (1..=r.len()).all(|k| is_interval(Ballot::new(r[..k].iter().copied()).unwrap(), a).unwrap())
}

/// Triple definition: no candidate between two others is ranked below both.
fn single_peaked_by_triples(r: &[usize], a: &Axis) -> bool {
    let mut rank = vec![0; r.len()];
    for (k, &c) in r.iter().enumerate() {
        rank[c] = k;
    }
    let o = a.order();
    for x in 0..o.len() {
        for y in x + 1..o.len() {
            for z in y + 1..o.len() {
                if rank[o[y]] > rank[o[x]] && rank[o[y]] > rank[o[z]] {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn single_peakedness_definitions_agree_exhaustively() {
    for m in 1..=5 {
        let all = permutations(m);
        for r in &all {
            let ballot = RankingBallot::new(r.clone()).unwrap();
            for o in &all {
                let a = Axis::new(o.clone()).unwrap();
                let sp = is_single_peaked(&ballot, &a).unwrap();
                assert_eq!(sp, single_peaked_by_prefixes(r, &a), "{r:?} on {o:?}");
                assert_eq!(sp, single_peaked_by_triples(r, &a), "{r:?} on {o:?}");
            }
        }
    }
}

#[test]
fn witnesses_reverify_and_genus_resists_clones() {
    use axis_rules::axioms::{fixtures, random_instance};
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for axiom in AxiomId::ALL {
        for rule in CostRule::ALL {
            let mut instances = fixtures(axiom);
            instances.extend((0..20).map(|_| random_instance(axiom, &mut rng)));
            for inst in &instances {
                let v = check_instance(axiom, rule, inst).unwrap();
                assert_eq!(v.holds, v.witness.is_none());
                if let Some(w) = v.witness {
                    assert!(w.reverify().unwrap(), "{axiom} {rule}: {}", w.detail);
                }
            }
        }
    }
    for inst in fixtures(AxiomId::CloneResistance)
        .into_iter()
        .chain((0..200).map(|_| random_instance(AxiomId::CloneResistance, &mut rng)))
    {
        assert!(check_instance(AxiomId::CloneResistance, CostRule::Genus, &inst).unwrap().holds);
    }
}
