//! Goodness-of-fit checks for the random samplers. Seeds are fixed, so the
//! outcomes are reproducible; thresholds are loose enough that a correct
//! sampler passes for essentially any seed.

use std::collections::BTreeMap;

use axis_rules::{generate, mallows_sample, sample_interval_ballot, Axis, NoiseModel, NoiseModelConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Upper-tail p-value of Pearson's statistic for `observed` against `expected` probabilities.
fn chi_square_p(observed: &[u64], expected: &[f64]) -> f64 {
    let n: u64 = observed.iter().sum();
    let stat: f64 = observed
        .iter()
        .zip(expected)
        .map(|(&o, &p)| {
            let e = p * n as f64;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    1.0 - ChiSquared::new((observed.len() - 1) as f64).unwrap().cdf(stat)
}

fn kendall(a: &[usize], b: &[usize]) -> i32 {
    let mut pos = vec![0; b.len()];
    for (i, &c) in b.iter().enumerate() {
        pos[c] = i;
    }
    let mut d = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            d += i32::from(pos[a[i]] > pos[a[j]]);
        }
    }
    d
}

#[test]
fn interval_sampler_is_uniform() {
    let axis = Axis::new(vec![3, 0, 4, 1, 2]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for _ in 0..100_000 {
        let b = sample_interval_ballot(&axis, &mut rng);
        assert!(axis.is_interval(b).unwrap());
        *counts.entry(b.mask()).or_default() += 1;
    }
    assert_eq!(counts.len(), 15);
    let observed: Vec<u64> = counts.into_values().collect();
    let p = chi_square_p(&observed, &[1.0 / 15.0; 15]);
    assert!(p > 1e-3, "p = {p}");
}

#[test]
fn mallows_at_one_is_uniform() {
    let center = Axis::new(vec![2, 0, 3, 1]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for _ in 0..48_000 {
        *counts.entry(mallows_sample(&center, 1.0, &mut rng).order().to_vec()).or_default() += 1;
    }
    assert_eq!(counts.len(), 24);
    let observed: Vec<u64> = counts.into_values().collect();
    let p = chi_square_p(&observed, &[1.0 / 24.0; 24]);
    assert!(p > 1e-3, "p = {p}");
}

#[test]
fn mallows_follows_its_law() {
    let phi: f64 = 0.5;
    let center = Axis::new(vec![1, 2, 0]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for _ in 0..60_000 {
        *counts.entry(mallows_sample(&center, phi, &mut rng).order().to_vec()).or_default() += 1;
    }
    assert_eq!(counts.len(), 6);
    let z: f64 = counts.keys().map(|o| phi.powi(kendall(o, center.order()))).sum();
    assert!((z - 1.0 * 1.5 * 1.75).abs() < 1e-12);
    let expected: Vec<f64> = counts.keys().map(|o| phi.powi(kendall(o, center.order())) / z).collect();
    let observed: Vec<u64> = counts.into_values().collect();
    let p = chi_square_p(&observed, &expected);
    assert!(p > 1e-3, "p = {p}");
}

#[test]
fn maverick_fraction_matches_its_expectation() {
    let (m, p) = (7usize, 0.3);
    let mut non_interval = 0u64;
    let mut total = 0u64;
    for seed in 0..100 {
        let s = generate(&NoiseModelConfig {
            model: NoiseModel::Maverick { p },
            m,
            n: 100,
            seed,
        })
        .unwrap();
        for &(b, _) in s.profile.entries() {
            total += 1;
            non_interval += u64::from(!s.axis.is_interval(b).unwrap());
        }
    }
    let frac = non_interval as f64 / total as f64;
    // a maverick's uniform ballot is an interval with probability 28/127
    let intervals = (m * (m + 1) / 2) as f64;
    let expected = p * (1.0 - intervals / ((1u64 << m) - 1) as f64);
    let sd = (expected * (1.0 - expected) / total as f64).sqrt();
    assert!(frac <= p);
    assert!((frac - expected).abs() < 4.0 * sd, "fraction {frac}, expected {expected}");
}

#[test]
fn noiseless_noisy_model_votes_intervals() {
    let s = generate(&NoiseModelConfig {
        model: NoiseModel::Noisy { sigma: 0.0, radius: 0.3 },
        m: 8,
        n: 200,
        seed: 4,
    })
    .unwrap();
    for &(b, _) in s.profile.entries() {
        assert!(s.axis.is_interval(b).unwrap());
    }
    let rankings = s.rankings.unwrap();
    for (r, _) in rankings.entries() {
        assert!(axis_rules::is_single_peaked(r, &s.axis).unwrap());
    }
}
