//! Noisy profiles around a hidden ground-truth axis.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand::distr::weighted::WeightedIndex;
use rand_distr::{Distribution, Normal};

use crate::axis::Axis;
use crate::ballot::{low_mask, Ballot, MAX_CANDIDATES};
use crate::error::{Error, Result};
use crate::profile::{Candidates, Weight, WeightedProfile};
use crate::ranking::{RankingBallot, RankingProfile};

/// How voters deviate from interval ballots of the truth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NoiseModel {
    /// With probability `p` a voter casts a uniformly random non-empty ballot.
    Maverick { p: f64 },
    /// Each candidate's approval is flipped with probability `p`.
    Flips { p: f64 },
    /// Each approved candidate is dropped with probability `p`.
    Omissions { p: f64 },
    /// Each voter sees a Mallows perturbation of the truth.
    Swaps { phi: f64 },
    /// Voters and candidates sit on `[0, 1]`; a voter perceives each
    /// candidate with Gaussian noise and approves those within `radius`.
    Noisy { sigma: f64, radius: f64 },
}

impl NoiseModel {
    pub fn name(&self) -> &'static str {
        match self {
            NoiseModel::Maverick { .. } => "maverick",
            NoiseModel::Flips { .. } => "flips",
            NoiseModel::Omissions { .. } => "omissions",
            NoiseModel::Swaps { .. } => "swaps",
            NoiseModel::Noisy { .. } => "noisy",
        }
    }

    /// `p=0.1`, `phi=0.5`, `sigma=0.1 r=0.4`.
    pub fn params(&self) -> String {
        match *self {
            NoiseModel::Maverick { p } | NoiseModel::Flips { p } | NoiseModel::Omissions { p } => format!("p={p}"),
            NoiseModel::Swaps { phi } => format!("phi={phi}"),
            NoiseModel::Noisy { sigma, radius } => format!("sigma={sigma} r={radius}"),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |what: String| Err(Error::ParameterDomain(what));
        match *self {
            NoiseModel::Maverick { p } | NoiseModel::Flips { p } | NoiseModel::Omissions { p } => {
                if !(0.0..0.5).contains(&p) {
                    return bad(format!("{}: p must lie in [0, 0.5), got {p}", self.name()));
                }
            }
            NoiseModel::Swaps { phi } => {
                if !(0.0..=1.0).contains(&phi) {
                    return bad(format!("swaps: phi must lie in [0, 1], got {phi}"));
                }
            }
            NoiseModel::Noisy { sigma, radius } => {
                if !(sigma >= 0.0 && sigma.is_finite()) {
                    return bad(format!("noisy: sigma must be non-negative, got {sigma}"));
                }
                if !(radius > 0.0 && radius.is_finite()) {
                    return bad(format!("noisy: radius must be positive, got {radius}"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NoiseModelConfig {
    pub model: NoiseModel,
    pub m: usize,
    pub n: usize,
    pub seed: u64,
}

/// Positions drawn by the noisy model.
#[derive(Debug, Clone, PartialEq)]
pub struct Positions {
    pub candidates: Vec<f64>,
    pub voters: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroundTruthSample {
    pub axis: Axis,
    /// One unit-weight entry per voter, in voter order.
    pub profile: WeightedProfile,
    /// Each voter's ranking by perceived distance, nearest first (noisy model only).
    pub rankings: Option<RankingProfile>,
    pub positions: Option<Positions>,
}

/// A uniformly random non-empty interval of `axis`.
pub fn sample_interval_ballot<R: Rng + ?Sized>(axis: &Axis, rng: &mut R) -> Ballot {
    let m = axis.len();
    assert!(m >= 1, "an axis needs a candidate");
    let mut t = rng.random_range(0..m * (m + 1) / 2);
    for len in 1..=m {
        let starts = m - len + 1;
        if t < starts {
            return Ballot::new(axis.order()[t..t + len].iter().copied()).expect("non-empty");
        }
        t -= starts;
    }
    unreachable!("t indexes one of the m(m+1)/2 intervals")
}

/// Exact Mallows draw around `center` by repeated insertion: the i-th
/// candidate of the center goes `k` places left of the end with weight `phi^k`.
pub fn mallows_sample<R: Rng + ?Sized>(center: &Axis, phi: f64, rng: &mut R) -> Axis {
    let mut order: Vec<usize> = Vec::with_capacity(center.len());
    for (i, &c) in center.order().iter().enumerate() {
        let weights: Vec<f64> = (0..=i).map(|j| phi.powi((i - j) as i32)).collect();
        let j = WeightedIndex::new(&weights).expect("the last slot has weight 1").sample(rng);
        order.insert(j, c);
    }
    Axis::from_order_unchecked(order)
}

pub fn generate(config: &NoiseModelConfig) -> Result<GroundTruthSample> {
    config.model.validate()?;
    let (m, n) = (config.m, config.n);
    if m == 0 || m > MAX_CANDIDATES {
        return Err(Error::ParameterDomain(format!("m must lie in 1..={MAX_CANDIDATES}, got {m}")));
    }
    if n == 0 {
        return Err(Error::ParameterDomain("n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let candidates = Candidates::letters(m);
    let one = Weight::from_integer(1);

    if let NoiseModel::Noisy { sigma, radius } = config.model {
        return Ok(noisy(&mut rng, candidates, n, sigma, radius));
    }

    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(&mut rng);
    let axis = Axis::from_order_unchecked(order);
    let entries = (0..n)
        .map(|_| (voter(&mut rng, &axis, config.model), one))
        .collect();
    Ok(GroundTruthSample {
        axis,
        profile: WeightedProfile::new(candidates, entries)?,
        rankings: None,
        positions: None,
    })
}

fn voter<R: Rng>(rng: &mut R, axis: &Axis, model: NoiseModel) -> Ballot {
    let m = axis.len();
    loop {
        let interval = sample_interval_ballot(axis, rng);
        let mask = match model {
            NoiseModel::Maverick { p } => {
                if rng.random_bool(p) {
                    rng.random_range(1..=low_mask(m))
                } else {
                    interval.mask()
                }
            }
            NoiseModel::Flips { p } => (0..m).fold(interval.mask(), |acc, c| {
                if rng.random_bool(p) {
                    acc ^ 1 << c
                } else {
                    acc
                }
            }),
            NoiseModel::Omissions { p } => interval
                .members()
                .fold(interval.mask(), |acc, c| if rng.random_bool(p) { acc & !(1 << c) } else { acc }),
            NoiseModel::Swaps { phi } => sample_interval_ballot(&mallows_sample(axis, phi, rng), rng).mask(),
            NoiseModel::Noisy { .. } => unreachable!("handled separately"),
        };
        if let Ok(b) = Ballot::from_mask(mask) {
            return b;
        }
    }
}

fn noisy<R: Rng>(rng: &mut R, candidates: Candidates, n: usize, sigma: f64, radius: f64) -> GroundTruthSample {
    let m = candidates.len();
    let cand_pos: Vec<f64> = (0..m).map(|_| rng.random::<f64>()).collect();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| cand_pos[a].total_cmp(&cand_pos[b]).then(a.cmp(&b)));
    let axis = Axis::from_order_unchecked(order);
    let noise = Normal::new(0.0, sigma).expect("sigma was validated");
    let one = Weight::from_integer(1);

    let mut voters = Vec::with_capacity(n);
    let mut ballots = Vec::with_capacity(n);
    let mut rankings = Vec::with_capacity(n);
    while ballots.len() < n {
        let v = rng.random::<f64>();
        let dist: Vec<f64> = cand_pos.iter().map(|&p| (v - (p + noise.sample(rng))).abs()).collect();
        let mask = (0..m).filter(|&c| dist[c] <= radius).fold(0u64, |acc, c| acc | 1 << c);
        let Ok(ballot) = Ballot::from_mask(mask) else {
            continue;
        };
        let mut ranked: Vec<usize> = (0..m).collect();
        ranked.sort_by(|&a, &b| dist[a].total_cmp(&dist[b]).then(a.cmp(&b)));
        voters.push(v);
        ballots.push((ballot, one));
        rankings.push((RankingBallot::new(ranked).expect("a permutation"), one));
    }
    GroundTruthSample {
        axis,
        profile: WeightedProfile::new(candidates.clone(), ballots).expect("n > 0 unit ballots"),
        rankings: Some(RankingProfile::new(candidates, rankings).expect("n > 0 complete rankings")),
        positions: Some(Positions {
            candidates: cand_pos,
            voters,
        }),
    }
}
