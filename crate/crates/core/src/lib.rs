//! Exact axis rules for approval profiles.
//!
//! Given weighted approval ballots over a set of candidates, an *axis* is a
//! left-to-right ordering of the candidates. The rules in [`costs`] charge
//! each ballot for how far it is from being an interval of the axis, and the
//! [`solver`] returns every axis of minimum total cost.
//!
//! ```
//! use axis_rules::{solve, CostRule, SolveOptions, WeightedProfile};
//!
//! let p = WeightedProfile::from_letters(4, &[(4, "bcd"), (4, "ab"), (3, "ad"), (1, "ac"), (1, "bc")])?;
//! let r = solve(&p, CostRule::Vd, &SolveOptions::default())?;
//! assert_eq!(p.candidates().format_axis(&r.optimal_axes[0]), "abcd");
//! # Ok::<(), axis_rules::Error>(())
//! ```

pub mod axioms;
pub mod axis;
pub mod ballot;
pub mod cli;
pub mod costs;
pub mod error;
pub mod format;
pub mod ilp;
pub mod linearity;
pub mod metrics;
pub mod profile;
pub mod ranking;
pub mod solver;
pub mod synthetic;

pub use axioms::{check_instance, search_counterexample, AxiomId, AxiomInstance, AxiomVerdict, Witness};
pub use axis::{approval_vector, canonical_axes, canonicalize, interfering_candidates, is_interval, Axis};
pub use ballot::{ApprovalVector, Ballot, MAX_CANDIDATES};
pub use costs::{ballot_cost, profile_cost, vector_cost, CostRule};
pub use error::{Error, Result};
pub use ilp::export_ilp;
pub use linearity::{coapproval_partition, consistent_axes, is_linear, CandidatePartition};
pub use metrics::{avg_distance_to_truth, axis_distance, kendall_tau, median_candidate};
pub use profile::{preprocess, Candidates, Weight, WeightedProfile};
pub use ranking::{is_single_peaked, ranking_cost, solve_ranking, RankingBallot, RankingProfile, RankingRule};
pub use solver::{
    greedy_warm_start, lower_bound_pair_removal, solve, solve_decomposed, PairGroup, SolveOptions, SolveResult,
};
pub use synthetic::{generate, mallows_sample, sample_interval_ballot, GroundTruthSample, NoiseModel, NoiseModelConfig};
