//! Executable axiom checks on concrete instances, with the counterexample
//! profiles from the literature as fixtures and a seeded random search.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::axis::Axis;
use crate::ballot::{low_mask, Ballot};
use crate::costs::CostRule;
use crate::error::{Error, Result};
use crate::linearity::consistent_axes_with;
use crate::metrics::median_candidate;
use crate::profile::{Candidates, Weight, WeightedProfile};
use crate::solver::{solve, solve_by_classes, SolveOptions, SolveResult};
use crate::synthetic::sample_interval_ballot;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    Stability,
    BallotMonotonicity,
    Clearance,
    VetoCentrism,
    CloneProximity,
    CloneResistance,
    Heredity,
    PartitionConsistency,
    ConsistencyWithLinearity,
}

impl AxiomId {
    pub const ALL: [AxiomId; 9] = [
        AxiomId::Stability,
        AxiomId::BallotMonotonicity,
        AxiomId::Clearance,
        AxiomId::VetoCentrism,
        AxiomId::CloneProximity,
        AxiomId::CloneResistance,
        AxiomId::Heredity,
        AxiomId::PartitionConsistency,
        AxiomId::ConsistencyWithLinearity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::Stability => "stability",
            AxiomId::BallotMonotonicity => "ballot-monotonicity",
            AxiomId::Clearance => "clearance",
            AxiomId::VetoCentrism => "veto-centrism",
            AxiomId::CloneProximity => "clone-proximity",
            AxiomId::CloneResistance => "clone-resistance",
            AxiomId::Heredity => "heredity",
            AxiomId::PartitionConsistency => "partition-consistency",
            AxiomId::ConsistencyWithLinearity => "consistency-with-linearity",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name() == key)
            .ok_or_else(|| Error::RuleUnsupported {
                rule: s.to_string(),
                operation: "axiom lookup",
            })
    }
}

/// What each axiom quantifies over, fixed to concrete values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomInstance {
    /// `f(P) ∩ f(P + {A})` must be non-empty; `ballot` is added with weight 1.
    Stability { profile: WeightedProfile, ballot: Ballot },
    /// Completing entry `entry` on a chosen axis keeps that axis chosen.
    BallotMonotonicity { profile: WeightedProfile, entry: usize },
    /// Never-approved candidates never interfere on a chosen axis.
    Clearance { profile: WeightedProfile },
    /// A median of every chosen axis is a most-approved candidate.
    VetoCentrism { profile: WeightedProfile },
    /// Nothing sits between the clones unless approved wherever they are.
    CloneProximity { profile: WeightedProfile, clones: (usize, usize) },
    /// Deleting `clones.1` commutes with choosing axes.
    CloneResistance { profile: WeightedProfile, clones: (usize, usize) },
    /// Chosen axes restrict to chosen axes of the restricted profile.
    Heredity { profile: WeightedProfile, subset: Vec<usize> },
    /// Chosen axes are exactly the concatenations of per-class choices.
    PartitionConsistency { profile: WeightedProfile },
    /// On a linear profile the chosen axes are the consistent ones.
    ConsistencyWithLinearity { profile: WeightedProfile },
}

impl AxiomInstance {
    pub fn axiom(&self) -> AxiomId {
        match self {
            AxiomInstance::Stability { .. } => AxiomId::Stability,
            AxiomInstance::BallotMonotonicity { .. } => AxiomId::BallotMonotonicity,
            AxiomInstance::Clearance { .. } => AxiomId::Clearance,
            AxiomInstance::VetoCentrism { .. } => AxiomId::VetoCentrism,
            AxiomInstance::CloneProximity { .. } => AxiomId::CloneProximity,
            AxiomInstance::CloneResistance { .. } => AxiomId::CloneResistance,
            AxiomInstance::Heredity { .. } => AxiomId::Heredity,
            AxiomInstance::PartitionConsistency { .. } => AxiomId::PartitionConsistency,
            AxiomInstance::ConsistencyWithLinearity { .. } => AxiomId::ConsistencyWithLinearity,
        }
    }

    pub fn profile(&self) -> &WeightedProfile {
        match self {
            AxiomInstance::Stability { profile, .. }
            | AxiomInstance::BallotMonotonicity { profile, .. }
            | AxiomInstance::Clearance { profile }
            | AxiomInstance::VetoCentrism { profile }
            | AxiomInstance::CloneProximity { profile, .. }
            | AxiomInstance::CloneResistance { profile, .. }
            | AxiomInstance::Heredity { profile, .. }
            | AxiomInstance::PartitionConsistency { profile }
            | AxiomInstance::ConsistencyWithLinearity { profile } => profile,
        }
    }
}

/// An axis involved in a violation, written with candidate names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedAxis {
    pub role: String,
    pub names: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub axiom: AxiomId,
    pub rule: CostRule,
    pub instance: AxiomInstance,
    pub axes: Vec<NamedAxis>,
    pub detail: String,
}

impl Witness {
    /// Re-runs the check; a genuine witness comes back violated.
    pub fn reverify(&self) -> Result<bool> {
        Ok(!check_instance(self.axiom, self.rule, &self.instance)?.holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub holds: bool,
    /// Present exactly when `holds` is false.
    pub witness: Option<Witness>,
}

fn options() -> SolveOptions {
    SolveOptions {
        use_decomposition: false,
        ..SolveOptions::default()
    }
}

fn chosen(profile: &WeightedProfile, rule: CostRule) -> Result<SolveResult> {
    solve(profile, rule, &options())
}

fn named(c: &Candidates, role: impl Into<String>, axis: &Axis) -> NamedAxis {
    NamedAxis {
        role: role.into(),
        names: c.axis_names(axis),
    }
}

struct Violation {
    axes: Vec<NamedAxis>,
    detail: String,
}

pub fn check_instance(axiom: AxiomId, rule: CostRule, instance: &AxiomInstance) -> Result<AxiomVerdict> {
    if instance.axiom() != axiom {
        return Err(Error::MalformedInstance(format!(
            "{axiom} needs its own instance, got one for {}",
            instance.axiom()
        )));
    }
    let violation = match instance {
        AxiomInstance::Stability { profile, ballot } => stability(profile, *ballot, rule)?,
        AxiomInstance::BallotMonotonicity { profile, entry } => monotonicity(profile, *entry, rule)?,
        AxiomInstance::Clearance { profile } => clearance(profile, rule)?,
        AxiomInstance::VetoCentrism { profile } => veto_centrism(profile, rule)?,
        AxiomInstance::CloneProximity { profile, clones } => clone_proximity(profile, *clones, rule)?,
        AxiomInstance::CloneResistance { profile, clones } => clone_resistance(profile, *clones, rule)?,
        AxiomInstance::Heredity { profile, subset } => heredity(profile, subset, rule)?,
        AxiomInstance::PartitionConsistency { profile } => partition_consistency(profile, rule)?,
        AxiomInstance::ConsistencyWithLinearity { profile } => linearity(profile, rule)?,
    };
    Ok(match violation {
        None => AxiomVerdict {
            holds: true,
            witness: None,
        },
        Some(v) => AxiomVerdict {
            holds: false,
            witness: Some(Witness {
                axiom,
                rule,
                instance: instance.clone(),
                axes: v.axes,
                detail: v.detail,
            }),
        },
    })
}

fn stability(p: &WeightedProfile, ballot: Ballot, rule: CostRule) -> Result<Option<Violation>> {
    let before = chosen(p, rule)?;
    let q = p.with_ballot(ballot, Weight::from_integer(1))?;
    let after = chosen(&q, rule)?;
    if before.optimal_axes.iter().any(|a| after.contains(a)) {
        return Ok(None);
    }
    let c = p.candidates();
    let mut axes: Vec<NamedAxis> = before.optimal_axes.iter().map(|a| named(c, "optimal for P", a)).collect();
    axes.extend(after.optimal_axes.iter().map(|a| named(c, "optimal for P + A", a)));
    Ok(Some(Violation {
        axes,
        detail: format!(
            "adding {} moves every optimum: cost {} before, {} after, no common axis",
            c.format_ballot(ballot),
            before.optimal_cost,
            after.optimal_cost
        ),
    }))
}

fn monotonicity(p: &WeightedProfile, entry: usize, rule: CostRule) -> Result<Option<Violation>> {
    let Some(&(ballot, _)) = p.entries().get(entry) else {
        return Err(Error::MalformedInstance(format!("no entry {entry}")));
    };
    let c = p.candidates();
    for axis in chosen(p, rule)?.optimal_axes {
        if axis.is_interval(ballot)? {
            continue;
        }
        let completed = axis.completion(ballot)?;
        let q = p.replace_entry(entry, completed)?;
        let after = chosen(&q, rule)?;
        if !after.contains(&axis) {
            let mut axes = vec![named(c, "optimal before completion", &axis)];
            axes.extend(after.optimal_axes.iter().map(|a| named(c, "optimal after completion", a)));
            return Ok(Some(Violation {
                axes,
                detail: format!(
                    "completing {} to {} on {} drops that axis",
                    c.format_ballot(ballot),
                    c.format_ballot(completed),
                    c.format_axis(&axis)
                ),
            }));
        }
    }
    Ok(None)
}

fn clearance(p: &WeightedProfile, rule: CostRule) -> Result<Option<Violation>> {
    let never = p.never_approved();
    if never.is_empty() {
        return Err(Error::MalformedInstance("clearance needs a never-approved candidate".into()));
    }
    let c = p.candidates();
    for axis in chosen(p, rule)?.optimal_axes {
        for &(ballot, w) in p.entries() {
            if w == Weight::from_integer(0) {
                continue;
            }
            let inside = axis.interfering_candidates(ballot)?;
            if let Some(&x) = never.iter().find(|x| inside.contains(x)) {
                return Ok(Some(Violation {
                    axes: vec![named(c, "optimal", &axis)],
                    detail: format!(
                        "never-approved {} interferes with {} on {}",
                        c.name(x),
                        c.format_ballot(ballot),
                        c.format_axis(&axis)
                    ),
                }));
            }
        }
    }
    Ok(None)
}

fn veto_centrism(p: &WeightedProfile, rule: CostRule) -> Result<Option<Violation>> {
    if !p.is_veto() {
        return Err(Error::MalformedInstance("not a veto profile".into()));
    }
    let scores = p.approval_scores();
    let top = *scores.iter().max().expect("m >= 2");
    let c = p.candidates();
    for axis in chosen(p, rule)?.optimal_axes {
        let medians = median_candidate(&axis);
        if !medians.iter().any(|&x| scores[x] == top) {
            let names: Vec<&str> = medians.iter().map(|&x| c.name(x)).collect();
            return Ok(Some(Violation {
                axes: vec![named(c, "optimal", &axis)],
                detail: format!(
                    "median {} of {} scores below the top approval score {top}",
                    names.join("/"),
                    c.format_axis(&axis)
                ),
            }));
        }
    }
    Ok(None)
}

fn check_clones(p: &WeightedProfile, (a, b): (usize, usize)) -> Result<()> {
    let m = p.num_candidates();
    if a >= m || b >= m || !p.are_clones(a, b) {
        return Err(Error::MalformedInstance(format!("candidates {a} and {b} are not clones")));
    }
    Ok(())
}

fn clone_proximity(p: &WeightedProfile, (a, b): (usize, usize), rule: CostRule) -> Result<Option<Violation>> {
    check_clones(p, (a, b))?;
    let c = p.candidates();
    for axis in chosen(p, rule)?.optimal_axes {
        for &x in axis.between(a, b) {
            for &(ballot, w) in p.entries() {
                if w != Weight::from_integer(0) && ballot.contains(a) && !ballot.contains(x) {
                    return Ok(Some(Violation {
                        axes: vec![named(c, "optimal", &axis)],
                        detail: format!(
                            "{} sits between clones {} and {} on {} but is missing from {}",
                            c.name(x),
                            c.name(a),
                            c.name(b),
                            c.format_axis(&axis),
                            c.format_ballot(ballot)
                        ),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn clone_resistance(p: &WeightedProfile, (a, b): (usize, usize), rule: CostRule) -> Result<Option<Violation>> {
    check_clones(p, (a, b))?;
    let keep: Vec<usize> = (0..p.num_candidates()).filter(|&x| x != b).collect();
    let reduced = p.restrict(&keep);
    let full = chosen(p, rule)?;
    let small = chosen(&reduced, rule)?;
    let (c, rc) = (p.candidates(), reduced.candidates());
    let mut restrictions = BTreeSet::new();
    for axis in &full.optimal_axes {
        let r = axis.restrict(&keep).canonical();
        if !small.contains(&r) {
            return Ok(Some(Violation {
                axes: vec![
                    named(c, "optimal with the clone", axis),
                    named(rc, "its restriction", &r),
                    named(rc, "optimal without the clone", &small.optimal_axes[0]),
                ],
                detail: format!(
                    "{} is optimal but its restriction {} is not once {} is deleted",
                    c.format_axis(axis),
                    rc.format_axis(&r),
                    c.name(b)
                ),
            }));
        }
        restrictions.insert(r);
    }
    for r in &small.optimal_axes {
        if !restrictions.contains(r) {
            return Ok(Some(Violation {
                axes: vec![named(rc, "optimal without the clone", r)],
                detail: format!(
                    "{} is optimal after deleting {} but no optimal axis with the clone restricts to it",
                    rc.format_axis(r),
                    c.name(b)
                ),
            }));
        }
    }
    Ok(None)
}

fn heredity(p: &WeightedProfile, subset: &[usize], rule: CostRule) -> Result<Option<Violation>> {
    let m = p.num_candidates();
    let sorted = subset.windows(2).all(|w| w[0] < w[1]);
    if subset.is_empty() || !sorted || subset.iter().any(|&x| x >= m) {
        return Err(Error::MalformedInstance("subset must be non-empty, ascending and in range".into()));
    }
    let sub = p.restrict(subset);
    let small = chosen(&sub, rule)?;
    let (c, sc) = (p.candidates(), sub.candidates());
    for axis in chosen(p, rule)?.optimal_axes {
        let r = axis.restrict(subset).canonical();
        if !small.contains(&r) {
            return Ok(Some(Violation {
                axes: vec![named(c, "optimal", &axis), named(sc, "its restriction", &r)],
                detail: format!(
                    "restriction {} of optimal {} is not optimal on the subset",
                    sc.format_axis(&r),
                    c.format_axis(&axis)
                ),
            }));
        }
    }
    Ok(None)
}

fn partition_consistency(p: &WeightedProfile, rule: CostRule) -> Result<Option<Violation>> {
    let plain = chosen(p, rule)?;
    let by_classes = solve_by_classes(p, rule, &options())?;
    let c = p.candidates();
    if let Some(a) = plain.optimal_axes.iter().find(|a| !by_classes.contains(a)) {
        return Ok(Some(Violation {
            axes: vec![named(c, "optimal", a)],
            detail: format!(
                "{} is optimal but is not a concatenation of per-class optima",
                c.format_axis(a)
            ),
        }));
    }
    if let Some(a) = by_classes.optimal_axes.iter().find(|a| !plain.contains(a)) {
        return Ok(Some(Violation {
            axes: vec![named(c, "concatenation of class optima", a)],
            detail: format!("{} combines per-class optima but is not optimal", c.format_axis(a)),
        }));
    }
    Ok(None)
}

fn linearity(p: &WeightedProfile, rule: CostRule) -> Result<Option<Violation>> {
    let con = consistent_axes_with(p, &options())?;
    if con.is_empty() {
        return Err(Error::MalformedInstance("profile is not linear".into()));
    }
    let got = chosen(p, rule)?.optimal_axes;
    if got == con {
        return Ok(None);
    }
    let c = p.candidates();
    let odd = got
        .iter()
        .find(|a| con.binary_search(a).is_err())
        .or_else(|| con.iter().find(|a| got.binary_search(a).is_err()))
        .expect("the sets differ");
    Ok(Some(Violation {
        axes: vec![named(c, "in exactly one of f(P) and con(P)", odd)],
        detail: format!("{} separates the chosen and the consistent axes", c.format_axis(odd)),
    }))
}

fn letters(m: usize, entries: &[(u64, &str)]) -> WeightedProfile {
    WeightedProfile::from_letters(m, entries).expect("fixture")
}

fn named_profile(names: &[&str], entries: &[(u64, &str)]) -> WeightedProfile {
    WeightedProfile::build(names, entries).expect("fixture")
}

/// Counterexample profiles from the literature, plus a few instances that
/// must hold, for one axiom.
pub fn fixtures(axiom: AxiomId) -> Vec<AxiomInstance> {
    match axiom {
        AxiomId::Stability => {
            let profile = letters(6, &[(1, "abe"), (1, "abce"), (1, "bcdef")]);
            let ballot = profile.candidates().parse_ballot("abdf").unwrap();
            vec![AxiomInstance::Stability { profile, ballot }]
        }
        AxiomId::BallotMonotonicity => {
            // every 4-subset of six candidates once; abcf is completed
            let mut entries = Vec::new();
            let mut target = 0;
            for mask in 0u64..64 {
                if mask.count_ones() == 4 {
                    if mask == 0b100111 {
                        target = entries.len();
                    }
                    entries.push((Ballot::from_mask(mask).unwrap(), Weight::from_integer(1)));
                }
            }
            let profile = WeightedProfile::new(Candidates::letters(6), entries).unwrap();
            vec![AxiomInstance::BallotMonotonicity { profile, entry: target }]
        }
        AxiomId::Clearance => vec![AxiomInstance::Clearance {
            profile: letters(5, &[(1, "ab"), (1, "ac"), (1, "ad")]),
        }],
        AxiomId::VetoCentrism => vec![
            AxiomInstance::VetoCentrism {
                profile: letters(5, &[(1, "bcde"), (2, "acde"), (3, "abde"), (4, "abce"), (5, "abcd")]),
            },
            AxiomInstance::VetoCentrism {
                profile: letters(
                    6,
                    &[(2, "bcdef"), (3, "acdef"), (4, "abdef"), (5, "abcef"), (6, "abcdf"), (7, "abcde")],
                ),
            },
        ],
        AxiomId::CloneProximity => vec![
            AxiomInstance::CloneProximity {
                profile: named_profile(
                    &["x", "a1", "a2", "a3", "x'"],
                    &[(2, "a1,a2"), (2, "a2,a3"), (1, "x,x',a1,a3")],
                ),
                clones: (0, 4),
            },
            AxiomInstance::CloneProximity {
                profile: named_profile(
                    &["a", "a'", "b", "b'", "x", "x'"],
                    &[(1, "a,a',b,b'"), (1, "b,b',x,x'"), (1, "x,x',a,a'")],
                ),
                clones: (4, 5),
            },
        ],
        AxiomId::CloneResistance => vec![
            AxiomInstance::CloneResistance {
                profile: named_profile(&["a", "a'", "b", "c"], &[(3, "b,a,a'"), (4, "c,a,a'"), (2, "b,c")]),
                clones: (0, 1),
            },
            // MF witness, found by random search
            AxiomInstance::CloneResistance {
                profile: named_profile(
                    &["a", "b", "c", "d", "e", "e'"],
                    &[(2, "b,c"), (2, "a,c"), (1, "a,b"), (2, "a,d,e,e'"), (1, "a,b,c,d"), (3, "b,e,e'")],
                ),
                clones: (4, 5),
            },
            AxiomInstance::CloneResistance {
                profile: named_profile(&["a", "a'", "b", "c", "d"], &[(3, "a',a,b"), (3, "b,c"), (1, "a',a,c,d")]),
                clones: (0, 1),
            },
        ],
        AxiomId::Heredity => vec![AxiomInstance::Heredity {
            profile: letters(4, &[(1, "ab"), (1, "ac"), (1, "ad")]),
            subset: vec![0, 1, 2],
        }],
        AxiomId::PartitionConsistency => vec![
            AxiomInstance::PartitionConsistency {
                profile: named_profile(
                    &["a", "b", "c", "d", "w", "x", "y", "z"],
                    &[(5, "abc"), (4, "cd"), (3, "xy"), (2, "wxy"), (1, "abd"), (1, "ac"), (1, "wyz")],
                ),
            },
            AxiomInstance::PartitionConsistency {
                profile: letters(5, &[(1, "ab"), (1, "ac"), (1, "ad")]),
            },
        ],
        AxiomId::ConsistencyWithLinearity => vec![
            AxiomInstance::ConsistencyWithLinearity {
                profile: letters(6, &[(1, "abe"), (1, "abce"), (1, "bcdef")]),
            },
            AxiomInstance::ConsistencyWithLinearity {
                profile: letters(3, &[(1, "ab"), (1, "bc")]),
            },
        ],
    }
}

fn random_mask<R: Rng + ?Sized>(rng: &mut R, m: usize) -> u64 {
    rng.random_range(1..=low_mask(m))
}

fn random_profile<R: Rng + ?Sized>(rng: &mut R, m: usize, n: usize) -> WeightedProfile {
    let entries = (0..n)
        .map(|_| {
            let b = Ballot::from_mask(random_mask(rng, m)).unwrap();
            (b, Weight::from_integer(rng.random_range(1..=3)))
        })
        .collect();
    WeightedProfile::new(Candidates::letters(m), entries).unwrap()
}

fn cloned_profile<R: Rng + ?Sized>(rng: &mut R) -> (WeightedProfile, (usize, usize)) {
    let m = rng.random_range(3..=5);
    let n = rng.random_range(2..=6);
    let base = random_profile(rng, m, n);
    let a = rng.random_range(0..m);
    let name = format!("{}'", base.candidates().name(a));
    (base.with_clone(a, &name).expect("fresh name"), (a, m))
}

/// A random instance of `axiom` at desk scale.
pub fn random_instance<R: Rng + ?Sized>(axiom: AxiomId, rng: &mut R) -> AxiomInstance {
    match axiom {
        AxiomId::Stability => {
            let m = rng.random_range(3..=6);
            let n = rng.random_range(2..=6);
            let profile = random_profile(rng, m, n);
            let ballot = Ballot::from_mask(random_mask(rng, m)).unwrap();
            AxiomInstance::Stability { profile, ballot }
        }
        AxiomId::BallotMonotonicity => {
            let m = rng.random_range(3..=5);
            let n = rng.random_range(2..=6);
            let profile = random_profile(rng, m, n);
            let entry = rng.random_range(0..n);
            AxiomInstance::BallotMonotonicity { profile, entry }
        }
        AxiomId::Clearance => {
            let m = rng.random_range(4..=6);
            let n = rng.random_range(2..=6);
            let x = rng.random_range(0..m);
            let mut entries = Vec::new();
            while entries.len() < n {
                let mask = random_mask(rng, m) & !(1 << x);
                if let Ok(b) = Ballot::from_mask(mask) {
                    entries.push((b, Weight::from_integer(rng.random_range(1..=3))));
                }
            }
            AxiomInstance::Clearance {
                profile: WeightedProfile::new(Candidates::letters(m), entries).unwrap(),
            }
        }
        AxiomId::VetoCentrism => {
            let m = rng.random_range(4..=7);
            let n = rng.random_range(3..=9);
            let entries = (0..n)
                .map(|_| {
                    let vetoed = rng.random_range(0..m);
                    let b = Ballot::from_mask(low_mask(m) & !(1 << vetoed)).unwrap();
                    (b, Weight::from_integer(rng.random_range(1..=3)))
                })
                .collect();
            AxiomInstance::VetoCentrism {
                profile: WeightedProfile::new(Candidates::letters(m), entries).unwrap(),
            }
        }
        AxiomId::CloneProximity => {
            let (profile, clones) = cloned_profile(rng);
            AxiomInstance::CloneProximity { profile, clones }
        }
        AxiomId::CloneResistance => {
            let (profile, clones) = cloned_profile(rng);
            AxiomInstance::CloneResistance { profile, clones }
        }
        AxiomId::Heredity => {
            let m = rng.random_range(3..=6);
            let n = rng.random_range(2..=6);
            let profile = random_profile(rng, m, n);
            let mut subset: Vec<usize> = (0..m).filter(|_| rng.random_bool(0.6)).collect();
            if subset.len() < 2 {
                subset = vec![0, m - 1];
            }
            AxiomInstance::Heredity { profile, subset }
        }
        AxiomId::PartitionConsistency => {
            // ballots drawn inside one of two random blocks, sometimes with an
            // extra candidate nobody approves
            let m = rng.random_range(4..=7);
            let n = rng.random_range(2..=7);
            let block: Vec<bool> = (0..m).map(|_| rng.random_bool(0.5)).collect();
            let idle = rng.random_bool(0.3).then(|| rng.random_range(0..m));
            let mut entries = Vec::new();
            while entries.len() < n {
                let side = rng.random_bool(0.5);
                let mask = (0..m)
                    .filter(|&c| block[c] == side && Some(c) != idle && rng.random_bool(0.6))
                    .fold(0u64, |acc, c| acc | 1 << c);
                if let Ok(b) = Ballot::from_mask(mask) {
                    entries.push((b, Weight::from_integer(rng.random_range(1..=3))));
                }
            }
            AxiomInstance::PartitionConsistency {
                profile: WeightedProfile::new(Candidates::letters(m), entries).unwrap(),
            }
        }
        AxiomId::ConsistencyWithLinearity => {
            let m = rng.random_range(3..=7);
            let n = rng.random_range(1..=8);
            let mut order: Vec<usize> = (0..m).collect();
            rand::seq::SliceRandom::shuffle(order.as_mut_slice(), rng);
            let truth = Axis::new(order).unwrap();
            let entries = (0..n)
                .map(|_| (sample_interval_ballot(&truth, rng), Weight::from_integer(rng.random_range(1..=3))))
                .collect();
            AxiomInstance::ConsistencyWithLinearity {
                profile: WeightedProfile::new(Candidates::letters(m), entries).unwrap(),
            }
        }
    }
}

/// Tries the fixtures, then up to `budget` random instances; returns the
/// first violation found, already re-verified.
pub fn search_counterexample<R: Rng + ?Sized>(
    axiom: AxiomId,
    rule: CostRule,
    budget: usize,
    rng: &mut R,
) -> Result<Option<Witness>> {
    for instance in fixtures(axiom) {
        if let Some(w) = check_instance(axiom, rule, &instance)?.witness {
            return Ok(Some(w));
        }
    }
    random_counterexample(axiom, rule, budget, rng)
}

/// Random instances only.
pub fn random_counterexample<R: Rng + ?Sized>(
    axiom: AxiomId,
    rule: CostRule,
    budget: usize,
    rng: &mut R,
) -> Result<Option<Witness>> {
    for _ in 0..budget {
        let instance = random_instance(axiom, rng);
        if let Some(w) = check_instance(axiom, rule, &instance)?.witness {
            debug_assert!(w.reverify()?);
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(axiom: AxiomId, rule: CostRule, i: usize) -> AxiomVerdict {
        check_instance(axiom, rule, &fixtures(axiom)[i]).unwrap()
    }

    #[test]
    fn clearance_fixture() {
        for rule in [CostRule::Vd, CostRule::Mf] {
            let v = verdict(AxiomId::Clearance, rule, 0);
            assert!(!v.holds);
            assert!(v.witness.unwrap().reverify().unwrap());
        }
        for rule in [CostRule::Bc, CostRule::Ms, CostRule::Ft] {
            assert!(verdict(AxiomId::Clearance, rule, 0).holds);
        }
    }

    #[test]
    fn heredity_fails_everywhere() {
        for rule in CostRule::ALL {
            assert!(!verdict(AxiomId::Heredity, rule, 0).holds, "{rule}");
        }
    }

    #[test]
    fn instances_must_match() {
        let inst = &fixtures(AxiomId::Clearance)[0];
        assert!(matches!(
            check_instance(AxiomId::Stability, CostRule::Vd, inst),
            Err(Error::MalformedInstance(_))
        ));
        let not_veto = AxiomInstance::VetoCentrism {
            profile: letters(4, &[(1, "ab")]),
        };
        assert!(check_instance(AxiomId::VetoCentrism, CostRule::Ft, &not_veto).is_err());
    }

    #[test]
    fn names_round_trip() {
        for a in AxiomId::ALL {
            assert_eq!(a.name().parse::<AxiomId>().unwrap(), a);
        }
        assert!("nonsense".parse::<AxiomId>().is_err());
    }
}
