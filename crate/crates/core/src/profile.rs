//! Candidate registries and weighted approval profiles.

use std::collections::{BTreeMap, HashMap};

use num_rational::Ratio;

use crate::axis::Axis;
use crate::ballot::{low_mask, Ballot, MAX_CANDIDATES};
use crate::error::{Error, Result};

/// Exact non-negative voter weight.
pub type Weight = Ratio<u64>;

/// Names of the candidates `0..m`, unique and non-empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidates {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Candidates {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut out = Candidates {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            out.push(name.into())?;
        }
        Ok(out)
    }

    /// `a, b, c, …` for up to 26 candidates, `c1, c2, …` beyond.
    pub fn letters(m: usize) -> Self {
        let names: Vec<String> = if m <= 26 {
            (0..m).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
        } else {
            (1..=m).map(|i| format!("c{i}")).collect()
        };
        Candidates::new(names).expect("generated names are unique")
    }

    /// Registers `name` and returns its index.
    pub fn push(&mut self, name: String) -> Result<usize> {
        let name = name.trim().to_string();
        if name.is_empty() {
            return Err(Error::UnknownCandidate(name));
        }
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateCandidate(name));
        }
        if self.names.len() == MAX_CANDIDATES {
            return Err(Error::TooManyCandidates {
                got: MAX_CANDIDATES + 1,
                max: MAX_CANDIDATES,
            });
        }
        let i = self.names.len();
        self.index.insert(name.clone(), i);
        self.names.push(name);
        Ok(i)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name.trim())
            .copied()
            .ok_or_else(|| Error::UnknownCandidate(name.trim().to_string()))
    }

    fn single_char_names(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    fn split_names<'a>(&self, s: &'a str) -> Vec<&'a str> {
        let s = s.trim();
        if s.contains(',') || !self.single_char_names() {
            s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect()
        } else {
            s.char_indices().map(|(i, c)| &s[i..i + c.len_utf8()]).collect()
        }
    }

    /// Parses `"a,b,c"` (or `"abc"` when every name is one character).
    pub fn parse_ballot(&self, s: &str) -> Result<Ballot> {
        let idx = self
            .split_names(s)
            .into_iter()
            .map(|n| self.index_of(n))
            .collect::<Result<Vec<_>>>()?;
        Ballot::new(idx)
    }

    /// Parses an axis written like a ballot; it must list every candidate once.
    pub fn parse_axis(&self, s: &str) -> Result<Axis> {
        let order = self
            .split_names(s)
            .into_iter()
            .map(|n| self.index_of(n))
            .collect::<Result<Vec<_>>>()?;
        if order.len() != self.len() {
            return Err(Error::InvalidAxis(format!(
                "`{}` names {} of {} candidates",
                s.trim(),
                order.len(),
                self.len()
            )));
        }
        Axis::new(order)
    }

    pub fn axis_names(&self, axis: &Axis) -> Vec<String> {
        axis.order().iter().map(|&c| self.names[c].clone()).collect()
    }

    /// `abcd` when every name is a single character, `x, y, z` otherwise.
    pub fn format_axis(&self, axis: &Axis) -> String {
        self.format_list(axis.order().iter().copied())
    }

    pub fn format_ballot(&self, ballot: Ballot) -> String {
        format!("{{{}}}", self.format_list(ballot.members()))
    }

    fn format_list(&self, items: impl Iterator<Item = usize>) -> String {
        let names: Vec<&str> = items.map(|c| self.names[c].as_str()).collect();
        if self.single_char_names() {
            names.concat()
        } else {
            names.join(", ")
        }
    }

    /// Candidates kept by [`WeightedProfile::restrict`], renamed accordingly.
    pub fn restrict(&self, keep: &[usize]) -> Candidates {
        Candidates::new(keep.iter().map(|&c| self.names[c].clone())).expect("subset of unique names")
    }
}

/// A candidate registry together with weighted approval ballots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedProfile {
    candidates: Candidates,
    entries: Vec<(Ballot, Weight)>,
}

impl WeightedProfile {
    /// Validated constructor: ballots must only name registered candidates
    /// and the total weight must be positive.
    pub fn new(candidates: Candidates, entries: Vec<(Ballot, Weight)>) -> Result<Self> {
        if candidates.is_empty() {
            return Err(Error::EmptyProfile);
        }
        let p = WeightedProfile::from_parts(candidates, entries)?;
        if p.total_weight() == Weight::from_integer(0) {
            return Err(Error::InvalidWeight("total weight must be positive".into()));
        }
        Ok(p)
    }

    /// Like [`WeightedProfile::new`] but accepts an empty or zero-weight entry
    /// list, as produced by preprocessing and restriction.
    pub fn from_parts(candidates: Candidates, entries: Vec<(Ballot, Weight)>) -> Result<Self> {
        let m = candidates.len();
        for (b, _) in &entries {
            if b.span() > m {
                return Err(Error::CandidateMismatch(b.span() - 1));
            }
        }
        Ok(WeightedProfile { candidates, entries })
    }

    /// Convenience builder: `names` declares the candidates, each entry is a
    /// unit count and a ballot written as for [`Candidates::parse_ballot`].
    pub fn build(names: &[&str], entries: &[(u64, &str)]) -> Result<Self> {
        let candidates = Candidates::new(names.iter().copied())?;
        let entries = entries
            .iter()
            .map(|&(w, s)| Ok((candidates.parse_ballot(s)?, Weight::from_integer(w))))
            .collect::<Result<Vec<_>>>()?;
        WeightedProfile::new(candidates, entries)
    }

    /// [`WeightedProfile::build`] over the letter candidates `a..`.
    pub fn from_letters(m: usize, entries: &[(u64, &str)]) -> Result<Self> {
        let c = Candidates::letters(m);
        let names: Vec<&str> = c.names().iter().map(String::as_str).collect();
        WeightedProfile::build(&names, entries)
    }

    pub fn candidates(&self) -> &Candidates {
        &self.candidates
    }

    pub fn num_candidates(&self) -> usize {
        self.candidates.len()
    }

    pub fn entries(&self) -> &[(Ballot, Weight)] {
        &self.entries
    }

    pub fn total_weight(&self) -> Weight {
        self.entries.iter().map(|e| e.1).sum()
    }

    /// Sum of weights of ballots approving each candidate.
    pub fn approval_scores(&self) -> Vec<Weight> {
        let mut scores = vec![Weight::from_integer(0); self.num_candidates()];
        for (b, w) in &self.entries {
            for c in b.members() {
                scores[c] += *w;
            }
        }
        scores
    }

    /// Candidates approved by no positive-weight ballot.
    pub fn never_approved(&self) -> Vec<usize> {
        let approved = self
            .entries
            .iter()
            .filter(|e| e.1 > Weight::from_integer(0))
            .fold(0u64, |acc, e| acc | e.0.mask());
        (0..self.num_candidates()).filter(|&c| approved >> c & 1 == 0).collect()
    }

    /// Every ballot approves all but one candidate.
    pub fn is_veto(&self) -> bool {
        let m = self.num_candidates();
        m >= 2 && self.entries.iter().all(|(b, _)| b.len() == m - 1)
    }

    /// `a` and `b` are approved by exactly the same ballots.
    pub fn are_clones(&self, a: usize, b: usize) -> bool {
        a != b && self.entries.iter().all(|(ballot, _)| ballot.contains(a) == ballot.contains(b))
    }

    /// Adds a new candidate `name` approved exactly where `of` is.
    pub fn with_clone(&self, of: usize, name: &str) -> Result<WeightedProfile> {
        let mut candidates = self.candidates.clone();
        let new = candidates.push(name.to_string())?;
        let entries = self
            .entries
            .iter()
            .map(|&(b, w)| {
                let mask = if b.contains(of) { b.mask() | 1 << new } else { b.mask() };
                (Ballot::from_mask(mask).expect("non-empty"), w)
            })
            .collect();
        WeightedProfile::from_parts(candidates, entries)
    }

    /// Profile restricted to `keep` (sorted ascending). Ballots left empty are dropped.
    pub fn restrict(&self, keep: &[usize]) -> WeightedProfile {
        let entries = self
            .entries
            .iter()
            .filter_map(|&(b, w)| b.restrict(keep).map(|r| (r, w)))
            .collect();
        WeightedProfile {
            candidates: self.candidates.restrict(keep),
            entries,
        }
    }

    /// Restriction to every candidate but `removed`.
    pub fn without(&self, removed: usize) -> WeightedProfile {
        let keep: Vec<usize> = (0..self.num_candidates()).filter(|&c| c != removed).collect();
        self.restrict(&keep)
    }

    /// `self + other` over the same candidates.
    pub fn combine(&self, other: &WeightedProfile) -> Result<WeightedProfile> {
        if self.candidates.names() != other.candidates.names() {
            return Err(Error::AxisSizeMismatch {
                left: self.num_candidates(),
                right: other.num_candidates(),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(WeightedProfile {
            candidates: self.candidates.clone(),
            entries,
        })
    }

    pub fn with_ballot(&self, ballot: Ballot, weight: Weight) -> Result<WeightedProfile> {
        let mut entries = self.entries.clone();
        entries.push((ballot, weight));
        WeightedProfile::from_parts(self.candidates.clone(), entries)
    }

    /// Copy with entry `index` holding `ballot` instead.
    pub fn replace_entry(&self, index: usize, ballot: Ballot) -> Result<WeightedProfile> {
        let mut entries = self.entries.clone();
        entries[index].0 = ballot;
        WeightedProfile::from_parts(self.candidates.clone(), entries)
    }

    /// Merges identical ballots, drops ballots that are intervals of every
    /// axis (singletons, the full set) and zero weights, and sorts by
    /// decreasing weight. Per-axis costs are unchanged for every rule.
    pub fn preprocess(&self) -> WeightedProfile {
        let full = low_mask(self.num_candidates());
        let mut merged: BTreeMap<Ballot, Weight> = BTreeMap::new();
        for &(b, w) in &self.entries {
            if b.is_singleton() || b.mask() == full || w == Weight::from_integer(0) {
                continue;
            }
            *merged.entry(b).or_insert_with(|| Weight::from_integer(0)) += w;
        }
        let mut entries: Vec<(Ballot, Weight)> = merged.into_iter().collect();
        entries.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
        WeightedProfile {
            candidates: self.candidates.clone(),
            entries,
        }
    }
}

/// Free-function form of [`WeightedProfile::preprocess`].
pub fn preprocess(profile: &WeightedProfile) -> WeightedProfile {
    profile.preprocess()
}
