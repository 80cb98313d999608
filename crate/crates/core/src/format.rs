//! Plain-text profile files.
//!
//! ```text
//! # comment
//! candidates : a,b,c,d      (optional; fixes order, admits unapproved names)
//! 4 : b,c,d                 (approval ballot with weight 4)
//! 1/3 : a>b>c>d             (ranking ballot with weight 1/3)
//! ```
//!
//! Weights are positive decimals or `p/q` fractions. Names are declared by
//! first use. A file holds approval lines or ranking lines, never both, and
//! every ranking must list every candidate exactly once.

use std::fmt::Write;

use crate::ballot::Ballot;
use crate::error::{Error, Result};
use crate::profile::{Candidates, Weight, WeightedProfile};
use crate::ranking::{RankingBallot, RankingProfile};

/// The contents of a profile file.
#[derive(Debug, Clone, PartialEq)]
pub enum ProfileDocument {
    Approval(WeightedProfile),
    Ranking(RankingProfile),
}

impl ProfileDocument {
    pub fn candidates(&self) -> &Candidates {
        match self {
            ProfileDocument::Approval(p) => p.candidates(),
            ProfileDocument::Ranking(p) => p.candidates(),
        }
    }
}

const DECLARATION: &str = "candidates";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses `3`, `2.5`, `.25` or `7/2` into an exact positive weight.
pub fn parse_weight(s: &str) -> Result<Weight> {
    let s = s.trim();
    let bad = || Error::InvalidWeight(format!("`{s}` is not a positive decimal or fraction"));
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let w = if let Some((p, q)) = s.split_once('/') {
        let (p, q) = (p.trim(), q.trim());
        if !digits(p) || !digits(q) {
            return Err(bad());
        }
        let (p, q): (u64, u64) = (p.parse().map_err(|_| Error::Overflow)?, q.parse().map_err(|_| Error::Overflow)?);
        if q == 0 {
            return Err(Error::InvalidWeight(format!("`{s}` divides by zero")));
        }
        Weight::new(p, q)
    } else {
        let (int, frac) = s.split_once('.').unwrap_or((s, "0"));
        if !(digits(int) || int.is_empty()) || !digits(frac) {
            return Err(bad());
        }
        let scale = u32::try_from(frac.len())
            .ok()
            .and_then(|k| 10u64.checked_pow(k))
            .ok_or(Error::Overflow)?;
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| Error::Overflow)? };
        let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| Error::Overflow)? };
        let num = int.checked_mul(scale).and_then(|v| v.checked_add(frac)).ok_or(Error::Overflow)?;
        Weight::new(num, scale)
    };
    if w == Weight::from_integer(0) {
        return Err(Error::InvalidWeight(format!("`{s}` is not positive")));
    }
    Ok(w)
}

/// Integers as `3`, terminating decimals as `2.5`, anything else as `p/q`.
pub fn format_weight(w: Weight) -> String {
    let (n, d) = (*w.numer(), *w.denom());
    if d == 1 {
        return n.to_string();
    }
    let (mut rest, mut twos, mut fives) = (d, 0u32, 0u32);
    while rest % 2 == 0 {
        rest /= 2;
        twos += 1;
    }
    while rest % 5 == 0 {
        rest /= 5;
        fives += 1;
    }
    if rest == 1 {
        let places = twos.max(fives);
        if let Some(p) = 10u64.checked_pow(places) {
            if let Some(scaled) = n.checked_mul(p / d) {
                return format!("{}.{:0width$}", scaled / p, scaled % p, width = places as usize);
            }
        }
    }
    format!("{n}/{d}")
}

enum Line {
    Approval(usize, Vec<usize>, Weight),
    Ranking(usize, Vec<usize>, Weight),
}

pub fn parse_profile(text: &str) -> Result<ProfileDocument> {
    let mut candidates = Candidates::new(Vec::<String>::new())?;
    let mut lines = Vec::new();
    let intern = |c: &mut Candidates, name: &str, line: usize| -> Result<usize> {
        match c.index_of(name) {
            Ok(i) => Ok(i),
            Err(_) => c.push(name.to_string()).map_err(|e| parse_error(line, e.to_string())),
        }
    };

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((head, body)) = content.split_once(':') else {
            return Err(parse_error(line, "expected `<weight> : <ballot>`"));
        };
        let (head, body) = (head.trim(), body.trim());
        if head == DECLARATION {
            if !lines.is_empty() {
                return Err(parse_error(line, "the candidate declaration must precede all ballots"));
            }
            for name in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                if candidates.index_of(name).is_ok() {
                    return Err(parse_error(line, format!("candidate `{name}` is declared twice")));
                }
                intern(&mut candidates, name, line)?;
            }
            continue;
        }
        let weight = parse_weight(head).map_err(|e| parse_error(line, e.to_string()))?;
        let ranking = body.contains('>');
        let sep = if ranking { '>' } else { ',' };
        let names: Vec<&str> = body.split(sep).map(str::trim).collect();
        if names.iter().any(|n| n.is_empty()) {
            return Err(parse_error(line, "empty candidate name"));
        }
        let mut ids = Vec::with_capacity(names.len());
        for name in names {
            let id = intern(&mut candidates, name, line)?;
            if ids.contains(&id) {
                return Err(parse_error(line, format!("candidate `{name}` listed twice")));
            }
            ids.push(id);
        }
        let entry = if ranking {
            Line::Ranking(line, ids, weight)
        } else {
            Line::Approval(line, ids, weight)
        };
        if let Some(first) = lines.first() {
            if matches!(first, Line::Ranking(..)) != ranking {
                return Err(parse_error(line, "approval and ranking ballots cannot be mixed"));
            }
        }
        lines.push(entry);
    }

    let Some(first) = lines.first() else {
        return Err(parse_error(text.lines().count(), "no ballots"));
    };
    let m = candidates.len();
    if matches!(first, Line::Ranking(..)) {
        let mut entries = Vec::with_capacity(lines.len());
        for l in lines {
            let Line::Ranking(line, ids, w) = l else { unreachable!("files are not mixed") };
            if ids.len() != m {
                return Err(parse_error(
                    line,
                    format!("a ranking must list all {m} candidates, this one lists {}", ids.len()),
                ));
            }
            entries.push((RankingBallot::new(ids).map_err(|e| parse_error(line, e.to_string()))?, w));
        }
        Ok(ProfileDocument::Ranking(RankingProfile::new(candidates, entries)?))
    } else {
        let mut entries = Vec::with_capacity(lines.len());
        for l in lines {
            let Line::Approval(line, ids, w) = l else { unreachable!("files are not mixed") };
            entries.push((Ballot::new(ids).map_err(|e| parse_error(line, e.to_string()))?, w));
        }
        Ok(ProfileDocument::Approval(WeightedProfile::new(candidates, entries)?))
    }
}

fn declaration(c: &Candidates) -> String {
    format!("{DECLARATION} : {}\n", c.names().join(","))
}

pub fn write_approval(profile: &WeightedProfile) -> String {
    let c = profile.candidates();
    let mut out = declaration(c);
    for &(ballot, w) in profile.entries() {
        let names: Vec<&str> = ballot.members().map(|i| c.name(i)).collect();
        writeln!(out, "{} : {}", format_weight(w), names.join(",")).unwrap();
    }
    out
}

pub fn write_ranking(profile: &RankingProfile) -> String {
    let c = profile.candidates();
    let mut out = declaration(c);
    for (ranking, w) in profile.entries() {
        let names: Vec<&str> = ranking.order().iter().map(|&i| c.name(i)).collect();
        writeln!(out, "{} : {}", format_weight(*w), names.join(">")).unwrap();
    }
    out
}

pub fn write_profile(doc: &ProfileDocument) -> String {
    match doc {
        ProfileDocument::Approval(p) => write_approval(p),
        ProfileDocument::Ranking(p) => write_ranking(p),
    }
}
