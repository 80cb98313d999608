//! Test-side oracles written straight from the definitions, sharing nothing
//! with the library's cost code beyond the data types.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use axis_rules::{Axis, Ballot, CostRule, Weight, WeightedProfile};
use rand::Rng;

/// Every permutation of `0..m`, in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for c in 0..used.len() {
            if !used[c] {
                used[c] = true;
                prefix.push(c);
                go(prefix, used, out);
                prefix.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// Approval flags in axis order.
pub fn flags(ballot: Ballot, order: &[usize]) -> Vec<bool> {
    order.iter().map(|&c| ballot.contains(c)).collect()
}

fn span(v: &[bool]) -> Option<(usize, usize)> {
    let first = v.iter().position(|&b| b)?;
    let last = v.iter().rposition(|&b| b)?;
    Some((first, last))
}

pub fn oracle_interval(v: &[bool]) -> bool {
    match span(v) {
        Some((f, l)) => v[f..=l].iter().all(|&b| b),
        None => true,
    }
}

/// Smallest Hamming distance from `v` to a non-empty run of ones.
pub fn oracle_mf(v: &[bool]) -> u64 {
    let m = v.len();
    let mut best = u64::MAX;
    for i in 0..m {
        for j in i..m {
            let d = (0..m).filter(|&k| v[k] != (i <= k && k <= j)).count() as u64;
            best = best.min(d);
        }
    }
    best
}

pub fn oracle_bc(v: &[bool]) -> u64 {
    match span(v) {
        Some((f, l)) => v[f..=l].iter().filter(|&&b| !b).count() as u64,
        None => 0,
    }
}

/// Forbidden triples: approved, unapproved, approved in axis order.
pub fn oracle_ft(v: &[bool]) -> u64 {
    let m = v.len();
    let mut n = 0;
    for x in 0..m {
        for y in x + 1..m {
            for z in y + 1..m {
                if v[x] && !v[y] && v[z] {
                    n += 1;
                }
            }
        }
    }
    n
}

/// Maximal runs of zeros strictly between ones.
pub fn oracle_genus(v: &[bool]) -> u64 {
    let Some((f, l)) = span(v) else { return 0 };
    (f + 1..=l).filter(|&k| v[k] && !v[k - 1]).count() as u64
}

/// Kendall-tau distance between two orders of the same candidates.
pub fn oracle_kendall(a: &[usize], b: &[usize]) -> u64 {
    let mut pos = vec![0; b.len()];
    for (i, &c) in b.iter().enumerate() {
        pos[c] = i;
    }
    let mut d = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if pos[a[i]] > pos[a[j]] {
                d += 1;
            }
        }
    }
    d
}

/// Fewest adjacent swaps turning `order` into an order where `ballot` is an
/// interval, found by trying every target order.
pub fn oracle_ms(ballot: Ballot, order: &[usize]) -> u64 {
    permutations(order.len())
        .into_iter()
        .filter(|p| oracle_interval(&flags(ballot, p)))
        .map(|p| oracle_kendall(order, &p))
        .min()
        .expect("some order makes any ballot an interval")
}

pub fn oracle_cost(rule: CostRule, ballot: Ballot, order: &[usize]) -> u64 {
    let v = flags(ballot, order);
    match rule {
        CostRule::Vd => u64::from(!oracle_interval(&v)),
        CostRule::Mf => oracle_mf(&v),
        CostRule::Bc => oracle_bc(&v),
        // the closed form of the swap distance is itself under test, so the
        // hierarchy oracle counts swaps by search only for small m
        CostRule::Ms if order.len() <= 6 => oracle_ms(ballot, order),
        CostRule::Ms => ms_push_out(&v),
        CostRule::Ft => oracle_ft(&v),
        CostRule::Genus => oracle_genus(&v),
    }
}

/// Each interfering candidate pushed out past the nearer side.
fn ms_push_out(v: &[bool]) -> u64 {
    let total = v.iter().filter(|&&b| b).count() as u64;
    let mut left = 0;
    let mut cost = 0;
    for &b in v {
        if b {
            left += 1;
        } else {
            cost += left.min(total - left);
        }
    }
    cost
}

pub fn oracle_profile_cost(rule: CostRule, p: &WeightedProfile, order: &[usize]) -> Weight {
    p.entries()
        .iter()
        .map(|&(b, w)| w * Weight::from_integer(oracle_cost(rule, b, order)))
        .sum()
}

/// Minimum cost and all optimal orders, each reduced to the orientation
/// whose first entry is smaller than its last.
pub fn oracle_solve(rule: CostRule, p: &WeightedProfile) -> (Weight, BTreeSet<Vec<usize>>) {
    let m = p.num_candidates();
    let mut best: Option<Weight> = None;
    let mut axes = BTreeSet::new();
    for order in permutations(m) {
        if m > 1 && order[0] > order[m - 1] {
            continue;
        }
        let c = oracle_profile_cost(rule, p, &order);
        match best {
            Some(b) if c > b => {}
            Some(b) if c == b => {
                axes.insert(order);
            }
            _ => {
                best = Some(c);
                axes.clear();
                axes.insert(order);
            }
        }
    }
    (best.expect("m >= 1"), axes)
}

pub fn orders(axes: &[Axis]) -> BTreeSet<Vec<usize>> {
    axes.iter().map(|a| a.canonical().order().to_vec()).collect()
}

/// Random profile with `n` ballots over `m` letters and small integer weights.
pub fn random_profile<R: Rng>(rng: &mut R, m: usize, n: usize) -> WeightedProfile {
    let entries: Vec<(Ballot, Weight)> = (0..n)
        .map(|_| {
            let mask = rng.random_range(1..1u64 << m);
            (Ballot::from_mask(mask).unwrap(), Weight::from_integer(rng.random_range(1..=4)))
        })
        .collect();
    WeightedProfile::new(axis_rules::Candidates::letters(m), entries).unwrap()
}

/// Random profile whose ballots are all intervals of a random hidden order.
pub fn random_linear_profile<R: Rng>(rng: &mut R, m: usize, n: usize) -> WeightedProfile {
    let mut order: Vec<usize> = (0..m).collect();
    for i in (1..m).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    let entries: Vec<(Ballot, Weight)> = (0..n)
        .map(|_| {
            let i = rng.random_range(0..m);
            let j = rng.random_range(i..m);
            (Ballot::new(order[i..=j].iter().copied()).unwrap(), Weight::from_integer(rng.random_range(1..=3)))
        })
        .collect();
    WeightedProfile::new(axis_rules::Candidates::letters(m), entries).unwrap()
}

/// A linear program in CPLEX LP format, parsed just far enough to evaluate
/// its objective and check an assignment against its rows and bounds.
#[derive(Debug, Default)]
pub struct Lp {
    pub objective: Vec<(i128, String)>,
    pub rows: Vec<(String, Vec<(i128, String)>, String, i128)>,
    pub bounds: Vec<(Option<i128>, String, Option<i128>)>,
    pub binary: BTreeSet<String>,
    pub general: BTreeSet<String>,
    pub minimize: bool,
}

fn parse_terms(s: &str) -> Result<Vec<(i128, String)>, String> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    let mut out = Vec::new();
    let mut sign = 1i128;
    let mut coef: Option<i128> = None;
    for t in toks {
        match t {
            "+" => sign = 1,
            "-" => sign = -1,
            _ => {
                if let Ok(v) = t.parse::<i128>() {
                    if coef.is_some() {
                        return Err(format!("two numbers in a row near `{t}`"));
                    }
                    coef = Some(v);
                } else {
                    let valid = t.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                        && t.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                    if !valid {
                        return Err(format!("bad variable `{t}`"));
                    }
                    out.push((sign * coef.unwrap_or(1), t.to_string()));
                    sign = 1;
                    coef = None;
                }
            }
        }
    }
    if coef.is_some() {
        return Err("dangling coefficient".into());
    }
    Ok(out)
}

pub fn parse_lp(text: &str) -> Result<Lp, String> {
    let mut lp = Lp::default();
    let mut section = "";
    let mut seen = Vec::new();
    for raw in text.lines() {
        let line = raw.split('\\').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let lower = line.to_ascii_lowercase();
        let header = match lower.as_str() {
            "minimize" | "maximize" => Some("objective"),
            "subject to" => Some("rows"),
            "bounds" => Some("bounds"),
            "binary" | "binaries" => Some("binary"),
            "generals" => Some("general"),
            "end" => Some("end"),
            _ => None,
        };
        if let Some(h) = header {
            lp.minimize |= lower == "minimize";
            section = h;
            seen.push(h);
            continue;
        }
        match section {
            "objective" => {
                let body = line.split_once(':').map_or(line, |(_, b)| b);
                lp.objective.extend(parse_terms(body)?);
            }
            "rows" => {
                let (name, body) = line.split_once(':').ok_or("unnamed row")?;
                let op = ["<=", ">=", "="].into_iter().find(|op| body.contains(op)).ok_or("row without sense")?;
                let (lhs, rhs) = body.split_once(op).unwrap();
                let rhs: i128 = rhs.trim().parse().map_err(|_| format!("bad rhs in {name}"))?;
                lp.rows.push((name.trim().into(), parse_terms(lhs)?, op.into(), rhs));
            }
            "bounds" => {
                let parts: Vec<&str> = line.split_whitespace().collect();
                match parts.as_slice() {
                    [lo, "<=", v, "<=", hi] => {
                        lp.bounds.push((Some(lo.parse().map_err(|_| "bad bound")?), v.to_string(), Some(hi.parse().map_err(|_| "bad bound")?)))
                    }
                    [v, "=", x] => {
                        let x: i128 = x.parse().map_err(|_| "bad bound")?;
                        lp.bounds.push((Some(x), v.to_string(), Some(x)))
                    }
                    _ => return Err(format!("unsupported bound `{line}`")),
                }
            }
            "binary" => {
                lp.binary.extend(line.split_whitespace().map(String::from));
            }
            "general" => {
                lp.general.extend(line.split_whitespace().map(String::from));
            }
            _ => return Err(format!("text outside any section: `{line}`")),
        }
    }
    let expected_order = ["objective", "rows", "bounds", "binary", "general", "end"];
    let mut last = 0;
    for s in &seen {
        let k = expected_order.iter().position(|e| e == s).unwrap();
        if k < last {
            return Err(format!("section {s} out of order"));
        }
        last = k;
    }
    if seen.last() != Some(&"end") {
        return Err("missing End".into());
    }
    Ok(lp)
}

impl Lp {
    pub fn variables(&self) -> BTreeSet<String> {
        let mut v: BTreeSet<String> = self.objective.iter().map(|t| t.1.clone()).collect();
        for (_, terms, _, _) in &self.rows {
            v.extend(terms.iter().map(|t| t.1.clone()));
        }
        v
    }

    pub fn objective_at(&self, x: &BTreeMap<String, i128>) -> i128 {
        self.objective.iter().map(|(c, v)| c * x[v]).sum()
    }

    /// Names of the rows, bounds and integrality conditions `x` breaks.
    pub fn violations(&self, x: &BTreeMap<String, i128>) -> Vec<String> {
        let mut bad = Vec::new();
        for (name, terms, op, rhs) in &self.rows {
            let lhs: i128 = terms.iter().map(|(c, v)| c * x[v]).sum();
            let ok = match op.as_str() {
                "<=" => lhs <= *rhs,
                ">=" => lhs >= *rhs,
                _ => lhs == *rhs,
            };
            if !ok {
                bad.push(name.clone());
            }
        }
        for (lo, v, hi) in &self.bounds {
            let val = x[v];
            if lo.is_some_and(|l| val < l) || hi.is_some_and(|h| val > h) {
                bad.push(format!("bound {v}"));
            }
        }
        for v in &self.binary {
            if !(0..=1).contains(&x[v]) {
                bad.push(format!("binary {v}"));
            }
        }
        bad
    }
}

/// The LP variable values encoding `order` on the exported model of the
/// preprocessed profile `pre`: order bits, positions, per-ballot extremes and
/// deletion flags.
pub fn ilp_assignment(pre: &WeightedProfile, order: &[usize]) -> BTreeMap<String, i128> {
    let m = order.len();
    let mut pos = vec![0; m];
    for (i, &c) in order.iter().enumerate() {
        pos[c] = i as i128;
    }
    let mut x = BTreeMap::new();
    for a in 0..m {
        for b in 0..m {
            if a != b {
                x.insert(format!("x_{a}_{b}"), i128::from(pos[a] < pos[b]));
            }
        }
        x.insert(format!("p_{a}"), pos[a]);
    }
    for (i, &(ballot, _)) in pre.entries().iter().enumerate() {
        let at: Vec<i128> = ballot.members().map(|c| pos[c]).collect();
        x.insert(format!("z_{i}"), i128::from(!oracle_interval(&flags(ballot, order))));
        x.insert(format!("lo_{i}"), *at.iter().min().unwrap());
        x.insert(format!("hi_{i}"), *at.iter().max().unwrap());
    }
    x.insert("one".into(), 1);
    x.insert("x_dummy".into(), 0);
    x
}
