//! Integer programs for VD and BC in CPLEX LP format.
//!
//! `x_a_b = 1` means candidate `a` is left of `b`. Antisymmetry and the
//! triangle inequalities make `x` a total order. Weights are scaled to
//! integers by their common denominator, which the header records; for
//! integer weights the objective equals the profile cost.
//!
//! * VD: binary `z_i` is 1 when ballot `i` is deleted. For `a, c` approved
//!   and `b` not, `x_a_b + x_b_c - z_i <= 1`.
//! * BC: `p_a = sum_b x_b_a` is the 0-based position, `lo_i`/`hi_i` bound the
//!   positions of approved candidates, and ballot `i` costs
//!   `hi_i - lo_i + 1 - |A_i|`. The constant part rides on a variable `one`
//!   fixed to 1.

use std::fmt::Write;

use crate::costs::CostRule;
use crate::error::{Error, Result};
use crate::profile::{Weight, WeightedProfile};
use crate::solver::scale_weights;

pub fn export_ilp(profile: &WeightedProfile, rule: CostRule) -> Result<String> {
    if !matches!(rule, CostRule::Vd | CostRule::Bc) {
        return Err(Error::RuleUnsupported {
            rule: rule.to_string(),
            operation: "ILP export",
        });
    }
    let p = profile.preprocess();
    let m = p.num_candidates();
    let ws: Vec<Weight> = p.entries().iter().map(|e| e.1).collect();
    let (weights, scale) = scale_weights(&ws)?;
    let ballots: Vec<Vec<usize>> = p.entries().iter().map(|e| e.0.members().collect()).collect();

    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "\\ {} axis model over {m} candidates", rule).unwrap();
    for (c, name) in p.candidates().names().iter().enumerate() {
        writeln!(w, "\\ candidate {c}: {name}").unwrap();
    }
    writeln!(w, "\\ objective = {scale} x profile cost").unwrap();

    writeln!(w, "Minimize").unwrap();
    let mut terms: Vec<String> = Vec::new();
    match rule {
        CostRule::Vd => {
            for (i, &wi) in weights.iter().enumerate() {
                terms.push(format!("{wi} z_{i}"));
            }
        }
        _ => {
            let mut constant: i128 = 0;
            for (i, &wi) in weights.iter().enumerate() {
                terms.push(format!("{wi} hi_{i}"));
                terms.push(format!("- {wi} lo_{i}"));
                constant += wi as i128 * (1 - ballots[i].len() as i128);
            }
            if constant != 0 {
                terms.push(if constant < 0 {
                    format!("- {} one", -constant)
                } else {
                    format!("{constant} one")
                });
            }
        }
    }
    // an empty objective is spelled with a zero-weight placeholder
    let dummy = terms.is_empty();
    if dummy {
        terms.push("0 x_dummy".into());
    }
    writeln!(w, " obj: {}", join_terms(&terms)).unwrap();

    writeln!(w, "Subject To").unwrap();
    for a in 0..m {
        for b in a + 1..m {
            writeln!(w, " anti_{a}_{b}: x_{a}_{b} + x_{b}_{a} = 1").unwrap();
        }
    }
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                if a != b && b != c && a != c {
                    writeln!(w, " tri_{a}_{b}_{c}: x_{a}_{b} + x_{b}_{c} - x_{a}_{c} <= 1").unwrap();
                }
            }
        }
    }
    match rule {
        CostRule::Vd => {
            for (i, members) in ballots.iter().enumerate() {
                for &a in members {
                    for &c in members {
                        if a == c {
                            continue;
                        }
                        for b in (0..m).filter(|b| !members.contains(b)) {
                            writeln!(w, " del_{i}_{a}_{b}_{c}: x_{a}_{b} + x_{b}_{c} - z_{i} <= 1").unwrap();
                        }
                    }
                }
            }
        }
        _ => {
            for a in 0..m {
                let sum: Vec<String> = (0..m).filter(|&b| b != a).map(|b| format!("- x_{b}_{a}")).collect();
                writeln!(w, " pos_{a}: p_{a} {} = 0", sum.join(" ")).unwrap();
            }
            for (i, members) in ballots.iter().enumerate() {
                for &a in members {
                    writeln!(w, " lo_{i}_{a}: lo_{i} - p_{a} <= 0").unwrap();
                    writeln!(w, " hi_{i}_{a}: hi_{i} - p_{a} >= 0").unwrap();
                }
            }
        }
    }

    writeln!(w, "Bounds").unwrap();
    if rule == CostRule::Bc {
        let top = m.saturating_sub(1);
        for a in 0..m {
            writeln!(w, " 0 <= p_{a} <= {top}").unwrap();
        }
        for i in 0..ballots.len() {
            writeln!(w, " 0 <= lo_{i} <= {top}").unwrap();
            writeln!(w, " 0 <= hi_{i} <= {top}").unwrap();
        }
        writeln!(w, " one = 1").unwrap();
    }

    writeln!(w, "Binary").unwrap();
    for a in 0..m {
        for b in 0..m {
            if a != b {
                writeln!(w, " x_{a}_{b}").unwrap();
            }
        }
    }
    if rule == CostRule::Vd {
        for i in 0..ballots.len() {
            writeln!(w, " z_{i}").unwrap();
        }
    }
    if dummy {
        writeln!(out, " x_dummy").unwrap();
    }
    if rule == CostRule::Bc {
        writeln!(out, "Generals").unwrap();
        for a in 0..m {
            writeln!(out, " p_{a}").unwrap();
        }
        for i in 0..ballots.len() {
            writeln!(out, " lo_{i}").unwrap();
            writeln!(out, " hi_{i}").unwrap();
        }
    }
    writeln!(out, "End").unwrap();
    Ok(out)
}

fn join_terms(terms: &[String]) -> String {
    let mut s = String::new();
    for (k, t) in terms.iter().enumerate() {
        if k > 0 && !t.starts_with('-') {
            s.push_str(" + ");
        } else if k > 0 {
            s.push(' ');
        }
        s.push_str(t);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_in_order() {
        let p = WeightedProfile::from_letters(4, &[(4, "bcd"), (4, "ab"), (3, "ad"), (1, "ac"), (1, "bc")]).unwrap();
        for rule in [CostRule::Vd, CostRule::Bc] {
            let lp = export_ilp(&p, rule).unwrap();
            let at = |s: &str| lp.find(s).unwrap_or_else(|| panic!("missing {s}"));
            assert!(at("Minimize") < at("Subject To"));
            assert!(at("Subject To") < at("Bounds"));
            assert!(at("Bounds") < at("Binary"));
            assert!(lp.trim_end().ends_with("End"));
            assert!(lp.contains("x_0_1 + x_1_0 = 1"));
        }
        assert!(export_ilp(&p, CostRule::Ft).is_err());
    }

    #[test]
    fn linear_profile_has_empty_objective() {
        let p = WeightedProfile::from_letters(3, &[(1, "a")]).unwrap();
        let lp = export_ilp(&p, CostRule::Vd).unwrap();
        assert!(lp.contains("obj: 0 x_dummy"));
    }
}
