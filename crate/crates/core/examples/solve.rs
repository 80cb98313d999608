// Optimal axes of a small weighted profile under each rule.
//
// Four candidates, thirteen voters. Every rule picks a different set of
// axes, and the winners are reported up to reversal.

use axis_rules::{solve, CostRule, SolveOptions, WeightedProfile};

pub fn main() -> Result<(), axis_rules::Error> {
    let profile = WeightedProfile::from_letters(4, &[(4, "bcd"), (4, "ab"), (3, "ad"), (1, "ac"), (1, "bc")])?;
    let c = profile.candidates();
    for rule in CostRule::ALL {
        let r = solve(&profile, rule, &SolveOptions::default())?;
        let axes: Vec<String> = r.optimal_axes.iter().map(|a| c.format_axis(a)).collect();
        println!("{:<6} cost {:>2}  axes {}", rule.name(), r.optimal_cost, axes.join(" "));
    }
    Ok(())
}
