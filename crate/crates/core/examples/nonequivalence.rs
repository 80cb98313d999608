// A seven-candidate profile on which the five hierarchy rules all choose
// different axes. Each rule's optimum is compared against the others.

use axis_rules::{profile_cost, solve, CostRule, SolveOptions, WeightedProfile};

pub fn main() -> Result<(), axis_rules::Error> {
    let n = 1000;
    let profile = WeightedProfile::from_letters(
        7,
        &[
            (18, "ab"),
            (n, "bc"),
            (n, "cd"),
            (15, "de"),
            (4, "ef"),
            (1, "ag"),
            (20, "bcfg"),
            (15, "aefg"),
            (2, "adg"),
        ],
    )?;
    let c = profile.candidates();
    let options = SolveOptions::default().with_threads(4);

    let mut winners = Vec::new();
    for rule in CostRule::HIERARCHY {
        let r = solve(&profile, rule, &options)?;
        println!(
            "{:<3} optimum {:>3} on {} ({} axes examined, {} pruned)",
            rule.name(),
            r.optimal_cost,
            c.format_axis(&r.optimal_axes[0]),
            r.axes_examined,
            r.axes_pruned
        );
        winners.push(r.optimal_axes[0].clone());
    }

    println!("\n{:<9}{}", "axis", CostRule::HIERARCHY.map(|r| format!("{:>6}", r.name())).concat());
    for axis in &winners {
        print!("{:<9}", c.format_axis(axis));
        for rule in CostRule::HIERARCHY {
            print!("{:>6}", profile_cost(rule, &profile, axis)?.to_string());
        }
        println!();
    }
    Ok(())
}
