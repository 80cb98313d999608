// Export the VD and BC models as integer programs in CPLEX LP format, for
// use with an external MIP solver.

use axis_rules::{export_ilp, CostRule, WeightedProfile};

pub fn main() -> Result<(), axis_rules::Error> {
    let p = WeightedProfile::from_letters(4, &[(4, "bcd"), (4, "ab"), (3, "ad"), (1, "ac"), (1, "bc")])?;
    for rule in [CostRule::Vd, CostRule::Bc] {
        let lp = export_ilp(&p, rule)?;
        let rows = lp.lines().filter(|l| l.contains(':') && !l.starts_with('\\')).count();
        println!("=== {} ({} lines, {rows} labelled rows)", rule.name(), lp.lines().count());
        for line in lp.lines().take(12) {
            println!("{line}");
        }
        println!("...");
    }
    Ok(())
}
