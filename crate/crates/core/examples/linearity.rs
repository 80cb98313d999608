// Consecutive-ones recognition: is there an axis on which every ballot is
// an interval, and which axes are they?

use axis_rules::{coapproval_partition, consistent_axes, is_linear, WeightedProfile};

pub fn main() -> Result<(), axis_rules::Error> {
    let linear = WeightedProfile::from_letters(6, &[(3, "abc"), (2, "bcd"), (1, "de"), (4, "f")])?;
    let star = WeightedProfile::from_letters(4, &[(1, "ab"), (1, "ac"), (1, "ad")])?;

    for (label, p) in [("chain", &linear), ("star", &star)] {
        let c = p.candidates();
        let classes: Vec<String> = coapproval_partition(p)
            .classes()
            .iter()
            .map(|cls| cls.iter().map(|&i| c.name(i)).collect())
            .collect();
        println!("{label}: linear = {}, co-approval classes {{{}}}", is_linear(p)?, classes.join("} {"));
        for axis in consistent_axes(p)? {
            println!("  {}", c.format_axis(&axis));
        }
    }
    Ok(())
}
