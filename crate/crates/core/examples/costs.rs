// Per-ballot costs of five ballots on the axis `abcde` under every rule.

use axis_rules::{ballot_cost, Axis, Candidates, CostRule};

pub fn main() -> Result<(), axis_rules::Error> {
    let c = Candidates::letters(5);
    let axis: Axis = c.parse_axis("abcde")?;

    print!("{:<10}", "ballot");
    for rule in CostRule::ALL {
        print!("{:>7}", rule.name());
    }
    println!();
    for ballot in ["bcd", "ae", "abde", "abe", "ace"] {
        let b = c.parse_ballot(ballot)?;
        print!("{:<10}", c.format_ballot(b));
        for rule in CostRule::ALL {
            print!("{:>7}", ballot_cost(rule, b, &axis)?);
        }
        println!("   {}", axis.approval_vector(b)?);
    }
    Ok(())
}
