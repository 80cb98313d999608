// Axis rules over ranking ballots. VD-rank counts rankings that are not
// single-peaked; FT-rank counts, for every candidate ranked below two
// others that flank it, the triples it breaks.

use axis_rules::{is_single_peaked, solve_ranking, RankingProfile, RankingRule, SolveOptions};

pub fn main() -> Result<(), axis_rules::Error> {
    let p = RankingProfile::from_letters(5, &[(3, "cadbe"), (2, "dceba"), (2, "bdace"), (1, "eadcb"), (2, "abcde")])?;
    let c = p.candidates();
    for rule in RankingRule::ALL {
        let r = solve_ranking(&p, rule, &SolveOptions::default())?;
        println!("{}: cost {}", rule.name(), r.optimal_cost);
        for axis in &r.optimal_axes {
            let mut peaked = 0;
            for (ranking, _) in p.entries() {
                peaked += usize::from(is_single_peaked(ranking, axis)?);
            }
            println!("  {}  ({peaked} of {} rankings single-peaked)", c.format_axis(axis), p.entries().len());
        }
    }
    Ok(())
}
