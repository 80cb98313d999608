// Rules that satisfy partition consistency can solve each co-approval class
// on its own. Two blocks of four candidates shrink an 8! search to two 4!
// searches, with the same answer.

use std::time::Instant;

use axis_rules::{solve, solve_decomposed, CostRule, SolveOptions, WeightedProfile};

pub fn main() -> Result<(), axis_rules::Error> {
    let p = WeightedProfile::from_letters(
        8,
        &[(5, "abc"), (4, "cd"), (1, "abd"), (1, "ac"), (3, "fg"), (2, "efg"), (1, "egh"), (2, "fh")],
    )?;
    let plain = SolveOptions {
        use_decomposition: false,
        ..SolveOptions::default()
    };
    for rule in [CostRule::Bc, CostRule::Ms, CostRule::Ft] {
        let t = Instant::now();
        let whole = solve(&p, rule, &plain)?;
        let t_whole = t.elapsed();
        let t = Instant::now();
        let split = solve_decomposed(&p, rule, &plain)?;
        let t_split = t.elapsed();
        assert_eq!(whole.optimal_axes, split.optimal_axes);
        println!(
            "{}: cost {} with {} optimal axes; whole {:?} ({} examined), split {:?} ({} examined)",
            rule.name(),
            whole.optimal_cost,
            whole.optimal_axes.len(),
            t_whole,
            whole.axes_examined,
            t_split,
            split.axes_examined
        );
    }
    // VD fails partition consistency, so decomposition is refused
    println!("vd: {}", solve_decomposed(&p, CostRule::Vd, &plain).unwrap_err());
    Ok(())
}
