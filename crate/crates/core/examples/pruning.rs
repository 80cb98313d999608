// Effect of the search accelerations on a 10-candidate profile: pair
// pruning, early abort and worker threads.

use std::time::Instant;

use axis_rules::{generate, solve, CostRule, NoiseModel, NoiseModelConfig, SolveOptions};

pub fn main() -> Result<(), axis_rules::Error> {
    let sample = generate(&NoiseModelConfig {
        model: NoiseModel::Noisy { sigma: 0.15, radius: 0.3 },
        m: 10,
        n: 60,
        seed: 3,
    })?;
    let p = &sample.profile;
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(8);
    let settings = [
        ("exhaustive", SolveOptions::exhaustive()),
        ("early abort", SolveOptions { use_early_abort: true, ..SolveOptions::exhaustive() }),
        ("abort + pairs", SolveOptions { use_decomposition: false, ..SolveOptions::default() }),
        (
            "all, threaded",
            SolveOptions {
                use_decomposition: false,
                ..SolveOptions::default().with_threads(threads)
            },
        ),
    ];
    for rule in [CostRule::Vd, CostRule::Ft] {
        let mut reference = None;
        for (label, options) in &settings {
            let t = Instant::now();
            let r = solve(p, rule, options)?;
            println!(
                "{:<3} {label:<14} {:>9.1?}  examined {:>8}  pruned {:>8}  cost {}",
                rule.name(),
                t.elapsed(),
                r.axes_examined,
                r.axes_pruned,
                r.optimal_cost
            );
            let same = reference.get_or_insert_with(|| r.optimal_axes.clone());
            assert_eq!(*same, r.optimal_axes);
        }
    }
    Ok(())
}
