// Sample noisy profiles around a hidden axis and measure how far each rule's
// answer lands from it.

use axis_rules::{avg_distance_to_truth, generate, solve, solve_ranking, CostRule, NoiseModel, NoiseModelConfig};
use axis_rules::{RankingRule, SolveOptions};

pub fn main() -> Result<(), axis_rules::Error> {
    let models = [
        NoiseModel::Noisy { sigma: 0.1, radius: 0.4 },
        NoiseModel::Noisy { sigma: 0.3, radius: 0.4 },
        NoiseModel::Maverick { p: 0.2 },
        NoiseModel::Flips { p: 0.1 },
        NoiseModel::Omissions { p: 0.3 },
        NoiseModel::Swaps { phi: 0.5 },
    ];
    let replicates = 20;
    let options = SolveOptions::default();

    for model in models {
        let mut sums = [0.0; 5];
        let mut rank_sums = [0.0; 2];
        for seed in 0..replicates {
            let s = generate(&NoiseModelConfig { model, m: 7, n: 100, seed })?;
            for (k, rule) in CostRule::HIERARCHY.into_iter().enumerate() {
                sums[k] += avg_distance_to_truth(&solve(&s.profile, rule, &options)?, &s.axis)?;
            }
            if let Some(rankings) = &s.rankings {
                for (k, rule) in RankingRule::ALL.into_iter().enumerate() {
                    rank_sums[k] += avg_distance_to_truth(&solve_ranking(rankings, rule, &options)?, &s.axis)?;
                }
            }
        }
        let r = replicates as f64;
        print!("{:<9} {:<16}", model.name(), model.params());
        for (rule, sum) in CostRule::HIERARCHY.iter().zip(sums) {
            print!(" {}={:.2}", rule.name(), sum / r);
        }
        if matches!(model, NoiseModel::Noisy { .. }) {
            print!("  vd-rank={:.2} ft-rank={:.2}", rank_sums[0] / r, rank_sums[1] / r);
        }
        println!();
    }
    Ok(())
}
