// Which axioms each rule satisfies, decided on the built-in counterexample
// fixtures plus a seeded random search.

use axis_rules::axioms::AxiomId;
use axis_rules::{search_counterexample, CostRule};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn main() -> Result<(), axis_rules::Error> {
    print!("{:<28}", "");
    for rule in CostRule::ALL {
        print!("{:>7}", rule.name());
    }
    println!();
    for axiom in AxiomId::ALL {
        print!("{:<28}", axiom.name());
        for rule in CostRule::ALL {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let witness = search_counterexample(axiom, rule, 60, &mut rng)?;
            print!("{:>7}", if witness.is_some() { "no" } else { "yes" });
        }
        println!();
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    if let Some(w) = search_counterexample(AxiomId::Clearance, CostRule::Vd, 0, &mut rng)? {
        println!("\nclearance / vd: {}", w.detail);
    }
    Ok(())
}
