// Distances between axes, where an axis and its reverse count as one.

use axis_rules::{axis_distance, kendall_tau, median_candidate, Axis, Candidates};

pub fn main() -> Result<(), axis_rules::Error> {
    let c = Candidates::letters(6);
    let truth = c.parse_axis("abcdef")?;
    for s in ["abcdef", "fedcba", "bacdef", "badcfe", "acebdf", "cfbead"] {
        let a = c.parse_axis(s)?;
        let median: Vec<&str> = median_candidate(&a).into_iter().map(|i| c.name(i)).collect();
        println!(
            "{s}: kendall-tau {:>2}, axis distance {}, median {}",
            kendall_tau(&a, &truth)?,
            axis_distance(&a, &truth)?,
            median.join("/")
        );
    }

    // the farthest two axes can be is floor(m(m-1)/4), reached by any order
    // with exactly that many inversions relative to the other
    for m in [4usize, 7, 11, 12] {
        let bound = (m * (m - 1) / 4) as u64;
        let far = with_inversions(m, bound);
        println!("m = {m:>2}: bound {bound}, reached {}", axis_distance(&Axis::identity(m), &far)?);
    }
    Ok(())
}

/// The lexicographically first order of `0..m` with `k` inversions.
fn with_inversions(m: usize, mut k: u64) -> Axis {
    let mut rest: Vec<usize> = (0..m).collect();
    let mut order = Vec::with_capacity(m);
    for i in 0..m {
        let take = k.min((m - 1 - i) as u64);
        k -= take;
        order.push(rest.remove(take as usize));
    }
    Axis::new(order).expect("a permutation")
}
