//! Distances between axes.

use crate::axis::Axis;
use crate::error::{Error, Result};
use crate::solver::SolveResult;

/// Reversal-minimised Kendall-tau distance, at most `⌊m(m−1)/4⌋`.
pub type AxisDistance = u64;

fn same_size(a: &Axis, b: &Axis) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::AxisSizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

/// Number of candidate pairs the two axes order differently.
pub fn kendall_tau(a: &Axis, b: &Axis) -> Result<u64> {
    same_size(a, b)?;
    let order = a.order();
    let mut discordant = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if b.position(order[i]) > b.position(order[j]) {
                discordant += 1;
            }
        }
    }
    Ok(discordant)
}

/// Kendall-tau distance to the closer of `b` and its reverse.
pub fn axis_distance(a: &Axis, b: &Axis) -> Result<AxisDistance> {
    let d = kendall_tau(a, b)?;
    let pairs = (a.len() * a.len().saturating_sub(1) / 2) as u64;
    // reversing b turns every concordant pair discordant and vice versa
    Ok(d.min(pairs - d))
}

/// Mean distance from `truth` over all returned optimal axes.
pub fn avg_distance_to_truth(result: &SolveResult, truth: &Axis) -> Result<f64> {
    if result.optimal_axes.is_empty() {
        return Err(Error::EmptyProfile);
    }
    let mut sum = 0u64;
    for a in &result.optimal_axes {
        sum += axis_distance(a, truth)?;
    }
    Ok(sum as f64 / result.optimal_axes.len() as f64)
}

/// The middle candidate, or the two middle ones when `m` is even.
pub fn median_candidate(axis: &Axis) -> Vec<usize> {
    let m = axis.len();
    match m {
        0 => Vec::new(),
        _ if m % 2 == 1 => vec![axis.order()[m / 2]],
        _ => vec![axis.order()[m / 2 - 1], axis.order()[m / 2]],
    }
}
