//! Integer-weight neurons coded with one parity bit over the repeated input.

use coded_threshold::neuron::{tighten_integer_bias, Neuron};
use coded_threshold::robustness::{min_distance, robustness_radius};
use coded_threshold::solutions::generalized_parity_solution;

fn main() -> coded_threshold::Result<()> {
    for (w, theta) in [(vec![3, 0, 1], 2), (vec![2, -1, 1], 0), (vec![5], 0), (vec![1, 2, 3, -4], 3)] {
        let nr = Neuron::from_ints(&w, theta)?;
        let tight = tighten_integer_bias(&nr)?;
        let sol = generalized_parity_solution(&tight)?;
        println!(
            "w = {w:?}, θ = {theta} -> θ = {}: m = {}, d = {}, radius = {}",
            tight.bias(),
            sol.len(),
            min_distance(&sol)?,
            robustness_radius(&sol, &tight)?
        );
    }
    Ok(())
}
