//! Repeating a solution scales its distance but not its relative distance.

use coded_threshold::neuron::Neuron;
use coded_threshold::robustness::{min_distance, relative_distance, robustness_radius};
use coded_threshold::solutions::{identity_solution, replicate};

fn main() -> coded_threshold::Result<()> {
    let nr = Neuron::from_ints(&[2, -1, 1, 1], 0)?;
    let base = identity_solution(&nr)?;
    for copies in [1, 2, 3, 5] {
        let sol = replicate(&base, copies)?;
        println!(
            "copies = {copies}: m = {:>2}, d = {:>2}, d/m = {}, radius = {}",
            sol.len(),
            min_distance(&sol)?,
            relative_distance(&sol)?,
            robustness_radius(&sol, &nr)?
        );
    }
    Ok(())
}
