//! Minimum distance of parity solutions over all binary neurons of small width.

use coded_threshold::boolean_core::enumerate_hypercube;
use coded_threshold::neuron::BinaryNeuron;
use coded_threshold::robustness::{min_distance, relative_distance};
use coded_threshold::solutions::parity_solution;

fn main() -> coded_threshold::Result<()> {
    for n in 1..=6 {
        let mut seen = std::collections::BTreeMap::new();
        let mut count = 0;
        for w in enumerate_hypercube(n)? {
            for theta in BinaryNeuron::canonical_biases(n) {
                let bn = BinaryNeuron::new(w.clone(), theta)?;
                if bn.is_constant() {
                    continue;
                }
                let d = min_distance(&parity_solution(&bn)?)?;
                *seen.entry(d.to_string()).or_insert(0) += 1;
                count += 1;
            }
        }
        let any = BinaryNeuron::new(
            enumerate_hypercube(n)?.next().unwrap(),
            BinaryNeuron::canonical_biases(n).nth(1).unwrap(),
        )?;
        println!(
            "n = {n}: {count} non-constant neurons, distances {seen:?}, d/m = {}",
            relative_distance(&parity_solution(&any)?)?
        );
    }
    Ok(())
}
