//! The ℓ1 criterion next to the enumeration oracle.

use coded_threshold::boolean_core::SignVector;
use coded_threshold::neuron::{BinaryNeuron, Neuron};
use coded_threshold::robustness::{is_r_robust, theorem1_verdict, DEFAULT_BUDGET};
use coded_threshold::solutions::{constant_solution, parity_solution, Solution};

fn report(name: &str, sol: &Solution, nr: &Neuron) -> coded_threshold::Result<()> {
    for r in 1..=4 {
        let c = theorem1_verdict(sol, nr, r)?;
        let oracle = is_r_robust(sol, nr, r, DEFAULT_BUDGET)?.is_robust();
        println!(
            "{name:<10} r = {r}: d+ = {:<4} d- = {:<4} criterion {:<5} literal {:<5} oracle {}",
            c.positive_distance.to_string(),
            c.negative_distance.to_string(),
            c.holds,
            c.literal,
            oracle
        );
    }
    Ok(())
}

fn main() -> coded_threshold::Result<()> {
    let bn = BinaryNeuron::new(SignVector::new(&[1, 1, -1])?, 0)?;
    report("parity", &parity_solution(&bn)?, &bn.to_neuron())?;

    let maj = Neuron::from_ints(&[1, 1, 1], 0)?;
    report("constant", &constant_solution(&maj, 4)?, &maj)?;

    // θ = −n − 1 makes the neuron constant and its coded hyperplane a face of the cube
    let flat = BinaryNeuron::new(SignVector::new(&[1, 1, 1])?, -4)?;
    report("face", &parity_solution(&flat)?, &flat.to_neuron())?;
    Ok(())
}
