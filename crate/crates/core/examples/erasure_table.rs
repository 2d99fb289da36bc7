//! Every single erasure against the parity-coded neuron w = (1, 1, −1), θ = 0.

use coded_threshold::boolean_core::enumerate_hypercube;
use coded_threshold::boolean_core::SignVector;
use coded_threshold::neuron::BinaryNeuron;
use coded_threshold::robustness::{is_ts_robust, noisy_evaluate, NoisePattern};
use coded_threshold::solutions::parity_solution;

fn main() -> coded_threshold::Result<()> {
    let bn = BinaryNeuron::new(SignVector::new(&[1, 1, -1])?, 0)?;
    let sol = parity_solution(&bn)?;
    println!("v = {:?}, mu = {}", sol.v().iter().map(|x| x.to_string()).collect::<Vec<_>>(), sol.mu());

    println!("{:<12} {:<16} {:>4} {:>4} {:>4} {:>4} {:>6}", "x", "E(x)", "e0", "e1", "e2", "e3", "tau(x)");
    for x in enumerate_hypercube(3)? {
        let z = sol.encode(&x)?;
        let row: Vec<String> = (0..4)
            .map(|j| noisy_evaluate(&sol, &x, &NoisePattern::erasure(j)).map(|s| s.to_string()))
            .collect::<Result<_, _>>()?;
        println!(
            "{:<12} {:<16} {:>4} {:>4} {:>4} {:>4} {:>6}",
            x.to_string(),
            z.to_string(),
            row[0],
            row[1],
            row[2],
            row[3],
            bn.evaluate(&x)?
        );
    }

    let verdict = is_ts_robust(&sol, &bn.to_neuron(), 1, 0)?;
    println!("robust to one erasure: {}", verdict.is_robust());
    Ok(())
}
