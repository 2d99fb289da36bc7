//! Binary neurons as Hamming-ball indicators, and bias canonicalization.

use coded_threshold::boolean_core::enumerate_hypercube;
use coded_threshold::neuron::{canonicalize_bias, evaluate_by_hamming, hamming_thresholds, Neuron};
use coded_threshold::rational::frac;

fn main() -> coded_threshold::Result<()> {
    for theta in [frac(-7, 2), frac(-1, 1), frac(1, 2), frac(2, 1), frac(9, 2)] {
        let nr = Neuron::new(vec![frac(1, 1), frac(-1, 1), frac(1, 1)], theta.clone())?;
        let bn = canonicalize_bias(&nr)?;
        let same = enumerate_hypercube(3)?.all(|x| evaluate_by_hamming(&bn, &x).ok() == nr.evaluate(&x).ok());
        println!(
            "θ = {theta:>4} -> {:>2}, Hamming thresholds {:?}, agrees: {same}",
            bn.theta(),
            hamming_thresholds(&bn)
        );
    }
    Ok(())
}
