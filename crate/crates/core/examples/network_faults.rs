//! Parity coding a 3→3→1 network and injecting erasures into it.

use coded_threshold::boolean_core::SignVector;
use coded_threshold::network::{
    code_network, exhaustive_single_fault_check, monte_carlo_fault_sim, CodedNetwork, LayeredNetwork, SimulationConfig,
};
use coded_threshold::neuron::BinaryNeuron;
use coded_threshold::rational::frac;
use coded_threshold::robustness::DEFAULT_BUDGET;

fn bn(w: &[i64], theta: i64) -> coded_threshold::Result<BinaryNeuron> {
    BinaryNeuron::new(SignVector::new(w)?, theta)
}

fn main() -> coded_threshold::Result<()> {
    let net = LayeredNetwork::new(
        3,
        vec![vec![bn(&[1, 1, -1], 0)?, bn(&[-1, 1, 1], 2)?, bn(&[1, -1, 1], -2)?], vec![bn(&[1, 1, 1], 0)?]],
    )?;
    let coded = code_network(&net)?;
    println!("coded widths: {:?}", coded.coded_widths());

    let check = exhaustive_single_fault_check(&coded, DEFAULT_BUDGET)?;
    println!("coded: {}/{} runs agree", check.agreements, check.trials);

    let plain = CodedNetwork::uncoded(&net)?;
    let check = exhaustive_single_fault_check(&plain, DEFAULT_BUDGET)?;
    println!("uncoded: {}/{} runs agree", check.agreements, check.trials);
    if let Some(w) = check.first_witness {
        println!("  first failure at x = {}: expected {}, got {}", w.x, w.expected, w.observed);
    }

    println!("{}", coded_threshold::network::SimulationReport::CSV_HEADER);
    for p in [frac(1, 100), frac(1, 20), frac(1, 5)] {
        let cfg = SimulationConfig::new(p, frac(0, 1), 20_000, 1);
        println!("{}", monte_carlo_fault_sim(&coded, &cfg)?.csv_row());
        println!("{}", monte_carlo_fault_sim(&plain, &cfg)?.csv_row());
    }
    Ok(())
}
