//! Reading and writing the JSON records used by the command line.

use coded_threshold::records::{network_to_value, parse_network, parse_neuron, solution_to_value, to_pretty};
use coded_threshold::solutions::SolutionKind;

fn main() -> coded_threshold::Result<()> {
    let nr = parse_neuron(r#"{"weights": ["1", "1/2", "-0.75"], "bias": "1/3"}"#)?;
    println!("{nr}");
    let sol = SolutionKind::Replication(2).build(&nr)?;
    println!("{}", to_pretty(&solution_to_value(&sol)));

    let net = parse_network(r#"{"input_width": 2, "layers": [[{"weights": [1, -1], "bias": 1}]]}"#)?;
    println!("{}", network_to_value(&net));

    match parse_neuron(r#"{"weights": ["1", "2e3"], "bias": "0"}"#) {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
