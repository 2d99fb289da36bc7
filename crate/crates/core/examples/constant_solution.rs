//! A coded neuron that stores the answer m times tolerates m − 1 erasures.

use coded_threshold::neuron::Neuron;
use coded_threshold::robustness::{is_ts_robust, min_distance, robustness_radius};
use coded_threshold::solutions::constant_solution;

fn main() -> coded_threshold::Result<()> {
    let maj = Neuron::from_ints(&[1, 1, 1], 0)?;
    for m in 1..=6 {
        let sol = constant_solution(&maj, m)?;
        let radius = robustness_radius(&sol, &maj)?;
        let errors =
            (0..=m).take_while(|&s| is_ts_robust(&sol, &maj, 0, s).map(|v| v.is_robust()).unwrap_or(false)).last();
        println!("m = {m}: d = {}, radius = {radius}, errors tolerated = {errors:?}", min_distance(&sol)?);
    }
    Ok(())
}
