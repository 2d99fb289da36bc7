//! Walsh–Hadamard spectrum of majority and the punctured Hadamard solution.

use coded_threshold::boolean_core::{walsh_hadamard, TruthTable};
use coded_threshold::neuron::Neuron;
use coded_threshold::rational::int;
use coded_threshold::robustness::min_distance;
use coded_threshold::solutions::fourier_solution;

fn main() -> coded_threshold::Result<()> {
    let maj = Neuron::from_ints(&[1, 1, 1], 0)?;
    let signs = maj.truth_signs()?;
    let table = TruthTable::new(3, signs.iter().map(|s| int(i64::from(s.value()))).collect())?;
    let spectrum = walsh_hadamard(&table)?;
    for (mask, c) in spectrum.coefficients().iter().enumerate() {
        println!("S = {:03b}: {c}", mask);
    }
    println!("sum of squares = {}", spectrum.squared_norm());

    let sol = fourier_solution(&maj)?;
    let v: Vec<String> = sol.v().iter().map(|x| x.to_string()).collect();
    println!("v = {v:?}, mu = {}", sol.mu());
    println!("m = {}, d = {}", sol.len(), min_distance(&sol)?);

    let skewed = Neuron::from_ints(&[3, 1, 1, 1], 1)?;
    let sol = fourier_solution(&skewed)?;
    println!("{skewed}: m = {}, d = {}", sol.len(), min_distance(&sol)?);
    Ok(())
}
