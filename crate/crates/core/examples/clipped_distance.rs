//! ℓ1 distance from a point to a hyperplane, with and without clipping to the cube.

use coded_threshold::rational::{frac, int, Rational};
use coded_threshold::robustness::{l1_distance_to_clipped, l1_distance_to_hyperplane};

fn show(z: &[Rational], v: &[Rational], mu: Rational) -> coded_threshold::Result<()> {
    let plain = l1_distance_to_hyperplane(z, v, &mu)?;
    let clipped = l1_distance_to_clipped(z, v, &mu)?;
    let fmt = |xs: &[Rational]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
    println!("z = ({}), v = ({}), mu = {mu}: plain {plain}, clipped {clipped}", fmt(z), fmt(v));
    Ok(())
}

fn main() -> coded_threshold::Result<()> {
    show(&[int(1), int(1)], &[int(2), int(1)], int(0))?;
    show(&[int(1), int(1)], &[int(2), int(1)], int(-3))?;
    show(&[int(1), int(1)], &[int(1), int(1)], int(3))?;
    show(&[frac(1, 2), int(-1), int(0)], &[int(1), frac(-1, 3), int(2)], frac(1, 4))?;
    Ok(())
}
