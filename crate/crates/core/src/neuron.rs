//! Linear threshold neurons `τ(x) = sign(x·wᵀ − θ)` with `sign(0) = +1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::boolean_core::{
    check_cap, enumerate_hypercube, hamming_weight, index_to_mask, xor, Sign, SignVector, HYPERCUBE_CAP,
};
use crate::error::{dimension, Error, Result};
use crate::rational::{format_rational, int, IntegerHyperplane, Rational};

/// A threshold neuron with exact rational weights and bias.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Neuron {
    weights: Vec<Rational>,
    bias: Rational,
}

impl Neuron {
    pub fn new(weights: Vec<Rational>, bias: Rational) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Dimension("a neuron needs at least one weight".into()));
        }
        Ok(Self { weights, bias })
    }

    /// Convenience constructor from integer weights and bias.
    pub fn from_ints(weights: &[i64], bias: i64) -> Result<Self> {
        Self::new(weights.iter().map(|&w| int(w)).collect(), int(bias))
    }

    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn bias(&self) -> &Rational {
        &self.bias
    }

    /// All weights zero: the neuron is the constant `sign(−θ)`.
    pub fn is_zero_weight(&self) -> bool {
        self.weights.iter().all(Zero::is_zero)
    }

    pub fn is_binary(&self) -> bool {
        self.weights.iter().all(|w| w.is_integer() && w.abs() == int(1))
    }

    pub fn is_integer(&self) -> bool {
        self.weights.iter().all(|w| w.is_integer())
    }

    /// Integer weights, if every weight is an integer that fits in `i64`.
    pub fn integer_weights(&self) -> Option<Vec<i64>> {
        self.weights.iter().map(|w| if w.is_integer() { w.numer().to_i64() } else { None }).collect()
    }

    /// `x·wᵀ − θ`, exactly.
    pub fn preactivation(&self, x: &SignVector) -> Result<Rational> {
        if x.len() != self.dimension() {
            return Err(dimension(self.dimension(), x.len(), "neuron input"));
        }
        let dot = x.iter().zip(&self.weights).fold(Rational::zero(), |acc, (s, w)| match s {
            Sign::Pos => acc + w,
            Sign::Neg => acc - w,
        });
        Ok(dot - &self.bias)
    }

    pub fn evaluate(&self, x: &SignVector) -> Result<Sign> {
        Ok(Sign::of(&self.preactivation(x)?))
    }

    /// Outputs on every hypercube point, in hypercube order.
    pub fn truth_signs(&self) -> Result<Vec<Sign>> {
        let n = self.dimension();
        check_cap(n, HYPERCUBE_CAP)?;
        let h = IntegerHyperplane::new(&self.weights, &self.bias)?;
        Ok((0..1u64 << n).map(|k| Sign::of_int(masked_dot(&h.weights, index_to_mask(n, k)) - h.offset)).collect())
    }

    /// Whether `evaluate` takes a single value on the whole hypercube.
    pub fn is_constant(&self) -> Result<bool> {
        let signs = self.truth_signs()?;
        Ok(signs.iter().all(|&s| s == signs[0]))
    }
}

impl fmt::Display for Neuron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(format_rational).collect();
        write!(f, "w=({}), θ={}", ws.join(","), format_rational(&self.bias))
    }
}

/// `Σ_i ±w_i`, where bit `i` of `mask` selects the minus sign.
pub(crate) fn masked_dot(weights: &[i128], mask: u64) -> i128 {
    weights.iter().enumerate().map(|(i, &w)| if mask >> i & 1 == 1 { -w } else { w }).sum()
}

/// A neuron with weights in {±1} and a canonical bias:
/// `θ ∈ {−n−1, −n+1, …, n+1}`, so `n − θ` is odd.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryNeuron {
    weights: SignVector,
    theta: i64,
}

impl BinaryNeuron {
    pub fn new(weights: SignVector, theta: i64) -> Result<Self> {
        let n = weights.len() as i64;
        if theta.abs() > n + 1 || (n - theta).rem_euclid(2) != 1 {
            return Err(Error::Domain(format!("bias {theta} is not canonical for n = {n}")));
        }
        Ok(Self { weights, theta })
    }

    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &SignVector {
        &self.weights
    }

    pub fn theta(&self) -> i64 {
        self.theta
    }

    /// Canonical biases for dimension `n`, ascending.
    pub fn canonical_biases(n: usize) -> impl Iterator<Item = i64> {
        let n = n as i64;
        (0..=n + 1).map(move |k| -n - 1 + 2 * k)
    }

    pub fn to_neuron(&self) -> Neuron {
        Neuron::new(self.weights.to_rationals(), int(self.theta)).expect("nonempty")
    }

    pub fn evaluate(&self, x: &SignVector) -> Result<Sign> {
        let dot = crate::boolean_core::inner_product(x, &self.weights)?;
        Ok(Sign::of_int(i128::from(dot - self.theta)))
    }

    /// `true` when the bias lies outside the attainable range of `x·wᵀ`.
    pub fn is_constant(&self) -> bool {
        self.theta.abs() == self.dimension() as i64 + 1
    }
}

/// Rounds the bias of a ±1-weight neuron to `{−n−1, −n+1, …, n+1}` without
/// changing the function: `θ ∈ (−n+2t, −n+2t+2]` becomes `−n+2t+1`,
/// `θ ≤ −n` becomes `−n−1`, `θ > n` becomes `n+1`.
pub fn canonicalize_bias(nr: &Neuron) -> Result<BinaryNeuron> {
    if !nr.is_binary() {
        return Err(Error::Domain(format!("weights of {nr} are not all ±1")));
    }
    let n = nr.dimension() as i64;
    let theta = nr.bias();
    let canonical = if *theta <= int(-n) {
        -n - 1
    } else if *theta > int(n) {
        n + 1
    } else {
        // smallest t with θ ≤ −n + 2t + 2
        let t = ((theta + int(n - 2)) / int(2)).ceil().to_integer();
        -n + 2 * t.to_i64().expect("bounded by n") + 1
    };
    let signs: Vec<Sign> = nr.weights().iter().map(Sign::of).collect();
    BinaryNeuron::new(SignVector::from_signs(&signs)?, canonical)
}

/// Replaces the bias of an integer-weight neuron by the canonical value
/// (w.r.t. `N = ‖w‖₁`) lying one below the smallest attainable positive
/// preactivation; `N + 1` for the constant `−1` neuron.
///
/// The result is canonical (`N − θ` odd, `|θ| ≤ N + 1`) and, unlike the
/// plain rounding rule, keeps a hypercube point at distance one from the
/// threshold, so the generalized parity solution has distance exactly 2.
pub fn tighten_integer_bias(nr: &Neuron) -> Result<Neuron> {
    let w = nr.integer_weights().ok_or_else(|| Error::Domain(format!("weights of {nr} are not all integers")))?;
    let n = nr.dimension();
    check_cap(n, HYPERCUBE_CAP)?;
    let l1: i64 = w.iter().map(|x| x.abs()).sum();
    let wide: Vec<i128> = w.iter().map(|&x| i128::from(x)).collect();
    let smallest_positive = (0..1u64 << n)
        .map(|mask| masked_dot(&wide, mask))
        .filter(|&a| Rational::from_integer(BigInt::from(a)) >= *nr.bias())
        .min();
    let theta = match smallest_positive {
        Some(a) => a as i64 - 1,
        None => l1 + 1,
    };
    Neuron::new(nr.weights().to_vec(), int(theta))
}

/// `δ = min_x |x·wᵀ − θ| / ‖w‖∞`, by enumeration.
pub fn delta(nr: &Neuron) -> Result<Rational> {
    if nr.is_zero_weight() {
        return Err(Error::Degenerate("all-zero weights leave δ undefined".into()));
    }
    let n = nr.dimension();
    check_cap(n, HYPERCUBE_CAP)?;
    let h = IntegerHyperplane::new(nr.weights(), nr.bias())?;
    let best = (0..1u64 << n).map(|mask| (masked_dot(&h.weights, mask) - h.offset).abs()).min().expect("nonempty cube");
    Ok(Rational::new(BigInt::from(best), BigInt::from(h.max_abs_weight())))
}

/// `(F⁺, F⁻)`, each in hypercube order.
pub fn classify_points(nr: &Neuron) -> Result<(Vec<SignVector>, Vec<SignVector>)> {
    let signs = nr.truth_signs()?;
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for (x, s) in enumerate_hypercube(nr.dimension())?.zip(signs) {
        match s {
            Sign::Pos => pos.push(x),
            Sign::Neg => neg.push(x),
        }
    }
    Ok((pos, neg))
}

/// `((n−θ−1)/2, (n−θ+1)/2)`: the neuron is `+1` iff `w_H(x⊕w)` is at most
/// the first bound, `−1` iff it is at least the second.
pub fn hamming_thresholds(bn: &BinaryNeuron) -> (i64, i64) {
    let n = bn.dimension() as i64;
    ((n - bn.theta - 1) / 2, (n - bn.theta + 1) / 2)
}

/// Evaluation through the Hamming-weight form.
pub fn evaluate_by_hamming(bn: &BinaryNeuron, x: &SignVector) -> Result<Sign> {
    let (pos, _) = hamming_thresholds(bn);
    let hw = hamming_weight(&xor(x, bn.weights())?) as i64;
    Ok(if hw <= pos { Sign::Pos } else { Sign::Neg })
}
