//! Coding solutions `(E, v, μ)` and the coded neuron `sign(E(x)·vᵀ − μ)`.
//!
//! Every encoder except [`Encoder::Constant`] outputs multilinear monomials
//! `χ_S(x)` of the input; [`Encoder::coordinates`] lists them.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::boolean_core::{check_cap, walsh_hadamard, Sign, SignVector, TruthTable};
use crate::error::{dimension, Error, Result};
use crate::neuron::{canonicalize_bias, tighten_integer_bias, BinaryNeuron, Neuron};
use crate::rational::{int, IntegerHyperplane, Rational};

/// Largest input dimension accepted by the punctured Hadamard encoder.
pub const HADAMARD_CAP: usize = 16;

/// What one output coordinate of an encoder computes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coordinate {
    /// `χ_S(x)` for the listed zero-based indices.
    Monomial(Vec<usize>),
    /// The target neuron's own output (constant encoder only).
    TargetOutput,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Encoder {
    Identity {
        n: usize,
    },
    /// `x ↦ τ(x)·𝟙_m`.
    Constant {
        target: Neuron,
        m: usize,
    },
    /// `ℓ` concatenated copies of the inner encoding.
    Replication {
        inner: Box<Encoder>,
        copies: usize,
    },
    /// `(x₁, …, xₙ, χ_[n](x))`.
    Parity {
        n: usize,
    },
    /// Each `xᵢ` repeated `|wᵢ|` times, then `∏ xᵢ^(wᵢ mod 2)`.
    GeneralizedParity {
        weights: Vec<i64>,
    },
    /// `(χ_S(x))` over nonempty `S`, ascending bitmask order.
    PuncturedHadamard {
        n: usize,
    },
}

impl Encoder {
    pub fn input_dim(&self) -> usize {
        match self {
            Encoder::Identity { n } | Encoder::Parity { n } | Encoder::PuncturedHadamard { n } => *n,
            Encoder::Constant { target, .. } => target.dimension(),
            Encoder::Replication { inner, .. } => inner.input_dim(),
            Encoder::GeneralizedParity { weights } => weights.len(),
        }
    }

    pub fn output_dim(&self) -> usize {
        match self {
            Encoder::Identity { n } => *n,
            Encoder::Constant { m, .. } => *m,
            Encoder::Replication { inner, copies } => inner.output_dim() * copies,
            Encoder::Parity { n } => n + 1,
            Encoder::GeneralizedParity { weights } => l1(weights) as usize + 1,
            Encoder::PuncturedHadamard { n } => (1 << n) - 1,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Encoder::Identity { .. } => "identity",
            Encoder::Constant { .. } => "constant",
            Encoder::Replication { .. } => "replication",
            Encoder::Parity { .. } => "parity",
            Encoder::GeneralizedParity { .. } => "gen-parity",
            Encoder::PuncturedHadamard { .. } => "fourier",
        }
    }

    pub fn coordinates(&self) -> Vec<Coordinate> {
        match self {
            Encoder::Identity { n } => (0..*n).map(|i| Coordinate::Monomial(vec![i])).collect(),
            Encoder::Constant { m, .. } => vec![Coordinate::TargetOutput; *m],
            Encoder::Replication { inner, copies } => {
                let one = inner.coordinates();
                (0..*copies).flat_map(|_| one.iter().cloned()).collect()
            }
            Encoder::Parity { n } => {
                let mut c: Vec<_> = (0..*n).map(|i| Coordinate::Monomial(vec![i])).collect();
                c.push(Coordinate::Monomial((0..*n).collect()));
                c
            }
            Encoder::GeneralizedParity { weights } => {
                let mut c = Vec::new();
                for (i, w) in weights.iter().enumerate() {
                    c.extend((0..w.unsigned_abs()).map(|_| Coordinate::Monomial(vec![i])));
                }
                c.push(Coordinate::Monomial(odd_support(weights)));
                c
            }
            Encoder::PuncturedHadamard { n } => {
                (1u64..1 << n).map(|s| Coordinate::Monomial((0..*n).filter(|i| s >> i & 1 == 1).collect())).collect()
            }
        }
    }

    /// Appends `E(x)` as ±1 values to `out`.
    pub(crate) fn encode_into(&self, x: &SignVector, out: &mut Vec<i8>) -> Result<()> {
        if x.len() != self.input_dim() {
            return Err(dimension(self.input_dim(), x.len(), "encoder input"));
        }
        let val = |s: Sign| s.value() as i8;
        match self {
            Encoder::Identity { .. } => out.extend(x.iter().map(val)),
            Encoder::Constant { target, m } => {
                let s = val(target.evaluate(x)?);
                out.extend(std::iter::repeat_n(s, *m));
            }
            Encoder::Replication { inner, copies } => {
                let start = out.len();
                inner.encode_into(x, out)?;
                let one = out[start..].to_vec();
                for _ in 1..*copies {
                    out.extend_from_slice(&one);
                }
            }
            Encoder::Parity { .. } => {
                out.extend(x.iter().map(val));
                out.push(val(x.iter().fold(Sign::Pos, |a, b| a * b)));
            }
            Encoder::GeneralizedParity { weights } => {
                let mut parity = Sign::Pos;
                for (i, w) in weights.iter().enumerate() {
                    let xi = x.get(i);
                    out.extend(std::iter::repeat_n(val(xi), w.unsigned_abs() as usize));
                    if w % 2 != 0 {
                        parity = parity * xi;
                    }
                }
                out.push(val(parity));
            }
            Encoder::PuncturedHadamard { n } => {
                let xm = x.mask().expect("n ≤ 16");
                out.extend((1u64..1 << n).map(|s| val(crate::boolean_core::parity_sign(s & xm))));
            }
        }
        Ok(())
    }

    pub fn encode(&self, x: &SignVector) -> Result<SignVector> {
        let mut out = Vec::with_capacity(self.output_dim());
        self.encode_into(x, &mut out)?;
        let signs: Vec<Sign> = out.iter().map(|&e| if e < 0 { Sign::Neg } else { Sign::Pos }).collect();
        SignVector::from_signs(&signs)
    }
}

fn l1(weights: &[i64]) -> i64 {
    weights.iter().map(|w| w.abs()).sum()
}

fn odd_support(weights: &[i64]) -> Vec<usize> {
    weights.iter().enumerate().filter(|(_, w)| *w % 2 != 0).map(|(i, _)| i).collect()
}

/// A triple `(E, v, μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    encoder: Encoder,
    v: Vec<Rational>,
    mu: Rational,
}

impl Solution {
    pub fn new(encoder: Encoder, v: Vec<Rational>, mu: Rational) -> Result<Self> {
        if v.len() != encoder.output_dim() {
            return Err(dimension(encoder.output_dim(), v.len(), "coded weights"));
        }
        if v.iter().all(Zero::is_zero) {
            return Err(Error::Degenerate("coded weight vector is all zero".into()));
        }
        Ok(Self { encoder, v, mu })
    }

    pub fn encoder(&self) -> &Encoder {
        &self.encoder
    }

    pub fn v(&self) -> &[Rational] {
        &self.v
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    /// Coded length `m`.
    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn encode(&self, x: &SignVector) -> Result<SignVector> {
        self.encoder.encode(x)
    }

    /// `E(x)·vᵀ − μ`.
    pub fn coded_preactivation(&self, x: &SignVector) -> Result<Rational> {
        let z = self.encode(x)?;
        let dot = z.iter().zip(&self.v).fold(Rational::zero(), |acc, (s, w)| match s {
            Sign::Pos => acc + w,
            Sign::Neg => acc - w,
        });
        Ok(dot - &self.mu)
    }

    pub fn integer_form(&self) -> Result<IntegerHyperplane> {
        IntegerHyperplane::new(&self.v, &self.mu)
    }
}

/// `sign(E(x)·vᵀ − μ)`.
pub fn coded_evaluate(sol: &Solution, x: &SignVector) -> Result<Sign> {
    Ok(Sign::of(&sol.coded_preactivation(x)?))
}

pub fn encode(e: &Encoder, x: &SignVector) -> Result<SignVector> {
    e.encode(x)
}

/// `(Id, w, θ)`.
pub fn identity_solution(nr: &Neuron) -> Result<Solution> {
    Solution::new(Encoder::Identity { n: nr.dimension() }, nr.weights().to_vec(), nr.bias().clone())
}

/// `(E, 𝟙_m, 0)` with `E(x) = τ(x)·𝟙_m`. Only useful as a baseline: the
/// encoder has to evaluate the neuron itself.
pub fn constant_solution(nr: &Neuron, m: usize) -> Result<Solution> {
    if m == 0 {
        return Err(Error::Domain("constant solution needs m ≥ 1".into()));
    }
    check_cap(nr.dimension(), crate::boolean_core::HYPERCUBE_CAP)?;
    Solution::new(Encoder::Constant { target: nr.clone(), m }, vec![Rational::one(); m], Rational::zero())
}

/// `(E_(ℓ), v_(ℓ), ℓμ)`.
pub fn replicate(sol: &Solution, copies: usize) -> Result<Solution> {
    if copies == 0 {
        return Err(Error::Domain("replication factor must be positive".into()));
    }
    let v = (0..copies).flat_map(|_| sol.v.iter().cloned()).collect();
    Solution::new(
        Encoder::Replication { inner: Box::new(sol.encoder.clone()), copies },
        v,
        &sol.mu * int(copies as i64),
    )
}

/// Parity solution: `v = (w, (−1)^θ′ χ_[n](w))`, `μ = θ`, `θ′ = (n−θ−1)/2`.
pub fn parity_solution(bn: &BinaryNeuron) -> Result<Solution> {
    let n = bn.dimension();
    let theta_prime = (n as i64 - bn.theta() - 1) / 2;
    let chi_w = bn.weights().iter().fold(Sign::Pos, |a, b| a * b);
    let last = if theta_prime.rem_euclid(2) == 1 { -chi_w } else { chi_w };
    let mut v = bn.weights().to_rationals();
    v.push(int(i64::from(last.value())));
    Solution::new(Encoder::Parity { n }, v, int(bn.theta()))
}

/// Generalized parity over integer weights, `m = ‖w‖₁ + 1`:
/// `v = (𝟙_w, (−1)^θ′ χ(𝟙_w))`, `μ = θ`, `θ′ = (‖w‖₁−θ−1)/2`.
///
/// `θ` must be canonical for `‖w‖₁`; see
/// [`tighten_integer_bias`](crate::neuron::tighten_integer_bias).
pub fn generalized_parity_solution(nr: &Neuron) -> Result<Solution> {
    let w = nr
        .integer_weights()
        .ok_or_else(|| Error::Domain(format!("generalized parity needs integer weights, got {nr}")))?;
    if w.iter().all(|&x| x == 0) {
        return Err(Error::Degenerate("generalized parity needs a nonzero weight".into()));
    }
    let total = l1(&w);
    let theta = canonical_integer(nr.bias(), total)?;
    let mut v = Vec::with_capacity(total as usize + 1);
    let mut chi = Sign::Pos;
    for &wi in &w {
        let s = if wi < 0 { Sign::Neg } else { Sign::Pos };
        for _ in 0..wi.unsigned_abs() {
            v.push(int(i64::from(s.value())));
            chi = chi * s;
        }
    }
    let theta_prime = (total - theta - 1) / 2;
    let last = if theta_prime.rem_euclid(2) == 1 { -chi } else { chi };
    v.push(int(i64::from(last.value())));
    Solution::new(Encoder::GeneralizedParity { weights: w }, v, int(theta))
}

fn canonical_integer(theta: &Rational, total: i64) -> Result<i64> {
    let bad = || Error::Domain(format!("bias {theta} is not canonical for ‖w‖₁ = {total}"));
    if !theta.is_integer() {
        return Err(bad());
    }
    let t: i64 = theta.to_integer().try_into().map_err(|_| bad())?;
    if t.abs() > total + 1 || (total - t).rem_euclid(2) != 1 {
        return Err(bad());
    }
    Ok(t)
}

/// Fourier solution: punctured Hadamard encoder, `v = τ̂_∅`, `μ = −τ̂(∅)`.
pub fn fourier_solution(nr: &Neuron) -> Result<Solution> {
    let n = nr.dimension();
    check_cap(n, HADAMARD_CAP)?;
    let signs = nr.truth_signs()?;
    let table = TruthTable::new(n, signs.iter().map(|s| int(i64::from(s.value()))).collect())?;
    let spectrum = walsh_hadamard(&table)?;
    let coeffs = spectrum.coefficients();
    if coeffs[1..].iter().all(Zero::is_zero) {
        return Err(Error::Degenerate("constant neuron has an all-zero Fourier weight vector".into()));
    }
    Solution::new(Encoder::PuncturedHadamard { n }, coeffs[1..].to_vec(), -coeffs[0].clone())
}

/// Selector for the solution families, as written on the command line:
/// `identity`, `replication:ℓ`, `parity`, `gen-parity`, `fourier`, `constant:m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolutionKind {
    Identity,
    Replication(usize),
    Parity,
    GeneralizedParity,
    Fourier,
    Constant(usize),
}

impl SolutionKind {
    /// Builds the solution for `nr`, canonicalizing its bias where the
    /// family requires it.
    pub fn build(&self, nr: &Neuron) -> Result<Solution> {
        match *self {
            SolutionKind::Identity => identity_solution(nr),
            SolutionKind::Replication(l) => replicate(&identity_solution(nr)?, l),
            SolutionKind::Parity => parity_solution(&canonicalize_bias(nr)?),
            SolutionKind::GeneralizedParity => generalized_parity_solution(&tighten_integer_bias(nr)?),
            SolutionKind::Fourier => fourier_solution(nr),
            SolutionKind::Constant(m) => constant_solution(nr, m),
        }
    }

    /// The neuron the solution is compared against (after canonicalization).
    pub fn reference_neuron(&self, nr: &Neuron) -> Result<Neuron> {
        match self {
            SolutionKind::Parity => Ok(canonicalize_bias(nr)?.to_neuron()),
            SolutionKind::GeneralizedParity => tighten_integer_bias(nr),
            _ => Ok(nr.clone()),
        }
    }
}

impl FromStr for SolutionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let count = |arg: &str| -> Result<usize> {
            arg.parse::<usize>()
                .ok()
                .filter(|&k| k > 0)
                .ok_or_else(|| Error::Parse(format!("expected a positive integer in `{s}`")))
        };
        match s.split_once(':') {
            None => match s {
                "identity" => Ok(SolutionKind::Identity),
                "parity" => Ok(SolutionKind::Parity),
                "gen-parity" => Ok(SolutionKind::GeneralizedParity),
                "fourier" => Ok(SolutionKind::Fourier),
                _ => Err(Error::Parse(format!("unknown solution kind `{s}`"))),
            },
            Some(("replication", l)) => Ok(SolutionKind::Replication(count(l)?)),
            Some(("constant", m)) => Ok(SolutionKind::Constant(count(m)?)),
            Some(_) => Err(Error::Parse(format!("unknown solution kind `{s}`"))),
        }
    }
}

impl fmt::Display for SolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionKind::Identity => f.write_str("identity"),
            SolutionKind::Replication(l) => write!(f, "replication:{l}"),
            SolutionKind::Parity => f.write_str("parity"),
            SolutionKind::GeneralizedParity => f.write_str("gen-parity"),
            SolutionKind::Fourier => f.write_str("fourier"),
            SolutionKind::Constant(m) => write!(f, "constant:{m}"),
        }
    }
}
