//! Layered binarized networks, layer-wise parity coding and fault injection.
//!
//! A coded network appends one parity gate to the input and to every hidden
//! layer and replaces each neuron by its parity solution over the widened
//! previous layer. Faults are attached to the synapses a neuron reads, so
//! two neurons reading the same wire may see different faults.
//!
//! Fault plans are indexed by the consuming layer: `plan.layers[i]` holds
//! one pattern per neuron of layer `i` (over that neuron's coded inputs)
//! and one pattern for the parity gate that layer `i` reads (over the
//! outputs of layer `i − 1`, or the network input when `i = 0`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::boolean_core::{check_cap, Sign, SignVector, HYPERCUBE_CAP};
use crate::error::{dimension, Error, Result};
use crate::neuron::BinaryNeuron;
use crate::rational::{format_rational, IntegerHyperplane, Rational};
use crate::robustness::NoisePattern;
use crate::solutions::{identity_solution, parity_solution, Solution};

/// Feed-forward network of binary neurons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeredNetwork {
    input_width: usize,
    layers: Vec<Vec<BinaryNeuron>>,
}

impl LayeredNetwork {
    pub fn new(input_width: usize, layers: Vec<Vec<BinaryNeuron>>) -> Result<Self> {
        if input_width == 0 {
            return Err(Error::Dimension("network input width must be positive".into()));
        }
        if layers.is_empty() {
            return Err(Error::Domain("network has no layers".into()));
        }
        let mut width = input_width;
        for (i, layer) in layers.iter().enumerate() {
            if layer.is_empty() {
                return Err(Error::Domain(format!("layer {i} is empty")));
            }
            if let Some(nr) = layer.iter().find(|nr| nr.dimension() != width) {
                return Err(dimension(width, nr.dimension(), &format!("neuron of layer {i}")));
            }
            width = layer.len();
        }
        Ok(Self { input_width, layers })
    }

    pub fn input_width(&self) -> usize {
        self.input_width
    }

    pub fn layers(&self) -> &[Vec<BinaryNeuron>] {
        &self.layers
    }

    pub fn output_width(&self) -> usize {
        self.layers.last().map_or(0, Vec::len)
    }

    pub fn forward(&self, x: &SignVector) -> Result<SignVector> {
        if x.len() != self.input_width {
            return Err(dimension(self.input_width, x.len(), "network input"));
        }
        let mut cur = x.clone();
        for layer in &self.layers {
            let out = layer.iter().map(|nr| nr.evaluate(&cur)).collect::<Result<Vec<_>>>()?;
            cur = SignVector::from_signs(&out)?;
        }
        Ok(cur)
    }
}

pub fn forward(net: &LayeredNetwork, x: &SignVector) -> Result<SignVector> {
    net.forward(x)
}

/// How the layers of a [`CodedNetwork`] are protected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coding {
    /// Parity gate on every non-output layer, parity solutions everywhere.
    Parity,
    /// No redundancy: each neuron is its own identity solution.
    Uncoded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodedLayer {
    /// The layer reads the previous layer plus its parity gate.
    pub gated: bool,
    pub neurons: Vec<Solution>,
    hyperplanes: Vec<IntegerHyperplane>,
}

impl CodedLayer {
    fn new(gated: bool, neurons: Vec<Solution>) -> Result<Self> {
        let hyperplanes = neurons.iter().map(Solution::integer_form).collect::<Result<_>>()?;
        Ok(Self { gated, neurons, hyperplanes })
    }

    /// Number of synapses each neuron of the layer reads.
    pub fn input_width(&self) -> usize {
        self.neurons[0].len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodedNetwork {
    original: LayeredNetwork,
    coding: Coding,
    layers: Vec<CodedLayer>,
}

/// Parity-codes every layer of `net`.
pub fn code_network(net: &LayeredNetwork) -> Result<CodedNetwork> {
    let layers = net
        .layers()
        .iter()
        .map(|layer| CodedLayer::new(true, layer.iter().map(parity_solution).collect::<Result<_>>()?))
        .collect::<Result<_>>()?;
    Ok(CodedNetwork { original: net.clone(), coding: Coding::Parity, layers })
}

impl CodedNetwork {
    /// `net` with no redundancy, in the same interface as a coded network.
    pub fn uncoded(net: &LayeredNetwork) -> Result<Self> {
        let layers = net
            .layers()
            .iter()
            .map(|layer| {
                CodedLayer::new(
                    false,
                    layer.iter().map(|nr| identity_solution(&nr.to_neuron())).collect::<Result<_>>()?,
                )
            })
            .collect::<Result<_>>()?;
        Ok(Self { original: net.clone(), coding: Coding::Uncoded, layers })
    }

    pub fn original(&self) -> &LayeredNetwork {
        &self.original
    }

    pub fn coding(&self) -> Coding {
        self.coding
    }

    pub fn layers(&self) -> &[CodedLayer] {
        &self.layers
    }

    /// Widths of the wire vectors each layer reads.
    pub fn coded_widths(&self) -> Vec<usize> {
        self.layers.iter().map(CodedLayer::input_width).collect()
    }

    /// A plan with no faults.
    pub fn empty_plan(&self) -> FaultPlan {
        FaultPlan {
            layers: self
                .layers
                .iter()
                .map(|l| LayerFaults {
                    neurons: vec![NoisePattern::none(); l.neurons.len()],
                    gate: NoisePattern::none(),
                })
                .collect(),
            budget: None,
        }
    }

    pub fn forward(&self, x: &SignVector) -> Result<SignVector> {
        self.inject_and_forward(x, &self.empty_plan())
    }

    pub fn inject_and_forward(&self, x: &SignVector, plan: &FaultPlan) -> Result<SignVector> {
        if x.len() != self.original.input_width() {
            return Err(dimension(self.original.input_width(), x.len(), "network input"));
        }
        self.check_plan(plan)?;
        let mut cur: Vec<i8> = x.iter().map(|s| s.value() as i8).collect();
        let mut wires = Vec::new();
        for (layer, faults) in self.layers.iter().zip(&plan.layers) {
            wires.clear();
            wires.extend_from_slice(&cur);
            if layer.gated {
                wires.push(gate_output(&cur, &faults.gate));
            }
            cur = layer
                .hyperplanes
                .iter()
                .zip(&faults.neurons)
                .map(|(h, p)| noisy_sign(h, &wires, p).value() as i8)
                .collect();
        }
        let signs: Vec<i64> = cur.iter().map(|&s| i64::from(s)).collect();
        SignVector::new(&signs)
    }

    pub fn check_plan(&self, plan: &FaultPlan) -> Result<()> {
        if plan.layers.len() != self.layers.len() {
            return Err(Error::Domain(format!(
                "fault plan covers {} layers, network has {}",
                plan.layers.len(),
                self.layers.len()
            )));
        }
        for (i, (layer, faults)) in self.layers.iter().zip(&plan.layers).enumerate() {
            if faults.neurons.len() != layer.neurons.len() {
                return Err(Error::Domain(format!(
                    "fault plan lists {} neurons in layer {i}, network has {}",
                    faults.neurons.len(),
                    layer.neurons.len()
                )));
            }
            let m = layer.input_width();
            for (j, p) in faults.neurons.iter().enumerate() {
                p.check_range(m).map_err(|e| Error::Domain(format!("neuron {j} of layer {i}: {e}")))?;
                if let Some(r) = plan.budget {
                    if p.cost() > r {
                        return Err(Error::Domain(format!(
                            "neuron {j} of layer {i}: pattern cost {} exceeds budget {r}",
                            p.cost()
                        )));
                    }
                }
            }
            if !faults.gate.is_empty() {
                if !layer.gated {
                    return Err(Error::Domain(format!("layer {i} reads no parity gate")));
                }
                faults.gate.check_range(m - 1).map_err(|e| Error::Domain(format!("gate read by layer {i}: {e}")))?;
            }
        }
        Ok(())
    }
}

/// Product of the gate's inputs; erased readings are dropped, errored ones negated.
fn gate_output(inputs: &[i8], p: &NoisePattern) -> i8 {
    let mut g: i8 = inputs.iter().product();
    for &j in p.erasures() {
        g *= inputs[j];
    }
    for _ in p.errors() {
        g = -g;
    }
    g
}

fn noisy_sign(h: &IntegerHyperplane, wires: &[i8], p: &NoisePattern) -> Sign {
    let clean: i128 = wires.iter().zip(&h.weights).map(|(&u, &w)| i128::from(u) * w).sum();
    let erased: i128 = p.erasures().iter().map(|&j| i128::from(wires[j]) * h.weights[j]).sum();
    let flipped: i128 = p.errors().iter().map(|&j| i128::from(wires[j]) * h.weights[j]).sum();
    Sign::of_int(clean - erased - 2 * flipped - h.offset)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LayerFaults {
    pub neurons: Vec<NoisePattern>,
    pub gate: NoisePattern,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaultPlan {
    pub layers: Vec<LayerFaults>,
    /// Optional bound on `|𝒯| + 2|𝒮|` for every neuron pattern.
    pub budget: Option<usize>,
}

impl FaultPlan {
    pub fn total_faults(&self) -> usize {
        self.layers
            .iter()
            .flat_map(|l| l.neurons.iter().chain(std::iter::once(&l.gate)))
            .map(|p| p.erasures().len() + p.errors().len())
            .sum()
    }
}

pub fn inject_and_forward(cnet: &CodedNetwork, x: &SignVector, plan: &FaultPlan) -> Result<SignVector> {
    cnet.inject_and_forward(x, plan)
}

/// A disagreeing run of the coded network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaultWitness {
    pub x: SignVector,
    pub plan: FaultPlan,
    pub expected: SignVector,
    pub observed: SignVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaultCheckReport {
    pub max_erasures_per_neuron: usize,
    pub inputs: u64,
    pub plans: u64,
    pub trials: u64,
    pub agreements: u64,
    pub first_witness: Option<FaultWitness>,
}

impl FaultCheckReport {
    pub fn passed(&self) -> bool {
        self.agreements == self.trials
    }

    pub fn accuracy(&self) -> Rational {
        Rational::new(BigInt::from(self.agreements), BigInt::from(self.trials.max(1)))
    }
}

/// All erasure sets of size at most `k` over `0..m`, smallest first, then lexicographic.
fn erasure_choices(m: usize, k: usize) -> Vec<NoisePattern> {
    let mut out = vec![NoisePattern::none()];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..k.min(m) {
        frontier = frontier
            .iter()
            .flat_map(|set| {
                let start = set.last().map_or(0, |&l| l + 1);
                (start..m).map(move |j| {
                    let mut s = set.clone();
                    s.push(j);
                    s
                })
            })
            .collect();
        out.extend(frontier.iter().map(|s| NoisePattern::new(s.clone(), Vec::new()).expect("distinct")));
    }
    out
}

/// Every input against every plan that erases at most `max_per_neuron`
/// incoming synapses of each neuron (gates stay ideal, no errors).
pub fn exhaustive_erasure_check(cnet: &CodedNetwork, max_per_neuron: usize, budget: u64) -> Result<FaultCheckReport> {
    let n = cnet.original.input_width();
    check_cap(n, HYPERCUBE_CAP)?;
    let slots: Vec<(usize, usize, Vec<NoisePattern>)> = cnet
        .layers
        .iter()
        .enumerate()
        .flat_map(|(i, l)| {
            let choices = erasure_choices(l.input_width(), max_per_neuron);
            (0..l.neurons.len()).map(move |j| (i, j, choices.clone()))
        })
        .collect();
    let plans = slots.iter().try_fold(1u64, |acc, (_, _, c)| acc.checked_mul(c.len() as u64));
    let trials = plans.and_then(|p| p.checked_mul(1u64 << n)).filter(|&t| t <= budget);
    let (Some(plans), Some(trials)) = (plans, trials) else {
        return Err(Error::Resource(format!("exhaustive fault check exceeds the budget of {budget} runs")));
    };
    let template = cnet.empty_plan();
    let build = |mut idx: u64| {
        let mut plan = template.clone();
        for (i, j, choices) in slots.iter().rev() {
            let c = choices.len() as u64;
            plan.layers[*i].neurons[*j] = choices[(idx % c) as usize].clone();
            idx /= c;
        }
        plan
    };
    let per_input = (0..1u64 << n)
        .into_par_iter()
        .map(|k| -> Result<(u64, Option<FaultWitness>)> {
            let x = SignVector::hypercube_point(n, k)?;
            let expected = cnet.original.forward(&x)?;
            let mut agree = 0;
            let mut witness = None;
            for idx in 0..plans {
                let plan = build(idx);
                let observed = cnet.inject_and_forward(&x, &plan)?;
                if observed == expected {
                    agree += 1;
                } else if witness.is_none() {
                    witness = Some(FaultWitness { x: x.clone(), plan, expected: expected.clone(), observed });
                }
            }
            Ok((agree, witness))
        })
        .collect::<Result<Vec<_>>>()?;
    let agreements = per_input.iter().map(|(a, _)| a).sum();
    let first_witness = per_input.into_iter().find_map(|(_, w)| w);
    Ok(FaultCheckReport {
        max_erasures_per_neuron: max_per_neuron,
        inputs: 1 << n,
        plans,
        trials,
        agreements,
        first_witness,
    })
}

/// [`exhaustive_erasure_check`] with at most one erasure per neuron.
pub fn exhaustive_single_fault_check(cnet: &CodedNetwork, budget: u64) -> Result<FaultCheckReport> {
    exhaustive_erasure_check(cnet, 1, budget)
}

/// Where a sampled fault attaches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaultLocus {
    /// Each (neuron, synapse) reading is faulted independently.
    PerSynapse,
    /// One draw per wire, seen by every neuron of the next layer.
    SharedWire,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimulationConfig {
    pub erasure_prob: Rational,
    pub error_prob: Rational,
    pub trials: u64,
    pub seed: u64,
    pub locus: FaultLocus,
    /// Subject parity gates to the same fault model.
    pub faulty_gates: bool,
}

impl SimulationConfig {
    pub fn new(erasure_prob: Rational, error_prob: Rational, trials: u64, seed: u64) -> Self {
        Self { erasure_prob, error_prob, trials, seed, locus: FaultLocus::PerSynapse, faulty_gates: false }
    }

    pub fn label(&self) -> String {
        format!(
            "erasure={};error={};locus={};gates={}",
            format_rational(&self.erasure_prob),
            format_rational(&self.error_prob),
            match self.locus {
                FaultLocus::PerSynapse => "per-synapse",
                FaultLocus::SharedWire => "shared-wire",
            },
            if self.faulty_gates { "faulty" } else { "ideal" }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimulationReport {
    pub config: SimulationConfig,
    pub trials: u64,
    pub agreements: u64,
    /// Trials in which every neuron saw at most one erasure, no errors and
    /// no gate faults.
    pub guaranteed_trials: u64,
    pub guaranteed_agreements: u64,
    /// `histograms[i][k]`: (trial, neuron) pairs of layer `i` whose incoming
    /// synapses carried exactly `k` faults.
    pub histograms: Vec<Vec<u64>>,
}

impl SimulationReport {
    pub fn accuracy(&self) -> Rational {
        Rational::new(BigInt::from(self.agreements), BigInt::from(self.trials.max(1)))
    }

    pub const CSV_HEADER: &'static str = "trial_config,trials,agreements,accuracy,seed";

    pub fn csv_row(&self) -> String {
        let acc = if self.trials == 0 { 1.0 } else { self.agreements as f64 / self.trials as f64 };
        format!("{},{},{},{:.6},{}", self.config.label(), self.trials, self.agreements, acc, self.config.seed)
    }
}

/// Exact sampler for {clean, erased, error} with rational probabilities.
struct FaultSampler {
    denom: u64,
    erase_below: u64,
    error_below: u64,
}

impl FaultSampler {
    fn new(pe: &Rational, ps: &Rational) -> Result<Self> {
        let zero = Rational::zero();
        if *pe < zero || *ps < zero || pe + ps > Rational::one() {
            return Err(Error::Domain(format!(
                "fault probabilities {} and {} must be nonnegative with sum at most 1",
                format_rational(pe),
                format_rational(ps)
            )));
        }
        let d = pe.denom().lcm(ps.denom());
        let scaled = |p: &Rational| (p.numer() * (&d / p.denom())).to_u64();
        let too_fine = || Error::Domain("fault probability denominators exceed 64 bits".into());
        let denom = d.to_u64().ok_or_else(too_fine)?;
        let a = scaled(pe).ok_or_else(too_fine)?;
        let b = scaled(ps).ok_or_else(too_fine)?;
        Ok(Self { denom, erase_below: a, error_below: a + b })
    }

    /// 0 clean, 1 erased, 2 error.
    fn draw(&self, rng: &mut ChaCha8Rng) -> u8 {
        if self.error_below == 0 {
            return 0;
        }
        let u = rng.gen_range(0..self.denom);
        if u < self.erase_below {
            1
        } else if u < self.error_below {
            2
        } else {
            0
        }
    }

    fn pattern(&self, m: usize, rng: &mut ChaCha8Rng) -> NoisePattern {
        let (mut er, mut err) = (Vec::new(), Vec::new());
        for j in 0..m {
            match self.draw(rng) {
                1 => er.push(j),
                2 => err.push(j),
                _ => {}
            }
        }
        NoisePattern::new(er, err).expect("disjoint by construction")
    }
}

struct TrialOutcome {
    agree: bool,
    guaranteed: bool,
    counts: Vec<Vec<usize>>,
}

/// Random inputs against random faults; trial `i` draws from the stream
/// `(seed, i)` so the report does not depend on scheduling.
pub fn monte_carlo_fault_sim(cnet: &CodedNetwork, config: &SimulationConfig) -> Result<SimulationReport> {
    let sampler = FaultSampler::new(&config.erasure_prob, &config.error_prob)?;
    let n = cnet.original.input_width();
    let outcomes = (0..config.trials)
        .into_par_iter()
        .map(|trial| -> Result<TrialOutcome> {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(trial);
            let signs: Vec<i64> = (0..n).map(|_| if rng.gen::<bool>() { -1 } else { 1 }).collect();
            let x = SignVector::new(&signs)?;
            let plan = sample_plan(cnet, config, &sampler, &mut rng);
            let expected = cnet.original.forward(&x)?;
            let observed = cnet.inject_and_forward(&x, &plan)?;
            let guaranteed = plan.layers.iter().all(|l| {
                l.gate.is_empty() && l.neurons.iter().all(|p| p.errors().is_empty() && p.erasures().len() <= 1)
            });
            let counts = plan
                .layers
                .iter()
                .map(|l| l.neurons.iter().map(|p| p.erasures().len() + p.errors().len()).collect())
                .collect();
            Ok(TrialOutcome { agree: observed == expected, guaranteed, counts })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut histograms: Vec<Vec<u64>> = cnet.layers.iter().map(|l| vec![0; l.input_width() + 1]).collect();
    let mut report = SimulationReport {
        config: config.clone(),
        trials: config.trials,
        agreements: 0,
        guaranteed_trials: 0,
        guaranteed_agreements: 0,
        histograms: Vec::new(),
    };
    for o in outcomes {
        report.agreements += u64::from(o.agree);
        report.guaranteed_trials += u64::from(o.guaranteed);
        report.guaranteed_agreements += u64::from(o.guaranteed && o.agree);
        for (hist, counts) in histograms.iter_mut().zip(o.counts) {
            for c in counts {
                hist[c] += 1;
            }
        }
    }
    report.histograms = histograms;
    Ok(report)
}

fn sample_plan(
    cnet: &CodedNetwork,
    config: &SimulationConfig,
    sampler: &FaultSampler,
    rng: &mut ChaCha8Rng,
) -> FaultPlan {
    let layers = cnet
        .layers
        .iter()
        .map(|layer| {
            let m = layer.input_width();
            let neurons = match config.locus {
                FaultLocus::PerSynapse => (0..layer.neurons.len()).map(|_| sampler.pattern(m, rng)).collect(),
                FaultLocus::SharedWire => vec![sampler.pattern(m, rng); layer.neurons.len()],
            };
            let gate =
                if config.faulty_gates && layer.gated { sampler.pattern(m - 1, rng) } else { NoisePattern::none() };
            LayerFaults { neurons, gate }
        })
        .collect();
    FaultPlan { layers, budget: None }
}
