//! Robustness of coded neurons against erasures and errors.
//!
//! Two independent routes are provided:
//!
//! * the definitional oracle ([`is_ts_robust`], [`robustness_radius`]),
//!   which enumerates every input and every disjoint pair of erasure and
//!   error sets;
//! * a geometric criterion ([`theorem1_check`]) built on the ℓ1 distance
//!   from encoded points to the decision hyperplane clipped to `[−1,1]ᵐ`.
//!
//! Enumeration order is fixed: inputs in hypercube order, then erasure sets
//! lexicographically, then error sets lexicographically over the remaining
//! coordinates. The reported witness is always the first failure in that
//! order, independent of how many worker threads run.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::boolean_core::{check_cap, index_to_mask, NoisySignVector, Sign, SignVector, HYPERCUBE_CAP};
use crate::error::{dimension, Error, Result};
use crate::neuron::Neuron;
use crate::rational::{format_rational, int, max_abs, Extended, IntegerHyperplane, Rational};
use crate::solutions::{Encoder, Solution};

/// Default cap on evaluated `(x, pattern)` pairs.
pub const DEFAULT_BUDGET: u64 = 1 << 30;

/// Disjoint erasure set `𝒯` and error set `𝒮` over coded coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NoisePattern {
    erasures: Vec<usize>,
    errors: Vec<usize>,
}

impl NoisePattern {
    pub fn new(mut erasures: Vec<usize>, mut errors: Vec<usize>) -> Result<Self> {
        erasures.sort_unstable();
        errors.sort_unstable();
        if erasures.windows(2).any(|w| w[0] == w[1]) || errors.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain("noise pattern lists a coordinate twice".into()));
        }
        if let Some(j) = erasures.iter().find(|j| errors.binary_search(j).is_ok()) {
            return Err(Error::Domain(format!("coordinate {j} is both erased and in error")));
        }
        Ok(Self { erasures, errors })
    }

    pub fn none() -> Self {
        Self::default()
    }

    pub fn erasure(j: usize) -> Self {
        Self { erasures: vec![j], errors: Vec::new() }
    }

    pub fn erasures(&self) -> &[usize] {
        &self.erasures
    }

    pub fn errors(&self) -> &[usize] {
        &self.errors
    }

    pub fn is_empty(&self) -> bool {
        self.erasures.is_empty() && self.errors.is_empty()
    }

    /// `|𝒯| + 2|𝒮|`.
    pub fn cost(&self) -> usize {
        self.erasures.len() + 2 * self.errors.len()
    }

    pub fn check_range(&self, m: usize) -> Result<()> {
        match self.erasures.iter().chain(&self.errors).find(|&&j| j >= m) {
            Some(j) => Err(Error::Dimension(format!("coordinate {j} out of range for coded length {m}"))),
            None => Ok(()),
        }
    }
}

/// A failing input and the pattern that breaks it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub x: SignVector,
    pub pattern: NoisePattern,
    pub expected: Sign,
    pub observed: Sign,
}

/// Noisy coded output: erased coordinates contribute 0, errored ones are negated.
pub fn noisy_evaluate(sol: &Solution, x: &SignVector, p: &NoisePattern) -> Result<Sign> {
    p.check_range(sol.len())?;
    let z = sol.encode(x)?;
    let noisy = NoisySignVector::corrupt(&z, p.erasures(), p.errors())?;
    Ok(Sign::of(&(noisy.dot(sol.v())? - sol.mu())))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Number of `(x, pattern)` evaluations for one `(t, s)` check.
pub fn pattern_count(n: usize, m: usize, t: usize, s: usize) -> u128 {
    if t + s > m {
        return 0;
    }
    (1u128 << n).saturating_mul(binomial(m, t)).saturating_mul(binomial(m - t, s))
}

/// Advances `c` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Precomputed data shared by the oracle routines.
struct Oracle<'a> {
    encoder: &'a Encoder,
    hyperplane: IntegerHyperplane,
    expected: Vec<Sign>,
    n: usize,
    m: usize,
}

impl<'a> Oracle<'a> {
    fn new(sol: &'a Solution, nr: &Neuron) -> Result<Self> {
        let n = sol.encoder().input_dim();
        if nr.dimension() != n {
            return Err(dimension(n, nr.dimension(), "target neuron"));
        }
        check_cap(n, HYPERCUBE_CAP)?;
        Ok(Self {
            encoder: sol.encoder(),
            hyperplane: sol.integer_form()?,
            expected: nr.truth_signs()?,
            n,
            m: sol.len(),
        })
    }

    /// Products `E(x)_j · V_j` and the clean preactivation for hypercube index `k`.
    fn products(&self, k: u64, signs: &mut Vec<i8>, out: &mut Vec<i128>) -> i128 {
        let x = SignVector::from_mask(self.n, index_to_mask(self.n, k)).expect("valid point");
        signs.clear();
        self.encoder.encode_into(&x, signs).expect("dimension checked");
        out.clear();
        out.extend(signs.iter().zip(&self.hyperplane.weights).map(|(&e, &w)| i128::from(e) * w));
        out.iter().sum::<i128>() - self.hyperplane.offset
    }

    /// First failing pattern with `|𝒯| = t`, `|𝒮| = s` on input `k`.
    fn first_failure_at(
        &self,
        k: u64,
        t: usize,
        s: usize,
        signs: &mut Vec<i8>,
        prods: &mut Vec<i128>,
    ) -> Option<Witness> {
        let base = self.products(k, signs, prods);
        let expected = self.expected[k as usize];
        let mut erased: Vec<usize> = (0..t).collect();
        let witness = |erasures: Vec<usize>, errors: Vec<usize>, observed: Sign| Witness {
            x: SignVector::hypercube_point(self.n, k).expect("valid point"),
            pattern: NoisePattern { erasures, errors },
            expected,
            observed,
        };
        if s == 0 {
            loop {
                let observed = Sign::of_int(base - erased.iter().map(|&j| prods[j]).sum::<i128>());
                if observed != expected {
                    return Some(witness(erased, Vec::new(), observed));
                }
                if !next_combination(&mut erased, self.m) {
                    return None;
                }
            }
        }
        loop {
            let rest: Vec<usize> = (0..self.m).filter(|j| erased.binary_search(j).is_err()).collect();
            let erased_sum: i128 = erased.iter().map(|&j| prods[j]).sum();
            let mut pos: Vec<usize> = (0..s).collect();
            loop {
                let flipped: i128 = pos.iter().map(|&i| prods[rest[i]]).sum();
                let observed = Sign::of_int(base - erased_sum - 2 * flipped);
                if observed != expected {
                    return Some(witness(erased.clone(), pos.iter().map(|&i| rest[i]).collect(), observed));
                }
                if !next_combination(&mut pos, rest.len()) {
                    break;
                }
            }
            if !next_combination(&mut erased, self.m) {
                return None;
            }
        }
    }

    fn first_failure(&self, t: usize, s: usize) -> Option<Witness> {
        if t + s > self.m {
            return None;
        }
        (0..1u64 << self.n)
            .into_par_iter()
            .map_init(
                || (Vec::with_capacity(self.m), Vec::with_capacity(self.m)),
                |(signs, prods), k| self.first_failure_at(k, t, s, signs, prods),
            )
            .find_map_first(|w| w)
    }
}

/// Outcome of a `(t, s)` check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TsVerdict {
    Robust,
    NotRobust(Witness),
}

impl TsVerdict {
    pub fn is_robust(&self) -> bool {
        matches!(self, TsVerdict::Robust)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            TsVerdict::Robust => None,
            TsVerdict::NotRobust(w) => Some(w),
        }
    }
}

fn charge(spent: &mut u128, n: usize, m: usize, t: usize, s: usize, budget: u64) -> Result<()> {
    *spent = spent.saturating_add(pattern_count(n, m, t, s));
    if *spent > u128::from(budget) {
        return Err(Error::Resource(format!(
            "checking (t,s) = ({t},{s}) brings the total to {} evaluations, over the budget of {budget}",
            *spent
        )));
    }
    Ok(())
}

/// Whether the coded neuron computes `nr` under every `t` erasures and `s`
/// errors, with the first counterexample otherwise.
pub fn is_ts_robust(sol: &Solution, nr: &Neuron, t: usize, s: usize) -> Result<TsVerdict> {
    is_ts_robust_with_budget(sol, nr, t, s, DEFAULT_BUDGET)
}

pub fn is_ts_robust_with_budget(sol: &Solution, nr: &Neuron, t: usize, s: usize, budget: u64) -> Result<TsVerdict> {
    let oracle = Oracle::new(sol, nr)?;
    charge(&mut 0, oracle.n, oracle.m, t, s, budget)?;
    Ok(match oracle.first_failure(t, s) {
        None => TsVerdict::Robust,
        Some(w) => TsVerdict::NotRobust(w),
    })
}

/// `(t, s)` pairs of cost exactly `r` that fit in `m` coordinates, by ascending `s`.
fn pairs_of_cost(r: usize, m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=r / 2).map(move |s| (r - 2 * s, s)).filter(move |&(t, s)| t + s <= m)
}

/// Whether the coded neuron is `(t, s)`-robust for every `t + 2s ≤ r`.
pub fn is_r_robust(sol: &Solution, nr: &Neuron, r: usize, budget: u64) -> Result<TsVerdict> {
    let oracle = Oracle::new(sol, nr)?;
    let mut spent = 0;
    for cost in 0..=r {
        for (t, s) in pairs_of_cost(cost, oracle.m) {
            charge(&mut spent, oracle.n, oracle.m, t, s, budget)?;
            if let Some(w) = oracle.first_failure(t, s) {
                return Ok(TsVerdict::NotRobust(w));
            }
        }
    }
    Ok(TsVerdict::Robust)
}

/// Result of the radius search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radius {
    /// Largest `r` for which the solution is `r`-robust.
    pub radius: usize,
    /// Every pattern was tried (`r = 2m`) and none failed.
    pub unbounded: bool,
    /// First failure for each `(t, s)` of cost `radius + 1` that fails.
    pub witnesses: Vec<Witness>,
    pub checked_patterns: u128,
}

/// Largest `r` such that `(t, s)`-robustness holds for all `t + 2s ≤ r`.
///
/// The search stops at `2m`, where every pattern has been covered. Fails
/// with a domain error when the coded neuron disagrees with `nr` even
/// without noise.
pub fn robustness_radius(sol: &Solution, nr: &Neuron) -> Result<usize> {
    Ok(radius_search(sol, nr, DEFAULT_BUDGET)?.radius)
}

pub fn radius_search(sol: &Solution, nr: &Neuron, budget: u64) -> Result<Radius> {
    let oracle = Oracle::new(sol, nr)?;
    let mut spent = 0;
    charge(&mut spent, oracle.n, oracle.m, 0, 0, budget)?;
    if let Some(w) = oracle.first_failure(0, 0) {
        return Err(Error::Domain(format!("coded neuron disagrees with the target at {} without noise", w.x)));
    }
    for cost in 1..=2 * oracle.m {
        let mut witnesses = Vec::new();
        for (t, s) in pairs_of_cost(cost, oracle.m) {
            charge(&mut spent, oracle.n, oracle.m, t, s, budget)?;
            witnesses.extend(oracle.first_failure(t, s));
        }
        if !witnesses.is_empty() {
            return Ok(Radius { radius: cost - 1, unbounded: false, witnesses, checked_patterns: spent });
        }
    }
    Ok(Radius { radius: 2 * oracle.m, unbounded: true, witnesses: Vec::new(), checked_patterns: spent })
}

/// `d₁(z, ℋ(v, μ)) = |z·vᵀ − μ| / ‖v‖∞`.
pub fn l1_distance_to_hyperplane(z: &[Rational], v: &[Rational], mu: &Rational) -> Result<Rational> {
    if z.len() != v.len() {
        return Err(dimension(v.len(), z.len(), "point"));
    }
    let norm = max_abs(v);
    if norm.is_zero() {
        return Err(Error::Degenerate("hyperplane normal is zero".into()));
    }
    let g: Rational = z.iter().zip(v).map(|(a, b)| a * b).sum::<Rational>() - mu;
    Ok(g.abs() / norm)
}

/// `d₁(z, ℋ(v, μ) ∩ [−1,1]ᵐ)`, or `+∞` when the clipped hyperplane is empty.
///
/// Greedy fractional knapsack: with `g = z·vᵀ − μ`, move coordinates toward
/// the cube face that shrinks `|g|`, largest `|vᵢ|` first (ties by lowest
/// index), until `g` reaches zero or all capacity is spent.
pub fn l1_distance_to_clipped(z: &[Rational], v: &[Rational], mu: &Rational) -> Result<Extended> {
    if z.len() != v.len() {
        return Err(dimension(v.len(), z.len(), "point"));
    }
    if v.iter().all(Zero::is_zero) {
        return Err(Error::Degenerate("hyperplane normal is zero".into()));
    }
    let one = int(1);
    if let Some(i) = z.iter().position(|zi| zi.abs() > one) {
        return Err(Error::Domain(format!("coordinate {i} of the point lies outside [−1, 1]")));
    }
    let g: Rational = z.iter().zip(v).map(|(a, b)| a * b).sum::<Rational>() - mu;
    if g.is_zero() {
        return Ok(Extended::Finite(Rational::zero()));
    }
    let decreasing = g.is_positive();
    let mut order: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    order.sort_by(|&a, &b| v[b].abs().cmp(&v[a].abs()).then(a.cmp(&b)));
    let mut need = g.abs();
    let mut moved = Rational::zero();
    for i in order {
        // moving zᵢ toward −sign(vᵢ) lowers g; toward +sign(vᵢ) raises it
        let toward_neg = decreasing == v[i].is_positive();
        let capacity = if toward_neg { &z[i] + &one } else { &one - &z[i] };
        let rate = v[i].abs();
        let step = (&need / &rate).min(capacity);
        need -= &step * &rate;
        moved += step;
        if need.is_zero() {
            return Ok(Extended::Finite(moved));
        }
    }
    Ok(Extended::Infinity)
}

/// `min_x d₁(E(x), ℋ(v, μ))`.
pub fn min_distance(sol: &Solution) -> Result<Rational> {
    min_distance_of(sol.encoder(), sol.v(), sol.mu())
}

/// `d / m`.
pub fn relative_distance(sol: &Solution) -> Result<Rational> {
    Ok(min_distance(sol)? / int(sol.len() as i64))
}

fn min_distance_of(e: &Encoder, v: &[Rational], mu: &Rational) -> Result<Rational> {
    if v.len() != e.output_dim() {
        return Err(dimension(e.output_dim(), v.len(), "coded weights"));
    }
    let h = IntegerHyperplane::new(v, mu)?;
    let norm = h.max_abs_weight();
    if norm == 0 {
        return Err(Error::Degenerate("hyperplane normal is zero".into()));
    }
    let n = e.input_dim();
    check_cap(n, HYPERCUBE_CAP)?;
    let best = (0..1u64 << n)
        .into_par_iter()
        .map_init(
            || Vec::with_capacity(v.len()),
            |signs, k| {
                let x = SignVector::from_mask(n, index_to_mask(n, k)).expect("valid point");
                signs.clear();
                e.encode_into(&x, signs).expect("dimension checked");
                let dot: i128 = signs.iter().zip(&h.weights).map(|(&s, &w)| i128::from(s) * w).sum();
                (dot - h.offset).abs()
            },
        )
        .min()
        .expect("nonempty cube");
    Ok(Rational::new(BigInt::from(best), BigInt::from(norm)))
}

/// `min_i d(E, vᵢ, μᵢ)` for neurons sharing one encoder.
pub fn joint_min_distance(e: &Encoder, pairs: &[(Vec<Rational>, Rational)]) -> Result<Rational> {
    if pairs.is_empty() {
        return Err(Error::Domain("joint distance of an empty neuron set".into()));
    }
    pairs
        .iter()
        .map(|(v, mu)| min_distance_of(e, v, mu))
        .try_fold(None, |best: Option<Rational>, d| {
            let d = d?;
            Ok(Some(best.map_or(d.clone(), |b| b.min(d))))
        })
        .map(|d| d.expect("nonempty"))
}

/// Every quantity in the geometric criterion for one `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Verdict {
    pub r: usize,
    /// `sign(x·wᵀ−θ) = sign(E(x)·vᵀ−μ)` for every `x`.
    pub agreement: bool,
    /// `d₁(E(ℱ⁺), ℋ′)`.
    pub positive_distance: Extended,
    /// `d₁(E(ℱ⁻), ℋ′)`.
    pub negative_distance: Extended,
    /// Some point of the cube lies strictly below the hyperplane.
    pub negative_side_reachable: bool,
    /// The three conditions read literally.
    pub literal: bool,
    /// The conditions with the positive-class bound waived when no cube
    /// point lies strictly on the negative side.
    pub holds: bool,
}

/// The ℓ1 criterion: agreement on all inputs, `r ≤ d₁(E(ℱ⁺), ℋ′)` and
/// `r < d₁(E(ℱ⁻), ℋ′)`.
///
/// When `ℋ′` only touches the cube (every cube point has `y·vᵀ ≥ μ`), a
/// positive point can reach `ℋ′` but never cross it, so the positive bound
/// is vacuous; [`Theorem1Verdict::literal`] keeps the unmodified reading.
pub fn theorem1_verdict(sol: &Solution, nr: &Neuron, r: usize) -> Result<Theorem1Verdict> {
    if r == 0 {
        return Err(Error::Domain("the criterion is stated for positive r".into()));
    }
    let n = sol.encoder().input_dim();
    if nr.dimension() != n {
        return Err(dimension(n, nr.dimension(), "target neuron"));
    }
    check_cap(n, HYPERCUBE_CAP)?;
    let expected = nr.truth_signs()?;
    let (v, mu) = (sol.v(), sol.mu());
    let results = (0..1u64 << n)
        .into_par_iter()
        .map(|k| -> Result<(Sign, Sign, Extended)> {
            let x = SignVector::hypercube_point(n, k)?;
            let z = sol.encode(&x)?.to_rationals();
            let coded = Sign::of(&(z.iter().zip(v).map(|(a, b)| a * b).sum::<Rational>() - mu));
            Ok((expected[k as usize], coded, l1_distance_to_clipped(&z, v, mu)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let agreement = results.iter().all(|(a, b, _)| a == b);
    let class_min = |class: Sign| {
        results.iter().filter(|(s, _, _)| *s == class).map(|(_, _, d)| d.clone()).min().unwrap_or(Extended::Infinity)
    };
    let positive_distance = class_min(Sign::Pos);
    let negative_distance = class_min(Sign::Neg);
    let l1_norm: Rational = v.iter().map(|x| x.abs()).sum();
    let negative_side_reachable = -l1_norm - mu < Rational::zero();
    let rr = Extended::Finite(int(r as i64));
    let literal = agreement && rr <= positive_distance && rr < negative_distance;
    let holds = agreement && (!negative_side_reachable || rr <= positive_distance) && rr < negative_distance;
    Ok(Theorem1Verdict { r, agreement, positive_distance, negative_distance, negative_side_reachable, literal, holds })
}

pub fn theorem1_check(sol: &Solution, nr: &Neuron, r: usize) -> Result<bool> {
    Ok(theorem1_verdict(sol, nr, r)?.holds)
}

/// Summary of one solution's distance and robustness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RobustnessReport {
    pub kind: &'static str,
    pub m: usize,
    pub d: Rational,
    pub relative: Rational,
    pub radius: usize,
    pub unbounded: bool,
    pub witnesses: Vec<Witness>,
    pub checked_patterns: u128,
    pub wall_time: Duration,
}

pub fn analyze(sol: &Solution, nr: &Neuron, budget: u64) -> Result<RobustnessReport> {
    let start = Instant::now();
    let d = min_distance(sol)?;
    let radius = radius_search(sol, nr, budget)?;
    Ok(RobustnessReport {
        kind: sol.encoder().kind_name(),
        m: sol.len(),
        relative: &d / int(sol.len() as i64),
        d,
        radius: radius.radius,
        unbounded: radius.unbounded,
        witnesses: radius.witnesses,
        checked_patterns: radius.checked_patterns,
        wall_time: start.elapsed(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessRecord {
    pub x: Vec<i64>,
    pub erasures: Vec<usize>,
    pub errors: Vec<usize>,
    pub expected: i32,
    pub observed: i32,
}

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> Self {
        Self {
            x: w.x.to_values(),
            erasures: w.pattern.erasures().to_vec(),
            errors: w.pattern.errors().to_vec(),
            expected: w.expected.value(),
            observed: w.observed.value(),
        }
    }
}

/// Flat serializable form of a [`RobustnessReport`].
#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub kind: String,
    pub m: usize,
    pub d: String,
    pub relative: String,
    pub radius: usize,
    pub unbounded: bool,
    pub witness_count: usize,
    pub witnesses: Vec<WitnessRecord>,
    pub checked_patterns: String,
    pub wall_time_s: f64,
}

impl RobustnessReport {
    pub fn to_record(&self) -> ReportRecord {
        ReportRecord {
            kind: self.kind.to_string(),
            m: self.m,
            d: format_rational(&self.d),
            relative: format_rational(&self.relative),
            radius: self.radius,
            unbounded: self.unbounded,
            witness_count: self.witnesses.len(),
            witnesses: self.witnesses.iter().map(WitnessRecord::from).collect(),
            checked_patterns: self.checked_patterns.to_string(),
            wall_time_s: self.wall_time.as_secs_f64(),
        }
    }

    pub const CSV_HEADER: &'static str = "kind,m,d,d_over_m,radius,witness_count,wall_time_s";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.6}",
            self.kind,
            self.m,
            format_rational(&self.d),
            format_rational(&self.relative),
            self.radius,
            self.witnesses.len(),
            self.wall_time.as_secs_f64()
        )
    }
}
