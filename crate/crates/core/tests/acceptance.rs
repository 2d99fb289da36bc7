//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use coded_threshold::boolean_core::{enumerate_hypercube, walsh_hadamard, SignVector, TruthTable};
use coded_threshold::network::{code_network, exhaustive_single_fault_check, CodedNetwork, LayeredNetwork};
use coded_threshold::neuron::{tighten_integer_bias, BinaryNeuron, Neuron};
use coded_threshold::rational::{frac, int, max_abs, Extended, Rational};
use coded_threshold::robustness::{
    is_r_robust, is_ts_robust, l1_distance_to_clipped, min_distance, noisy_evaluate, radius_search, relative_distance,
    robustness_radius, theorem1_check, NoisePattern, DEFAULT_BUDGET,
};
use coded_threshold::solutions::{
    coded_evaluate, constant_solution, fourier_solution, generalized_parity_solution, identity_solution,
    parity_solution, replicate, Encoder, Solution,
};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<T>(r: coded_threshold::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn sv(xs: &[i64]) -> SignVector {
    SignVector::new(xs).unwrap()
}

fn random_signs(rng: &mut ChaCha8Rng, n: usize) -> SignVector {
    let xs: Vec<i64> = (0..n).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
    sv(&xs)
}

fn random_binary(rng: &mut ChaCha8Rng, n: usize) -> BinaryNeuron {
    let theta = -(n as i64) - 1 + 2 * rng.gen_range(0..=n as i64 + 1);
    BinaryNeuron::new(random_signs(rng, n), theta).unwrap()
}

fn random_rational(rng: &mut ChaCha8Rng, span: i64, den: i64) -> Rational {
    frac(rng.gen_range(-span..=span), rng.gen_range(1..=den))
}

fn agrees(sol: &Solution, nr: &Neuron) -> bool {
    enumerate_hypercube(nr.dimension()).unwrap().all(|x| coded_evaluate(sol, &x).unwrap() == nr.evaluate(&x).unwrap())
}

fn example2() -> BinaryNeuron {
    BinaryNeuron::new(sv(&[1, 1, -1]), 0).unwrap()
}

/// Single-erasure rows for the two listed inputs, then the full 8 × 4 check.
fn criterion_1() -> Check {
    let bn = example2();
    let sol = e2s(parity_solution(&bn))?;
    ensure(sol.v() == [int(1), int(1), int(-1), int(1)] && sol.mu().is_zero(), || "unexpected coded weights".into())?;
    // (x, E(x), sum of the three surviving products for erasures 1..4)
    let rows: [(&[i64], &[i64], [i64; 4]); 2] =
        [(&[1, -1, 1], &[1, -1, 1, -1], [-3, -1, -1, -1]), (&[-1, 1, -1], &[-1, 1, -1, 1], [3, 1, 1, 1])];
    for (x, z, sums) in rows {
        let x = sv(x);
        ensure(e2s(sol.encode(&x))? == sv(z), || format!("E({x}) mismatch"))?;
        let zr = sv(z).to_rationals();
        for (j, expected_sum) in sums.iter().enumerate() {
            let sum: Rational = (0..4).filter(|&k| k != j).map(|k| &zr[k] * &sol.v()[k]).sum();
            ensure(sum == int(*expected_sum), || format!("row {x} erasure {j}: sum {sum}"))?;
            let out = e2s(noisy_evaluate(&sol, &x, &NoisePattern::erasure(j)))?;
            ensure(out == e2s(bn.evaluate(&x))?, || format!("row {x} erasure {j}: output {out}"))?;
        }
    }
    let mut checked = 0;
    for x in e2s(enumerate_hypercube(3))? {
        for j in 0..4 {
            let out = e2s(noisy_evaluate(&sol, &x, &NoisePattern::erasure(j)))?;
            ensure(out == e2s(bn.evaluate(&x))?, || format!("x = {x}, erasure {j}"))?;
            checked += 1;
        }
    }
    ensure(e2s(is_ts_robust(&sol, &bn.to_neuron(), 1, 0))?.is_robust(), || "oracle disagrees".into())?;
    Ok(format!("8 table rows exact, {checked} single-erasure runs agree"))
}

/// Every binary neuron of width n ≤ 6 and 1000 random weight vectors for 7 ≤ n ≤ 10.
fn parity_population() -> Vec<(usize, Vec<BinaryNeuron>)> {
    let mut out = Vec::new();
    for n in 1..=10usize {
        let weights: Vec<SignVector> = if n <= 6 {
            enumerate_hypercube(n).unwrap().collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + n as u64);
            (0..1000).map(|_| random_signs(&mut rng, n)).collect()
        };
        let neurons = weights
            .iter()
            .flat_map(|w| BinaryNeuron::canonical_biases(n).map(move |t| BinaryNeuron::new(w.clone(), t).unwrap()))
            .collect();
        out.push((n, neurons));
    }
    out
}

fn criterion_2(pop: &[(usize, Vec<BinaryNeuron>)]) -> Check {
    let mut total = 0;
    for (n, neurons) in pop {
        let rel = frac(2, *n as i64 + 1);
        neurons.par_iter().try_for_each(|bn| -> Result<(), String> {
            let sol = e2s(parity_solution(bn))?;
            let d = e2s(min_distance(&sol))?;
            if bn.is_constant() {
                ensure(d >= int(2), || format!("constant {:?}: d = {d}", bn))
            } else {
                ensure(d == int(2), || format!("{:?}: d = {d}", bn))?;
                let r = e2s(relative_distance(&sol))?;
                ensure(r == rel, || format!("{:?}: d/m = {r}", bn))
            }
        })?;
        total += neurons.len();
    }
    Ok(format!("{total} parity solutions, n = 1..10, d = 2 and d/m = 2/(n+1)"))
}

fn criterion_3(pop: &[(usize, Vec<BinaryNeuron>)]) -> Check {
    let mut sharp = 0;
    for (n, neurons) in pop {
        let failures = neurons
            .par_iter()
            .map(|bn| -> Result<usize, String> {
                let sol = e2s(parity_solution(bn))?;
                let nr = bn.to_neuron();
                ensure(e2s(is_r_robust(&sol, &nr, 1, DEFAULT_BUDGET))?.is_robust(), || {
                    format!("{:?} not 1-robust", bn)
                })?;
                if bn.is_constant() {
                    return Ok(0);
                }
                let broken = !e2s(is_ts_robust(&sol, &nr, 0, 1))?.is_robust()
                    || !e2s(is_ts_robust(&sol, &nr, 2, 0))?.is_robust();
                ensure(broken, || format!("{:?} survives cost-2 patterns", bn))?;
                Ok(1)
            })
            .try_reduce(|| 0, |a, b| Ok(a + b))?;
        ensure(failures > 0, || format!("no sharp example at n = {n}"))?;
        let first = neurons.iter().find(|bn| !bn.is_constant()).unwrap();
        let r = e2s(radius_search(&parity_solution(first).unwrap(), &first.to_neuron(), DEFAULT_BUDGET))?;
        ensure(r.radius == 1, || format!("n = {n}: radius {}", r.radius))?;
        sharp += failures;
    }
    Ok(format!("all 1-robust; {sharp} non-constant neurons fail a cost-2 pattern"))
}

fn criterion_4() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut done = 0;
    while done < 100 {
        let n = rng.gen_range(1..=8);
        let bn = random_binary(&mut rng, n);
        if bn.is_constant() {
            continue;
        }
        let nr = bn.to_neuron();
        let sol = e2s(identity_solution(&nr))?;
        let r = e2s(radius_search(&sol, &nr, DEFAULT_BUDGET))?;
        ensure(r.radius == 0, || format!("{nr}: radius {}", r.radius))?;
        let w = r
            .witnesses
            .iter()
            .find(|w| w.pattern.errors().is_empty())
            .ok_or_else(|| format!("{nr}: no erasure witness"))?;
        ensure(w.pattern.erasures().len() == 1, || "witness is not a single erasure".into())?;
        let observed = e2s(noisy_evaluate(&sol, &w.x, &w.pattern))?;
        ensure(observed != e2s(nr.evaluate(&w.x))?, || format!("{nr}: witness does not fail"))?;
        done += 1;
    }
    Ok("100 identity solutions have radius 0 with a checked single-erasure witness".into())
}

fn random_solution(rng: &mut ChaCha8Rng) -> Solution {
    loop {
        let n = rng.gen_range(1..=5);
        let sol = match rng.gen_range(0..5) {
            0 => {
                let w: Vec<Rational> = (0..n).map(|_| random_rational(rng, 6, 4)).collect();
                identity_solution(&Neuron::new(w, random_rational(rng, 6, 4)).unwrap())
            }
            1 => parity_solution(&random_binary(rng, n)),
            2 => {
                let w: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
                Neuron::from_ints(&w, rng.gen_range(-4..=4))
                    .and_then(|nr| tighten_integer_bias(&nr))
                    .and_then(|nr| generalized_parity_solution(&nr))
            }
            3 => {
                let w: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
                Neuron::from_ints(&w, rng.gen_range(-3..=3)).and_then(|nr| fourier_solution(&nr))
            }
            _ => {
                let w: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
                Neuron::from_ints(&w, rng.gen_range(-3..=3)).and_then(|nr| constant_solution(&nr, rng.gen_range(1..=4)))
            }
        };
        if let Ok(s) = sol {
            return s;
        }
    }
}

fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let sol = random_solution(&mut rng);
        let d = e2s(min_distance(&sol))?;
        let rel = e2s(relative_distance(&sol))?;
        for copies in [2usize, 3, 5] {
            let rep = e2s(replicate(&sol, copies))?;
            let dr = e2s(min_distance(&rep))?;
            ensure(dr == &d * int(copies as i64), || {
                format!("{}: ℓ = {copies}, d {d} -> {dr}", sol.encoder().kind_name())
            })?;
            ensure(e2s(relative_distance(&rep))? == rel, || "relative distance changed".into())?;
        }
    }
    Ok("50 solutions × ℓ ∈ {2,3,5}: d scales by ℓ, d/m unchanged".into())
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(2..=4);
        let w: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng, 5, 3)).collect();
        let nr = e2s(Neuron::new(w, random_rational(&mut rng, 5, 3)))?;
        if e2s(nr.is_constant())? {
            continue;
        }
        let sol = e2s(fourier_solution(&nr))?;
        ensure(agrees(&sol, &nr), || format!("{nr}: coded disagreement"))?;
        // independent spectrum: direct correlation sums
        let table = e2s(TruthTable::from_fn(n, |x| int(i64::from(nr.evaluate(x).unwrap().value()))))?;
        let spectrum = e2s(walsh_hadamard(&table))?;
        let direct_max = (1u32..1 << n)
            .map(|mask| {
                let s: i64 = enumerate_hypercube(n)
                    .unwrap()
                    .map(|x| {
                        let chi: i32 = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| x.get(i).value()).product();
                        i64::from(chi * nr.evaluate(&x).unwrap().value())
                    })
                    .sum();
                frac(s.abs(), 1 << n)
            })
            .max()
            .unwrap();
        ensure(spectrum.max_abs_nonempty() == direct_max, || "spectrum mismatch".into())?;
        ensure(max_abs(sol.v()) == direct_max, || "coded weights differ from spectrum".into())?;
        let d = e2s(min_distance(&sol))?;
        ensure(&d * &direct_max == int(1), || format!("{nr}: d = {d}, max coefficient {direct_max}"))?;
        done += 1;
    }
    let maj = e2s(Neuron::from_ints(&[1, 1, 1], 0))?;
    let sol = e2s(fourier_solution(&maj))?;
    ensure(sol.len() == 7 && e2s(min_distance(&sol))? == int(2), || "majority-3 mismatch".into())?;
    Ok("200 neurons: agreement and d · max|coefficient| = 1; majority-3 d = 2, m = 7".into())
}

fn criterion_7() -> Check {
    let mut cases: Vec<(String, Solution, Neuron)> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=5 {
        for _ in 0..6 {
            let bn = random_binary(&mut rng, n);
            let nr = bn.to_neuron();
            cases.push(("parity".into(), parity_solution(&bn).unwrap(), nr.clone()));
            cases.push(("replication".into(), replicate(&identity_solution(&nr).unwrap(), 2).unwrap(), nr.clone()));
            cases.push(("constant".into(), constant_solution(&nr, rng.gen_range(1..=5)).unwrap(), nr));
        }
        for t in [-(n as i64) - 1, n as i64 + 1] {
            let bn = BinaryNeuron::new(random_signs(&mut rng, n), t).unwrap();
            cases.push(("parity-constant".into(), parity_solution(&bn).unwrap(), bn.to_neuron()));
        }
    }
    let mut random = 0;
    while random < 100 {
        let n = rng.gen_range(1..=5);
        let (sol, nr) = match rng.gen_range(0..4) {
            0 => {
                let v: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng, 6, 3)).collect();
                let mu = random_rational(&mut rng, 6, 3);
                let Ok(nr) = Neuron::new(v.clone(), mu.clone()) else { continue };
                let Ok(sol) = Solution::new(Encoder::Identity { n }, v, mu) else { continue };
                (sol, nr)
            }
            1 => {
                let v: Vec<Rational> = (0..2 * n).map(|_| random_rational(&mut rng, 4, 3)).collect();
                let w: Vec<Rational> = (0..n).map(|i| &v[i] + &v[n + i]).collect();
                let mu = random_rational(&mut rng, 6, 3);
                let Ok(nr) = Neuron::new(w, mu.clone()) else { continue };
                let enc = Encoder::Replication { inner: Box::new(Encoder::Identity { n }), copies: 2 };
                let Ok(sol) = Solution::new(enc, v, mu) else { continue };
                (sol, nr)
            }
            2 => {
                let bn = random_binary(&mut rng, n);
                let nr = bn.to_neuron();
                let m = rng.gen_range(1..=4);
                let v: Vec<Rational> = (0..m).map(|_| frac(rng.gen_range(1..=6), rng.gen_range(1..=3))).collect();
                let total: Rational = v.iter().sum();
                let mu = &total * frac(rng.gen_range(-9..=9), 10);
                let enc = Encoder::Constant { target: nr.clone(), m };
                (Solution::new(enc, v, mu).unwrap(), nr)
            }
            _ => {
                // perturbed parity weights, kept only if still in agreement
                let bn = random_binary(&mut rng, n);
                let base = parity_solution(&bn).unwrap();
                let v: Vec<Rational> = base.v().iter().map(|x| x * int(2) + frac(rng.gen_range(-2..=2), 3)).collect();
                let mu = base.mu() * int(2) + frac(rng.gen_range(-2..=2), 3);
                let Ok(sol) = Solution::new(base.encoder().clone(), v, mu) else { continue };
                (sol, bn.to_neuron())
            }
        };
        if !agrees(&sol, &nr) {
            continue;
        }
        cases.push(("random".into(), sol, nr));
        random += 1;
    }
    let compared = cases
        .par_iter()
        .map(|(name, sol, nr)| -> Result<usize, String> {
            for r in 1..=4 {
                let oracle = e2s(is_r_robust(sol, nr, r, DEFAULT_BUDGET))?.is_robust();
                let criterion = e2s(theorem1_check(sol, nr, r))?;
                ensure(oracle == criterion, || {
                    format!("{name} {nr}, r = {r}: oracle {oracle}, criterion {criterion}")
                })?;
            }
            Ok(4)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(format!("{} solutions, {compared} (solution, r) pairs, no disagreement", cases.len()))
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut done = 0;
    while done < 100 {
        let n = rng.gen_range(1..=6);
        let w: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
        let l1: i64 = w.iter().map(|x| x.abs()).sum();
        if l1 == 0 || l1 > 10 {
            continue;
        }
        let raw = e2s(Neuron::from_ints(&w, rng.gen_range(-l1 - 1..=l1 + 1)))?;
        let nr = e2s(tighten_integer_bias(&raw))?;
        ensure(agrees(&identity_solution(&nr).unwrap(), &raw), || "tightening changed the function".into())?;
        let sol = e2s(generalized_parity_solution(&nr))?;
        ensure(agrees(&sol, &nr), || format!("{nr}: coded disagreement"))?;
        ensure(sol.len() == l1 as usize + 1, || format!("{nr}: m = {}", sol.len()))?;
        let d = e2s(min_distance(&sol))?;
        ensure(d == int(2), || format!("{nr}: d = {d}"))?;
        ensure(e2s(relative_distance(&sol))? == frac(2, l1 + 1), || "relative distance".into())?;
        done += 1;
    }
    for n in 1..=6 {
        for w in e2s(enumerate_hypercube(n))? {
            for t in BinaryNeuron::canonical_biases(n) {
                let bn = BinaryNeuron::new(w.clone(), t).unwrap();
                let a = e2s(parity_solution(&bn))?;
                let b = e2s(generalized_parity_solution(&bn.to_neuron()))?;
                ensure(a.v() == b.v() && a.mu() == b.mu(), || format!("{:?}: coded weights differ", bn))?;
                for x in e2s(enumerate_hypercube(n))? {
                    ensure(a.encode(&x).unwrap() == b.encode(&x).unwrap(), || format!("{:?}: encodings differ", bn))?;
                }
            }
        }
    }
    Ok("100 integer neurons: agreement, m = ‖w‖₁+1, d = 2; ±1 case equals parity (n ≤ 6)".into())
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked = 0;
    for m in 2..=6 {
        while checked < 5 * (m - 1) {
            let n = rng.gen_range(1..=4);
            let w: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            let nr = e2s(Neuron::from_ints(&w, rng.gen_range(-3..=3)))?;
            if e2s(nr.is_constant())? {
                continue;
            }
            let sol = e2s(constant_solution(&nr, m))?;
            let r = e2s(robustness_radius(&sol, &nr))?;
            ensure(r == m - 1, || format!("{nr}, m = {m}: radius {r}"))?;
            checked += 1;
        }
        // a constant +1 target never meets a negative input, and sign(0) = +1
        let always = e2s(Neuron::from_ints(&[1, 1], -3))?;
        let r = e2s(robustness_radius(&e2s(constant_solution(&always, m))?, &always))?;
        ensure(r == m, || format!("constant +1 target, m = {m}: radius {r}"))?;
    }
    Ok(format!("{checked} non-constant targets with m = 2..6 have radius m − 1"))
}

fn criterion_10() -> Check {
    let start = Instant::now();
    let bn = |w: &[i64], t| BinaryNeuron::new(sv(w), t).unwrap();
    let net = e2s(LayeredNetwork::new(
        3,
        vec![vec![bn(&[1, 1, -1], 0), bn(&[-1, 1, 1], 2), bn(&[1, -1, 1], -2)], vec![bn(&[1, 1, 1], 0)]],
    ))?;
    let coded = e2s(code_network(&net))?;
    ensure(coded.coded_widths() == [4, 4], || "coded widths".into())?;
    let report = e2s(exhaustive_single_fault_check(&coded, DEFAULT_BUDGET))?;
    ensure(report.passed() && report.trials == 8 * 625, || format!("coded: {}/{}", report.agreements, report.trials))?;
    let plain = e2s(CodedNetwork::uncoded(&net))?;
    let bad = e2s(exhaustive_single_fault_check(&plain, DEFAULT_BUDGET))?;
    let w = bad.first_witness.as_ref().ok_or("uncoded network reported no witness")?;
    ensure(e2s(plain.inject_and_forward(&w.x, &w.plan))? != e2s(net.forward(&w.x))?, || {
        "witness does not fail".into()
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "coded {}/{} agree; uncoded {}/{} with witness at x = {}; {:.2?}",
        report.agreements, report.trials, bad.agreements, bad.trials, w.x, elapsed
    ))
}

/// Minimum over the candidate vertices of the clipped hyperplane: every
/// coordinate but one in {−1, zᵢ, 1}, the last solved from the equation.
fn vertex_oracle(z: &[Rational], v: &[Rational], mu: &Rational) -> Extended {
    let m = z.len();
    let one = int(1);
    let mut best: Option<Rational> = None;
    for free in (0..m).filter(|&j| !v[j].is_zero()) {
        let others: Vec<usize> = (0..m).filter(|&i| i != free).collect();
        for code in 0..3usize.pow(others.len() as u32) {
            let mut y = z.to_vec();
            for (pos, &i) in others.iter().enumerate() {
                match code / 3usize.pow(pos as u32) % 3 {
                    0 => y[i] = -one.clone(),
                    1 => {}
                    _ => y[i] = one.clone(),
                }
            }
            let rest: Rational = others.iter().map(|&i| &y[i] * &v[i]).sum();
            y[free] = (mu - rest) / &v[free];
            if y[free].abs() > one {
                continue;
            }
            let dist: Rational = y.iter().zip(z).map(|(a, b)| (a - b).abs()).sum();
            if best.as_ref().is_none_or(|b| dist < *b) {
                best = Some(dist);
            }
        }
    }
    best.map_or(Extended::Infinity, Extended::Finite)
}

fn criterion_11() -> Check {
    let zs = [int(-1), frac(-1, 2), int(0), frac(1, 3), int(1)];
    let vs = [int(-2), int(-1), int(0), frac(1, 2), int(1)];
    let mus = [int(-3), int(-1), int(0), frac(1, 2), int(2), int(5)];
    let small_z = [int(-1), int(0), frac(1, 2), int(1)];
    let small_v = [int(-1), int(0), int(2)];
    let small_mu = [int(-2), frac(1, 3), int(4)];
    let tuples = |vals: &[Rational], m: usize| -> Vec<Vec<Rational>> {
        (0..vals.len().pow(m as u32))
            .map(|c| (0..m).map(|i| vals[c / vals.len().pow(i as u32) % vals.len()].clone()).collect())
            .collect()
    };
    let mut triples = 0usize;
    let mut infinite = 0usize;
    for m in 1..=4 {
        let (zv, vv, mv): (&[Rational], &[Rational], &[Rational]) =
            if m < 4 { (&zs, &vs, &mus) } else { (&small_z, &small_v, &small_mu) };
        let points = tuples(zv, m);
        let normals: Vec<Vec<Rational>> =
            tuples(vv, m).into_iter().filter(|v| v.iter().any(|x| !x.is_zero())).collect();
        let (count, inf) = points
            .par_iter()
            .map(|z| -> Result<(usize, usize), String> {
                let mut c = (0, 0);
                for v in &normals {
                    for mu in mv {
                        let greedy = e2s(l1_distance_to_clipped(z, v, mu))?;
                        let oracle = vertex_oracle(z, v, mu);
                        ensure(greedy == oracle, || format!("z = {z:?}, v = {v:?}, mu = {mu}: {greedy} vs {oracle}"))?;
                        c.0 += 1;
                        c.1 += usize::from(!oracle.is_finite());
                    }
                }
                Ok(c)
            })
            .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;
        triples += count;
        infinite += inf;
    }
    ensure(infinite > 0, || "grid produced no empty clipped hyperplane".into())?;
    Ok(format!("{triples} grid triples match the vertex oracle ({infinite} infinite)"))
}

fn main() -> ExitCode {
    let pop = parity_population();
    let criteria: Vec<Criterion> = vec![
        ("1 erasure table", Box::new(criterion_1)),
        ("2 parity distance", Box::new(|| criterion_2(&pop))),
        ("3 parity 1-robust and sharp", Box::new(|| criterion_3(&pop))),
        ("4 identity baseline", Box::new(criterion_4)),
        ("5 replication scaling", Box::new(criterion_5)),
        ("6 fourier solution", Box::new(criterion_6)),
        ("7 criterion vs oracle", Box::new(criterion_7)),
        ("8 generalized parity", Box::new(criterion_8)),
        ("9 constant solution radius", Box::new(criterion_9)),
        ("10 network single-erasure guarantee", Box::new(criterion_10)),
        ("11 greedy clipped distance", Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        match check() {
            Ok(msg) => println!("PASS criterion {name}: {msg} [{:.2?}]", start.elapsed()),
            Err(msg) => {
                println!("FAIL criterion {name}: {msg} [{:.2?}]", start.elapsed());
                failed += 1;
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
