use coded_threshold::boolean_core::{
    chi_mask, enumerate_hypercube, hamming_weight, inner_product, walsh_hadamard, xor, SignVector, TruthTable,
};
use coded_threshold::neuron::{canonicalize_bias, delta, evaluate_by_hamming, BinaryNeuron, Neuron};
use coded_threshold::rational::{frac, int, Extended, Rational};
use coded_threshold::records::{neuron_to_value, parse_neuron, parse_solution, solution_to_value};
use coded_threshold::robustness::{
    is_r_robust, is_ts_robust, l1_distance_to_clipped, l1_distance_to_hyperplane, noisy_evaluate, radius_search,
    NoisePattern, DEFAULT_BUDGET,
};
use coded_threshold::solutions::{coded_evaluate, parity_solution, replicate, SolutionKind};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn signs(n: usize) -> impl Strategy<Value = SignVector> {
    prop::collection::vec(prop::bool::ANY, n)
        .prop_map(|bits| SignVector::new(&bits.iter().map(|&b| if b { -1 } else { 1 }).collect::<Vec<_>>()).unwrap())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-8i64..=8, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn binary_neuron(max_n: usize) -> impl Strategy<Value = BinaryNeuron> {
    (1..=max_n).prop_flat_map(|n| {
        (signs(n), 0..=n as i64 + 1).prop_map(move |(w, k)| BinaryNeuron::new(w, -(n as i64) - 1 + 2 * k).unwrap())
    })
}

/// ℓ1 distance to the clipped hyperplane through the Lagrange dual
/// `max_λ λμ + Σᵢ min_{yᵢ∈{−1,zᵢ,1}} (|yᵢ−zᵢ| − λvᵢyᵢ)`, which is concave and
/// piecewise linear in λ, so its maximum sits at a breakpoint.
fn clipped_by_duality(z: &[Rational], v: &[Rational], mu: &Rational) -> Option<Rational> {
    let one = int(1);
    let l1: Rational = v.iter().map(|x| x.abs()).sum();
    if mu.abs() > l1 {
        return None;
    }
    let dual = |lam: &Rational| -> Rational {
        lam * mu
            + z.iter()
                .zip(v)
                .map(|(zi, vi)| {
                    [-one.clone(), zi.clone(), one.clone()].iter().map(|y| (y - zi).abs() - lam * vi * y).min().unwrap()
                })
                .sum::<Rational>()
    };
    let mut candidates = vec![Rational::zero()];
    for (zi, vi) in z.iter().zip(v) {
        if !vi.is_zero() {
            candidates.extend([&one / vi, -&one / vi, -zi / vi]);
        }
    }
    candidates.iter().map(dual).max()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn xor_is_pointwise_product_and_hamming_identity((x, w) in (1usize..=12).prop_flat_map(|n| (signs(n), signs(n)))) {
        let n = x.len() as i64;
        let s = xor(&x, &w).unwrap();
        for i in 0..x.len() {
            prop_assert_eq!(s.get(i), x.get(i) * w.get(i));
        }
        prop_assert_eq!(inner_product(&x, &w).unwrap(), n - 2 * hamming_weight(&s) as i64);
    }

    #[test]
    fn hypercube_index_round_trip(n in 1usize..=16, k in any::<u64>()) {
        let k = k % (1u64 << n);
        let x = SignVector::hypercube_point(n, k).unwrap();
        prop_assert_eq!(x.hypercube_index(), Some(k));
    }

    #[test]
    fn parseval_and_reconstruction((n, vals) in (1usize..=6).prop_flat_map(|n| (Just(n), prop::collection::vec(small_rational(), 1 << n)))) {
        let table = TruthTable::new(n, vals.clone()).unwrap();
        let sp = walsh_hadamard(&table).unwrap();
        let energy: Rational = vals.iter().map(|v| v * v).sum::<Rational>() / int(1 << n);
        prop_assert_eq!(sp.squared_norm(), energy);
        for x in enumerate_hypercube(n).unwrap() {
            prop_assert_eq!(&sp.evaluate(&x).unwrap(), table.value(&x).unwrap());
        }
        // coefficient of S equals the direct correlation with χ_S
        for mask in 0..1u32 << n {
            let direct: Rational = enumerate_hypercube(n).unwrap()
                .map(|x| table.value(&x).unwrap() * int(i64::from(chi_mask(u64::from(mask), &x).unwrap().value())))
                .sum::<Rational>() / int(1 << n);
            prop_assert_eq!(sp.get(mask), &direct);
        }
    }

    #[test]
    fn canonical_bias_preserves_function(w in (1usize..=7).prop_flat_map(signs), theta in small_rational()) {
        let theta = theta * int(2);
        let nr = Neuron::new(w.to_rationals(), theta).unwrap();
        let bn = canonicalize_bias(&nr).unwrap();
        let n = w.len() as i64;
        prop_assert!((n - bn.theta()).rem_euclid(2) == 1 && bn.theta().abs() <= n + 1);
        for x in enumerate_hypercube(w.len()).unwrap() {
            prop_assert_eq!(bn.evaluate(&x).unwrap(), nr.evaluate(&x).unwrap());
            prop_assert_eq!(evaluate_by_hamming(&bn, &x).unwrap(), nr.evaluate(&x).unwrap());
        }
        prop_assert_eq!(delta(&bn.to_neuron()).unwrap(), int(1));
    }

    #[test]
    fn parity_agrees_up_to_ten_inputs(bn in binary_neuron(10), x in any::<u64>()) {
        let n = bn.dimension();
        let x = SignVector::hypercube_point(n, x % (1 << n)).unwrap();
        let sol = parity_solution(&bn).unwrap();
        prop_assert_eq!(coded_evaluate(&sol, &x).unwrap(), bn.evaluate(&x).unwrap());
        for j in 0..=n {
            prop_assert_eq!(noisy_evaluate(&sol, &x, &NoisePattern::erasure(j)).unwrap(), bn.evaluate(&x).unwrap());
        }
    }

    #[test]
    fn r_robustness_is_cumulative(bn in binary_neuron(4), copies in 1usize..=3, r in 0usize..=5) {
        let sol = replicate(&parity_solution(&bn).unwrap(), copies).unwrap();
        let nr = bn.to_neuron();
        let m = sol.len();
        let every_pair = (0..=r).all(|t| (0..=(r - t) / 2).filter(|&s| t + s <= m).all(|s| is_ts_robust(&sol, &nr, t, s).unwrap().is_robust()));
        let robust = is_r_robust(&sol, &nr, r, DEFAULT_BUDGET).unwrap().is_robust();
        prop_assert_eq!(robust, every_pair);
        if robust && r > 0 {
            prop_assert!(is_r_robust(&sol, &nr, r - 1, DEFAULT_BUDGET).unwrap().is_robust());
        }
        let radius = radius_search(&sol, &nr, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(robust, radius.unbounded || radius.radius >= r);
    }

    #[test]
    fn clipped_distance_matches_dual(
        (z, v) in (1usize..=4).prop_flat_map(|m| (
            prop::collection::vec((-4i64..=4).prop_map(|p| frac(p, 4)), m),
            prop::collection::vec(small_rational(), m),
        )),
        mu in small_rational(),
    ) {
        prop_assume!(v.iter().any(|x| !x.is_zero()));
        let greedy = l1_distance_to_clipped(&z, &v, &mu).unwrap();
        let expected = clipped_by_duality(&z, &v, &mu).map_or(Extended::Infinity, Extended::Finite);
        prop_assert_eq!(&greedy, &expected);
        let plain = l1_distance_to_hyperplane(&z, &v, &mu).unwrap();
        prop_assert!(Extended::Finite(plain) <= greedy);
    }

    #[test]
    fn records_round_trip(w in prop::collection::vec(small_rational(), 1..=5), theta in small_rational(), kind in 0usize..4) {
        let nr = Neuron::new(w, theta).unwrap();
        prop_assert_eq!(parse_neuron(&neuron_to_value(&nr).to_string()).unwrap(), nr.clone());
        let kind = [SolutionKind::Identity, SolutionKind::Replication(3), SolutionKind::Constant(2), SolutionKind::Fourier][kind];
        if let Ok(sol) = kind.build(&nr) {
            prop_assert_eq!(parse_solution(&solution_to_value(&sol).to_string()).unwrap(), sol);
        }
    }
}
