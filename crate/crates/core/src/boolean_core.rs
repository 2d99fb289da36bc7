//! ±1 Boolean algebra on the hypercube.
//!
//! The field element `0` is represented by `+1` and `1` by `−1`, so XOR is
//! the pointwise product. [`SignVector`] packs one bit per entry (bit set
//! means `−1`).
//!
//! Hypercube order is lexicographic with `+1 < −1`, coordinate 0 most
//! significant: for `n = 2` the points are `(1,1), (1,−1), (−1,1), (−1,−1)`.
//! Witness reports rely on this order being stable.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Mul, Neg, Range};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{dimension, Error, Result};
use crate::rational::Rational;

/// Largest dimension [`enumerate_hypercube`] accepts by default.
pub const HYPERCUBE_CAP: usize = 24;
/// Largest dimension for which dense spectra are built.
pub const SPECTRUM_CAP: usize = 20;

/// A ±1 value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    /// `sign(x)`: `+1` if `x ≥ 0`, `−1` otherwise.
    pub fn of(x: &Rational) -> Sign {
        if *x >= Rational::zero() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn of_int(x: i128) -> Sign {
        if x >= 0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn from_value(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Pos),
            -1 => Ok(Sign::Neg),
            other => Err(Error::Domain(format!("{other} is not a sign (expected ±1)"))),
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    fn is_neg(self) -> bool {
        self == Sign::Neg
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Neg
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// A bit-packed vector over {−1, +1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    len: usize,
    words: Vec<u64>,
}

impl SignVector {
    /// Builds a vector from ±1 integers.
    pub fn new(entries: &[i64]) -> Result<Self> {
        let signs = entries.iter().map(|&e| Sign::from_value(e)).collect::<Result<Vec<_>>>()?;
        Self::from_signs(&signs)
    }

    pub fn from_signs(signs: &[Sign]) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::Dimension("sign vectors must be nonempty".into()));
        }
        let mut out = Self::ones(signs.len());
        for (i, s) in signs.iter().enumerate() {
            if s.is_neg() {
                out.set_neg(i);
            }
        }
        Ok(out)
    }

    /// The all-ones vector `𝟙_n`. Panics when `n == 0`.
    pub fn ones(n: usize) -> Self {
        assert!(n > 0, "sign vectors must be nonempty");
        Self { len: n, words: vec![0; n.div_ceil(64)] }
    }

    /// Vector whose entry `i` is `−1` exactly when bit `i` of `mask` is set.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::Dimension(format!("mask form supports 1..=64 entries, got {n}")));
        }
        if n < 64 && mask >> n != 0 {
            return Err(Error::Dimension(format!("mask {mask:#x} has bits beyond length {n}")));
        }
        Ok(Self { len: n, words: vec![mask] })
    }

    /// The `k`-th point of the hypercube in documented order.
    pub fn hypercube_point(n: usize, k: u64) -> Result<Self> {
        if n == 0 || n > 63 || k >> n != 0 {
            return Err(Error::Dimension(format!("no hypercube point {k} in dimension {n}")));
        }
        Self::from_mask(n, index_to_mask(n, k))
    }

    /// Position of this vector in the hypercube order (`n ≤ 63`).
    pub fn hypercube_index(&self) -> Option<u64> {
        self.mask().filter(|_| self.len < 64).map(|m| index_to_mask(self.len, m))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> Sign {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        if self.words[i / 64] >> (i % 64) & 1 == 1 {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    fn set_neg(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    /// Packed form for vectors of at most 64 entries.
    pub fn mask(&self) -> Option<u64> {
        (self.len <= 64).then(|| self.words[0])
    }

    pub fn iter(&self) -> impl Iterator<Item = Sign> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_values(&self) -> Vec<i64> {
        self.iter().map(|s| i64::from(s.value())).collect()
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.iter().map(|s| Rational::from_integer(BigInt::from(s.value()))).collect()
    }

    /// Concatenation of `self` followed by `other`.
    pub fn concat(&self, other: &SignVector) -> SignVector {
        let mut signs: Vec<Sign> = self.iter().collect();
        signs.extend(other.iter());
        SignVector::from_signs(&signs).expect("nonempty")
    }

    fn check_len(&self, other: &SignVector, what: &str) -> Result<()> {
        if self.len != other.len {
            return Err(dimension(self.len, other.len, what));
        }
        Ok(())
    }
}

impl PartialOrd for SignVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic with `+1 < −1`, shorter vectors first on a common prefix.
impl Ord for SignVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// Hypercube index `k` to packed mask: coordinate `i` is bit `n−1−i` of `k`.
/// The map is an involution.
pub(crate) fn index_to_mask(n: usize, k: u64) -> u64 {
    k.reverse_bits() >> (64 - n)
}

/// A vector over {−1, 0, +1}; zeros mark erased coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NoisySignVector {
    entries: Vec<i8>,
}

impl NoisySignVector {
    /// Erases the coordinates in `erasures` and negates those in `errors`.
    pub fn corrupt(clean: &SignVector, erasures: &[usize], errors: &[usize]) -> Result<Self> {
        let mut entries: Vec<i8> = clean.iter().map(|s| s.value() as i8).collect();
        for &j in erasures.iter().chain(errors) {
            if j >= entries.len() {
                return Err(Error::Dimension(format!("coordinate {j} out of range for length {}", entries.len())));
            }
        }
        for &j in errors {
            entries[j] = -entries[j];
        }
        for &j in erasures {
            if errors.contains(&j) {
                return Err(Error::Domain(format!("coordinate {j} is both erased and in error")));
            }
            entries[j] = 0;
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn erased(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().enumerate().filter(|(_, &e)| e == 0).map(|(i, _)| i)
    }

    pub fn dot(&self, v: &[Rational]) -> Result<Rational> {
        if v.len() != self.entries.len() {
            return Err(dimension(self.entries.len(), v.len(), "noisy dot product"));
        }
        Ok(self.entries.iter().zip(v).fold(Rational::zero(), |acc, (&e, w)| match e {
            1 => acc + w,
            -1 => acc - w,
            _ => acc,
        }))
    }
}

/// Pointwise product `a ⊕ b`, i.e. XOR in the ±1 representation.
pub fn xor(a: &SignVector, b: &SignVector) -> Result<SignVector> {
    a.check_len(b, "xor")?;
    let words = a.words.iter().zip(&b.words).map(|(x, y)| x ^ y).collect();
    Ok(SignVector { len: a.len, words })
}

/// Number of `−1` entries.
pub fn hamming_weight(x: &SignVector) -> usize {
    x.words.iter().map(|w| w.count_ones() as usize).sum()
}

/// `χ_S(x) = ∏_{s∈S} x_s`, with zero-based indices. `χ_∅ = 1`.
pub fn chi(subset: &[usize], x: &SignVector) -> Result<Sign> {
    let mut out = Sign::Pos;
    for &s in subset {
        if s >= x.len() {
            return Err(Error::Dimension(format!("subset index {s} out of range for length {}", x.len())));
        }
        out = out * x.get(s);
    }
    Ok(out)
}

/// `χ_S` for a subset given as a bitmask over coordinates `0..64`.
pub fn chi_mask(subset: u64, x: &SignVector) -> Result<Sign> {
    let xm = x.mask().ok_or_else(|| Error::Dimension("mask form needs length ≤ 64".into()))?;
    if x.len() < 64 && subset >> x.len() != 0 {
        return Err(Error::Dimension(format!("subset {subset:#x} exceeds length {}", x.len())));
    }
    Ok(parity_sign(subset & xm))
}

pub(crate) fn parity_sign(bits: u64) -> Sign {
    if bits.count_ones().is_multiple_of(2) {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// Standard dot product of two sign vectors.
pub fn inner_product(x: &SignVector, w: &SignVector) -> Result<i64> {
    let d = xor(x, w)?;
    Ok(x.len() as i64 - 2 * hamming_weight(&d) as i64)
}

/// Iterator over every point of the hypercube in documented order.
#[derive(Clone, Debug)]
pub struct Hypercube {
    n: usize,
    range: Range<u64>,
}

impl Hypercube {
    pub fn dimension(&self) -> usize {
        self.n
    }

    /// The sub-stream of indices `range`, for data-parallel consumption.
    pub fn slice(n: usize, range: Range<u64>) -> Result<Self> {
        check_cap(n, HYPERCUBE_CAP)?;
        if range.end > 1 << n {
            return Err(Error::Dimension(format!("range end {} beyond 2^{n}", range.end)));
        }
        Ok(Self { n, range })
    }
}

impl Iterator for Hypercube {
    type Item = SignVector;

    fn next(&mut self) -> Option<SignVector> {
        let k = self.range.next()?;
        Some(SignVector { len: self.n, words: vec![index_to_mask(self.n, k)] })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.range.size_hint()
    }
}

impl ExactSizeIterator for Hypercube {}

impl DoubleEndedIterator for Hypercube {
    fn next_back(&mut self) -> Option<SignVector> {
        let k = self.range.next_back()?;
        Some(SignVector { len: self.n, words: vec![index_to_mask(self.n, k)] })
    }
}

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Dimension("dimension must be positive".into()));
    }
    if n > cap {
        return Err(Error::Resource(format!("dimension {n} exceeds enumeration cap {cap}")));
    }
    Ok(())
}

/// All `2ⁿ` sign vectors, `n ≤` [`HYPERCUBE_CAP`].
pub fn enumerate_hypercube(n: usize) -> Result<Hypercube> {
    enumerate_hypercube_capped(n, HYPERCUBE_CAP)
}

pub fn enumerate_hypercube_capped(n: usize, cap: usize) -> Result<Hypercube> {
    check_cap(n, cap.min(63))?;
    Ok(Hypercube { n, range: 0..1 << n })
}

/// Values of a function `{±1}ⁿ → ℚ`, stored in hypercube order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTable {
    n: usize,
    values: Vec<Rational>,
}

impl TruthTable {
    /// `values[k]` is the value at the `k`-th hypercube point.
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        check_cap(n, SPECTRUM_CAP)?;
        if values.len() != 1 << n {
            return Err(Error::Domain(format!(
                "truth table over {n} variables needs {} values, got {}",
                1u64 << n,
                values.len()
            )));
        }
        Ok(Self { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&SignVector) -> Rational) -> Result<Self> {
        check_cap(n, SPECTRUM_CAP)?;
        let values = enumerate_hypercube_capped(n, SPECTRUM_CAP)?.map(|x| f(&x)).collect();
        Ok(Self { n, values })
    }

    /// Builds a table from a point → value map; every point must be present.
    pub fn from_map(n: usize, map: &HashMap<SignVector, Rational>) -> Result<Self> {
        check_cap(n, SPECTRUM_CAP)?;
        let mut values = Vec::with_capacity(1 << n);
        for x in enumerate_hypercube_capped(n, SPECTRUM_CAP)? {
            match map.get(&x) {
                Some(v) => values.push(v.clone()),
                None => return Err(Error::Domain(format!("truth table has no value at {x}"))),
            }
        }
        Ok(Self { n, values })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, x: &SignVector) -> Result<&Rational> {
        if x.len() != self.n {
            return Err(dimension(self.n, x.len(), "truth table lookup"));
        }
        Ok(&self.values[x.hypercube_index().expect("n ≤ 20") as usize])
    }
}

/// Dense Fourier spectrum indexed by subset bitmask (bit `i` ↔ coordinate `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    n: usize,
    coefficients: Vec<Rational>,
}

impl Spectrum {
    pub fn dimension(&self) -> usize {
        self.n
    }

    /// Coefficients in ascending bitmask order; entry 0 is `f̂(∅)`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn get(&self, subset_mask: u32) -> &Rational {
        &self.coefficients[subset_mask as usize]
    }

    pub fn get_subset(&self, subset: &[usize]) -> Result<&Rational> {
        let mut mask = 0u32;
        for &s in subset {
            if s >= self.n {
                return Err(Error::Dimension(format!("subset index {s} out of range for {} variables", self.n)));
            }
            mask |= 1 << s;
        }
        Ok(self.get(mask))
    }

    /// `Σ_S f̂(S)²`.
    pub fn squared_norm(&self) -> Rational {
        self.coefficients.iter().map(|c| c * c).sum()
    }

    /// `max_{S≠∅} |f̂(S)|`.
    pub fn max_abs_nonempty(&self) -> Rational {
        crate::rational::max_abs(&self.coefficients[1..])
    }

    /// Reconstruction `Σ_S f̂(S) χ_S(x)`.
    pub fn evaluate(&self, x: &SignVector) -> Result<Rational> {
        if x.len() != self.n {
            return Err(dimension(self.n, x.len(), "spectrum evaluation"));
        }
        let xm = x.mask().expect("n ≤ 20");
        Ok(self.coefficients.iter().enumerate().fold(Rational::zero(), |acc, (s, c)| {
            match parity_sign(s as u64 & xm) {
                Sign::Pos => acc + c,
                Sign::Neg => acc - c,
            }
        }))
    }

    /// The `k` largest coefficients by magnitude, ties by ascending mask.
    pub fn top(&self, k: usize) -> Vec<(u32, Rational)> {
        let mut idx: Vec<usize> = (0..self.coefficients.len()).filter(|&i| !self.coefficients[i].is_zero()).collect();
        idx.sort_by(|&a, &b| {
            let (ca, cb) =
                (num_traits::abs(self.coefficients[a].clone()), num_traits::abs(self.coefficients[b].clone()));
            cb.cmp(&ca).then(a.cmp(&b))
        });
        idx.into_iter().take(k).map(|i| (i as u32, self.coefficients[i].clone())).collect()
    }
}

/// Exact Walsh–Hadamard transform: `f̂(S) = 𝔼_x χ_S(x) f(x)`.
///
/// Denominators are cleared first, then an in-place butterfly runs over
/// integers and the result is divided by `2ⁿ·L`.
pub fn walsh_hadamard(table: &TruthTable) -> Result<Spectrum> {
    let n = table.n;
    let lcm = table.values.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let mut work = vec![BigInt::zero(); 1 << n];
    for (k, v) in table.values.iter().enumerate() {
        work[index_to_mask(n, k as u64) as usize] = v.numer() * (&lcm / v.denom());
    }
    fwht(&mut work);
    let den = lcm << n;
    let coefficients = work.into_iter().map(|c| Rational::new(c, den.clone())).collect();
    Ok(Spectrum { n, coefficients })
}

/// Unnormalized in-place transform, `a[S] ← Σ_X (−1)^{|S∩X|} a[X]`.
fn fwht(a: &mut [BigInt]) {
    let mut h = 1;
    while h < a.len() {
        for block in a.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let sum = &*x + &*y;
                let diff = &*x - &*y;
                *x = sum;
                *y = diff;
            }
        }
        h *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sv(xs: &[i64]) -> SignVector {
        SignVector::new(xs).unwrap()
    }

    #[test]
    fn xor_examples() {
        assert_eq!(xor(&sv(&[1, -1]), &sv(&[1, -1])).unwrap(), sv(&[1, 1]));
        assert_eq!(xor(&sv(&[1, -1, 1]), &sv(&[1, 1, -1])).unwrap(), sv(&[1, -1, -1]));
        assert!(matches!(xor(&sv(&[1]), &sv(&[1, 1])), Err(Error::Dimension(_))));
    }

    #[test]
    fn xor_matches_integer_bit_xor() {
        // 0 ↔ +1, 1 ↔ −1; coordinate i ↔ bit i of a plain integer.
        let to_bits =
            |x: &SignVector| x.iter().enumerate().fold(0u32, |acc, (i, s)| acc | (u32::from(s == Sign::Neg) << i));
        for a in 0..16u32 {
            for b in 0..16u32 {
                let va = sv(&(0..4).map(|i| if a >> i & 1 == 1 { -1 } else { 1 }).collect::<Vec<_>>());
                let vb = sv(&(0..4).map(|i| if b >> i & 1 == 1 { -1 } else { 1 }).collect::<Vec<_>>());
                assert_eq!(to_bits(&xor(&va, &vb).unwrap()), a ^ b);
            }
        }
    }

    #[test]
    fn hamming_weight_examples() {
        assert_eq!(hamming_weight(&sv(&[1, 1, 1])), 0);
        assert_eq!(hamming_weight(&sv(&[-1, -1, -1])), 3);
        assert_eq!(hamming_weight(&sv(&[1, -1, 1])), 1);
        let long = SignVector::from_signs(&[Sign::Neg; 130]).unwrap();
        assert_eq!(hamming_weight(&long), 130);
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(&[], &sv(&[-1, 1])).unwrap(), Sign::Pos);
        assert_eq!(chi(&[0, 1, 2], &sv(&[1, -1, 1])).unwrap(), Sign::Neg);
        assert_eq!(chi(&[0, 2], &sv(&[-1, 1, -1])).unwrap(), Sign::Pos);
        assert!(matches!(chi(&[3], &sv(&[1, 1, 1])), Err(Error::Dimension(_))));
        assert_eq!(chi_mask(0b101, &sv(&[-1, 1, -1])).unwrap(), Sign::Pos);
    }

    #[test]
    fn inner_product_examples() {
        let x = sv(&[1, -1, 1, 1, -1]);
        assert_eq!(inner_product(&x, &x).unwrap(), 5);
        assert_eq!(inner_product(&sv(&[1, -1, 1]), &sv(&[1, 1, -1])).unwrap(), -1);
    }

    #[test]
    fn hamming_identity_exhaustive_n6() {
        let n = 6;
        for x in enumerate_hypercube(n).unwrap() {
            for w in enumerate_hypercube(n).unwrap() {
                let direct: i64 = x.to_values().iter().zip(w.to_values()).map(|(a, b)| a * b).sum();
                let hw = hamming_weight(&xor(&x, &w).unwrap()) as i64;
                assert_eq!(direct, n as i64 - 2 * hw);
                assert_eq!(inner_product(&x, &w).unwrap(), direct);
            }
        }
    }

    #[test]
    fn chi_is_a_character_exhaustive() {
        let n = 5;
        for s in 0..1u64 << n {
            for x in enumerate_hypercube(n).unwrap() {
                for y in enumerate_hypercube(n).unwrap() {
                    let lhs = chi_mask(s, &x).unwrap() * chi_mask(s, &y).unwrap();
                    assert_eq!(lhs, chi_mask(s, &xor(&x, &y).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn hypercube_order_and_size() {
        let pts: Vec<_> = enumerate_hypercube(1).unwrap().collect();
        assert_eq!(pts, vec![sv(&[1]), sv(&[-1])]);
        let pts: Vec<_> = enumerate_hypercube(2).unwrap().collect();
        assert_eq!(pts, vec![sv(&[1, 1]), sv(&[1, -1]), sv(&[-1, 1]), sv(&[-1, -1])]);
        let pts: Vec<_> = enumerate_hypercube(10).unwrap().collect();
        assert_eq!(pts.len(), 1024);
        assert!(pts.windows(2).all(|w| w[0] < w[1]), "strictly increasing, hence distinct");
        for (k, p) in pts.iter().enumerate() {
            assert_eq!(p.hypercube_index(), Some(k as u64));
        }
        assert!(matches!(enumerate_hypercube(25), Err(Error::Resource(_))));
    }

    #[test]
    fn hypercube_slices_partition_the_stream() {
        let whole: Vec<_> = enumerate_hypercube(6).unwrap().collect();
        let mut parts = Vec::new();
        for r in [0..10, 10..40, 40..64] {
            parts.extend(Hypercube::slice(6, r).unwrap());
        }
        assert_eq!(whole, parts);
    }

    fn majority3(x: &SignVector) -> Rational {
        int(x.iter().map(|s| i64::from(s.value())).sum::<i64>().signum())
    }

    #[test]
    fn walsh_hadamard_constant() {
        let spec = walsh_hadamard(&TruthTable::from_fn(3, |_| int(1)).unwrap()).unwrap();
        assert_eq!(*spec.get(0), int(1));
        assert!(spec.coefficients()[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn walsh_hadamard_majority_against_direct_expectation() {
        let table = TruthTable::from_fn(3, majority3).unwrap();
        let spec = walsh_hadamard(&table).unwrap();
        // Direct oracle: average of χ_S(x) f(x) over the 8 points.
        for s in 0..8u64 {
            let mut acc = Rational::zero();
            for x in enumerate_hypercube(3).unwrap() {
                acc += int(i64::from(chi_mask(s, &x).unwrap().value())) * majority3(&x);
            }
            assert_eq!(*spec.get(s as u32), acc / int(8), "subset {s:#b}");
        }
        assert_eq!(*spec.get_subset(&[0]).unwrap(), frac(1, 2));
        assert_eq!(*spec.get_subset(&[1]).unwrap(), frac(1, 2));
        assert_eq!(*spec.get_subset(&[2]).unwrap(), frac(1, 2));
        assert_eq!(*spec.get_subset(&[0, 1, 2]).unwrap(), frac(-1, 2));
        assert!(spec.get_subset(&[0, 1]).unwrap().is_zero());
        for x in enumerate_hypercube(3).unwrap() {
            assert_eq!(spec.evaluate(&x).unwrap(), majority3(&x));
        }
    }

    #[test]
    fn parseval_and_reconstruction_random_boolean() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=8 {
            for _ in 0..8 {
                let table = TruthTable::from_fn(n, |_| int(if rng.gen() { 1 } else { -1 })).unwrap();
                let spec = walsh_hadamard(&table).unwrap();
                assert_eq!(spec.squared_norm(), int(1));
                if n <= 6 {
                    for (x, v) in enumerate_hypercube(n).unwrap().zip(table.values()) {
                        assert_eq!(&spec.evaluate(&x).unwrap(), v);
                    }
                }
            }
        }
    }

    #[test]
    fn walsh_hadamard_rational_values_reconstruct() {
        let table = TruthTable::from_fn(2, |x| frac(x.hypercube_index().unwrap() as i64, 3)).unwrap();
        let spec = walsh_hadamard(&table).unwrap();
        for (x, v) in enumerate_hypercube(2).unwrap().zip(table.values()) {
            assert_eq!(&spec.evaluate(&x).unwrap(), v);
        }
    }

    #[test]
    fn truth_table_must_be_complete() {
        assert!(matches!(TruthTable::new(2, vec![int(1); 3]), Err(Error::Domain(_))));
        let mut map = HashMap::new();
        for x in enumerate_hypercube(2).unwrap().take(3) {
            map.insert(x, int(1));
        }
        assert!(matches!(TruthTable::from_map(2, &map), Err(Error::Domain(_))));
        map.insert(sv(&[-1, -1]), int(-1));
        let t = TruthTable::from_map(2, &map).unwrap();
        assert_eq!(t.value(&sv(&[-1, -1])).unwrap(), &int(-1));
    }

    #[test]
    fn noisy_vector_erases_and_negates() {
        let clean = sv(&[1, -1, 1, -1]);
        let noisy = NoisySignVector::corrupt(&clean, &[0], &[3]).unwrap();
        assert_eq!(noisy.entries(), &[0, -1, 1, 1]);
        assert_eq!(noisy.erased().collect::<Vec<_>>(), vec![0]);
        assert!(matches!(NoisySignVector::corrupt(&clean, &[1], &[1]), Err(Error::Domain(_))));
        assert!(matches!(NoisySignVector::corrupt(&clean, &[4], &[]), Err(Error::Dimension(_))));
    }

    #[test]
    fn sign_vector_validation() {
        assert!(SignVector::new(&[]).is_err());
        assert!(SignVector::new(&[1, 0]).is_err());
        assert!(SignVector::from_mask(3, 0b1000).is_err());
    }
}
