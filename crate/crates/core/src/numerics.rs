//! Scalar numeric helpers: compensated summation, base-2 log-sum-exp,
//! binary entropy functions and their inverses, and log-binomials.
//!
//! All entropies and divergences in this crate are in bits (logarithms base 2);
//! 0 * log 0 is taken as 0 throughout.

/// Kahan–Babuska compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Sum of `2^x` over the inputs, returned as a base-2 logarithm.
///
/// Max-shifted and compensated; `-inf` inputs are skipped, an empty or
/// all-`-inf` input yields `-inf`. The reduction order is the slice order,
/// so results are bit-reproducible.
pub fn log2_sum_exp2(terms: &[f64]) -> f64 {
    let m = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let mut acc = KahanSum::new();
    for &t in terms {
        if t != f64::NEG_INFINITY {
            acc.add((t - m).exp2());
        }
    }
    m + acc.value().log2()
}

/// Two-argument base-2 log-sum-exp.
pub fn log2_add_exp2(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp2().ln_1p() / std::f64::consts::LN_2
}

/// Binary Shannon entropy in bits; `h(0) = h(1) = 0`.
pub fn binary_entropy(p: f64) -> f64 {
    if p <= 0.0 || p >= 1.0 {
        return 0.0;
    }
    -(p * p.log2() + (1.0 - p) * (1.0 - p).log2())
}

/// Binary Renyi entropy `h_alpha` in bits; `alpha = 1` falls back to Shannon.
pub fn binary_renyi_entropy(p: f64, alpha: f64) -> f64 {
    assert!(alpha > 0.0, "Renyi order must be positive");
    if alpha == 1.0 {
        return binary_entropy(p);
    }
    if p <= 0.0 || p >= 1.0 {
        return 0.0;
    }
    (p.powf(alpha) + (1.0 - p).powf(alpha)).log2() / (1.0 - alpha)
}

/// Inverse of `binary_entropy` on `[0, 1/2]`, by bisection to ~1e-15.
pub fn inv_binary_entropy(y: f64) -> f64 {
    assert!((0.0..=1.0).contains(&y), "entropy value out of [0,1]");
    if y <= 0.0 {
        return 0.0;
    }
    if y >= 1.0 {
        return 0.5;
    }
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if binary_entropy(mid) < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Bisection root of a monotone increasing `f` on `[lo, hi]`.
///
/// Requires `f(lo) <= 0 <= f(hi)`; runs a fixed 200 halvings (enough for f64).
pub fn bisect_increasing(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    debug_assert!(f(lo) <= 0.0 && f(hi) >= 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Cumulative table of ln k! built with compensated summation.
///
/// Gives `ln C(n, k)` with absolute error around `1e-12` even at n ~ 2^20,
/// which is far below every tolerance the bound pipeline works at.
pub struct LnFactorial {
    table: Vec<f64>,
}

impl LnFactorial {
    pub fn up_to(n: usize) -> Self {
        let mut table = Vec::with_capacity(n + 1);
        let mut acc = KahanSum::new();
        table.push(0.0);
        for k in 1..=n {
            acc.add((k as f64).ln());
            table.push(acc.value());
        }
        Self { table }
    }

    #[inline]
    pub fn ln_factorial(&self, k: usize) -> f64 {
        self.table[k]
    }

    /// `log2 C(n, k)`.
    #[inline]
    pub fn log2_binomial(&self, n: usize, k: usize) -> f64 {
        assert!(k <= n && n < self.table.len());
        (self.table[n] - self.table[k] - self.table[n - k]) / std::f64::consts::LN_2
    }
}

/// Exact binomial coefficient, valid through n = 128 without overflow checks
/// failing for the sizes this crate enumerates (panics on overflow otherwise).
pub fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128).expect("binomial overflow");
        acc /= (i + 1) as u128;
    }
    acc
}

/// Wilson score interval for a binomial proportion at the given z value.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_beats_naive_on_adversarial_sum() {
        let mut k = KahanSum::new();
        k.add(1.0);
        for _ in 0..1_000_000 {
            k.add(1e-16);
        }
        assert!((k.value() - (1.0 + 1e-10)).abs() < 1e-14);
    }

    #[test]
    fn log2_sum_exp2_matches_direct_small() {
        let terms = [0.5f64, 2.0, -1.0];
        let direct: f64 = terms.iter().map(|t| t.exp2()).sum::<f64>().log2();
        assert!((log2_sum_exp2(&terms) - direct).abs() < 1e-14);
        // survives magnitudes a naive sum cannot represent
        let big = log2_sum_exp2(&[10_000.0, 9_990.0]);
        assert!((big - (10_000.0 + (1.0f64 + 2f64.powi(-10)).log2())).abs() < 1e-12);
        assert_eq!(log2_sum_exp2(&[]), f64::NEG_INFINITY);
    }

    #[test]
    fn entropy_values() {
        assert_eq!(binary_entropy(0.0), 0.0);
        assert!((binary_entropy(0.5) - 1.0).abs() < 1e-15);
        // frozen reference value computed with 40-digit arithmetic
        assert!((binary_entropy(0.11) - 0.499_915_958_164_528_0).abs() < 1e-14);
        assert!((binary_renyi_entropy(0.11, 2.0) - 0.314_373_758_749_088_9).abs() < 1e-14);
        // h_alpha is decreasing in alpha
        assert!(binary_renyi_entropy(0.11, 1.2) > binary_renyi_entropy(0.11, 1.8));
    }

    #[test]
    fn inverse_entropy_round_trip() {
        for &p in &[1e-6, 0.01, 0.11, 0.25, 0.49] {
            let y = binary_entropy(p);
            assert!((inv_binary_entropy(y) - p).abs() < 1e-12);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_u128(4, 2), 6);
        assert_eq!(binomial_u128(64, 32), 1_832_624_140_942_590_534);
        let lf = LnFactorial::up_to(64);
        assert!((lf.log2_binomial(64, 32) - (1_832_624_140_942_590_534f64).log2()).abs() < 1e-9);
    }

    #[test]
    fn wilson_zero_successes_is_informative() {
        let (lo, hi) = wilson_interval(0, 1000, 1.96);
        assert_eq!(lo, 0.0);
        assert!(hi > 0.0 && hi < 0.01);
    }
}
