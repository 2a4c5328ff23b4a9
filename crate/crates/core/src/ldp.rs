//! Large deviations for the total length of block-composed braids:
//! restricted composition counts, the rate function, exact probability
//! oracles under two models, and the convergence report comparing them.
//!
//! Two models are first-class. The composition model counts even-length
//! tuples via `kappa` and weights every tuple equally; the true-length
//! model weights each length by the number of group elements attaining it.
//! They genuinely disagree (already at n = 3 with two blocks), so reports
//! always carry both side by side.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cayley::build_cayley;
use crate::error::{Error, Result};
use crate::group::{build_group, GroupSpec};
use crate::limits::{poincare_polynomial, CoxeterType, DegreeTable};

/// Largest strand count for which the even-length histogram may be built
/// by enumeration (9!/2 elements).
pub const MAX_HISTOGRAM_N: u64 = 9;

/// Parameters of the rate function: `M = floor(n (n-1) / 4)` bounds the
/// per-block half-length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateParams {
    pub n: u64,
    pub m_cap: u64,
}

impl RateParams {
    pub fn new(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSpec("rate function needs n >= 3".to_string()));
        }
        Ok(RateParams { n, m_cap: n * (n - 1) / 4 })
    }
}

/// Number of ordered k-tuples of integers in `[0, j)` summing to `n`,
/// by the k-fold convolution of the uniform indicator (exact, arbitrary
/// precision).
pub fn kappa_exact(n: u64, j: u64, k: u64) -> BigInt {
    if j == 0 {
        return if n == 0 && k == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let max_sum = (j - 1).saturating_mul(k);
    if n > max_sum {
        return BigInt::zero();
    }
    let cap = n as usize;
    let mut dp = vec![BigInt::zero(); cap + 1];
    dp[0] = BigInt::one();
    for _ in 0..k {
        // Prefix sums turn the length-j window into two lookups.
        let mut prefix = vec![BigInt::zero(); cap + 2];
        for s in 0..=cap {
            prefix[s + 1] = prefix[s].clone() + &dp[s];
        }
        for s in (0..=cap).rev() {
            let lo = (s as u64).saturating_sub(j - 1) as usize;
            dp[s] = prefix[s + 1].clone() - &prefix[lo];
        }
    }
    dp[cap].clone()
}

/// Natural log of the asymptotic restricted-composition count
/// `kappa(Nx, M+1, N)` in the strict interior `0 < x < M`.
pub fn kappa_asymptotic(x: f64, m_cap: u64, blocks: u64) -> Result<f64> {
    let m = m_cap as f64;
    let n = blocks as f64;
    if !(x > 0.0 && x < m) {
        return Err(Error::DomainError(
            "asymptotic form is valid only for 0 < x < M".to_string(),
        ));
    }
    let a = m + 1.0 - x;
    let b = m - x;
    Ok(-0.5 * libm::log(2.0 * core::f64::consts::PI * n)
        + (n * a + 0.5) * libm::log(a)
        - (n * b + 1.5) * libm::log(b)
        - n * libm::pow(b / a, m + 1.0))
}

/// Natural log of `n! / 2`, summed term by term so it never overflows.
fn ln_half_factorial(n: u64) -> f64 {
    (2..=n).map(|k| libm::log(k as f64)).sum::<f64>() - libm::log(2.0)
}

/// The rate function
/// `I(x) = (1 - 1/(M+1-x))^{M+1} + (M-x) log(M-x) - (M+1-x) log(M+1-x)
///  + log(n!/2)` on `[0, M]`, with the convention `0 log 0 = 0`, and
/// `+inf` outside.
pub fn rate_i(x: &BigRational, n: u64) -> Result<f64> {
    let params = RateParams::new(n)?;
    let m = BigRational::from_integer(BigInt::from(params.m_cap));
    if x.is_negative() || x > &m {
        return Ok(f64::INFINITY);
    }
    let b = m.clone() - x; // M - x
    let a = b.clone() + BigRational::one(); // M + 1 - x
    // (1 - 1/(M+1-x))^{M+1} = ((M-x)/(M+1-x))^{M+1}, exact.
    let power = pow_rational(&(b.clone() / a.clone()), params.m_cap + 1);
    let b_f = b.to_f64().unwrap();
    let a_f = a.to_f64().unwrap();
    let xlogx = if b.is_zero() { 0.0 } else { b_f * libm::log(b_f) };
    Ok(power.to_f64().unwrap() + xlogx - a_f * libm::log(a_f) + ln_half_factorial(n))
}

fn pow_rational(base: &BigRational, exp: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = base.clone();
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base.clone();
        }
        base = base.clone() * base.clone();
        exp >>= 1;
    }
    acc
}

/// Counts of even-length elements of the symmetric group on `n` symbols,
/// indexed by length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthHistogram {
    pub n: u64,
    /// `counts[l]` is the number of even-length elements with length `l`;
    /// odd indices are zero.
    pub counts: Vec<u64>,
}

impl LengthHistogram {
    /// Total count: `n! / 2` for n >= 2.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// The even-length histogram of the symmetric group on `n` symbols,
/// computed two ways (Cayley enumeration and the even coefficients of the
/// type-A length-generating polynomial) and asserted identical.
pub fn even_length_histogram(n: u64) -> Result<LengthHistogram> {
    if n < 2 {
        return Err(Error::InvalidSpec("histogram needs n >= 2".to_string()));
    }
    if n > MAX_HISTOGRAM_N {
        return Err(Error::CapExceeded { predicted: n as u128, cap: MAX_HISTOGRAM_N });
    }
    let graph = build_cayley(&build_group(&GroupSpec::CoxeterA { rank: n as u32 - 1 })?)?;
    let mut counts = vec![0u64; (n * (n - 1) / 2) as usize + 1];
    for &d in graph.distances() {
        if d % 2 == 0 {
            counts[d as usize] += 1;
        }
    }

    let table = DegreeTable::load()?;
    let degrees = table.degrees(CoxeterType::A(n as u32 - 1))?;
    let poly = poincare_polynomial(&degrees);
    let from_poly: Vec<u64> = (0..counts.len())
        .map(|l| {
            if l % 2 == 0 {
                poly.coeff(l).to_u64().expect("coefficient fits u64")
            } else {
                0
            }
        })
        .collect();
    assert_eq!(counts, from_poly, "enumeration disagrees with the polynomial route");

    Ok(LengthHistogram { n, counts })
}

/// Which probability model a log-probability query runs under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    /// Tuple counting: every even-length tuple weighted equally,
    /// `Pr = kappa(target/2, M+1, N) (2/n!)^N`.
    Composition,
    /// The honest law of the block-length sum under the uniform draw from
    /// the even-length class.
    TrueLength,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Composition => "composition",
            Model::TrueLength => "true_length",
        }
    }
}

fn factorial_big(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Exact probability that the block-length sum over `blocks` i.i.d. blocks
/// equals `target`, under the given model.
pub fn exact_prob(model: Model, blocks: u64, target: u64, n: u64) -> Result<BigRational> {
    if blocks < 1 {
        return Err(Error::InvalidSpec("need at least one block".to_string()));
    }
    if n < 2 {
        return Err(Error::InvalidSpec("need n >= 2".to_string()));
    }
    if target % 2 != 0 {
        return Err(Error::InvalidSpec("target must be even".to_string()));
    }
    if target > blocks * n * (n - 1) / 2 {
        return Err(Error::InvalidSpec("target exceeds the maximal total length".to_string()));
    }
    match model {
        Model::Composition => {
            let m_cap = n * (n - 1) / 4;
            let count = kappa_exact(target / 2, m_cap + 1, blocks);
            let single = BigRational::new(BigInt::from(2), factorial_big(n));
            Ok(BigRational::from_integer(count) * pow_rational(&single, blocks))
        }
        Model::TrueLength => {
            let hist = even_length_histogram(n)?;
            let base: Vec<BigInt> = hist.counts.iter().map(|&c| BigInt::from(c)).collect();
            let mut conv = vec![BigInt::one()]; // N = 0: empty sum
            for _ in 0..blocks {
                conv = convolve_trunc(&conv, &base, target as usize);
            }
            let ways = conv.get(target as usize).cloned().unwrap_or_else(BigInt::zero);
            let denom = pow_rational(
                &BigRational::from_integer(BigInt::from(hist.total())),
                blocks,
            );
            Ok(BigRational::from_integer(ways) / denom)
        }
    }
}

fn convolve_trunc(a: &[BigInt], b: &[BigInt], cap: usize) -> Vec<BigInt> {
    let len = (a.len() + b.len() - 1).min(cap + 1);
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() || i > cap {
            continue;
        }
        for (k, y) in b.iter().enumerate() {
            let idx = i + k;
            if idx > cap {
                break;
            }
            if !y.is_zero() {
                out[idx] += x * y;
            }
        }
    }
    out
}

/// Natural log of an exact probability; `-inf` for zero.
pub fn exact_logprob(model: Model, blocks: u64, target: u64, n: u64) -> Result<f64> {
    let p = exact_prob(model, blocks, target, n)?;
    Ok(ln_rational(&p))
}

/// Natural log of a nonnegative rational, robust to values far outside
/// f64 range; `-inf` at zero.
pub fn ln_rational(r: &BigRational) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    assert!(r.is_positive(), "log of a negative rational");
    ln_big_uint(r.numer()) - ln_big_uint(r.denom())
}

fn ln_big_uint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 53 {
        return libm::log(x.to_f64().unwrap());
    }
    let shift = bits - 53;
    let top: BigInt = x >> shift;
    libm::log(top.to_f64().unwrap()) + shift as f64 * core::f64::consts::LN_2
}

/// One row of the convergence report.
#[derive(Debug, Clone)]
pub struct RateReportRow {
    pub n: u64,
    pub blocks: u64,
    pub x: BigRational,
    pub model: Model,
    pub log_prob: f64,
    pub neg_log_prob_over_blocks: f64,
    pub rate_value: f64,
    /// Log of the asymptotic composition count; absent on the boundary of
    /// its domain.
    pub kappa_asymptotic_log: Option<f64>,
}

/// Evaluates `-log Pr(L_N = 2 N x) / N` under both models for each block
/// count, next to the rate function and the asymptotic composition count.
/// Reporting only: no convergence assertion is made here.
pub fn rate_convergence_report(
    n: u64,
    x: &BigRational,
    block_counts: &[u64],
) -> Result<Vec<RateReportRow>> {
    let params = RateParams::new(n)?;
    let rate_value = rate_i(x, n)?;
    let mut rows = Vec::with_capacity(block_counts.len() * 2);
    for &blocks in block_counts {
        let scaled = x * BigRational::from_integer(BigInt::from(blocks));
        if !scaled.is_integer() {
            return Err(Error::InvalidSpec(
                "N * x must be integral for every block count".to_string(),
            ));
        }
        let target = (scaled * BigRational::from_integer(BigInt::from(2)))
            .to_integer()
            .to_u64()
            .ok_or_else(|| Error::InvalidSpec("target out of range".to_string()))?;
        let kappa_log = x
            .to_f64()
            .and_then(|xf| kappa_asymptotic(xf, params.m_cap, blocks).ok());
        for model in [Model::Composition, Model::TrueLength] {
            let log_prob = exact_logprob(model, blocks, target, n)?;
            rows.push(RateReportRow {
                n,
                blocks,
                x: x.clone(),
                model,
                log_prob,
                neg_log_prob_over_blocks: -log_prob / blocks as f64,
                rate_value,
                kappa_asymptotic_log: kappa_log,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;
    use crate::rng::Xoshiro256StarStar;

    /// Inclusion-exclusion form of the restricted composition count:
    /// `sum_m (-1)^m C(k, m) C(n - m j + k - 1, k - 1)`.
    fn kappa_inclusion_exclusion(n: u64, j: u64, k: u64) -> BigInt {
        fn binomial(a: i128, b: i128) -> BigInt {
            if b < 0 || a < b {
                return BigInt::zero();
            }
            let mut acc = BigInt::one();
            for i in 0..b {
                acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
            }
            acc
        }
        if k == 0 {
            // Zero parts sum to zero only; the alternating sum below
            // assumes k >= 1.
            return if n == 0 { BigInt::one() } else { BigInt::zero() };
        }
        let mut acc = BigInt::zero();
        for m in 0..=k {
            let rem = n as i128 - (m * j) as i128 + k as i128 - 1;
            let term = binomial(k as i128, m as i128) * binomial(rem, k as i128 - 1);
            if m % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa_exact(0, 3, 0), BigInt::one());
        assert_eq!(kappa_exact(0, 1, 5), BigInt::one());
        assert_eq!(kappa_exact(2, 2, 3), BigInt::from(3));
        assert_eq!(kappa_exact(3, 3, 2), BigInt::from(2));
        assert_eq!(kappa_exact(5, 2, 3), BigInt::zero());
    }

    #[test]
    fn kappa_matches_inclusion_exclusion_grid() {
        for j in 1..=8u64 {
            for k in 0..=12u64 {
                for n in 0..=60u64 {
                    assert_eq!(
                        kappa_exact(n, j, k),
                        kappa_inclusion_exclusion(n, j, k),
                        "n={n} j={j} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn kappa_row_sums_are_powers() {
        for j in 1..=6u64 {
            for k in 0..=8u64 {
                let total: BigInt = (0..=(j - 1) * k).map(|n| kappa_exact(n, j, k)).sum();
                let mut expect = BigInt::one();
                for _ in 0..k {
                    expect *= BigInt::from(j);
                }
                assert_eq!(total, expect, "j={j} k={k}");
            }
        }
    }

    #[test]
    fn histogram_examples() {
        let h = even_length_histogram(3).unwrap();
        assert_eq!(h.counts, vec![1, 0, 2, 0]);
        assert_eq!(h.total(), 3);

        let h = even_length_histogram(4).unwrap();
        assert_eq!(h.counts, vec![1, 0, 5, 0, 5, 0, 1]);
        assert_eq!(h.total(), 12);

        let h = even_length_histogram(2).unwrap();
        assert_eq!(h.counts, vec![1, 0]);

        assert!(even_length_histogram(1).is_err());
        assert!(matches!(
            even_length_histogram(MAX_HISTOGRAM_N + 1),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn histogram_totals_are_half_factorials() {
        for n in 2..=7u64 {
            let h = even_length_histogram(n).unwrap();
            let half_fact: u64 = (2..=n).product::<u64>() / 2;
            assert_eq!(h.total(), half_fact);
            assert!(h.counts.iter().skip(1).step_by(2).all(|&c| c == 0));
        }
    }

    #[test]
    fn exact_prob_examples() {
        // One block of three strands: a third of the even class sits at
        // length zero.
        assert_eq!(
            exact_prob(Model::TrueLength, 1, 0, 3).unwrap(),
            ratio(1, 3)
        );
        assert_eq!(
            exact_prob(Model::TrueLength, 2, 2, 3).unwrap(),
            ratio(4, 9)
        );
        assert_eq!(
            exact_prob(Model::Composition, 2, 2, 3).unwrap(),
            ratio(2, 9)
        );
    }

    #[test]
    fn models_disagree_at_n3() {
        let composition = exact_prob(Model::Composition, 2, 2, 3).unwrap();
        let true_length = exact_prob(Model::TrueLength, 2, 2, 3).unwrap();
        assert_ne!(composition, true_length);
    }

    #[test]
    fn true_length_normalizes_exactly() {
        for n in 2..=6u64 {
            for blocks in 1..=8u64 {
                let max_target = blocks * n * (n - 1) / 2;
                let mut total = BigRational::zero();
                for target in (0..=max_target).step_by(2) {
                    total += exact_prob(Model::TrueLength, blocks, target, n).unwrap();
                }
                assert!(total.is_one(), "n={n} blocks={blocks}");
            }
        }
    }

    #[test]
    fn true_length_single_block_reproduces_histogram() {
        for n in 2..=6u64 {
            let hist = even_length_histogram(n).unwrap();
            let total = BigInt::from(hist.total());
            for (l, &c) in hist.counts.iter().enumerate() {
                if l % 2 != 0 {
                    continue;
                }
                let p = exact_prob(Model::TrueLength, 1, l as u64, n).unwrap();
                assert_eq!(p, BigRational::new(BigInt::from(c), total.clone()));
            }
        }
    }

    #[test]
    fn invalid_targets_rejected() {
        assert!(exact_prob(Model::TrueLength, 2, 3, 3).is_err()); // odd
        assert!(exact_prob(Model::TrueLength, 2, 8, 3).is_err()); // too big
        assert!(exact_prob(Model::TrueLength, 0, 0, 3).is_err());
    }

    #[test]
    fn boundary_rate_at_zero_is_log_half_factorial() {
        // Pr(L_N = 0) = (2/n!)^N exactly under both models, so
        // -log Pr / N = log(n!/2) for every N.
        for n in 3..=5u64 {
            for blocks in [1u64, 2, 5, 16, 64] {
                let expect = pow_rational(
                    &BigRational::new(BigInt::from(2), factorial_big(n)),
                    blocks,
                );
                for model in [Model::Composition, Model::TrueLength] {
                    assert_eq!(exact_prob(model, blocks, 0, n).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn ln_rational_handles_extreme_magnitudes() {
        // (1/3)^1024 underflows f64; the log must still be accurate.
        let tiny = pow_rational(&ratio(1, 3), 1024);
        let expect = -1024.0 * libm::log(3.0);
        assert!((ln_rational(&tiny) - expect).abs() < 1e-9);
        assert_eq!(ln_rational(&BigRational::zero()), f64::NEG_INFINITY);
        assert!((ln_rational(&ratio(7, 2)) - libm::log(3.5)).abs() < 1e-15);
    }

    #[test]
    fn rate_examples() {
        // x = M collapses most terms: I(M) = log(n!/2).
        let i = rate_i(&ratio(1, 1), 3).unwrap();
        assert!((i - libm::log(3.0)).abs() < 1e-14);

        // Outside the support the rate is infinite.
        assert_eq!(rate_i(&ratio(-1, 2), 3).unwrap(), f64::INFINITY);
        assert_eq!(rate_i(&ratio(2, 1), 3).unwrap(), f64::INFINITY);

        // The n = 3 value at x = 0 is 1/4 - 2 log 2 + log 3, which is
        // negative; the formula's boundary behavior is reported, not
        // repaired.
        let i0 = rate_i(&ratio(0, 1), 3).unwrap();
        let expect = 0.25 - 2.0 * libm::log(2.0) + libm::log(3.0);
        assert!((i0 - expect).abs() < 1e-14);
        assert!(i0 < 0.0);

        assert!(rate_i(&ratio(0, 1), 2).is_err());
    }

    /// High-precision natural log of a positive rational via the atanh
    /// series, truncated below 2^-90. Independent of libm.
    fn ln_hiprec(r: &BigRational) -> BigRational {
        assert!(r.is_positive());
        // Scale into [1, 2) by powers of two.
        let mut r = r.clone();
        let two = BigRational::from_integer(BigInt::from(2));
        let one = BigRational::one();
        let mut exponent: i64 = 0;
        while r >= two {
            r /= two.clone();
            exponent += 1;
        }
        while r < one {
            r *= two.clone();
            exponent -= 1;
        }
        let ln2 = atanh_series(&ratio(1, 3)) * two.clone();
        let z = (r.clone() - one.clone()) / (r + one);
        atanh_series(&z) * two + ln2 * BigRational::from_integer(BigInt::from(exponent))
    }

    fn atanh_series(z: &BigRational) -> BigRational {
        let zz = z * z;
        let mut term = z.clone();
        let mut acc = BigRational::zero();
        let mut k = 0u32;
        let threshold = pow_rational(&ratio(1, 2), 90);
        while term.abs() > threshold {
            acc += term.clone() / BigRational::from_integer(BigInt::from(2 * k + 1));
            term *= zz.clone();
            k += 1;
        }
        acc
    }

    #[test]
    fn rate_matches_high_precision_evaluation() {
        // I(x) recomputed with exact rational terms and series logs.
        for (num, den, n) in [(1i64, 2i64, 3u64), (1, 1, 4), (5, 2, 4), (3, 1, 5)] {
            let x = ratio(num, den);
            let params = RateParams::new(n).unwrap();
            let m = BigRational::from_integer(BigInt::from(params.m_cap));
            let b = m.clone() - x.clone();
            let a = b.clone() + BigRational::one();
            let mut expect = pow_rational(&(b.clone() / a.clone()), params.m_cap + 1);
            if !b.is_zero() {
                expect += b.clone() * ln_hiprec(&b);
            }
            expect -= a.clone() * ln_hiprec(&a);
            let half_fact = BigRational::from_integer(factorial_big(n) / BigInt::from(2));
            expect += ln_hiprec(&half_fact);
            let got = rate_i(&x, n).unwrap();
            let diff = (got - expect.to_f64().unwrap()).abs();
            assert!(diff < 1e-12, "n={n} x={num}/{den} diff={diff}");
        }
    }

    #[test]
    fn kappa_asymptotic_domain_and_direction() {
        assert!(kappa_asymptotic(0.0, 1, 10).is_err());
        assert!(kappa_asymptotic(1.0, 1, 10).is_err());
        // Mid-domain: the asymptotic log should approach the exact log as
        // N grows (per-N difference shrinking).
        let exact_gap = |blocks: u64| {
            let exact = ln_rational(&BigRational::from_integer(kappa_exact(
                blocks / 2,
                2,
                blocks,
            )));
            let asym = kappa_asymptotic(0.5, 1, blocks).unwrap();
            ((exact - asym) / blocks as f64).abs()
        };
        assert!(exact_gap(256) < exact_gap(16));
    }

    #[test]
    fn convergence_report_shape_and_boundary_rows() {
        let rows = rate_convergence_report(3, &ratio(1, 1), &[2, 4]).unwrap();
        assert_eq!(rows.len(), 4);
        // x = M: the composition model pins -log Pr / N at log 3 and the
        // true-length model at log(3/2).
        for row in &rows {
            match row.model {
                Model::Composition => {
                    assert!((row.neg_log_prob_over_blocks - libm::log(3.0)).abs() < 1e-12)
                }
                Model::TrueLength => {
                    assert!((row.neg_log_prob_over_blocks - libm::log(1.5)).abs() < 1e-12)
                }
            }
            assert!(row.kappa_asymptotic_log.is_none());
        }

        // Non-integral N x rejected.
        assert!(rate_convergence_report(3, &ratio(1, 2), &[3]).is_err());
    }

    #[test]
    fn true_length_matches_monte_carlo() {
        // n = 4, five blocks: draw block lengths uniformly from the even
        // class via the walk RNG and compare frequencies within 5 sigma.
        let n = 4u64;
        let blocks = 5u64;
        let samples = 1_000_000u64;
        let hist = even_length_histogram(n).unwrap();
        let mut lengths = Vec::new();
        for (l, &c) in hist.counts.iter().enumerate() {
            for _ in 0..c {
                lengths.push(l as u64);
            }
        }
        let mut rng = Xoshiro256StarStar::seed_from_u64(crate::DEFAULT_SEED);
        let max_target = (blocks * n * (n - 1) / 2) as usize;
        let mut freq = vec![0u64; max_target + 1];
        for _ in 0..samples {
            let total: u64 = (0..blocks)
                .map(|_| lengths[rng.next_below(lengths.len() as u64) as usize])
                .sum();
            freq[total as usize] += 1;
        }
        let mut checked = 0;
        for target in (0..=max_target as u64).step_by(2) {
            let p = exact_prob(Model::TrueLength, blocks, target, n)
                .unwrap()
                .to_f64()
                .unwrap();
            if p < 1e-3 {
                continue;
            }
            let observed = freq[target as usize] as f64 / samples as f64;
            let sigma = libm::sqrt(p * (1.0 - p) / samples as f64);
            assert!(
                (observed - p).abs() < 5.0 * sigma,
                "target {target}: {observed} vs {p}"
            );
            checked += 1;
        }
        assert!(checked > 5);
    }
}
