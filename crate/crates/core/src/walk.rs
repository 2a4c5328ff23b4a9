//! The random walk on a Cayley graph driven by a symmetric (hence doubly
//! stochastic) step distribution: seeded simulation, exact limiting
//! expectations, finite-step laws by chain powering, and the Monte Carlo
//! versus exact-limit report.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cayley::CayleyGraph;
use crate::error::{Error, Result};
use crate::group::{ConcreteGroup, Element, Letter, Presentation};
use crate::rng::{trial_seed, Xoshiro256StarStar};

/// Cap on the vertex count for finite-step law computation by powering.
pub const POWERING_CAP: usize = 5000;

/// A symmetric probability assignment over the distinct letters of
/// S and S^{-1}, plus a holding mass.
///
/// Symmetry (`w(s) = w(s^{-1})`) makes the induced transition matrix
/// symmetric and therefore doubly stochastic; asymmetric letter weights are
/// rejected at construction. A positive holding mass makes the chain
/// aperiodic, which disables parity splitting of the limit law.
#[derive(Debug, Clone)]
pub struct StepDistribution {
    letters: Vec<Letter>,
    weights: Vec<BigRational>,
    hold: BigRational,
}

impl StepDistribution {
    /// Equal weight on every distinct letter (involutive generators count
    /// once), after reserving `hold` for staying put.
    pub fn uniform(group: &ConcreteGroup, hold: BigRational) -> Result<Self> {
        let letters = distinct_letters(group);
        let count = letters.len();
        if hold.is_negative() || hold >= BigRational::one() {
            return Err(Error::InvalidDistribution(
                "hold probability must lie in [0, 1)".to_string(),
            ));
        }
        let share = (BigRational::one() - hold.clone())
            / BigRational::from_integer(BigInt::from(count as u64));
        Ok(StepDistribution {
            letters,
            weights: vec![share; count],
            hold,
        })
    }

    /// Per-generator weights; generator `i` and its inverse each get
    /// `gen_weights[i]`, which keeps the kernel symmetric by construction.
    pub fn symmetric(
        group: &ConcreteGroup,
        gen_weights: &[BigRational],
        hold: BigRational,
    ) -> Result<Self> {
        if gen_weights.len() != group.generators().len() {
            return Err(Error::InvalidDistribution(
                "one weight per generator required".to_string(),
            ));
        }
        let letters = distinct_letters(group);
        let weights: Vec<BigRational> = letters
            .iter()
            .map(|l| gen_weights[l.generator].clone())
            .collect();
        Self::from_letter_weights(letters, weights, hold)
    }

    /// Explicit per-letter weights. Rejects asymmetric maps (a generator
    /// weighted differently from its inverse), negative masses, and totals
    /// different from one.
    pub fn from_letter_weights(
        letters: Vec<Letter>,
        weights: Vec<BigRational>,
        hold: BigRational,
    ) -> Result<Self> {
        if letters.len() != weights.len() {
            return Err(Error::InvalidDistribution(
                "letter/weight length mismatch".to_string(),
            ));
        }
        if hold.is_negative() || weights.iter().any(|w| w.is_negative()) {
            return Err(Error::InvalidDistribution(
                "probabilities must be nonnegative".to_string(),
            ));
        }
        let total: BigRational = weights.iter().cloned().sum::<BigRational>() + hold.clone();
        if !total.is_one() {
            return Err(Error::InvalidDistribution(
                "hold plus letter weights must sum to 1".to_string(),
            ));
        }
        // Symmetry: the two signs of one generator must carry equal mass.
        for (i, li) in letters.iter().enumerate() {
            for (j, lj) in letters.iter().enumerate() {
                if li.generator == lj.generator && li.sign != lj.sign && weights[i] != weights[j] {
                    return Err(Error::InvalidDistribution(
                        "weight(s) must equal weight(s^{-1})".to_string(),
                    ));
                }
            }
        }
        Ok(StepDistribution { letters, weights, hold })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn hold(&self) -> &BigRational {
        &self.hold
    }

    pub fn is_lazy(&self) -> bool {
        !self.hold.is_zero()
    }

    /// True iff every letter has strictly positive mass, the positivity
    /// hypothesis of the limit theorems.
    pub fn is_fully_supported(&self) -> bool {
        self.weights.iter().all(|w| w.is_positive())
    }

    fn matches_graph(&self, graph: &CayleyGraph) -> Result<()> {
        if self.letters == graph.letters() {
            Ok(())
        } else {
            Err(Error::InvalidDistribution(
                "distribution letters do not match the graph's letter order".to_string(),
            ))
        }
    }

    /// Cumulative sampling thresholds in f64: hold first, then letters in
    /// order. Documented so simulations are bit-reproducible.
    fn cumulative(&self) -> Vec<f64> {
        let mut acc = self.hold.to_f64().unwrap_or(0.0);
        let mut cum = Vec::with_capacity(self.weights.len() + 1);
        cum.push(acc);
        for w in &self.weights {
            acc += w.to_f64().unwrap_or(0.0);
            cum.push(acc);
        }
        cum
    }
}

fn distinct_letters(group: &ConcreteGroup) -> Vec<Letter> {
    let mut letters = Vec::new();
    for i in 0..group.generators().len() {
        letters.push(Letter::plus(i));
        if !group.is_involutive(i) {
            letters.push(Letter::minus(i));
        }
    }
    letters
}

/// Exact limiting expectation of a functional along the walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitValue {
    /// A single limit: the chain is aperiodic in law (some relator has odd
    /// length, or the kernel holds with positive probability).
    Single(BigRational),
    /// Separate limits along even and odd step counts (only for lazy-free
    /// kernels on presentations whose relators all have even length).
    ParitySplit { even: BigRational, odd: BigRational },
}

impl LimitValue {
    pub fn even_value(&self) -> &BigRational {
        match self {
            LimitValue::Single(v) => v,
            LimitValue::ParitySplit { even, .. } => even,
        }
    }

    pub fn odd_value(&self) -> &BigRational {
        match self {
            LimitValue::Single(v) => v,
            LimitValue::ParitySplit { odd, .. } => odd,
        }
    }

    /// Value for a given step parity.
    pub fn at_parity(&self, odd_steps: bool) -> &BigRational {
        if odd_steps {
            self.odd_value()
        } else {
            self.even_value()
        }
    }

    /// True when both parities share one value.
    pub fn is_flat(&self) -> bool {
        match self {
            LimitValue::Single(_) => true,
            LimitValue::ParitySplit { even, odd } => even == odd,
        }
    }
}

/// Exact limit of `E[f(X_n)]`: the uniform average when some relator has
/// odd length, otherwise the pair of parity-class averages.
pub fn limiting_expectation(
    graph: &CayleyGraph,
    presentation: &Presentation,
    f: impl FnMut(u32, &Element) -> BigRational,
) -> LimitValue {
    let (even, odd, total) = graph.parity_sums(f);
    let order = BigRational::from_integer(BigInt::from(graph.vertex_count() as u64));
    if crate::group::has_odd_relator(presentation) {
        LimitValue::Single(total / order)
    } else {
        let two = BigRational::from_integer(BigInt::from(2));
        LimitValue::ParitySplit {
            even: two.clone() * even / order.clone(),
            odd: two * odd / order,
        }
    }
}

/// One simulated trajectory.
#[derive(Debug, Clone)]
pub struct WalkResult {
    pub seed: u64,
    /// Vertex indices X_0 .. X_steps (X_0 is the identity).
    pub visited: Vec<u32>,
    /// f(X_0) .. f(X_steps).
    pub functional_samples: Vec<BigRational>,
}

/// Simulates `steps` steps of the walk from the identity, recording the
/// functional along the trajectory. Deterministic in `seed`.
///
/// When the kernel is lazy-free and the graph is bipartite, the step-count
/// parity invariant `parity(l(X_k)) == parity(k)` is asserted at every
/// step.
pub fn simulate(
    graph: &CayleyGraph,
    dist: &StepDistribution,
    steps: u64,
    seed: u64,
    mut f: impl FnMut(u32, &Element) -> BigRational,
) -> Result<WalkResult> {
    dist.matches_graph(graph)?;
    let check_parity = graph.is_bipartite() && !dist.is_lazy();
    let cum = dist.cumulative();
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let mut v = 0u32;
    let mut visited = Vec::with_capacity(steps as usize + 1);
    let mut samples = Vec::with_capacity(steps as usize + 1);
    visited.push(v);
    samples.push(f(v, graph.element(v)));
    for k in 1..=steps {
        v = step(graph, &cum, v, &mut rng);
        if check_parity {
            assert_eq!(
                u64::from(graph.distance(v)) % 2,
                k % 2,
                "parity invariant violated at step {k}"
            );
        }
        visited.push(v);
        samples.push(f(v, graph.element(v)));
    }
    Ok(WalkResult { seed, visited, functional_samples: samples })
}

#[inline]
fn step(graph: &CayleyGraph, cum: &[f64], v: u32, rng: &mut Xoshiro256StarStar) -> u32 {
    let u = rng.next_f64();
    if u < cum[0] {
        return v; // hold
    }
    // Linear scan: letter counts are tiny (at most 2|S|).
    for li in 0..cum.len() - 1 {
        if u < cum[li + 1] {
            return graph.target(v, li);
        }
    }
    // Rounding pushed u past the last threshold; take the last letter.
    graph.target(v, cum.len() - 2)
}

/// Where a single trial sits at steps `N-1`, `N`, `N+1`.
pub fn trial_endpoints(
    graph: &CayleyGraph,
    dist: &StepDistribution,
    steps: u64,
    seed: u64,
) -> Result<[u32; 3]> {
    dist.matches_graph(graph)?;
    debug_assert!(steps >= 1);
    let cum = dist.cumulative();
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let mut v = 0u32;
    let mut prev = 0u32;
    for _ in 0..steps {
        prev = v;
        v = step(graph, &cum, v, &mut rng);
    }
    let next = step(graph, &cum, v, &mut rng);
    Ok([prev, v, next])
}

/// Per-vertex visit counts at steps `N-1`, `N`, `N+1`, accumulated over
/// trials. Merging is exact and associative, so parallel partitions of the
/// trial range reduce to identical tallies.
#[derive(Debug, Clone)]
pub struct TrialTallies {
    pub steps: u64,
    pub trials: u64,
    pub counts: [Vec<u64>; 3],
}

impl TrialTallies {
    pub fn new(vertex_count: usize, steps: u64) -> Self {
        TrialTallies {
            steps,
            trials: 0,
            counts: [
                vec![0; vertex_count],
                vec![0; vertex_count],
                vec![0; vertex_count],
            ],
        }
    }

    pub fn record(&mut self, endpoints: [u32; 3]) {
        for (slot, &v) in self.counts.iter_mut().zip(endpoints.iter()) {
            slot[v as usize] += 1;
        }
        self.trials += 1;
    }

    pub fn merge(mut self, other: &TrialTallies) -> Self {
        debug_assert_eq!(self.steps, other.steps);
        for (mine, theirs) in self.counts.iter_mut().zip(other.counts.iter()) {
            for (a, b) in mine.iter_mut().zip(theirs) {
                *a += b;
            }
        }
        self.trials += other.trials;
        self
    }
}

/// Runs `trials` independent trajectories (trial `i` seeded by
/// `trial_seed(master_seed, i)`) and tallies the endpoints.
pub fn collect_tallies(
    graph: &CayleyGraph,
    dist: &StepDistribution,
    steps: u64,
    trials: u64,
    master_seed: u64,
) -> Result<TrialTallies> {
    let mut tallies = TrialTallies::new(graph.vertex_count(), steps);
    for i in 0..trials {
        tallies.record(trial_endpoints(graph, dist, steps, trial_seed(master_seed, i))?);
    }
    Ok(tallies)
}

/// One row of the empirical-versus-limit report: the walk observed at a
/// fixed step count.
#[derive(Debug, Clone)]
pub struct StepReport {
    pub step: u64,
    /// Step-count parity (true = odd). Determines which limit applies on
    /// bipartite graphs with lazy-free kernels.
    pub odd_parity: bool,
    pub empirical_mean: f64,
    pub exact_limit: BigRational,
    pub std_error: f64,
    /// Total variation distance between the empirical distribution and the
    /// predicted limit law.
    pub tv_distance: f64,
}

/// Monte Carlo versus exact-limit comparison at steps `N-1`, `N`, `N+1`.
#[derive(Debug, Clone)]
pub struct WalkReport {
    pub trials: u64,
    pub seed: u64,
    pub rows: Vec<StepReport>,
}

/// Simulates `trials` seeded trajectories and compares the empirical mean
/// and distribution of `f(X_N)` against the exact limit at `N = steps` and
/// its two neighbors.
pub fn empirical_vs_limit(
    graph: &CayleyGraph,
    presentation: &Presentation,
    dist: &StepDistribution,
    steps: u64,
    trials: u64,
    master_seed: u64,
    f: impl FnMut(u32, &Element) -> BigRational,
) -> Result<WalkReport> {
    if steps < 1 {
        return Err(Error::InvalidSpec("steps must be >= 1".to_string()));
    }
    if trials < 1 {
        return Err(Error::InvalidSpec("trials must be >= 1".to_string()));
    }
    let tallies = collect_tallies(graph, dist, steps, trials, master_seed)?;
    report_from_tallies(graph, presentation, dist, &tallies, master_seed, f)
}

/// Builds the report from accumulated tallies. Split out so callers may
/// parallelize tally collection.
pub fn report_from_tallies(
    graph: &CayleyGraph,
    presentation: &Presentation,
    dist: &StepDistribution,
    tallies: &TrialTallies,
    master_seed: u64,
    mut f: impl FnMut(u32, &Element) -> BigRational,
) -> Result<WalkReport> {
    let values: Vec<f64> = (0..graph.vertex_count() as u32)
        .map(|v| {
            f(v, graph.element(v))
                .to_f64()
                .ok_or_else(|| Error::DomainError("functional value overflows f64".to_string()))
        })
        .collect::<Result<Vec<f64>>>()?;
    let limit = limiting_expectation(graph, presentation, &mut f);
    let split_parity = !dist.is_lazy() && !crate::group::has_odd_relator(presentation);

    let mut rows = Vec::with_capacity(3);
    for (slot, counts) in tallies.counts.iter().enumerate() {
        let step = tallies.steps + slot as u64 - 1;
        let odd_parity = step % 2 == 1;
        let trials = tallies.trials as f64;
        let mean = counts
            .iter()
            .zip(&values)
            .map(|(&c, &x)| c as f64 * x)
            .sum::<f64>()
            / trials;
        let mean_sq = counts
            .iter()
            .zip(&values)
            .map(|(&c, &x)| c as f64 * x * x)
            .sum::<f64>()
            / trials;
        let variance = (mean_sq - mean * mean).max(0.0);
        let std_error = libm::sqrt(variance / trials);
        let law = limit_law(graph, split_parity, odd_parity);
        let tv = 0.5
            * counts
                .iter()
                .zip(&law)
                .map(|(&c, &p)| libm::fabs(c as f64 / trials - p))
                .sum::<f64>();
        let exact = if split_parity {
            limit.at_parity(odd_parity).clone()
        } else {
            limit.even_value().clone()
        };
        rows.push(StepReport {
            step,
            odd_parity,
            empirical_mean: mean,
            exact_limit: exact,
            std_error,
            tv_distance: tv,
        });
    }
    Ok(WalkReport { trials: tallies.trials, seed: master_seed, rows })
}

/// The predicted limit law as a dense probability vector: uniform on the
/// group, or uniform on the parity class when the law splits.
pub fn limit_law(graph: &CayleyGraph, split_parity: bool, odd_parity: bool) -> Vec<f64> {
    let n = graph.vertex_count();
    if !split_parity {
        return vec![1.0 / n as f64; n];
    }
    let class_size = graph.parity_class_size(odd_parity) as f64;
    (0..n as u32)
        .map(|v| {
            if (graph.distance(v) % 2 == 1) == odd_parity {
                1.0 / class_size
            } else {
                0.0
            }
        })
        .collect()
}

/// Exact law of X_N by repeated sparse matrix-vector powering of the
/// transition kernel, starting from the identity.
pub fn power_distribution(
    graph: &CayleyGraph,
    dist: &StepDistribution,
    steps: u64,
) -> Result<Vec<f64>> {
    dist.matches_graph(graph)?;
    let n = graph.vertex_count();
    if n > POWERING_CAP {
        return Err(Error::CapExceeded { predicted: n as u128, cap: POWERING_CAP as u64 });
    }
    let hold = dist.hold().to_f64().unwrap_or(0.0);
    let weights: Vec<f64> = dist.weights().iter().map(|w| w.to_f64().unwrap_or(0.0)).collect();
    let mut mu = vec![0.0f64; n];
    mu[0] = 1.0;
    let mut next = vec![0.0f64; n];
    for _ in 0..steps {
        next.iter_mut().for_each(|x| *x = 0.0);
        for v in 0..n {
            let mass = mu[v];
            if mass == 0.0 {
                continue;
            }
            if hold > 0.0 {
                next[v] += mass * hold;
            }
            for (li, &w) in weights.iter().enumerate() {
                next[graph.target(v as u32, li) as usize] += mass * w;
            }
        }
        core::mem::swap(&mut mu, &mut next);
    }
    Ok(mu)
}

/// The transition matrix in exact rational arithmetic, as dense rows.
/// Intended for double-stochasticity checks on small graphs.
pub fn transition_matrix_exact(
    graph: &CayleyGraph,
    dist: &StepDistribution,
) -> Result<Vec<Vec<BigRational>>> {
    dist.matches_graph(graph)?;
    let n = graph.vertex_count();
    if n > POWERING_CAP {
        return Err(Error::CapExceeded { predicted: n as u128, cap: POWERING_CAP as u64 });
    }
    let zero = BigRational::zero();
    let mut rows = vec![vec![zero; n]; n];
    for v in 0..n {
        if !dist.hold().is_zero() {
            let h = dist.hold().clone();
            rows[v][v] += h;
        }
        for (li, w) in dist.weights().iter().enumerate() {
            let t = graph.target(v as u32, li) as usize;
            let w = w.clone();
            rows[v][t] += w;
        }
    }
    Ok(rows)
}

/// Total variation distance between two probability vectors.
pub fn tv_distance(p: &[f64], q: &[f64]) -> f64 {
    0.5 * p
        .iter()
        .zip(q)
        .map(|(&a, &b)| libm::fabs(a - b))
        .sum::<f64>()
}

/// Mean of a functional under a probability vector.
pub fn law_mean(law: &[f64], values: &[f64]) -> f64 {
    law.iter().zip(values).map(|(&p, &x)| p * x).sum()
}
