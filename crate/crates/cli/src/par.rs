//! Parallel trial collection. Trial `i` always uses the seed derived from
//! `(master_seed, i)`, and tallies merge exactly, so the outcome is
//! independent of the worker count and of rayon's scheduling.

use anyhow::Result;
use braidwalk_core::cayley::CayleyGraph;
use braidwalk_core::rng::trial_seed;
use braidwalk_core::walk::{trial_endpoints, StepDistribution, TrialTallies};
use rayon::prelude::*;

pub fn parallel_tallies(
    graph: &CayleyGraph,
    dist: &StepDistribution,
    steps: u64,
    trials: u64,
    master_seed: u64,
) -> Result<TrialTallies> {
    let tallies = (0..trials)
        .into_par_iter()
        .try_fold(
            || TrialTallies::new(graph.vertex_count(), steps),
            |mut tallies, i| -> Result<TrialTallies> {
                tallies.record(trial_endpoints(graph, dist, steps, trial_seed(master_seed, i))?);
                Ok(tallies)
            },
        )
        .try_reduce(
            || TrialTallies::new(graph.vertex_count(), steps),
            |a, b| Ok(a.merge(&b)),
        )?;
    Ok(tallies)
}
