//! Greedy descent on `F(X)` per profile.
//!
//! Within a pass every candidate `i` with `F(X + i) <= bestval` replaces the
//! current best move, so the last of several equal moves wins and a move of
//! equal value still counts as progress. `F` is supermodular, so once
//! `F(X + j) > F(X)` holds for the set `X` a pass starts from, `j` can never
//! be accepted later in the run and is dropped.

use itertools::Itertools;
use rayon::prelude::*;

use super::profiles::{coefficients, enumerate_pi_profiles, CoeffTable, PiProfile};
use crate::error::{Error, Result};
use crate::instance::{BinaryVector, Instance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GreedyOptions {
    /// Start from every subset of at most this many items.
    pub seed_size: usize,
    pub prune: bool,
}

impl Default for GreedyOptions {
    fn default() -> Self {
        GreedyOptions {
            seed_size: 0,
            prune: true,
        }
    }
}

/// Outcome of one run from one seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyRun {
    pub value: i64,
    pub items: Vec<usize>,
    pub evaluations: u64,
}

#[derive(Debug, Clone)]
pub struct GreedySolution {
    /// `F(X)` of the returned set under its profile, an upper bound on `Z(x)`.
    pub value: i64,
    pub x: BinaryVector,
    pub profile: PiProfile,
    pub evaluations: u64,
}

/// Runs the descent from `seed` for one coefficient table.
pub fn greedy_from_seed(table: &CoeffTable, seed: &[usize], prune: bool) -> GreedyRun {
    let n = table.rows.first().map_or(0, |r| r.omega.len());
    let mut items: Vec<usize> = seed.to_vec();
    items.sort_unstable();
    let mut sums = table.row_sums(&items);
    let mut best = *sums.iter().max().expect("nonempty table");
    let mut evaluations = 1;
    let mut active: Vec<bool> = (0..n).map(|i| !items.contains(&i)).collect();

    while items.len() < table.p {
        let start = best;
        let mut choice = None;
        for j in 0..n {
            if !active[j] {
                continue;
            }
            let value = table.f_with(&sums, j);
            evaluations += 1;
            if value <= best {
                best = value;
                choice = Some(j);
            } else if prune && value > start {
                active[j] = false;
            }
        }
        let Some(j) = choice else { break };
        active[j] = false;
        items.push(j);
        for (s, row) in sums.iter_mut().zip(&table.rows) {
            *s += row.omega[j];
        }
    }
    items.sort_unstable();
    GreedyRun {
        value: best,
        items,
        evaluations,
    }
}

fn best_over_seeds(table: &CoeffTable, options: &GreedyOptions) -> GreedyRun {
    let n = table.rows.first().map_or(0, |r| r.omega.len());
    let mut best: Option<GreedyRun> = None;
    let mut evaluations = 0;
    for size in 0..=options.seed_size.min(table.p) {
        for seed in (0..n).combinations(size) {
            let run = greedy_from_seed(table, &seed, options.prune);
            evaluations += run.evaluations;
            if best.as_ref().is_none_or(|b| run.value < b.value) {
                best = Some(run);
            }
        }
    }
    let mut run = best.expect("the empty seed always runs");
    run.evaluations = evaluations;
    run
}

/// Best greedy result over all profiles. Equal values keep the
/// lexicographically first profile and, within it, the first seed.
pub fn solve_greedy(inst: &Instance, options: &GreedyOptions) -> Result<GreedySolution> {
    let p = super::selection_p(inst)?;
    if options.seed_size > p {
        return Err(Error::input(format!(
            "seed size {} exceeds p = {p}",
            options.seed_size
        )));
    }
    let profiles = enumerate_pi_profiles(inst);
    let runs: Vec<GreedyRun> = profiles
        .par_iter()
        .map(|prof| best_over_seeds(&coefficients(inst, prof), options))
        .collect();
    let evaluations = runs.iter().map(|r| r.evaluations).sum();
    let (k, run) = runs
        .into_iter()
        .enumerate()
        .min_by_key(|(k, r)| (r.value, *k))
        .expect("at least one profile");
    Ok(GreedySolution {
        value: run.value,
        x: BinaryVector::from_indices(inst.n(), run.items),
        profile: profiles[k].clone(),
        evaluations,
    })
}
