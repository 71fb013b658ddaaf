//! Exact minmax regret selection through the profile decomposition
//! `min_x Z(x) = min_pi P(pi)`.

use rayon::prelude::*;

use super::profiles::{coefficients, enumerate_pi_profiles, CoeffTable, PiProfile};
use crate::engine::{bnb_minimize, BinaryProgram, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::instance::{BinaryVector, Instance, RegretCertificate};

/// Largest `n` [`solve_exact`] accepts.
pub const DEFAULT_EXACT_MAX_N: usize = 48;

struct PProgram<'a> {
    table: &'a CoeffTable,
    /// Per row, item indices sorted by `omega` ascending.
    order: Vec<Vec<usize>>,
}

impl<'a> PProgram<'a> {
    fn new(table: &'a CoeffTable) -> Self {
        let order = table
            .rows
            .iter()
            .map(|row| {
                let mut idx: Vec<usize> = (0..row.omega.len()).collect();
                idx.sort_by_key(|&i| (row.omega[i], i));
                idx
            })
            .collect();
        PProgram { table, order }
    }
}

impl BinaryProgram for PProgram<'_> {
    fn len(&self) -> usize {
        self.table.rows.first().map_or(0, |r| r.omega.len())
    }

    fn lower_bound(&self, prefix: &[bool]) -> Result<Option<i64>> {
        let ones = prefix.iter().filter(|&&b| b).count();
        if ones > self.table.p {
            return Ok(None);
        }
        let room = self.table.p - ones;
        let fixed = prefix.len();
        let mut bound = i64::MIN;
        for (row, order) in self.table.rows.iter().zip(&self.order) {
            let mut value = row.nu;
            for (i, &b) in prefix.iter().enumerate() {
                if b {
                    value += row.omega[i];
                }
            }
            // The most negative free coefficients, at most `room` of them.
            let mut taken = 0;
            for &i in order {
                if taken == room || row.omega[i] >= 0 {
                    break;
                }
                if i >= fixed {
                    value += row.omega[i];
                    taken += 1;
                }
            }
            bound = bound.max(value);
        }
        Ok(Some(bound))
    }

    fn evaluate(&self, x: &[bool]) -> Result<Option<i64>> {
        if x.iter().filter(|&&b| b).count() > self.table.p {
            return Ok(None);
        }
        let items: Vec<usize> = x
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
            .collect();
        Ok(Some(self.table.f_of(&items)))
    }
}

/// `P(pi)` for a prepared coefficient table.
pub fn solve_p_pi_table(table: &CoeffTable, node_budget: u64) -> Result<(i64, BinaryVector)> {
    let program = PProgram::new(table);
    let out = bnb_minimize(&program, node_budget)?
        .ok_or_else(|| Error::Internal("x = 0 is always feasible".into()))?;
    Ok((out.value, out.solution))
}

/// `P(pi) = min { F(X) : |X| <= p }`, exactly.
pub fn solve_p_pi(inst: &Instance, profile: &PiProfile) -> Result<(i64, BinaryVector)> {
    super::selection_p(inst)?;
    solve_p_pi_table(&coefficients(inst, profile), DEFAULT_NODE_BUDGET)
}

#[derive(Debug, Clone)]
pub struct ExactSolution {
    pub value: i64,
    pub x: BinaryVector,
    pub certificate: RegretCertificate,
    /// The profile whose program produced `x`.
    pub profile: PiProfile,
    pub profiles: usize,
}

/// Solves every profile program (in parallel) and keeps the best; among
/// equal values the lexicographically first profile wins.
pub fn solve_exact(inst: &Instance) -> Result<ExactSolution> {
    super::selection_p(inst)?;
    if inst.n() > DEFAULT_EXACT_MAX_N {
        return Err(Error::budget(
            "exact selection element",
            DEFAULT_EXACT_MAX_N as u64,
        ));
    }
    let profiles = enumerate_pi_profiles(inst);
    let results: Vec<(i64, BinaryVector)> = profiles
        .par_iter()
        .map(|prof| solve_p_pi_table(&coefficients(inst, prof), DEFAULT_NODE_BUDGET))
        .collect::<Result<_>>()?;
    let (best, (value, x)) = results
        .into_iter()
        .enumerate()
        .min_by_key(|(k, (v, _))| (*v, *k))
        .expect("at least one profile");
    let certificate = super::max_regret(inst, &x)?;
    if certificate.value != value {
        return Err(Error::Internal(format!(
            "profile optimum {value} but Z(x) = {}",
            certificate.value
        )));
    }
    Ok(ExactSolution {
        value,
        x,
        certificate,
        profile: profiles[best].clone(),
        profiles: profiles.len(),
    })
}
