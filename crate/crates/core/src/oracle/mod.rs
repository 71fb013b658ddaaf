//! Brute-force reference implementations. They enumerate completely or
//! refuse with a budget error; nothing here samples or prunes.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::instance::{BinaryVector, Cost, Instance, RegretCertificate, Scenario, TwoStagePair};
use crate::regret;

/// Largest ground set [`brute_z`] enumerates scenarios for.
pub const DEFAULT_MAX_ELEMENTS: usize = 16;

/// Default cap on enumerated pairs, recourse actions or first-stage solutions.
pub const DEFAULT_ENUM_BUDGET: u64 = 1_000_000;

fn argmin<T>(items: &[T], cost: impl Fn(&T) -> i64) -> Option<(&T, i64)> {
    let mut best: Option<(&T, i64)> = None;
    for item in items {
        let c = cost(item);
        if best.is_none_or(|(_, b)| c < b) {
            best = Some((item, c));
        }
    }
    best
}

/// `Opt(c)` by enumerating pairs.
pub fn brute_opt(inst: &Instance, c: &Scenario) -> Result<i64> {
    inst.check_scenario(c)?;
    let pairs = inst.oracle().pairs(inst, DEFAULT_ENUM_BUDGET)?;
    argmin(&pairs, |p| p.cost(inst.first_stage(), c.costs()))
        .map(|(_, v)| v)
        .ok_or_else(|| Error::infeasible("the feasible set is empty"))
}

/// `Inc(x, c)` by enumerating recourse actions.
pub fn brute_inc(inst: &Instance, x: &BinaryVector, c: &Scenario) -> Result<i64> {
    inst.check_scenario(c)?;
    let ys = inst
        .oracle()
        .recourse_actions(inst, x, DEFAULT_ENUM_BUDGET)?;
    argmin(&ys, |y| y.dot(c.costs()))
        .map(|(_, v)| inst.first_stage_cost(x) + v)
        .ok_or_else(|| Error::infeasible(format!("{x} has no recourse action")))
}

/// Scenario `mask` puts element `i` at its upper bound when bit `n - 1 - i`
/// is set, so ascending masks list bit patterns in lexicographic order.
fn scenario_of_mask(inst: &Instance, mask: u64) -> Scenario {
    let n = inst.n();
    inst.uncertainty().extreme(|i| mask >> (n - 1 - i) & 1 == 1)
}

/// `Z(x)` as the maximum of `Inc(x, c) - Opt(c)` over all `2^n` extreme
/// scenarios. Ties keep the lexicographically smallest bound pattern.
pub fn brute_z(inst: &Instance, x: &BinaryVector) -> Result<RegretCertificate> {
    brute_z_with(inst, x, DEFAULT_MAX_ELEMENTS)
}

pub fn brute_z_with(
    inst: &Instance,
    x: &BinaryVector,
    max_elements: usize,
) -> Result<RegretCertificate> {
    let opts = opt_table(inst, max_elements)?;
    brute_z_against(inst, x, &opts)
}

/// `Opt(c)` for every extreme scenario, indexed by mask.
fn opt_table(inst: &Instance, max_elements: usize) -> Result<Vec<i64>> {
    let n = inst.n();
    if n > max_elements {
        return Err(Error::budget(
            "scenario enumeration element",
            max_elements as u64,
        ));
    }
    let pairs = inst.oracle().pairs(inst, DEFAULT_ENUM_BUDGET)?;
    if pairs.is_empty() {
        return Err(Error::infeasible("the feasible set is empty"));
    }
    Ok((0u64..(1 << n))
        .into_par_iter()
        .map(|mask| {
            let c = scenario_of_mask(inst, mask);
            argmin(&pairs, |p| p.cost(inst.first_stage(), c.costs()))
                .expect("nonempty")
                .1
        })
        .collect())
}

fn brute_z_against(inst: &Instance, x: &BinaryVector, opts: &[i64]) -> Result<RegretCertificate> {
    inst.check_len("x", x.len())?;
    let ys = inst
        .oracle()
        .recourse_actions(inst, x, DEFAULT_ENUM_BUDGET)?;
    if ys.is_empty() {
        return Err(Error::infeasible(format!("{x} has no recourse action")));
    }
    let cx = inst.first_stage_cost(x);
    let (value, mask) = (0u64..opts.len() as u64)
        .into_par_iter()
        .map(|mask| {
            let c = scenario_of_mask(inst, mask);
            let (_, inc) = argmin(&ys, |y| y.dot(c.costs())).expect("nonempty");
            (cx + inc - opts[mask as usize], mask)
        })
        .reduce(
            || (i64::MIN, u64::MAX),
            |a, b| {
                if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                    b
                } else {
                    a
                }
            },
        );
    let c = scenario_of_mask(inst, mask);
    let (y, _) = argmin(&ys, |y| y.dot(c.costs())).expect("nonempty");
    let (pair, _) = brute_opt_pair(inst, &c)?;
    Ok(RegretCertificate {
        value,
        x: x.clone(),
        witness: pair,
        worst_scenario: c,
        best_recourse: y.clone(),
    })
}

/// `Z(x)` as the maximum of `Z_(u,v)(x)` over enumerated pairs.
pub fn brute_z_pairs(inst: &Instance, x: &BinaryVector) -> Result<i64> {
    regret::max_regret_enum(inst, x, DEFAULT_ENUM_BUDGET).map(|c| c.value)
}

/// `min_x Z(x)` over all of `X'`, listed by ascending index set; the first
/// minimizer wins.
pub fn brute_tstr(inst: &Instance) -> Result<(i64, BinaryVector)> {
    let xs = inst
        .oracle()
        .first_stage_solutions(inst, DEFAULT_ENUM_BUDGET)?;
    let opts = opt_table(inst, DEFAULT_MAX_ELEMENTS)?;
    let values: Vec<i64> = xs
        .iter()
        .map(|x| brute_z_against(inst, x, &opts).map(|c| c.value))
        .collect::<Result<_>>()?;
    let k = (0..xs.len())
        .min_by_key(|&k| (values[k], k))
        .ok_or_else(|| Error::infeasible("X' is empty"))?;
    Ok((values[k], xs[k].clone()))
}

/// Whether `a` splits into two halves of equal sum.
pub fn partition_exists(a: &[Cost]) -> bool {
    let total: Cost = a.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    let half = (total / 2) as usize;
    let mut reach = vec![false; half + 1];
    reach[0] = true;
    for &x in a {
        let x = x as usize;
        for s in (x..=half).rev() {
            reach[s] |= reach[s - x];
        }
    }
    reach[half]
}

/// Whether a directed graph has a path from `v1` to `vn` through every
/// vertex exactly once, by trying all orders.
pub fn hamiltonian_path_exists(
    nodes: usize,
    arcs: &[(usize, usize)],
    v1: usize,
    vn: usize,
) -> bool {
    use itertools::Itertools;
    let inner: Vec<usize> = (0..nodes).filter(|&v| v != v1 && v != vn).collect();
    let k = inner.len();
    inner.into_iter().permutations(k).any(|mid| {
        let order: Vec<usize> = std::iter::once(v1)
            .chain(mid)
            .chain(std::iter::once(vn))
            .collect();
        order.windows(2).all(|w| arcs.contains(&(w[0], w[1])))
    })
}

/// Pair minimizing `C.u + c.v`, for cross-checks of two-stage solvers.
pub fn brute_opt_pair(inst: &Instance, c: &Scenario) -> Result<(TwoStagePair, i64)> {
    inst.check_scenario(c)?;
    let pairs = inst.oracle().pairs(inst, DEFAULT_ENUM_BUDGET)?;
    argmin(&pairs, |p| p.cost(inst.first_stage(), c.costs()))
        .map(|(p, v)| (p.clone(), v))
        .ok_or_else(|| Error::infeasible("the feasible set is empty"))
}
