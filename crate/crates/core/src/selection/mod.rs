//! Two-stage selection: choose exactly `p` of `n` items, some now at known
//! costs `C`, the rest later at interval-uncertain costs.
//!
//! `X = {x : sum x = p}` and `X' = {x : sum x <= p}`.

mod exact;
mod greedy;
mod mip;
mod profiles;
mod special;

pub use exact::{solve_exact, solve_p_pi, solve_p_pi_table, ExactSolution, DEFAULT_EXACT_MAX_N};
pub use greedy::{greedy_from_seed, solve_greedy, GreedyOptions, GreedyRun, GreedySolution};
pub use mip::{build_compact_mip, build_p_pi_mip, build_regret_mip};
pub use profiles::{
    candidate_pairs, clamp_cost, coefficients, enumerate_pi_profiles, eval_f, rank_function_r,
    AlphaSet, CoeffRow, CoeffTable, PiProfile,
};
pub use special::{
    compositions, solve_few_distinct, solve_p_equals_n, DEFAULT_COMPOSITION_BUDGET,
    DEFAULT_DISTINCT_LIMIT,
};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::instance::{
    signed, BinaryVector, Cost, Instance, Recourse, RegretCertificate, TwoStagePair,
};
use crate::model_io::{MipModel, RowSense, VarId};
use crate::regret;
use crate::structure::StructureOracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelectionStructure {
    pub p: usize,
}

/// A four-item example with `n = 4`, `p = 3`, optimum 2 at `0110`.
pub fn four_items_instance() -> Instance {
    Instance::selection_from_rows(&[(6, 9, 13), (1, 1, 4), (4, 2, 12), (12, 2, 6)], 3)
        .expect("valid instance")
}

pub(crate) fn selection_p(inst: &Instance) -> Result<usize> {
    inst.as_selection()
        .map(|s| s.p)
        .ok_or_else(|| Error::Unsupported("this operation needs a selection instance".to_string()))
}

/// The `k` candidates with smallest key, ties to the lower index. Expected
/// linear time.
fn k_smallest(mut candidates: Vec<usize>, k: usize, key: impl Fn(usize) -> i64) -> Vec<usize> {
    debug_assert!(k <= candidates.len());
    if k == 0 {
        return Vec::new();
    }
    if k < candidates.len() {
        candidates.select_nth_unstable_by_key(k - 1, |&i| (key(i), i));
        candidates.truncate(k);
    }
    candidates.sort_unstable();
    candidates
}

/// Characteristic vector of `p` cheapest items.
pub fn solve_deterministic(costs: &[Cost], p: usize) -> Result<BinaryVector> {
    if p == 0 || p > costs.len() {
        return Err(Error::input(format!("p = {p} outside 1..={}", costs.len())));
    }
    let picked = k_smallest((0..costs.len()).collect(), p, |i| signed(costs[i]));
    Ok(BinaryVector::from_indices(costs.len(), picked))
}

fn tst_raw(first: &[Cost], second: &[Cost], p: usize) -> (TwoStagePair, i64) {
    let n = first.len();
    let best = |i: usize| signed(first[i].min(second[i]));
    let picked = k_smallest((0..n).collect(), p, best);
    let mut u = BinaryVector::zeros(n);
    let mut v = BinaryVector::zeros(n);
    let mut total = 0;
    for i in picked {
        total += best(i);
        if first[i] <= second[i] {
            u.set(i, true);
        } else {
            v.set(i, true);
        }
    }
    (TwoStagePair { u, v }, total)
}

/// Two-stage selection under known costs: pick the `p` smallest
/// `min(C_i, c_i)`, buying in stage one whenever `C_i <= c_i`.
pub fn solve_tst(first: &[Cost], second: &[Cost], p: usize) -> Result<(TwoStagePair, i64)> {
    if first.len() != second.len() {
        return Err(Error::input("cost vectors differ in length"));
    }
    if p == 0 || p > first.len() {
        return Err(Error::input(format!("p = {p} outside 1..={}", first.len())));
    }
    Ok(tst_raw(first, second, p))
}

fn recourse_raw(x: &BinaryVector, c: &[Cost], p: usize) -> Result<Recourse> {
    let have = x.count_ones();
    if have > p {
        return Err(Error::infeasible(format!(
            "{have} items chosen in stage one, p = {p}"
        )));
    }
    let free: Vec<usize> = (0..x.len()).filter(|&i| !x.get(i)).collect();
    let picked = k_smallest(free, p - have, |i| signed(c[i]));
    let cost = picked.iter().map(|&i| signed(c[i])).sum();
    Ok(Recourse {
        y: BinaryVector::from_indices(x.len(), picked),
        cost,
    })
}

/// Best completion of `x` under `c` and `Inc(x, c)`.
pub fn solve_inc(
    inst: &Instance,
    x: &BinaryVector,
    c: &crate::instance::Scenario,
) -> Result<(BinaryVector, i64)> {
    selection_p(inst)?;
    regret::incremental(inst, x, c)
}

/// Exact `Z(x)` in `O(n^2)`.
///
/// The adversary's dual price `alpha` can be restricted to the interval
/// endpoints. For a fixed `alpha` the best pair solves a two-stage selection
/// with second-stage costs `lo_i` on chosen items and
/// `clamp(alpha, lo_i, hi_i)` elsewhere, and
///
/// ```text
/// value(alpha) = C.x + (p - |X|) alpha - sum_{i not in X} [alpha - hi_i]_+ - Opt(alpha).
/// ```
pub fn max_regret(inst: &Instance, x: &BinaryVector) -> Result<RegretCertificate> {
    let p = selection_p(inst)?;
    regret::check_first_stage(inst, x)?;
    let n = inst.n();
    let first = inst.first_stage();
    let u = inst.uncertainty();
    let alphas = AlphaSet::new(inst);
    let cx = inst.first_stage_cost(x);
    let missing = (p - x.count_ones()) as i64;

    let mut modified: Vec<Cost> = vec![0; n];
    let mut best: Option<(i64, TwoStagePair)> = None;
    for &alpha in alphas.values() {
        let a = signed(alpha);
        let mut excess = 0;
        for i in 0..n {
            if x.get(i) {
                modified[i] = u.lo(i);
            } else {
                modified[i] = clamp_cost(alpha, u.lo(i), u.hi(i));
                excess += (a - signed(u.hi(i))).max(0);
            }
        }
        let (pair, opt) = tst_raw(first, &modified, p);
        let value = cx + missing * a - excess - opt;
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, pair));
        }
    }
    let (value, witness) = best.expect("alpha set is nonempty");
    let worst_scenario = regret::scenario_from_v(inst, &witness.v)?;
    let rec = recourse_raw(x, worst_scenario.costs(), p)?;
    Ok(RegretCertificate {
        value,
        x: x.clone(),
        witness,
        worst_scenario,
        best_recourse: rec.y,
    })
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k.min(n));
    (0..k).fold(1u64, |acc, i| {
        acc.saturating_mul((n - i) as u64) / (i as u64 + 1)
    })
}

impl StructureOracle for SelectionStructure {
    fn name(&self) -> &'static str {
        "selection"
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.p == 0 || self.p > n {
            return Err(Error::input(format!("p = {} outside 1..={n}", self.p)));
        }
        Ok(())
    }

    fn is_complete(&self, inst: &Instance, s: &BinaryVector) -> Result<bool> {
        inst.check_len("solution", s.len())?;
        Ok(s.count_ones() == self.p)
    }

    fn is_first_stage_feasible(&self, inst: &Instance, x: &BinaryVector) -> Result<bool> {
        inst.check_len("x", x.len())?;
        Ok(x.count_ones() <= self.p)
    }

    fn prefix_feasible(&self, _inst: &Instance, prefix: &[bool]) -> Result<bool> {
        Ok(prefix.iter().filter(|&&b| b).count() <= self.p)
    }

    fn best_recourse(&self, inst: &Instance, x: &BinaryVector, c: &[Cost]) -> Result<Recourse> {
        inst.check_len("x", x.len())?;
        recourse_raw(x, c, self.p)
    }

    fn two_stage_optimum(
        &self,
        inst: &Instance,
        first: &[Cost],
        second: &[Cost],
    ) -> Result<(TwoStagePair, i64)> {
        inst.check_len("first-stage costs", first.len())?;
        solve_tst(first, second, self.p)
    }

    fn pairs(&self, inst: &Instance, budget: u64) -> Result<Vec<TwoStagePair>> {
        let n = inst.n();
        let count =
            binomial(n, self.p).saturating_mul(1u64.checked_shl(self.p as u32).unwrap_or(u64::MAX));
        if count > budget {
            return Err(Error::budget("pair enumeration", budget));
        }
        let mut out = Vec::with_capacity(count as usize);
        for chosen in (0..n).combinations(self.p) {
            for mask in 0u64..(1 << self.p) {
                let mut u = BinaryVector::zeros(n);
                let mut v = BinaryVector::zeros(n);
                for (k, &i) in chosen.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        v.set(i, true);
                    } else {
                        u.set(i, true);
                    }
                }
                out.push(TwoStagePair { u, v });
            }
        }
        Ok(out)
    }

    fn recourse_actions(
        &self,
        inst: &Instance,
        x: &BinaryVector,
        budget: u64,
    ) -> Result<Vec<BinaryVector>> {
        let n = inst.n();
        let have = x.count_ones();
        if have > self.p {
            return Err(Error::infeasible("too many first-stage items"));
        }
        let free: Vec<usize> = (0..n).filter(|&i| !x.get(i)).collect();
        if binomial(free.len(), self.p - have) > budget {
            return Err(Error::budget("recourse enumeration", budget));
        }
        Ok(free
            .into_iter()
            .combinations(self.p - have)
            .map(|ys| BinaryVector::from_indices(n, ys))
            .collect())
    }

    fn first_stage_solutions(&self, inst: &Instance, budget: u64) -> Result<Vec<BinaryVector>> {
        let n = inst.n();
        let total = (0..=self.p).fold(0u64, |acc, k| acc.saturating_add(binomial(n, k)));
        if total > budget {
            return Err(Error::budget("first-stage enumeration", budget));
        }
        let mut sets: Vec<Vec<usize>> = (0..=self.p).flat_map(|k| (0..n).combinations(k)).collect();
        sets.sort();
        Ok(sets
            .into_iter()
            .map(|s| BinaryVector::from_indices(n, s))
            .collect())
    }

    fn max_regret(&self, inst: &Instance, x: &BinaryVector) -> Result<RegretCertificate> {
        max_regret(inst, x)
    }

    fn add_pair_rows(&self, inst: &Instance, model: &mut MipModel, u: &[VarId], v: &[VarId]) {
        let card = u.iter().chain(v).map(|&id| (id, 1));
        model.add_constraint("select", card, RowSense::Eq, self.p as i64);
        for i in 0..inst.n() {
            model.add_constraint(
                format!("once_{}", i + 1),
                [(u[i], 1), (v[i], 1)],
                RowSense::Le,
                1,
            );
        }
    }
}
