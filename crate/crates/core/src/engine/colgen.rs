//! Row-and-column generation for the two-stage minmax regret problem.
//!
//! The master problem minimizes, over first-stage solutions `x`,
//!
//! ```text
//! C.x + max_{(u,v) in pool} ( min_{y in R(x)} c_v.y - C.u - lo.v )
//! ```
//!
//! which is `max_{pool} Z_(u,v)(x)` and thus a lower bound on the optimum.
//! Separation computes `Z(x)` for the master's solution, giving an upper
//! bound and the pair to add when the bounds have not met.

use std::collections::HashSet;

use super::bnb::{bnb_minimize, BinaryProgram, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::instance::{BinaryVector, Cost, Instance, TwoStagePair};
use crate::regret;

pub const DEFAULT_ITERATION_CAP: usize = 10_000;

/// The subset `Z'` of pairs the master currently knows.
#[derive(Debug, Clone, Default)]
pub struct CutPool {
    pairs: Vec<TwoStagePair>,
    seen: HashSet<TwoStagePair>,
}

impl CutPool {
    pub fn new() -> Self {
        CutPool::default()
    }

    /// Adds a pair; returns false if it was already present.
    pub fn insert(&mut self, pair: TwoStagePair) -> bool {
        if self.seen.contains(&pair) {
            return false;
        }
        self.seen.insert(pair.clone());
        self.pairs.push(pair);
        true
    }

    pub fn contains(&self, pair: &TwoStagePair) -> bool {
        self.seen.contains(pair)
    }

    pub fn pairs(&self) -> &[TwoStagePair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// One master/separation round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IterationRecord {
    pub iteration: usize,
    pub lower_bound: i64,
    pub upper_bound: i64,
    pub pool_size: usize,
}

impl IterationRecord {
    /// `iteration<TAB>LB<TAB>UB<TAB>pool`
    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.iteration, self.lower_bound, self.upper_bound, self.pool_size
        )
    }
}

#[derive(Debug, Clone)]
pub struct ColGenState {
    pub lower_bound: i64,
    pub upper_bound: i64,
    pub incumbent: BinaryVector,
    pub iterations: usize,
    pub master_nodes: u64,
    pub history: Vec<IterationRecord>,
}

#[derive(Debug, Clone, Copy)]
pub struct ColGenOptions {
    pub tol: i64,
    pub max_iterations: usize,
    pub node_budget: u64,
}

impl Default for ColGenOptions {
    fn default() -> Self {
        ColGenOptions {
            tol: 0,
            max_iterations: DEFAULT_ITERATION_CAP,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ColGenResult {
    pub value: i64,
    pub x: BinaryVector,
    pub state: ColGenState,
}

#[derive(Debug, Clone)]
pub struct MasterSolution {
    pub x: BinaryVector,
    pub value: i64,
    pub nodes: u64,
}

struct Cut {
    scenario: Vec<Cost>,
    constant: i64,
}

struct Master<'a> {
    inst: &'a Instance,
    cuts: Vec<Cut>,
    best_constant: i64,
}

impl Master<'_> {
    fn fixed_cost(&self, prefix: &[bool]) -> i64 {
        prefix
            .iter()
            .zip(self.inst.first_stage())
            .filter(|(&b, _)| b)
            .map(|(_, &c)| c as i64)
            .sum()
    }
}

impl BinaryProgram for Master<'_> {
    fn len(&self) -> usize {
        self.inst.n()
    }

    fn lower_bound(&self, prefix: &[bool]) -> Result<Option<i64>> {
        if !self.inst.oracle().prefix_feasible(self.inst, prefix)? {
            return Ok(None);
        }
        // Recourse costs are nonnegative and C.x only grows with more ones.
        Ok(Some(self.fixed_cost(prefix) + self.best_constant))
    }

    fn evaluate(&self, x: &[bool]) -> Result<Option<i64>> {
        let x = BinaryVector::from_bits(x.to_vec());
        let oracle = self.inst.oracle();
        if !oracle.is_first_stage_feasible(self.inst, &x)? {
            return Ok(None);
        }
        let mut worst = i64::MIN;
        for cut in &self.cuts {
            let rec = oracle.best_recourse(self.inst, &x, &cut.scenario)?;
            worst = worst.max(rec.cost + cut.constant);
        }
        Ok(Some(self.inst.first_stage_cost(&x) + worst))
    }
}

/// Solves the master problem over `pool` exactly.
pub fn master_solve(inst: &Instance, pool: &CutPool, node_budget: u64) -> Result<MasterSolution> {
    if pool.is_empty() {
        return Err(Error::input("the master problem needs at least one pair"));
    }
    let lower = inst.uncertainty().lower();
    let cuts: Vec<Cut> = pool
        .pairs()
        .iter()
        .map(|pair| Cut {
            scenario: inst.uncertainty().extreme(|i| !pair.v.get(i)).0,
            constant: -pair.u.dot(inst.first_stage()) - pair.v.dot(lower.costs()),
        })
        .collect();
    let best_constant = cuts.iter().map(|c| c.constant).max().unwrap_or(i64::MIN);
    let master = Master {
        inst,
        cuts,
        best_constant,
    };
    let out = bnb_minimize(&master, node_budget)?
        .ok_or_else(|| Error::infeasible("no feasible first-stage solution"))?;
    Ok(MasterSolution {
        x: out.solution,
        value: out.value,
        nodes: out.nodes,
    })
}

/// Separation: the pair attaining `Z(x)` and its value.
pub fn separate(inst: &Instance, x: &BinaryVector) -> Result<(TwoStagePair, i64)> {
    let cert = regret::max_regret(inst, x)?;
    Ok((cert.witness, cert.value))
}

/// Alternates master and separation until `upper - lower <= tol`.
pub fn solve_colgen(inst: &Instance, options: &ColGenOptions) -> Result<ColGenResult> {
    solve_colgen_traced(inst, options, |_| {})
}

/// [`solve_colgen`], calling `on_iteration` after every round.
pub fn solve_colgen_traced(
    inst: &Instance,
    options: &ColGenOptions,
    mut on_iteration: impl FnMut(&IterationRecord),
) -> Result<ColGenResult> {
    let mut pool = CutPool::new();
    let (seed, _) = inst.oracle().two_stage_optimum(
        inst,
        inst.first_stage(),
        inst.uncertainty().upper().costs(),
    )?;
    pool.insert(seed);

    let mut lower_bound = i64::MIN;
    let mut upper_bound = i64::MAX;
    let mut incumbent: Option<BinaryVector> = None;
    let mut history = Vec::new();
    let mut master_nodes = 0;

    for iteration in 1..=options.max_iterations {
        let master = master_solve(inst, &pool, options.node_budget)?;
        master_nodes += master.nodes;
        lower_bound = lower_bound.max(master.value);

        let (pair, z) = separate(inst, &master.x)?;
        if z < upper_bound {
            upper_bound = z;
            incumbent = Some(master.x.clone());
        }
        if lower_bound > upper_bound {
            return Err(Error::Internal(format!(
                "lower bound {lower_bound} exceeds upper bound {upper_bound}"
            )));
        }
        let converged = upper_bound.saturating_sub(lower_bound) <= options.tol;
        if !converged && !pool.insert(pair) {
            return Err(Error::Internal(format!(
                "separation returned a known pair with gap {}",
                upper_bound - lower_bound
            )));
        }
        let record = IterationRecord {
            iteration,
            lower_bound,
            upper_bound,
            pool_size: pool.len(),
        };
        on_iteration(&record);
        history.push(record);
        if converged {
            let x = incumbent.expect("upper bound set implies an incumbent");
            let state = ColGenState {
                lower_bound,
                upper_bound,
                incumbent: x.clone(),
                iterations: iteration,
                master_nodes,
                history,
            };
            return Ok(ColGenResult {
                value: upper_bound,
                x,
                state,
            });
        }
    }
    Err(Error::budget(
        "column generation iteration",
        options.max_iterations as u64,
    ))
}
