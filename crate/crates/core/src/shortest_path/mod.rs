//! Two-stage shortest path. Arcs are the ground elements; a solution is
//! either a simple `s`-`t` path ([`Variant::Simple`]) or any arc set in which
//! `t` is reachable from `s` ([`Variant::Relaxed`]).
//!
//! The two-stage problem and the relaxed incremental problem are shortest
//! path computations. The simple incremental problem, maximum regret and
//! the full minmax regret problem are hard, and are solved exactly by
//! enumerating simple paths.

mod graph;
mod reductions;

pub use graph::{PathCatalog, SpGraph, Variant, DEFAULT_CATALOG_CAP};
pub use reductions::{
    gen_hamiltonian_inc, gen_partition_regret, gen_partition_tstr, two_route_instance,
    TWO_ROUTE_BIG,
};

use std::collections::BTreeSet;

use crate::engine::{solve_colgen, ColGenOptions};
use crate::error::{Error, Result};
use crate::instance::{
    signed, BinaryVector, Cost, Instance, Recourse, RegretCertificate, Scenario, TwoStagePair,
};
use crate::model_io::{MipModel, RowSense, VarId};
use crate::regret;
use crate::structure::StructureOracle;

pub(crate) fn graph_of(inst: &Instance) -> Result<&SpGraph> {
    inst.as_graph().ok_or_else(|| {
        Error::Unsupported("this operation needs a shortest-path instance".to_string())
    })
}

fn no_path() -> Error {
    Error::infeasible("t is not reachable from s")
}

fn tst(g: &SpGraph, first: &[Cost], second: &[Cost]) -> Result<(TwoStagePair, i64)> {
    let (path, cost) = g
        .shortest_path(|k| signed(first[k].min(second[k])))
        .ok_or_else(no_path)?;
    let n = g.arc_count();
    let mut u = BinaryVector::zeros(n);
    let mut v = BinaryVector::zeros(n);
    for k in path {
        if first[k] <= second[k] {
            u.set(k, true);
        } else {
            v.set(k, true);
        }
    }
    Ok((TwoStagePair { u, v }, cost))
}

/// Optimal two-stage path under known costs: a shortest path under
/// `min(C_i, c_i)`, bought in stage one wherever `C_i <= c_i`. Optimal for
/// both variants.
pub fn solve_tst_sp(inst: &Instance, c: &Scenario) -> Result<(TwoStagePair, i64)> {
    let g = graph_of(inst)?;
    inst.check_scenario(c)?;
    tst(g, inst.first_stage(), c.costs())
}

fn relaxed_recourse(g: &SpGraph, x: &BinaryVector, c: &[Cost]) -> Result<Recourse> {
    let (path, cost) = g
        .shortest_path(|k| if x.get(k) { 0 } else { signed(c[k]) })
        .ok_or_else(no_path)?;
    let y = BinaryVector::from_indices(x.len(), path.into_iter().filter(|&k| !x.get(k)));
    Ok(Recourse { y, cost })
}

fn simple_recourse(g: &SpGraph, x: &BinaryVector, c: &[Cost]) -> Result<Recourse> {
    let catalog = g.catalog()?;
    let mut best: Option<Recourse> = None;
    for p in catalog.supersets_of(x) {
        let y = p.difference(x);
        let cost = y.dot(c);
        if best.as_ref().is_none_or(|b| cost < b.cost) {
            best = Some(Recourse { y, cost });
        }
    }
    best.ok_or_else(|| Error::infeasible(format!("{x} does not extend to a simple s-t path")))
}

/// Relaxed incremental problem: shortest path with the arcs of `x` free;
/// the recourse buys the remaining path arcs.
pub fn solve_inc_relaxed(
    inst: &Instance,
    x: &BinaryVector,
    c: &Scenario,
) -> Result<(BinaryVector, i64)> {
    let g = graph_of(inst)?;
    if g.variant() != Variant::Relaxed {
        return Err(Error::Unsupported(
            "relaxed recourse on a simple-path instance".into(),
        ));
    }
    regret::incremental(inst, x, c)
}

/// Simple incremental problem: the cheapest simple path containing `x`.
pub fn solve_inc_simple(
    inst: &Instance,
    x: &BinaryVector,
    c: &Scenario,
) -> Result<(BinaryVector, i64)> {
    let g = graph_of(inst)?;
    if g.variant() != Variant::Simple {
        return Err(Error::Unsupported(
            "simple recourse on a relaxed instance".into(),
        ));
    }
    regret::incremental(inst, x, c)
}

/// Exact `Z(x)` by enumerating path splits.
pub fn max_regret_sp(inst: &Instance, x: &BinaryVector) -> Result<RegretCertificate> {
    graph_of(inst)?;
    regret::max_regret_enum(inst, x, regret::DEFAULT_PAIR_BUDGET)
}

/// Exact minmax regret by row-and-column generation.
pub fn solve_tstr_sp(inst: &Instance) -> Result<(i64, BinaryVector)> {
    graph_of(inst)?;
    let res = solve_colgen(inst, &ColGenOptions::default())?;
    Ok((res.value, res.x))
}

fn subsets_of_paths(catalog: &PathCatalog, budget: u64) -> Result<Vec<BinaryVector>> {
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    for k in 0..catalog.len() {
        let path = catalog.path(k);
        if path.len() >= 63 || (1u64 << path.len()) > budget {
            return Err(Error::budget("first-stage enumeration", budget));
        }
        for mask in 0u64..(1 << path.len()) {
            out.insert(
                path.iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &a)| a)
                    .collect(),
            );
            if out.len() as u64 > budget {
                return Err(Error::budget("first-stage enumeration", budget));
            }
        }
    }
    let n = catalog.sets().first().map_or(0, |s| s.len());
    Ok(out
        .into_iter()
        .map(|s| BinaryVector::from_indices(n, s))
        .collect())
}

impl StructureOracle for SpGraph {
    fn name(&self) -> &'static str {
        match self.variant() {
            Variant::Simple => "shortest_path/simple",
            Variant::Relaxed => "shortest_path/relaxed",
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.arc_count() != n {
            return Err(Error::input(format!(
                "graph has {} arcs for {n} elements",
                self.arc_count()
            )));
        }
        Ok(())
    }

    fn is_complete(&self, inst: &Instance, s: &BinaryVector) -> Result<bool> {
        inst.check_len("solution", s.len())?;
        Ok(match self.variant() {
            Variant::Simple => self.is_simple_path(s),
            Variant::Relaxed => self.connects(|k| s.get(k)),
        })
    }

    fn is_first_stage_feasible(&self, inst: &Instance, x: &BinaryVector) -> Result<bool> {
        inst.check_len("x", x.len())?;
        match self.variant() {
            Variant::Simple => Ok(self.catalog()?.supersets_of(x).next().is_some()),
            Variant::Relaxed => Ok(self.connects(|_| true)),
        }
    }

    fn prefix_feasible(&self, _inst: &Instance, prefix: &[bool]) -> Result<bool> {
        match self.variant() {
            Variant::Simple => {
                let catalog = self.catalog()?;
                Ok(catalog
                    .sets()
                    .iter()
                    .any(|p| prefix.iter().enumerate().all(|(k, &b)| !b || p.get(k))))
            }
            Variant::Relaxed => Ok(self.connects(|_| true)),
        }
    }

    fn best_recourse(&self, inst: &Instance, x: &BinaryVector, c: &[Cost]) -> Result<Recourse> {
        inst.check_len("x", x.len())?;
        match self.variant() {
            Variant::Simple => simple_recourse(self, x, c),
            Variant::Relaxed => relaxed_recourse(self, x, c),
        }
    }

    fn two_stage_optimum(
        &self,
        inst: &Instance,
        first: &[Cost],
        second: &[Cost],
    ) -> Result<(TwoStagePair, i64)> {
        inst.check_len("first-stage costs", first.len())?;
        inst.check_len("second-stage costs", second.len())?;
        tst(self, first, second)
    }

    /// Splits of simple paths. Under either variant every feasible set
    /// contains a simple path, so these dominate all other pairs.
    fn pairs(&self, inst: &Instance, budget: u64) -> Result<Vec<TwoStagePair>> {
        let catalog = self.catalog()?;
        let n = inst.n();
        let mut out = Vec::new();
        for k in 0..catalog.len() {
            let path = catalog.path(k);
            if path.len() >= 63 || out.len() as u64 + (1u64 << path.len()) > budget {
                return Err(Error::budget("pair enumeration", budget));
            }
            for mask in 0u64..(1 << path.len()) {
                let mut u = BinaryVector::zeros(n);
                let mut v = BinaryVector::zeros(n);
                for (j, &a) in path.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        v.set(a, true);
                    } else {
                        u.set(a, true);
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
        inst.check_len("x", x.len())?;
        let catalog = self.catalog()?;
        let ys: BTreeSet<BinaryVector> = match self.variant() {
            Variant::Simple => catalog.supersets_of(x).map(|p| p.difference(x)).collect(),
            Variant::Relaxed => catalog.sets().iter().map(|p| p.difference(x)).collect(),
        };
        if ys.len() as u64 > budget {
            return Err(Error::budget("recourse enumeration", budget));
        }
        Ok(ys.into_iter().collect())
    }

    fn first_stage_solutions(&self, inst: &Instance, budget: u64) -> Result<Vec<BinaryVector>> {
        let n = inst.n();
        match self.variant() {
            Variant::Simple => subsets_of_paths(&*self.catalog()?, budget),
            Variant::Relaxed => {
                if !self.connects(|_| true) {
                    return Ok(Vec::new());
                }
                if n >= 63 || (1u64 << n) > budget {
                    return Err(Error::budget("first-stage enumeration", budget));
                }
                let mut all: Vec<BinaryVector> = (0u64..(1 << n))
                    .map(|mask| {
                        BinaryVector::from_indices(n, (0..n).filter(|&k| mask >> k & 1 == 1))
                    })
                    .collect();
                all.sort_by_key(|x| x.support().collect::<Vec<_>>());
                Ok(all)
            }
        }
    }

    fn max_regret(&self, inst: &Instance, x: &BinaryVector) -> Result<RegretCertificate> {
        regret::max_regret_enum(inst, x, regret::DEFAULT_PAIR_BUDGET)
    }

    /// Unit flow conservation on `u + v` and `u_k + v_k <= 1`.
    fn add_pair_rows(&self, _inst: &Instance, model: &mut MipModel, u: &[VarId], v: &[VarId]) {
        for node in 0..self.node_count() {
            let mut terms = Vec::new();
            for (k, &(a, b)) in self.arcs().iter().enumerate() {
                if a == node {
                    terms.extend([(u[k], 1), (v[k], 1)]);
                }
                if b == node {
                    terms.extend([(u[k], -1), (v[k], -1)]);
                }
            }
            let rhs = if node == self.source() {
                1
            } else if node == self.target() {
                -1
            } else {
                0
            };
            model.add_constraint(format!("flow_{node}"), terms, RowSense::Eq, rhs);
        }
        for k in 0..self.arc_count() {
            model.add_constraint(
                format!("once_{}", k + 1),
                [(u[k], 1), (v[k], 1)],
                RowSense::Le,
                1,
            );
        }
    }
}
