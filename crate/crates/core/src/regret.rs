//! Structure-agnostic regret evaluation.
//!
//! For a pair `(u, v)` of `Z` the adversary's best scenario is `c_v`: lower
//! bounds on `v`, upper bounds elsewhere. This gives
//!
//! ```text
//! Z_(u,v)(x) = C.x - C.u - lo.v + min_{y in R(x)} c_v.y
//! Z(x)       = max_{(u,v) in Z} Z_(u,v)(x)
//! ```
//!
//! so a worst case over the continuous box is always attained at an extreme
//! point, and evaluating `Z(x)` reduces to a search over pairs.

use crate::error::{Error, Result};
use crate::instance::{BinaryVector, Cost, Instance, RegretCertificate, Scenario, TwoStagePair};

/// Default limit on the number of `(u, v)` pairs [`max_regret_enum`] visits.
pub const DEFAULT_PAIR_BUDGET: u64 = 1_000_000;

/// The extreme scenario `c_v`.
pub fn scenario_from_v(inst: &Instance, v: &BinaryVector) -> Result<Scenario> {
    inst.check_len("v", v.len())?;
    Ok(inst.uncertainty().extreme(|i| !v.get(i)))
}

pub(crate) fn check_first_stage(inst: &Instance, x: &BinaryVector) -> Result<()> {
    inst.check_len("x", x.len())?;
    if !inst.oracle().is_first_stage_feasible(inst, x)? {
        return Err(Error::infeasible(format!(
            "first-stage solution {x} has no recourse action"
        )));
    }
    Ok(())
}

pub(crate) fn check_pair(inst: &Instance, pair: &TwoStagePair) -> Result<()> {
    inst.check_len("pair", pair.len())?;
    if !pair.u.is_disjoint(&pair.v) {
        return Err(Error::input("pair buys an element in both stages"));
    }
    if !inst.oracle().is_complete(inst, &pair.combined())? {
        return Err(Error::input(format!(
            "pair ({}, {}) is not a feasible solution",
            pair.u, pair.v
        )));
    }
    Ok(())
}

/// `Inc(x, c)` and a best recourse.
pub fn incremental(inst: &Instance, x: &BinaryVector, c: &Scenario) -> Result<(BinaryVector, i64)> {
    check_first_stage(inst, x)?;
    inst.check_scenario(c)?;
    let rec = inst.oracle().best_recourse(inst, x, c.costs())?;
    Ok((rec.y, inst.first_stage_cost(x) + rec.cost))
}

/// `Opt(c)` and an optimal pair.
pub fn two_stage(inst: &Instance, c: &Scenario) -> Result<(TwoStagePair, i64)> {
    inst.check_scenario(c)?;
    inst.oracle()
        .two_stage_optimum(inst, inst.first_stage(), c.costs())
}

/// `Inc(x, c) - Opt(c)`.
pub fn regret_under(inst: &Instance, x: &BinaryVector, c: &Scenario) -> Result<i64> {
    let (_, inc) = incremental(inst, x, c)?;
    let (_, opt) = two_stage(inst, c)?;
    Ok(inc - opt)
}

fn pair_value(
    inst: &Instance,
    x: &BinaryVector,
    pair: &TwoStagePair,
) -> Result<(i64, Scenario, BinaryVector)> {
    let c_v = inst.uncertainty().extreme(|i| !pair.v.get(i));
    let rec = inst.oracle().best_recourse(inst, x, c_v.costs())?;
    let lower = inst.uncertainty().lower();
    let value =
        inst.first_stage_cost(x) - pair.u.dot(inst.first_stage()) - pair.v.dot(lower.costs())
            + rec.cost;
    Ok((value, c_v, rec.y))
}

/// `Z_(u,v)(x)`, exactly.
pub fn regret_of_pair(inst: &Instance, x: &BinaryVector, pair: &TwoStagePair) -> Result<i64> {
    check_first_stage(inst, x)?;
    check_pair(inst, pair)?;
    pair_value(inst, x, pair).map(|(v, _, _)| v)
}

/// `Z(x)` by enumerating the pairs the structure reports. Ties keep the
/// first pair in enumeration order.
pub fn max_regret_enum(
    inst: &Instance,
    x: &BinaryVector,
    budget: u64,
) -> Result<RegretCertificate> {
    check_first_stage(inst, x)?;
    let pairs = inst.oracle().pairs(inst, budget)?;
    let mut best: Option<(i64, usize)> = None;
    for (k, pair) in pairs.iter().enumerate() {
        let (value, _, _) = pair_value(inst, x, pair)?;
        if best.is_none_or(|(b, _)| value > b) {
            best = Some((value, k));
        }
    }
    let (value, k) = best.ok_or_else(|| Error::infeasible("the feasible set is empty"))?;
    let witness = pairs[k].clone();
    let (_, worst_scenario, best_recourse) = pair_value(inst, x, &witness)?;
    Ok(RegretCertificate {
        value,
        x: x.clone(),
        witness,
        worst_scenario,
        best_recourse,
    })
}

/// `Z(x)` using the structure's own algorithm (polynomial for selection,
/// enumeration for shortest paths).
pub fn max_regret(inst: &Instance, x: &BinaryVector) -> Result<RegretCertificate> {
    check_first_stage(inst, x)?;
    inst.oracle().max_regret(inst, x)
}

/// First-stage part of an optimal two-stage solution under the midpoint
/// scenario. Costs are doubled (`2C` against `lo + hi`) to stay integral.
pub fn midpoint_heuristic(inst: &Instance) -> Result<BinaryVector> {
    let doubled: Vec<Cost> = inst.first_stage().iter().map(|&c| 2 * c).collect();
    let mid: Vec<Cost> = inst
        .uncertainty()
        .intervals()
        .iter()
        .map(|iv| iv.lo + iv.hi)
        .collect();
    let (pair, _) = inst.oracle().two_stage_optimum(inst, &doubled, &mid)?;
    Ok(pair.u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Interval;

    fn four_items() -> Instance {
        Instance::selection_from_rows(&[(6, 9, 13), (1, 1, 4), (4, 2, 12), (12, 2, 6)], 3).unwrap()
    }

    fn bits(s: &str) -> BinaryVector {
        BinaryVector::parse(s).unwrap()
    }

    #[test]
    fn scenario_from_v_takes_bounds() {
        let inst = Instance::selection(vec![1], vec![Interval::new(1, 4).unwrap()], 1).unwrap();
        assert_eq!(scenario_from_v(&inst, &bits("1")).unwrap().costs(), &[1]);
        assert_eq!(scenario_from_v(&inst, &bits("0")).unwrap().costs(), &[4]);
        let t = four_items();
        assert_eq!(
            scenario_from_v(&t, &bits("0110")).unwrap().costs(),
            &[13, 1, 2, 6]
        );
        assert!(scenario_from_v(&t, &bits("01")).is_err());
    }

    #[test]
    fn single_item_pair_values() {
        let inst = Instance::selection(vec![5], vec![Interval::fixed(3)], 1).unwrap();
        let pair = TwoStagePair::new(bits("0"), bits("1")).unwrap();
        assert_eq!(regret_of_pair(&inst, &bits("0"), &pair).unwrap(), 0);
        assert_eq!(regret_of_pair(&inst, &bits("1"), &pair).unwrap(), 2);
    }

    #[test]
    fn four_items_enumerated_regret() {
        let t = four_items();
        let cert = max_regret_enum(&t, &bits("0110"), DEFAULT_PAIR_BUDGET).unwrap();
        assert_eq!(cert.value, 2);
        assert_eq!(regret_of_pair(&t, &cert.x, &cert.witness).unwrap(), 2);
        assert_eq!(
            max_regret_enum(&t, &bits("1100"), DEFAULT_PAIR_BUDGET)
                .unwrap()
                .value,
            4
        );
    }

    #[test]
    fn no_uncertainty_and_dominant_second_stage_gives_zero() {
        let inst = Instance::selection_from_rows(&[(7, 3, 3), (9, 5, 5), (4, 4, 4)], 2).unwrap();
        assert_eq!(
            max_regret_enum(&inst, &bits("000"), DEFAULT_PAIR_BUDGET)
                .unwrap()
                .value,
            0
        );
    }

    #[test]
    fn infeasible_first_stage_is_rejected() {
        let t = four_items();
        assert!(matches!(
            regret_of_pair(
                &t,
                &bits("1111"),
                &TwoStagePair::new(bits("0000"), bits("1110")).unwrap()
            ),
            Err(Error::Infeasible(_))
        ));
        assert!(matches!(
            max_regret_enum(&t, &bits("1111"), 10),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let t = four_items();
        assert!(matches!(
            max_regret_enum(&t, &bits("0000"), 5),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn midpoint_on_degenerate_box_matches_lower_scenario() {
        let inst = Instance::selection_from_rows(&[(3, 4, 4), (5, 2, 2), (1, 6, 6)], 2).unwrap();
        let mid = midpoint_heuristic(&inst).unwrap();
        let (pair, _) = two_stage(&inst, &inst.uncertainty().lower()).unwrap();
        assert_eq!(mid, pair.u);
    }
}
