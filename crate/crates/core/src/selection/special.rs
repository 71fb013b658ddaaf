//! Polynomially solvable cases of minmax regret selection.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::instance::{BinaryVector, Cost, Instance};

/// Default bound on the number of distinct values per cost set.
pub const DEFAULT_DISTINCT_LIMIT: usize = 3;

/// Default cap on enumerated compositions.
pub const DEFAULT_COMPOSITION_BUDGET: u64 = 1_000_000;

/// `p = n`: every item is bought in one of the two stages, so items are
/// independent. Item `i` goes to stage one iff
/// `C_i - min(C_i, lo_i) <= hi_i - min(C_i, hi_i)`.
pub fn solve_p_equals_n(inst: &Instance) -> Result<BinaryVector> {
    let p = super::selection_p(inst)?;
    if p != inst.n() {
        return Err(Error::input(format!(
            "needs p = n, got p = {p}, n = {}",
            inst.n()
        )));
    }
    let bits = (0..inst.n())
        .map(|i| {
            let (c, lo, hi) = (inst.first_stage()[i], inst.lo(i), inst.hi(i));
            c - c.min(lo) <= hi - c.min(hi)
        })
        .collect();
    Ok(BinaryVector::from_bits(bits))
}

/// All vectors `l` with `sum l = total` and `0 <= l_j <= caps[j]`, in
/// lexicographic order.
pub fn compositions(total: usize, caps: &[usize], budget: u64) -> Result<Vec<Vec<usize>>> {
    fn rec(
        j: usize,
        left: usize,
        caps: &[usize],
        suffix_cap: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        budget: u64,
    ) -> Result<()> {
        if j == caps.len() {
            if left == 0 {
                if out.len() as u64 >= budget {
                    return Err(Error::budget("composition", budget));
                }
                out.push(cur.clone());
            }
            return Ok(());
        }
        let rest = suffix_cap[j + 1];
        let low = left.saturating_sub(rest);
        for l in low..=caps[j].min(left) {
            cur.push(l);
            rec(j + 1, left - l, caps, suffix_cap, cur, out, budget)?;
            cur.pop();
        }
        Ok(())
    }
    let mut suffix_cap = vec![0; caps.len() + 1];
    for j in (0..caps.len()).rev() {
        suffix_cap[j] = suffix_cap[j + 1] + caps[j];
    }
    let mut out = Vec::new();
    if total <= suffix_cap[0] {
        rec(
            0,
            total,
            caps,
            &suffix_cap,
            &mut Vec::new(),
            &mut out,
            budget,
        )?;
    }
    Ok(out)
}

fn distinct(values: impl Iterator<Item = Cost>) -> usize {
    values.collect::<BTreeSet<_>>().len()
}

/// Two of the three cost sets have at most `limit` distinct values. Items
/// agreeing on both small sets form a group and differ in one coordinate
/// only; within a group the first stage takes the items that are best by
/// that coordinate, so only the per-group counts (`l_1, ..., l_m`, summing
/// to at most `p`) need to be enumerated.
pub fn solve_few_distinct(inst: &Instance, limit: usize) -> Result<(i64, BinaryVector)> {
    let p = super::selection_p(inst)?;
    let n = inst.n();
    let first = inst.first_stage();
    let small_c = distinct(first.iter().copied()) <= limit;
    let small_lo = distinct((0..n).map(|i| inst.lo(i))) <= limit;
    let small_hi = distinct((0..n).map(|i| inst.hi(i))) <= limit;

    // Group key and the within-group order (best first).
    let (key, rank): (
        Box<dyn Fn(usize) -> (Cost, Cost)>,
        Box<dyn Fn(usize) -> (i64, usize)>,
    ) = if small_c && small_lo {
        (
            Box::new(|i| (first[i], inst.lo(i))),
            Box::new(|i| (-(inst.hi(i) as i64), i)),
        )
    } else if small_c && small_hi {
        (
            Box::new(|i| (first[i], inst.hi(i))),
            Box::new(|i| (-(inst.lo(i) as i64), i)),
        )
    } else if small_lo && small_hi {
        (
            Box::new(|i| (inst.lo(i), inst.hi(i))),
            Box::new(|i| (first[i] as i64, i)),
        )
    } else {
        return Err(Error::input(format!(
            "fewer than two cost sets have at most {limit} distinct values"
        )));
    };

    let mut groups: BTreeMap<(Cost, Cost), Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        groups.entry(key(i)).or_default().push(i);
    }
    let groups: Vec<Vec<usize>> = groups
        .into_values()
        .map(|mut g| {
            g.sort_by_key(|&i| rank(i));
            g
        })
        .collect();
    let caps: Vec<usize> = groups.iter().map(Vec::len).collect();

    let mut best: Option<(i64, BinaryVector)> = None;
    let mut seen = 0u64;
    for total in 0..=p {
        for comp in compositions(total, &caps, DEFAULT_COMPOSITION_BUDGET - seen)? {
            seen += 1;
            let x = BinaryVector::from_indices(
                n,
                groups
                    .iter()
                    .zip(&comp)
                    .flat_map(|(g, &l)| g[..l].iter().copied()),
            );
            let z = super::max_regret(inst, &x)?.value;
            if best.as_ref().is_none_or(|(b, _)| z < *b) {
                best = Some((z, x));
            }
        }
    }
    Ok(best.expect("the empty composition is always present"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_equals_n_rule() {
        let inst = Instance::selection_from_rows(&[(5, 3, 3)], 1).unwrap();
        assert_eq!(solve_p_equals_n(&inst).unwrap().to_string(), "0");
        let cheap = Instance::selection_from_rows(&[(1, 3, 9), (2, 2, 4), (0, 5, 5)], 3).unwrap();
        assert_eq!(solve_p_equals_n(&cheap).unwrap().to_string(), "111");
        let wrong = Instance::selection_from_rows(&[(1, 3, 9), (2, 2, 4)], 1).unwrap();
        assert!(solve_p_equals_n(&wrong).is_err());
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(3, &[5], 10).unwrap(), vec![vec![3]]);
        assert_eq!(
            compositions(2, &[2, 2], 10).unwrap(),
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
        assert_eq!(compositions(4, &[4, 4, 4], 100).unwrap().len(), 15);
        assert!(compositions(3, &[1, 1], 10).unwrap().is_empty());
        assert!(matches!(
            compositions(4, &[4, 4, 4], 5),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn rejects_unmet_precondition() {
        let inst = Instance::selection_from_rows(
            &[(1, 1, 11), (2, 2, 12), (3, 3, 13), (4, 4, 14), (5, 5, 15)],
            2,
        )
        .unwrap();
        assert!(matches!(solve_few_distinct(&inst, 3), Err(Error::Input(_))));
    }
}
