//! Candidate dual price profiles `pi(alpha)` and the coefficient tables that
//! turn the compact model into one small 0-1 program per profile.
//!
//! For a fixed first-stage `x`, an optimal `pi(alpha)` is the `p`-th smallest
//! value of `r_i(alpha, x_i)`. Every such function is constant up to the
//! diagonal, follows it, and leaves at another constant, so it has the form
//! `max(k, min(alpha, l))` with `k` in `A = {C_i} + {lo_i}` and `l` in
//! `B = A + {hi_i}`.

use std::collections::BTreeSet;
use std::collections::HashSet;

use crate::instance::{pos, signed, BinaryVector, Cost, Instance};

/// `lo + [alpha - lo]_+ - [alpha - hi]_+`, i.e. `alpha` clamped to `[lo, hi]`.
pub fn clamp_cost(alpha: Cost, lo: Cost, hi: Cost) -> Cost {
    alpha.max(lo).min(hi)
}

/// The sorted, deduplicated interval endpoints; the adversary's dual price
/// may be restricted to these values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaSet {
    values: Vec<Cost>,
}

impl AlphaSet {
    pub fn new(inst: &Instance) -> Self {
        let set: BTreeSet<Cost> = inst
            .uncertainty()
            .intervals()
            .iter()
            .flat_map(|iv| [iv.lo, iv.hi])
            .collect();
        AlphaSet {
            values: set.into_iter().collect(),
        }
    }

    pub fn values(&self) -> &[Cost] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn position(&self, alpha: Cost) -> Option<usize> {
        self.values.binary_search(&alpha).ok()
    }
}

/// `pi(alpha) = max(ck, min(alpha, cl))` tabulated over the alpha set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiProfile {
    pub ck: Cost,
    pub cl: Cost,
    pi: Vec<Cost>,
}

impl PiProfile {
    pub fn new(alphas: &AlphaSet, ck: Cost, cl: Cost) -> Self {
        debug_assert!(ck <= cl);
        let pi = alphas.values().iter().map(|&a| ck.max(a.min(cl))).collect();
        PiProfile { ck, cl, pi }
    }

    /// Values aligned with [`AlphaSet::values`].
    pub fn values(&self) -> &[Cost] {
        &self.pi
    }

    pub fn pi_at(&self, k: usize) -> Cost {
        self.pi[k]
    }
}

/// Every `(k, l)` in `A x B` with `k <= l`, in lexicographic order.
pub fn candidate_pairs(inst: &Instance) -> Vec<(Cost, Cost)> {
    let a: BTreeSet<Cost> = (0..inst.n())
        .flat_map(|i| [inst.first_stage()[i], inst.lo(i)])
        .collect();
    let mut b = a.clone();
    b.extend((0..inst.n()).map(|i| inst.hi(i)));
    let mut out = Vec::new();
    for &k in &a {
        for &l in b.range(k..) {
            out.push((k, l));
        }
    }
    out
}

/// Candidate profiles with duplicates (same tabulated `pi`) removed; the
/// lexicographically first pair represents each class.
pub fn enumerate_pi_profiles(inst: &Instance) -> Vec<PiProfile> {
    let alphas = AlphaSet::new(inst);
    let mut seen = HashSet::new();
    candidate_pairs(inst)
        .into_iter()
        .map(|(k, l)| PiProfile::new(&alphas, k, l))
        .filter(|prof| seen.insert(prof.pi.clone()))
        .collect()
}

/// `r_i(alpha, x_i) = min(C_i, lo_i + c*_i(alpha) (1 - x_i))` where
/// `c*_i(alpha) = [alpha - lo_i]_+ - [alpha - hi_i]_+`.
pub fn rank_function_r(inst: &Instance, i: usize, alpha: Cost, xi: bool) -> Cost {
    let (lo, hi) = (inst.lo(i), inst.hi(i));
    let second = if xi { lo } else { clamp_cost(alpha, lo, hi) };
    inst.first_stage()[i].min(second)
}

/// Coefficients of one alpha row: `z >= nu + sum_i omega_i x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffRow {
    pub alpha: Cost,
    pub pi: Cost,
    pub nu: i64,
    pub omega: Vec<i64>,
    pub rho_lo: Vec<i64>,
    pub rho_hi: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    pub profile: PiProfile,
    pub p: usize,
    pub rows: Vec<CoeffRow>,
}

/// Builds the table of `nu`, `omega`, `rho_lo`, `rho_hi` for `profile`:
///
/// ```text
/// rho_lo_i = max(0, pi - C_i, pi - lo_i - [a - lo_i]_+ + [a - hi_i]_+)
/// rho_hi_i = max(0, pi - C_i, pi - lo_i)
/// nu       = p a - sum_i [a - hi_i]_+ - p pi + sum_i rho_lo_i
/// omega_i  = C_i - a + [a - hi_i]_+ + rho_hi_i - rho_lo_i
/// ```
pub fn coefficients(inst: &Instance, profile: &PiProfile) -> CoeffTable {
    let p = super::selection_p(inst).expect("coefficients need a selection instance");
    let alphas = AlphaSet::new(inst);
    debug_assert_eq!(alphas.len(), profile.values().len());
    let n = inst.n();
    let first = inst.first_stage();
    let rows = alphas
        .values()
        .iter()
        .zip(profile.values())
        .map(|(&alpha, &pi)| {
            let (a, pi_s) = (signed(alpha), signed(pi));
            let mut row = CoeffRow {
                alpha,
                pi,
                nu: 0,
                omega: Vec::with_capacity(n),
                rho_lo: Vec::with_capacity(n),
                rho_hi: Vec::with_capacity(n),
            };
            let mut over_hi = 0;
            let mut rho_lo_sum = 0;
            for i in 0..n {
                let (c, lo, hi) = (signed(first[i]), signed(inst.lo(i)), signed(inst.hi(i)));
                let excess_hi = pos(a - hi);
                let rl = 0.max(pi_s - c).max(pi_s - lo - pos(a - lo) + excess_hi);
                let rh = 0.max(pi_s - c).max(pi_s - lo);
                over_hi += excess_hi;
                rho_lo_sum += rl;
                row.omega.push(c - a + excess_hi + rh - rl);
                row.rho_lo.push(rl);
                row.rho_hi.push(rh);
            }
            row.nu = p as i64 * a - over_hi - p as i64 * pi_s + rho_lo_sum;
            row
        })
        .collect();
    CoeffTable {
        profile: profile.clone(),
        p,
        rows,
    }
}

impl CoeffTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `F(X) = max_alpha (nu + sum_{i in X} omega_i)` over an index list.
    pub fn f_of(&self, items: &[usize]) -> i64 {
        self.rows
            .iter()
            .map(|r| r.nu + items.iter().map(|&i| r.omega[i]).sum::<i64>())
            .max()
            .expect("nonempty table")
    }

    /// Per-row partial sums `nu + sum_{i in X} omega_i`.
    pub(crate) fn row_sums(&self, items: &[usize]) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.nu + items.iter().map(|&i| r.omega[i]).sum::<i64>())
            .collect()
    }

    /// `F(X + {j})` from the row sums of `X`.
    pub(crate) fn f_with(&self, sums: &[i64], j: usize) -> i64 {
        self.rows
            .iter()
            .zip(sums)
            .map(|(r, s)| s + r.omega[j])
            .max()
            .expect("nonempty table")
    }
}

/// `F(X)` for the support of `x`.
pub fn eval_f(table: &CoeffTable, x: &BinaryVector) -> i64 {
    let items: Vec<usize> = x.support().collect();
    table.f_of(&items)
}
