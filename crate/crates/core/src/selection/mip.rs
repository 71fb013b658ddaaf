//! Symbolic MIP models for selection, ready for LP export.
//!
//! Indices in names are 1-based: item `i` is `x_i`, alpha value `k` (in
//! ascending order) is `a{k}`.

use super::profiles::{AlphaSet, CoeffTable};
use crate::error::Result;
use crate::instance::{pos, signed, BinaryVector, Instance};
use crate::model_io::{add_pair_vars, MipModel, ObjectiveSense, RowSense};
use crate::regret;

/// The compact model for the whole minmax regret problem:
///
/// ```text
/// min  C.x + z
/// s.t. z + sum_i min(a, hi_i) x_i + p pi_a - sum_i rho_i_a >= p a - sum_i [a - hi_i]_+   for all a
///      pi_a - rho_i_a                    <= C_i                                          for all i, a
///      pi_a - rho_i_a + c*_i(a) x_i      <= lo_i + c*_i(a)                               for all i, a
///      sum_i x_i <= p,  rho >= 0,  x binary
/// ```
///
/// with `c*_i(a) = [a - lo_i]_+ - [a - hi_i]_+`.
pub fn build_compact_mip(inst: &Instance) -> Result<MipModel> {
    let p = super::selection_p(inst)? as i64;
    let n = inst.n();
    let alphas = AlphaSet::new(inst);
    let mut m = MipModel::new("compact minmax regret selection", ObjectiveSense::Minimize);
    m.notes.push(format!(
        "n = {n}, p = {p}, alpha values = {:?}",
        alphas.values()
    ));
    let x: Vec<_> = (1..=n).map(|i| m.binary(format!("x_{i}"))).collect();
    let z = m.free("z");
    let mut obj: Vec<_> = x
        .iter()
        .enumerate()
        .map(|(i, &xi)| (xi, signed(inst.first_stage()[i])))
        .collect();
    obj.push((z, 1));
    m.set_objective(obj, 0);

    for (k, &alpha) in alphas.values().iter().enumerate() {
        let k = k + 1;
        let a = signed(alpha);
        let pi = m.free(format!("pi_a{k}"));
        let rho: Vec<_> = (1..=n).map(|i| m.nonneg(format!("rho_{i}_a{k}"))).collect();
        let mut terms = vec![(z, 1), (pi, p)];
        let mut rhs = p * a;
        for i in 0..n {
            let hi = signed(inst.hi(i));
            terms.push((x[i], a.min(hi)));
            terms.push((rho[i], -1));
            rhs -= pos(a - hi);
        }
        m.add_constraint(format!("zrow_a{k}"), terms, RowSense::Ge, rhs);
        for i in 0..n {
            let (lo, hi) = (signed(inst.lo(i)), signed(inst.hi(i)));
            let star = pos(a - lo) - pos(a - hi);
            m.add_constraint(
                format!("cap_{}_a{k}", i + 1),
                [(pi, 1), (rho[i], -1)],
                RowSense::Le,
                signed(inst.first_stage()[i]),
            );
            m.add_constraint(
                format!("low_{}_a{k}", i + 1),
                [(pi, 1), (rho[i], -1), (x[i], star)],
                RowSense::Le,
                lo + star,
            );
        }
    }
    m.add_constraint("card", x.iter().map(|&xi| (xi, 1)), RowSense::Le, p);
    Ok(m)
}

/// The maximum regret model for a fixed `x`:
///
/// ```text
/// max  C.x - C.u - lo.v + (p - |X|) alpha + sum_i (x_i - 1) beta_i
/// s.t. alpha - beta_i + (hi_i - lo_i) v_i <= hi_i   for all i
///      (u, v) a two-stage selection,  alpha, beta >= 0
/// ```
pub fn build_regret_mip(inst: &Instance, x: &BinaryVector) -> Result<MipModel> {
    let p = super::selection_p(inst)? as i64;
    regret::check_first_stage(inst, x)?;
    let n = inst.n();
    let mut m = MipModel::new("maximum regret of a selection", ObjectiveSense::Maximize);
    m.notes.push(format!("x = {x}"));
    let (u, v) = add_pair_vars(inst, &mut m);
    let alpha = m.nonneg("alpha");
    let beta: Vec<_> = (1..=n).map(|i| m.nonneg(format!("beta_{i}"))).collect();
    let mut obj = vec![(alpha, p - x.count_ones() as i64)];
    for i in 0..n {
        obj.push((u[i], -signed(inst.first_stage()[i])));
        obj.push((v[i], -signed(inst.lo(i))));
        if !x.get(i) {
            obj.push((beta[i], -1));
        }
    }
    m.set_objective(obj, inst.first_stage_cost(x));
    for i in 0..n {
        let (lo, hi) = (signed(inst.lo(i)), signed(inst.hi(i)));
        m.add_constraint(
            format!("dual_{}", i + 1),
            [(alpha, 1), (beta[i], -1), (v[i], hi - lo)],
            RowSense::Le,
            hi,
        );
    }
    Ok(m)
}

/// `P(pi)` as a model: `min z` subject to `sum_i omega_i(a) x_i - z <= -nu(a)`
/// per alpha and `sum_i x_i <= p`.
pub fn build_p_pi_mip(inst: &Instance, table: &CoeffTable) -> Result<MipModel> {
    let p = super::selection_p(inst)? as i64;
    let n = inst.n();
    let mut m = MipModel::new("profile program", ObjectiveSense::Minimize);
    m.notes.push(format!(
        "profile ({}, {}), pi = {:?}",
        table.profile.ck,
        table.profile.cl,
        table.profile.values()
    ));
    let x: Vec<_> = (1..=n).map(|i| m.binary(format!("x_{i}"))).collect();
    let z = m.free("z");
    m.set_objective([(z, 1)], 0);
    for (k, row) in table.rows.iter().enumerate() {
        let mut terms: Vec<_> = x.iter().zip(&row.omega).map(|(&xi, &w)| (xi, w)).collect();
        terms.push((z, -1));
        m.add_constraint(format!("row_a{}", k + 1), terms, RowSense::Le, -row.nu);
    }
    m.add_constraint("card", x.iter().map(|&xi| (xi, 1)), RowSense::Le, p);
    Ok(m)
}
