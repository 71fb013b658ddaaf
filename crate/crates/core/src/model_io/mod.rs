//! Instance and certificate serialization and LP-format model export.

mod json;
mod lp;

pub use json::{
    emit_instance, parse_certificate, parse_instance, parse_instance_file, write_certificate,
    CertificateFile, GraphBlock, InstanceFile, ProblemKind,
};
pub use lp::{export_lp, Constraint, MipModel, ObjectiveSense, RowSense, VarId, VarKind, Variable};

use crate::instance::{signed, BinaryVector, Instance};

/// Adds `u_i`, `v_i` binaries (1-based names) and the structure's rows
/// forcing `(u, v)` into `Z`.
pub(crate) fn add_pair_vars(inst: &Instance, model: &mut MipModel) -> (Vec<VarId>, Vec<VarId>) {
    let n = inst.n();
    let u: Vec<VarId> = (1..=n).map(|i| model.binary(format!("u_{i}"))).collect();
    let v: Vec<VarId> = (1..=n).map(|i| model.binary(format!("v_{i}"))).collect();
    inst.oracle().add_pair_rows(inst, model, &u, &v);
    (u, v)
}

/// The adversarial model computing `Z(x)` by row generation:
///
/// ```text
/// max  C.x - C.u - lo.v + z
/// s.t. z <= sum_i (lo_i v_i + hi_i (1 - v_i)) y_i   for each supplied y
///      (u, v) in Z
/// ```
///
/// With every `y` of `R(x)` supplied the optimum is `Z(x)`; with none, `z`
/// is unbounded and the model is flagged.
pub fn build_adversarial_mip(inst: &Instance, x: &BinaryVector, rows: &[BinaryVector]) -> MipModel {
    let mut model = MipModel::new("adversarial_regret", ObjectiveSense::Maximize);
    let (u, v) = add_pair_vars(inst, &mut model);
    let z = model.free("z");
    let c = inst.first_stage();
    let mut objective: Vec<(VarId, i64)> = Vec::new();
    for i in 0..inst.n() {
        objective.push((u[i], -signed(c[i])));
        objective.push((v[i], -signed(inst.lo(i))));
    }
    objective.push((z, 1));
    model.set_objective(objective, inst.first_stage_cost(x));
    model.notes.push(format!("first-stage solution x = {x}"));
    for (k, y) in rows.iter().enumerate() {
        let mut terms = vec![(z, 1)];
        let mut rhs = 0;
        for i in y.support() {
            terms.push((v[i], signed(inst.hi(i)) - signed(inst.lo(i))));
            rhs += signed(inst.hi(i));
        }
        model.add_constraint(format!("y{}", k + 1), terms, RowSense::Le, rhs);
    }
    if rows.is_empty() {
        model.unbounded = true;
        model
            .notes
            .push("no recourse rows supplied: z is unbounded".to_string());
    }
    model
}
