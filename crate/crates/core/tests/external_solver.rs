//! Solves the exported MIP models with an independent LP/MIP solver and
//! compares optima with the combinatorial algorithms.

use microlp::{ComparisonOp, OptimizationDirection, Problem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tstr::generate::{random_selection, random_sp};
use tstr::model_io::{build_adversarial_mip, MipModel, ObjectiveSense, RowSense, VarKind};
use tstr::regret::{max_regret, DEFAULT_PAIR_BUDGET};
use tstr::selection::{
    build_compact_mip, build_p_pi_mip, build_regret_mip, coefficients, enumerate_pi_profiles,
    four_items_instance, solve_exact, solve_p_pi_table,
};
use tstr::shortest_path::Variant;
use tstr::BinaryVector;

fn solve(model: &MipModel) -> i64 {
    let dir = match model.sense {
        ObjectiveSense::Minimize => OptimizationDirection::Minimize,
        ObjectiveSense::Maximize => OptimizationDirection::Maximize,
    };
    let mut obj = vec![0.0; model.variables.len()];
    for &(v, c) in &model.objective {
        obj[v.0] = c as f64;
    }
    let mut lp = Problem::new(dir);
    let vars: Vec<_> = model
        .variables
        .iter()
        .enumerate()
        .map(|(k, var)| match var.kind {
            VarKind::Binary => lp.add_binary_var(obj[k]),
            VarKind::Continuous => {
                let lo = var.lower.map_or(f64::NEG_INFINITY, |b| b as f64);
                let hi = var.upper.map_or(f64::INFINITY, |b| b as f64);
                lp.add_var(obj[k], (lo, hi))
            }
        })
        .collect();
    for row in &model.constraints {
        let terms: Vec<_> = row
            .terms
            .iter()
            .map(|&(v, c)| (vars[v.0], c as f64))
            .collect();
        let op = match row.sense {
            RowSense::Le => ComparisonOp::Le,
            RowSense::Ge => ComparisonOp::Ge,
            RowSense::Eq => ComparisonOp::Eq,
        };
        lp.add_constraint(terms.as_slice(), op, row.rhs as f64);
    }
    let outcome = lp.solve().expect("model solves");
    let value = outcome.solution().expect("a solution").objective();
    (value + model.objective_offset as f64).round() as i64
}

#[test]
fn compact_model_matches_exact_solver() {
    let t = four_items_instance();
    assert_eq!(solve(&build_compact_mip(&t).unwrap()), 2);
    for seed in 0..25 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=6);
        let inst = random_selection(n, rng.gen_range(1..=n), 15, seed).unwrap();
        let exact = solve_exact(&inst).unwrap().value;
        assert_eq!(
            solve(&build_compact_mip(&inst).unwrap()),
            exact,
            "seed {seed}"
        );
    }
}

#[test]
fn regret_model_with_fixed_x_matches_max_regret() {
    for seed in 0..25 {
        let mut rng = ChaCha8Rng::seed_from_u64(100 + seed);
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(1..=n);
        let inst = random_selection(n, p, 15, seed).unwrap();
        let x = BinaryVector::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.3)).take(p));
        let z = max_regret(&inst, &x).unwrap().value;
        assert_eq!(
            solve(&build_regret_mip(&inst, &x).unwrap()),
            z,
            "seed {seed}, x = {x}"
        );
    }
}

#[test]
fn profile_models_match_branch_and_bound() {
    let inst = four_items_instance();
    for prof in enumerate_pi_profiles(&inst) {
        let table = coefficients(&inst, &prof);
        let (value, _) = solve_p_pi_table(&table, 1 << 20).unwrap();
        assert_eq!(
            solve(&build_p_pi_mip(&inst, &table).unwrap()),
            value,
            "profile ({}, {})",
            prof.ck,
            prof.cl
        );
    }
}

#[test]
fn adversarial_model_matches_max_regret_on_paths() {
    for seed in 0..20 {
        let variant = if seed % 2 == 0 {
            Variant::Simple
        } else {
            Variant::Relaxed
        };
        let inst = random_sp(5, 8, 12, variant, seed).unwrap();
        let xs = inst
            .oracle()
            .first_stage_solutions(&inst, DEFAULT_PAIR_BUDGET)
            .unwrap();
        let x = &xs[seed as usize % xs.len()];
        let rows = inst
            .oracle()
            .recourse_actions(&inst, x, DEFAULT_PAIR_BUDGET)
            .unwrap();
        let z = max_regret(&inst, x).unwrap().value;
        assert_eq!(
            solve(&build_adversarial_mip(&inst, x, &rows)),
            z,
            "seed {seed}, x = {x}"
        );
    }
}
