use proptest::prelude::*;

use tstr::engine::{solve_colgen_traced, ColGenOptions};
use tstr::generate::{random_selection, random_sp};
use tstr::oracle::{brute_tstr, brute_z};
use tstr::regret::max_regret;
use tstr::selection::{
    clamp_cost, coefficients, enumerate_pi_profiles, rank_function_r, solve_greedy, solve_p_pi,
    solve_tst, GreedyOptions,
};
use tstr::shortest_path::{solve_tstr_sp, Variant};
use tstr::{BinaryVector, Cost, Instance};

fn selection(max_n: usize) -> impl Strategy<Value = Instance> {
    (1..=max_n, any::<u64>()).prop_flat_map(|(n, seed)| {
        (1..=n).prop_map(move |p| random_selection(n, p, 20, seed).unwrap())
    })
}

fn with_x(max_n: usize) -> impl Strategy<Value = (Instance, BinaryVector)> {
    selection(max_n).prop_flat_map(|inst| {
        let n = inst.n();
        let p = inst.as_selection().unwrap().p;
        proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 0..=p)
            .prop_map(move |items| (inst.clone(), BinaryVector::from_indices(n, items)))
    })
}

/// `C.x + (p - |X|) a - sum_{i not in X} [a - hi_i]+ - Opt(c_hat(a))`.
fn alpha_objective(inst: &Instance, x: &BinaryVector, alpha: Cost) -> i64 {
    let p = inst.as_selection().unwrap().p;
    let n = inst.n();
    let c_hat: Vec<Cost> = (0..n)
        .map(|i| {
            if x.get(i) {
                inst.lo(i)
            } else {
                clamp_cost(alpha, inst.lo(i), inst.hi(i))
            }
        })
        .collect();
    let (_, opt) = solve_tst(inst.first_stage(), &c_hat, p).unwrap();
    let excess: i64 = (0..n)
        .filter(|&i| !x.get(i))
        .map(|i| (alpha as i64 - inst.hi(i) as i64).max(0))
        .sum();
    inst.first_stage_cost(x) + (p - x.count_ones()) as i64 * alpha as i64 - excess - opt
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fast_max_regret_matches_scenario_enumeration((inst, x) in with_x(7)) {
        prop_assert_eq!(max_regret(&inst, &x).unwrap().value, brute_z(&inst, &x).unwrap().value);
    }

    #[test]
    fn alpha_grid_never_beats_candidate_set((inst, x) in with_x(6)) {
        let z = max_regret(&inst, &x).unwrap().value;
        let top = (0..inst.n()).map(|i| inst.hi(i)).max().unwrap();
        let grid = (0..=top).map(|a| alpha_objective(&inst, &x, a)).max().unwrap();
        prop_assert_eq!(grid, z);
    }

    #[test]
    fn dual_price_is_the_pth_order_statistic((inst, x) in with_x(6), alpha in 0u64..=20) {
        let p = inst.as_selection().unwrap().p;
        let n = inst.n();
        let r: Vec<Cost> = (0..n).map(|i| rank_function_r(&inst, i, alpha, x.get(i))).collect();
        let c_hat: Vec<Cost> =
            (0..n).map(|i| if x.get(i) { inst.lo(i) } else { clamp_cost(alpha, inst.lo(i), inst.hi(i)) }).collect();
        let (_, opt) = solve_tst(inst.first_stage(), &c_hat, p).unwrap();
        // Dual of the two-stage LP: max p.pi - sum rho, rho_i >= pi - min(C_i, c_hat_i).
        let dual = |pi: i64| p as i64 * pi - r.iter().map(|&ri| (pi - ri as i64).max(0)).sum::<i64>();
        let best = (0..=40).map(dual).max().unwrap();
        let pi_star = *r.clone().select_nth_unstable(p - 1).1 as i64;
        prop_assert_eq!(best, opt);
        prop_assert_eq!(dual(pi_star), opt);
    }

    #[test]
    fn omega_nonincreasing_in_alpha(inst in selection(8)) {
        for prof in enumerate_pi_profiles(&inst) {
            let t = coefficients(&inst, &prof);
            for w in t.rows.windows(2) {
                for i in 0..inst.n() {
                    prop_assert!(w[1].omega[i] <= w[0].omega[i]);
                }
            }
        }
    }

    #[test]
    fn f_is_supermodular(inst in selection(8), picks in proptest::collection::vec(any::<(u32, u32)>(), 1..20)) {
        let profiles = enumerate_pi_profiles(&inst);
        let n = inst.n();
        for (a, b) in picks {
            let t = coefficients(&inst, &profiles[a as usize % profiles.len()]);
            let j = b as usize % n;
            let y: Vec<usize> = (0..n).filter(|&i| i != j && (a >> (i % 32)) & 1 == 1).collect();
            let x: Vec<usize> = y.iter().copied().filter(|&i| (b >> (i % 32)) & 2 == 2).collect();
            let plus = |s: &[usize]| { let mut v = s.to_vec(); v.push(j); v };
            prop_assert!(t.f_of(&plus(&y)) - t.f_of(&y) >= t.f_of(&plus(&x)) - t.f_of(&x));
        }
    }

    #[test]
    fn profile_decomposition_reaches_optimum(inst in selection(7)) {
        let best = enumerate_pi_profiles(&inst).iter().map(|prof| solve_p_pi(&inst, prof).unwrap().0).min().unwrap();
        prop_assert_eq!(best, brute_tstr(&inst).unwrap().0);
    }

    #[test]
    fn greedy_value_bounds_its_regret(inst in selection(8), l in 0usize..=1) {
        prop_assume!(l <= inst.as_selection().unwrap().p);
        let g = solve_greedy(&inst, &GreedyOptions { seed_size: l, prune: true }).unwrap();
        let plain = solve_greedy(&inst, &GreedyOptions { seed_size: l, prune: false }).unwrap();
        let z = max_regret(&inst, &g.x).unwrap().value;
        prop_assert!(g.value >= z);
        prop_assert_eq!(g.value, plain.value);
        prop_assert!(z >= brute_tstr(&inst).unwrap().0);
    }

    #[test]
    fn colgen_bounds_sandwich_the_optimum(inst in selection(6)) {
        let opt = brute_tstr(&inst).unwrap().0;
        let mut records = Vec::new();
        let res = solve_colgen_traced(&inst, &ColGenOptions::default(), |r| records.push(*r)).unwrap();
        prop_assert_eq!(res.value, opt);
        for w in records.windows(2) {
            prop_assert!(w[0].lower_bound <= w[1].lower_bound && w[1].upper_bound <= w[0].upper_bound);
        }
        for r in &records {
            prop_assert!(r.lower_bound <= opt && opt <= r.upper_bound);
        }
    }

    #[test]
    fn relaxed_never_worse_than_simple(seed in any::<u64>(), nodes in 2usize..=5, extra in 0usize..=5) {
        let arcs = nodes - 1 + extra;
        let simple = random_sp(nodes, arcs, 12, Variant::Simple, seed).unwrap();
        let relaxed = random_sp(nodes, arcs, 12, Variant::Relaxed, seed).unwrap();
        let (zs, _) = solve_tstr_sp(&simple).unwrap();
        let (zr, _) = solve_tstr_sp(&relaxed).unwrap();
        prop_assert!(zr <= zs);
        prop_assert_eq!(zs, brute_tstr(&simple).unwrap().0);
        prop_assert_eq!(zr, brute_tstr(&relaxed).unwrap().0);
    }
}
