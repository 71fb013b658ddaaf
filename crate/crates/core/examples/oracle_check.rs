//! Cross-checks the fast algorithms against full enumeration on random
//! instances and reports the largest heuristic gaps seen.

use tstr::generate::{random_selection, random_sp};
use tstr::oracle::{brute_tstr, brute_z};
use tstr::regret::{max_regret, midpoint_heuristic};
use tstr::selection::{solve_exact, solve_greedy, GreedyOptions};
use tstr::shortest_path::{solve_tstr_sp, Variant};

fn main() {
    let (mut greedy_gap, mut midpoint_gap) = (0, 0);
    for seed in 0..100 {
        let inst = random_selection(7, 1 + seed as usize % 7, 20, seed).unwrap();
        let (opt, _) = brute_tstr(&inst).unwrap();
        assert_eq!(solve_exact(&inst).unwrap().value, opt);
        let g = solve_greedy(&inst, &GreedyOptions::default()).unwrap();
        let m = midpoint_heuristic(&inst).unwrap();
        assert_eq!(
            max_regret(&inst, &g.x).unwrap().value,
            brute_z(&inst, &g.x).unwrap().value
        );
        greedy_gap = greedy_gap.max(max_regret(&inst, &g.x).unwrap().value - opt);
        midpoint_gap = midpoint_gap.max(max_regret(&inst, &m).unwrap().value - opt);
    }
    println!(
        "selection: 100 instances agree; largest gap greedy {greedy_gap}, midpoint {midpoint_gap}"
    );
    for seed in 0..40 {
        let variant = if seed % 2 == 0 {
            Variant::Simple
        } else {
            Variant::Relaxed
        };
        let inst = random_sp(5, 9, 15, variant, seed).unwrap();
        assert_eq!(
            solve_tstr_sp(&inst).unwrap().0,
            brute_tstr(&inst).unwrap().0
        );
    }
    println!("shortest path: 40 instances agree");
}
