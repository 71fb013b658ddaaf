//! Greedy descent on the profile set functions, with and without seeds.

use tstr::generate::random_selection;
use tstr::regret::max_regret;
use tstr::selection::{
    coefficients, enumerate_pi_profiles, four_items_instance, greedy_from_seed, solve_greedy,
    AlphaSet, GreedyOptions, PiProfile,
};

fn main() {
    let inst = four_items_instance();
    let table = coefficients(&inst, &PiProfile::new(&AlphaSet::new(&inst), 2, 6));
    let run = greedy_from_seed(&table, &[], true);
    println!(
        "profile (2, 6), empty seed: F = {} at items {:?} ({} evaluations)",
        run.value, run.items, run.evaluations
    );

    let forced = enumerate_pi_profiles(&inst)
        .iter()
        .map(|prof| greedy_from_seed(&coefficients(&inst, prof), &[0], true))
        .min_by_key(|r| r.value)
        .unwrap();
    println!(
        "seeded with item 1: best F = {} at {:?}, twice the optimum",
        forced.value, forced.items
    );

    let big = random_selection(30, 10, 50, 7).unwrap();
    for (l, prune) in [(0, true), (0, false), (1, true)] {
        let g = solve_greedy(
            &big,
            &GreedyOptions {
                seed_size: l,
                prune,
            },
        )
        .unwrap();
        let z = max_regret(&big, &g.x).unwrap().value;
        println!(
            "n = 30, L = {l}, prune = {prune:5}: F = {}, Z = {z}, {} evaluations",
            g.value, g.evaluations
        );
    }
}
