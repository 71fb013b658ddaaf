//! Maximum regret and the exact solver on the four-item selection example.

use tstr::selection::{four_items_instance, max_regret, solve_exact};
use tstr::BinaryVector;

fn main() {
    let inst = four_items_instance();
    println!("n = {}, p = 3, C = {:?}", inst.n(), inst.first_stage());
    for bits in ["0110", "1100", "0111", "0000"] {
        let x = BinaryVector::parse(bits).unwrap();
        let cert = max_regret(&inst, &x).unwrap();
        println!(
            "Z({x}) = {:2}  worst case: u = {}, v = {}, recourse {}",
            cert.value, cert.witness.u, cert.witness.v, cert.best_recourse
        );
    }
    let best = solve_exact(&inst).unwrap();
    println!(
        "optimum {} at x = {} (profile ({}, {}) of {} candidates)",
        best.value, best.x, best.profile.ck, best.profile.cl, best.profiles
    );
}
