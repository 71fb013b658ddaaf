//! Simple paths against relaxed first-stage arc sets on the two-route
//! example, plus the path-specific subproblems.

use tstr::regret::max_regret;
use tstr::shortest_path::{
    solve_inc_relaxed, solve_tst_sp, solve_tstr_sp, two_route_instance, Variant,
};
use tstr::BinaryVector;

fn main() {
    let both = BinaryVector::parse("1100").unwrap();
    for variant in [Variant::Simple, Variant::Relaxed] {
        let inst = two_route_instance(variant);
        let xs = inst.oracle().first_stage_solutions(&inst, 1000).unwrap();
        println!("{variant}: {} first-stage solutions", xs.len());
        for x in &xs {
            println!("  Z({x}) = {}", max_regret(&inst, x).unwrap().value);
        }
        let (z, x) = solve_tstr_sp(&inst).unwrap();
        println!("  optimum {z} at {x}");
    }
    let inst = two_route_instance(Variant::Relaxed);
    let c = inst.uncertainty().lower();
    let (pair, opt) = solve_tst_sp(&inst, &c).unwrap();
    let (y, inc) = solve_inc_relaxed(&inst, &both, &c).unwrap();
    println!(
        "lower scenario: Opt = {opt} with u = {}, v = {}; Inc(1100) = {inc} with y = {y}",
        pair.u, pair.v
    );
}
