//! Searches a two-item family for an instance where the midpoint heuristic
//! is more than 100 times worse than the optimum, verifies it by brute
//! force and writes it to `instances/midpoint_gap.json`.
//!
//! Item 1 can be bought now at `b` or later anywhere in `[0, b]`. Item 2
//! costs `a - 1` now and exactly `a` later. For `b > 2a` the midpoint
//! scenario makes item 2 look best now, but the adversary then drops item 1
//! to 0. Waiting costs at most 1.

use std::path::Path;

use tstr::model_io::emit_instance;
use tstr::oracle::{brute_tstr, brute_z};
use tstr::regret::midpoint_heuristic;
use tstr::{Instance, Interval};

fn family(a: u64) -> Instance {
    let b = 2 * a + 2;
    Instance::selection(
        vec![b, a - 1],
        vec![Interval { lo: 0, hi: b }, Interval::fixed(a)],
        1,
    )
    .unwrap()
}

fn main() {
    let mut found = None;
    for a in 2..1000 {
        let inst = family(a);
        let x = midpoint_heuristic(&inst).unwrap();
        let z = brute_z(&inst, &x).unwrap().value;
        let (opt, best) = brute_tstr(&inst).unwrap();
        if a.is_power_of_two() {
            println!("a = {a:4}: midpoint x = {x}, Z = {z}; optimum {opt} at {best}");
        }
        if opt > 0 && z > 100 * opt {
            println!("a = {a}: ratio {} exceeds 100", z / opt);
            found = Some(inst);
            break;
        }
    }
    let inst = found.expect("the family reaches ratio 100");
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("instances/midpoint_gap.json");
    std::fs::write(&path, emit_instance(&inst, None)).unwrap();
    println!("wrote {}", path.display());
}
