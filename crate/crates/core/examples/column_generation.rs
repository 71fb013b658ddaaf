//! Row-and-column generation on a selection and a shortest path instance,
//! printing the bound log.

use tstr::engine::{solve_colgen_traced, ColGenOptions};
use tstr::generate::{random_selection, random_sp};
use tstr::shortest_path::Variant;

fn main() {
    let instances = [
        ("selection n=10", random_selection(10, 4, 30, 5).unwrap()),
        (
            "relaxed paths",
            random_sp(7, 14, 20, Variant::Relaxed, 4).unwrap(),
        ),
    ];
    for (name, inst) in instances {
        println!("{name}\niter\tLB\tUB\tpool");
        let res = solve_colgen_traced(&inst, &ColGenOptions::default(), |r| {
            println!("{}", r.to_tsv())
        })
        .unwrap();
        println!(
            "optimum {} at {} after {} master nodes\n",
            res.value, res.x, res.state.master_nodes
        );
    }
}
