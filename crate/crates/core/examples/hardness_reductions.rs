//! Builds the partition and Hamiltonian path gadgets and checks their
//! thresholds by brute force.

use tstr::oracle::{brute_tstr, brute_z, hamiltonian_path_exists, partition_exists};
use tstr::shortest_path::{
    gen_hamiltonian_inc, gen_partition_regret, gen_partition_tstr, solve_inc_simple, Variant,
};

fn main() {
    println!("two-stage gadget (values doubled, threshold 3b):");
    for a in [vec![1, 1], vec![1, 3], vec![1, 1, 2], vec![1, 2, 5]] {
        let b = a.iter().sum::<u64>() / 2;
        let inst = gen_partition_tstr(&a, Variant::Simple).unwrap();
        let (opt, x) = brute_tstr(&inst).unwrap();
        println!(
            "  a = {a:?}: optimum {opt} vs {}, split exists: {}, x = {x}",
            3 * b,
            partition_exists(&a)
        );
    }
    println!("regret gadget (threshold b):");
    for a in [vec![1, 1], vec![1, 3], vec![2, 2], vec![1, 2, 3]] {
        let (inst, x) = gen_partition_regret(&a, Variant::Relaxed).unwrap();
        let z = brute_z(&inst, &x).unwrap().value;
        println!(
            "  a = {a:?}: Z(0) = {z}, b = {}, split exists: {}",
            a.iter().sum::<u64>() / 2,
            partition_exists(&a)
        );
    }
    println!("incremental gadget:");
    let graphs: [(&str, Vec<(usize, usize)>); 3] = [
        ("path 0-1-2-3", vec![(0, 1), (1, 2), (2, 3)]),
        ("star from 0", vec![(0, 1), (0, 2), (0, 3)]),
        ("shortcut 0-2-1-3", vec![(0, 2), (2, 1), (1, 3), (0, 3)]),
    ];
    for (name, arcs) in graphs {
        let (inst, x) = gen_hamiltonian_inc(4, &arcs, 0, 3).unwrap();
        let (_, inc) = solve_inc_simple(&inst, &x, &inst.uncertainty().lower()).unwrap();
        println!(
            "  {name}: Inc = {inc}, Hamiltonian path: {}",
            hamiltonian_path_exists(4, &arcs, 0, 3)
        );
    }
}
