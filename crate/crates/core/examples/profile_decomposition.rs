//! The coefficient table of one dual-price profile and the set function it
//! induces.

use tstr::selection::{
    coefficients, enumerate_pi_profiles, four_items_instance, solve_p_pi, AlphaSet, PiProfile,
};

fn main() {
    let inst = four_items_instance();
    let alphas = AlphaSet::new(&inst);
    println!("alpha candidates {:?}", alphas.values());
    println!("{} distinct profiles", enumerate_pi_profiles(&inst).len());

    let prof = PiProfile::new(&alphas, 2, 6);
    let table = coefficients(&inst, &prof);
    println!("\nprofile (2, 6):");
    println!("{:>5} {:>4} {:>4}  omega", "alpha", "pi", "nu");
    for row in &table.rows {
        println!(
            "{:>5} {:>4} {:>4}  {:?}",
            row.alpha, row.pi, row.nu, row.omega
        );
    }
    for set in [
        vec![],
        vec![0],
        vec![1],
        vec![2],
        vec![3],
        vec![0, 1],
        vec![1, 2],
    ] {
        let shown: Vec<usize> = set.iter().map(|i| i + 1).collect();
        println!("F({shown:?}) = {}", table.f_of(&set));
    }
    let (value, x) = solve_p_pi(&inst, &prof).unwrap();
    println!("min F = {value} at {x}");
}
