//! Writes the MIP models of the selection example in LP format.

use tstr::model_io::{build_adversarial_mip, export_lp};
use tstr::selection::{
    build_compact_mip, build_p_pi_mip, build_regret_mip, coefficients, four_items_instance,
    AlphaSet, PiProfile,
};
use tstr::BinaryVector;

fn main() {
    let inst = four_items_instance();
    let x = BinaryVector::parse("0110").unwrap();
    let compact = build_compact_mip(&inst).unwrap();
    println!(
        "compact model: {} binaries, {} continuous, {} rows",
        compact.binary_count(),
        compact.continuous_count(),
        compact.constraints.len()
    );
    let table = coefficients(&inst, &PiProfile::new(&AlphaSet::new(&inst), 2, 6));
    print!("{}", export_lp(&build_p_pi_mip(&inst, &table).unwrap()));
    println!();
    print!("{}", export_lp(&build_regret_mip(&inst, &x).unwrap()));
    println!();
    let rows = inst.oracle().recourse_actions(&inst, &x, 1000).unwrap();
    print!("{}", export_lp(&build_adversarial_mip(&inst, &x, &rows)));
}
