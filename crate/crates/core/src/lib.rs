//! Two-stage minmax regret combinatorial optimization under interval
//! uncertainty.
//!
//! A problem instance has `n` ground elements. Each can be bought now at a
//! known cost `C_i` or later at a cost `c_i` that is only known to lie in
//! `[lo_i, hi_i]`. A first-stage decision `x` must be completable to a
//! feasible solution once costs are revealed. The regret of `x` under `c`
//! is the cost of its best completion minus the best two-stage cost in
//! hindsight; [`regret::max_regret`] computes the worst case `Z(x)` and
//! the solvers minimize it.
//!
//! Two structures are provided:
//!
//! * [`selection`]: choose `p` of `n` items. Maximum regret in `O(n^2)`,
//!   an exact solver through a profile decomposition, a supermodular greedy
//!   heuristic, polynomial special cases and MIP models.
//! * [`shortest_path`]: an `s`-`t` path in a digraph, with simple-path and
//!   connectivity feasibility, plus generators for the hardness reductions.
//!
//! The [`engine`] solves any structure by row-and-column generation, and
//! [`oracle`] holds brute-force references used throughout the tests.
//!
//! ```
//! use tstr::selection::{max_regret, solve_exact, four_items_instance};
//! use tstr::BinaryVector;
//!
//! let inst = four_items_instance();
//! let best = solve_exact(&inst).unwrap();
//! assert_eq!((best.value, best.x.to_string()), (2, "0110".to_string()));
//! assert_eq!(max_regret(&inst, &BinaryVector::parse("1100").unwrap()).unwrap().value, 4);
//! ```
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! | example | shows |
//! |---|---|
//! | `selection_exact` | max regret, profile decomposition and the exact solver |
//! | `profile_decomposition` | coefficient tables and `F(X)` for one profile |
//! | `greedy_heuristic` | the greedy descent, seeds and pruning |
//! | `column_generation` | the row-and-column generation loop with its trace |
//! | `shortest_path_variants` | simple versus relaxed paths |
//! | `hardness_reductions` | the partition and Hamiltonian path gadgets |
//! | `midpoint_gap` | searching for a large midpoint-heuristic gap |
//! | `lp_export` | writing the MIP models in LP format |
//! | `oracle_check` | cross-checking fast algorithms against brute force |

pub mod cli;
pub mod engine;
pub mod error;
pub mod generate;
pub mod instance;
pub mod model_io;
pub mod oracle;
pub mod regret;
pub mod selection;
pub mod shortest_path;
pub mod structure;

pub use error::{Error, Result};
pub use instance::{
    BinaryVector, Cost, Instance, Interval, Recourse, RegretCertificate, Scenario, Structure,
    TwoStagePair, UncertaintySet, MAX_COST, MAX_ELEMENTS,
};
pub use structure::StructureOracle;
