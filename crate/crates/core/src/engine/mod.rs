//! Structure-agnostic exact machinery: a depth-first 0-1 branch-and-bound
//! and the row-and-column generation loop built on top of it.

mod bnb;
mod colgen;

pub use bnb::{bnb_minimize, BinaryProgram, BnbOutcome, DEFAULT_NODE_BUDGET};
pub use colgen::{
    master_solve, separate, solve_colgen, solve_colgen_traced, ColGenOptions, ColGenResult,
    ColGenState, CutPool, IterationRecord, MasterSolution, DEFAULT_ITERATION_CAP,
};
