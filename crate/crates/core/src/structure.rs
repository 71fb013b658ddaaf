//! The contract every problem class implements so that the generic regret
//! evaluation, the row-and-column generation engine and the brute-force
//! oracles never need to know which combinatorial structure they work on.

use crate::error::Result;
use crate::instance::{BinaryVector, Cost, Instance, Recourse, RegretCertificate, TwoStagePair};
use crate::model_io::{MipModel, VarId};

pub trait StructureOracle: Send + Sync {
    fn name(&self) -> &'static str;

    /// Checks the structure against a ground set of `n` elements.
    fn validate(&self, n: usize) -> Result<()>;

    /// Membership in `X`: `s` is a complete feasible solution.
    fn is_complete(&self, inst: &Instance, s: &BinaryVector) -> Result<bool>;

    /// Membership in `X'`: `x` has at least one recourse action.
    fn is_first_stage_feasible(&self, inst: &Instance, x: &BinaryVector) -> Result<bool>;

    /// Whether some `x` in `X'` agrees with `prefix` on its leading elements.
    fn prefix_feasible(&self, _inst: &Instance, _prefix: &[bool]) -> Result<bool> {
        Ok(true)
    }

    /// Incremental problem: cheapest `y` in `R(x)` under second-stage costs
    /// `c`. The returned cost excludes the first-stage part `C.x`.
    fn best_recourse(&self, inst: &Instance, x: &BinaryVector, c: &[Cost]) -> Result<Recourse>;

    /// Two-stage problem: a pair `(u, v)` minimizing `first.u + second.v`.
    fn two_stage_optimum(
        &self,
        inst: &Instance,
        first: &[Cost],
        second: &[Cost],
    ) -> Result<(TwoStagePair, i64)>;

    /// Enumerates pairs of `Z`. Implementations may drop pairs dominated by a
    /// listed sub-pair, since `Z_(u,v)(x)` only grows when `(u, v)` shrinks
    /// and `C.u + c.v` only shrinks; maxima of `Z_(u,v)` and minima of the
    /// two-stage cost over the returned list match those over all of `Z`.
    fn pairs(&self, inst: &Instance, budget: u64) -> Result<Vec<TwoStagePair>>;

    /// Enumerates recourse actions for `x`, with the same dominance allowance
    /// as [`StructureOracle::pairs`].
    fn recourse_actions(
        &self,
        inst: &Instance,
        x: &BinaryVector,
        budget: u64,
    ) -> Result<Vec<BinaryVector>>;

    /// Enumerates `X'`.
    fn first_stage_solutions(&self, inst: &Instance, budget: u64) -> Result<Vec<BinaryVector>>;

    /// Problem-specific exact maximum regret of `x`.
    fn max_regret(&self, inst: &Instance, x: &BinaryVector) -> Result<RegretCertificate>;

    /// Adds rows forcing `u + v` into `X` (with `u_i + v_i <= 1`).
    fn add_pair_rows(&self, inst: &Instance, model: &mut MipModel, u: &[VarId], v: &[VarId]);
}
