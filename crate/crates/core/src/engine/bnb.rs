use crate::error::{Error, Result};
use crate::instance::BinaryVector;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// A 0-1 minimization problem given through evaluators.
///
/// Branching fixes elements in ascending index order, so a prefix of length
/// `d` fixes elements `0..d`.
pub trait BinaryProgram {
    fn len(&self) -> usize;

    /// An admissible lower bound on every completion of `prefix`, or `None`
    /// when no completion is feasible.
    fn lower_bound(&self, prefix: &[bool]) -> Result<Option<i64>>;

    /// Objective of a complete assignment, `None` if it is infeasible.
    fn evaluate(&self, x: &[bool]) -> Result<Option<i64>>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BnbOutcome {
    pub value: i64,
    pub solution: BinaryVector,
    pub nodes: u64,
}

struct Search<'a, P: ?Sized> {
    program: &'a P,
    budget: u64,
    nodes: u64,
    incumbent: Option<(i64, Vec<bool>)>,
    prefix: Vec<bool>,
}

impl<P: BinaryProgram + ?Sized> Search<'_, P> {
    fn visit(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::budget("branch-and-bound node", self.budget));
        }
        let Some(bound) = self.program.lower_bound(&self.prefix)? else {
            return Ok(());
        };
        if matches!(&self.incumbent, Some((best, _)) if bound >= *best) {
            return Ok(());
        }
        if self.prefix.len() == self.program.len() {
            if let Some(value) = self.program.evaluate(&self.prefix)? {
                if self
                    .incumbent
                    .as_ref()
                    .is_none_or(|(best, _)| value < *best)
                {
                    self.incumbent = Some((value, self.prefix.clone()));
                }
            }
            return Ok(());
        }
        for branch in [false, true] {
            self.prefix.push(branch);
            let res = self.visit();
            self.prefix.pop();
            res?;
        }
        Ok(())
    }
}

/// Exact minimum by depth-first search, 0-branch first. Among optimal
/// assignments the first one reached in that order is returned. `Ok(None)`
/// means no feasible assignment exists.
pub fn bnb_minimize<P: BinaryProgram + ?Sized>(
    program: &P,
    node_budget: u64,
) -> Result<Option<BnbOutcome>> {
    let mut search = Search {
        program,
        budget: node_budget,
        nodes: 0,
        incumbent: None,
        prefix: Vec::with_capacity(program.len()),
    };
    search.visit()?;
    let nodes = search.nodes;
    Ok(search.incumbent.map(|(value, bits)| BnbOutcome {
        value,
        solution: BinaryVector::from_bits(bits),
        nodes,
    }))
}
