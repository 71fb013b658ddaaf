//! Ground types shared by every problem class: costs, interval boxes,
//! 0/1 vectors over the ground set, scenarios and two-stage pairs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::selection::SelectionStructure;
use crate::shortest_path::SpGraph;
use crate::structure::StructureOracle;

/// Nonnegative cost in abstract money units.
pub type Cost = u64;

/// Upper bound on any single cost. Together with [`MAX_ELEMENTS`] this keeps
/// every signed sum the solvers form (including doubled midpoint costs and
/// the profile coefficients) far below `i64::MAX`.
pub const MAX_COST: Cost = 1 << 40;

/// Largest supported ground-set size.
pub const MAX_ELEMENTS: usize = 1 << 16;

#[inline]
pub(crate) fn signed(c: Cost) -> i64 {
    c as i64
}

/// `[t]_+` on integers.
#[inline]
pub(crate) fn pos(t: i64) -> i64 {
    t.max(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Cost,
    pub hi: Cost,
}

impl Interval {
    pub fn new(lo: Cost, hi: Cost) -> Result<Self> {
        if lo > hi {
            return Err(Error::input(format!(
                "interval lower bound {lo} exceeds upper bound {hi}"
            )));
        }
        if hi > MAX_COST {
            return Err(Error::input(format!(
                "cost {hi} exceeds the supported maximum {MAX_COST}"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn fixed(c: Cost) -> Self {
        Interval { lo: c, hi: c }
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }
}

/// The box `U = [lo_1, hi_1] x ... x [lo_n, hi_n]` of second-stage costs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UncertaintySet {
    intervals: Vec<Interval>,
}

impl UncertaintySet {
    pub fn new(intervals: Vec<Interval>) -> Self {
        UncertaintySet { intervals }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn lo(&self, i: usize) -> Cost {
        self.intervals[i].lo
    }

    pub fn hi(&self, i: usize) -> Cost {
        self.intervals[i].hi
    }

    pub fn lower(&self) -> Scenario {
        Scenario(self.intervals.iter().map(|iv| iv.lo).collect())
    }

    pub fn upper(&self) -> Scenario {
        Scenario(self.intervals.iter().map(|iv| iv.hi).collect())
    }

    pub fn contains(&self, c: &Scenario) -> bool {
        c.len() == self.len()
            && self
                .intervals
                .iter()
                .zip(c.costs())
                .all(|(iv, &x)| iv.lo <= x && x <= iv.hi)
    }

    /// Extreme scenario taking the upper bound exactly where `at_hi(i)` holds.
    pub fn extreme(&self, mut at_hi: impl FnMut(usize) -> bool) -> Scenario {
        Scenario(
            self.intervals
                .iter()
                .enumerate()
                .map(|(i, iv)| if at_hi(i) { iv.hi } else { iv.lo })
                .collect(),
        )
    }
}

/// A 0/1 vector over the ground set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector(Vec<bool>);

impl BinaryVector {
    pub fn zeros(n: usize) -> Self {
        BinaryVector(vec![false; n])
    }

    pub fn ones(n: usize) -> Self {
        BinaryVector(vec![true; n])
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        BinaryVector(bits)
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = vec![false; n];
        for i in indices {
            bits[i] = true;
        }
        BinaryVector(bits)
    }

    /// Parses a string of `0`/`1` characters, element 0 first.
    pub fn parse(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::input(format!(
                    "invalid character {other:?} in bit string {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryVector)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.0[i] = value;
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn is_zero(&self) -> bool {
        !self.0.iter().any(|&b| b)
    }

    /// Indices of the set coordinates, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
    }

    pub fn is_disjoint(&self, other: &BinaryVector) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| !(a && b))
    }

    pub fn is_subset_of(&self, other: &BinaryVector) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| !a || b)
    }

    pub fn union(&self, other: &BinaryVector) -> BinaryVector {
        BinaryVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a || b).collect())
    }

    pub fn difference(&self, other: &BinaryVector) -> BinaryVector {
        BinaryVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a && !b)
                .collect(),
        )
    }

    /// `costs . self` as a signed value.
    pub fn dot(&self, costs: &[Cost]) -> i64 {
        debug_assert_eq!(costs.len(), self.len());
        self.support().map(|i| signed(costs[i])).sum()
    }

    /// 1-based indices, the way items are usually written down.
    pub fn to_item_set(&self) -> Vec<usize> {
        self.support().map(|i| i + 1).collect()
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector({self})")
    }
}

impl Serialize for BinaryVector {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BinaryVector {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        BinaryVector::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// A realized second-stage cost vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Scenario(pub Vec<Cost>);

impl Scenario {
    pub fn costs(&self) -> &[Cost] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A complete two-stage solution `(u, v)`: `u` bought in stage one, `v` in
/// stage two.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoStagePair {
    pub u: BinaryVector,
    pub v: BinaryVector,
}

impl TwoStagePair {
    pub fn new(u: BinaryVector, v: BinaryVector) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::input("pair halves have different lengths"));
        }
        if !u.is_disjoint(&v) {
            return Err(Error::input("an element is bought in both stages"));
        }
        Ok(TwoStagePair { u, v })
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    pub fn combined(&self) -> BinaryVector {
        self.u.union(&self.v)
    }

    /// `C.u + c.v`
    pub fn cost(&self, first_stage: &[Cost], second_stage: &[Cost]) -> i64 {
        self.u.dot(first_stage) + self.v.dot(second_stage)
    }
}

/// A cheapest completion `y` of a first-stage solution and its second-stage
/// cost `c.y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recourse {
    pub y: BinaryVector,
    pub cost: i64,
}

/// Maximum regret `Z(x)` together with the pair `(u, v)` attaining it, the
/// extreme worst-case scenario and a best recourse under that scenario.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegretCertificate {
    pub value: i64,
    pub x: BinaryVector,
    pub witness: TwoStagePair,
    pub worst_scenario: Scenario,
    pub best_recourse: BinaryVector,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Structure {
    Selection(SelectionStructure),
    ShortestPath(SpGraph),
}

/// Problem data: first-stage costs `C`, the interval box, and the
/// combinatorial structure defining the feasible set.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    first_stage: Vec<Cost>,
    uncertainty: UncertaintySet,
    structure: Structure,
}

impl Instance {
    pub fn new(
        first_stage: Vec<Cost>,
        intervals: Vec<Interval>,
        structure: Structure,
    ) -> Result<Self> {
        let n = first_stage.len();
        if n == 0 {
            return Err(Error::input("the ground set is empty"));
        }
        if n > MAX_ELEMENTS {
            return Err(Error::input(format!(
                "{n} elements exceed the supported maximum {MAX_ELEMENTS}"
            )));
        }
        if intervals.len() != n {
            return Err(Error::input(format!(
                "{} intervals for {n} elements",
                intervals.len()
            )));
        }
        for (i, iv) in intervals.iter().enumerate() {
            Interval::new(iv.lo, iv.hi).map_err(|e| Error::input(format!("element {i}: {e}")))?;
        }
        if let Some(i) = first_stage.iter().position(|&c| c > MAX_COST) {
            return Err(Error::input(format!(
                "element {i}: first-stage cost exceeds {MAX_COST}"
            )));
        }
        structure.oracle().validate(n)?;
        Ok(Instance {
            first_stage,
            uncertainty: UncertaintySet::new(intervals),
            structure,
        })
    }

    pub fn selection(first_stage: Vec<Cost>, intervals: Vec<Interval>, p: usize) -> Result<Self> {
        Instance::new(
            first_stage,
            intervals,
            Structure::Selection(SelectionStructure { p }),
        )
    }

    pub fn shortest_path(
        first_stage: Vec<Cost>,
        intervals: Vec<Interval>,
        graph: SpGraph,
    ) -> Result<Self> {
        Instance::new(first_stage, intervals, Structure::ShortestPath(graph))
    }

    /// Builds a selection instance from `(C_i, lo_i, hi_i)` rows.
    pub fn selection_from_rows(rows: &[(Cost, Cost, Cost)], p: usize) -> Result<Self> {
        let first = rows.iter().map(|r| r.0).collect();
        let intervals = rows
            .iter()
            .map(|&(_, lo, hi)| Interval::new(lo, hi))
            .collect::<Result<Vec<_>>>()?;
        Instance::selection(first, intervals, p)
    }

    pub fn n(&self) -> usize {
        self.first_stage.len()
    }

    pub fn first_stage(&self) -> &[Cost] {
        &self.first_stage
    }

    pub fn uncertainty(&self) -> &UncertaintySet {
        &self.uncertainty
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn lo(&self, i: usize) -> Cost {
        self.uncertainty.lo(i)
    }

    pub fn hi(&self, i: usize) -> Cost {
        self.uncertainty.hi(i)
    }

    pub fn oracle(&self) -> &dyn StructureOracle {
        self.structure.oracle()
    }

    pub fn as_selection(&self) -> Option<&SelectionStructure> {
        match &self.structure {
            Structure::Selection(s) => Some(s),
            Structure::ShortestPath(_) => None,
        }
    }

    pub fn as_graph(&self) -> Option<&SpGraph> {
        match &self.structure {
            Structure::ShortestPath(g) => Some(g),
            Structure::Selection(_) => None,
        }
    }

    pub(crate) fn check_len(&self, what: &str, len: usize) -> Result<()> {
        if len != self.n() {
            return Err(Error::input(format!(
                "{what} has length {len}, expected {}",
                self.n()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_scenario(&self, c: &Scenario) -> Result<()> {
        self.check_len("scenario", c.len())?;
        if !self.uncertainty.contains(c) {
            return Err(Error::input("scenario lies outside the uncertainty box"));
        }
        Ok(())
    }

    /// `C.x`
    pub fn first_stage_cost(&self, x: &BinaryVector) -> i64 {
        x.dot(&self.first_stage)
    }
}

impl Structure {
    pub fn oracle(&self) -> &dyn StructureOracle {
        match self {
            Structure::Selection(s) => s,
            Structure::ShortestPath(g) => g,
        }
    }
}
