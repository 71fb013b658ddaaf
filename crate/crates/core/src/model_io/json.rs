//! JSON instance and certificate files.
//!
//! Instance schema (field names are stable):
//!
//! ```json
//! {
//!   "kind": "selection",
//!   "n": 4,
//!   "p": 3,
//!   "first_stage_cost": [6, 1, 4, 12],
//!   "interval_lo": [9, 1, 2, 2],
//!   "interval_hi": [13, 4, 12, 6]
//! }
//! ```
//!
//! Shortest-path instances use `"kind": "shortest_path"` and replace `p`
//! with a `graph` block: `{"nodes": 4, "arcs": [[0, 1], ...], "s": 0,
//! "t": 3, "variant": "simple" | "relaxed"}`; arc `k` is ground element `k`.
//! An optional `"x"` bit string carries a designated first-stage solution.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{
    BinaryVector, Cost, Instance, Interval, RegretCertificate, Scenario, Structure, TwoStagePair,
};
use crate::shortest_path::{SpGraph, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProblemKind {
    Selection,
    ShortestPath,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphBlock {
    pub nodes: usize,
    pub arcs: Vec<[usize; 2]>,
    pub s: usize,
    pub t: usize,
    pub variant: Variant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub kind: ProblemKind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphBlock>,
    pub first_stage_cost: Vec<Cost>,
    pub interval_lo: Vec<Cost>,
    pub interval_hi: Vec<Cost>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<BinaryVector>,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.into(),
    }
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance, x: Option<&BinaryVector>) -> Self {
        let (kind, p, graph) = match inst.structure() {
            Structure::Selection(s) => (ProblemKind::Selection, Some(s.p), None),
            Structure::ShortestPath(g) => (
                ProblemKind::ShortestPath,
                None,
                Some(GraphBlock {
                    nodes: g.node_count(),
                    arcs: g.arcs().iter().map(|&(a, b)| [a, b]).collect(),
                    s: g.source(),
                    t: g.target(),
                    variant: g.variant(),
                }),
            ),
        };
        let u = inst.uncertainty();
        InstanceFile {
            kind,
            n: inst.n(),
            p,
            graph,
            first_stage_cost: inst.first_stage().to_vec(),
            interval_lo: u.intervals().iter().map(|iv| iv.lo).collect(),
            interval_hi: u.intervals().iter().map(|iv| iv.hi).collect(),
            x: x.cloned(),
        }
    }

    /// Validates every field and builds the instance.
    pub fn to_instance(&self) -> Result<Instance> {
        let n = self.n;
        if n == 0 {
            return Err(schema("n", "must be positive"));
        }
        for (name, list) in [
            ("first_stage_cost", &self.first_stage_cost),
            ("interval_lo", &self.interval_lo),
            ("interval_hi", &self.interval_hi),
        ] {
            if list.len() != n {
                return Err(schema(
                    name,
                    format!("has {} entries, expected n = {n}", list.len()),
                ));
            }
        }
        let mut intervals = Vec::with_capacity(n);
        for i in 0..n {
            let iv = Interval::new(self.interval_lo[i], self.interval_hi[i])
                .map_err(|e| schema(format!("interval_lo[{i}]"), e.to_string()))?;
            intervals.push(iv);
        }
        let structure = match self.kind {
            ProblemKind::Selection => {
                if self.graph.is_some() {
                    return Err(schema("graph", "not allowed for selection instances"));
                }
                let p = self
                    .p
                    .ok_or_else(|| schema("p", "required for selection instances"))?;
                if p == 0 || p > n {
                    return Err(schema(
                        "p",
                        format!("must satisfy 1 <= p <= n = {n}, got {p}"),
                    ));
                }
                Structure::Selection(crate::selection::SelectionStructure { p })
            }
            ProblemKind::ShortestPath => {
                if self.p.is_some() {
                    return Err(schema("p", "not allowed for shortest-path instances"));
                }
                let g = self
                    .graph
                    .as_ref()
                    .ok_or_else(|| schema("graph", "required for shortest-path instances"))?;
                if g.arcs.len() != n {
                    return Err(schema(
                        "graph.arcs",
                        format!("has {} arcs, expected n = {n}", g.arcs.len()),
                    ));
                }
                for (k, &[a, b]) in g.arcs.iter().enumerate() {
                    if a >= g.nodes || b >= g.nodes {
                        return Err(schema(format!("graph.arcs[{k}]"), "endpoint out of range"));
                    }
                    if a == b {
                        return Err(schema(format!("graph.arcs[{k}]"), "self-loop"));
                    }
                }
                let arcs = g.arcs.iter().map(|&[a, b]| (a, b)).collect();
                let graph = SpGraph::new(g.nodes, arcs, g.s, g.t, g.variant)
                    .map_err(|e| schema("graph", e.to_string()))?;
                Structure::ShortestPath(graph)
            }
        };
        if let Some(x) = &self.x {
            if x.len() != n {
                return Err(schema(
                    "x",
                    format!("has length {}, expected n = {n}", x.len()),
                ));
            }
        }
        Instance::new(self.first_stage_cost.clone(), intervals, structure)
            .map_err(|e| schema("", e.to_string()))
    }
}

/// Parses and validates an instance file, returning the optional `x` too.
pub fn parse_instance_file(text: &str) -> Result<(Instance, Option<BinaryVector>)> {
    let file: InstanceFile = serde_json::from_str(text)?;
    let inst = file.to_instance()?;
    Ok((inst, file.x))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    parse_instance_file(text).map(|(inst, _)| inst)
}

/// Pretty JSON; a pure function of its inputs.
pub fn emit_instance(inst: &Instance, x: Option<&BinaryVector>) -> String {
    let mut text = serde_json::to_string_pretty(&InstanceFile::from_instance(inst, x))
        .expect("instance serializes");
    text.push('\n');
    text
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub value: i64,
    pub x: BinaryVector,
    pub u: BinaryVector,
    pub v: BinaryVector,
    /// `1` where the scenario sits at the upper bound.
    pub scenario_pattern: String,
    pub scenario: Vec<Cost>,
    pub y: BinaryVector,
}

pub fn write_certificate(inst: &Instance, cert: &RegretCertificate) -> String {
    let pattern: String = cert
        .worst_scenario
        .costs()
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            if c == inst.hi(i) && c != inst.lo(i) {
                '1'
            } else {
                '0'
            }
        })
        .collect();
    let file = CertificateFile {
        value: cert.value,
        x: cert.x.clone(),
        u: cert.witness.u.clone(),
        v: cert.witness.v.clone(),
        scenario_pattern: pattern,
        scenario: cert.worst_scenario.costs().to_vec(),
        y: cert.best_recourse.clone(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("certificate serializes");
    text.push('\n');
    text
}

pub fn parse_certificate(text: &str) -> Result<RegretCertificate> {
    let file: CertificateFile = serde_json::from_str(text)?;
    Ok(RegretCertificate {
        value: file.value,
        witness: TwoStagePair::new(file.u, file.v).map_err(|e| schema("u", e.to_string()))?,
        x: file.x,
        worst_scenario: Scenario(file.scenario),
        best_recourse: file.y,
    })
}
