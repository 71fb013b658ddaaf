//! A small symbolic MIP model and its CPLEX LP-format writer.

use std::collections::BTreeMap;
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Binary,
    Continuous,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
    /// `None` is minus infinity.
    pub lower: Option<i64>,
    /// `None` is plus infinity.
    pub upper: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowSense {
    Le,
    Ge,
    Eq,
}

impl RowSense {
    fn symbol(self) -> &'static str {
        match self {
            RowSense::Le => "<=",
            RowSense::Ge => ">=",
            RowSense::Eq => "=",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    /// Sorted by variable, no zero coefficients.
    pub terms: Vec<(VarId, i64)>,
    pub sense: RowSense,
    pub rhs: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectiveSense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MipModel {
    pub name: String,
    pub sense: ObjectiveSense,
    pub objective: Vec<(VarId, i64)>,
    pub objective_offset: i64,
    pub variables: Vec<Variable>,
    pub constraints: Vec<Constraint>,
    /// Free-form metadata, written as comments.
    pub notes: Vec<String>,
    /// Set when the objective is unbounded as built.
    pub unbounded: bool,
}

fn normalize(terms: impl IntoIterator<Item = (VarId, i64)>) -> Vec<(VarId, i64)> {
    let mut acc: BTreeMap<VarId, i64> = BTreeMap::new();
    for (v, c) in terms {
        *acc.entry(v).or_default() += c;
    }
    acc.into_iter().filter(|&(_, c)| c != 0).collect()
}

impl MipModel {
    pub fn new(name: impl Into<String>, sense: ObjectiveSense) -> Self {
        MipModel {
            name: name.into(),
            sense,
            objective: Vec::new(),
            objective_offset: 0,
            variables: Vec::new(),
            constraints: Vec::new(),
            notes: Vec::new(),
            unbounded: false,
        }
    }

    pub fn add_var(
        &mut self,
        name: impl Into<String>,
        kind: VarKind,
        lower: Option<i64>,
        upper: Option<i64>,
    ) -> VarId {
        let (lower, upper) = match kind {
            VarKind::Binary => (Some(0), Some(1)),
            VarKind::Continuous => (lower, upper),
        };
        self.variables.push(Variable {
            name: name.into(),
            kind,
            lower,
            upper,
        });
        VarId(self.variables.len() - 1)
    }

    pub fn binary(&mut self, name: impl Into<String>) -> VarId {
        self.add_var(name, VarKind::Binary, Some(0), Some(1))
    }

    pub fn nonneg(&mut self, name: impl Into<String>) -> VarId {
        self.add_var(name, VarKind::Continuous, Some(0), None)
    }

    pub fn free(&mut self, name: impl Into<String>) -> VarId {
        self.add_var(name, VarKind::Continuous, None, None)
    }

    pub fn set_objective(&mut self, terms: impl IntoIterator<Item = (VarId, i64)>, offset: i64) {
        self.objective = normalize(terms);
        self.objective_offset = offset;
    }

    pub fn add_constraint(
        &mut self,
        name: impl Into<String>,
        terms: impl IntoIterator<Item = (VarId, i64)>,
        sense: RowSense,
        rhs: i64,
    ) {
        self.constraints.push(Constraint {
            name: name.into(),
            terms: normalize(terms),
            sense,
            rhs,
        });
    }

    pub fn var(&self, name: &str) -> Option<VarId> {
        self.variables
            .iter()
            .position(|v| v.name == name)
            .map(VarId)
    }

    pub fn constraint(&self, name: &str) -> Option<&Constraint> {
        self.constraints.iter().find(|c| c.name == name)
    }

    pub fn name_of(&self, id: VarId) -> &str {
        &self.variables[id.0].name
    }

    pub fn binary_count(&self) -> usize {
        self.variables
            .iter()
            .filter(|v| v.kind == VarKind::Binary)
            .count()
    }

    pub fn continuous_count(&self) -> usize {
        self.variables.len() - self.binary_count()
    }

    /// Coefficient of `var` in `row`, zero when absent.
    pub fn coefficient(&self, row: &Constraint, var: &str) -> i64 {
        self.var(var)
            .and_then(|id| row.terms.iter().find(|(v, _)| *v == id))
            .map_or(0, |&(_, c)| c)
    }
}

fn write_terms(out: &mut String, model: &MipModel, terms: &[(VarId, i64)]) {
    if terms.is_empty() {
        out.push_str(" 0");
        return;
    }
    for (k, &(v, c)) in terms.iter().enumerate() {
        let sign = if c < 0 {
            "-"
        } else if k == 0 {
            ""
        } else {
            "+"
        };
        let mag = c.unsigned_abs();
        if !sign.is_empty() {
            out.push(' ');
            out.push_str(sign);
        }
        if mag == 1 {
            let _ = write!(out, " {}", model.name_of(v));
        } else {
            let _ = write!(out, " {mag} {}", model.name_of(v));
        }
    }
}

/// Writes `model` in CPLEX LP syntax. Output depends only on the model, so
/// identical models give identical bytes.
pub fn export_lp(model: &MipModel) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "\\ Model: {}", model.name);
    for note in &model.notes {
        let _ = writeln!(out, "\\ {note}");
    }
    out.push_str(match model.sense {
        ObjectiveSense::Minimize => "Minimize\n",
        ObjectiveSense::Maximize => "Maximize\n",
    });
    out.push_str(" obj:");
    write_terms(&mut out, model, &model.objective);
    if model.objective_offset != 0 {
        let sign = if model.objective_offset < 0 { "-" } else { "+" };
        let _ = write!(out, " {sign} {}", model.objective_offset.unsigned_abs());
    }
    out.push('\n');

    out.push_str("Subject To\n");
    for row in &model.constraints {
        let _ = write!(out, " {}:", row.name);
        write_terms(&mut out, model, &row.terms);
        let _ = writeln!(out, " {} {}", row.sense.symbol(), row.rhs);
    }

    out.push_str("Bounds\n");
    for var in model
        .variables
        .iter()
        .filter(|v| v.kind == VarKind::Continuous)
    {
        let _ = match (var.lower, var.upper) {
            (None, None) => writeln!(out, " {} free", var.name),
            (Some(0), None) => continue,
            (Some(lo), None) => writeln!(out, " {} >= {lo}", var.name),
            (None, Some(hi)) => writeln!(out, " -inf <= {} <= {hi}", var.name),
            (Some(lo), Some(hi)) => writeln!(out, " {lo} <= {} <= {hi}", var.name),
        };
    }

    let binaries: Vec<&str> = model
        .variables
        .iter()
        .filter(|v| v.kind == VarKind::Binary)
        .map(|v| v.name.as_str())
        .collect();
    if !binaries.is_empty() {
        out.push_str("Binary\n");
        for chunk in binaries.chunks(10) {
            let _ = writeln!(out, " {}", chunk.join(" "));
        }
    }
    out.push_str("End\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_model_has_header_and_bounds_only() {
        let mut m = MipModel::new("empty", ObjectiveSense::Minimize);
        m.free("z");
        let text = export_lp(&m);
        assert_eq!(
            text,
            "\\ Model: empty\nMinimize\n obj: 0\nSubject To\nBounds\n z free\nEnd\n"
        );
    }

    #[test]
    fn terms_are_merged_and_signed() {
        let mut m = MipModel::new("t", ObjectiveSense::Maximize);
        let x = m.binary("x_1");
        let y = m.nonneg("y");
        m.set_objective([(x, 3), (y, -1)], -4);
        m.add_constraint("c", [(y, 2), (x, 1), (y, -2), (x, -5)], RowSense::Le, 7);
        let text = export_lp(&m);
        assert!(text.contains(" obj: 3 x_1 - y - 4\n"), "{text}");
        assert!(text.contains(" c: - 4 x_1 <= 7\n"), "{text}");
        assert!(text.contains("Binary\n x_1\nEnd\n"));
        assert_eq!(export_lp(&m), text);
    }
}
