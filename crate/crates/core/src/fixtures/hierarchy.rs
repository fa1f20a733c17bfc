use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subregular::{subregular_edges, FamilyLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    /// Inclusions between the subregular families themselves.
    Subregular,
    /// Families of contextual languages with structurally restricted selection.
    IcStructural,
    /// Families of contextual languages with resource-bounded selection.
    IcResource,
    /// Both contextual hierarchies joined.
    Merged,
}

impl Scope {
    pub const ALL: [Scope; 4] = [
        Scope::Subregular,
        Scope::IcStructural,
        Scope::IcResource,
        Scope::Merged,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Scope::Subregular => "subregular",
            Scope::IcStructural => "ic-structural",
            Scope::IcResource => "ic-resource",
            Scope::Merged => "merged",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scope::ALL
            .into_iter()
            .find(|x| x.as_str() == s.trim())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown scope `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeStatus {
    /// `from ⊂ to`.
    Proper,
    /// `from ⊆ to`, properness open.
    OpenProperness,
    /// Relation between the two families not known.
    Unknown,
    /// `from = to`; stored in both directions.
    Equality,
}

impl EdgeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeStatus::Proper => "proper",
            EdgeStatus::OpenProperness => "open-properness",
            EdgeStatus::Unknown => "unknown",
            EdgeStatus::Equality => "equality",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HierarchyEdge {
    pub from: FamilyLabel,
    pub to: FamilyLabel,
    pub status: EdgeStatus,
    /// The edge stands for a chain elided with dots up to `to`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub elided: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyTable {
    pub scope: Scope,
    /// Largest resource parameter shown.
    pub bound: usize,
    pub nodes: Vec<FamilyLabel>,
    pub edges: Vec<HierarchyEdge>,
}

impl HierarchyTable {
    pub fn edge(&self, from: FamilyLabel, to: FamilyLabel) -> Option<&HierarchyEdge> {
        self.edges.iter().find(|e| e.from == from && e.to == to)
    }

    pub fn edges_with(&self, status: EdgeStatus) -> impl Iterator<Item = &HierarchyEdge> {
        self.edges.iter().filter(move |e| e.status == status)
    }

    /// Whether `to` is reachable from `from` along inclusion edges.
    pub fn includes(&self, from: FamilyLabel, to: FamilyLabel) -> bool {
        let mut seen = vec![from];
        let mut i = 0;
        while i < seen.len() {
            let x = seen[i];
            if x == to {
                return true;
            }
            for e in &self.edges {
                if e.from == x && e.status != EdgeStatus::Unknown && !seen.contains(&e.to) {
                    seen.push(e.to);
                }
            }
            i += 1;
        }
        false
    }

    /// Whether the proper and open edges form a directed acyclic graph.
    pub fn is_acyclic(&self) -> bool {
        let idx: HashMap<FamilyLabel, usize> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        let mut indeg = vec![0; self.nodes.len()];
        let strict: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| matches!(e.status, EdgeStatus::Proper | EdgeStatus::OpenProperness))
            .map(|e| (idx[&e.from], idx[&e.to]))
            .collect();
        for &(_, t) in &strict {
            indeg[t] += 1;
        }
        let mut ready: Vec<usize> = (0..indeg.len()).filter(|&i| indeg[i] == 0).collect();
        let mut done = 0;
        while let Some(x) = ready.pop() {
            done += 1;
            for &(f, t) in &strict {
                if f == x {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.push(t);
                    }
                }
            }
        }
        done == self.nodes.len()
    }

    pub fn to_text(&self) -> String {
        let name = |f: FamilyLabel| match self.scope {
            Scope::Subregular => f.to_string(),
            _ => format!("IC({f})"),
        };
        let mut out = String::new();
        let _ = writeln!(out, "{} (parameters up to {})", self.scope, self.bound);
        for e in &self.edges {
            let arrow = match e.status {
                EdgeStatus::Proper => "->",
                EdgeStatus::OpenProperness => "-->",
                EdgeStatus::Unknown => "??",
                EdgeStatus::Equality => "==",
            };
            let _ = write!(
                out,
                "  {} {arrow} {}  {}",
                name(e.from),
                name(e.to),
                e.status.as_str()
            );
            if e.elided {
                out.push_str(" (via elided chain)");
            }
            out.push('\n');
        }
        out
    }
}

/// Default parameter bound, the largest index drawn in the diagrams.
pub const DEFAULT_BOUND: usize = 2;

pub fn hierarchy(scope: Scope) -> HierarchyTable {
    hierarchy_with(scope, DEFAULT_BOUND)
}

/// Table for `scope` with the parameterised families `RL_V(i)`, `REG_Z(i)`
/// for `i ≤ bound` and `RL_P(i)` for `i ≤ 2 bound`.
pub fn hierarchy_with(scope: Scope, bound: usize) -> HierarchyTable {
    let bound = bound.max(2);
    let mut edges = Builder::default();
    match scope {
        Scope::Subregular => subregular(&mut edges, bound),
        Scope::IcStructural => structural(&mut edges),
        Scope::IcResource => resource(&mut edges, bound),
        Scope::Merged => {
            structural(&mut edges);
            resource(&mut edges, bound);
            use FamilyLabel::*;
            edges.proper(Comb, RegZ(2));
            edges.proper(Def, RlV(1));
            edges.equal(RlP(1), Fin);
            edges.equal(Mon, RegZ(1));
            for i in 1..=bound {
                edges.unknown(Suf, RlV(i));
                if i >= 2 {
                    edges.unknown(Suf, RegZ(i));
                }
            }
        }
    }
    let mut nodes = BTreeSet::new();
    for e in &edges.0 {
        nodes.insert(e.from);
        nodes.insert(e.to);
    }
    HierarchyTable {
        scope,
        bound,
        nodes: nodes.into_iter().collect(),
        edges: edges.0,
    }
}

#[derive(Default)]
struct Builder(Vec<HierarchyEdge>);

impl Builder {
    fn push(&mut self, from: FamilyLabel, to: FamilyLabel, status: EdgeStatus, elided: bool) {
        let e = HierarchyEdge {
            from,
            to,
            status,
            elided,
        };
        if !self.0.contains(&e) {
            self.0.push(e);
        }
    }

    fn proper(&mut self, from: FamilyLabel, to: FamilyLabel) {
        self.push(from, to, EdgeStatus::Proper, false);
    }

    fn elided(&mut self, from: FamilyLabel, to: FamilyLabel) {
        self.push(from, to, EdgeStatus::Proper, true);
    }

    fn equal(&mut self, a: FamilyLabel, b: FamilyLabel) {
        self.push(a, b, EdgeStatus::Equality, false);
        self.push(b, a, EdgeStatus::Equality, false);
    }

    fn unknown(&mut self, a: FamilyLabel, b: FamilyLabel) {
        self.push(a, b, EdgeStatus::Unknown, false);
    }
}

fn subregular(b: &mut Builder, bound: usize) {
    use FamilyLabel::*;
    for (x, y) in subregular_edges() {
        b.proper(x, y);
    }
    for i in 3..=bound {
        b.proper(RlV(i - 1), RlV(i));
        b.proper(RegZ(i - 1), RegZ(i));
        b.proper(RegZ(i), RlV(i));
    }
    for i in 5..=2 * bound {
        b.proper(RlP(i - 1), RlP(i));
        if i % 2 == 0 {
            b.proper(RlP(i), RlV(i / 2));
        }
    }
    b.elided(RlV(bound), Reg);
    b.elided(RegZ(bound), Reg);
    b.elided(RlP(2 * bound), Reg);
}

fn structural(b: &mut Builder) {
    use FamilyLabel::*;
    for (x, y) in [
        (Fin, Nil),
        (Mon, Comb),
        (Mon, Nil),
        (Mon, Suf),
        (Mon, Comm),
        (Nil, Def),
        (Comb, Def),
        (Def, Ord),
        (Nc, Ps),
        (Ps, Reg),
        (Comm, Circ),
        (Circ, Reg),
        (Suf, Ps),
    ] {
        b.proper(x, y);
    }
    b.push(Ord, Nc, EdgeStatus::OpenProperness, false);
    b.equal(Reg, Uf);
    b.unknown(Suf, Ord);
    b.unknown(Suf, Nc);
}

fn resource(b: &mut Builder, bound: usize) {
    use FamilyLabel::*;
    for i in 1..2 * bound {
        b.proper(RlP(i), RlP(i + 1));
    }
    for i in 1..=bound {
        b.proper(RlP(2 * i), RlV(i));
        b.proper(RegZ(i), RlV(i));
        if i < bound {
            b.proper(RlV(i), RlV(i + 1));
            b.proper(RegZ(i), RegZ(i + 1));
            b.unknown(RegZ(i + 1), RlV(i));
        }
    }
    b.elided(RlP(2 * bound), Reg);
    b.elided(RlV(bound), Reg);
    b.elided(RegZ(bound), Reg);
}
