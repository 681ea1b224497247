//! Single-graph analysis reports and witness files.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::chroma::{self, ChromaResult, VizingClass};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{Graph, GraphClass};
use crate::oriented::{self, CircularPartition, CircularStructure, PartitionRecord};
use crate::periodic::{self, VertexColouring};
use crate::theorems::{Facts, Outcome, Predicate};

/// Graphs above this size get no theorem flags in their report.
pub const THEOREM_FLAG_VERTEX_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub class: GraphClass,
    pub girth: Option<usize>,
    pub bipartite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiTRow {
    pub t: usize,
    pub k: usize,
    pub unconstrained: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremFlag {
    pub predicate: Predicate,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub input: String,
    pub summary: GraphSummary,
    pub chi_o: usize,
    pub feasible_k: Vec<usize>,
    pub witness: PartitionRecord,
    pub chi_t: Vec<ChiTRow>,
    pub chroma: Option<ChromaResult>,
    pub notes: Vec<String>,
    pub theorems: Vec<TheoremFlag>,
}

pub fn parse_t_range(text: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Parse {
        line: 0,
        message: format!("`{text}` is not a range A..B or a single t"),
    };
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text.trim(), text.trim()),
    };
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

pub fn analyze(g: &Graph, input: &str, t_range: RangeInclusive<usize>) -> Result<AnalysisReport> {
    for t in [*t_range.start(), *t_range.end()] {
        periodic::check_period(g, t)?;
    }
    let circular = CircularStructure::new(g);
    let chi_o = circular.chi_o();
    let witness = circular
        .partition(chi_o)
        .unwrap_or_else(|| unreachable!("chi_o is feasible"))
        .to_record(g);
    let chi_t = t_range
        .map(|t| {
            periodic::chi_t(g, t).map(|r| ChiTRow {
                t,
                k: r.k,
                unconstrained: r.unconstrained,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut notes = Vec::new();
    let chroma = match chroma::chroma(g) {
        Ok(c) => Some(c),
        Err(e) => {
            notes.push(e.to_string());
            None
        }
    };
    let theorems = if g.n() <= THEOREM_FLAG_VERTEX_CAP {
        Facts::new(g)
            .evaluate_all()
            .into_iter()
            .map(|(predicate, outcome)| TheoremFlag { predicate, outcome })
            .collect()
    } else {
        notes.push(format!(
            "theorem flags are computed for graphs with at most {THEOREM_FLAG_VERTEX_CAP} vertices"
        ));
        Vec::new()
    };
    Ok(AnalysisReport {
        input: input.to_string(),
        summary: GraphSummary {
            n: g.n(),
            m: g.m(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            class: g.classify(),
            girth: g.girth(),
            bipartite: g.is_bipartite().is_some(),
        },
        chi_o,
        feasible_k: circular.feasible_k_set(Execution::default()),
        witness,
        chi_t,
        chroma,
        notes,
        theorems,
    })
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl AnalysisReport {
    pub fn render_text(&self) -> String {
        let s = &self.summary;
        let mut out = String::new();
        let _ = writeln!(out, "graph: {}", self.input);
        let class = match &s.class {
            GraphClass::Path { length } => format!("path (length {length})"),
            GraphClass::Cycle { length } => format!("cycle (length {length})"),
            GraphClass::Star { leaves } => format!("star ({leaves} leaves)"),
            GraphClass::ExtendedStar { arms, diameter } => {
                format!("extended star (arms {}, diameter {diameter})", join(arms))
            }
            other => other.name().to_string(),
        };
        let _ = writeln!(
            out,
            "  n = {}, m = {}, degree {}..{}, {}, girth {}, bipartite {}",
            s.n,
            s.m,
            s.min_degree,
            s.max_degree,
            class,
            s.girth.map_or("none".to_string(), |g| g.to_string()),
            if s.bipartite { "yes" } else { "no" }
        );
        let _ = writeln!(out, "chi_o = {}", self.chi_o);
        let _ = writeln!(out, "  feasible k: {}", join(&self.feasible_k));
        let _ = writeln!(out, "chi_t:");
        for row in &self.chi_t {
            let _ = write!(out, "  t = {:<3} k = {}", row.t, row.k);
            if !row.unconstrained.is_empty() {
                let _ = write!(out, "  (unconstrained: {})", join(&row.unconstrained));
            }
            out.push('\n');
        }
        if let Some(c) = &self.chroma {
            let _ = writeln!(
                out,
                "chi = {}, chi_star = {}, delta = {}, class {}",
                c.chi,
                c.chi_star,
                c.delta,
                match c.vizing_class {
                    VizingClass::One => "one",
                    VizingClass::Two => "two",
                }
            );
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        if !self.theorems.is_empty() {
            let _ = writeln!(out, "predicates:");
            for f in &self.theorems {
                let outcome = match &f.outcome {
                    Outcome::Pass => "pass".to_string(),
                    Outcome::Fail(d) => format!("FAIL ({d})"),
                    Outcome::NotApplicable => "n/a".to_string(),
                    Outcome::Skipped(why) => format!("skipped ({why})"),
                };
                let _ = writeln!(out, "  {:<30} {}", f.predicate.name(), outcome);
            }
        }
        out
    }
}

/// A witness file: either a circular partition or a vertex colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Circular(PartitionRecord),
    Periodic(VertexColouring),
}

impl Witness {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: format!("not a witness file: {e}"),
        })
    }
}

/// Verifies a witness against `g`, returning one line per violation.
/// A witness built for a different graph yields [`Error::Mismatch`].
pub fn verify_witness(g: &Graph, w: &Witness) -> Result<Vec<String>> {
    match w {
        Witness::Circular(record) => {
            let p = CircularPartition::from_record(g, record)?;
            Ok(oriented::verify_partition(g, &p)?
                .iter()
                .map(ToString::to_string)
                .collect())
        }
        Witness::Periodic(c) => {
            if c.colours.len() != g.n() {
                return Err(Error::Mismatch(format!(
                    "{} colours for a graph on {} vertices",
                    c.colours.len(),
                    g.n()
                )));
            }
            Ok(periodic::verify_t_periodic(g, c.t, c)?
                .iter()
                .map(ToString::to_string)
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn family(s: &str) -> Graph {
        FamilySpec::parse(s).unwrap().generate().unwrap().0
    }

    #[test]
    fn analyze_cycle_six() {
        let g = family("cycle:6");
        let r = analyze(&g, "cycle:6", 1..=6).unwrap();
        assert_eq!(r.chi_o, 6);
        let ks: Vec<usize> = r.chi_t.iter().map(|row| row.k).collect();
        assert_eq!(ks, vec![1, 2, 3, 2, 1, 6]);
        assert!(r.theorems.iter().all(|f| !f.outcome.is_fail()));
    }

    #[test]
    fn analyze_path_and_complete() {
        assert_eq!(
            analyze(&family("path:3"), "path:3", 1..=3).unwrap().chi_o,
            6
        );
        let r = analyze(&family("complete:4"), "complete:4", 1..=3).unwrap();
        assert_eq!(r.chi_o, 1);
        assert_eq!(r.chroma.unwrap().chi, 4);
    }

    #[test]
    fn analyze_rejects_bad_range() {
        assert!(analyze(&family("cycle:5"), "cycle:5", 0..=3).is_err());
        assert!(analyze(&family("cycle:5"), "cycle:5", 1..=6).is_err());
    }

    #[test]
    fn t_range_parsing() {
        assert_eq!(parse_t_range("1..6").unwrap(), 1..=6);
        assert_eq!(parse_t_range("3").unwrap(), 3..=3);
        assert!(parse_t_range("6..1").is_err());
        assert!(parse_t_range("a..b").is_err());
    }

    #[test]
    fn witness_json_forms() {
        let g = family("cycle:6");
        let p = oriented::is_circularly_k_partite(&g, 3).unwrap().unwrap();
        let json = serde_json::to_string(&p.to_record(&g)).unwrap();
        let w = Witness::from_json(&json).unwrap();
        assert!(matches!(w, Witness::Circular(_)));
        assert!(verify_witness(&g, &w).unwrap().is_empty());

        let c = periodic::build_t_periodic_colouring(&g, 3).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"t":3,"k":3,"colours":[0,1,2,0,1,2]}"#);
        let w = Witness::from_json(&json).unwrap();
        assert!(verify_witness(&g, &w).unwrap().is_empty());
        assert!(matches!(
            verify_witness(&family("cycle:7"), &w),
            Err(Error::Mismatch(_))
        ));
    }
}
