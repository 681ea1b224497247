//! Corpus-wide predicate surveys.
//!
//! A corpus is a list of family shorthands plus an optional batch of
//! seeded random connected graphs. Every entry is evaluated against every
//! [`Predicate`]; entries run under the requested [`Execution`] but the
//! report is assembled in corpus order, so identical inputs give
//! byte-identical output.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::exec::Execution;
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::theorems::{Facts, Outcome, Predicate};

/// Entries above this size are skipped with a notice.
pub const SURVEY_VERTEX_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RandomCorpus {
    pub count: usize,
    pub min_n: usize,
    pub max_n: usize,
    /// Upper bound on the edge count; `None` allows complete graphs.
    pub max_m: Option<usize>,
    pub seed: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub families: Vec<FamilySpec>,
    pub random: Option<RandomCorpus>,
}

impl CorpusSpec {
    /// Families first, then the random batch, in generation order.
    pub fn entries(&self) -> Vec<FamilySpec> {
        let mut out = self.families.clone();
        if let Some(r) = &self.random {
            let mut rng = ChaCha8Rng::seed_from_u64(r.seed);
            let lo = r.min_n.max(2);
            let hi = r.max_n.max(lo);
            for _ in 0..r.count {
                let n = rng.gen_range(lo..=hi);
                let full = n * (n - 1) / 2;
                let top = r.max_m.map_or(full, |m| m.min(full)).max(n - 1);
                let m = rng.gen_range(n - 1..=top);
                out.push(FamilySpec::RandomConnected {
                    n,
                    m,
                    seed: rng.gen(),
                });
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub predicate: Predicate,
    pub applicable: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub predicate: Predicate,
    pub index: usize,
    pub label: String,
    pub detail: String,
    pub edge_list: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyReport {
    pub entries: usize,
    pub notices: Vec<String>,
    pub tallies: Vec<Tally>,
    pub counterexamples: Vec<Counterexample>,
}

impl SurveyReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn tally(&self, p: Predicate) -> &Tally {
        self.tallies
            .iter()
            .find(|t| t.predicate == p)
            .unwrap_or_else(|| unreachable!("every predicate is tallied"))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "survey: {} graphs", self.entries);
        for note in &self.notices {
            let _ = writeln!(out, "notice: {note}");
        }
        let _ = writeln!(
            out,
            "{:<30} {:>10} {:>6} {:>6} {:>8}",
            "predicate", "applicable", "pass", "fail", "skipped"
        );
        for t in &self.tallies {
            let _ = writeln!(
                out,
                "{:<30} {:>10} {:>6} {:>6} {:>8}",
                t.predicate.name(),
                t.applicable,
                t.passed,
                t.failed,
                t.skipped
            );
        }
        for c in &self.counterexamples {
            let _ = writeln!(
                out,
                "counterexample: {} on #{} ({}): {}",
                c.predicate.name(),
                c.index,
                c.label,
                c.detail
            );
        }
        let _ = writeln!(
            out,
            "result: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        );
        out
    }
}

enum EntryResult {
    Evaluated {
        label: String,
        graph: Graph,
        outcomes: Vec<(Predicate, Outcome)>,
    },
    Skipped(String),
}

fn evaluate(spec: &FamilySpec) -> Result<EntryResult> {
    let (g, _) = spec.generate()?;
    if g.n() > SURVEY_VERTEX_CAP {
        return Ok(EntryResult::Skipped(format!(
            "{spec}: {} vertices exceeds the survey cap of {SURVEY_VERTEX_CAP}",
            g.n()
        )));
    }
    let facts = Facts::new(&g);
    Ok(EntryResult::Evaluated {
        label: spec.to_string(),
        outcomes: facts.evaluate_all(),
        graph: g,
    })
}

pub fn survey(corpus: &CorpusSpec, exec: Execution) -> Result<SurveyReport> {
    let entries = corpus.entries();
    let results = exec.map(&entries, evaluate);
    let mut tallies: Vec<Tally> = Predicate::ALL
        .iter()
        .map(|&predicate| Tally {
            predicate,
            applicable: 0,
            passed: 0,
            failed: 0,
            skipped: 0,
        })
        .collect();
    let mut notices = Vec::new();
    let mut counterexamples = Vec::new();
    for (index, result) in results.into_iter().enumerate() {
        match result? {
            EntryResult::Skipped(note) => notices.push(format!("#{index} skipped: {note}")),
            EntryResult::Evaluated {
                label,
                graph,
                outcomes,
            } => {
                for (slot, (predicate, outcome)) in tallies.iter_mut().zip(outcomes) {
                    match outcome {
                        Outcome::Pass => {
                            slot.applicable += 1;
                            slot.passed += 1;
                        }
                        Outcome::Fail(detail) => {
                            slot.applicable += 1;
                            slot.failed += 1;
                            counterexamples.push(Counterexample {
                                predicate,
                                index,
                                label: label.clone(),
                                detail,
                                edge_list: graph.to_edge_list(),
                            });
                        }
                        Outcome::Skipped(_) => slot.skipped += 1,
                        Outcome::NotApplicable => {}
                    }
                }
            }
        }
    }
    Ok(SurveyReport {
        entries: entries.len(),
        notices,
        tallies,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_entries_are_reproducible() {
        let spec = CorpusSpec {
            families: vec![],
            random: Some(RandomCorpus {
                count: 20,
                min_n: 4,
                max_n: 8,
                max_m: None,
                seed: 7,
            }),
        };
        assert_eq!(spec.entries(), spec.entries());
        assert_eq!(spec.entries().len(), 20);
        for e in spec.entries() {
            assert!(e.generate().is_ok(), "{e}");
        }
    }

    #[test]
    fn cycle_survey() {
        let spec = CorpusSpec {
            families: FamilySpec::parse_many("cycle:3..6").unwrap(),
            random: None,
        };
        let report = survey(&spec, Execution::Sequential).unwrap();
        assert_eq!(report.tally(Predicate::CycleBridge).passed, 4);
        // odd cycles have chi_o > 1 but chromatic index 3 > Delta
        let failing: Vec<(Predicate, &str)> = report
            .counterexamples
            .iter()
            .map(|c| (c.predicate, c.label.as_str()))
            .collect();
        assert_eq!(
            failing,
            vec![
                (Predicate::ClassOne, "cycle:3"),
                (Predicate::ClassOne, "cycle:5")
            ]
        );
    }
}
