//! Checkable statements about the two periodic colouring numbers, each
//! evaluated as a predicate on a single graph.
//!
//! [`Facts`] computes everything a graph's predicates need once;
//! [`Predicate::evaluate`] then returns an [`Outcome`] per statement.

use serde::Serialize;

use crate::chroma::{self, ChromaResult};
use crate::exec::Execution;
use crate::graph::{Graph, GraphClass};
use crate::oracles::{self, ORACLE_CHI_O_EDGE_CAP, ORACLE_CHI_T_VERTEX_CAP};
use crate::oriented::{gcd, CircularStructure, NonBacktracking};
use crate::periodic::{self, PathRelation};

/// Cycle and branch-path enumeration limit for the cross-checks.
pub const ENUMERATION_VERTEX_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail(String),
    NotApplicable,
    Skipped(String),
}

impl Outcome {
    fn check(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    /// Arc count equals the sum of `deg (deg - 1)`.
    ArcCount,
    /// Every emitted circular partition verifies.
    PartitionRoundTrip,
    /// Outside paths and extended stars the feasible `k` are the divisors of `chi_o`.
    DivisorStructure,
    /// Outside paths and extended stars, `k` is feasible iff it divides every
    /// cycle length and twice every branch-to-branch path length.
    CycleBranchCharacterisation,
    /// Two cycles of coprime lengths force `chi_o = 1`.
    CoprimeCycles,
    /// `d`-regular with `d >= 3` gives `chi_o` in `{1, 2}`, 2 iff bipartite.
    RegularBound,
    /// Outside extended stars, `chi_o` is even iff `chi = 2`.
    ParityBipartite,
    /// Outside extended stars, odd `chi_o > 1` gives `chi = 3`.
    OddThreeColourable,
    /// `chi_o > 1` gives `chi_star = Delta`.
    ClassOne,
    /// `chi_star` is `Delta` or `Delta + 1`.
    Vizing,
    /// `1 <= chi_t <= t` whenever every vertex ends a `t`-path.
    ChiTBounds,
    /// Bipartite iff `chi_2 = 2`.
    BipartiteChiTwo,
    /// A cycle of length `l` gives `chi_t <= gcd(t, l)` for `t <= l`.
    CycleGcdBound,
    /// Cycles: `chi_t = gcd(t, N)`.
    CycleGcd,
    /// Cycles: `chi_t = t` iff circularly `t`-partite.
    CycleBridge,
    /// Min degree >= 2, not a cycle, `3 <= t <= girth`: `chi_t <= t/2 + 1`
    /// and the finest colouring has the palindromic shape.
    TauBound,
    /// Same domain: `chi_t = t/2 + 1` iff circularly `t`-partite.
    TauBridge,
    /// Average degree >= 4 gives `chi_t <= 2`.
    DenseTwoColours,
    /// Component method agrees with the brute-force `chi_o`.
    OracleChiO,
    /// Union-find closure agrees with the brute-force `chi_t`.
    OracleChiT,
}

impl Predicate {
    pub const ALL: [Predicate; 20] = [
        Predicate::ArcCount,
        Predicate::PartitionRoundTrip,
        Predicate::DivisorStructure,
        Predicate::CycleBranchCharacterisation,
        Predicate::CoprimeCycles,
        Predicate::RegularBound,
        Predicate::ParityBipartite,
        Predicate::OddThreeColourable,
        Predicate::ClassOne,
        Predicate::Vizing,
        Predicate::ChiTBounds,
        Predicate::BipartiteChiTwo,
        Predicate::CycleGcdBound,
        Predicate::CycleGcd,
        Predicate::CycleBridge,
        Predicate::TauBound,
        Predicate::TauBridge,
        Predicate::DenseTwoColours,
        Predicate::OracleChiO,
        Predicate::OracleChiT,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::ArcCount => "arc_count",
            Predicate::PartitionRoundTrip => "partition_round_trip",
            Predicate::DivisorStructure => "divisor_structure",
            Predicate::CycleBranchCharacterisation => "cycle_branch_characterisation",
            Predicate::CoprimeCycles => "coprime_cycles",
            Predicate::RegularBound => "regular_bound",
            Predicate::ParityBipartite => "parity_bipartite",
            Predicate::OddThreeColourable => "odd_three_colourable",
            Predicate::ClassOne => "class_one",
            Predicate::Vizing => "vizing",
            Predicate::ChiTBounds => "chi_t_bounds",
            Predicate::BipartiteChiTwo => "bipartite_chi_two",
            Predicate::CycleGcdBound => "cycle_gcd_bound",
            Predicate::CycleGcd => "cycle_gcd",
            Predicate::CycleBridge => "cycle_bridge",
            Predicate::TauBound => "tau_bound",
            Predicate::TauBridge => "tau_bridge",
            Predicate::DenseTwoColours => "dense_two_colours",
            Predicate::OracleChiO => "oracle_chi_o",
            Predicate::OracleChiT => "oracle_chi_t",
        }
    }

    pub fn evaluate(self, f: &Facts) -> Outcome {
        match self {
            Predicate::ArcCount => arc_count(f),
            Predicate::PartitionRoundTrip => partition_round_trip(f),
            Predicate::DivisorStructure => divisor_structure(f),
            Predicate::CycleBranchCharacterisation => cycle_branch_characterisation(f),
            Predicate::CoprimeCycles => coprime_cycles(f),
            Predicate::RegularBound => regular_bound(f),
            Predicate::ParityBipartite => parity_bipartite(f),
            Predicate::OddThreeColourable => odd_three(f),
            Predicate::ClassOne => class_one(f),
            Predicate::Vizing => vizing(f),
            Predicate::ChiTBounds => chi_t_bounds(f),
            Predicate::BipartiteChiTwo => bipartite_chi_two(f),
            Predicate::CycleGcdBound => cycle_gcd_bound(f),
            Predicate::CycleGcd => cycle_gcd(f),
            Predicate::CycleBridge => cycle_bridge(f),
            Predicate::TauBound => tau_bound(f),
            Predicate::TauBridge => tau_bridge(f),
            Predicate::DenseTwoColours => dense_two_colours(f),
            Predicate::OracleChiO => oracle_chi_o(f),
            Predicate::OracleChiT => oracle_chi_t(f),
        }
    }
}

/// Everything the predicates read, computed once per graph.
#[derive(Debug, Clone)]
pub struct Facts {
    pub graph: Graph,
    pub class: GraphClass,
    pub circular: CircularStructure,
    pub chi_o: usize,
    pub feasible: Vec<usize>,
    /// Entry `t - 1` is the relation for `t = 1..=n`.
    pub relations: Vec<PathRelation>,
    /// `k` for each relation.
    pub chi_t: Vec<usize>,
    pub bipartite: bool,
    pub girth: Option<usize>,
    pub chroma: Option<ChromaResult>,
    /// Simple cycles, when the graph is small enough to enumerate them.
    pub cycles: Option<Vec<Vec<usize>>>,
}

impl Facts {
    pub fn new(g: &Graph) -> Self {
        let circular = CircularStructure::new(g);
        let chi_o = circular.chi_o();
        let feasible = circular.feasible_k_set(Execution::Sequential);
        let relations: Vec<PathRelation> = (1..=g.n())
            .map(|t| {
                periodic::path_relation_with(g, t, Execution::Sequential)
                    .unwrap_or_else(|_| unreachable!("t in 1..=n"))
            })
            .collect();
        let chi_t = relations
            .iter()
            .map(|rel| {
                let mut sets = crate::dsu::DisjointSets::new(g.n());
                for &(u, v) in &rel.pairs {
                    sets.union(u, v);
                }
                sets.set_count()
            })
            .collect();
        Facts {
            graph: g.clone(),
            class: g.classify(),
            circular,
            chi_o,
            feasible,
            relations,
            chi_t,
            bipartite: g.is_bipartite().is_some(),
            girth: g.girth(),
            chroma: chroma::chroma(g).ok(),
            cycles: (g.n() <= ENUMERATION_VERTEX_CAP).then(|| g.simple_cycles()),
        }
    }

    pub fn chi_t_at(&self, t: usize) -> usize {
        self.chi_t[t - 1]
    }

    fn is_path_or_extended_star(&self) -> bool {
        self.class.is_path() || self.class.is_extended_star()
    }

    fn cycle_lengths(&self) -> Option<Vec<usize>> {
        self.cycles.as_ref().map(|cs| {
            let mut l: Vec<usize> = cs.iter().map(Vec::len).collect();
            l.sort_unstable();
            l.dedup();
            l
        })
    }

    pub fn evaluate_all(&self) -> Vec<(Predicate, Outcome)> {
        Predicate::ALL
            .iter()
            .map(|&p| (p, p.evaluate(self)))
            .collect()
    }
}

fn divisors(x: usize) -> Vec<usize> {
    (1..=x).filter(|d| x.is_multiple_of(*d)).collect()
}

fn arc_count(f: &Facts) -> Outcome {
    let g = &f.graph;
    let expected: usize = (0..g.n()).map(|v| g.degree(v) * (g.degree(v) - 1)).sum();
    let got = NonBacktracking::new(g).arc_count();
    Outcome::check(got == expected, || {
        format!("{got} arcs, expected {expected}")
    })
}

fn partition_round_trip(f: &Facts) -> Outcome {
    for k in 1..=f.circular.oriented_edge_count() {
        if let Some(p) = f.circular.partition(k) {
            match crate::oriented::verify_partition(&f.graph, &p) {
                Ok(v) if v.is_empty() => {}
                Ok(v) => return Outcome::Fail(format!("k = {k}: {}", v[0])),
                Err(e) => return Outcome::Fail(e.to_string()),
            }
        }
    }
    Outcome::Pass
}

fn divisor_structure(f: &Facts) -> Outcome {
    if f.is_path_or_extended_star() {
        return Outcome::NotApplicable;
    }
    let want = divisors(f.chi_o);
    Outcome::check(f.feasible == want, || {
        format!(
            "feasible {:?} but divisors of {} are {:?}",
            f.feasible, f.chi_o, want
        )
    })
}

// Lengths of all simple paths between each pair of distinct branch vertices.
fn branch_path_lengths(g: &Graph) -> Vec<usize> {
    let branches = g.branch_vertices();
    let mut lengths = Vec::new();
    for (i, &a) in branches.iter().enumerate() {
        for &b in &branches[i + 1..] {
            let mut on = vec![false; g.n()];
            on[a] = true;
            collect_path_lengths(g, a, b, 0, &mut on, &mut lengths);
        }
    }
    lengths.sort_unstable();
    lengths.dedup();
    lengths
}

fn collect_path_lengths(
    g: &Graph,
    v: usize,
    target: usize,
    len: usize,
    on: &mut [bool],
    out: &mut Vec<usize>,
) {
    for &w in g.neighbours(v) {
        if w == target {
            out.push(len + 1);
        } else if !on[w] {
            on[w] = true;
            collect_path_lengths(g, w, target, len + 1, on, out);
            on[w] = false;
        }
    }
}

fn cycle_branch_characterisation(f: &Facts) -> Outcome {
    if f.is_path_or_extended_star() {
        return Outcome::NotApplicable;
    }
    let Some(cycles) = f.cycle_lengths() else {
        return Outcome::Skipped(format!("n > {ENUMERATION_VERTEX_CAP}"));
    };
    let branch = branch_path_lengths(&f.graph);
    for k in 1..=f.circular.oriented_edge_count() {
        let structural = cycles.iter().all(|l| l % k == 0) && branch.iter().all(|l| 2 * l % k == 0);
        let feasible = f.feasible.contains(&k);
        if structural != feasible {
            return Outcome::Fail(format!(
                "k = {k}: feasible = {feasible}, cycle/branch condition = {structural}"
            ));
        }
    }
    Outcome::Pass
}

fn coprime_cycles(f: &Facts) -> Outcome {
    let Some(lengths) = f.cycle_lengths() else {
        return Outcome::Skipped(format!("n > {ENUMERATION_VERTEX_CAP}"));
    };
    let pair = lengths.iter().enumerate().find_map(|(i, &q)| {
        lengths[i + 1..]
            .iter()
            .find(|&&r| gcd(q as u64, r as u64) == 1)
            .map(|&r| (q, r))
    });
    match pair {
        None => Outcome::NotApplicable,
        Some((q, r)) => Outcome::check(f.chi_o == 1, || {
            format!("cycles of lengths {q} and {r} but chi_o = {}", f.chi_o)
        }),
    }
}

fn regular_bound(f: &Facts) -> Outcome {
    let g = &f.graph;
    if !g.is_regular() || g.min_degree() < 3 {
        return Outcome::NotApplicable;
    }
    let expected = if f.bipartite { 2 } else { 1 };
    Outcome::check(f.chi_o == expected, || {
        format!(
            "{}-regular, bipartite = {}, chi_o = {}",
            g.min_degree(),
            f.bipartite,
            f.chi_o
        )
    })
}

fn parity_bipartite(f: &Facts) -> Outcome {
    if f.class.is_extended_star() {
        return Outcome::NotApplicable;
    }
    let Some(c) = &f.chroma else {
        return Outcome::Skipped("outside chromatic caps".into());
    };
    Outcome::check(f.chi_o.is_multiple_of(2) == (c.chi == 2), || {
        format!("chi_o = {}, chi = {}", f.chi_o, c.chi)
    })
}

fn odd_three(f: &Facts) -> Outcome {
    if f.class.is_extended_star() || f.chi_o.is_multiple_of(2) || f.chi_o == 1 {
        return Outcome::NotApplicable;
    }
    let Some(c) = &f.chroma else {
        return Outcome::Skipped("outside chromatic caps".into());
    };
    Outcome::check(c.chi == 3, || {
        format!("chi_o = {}, chi = {}", f.chi_o, c.chi)
    })
}

fn class_one(f: &Facts) -> Outcome {
    if f.chi_o <= 1 {
        return Outcome::NotApplicable;
    }
    let Some(c) = &f.chroma else {
        return Outcome::Skipped("outside chromatic caps".into());
    };
    Outcome::check(c.chi_star == c.delta, || {
        format!(
            "chi_o = {}, chi_star = {}, delta = {}",
            f.chi_o, c.chi_star, c.delta
        )
    })
}

fn vizing(f: &Facts) -> Outcome {
    let Some(c) = &f.chroma else {
        return Outcome::Skipped("outside chromatic caps".into());
    };
    Outcome::check(c.chi_star == c.delta || c.chi_star == c.delta + 1, || {
        format!("chi_star = {}, delta = {}", c.chi_star, c.delta)
    })
}

/// Periods `t < n` at which every vertex ends some `t`-path.
fn covered_periods(f: &Facts) -> Vec<usize> {
    let n = f.graph.n();
    (1..n)
        .filter(|&t| f.relations[t - 1].covers_all(n))
        .collect()
}

fn chi_t_bounds(f: &Facts) -> Outcome {
    let ts = covered_periods(f);
    if ts.is_empty() {
        return Outcome::NotApplicable;
    }
    for t in ts {
        let k = f.chi_t_at(t);
        if !(1..=t).contains(&k) {
            return Outcome::Fail(format!("t = {t}: chi_t = {k}"));
        }
    }
    Outcome::Pass
}

fn bipartite_chi_two(f: &Facts) -> Outcome {
    if f.graph.n() < 3 {
        return Outcome::NotApplicable;
    }
    let k = f.chi_t_at(2);
    Outcome::check((k == 2) == f.bipartite, || {
        format!("chi_2 = {k}, bipartite = {}", f.bipartite)
    })
}

fn cycle_gcd_bound(f: &Facts) -> Outcome {
    let Some(lengths) = f.cycle_lengths() else {
        return Outcome::Skipped(format!("n > {ENUMERATION_VERTEX_CAP}"));
    };
    if lengths.is_empty() {
        return Outcome::NotApplicable;
    }
    let n = f.graph.n();
    let ts = covered_periods(f);
    for &l in &lengths {
        for &t in ts.iter().filter(|&&t| t <= l) {
            let bound = gcd(t as u64, l as u64) as usize;
            if f.chi_t_at(t) > bound {
                return Outcome::Fail(format!(
                    "cycle of length {l}, t = {t}: chi_t = {} > {bound}",
                    f.chi_t_at(t)
                ));
            }
        }
        debug_assert!(l <= n);
    }
    Outcome::Pass
}

fn cycle_gcd(f: &Facts) -> Outcome {
    let GraphClass::Cycle { length } = f.class else {
        return Outcome::NotApplicable;
    };
    for t in 1..=length {
        let want = gcd(t as u64, length as u64) as usize;
        if f.chi_t_at(t) != want {
            return Outcome::Fail(format!("t = {t}: chi_t = {} != {want}", f.chi_t_at(t)));
        }
    }
    Outcome::Pass
}

fn cycle_bridge(f: &Facts) -> Outcome {
    let GraphClass::Cycle { length } = f.class else {
        return Outcome::NotApplicable;
    };
    for t in 1..=length {
        let lhs = f.chi_t_at(t) == t;
        let rhs = f.feasible.contains(&t);
        if lhs != rhs {
            return Outcome::Fail(format!("t = {t}: chi_t = t is {lhs}, feasible is {rhs}"));
        }
    }
    Outcome::Pass
}

/// Periods covered by the palindromic-shape statements.
pub fn tau_periods(g: &Graph) -> Vec<usize> {
    if g.min_degree() < 2 || g.is_cycle() {
        return Vec::new();
    }
    match g.girth() {
        Some(girth) => (3..=girth.min(g.n())).collect(),
        None => Vec::new(),
    }
}

fn tau_bound(f: &Facts) -> Outcome {
    let ts = tau_periods(&f.graph);
    if ts.is_empty() {
        return Outcome::NotApplicable;
    }
    for t in ts {
        let tau = t / 2;
        let k = f.chi_t_at(t);
        if k > tau + 1 {
            return Outcome::Fail(format!("t = {t}: chi_t = {k} > {}", tau + 1));
        }
        let colouring = match periodic::build_t_periodic_colouring(&f.graph, t) {
            Ok(c) => c,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        match periodic::tau_shape(&f.graph, t, &colouring) {
            Ok(shape) if shape.matches_pattern && shape.distinct_slots >= k => {}
            Ok(shape) => {
                return Outcome::Fail(format!(
                    "t = {t}: pattern holds = {}, {} distinct slots for {k} colours",
                    shape.matches_pattern, shape.distinct_slots
                ))
            }
            Err(e) => return Outcome::Fail(format!("t = {t}: {e}")),
        }
    }
    Outcome::Pass
}

fn tau_bridge(f: &Facts) -> Outcome {
    let ts = tau_periods(&f.graph);
    if ts.is_empty() {
        return Outcome::NotApplicable;
    }
    for t in ts {
        let lhs = f.chi_t_at(t) == t / 2 + 1;
        let rhs = f.feasible.contains(&t);
        if lhs != rhs {
            return Outcome::Fail(format!(
                "t = {t}: chi_t = {} (tau + 1 = {}), feasible = {rhs}",
                f.chi_t_at(t),
                t / 2 + 1
            ));
        }
    }
    Outcome::Pass
}

fn dense_two_colours(f: &Facts) -> Outcome {
    if f.graph.average_degree() < 4.0 {
        return Outcome::NotApplicable;
    }
    for t in covered_periods(f) {
        if f.chi_t_at(t) > 2 {
            return Outcome::Fail(format!("t = {t}: chi_t = {}", f.chi_t_at(t)));
        }
    }
    Outcome::Pass
}

fn oracle_chi_o(f: &Facts) -> Outcome {
    if f.graph.m() > ORACLE_CHI_O_EDGE_CAP {
        return Outcome::Skipped(format!("m > {ORACLE_CHI_O_EDGE_CAP}"));
    }
    match oracles::oracle_chi_o(&f.graph) {
        Ok(k) => Outcome::check(k == f.chi_o, || {
            format!("oracle {k}, components {}", f.chi_o)
        }),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn oracle_chi_t(f: &Facts) -> Outcome {
    if f.graph.n() > ORACLE_CHI_T_VERTEX_CAP {
        return Outcome::Skipped(format!("n > {ORACLE_CHI_T_VERTEX_CAP}"));
    }
    for t in 1..=f.graph.n() {
        match oracles::oracle_chi_t(&f.graph, t) {
            Ok(k) if k == f.chi_t_at(t) => {}
            Ok(k) => {
                return Outcome::Fail(format!("t = {t}: oracle {k}, closure {}", f.chi_t_at(t)))
            }
            Err(e) => return Outcome::Fail(e.to_string()),
        }
    }
    Outcome::Pass
}
