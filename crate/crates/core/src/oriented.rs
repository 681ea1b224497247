//! Circular k-partitions of oriented edges.
//!
//! Every edge `{v, w}` yields two oriented edges `[v, w]` and `[w, v]`. A
//! non-backtracking arc runs from `[v1, v2]` to `[v2, w2]` whenever
//! `w2 != v1`. A circular k-partition assigns each oriented edge a class in
//! `Z_k` so that every arc steps the class by exactly one and every class
//! is used.
//!
//! The arc relation splits into weak components. Inside a component the
//! class of one member fixes the class of every other member up to a
//! multiple of the component's discrepancy gcd (the gcd of all signed
//! value sums around closed walks in the undirected arc relation). A
//! component therefore admits the step rule modulo `k` iff `k` divides that
//! gcd, and the only freedom left is one rotation per component. Deciding
//! `k` reduces to choosing rotations whose shifted residue sets cover `Z_k`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct OrientedEdge {
    pub input: usize,
    pub output: usize,
}

impl From<[usize; 2]> for OrientedEdge {
    fn from([input, output]: [usize; 2]) -> Self {
        OrientedEdge { input, output }
    }
}

impl From<OrientedEdge> for [usize; 2] {
    fn from(e: OrientedEdge) -> Self {
        [e.input, e.output]
    }
}

impl std::fmt::Display for OrientedEdge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}]", self.input, self.output)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NbArc {
    pub tail: OrientedEdge,
    pub head: OrientedEdge,
}

/// The non-backtracking relation on oriented edges, with oriented edges
/// numbered in canonical `(input, output)` order.
#[derive(Debug, Clone)]
pub struct NonBacktracking {
    edges: Vec<OrientedEdge>,
    offsets: Vec<usize>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
}

impl NonBacktracking {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut edges = Vec::with_capacity(2 * g.m());
        for v in 0..n {
            offsets.push(edges.len());
            edges.extend(g.neighbours(v).iter().map(|&w| OrientedEdge {
                input: v,
                output: w,
            }));
        }
        offsets.push(edges.len());

        let mut succ = vec![Vec::new(); edges.len()];
        let mut pred = vec![Vec::new(); edges.len()];
        for (id, e) in edges.iter().enumerate() {
            let w = e.output;
            for (pos, &z) in g.neighbours(w).iter().enumerate() {
                if z != e.input {
                    let head = offsets[w] + pos;
                    succ[id].push(head);
                    pred[head].push(id);
                }
            }
        }
        NonBacktracking {
            edges,
            offsets,
            succ,
            pred,
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[OrientedEdge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> OrientedEdge {
        self.edges[id]
    }

    /// Canonical index of `[v, w]`, if it is an oriented edge.
    pub fn index_of(&self, g: &Graph, e: OrientedEdge) -> Option<usize> {
        if e.input >= g.n() {
            return None;
        }
        g.neighbours(e.input)
            .binary_search(&e.output)
            .ok()
            .map(|pos| self.offsets[e.input] + pos)
    }

    pub fn successors(&self, id: usize) -> &[usize] {
        &self.succ[id]
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(t, hs)| hs.iter().map(move |&h| (t, h)))
    }

    /// Weak components with relative values and discrepancy gcds, ordered
    /// by smallest member.
    pub fn components(&self) -> Vec<ConstraintComponent> {
        let total = self.len();
        let mut value: Vec<Option<i64>> = vec![None; total];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..total {
            if value[root].is_some() {
                continue;
            }
            value[root] = Some(0);
            stack.push(root);
            let mut ids = Vec::new();
            while let Some(x) = stack.pop() {
                ids.push(x);
                let vx = value[x].unwrap_or(0);
                for (&y, step) in self.succ[x]
                    .iter()
                    .map(|y| (y, 1))
                    .chain(self.pred[x].iter().map(|y| (y, -1)))
                {
                    if value[y].is_none() {
                        value[y] = Some(vx + step);
                        stack.push(y);
                    }
                }
            }
            ids.sort_unstable();
            let values: Vec<i64> = ids.iter().map(|&i| value[i].unwrap_or(0)).collect();
            // tree arcs contribute zero, so folding over every arc is exact
            let mut disc = 0u64;
            for &t in &ids {
                for &h in &self.succ[t] {
                    let d = value[h].unwrap_or(0) - value[t].unwrap_or(0) - 1;
                    disc = gcd(disc, d.unsigned_abs());
                }
            }
            out.push(ConstraintComponent {
                members: ids.iter().map(|&i| self.edges[i]).collect(),
                ids,
                rel_values: values,
                disc_gcd: disc,
            });
        }
        out
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// One weak component of the non-backtracking arc relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstraintComponent {
    pub members: Vec<OrientedEdge>,
    #[serde(skip)]
    ids: Vec<usize>,
    /// Parallel to `members`; the smallest member sits at 0.
    pub rel_values: Vec<i64>,
    /// Zero when the component carries no closed-walk constraint.
    pub disc_gcd: u64,
}

impl ConstraintComponent {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn value_of(&self, e: OrientedEdge) -> Option<i64> {
        self.members
            .binary_search(&e)
            .ok()
            .map(|i| self.rel_values[i])
    }

    /// Distinct relative values, ascending.
    pub fn attained_values(&self) -> Vec<i64> {
        let mut v = self.rel_values.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn admits_modulus(&self, k: usize) -> bool {
        self.disc_gcd == 0 || self.disc_gcd.is_multiple_of(k as u64)
    }

    fn residues(&self, k: usize) -> Residues {
        let mut r = Residues::empty(k);
        for &v in &self.rel_values {
            r.insert(v.rem_euclid(k as i64) as usize);
        }
        r
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Residues {
    k: usize,
    words: Vec<u64>,
}

impl Residues {
    fn empty(k: usize) -> Self {
        Residues {
            k,
            words: vec![0; k.div_ceil(64)],
        }
    }

    fn insert(&mut self, r: usize) {
        self.words[r / 64] |= 1 << (r % 64);
    }

    fn contains(&self, r: usize) -> bool {
        self.words[r / 64] >> (r % 64) & 1 == 1
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn rotated(&self, shift: usize) -> Residues {
        let mut out = Residues::empty(self.k);
        for r in (0..self.k).filter(|&r| self.contains(r)) {
            out.insert((r + shift) % self.k);
        }
        out
    }

    fn union_with(&mut self, other: &Residues) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }
}

/// A circular k-partition, stored as one class per oriented edge in
/// canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularPartition {
    pub k: usize,
    pub classes: Vec<usize>,
}

/// Wire form of a [`CircularPartition`]: `{k, entries: [[v, w, class], ...]}`
/// with entries in canonical oriented-edge order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRecord {
    pub k: usize,
    pub entries: Vec<[usize; 3]>,
}

impl CircularPartition {
    pub fn to_record(&self, g: &Graph) -> PartitionRecord {
        let nb = NonBacktracking::new(g);
        PartitionRecord {
            k: self.k,
            entries: nb
                .edges()
                .iter()
                .zip(&self.classes)
                .map(|(e, &c)| [e.input, e.output, c])
                .collect(),
        }
    }

    /// Rebuilds a partition from its wire form, checking that the entries
    /// cover exactly the oriented edges of `g`.
    pub fn from_record(g: &Graph, record: &PartitionRecord) -> Result<Self> {
        if record.k == 0 {
            return Err(Error::OutOfRange {
                what: "k",
                value: 0,
                constraint: "k >= 1".into(),
            });
        }
        let nb = NonBacktracking::new(g);
        let mut classes = vec![None; nb.len()];
        for &[v, w, c] in &record.entries {
            let e = OrientedEdge {
                input: v,
                output: w,
            };
            let id = nb.index_of(g, e).ok_or_else(|| {
                Error::Mismatch(format!("{e} is not an oriented edge of the graph"))
            })?;
            if classes[id].is_some() {
                return Err(Error::Mismatch(format!("{e} listed twice")));
            }
            if c >= record.k {
                return Err(Error::OutOfRange {
                    what: "class",
                    value: c,
                    constraint: format!("classes live in 0..{}", record.k),
                });
            }
            classes[id] = Some(c);
        }
        let classes = classes
            .into_iter()
            .enumerate()
            .map(|(id, c)| {
                c.ok_or_else(|| Error::Mismatch(format!("no class given for {}", nb.edge(id))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CircularPartition {
            k: record.k,
            classes,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PartitionViolation {
    Arc {
        tail: OrientedEdge,
        head: OrientedEdge,
        tail_class: usize,
        head_class: usize,
    },
    EmptyClass {
        class: usize,
    },
}

impl std::fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PartitionViolation::Arc {
                tail,
                head,
                tail_class,
                head_class,
            } => write!(
                f,
                "arc {tail} -> {head}: class {tail_class} -> {head_class}"
            ),
            PartitionViolation::EmptyClass { class } => write!(f, "class {class} is empty"),
        }
    }
}

/// Precomputed arc relation and components for repeated queries on one graph.
#[derive(Debug, Clone)]
pub struct CircularStructure {
    nb: NonBacktracking,
    components: Vec<ConstraintComponent>,
}

impl CircularStructure {
    pub fn new(g: &Graph) -> Self {
        let nb = NonBacktracking::new(g);
        let components = nb.components();
        CircularStructure { nb, components }
    }

    pub fn components(&self) -> &[ConstraintComponent] {
        &self.components
    }

    pub fn oriented_edge_count(&self) -> usize {
        self.nb.len()
    }

    /// Lexicographically smallest feasible shift vector, if any.
    fn shifts(&self, k: usize) -> Option<Vec<usize>> {
        if k > self.nb.len() || !self.components.iter().all(|c| c.admits_modulus(k)) {
            return None;
        }
        let residues: Vec<Residues> = self.components.iter().map(|c| c.residues(k)).collect();
        // suffix sums of residue counts for the covering bound
        let mut remaining = vec![0usize; residues.len() + 1];
        for i in (0..residues.len()).rev() {
            remaining[i] = remaining[i + 1] + residues[i].count();
        }
        let mut shifts = Vec::with_capacity(residues.len());
        let covered = Residues::empty(k);
        cover_search(&residues, &remaining, covered, &mut shifts).then_some(shifts)
    }

    pub fn partition(&self, k: usize) -> Option<CircularPartition> {
        let shifts = self.shifts(k)?;
        let mut classes = vec![0; self.nb.len()];
        for (comp, shift) in self.components.iter().zip(shifts) {
            for (&id, &v) in comp.ids.iter().zip(&comp.rel_values) {
                classes[id] = (v + shift as i64).rem_euclid(k as i64) as usize;
            }
        }
        Some(CircularPartition { k, classes })
    }

    pub fn is_feasible(&self, k: usize) -> bool {
        k >= 1 && self.shifts(k).is_some()
    }

    pub fn chi_o(&self) -> usize {
        (1..=self.nb.len())
            .rev()
            .find(|&k| self.is_feasible(k))
            .unwrap_or(1)
    }

    pub fn feasible_k_set(&self, exec: Execution) -> Vec<usize> {
        let flags = exec.map_range(1..self.nb.len() + 1, |k| self.is_feasible(k));
        flags
            .into_iter()
            .enumerate()
            .filter_map(|(i, ok)| ok.then_some(i + 1))
            .collect()
    }
}

fn cover_search(
    residues: &[Residues],
    remaining: &[usize],
    covered: Residues,
    shifts: &mut Vec<usize>,
) -> bool {
    let i = shifts.len();
    let k = covered.k;
    let have = covered.count();
    if i == residues.len() {
        return have == k;
    }
    if have + remaining[i] < k {
        return false;
    }
    // rotating every component together preserves feasibility, so the
    // first component can stay at shift 0
    let candidates = if i == 0 { 1 } else { k };
    for s in 0..candidates {
        let mut next = covered.clone();
        next.union_with(&residues[i].rotated(s));
        shifts.push(s);
        if cover_search(residues, remaining, next, shifts) {
            return true;
        }
        shifts.pop();
        if have == k {
            break;
        }
    }
    false
}

pub fn oriented_edges(g: &Graph) -> Vec<OrientedEdge> {
    NonBacktracking::new(g).edges().to_vec()
}

pub fn nb_arcs(g: &Graph) -> Vec<NbArc> {
    let nb = NonBacktracking::new(g);
    nb.arcs()
        .map(|(t, h)| NbArc {
            tail: nb.edge(t),
            head: nb.edge(h),
        })
        .collect()
}

pub fn constraint_components(g: &Graph) -> Vec<ConstraintComponent> {
    NonBacktracking::new(g).components()
}

pub fn is_circularly_k_partite(g: &Graph, k: usize) -> Result<Option<CircularPartition>> {
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "k",
            value: 0,
            constraint: "k >= 1".into(),
        });
    }
    Ok(CircularStructure::new(g).partition(k))
}

/// Why `g` is not circularly k-partite, naming the violated condition.
/// `None` when it is.
pub fn infeasibility_reason(g: &Graph, k: usize) -> Option<String> {
    let cs = CircularStructure::new(g);
    if k == 0 {
        return Some("k must be at least 1".into());
    }
    if cs.is_feasible(k) {
        return None;
    }
    let total = cs.oriented_edge_count();
    if k > total {
        return Some(format!(
            "k = {k} exceeds the {total} oriented edges, so some class would be empty"
        ));
    }
    if cs.components.iter().all(|c| c.admits_modulus(k)) {
        return Some(format!(
            "every cycle and branch-vertex condition holds for k = {k}, but the graph is a \
             path or extended star whose non-backtracking walks cannot reach all {k} classes"
        ));
    }
    let branch = g.branch_vertices();
    for (i, &u) in branch.iter().enumerate() {
        for &v in &branch[i + 1..] {
            let d = g.distance(u, v).unwrap_or(0);
            if !(2 * d).is_multiple_of(k) {
                return Some(format!(
                    "branch vertices {u} and {v} are joined by a path of length {d}, \
                     and 2 * {d} is not a multiple of k = {k}"
                ));
            }
        }
    }
    let mut bad_cycle = None;
    let mut budget = 100_000usize;
    g.for_each_cycle(|cyc| {
        budget -= 1;
        if cyc.len() % k != 0 {
            bad_cycle = Some(cyc.to_vec());
        }
        bad_cycle.is_some() || budget == 0
    });
    if let Some(cyc) = bad_cycle {
        let walk: Vec<String> = cyc.iter().map(ToString::to_string).collect();
        return Some(format!(
            "the cycle {} has length {}, which is not a multiple of k = {k}",
            walk.join("-"),
            cyc.len()
        ));
    }
    let g = cs
        .components
        .iter()
        .map(|c| c.disc_gcd)
        .find(|&d| d != 0 && d % k as u64 != 0)
        .unwrap_or(0);
    Some(format!(
        "closed non-backtracking walks have lengths with gcd {g}, which is not a multiple of k = {k}"
    ))
}

/// Largest `k` for which `g` is circularly k-partite.
pub fn chi_o(g: &Graph) -> usize {
    CircularStructure::new(g).chi_o()
}

pub fn feasible_k_set(g: &Graph) -> Vec<usize> {
    CircularStructure::new(g).feasible_k_set(Execution::default())
}

/// Checks the step rule on every arc and that every class is used.
pub fn verify_partition(g: &Graph, p: &CircularPartition) -> Result<Vec<PartitionViolation>> {
    let nb = NonBacktracking::new(g);
    if p.classes.len() != nb.len() {
        return Err(Error::PartialMap(format!(
            "{} classes given for {} oriented edges",
            p.classes.len(),
            nb.len()
        )));
    }
    if p.k == 0 {
        return Err(Error::OutOfRange {
            what: "k",
            value: 0,
            constraint: "k >= 1".into(),
        });
    }
    let mut out = Vec::new();
    for (t, h) in nb.arcs() {
        let (ct, ch) = (p.classes[t], p.classes[h]);
        if ch % p.k != (ct + 1) % p.k {
            out.push(PartitionViolation::Arc {
                tail: nb.edge(t),
                head: nb.edge(h),
                tail_class: ct,
                head_class: ch,
            });
        }
    }
    let mut used = vec![false; p.k];
    for &c in &p.classes {
        if c < p.k {
            used[c] = true;
        }
    }
    out.extend(
        used.iter()
            .enumerate()
            .filter(|(_, &u)| !u)
            .map(|(class, _)| PartitionViolation::EmptyClass { class }),
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(len: usize) -> Graph {
        let edges: Vec<_> = (0..len).map(|i| (i, i + 1)).collect();
        Graph::from_edges(len + 1, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    // Enumerate every ordered pair of oriented edges and keep the
    // non-backtracking ones.
    fn brute_arcs(g: &Graph) -> Vec<NbArc> {
        let oe = oriented_edges(g);
        let mut out = Vec::new();
        for &a in &oe {
            for &b in &oe {
                if a.output == b.input && a.input != b.output {
                    out.push(NbArc { tail: a, head: b });
                }
            }
        }
        out
    }

    #[test]
    fn oriented_edges_examples() {
        assert_eq!(oriented_edges(&path(1)), vec![[0, 1].into(), [1, 0].into()]);
        assert_eq!(oriented_edges(&cycle(3)).len(), 6);
        assert_eq!(oriented_edges(&path(3)).len(), 6);
    }

    #[test]
    fn arcs_match_enumeration() {
        assert!(nb_arcs(&path(1)).is_empty());
        let tri = nb_arcs(&cycle(3));
        assert_eq!(tri.len(), 6);
        assert_eq!(tri, brute_arcs(&cycle(3)));
        let k13 = nb_arcs(&star(3));
        assert_eq!(k13.len(), 6);
        assert!(k13
            .iter()
            .all(|a| a.tail.output == 0 && a.tail.input != a.head.output));
        let k5 = complete(5);
        let mut brute = brute_arcs(&k5);
        brute.sort();
        let mut got = nb_arcs(&k5);
        got.sort();
        assert_eq!(got, brute);
    }

    #[test]
    fn components_of_path() {
        for m in 1..=6 {
            let comps = constraint_components(&path(m));
            assert_eq!(comps.len(), 2);
            for c in &comps {
                assert_eq!(c.len(), m);
                assert_eq!(c.disc_gcd, 0);
                let vals = c.attained_values();
                let span = vals.last().unwrap() - vals.first().unwrap();
                assert_eq!(span, m as i64 - 1);
                assert_eq!(vals.len(), m);
            }
        }
    }

    #[test]
    fn components_of_cycle() {
        for n in 3..=9 {
            let comps = constraint_components(&cycle(n));
            assert_eq!(comps.len(), 2);
            assert!(comps.iter().all(|c| c.len() == n && c.disc_gcd == n as u64));
        }
    }

    #[test]
    fn components_of_star() {
        let comps = constraint_components(&star(3));
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 6);
        assert_eq!(comps[0].disc_gcd, 0);
        assert_eq!(comps[0].attained_values().len(), 2);
        // inbound edges share one value, outbound the next
        let inbound = comps[0].value_of([1, 0].into()).unwrap();
        for leaf in 1..=3 {
            assert_eq!(comps[0].value_of([leaf, 0].into()), Some(inbound));
            assert_eq!(comps[0].value_of([0, leaf].into()), Some(inbound + 1));
        }
    }

    #[test]
    fn k2_is_two_singletons() {
        let comps = constraint_components(&path(1));
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 1 && c.disc_gcd == 0));
        assert_eq!(chi_o(&path(1)), 2);
    }

    #[test]
    fn circular_feasibility_examples() {
        for g in [path(3), cycle(5), complete(4)] {
            let p = is_circularly_k_partite(&g, 1).unwrap().unwrap();
            assert_eq!(p.k, 1);
            assert!(p.classes.iter().all(|&c| c == 0));
        }
        let p = is_circularly_k_partite(&cycle(6), 3).unwrap().unwrap();
        assert!(verify_partition(&cycle(6), &p).unwrap().is_empty());
        assert!(is_circularly_k_partite(&cycle(5), 3).unwrap().is_none());
        assert!(is_circularly_k_partite(&cycle(5), 0).is_err());
    }

    #[test]
    fn chi_o_examples() {
        for m in 1..=8 {
            assert_eq!(chi_o(&path(m)), 2 * m);
        }
        assert_eq!(chi_o(&complete(4)), 1);
        assert_eq!(chi_o(&star(5)), 2);
        assert_eq!(chi_o(&cycle(7)), 7);
    }

    #[test]
    fn feasible_sets() {
        assert_eq!(feasible_k_set(&path(3)), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(feasible_k_set(&cycle(6)), vec![1, 2, 3, 6]);
        let spider = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap();
        assert_eq!(feasible_k_set(&spider), vec![1, 2, 3, 4]);
    }

    #[test]
    fn lexicographic_shift_choice() {
        // path of length 2: components {[0,1],[1,2]} and {[1,0],[2,1]}
        let g = path(2);
        let p = is_circularly_k_partite(&g, 4).unwrap().unwrap();
        let rec = p.to_record(&g);
        assert_eq!(
            rec.entries,
            vec![[0, 1, 0], [1, 0, 3], [1, 2, 1], [2, 1, 2]]
        );
    }

    #[test]
    fn verify_reports_violations() {
        let g = cycle(6);
        let zero = CircularPartition {
            k: 2,
            classes: vec![0; 12],
        };
        let v = verify_partition(&g, &zero).unwrap();
        let arcs = v
            .iter()
            .filter(|x| matches!(x, PartitionViolation::Arc { .. }))
            .count();
        assert_eq!(arcs, nb_arcs(&g).len());
        assert!(v.contains(&PartitionViolation::EmptyClass { class: 1 }));

        let mut p = is_circularly_k_partite(&g, 3).unwrap().unwrap();
        p.classes[4] = (p.classes[4] + 1) % 3;
        assert!(!verify_partition(&g, &p).unwrap().is_empty());

        let short = CircularPartition {
            k: 2,
            classes: vec![0; 5],
        };
        assert!(matches!(
            verify_partition(&g, &short),
            Err(Error::PartialMap(_))
        ));
    }

    #[test]
    fn record_round_trip_and_mismatch() {
        let g = cycle(6);
        let p = is_circularly_k_partite(&g, 6).unwrap().unwrap();
        let rec = p.to_record(&g);
        assert_eq!(CircularPartition::from_record(&g, &rec).unwrap(), p);
        let other = cycle(7);
        assert!(matches!(
            CircularPartition::from_record(&other, &rec),
            Err(Error::Mismatch(_))
        ));
    }

    #[test]
    fn infeasibility_names_the_condition() {
        assert_eq!(infeasibility_reason(&cycle(6), 3), None);
        let why = infeasibility_reason(&cycle(5), 3).unwrap();
        assert!(why.contains("cycle") && why.contains("length 5"), "{why}");
        assert!(infeasibility_reason(&path(2), 5)
            .unwrap()
            .contains("oriented edges"));
        assert!(infeasibility_reason(&star(3), 3)
            .unwrap()
            .contains("path or extended star"));
        // two triangles joined by an edge: branch vertices at distance 1
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        let why = infeasibility_reason(&g, 3).unwrap();
        assert!(why.contains("branch vertices 2 and 3"), "{why}");
    }
}
