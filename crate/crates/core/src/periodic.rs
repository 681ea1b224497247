//! t-periodic vertex colourings.
//!
//! A vertex colouring is t-periodic when both ends of every simple path
//! with exactly `t` edges share a colour. The endpoint relation of those
//! paths generates an equivalence; its classes are the colour classes of
//! the finest t-periodic colouring, so their count is the t-periodic
//! colouring number.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;

/// Unordered endpoint pairs of all simple paths with `t` edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathRelation {
    pub t: usize,
    /// `(u, v)` with `u < v`, ascending.
    pub pairs: Vec<(usize, usize)>,
    /// Vertices that end at least one such path, ascending.
    pub constrained: Vec<usize>,
}

impl PathRelation {
    pub fn unconstrained(&self, n: usize) -> Vec<usize> {
        let mut hit = vec![false; n];
        for &v in &self.constrained {
            hit[v] = true;
        }
        (0..n).filter(|&v| !hit[v]).collect()
    }

    pub fn covers_all(&self, n: usize) -> bool {
        self.constrained.len() == n
    }
}

/// Path lengths accepted by the t-periodic operations: `1..=n`. At `t = n`
/// no simple path exists and every vertex is its own class.
pub fn check_period(g: &Graph, t: usize) -> Result<()> {
    if t == 0 || t > g.n() {
        return Err(Error::OutOfRange {
            what: "t",
            value: t,
            constraint: format!("1 <= t <= n = {}", g.n()),
        });
    }
    Ok(())
}

pub fn path_relation(g: &Graph, t: usize) -> Result<PathRelation> {
    path_relation_with(g, t, Execution::default())
}

/// Same as [`path_relation`], enumerating sources under `exec`.
pub fn path_relation_with(g: &Graph, t: usize, exec: Execution) -> Result<PathRelation> {
    check_period(g, t)?;
    let per_source = exec.map_range(0..g.n(), |s| endpoints_above(g, s, t));
    let mut pairs = BTreeSet::new();
    for (s, ends) in per_source.into_iter().enumerate() {
        pairs.extend(ends.into_iter().map(|v| (s, v)));
    }
    let mut touched = vec![false; g.n()];
    for &(u, v) in &pairs {
        touched[u] = true;
        touched[v] = true;
    }
    Ok(PathRelation {
        t,
        pairs: pairs.into_iter().collect(),
        constrained: (0..g.n()).filter(|&v| touched[v]).collect(),
    })
}

/// Sorted endpoints of simple `t`-edge paths starting at `source`.
pub fn endpoints_from(g: &Graph, source: usize, t: usize) -> Vec<usize> {
    (0..g.n())
        .filter(|&v| v != source && path_exists(g, source, v, t))
        .collect()
}

fn endpoints_above(g: &Graph, source: usize, t: usize) -> Vec<usize> {
    (source + 1..g.n())
        .filter(|&v| path_exists(g, source, v, t))
        .collect()
}

fn distances_to(g: &Graph, target: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::from([target]);
    dist[target] = 0;
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbours(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Whether some simple path with exactly `t` edges joins `u` and `v`.
pub fn path_exists(g: &Graph, u: usize, v: usize, t: usize) -> bool {
    if u == v || t >= g.n() {
        return false;
    }
    let dist = distances_to(g, v);
    if dist[u] > t {
        return false;
    }
    if g.n() <= 128 {
        // a (visited set, vertex) state that failed once fails again
        let mut dead = HashSet::new();
        masked_dfs(g, v, &dist, u, 1u128 << u, t, &mut dead)
    } else {
        find_path(g, u, v, t).is_some()
    }
}

fn masked_dfs(
    g: &Graph,
    target: usize,
    dist: &[usize],
    x: usize,
    mask: u128,
    remaining: usize,
    dead: &mut HashSet<(u128, usize)>,
) -> bool {
    if remaining == 0 {
        return x == target;
    }
    if dead.contains(&(mask, x)) {
        return false;
    }
    for &w in g.neighbours(x) {
        if mask >> w & 1 == 1 || dist[w] > remaining - 1 || (w == target && remaining > 1) {
            continue;
        }
        if masked_dfs(g, target, dist, w, mask | 1 << w, remaining - 1, dead) {
            return true;
        }
    }
    dead.insert((mask, x));
    false
}

/// One simple path with exactly `t` edges from `u` to `v`, if any.
pub fn find_path(g: &Graph, u: usize, v: usize, t: usize) -> Option<Vec<usize>> {
    if u == v || u >= g.n() || v >= g.n() {
        return None;
    }
    // distance-to-target pruning
    let dist = distances_to(g, v);
    let mut on_path = vec![false; g.n()];
    let mut path = vec![u];
    on_path[u] = true;
    path_dfs(g, v, t, &dist, &mut on_path, &mut path).then_some(path)
}

fn path_dfs(
    g: &Graph,
    target: usize,
    t: usize,
    dist: &[usize],
    on_path: &mut [bool],
    path: &mut Vec<usize>,
) -> bool {
    let cur = *path.last().unwrap_or(&target);
    let remaining = t + 1 - path.len();
    if remaining == 0 {
        return cur == target;
    }
    for &w in g.neighbours(cur) {
        if on_path[w] || dist[w] > remaining - 1 || (w == target && remaining > 1) {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        if path_dfs(g, target, t, dist, on_path, path) {
            return true;
        }
        path.pop();
        on_path[w] = false;
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicNumber {
    pub t: usize,
    pub k: usize,
    /// Vertices no `t`-path ends at; each is a singleton class.
    pub unconstrained: Vec<usize>,
}

/// A vertex colouring tagged with its period. Wire form:
/// `{t, k, colours: [c_0, ..., c_{n-1}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexColouring {
    pub t: usize,
    pub k: usize,
    pub colours: Vec<usize>,
}

fn closure(g: &Graph, rel: &PathRelation) -> DisjointSets {
    let mut sets = DisjointSets::new(g.n());
    for &(u, v) in &rel.pairs {
        sets.union(u, v);
    }
    sets
}

/// The t-periodic colouring number with the unconstrained vertex set.
pub fn chi_t(g: &Graph, t: usize) -> Result<PeriodicNumber> {
    let rel = path_relation(g, t)?;
    Ok(PeriodicNumber {
        t,
        k: closure(g, &rel).set_count(),
        unconstrained: rel.unconstrained(g.n()),
    })
}

/// Finest t-periodic colouring, classes numbered by smallest vertex.
pub fn build_t_periodic_colouring(g: &Graph, t: usize) -> Result<VertexColouring> {
    let rel = path_relation(g, t)?;
    let mut sets = closure(g, &rel);
    Ok(VertexColouring {
        t,
        k: sets.set_count(),
        colours: sets.labels(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathViolation {
    pub path: Vec<usize>,
    pub colours: (usize, usize),
}

impl std::fmt::Display for PathViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let seq: Vec<String> = self.path.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "path {}: colours {} != {}",
            seq.join("-"),
            self.colours.0,
            self.colours.1
        )
    }
}

/// One concrete offending path per endpoint pair with different colours.
pub fn verify_t_periodic(g: &Graph, t: usize, c: &VertexColouring) -> Result<Vec<PathViolation>> {
    if c.colours.len() != g.n() {
        return Err(Error::PartialMap(format!(
            "{} colours given for {} vertices",
            c.colours.len(),
            g.n()
        )));
    }
    let rel = path_relation(g, t)?;
    Ok(rel
        .pairs
        .iter()
        .filter(|&&(u, v)| c.colours[u] != c.colours[v])
        .filter_map(|&(u, v)| {
            find_path(g, u, v, t).map(|path| PathViolation {
                path,
                colours: (c.colours[u], c.colours[v]),
            })
        })
        .collect())
}

/// Decomposition of a t-periodic colouring along a cycle with a pendant
/// path of length `tau = t / 2` hanging off one cycle vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauShape {
    pub t: usize,
    pub tau: usize,
    /// Cycle vertices starting at the attachment vertex.
    pub cycle: Vec<usize>,
    /// `w_1 .. w_tau`, off the cycle. Empty when no such path exists, in
    /// which case the slots come from the cycle's first `tau + 1` vertices.
    pub pendant: Vec<usize>,
    /// Colours `c_0 .. c_tau`: the attachment vertex then the pendant path.
    pub slots: Vec<usize>,
    /// Whether cycle vertex `i` carries slot `min(i mod t, t - i mod t)`
    /// everywhere, i.e. the colouring repeats `c_0, c_1, .., c_tau, .., c_1`.
    pub matches_pattern: bool,
    pub distinct_slots: usize,
}

impl TauShape {
    pub fn all_distinct(&self) -> bool {
        self.distinct_slots == self.tau + 1
    }

    /// The expected slot sequence over one period.
    pub fn pattern(&self) -> Vec<usize> {
        (0..self.t).map(|j| self.slots[j.min(self.t - j)]).collect()
    }
}

/// Checks the preconditions of the palindromic-shape decomposition.
pub fn tau_preconditions(g: &Graph, t: usize) -> Result<()> {
    if g.min_degree() < 2 {
        return Err(Error::Precondition("minimum degree is below 2".into()));
    }
    if g.is_cycle() {
        return Err(Error::Precondition("graph is a cycle".into()));
    }
    if t < 3 {
        return Err(Error::Precondition(format!("t = {t} is below 3")));
    }
    match g.girth() {
        Some(girth) if t <= girth => Ok(()),
        Some(girth) => Err(Error::Precondition(format!(
            "t = {t} exceeds the girth {girth}"
        ))),
        None => Err(Error::Precondition("graph has no cycle".into())),
    }
}

/// Finds a cycle and a path of `tau` edges meeting it only at its first
/// vertex. Cycles come in [`Graph::for_each_cycle`] order.
pub fn cycle_with_pendant(g: &Graph, tau: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut witness = None;
    g.for_each_cycle(|cyc| {
        let mut blocked = vec![false; g.n()];
        for &v in cyc {
            blocked[v] = true;
        }
        for (i, &v0) in cyc.iter().enumerate() {
            let mut pendant = Vec::with_capacity(tau);
            if pendant_dfs(g, v0, tau, &mut blocked, &mut pendant) {
                let mut rotated = cyc[i..].to_vec();
                rotated.extend_from_slice(&cyc[..i]);
                witness = Some((rotated, pendant));
                return true;
            }
        }
        false
    });
    witness
}

fn pendant_dfs(
    g: &Graph,
    v: usize,
    remaining: usize,
    blocked: &mut [bool],
    out: &mut Vec<usize>,
) -> bool {
    if remaining == 0 {
        return true;
    }
    for &w in g.neighbours(v) {
        if blocked[w] {
            continue;
        }
        blocked[w] = true;
        out.push(w);
        if pendant_dfs(g, w, remaining - 1, blocked, out) {
            return true;
        }
        out.pop();
        blocked[w] = false;
    }
    false
}

pub fn tau_shape(g: &Graph, t: usize, c: &VertexColouring) -> Result<TauShape> {
    tau_preconditions(g, t)?;
    if c.colours.len() != g.n() {
        return Err(Error::PartialMap(format!(
            "{} colours given for {} vertices",
            c.colours.len(),
            g.n()
        )));
    }
    let tau = t / 2;
    let colour = |v: usize| c.colours[v];
    let fits = |cycle: &[usize], slots: &[usize]| {
        cycle.iter().enumerate().all(|(i, &v)| {
            let j = i % t;
            colour(v) == slots[j.min(t - j)]
        })
    };
    let (cycle, pendant, slots, matches_pattern) = match cycle_with_pendant(g, tau) {
        Some((cycle, pendant)) => {
            let slots: Vec<usize> = std::iter::once(cycle[0])
                .chain(pendant.iter().copied())
                .map(colour)
                .collect();
            let ok = fits(&cycle, &slots);
            (cycle, pendant, slots, ok)
        }
        None => {
            // No pendant path (K_{2,3} at t = 4): read the slots off the
            // cycle itself and look for an anchor where the pattern holds.
            let mut first = None;
            let mut found = None;
            g.for_each_cycle(|cyc| {
                for i in 0..cyc.len() {
                    let mut rotated = cyc[i..].to_vec();
                    rotated.extend_from_slice(&cyc[..i]);
                    let slots: Vec<usize> = rotated[..=tau].iter().map(|&v| colour(v)).collect();
                    if fits(&rotated, &slots) {
                        found = Some((rotated, slots));
                        return true;
                    }
                    if first.is_none() {
                        first = Some((rotated, slots));
                    }
                }
                false
            });
            match (found, first) {
                (Some((cycle, slots)), _) => (cycle, Vec::new(), slots, true),
                (None, Some((cycle, slots))) => (cycle, Vec::new(), slots, false),
                (None, None) => unreachable!("preconditions guarantee a cycle"),
            }
        }
    };
    let distinct_slots = slots.iter().collect::<BTreeSet<_>>().len();
    Ok(TauShape {
        t,
        tau,
        cycle,
        pendant,
        slots,
        matches_pattern,
        distinct_slots,
    })
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

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn relation_examples() {
        assert_eq!(path_relation(&path(2), 2).unwrap().pairs, vec![(0, 2)]);
        assert_eq!(
            path_relation(&cycle(4), 2).unwrap().pairs,
            vec![(0, 2), (1, 3)]
        );
        // C5, t = 3: i joined to i +- 3, the "other way" distance-2 pairs
        let rel = path_relation(&cycle(5), 3).unwrap();
        assert_eq!(rel.pairs, vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
        assert!(path_relation(&cycle(5), 0).is_err());
        assert!(path_relation(&cycle(5), 6).is_err());
        assert!(path_relation(&cycle(5), 5).unwrap().pairs.is_empty());
    }

    #[test]
    fn chi_t_examples() {
        for n in 3..=9 {
            for t in 1..=n {
                assert_eq!(chi_t(&cycle(n), t).unwrap().k, gcd(t, n), "C{n} t={t}");
            }
        }
        for len in 1..=7 {
            let nodes = len + 1;
            for t in 1..nodes {
                assert_eq!(chi_t(&path(len), t).unwrap().k, t);
            }
        }
        for n in 2..=6 {
            for t in 1..n {
                assert_eq!(chi_t(&complete(n), t).unwrap().k, 1);
            }
        }
    }

    #[test]
    fn unconstrained_reported() {
        let r = chi_t(&bowtie(), 3).unwrap();
        assert_eq!(r.k, 2);
        assert_eq!(r.unconstrained, vec![0]);
    }

    #[test]
    fn colouring_examples() {
        let c = build_t_periodic_colouring(&cycle(6), 3).unwrap();
        assert_eq!(c.colours, vec![0, 1, 2, 0, 1, 2]);
        let c = build_t_periodic_colouring(&cycle(6), 4).unwrap();
        assert_eq!(c.colours, vec![0, 1, 0, 1, 0, 1]);
        let c = build_t_periodic_colouring(&bowtie(), 3).unwrap();
        assert_eq!(c.k, 2);
        assert!(verify_t_periodic(&bowtie(), 3, &c).unwrap().is_empty());
    }

    #[test]
    fn verify_examples() {
        let g = cycle(5);
        // every 2-colouring of C5 breaks 3-periodicity
        for mask in 1u32..31 {
            let colours: Vec<usize> = (0..5).map(|i| (mask >> i & 1) as usize).collect();
            let c = VertexColouring {
                t: 3,
                k: 2,
                colours,
            };
            let v = verify_t_periodic(&g, 3, &c).unwrap();
            assert!(!v.is_empty());
            for viol in v {
                assert_eq!(viol.path.len(), 4);
                for w in viol.path.windows(2) {
                    assert!(g.has_edge(w[0], w[1]));
                }
            }
        }
        let good = VertexColouring {
            t: 3,
            k: 3,
            colours: vec![0, 1, 2, 0, 1, 2],
        };
        assert!(verify_t_periodic(&cycle(6), 3, &good).unwrap().is_empty());
        let partial = VertexColouring {
            t: 3,
            k: 1,
            colours: vec![0; 3],
        };
        assert!(matches!(
            verify_t_periodic(&cycle(6), 3, &partial),
            Err(Error::PartialMap(_))
        ));
    }

    #[test]
    fn find_path_exact_length() {
        let g = complete(5);
        let p = find_path(&g, 0, 1, 4).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!((p[0], p[4]), (0, 1));
        assert!(find_path(&path(3), 0, 3, 2).is_none());
    }

    #[test]
    fn tau_shape_on_bowtie() {
        let g = bowtie();
        let c = build_t_periodic_colouring(&g, 3).unwrap();
        let shape = tau_shape(&g, 3, &c).unwrap();
        assert_eq!(shape.tau, 1);
        assert!(shape.matches_pattern);
        assert_eq!(shape.distinct_slots, 2);
        assert!(shape.all_distinct());
        let p = shape.pattern();
        assert_eq!(p, vec![shape.slots[0], shape.slots[1], shape.slots[1]]);
    }

    #[test]
    fn tau_shape_without_pendant() {
        // K_{2,3}: every 4-cycle leaves one vertex, too few for tau = 2
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(cycle_with_pendant(&g, 2).is_none());
        let c = build_t_periodic_colouring(&g, 4).unwrap();
        assert_eq!(c.k, 3);
        let shape = tau_shape(&g, 4, &c).unwrap();
        assert!(shape.pendant.is_empty());
        assert!(shape.matches_pattern);
        assert!(shape.all_distinct());
    }

    #[test]
    fn tau_shape_rejections() {
        let c6 = cycle(6);
        let c = build_t_periodic_colouring(&c6, 3).unwrap();
        assert!(
            matches!(tau_shape(&c6, 3, &c), Err(Error::Precondition(m)) if m.contains("cycle"))
        );
        let g = bowtie();
        let c = build_t_periodic_colouring(&g, 2).unwrap();
        assert!(tau_shape(&g, 2, &c).is_err());
        assert!(tau_shape(&g, 4, &c).is_err());
        let tree = path(4);
        let c = build_t_periodic_colouring(&tree, 3).unwrap();
        assert!(tau_shape(&tree, 3, &c).is_err());
    }

    #[test]
    fn sequential_and_parallel_relations_agree() {
        let g = complete(7);
        for t in 1..7 {
            assert_eq!(
                path_relation_with(&g, t, Execution::Sequential).unwrap(),
                path_relation_with(&g, t, Execution::Parallel).unwrap()
            );
        }
    }
}
