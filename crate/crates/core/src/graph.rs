//! Simple connected graphs with dense, ordering-stable vertex ids.
//!
//! A [`Graph`] is immutable once built: construction rejects loops and
//! disconnected inputs, collapses duplicate edges and keeps every
//! neighbour list strictly increasing. Everything else in the crate
//! consumes graphs through the accessors here.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `0..n` from an edge list.
    ///
    /// Duplicate edges (in either orientation) are collapsed. Loops,
    /// out-of-range ids, edgeless input and disconnected graphs are
    /// rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop {
                    line: i + 1,
                    vertex: u as u64,
                });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let g = Graph { adj, m };
        g.check_connected()?;
        Ok(g)
    }

    /// Parses the line-oriented edge-list format: one `u v` pair per
    /// line, `#` starts a comment, blank lines are ignored. Ids are
    /// compacted to `0..n` in order of first appearance.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut ids: HashMap<u64, usize> = HashMap::new();
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v`, found `{content}`"),
                });
            }
            let mut ends = [0u64; 2];
            for (slot, field) in ends.iter_mut().zip(&fields) {
                *slot = field.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("`{field}` is not a nonnegative integer"),
                })?;
            }
            if ends[0] == ends[1] {
                return Err(Error::Loop {
                    line,
                    vertex: ends[0],
                });
            }
            let mut intern = |raw_id: u64| {
                let next = ids.len();
                *ids.entry(raw_id).or_insert(next)
            };
            let u = intern(ends[0]);
            let v = intern(ends[1]);
            edges.push((u, v));
        }
        Graph::from_edges(ids.len(), &edges)
    }

    fn check_connected(&self) -> Result<()> {
        let dist = self.bfs(0);
        match dist.iter().position(Option::is_none) {
            Some(unreached) => Err(Error::Disconnected {
                reached: 0,
                unreached,
            }),
            None => Ok(()),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Canonical serialization: one sorted `min max` edge per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn is_tree(&self) -> bool {
        self.m + 1 == self.n()
    }

    /// Whether every vertex has degree two (connectedness makes this a cycle).
    pub fn is_cycle(&self) -> bool {
        self.adj.iter().all(|l| l.len() == 2)
    }

    pub fn average_degree(&self) -> f64 {
        2.0 * self.m as f64 / self.n() as f64
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Shortest-path edge count between `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        // connected by construction
        Ok(self.bfs(u)[v].unwrap_or(usize::MAX))
    }

    /// All-pairs distances by repeated BFS.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n())
            .map(|s| {
                self.bfs(s)
                    .into_iter()
                    .map(|d| d.unwrap_or(usize::MAX))
                    .collect()
            })
            .collect()
    }

    /// Vertices of degree at least three, ascending.
    pub fn branch_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) >= 3).collect()
    }

    /// Length of a shortest cycle, `None` for trees.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let n = self.n();
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            let mut queue = VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Two-colours the graph, or returns an odd cycle as a witness.
    pub fn bipartiteness(&self) -> Bipartiteness {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut queue = VecDeque::new();
        side[0] = 0;
        queue.push_back(0);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Bipartiteness::OddCycle(odd_cycle(&parent, &depth, u, w));
                }
            }
        }
        let (left, right): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| side[v] == 0);
        Bipartiteness::Bipartite(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> Option<Bipartition> {
        match self.bipartiteness() {
            Bipartiteness::Bipartite(p) => Some(p),
            Bipartiteness::OddCycle(_) => None,
        }
    }

    /// Structural classification used by the circular-partition case split.
    pub fn classify(&self) -> GraphClass {
        if self.is_cycle() {
            return GraphClass::Cycle { length: self.n() };
        }
        if !self.is_tree() {
            return GraphClass::General {
                girth: self.girth(),
            };
        }
        let branches = self.branch_vertices();
        match branches.as_slice() {
            [] => GraphClass::Path { length: self.m },
            &[centre] => {
                let mut arms: Vec<usize> = self.adj[centre]
                    .iter()
                    .map(|&first| self.arm_length(centre, first))
                    .collect();
                arms.sort_unstable_by(|a, b| b.cmp(a));
                if arms.iter().all(|&a| a == 1) {
                    GraphClass::Star { leaves: arms.len() }
                } else {
                    let diameter = arms[0] + arms[1];
                    GraphClass::ExtendedStar { arms, diameter }
                }
            }
            _ => GraphClass::TreeOther,
        }
    }

    // Length of the pendant path leaving `centre` through `first`.
    fn arm_length(&self, centre: usize, first: usize) -> usize {
        let (mut prev, mut cur, mut len) = (centre, first, 1);
        while self.degree(cur) == 2 {
            let next = if self.adj[cur][0] == prev {
                self.adj[cur][1]
            } else {
                self.adj[cur][0]
            };
            prev = cur;
            cur = next;
            len += 1;
        }
        len
    }

    /// Graph whose vertices are the edges of `self` (in [`Graph::edges`]
    /// order), adjacent when they share an endpoint. `None` when the line
    /// graph would be edgeless (a single edge).
    pub fn line_graph(&self) -> Option<Graph> {
        let edges = self.edges();
        let index: HashMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut line_edges = Vec::new();
        for v in 0..self.n() {
            let incident: Vec<usize> = self.adj[v]
                .iter()
                .map(|&w| index[&(v.min(w), v.max(w))])
                .collect();
            for (i, &a) in incident.iter().enumerate() {
                for &b in &incident[i + 1..] {
                    line_edges.push((a, b));
                }
            }
        }
        Graph::from_edges(edges.len(), &line_edges).ok()
    }

    /// Every simple cycle exactly once, as a vertex sequence starting at its
    /// smallest vertex with the second vertex smaller than the last.
    /// Exponential; intended for small graphs.
    pub fn simple_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each_cycle(|c| {
            out.push(c.to_vec());
            false
        });
        out
    }

    /// Walks simple cycles in a fixed order until `visit` returns `true`.
    pub fn for_each_cycle(&self, mut visit: impl FnMut(&[usize]) -> bool) {
        let n = self.n();
        let mut on_path = vec![false; n];
        let mut path = Vec::with_capacity(n);
        for start in 0..n {
            path.clear();
            path.push(start);
            on_path[start] = true;
            if self.cycle_dfs(start, &mut path, &mut on_path, &mut visit) {
                return;
            }
            on_path[start] = false;
        }
    }

    fn cycle_dfs(
        &self,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        let last = *path.last().unwrap_or(&start);
        for &w in &self.adj[last] {
            if w == start && path.len() >= 3 && path[1] < last {
                if visit(path) {
                    return true;
                }
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                let stop = self.cycle_dfs(start, path, on_path, visit);
                path.pop();
                on_path[w] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
}

fn odd_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut from_a = vec![a];
    let mut from_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        from_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        from_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        from_a.push(a);
        from_b.push(b);
    }
    from_b.pop();
    from_a.extend(from_b.into_iter().rev());
    from_a
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite(Bipartition),
    /// Vertex sequence of an odd cycle; consecutive entries (and the
    /// last/first pair) are adjacent.
    OddCycle(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphClass {
    Path {
        length: usize,
    },
    Cycle {
        length: usize,
    },
    /// `K_{1,n}` with `n >= 3`; downstream treated as an extended star of
    /// diameter two.
    Star {
        leaves: usize,
    },
    ExtendedStar {
        /// Arm lengths, longest first.
        arms: Vec<usize>,
        diameter: usize,
    },
    TreeOther,
    General {
        girth: Option<usize>,
    },
}

impl GraphClass {
    pub fn is_path(&self) -> bool {
        matches!(self, GraphClass::Path { .. })
    }

    /// Stars count as extended stars.
    pub fn is_extended_star(&self) -> bool {
        matches!(
            self,
            GraphClass::Star { .. } | GraphClass::ExtendedStar { .. }
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            GraphClass::Path { .. } => "path",
            GraphClass::Cycle { .. } => "cycle",
            GraphClass::Star { .. } => "star",
            GraphClass::ExtendedStar { .. } => "extended_star",
            GraphClass::TreeOther => "tree_other",
            GraphClass::General { .. } => "general",
        }
    }
}
