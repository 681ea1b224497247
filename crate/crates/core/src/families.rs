//! Named graph families with their known colouring numbers.
//!
//! Shorthand strings (used by the CLI and the survey corpus):
//!
//! | shorthand               | graph                                              |
//! |-------------------------|----------------------------------------------------|
//! | `path:M`                | path with `M` edges                                |
//! | `cycle:N`               | cycle on `N` vertices                              |
//! | `star:N`                | `K_{1,N}`                                          |
//! | `spider:a,b,c,..`       | extended star with the given arm lengths           |
//! | `complete:N`            | `K_N`                                              |
//! | `petal:LxK`             | `L` cycles of length `K` through one vertex        |
//! | `mickey:K`              | face `5K`, two ears `2K`, ears `K` apart           |
//! | `random:N,M,SEED`       | random connected graph, `N` vertices, `M` edges    |
//! | `diamond`               | `K_4` minus an edge                                |
//! | `subdivided:U-VxT:BASE` | `BASE` with edge `{U,V}` replaced by `T+1` edges   |
//!
//! Through [`FamilySpec::parse_many`], `path`, `cycle`, `star`,
//! `complete`, `mickey` and both numbers of `petal` also accept an
//! inclusive range `A..B`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path {
        length: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        leaves: usize,
    },
    ExtendedStar {
        arms: Vec<usize>,
    },
    Complete {
        n: usize,
    },
    Petal {
        petals: usize,
        length: usize,
    },
    MickeyMouse {
        k: usize,
    },
    RandomConnected {
        n: usize,
        m: usize,
        seed: u64,
    },
    Diamond,
    Subdivided {
        base: Box<FamilySpec>,
        edge: (usize, usize),
        times: usize,
    },
}

/// How the t-periodic colouring number of a family depends on `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "formula", rename_all = "snake_case")]
pub enum ChiTFormula {
    /// `gcd(t, n)` for `1 <= t <= n`.
    GcdWith { n: usize },
    /// `t` for `1 <= t <= n`.
    EqualsT,
    /// `1` for `1 <= t <= n - 1`.
    One,
}

impl ChiTFormula {
    pub fn value(self, t: usize) -> usize {
        match self {
            ChiTFormula::GcdWith { n } => crate::oriented::gcd(t as u64, n as u64) as usize,
            ChiTFormula::EqualsT => t,
            ChiTFormula::One => 1,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExpectedValues {
    pub chi_o: Option<usize>,
    /// `chi_o` is known to be a multiple of this.
    pub chi_o_multiple_of: Option<usize>,
    pub chi_t: Option<ChiTFormula>,
    /// Largest `t` the `chi_t` formula covers.
    pub chi_t_max: Option<usize>,
    pub chi: Option<usize>,
}

fn invalid(spec: impl fmt::Display, reason: impl Into<String>) -> Error {
    Error::InvalidSpec {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

impl FamilySpec {
    pub fn generate(&self) -> Result<(Graph, ExpectedValues)> {
        self.validate()?;
        let mut exp = ExpectedValues::default();
        let g = match self {
            FamilySpec::Path { length } => {
                exp.chi_o = Some(2 * length);
                exp.chi_t = Some(ChiTFormula::EqualsT);
                exp.chi_t_max = Some(length + 1);
                exp.chi = Some(2);
                path(*length)
            }
            FamilySpec::Cycle { n } => {
                exp.chi_o = Some(*n);
                exp.chi_t = Some(ChiTFormula::GcdWith { n: *n });
                exp.chi_t_max = Some(*n);
                cycle(*n)
            }
            FamilySpec::Star { leaves } => {
                exp.chi_o = Some(2);
                exp.chi = Some(2);
                spider(&vec![1; *leaves])
            }
            FamilySpec::ExtendedStar { arms } => {
                let mut sorted = arms.clone();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                // the diameter value holds only when the two longest arms tie
                if sorted[0] == sorted[1] {
                    exp.chi_o = Some(sorted[0] + sorted[1]);
                }
                exp.chi = Some(2);
                spider(arms)
            }
            FamilySpec::Complete { n } => {
                if *n >= 4 {
                    exp.chi_o = Some(1);
                    exp.chi_t = Some(ChiTFormula::One);
                    exp.chi_t_max = Some(n - 1);
                }
                exp.chi = Some(*n);
                complete(*n)
            }
            FamilySpec::Petal { petals, length } => {
                exp.chi_o = Some(*length);
                petal(*petals, *length)
            }
            FamilySpec::MickeyMouse { k } => {
                exp.chi_o_multiple_of = Some(*k);
                mickey_mouse(*k)
            }
            FamilySpec::RandomConnected { n, m, seed } => random_connected(*n, *m, *seed),
            FamilySpec::Diamond => {
                exp.chi_o = Some(1);
                Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)])
            }
            FamilySpec::Subdivided { base, edge, times } => {
                let (g, _) = base.generate()?;
                if **base == FamilySpec::Diamond
                    && *times == 1
                    && (edge.0.min(edge.1), edge.0.max(edge.1)) == (1, 3)
                {
                    exp.chi_o = Some(4);
                }
                return Ok((subdivide(&g, *edge, *times)?, exp));
            }
        }?;
        Ok((g, exp))
    }

    fn validate(&self) -> Result<()> {
        let fail = |reason: &str| Err(invalid(self, reason));
        match self {
            FamilySpec::Path { length } if *length < 1 => fail("path needs M >= 1"),
            FamilySpec::Cycle { n } if *n < 3 => fail("cycle needs N >= 3"),
            FamilySpec::Star { leaves } if *leaves < 3 => fail("star needs n >= 3"),
            FamilySpec::ExtendedStar { arms } if arms.len() < 3 => {
                fail("extended star needs at least 3 arms")
            }
            FamilySpec::ExtendedStar { arms } if arms.contains(&0) => {
                fail("arm lengths must be >= 1")
            }
            FamilySpec::Complete { n } if *n < 2 => fail("complete graph needs N >= 2"),
            FamilySpec::Petal { petals, .. } if *petals < 1 => fail("petal graph needs l >= 1"),
            FamilySpec::Petal { length, .. } if *length < 3 => fail("petal graph needs k >= 3"),
            FamilySpec::MickeyMouse { k } if *k < 2 => fail("mickey mouse graph needs k >= 2"),
            FamilySpec::RandomConnected { n, .. } if *n < 2 => fail("random graph needs n >= 2"),
            FamilySpec::RandomConnected { n, m, .. } if *m + 1 < *n => {
                fail("random graph needs m >= n - 1")
            }
            FamilySpec::RandomConnected { n, m, .. } if *m > n * (n - 1) / 2 => {
                fail("random graph needs m <= n(n-1)/2")
            }
            FamilySpec::Subdivided { times, .. } if *times < 1 => {
                fail("subdivision needs times >= 1")
            }
            _ => Ok(()),
        }
    }

    /// Parses one shorthand string.
    pub fn parse(text: &str) -> Result<Self> {
        let mut all = Self::parse_many(text)?;
        if all.len() != 1 {
            return Err(invalid(text, "ranges are only accepted in corpus lists"));
        }
        Ok(all.remove(0))
    }

    /// Parses a shorthand string, expanding an `A..B` parameter range.
    pub fn parse_many(text: &str) -> Result<Vec<Self>> {
        let text = text.trim();
        let (name, args) = text.split_once(':').unwrap_or((text, ""));
        let bad = |reason: &str| invalid(text, reason);
        let int = |s: &str| -> Result<usize> {
            s.trim()
                .parse()
                .map_err(|_| bad(&format!("`{s}` is not a nonnegative integer")))
        };
        let range = |s: &str| -> Result<Vec<usize>> {
            match s.split_once("..") {
                Some((a, b)) => {
                    let (a, b) = (int(a)?, int(b)?);
                    if a > b {
                        return Err(bad("empty range"));
                    }
                    Ok((a..=b).collect())
                }
                None => Ok(vec![int(s)?]),
            }
        };
        let specs = match name {
            "path" => range(args)?
                .into_iter()
                .map(|length| FamilySpec::Path { length })
                .collect(),
            "cycle" => range(args)?
                .into_iter()
                .map(|n| FamilySpec::Cycle { n })
                .collect(),
            "star" => range(args)?
                .into_iter()
                .map(|leaves| FamilySpec::Star { leaves })
                .collect(),
            "complete" => range(args)?
                .into_iter()
                .map(|n| FamilySpec::Complete { n })
                .collect(),
            "spider" | "extended_star" => vec![FamilySpec::ExtendedStar {
                arms: args.split(',').map(int).collect::<Result<_>>()?,
            }],
            "petal" => {
                let (l, k) = args
                    .split_once('x')
                    .ok_or_else(|| bad("expected petal:LxK"))?;
                let lengths = range(k)?;
                range(l)?
                    .into_iter()
                    .flat_map(|petals| {
                        lengths
                            .iter()
                            .map(move |&length| FamilySpec::Petal { petals, length })
                    })
                    .collect()
            }
            "mickey" | "mickey_mouse" => range(args)?
                .into_iter()
                .map(|k| FamilySpec::MickeyMouse { k })
                .collect(),
            "random" => {
                let parts: Vec<&str> = args.split(',').collect();
                if parts.len() != 3 {
                    return Err(bad("expected random:N,M,SEED"));
                }
                vec![FamilySpec::RandomConnected {
                    n: int(parts[0])?,
                    m: int(parts[1])?,
                    seed: parts[2]
                        .trim()
                        .parse()
                        .map_err(|_| bad("seed must be an unsigned integer"))?,
                }]
            }
            "diamond" if args.is_empty() => vec![FamilySpec::Diamond],
            "subdivided" => {
                let (head, base) = args
                    .split_once(':')
                    .ok_or_else(|| bad("expected subdivided:U-VxT:BASE"))?;
                let (edge, times) = head.split_once('x').unwrap_or((head, "1"));
                let (u, v) = edge
                    .split_once('-')
                    .ok_or_else(|| bad("expected an edge U-V"))?;
                vec![FamilySpec::Subdivided {
                    base: Box::new(FamilySpec::parse(base)?),
                    edge: (int(u)?, int(v)?),
                    times: int(times)?,
                }]
            }
            _ => return Err(bad("unknown family")),
        };
        for s in &specs {
            s.validate()?;
        }
        Ok(specs)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { length } => write!(f, "path:{length}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Star { leaves } => write!(f, "star:{leaves}"),
            FamilySpec::ExtendedStar { arms } => {
                let a: Vec<String> = arms.iter().map(|x| x.to_string()).collect();
                write!(f, "spider:{}", a.join(","))
            }
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Petal { petals, length } => write!(f, "petal:{petals}x{length}"),
            FamilySpec::MickeyMouse { k } => write!(f, "mickey:{k}"),
            FamilySpec::RandomConnected { n, m, seed } => write!(f, "random:{n},{m},{seed}"),
            FamilySpec::Diamond => write!(f, "diamond"),
            FamilySpec::Subdivided { base, edge, times } => {
                write!(f, "subdivided:{}-{}x{}:{}", edge.0, edge.1, times, base)
            }
        }
    }
}

pub fn path(length: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..length).map(|i| (i, i + 1)).collect();
    Graph::from_edges(length + 1, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Centre 0, arms laid out one after another.
pub fn spider(arms: &[usize]) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(next, &edges)
}

/// `petals` cycles of length `length` sharing vertex 0.
pub fn petal(petals: usize, length: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..petals {
        let first = next;
        let mut prev = 0;
        for _ in 1..length {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 0));
        debug_assert_eq!(next - first, length - 1);
    }
    Graph::from_edges(next, &edges)
}

/// Face cycle `0..5k`, ears of length `2k` through face vertices `0` and `k`.
pub fn mickey_mouse(k: usize) -> Result<Graph> {
    let face = 5 * k;
    let mut edges: Vec<_> = (0..face).map(|i| (i, (i + 1) % face)).collect();
    let mut next = face;
    for anchor in [0, k] {
        let mut prev = anchor;
        for _ in 1..2 * k {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, anchor));
    }
    Graph::from_edges(next, &edges)
}

/// Uniform labelled spanning tree (random Prüfer sequence) plus `m - n + 1`
/// extra edges drawn uniformly from the remaining pairs.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m);
    if n == 2 {
        edges.push((0, 1));
    } else {
        let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let mut degree = vec![1usize; n];
        for &p in &prufer {
            degree[p] += 1;
        }
        for &p in &prufer {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap_or(0);
            edges.push((leaf.min(p), leaf.max(p)));
            degree[leaf] -= 1;
            degree[p] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
    }
    let mut present = vec![vec![false; n]; n];
    for &(u, v) in &edges {
        present[u][v] = true;
    }
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !present[u][v])
        .collect();
    candidates.shuffle(&mut rng);
    edges.extend(candidates.into_iter().take(m + 1 - n));
    Graph::from_edges(n, &edges)
}

/// Replaces edge `{u, v}` by a path of `times + 1` edges through fresh
/// vertices `n, n+1, ..`.
pub fn subdivide(g: &Graph, edge: (usize, usize), times: usize) -> Result<Graph> {
    let (u, v) = edge;
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    if times == 0 {
        return Err(Error::OutOfRange {
            what: "times",
            value: 0,
            constraint: "times >= 1".into(),
        });
    }
    let (a, b) = (u.min(v), u.max(v));
    let mut edges: Vec<_> = g.edges().into_iter().filter(|&e| e != (a, b)).collect();
    let mut prev = u;
    for fresh in g.n()..g.n() + times {
        edges.push((prev, fresh));
        prev = fresh;
    }
    edges.push((prev, v));
    Graph::from_edges(g.n() + times, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphClass;

    #[test]
    fn shorthand_round_trip() {
        for s in [
            "path:3",
            "cycle:12",
            "star:5",
            "spider:2,2,1",
            "complete:4",
            "petal:3x4",
            "mickey:3",
            "random:10,14,42",
            "diamond",
            "subdivided:1-3x1:diamond",
        ] {
            assert_eq!(FamilySpec::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(FamilySpec::parse_many("cycle:3..12").unwrap().len(), 10);
        assert_eq!(FamilySpec::parse_many("petal:1..3x3..5").unwrap().len(), 9);
        assert_eq!(FamilySpec::parse_many("mickey:2..4").unwrap().len(), 3);
        assert!(FamilySpec::parse("cycle:3..5").is_err());
        assert!(FamilySpec::parse("cycle:2").is_err());
        assert!(FamilySpec::parse("petal:3x2").is_err());
        assert!(FamilySpec::parse("blob:3").is_err());
        assert!(FamilySpec::parse("random:5,3,1").is_err());
    }

    #[test]
    fn generated_classes() {
        let cases = [
            ("path:4", GraphClass::Path { length: 4 }),
            ("cycle:7", GraphClass::Cycle { length: 7 }),
            ("star:4", GraphClass::Star { leaves: 4 }),
            (
                "spider:3,1,2",
                GraphClass::ExtendedStar {
                    arms: vec![3, 2, 1],
                    diameter: 5,
                },
            ),
            ("petal:1x5", GraphClass::Cycle { length: 5 }),
        ];
        for (s, class) in cases {
            let (g, _) = FamilySpec::parse(s).unwrap().generate().unwrap();
            assert_eq!(g.classify(), class, "{s}");
        }
    }

    #[test]
    fn mickey_mouse_shape() {
        let g = mickey_mouse(3).unwrap();
        assert_eq!(g.n(), 9 * 3 - 2);
        assert_eq!(g.branch_vertices(), vec![0, 3]);
        assert_eq!(g.distance(0, 3).unwrap(), 3);
        assert_eq!(g.girth(), Some(6));
        let mut lengths: Vec<usize> = g.simple_cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable();
        assert_eq!(&lengths[..3], &[6, 6, 15]);
    }

    #[test]
    fn petal_shape() {
        let g = petal(3, 4).unwrap();
        assert_eq!((g.n(), g.m()), (10, 12));
        assert_eq!(g.degree(0), 6);
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn random_is_reproducible_and_sized() {
        let a = random_connected(10, 14, 42).unwrap();
        let b = random_connected(10, 14, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!((a.n(), a.m()), (10, 14));
        let c = random_connected(10, 14, 43).unwrap();
        assert_ne!(a.edges(), c.edges());
        let tree = random_connected(7, 6, 1).unwrap();
        assert!(tree.is_tree());
        let full = random_connected(6, 15, 9).unwrap();
        assert_eq!(full.m(), 15);
    }

    #[test]
    fn subdivision_examples() {
        let tri = cycle(3).unwrap();
        let g = subdivide(&tri, (0, 1), 1).unwrap();
        assert_eq!(g.classify(), GraphClass::Cycle { length: 4 });
        let g = subdivide(&cycle(5).unwrap(), (2, 3), 3).unwrap();
        assert_eq!(g.classify(), GraphClass::Cycle { length: 8 });
        assert_eq!(
            subdivide(&tri, (0, 5), 1).unwrap_err(),
            Error::MissingEdge(0, 5)
        );
    }
}
