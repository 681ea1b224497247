//! Exact vertex and edge chromatic numbers for small graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CHI_VERTEX_CAP: usize = 16;
pub const CHI_STAR_EDGE_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VizingClass {
    One,
    Two,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaResult {
    pub chi: usize,
    pub chi_star: usize,
    pub delta: usize,
    pub vizing_class: VizingClass,
}

pub fn chi(g: &Graph) -> Result<usize> {
    if g.n() > CHI_VERTEX_CAP {
        return Err(Error::CapExceeded {
            operation: "chi",
            unit: "vertices",
            cap: CHI_VERTEX_CAP,
            got: g.n(),
        });
    }
    Ok(chromatic_number(&masks(g)))
}

pub fn chi_star(g: &Graph) -> Result<usize> {
    if g.m() > CHI_STAR_EDGE_CAP {
        return Err(Error::CapExceeded {
            operation: "chi_star",
            unit: "edges",
            cap: CHI_STAR_EDGE_CAP,
            got: g.m(),
        });
    }
    // a single edge has an edgeless line graph
    Ok(g.line_graph().map_or(1, |l| chromatic_number(&masks(&l))))
}

pub fn chroma(g: &Graph) -> Result<ChromaResult> {
    let chi = chi(g)?;
    let chi_star = chi_star(g)?;
    let delta = g.max_degree();
    let vizing_class = if chi_star == delta {
        VizingClass::One
    } else {
        VizingClass::Two
    };
    Ok(ChromaResult {
        chi,
        chi_star,
        delta,
        vizing_class,
    })
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbours(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn chromatic_number(adj: &[u64]) -> usize {
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    let lower = max_clique(adj);
    let upper = greedy_colours(adj);
    (lower..upper)
        .find(|&k| {
            let mut colour = vec![usize::MAX; n];
            dsatur(adj, k, &mut colour, 0, 0)
        })
        .unwrap_or(upper)
}

fn greedy_colours(adj: &[u64]) -> usize {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    let mut colour = vec![usize::MAX; n];
    let mut used = 0;
    for v in order {
        let taken: u64 = (0..n)
            .filter(|&u| adj[v] >> u & 1 == 1 && colour[u] != usize::MAX)
            .fold(0, |m, u| m | 1 << colour[u]);
        let c = (!taken).trailing_zeros() as usize;
        colour[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn max_clique(adj: &[u64]) -> usize {
    let all = if adj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << adj.len()) - 1
    };
    let mut best = 0;
    bron_kerbosch(adj, 0, all, 0, &mut best);
    best
}

fn bron_kerbosch(adj: &[u64], size: usize, mut p: u64, mut x: u64, best: &mut usize) {
    if p == 0 {
        if x == 0 {
            *best = (*best).max(size);
        }
        return;
    }
    if size + p.count_ones() as usize <= *best {
        return;
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        bron_kerbosch(adj, size + 1, p & adj[v], x & adj[v], best);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

// Backtracking in saturation order; colours beyond `used` are tried once.
fn dsatur(adj: &[u64], k: usize, colour: &mut [usize], coloured: usize, used: usize) -> bool {
    let n = adj.len();
    if coloured == n {
        return true;
    }
    let neighbour_colours = |v: usize, colour: &[usize]| -> u64 {
        let mut m = adj[v];
        let mut out = 0u64;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            if colour[u] != usize::MAX {
                out |= 1 << colour[u];
            }
        }
        out
    };
    let v = (0..n)
        .filter(|&v| colour[v] == usize::MAX)
        .max_by_key(|&v| {
            (
                neighbour_colours(v, colour).count_ones(),
                adj[v].count_ones(),
                std::cmp::Reverse(v),
            )
        })
        .unwrap_or(0);
    let taken = neighbour_colours(v, colour);
    for c in 0..k.min(used + 1) {
        if taken >> c & 1 == 1 {
            continue;
        }
        colour[v] = c;
        if dsatur(adj, k, colour, coloured + 1, used.max(c + 1)) {
            return true;
        }
    }
    colour[v] = usize::MAX;
    false
}
