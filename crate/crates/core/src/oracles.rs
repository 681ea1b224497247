//! Deliberately naive brute-force baselines.
//!
//! Neither oracle shares code with the component or union-find routes:
//! `oracle_chi_o` backtracks over raw class assignments and checks the
//! successor rule directly, `oracle_chi_t` enumerates vertex sequences and
//! set partitions.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_CHI_O_EDGE_CAP: usize = 10;
pub const ORACLE_CHI_T_VERTEX_CAP: usize = 8;

pub fn oracle_chi_o(g: &Graph) -> Result<usize> {
    if g.m() > ORACLE_CHI_O_EDGE_CAP {
        return Err(Error::CapExceeded {
            operation: "oracle_chi_o",
            unit: "edges",
            cap: ORACLE_CHI_O_EDGE_CAP,
            got: g.m(),
        });
    }
    let mut oriented = Vec::new();
    for (u, v) in g.edges() {
        oriented.push((u, v));
        oriented.push((v, u));
    }
    oriented.sort_unstable();
    // successor pairs by index
    let mut arcs = Vec::new();
    for (i, &(a, b)) in oriented.iter().enumerate() {
        for (j, &(c, d)) in oriented.iter().enumerate() {
            if b == c && a != d {
                arcs.push((i, j));
            }
        }
    }
    let total = oriented.len();
    // Fixed assignment order: breadth-first over the arc relation, so each
    // edge after a root meets an already-classed neighbour.
    let order = arc_bfs_order(total, &arcs);
    let mut position = vec![0; total];
    for (p, &e) in order.iter().enumerate() {
        position[e] = p;
    }
    let arcs: Vec<(usize, usize)> = arcs
        .iter()
        .map(|&(t, h)| (position[t], position[h]))
        .collect();
    for k in (1..=total).rev() {
        let mut class = vec![usize::MAX; total];
        if assign(0, k, &arcs, &mut class) {
            return Ok(k);
        }
    }
    Ok(1)
}

fn arc_bfs_order(total: usize, arcs: &[(usize, usize)]) -> Vec<usize> {
    let mut seen = vec![false; total];
    let mut order = Vec::with_capacity(total);
    for root in 0..total {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &(t, h) in arcs {
                let other = if t == x {
                    h
                } else if h == x {
                    t
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    queue.push_back(other);
                }
            }
        }
    }
    order
}

fn assign(i: usize, k: usize, arcs: &[(usize, usize)], class: &mut [usize]) -> bool {
    let total = class.len();
    if i == total {
        let mut used = vec![false; k];
        for &c in class.iter() {
            used[c] = true;
        }
        return used.iter().all(|&u| u);
    }
    let mut used = vec![false; k];
    for &c in &class[..i] {
        used[c] = true;
    }
    if used.iter().filter(|&&u| !u).count() > total - i {
        return false;
    }
    for c in 0..k {
        class[i] = c;
        let consistent = arcs
            .iter()
            .all(|&(t, h)| t > i || h > i || class[h] == (class[t] + 1) % k);
        if consistent && assign(i + 1, k, arcs, class) {
            return true;
        }
    }
    class[i] = usize::MAX;
    false
}

pub fn oracle_chi_t(g: &Graph, t: usize) -> Result<usize> {
    let n = g.n();
    if n > ORACLE_CHI_T_VERTEX_CAP {
        return Err(Error::CapExceeded {
            operation: "oracle_chi_t",
            unit: "vertices",
            cap: ORACLE_CHI_T_VERTEX_CAP,
            got: n,
        });
    }
    if t == 0 || t > n {
        return Err(Error::OutOfRange {
            what: "t",
            value: t,
            constraint: format!("1 <= t <= n = {n}"),
        });
    }
    let mut adjacent = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adjacent[u][v] = true;
        adjacent[v][u] = true;
    }
    // every sequence of t + 1 distinct vertices that is a walk
    let mut ends = Vec::new();
    let mut seq = Vec::with_capacity(t + 1);
    sequences(n, t + 1, &mut seq, &mut |s: &[usize]| {
        if s.windows(2).all(|w| adjacent[w[0]][w[1]]) {
            ends.push((s[0], s[t]));
        }
    });

    // restricted growth strings enumerate set partitions of V
    let mut best = 0;
    let mut rgs = vec![0usize; n];
    partitions(&mut rgs, 1, 0, &mut |labels: &[usize], blocks: usize| {
        if blocks > best && ends.iter().all(|&(a, b)| labels[a] == labels[b]) {
            best = blocks;
        }
    });
    Ok(best)
}

fn sequences(n: usize, len: usize, seq: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if seq.len() == len {
        visit(seq);
        return;
    }
    for v in 0..n {
        if !seq.contains(&v) {
            seq.push(v);
            sequences(n, len, seq, visit);
            seq.pop();
        }
    }
}

fn partitions(rgs: &mut [usize], i: usize, max: usize, visit: &mut impl FnMut(&[usize], usize)) {
    if i >= rgs.len() {
        visit(rgs, max + 1);
        return;
    }
    for label in 0..=max + 1 {
        rgs[i] = label;
        partitions(rgs, i + 1, max.max(label), visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn oracle_chi_o_examples() {
        assert_eq!(oracle_chi_o(&families::path(2).unwrap()).unwrap(), 4);
        assert_eq!(oracle_chi_o(&families::cycle(6).unwrap()).unwrap(), 6);
        assert_eq!(
            oracle_chi_o(&families::spider(&[1, 1, 1]).unwrap()).unwrap(),
            2
        );
        assert_eq!(oracle_chi_o(&families::complete(4).unwrap()).unwrap(), 1);
        assert!(oracle_chi_o(&families::cycle(11).unwrap()).is_err());
    }

    #[test]
    fn oracle_chi_t_examples() {
        assert_eq!(oracle_chi_t(&families::cycle(6).unwrap(), 4).unwrap(), 2);
        assert_eq!(oracle_chi_t(&families::cycle(5).unwrap(), 5).unwrap(), 5);
        assert_eq!(oracle_chi_t(&families::complete(4).unwrap(), 3).unwrap(), 1);
        assert!(oracle_chi_t(&families::cycle(9).unwrap(), 3).is_err());
        assert!(oracle_chi_t(&families::cycle(5).unwrap(), 0).is_err());
    }

    #[test]
    fn oracle_sees_unequal_spider_arms() {
        // arms (3,1,1): the longest arm alone spans 6 residues
        assert_eq!(
            oracle_chi_o(&families::spider(&[3, 1, 1]).unwrap()).unwrap(),
            6
        );
    }
}
