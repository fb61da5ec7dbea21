//! Brute-force oracles. Deliberately naive: subsets and label assignments,
//! no pruning, adjacency through `has_edge` only.
#![allow(dead_code)]

use stabcds::{Graph, VertexSet};

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let m = n * n.saturating_sub(1) / 2;
    (0..1u64 << m).map(move |b| graph_from_bits(n, b))
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u64 << n).map(move |m| members(m, n))
}

pub fn is_independent(g: &Graph, s: &[usize]) -> bool {
    s.iter()
        .enumerate()
        .all(|(i, &a)| s[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

pub fn is_clique(g: &Graph, s: &[usize]) -> bool {
    s.iter()
        .enumerate()
        .all(|(i, &a)| s[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

pub fn alpha(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|s| is_independent(g, s))
        .map(|s| s.len())
        .max()
        .unwrap()
}

pub fn omega(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|s| is_clique(g, s))
        .map(|s| s.len())
        .max()
        .unwrap()
}

pub fn has_claw(g: &Graph) -> bool {
    let n = g.order();
    (0..n).any(|c| {
        let nb: Vec<_> = (0..n).filter(|&u| g.has_edge(c, u)).collect();
        nb.iter().enumerate().any(|(i, &a)| {
            nb[i + 1..].iter().enumerate().any(|(j, &b)| {
                nb[i + 1 + j + 1..]
                    .iter()
                    .any(|&d| is_independent(g, &[a, b, d]))
            })
        })
    })
}

/// Connectivity of `s` by repeated relaxation.
pub fn connected(g: &Graph, s: &[usize]) -> bool {
    if s.is_empty() {
        return false;
    }
    let mut seen = vec![s[0]];
    loop {
        let before = seen.len();
        for &u in s {
            if !seen.contains(&u) && seen.iter().any(|&w| g.has_edge(u, w)) {
                seen.push(u);
            }
        }
        if seen.len() == before {
            return seen.len() == s.len();
        }
    }
}

pub fn has_induced_cycle(g: &Graph, k: usize) -> bool {
    subsets(g.order()).filter(|s| s.len() == k).any(|s| {
        let deg = |v: usize| s.iter().filter(|&&u| g.has_edge(u, v)).count();
        s.iter().all(|&v| deg(v) == 2) && connected(g, &s)
    })
}

pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.order() {
        if out.iter().any(|c| c.contains(&v)) {
            continue;
        }
        let all: Vec<_> = (0..g.order()).collect();
        let mut comp = reach(g, v, &all);
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn reach(g: &Graph, v: usize, within: &[usize]) -> Vec<usize> {
    let mut seen = vec![v];
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        for &u in within {
            if !seen.contains(&u) && g.has_edge(x, u) {
                seen.push(u);
            }
        }
        i += 1;
    }
    seen
}

/// Dominating, and connected inside every component of `g`.
pub fn is_cds(g: &Graph, d: &[usize]) -> bool {
    let n = g.order();
    let dominated = (0..n).all(|v| d.contains(&v) || d.iter().any(|&u| g.has_edge(u, v)));
    dominated
        && components(g).iter().all(|c| {
            let part: Vec<_> = d.iter().copied().filter(|v| c.contains(v)).collect();
            connected(g, &part)
        })
}

pub fn min_cds_size(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|d| is_cds(g, d))
        .map(|d| d.len())
        .min()
        .unwrap()
}

/// Largest `k` with `k` disjoint connected, pairwise adjacent branch sets,
/// the first `singletons` of which are single vertices. Tries every
/// assignment of vertices to `{unused, 0..k}`.
fn minor_order(g: &Graph, singletons: usize) -> usize {
    let n = g.order();
    let mut best = if n == 0 { 0 } else { 1 };
    for k in 2..=n {
        let labels = (k + 1) as u64;
        let total = labels.pow(n as u32);
        let found =
            (0..total).any(|code| {
                let mut parts = vec![Vec::new(); k];
                let mut c = code;
                for v in 0..n {
                    let l = (c % labels) as usize;
                    c /= labels;
                    if l > 0 {
                        parts[l - 1].push(v);
                    }
                }
                parts.iter().enumerate().all(|(i, p)| {
                    !p.is_empty() && (i >= singletons || p.len() == 1) && connected(g, p)
                }) && (0..k).all(|i| {
                    (0..i).all(|j| {
                        parts[i]
                            .iter()
                            .any(|&a| parts[j].iter().any(|&b| g.has_edge(a, b)))
                    })
                })
            });
        if found {
            best = k;
        } else {
            break;
        }
    }
    best
}

/// `h(G)`; clique minors with two singleton branch sets.
pub fn h(g: &Graph) -> usize {
    minor_order(g, 2)
}

pub fn eta(g: &Graph) -> usize {
    minor_order(g, 0)
}

pub fn set(s: &[usize]) -> VertexSet {
    s.iter().copied().collect()
}
