//! Independent brute-force values: plain subset and label enumeration over
//! `has_edge`, nothing shared with the library's search code.
#![allow(dead_code)]

use stabcds::Graph;

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u64 << n).map(move |m| members(m, n))
}

fn connected(g: &Graph, s: &[usize]) -> bool {
    if s.is_empty() {
        return false;
    }
    let mut seen = vec![s[0]];
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        for &u in s {
            if !seen.contains(&u) && g.has_edge(x, u) {
                seen.push(u);
            }
        }
        i += 1;
    }
    seen.len() == s.len()
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn alpha(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|s| {
            s.iter()
                .all(|&a| s.iter().all(|&b| a == b || !g.has_edge(a, b)))
        })
        .map(|s| s.len())
        .max()
        .unwrap()
}

/// Minimum connected dominating set size of a connected graph.
pub fn min_cds_size(g: &Graph) -> usize {
    let n = g.order();
    subsets(n)
        .filter(|d| {
            connected(g, d) && (0..n).all(|v| d.contains(&v) || d.iter().any(|&u| g.has_edge(u, v)))
        })
        .map(|d| d.len())
        .min()
        .unwrap()
}

/// Largest clique minor whose first `singletons` branch sets are single vertices.
fn minor_order(g: &Graph, singletons: usize) -> usize {
    let n = g.order();
    let mut best = usize::from(n > 0);
    for k in 2..=n {
        let labels = (k + 1) as u64;
        let found = (0..labels.pow(n as u32)).any(|code| {
            let mut parts = vec![Vec::new(); k];
            let mut c = code;
            for v in 0..n {
                let l = (c % labels) as usize;
                c /= labels;
                if l > 0 {
                    parts[l - 1].push(v);
                }
            }
            parts
                .iter()
                .enumerate()
                .all(|(i, p)| (i >= singletons || p.len() == 1) && connected(g, p))
                && (0..k).all(|i| {
                    (0..i).all(|j| {
                        parts[i]
                            .iter()
                            .any(|&a| parts[j].iter().any(|&b| g.has_edge(a, b)))
                    })
                })
        });
        if !found {
            break;
        }
        best = k;
    }
    best
}

pub fn h(g: &Graph) -> usize {
    minor_order(g, 2)
}

pub fn eta(g: &Graph) -> usize {
    minor_order(g, 0)
}

/// graph6 written directly from the format description: `n + 63`, then the
/// upper triangle column by column as a bit string, padded to a multiple of
/// six. Short header only (`n <= 62`).
pub fn graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= 62);
    let mut bits = String::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push('0');
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.as_bytes().chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | (b - b'0'));
        out.push((v + 63) as char);
    }
    out
}
