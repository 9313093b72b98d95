//! Independent oracles: Floyd-Warshall distances and literal subset scans.
#![allow(dead_code)]

use proptest::prelude::*;
use resolvedim::Graph;

pub const INF: u32 = u32::MAX / 4;

pub fn floyd(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn resolves_all(d: &[Vec<u32>], set: &[usize]) -> bool {
    let n = d.len();
    let mut seen: Vec<Vec<u32>> = (0..n)
        .map(|v| set.iter().map(|&s| d[s][v]).collect())
        .collect();
    seen.sort();
    seen.dedup();
    seen.len() == n
}

pub fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Smallest resolving set size by scanning all subsets.
pub fn brute_dim(d: &[Vec<u32>]) -> usize {
    let n = d.len();
    (1u32..1 << n)
        .filter(|&m| resolves_all(d, &members(m)))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn brute_is_minimal(d: &[Vec<u32>], set: &[usize]) -> bool {
    resolves_all(d, set)
        && (0..set.len()).all(|i| {
            let rest: Vec<usize> = set
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &v)| v)
                .collect();
            !resolves_all(d, &rest)
        })
}

/// Largest minimal resolving set size by scanning all subsets.
pub fn brute_dim_plus(d: &[Vec<u32>]) -> usize {
    let n = d.len();
    (1u32..1 << n)
        .filter(|&m| brute_is_minimal(d, &members(m)))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

/// Least k with every k-subset resolving.
pub fn brute_res(d: &[Vec<u32>]) -> usize {
    let n = d.len();
    (1..=n)
        .find(|&k| {
            (0u32..1 << n)
                .filter(|m| m.count_ones() as usize == k)
                .all(|m| resolves_all(d, &members(m)))
        })
        .unwrap()
}

/// Connected graphs on 2..=max_n vertices: a random tree plus extra edges.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            (
                Just(n),
                parents,
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    // sparse-ish: keep every third candidate
                    if extra[k] && (i + j + k) % 3 == 0 {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, edges).unwrap()
        })
}

pub fn dist(g: &Graph) -> Vec<Vec<u32>> {
    floyd(g.order(), g.edges())
}
