//! Simple undirected graphs over dense vertex indices `0..n`.

mod distance;
mod edgelist;
mod graph6;

pub use distance::{distance_matrix, DistanceMatrix, INFINITY};
pub use edgelist::{parse_edge_list, to_edge_list};
pub use graph6::{parse_graph6, to_graph6, MAX_GRAPH6_ORDER};

use crate::error::{Error, Result};

/// An immutable simple undirected graph.
///
/// Edges are stored normalized as `(min, max)` and sorted; adjacency lists
/// are sorted and symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, dropping duplicate edges.
    ///
    /// ```
    /// use resolvedim::Graph;
    /// let p2 = Graph::from_edge_list(2, [(0, 1), (1, 0)]).unwrap();
    /// assert_eq!(p2.edge_count(), 1);
    /// ```
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    /// Decodes an adjacency mask whose bit `j*(j-1)/2 + i` is the pair
    /// `{i, j}` with `i < j` (graph6 bit order).
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::from_edge_list(n, edges)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let edges = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
        Graph::from_edge_list(n, edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidSpec(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Returns `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        self.adj.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// A connected 2-regular graph, i.e. `C_n` for `n >= 3`.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.regular_degree() == Some(2) && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }
}

/// Alias kept for symmetry with [`Graph::from_edge_list`].
pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Graph>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    Graph::from_edge_list(n, edges)
}

pub fn is_connected(g: &Graph) -> bool {
    g.is_connected()
}

pub fn girth(g: &Graph) -> Option<usize> {
    g.girth()
}
