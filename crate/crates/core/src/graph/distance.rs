use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// Distance between vertices in different components.
pub const INFINITY: u32 = u32::MAX;

/// All-pairs hop distances, computed by one BFS per source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    ecc: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> DistanceMatrix {
        let n = g.order();
        let mut d = vec![INFINITY; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let next = row[u] + 1;
                for &v in g.neighbors(u) {
                    if row[v] == INFINITY {
                        row[v] = next;
                        queue.push_back(v);
                    }
                }
            }
        }
        let ecc = d
            .chunks(n)
            .map(|row| row.iter().copied().max().unwrap_or(0))
            .collect();
        DistanceMatrix { n, d, ecc }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        self.ecc.iter().all(|&e| e != INFINITY)
    }

    pub fn eccentricity(&self, u: usize) -> Result<u32> {
        match self.ecc[u] {
            INFINITY => Err(Error::Disconnected),
            e => Ok(e),
        }
    }

    pub fn diameter(&self) -> Result<u32> {
        match self.ecc.iter().copied().max().unwrap_or(0) {
            INFINITY => Err(Error::Disconnected),
            e => Ok(e),
        }
    }

    /// The distance classes `[N_0(u), N_1(u), ..., N_ecc(u)(u)]`, each sorted.
    pub fn neighborhood_shells(&self, u: usize) -> Result<Vec<Vec<usize>>> {
        let ecc = self.eccentricity(u)? as usize;
        let mut shells = vec![Vec::new(); ecc + 1];
        for (v, &dist) in self.row(u).iter().enumerate() {
            shells[dist as usize].push(v);
        }
        Ok(shells)
    }
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    DistanceMatrix::new(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shell_sizes(dm: &DistanceMatrix, u: usize) -> Vec<usize> {
        dm.neighborhood_shells(u)
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect()
    }

    #[test]
    fn cycle_distances() {
        let dm = Graph::cycle(5).unwrap().distance_matrix();
        assert_eq!(dm.get(0, 2), 2);
        assert_eq!(dm.get(0, 3), 2);
        assert_eq!(dm.diameter().unwrap(), 2);
    }

    #[test]
    fn disconnected_sentinel() {
        let g = Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        let dm = g.distance_matrix();
        assert_eq!(dm.get(0, 2), INFINITY);
        assert_eq!(dm.get(0, 1), 1);
        assert!(!dm.is_connected());
        assert_eq!(dm.diameter(), Err(Error::Disconnected));
        assert_eq!(dm.eccentricity(0), Err(Error::Disconnected));
        assert_eq!(dm.neighborhood_shells(0), Err(Error::Disconnected));
    }

    #[test]
    fn diameters() {
        assert_eq!(
            Graph::complete(4).unwrap().distance_matrix().diameter(),
            Ok(1)
        );
        let p5 = Graph::path(5).unwrap().distance_matrix();
        assert_eq!(p5.diameter(), Ok(4));
        assert_eq!(p5.eccentricity(2), Ok(2));
    }

    #[test]
    fn shells() {
        let k4 = Graph::complete(4).unwrap().distance_matrix();
        let c5 = Graph::cycle(5).unwrap().distance_matrix();
        let c7 = Graph::cycle(7).unwrap().distance_matrix();
        for u in 0..4 {
            assert_eq!(shell_sizes(&k4, u), vec![1, 3]);
        }
        for u in 0..5 {
            assert_eq!(shell_sizes(&c5, u), vec![1, 2, 2]);
        }
        for u in 0..7 {
            assert_eq!(shell_sizes(&c7, u), vec![1, 2, 2, 2]);
        }
        assert_eq!(
            c5.neighborhood_shells(0).unwrap(),
            vec![vec![0], vec![1, 4], vec![2, 3]]
        );
    }
}
