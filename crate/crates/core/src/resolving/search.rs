//! Resolving sets as hitting sets.
//!
//! `S` resolves `G` iff it meets `R(x, y)` for every pair. Only the
//! inclusion-minimal resolver sets matter: hitting a minimal set hits every
//! superset, and a vertex with a private resolver set (one meeting `S` only
//! in that vertex) also has a private minimal one. Resolver sets are vertex
//! bitmasks, which caps the exact searches at 64 vertices.

use rayon::prelude::*;

use super::VertexPair;
use crate::graph::DistanceMatrix;

pub(crate) const MAX_SEARCH_ORDER: usize = 64;

/// Below this order a search is not worth splitting across workers.
const PARALLEL_THRESHOLD: usize = 16;

/// The inclusion-minimal resolver sets of a graph as vertex bitmasks.
#[derive(Clone, Debug)]
pub struct ResolverFamily {
    n: usize,
    sets: Vec<u64>,
}

/// `len` consecutive bits starting at `lo`.
#[inline]
fn bit_range(lo: usize, len: usize) -> u64 {
    if len == 0 {
        0
    } else {
        (u64::MAX >> (64 - len)) << lo
    }
}

impl ResolverFamily {
    /// Panics if the graph has more than 64 vertices.
    pub fn new(dm: &DistanceMatrix) -> ResolverFamily {
        let n = dm.order();
        assert!(
            n <= MAX_SEARCH_ORDER,
            "resolver bitmasks hold at most 64 vertices"
        );
        let mut masks: Vec<u64> = VertexPair::all(n)
            .map(|p| {
                let (rx, ry) = (dm.row(p.x()), dm.row(p.y()));
                let mut m = 0u64;
                for v in 0..n {
                    if rx[v] != ry[v] {
                        m |= 1 << v;
                    }
                }
                m
            })
            .collect();
        masks.sort_unstable_by_key(|&m| (m.count_ones(), m));
        masks.dedup();

        let mut sets: Vec<u64> = Vec::new();
        for m in masks {
            if !sets.iter().any(|&s| s & !m == 0) {
                sets.push(m);
            }
        }
        ResolverFamily { n, sets }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    pub fn is_resolving(&self, set: u64) -> bool {
        self.sets.iter().all(|&s| s & set != 0)
    }

    pub fn is_minimal_resolving(&self, set: u64) -> bool {
        let mut private = 0u64;
        for &s in &self.sets {
            let c = s & set;
            if c == 0 {
                return false;
            }
            if c & (c - 1) == 0 {
                private |= c;
            }
        }
        private == set
    }

    /// Lexicographically smallest resolving `k`-subset.
    pub fn first_hitting(&self, k: usize, parallel: bool) -> Option<u64> {
        self.first(k, false, parallel)
    }

    /// Lexicographically smallest minimal resolving `k`-subset.
    pub fn first_minimal_hitting(&self, k: usize, parallel: bool) -> Option<u64> {
        self.first(k, true, parallel)
    }

    fn first(&self, k: usize, minimal: bool, parallel: bool) -> Option<u64> {
        if k == 0 || k > self.n {
            return (k == 0 && self.sets.is_empty()).then_some(0);
        }
        let firsts = 0..=self.n - k;
        if parallel && self.n >= PARALLEL_THRESHOLD {
            firsts
                .into_par_iter()
                .find_map_first(|v| self.extend(1 << v, v + 1, k - 1, minimal))
        } else {
            firsts
                .into_iter()
                .find_map(|v| self.extend(1 << v, v + 1, k - 1, minimal))
        }
    }

    /// Depth-first extension of `chosen` with `remaining` vertices from
    /// `next..n`, visiting subsets in lexicographic order.
    fn extend(&self, chosen: u64, next: usize, remaining: usize, minimal: bool) -> Option<u64> {
        let above = !bit_range(0, next);
        let mut all_hit = true;
        let mut private = 0u64;
        for &s in &self.sets {
            let c = s & chosen;
            if c == 0 {
                all_hit = false;
                if remaining == 0 || s & above == 0 {
                    return None;
                }
            } else if minimal && c & (c - 1) == 0 {
                private |= c;
            }
        }
        // private resolver sets only disappear as vertices are added
        if minimal && private != chosen {
            return None;
        }
        if all_hit {
            return if remaining == 0 {
                Some(chosen)
            } else if minimal {
                None
            } else {
                Some(chosen | bit_range(next, remaining))
            };
        }
        (next..=self.n - remaining)
            .find_map(|v| self.extend(chosen | 1 << v, v + 1, remaining - 1, minimal))
    }
}
