//! Resolving sets and the three resolving parameters.
//!
//! A vertex `v` resolves a pair `{x, y}` when `d(v, x) != d(v, y)`. The
//! predicates in this module work directly on a [`DistanceMatrix`] and assume
//! the underlying graph is connected; the parameter computations on
//! [`Solver`] check connectivity themselves and fail fast.

mod number;
mod report;
mod search;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

pub use number::{pair_signatures, PairSignatures};
pub use report::{Params, ResolvingReport};
pub use search::ResolverFamily;

/// Unordered vertex pair stored with `x < y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPair {
    x: usize,
    y: usize,
}

impl VertexPair {
    pub fn new(a: usize, b: usize) -> Option<VertexPair> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(VertexPair { x: a, y: b }),
            std::cmp::Ordering::Greater => Some(VertexPair { x: b, y: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }

    /// All pairs of `0..n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = VertexPair> {
        (0..n).flat_map(move |x| (x + 1..n).map(move |y| VertexPair { x, y }))
    }
}

impl fmt::Display for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.x, self.y)
    }
}

impl Serialize for VertexPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x, self.y].serialize(s)
    }
}

#[inline]
pub fn resolves(dm: &DistanceMatrix, v: usize, p: VertexPair) -> bool {
    dm.get(v, p.x) != dm.get(v, p.y)
}

/// `R(x, y)`: every vertex resolving `p`, in increasing order.
pub fn resolver_set(dm: &DistanceMatrix, p: VertexPair) -> Vec<usize> {
    (0..dm.order()).filter(|&v| resolves(dm, v, p)).collect()
}

/// Pairs not resolved by any vertex of `set`, in lexicographic order.
pub fn unresolved_pairs(dm: &DistanceMatrix, set: &[usize]) -> Vec<VertexPair> {
    VertexPair::all(dm.order())
        .filter(|&p| !set.iter().any(|&v| resolves(dm, v, p)))
        .collect()
}

pub fn is_resolving_set(dm: &DistanceMatrix, set: &[usize]) -> bool {
    VertexPair::all(dm.order()).all(|p| set.iter().any(|&v| resolves(dm, v, p)))
}

/// A resolving set none of whose one-smaller subsets resolves.
pub fn is_minimal_resolving_set(dm: &DistanceMatrix, set: &[usize]) -> bool {
    is_resolving_set(dm, set)
        && (0..set.len()).all(|skip| {
            let rest: Vec<usize> = set
                .iter()
                .enumerate()
                .filter_map(|(i, &v)| (i != skip).then_some(v))
                .collect();
            !is_resolving_set(dm, &rest)
        })
}

/// Pairs resolved by exactly one vertex of the resolving set `set`, mapped
/// to that vertex.
pub fn s_unique_pairs(dm: &DistanceMatrix, set: &[usize]) -> Result<BTreeMap<VertexPair, usize>> {
    let mut unique = BTreeMap::new();
    for p in VertexPair::all(dm.order()) {
        let mut hits = set.iter().copied().filter(|&v| resolves(dm, v, p));
        match (hits.next(), hits.next()) {
            (None, _) => return Err(Error::NotResolving),
            (Some(v), None) => {
                unique.insert(p, v);
            }
            _ => {}
        }
    }
    Ok(unique)
}

/// Evaluates `sum_{1 <= i <= ecc(u)} C(|N_i(u)|, 2)` and compares it with
/// `n - 1`. The identity holds at every vertex of a randomly 3-dimensional
/// graph.
pub fn shell_identity(dm: &DistanceMatrix, u: usize) -> Result<(bool, u64)> {
    let shells = dm.neighborhood_shells(u)?;
    let sum: u64 = shells
        .iter()
        .skip(1)
        .map(|s| (s.len() * s.len().saturating_sub(1) / 2) as u64)
        .sum();
    Ok((sum == dm.order() as u64 - 1, sum))
}

pub fn shell_identity_check(g: &Graph, u: usize) -> Result<(bool, u64)> {
    shell_identity(&g.distance_matrix(), u)
}

/// Exact-search limits and parallelism for the parameter solvers.
#[derive(Clone, Debug)]
pub struct Solver {
    /// Largest order accepted by [`Solver::metric_dimension`].
    pub dim_cap: usize,
    /// Largest order accepted by [`Solver::upper_dimension`].
    pub dim_plus_cap: usize,
    /// Largest order accepted by [`Solver::resolving_number_bruteforce`].
    pub brute_res_cap: usize,
    /// Split subset searches over the current rayon pool.
    pub parallel: bool,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            dim_cap: 40,
            dim_plus_cap: 30,
            brute_res_cap: 20,
            parallel: true,
        }
    }
}

fn require_connected(dm: &DistanceMatrix) -> Result<()> {
    let n = dm.order();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn require_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(search::MAX_SEARCH_ORDER);
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    Ok(())
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

impl Solver {
    /// `dim(G)` and the lexicographically smallest metric basis.
    pub fn metric_dimension(&self, g: &Graph) -> Result<(usize, Vec<usize>)> {
        self.metric_dimension_dm(&g.distance_matrix())
    }

    pub fn metric_dimension_dm(&self, dm: &DistanceMatrix) -> Result<(usize, Vec<usize>)> {
        require_connected(dm)?;
        require_cap(dm.order(), self.dim_cap)?;
        let family = ResolverFamily::new(dm);
        for k in 1..dm.order() {
            if let Some(mask) = family.first_hitting(k, self.parallel) {
                return Ok((k, mask_to_vec(mask)));
            }
        }
        unreachable!("every (n-1)-subset resolves a connected graph")
    }

    /// `dim+(G)` and the lexicographically smallest upper basis.
    ///
    /// Sizes are scanned downward from `res(G)`, which bounds `dim+(G)`.
    pub fn upper_dimension(&self, g: &Graph) -> Result<(usize, Vec<usize>)> {
        self.upper_dimension_dm(&g.distance_matrix())
    }

    pub fn upper_dimension_dm(&self, dm: &DistanceMatrix) -> Result<(usize, Vec<usize>)> {
        require_connected(dm)?;
        require_cap(dm.order(), self.dim_plus_cap)?;
        let (res, _) = resolving_number_closed(dm)?;
        let family = ResolverFamily::new(dm);
        for s in (1..=res).rev() {
            if let Some(mask) = family.first_minimal_hitting(s, self.parallel) {
                return Ok((s, mask_to_vec(mask)));
            }
        }
        unreachable!("a metric basis is a minimal resolving set")
    }

    /// Literal definition of `res(G)`: the least `k` such that every
    /// `k`-subset resolves. Used as the oracle for the closed form.
    pub fn resolving_number_bruteforce(&self, g: &Graph) -> Result<usize> {
        let dm = g.distance_matrix();
        require_connected(&dm)?;
        require_cap(dm.order(), self.brute_res_cap)?;
        Ok(number::resolving_number_by_subsets(&pair_signatures(&dm)))
    }

    /// `Some(k)` when `dim(G) = res(G) = k`.
    pub fn is_randomly_k_dimensional(&self, g: &Graph) -> Result<Option<usize>> {
        self.randomly_k_dm(&g.distance_matrix())
    }

    pub fn randomly_k_dm(&self, dm: &DistanceMatrix) -> Result<Option<usize>> {
        require_connected(dm)?;
        require_cap(dm.order(), self.dim_cap)?;
        let (res, _) = resolving_number_closed(dm)?;
        if res == 1 {
            return Ok(Some(1));
        }
        let family = ResolverFamily::new(dm);
        Ok(family
            .first_hitting(res - 1, self.parallel)
            .is_none()
            .then_some(res))
    }
}

/// `res(G) = 1 + max_{x<y} |V \ R(x, y)|`, with the first pair attaining
/// the maximum. A `k`-subset fails to resolve exactly when it fits inside
/// the non-resolver set of some pair.
pub fn resolving_number_closed(dm: &DistanceMatrix) -> Result<(usize, VertexPair)> {
    require_connected(dm)?;
    let n = dm.order();
    let mut best: Option<(usize, VertexPair)> = None;
    for p in VertexPair::all(n) {
        let outside = (0..n).filter(|&v| !resolves(dm, v, p)).count();
        if best.is_none_or(|(b, _)| outside > b) {
            best = Some((outside, p));
        }
    }
    let (outside, p) = best.expect("n >= 2 has a pair");
    Ok((outside + 1, p))
}

pub fn metric_dimension(g: &Graph) -> Result<(usize, Vec<usize>)> {
    Solver::default().metric_dimension(g)
}

pub fn upper_dimension(g: &Graph) -> Result<(usize, Vec<usize>)> {
    Solver::default().upper_dimension(g)
}

pub fn resolving_number_bruteforce(g: &Graph) -> Result<usize> {
    Solver::default().resolving_number_bruteforce(g)
}

pub fn is_randomly_k_dimensional(g: &Graph) -> Result<Option<usize>> {
    Solver::default().is_randomly_k_dimensional(g)
}
