//! Exhaustive enumeration of small connected graphs.
//!
//! Labeled graphs on `n` vertices are the `2^C(n,2)` adjacency masks in
//! graph6 bit order. Isomorphism classes are built by vertex augmentation:
//! every connected graph has a vertex whose removal leaves it connected, so
//! extending each class on `n - 1` vertices by a new vertex with every
//! non-empty neighborhood reaches every class on `n`.

mod suites;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use suites::{
    finiteness_bound, random_connected_graph, verify_characterization, verify_diameter_bound,
    verify_family_formulas, verify_finiteness, verify_grid_geometry, verify_order_bound,
    verify_resolving_number_oracle, FamilyRanges, GraphSource, RandomSample, VerificationReport,
    Violation,
};

/// Largest order enumerated internally.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Largest order [`canonical_form`] accepts (the key must fit in 64 bits).
pub const MAX_CANONICAL_ORDER: usize = 11;

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn labeled_mask_count(n: usize) -> u64 {
    1u64 << pair_count(n)
}

fn check_order(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    Ok(())
}

/// Whether the labeled graph with adjacency `mask` is connected, without
/// building it.
pub fn mask_is_connected(n: usize, mask: u64) -> bool {
    let mut adj = [0u16; 16];
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    let all = (1u32 << n) as u16;
    let all = all.wrapping_sub(1);
    let mut seen = 1u16;
    let mut frontier = 1u16;
    while frontier != 0 {
        let mut next = 0u16;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// The labeled graph for `mask` if it is connected.
pub fn connected_from_mask(n: usize, mask: u64) -> Option<Graph> {
    mask_is_connected(n, mask).then(|| Graph::from_pair_mask(n, mask).expect("mask within order"))
}

/// Every connected graph on `n` vertices: each labeled graph once, or with
/// `dedup` one representative per isomorphism class in order of canonical
/// form.
pub fn connected_graphs(n: usize, dedup: bool) -> Result<Box<dyn Iterator<Item = Graph> + Send>> {
    check_order(n, MAX_ENUMERATION_ORDER)?;
    if dedup {
        let reps = connected_isomorphism_classes(n)?;
        return Ok(Box::new(reps.into_iter()));
    }
    Ok(Box::new(
        (0..labeled_mask_count(n)).filter_map(move |mask| connected_from_mask(n, mask)),
    ))
}

/// Canonical forms of the connected graphs on `n` vertices, sorted.
fn connected_class_keys(n: usize) -> Result<Vec<u64>> {
    check_order(n, MAX_ENUMERATION_ORDER)?;
    let mut classes: Vec<u64> = vec![0];
    for order in 2..=n {
        let shift = pair_count(order - 1);
        let mut next = BTreeSet::new();
        for &key in &classes {
            let base = from_key(order - 1, key);
            for nbrs in 1u64..1 << (order - 1) {
                let mask = base | nbrs << shift;
                next.insert(canonical_key(order, mask));
            }
        }
        classes = next.into_iter().collect();
    }
    Ok(classes)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices.
pub fn connected_isomorphism_classes(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_class_keys(n)?
        .into_iter()
        .map(|key| Graph::from_pair_mask(n, from_key(n, key)).expect("valid mask"))
        .collect())
}

/// A canonical labeling key: equal for two graphs of the same order iff they
/// are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    let n = g.order();
    check_order(n, MAX_CANONICAL_ORDER)?;
    let mut mask = 0u64;
    for &(i, j) in g.edges() {
        mask |= 1 << (j * (j - 1) / 2 + i);
    }
    Ok(canonical_key(n, mask))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_form(a)? == canonical_form(b)?)
}

/// Keys store pair `idx` (graph6 order) at bit `E - 1 - idx`, so that pairs
/// among early positions are the most significant.
fn to_key(n: usize, mask: u64) -> u64 {
    let e = pair_count(n);
    (0..e)
        .filter(|&i| mask >> i & 1 == 1)
        .fold(0, |k, i| k | 1 << (e - 1 - i))
}

fn from_key(n: usize, key: u64) -> u64 {
    to_key(n, key)
}

/// Minimum key over all relabelings that respect an isomorphism-invariant
/// vertex coloring (iterated degree refinement).
fn canonical_key(n: usize, mask: u64) -> u64 {
    let mut adj = [0u16; MAX_CANONICAL_ORDER];
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }

    let mut color: Vec<usize> = (0..n).map(|v| adj[v].count_ones() as usize).collect();
    let mut classes = distinct(&color);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| color[w])
                    .collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut ranked = sigs.clone();
        ranked.sort();
        ranked.dedup();
        color = sigs
            .iter()
            .map(|s| ranked.binary_search(s).unwrap())
            .collect();
        let refined = distinct(&color);
        if refined == classes {
            break;
        }
        classes = refined;
    }

    // position -> required color
    let mut slot_colors = color.clone();
    slot_colors.sort_unstable();

    let e = pair_count(n);
    let mut search = KeySearch {
        n,
        e,
        adj: &adj[..n],
        color: &color,
        slot_colors: &slot_colors,
        order: vec![0; n],
        best: u64::MAX,
    };
    search.place(0, 0, 0);
    search.best
}

fn distinct(color: &[usize]) -> usize {
    let mut c = color.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct KeySearch<'a> {
    n: usize,
    e: usize,
    adj: &'a [u16],
    color: &'a [usize],
    slot_colors: &'a [usize],
    order: Vec<usize>,
    best: u64,
}

impl KeySearch<'_> {
    fn place(&mut self, pos: usize, used: u16, key: u64) {
        if pos == self.n {
            self.best = self.best.min(key);
            return;
        }
        for v in 0..self.n {
            if used >> v & 1 == 1 || self.color[v] != self.slot_colors[pos] {
                continue;
            }
            let mut k = key;
            let base = pos * pos.saturating_sub(1) / 2;
            for q in 0..pos {
                if self.adj[self.order[q]] >> v & 1 == 1 {
                    k |= 1 << (self.e - 1 - (base + q));
                }
            }
            // bits for pairs among positions 0..=pos are final
            let fixed = pair_count(pos + 1);
            let low = self.e - fixed;
            if self.best != u64::MAX && fixed > 0 && (k >> low) > (self.best >> low) {
                continue;
            }
            self.order[pos] = v;
            self.place(pos + 1, used | 1 << v, k);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Labeled connected graphs on `n` vertices by the standard recurrence
    /// over the component containing vertex 0.
    fn labeled_connected_by_recurrence(n: usize) -> u64 {
        fn binom(n: u64, k: u64) -> u64 {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        let mut c = vec![0u64; n + 1];
        for m in 1..=n {
            let total = 1u64 << pair_count(m);
            let mut disconnected = 0;
            for k in 1..m {
                disconnected +=
                    binom(m as u64 - 1, k as u64 - 1) * c[k] * (1u64 << pair_count(m - k));
            }
            c[m] = total - disconnected;
        }
        c[n]
    }

    #[test]
    fn small_labeled_counts() {
        assert_eq!(connected_graphs(1, false).unwrap().count(), 1);
        assert_eq!(connected_graphs(2, false).unwrap().count(), 1);
        assert_eq!(connected_graphs(3, false).unwrap().count(), 4);
        assert_eq!(connected_graphs(4, false).unwrap().count(), 38);
        for n in 1..=6 {
            assert_eq!(
                connected_graphs(n, false).unwrap().count() as u64,
                labeled_connected_by_recurrence(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| connected_graphs(n, true).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let c5 = Graph::cycle(5).unwrap();
        let relabeled = Graph::from_edge_list(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic(&c5, &relabeled).unwrap());
        assert!(!is_isomorphic(&c5, &Graph::path(5).unwrap()).unwrap());
        assert!(canonical_form(&Graph::path(12).unwrap()).is_err());
    }

    /// Brute-force canonical key over all n! relabelings.
    fn brute_key(g: &Graph) -> u64 {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = g.order();
        perms(n)
            .into_iter()
            .map(|p| {
                let mut mask = 0u64;
                for &(u, v) in g.edges() {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    mask |= 1 << (b * (b - 1) / 2 + a);
                }
                to_key(n, mask)
            })
            .min()
            .unwrap()
    }

    #[test]
    fn classes_are_pairwise_non_isomorphic() {
        for n in 2..=5 {
            let reps = connected_isomorphism_classes(n).unwrap();
            let mut keys: Vec<u64> = reps.iter().map(brute_key).collect();
            let before = keys.len();
            keys.sort_unstable();
            keys.dedup();
            assert_eq!(keys.len(), before);
            // every labeled connected graph lands in one of the classes
            for g in connected_graphs(n, false).unwrap() {
                assert!(keys.binary_search(&brute_key(&g)).is_ok());
            }
        }
    }

    #[test]
    fn mask_connectivity() {
        assert!(mask_is_connected(1, 0));
        assert!(!mask_is_connected(2, 0));
        assert!(mask_is_connected(3, 0b101));
        assert!(!mask_is_connected(3, 0b001));
    }

    #[test]
    fn order_cap() {
        assert!(matches!(
            connected_graphs(9, false),
            Err(Error::TooLarge { n: 9, cap: 8 })
        ));
    }
}
