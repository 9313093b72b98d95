//! Per-vertex pair signatures and the literal resolving-number search.

use super::VertexPair;
use crate::graph::DistanceMatrix;

/// For each vertex, the bitset (over the `C(n, 2)` pairs in lexicographic
/// order) of pairs it resolves.
#[derive(Clone, Debug)]
pub struct PairSignatures {
    n: usize,
    words: usize,
    sigs: Vec<u64>,
}

impl PairSignatures {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn signature(&self, v: usize) -> &[u64] {
        &self.sigs[v * self.words..(v + 1) * self.words]
    }

    fn full(&self) -> Vec<u64> {
        let pairs = self.n * (self.n - 1) / 2;
        let mut full = vec![u64::MAX; self.words];
        if !pairs.is_multiple_of(64) {
            full[self.words - 1] = (1u64 << (pairs % 64)) - 1;
        }
        full
    }

    /// Whether the union of the signatures of `set` covers every pair.
    pub fn resolves(&self, set: &[usize]) -> bool {
        let mut acc = vec![0u64; self.words];
        for &v in set {
            for (a, s) in acc.iter_mut().zip(self.signature(v)) {
                *a |= s;
            }
        }
        acc == self.full()
    }
}

pub fn pair_signatures(dm: &DistanceMatrix) -> PairSignatures {
    let n = dm.order();
    let pairs = n * n.saturating_sub(1) / 2;
    let words = pairs.div_ceil(64).max(1);
    let mut sigs = vec![0u64; n * words];
    for (idx, p) in VertexPair::all(n).enumerate() {
        for v in 0..n {
            if dm.get(v, p.x()) != dm.get(v, p.y()) {
                sigs[v * words + idx / 64] |= 1 << (idx % 64);
            }
        }
    }
    PairSignatures { n, words, sigs }
}

/// Smallest `k` such that every `k`-subset covers all pairs.
pub(crate) fn resolving_number_by_subsets(sigs: &PairSignatures) -> usize {
    let n = sigs.order();
    let full = sigs.full();
    let words = full.len();
    (1..=n)
        .find(|&k| {
            let mut stack = vec![0u64; (k + 1) * words];
            all_subsets_cover(sigs, &full, &mut stack, 0, 0, k)
        })
        .expect("the full vertex set resolves")
}

/// `stack[depth]` holds the union of signatures chosen so far.
fn all_subsets_cover(
    sigs: &PairSignatures,
    full: &[u64],
    stack: &mut [u64],
    depth: usize,
    start: usize,
    remaining: usize,
) -> bool {
    let words = full.len();
    if remaining == 0 {
        return &stack[depth * words..(depth + 1) * words] == full;
    }
    for v in start..=sigs.order() - remaining {
        let (head, tail) = stack.split_at_mut((depth + 1) * words);
        let cur = &head[depth * words..];
        let next = &mut tail[..words];
        for ((n, c), s) in next.iter_mut().zip(cur).zip(sigs.signature(v)) {
            *n = c | s;
        }
        if !all_subsets_cover(sigs, full, stack, depth + 1, v + 1, remaining - 1) {
            return false;
        }
    }
    true
}
