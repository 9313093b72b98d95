//! Verification suites over enumerated graphs, external corpora and the
//! grid families.
//!
//! Each suite streams graphs, tallies per shard and merges the tallies;
//! violations are sorted before the report is returned, so the result does
//! not depend on how the work was split.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{connected_from_mask, labeled_mask_count, MAX_ENUMERATION_ORDER};
use crate::error::{Error, Result};
use crate::families::{
    canonical_minimal_resolving_set, diagonal, diagonal_pair_decomposition,
    diagonal_pair_resolvers_closed, generate, inverse_realization, predicted_parameters,
    FamilySpec, GridLabeling,
};
use crate::graph::{to_graph6, DistanceMatrix, Graph};
use crate::resolving::{
    is_minimal_resolving_set, resolver_set, resolving_number_closed, shell_identity, Solver,
    VertexPair,
};

const SHARD_BITS: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    /// graph6 certificate of the offending graph.
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub range: String,
    pub examined: u64,
    pub skipped: u64,
    pub passed: bool,
    pub violations: Vec<Violation>,
    pub counts: BTreeMap<String, u64>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }
}

/// Where a suite takes its graphs from.
#[derive(Clone, Debug)]
pub enum GraphSource {
    /// Every labeled connected graph with `2 <= n <= n_max`.
    Enumerate { n_max: usize },
    /// Externally supplied graphs; disconnected ones and `K_1` are skipped.
    Corpus(Vec<Graph>),
}

impl GraphSource {
    fn describe(&self) -> String {
        match self {
            GraphSource::Enumerate { n_max } => {
                format!("labeled connected graphs, 2 <= n <= {n_max}")
            }
            GraphSource::Corpus(gs) => format!("corpus of {} graphs", gs.len()),
        }
    }
}

#[derive(Default)]
struct Tally {
    examined: u64,
    skipped: u64,
    violations: Vec<Violation>,
    counts: BTreeMap<String, u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.examined += other.examined;
        self.skipped += other.skipped;
        self.violations.extend(other.violations);
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self
    }

    fn violation(&mut self, g: &Graph, detail: impl Into<String>) {
        self.violations.push(Violation {
            graph6: to_graph6(g).unwrap_or_else(|_| format!("<order {}>", g.order())),
            detail: detail.into(),
        });
    }

    fn skip(&mut self, reason: &str) {
        self.skipped += 1;
        self.count(&format!("skipped: {reason}"));
    }

    fn count(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_default() += 1;
    }

    fn into_report(
        mut self,
        suite: &str,
        range: String,
        notes: Vec<String>,
        start: Instant,
    ) -> VerificationReport {
        self.violations.sort();
        VerificationReport {
            suite: suite.to_string(),
            range,
            examined: self.examined,
            skipped: self.skipped,
            passed: self.violations.is_empty(),
            violations: self.violations,
            counts: self.counts,
            notes,
            elapsed: start.elapsed(),
        }
    }
}

/// Applies `check` to every connected graph of `source` with `n >= 2`.
fn stream<F>(source: &GraphSource, check: F) -> Result<Tally>
where
    F: Fn(&Graph, &DistanceMatrix, &mut Tally) + Sync,
{
    match source {
        GraphSource::Enumerate { n_max } => {
            if *n_max > MAX_ENUMERATION_ORDER {
                return Err(Error::TooLarge {
                    n: *n_max,
                    cap: MAX_ENUMERATION_ORDER,
                });
            }
            let mut total = Tally::default();
            for n in 2..=*n_max {
                let masks = labeled_mask_count(n);
                let shard = 1u64 << SHARD_BITS;
                let shards = masks.div_ceil(shard);
                let tally = (0..shards)
                    .into_par_iter()
                    .map(|s| {
                        let mut t = Tally::default();
                        for mask in s * shard..((s + 1) * shard).min(masks) {
                            if let Some(g) = connected_from_mask(n, mask) {
                                t.examined += 1;
                                check(&g, &g.distance_matrix(), &mut t);
                            }
                        }
                        t
                    })
                    .reduce(Tally::default, Tally::merge);
                total = total.merge(tally);
            }
            Ok(total)
        }
        GraphSource::Corpus(graphs) => Ok(graphs
            .par_iter()
            .map(|g| {
                let mut t = Tally::default();
                t.examined += 1;
                let dm = g.distance_matrix();
                if g.order() < 2 {
                    t.skip("order < 2");
                } else if !dm.is_connected() {
                    t.skip("disconnected");
                } else {
                    check(g, &dm, &mut t);
                }
                t
            })
            .reduce(Tally::default, Tally::merge)),
    }
}

/// Per-graph searches run sequentially; the suites parallelize over graphs.
fn graph_solver(solver: &Solver) -> Solver {
    Solver {
        parallel: false,
        ..solver.clone()
    }
}

/// `d^k + k`, saturating.
fn power_bound(d: u32, k: usize) -> u128 {
    (d as u128)
        .checked_pow(k as u32)
        .and_then(|p| p.checked_add(k as u128))
        .unwrap_or(u128::MAX)
}

/// `(3a - 5)^a + a`, the largest order a graph with resolving number
/// `a >= 4` can have.
pub fn finiteness_bound(a: usize) -> Option<u128> {
    (a >= 2).then(|| power_bound((3 * a - 5) as u32, a))
}

fn is_even_cycle(g: &Graph) -> bool {
    g.is_cycle() && g.order().is_multiple_of(2)
}

/// Randomly `k`-dimensional graphs are exactly the complete graphs and the
/// odd cycles. Hits with `k = 3` are additionally checked for
/// 3-regularity, `n in {4, 7, 10}` and the shell identity at every vertex.
pub fn verify_characterization(
    source: &GraphSource,
    solver: &Solver,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let solver = graph_solver(solver);
    let tally = stream(source, |g, dm, t| {
        let n = g.order();
        let rk = match solver.randomly_k_dm(dm) {
            Ok(rk) => rk,
            Err(e) => return t.skip(&e.to_string()),
        };
        let expected = g.is_complete() || (g.is_cycle() && n % 2 == 1);
        if let Some(k) = rk {
            t.count(&format!("randomly {k}-dimensional"));
        }
        if rk.is_some() != expected {
            t.violation(
                g,
                format!("randomly k-dimensional = {rk:?}, complete or odd cycle = {expected}"),
            );
        }
        if rk == Some(3) {
            check_randomly_three(g, dm, t);
        }
    })?;
    let notes = vec!["hits must be K_n (k = n - 1) or odd cycles (k = 2)".to_string()];
    Ok(tally.into_report("characterization", source.describe(), notes, start))
}

fn check_randomly_three(g: &Graph, dm: &DistanceMatrix, t: &mut Tally) {
    let n = g.order();
    if g.regular_degree() != Some(3) || ![4, 7, 10].contains(&n) {
        t.violation(
            g,
            format!("dim = res = 3 but degree sequence / order {n} is not 3-regular on 4, 7 or 10"),
        );
    }
    for u in 0..n {
        match shell_identity(dm, u) {
            Ok((true, _)) => {}
            Ok((false, sum)) => t.violation(
                g,
                format!("shell identity fails at {u}: {sum} != {}", n - 1),
            ),
            Err(e) => t.violation(g, e.to_string()),
        }
    }
}

/// `d(G) <= 3 res(G) - 5` for connected graphs with `res >= 3` that are
/// not even cycles.
pub fn verify_diameter_bound(source: &GraphSource) -> Result<VerificationReport> {
    let start = Instant::now();
    let tally = stream(source, |g, dm, t| {
        let (res, _) = resolving_number_closed(dm).expect("connected");
        let d = dm.diameter().expect("connected") as usize;
        let exceeds = d + 5 > 3 * res;
        if is_even_cycle(g) {
            t.skip("even cycle");
            if exceeds {
                t.count("even cycles exceeding the bound");
            }
        } else if res <= 2 {
            t.skip("res <= 2");
        } else if exceeds {
            t.violation(g, format!("diameter {d} > 3 * {res} - 5"));
        }
    })?;
    let notes = vec![
        "even cycles and graphs with res <= 2 are outside the hypothesis".to_string(),
        "even cycles C_2k with k >= 5 exceed the bound (res = 3, d = k)".to_string(),
    ];
    Ok(tally.into_report("diameter-bound", source.describe(), notes, start))
}

/// `n <= d^dim + dim` and `n <= d^res + res`.
pub fn verify_order_bound(source: &GraphSource, solver: &Solver) -> Result<VerificationReport> {
    let start = Instant::now();
    let solver = graph_solver(solver);
    let tally = stream(source, |g, dm, t| {
        let n = g.order() as u128;
        let d = dm.diameter().expect("connected");
        let (res, _) = resolving_number_closed(dm).expect("connected");
        let dim = match solver.metric_dimension_dm(dm) {
            Ok((k, _)) => k,
            Err(e) => return t.skip(&e.to_string()),
        };
        if n > power_bound(d, dim) {
            t.violation(g, format!("n = {n} > {d}^{dim} + {dim}"));
        }
        if n > power_bound(d, res) {
            t.violation(g, format!("n = {n} > {d}^{res} + {res}"));
        }
        if n == power_bound(d, dim) {
            t.count("tight order bound");
        }
    })?;
    Ok(tally.into_report("order-bound", source.describe(), Vec::new(), start))
}

/// Seeded sample of random connected graphs.
#[derive(Clone, Debug)]
pub struct RandomSample {
    pub count: usize,
    pub orders: RangeInclusive<usize>,
    pub seed: u64,
}

impl Default for RandomSample {
    fn default() -> Self {
        RandomSample {
            count: 200,
            orders: 8..=10,
            seed: 0,
        }
    }
}

/// A random connected graph: a random labeled spanning tree plus every
/// other pair independently with probability `extra`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, extra: f64) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        edges.push((perm[i], perm[rng.random_range(0..i)]));
    }
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(extra) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, edges).expect("indices in range")
}

/// The closed form for `res(G)` against the literal all-subsets search.
pub fn verify_resolving_number_oracle(
    source: &GraphSource,
    sample: Option<&RandomSample>,
    solver: &Solver,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let check = |g: &Graph, dm: &DistanceMatrix, t: &mut Tally| {
        let (closed, _) = resolving_number_closed(dm).expect("connected");
        match solver.resolving_number_bruteforce(g) {
            Ok(brute) if brute == closed => {}
            Ok(brute) => t.violation(g, format!("closed form {closed} != literal search {brute}")),
            Err(e) => t.skip(&e.to_string()),
        }
    };
    let mut tally = stream(source, check)?;
    let mut range = source.describe();
    if let Some(sample) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(sample.seed);
        let graphs: Vec<Graph> = (0..sample.count)
            .map(|_| {
                let n = rng.random_range(sample.orders.clone());
                let extra = rng.random_range(0.05..0.6);
                random_connected_graph(&mut rng, n, extra)
            })
            .collect();
        let sampled = stream(&GraphSource::Corpus(graphs), check)?;
        range = format!(
            "{range}; {} random connected graphs, n in {}..={}, seed {}",
            sample.count,
            sample.orders.start(),
            sample.orders.end(),
            sample.seed
        );
        tally = tally.merge(sampled);
    }
    Ok(tally.into_report("oracle", range, Vec::new(), start))
}

/// The implication chain behind the finiteness of `{G : res(G) = a}`:
/// `n <= d^res + res <= (3 res - 5)^res + res` on every eligible graph,
/// plus the numeric bound for `a in 4..=6`.
pub fn verify_finiteness(source: &GraphSource) -> Result<VerificationReport> {
    let start = Instant::now();
    let tally = stream(source, |g, dm, t| {
        let (res, _) = resolving_number_closed(dm).expect("connected");
        if res < 4 {
            return t.skip("res < 4");
        }
        if is_even_cycle(g) {
            return t.skip("even cycle");
        }
        t.count(&format!("res = {res}"));
        let d = dm.diameter().expect("connected");
        let n = g.order() as u128;
        let bound = finiteness_bound(res).expect("res >= 4");
        if d as usize + 5 > 3 * res || n > power_bound(d, res) || power_bound(d, res) > bound {
            t.violation(
                g,
                format!("chain broken: n = {n}, d = {d}, res = {res}, bound = {bound}"),
            );
        }
    })?;
    let notes = (4..=6)
        .map(|a| {
            format!(
                "res = {a}: n <= (3*{a} - 5)^{a} + {a} = {}",
                finiteness_bound(a).expect("a >= 2")
            )
        })
        .collect();
    Ok(tally.into_report("finiteness", source.describe(), notes, start))
}

#[derive(Clone, Debug)]
pub struct FamilyRanges {
    pub l: RangeInclusive<usize>,
    pub m: RangeInclusive<usize>,
    /// Path-extension lengths, applied to `H(l)`.
    pub p: RangeInclusive<usize>,
}

impl Default for FamilyRanges {
    fn default() -> Self {
        FamilyRanges {
            l: 2..=4,
            m: 2..=3,
            p: 1..=3,
        }
    }
}

impl FamilyRanges {
    pub fn specs(&self) -> Vec<FamilySpec> {
        let mut specs = Vec::new();
        for l in self.l.clone() {
            specs.push(FamilySpec::H { l });
            specs.extend(self.m.clone().map(|m| FamilySpec::Hm { l, m }));
            specs.push(FamilySpec::TildeH { l });
            specs.extend(self.m.clone().map(|m| FamilySpec::TildeHm { l, m }));
            specs.extend(self.p.clone().map(|p| FamilySpec::PathExtended {
                base: Box::new(FamilySpec::H { l }),
                p,
            }));
        }
        specs
    }
}

fn exact_pair(spec: &FamilySpec, solver: &Solver) -> Result<(Graph, usize, usize)> {
    let (g, _) = generate(spec)?;
    let (dim, _) = solver.metric_dimension(&g)?;
    let (dim_plus, _) = solver.upper_dimension(&g)?;
    Ok((g, dim, dim_plus))
}

/// Exact `(dim, dim+)` of each family member against its prediction, the
/// explicit minimal resolving set, and the inverse construction for every
/// predicted pair.
pub fn verify_family_formulas(
    ranges: &FamilyRanges,
    solver: &Solver,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut t = Tally::default();
    for spec in ranges.specs() {
        t.examined += 1;
        let (g, dim, dim_plus) = exact_pair(&spec, solver)?;
        let predicted = predicted_parameters(&spec)?;
        if (dim, dim_plus) != (predicted.dim, predicted.dim_plus) {
            t.violation(
                &g,
                format!(
                    "{spec}: exact (dim, dim+) = ({dim}, {dim_plus}), predicted ({}, {})",
                    predicted.dim, predicted.dim_plus
                ),
            );
        }

        if !matches!(spec, FamilySpec::PathExtended { .. }) {
            let set = canonical_minimal_resolving_set(&spec)?;
            let minimal = is_minimal_resolving_set(&g.distance_matrix(), &set);
            if !minimal || set.len() != predicted.dim_plus {
                t.violation(
                    &g,
                    format!(
                        "{spec}: explicit set {set:?} has size {} (predicted {}), minimal resolving = {minimal}",
                        set.len(),
                        predicted.dim_plus
                    ),
                );
            }
        }

        let (a, b) = (predicted.dim, predicted.dim_plus);
        if a >= 2 && b >= a {
            let inverse = inverse_realization(a, b)?;
            let (ig, idim, idim_plus) = exact_pair(&inverse, solver)?;
            t.count("inverse constructions checked");
            if (idim, idim_plus) != (a, b) {
                t.violation(
                    &ig,
                    format!("inverse of ({a}, {b}) is {inverse} with exact ({idim}, {idim_plus})"),
                );
            }
        }
    }
    let range = format!(
        "l in {}..={}, m in {}..={}, p in {}..={}",
        ranges.l.start(),
        ranges.l.end(),
        ranges.m.start(),
        ranges.m.end(),
        ranges.p.start(),
        ranges.p.end()
    );
    Ok(t.into_report("families", range, Vec::new(), start))
}

/// Closed-form resolver sets of diagonal pairs against the distance
/// matrix, on `G_l`, `H_l` and the truncated grid of `tilde H_l`.
pub fn verify_grid_geometry(l_max: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut t = Tally::default();
    for l in 2..=l_max {
        for spec in [
            FamilySpec::Grid { l },
            FamilySpec::H { l },
            FamilySpec::TildeH { l },
        ] {
            let (g, lab) = generate(&spec)?;
            t.examined += 1;
            check_diagonal_pairs(&spec, &g, &lab, &mut t);
            check_row_containment(&spec, &g, &lab, &mut t);
        }
    }
    Ok(t.into_report("grid", format!("l in 2..={l_max}"), Vec::new(), start))
}

fn diagonal_pairs(lab: &GridLabeling) -> Vec<VertexPair> {
    let mut out = Vec::new();
    for i in 0..lab.width() + lab.height() {
        let d = diagonal(lab, i);
        for (a, &u) in d.iter().enumerate() {
            for &v in &d[a + 1..] {
                out.push(VertexPair::new(u, v).expect("distinct"));
            }
        }
    }
    out
}

fn check_diagonal_pairs(spec: &FamilySpec, g: &Graph, lab: &GridLabeling, t: &mut Tally) {
    let dm = g.distance_matrix();
    for p in diagonal_pairs(lab) {
        t.count("diagonal pairs");
        let closed = diagonal_pair_resolvers_closed(lab, p).expect("diagonal pair");
        let brute = resolver_set(&dm, p);
        if closed != brute {
            t.violation(
                g,
                format!("{spec}, pair {p}: closed {closed:?} != distance matrix {brute:?}"),
            );
        }
        let parts = diagonal_pair_decomposition(lab, p).expect("diagonal pair");
        let (x, y) = (lab.coord(p.x()).unwrap(), lab.coord(p.y()).unwrap());
        let span = x.0.abs_diff(y.0);
        let mut union: Vec<usize> = parts.iter().flat_map(|&q| resolver_set(&dm, q)).collect();
        union.sort_unstable();
        union.dedup();
        let all_at_two = parts.iter().all(|q| dm.get(q.x(), q.y()) == 2);
        if parts.len() != span || !all_at_two || union != brute {
            t.violation(
                g,
                format!(
                    "{spec}, pair {p}: {} distance-2 parts (expected {span}), union matches = {}",
                    parts.len(),
                    union == brute
                ),
            );
        }
    }
}

/// A distance-2 diagonal pair keyed by the coordinates of its end with the
/// smaller `x1`.
type ShortPair = ((usize, usize), VertexPair);

/// For distance-2 diagonal pairs in one row (or column) with the middle
/// pair between the outer two, `R(middle) ⊆ R(left) ∪ R(right)`.
fn check_row_containment(spec: &FamilySpec, g: &Graph, lab: &GridLabeling, t: &mut Tally) {
    let dm = g.distance_matrix();
    // (x, y) with y = x + (1, -1)
    let short: Vec<ShortPair> = lab
        .grid_vertices()
        .filter_map(|(v, (x1, x2))| {
            let w = lab.grid(x1 + 1, x2.checked_sub(1)?)?;
            Some(((x1, x2), VertexPair::new(v, w).expect("distinct")))
        })
        .collect();
    let resolvers = |p: VertexPair| -> Vec<usize> { resolver_set(&dm, p) };
    for by_row in [true, false] {
        let mut groups: BTreeMap<usize, Vec<ShortPair>> = BTreeMap::new();
        for &(c, p) in &short {
            groups
                .entry(if by_row { c.1 } else { c.0 })
                .or_default()
                .push((c, p));
        }
        for line in groups.values() {
            for (i, &(_, left)) in line.iter().enumerate() {
                for (j, &(_, mid)) in line.iter().enumerate().skip(i + 1) {
                    for &(_, right) in &line[j + 1..] {
                        t.count(if by_row {
                            "row triples"
                        } else {
                            "column triples"
                        });
                        let outer: Vec<usize> = resolvers(left)
                            .into_iter()
                            .chain(resolvers(right))
                            .collect();
                        if resolvers(mid).iter().any(|v| !outer.contains(v)) {
                            t.violation(g, format!("{spec}: R{mid} not inside R{left} ∪ R{right}"));
                        }
                    }
                }
            }
        }
    }
}
