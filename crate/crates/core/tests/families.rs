mod common;

use common::{brute_dim, brute_dim_plus, dist};
use proptest::prelude::*;
use resolvedim::families::{
    canonical_minimal_resolving_set, diagonal, diagonal_pair_decomposition,
    diagonal_pair_resolvers_closed, generate, inverse_realization, predicted_parameters,
    FamilySpec, VertexLabel,
};
use resolvedim::{
    is_minimal_resolving_set, metric_dimension, resolver_set, upper_dimension, Solver, VertexPair,
};

fn exact(spec: &FamilySpec) -> (usize, usize) {
    let (g, _) = generate(spec).unwrap();
    (
        metric_dimension(&g).unwrap().0,
        upper_dimension(&g).unwrap().0,
    )
}

fn predicted(spec: &FamilySpec) -> (usize, usize) {
    let p = predicted_parameters(spec).unwrap();
    (p.dim, p.dim_plus)
}

#[test]
fn small_members_against_subset_scans() {
    for spec in [
        FamilySpec::H { l: 2 },
        FamilySpec::H { l: 3 },
        FamilySpec::Hm { l: 3, m: 2 },
        FamilySpec::TildeH { l: 3 },
        FamilySpec::TildeHm { l: 3, m: 2 },
        FamilySpec::PathExtended {
            base: Box::new(FamilySpec::H { l: 3 }),
            p: 1,
        },
    ] {
        let (g, _) = generate(&spec).unwrap();
        let d = dist(&g);
        assert_eq!(exact(&spec), (brute_dim(&d), brute_dim_plus(&d)), "{spec}");
    }
}

#[test]
fn formulas_hold_from_l3() {
    for l in 3..=4 {
        let mut specs = vec![FamilySpec::H { l }, FamilySpec::TildeH { l }];
        for m in 2..=3 {
            specs.push(FamilySpec::Hm { l, m });
            specs.push(FamilySpec::TildeHm { l, m });
        }
        for spec in specs {
            assert_eq!(exact(&spec), predicted(&spec), "{spec}");
        }
    }
    assert_eq!(exact(&FamilySpec::H { l: 2 }), (2, 2));
}

#[test]
fn small_cycles_paths_and_complete_graphs() {
    for n in 3..=9 {
        assert_eq!(
            exact(&FamilySpec::Cycle { n }),
            predicted(&FamilySpec::Cycle { n })
        );
        assert_eq!(
            exact(&FamilySpec::Complete { n }),
            predicted(&FamilySpec::Complete { n })
        );
    }
    for n in 2..=9 {
        assert_eq!(
            exact(&FamilySpec::Path { n }),
            predicted(&FamilySpec::Path { n }),
            "P{n}"
        );
    }
}

#[test]
fn canonical_sets_from_l3() {
    for l in 3..=5 {
        let mut specs = vec![FamilySpec::H { l }, FamilySpec::TildeH { l }];
        for m in 2..=3 {
            specs.push(FamilySpec::Hm { l, m });
            specs.push(FamilySpec::TildeHm { l, m });
        }
        for spec in specs {
            let (g, _) = generate(&spec).unwrap();
            let set = canonical_minimal_resolving_set(&spec).unwrap();
            assert!(
                is_minimal_resolving_set(&g.distance_matrix(), &set),
                "{spec}"
            );
            assert_eq!(set.len(), predicted(&spec).1, "{spec}");
        }
    }
}

#[test]
fn inverse_realization_is_realized() {
    let solver = Solver::default();
    for a in 2..=4 {
        for b in a..=7 {
            let spec = inverse_realization(a, b).unwrap();
            let (g, _) = generate(&spec).unwrap();
            let got = (
                solver.metric_dimension(&g).unwrap().0,
                solver.upper_dimension(&g).unwrap().0,
            );
            assert_eq!(got, (a, b), "{spec}");
        }
    }
}

#[test]
fn attachment_distance_law() {
    for l in 2..=5 {
        let (g, lab) = generate(&FamilySpec::H { l }).unwrap();
        let dm = g.distance_matrix();
        let alpha = lab.index_of(VertexLabel::Alpha).unwrap();
        let beta = lab.index_of(VertexLabel::Beta).unwrap();
        for (v, (x1, x2)) in lab.grid_vertices() {
            assert_eq!(dm.get(alpha, v) as usize, x1 + x2 + 1);
            assert_eq!(dm.get(beta, v) as usize, x1 + x2 + 1);
        }
    }
}

#[test]
fn path_extension_preserves_parameters() {
    for p in 1..=3 {
        let spec = FamilySpec::PathExtended {
            base: Box::new(FamilySpec::H { l: 3 }),
            p,
        };
        assert_eq!(exact(&spec), (2, 4), "{spec}");
        let (g, lab) = generate(&spec).unwrap();
        let dm = g.distance_matrix();
        let alpha = lab.index_of(VertexLabel::Alpha).unwrap();
        for (v, (x1, x2)) in lab.grid_vertices() {
            assert_eq!(dm.get(alpha, v) as usize, x1 + x2 + 1 + p);
        }
    }
}

#[test]
fn tilde_keeps_coordinates() {
    let (g, lab) = generate(&FamilySpec::TildeH { l: 4 }).unwrap();
    assert_eq!(g.order(), 3 * 4 + 2);
    assert!(lab.grid(3, 0).is_none());
    assert_eq!(lab.label(lab.grid(2, 3).unwrap()).to_string(), "g:2,3");
}

fn grid_pairs(l: usize) -> Vec<(FamilySpec, VertexPair)> {
    let spec = FamilySpec::Grid { l };
    let (_, lab) = generate(&spec).unwrap();
    let mut out = Vec::new();
    for i in 0..2 * l - 1 {
        let d = diagonal(&lab, i);
        for a in 0..d.len() {
            for b in a + 1..d.len() {
                out.push((spec.clone(), VertexPair::new(d[a], d[b]).unwrap()));
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn closed_resolvers_match_distances(l in 2usize..=7, pick in any::<prop::sample::Index>()) {
        let pairs = grid_pairs(l);
        let (spec, p) = pairs[pick.index(pairs.len())].clone();
        let (g, lab) = generate(&spec).unwrap();
        let dm = g.distance_matrix();
        let closed = diagonal_pair_resolvers_closed(&lab, p).unwrap();
        prop_assert_eq!(&closed, &resolver_set(&dm, p));
        let parts = diagonal_pair_decomposition(&lab, p).unwrap();
        let mut union: Vec<usize> = parts.iter().flat_map(|&q| resolver_set(&dm, q)).collect();
        union.sort_unstable();
        union.dedup();
        prop_assert_eq!(union, closed);
    }

    #[test]
    fn row_containment(l in 4usize..=7, row in 1usize..7, a in 0usize..7, b in 0usize..7, c in 0usize..7) {
        // three distance-2 diagonal pairs {(x1, x2), (x1 + 1, x2 - 1)} in one row x2
        let (g, lab) = generate(&FamilySpec::Grid { l }).unwrap();
        let dm = g.distance_matrix();
        let row = row % (l - 1) + 1;
        let mut xs = [a % (l - 1), b % (l - 1), c % (l - 1)];
        xs.sort_unstable();
        prop_assume!(xs[0] < xs[1] && xs[1] < xs[2]);
        let r = |x1: usize| {
            let p = VertexPair::new(lab.grid(x1, row).unwrap(), lab.grid(x1 + 1, row - 1).unwrap()).unwrap();
            resolver_set(&dm, p)
        };
        let (left, mid, right) = (r(xs[0]), r(xs[1]), r(xs[2]));
        prop_assert!(mid.iter().all(|v| left.contains(v) || right.contains(v)));
    }
}

#[test]
fn sidecar_labels() {
    let (_, lab) = generate(&FamilySpec::Hm { l: 2, m: 2 }).unwrap();
    let side = lab.sidecar();
    assert_eq!(side["0"], "g:0,0");
    assert_eq!(side["4"], "a1");
    assert_eq!(side["5"], "a2");
}
