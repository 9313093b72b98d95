//! Grid-based graph families and their labelings.
//!
//! All grid families place the vertex `(x1, x2)` at index `x1 * height + x2`,
//! followed by the attachment vertices and then any path vertices.

mod formulas;
mod geometry;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use formulas::{
    canonical_minimal_resolving_set, inverse_realization, predicted_parameters, Prediction,
    PredictionSource,
};
pub use geometry::{
    diagonal, diagonal_pair_decomposition, diagonal_pair_resolvers_closed, quadrant, Quadrant,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// The `l x l` grid `G_l`.
    Grid {
        l: usize,
    },
    /// `G_l` with a triangle `alpha, beta` attached at `(0,0)`.
    H {
        l: usize,
    },
    /// `G_l` with `m >= 2` pendant vertices attached at `(0,0)`.
    Hm {
        l: usize,
        m: usize,
    },
    /// `H_l` without the column `x1 = l - 1`.
    TildeH {
        l: usize,
    },
    /// `H_{l,m}` without the column `x1 = l - 1`.
    TildeHm {
        l: usize,
        m: usize,
    },
    /// `base` with `p` path vertices spliced between `(0,0)` and the
    /// attachments.
    PathExtended {
        base: Box<FamilySpec>,
        p: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    Complete {
        n: usize,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidSpec(msg));
        match *self {
            FamilySpec::Grid { l } | FamilySpec::H { l } | FamilySpec::TildeH { l } if l < 2 => {
                fail(format!("{self}: grid side must be at least 2"))
            }
            FamilySpec::Hm { l, m } | FamilySpec::TildeHm { l, m } if l < 2 || m < 2 => {
                fail(format!("{self}: needs l >= 2 and m >= 2"))
            }
            FamilySpec::PathExtended { ref base, p } => {
                if p < 1 {
                    return fail(format!("{self}: path length must be at least 1"));
                }
                match **base {
                    FamilySpec::H { .. }
                    | FamilySpec::Hm { .. }
                    | FamilySpec::TildeH { .. }
                    | FamilySpec::TildeHm { .. } => base.validate(),
                    _ => fail(format!("{self}: base must be H, Hm, tildeH or tildeHm")),
                }
            }
            FamilySpec::Cycle { n } if n < 3 => fail(format!("{self}: needs n >= 3")),
            FamilySpec::Path { n } | FamilySpec::Complete { n } if n < 1 => {
                fail(format!("{self}: needs n >= 1"))
            }
            _ => Ok(()),
        }
    }

    /// Grid extent `(width, height)`: the number of `x1` and `x2` values.
    fn grid_extent(&self) -> Option<(usize, usize)> {
        match *self {
            FamilySpec::Grid { l } | FamilySpec::H { l } | FamilySpec::Hm { l, .. } => Some((l, l)),
            FamilySpec::TildeH { l } | FamilySpec::TildeHm { l, .. } => Some((l - 1, l)),
            FamilySpec::PathExtended { ref base, .. } => base.grid_extent(),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Grid { .. } => "grid",
            FamilySpec::H { .. } => "H",
            FamilySpec::Hm { .. } => "Hm",
            FamilySpec::TildeH { .. } => "tildeH",
            FamilySpec::TildeHm { .. } => "tildeHm",
            FamilySpec::PathExtended { .. } => "pathext",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Complete { .. } => "complete",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Grid { l } => write!(f, "Grid({l})"),
            FamilySpec::H { l } => write!(f, "H({l})"),
            FamilySpec::Hm { l, m } => write!(f, "Hm({l},{m})"),
            FamilySpec::TildeH { l } => write!(f, "TildeH({l})"),
            FamilySpec::TildeHm { l, m } => write!(f, "TildeHm({l},{m})"),
            FamilySpec::PathExtended { base, p } => write!(f, "PathExtended({base},{p})"),
            FamilySpec::Cycle { n } => write!(f, "Cycle({n})"),
            FamilySpec::Path { n } => write!(f, "Path({n})"),
            FamilySpec::Complete { n } => write!(f, "Complete({n})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    Grid(usize, usize),
    Alpha,
    Beta,
    /// Pendant `alpha_i`, numbered from 1.
    Pendant(usize),
    /// Path vertex `i` of a path extension, numbered from `(0,0)` outward.
    PathVertex(usize),
    /// Vertex of a cycle, path or complete graph.
    Plain(usize),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Grid(x1, x2) => write!(f, "g:{x1},{x2}"),
            VertexLabel::Alpha => f.write_str("alpha"),
            VertexLabel::Beta => f.write_str("beta"),
            VertexLabel::Pendant(i) => write!(f, "a{i}"),
            VertexLabel::PathVertex(i) => write!(f, "pv{i}"),
            VertexLabel::Plain(i) => write!(f, "v{i}"),
        }
    }
}

/// Bijection between vertex indices and labels of a generated graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridLabeling {
    labels: Vec<VertexLabel>,
    index: HashMap<VertexLabel, usize>,
    width: usize,
    height: usize,
}

impl GridLabeling {
    fn new(labels: Vec<VertexLabel>, width: usize, height: usize) -> GridLabeling {
        let index = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        GridLabeling {
            labels,
            index,
            width,
            height,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> VertexLabel {
        self.labels[v]
    }

    pub fn index_of(&self, label: VertexLabel) -> Option<usize> {
        self.index.get(&label).copied()
    }

    pub fn grid(&self, x1: usize, x2: usize) -> Option<usize> {
        self.index_of(VertexLabel::Grid(x1, x2))
    }

    pub fn coord(&self, v: usize) -> Option<(usize, usize)> {
        match self.labels.get(v)? {
            VertexLabel::Grid(x1, x2) => Some((*x1, *x2)),
            _ => None,
        }
    }

    /// Number of distinct `x1` values.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of distinct `x2` values.
    pub fn height(&self) -> usize {
        self.height
    }

    /// Grid vertices with their coordinates, in index order.
    pub fn grid_vertices(&self) -> impl Iterator<Item = (usize, (usize, usize))> + '_ {
        (0..self.len()).filter_map(|v| self.coord(v).map(|c| (v, c)))
    }

    /// Index-to-label map as written to the JSON sidecar.
    pub fn sidecar(&self) -> BTreeMap<String, String> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (i.to_string(), l.to_string()))
            .collect()
    }
}

/// Builds the graph of `spec` with its vertex labeling.
pub fn generate(spec: &FamilySpec) -> Result<(Graph, GridLabeling)> {
    spec.validate()?;
    let mut labels = Vec::new();
    let mut edges = Vec::new();

    let (base, p) = match spec {
        FamilySpec::PathExtended { base, p } => (&**base, *p),
        other => (other, 0),
    };

    match *base {
        FamilySpec::Cycle { n } => {
            let g = Graph::cycle(n)?;
            return Ok((
                g,
                GridLabeling::new((0..n).map(VertexLabel::Plain).collect(), 0, 0),
            ));
        }
        FamilySpec::Path { n } => {
            let g = Graph::path(n)?;
            return Ok((
                g,
                GridLabeling::new((0..n).map(VertexLabel::Plain).collect(), 0, 0),
            ));
        }
        FamilySpec::Complete { n } => {
            let g = Graph::complete(n)?;
            return Ok((
                g,
                GridLabeling::new((0..n).map(VertexLabel::Plain).collect(), 0, 0),
            ));
        }
        _ => {}
    }

    let (w, h) = base.grid_extent().expect("grid family");
    for x1 in 0..w {
        for x2 in 0..h {
            labels.push(VertexLabel::Grid(x1, x2));
            let v = x1 * h + x2;
            if x2 + 1 < h {
                edges.push((v, v + 1));
            }
            if x1 + 1 < w {
                edges.push((v, v + h));
            }
        }
    }

    let attachments: Vec<VertexLabel> = match *base {
        FamilySpec::H { .. } | FamilySpec::TildeH { .. } => {
            vec![VertexLabel::Alpha, VertexLabel::Beta]
        }
        FamilySpec::Hm { m, .. } | FamilySpec::TildeHm { m, .. } => {
            (1..=m).map(VertexLabel::Pendant).collect()
        }
        _ => Vec::new(),
    };
    let first_attachment = labels.len();
    labels.extend(attachments.iter().copied());
    let first_path = labels.len();
    labels.extend((1..=p).map(VertexLabel::PathVertex));

    // origin -- pv1 -- ... -- pvp -- attachments
    let mut anchor = 0;
    for i in 0..p {
        edges.push((anchor, first_path + i));
        anchor = first_path + i;
    }
    let attached = first_attachment..first_path;
    for v in attached.clone() {
        edges.push((anchor, v));
    }
    if matches!(base, FamilySpec::H { .. } | FamilySpec::TildeH { .. }) {
        edges.push((attached.start, attached.start + 1));
    }

    let g = Graph::from_edge_list(labels.len(), edges)?;
    Ok((g, GridLabeling::new(labels, w, h)))
}
