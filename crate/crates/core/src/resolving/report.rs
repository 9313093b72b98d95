use std::str::FromStr;

use serde::Serialize;

use super::{resolving_number_closed, Solver, VertexPair};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which parameters a report computes. Parsed from `dim,dim+,res`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub dim: bool,
    pub dim_plus: bool,
    pub res: bool,
}

impl Params {
    pub const ALL: Params = Params {
        dim: true,
        dim_plus: true,
        res: true,
    };
}

impl Default for Params {
    fn default() -> Self {
        Params::ALL
    }
}

impl FromStr for Params {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Params, String> {
        let mut p = Params {
            dim: false,
            dim_plus: false,
            res: false,
        };
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match item {
                "dim" => p.dim = true,
                "dim+" | "dim_plus" | "dimplus" => p.dim_plus = true,
                "res" => p.res = true,
                other => {
                    return Err(format!(
                        "unknown parameter {other:?}; expected dim, dim+ or res"
                    ))
                }
            }
        }
        if p == (Params {
            dim: false,
            dim_plus: false,
            res: false,
        }) {
            return Err("no parameters requested".into());
        }
        Ok(p)
    }
}

/// The resolving parameters of one graph with their witnesses. Fields that
/// were not requested are `None` and serialize as `null`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolvingReport {
    pub n: usize,
    pub dim: Option<usize>,
    pub metric_basis: Option<Vec<usize>>,
    pub dim_plus: Option<usize>,
    pub upper_basis: Option<Vec<usize>>,
    pub res: Option<usize>,
    pub res_witness: Option<VertexPair>,
    /// `dim` when `dim = res`; only known when both were computed.
    pub randomly_k: Option<usize>,
}

impl ResolvingReport {
    pub fn compute(g: &Graph, params: Params, solver: &Solver) -> Result<ResolvingReport> {
        let dm = g.distance_matrix();
        let n = g.order();
        if n < 2 {
            return Err(Error::TooSmall { n, min: 2 });
        }
        if !dm.is_connected() {
            return Err(Error::Disconnected);
        }
        let (dim, metric_basis) = if params.dim {
            let (k, b) = solver.metric_dimension_dm(&dm)?;
            (Some(k), Some(b))
        } else {
            (None, None)
        };
        let (dim_plus, upper_basis) = if params.dim_plus {
            let (k, b) = solver.upper_dimension_dm(&dm)?;
            (Some(k), Some(b))
        } else {
            (None, None)
        };
        let (res, res_witness) = if params.res {
            let (r, p) = resolving_number_closed(&dm)?;
            (Some(r), Some(p))
        } else {
            (None, None)
        };
        let randomly_k = match (dim, res) {
            (Some(d), Some(r)) if d == r => Some(d),
            _ => None,
        };
        Ok(ResolvingReport {
            n,
            dim,
            metric_basis,
            dim_plus,
            upper_basis,
            res,
            res_witness,
            randomly_k,
        })
    }

    /// Checks `1 <= dim <= dim+ <= res <= n - 1` over the computed fields.
    pub fn chain_holds(&self) -> bool {
        let values: Vec<usize> = [Some(1), self.dim, self.dim_plus, self.res, Some(self.n - 1)]
            .into_iter()
            .flatten()
            .collect();
        values.windows(2).all(|w| w[0] <= w[1])
    }
}
