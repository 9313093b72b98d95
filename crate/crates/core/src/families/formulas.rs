//! Closed-form `(dim, dim+)` predictions, the inverse construction for a
//! target pair, and the explicit large minimal resolving set.

use serde::Serialize;

use super::{generate, FamilySpec, VertexLabel};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PredictionSource {
    /// A published closed form.
    Formula,
    /// Established by running the exact solvers on small members only.
    OracleBacked,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub dim: usize,
    pub dim_plus: usize,
    pub source: PredictionSource,
}

/// Predicted `(dim, dim+)` for a family member.
///
/// The `Hm`, `TildeH` and `TildeHm` formulas are evaluated as written for
/// every `l >= 2`; at `l = 2` they give `dim+ < dim`, which no graph has, and
/// [`inverse_realization`] never produces those members.
pub fn predicted_parameters(spec: &FamilySpec) -> Result<Prediction> {
    spec.validate()?;
    let formula = |dim, dim_plus| Prediction {
        dim,
        dim_plus,
        source: PredictionSource::Formula,
    };
    let oracle = |dim, dim_plus| Prediction {
        dim,
        dim_plus,
        source: PredictionSource::OracleBacked,
    };
    match *spec {
        FamilySpec::H { l } => Ok(formula(2, 2 * l - 2)),
        FamilySpec::Hm { l, m } => Ok(formula(m + 1, m + 2 * l - 4)),
        FamilySpec::TildeH { l } => Ok(formula(2, 2 * l - 3)),
        FamilySpec::TildeHm { l, m } => Ok(formula(m + 1, (m + 2 * l).saturating_sub(5))),
        FamilySpec::PathExtended { ref base, .. } => predicted_parameters(base),
        FamilySpec::Complete { n } if n >= 2 => Ok(formula(n - 1, n - 1)),
        // two adjacent inner vertices of P_n, n >= 4, form a minimal
        // resolving set
        FamilySpec::Path { n } if (2..=3).contains(&n) => Ok(oracle(1, 1)),
        FamilySpec::Path { n } if n >= 4 => Ok(oracle(1, 2)),
        FamilySpec::Cycle { .. } => Ok(oracle(2, 2)),
        _ => Err(Error::InvalidSpec(format!(
            "no (dim, dim+) prediction for {spec}"
        ))),
    }
}

/// A family member with `dim = a` and `dim+ = b`, for `2 <= a <= b`.
pub fn inverse_realization(a: usize, b: usize) -> Result<FamilySpec> {
    if a < 2 || b < a {
        return Err(Error::OutOfFormulaRange { a, b });
    }
    let spec = match (a == 2, (b - a) % 2 == 1) {
        (true, false) => FamilySpec::H { l: (b + 2) / 2 },
        (true, true) => FamilySpec::TildeH { l: 2 + (b - 1) / 2 },
        (false, true) => FamilySpec::Hm {
            l: 2 + (b - a).div_ceil(2),
            m: a - 1,
        },
        (false, false) => FamilySpec::TildeHm {
            l: 3 + (b - a) / 2,
            m: a - 1,
        },
    };
    debug_assert_eq!(
        predicted_parameters(&spec).map(|p| (p.dim, p.dim_plus)),
        Ok((a, b))
    );
    Ok(spec)
}

/// The explicit minimal resolving set of size `dim+` for `H`-type families:
/// `{(x1, x2) : 1 <= x1 <= l-2, x2 in {x1, x1+1}} ∪ {(0,1)}` together with
/// `alpha` (triangle) or `alpha_1..alpha_{m-1}` (pendants); the tilde
/// variants drop `(l-2, l-1)`. Indices refer to [`generate`]'s labeling.
pub fn canonical_minimal_resolving_set(spec: &FamilySpec) -> Result<Vec<usize>> {
    spec.validate()?;
    let (l, attach, tilde): (usize, Vec<VertexLabel>, bool) = match *spec {
        FamilySpec::H { l } => (l, vec![VertexLabel::Alpha], false),
        FamilySpec::TildeH { l } => (l, vec![VertexLabel::Alpha], true),
        FamilySpec::Hm { l, m } => (l, (1..m).map(VertexLabel::Pendant).collect(), false),
        FamilySpec::TildeHm { l, m } => (l, (1..m).map(VertexLabel::Pendant).collect(), true),
        _ => {
            return Err(Error::InvalidSpec(format!(
                "no canonical minimal resolving set for {spec}"
            )))
        }
    };
    let (_, lab) = generate(spec)?;

    let mut labels = vec![VertexLabel::Grid(0, 1)];
    for x1 in 1..l.saturating_sub(1) {
        labels.push(VertexLabel::Grid(x1, x1));
        labels.push(VertexLabel::Grid(x1, x1 + 1));
    }
    if tilde {
        labels.retain(|&v| v != VertexLabel::Grid(l - 2, l - 1));
    }
    labels.extend(attach);

    let mut set: Vec<usize> = labels
        .into_iter()
        .map(|v| lab.index_of(v).expect("label present in generated graph"))
        .collect();
    set.sort_unstable();
    Ok(set)
}
