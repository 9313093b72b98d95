//! Quadrants, diagonals and closed-form resolver sets of diagonal pairs.
//!
//! Only grid-labeled vertices take part; attachments and path vertices are
//! never members of a quadrant or diagonal. Within the grid of an `H`-type
//! family they also never resolve a diagonal pair, since their distance to
//! `(x1, x2)` is `x1 + x2` plus a constant.

use super::GridLabeling;
use crate::error::{Error, Result};
use crate::resolving::VertexPair;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quadrant {
    /// `y1 >= x1, y2 >= x2`
    Q1,
    /// `y1 <= x1, y2 >= x2`
    Q2,
    /// `y1 <= x1, y2 <= x2`
    Q3,
    /// `y1 >= x1, y2 <= x2`
    Q4,
}

impl Quadrant {
    pub fn from_index(i: usize) -> Option<Quadrant> {
        match i {
            1 => Some(Quadrant::Q1),
            2 => Some(Quadrant::Q2),
            3 => Some(Quadrant::Q3),
            4 => Some(Quadrant::Q4),
            _ => None,
        }
    }

    fn contains(self, (x1, x2): (usize, usize), (y1, y2): (usize, usize)) -> bool {
        match self {
            Quadrant::Q1 => y1 >= x1 && y2 >= x2,
            Quadrant::Q2 => y1 <= x1 && y2 >= x2,
            Quadrant::Q3 => y1 <= x1 && y2 <= x2,
            Quadrant::Q4 => y1 >= x1 && y2 <= x2,
        }
    }
}

fn coord_of(lab: &GridLabeling, v: usize) -> Result<(usize, usize)> {
    lab.coord(v).ok_or(Error::NotGridVertex(v))
}

fn quadrant_at(
    lab: &GridLabeling,
    at: (usize, usize),
    q: Quadrant,
) -> impl Iterator<Item = usize> + '_ {
    lab.grid_vertices()
        .filter(move |&(_, c)| q.contains(at, c))
        .map(|(v, _)| v)
}

/// Grid vertices of quadrant `q` anchored at `x`, in index order.
pub fn quadrant(lab: &GridLabeling, x: usize, q: Quadrant) -> Result<Vec<usize>> {
    let at = coord_of(lab, x)?;
    Ok(quadrant_at(lab, at, q).collect())
}

/// Grid vertices with `x1 + x2 = i`, ordered by `x1`. Empty past the last
/// diagonal.
pub fn diagonal(lab: &GridLabeling, i: usize) -> Vec<usize> {
    let mut d: Vec<(usize, usize)> = lab
        .grid_vertices()
        .filter(|&(_, (x1, x2))| x1 + x2 == i)
        .map(|(v, (x1, _))| (x1, v))
        .collect();
    d.sort_unstable();
    d.into_iter().map(|(_, v)| v).collect()
}

/// Orders a diagonal pair as `(x, y)` with `x1 < y1`.
fn ordered_diagonal(lab: &GridLabeling, p: VertexPair) -> Result<((usize, usize), (usize, usize))> {
    let a = coord_of(lab, p.x())?;
    let b = coord_of(lab, p.y())?;
    if a.0 + a.1 != b.0 + b.1 {
        return Err(Error::NotDiagonalPair(p.x(), p.y()));
    }
    Ok(if a.0 < b.0 { (a, b) } else { (b, a) })
}

/// `R(x, y)` of a diagonal pair over the grid vertices, from the quadrant
/// description alone.
///
/// At distance 2 this is `Q2(x) ∪ Q4(y)`. Further apart it is the grid minus
/// `Q3(z) ∪ Q1(z')` and the interior points `(x1 + j, y2 + j)`, where
/// `z = (x1, y2)` and `z' = (y1, x2)`.
pub fn diagonal_pair_resolvers_closed(lab: &GridLabeling, p: VertexPair) -> Result<Vec<usize>> {
    let (x, y) = ordered_diagonal(lab, p)?;
    let span = y.0 - x.0;
    let mut out: Vec<usize> = if span == 1 {
        lab.grid_vertices()
            .filter(|&(_, c)| Quadrant::Q2.contains(x, c) || Quadrant::Q4.contains(y, c))
            .map(|(v, _)| v)
            .collect()
    } else {
        let z = (x.0, y.1);
        let z_far = (y.0, x.1);
        lab.grid_vertices()
            .filter(|&(_, c)| {
                let on_segment = c.0 > x.0 && c.0 < y.0 && c.1 + x.0 == c.0 + y.1;
                !(Quadrant::Q3.contains(z, c) || Quadrant::Q1.contains(z_far, c) || on_segment)
            })
            .map(|(v, _)| v)
            .collect()
    };
    out.sort_unstable();
    Ok(out)
}

/// The `y1 - x1` distance-2 diagonal pairs `r^j = (x1 + j, y2 + j + 1)`,
/// `s^j = (x1 + j + 1, y2 + j)` whose resolver sets union to `R(x, y)`.
pub fn diagonal_pair_decomposition(lab: &GridLabeling, p: VertexPair) -> Result<Vec<VertexPair>> {
    let (x, y) = ordered_diagonal(lab, p)?;
    (0..y.0 - x.0)
        .map(|j| {
            let r = lab
                .grid(x.0 + j, y.1 + j + 1)
                .ok_or(Error::NotDiagonalPair(p.x(), p.y()))?;
            let s = lab
                .grid(x.0 + j + 1, y.1 + j)
                .ok_or(Error::NotDiagonalPair(p.x(), p.y()))?;
            Ok(VertexPair::new(r, s).expect("distinct grid points"))
        })
        .collect()
}
