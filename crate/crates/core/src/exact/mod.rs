//! Exact scalar types, labeled point configurations, and the geometric
//! predicates everything else is built on.
//!
//! The two predicates are `orientation` (sign of the (d+1)x(d+1)
//! determinant of points with an appended unit coordinate) and `in_sphere`
//! (side of a query point relative to the circumsphere of d+1 affinely
//! independent points, normalized by the spanning orientation so the answer
//! does not depend on the order of the spanning set). Both are exact; no
//! floating point is involved.

pub mod det;
pub mod point;
pub mod rat;

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

pub use det::{det, det_sign};
pub use point::{Label, LabeledPoint, Point, PointConfiguration};
pub use rat::Rat;

use crate::error::{Error, Result};

/// Sign of an orientation determinant.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Neg,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "+")]
    Pos,
}

impl Sign {
    pub fn from_i8(v: i8) -> Sign {
        match v.signum() {
            1 => Sign::Pos,
            -1 => Sign::Neg,
            _ => Sign::Zero,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Zero => 0,
            Sign::Neg => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

/// Position of a query point relative to a circumsphere.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Inside,
    On,
    Outside,
}

impl Side {
    pub fn from_sign(s: i8) -> Side {
        match s.signum() {
            1 => Side::Inside,
            0 => Side::On,
            _ => Side::Outside,
        }
    }
}

fn check_common_dim(points: &[&Point]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Err(Error::TooFewPoints("empty point list".into()));
    };
    let dim = first.dim();
    if dim == 0 {
        return Err(Error::DimensionMismatch("zero-dimensional point".into()));
    }
    if points.iter().any(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch("points of mixed dimension".into()));
    }
    Ok(dim)
}

/// Orientation of d+1 ordered points in R^d: the sign of the determinant of
/// their coordinates with an appended unit coordinate. `Zero` means the
/// points are affinely dependent.
pub fn orientation(simplex: &[&Point]) -> Result<Sign> {
    let dim = check_common_dim(simplex)?;
    if simplex.len() != dim + 1 {
        return Err(Error::DimensionMismatch(format!(
            "orientation in R^{dim} takes {} points, got {}",
            dim + 1,
            simplex.len()
        )));
    }
    let rows: Vec<Vec<Rat>> = simplex
        .iter()
        .map(|p| {
            let mut row = p.coords.clone();
            row.push(Rat::one());
            row
        })
        .collect();
    Ok(Sign::from_i8(det::det_sign(&rows)))
}

/// Side of `query` relative to the circumsphere of `spanning` (d+1 affinely
/// independent points of R^d). Normalized by the spanning orientation, so
/// the result is independent of the order of `spanning`.
pub fn in_sphere(spanning: &[&Point], query: &Point) -> Result<Side> {
    let dim = check_common_dim(spanning)?;
    if query.dim() != dim {
        return Err(Error::DimensionMismatch("query dimension differs from spanning".into()));
    }
    if spanning.len() != dim + 1 {
        return Err(Error::DimensionMismatch(format!(
            "in_sphere in R^{dim} takes {} spanning points, got {}",
            dim + 1,
            spanning.len()
        )));
    }
    let s = orientation(spanning)?;
    if s.is_zero() {
        return Err(Error::Degenerate(
            "in_sphere spanning points are affinely dependent".into(),
        ));
    }
    let bordered_row = |p: &Point| {
        let mut row = p.coords.clone();
        row.push(p.norm_sq());
        row.push(Rat::one());
        row
    };
    let mut rows: Vec<Vec<Rat>> = spanning.iter().map(|p| bordered_row(p)).collect();
    rows.push(bordered_row(query));
    Ok(Side::from_sign(s.as_i8() * det::det_sign(&rows)))
}

/// The chirotope of a configuration: the orientation of every sorted
/// (d+1)-subset of labels, points taken in increasing label order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chirotope {
    pub dim: usize,
    pub signs: BTreeMap<Vec<Label>, Sign>,
}

impl Chirotope {
    pub fn sign(&self, labels: &[Label]) -> Option<Sign> {
        self.signs.get(labels).copied()
    }

    /// Labels of subsets on which the two chirotopes disagree.
    pub fn disagreements(&self, other: &Chirotope) -> Vec<Vec<Label>> {
        self.signs
            .iter()
            .filter(|(k, v)| other.signs.get(*k) != Some(v))
            .map(|(k, _)| k.clone())
            .collect()
    }
}

/// Computes the chirotope of `config`; needs at least d+1 points.
pub fn chirotope_of(config: &PointConfiguration) -> Result<Chirotope> {
    let dim = config.dim();
    if config.len() < dim + 1 {
        return Err(Error::TooFewPoints(format!(
            "chirotope in R^{dim} needs at least {} points",
            dim + 1
        )));
    }
    let labels = config.labels();
    let mut signs = BTreeMap::new();
    for subset in labels.iter().copied().combinations(dim + 1) {
        let points: Vec<&Point> =
            subset.iter().map(|&l| config.point(l)).collect::<Result<_>>()?;
        signs.insert(subset, orientation(&points)?);
    }
    Ok(Chirotope { dim, signs })
}

/// True iff no d+1 points lie on a common hyperplane (every (d+1)-subset is
/// affinely independent). Vacuously true for fewer than d+1 points.
pub fn is_general_position(config: &PointConfiguration) -> Result<bool> {
    let dim = config.dim();
    let labels = config.labels();
    for subset in labels.iter().copied().combinations(dim + 1) {
        let points: Vec<&Point> =
            subset.iter().map(|&l| config.point(l)).collect::<Result<_>>()?;
        if orientation(&points)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Orientation of a label subset of a configuration, points in the order
/// the labels are given.
pub fn orientation_of_labels(config: &PointConfiguration, labels: &[Label]) -> Result<Sign> {
    let points: Vec<&Point> = labels.iter().map(|&l| config.point(l)).collect::<Result<_>>()?;
    orientation(&points)
}
