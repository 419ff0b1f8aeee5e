//! Convex bodies, stereographic-type projections from their boundary, and
//! the circumball side predicate they induce.
//!
//! The projection is always canonical: the center sits at the top of the
//! last axis and the image hyperplane is tangent at the antipodal point.
//! For the unit ball everything is exact over the rationals; for the other
//! bodies the predicate is evaluated in floating point against the body's
//! tolerance and refuses to answer rather than guess.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{det, Label, LabeledPoint, Point, PointConfiguration, Rat, Side};
use crate::hull::{convex_hull, FacetSet};
use crate::lift::{delaunay_triangulation, Triangulation};

/// A smooth, origin-symmetric convex body. The unit ball is exact; the
/// other variants carry a tolerance for their floating-point predicate
/// (a tolerance of zero means "only exact zeros are undecided").
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "body", rename_all = "snake_case")]
pub enum KBody {
    UnitBall,
    /// Axis-aligned ellipsoid Σ xᵢ²/aᵢ² = 1 with positive semi-axes.
    Ellipsoid { semi_axes: Vec<Rat>, tolerance: Rat },
    /// Unit ball of the p-norm for even p ≥ 4.
    PNormBall { p: u32, tolerance: Rat },
}

impl KBody {
    pub fn unit_ball() -> Self {
        KBody::UnitBall
    }

    pub fn is_exact_ball(&self) -> bool {
        matches!(self, KBody::UnitBall)
    }

    /// The decision tolerance of the numeric predicate (zero for the ball).
    pub fn tolerance(&self) -> Rat {
        match self {
            KBody::UnitBall => Rat::zero(),
            KBody::Ellipsoid { tolerance, .. } | KBody::PNormBall { tolerance, .. } => {
                tolerance.clone()
            }
        }
    }

    /// Validates that the body makes sense in the given ambient dimension.
    pub fn validate(&self, ambient_dim: usize) -> Result<()> {
        if ambient_dim < 2 {
            return Err(Error::InvalidParameter(
                "projection bodies live in dimension at least 2".into(),
            ));
        }
        match self {
            KBody::UnitBall => Ok(()),
            KBody::Ellipsoid { semi_axes, tolerance } => {
                if semi_axes.len() != ambient_dim {
                    return Err(Error::InvalidParameter(format!(
                        "ellipsoid has {} semi-axes but lives in R^{ambient_dim}",
                        semi_axes.len()
                    )));
                }
                if semi_axes.iter().any(|a| !a.is_positive()) {
                    return Err(Error::InvalidParameter(
                        "ellipsoid semi-axes must be positive".into(),
                    ));
                }
                if tolerance.is_negative() {
                    return Err(Error::InvalidParameter("tolerance must be non-negative".into()));
                }
                Ok(())
            }
            KBody::PNormBall { p, tolerance } => {
                if *p < 4 || p % 2 != 0 {
                    return Err(Error::InvalidParameter(
                        "p-norm bodies require even p at least 4".into(),
                    ));
                }
                if tolerance.is_negative() {
                    return Err(Error::InvalidParameter("tolerance must be non-negative".into()));
                }
                Ok(())
            }
        }
    }

    /// Height of the boundary point on the positive last axis.
    fn apex_height(&self, ambient_dim: usize) -> Rat {
        match self {
            KBody::UnitBall | KBody::PNormBall { .. } => Rat::one(),
            KBody::Ellipsoid { semi_axes, .. } => semi_axes[ambient_dim - 1].clone(),
        }
    }
}

/// A canonical projection from a body's boundary: the center is the top of
/// the last axis and the image hyperplane is tangent at the bottom.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KProjection {
    pub body: KBody,
    center: Point,
}

impl KProjection {
    /// The canonical projection for `body` in `R^{ambient_dim}`.
    pub fn canonical(body: KBody, ambient_dim: usize) -> Result<Self> {
        body.validate(ambient_dim)?;
        let mut coords = vec![Rat::zero(); ambient_dim];
        coords[ambient_dim - 1] = body.apex_height(ambient_dim);
        Ok(KProjection { body, center: Point::new(coords) })
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn ambient_dim(&self) -> usize {
        self.center.dim()
    }

    /// Lifts a point of the image hyperplane (given in its own coordinates)
    /// to the body's boundary along the ray from the center. Exact, unit
    /// ball only.
    pub fn lift_to_boundary(&self, point: &Point) -> Result<Point> {
        if !self.body.is_exact_ball() {
            return Err(Error::Unsupported(
                "exact boundary lifting is only available for the unit ball".into(),
            ));
        }
        if point.dim() + 1 != self.ambient_dim() {
            return Err(Error::DimensionMismatch(format!(
                "expected a point of R^{}, got R^{}",
                self.ambient_dim() - 1,
                point.dim()
            )));
        }
        Ok(inverse_stereographic(point))
    }
}

/// Inverse stereographic projection onto the unit sphere: the image plane
/// is tangent at the south pole and the projection center is the north
/// pole, so `a` maps to (4a, |a|²-4) / (|a|²+4).
pub fn inverse_stereographic(a: &Point) -> Point {
    let four = Rat::int(4);
    let denom = a.norm_sq() + four.clone();
    let mut coords: Vec<Rat> = a.coords.iter().map(|c| &(&four * c) / &denom).collect();
    coords.push(&(a.norm_sq() - four) / &denom);
    Point::new(coords)
}

/// Stereographic projection from the north pole back to the tangent plane
/// at the south pole; the north pole itself has no image.
pub fn stereographic(x: &Point) -> Result<Point> {
    let last = x.coords.last().ok_or_else(|| {
        Error::DimensionMismatch("cannot project a 0-dimensional point".into())
    })?;
    let denom = Rat::one() - last.clone();
    if denom.is_zero() {
        return Err(Error::Degenerate(
            "the projection center has no stereographic image".into(),
        ));
    }
    let two = Rat::int(2);
    Ok(Point::new(
        x.coords[..x.dim() - 1]
            .iter()
            .map(|c| &(&two * c) / &denom)
            .collect(),
    ))
}

fn or_row(point: &Point) -> Vec<Rat> {
    let mut row = point.coords.clone();
    row.push(Rat::one());
    row
}

fn det_f64(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut sign = 1.0;
    let mut product = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap())
            .unwrap();
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            sign = -sign;
        }
        product *= m[col][col];
        for row in col + 1..n {
            let factor = m[row][col] / m[col][col];
            for k in col..n {
                m[row][k] -= factor * m[col][k];
            }
        }
    }
    sign * product
}

/// Numeric inverse projection: the boundary point hit by the ray from the
/// center through the embedded image point `a`.
fn inverse_projection_f64(a: &[f64], body: &KBody) -> Vec<f64> {
    let dim = a.len() + 1;
    let s = body.apex_height(dim).to_f64();
    // Ray x(t) = (t·a, s·(1-2t)); t = 0 is the center, and the wanted
    // boundary point is the unique second intersection.
    let t = match body {
        KBody::UnitBall => {
            let q: f64 = a.iter().map(|c| c * c).sum();
            4.0 / (q + 4.0)
        }
        KBody::Ellipsoid { semi_axes, .. } => {
            let q: f64 = a
                .iter()
                .zip(semi_axes.iter())
                .map(|(c, ax)| {
                    let ax = ax.to_f64();
                    (c / ax) * (c / ax)
                })
                .sum();
            4.0 / (q + 4.0)
        }
        KBody::PNormBall { p, .. } => {
            let p = *p as i32;
            let q: f64 = a.iter().map(|c| c.abs().powi(p)).sum();
            if q == 0.0 {
                1.0
            } else {
                // f(t) = t^p q + (1-2t)^p - 1 has roots t = 0 and one
                // positive root; bracket it and bisect.
                let f = |t: f64| t.powi(p) * q + (1.0 - 2.0 * t).powi(p) - 1.0;
                let mut hi = 1.0;
                while f(hi) <= 0.0 {
                    hi *= 2.0;
                }
                let mut lo = 1e-12;
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if f(mid) > 0.0 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                0.5 * (lo + hi)
            }
        }
    };
    let mut x: Vec<f64> = a.iter().map(|c| t * c).collect();
    x.push(s * (1.0 - 2.0 * t));
    x
}

/// Side of the query point relative to the circumball (with respect to the
/// projection body) spanned by d+1 points of R^d: the body-boundary images
/// of the spanning points cut the boundary along the circumball's rim, and
/// the query is inside exactly when its image lies on the far side of that
/// cut from the projection center.
///
/// Exact for the unit ball (where it agrees with the Euclidean in-sphere
/// predicate); decided in floating point against the body's tolerance
/// otherwise, returning an error when the computation cannot certify a
/// side.
pub fn k_circumball_side(
    spanning: &[&Point],
    query: &Point,
    proj: &KProjection,
) -> Result<Side> {
    let base_dim = proj.ambient_dim() - 1;
    if spanning.len() != base_dim + 1 {
        return Err(Error::TooFewPoints(format!(
            "a circumball in R^{base_dim} is spanned by {} points, got {}",
            base_dim + 1,
            spanning.len()
        )));
    }
    if spanning.iter().any(|p| p.dim() != base_dim) || query.dim() != base_dim {
        return Err(Error::DimensionMismatch(format!(
            "spanning and query points must live in R^{base_dim}"
        )));
    }
    if proj.body.is_exact_ball() {
        let lifted: Vec<Point> = spanning.iter().map(|p| inverse_stereographic(p)).collect();
        let mut center_rows: Vec<Vec<Rat>> = lifted.iter().map(or_row).collect();
        let mut query_rows = center_rows.clone();
        center_rows.push(or_row(proj.center()));
        query_rows.push(or_row(&inverse_stereographic(query)));
        let s = det(&center_rows).signum();
        if s == 0 {
            return Err(Error::Degenerate(
                "spanning points do not span a circumball".into(),
            ));
        }
        let t = det(&query_rows).signum();
        return Ok(Side::from_sign(-(t * s)));
    }
    let tolerance = proj.body.tolerance().to_f64();
    let lift = |p: &Point| -> Vec<f64> {
        let coords: Vec<f64> = p.coords.iter().map(Rat::to_f64).collect();
        let mut row = inverse_projection_f64(&coords, &proj.body);
        row.push(1.0);
        row
    };
    let mut center_rows: Vec<Vec<f64>> = spanning.iter().map(|p| lift(p)).collect();
    let mut query_rows = center_rows.clone();
    let mut center_row: Vec<f64> = proj.center().coords.iter().map(Rat::to_f64).collect();
    center_row.push(1.0);
    center_rows.push(center_row);
    query_rows.push(lift(query));
    let s = det_f64(center_rows);
    if s.abs() <= tolerance || s == 0.0 {
        return Err(Error::Undecided(
            "spanning determinant is below the body's tolerance".into(),
        ));
    }
    let t = det_f64(query_rows);
    if t.abs() <= tolerance {
        return Err(Error::Undecided(
            "side determinant is below the body's tolerance".into(),
        ));
    }
    let product = -(t * s);
    Ok(if product > 0.0 { Side::Inside } else { Side::Outside })
}

/// Delaunay triangulation with respect to a projection body: the cells are
/// the spanning subsets whose body-circumball strictly excludes every other
/// point. Coincides with the Euclidean Delaunay triangulation for the unit
/// ball (and is computed exactly there); scans all candidate cells with the
/// numeric predicate otherwise.
pub fn k_delaunay(
    config: &PointConfiguration,
    proj: &KProjection,
) -> Result<Triangulation> {
    if config.dim() + 1 != proj.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "projection body lives in R^{} but the configuration is in R^{}",
            proj.ambient_dim(),
            config.dim()
        )));
    }
    if proj.body.is_exact_ball() {
        return delaunay_triangulation(config);
    }
    if !crate::exact::is_general_position(config)? {
        return Err(Error::Degenerate(
            "configuration must be in general position".into(),
        ));
    }
    let d = config.dim();
    let labels = config.labels();
    let mut cells = std::collections::BTreeSet::new();
    for subset in labels.iter().copied().combinations(d + 1) {
        let pts: Vec<&Point> = subset.iter().map(|&l| config.point(l)).collect::<Result<_>>()?;
        let mut empty = true;
        for &other in &labels {
            if subset.contains(&other) {
                continue;
            }
            match k_circumball_side(&pts, config.point(other)?, proj)? {
                Side::Outside => {}
                Side::Inside => {
                    empty = false;
                    break;
                }
                Side::On => {
                    return Err(Error::Degenerate(format!(
                        "point {other} lies on the circumball of {:?}",
                        subset
                    )));
                }
            }
        }
        if empty {
            cells.insert(subset);
        }
    }
    let used: std::collections::BTreeSet<Label> = cells.iter().flatten().copied().collect();
    let unused = labels.into_iter().filter(|l| !used.contains(l)).collect();
    Ok(Triangulation { dim: d, cells, unused })
}

/// A polytope inscribed on a body's boundary, with its claimed facets.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InscribedRealization {
    pub vertices: PointConfiguration,
    pub body: KBody,
    pub facets: FacetSet,
}

impl InscribedRealization {
    /// The label of the projection center vertex (always the largest).
    pub fn pole_label(&self) -> Result<Label> {
        self.vertices
            .max_label()
            .ok_or_else(|| Error::TooFewPoints("realization has no vertices".into()))
    }
}

/// An inscribed simplicial polytope from a plane configuration: map every
/// point onto the unit sphere by inverse stereographic projection and add
/// the projection center as one extra vertex (labeled past the maximum).
/// The facets avoiding the center are exactly the Delaunay cells of the
/// configuration; the facets through it are the hull facets.
///
/// Inputs whose sphere images would produce a non-simplicial facet (for
/// instance d+2 points on a common circumsphere that supports the hull)
/// are rejected by the hull construction itself; collinear subsets that
/// stay clear of the hull boundary are fine.
pub fn brown_polytope(config: &PointConfiguration) -> Result<InscribedRealization> {
    let d = config.dim();
    if config.len() < d + 1 {
        return Err(Error::TooFewPoints(format!(
            "an inscribed polytope over R^{d} needs at least {} points",
            d + 1
        )));
    }
    let pole_label = config.max_label().unwrap() + 1;
    let mut rows: Vec<LabeledPoint> = config
        .iter()
        .map(|lp| LabeledPoint { label: lp.label, point: inverse_stereographic(&lp.point) })
        .collect();
    let mut pole = vec![Rat::zero(); d + 1];
    pole[d] = Rat::one();
    rows.push(LabeledPoint { label: pole_label, point: Point::new(pole) });
    let vertices = PointConfiguration::new(d + 1, rows)?;
    let facets = convex_hull(&vertices)?;
    Ok(InscribedRealization { vertices, body: KBody::unit_ball(), facets })
}

/// Checks an inscribed realization against an expected facet list: every
/// vertex must lie on the body's boundary (exactly for the unit ball,
/// within tolerance otherwise) and the hull of the vertices must equal
/// `expected` as a labeled facet set.
pub fn verify_inscribed(
    realization: &InscribedRealization,
    expected: &FacetSet,
) -> Result<bool> {
    let dim = realization.vertices.dim();
    realization.body.validate(dim)?;
    for lp in realization.vertices.iter() {
        match &realization.body {
            KBody::UnitBall => {
                if lp.point.norm_sq() != Rat::one() {
                    return Ok(false);
                }
            }
            KBody::Ellipsoid { semi_axes, tolerance } => {
                let value: f64 = lp
                    .point
                    .coords
                    .iter()
                    .zip(semi_axes.iter())
                    .map(|(c, ax)| {
                        let r = c.to_f64() / ax.to_f64();
                        r * r
                    })
                    .sum();
                if (value - 1.0).abs() > tolerance.to_f64() {
                    return Ok(false);
                }
            }
            KBody::PNormBall { p, tolerance } => {
                let value: f64 = lp
                    .point
                    .coords
                    .iter()
                    .map(|c| c.to_f64().abs().powi(*p as i32))
                    .sum();
                if (value - 1.0).abs() > tolerance.to_f64() {
                    return Ok(false);
                }
            }
        }
    }
    let hull = convex_hull(&realization.vertices)?;
    Ok(crate::hull::same_labeled_type(&hull, expected))
}
