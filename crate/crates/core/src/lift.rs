//! Lexicographic liftings and the triangulations they induce: placing
//! triangulations, lower envelopes, and Euclidean Delaunay triangulations.
//!
//! A lifting assigns one height per label; the lifted configuration appends
//! each height as a new last coordinate. Heights are chosen in label order:
//! the first d+1 labels get height 0, and each later point is placed
//! strictly above (sign `+`) or strictly below (sign `-`) every hyperplane
//! spanned by d+1 previously lifted points. "Above" is decided exactly:
//! the lifted point â is above the hyperplane through Ŝ if and only if
//! orient(Ŝ, â) · orient(S) < 0, where S is the projection of Ŝ back to the
//! base. A ball-compatible lifting additionally keeps each new point outside
//! every circumsphere spanned by d+2 previously lifted points.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{det, in_sphere, Label, Point, PointConfiguration, Rat, Side, Sign};
use crate::hull::{hull_engine, HullEngine, OrientedFacet};
use crate::kbody::{k_circumball_side, KBody, KProjection};

/// How heights are chosen for constrained labels.
///
/// Both policies satisfy the same strict conditions and therefore produce
/// liftings with identical combinatorics; only the height values differ.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum HeightPolicy {
    /// Exact supremum over all spanned hyperplanes, plus one.
    ExactBound,
    /// Geometric doubling from ±1, each candidate fully re-verified.
    Doubling,
}

/// Number of hyperplane conditions above which `lex_lift` switches from the
/// exact-bound policy to doubling.
const EXACT_POLICY_CONDITION_LIMIT: u128 = 1_000_000;

const DOUBLING_LIMIT: u32 = 10_000;

/// A lifting of a point configuration: one exact height per label, plus the
/// sign each constrained label was lifted with.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Lifting {
    pub base: PointConfiguration,
    pub heights: BTreeMap<Label, Rat>,
    pub signs: BTreeMap<Label, Sign>,
}

impl Lifting {
    /// The lifted configuration: base coordinates with the height appended.
    pub fn lifted_configuration(&self) -> Result<PointConfiguration> {
        let mut rows = Vec::with_capacity(self.base.len());
        for lp in self.base.iter() {
            let height = self.heights.get(&lp.label).ok_or_else(|| {
                Error::InvalidLabels(format!("no height for label {}", lp.label))
            })?;
            rows.push(crate::exact::LabeledPoint {
                label: lp.label,
                point: lp.point.lifted(height.clone()),
            });
        }
        PointConfiguration::new(self.base.dim() + 1, rows)
    }
}

/// The all-positive sign assignment for `base`: one `+` per constrained
/// label (positions d+2.. in label order).
pub fn positive_signs(base: &PointConfiguration) -> BTreeMap<Label, Sign> {
    constrained_labels(base).map(|l| (l, Sign::Pos)).collect()
}

fn constrained_labels(base: &PointConfiguration) -> impl Iterator<Item = Label> + '_ {
    base.labels().into_iter().skip(base.dim() + 1)
}

fn validate_signs(
    base: &PointConfiguration,
    signs: &BTreeMap<Label, Sign>,
) -> Result<Vec<(Label, Sign)>> {
    let expected: Vec<Label> = constrained_labels(base).collect();
    let given: Vec<Label> = signs.keys().copied().collect();
    if expected != given {
        return Err(Error::InvalidLabels(format!(
            "signs must cover exactly the labels {:?}, got {:?}",
            expected, given
        )));
    }
    if signs.values().any(|s| s.is_zero()) {
        return Err(Error::InvalidParameter("lifting signs must be +1 or -1".into()));
    }
    Ok(expected.into_iter().map(|l| (l, signs[&l])).collect())
}

/// Matrix row (coordinates…, 1) for the orientation determinant.
fn or_row(point: &Point) -> Vec<Rat> {
    let mut row = point.coords.clone();
    row.push(Rat::one());
    row
}

/// Orientation determinant (not just its sign) of base points by label.
fn base_or_det(base: &PointConfiguration, labels: &[Label]) -> Result<Rat> {
    let rows: Vec<Vec<Rat>> =
        labels.iter().map(|&l| Ok(or_row(base.point(l)?))) .collect::<Result<_>>()?;
    Ok(det(&rows))
}

fn lifted_point(
    base: &PointConfiguration,
    heights: &BTreeMap<Label, Rat>,
    label: Label,
) -> Result<Point> {
    Ok(base.point(label)?.lifted(heights[&label].clone()))
}

/// Orientation determinant of lifted points for `labels` with the candidate
/// query point appended at height `h`.
fn lifted_or_det(
    base: &PointConfiguration,
    heights: &BTreeMap<Label, Rat>,
    labels: &[Label],
    query: Label,
    h: &Rat,
) -> Result<Rat> {
    let mut rows: Vec<Vec<Rat>> = labels
        .iter()
        .map(|&l| Ok(or_row(&lifted_point(base, heights, l)?)))
        .collect::<Result<_>>()?;
    rows.push(or_row(&base.point(query)?.lifted(h.clone())));
    Ok(det(&rows))
}

/// In-sphere determinant row (coordinates…, squared norm, 1).
fn sphere_row(point: &Point) -> Vec<Rat> {
    let mut row = point.coords.clone();
    row.push(point.norm_sq());
    row.push(Rat::one());
    row
}

struct LiftContext<'a> {
    base: &'a PointConfiguration,
    labels: Vec<Label>,
}

impl<'a> LiftContext<'a> {
    fn new(base: &'a PointConfiguration) -> Result<LiftContext<'a>> {
        let dim = base.dim();
        if base.len() < dim + 1 {
            return Err(Error::TooFewPoints(format!(
                "a lifting of an R^{dim} configuration needs at least {} points",
                dim + 1
            )));
        }
        if !crate::exact::is_general_position(base)? {
            return Err(Error::Degenerate(
                "lifting base must be in general position".into(),
            ));
        }
        Ok(LiftContext { base, labels: base.labels() })
    }

    /// Strict hyperplane condition for one subset: the point labeled
    /// `query`, lifted to height `h`, is above (`Pos`) or below (`Neg`) the
    /// hyperplane spanned by the lifted `subset`.
    fn hyperplane_ok(
        &self,
        heights: &BTreeMap<Label, Rat>,
        subset: &[Label],
        query: Label,
        h: &Rat,
        sign: Sign,
    ) -> Result<bool> {
        let lifted = lifted_or_det(self.base, heights, subset, query, h)?;
        let base = base_or_det(self.base, subset)?;
        if base.is_zero() {
            return Err(Error::Degenerate(format!(
                "labels {:?} are affinely dependent in the base",
                subset
            )));
        }
        let product = lifted.signum() * base.signum();
        Ok(match sign {
            Sign::Pos => product < 0,
            Sign::Neg => product > 0,
            Sign::Zero => false,
        })
    }

    /// The height at which the lifted query crosses the hyperplane spanned
    /// by the lifted `subset`.
    fn crossing_height(
        &self,
        heights: &BTreeMap<Label, Rat>,
        subset: &[Label],
        query: Label,
    ) -> Result<Rat> {
        let at_zero = lifted_or_det(self.base, heights, subset, query, &Rat::zero())?;
        let denom = base_or_det(self.base, subset)?;
        if denom.is_zero() {
            return Err(Error::Degenerate(format!(
                "labels {:?} are affinely dependent in the base",
                subset
            )));
        }
        // orient(Ŝ, (q, h)) is linear in h with slope -orient(S), so it
        // vanishes at h = orient(Ŝ, (q, 0)) / orient(S).
        Ok(&at_zero / &denom)
    }

    /// Exact threshold beyond which the lifted query lies outside the
    /// circumsphere of the lifted `subset` (d+2 earlier points): the
    /// in-sphere determinant is quadratic in the height with leading
    /// coefficient of known sign, so a root bound suffices.
    fn circumsphere_bound(
        &self,
        heights: &BTreeMap<Label, Rat>,
        subset: &[Label],
        query: Label,
    ) -> Result<Rat> {
        let spanning: Vec<Point> = subset
            .iter()
            .map(|&l| lifted_point(self.base, heights, l))
            .collect::<Result<_>>()?;
        let spanning_or: Vec<Vec<Rat>> = spanning.iter().map(or_row).collect();
        let quad = -det(&spanning_or);
        if quad.is_zero() {
            return Err(Error::Degenerate(format!(
                "lifted labels {:?} are affinely dependent",
                subset
            )));
        }
        let q = self.base.point(query)?;
        let det_at = |h: Rat| -> Rat {
            let mut rows: Vec<Vec<Rat>> = spanning.iter().map(sphere_row).collect();
            rows.push(sphere_row(&q.lifted(h)));
            det(&rows)
        };
        let at_zero = det_at(Rat::zero());
        let at_one = det_at(Rat::one());
        let linear = &(&at_one - &quad) - &at_zero;
        // Roots of quad·h² + linear·h + at_zero lie within the Cauchy bound;
        // beyond it the normalized determinant is negative, i.e. outside.
        let bound = {
            let a = quad.abs();
            let b = linear.abs();
            let c = at_zero.abs();
            let m = if b > c { b } else { c };
            Rat::one() + m / a
        };
        Ok(bound)
    }

    /// Every strict side condition the lifting must satisfy for `query` at
    /// height `h`, given the already-lifted prefix `earlier`.
    fn point_conditions_hold(
        &self,
        heights: &BTreeMap<Label, Rat>,
        earlier: &[Label],
        query: Label,
        h: &Rat,
        sign: Sign,
        body: Option<&KProjection>,
    ) -> Result<bool> {
        let dim = self.base.dim();
        let hyperplanes: Vec<Vec<Label>> =
            earlier.iter().copied().combinations(dim + 1).collect();
        let hyper_ok = hyperplanes
            .par_iter()
            .map(|subset| self.hyperplane_ok(heights, subset, query, h, sign))
            .try_reduce(|| true, |a, b| Ok(a && b))?;
        if !hyper_ok {
            return Ok(false);
        }
        let Some(proj) = body else { return Ok(true) };
        if earlier.len() < dim + 2 {
            return Ok(true);
        }
        let lifted_query = self.base.point(query)?.lifted(h.clone());
        let spheres: Vec<Vec<Label>> =
            earlier.iter().copied().combinations(dim + 2).collect();
        spheres
            .par_iter()
            .map(|subset| {
                let spanning: Vec<Point> = subset
                    .iter()
                    .map(|&l| lifted_point(self.base, heights, l))
                    .collect::<Result<_>>()?;
                let refs: Vec<&Point> = spanning.iter().collect();
                Ok(k_circumball_side(&refs, &lifted_query, proj)? == Side::Outside)
            })
            .try_reduce(|| true, |a, b| Ok(a && b))
    }
}

fn auto_policy(base: &PointConfiguration) -> HeightPolicy {
    let dim = base.dim() as u128;
    let n = base.len() as u128;
    let mut conditions: u128 = 0;
    for i in (dim + 2)..=n {
        let mut c: u128 = 1;
        for j in 0..(dim + 1) {
            c = c.saturating_mul(i - 1 - j) / (j + 1);
        }
        conditions = conditions.saturating_add(c);
        if conditions > EXACT_POLICY_CONDITION_LIMIT {
            return HeightPolicy::Doubling;
        }
    }
    HeightPolicy::ExactBound
}

/// Lexicographic lifting of `base` with the given signs; the height policy
/// is chosen automatically from the number of side conditions.
pub fn lex_lift(
    base: &PointConfiguration,
    signs: &BTreeMap<Label, Sign>,
) -> Result<Lifting> {
    lex_lift_with_policy(base, signs, auto_policy(base))
}

/// Lexicographic lifting with an explicit height policy.
pub fn lex_lift_with_policy(
    base: &PointConfiguration,
    signs: &BTreeMap<Label, Sign>,
    policy: HeightPolicy,
) -> Result<Lifting> {
    lift_impl(base, signs, policy, None)
}

/// Ball-compatible lexicographic lifting: on top of the hyperplane
/// conditions, every constrained point is lifted outside all circumballs
/// spanned by d+2 previously lifted points, with circumballs taken with
/// respect to `body`. Exact for the unit ball; numeric bodies verify with
/// their tolerance and surface indecision as an error.
pub fn k_lift(
    base: &PointConfiguration,
    signs: &BTreeMap<Label, Sign>,
    body: &KBody,
) -> Result<Lifting> {
    // Circumball conditions constrain points of the lifted space R^{d+1},
    // so the projection body lives one dimension above that.
    let proj = KProjection::canonical(body.clone(), base.dim() + 2)?;
    let lifting = lift_impl(base, signs, auto_policy(base), Some(&proj))?;
    if !verify_lift(&lifting, Some(body))? {
        return Err(Error::InternalInvariant(
            "freshly built ball-compatible lifting failed its own verification".into(),
        ));
    }
    Ok(lifting)
}

fn lift_impl(
    base: &PointConfiguration,
    signs: &BTreeMap<Label, Sign>,
    policy: HeightPolicy,
    body: Option<&KProjection>,
) -> Result<Lifting> {
    let ctx = LiftContext::new(base)?;
    let ordered = validate_signs(base, signs)?;
    let dim = base.dim();
    let mut heights: BTreeMap<Label, Rat> = BTreeMap::new();
    for &l in &ctx.labels[..dim + 1] {
        heights.insert(l, Rat::zero());
    }
    for (position, &(label, sign)) in ordered.iter().enumerate() {
        let earlier = &ctx.labels[..dim + 1 + position];
        let exact_ball_bound = match body {
            Some(proj) if proj.body.is_exact_ball() => true,
            _ => false,
        };
        let height = match (policy, body) {
            (HeightPolicy::ExactBound, None) => {
                exact_bound_height(&ctx, &heights, earlier, label, sign, false)?
            }
            (HeightPolicy::ExactBound, Some(_)) if exact_ball_bound => {
                exact_bound_height(&ctx, &heights, earlier, label, sign, true)?
            }
            _ => doubling_height(&ctx, &heights, earlier, label, sign, body)?,
        };
        heights.insert(label, height);
    }
    Ok(Lifting {
        base: base.clone(),
        heights,
        signs: ordered.into_iter().collect(),
    })
}

/// Exact-bound height: the supremum of all crossing heights (and, for the
/// ball, all circumsphere root bounds), plus one, with the requested sign.
fn exact_bound_height(
    ctx: &LiftContext<'_>,
    heights: &BTreeMap<Label, Rat>,
    earlier: &[Label],
    label: Label,
    sign: Sign,
    with_ball: bool,
) -> Result<Rat> {
    let dim = ctx.base.dim();
    // Track the bound on |h| as if the sign were positive; mirror at the end.
    let mut magnitude = Rat::zero();
    let mut raise = |candidate: Rat| {
        if candidate > magnitude {
            magnitude = candidate;
        }
    };
    for subset in earlier.iter().copied().combinations(dim + 1) {
        let crossing = ctx.crossing_height(heights, &subset, label)?;
        match sign {
            Sign::Pos => raise(crossing),
            _ => raise(-crossing),
        }
    }
    if with_ball && earlier.len() >= dim + 2 {
        for subset in earlier.iter().copied().combinations(dim + 2) {
            raise(ctx.circumsphere_bound(heights, &subset, label)?);
        }
    }
    let h = magnitude + Rat::one();
    Ok(match sign {
        Sign::Neg => -h,
        _ => h,
    })
}

/// Doubling height: candidates ±1, ±2, ±4, … until every side condition
/// (and, with a body, every circumball condition) verifies.
fn doubling_height(
    ctx: &LiftContext<'_>,
    heights: &BTreeMap<Label, Rat>,
    earlier: &[Label],
    label: Label,
    sign: Sign,
    body: Option<&KProjection>,
) -> Result<Rat> {
    let mut magnitude = Rat::one();
    for _ in 0..DOUBLING_LIMIT {
        let candidate = match sign {
            Sign::Neg => -magnitude.clone(),
            _ => magnitude.clone(),
        };
        if ctx.point_conditions_hold(heights, earlier, label, &candidate, sign, body)? {
            return Ok(candidate);
        }
        magnitude = magnitude * Rat::int(2);
    }
    Err(Error::InternalInvariant(format!(
        "height for label {label} not found within {DOUBLING_LIMIT} doublings"
    )))
}

/// Checks whether `lifting` satisfies every condition it claims: recorded
/// signs are ±1 and match the heights, the first d+1 labels sit at height
/// 0, each constrained lifted point is strictly above/below all hyperplanes
/// spanned by d+1 earlier lifted points, and — when `body` is given — each
/// point constrained by the circumball condition lies strictly outside
/// every circumball of d+2 earlier lifted points.
pub fn verify_lift(lifting: &Lifting, body: Option<&KBody>) -> Result<bool> {
    let base = &lifting.base;
    let ctx = LiftContext::new(base)?;
    let dim = base.dim();
    if base
        .labels()
        .iter()
        .any(|l| !lifting.heights.contains_key(l))
    {
        return Err(Error::InvalidLabels("missing height for a base label".into()));
    }
    let ordered = validate_signs(base, &lifting.signs)?;
    for &l in &ctx.labels[..dim + 1] {
        if !lifting.heights[&l].is_zero() {
            return Ok(false);
        }
    }
    let proj = match body {
        Some(b) => Some(KProjection::canonical(b.clone(), dim + 2)?),
        None => None,
    };
    for (position, &(label, sign)) in ordered.iter().enumerate() {
        let h = &lifting.heights[&label];
        if h.signum() != sign.as_i8() {
            return Ok(false);
        }
        let earlier = &ctx.labels[..dim + 1 + position];
        if !ctx.point_conditions_hold(
            &lifting.heights,
            earlier,
            label,
            h,
            sign,
            proj.as_ref(),
        )? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A triangulation of (part of) a configuration: cells are sorted label
/// sets of full-dimensional simplices; labels that ended up interior are
/// listed as unused.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Triangulation {
    pub dim: usize,
    pub cells: BTreeSet<Vec<Label>>,
    pub unused: BTreeSet<Label>,
}

impl Triangulation {
    /// Labels that appear in at least one cell.
    pub fn used_labels(&self) -> BTreeSet<Label> {
        self.cells.iter().flatten().copied().collect()
    }

    /// True iff `labels` is contained in some cell.
    pub fn spans_face(&self, labels: &[Label]) -> bool {
        self.cells
            .iter()
            .any(|cell| labels.iter().all(|l| cell.binary_search(l).is_ok()))
    }
}

/// True iff the two triangulations agree exactly (dimension, cells, unused
/// labels).
pub fn triangulations_equal(a: &Triangulation, b: &Triangulation) -> bool {
    a == b
}

/// Placing triangulation: insert points in label order, coning each point
/// outside the current hull over its visible facets. Points that land
/// inside are recorded as unused.
pub fn placing_triangulation(config: &PointConfiguration) -> Result<Triangulation> {
    let engine = hull_engine(config, &config.labels())?;
    Ok(triangulation_from_engine(config.dim(), &engine))
}

pub(crate) fn triangulation_from_engine(dim: usize, engine: &HullEngine) -> Triangulation {
    Triangulation {
        dim,
        cells: engine.cells.iter().cloned().collect(),
        unused: engine.unused.iter().copied().collect(),
    }
}

/// Sign of the last coordinate of a facet's outward normal: `Pos` for
/// upper facets, `Neg` for lower ones, `Zero` for vertical facets. Decided
/// exactly from the facet's interior certificate and the orientation of its
/// projection.
pub(crate) fn facet_vertical_sign(
    config: &PointConfiguration,
    facet: &OrientedFacet,
) -> Result<Sign> {
    let rows: Vec<Vec<Rat>> = facet
        .labels
        .iter()
        .map(|&l| {
            let mut row = config.point(l)?.projected().coords;
            row.push(Rat::one());
            Ok(row)
        })
        .collect::<Result<_>>()?;
    let proj = det(&rows).signum();
    // orient(F, (b, h)) is linear in h with slope -proj, so points far below
    // are on the sign(proj) side. A facet is lower iff far-below points are
    // outside, i.e. proj and the interior certificate disagree — and then
    // the product is exactly the sign of the outward normal's last entry.
    Ok(Sign::from_i8(proj * facet.inner_sign.as_i8()))
}

/// Lower envelope of a configuration in R^{m}: the facets of its hull whose
/// outward normal points down, projected to R^{m-1}.
pub fn lower_envelope(config: &PointConfiguration) -> Result<Triangulation> {
    if config.dim() < 2 {
        return Err(Error::DimensionMismatch(
            "lower envelopes need at least a 2-dimensional configuration".into(),
        ));
    }
    let engine = hull_engine(config, &config.labels())?;
    let mut cells = BTreeSet::new();
    for facet in engine.oriented_facets() {
        if facet_vertical_sign(config, &facet)? == Sign::Neg {
            cells.insert(facet.labels);
        }
    }
    let used: BTreeSet<Label> = cells.iter().flatten().copied().collect();
    let unused = config.labels().into_iter().filter(|l| !used.contains(l)).collect();
    Ok(Triangulation { dim: config.dim() - 1, cells, unused })
}

/// Euclidean Delaunay triangulation via the paraboloid lift: append each
/// point's squared norm, take the lower envelope, and re-verify every cell
/// definitionally (its circumsphere strictly excludes all other points).
pub fn delaunay_triangulation(config: &PointConfiguration) -> Result<Triangulation> {
    let lifted_rows: Vec<crate::exact::LabeledPoint> = config
        .iter()
        .map(|lp| crate::exact::LabeledPoint {
            label: lp.label,
            point: lp.point.lifted(lp.point.norm_sq()),
        })
        .collect();
    let lifted = PointConfiguration::new(config.dim() + 1, lifted_rows)?;
    let triangulation = lower_envelope(&lifted)?;
    for cell in &triangulation.cells {
        let spanning: Vec<&Point> =
            cell.iter().map(|&l| config.point(l)).collect::<Result<_>>()?;
        for other in config.labels() {
            if cell.binary_search(&other).is_ok() {
                continue;
            }
            if in_sphere(&spanning, config.point(other)?)? != Side::Outside {
                return Err(Error::InternalInvariant(format!(
                    "cell {:?} fails the empty-circumsphere re-check",
                    cell
                )));
            }
        }
    }
    Ok(triangulation)
}

/// True iff every ⌊(dim+1)/2⌋-subset of the used labels spans a face of
/// some cell.
pub fn is_neighborly_triangulation(t: &Triangulation) -> Result<bool> {
    let k = (t.dim + 1) / 2;
    if k == 0 {
        return Err(Error::InvalidParameter(
            "neighborliness of a 0-dimensional triangulation is vacuous".into(),
        ));
    }
    let used: Vec<Label> = t.used_labels().into_iter().collect();
    if used.len() < k {
        return Err(Error::TooFewPoints(format!(
            "triangulation has {} used labels, fewer than k = {k}",
            used.len()
        )));
    }
    let subsets: Vec<Vec<Label>> = used.into_iter().combinations(k).collect();
    Ok(subsets.par_iter().all(|subset| t.spans_face(subset)))
}

/// Dual graph of a triangulation: one node per cell, edges between cells
/// sharing a facet (all but one vertex).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualGraph {
    pub cells: Vec<Vec<Label>>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl DualGraph {
    pub fn degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == node || b == node).count()
    }

    /// True iff the graph is a simple path (including single-node paths).
    pub fn is_path(&self) -> bool {
        let n = self.cells.len();
        if n == 0 {
            return false;
        }
        if self.edges.len() != n - 1 {
            return false;
        }
        if (0..n).any(|v| self.degree(v) > 2) {
            return false;
        }
        // n-1 edges, max degree 2: connectivity makes it a path.
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v { b } else if b == v { a } else { continue };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn dual_graph(t: &Triangulation) -> DualGraph {
    let cells: Vec<Vec<Label>> = t.cells.iter().cloned().collect();
    let mut edges = BTreeSet::new();
    for (i, a) in cells.iter().enumerate() {
        for (j, b) in cells.iter().enumerate().skip(i + 1) {
            let shared = a.iter().filter(|l| b.binary_search(l).is_ok()).count();
            if shared + 1 == a.len() {
                edges.insert((i, j));
            }
        }
    }
    DualGraph { cells, edges }
}
