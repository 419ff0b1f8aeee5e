//! The construction pipeline: starting from a low-dimensional seed
//! configuration in convex position, repeatedly add a point and take a
//! lexicographic lifting, twice per iteration, until the target dimension
//! is reached. The result is a simplicial polytope on `points` vertices in
//! `R^dim` that is ⌊dim/2⌋-neighborly, delivered as a replayable
//! certificate. Companion entry points inscribe the certified polytope on
//! the unit sphere, count distinct labeled boundaries over families of
//! specs, evaluate the counting lower bound, and build the stacked
//! inscribed family used as a cross-check.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    is_general_position, Label, LabeledPoint, Point, PointConfiguration, Rat, Sign,
};
use crate::hull::{convex_hull, FacetSet};
use crate::kbody::{
    brown_polytope, inverse_stereographic, verify_inscribed, InscribedRealization, KBody,
};
use crate::lift::{
    dual_graph, k_lift, lex_lift_with_policy, placing_triangulation, positive_signs, verify_lift,
    HeightPolicy, Lifting,
};

/// Environment variable overriding the maximum number of specs a counting
/// run may enumerate.
pub const ENUMERATION_CAP_VAR: &str = "LEXLIFT_ENUM_CAP";

const DEFAULT_ENUMERATION_CAP: usize = 250_000;

/// Declarative description of one construction run. Everything is optional
/// except the target dimension and vertex count; omitted parts fall back to
/// the moment-curve seed, identity relabelings, all-positive lifting signs,
/// and seeded random added points.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PipelineSpec {
    pub dim: usize,
    pub points: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub base: Option<PointConfiguration>,
    #[serde(default)]
    pub iterations: Vec<IterationPlan>,
}

/// Optional overrides for one dimension-raising iteration.
///
/// `permutation` relabels the current configuration (one-line notation over
/// its labels) before anything else happens. `first_signs` prescribes the
/// lifting signs of the first lift positionally, over the constrained
/// labels in increasing order; the second lift is always positive. The two
/// `*_point` fields pin the added points instead of drawing them.
/// `first_label` chooses the label the iteration's first added point
/// carries in the finished polytope (earlier points keep their relative
/// order, shifting up by one to make room); by default it stays the next
/// label after the current configuration. Distinct choices give distinct
/// labeled boundaries, which is what the counting enumeration sweeps.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct IterationPlan {
    #[serde(default)]
    pub permutation: Option<Vec<Label>>,
    #[serde(default)]
    pub first_signs: Option<Vec<Sign>>,
    #[serde(default)]
    pub first_point: Option<Point>,
    #[serde(default)]
    pub second_point: Option<Point>,
    #[serde(default)]
    pub first_label: Option<Label>,
}

/// Everything one iteration actually did: the relabeling it applied, the
/// two liftings, each carrying its base configuration (which includes the
/// added point as the largest label), heights, and signs, and the final
/// label assigned to the first added point.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StageRecord {
    pub permutation: Vec<Label>,
    pub first: Lifting,
    pub second: Lifting,
    pub first_label: Label,
}

/// A completed construction, with enough data to replay and re-verify
/// every step. `label_map` sends as-constructed labels to the labels of
/// `final_config`, undoing the composed iteration relabelings, and
/// `neighborly` records the verified neighborliness level ⌊dim/2⌋.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConstructionCertificate {
    pub dim: usize,
    pub points: usize,
    pub seed: u64,
    pub base: PointConfiguration,
    pub stages: Vec<StageRecord>,
    pub final_config: PointConfiguration,
    pub facets: FacetSet,
    pub neighborly: usize,
    pub label_map: BTreeMap<Label, Label>,
}

/// The derived shape of a construction: seed dimension (2 or 3), seed point
/// count, and how many dimension-raising iterations run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PipelineShape {
    pub seed_dim: usize,
    pub seed_points: usize,
    pub iterations: usize,
}

/// Shape of the construction reaching `dim` dimensions and `points`
/// vertices: each iteration adds 2 to both, so the seed lives in dimension
/// `dim - 2*iterations` ∈ {2, 3}.
pub fn pipeline_shape(dim: usize, points: usize) -> Result<PipelineShape> {
    if dim < 2 {
        return Err(Error::InvalidParameter(
            "the target dimension must be at least 2".into(),
        ));
    }
    if points <= dim {
        return Err(Error::InvalidParameter(format!(
            "a {dim}-polytope needs at least {} vertices, got {points}",
            dim + 1
        )));
    }
    let iterations = (dim - 2) / 2;
    Ok(PipelineShape {
        seed_dim: dim - 2 * iterations,
        seed_points: points - 2 * iterations,
        iterations,
    })
}

/// The default seed configuration: `seed_points` points on the moment
/// curve t ↦ (t, t², …), labeled 1.. in curve order. It is in general and
/// convex position, and its convex hull is the cyclic polytope.
pub fn default_base(dim: usize, points: usize) -> Result<PointConfiguration> {
    let shape = pipeline_shape(dim, points)?;
    let rows = (1..=shape.seed_points)
        .map(|t| LabeledPoint {
            label: t as Label,
            point: Point {
                coords: (1..=shape.seed_dim)
                    .map(|e| Rat::int((t as i64).pow(e as u32)))
                    .collect(),
            },
        })
        .collect();
    PointConfiguration::new(shape.seed_dim, rows)
}

fn validate_base(base: &PointConfiguration, shape: &PipelineShape) -> Result<()> {
    if base.dim() != shape.seed_dim {
        return Err(Error::InvalidParameter(format!(
            "seed configuration must live in R^{}, got R^{}",
            shape.seed_dim,
            base.dim()
        )));
    }
    if base.len() != shape.seed_points {
        return Err(Error::InvalidParameter(format!(
            "seed configuration must have {} points, got {}",
            shape.seed_points,
            base.len()
        )));
    }
    let expected: Vec<Label> = (1..=shape.seed_points as Label).collect();
    if base.labels() != expected {
        return Err(Error::InvalidParameter(format!(
            "seed configuration must use labels 1..={}",
            shape.seed_points
        )));
    }
    if !is_general_position(base)? {
        return Err(Error::Degenerate(
            "seed configuration must be in general position".into(),
        ));
    }
    if convex_hull(base)?.vertices().len() != base.len() {
        return Err(Error::Degenerate(
            "seed configuration must be in convex position".into(),
        ));
    }
    Ok(())
}

fn permutation_map(perm: &[Label]) -> Result<BTreeMap<Label, Label>> {
    let m = perm.len() as Label;
    let mut seen = BTreeSet::new();
    let mut map = BTreeMap::new();
    for (i, &target) in perm.iter().enumerate() {
        if target == 0 || target > m || !seen.insert(target) {
            return Err(Error::InvalidParameter(format!(
                "{perm:?} is not a permutation of 1..={m}"
            )));
        }
        map.insert(i as Label + 1, target);
    }
    Ok(map)
}

fn identity_permutation(m: usize) -> Vec<Label> {
    (1..=m as Label).collect()
}

/// Positional signs over the constrained labels of `base` (everything past
/// the first dim+1 labels, in increasing order).
fn signs_from_positional(
    base: &PointConfiguration,
    given: &[Sign],
) -> Result<BTreeMap<Label, Sign>> {
    let labels = base.labels();
    let constrained = &labels[(base.dim() + 1).min(labels.len())..];
    if given.len() != constrained.len() {
        return Err(Error::InvalidParameter(format!(
            "expected {} lifting signs, got {}",
            constrained.len(),
            given.len()
        )));
    }
    if given.contains(&Sign::Zero) {
        return Err(Error::InvalidParameter(
            "lifting signs must be strictly + or -".into(),
        ));
    }
    Ok(constrained.iter().copied().zip(given.iter().copied()).collect())
}

/// Either validate a prescribed added point or draw integer-coordinate
/// points until the extended configuration is in general position.
fn resolve_added_point(
    given: Option<Point>,
    config: &PointConfiguration,
    label: Label,
    rng: &mut ChaCha8Rng,
) -> Result<Point> {
    if let Some(point) = given {
        if point.dim() != config.dim() {
            return Err(Error::DimensionMismatch(format!(
                "added point must live in R^{}, got R^{}",
                config.dim(),
                point.dim()
            )));
        }
        let extended = config.with_point(label, point.clone())?;
        if !is_general_position(&extended)? {
            return Err(Error::Degenerate(
                "prescribed added point is not in general position".into(),
            ));
        }
        return Ok(point);
    }
    for _ in 0..64 {
        let point = Point {
            coords: (0..config.dim()).map(|_| Rat::int(rng.gen_range(-999..=999))).collect(),
        };
        let extended = config.with_point(label, point.clone())?;
        if is_general_position(&extended)? {
            return Ok(point);
        }
    }
    Err(Error::Degenerate(
        "no generic added point found in 64 seeded draws".into(),
    ))
}

/// Composes the inverses of the iteration relabelings: the returned map
/// sends each as-constructed label back to the label its point carried
/// when it first entered the configuration.
fn undo_relabelings(stages: &[StageRecord], points: usize) -> Result<BTreeMap<Label, Label>> {
    let mut forward: BTreeMap<Label, Label> =
        (1..=points as Label).map(|l| (l, l)).collect();
    for stage in stages {
        let m = stage.permutation.len() as Label;
        let map = permutation_map(&stage.permutation)?;
        for current in forward.values_mut() {
            if *current <= m {
                *current = map[current];
            }
        }
    }
    Ok(forward.into_iter().map(|(natural, constructed)| (constructed, natural)).collect())
}

/// Applies each stage's `first_label` choice on top of the undo map: stage
/// i's first added point (label n₀+2i−1 after the undo) is renamed to the
/// chosen label, with the labels it displaces shifting up by one. Stages
/// apply in order, so a later stage's choice sees the earlier renamings.
fn compose_first_label_shifts(
    mut label_map: BTreeMap<Label, Label>,
    stages: &[StageRecord],
    base_points: usize,
    points: usize,
) -> Result<BTreeMap<Label, Label>> {
    for (i, stage) in stages.iter().enumerate() {
        let first_point = (base_points + 2 * i + 1) as Label;
        if stage.first_label < 1 || stage.first_label > first_point {
            return Err(Error::VerificationFailed(format!(
                "stage {i}: the first added point's label must lie in 1..={first_point}"
            )));
        }
        if stage.first_label == first_point {
            continue;
        }
        let shift = first_label_shift(points, first_point, stage.first_label);
        for natural in label_map.values_mut() {
            *natural = shift[natural];
        }
    }
    Ok(label_map)
}

/// The relabeling that renames `first_point` to `target` and shifts the
/// labels in `target..first_point` up by one; everything else is fixed.
fn first_label_shift(points: usize, first_point: Label, target: Label) -> BTreeMap<Label, Label> {
    (1..=points as Label)
        .map(|l| {
            let image = if l == first_point {
                target
            } else if l >= target && l < first_point {
                l + 1
            } else {
                l
            };
            (l, image)
        })
        .collect()
}

/// Runs the construction described by `spec` and returns its certificate.
///
/// Per iteration: relabel, add a point (largest label so far plus one),
/// take the first lexicographic lifting with the planned signs, add a
/// second point, and take an all-positive lifting. Added points default to
/// seeded random draws; their positions never influence the resulting
/// boundary because each enters as the largest label, whose lifted
/// orientations are pinned entirely by its sign condition. The certified
/// boundary is checked to be ⌊dim/2⌋-neighborly with every point a vertex.
pub fn construct_neighborly(spec: &PipelineSpec) -> Result<ConstructionCertificate> {
    let shape = pipeline_shape(spec.dim, spec.points)?;
    if spec.iterations.len() > shape.iterations {
        return Err(Error::InvalidParameter(format!(
            "spec plans {} iterations but the construction runs {}",
            spec.iterations.len(),
            shape.iterations
        )));
    }
    let base = match &spec.base {
        Some(given) => {
            validate_base(given, &shape)?;
            given.clone()
        }
        None => default_base(spec.dim, spec.points)?,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut config = base.clone();
    let mut stages = Vec::with_capacity(shape.iterations);
    for i in 0..shape.iterations {
        let plan = spec.iterations.get(i).cloned().unwrap_or_default();
        let m = config.len() as Label;

        let permutation = match plan.permutation {
            Some(p) => p,
            None => identity_permutation(m as usize),
        };
        config = config.relabeled(&permutation_map(&permutation)?)?;

        let first_added = resolve_added_point(plan.first_point, &config, m + 1, &mut rng)?;
        let first_base = config.with_point(m + 1, first_added)?;
        let first_signs = match plan.first_signs {
            Some(v) => signs_from_positional(&first_base, &v)?,
            None => positive_signs(&first_base),
        };
        // Doubling keeps the heights (and with them every later
        // determinant) small across the stacked lifts.
        let first = lex_lift_with_policy(&first_base, &first_signs, HeightPolicy::Doubling)?;
        let lifted = first.lifted_configuration()?;

        let second_added = resolve_added_point(plan.second_point, &lifted, m + 2, &mut rng)?;
        let second_base = lifted.with_point(m + 2, second_added)?;
        let second =
            lex_lift_with_policy(&second_base, &positive_signs(&second_base), HeightPolicy::Doubling)?;
        config = second.lifted_configuration()?;

        let first_label = plan.first_label.unwrap_or(m + 1);
        if first_label < 1 || first_label > m + 1 {
            return Err(Error::InvalidParameter(format!(
                "iteration {i}: the first added point's label must lie in 1..={}",
                m + 1
            )));
        }
        stages.push(StageRecord { permutation, first, second, first_label });
    }

    let label_map = compose_first_label_shifts(
        undo_relabelings(&stages, spec.points)?,
        &stages,
        base.len(),
        spec.points,
    )?;
    let final_config = config.relabeled(&label_map)?;
    let facets = convex_hull(&final_config)?;
    let neighborly = spec.dim / 2;
    if !facets.is_k_neighborly(neighborly)? {
        return Err(Error::InternalInvariant(format!(
            "constructed boundary is not {neighborly}-neighborly"
        )));
    }
    if facets.vertices().len() != spec.points {
        return Err(Error::InternalInvariant(
            "some constructed point is not a vertex of the boundary".into(),
        ));
    }
    Ok(ConstructionCertificate {
        dim: spec.dim,
        points: spec.points,
        seed: spec.seed,
        base,
        stages,
        final_config,
        facets,
        neighborly,
        label_map,
    })
}

fn check(condition: bool, detail: &str) -> Result<()> {
    if condition {
        Ok(())
    } else {
        Err(Error::VerificationFailed(detail.into()))
    }
}

/// Replays a certificate from its seed configuration and confirms every
/// recorded step: relabelings, both liftings per stage (zero heights,
/// sign conditions, positivity of the second lift), the undo map, the
/// final configuration, its hull, and the claimed neighborliness.
pub fn verify_certificate(cert: &ConstructionCertificate) -> Result<()> {
    let shape = pipeline_shape(cert.dim, cert.points)?;
    check(
        cert.stages.len() == shape.iterations,
        "stage count does not match the target dimension",
    )?;
    validate_base(&cert.base, &shape).map_err(|e| match e {
        Error::VerificationFailed(_) => e,
        other => Error::VerificationFailed(format!("seed configuration rejected: {other}")),
    })?;

    let mut config = cert.base.clone();
    for (i, stage) in cert.stages.iter().enumerate() {
        let m = config.len() as Label;
        check(
            stage.permutation.len() == m as usize,
            &format!("stage {i}: relabeling has the wrong length"),
        )?;
        let map = permutation_map(&stage.permutation)
            .map_err(|e| Error::VerificationFailed(format!("stage {i}: {e}")))?;
        config = config.relabeled(&map)?;

        let first_labels: Vec<Label> = (1..=m + 1).collect();
        check(
            stage.first.base.labels() == first_labels,
            &format!("stage {i}: first lifting has unexpected labels"),
        )?;
        check(
            stage.first.base.filtered(|l| l <= m)? == config,
            &format!("stage {i}: first lifting does not extend the relabeled configuration"),
        )?;
        check(
            verify_lift(&stage.first, None)?,
            &format!("stage {i}: first lifting fails its side conditions"),
        )?;
        let lifted = stage.first.lifted_configuration()?;

        let second_labels: Vec<Label> = (1..=m + 2).collect();
        check(
            stage.second.base.labels() == second_labels,
            &format!("stage {i}: second lifting has unexpected labels"),
        )?;
        check(
            stage.second.base.filtered(|l| l <= m + 1)? == lifted,
            &format!("stage {i}: second lifting does not extend the first"),
        )?;
        check(
            stage.second.signs.values().all(|s| *s == Sign::Pos),
            &format!("stage {i}: second lifting must be all-positive"),
        )?;
        check(
            verify_lift(&stage.second, None)?,
            &format!("stage {i}: second lifting fails its side conditions"),
        )?;
        config = stage.second.lifted_configuration()?;
    }

    let label_map = compose_first_label_shifts(
        undo_relabelings(&cert.stages, cert.points)?,
        &cert.stages,
        cert.base.len(),
        cert.points,
    )?;
    check(
        cert.label_map == label_map,
        "label map does not undo the relabelings and apply the label choices",
    )?;
    check(
        cert.final_config == config.relabeled(&label_map)?,
        "final configuration does not match the replay",
    )?;
    check(
        cert.facets == convex_hull(&cert.final_config)?,
        "certified facets do not match the hull of the final configuration",
    )?;
    check(
        cert.neighborly == cert.dim / 2,
        "claimed neighborliness level is not ⌊dim/2⌋",
    )?;
    check(
        cert.facets.is_k_neighborly(cert.neighborly)?,
        "certified boundary is not as neighborly as claimed",
    )?;
    check(
        cert.facets.vertices().len() == cert.points,
        "some certified point is not a vertex",
    )?;
    Ok(())
}

/// Re-runs the final stage's first lifting with unit-ball circumball
/// conditions added, using the recorded base and signs. Its lifted
/// configuration has the same orientations as the recorded one, and its
/// Delaunay triangulation matches the lexicographic structure.
pub fn final_stage_ball_lifting(cert: &ConstructionCertificate) -> Result<Lifting> {
    let stage = cert.stages.last().ok_or_else(|| {
        Error::Unsupported("the construction has no lifting stages to make ball-compatible".into())
    })?;
    k_lift(&stage.first.base, &stage.first.signs, &KBody::unit_ball())
}

/// Builds an inscribed realization of a certified boundary: all vertices
/// on the unit sphere, hull equal to the certified facets.
///
/// In dimension ≥ 4 the final stage's first lifting is re-run with
/// unit-ball conditions; its lifted points map onto the sphere by inverse
/// stereographic projection and the projection center replaces the last
/// added point. Dimension 2 walks the polygon boundary onto a line and
/// inscribes it the same way. Dimension 3 has no such route.
pub fn inscribed_realization(cert: &ConstructionCertificate) -> Result<InscribedRealization> {
    match cert.dim {
        0 | 1 => Err(Error::InvalidParameter("nothing to inscribe below dimension 2".into())),
        2 => polygon_realization(cert),
        3 => Err(Error::Unsupported(
            "no inscription route for 3-dimensional targets".into(),
        )),
        _ => sphere_realization(cert),
    }
}

fn sphere_realization(cert: &ConstructionCertificate) -> Result<InscribedRealization> {
    let lifting = final_stage_ball_lifting(cert)?;
    let lifted = lifting.lifted_configuration()?;
    let pole_label = cert.points as Label;
    if lifted.max_label() != Some(pole_label - 1) {
        return Err(Error::InvalidLabels(
            "final stage does not cover all labels below the last added point".into(),
        ));
    }
    let mut rows: Vec<LabeledPoint> = lifted
        .iter()
        .map(|lp| LabeledPoint {
            label: lp.label,
            point: inverse_stereographic(&lp.point),
        })
        .collect();
    let mut pole = vec![Rat::zero(); cert.dim];
    pole[cert.dim - 1] = Rat::one();
    rows.push(LabeledPoint { label: pole_label, point: Point { coords: pole } });
    let vertices = PointConfiguration::new(cert.dim, rows)?.relabeled(&cert.label_map)?;
    let facets = convex_hull(&vertices)?;
    let realization =
        InscribedRealization { vertices, body: KBody::unit_ball(), facets };
    if !verify_inscribed(&realization, &cert.facets)? {
        return Err(Error::InternalInvariant(
            "inscribed realization does not reproduce the certified boundary".into(),
        ));
    }
    Ok(realization)
}

/// Dimension-2 route: order the polygon's vertices along its boundary with
/// the last label removed, place them on a line in that order, and
/// inscribe the line configuration on the circle with the removed label as
/// the projection center.
fn polygon_realization(cert: &ConstructionCertificate) -> Result<InscribedRealization> {
    let pole = cert.points as Label;
    let mut adjacency: BTreeMap<Label, BTreeSet<Label>> = BTreeMap::new();
    for facet in &cert.facets.facets {
        let [a, b] = facet.as_slice() else {
            return Err(Error::InvalidParameter(
                "two-dimensional boundaries must consist of edges".into(),
            ));
        };
        adjacency.entry(*a).or_default().insert(*b);
        adjacency.entry(*b).or_default().insert(*a);
    }
    let not_a_cycle =
        || Error::InvalidParameter("certified boundary is not a polygon cycle".into());
    let pole_neighbors = adjacency.get(&pole).ok_or_else(not_a_cycle)?;
    if pole_neighbors.len() != 2 || adjacency.values().any(|n| n.len() != 2) {
        return Err(not_a_cycle());
    }
    let start = *pole_neighbors.iter().next().unwrap();
    let mut order = vec![start];
    let (mut previous, mut current) = (pole, start);
    while order.len() < cert.points - 1 {
        let next = *adjacency[&current]
            .iter()
            .find(|&&l| l != previous && l != pole)
            .ok_or_else(not_a_cycle)?;
        previous = current;
        current = next;
        order.push(current);
    }
    if !adjacency[&pole].contains(&current)
        || order.iter().copied().collect::<BTreeSet<_>>().len() != order.len()
    {
        return Err(not_a_cycle());
    }
    let rows = order
        .iter()
        .enumerate()
        .map(|(i, &label)| LabeledPoint {
            label,
            point: Point { coords: vec![Rat::int(i as i64)] },
        })
        .collect();
    let line = PointConfiguration::new(1, rows)?;
    let realization = brown_polytope(&line)?;
    if !verify_inscribed(&realization, &cert.facets)? {
        return Err(Error::InternalInvariant(
            "inscribed polygon does not reproduce the certified boundary".into(),
        ));
    }
    Ok(realization)
}

/// Number of labeled combinatorial types guaranteed by the counting
/// argument: ∏_{i=1}^{dim/2} ∏_{j=2i+1}^{points-dim-1+2i} j. Requires an
/// even dimension ≥ 2 and more points than the dimension.
pub fn lower_bound(points: usize, dim: usize) -> Result<BigInt> {
    if dim < 2 || dim % 2 != 0 {
        return Err(Error::InvalidParameter(
            "the counting bound needs an even dimension of at least 2".into(),
        ));
    }
    if points <= dim {
        return Err(Error::InvalidParameter(
            "the counting bound needs more points than the dimension".into(),
        ));
    }
    let mut product = BigInt::one();
    for i in 1..=dim / 2 {
        for j in (2 * i + 1)..=(points - dim - 1 + 2 * i) {
            product *= j;
        }
    }
    Ok(product)
}

fn bound_shape(points: usize, dim: usize) -> Result<(f64, f64)> {
    // Shared validation with `lower_bound`, plus the closed form's base
    // and exponent.
    lower_bound(points, dim)?;
    let base = (points as f64 - 1.0) / 1.5f64.exp();
    let exponent = (dim / 2) as f64 * (points - dim - 1) as f64;
    Ok((base, exponent))
}

/// The closed-form comparison value ((points-1)/e^{3/2})^{dim(points-dim-1)/2}.
pub fn lower_bound_closed_form(points: usize, dim: usize) -> Result<f64> {
    let (base, exponent) = bound_shape(points, dim)?;
    Ok(base.powf(exponent))
}

/// Whether the exact counting bound dominates its closed form, compared in
/// logarithms with a small floating-point margin.
pub fn lower_bound_dominates_closed_form(points: usize, dim: usize) -> Result<bool> {
    let (base, exponent) = bound_shape(points, dim)?;
    let mut ln_product = 0.0f64;
    for i in 1..=dim / 2 {
        for j in (2 * i + 1)..=(points - dim - 1 + 2 * i) {
            ln_product += (j as f64).ln();
        }
    }
    Ok(ln_product >= exponent * base.ln() - 1e-6)
}

/// How a counting run picks the relabelings of the seed configuration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PermutationChoice {
    /// Every permutation of the seed labels.
    All,
    /// A seeded random sample of the given size.
    Random(usize),
}

/// Which lifting-sign vectors a counting run enumerates for the first lift
/// of every iteration; second lifts stay positive throughout.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SignChoice {
    Positive,
    All,
}

/// The configured enumeration cap (see [`ENUMERATION_CAP_VAR`]).
pub fn enumeration_cap() -> usize {
    std::env::var(ENUMERATION_CAP_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

/// Builds the spec family a counting run evaluates: one spec per seed
/// permutation, per final label of the first iteration's added point, and
/// per combination of first-lift sign vectors. When the pipeline iterates,
/// the permutation is the order in which the first lift treats the seed
/// points; otherwise it relabels the seed directly and there is no label
/// choice. The total is checked against the enumeration cap before
/// anything is materialized.
pub fn enumeration_specs(
    dim: usize,
    points: usize,
    permutations: PermutationChoice,
    signs: SignChoice,
    seed: u64,
) -> Result<Vec<PipelineSpec>> {
    let shape = pipeline_shape(dim, points)?;
    let n0 = shape.seed_points;

    // With at least one iteration, the first added point's final label is
    // swept alongside the order choice; without iterations there is no
    // added point and the label factor collapses.
    let label_choices = if shape.iterations == 0 { 1 } else { n0 + 1 };
    let permutation_count = match permutations {
        PermutationChoice::All => (1..=n0)
            .try_fold(1usize, |acc, k| acc.checked_mul(k))
            .and_then(|f| f.checked_mul(label_choices)),
        PermutationChoice::Random(k) => Some(k),
    };
    let constrained = points - dim;
    let vectors_per_iteration = match signs {
        SignChoice::Positive => Some(1usize),
        SignChoice::All => 1usize.checked_shl((constrained * shape.iterations).min(64) as u32),
    };
    let total = permutation_count
        .zip(vectors_per_iteration)
        .and_then(|(p, s)| p.checked_mul(s));
    let cap = enumeration_cap();
    match total {
        Some(t) if t <= cap => {}
        _ => {
            return Err(Error::InvalidParameter(format!(
                "enumeration would exceed the cap of {cap} specs; sample fewer permutations \
                 or raise {ENUMERATION_CAP_VAR}"
            )));
        }
    }

    let base = default_base(dim, points)?;
    let choices: Vec<(Vec<Label>, Option<Label>)> = match permutations {
        PermutationChoice::All => {
            let perms = (1..=n0 as Label).permutations(n0);
            if shape.iterations == 0 {
                perms.map(|p| (p, None)).collect()
            } else {
                perms
                    .flat_map(|p| {
                        (1..=label_choices as Label).map(move |l| (p.clone(), Some(l)))
                    })
                    .collect()
            }
        }
        PermutationChoice::Random(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..k)
                .map(|_| {
                    let mut p = identity_permutation(n0);
                    p.shuffle(&mut rng);
                    let label = (shape.iterations > 0)
                        .then(|| rng.gen_range(1..=label_choices as Label));
                    (p, label)
                })
                .collect()
        }
    };

    let sign_plans: Vec<Vec<IterationPlan>> = match signs {
        SignChoice::Positive => vec![Vec::new()],
        SignChoice::All => {
            let vectors: Vec<Vec<Sign>> = (0u64..1 << constrained)
                .map(|mask| {
                    (0..constrained)
                        .map(|bit| if mask >> bit & 1 == 0 { Sign::Pos } else { Sign::Neg })
                        .collect()
                })
                .collect();
            std::iter::repeat(vectors.iter())
                .take(shape.iterations)
                .multi_cartesian_product()
                .map(|combo| {
                    combo
                        .into_iter()
                        .map(|v| IterationPlan { first_signs: Some(v.clone()), ..Default::default() })
                        .collect()
                })
                .collect()
        }
    };
    // A cartesian product over zero iterations has no sign slots at all.
    let sign_plans = if sign_plans.is_empty() { vec![Vec::new()] } else { sign_plans };

    let mut specs = Vec::new();
    for (perm, first_label) in &choices {
        for plans in &sign_plans {
            let spec = if shape.iterations == 0 {
                // Nothing is lifted, so the only choice left is which label
                // sits where on the seed curve.
                PipelineSpec {
                    dim,
                    points,
                    seed,
                    base: Some(base.relabeled(&permutation_map(perm)?)?),
                    iterations: plans.clone(),
                }
            } else {
                // The permutation chooses the order in which the first lift
                // treats the seed points, and `first_label` where its added
                // point lands in the final labeling; together they span the
                // distinct labeled boundaries one iteration can reach.
                let mut iterations = plans.clone();
                if iterations.is_empty() {
                    iterations = vec![IterationPlan::default(); shape.iterations];
                }
                iterations[0].permutation = Some(perm.clone());
                iterations[0].first_label = *first_label;
                PipelineSpec { dim, points, seed, base: None, iterations }
            };
            specs.push(spec);
        }
    }
    Ok(specs)
}

/// Outcome of a counting run: the distinct labeled boundaries found, each
/// with the first spec that produced it, plus the specs that failed.
#[derive(Clone, Debug, Default)]
pub struct CountReport {
    pub types: BTreeMap<FacetSet, PipelineSpec>,
    pub errors: Vec<(usize, String)>,
}

/// Runs every spec and collects the distinct labeled facet sets. Specs run
/// in parallel; the report is folded in spec order, so the witness for each
/// type is the earliest spec producing it and reruns are byte-identical.
pub fn count_labeled_types(
    dim: usize,
    points: usize,
    specs: &[PipelineSpec],
) -> Result<CountReport> {
    let cap = enumeration_cap();
    if specs.len() > cap {
        return Err(Error::InvalidParameter(format!(
            "{} specs exceed the enumeration cap of {cap}",
            specs.len()
        )));
    }
    if let Some(bad) = specs.iter().find(|s| s.dim != dim || s.points != points) {
        return Err(Error::InvalidParameter(format!(
            "spec for ({}, {}) points mixed into a ({dim}, {points}) count",
            bad.dim, bad.points
        )));
    }
    let outcomes: Vec<Result<FacetSet>> = specs
        .par_iter()
        .map(|spec| construct_neighborly(spec).map(|cert| cert.facets))
        .collect();
    let mut report = CountReport::default();
    for (i, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Ok(facets) => {
                report.types.entry(facets).or_insert_with(|| specs[i].clone());
            }
            Err(e) => report.errors.push((i, e.to_string())),
        }
    }
    Ok(report)
}

fn stacked_configuration(dim: usize, axis: &[Rat]) -> Result<PointConfiguration> {
    let mut rows = Vec::with_capacity(dim + axis.len());
    for i in 1..dim {
        let mut coords = vec![Rat::zero(); dim];
        coords[i - 1] = Rat::one();
        rows.push(LabeledPoint { label: i as Label, point: Point { coords } });
    }
    let mut opposite = vec![-Rat::one(); dim];
    opposite[dim - 1] = Rat::zero();
    rows.push(LabeledPoint { label: dim as Label, point: Point { coords: opposite } });
    for (j, height) in axis.iter().enumerate() {
        let mut coords = vec![Rat::zero(); dim];
        coords[dim - 1] = height.clone();
        rows.push(LabeledPoint { label: (dim + j + 1) as Label, point: Point { coords } });
    }
    PointConfiguration::new(dim, rows)
}

fn expected_stacking_cells(dim: usize, count: usize) -> BTreeSet<Vec<Label>> {
    let basis: Vec<Label> = (1..=dim as Label).collect();
    let mut cells = BTreeSet::new();
    for i in 1..count {
        let mut cell = basis.clone();
        cell.push((dim + i) as Label);
        cell.push((dim + i + 1) as Label);
        cells.insert(cell);
    }
    let mut last = basis;
    last.push((dim + count) as Label);
    last.push((dim + count + 1) as Label);
    cells.insert(last);
    cells
}

fn stacking_order_holds(dim: usize, axis: &[Rat]) -> Result<bool> {
    let config = stacked_configuration(dim, axis)?;
    let Ok(realization) = brown_polytope(&config) else {
        return Ok(false);
    };
    let Ok(placing) = placing_triangulation(&realization.vertices) else {
        return Ok(false);
    };
    Ok(placing.unused.is_empty()
        && placing.cells == expected_stacking_cells(dim, axis.len())
        && dual_graph(&placing).is_path())
}

/// Builds the stacked inscribed polytope over `dim` base directions with
/// `count` collinear apex points: basis vectors, their negated sum, and a
/// doubling sequence of heights on the remaining axis, all mapped onto the
/// unit sphere. The result has dim·count + 2 facets and its insertion-order
/// triangulation is a path of simplices, one per stacking step.
pub fn stacked_universal(dim: usize, count: usize) -> Result<InscribedRealization> {
    if dim < 2 {
        return Err(Error::InvalidParameter(
            "the stacked family needs dimension at least 2".into(),
        ));
    }
    if count < 1 {
        return Err(Error::InvalidParameter(
            "the stacked family needs at least one apex point".into(),
        ));
    }
    let mut axis = vec![Rat::one()];
    for _ in 2..=count {
        let mut candidate = Rat::int(2) * axis.last().unwrap().clone();
        let mut accepted = false;
        for _ in 0..64 {
            let mut trial = axis.clone();
            trial.push(candidate.clone());
            if stacking_order_holds(dim, &trial)? {
                axis = trial;
                accepted = true;
                break;
            }
            candidate = Rat::int(2) * candidate;
        }
        if !accepted {
            return Err(Error::Degenerate(
                "no admissible apex height found after 64 doublings".into(),
            ));
        }
    }

    let config = stacked_configuration(dim, &axis)?;
    let realization = brown_polytope(&config)?;
    if realization.facets.facets.len() != dim * count + 2 {
        return Err(Error::InternalInvariant(format!(
            "stacked family produced {} facets instead of {}",
            realization.facets.facets.len(),
            dim * count + 2
        )));
    }
    if !verify_inscribed(&realization, &realization.facets)? {
        return Err(Error::InternalInvariant(
            "stacked family left the unit sphere".into(),
        ));
    }
    if !stacking_order_holds(dim, &axis)? {
        return Err(Error::InternalInvariant(
            "stacked family lost its insertion-order path structure".into(),
        ));
    }
    Ok(realization)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull::gale_evenness_facets;
    use crate::lift::{delaunay_triangulation, is_neighborly_triangulation};

    fn spec(dim: usize, points: usize, seed: u64) -> PipelineSpec {
        PipelineSpec { dim, points, seed, base: None, iterations: Vec::new() }
    }

    #[test]
    fn recovers_the_cyclic_polytope_in_dimension_four() {
        for n in [6usize, 7] {
            let cert = construct_neighborly(&spec(4, n, 3)).unwrap();
            assert_eq!(cert.facets, gale_evenness_facets(n, 4).unwrap(), "n = {n}");
            assert_eq!(cert.neighborly, 2);
            verify_certificate(&cert).unwrap();
        }
    }

    #[test]
    fn pentagon_certificates_have_polygon_boundaries() {
        let cert = construct_neighborly(&spec(2, 5, 0)).unwrap();
        assert!(cert.stages.is_empty());
        assert_eq!(cert.facets, gale_evenness_facets(5, 2).unwrap());
        verify_certificate(&cert).unwrap();

        let realization = inscribed_realization(&cert).unwrap();
        assert_eq!(realization.facets, cert.facets);
        for lp in realization.vertices.iter() {
            assert_eq!(lp.point.norm_sq(), Rat::one());
        }
    }

    #[test]
    fn added_points_never_change_the_boundary() {
        // Every added point enters as the largest label, so its lifted
        // orientations are pinned by its sign condition alone and the
        // boundary cannot depend on the seed.
        let facets: Vec<FacetSet> = (1..=3)
            .map(|seed| construct_neighborly(&spec(4, 7, seed)).unwrap().facets)
            .collect();
        assert_eq!(facets[0], facets[1]);
        assert_eq!(facets[1], facets[2]);
    }

    #[test]
    fn identical_specs_construct_identical_certificates() {
        let a = construct_neighborly(&spec(4, 7, 99)).unwrap();
        let b = construct_neighborly(&spec(4, 7, 99)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn a_relabeled_iteration_still_certifies() {
        let mut s = spec(4, 6, 11);
        s.iterations = vec![IterationPlan {
            permutation: Some(vec![1, 3, 2, 4]),
            ..Default::default()
        }];
        let cert = construct_neighborly(&s).unwrap();
        verify_certificate(&cert).unwrap();
        assert_eq!(cert.stages[0].permutation, vec![1, 3, 2, 4]);
        let expected: BTreeMap<Label, Label> =
            [(1, 1), (3, 2), (2, 3), (4, 4), (5, 5), (6, 6)].into_iter().collect();
        assert_eq!(cert.label_map, expected);
    }

    #[test]
    fn choosing_the_added_points_label_relabels_the_boundary() {
        let plain = construct_neighborly(&spec(4, 6, 17)).unwrap();
        for target in 1..=5u32 {
            let mut s = spec(4, 6, 17);
            s.iterations =
                vec![IterationPlan { first_label: Some(target), ..Default::default() }];
            let cert = construct_neighborly(&s).unwrap();
            verify_certificate(&cert).unwrap();
            assert_eq!(cert.stages[0].first_label, target);

            // The choice renames point 5 to `target` and shifts the labels
            // it displaces up by one; the boundary must match the plain
            // construction under exactly that renaming.
            let shift = first_label_shift(6, 5, target);
            let renamed: BTreeSet<Vec<Label>> = plain
                .facets
                .facets
                .iter()
                .map(|f| {
                    let mut facet: Vec<Label> = f.iter().map(|l| shift[l]).collect();
                    facet.sort_unstable();
                    facet
                })
                .collect();
            assert_eq!(cert.facets.facets, renamed, "target {target}");
        }
    }

    #[test]
    fn the_desk_scale_enumeration_finds_five_types_on_six_points() {
        let specs =
            enumeration_specs(4, 6, PermutationChoice::All, SignChoice::Positive, 0).unwrap();
        assert_eq!(specs.len(), 120);
        let report = count_labeled_types(4, 6, &specs).unwrap();
        assert!(report.errors.is_empty(), "{:?}", report.errors);
        assert_eq!(report.types.len(), 5);
    }

    #[test]
    fn prescribed_added_points_are_honored() {
        let mut s = spec(4, 6, 1);
        s.iterations = vec![IterationPlan {
            first_point: Some(Point { coords: vec![Rat::zero(), Rat::one()] }),
            ..Default::default()
        }];
        let cert = construct_neighborly(&s).unwrap();
        assert_eq!(
            cert.stages[0].first.base.point(5).unwrap().coords,
            vec![Rat::zero(), Rat::one()]
        );
        verify_certificate(&cert).unwrap();
    }

    #[test]
    fn four_dimensional_certificates_inscribe_on_the_sphere() {
        let cert = construct_neighborly(&spec(4, 6, 7)).unwrap();
        let realization = inscribed_realization(&cert).unwrap();
        assert_eq!(realization.facets, cert.facets);
        for lp in realization.vertices.iter() {
            assert_eq!(lp.point.norm_sq(), Rat::one(), "label {}", lp.label);
        }
        let pole = realization.vertices.point(6).unwrap();
        assert_eq!(
            pole.coords,
            vec![Rat::zero(), Rat::zero(), Rat::zero(), Rat::one()]
        );
    }

    #[test]
    fn three_dimensional_targets_cannot_be_inscribed() {
        let cert = construct_neighborly(&spec(3, 6, 0)).unwrap();
        assert!(matches!(inscribed_realization(&cert), Err(Error::Unsupported(_))));
    }

    #[test]
    fn final_stage_ball_lifting_matches_the_plain_heights() {
        let cert = construct_neighborly(&spec(4, 7, 5)).unwrap();
        let ball = final_stage_ball_lifting(&cert).unwrap();
        let plain = &cert.stages.last().unwrap().first;
        assert_eq!(ball.base, plain.base);
        assert_eq!(ball.signs, plain.signs);
        assert_eq!(
            crate::exact::chirotope_of(&ball.lifted_configuration().unwrap()).unwrap(),
            crate::exact::chirotope_of(&plain.lifted_configuration().unwrap()).unwrap()
        );
    }

    #[test]
    fn ball_lifted_configurations_have_neighborly_delaunay_triangulations() {
        let cert = construct_neighborly(&spec(4, 7, 2)).unwrap();
        let lifted = final_stage_ball_lifting(&cert).unwrap().lifted_configuration().unwrap();
        let delaunay = delaunay_triangulation(&lifted).unwrap();
        assert!(is_neighborly_triangulation(&delaunay).unwrap());
        assert_eq!(delaunay, placing_triangulation(&lifted).unwrap());
    }

    #[test]
    fn lower_bound_matches_the_frozen_table() {
        assert_eq!(lower_bound(5, 2).unwrap(), BigInt::from(12));
        assert_eq!(lower_bound(6, 4).unwrap(), BigInt::from(15));
        assert_eq!(lower_bound(8, 4).unwrap(), BigInt::from(12600));
        assert_eq!(lower_bound(5, 4).unwrap(), BigInt::one());
        assert!(matches!(lower_bound(8, 3), Err(Error::InvalidParameter(_))));
        assert!(matches!(lower_bound(4, 4), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn lower_bound_dominates_its_closed_form_on_spot_checks() {
        for (points, dim) in [(10, 4), (20, 6), (40, 12), (39, 38)] {
            assert!(
                lower_bound_dominates_closed_form(points, dim).unwrap(),
                "({points}, {dim})"
            );
            assert!(lower_bound_closed_form(points, dim).unwrap().is_finite());
        }
    }

    #[test]
    fn counting_relabeled_pentagon_seeds_finds_twelve_types() {
        let specs = enumeration_specs(2, 5, PermutationChoice::All, SignChoice::Positive, 0)
            .unwrap();
        assert_eq!(specs.len(), 120);
        let report = count_labeled_types(2, 5, &specs).unwrap();
        assert!(report.errors.is_empty());
        assert_eq!(BigInt::from(report.types.len()), lower_bound(5, 2).unwrap());
    }

    #[test]
    fn sign_enumeration_spans_every_vector_of_the_single_iteration() {
        let specs =
            enumeration_specs(4, 6, PermutationChoice::Random(3), SignChoice::All, 42).unwrap();
        // 3 sampled relabelings × 2² sign vectors for the one iteration.
        assert_eq!(specs.len(), 12);
        let report = count_labeled_types(4, 6, &specs).unwrap();
        assert!(report.errors.is_empty(), "{:?}", report.errors);
        assert!(!report.types.is_empty());
    }

    #[test]
    fn enumeration_respects_the_cap() {
        // 10! = 3,628,800 permutations exceed the default cap.
        assert!(matches!(
            enumeration_specs(2, 10, PermutationChoice::All, SignChoice::Positive, 0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn tampered_certificates_fail_verification() {
        let cert = construct_neighborly(&spec(4, 6, 13)).unwrap();

        let mut wrong_level = cert.clone();
        wrong_level.neighborly = 1;
        assert!(matches!(
            verify_certificate(&wrong_level),
            Err(Error::VerificationFailed(_))
        ));

        let mut wrong_facets = cert.clone();
        let removed = wrong_facets.facets.facets.iter().next().cloned().unwrap();
        wrong_facets.facets.facets.remove(&removed);
        assert!(matches!(
            verify_certificate(&wrong_facets),
            Err(Error::VerificationFailed(_))
        ));

        let mut wrong_height = cert.clone();
        let heights = &mut wrong_height.stages[0].first.heights;
        let key = *heights.keys().last().unwrap();
        let bumped = heights[&key].clone() + Rat::one();
        heights.insert(key, bumped);
        assert!(matches!(
            verify_certificate(&wrong_height),
            Err(Error::VerificationFailed(_))
        ));

        let mut wrong_map = cert.clone();
        wrong_map.label_map.insert(1, 2);
        wrong_map.label_map.insert(2, 1);
        assert!(matches!(
            verify_certificate(&wrong_map),
            Err(Error::VerificationFailed(_))
        ));

        let mut wrong_label = cert.clone();
        wrong_label.stages[0].first_label = 2;
        assert!(matches!(
            verify_certificate(&wrong_label),
            Err(Error::VerificationFailed(_))
        ));

        let mut label_out_of_range = cert;
        label_out_of_range.stages[0].first_label = 9;
        assert!(matches!(
            verify_certificate(&label_out_of_range),
            Err(Error::VerificationFailed(_))
        ));
    }

    #[test]
    fn spec_validation_rejects_bad_input() {
        assert!(matches!(
            construct_neighborly(&spec(1, 4, 0)),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            construct_neighborly(&spec(4, 4, 0)),
            Err(Error::InvalidParameter(_))
        ));

        let mut too_many_plans = spec(4, 6, 0);
        too_many_plans.iterations = vec![IterationPlan::default(); 2];
        assert!(matches!(
            construct_neighborly(&too_many_plans),
            Err(Error::InvalidParameter(_))
        ));

        let mut wrong_base = spec(4, 6, 0);
        wrong_base.base = Some(default_base(4, 8).unwrap());
        assert!(matches!(
            construct_neighborly(&wrong_base),
            Err(Error::InvalidParameter(_))
        ));

        let mut bad_permutation = spec(4, 6, 0);
        bad_permutation.iterations = vec![IterationPlan {
            permutation: Some(vec![1, 1, 2, 3]),
            ..Default::default()
        }];
        assert!(matches!(
            construct_neighborly(&bad_permutation),
            Err(Error::InvalidParameter(_))
        ));

        let mut bad_signs = spec(4, 6, 0);
        bad_signs.iterations = vec![IterationPlan {
            first_signs: Some(vec![Sign::Pos]),
            ..Default::default()
        }];
        assert!(matches!(
            construct_neighborly(&bad_signs),
            Err(Error::InvalidParameter(_))
        ));

        for bad_label in [0u32, 6] {
            let mut bad = spec(4, 6, 0);
            bad.iterations = vec![IterationPlan {
                first_label: Some(bad_label),
                ..Default::default()
            }];
            assert!(matches!(
                construct_neighborly(&bad),
                Err(Error::InvalidParameter(_))
            ));
        }
    }

    #[test]
    fn stacked_realizations_sit_on_the_sphere_in_stacking_order() {
        for (dim, count) in [(2usize, 2usize), (2, 4), (3, 3)] {
            let realization = stacked_universal(dim, count).unwrap();
            assert_eq!(
                realization.facets.facets.len(),
                dim * count + 2,
                "({dim}, {count})"
            );
            for lp in realization.vertices.iter() {
                assert_eq!(lp.point.norm_sq(), Rat::one());
            }
            let placing = placing_triangulation(&realization.vertices).unwrap();
            assert_eq!(placing.cells.len(), count);
            assert!(dual_graph(&placing).is_path());
        }
    }

    #[test]
    fn specs_and_certificates_round_trip_through_json() {
        let mut s = spec(4, 6, 21);
        s.iterations = vec![IterationPlan {
            permutation: Some(vec![2, 1, 3, 4]),
            first_signs: Some(vec![Sign::Neg, Sign::Pos]),
            ..Default::default()
        }];
        let spec_json = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<PipelineSpec>(&spec_json).unwrap(), s);

        let cert = construct_neighborly(&s).unwrap();
        let cert_json = serde_json::to_string(&cert).unwrap();
        assert_eq!(
            serde_json::from_str::<ConstructionCertificate>(&cert_json).unwrap(),
            cert
        );
    }
}
