//! Convex hulls of general-position configurations by incremental insertion,
//! plus the facet-level combinatorics built on them: face visibility,
//! k-neighborliness, cyclic-polytope facets by the evenness rule, and
//! f-vectors.
//!
//! Every facet carries a certificate: the label of an inserted point strictly
//! on its inner side together with the sign of the corresponding orientation
//! determinant. Side-of-facet questions are answered by comparing exact
//! orientation signs against that certificate, so no normal vectors are ever
//! materialized and no facet decision can silently degenerate.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{orientation, Label, LabeledPoint, Point, PointConfiguration, Sign};

/// Sorted vertex labels of one facet of a simplicial polytope.
pub type Facet = Vec<Label>;

/// The facet description of a simplicial d-polytope over labeled vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct FacetSet {
    pub dim: usize,
    pub facets: BTreeSet<Facet>,
}

impl FacetSet {
    /// Labels appearing in at least one facet, i.e. the vertex set.
    pub fn vertices(&self) -> BTreeSet<Label> {
        self.facets.iter().flatten().copied().collect()
    }

    /// True iff `labels` (sorted or not) is contained in some facet.
    pub fn spans_face(&self, labels: &[Label]) -> bool {
        self.facets
            .iter()
            .any(|facet| labels.iter().all(|l| facet.binary_search(l).is_ok()))
    }

    /// Every ridge (facet minus one vertex) with the number of facets it
    /// lies in. On the boundary of a simplicial polytope every ridge lies
    /// in exactly two facets.
    pub fn ridge_degrees(&self) -> BTreeMap<Vec<Label>, usize> {
        let mut degrees = BTreeMap::new();
        for facet in &self.facets {
            for omit in 0..facet.len() {
                let mut ridge = facet.clone();
                ridge.remove(omit);
                *degrees.entry(ridge).or_insert(0) += 1;
            }
        }
        degrees
    }

    /// Face counts (f_0, ..., f_{dim-1}). For a simplicial polytope the
    /// proper faces are exactly the nonempty subsets of facets.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut faces: Vec<BTreeSet<Vec<Label>>> = vec![BTreeSet::new(); self.dim];
        for facet in &self.facets {
            for size in 1..=facet.len() {
                for subset in facet.iter().copied().combinations(size) {
                    faces[size - 1].insert(subset);
                }
            }
        }
        faces.iter().map(|level| level.len() as u64).collect()
    }

    /// True iff every k-subset of the vertex set spans a face.
    pub fn is_k_neighborly(&self, k: usize) -> Result<bool> {
        if k == 0 || k > self.dim {
            return Err(Error::InvalidParameter(format!(
                "neighborliness order must be in 1..={}, got {k}",
                self.dim
            )));
        }
        let vertices: Vec<Label> = self.vertices().into_iter().collect();
        if vertices.len() < k {
            return Err(Error::TooFewPoints(format!(
                "{k}-neighborliness needs at least {k} vertices, have {}",
                vertices.len()
            )));
        }
        Ok(vertices
            .into_iter()
            .combinations(k)
            .all(|subset| self.spans_face(&subset)))
    }
}

/// True iff the two facet descriptions agree as labeled complexes.
pub fn same_labeled_type(a: &FacetSet, b: &FacetSet) -> bool {
    a.dim == b.dim && a.facets == b.facets
}

/// One hull facet with its interior certificate: `inner_witness` is the
/// label of an inserted point strictly on the polytope side of the facet
/// hyperplane, and `inner_sign` the orientation sign of (facet, witness).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientedFacet {
    pub labels: Facet,
    pub inner_witness: Label,
    pub inner_sign: Sign,
}

/// Incremental hull state. Doubles as the placing-triangulation engine:
/// every insertion outside the current hull cones the new point over its
/// visible facets and records those cones as cells.
pub(crate) struct HullEngine {
    dim: usize,
    by_label: BTreeMap<Label, Point>,
    facets: BTreeMap<Facet, (Label, Sign)>,
    pub(crate) cells: Vec<Vec<Label>>,
    pub(crate) unused: Vec<Label>,
}

impl HullEngine {
    /// Builds the hull of `points` (labels must be distinct, dimensions equal
    /// to `dim`), inserting in the order given.
    pub(crate) fn run(dim: usize, points: &[LabeledPoint]) -> Result<HullEngine> {
        if points.len() < dim + 1 {
            return Err(Error::TooFewPoints(format!(
                "a hull in R^{dim} needs at least {} points, got {}",
                dim + 1,
                points.len()
            )));
        }
        let mut engine = HullEngine {
            dim,
            by_label: BTreeMap::new(),
            facets: BTreeMap::new(),
            cells: Vec::new(),
            unused: Vec::new(),
        };
        engine.initial_simplex(&points[..dim + 1])?;
        for lp in &points[dim + 1..] {
            engine.insert(lp)?;
        }
        Ok(engine)
    }

    fn point(&self, label: Label) -> &Point {
        &self.by_label[&label]
    }

    fn side_of(&self, facet: &[Label], query: &Point) -> Result<Sign> {
        let mut simplex: Vec<&Point> = facet.iter().map(|&l| self.point(l)).collect();
        simplex.push(query);
        orientation(&simplex)
    }

    fn initial_simplex(&mut self, points: &[LabeledPoint]) -> Result<()> {
        for lp in points {
            if lp.point.dim() != self.dim {
                return Err(Error::DimensionMismatch(format!(
                    "point {} has dimension {}, hull is in R^{}",
                    lp.label,
                    lp.point.dim(),
                    self.dim
                )));
            }
            if self.by_label.insert(lp.label, lp.point.clone()).is_some() {
                return Err(Error::InvalidLabels(format!("duplicate label {}", lp.label)));
            }
        }
        let mut cell: Vec<Label> = points.iter().map(|lp| lp.label).collect();
        cell.sort_unstable();
        for omit in 0..cell.len() {
            let mut facet = cell.clone();
            let witness = facet.remove(omit);
            let sign = self.side_of(&facet, &self.by_label[&witness])?;
            if sign.is_zero() {
                return Err(Error::Degenerate(
                    "initial points are affinely dependent".into(),
                ));
            }
            self.facets.insert(facet, (witness, sign));
        }
        self.cells.push(cell);
        Ok(())
    }

    fn insert(&mut self, lp: &LabeledPoint) -> Result<()> {
        if lp.point.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "point {} has dimension {}, hull is in R^{}",
                lp.label,
                lp.point.dim(),
                self.dim
            )));
        }
        if self.by_label.contains_key(&lp.label) {
            return Err(Error::InvalidLabels(format!("duplicate label {}", lp.label)));
        }

        let mut visible: Vec<Facet> = Vec::new();
        for (facet, &(_, inner_sign)) in &self.facets {
            let side = self.side_of(facet, &lp.point)?;
            if side.is_zero() {
                return Err(Error::Degenerate(format!(
                    "point {} lies on the hyperplane of facet {:?}",
                    lp.label, facet
                )));
            }
            if side == inner_sign.flipped() {
                visible.push(facet.clone());
            }
        }
        self.by_label.insert(lp.label, lp.point.clone());

        if visible.is_empty() {
            self.unused.push(lp.label);
            return Ok(());
        }

        // A ridge of a visible facet is on the horizon iff its second facet
        // is invisible, i.e. iff it occurs in exactly one visible facet.
        let mut ridge_owners: BTreeMap<Vec<Label>, Vec<Label>> = BTreeMap::new();
        for facet in &visible {
            for omit in 0..facet.len() {
                let mut ridge = facet.clone();
                let omitted = ridge.remove(omit);
                ridge_owners.entry(ridge).or_default().push(omitted);
            }
        }
        for facet in &visible {
            self.facets.remove(facet);
        }
        for (ridge, omitted) in ridge_owners {
            let [witness] = omitted[..] else { continue };
            // The new facet bounds the cone cell (old facet + new point);
            // the cone's remaining vertex certifies its inner side.
            let mut facet = ridge;
            facet.push(lp.label);
            facet.sort_unstable();
            let sign = self.side_of(&facet, &self.by_label[&witness].clone())?;
            debug_assert!(!sign.is_zero(), "cone cells are non-degenerate");
            self.facets.insert(facet, (witness, sign));
        }
        for facet in visible {
            let mut cell = facet;
            cell.push(lp.label);
            cell.sort_unstable();
            self.cells.push(cell);
        }
        Ok(())
    }

    pub(crate) fn facet_set(&self) -> FacetSet {
        FacetSet {
            dim: self.dim,
            facets: self.facets.keys().cloned().collect(),
        }
    }

    pub(crate) fn oriented_facets(&self) -> Vec<OrientedFacet> {
        self.facets
            .iter()
            .map(|(labels, &(inner_witness, inner_sign))| OrientedFacet {
                labels: labels.clone(),
                inner_witness,
                inner_sign,
            })
            .collect()
    }

    /// Facets strictly visible from `viewpoint`; errors if the viewpoint
    /// lies on some facet hyperplane.
    fn visible_facets(&self, viewpoint: &Point) -> Result<Vec<Facet>> {
        let mut visible = Vec::new();
        for (facet, &(_, inner_sign)) in &self.facets {
            let side = self.side_of(facet, viewpoint)?;
            if side.is_zero() {
                return Err(Error::Degenerate(format!(
                    "viewpoint lies on the hyperplane of facet {:?}",
                    facet
                )));
            }
            if side == inner_sign.flipped() {
                visible.push(facet.clone());
            }
        }
        Ok(visible)
    }
}

fn engine_for(config: &PointConfiguration) -> Result<HullEngine> {
    let points: Vec<LabeledPoint> = config.iter().cloned().collect();
    HullEngine::run(config.dim(), &points)
}

/// Facets of the convex hull of a general-position configuration.
pub fn convex_hull(config: &PointConfiguration) -> Result<FacetSet> {
    Ok(engine_for(config)?.facet_set())
}

/// Hull facets together with their interior certificates.
pub fn oriented_hull(config: &PointConfiguration) -> Result<Vec<OrientedFacet>> {
    Ok(engine_for(config)?.oriented_facets())
}

pub(crate) fn hull_engine(config: &PointConfiguration, order: &[Label]) -> Result<HullEngine> {
    let given: BTreeSet<Label> = order.iter().copied().collect();
    let have: BTreeSet<Label> = config.labels().iter().copied().collect();
    if given != have || order.len() != config.len() {
        return Err(Error::InvalidLabels(
            "insertion order must be a permutation of the configuration labels".into(),
        ));
    }
    let points: Vec<LabeledPoint> = order
        .iter()
        .map(|&l| Ok(LabeledPoint { label: l, point: config.point(l)?.clone() }))
        .collect::<Result<_>>()?;
    HullEngine::run(config.dim(), &points)
}

/// All nonempty proper faces of the hull of `config` that are visible from
/// `viewpoint`: the subsets of the strictly visible facets. Empty when the
/// viewpoint lies inside the hull; errors when it lies on a facet
/// hyperplane.
pub fn visible_faces(
    config: &PointConfiguration,
    viewpoint: &Point,
) -> Result<BTreeSet<Vec<Label>>> {
    if viewpoint.dim() != config.dim() {
        return Err(Error::DimensionMismatch(
            "viewpoint dimension differs from configuration".into(),
        ));
    }
    let engine = engine_for(config)?;
    let mut faces = BTreeSet::new();
    for facet in engine.visible_facets(viewpoint)? {
        for size in 1..=facet.len() {
            for subset in facet.iter().copied().combinations(size) {
                faces.insert(subset);
            }
        }
    }
    Ok(faces)
}

/// Facets of the cyclic polytope C(n, d) on labels 1..=n by the evenness
/// rule: a d-subset Y is a facet iff every two labels outside Y have an
/// even number of elements of Y strictly between them.
pub fn gale_evenness_facets(n: usize, d: usize) -> Result<FacetSet> {
    if d == 0 {
        return Err(Error::InvalidParameter("dimension must be at least 1".into()));
    }
    if n < d + 1 {
        return Err(Error::TooFewPoints(format!(
            "C(n, {d}) needs n >= {}, got {n}",
            d + 1
        )));
    }
    let facets = (1..=n as Label)
        .combinations(d)
        .filter(|subset| {
            let outside: Vec<Label> = (1..=n as Label)
                .filter(|l| subset.binary_search(l).is_err())
                .collect();
            outside.iter().tuple_combinations().all(|(&i, &j)| {
                subset.iter().filter(|&&k| i < k && k < j).count() % 2 == 0
            })
        })
        .collect();
    Ok(FacetSet { dim: d, facets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rat;

    fn square_with(extra: &[(Label, &[i64])]) -> PointConfiguration {
        let mut rows: Vec<(Label, &[i64])> =
            vec![(1, &[0, 0]), (2, &[1, 0]), (3, &[1, 1]), (4, &[0, 1])];
        rows.extend_from_slice(extra);
        PointConfiguration::from_int_rows(2, &rows).unwrap()
    }

    fn facet(labels: &[Label]) -> Facet {
        labels.to_vec()
    }

    #[test]
    fn hull_of_unit_square_is_its_four_edges() {
        let hull = convex_hull(&square_with(&[])).unwrap();
        let expected: BTreeSet<Facet> =
            [facet(&[1, 2]), facet(&[2, 3]), facet(&[3, 4]), facet(&[1, 4])].into();
        assert_eq!(hull.facets, expected);
    }

    #[test]
    fn interior_points_do_not_become_vertices() {
        let config = PointConfiguration::from_int_rows(
            2,
            &[(1, &[0, 0]), (2, &[4, 0]), (3, &[0, 4]), (4, &[1, 1]), (5, &[4, 4])],
        )
        .unwrap();
        let hull = convex_hull(&config).unwrap();
        assert_eq!(hull.vertices(), [1, 2, 3, 5].into());
    }

    #[test]
    fn hull_in_one_dimension_is_the_two_extremes() {
        let config = PointConfiguration::from_int_rows(
            1,
            &[(1, &[3]), (2, &[-2]), (3, &[7]), (4, &[0])],
        )
        .unwrap();
        let hull = convex_hull(&config).unwrap();
        assert_eq!(hull.facets, [facet(&[2]), facet(&[3])].into());
    }

    #[test]
    fn hull_rejects_affinely_dependent_start() {
        let config = PointConfiguration::from_int_rows(
            2,
            &[(1, &[0, 0]), (2, &[1, 1]), (3, &[2, 2]), (4, &[0, 1])],
        )
        .unwrap();
        assert!(matches!(convex_hull(&config), Err(Error::Degenerate(_))));
    }

    #[test]
    fn hull_commutes_with_relabeling() {
        let config = PointConfiguration::from_int_rows(
            2,
            &[(1, &[0, 0]), (2, &[5, 1]), (3, &[3, 4]), (4, &[-1, 3]), (5, &[2, 1])],
        )
        .unwrap();
        let map: BTreeMap<Label, Label> =
            [(1, 10), (2, 4), (3, 3), (4, 2), (5, 1)].into();
        let relabeled = config.relabeled(&map).unwrap();
        let direct = convex_hull(&relabeled).unwrap();
        let mapped: BTreeSet<Facet> = convex_hull(&config)
            .unwrap()
            .facets
            .iter()
            .map(|f| {
                let mut g: Facet = f.iter().map(|l| map[l]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        assert_eq!(direct.facets, mapped);
    }

    /// Definitional facet scan: a d-subset is a facet iff all other points
    /// lie strictly on one side of its hyperplane.
    fn facets_by_definition(config: &PointConfiguration) -> BTreeSet<Facet> {
        let labels = config.labels();
        let d = config.dim();
        labels
            .iter()
            .copied()
            .combinations(d)
            .filter(|subset| {
                let sides: Vec<Sign> = labels
                    .iter()
                    .filter(|l| !subset.contains(l))
                    .map(|&l| {
                        let mut pts: Vec<&Point> =
                            subset.iter().map(|&s| config.point(s).unwrap()).collect();
                        let q = config.point(l).unwrap();
                        pts.push(q);
                        orientation(&pts).unwrap()
                    })
                    .collect();
                !sides.is_empty()
                    && !sides.contains(&Sign::Zero)
                    && (sides.iter().all(|&s| s == Sign::Pos)
                        || sides.iter().all(|&s| s == Sign::Neg))
            })
            .collect()
    }

    #[test]
    fn hull_matches_definitional_scan_on_random_configurations() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let mut done = 0;
        while done < 25 {
            let dim = rng.gen_range(2..=3usize);
            let n = rng.gen_range(dim + 1..=dim + 5);
            let rows: Vec<(Label, Vec<i64>)> = (1..=n)
                .map(|l| {
                    (l as Label, (0..dim).map(|_| rng.gen_range(-30..=30)).collect())
                })
                .collect();
            let rows_ref: Vec<(Label, &[i64])> =
                rows.iter().map(|(l, v)| (*l, v.as_slice())).collect();
            let config = PointConfiguration::from_int_rows(dim, &rows_ref).unwrap();
            if !crate::exact::is_general_position(&config).unwrap() {
                continue;
            }
            let hull = convex_hull(&config).unwrap();
            assert_eq!(hull.facets, facets_by_definition(&config));
            done += 1;
        }
    }

    #[test]
    fn every_point_lies_on_the_inner_side_of_every_facet() {
        let config = PointConfiguration::from_int_rows(
            3,
            &[
                (1, &[0, 0, 0]),
                (2, &[4, 0, 0]),
                (3, &[0, 4, 0]),
                (4, &[0, 0, 4]),
                (5, &[1, 1, 1]),
                (6, &[3, 3, 3]),
            ],
        )
        .unwrap();
        for oriented in oriented_hull(&config).unwrap() {
            for &l in &config.labels() {
                if oriented.labels.contains(&l) {
                    continue;
                }
                let mut pts: Vec<&Point> = oriented
                    .labels
                    .iter()
                    .map(|&f| config.point(f).unwrap())
                    .collect();
                pts.push(config.point(l).unwrap());
                let side = orientation(&pts).unwrap();
                assert!(side == oriented.inner_sign || side == Sign::Zero);
                assert_ne!(side, oriented.inner_sign.flipped());
            }
        }
    }

    #[test]
    fn evenness_facets_of_the_pentagon() {
        let facets = gale_evenness_facets(5, 2).unwrap().facets;
        let expected: BTreeSet<Facet> = [
            facet(&[1, 2]),
            facet(&[2, 3]),
            facet(&[3, 4]),
            facet(&[4, 5]),
            facet(&[1, 5]),
        ]
        .into();
        assert_eq!(facets, expected);
    }

    #[test]
    fn evenness_facets_in_dimension_four() {
        let c64 = gale_evenness_facets(6, 4).unwrap().facets;
        let expected: BTreeSet<Facet> = [
            facet(&[1, 2, 3, 4]),
            facet(&[1, 2, 3, 6]),
            facet(&[1, 2, 4, 5]),
            facet(&[1, 2, 5, 6]),
            facet(&[1, 3, 4, 6]),
            facet(&[1, 4, 5, 6]),
            facet(&[2, 3, 4, 5]),
            facet(&[2, 3, 5, 6]),
            facet(&[3, 4, 5, 6]),
        ]
        .into();
        assert_eq!(c64, expected);
        assert_eq!(gale_evenness_facets(7, 4).unwrap().facets.len(), 14);
    }

    #[test]
    fn evenness_facets_of_a_segment_and_a_simplex() {
        assert_eq!(
            gale_evenness_facets(4, 1).unwrap().facets,
            [facet(&[1]), facet(&[4])].into()
        );
        let simplex = gale_evenness_facets(4, 3).unwrap().facets;
        assert_eq!(simplex.len(), 4);
    }

    #[test]
    fn moment_curve_hull_matches_the_evenness_rule() {
        for (n, d) in [(6usize, 2usize), (6, 3), (7, 4), (8, 4)] {
            let rows: Vec<(Label, Vec<i64>)> = (1..=n as i64)
                .map(|t| ((t as Label), (1..=d as u32).map(|e| t.pow(e)).collect()))
                .collect();
            let rows_ref: Vec<(Label, &[i64])> =
                rows.iter().map(|(l, v)| (*l, v.as_slice())).collect();
            let config = PointConfiguration::from_int_rows(d, &rows_ref).unwrap();
            assert_eq!(
                convex_hull(&config).unwrap(),
                gale_evenness_facets(n, d).unwrap(),
                "hull of the moment curve disagrees with evenness at n={n}, d={d}"
            );
        }
    }

    #[test]
    fn f_vector_and_euler_relation_for_a_cyclic_polytope() {
        let c64 = gale_evenness_facets(6, 4).unwrap();
        assert_eq!(c64.f_vector(), vec![6, 15, 18, 9]);
        // Alternating sum of face counts: 1 - (-1)^d.
        let euler: i64 = c64
            .f_vector()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum();
        assert_eq!(euler, 0);
    }

    #[test]
    fn every_ridge_of_a_hull_lies_in_exactly_two_facets() {
        let c74 = gale_evenness_facets(7, 4).unwrap();
        assert!(c74.ridge_degrees().values().all(|&d| d == 2));
    }

    #[test]
    fn cyclic_polytopes_are_half_dimension_neighborly() {
        let c64 = gale_evenness_facets(6, 4).unwrap();
        assert!(c64.is_k_neighborly(1).unwrap());
        assert!(c64.is_k_neighborly(2).unwrap());
        assert!(c64.is_k_neighborly(5).is_err());

        let square = convex_hull(&square_with(&[])).unwrap();
        assert!(square.is_k_neighborly(1).unwrap());
        assert!(!square.is_k_neighborly(2).unwrap());
    }

    #[test]
    fn visible_faces_from_outside_a_square() {
        let config = square_with(&[]);
        // From (3, 3) both incident edges of vertex 3 are visible, but the
        // diagonal {2, 4} is not a face.
        let far = Point::from_ints(&[3, 3]);
        let faces = visible_faces(&config, &far).unwrap();
        let expected: BTreeSet<Vec<Label>> = [
            vec![2],
            vec![3],
            vec![4],
            vec![2, 3],
            vec![3, 4],
        ]
        .into();
        assert_eq!(faces, expected);

        // From just right of the square only the edge {2, 3} is visible.
        let near = Point::new(vec![Rat::int(2), Rat::frac(1, 2)]);
        let faces = visible_faces(&config, &near).unwrap();
        assert_eq!(faces, [vec![2], vec![3], vec![2, 3]].into());
    }

    #[test]
    fn visible_faces_edge_cases() {
        let config = square_with(&[]);
        let inside = Point::new(vec![Rat::frac(1, 2), Rat::frac(1, 2)]);
        assert!(visible_faces(&config, &inside).unwrap().is_empty());
        // On the line spanned by the bottom edge: not decidable as a strict side.
        let aligned = Point::from_ints(&[5, 0]);
        assert!(matches!(visible_faces(&config, &aligned), Err(Error::Degenerate(_))));
    }

    #[test]
    fn hull_reports_points_on_facet_hyperplanes() {
        // Point 5 is collinear with the right edge {2, 3} of the square.
        let config = square_with(&[(5, &[1, 5])]);
        assert!(matches!(convex_hull(&config), Err(Error::Degenerate(_))));
    }
}
