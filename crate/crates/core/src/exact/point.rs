//! Labeled rational point configurations.
//!
//! Labels are distinct positive integers; the order induced by increasing
//! label is the insertion order used by liftings and placing triangulations.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rat::Rat;

/// Point label; positive, unique within a configuration.
pub type Label = u32;

/// A point of R^d with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point {
    pub coords: Vec<Rat>,
}

impl Point {
    pub fn new(coords: Vec<Rat>) -> Self {
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point { coords: coords.iter().map(|&c| Rat::int(c)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Sum of squared coordinates, exact.
    pub fn norm_sq(&self) -> Rat {
        self.coords.iter().map(Rat::square).sum()
    }

    /// The point with one extra trailing coordinate.
    pub fn lifted(&self, height: Rat) -> Point {
        let mut coords = self.coords.clone();
        coords.push(height);
        Point { coords }
    }

    /// The point with its trailing coordinate dropped.
    pub fn projected(&self) -> Point {
        Point { coords: self.coords[..self.coords.len() - 1].to_vec() }
    }
}

/// One labeled point of a configuration.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LabeledPoint {
    pub label: Label,
    #[serde(rename = "coords")]
    pub point: Point,
}

/// A finite labeled point set in R^dim, stored sorted by label.
///
/// Invariants (enforced on construction and deserialization): dim >= 1,
/// labels distinct and positive, every point has exactly dim coordinates.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawConfiguration", into = "RawConfiguration")]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<LabeledPoint>,
}

#[derive(Serialize, Deserialize)]
struct RawConfiguration {
    dim: usize,
    points: Vec<LabeledPoint>,
}

impl TryFrom<RawConfiguration> for PointConfiguration {
    type Error = Error;
    fn try_from(raw: RawConfiguration) -> Result<Self> {
        PointConfiguration::new(raw.dim, raw.points)
    }
}

impl From<PointConfiguration> for RawConfiguration {
    fn from(config: PointConfiguration) -> Self {
        RawConfiguration { dim: config.dim, points: config.points }
    }
}

impl PointConfiguration {
    pub fn new(dim: usize, mut points: Vec<LabeledPoint>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("configuration dimension must be >= 1".into()));
        }
        for lp in &points {
            if lp.label == 0 {
                return Err(Error::InvalidLabels("labels must be positive".into()));
            }
            if lp.point.dim() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "label {} has {} coordinates in a dim-{} configuration",
                    lp.label,
                    lp.point.dim(),
                    dim
                )));
            }
        }
        points.sort_by_key(|lp| lp.label);
        if points.windows(2).any(|w| w[0].label == w[1].label) {
            return Err(Error::InvalidLabels("duplicate label".into()));
        }
        Ok(PointConfiguration { dim, points })
    }

    /// Builds a configuration from (label, integer coordinates) rows.
    pub fn from_int_rows(dim: usize, rows: &[(Label, &[i64])]) -> Result<Self> {
        let points = rows
            .iter()
            .map(|(label, coords)| LabeledPoint { label: *label, point: Point::from_ints(coords) })
            .collect();
        PointConfiguration::new(dim, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Labeled points in increasing label order.
    pub fn iter(&self) -> impl Iterator<Item = &LabeledPoint> {
        self.points.iter()
    }

    /// Labels in increasing order.
    pub fn labels(&self) -> Vec<Label> {
        self.points.iter().map(|lp| lp.label).collect()
    }

    pub fn contains_label(&self, label: Label) -> bool {
        self.points.binary_search_by_key(&label, |lp| lp.label).is_ok()
    }

    pub fn point(&self, label: Label) -> Result<&Point> {
        self.points
            .binary_search_by_key(&label, |lp| lp.label)
            .map(|i| &self.points[i].point)
            .map_err(|_| Error::InvalidLabels(format!("no point with label {label}")))
    }

    pub fn max_label(&self) -> Option<Label> {
        self.points.last().map(|lp| lp.label)
    }

    /// The configuration extended by one more labeled point.
    pub fn with_point(&self, label: Label, point: Point) -> Result<Self> {
        let mut points = self.points.clone();
        points.push(LabeledPoint { label, point });
        PointConfiguration::new(self.dim, points)
    }

    /// Applies a label bijection: the point labeled `l` becomes `map[l]`.
    pub fn relabeled(&self, map: &BTreeMap<Label, Label>) -> Result<Self> {
        let points = self
            .points
            .iter()
            .map(|lp| {
                let label = *map.get(&lp.label).ok_or_else(|| {
                    Error::InvalidLabels(format!("relabeling map misses label {}", lp.label))
                })?;
                Ok(LabeledPoint { label, point: lp.point.clone() })
            })
            .collect::<Result<Vec<_>>>()?;
        PointConfiguration::new(self.dim, points)
    }

    /// The configuration restricted to labels for which `keep` holds.
    pub fn filtered(&self, keep: impl Fn(Label) -> bool) -> Result<Self> {
        let points = self.points.iter().filter(|lp| keep(lp.label)).cloned().collect();
        PointConfiguration::new(self.dim, points)
    }

    /// Exact centroid of the points with the given labels.
    pub fn centroid(&self, labels: &[Label]) -> Result<Point> {
        if labels.is_empty() {
            return Err(Error::TooFewPoints("centroid of empty label set".into()));
        }
        let mut sums = vec![Rat::zero(); self.dim];
        for &label in labels {
            let p = self.point(label)?;
            for (s, c) in sums.iter_mut().zip(&p.coords) {
                *s += c;
            }
        }
        let count = Rat::int(labels.len() as i64);
        Ok(Point::new(sums.into_iter().map(|s| s / count.clone()).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_by_label_and_rejects_duplicates() {
        let config = PointConfiguration::from_int_rows(2, &[(3, &[0, 1]), (1, &[0, 0]), (2, &[1, 0])])
            .unwrap();
        assert_eq!(config.labels(), vec![1, 2, 3]);
        assert!(PointConfiguration::from_int_rows(2, &[(1, &[0, 0]), (1, &[1, 1])]).is_err());
        assert!(PointConfiguration::from_int_rows(2, &[(0, &[0, 0])]).is_err());
    }

    #[test]
    fn dimension_checked_per_point() {
        assert!(PointConfiguration::from_int_rows(2, &[(1, &[0, 0, 0])]).is_err());
    }

    #[test]
    fn relabeling_is_a_bijection_on_points() {
        let config =
            PointConfiguration::from_int_rows(1, &[(1, &[10]), (2, &[20]), (3, &[30])]).unwrap();
        let map: BTreeMap<Label, Label> = [(1, 2), (2, 3), (3, 1)].into_iter().collect();
        let relabeled = config.relabeled(&map).unwrap();
        assert_eq!(relabeled.point(2).unwrap(), config.point(1).unwrap());
        assert_eq!(relabeled.point(1).unwrap(), config.point(3).unwrap());
    }

    #[test]
    fn serde_rejects_invalid_configs() {
        let good = r#"{"dim":2,"points":[{"label":1,"coords":["0","1/2"]}]}"#;
        let config: PointConfiguration = serde_json::from_str(good).unwrap();
        assert_eq!(config.point(1).unwrap().coords[1], Rat::frac(1, 2));

        let dup = r#"{"dim":2,"points":[{"label":1,"coords":["0","0"]},{"label":1,"coords":["1","1"]}]}"#;
        assert!(serde_json::from_str::<PointConfiguration>(dup).is_err());

        let bad_rat = r#"{"dim":1,"points":[{"label":1,"coords":["1/0"]}]}"#;
        assert!(serde_json::from_str::<PointConfiguration>(bad_rat).is_err());
    }
}
