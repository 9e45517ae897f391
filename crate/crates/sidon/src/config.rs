//! Ordered point configurations: finite sequences of pairwise-distinct
//! rationals with 1-based indexing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::setops::FiniteSet;

/// A sequence of pairwise-distinct rationals.
///
/// This is the verified form every verifier takes: construction fails on
/// duplicates (naming the two colliding positions) and on empty input.
/// Indices are 1-based wherever they appear in certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PointConfiguration(Vec<Rational>);

impl PointConfiguration {
    pub fn new(points: Vec<Rational>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        // Sort (position, value) pairs by value; equal neighbors expose the
        // earliest duplicate pair.
        let mut by_value: Vec<(usize, &Rational)> = points.iter().enumerate().collect();
        by_value.sort_by(|(i, x), (j, y)| x.cmp(y).then(i.cmp(j)));
        for window in by_value.windows(2) {
            let (first, x) = window[0];
            let (second, _) = window[1];
            if x == window[1].1 {
                return Err(Error::DuplicateElement {
                    value: x.to_string(),
                    first: first + 1,
                    second: second + 1,
                });
            }
        }
        Ok(PointConfiguration(points))
    }

    /// Number of points, k.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least one point
    }

    /// Points in input order.
    pub fn points(&self) -> &[Rational] {
        &self.0
    }

    /// The point at a 1-based index.
    pub fn point(&self, index: usize) -> Result<&Rational> {
        index
            .checked_sub(1)
            .and_then(|i| self.0.get(i))
            .ok_or(Error::IndexOutOfRange {
                index,
                len: self.0.len(),
            })
    }

    /// The underlying unordered set.
    pub fn to_set(&self) -> FiniteSet {
        FiniteSet::new(self.0.iter().cloned())
    }
}

impl<'de> Deserialize<'de> for PointConfiguration {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let points = Vec::<Rational>::deserialize(deserializer)?;
        PointConfiguration::new(points).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rats(elems: &[&str]) -> Vec<Rational> {
        elems.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn accepts_distinct_points() {
        let c = PointConfiguration::new(rats(&["0", "1", "2"])).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.point(1).unwrap(), &"0".parse().unwrap());
        assert_eq!(c.point(3).unwrap(), &"2".parse().unwrap());
        assert!(c.point(0).is_err());
        assert!(c.point(4).is_err());
    }

    #[test]
    fn rejects_duplicates_naming_positions() {
        let err = PointConfiguration::new(rats(&["1", "1"])).unwrap_err();
        assert_eq!(
            err,
            Error::DuplicateElement {
                value: "1".into(),
                first: 1,
                second: 2
            }
        );
        let err = PointConfiguration::new(rats(&["3", "5", "2/1", "4", "2"])).unwrap_err();
        assert_eq!(
            err,
            Error::DuplicateElement {
                value: "2".into(),
                first: 3,
                second: 5
            }
        );
    }

    #[test]
    fn rejects_empty_input() {
        assert_eq!(PointConfiguration::new(vec![]).unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn order_is_preserved() {
        let c = PointConfiguration::new(rats(&["5", "1", "3"])).unwrap();
        assert_eq!(c.points(), rats(&["5", "1", "3"]).as_slice());
        assert_eq!(c.to_set().elements(), rats(&["1", "3", "5"]).as_slice());
    }

    #[test]
    fn deserialization_validates() {
        let ok: PointConfiguration = serde_json::from_str(r#"["1","2","4"]"#).unwrap();
        assert_eq!(ok.len(), 3);
        assert!(serde_json::from_str::<PointConfiguration>(r#"["1","1"]"#).is_err());
        assert!(serde_json::from_str::<PointConfiguration>("[]").is_err());
    }
}
