//! Multiplicity profiles (n_r)_{r≥2} and the numbers derived from them.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{BoundsError, GeometryError};
use crate::geometry::{singular_points, Arrangement, SingularPoint};

/// Where a profile came from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Counted from exact geometry.
    Geometric,
    /// Supplied as data (catalog, enumeration, user input).
    #[default]
    Declared,
}

/// Weak combinatorial type of an arrangement of `d` lines and `k` conics.
///
/// Equality ignores provenance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MultiplicityProfile {
    pub d: u64,
    pub k: u64,
    /// n_r for r ≥ 2; zero counts are not stored.
    #[serde(with = "counts_serde")]
    pub counts: BTreeMap<u32, u64>,
    #[serde(skip)]
    pub provenance: Provenance,
}

mod counts_serde {
    use std::collections::BTreeMap;

    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<u32, u64>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(m.iter().map(|(r, n)| (r.to_string(), n)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u32, u64>, D::Error> {
        let raw = BTreeMap::<String, u64>::deserialize(d)?;
        let mut out = BTreeMap::new();
        for (k, v) in raw {
            let r: u32 = k.parse().map_err(|_| {
                D::Error::custom(format!("multiplicity key `{k}` is not an integer"))
            })?;
            if r < 2 {
                return Err(D::Error::custom(format!("multiplicity {r} < 2")));
            }
            if v > 0 {
                out.insert(r, v);
            }
        }
        Ok(out)
    }
}

impl PartialEq for MultiplicityProfile {
    fn eq(&self, other: &Self) -> bool {
        (self.d, self.k, &self.counts) == (other.d, other.k, &other.counts)
    }
}

impl Eq for MultiplicityProfile {}

impl MultiplicityProfile {
    /// A declared profile from `(r, n_r)` pairs; zero counts are dropped.
    ///
    /// # Panics
    /// If some `r < 2`.
    pub fn new(d: u64, k: u64, counts: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (r, n) in counts {
            assert!(r >= 2, "multiplicity must be at least 2");
            if n > 0 {
                *map.entry(r).or_insert(0) += n;
            }
        }
        MultiplicityProfile {
            d,
            k,
            counts: map,
            provenance: Provenance::Declared,
        }
    }

    pub fn n(&self, r: u32) -> u64 {
        self.counts.get(&r).copied().unwrap_or(0)
    }

    /// Maximal multiplicity m(C); `None` for a curve without singular points.
    pub fn max_multiplicity(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    /// Degree of the union curve, d + 2k.
    pub fn degree(&self) -> u64 {
        self.d + 2 * self.k
    }

    pub fn total_points(&self) -> u64 {
        self.counts.values().sum()
    }
}

impl fmt::Display for MultiplicityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={}, k={}", self.d, self.k)?;
        for (r, n) in &self.counts {
            write!(f, ", n{r}={n}")?;
        }
        Ok(())
    }
}

fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Profile counted from exact singular points.
pub fn profile_from_points(d: u64, k: u64, points: &[SingularPoint]) -> MultiplicityProfile {
    let mut p = MultiplicityProfile::new(
        d,
        k,
        points
            .iter()
            .filter(|sp| sp.multiplicity >= 2)
            .map(|sp| (sp.multiplicity as u32, 1)),
    );
    p.provenance = Provenance::Geometric;
    p
}

pub fn profile_of(arr: &Arrangement) -> Result<MultiplicityProfile, GeometryError> {
    let points = singular_points(arr)?;
    Ok(profile_from_points(arr.d() as u64, arr.k() as u64, &points))
}

/// 4·C(k,2) + 2kd + C(d,2) − Σ C(r,2)·n_r; zero iff every pair of members is accounted for.
pub fn naive_count_residual(p: &MultiplicityProfile) -> i64 {
    let (d, k) = (p.d as i64, p.k as i64);
    let pairs = 4 * choose2(k) + 2 * k * d + choose2(d);
    let counted: i64 = p
        .counts
        .iter()
        .map(|(&r, &n)| choose2(r as i64) * n as i64)
        .sum();
    pairs - counted
}

/// Σ (r−1)²·n_r, the total Tjurina number when every singular point is ordinary and
/// quasi-homogeneous.
pub fn tau_combinatorial(p: &MultiplicityProfile) -> i64 {
    p.counts
        .iter()
        .map(|(&r, &n)| (r as i64 - 1).pow(2) * n as i64)
        .sum()
}

/// f_i = Σ r^i·n_r for i ∈ {0, 1, 2}.
pub fn moment(p: &MultiplicityProfile, i: u32) -> Result<i64, BoundsError> {
    if i > 2 {
        return Err(BoundsError::MomentIndex(i));
    }
    Ok(p.counts
        .iter()
        .map(|(&r, &n)| (r as i64).pow(i) * n as i64)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> MultiplicityProfile {
        MultiplicityProfile::new(21, 0, [(3, 28), (4, 21)])
    }

    fn cl5() -> MultiplicityProfile {
        MultiplicityProfile::new(3, 1, [(3, 3)])
    }

    #[test]
    fn naive_count_examples() {
        assert_eq!(naive_count_residual(&klein()), 0);
        assert_eq!(naive_count_residual(&cl5()), 0);
        assert_eq!(
            naive_count_residual(&MultiplicityProfile::new(4, 0, [(2, 5)])),
            1
        );
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_combinatorial(&klein()), 301);
        assert_eq!(tau_combinatorial(&cl5()), 12);
        assert_eq!(
            tau_combinatorial(&MultiplicityProfile::new(9, 0, [(3, 12)])),
            48
        );
    }

    #[test]
    fn moment_examples() {
        assert_eq!(moment(&klein(), 0).unwrap(), 49);
        assert_eq!(moment(&klein(), 1).unwrap(), 168);
        let empty = MultiplicityProfile::new(1, 0, []);
        for i in 0..=2 {
            assert_eq!(moment(&empty, i).unwrap(), 0);
        }
        assert_eq!(moment(&klein(), 3), Err(BoundsError::MomentIndex(3)));
    }

    #[test]
    fn serialization_shape() {
        let json = serde_json::to_string(&klein()).unwrap();
        assert_eq!(json, r#"{"d":21,"k":0,"counts":{"3":28,"4":21}}"#);
        let back: MultiplicityProfile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, klein());
        assert!(
            serde_json::from_str::<MultiplicityProfile>(r#"{"d":1,"k":0,"counts":{"1":2}}"#)
                .is_err()
        );
    }

    #[test]
    fn max_multiplicity() {
        assert_eq!(klein().max_multiplicity(), Some(4));
        assert_eq!(MultiplicityProfile::new(1, 0, []).max_multiplicity(), None);
    }
}
