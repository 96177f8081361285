//! The distortion functional on sampled maps, explicit extremal maps, and a
//! combinatorial certifier for circle-to-line samples.
//!
//! The distortion of a relation between metric spaces is the supremum of
//! `|d_Y(y1, y2) - d_X(x1, x2)|` over pairs of related pairs. For a finite
//! sample of a function's graph the scan below is exact over the sample and
//! therefore a lower bound for the function's true distortion.
//!
//! The certifier works on `m` equally spaced circle points (`m` odd): steps
//! of `(m+1)/2` traverse all grid points in a single almost-antipodal
//! cycle. Either some cycle edge carries equal values — two nearly
//! antipodal points with identical images — or orienting every edge by
//! value produces two consecutive edges pointing the same way, and the
//! middle value is sandwiched between two grid neighbors. Both
//! configurations force distortion from the sampled points alone, so the
//! certificate is sound for the sampled relation, not just the underlying
//! map.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{sample_sphere, Point, SpherePoint};

/// A finite relation between a round sphere and a Euclidean space: a
/// nonempty list of (sphere point, image point) pairs with consistent
/// dimensions and radius.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    pairs: Vec<(SpherePoint, Point)>,
}

/// Serialized form: `{"r": ..., "pairs": [[[x...], [y...]], ...]}` with
/// sphere coordinates first in each pair.
#[derive(Serialize, Deserialize)]
struct RelationRepr {
    r: f64,
    pairs: Vec<(Vec<f64>, Vec<f64>)>,
}

impl Serialize for Relation {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let repr = RelationRepr {
            r: self.radius(),
            pairs: self
                .pairs
                .iter()
                .map(|(x, y)| (x.coords().coords().to_vec(), y.coords().to_vec()))
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Relation {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let repr = RelationRepr::deserialize(deserializer)?;
        let pairs = repr
            .pairs
            .into_iter()
            .map(|(x, y)| Ok((SpherePoint::new(Point::new(x), repr.r)?, Point::new(y))))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Relation::new(pairs).map_err(serde::de::Error::custom)
    }
}

impl Relation {
    pub fn new(pairs: Vec<(SpherePoint, Point)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::invalid("a relation must be nonempty"));
        }
        let r = pairs[0].0.radius();
        let sphere_dim = pairs[0].0.coords().dim();
        let image_dim = pairs[0].1.dim();
        for (x, y) in &pairs {
            if (x.radius() - r).abs() > 1e-12 * r {
                return Err(Error::RadiusMismatch(r, x.radius()));
            }
            if x.coords().dim() != sphere_dim {
                return Err(Error::DimensionMismatch {
                    expected: sphere_dim,
                    got: x.coords().dim(),
                });
            }
            if y.dim() != image_dim {
                return Err(Error::DimensionMismatch {
                    expected: image_dim,
                    got: y.dim(),
                });
            }
            if !y.is_finite() {
                return Err(Error::invalid("non-finite image coordinate"));
            }
        }
        Ok(Relation { pairs })
    }

    /// Builds the graph sample `{(x_i, f(x_i))}` of a map over a sphere
    /// sample.
    pub fn from_map(
        sample: Vec<SpherePoint>,
        mut f: impl FnMut(&SpherePoint) -> Point,
    ) -> Result<Self> {
        let pairs = sample
            .into_iter()
            .map(|x| {
                let y = f(&x);
                (x, y)
            })
            .collect();
        Relation::new(pairs)
    }

    /// Grid sample of 1-dimensional values over the `m` equally spaced
    /// circle points of radius `r`.
    pub fn from_circle_values(values: &[f64], r: f64) -> Result<Self> {
        let grid = sample_sphere(1, r, values.len(), 0)?;
        let pairs = grid
            .into_iter()
            .zip(values)
            .map(|(x, &v)| (x, Point::new(vec![v])))
            .collect();
        Relation::new(pairs)
    }

    pub fn pairs(&self) -> &[(SpherePoint, Point)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor requires nonempty
    }

    pub fn radius(&self) -> f64 {
        self.pairs[0].0.radius()
    }

    pub fn sphere_dim(&self) -> usize {
        self.pairs[0].0.sphere_dim()
    }

    pub fn image_dim(&self) -> usize {
        self.pairs[0].1.dim()
    }

    /// The relation restricted to a subset of its pairs.
    pub fn subrelation(&self, indices: &[usize]) -> Result<Relation> {
        Relation::new(indices.iter().map(|&i| self.pairs[i].clone()).collect())
    }

    /// Exact maximum of `|d_Y - d_X|` over all pairs of sampled pairs.
    ///
    /// The scan is `O(N^2)` and parallelized over row blocks; the result is
    /// a plain floating-point max, hence independent of the schedule.
    pub fn distortion(&self) -> f64 {
        let n = self.pairs.len();
        distortion_with(
            n,
            |i, j| {
                self.pairs[i]
                    .0
                    .distance(&self.pairs[j].0)
                    .expect("constructor enforced consistency")
            },
            |i, j| self.pairs[i].1.dist(&self.pairs[j].1),
        )
    }
}

/// Distortion of an abstract relation given by index metrics: the maximum
/// of `|dy(i, j) - dx(i, j)|` over `0 <= i < j < n` (zero when `n < 2`).
pub fn distortion_with(
    n: usize,
    dx: impl Fn(usize, usize) -> f64 + Sync,
    dy: impl Fn(usize, usize) -> f64 + Sync,
) -> f64 {
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut best = 0.0f64;
            for j in i + 1..n {
                best = best.max((dy(i, j) - dx(i, j)).abs());
            }
            best
        })
        .reduce(|| 0.0, f64::max)
}

/// Graph sample of the hyperplane projection: sphere points paired with
/// their coordinates minus the last axis. Its sampled distortion never
/// exceeds `pi * r`.
pub fn projection_map_sample(n: usize, r: f64, count: usize, seed: u64) -> Result<Relation> {
    if count < 2 {
        return Err(Error::invalid("need at least two sample points"));
    }
    let sample = sample_sphere(n, r, count, seed)?;
    Relation::from_map(sample, |x| {
        let c = x.coords().coords();
        Point::new(c[..c.len() - 1].to_vec())
    })
}

/// The distortion-sharp circle map `theta -> r * theta / 3` on
/// `[0, 2 pi)`; its distortion equals the 1-dimensional lower bound
/// `2 pi r / 3` exactly.
pub fn sharp_circle_map(theta: f64, r: f64) -> Result<f64> {
    if !(0.0..2.0 * std::f64::consts::PI).contains(&theta) {
        return Err(Error::invalid(format!("theta = {theta} outside [0, 2 pi)")));
    }
    Ok(r * theta / 3.0)
}

/// Which sandwich the certifying 2-path produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathConfig {
    /// `f(x_k) <= f(x_{k+s}) <= f(x_{k+1})`
    Ascending,
    /// `f(x_k) >= f(x_{k+s}) >= f(x_{k+1})`
    Descending,
}

/// The combinatorial fact a certified bound rests on. `start` is the grid
/// index `k`; the step is always `s = (m+1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum Certificate {
    /// Almost-antipodal grid points `k` and `k+s` with equal values.
    Tie { start: usize },
    /// A value sandwich across the edges `(k, k+s)` and `(k+s, k+1)`.
    Path { start: usize, config: PathConfig },
}

impl Certificate {
    /// Recomputes the certified bound from the case and `(m, r)` alone.
    pub fn bound(&self, m: usize, r: f64) -> f64 {
        let mf = m as f64;
        match self {
            Certificate::Tie { .. } => std::f64::consts::PI * r * (mf - 1.0) / mf,
            Certificate::Path { .. } => 2.0 * std::f64::consts::PI * r * (mf - 2.0) / (3.0 * mf),
        }
    }

    /// Checks the combinatorial fact against the value vector it was
    /// extracted from.
    pub fn holds_for(&self, values: &[f64]) -> bool {
        let m = values.len();
        if m < 3 || m.is_multiple_of(2) {
            return false;
        }
        let s = m.div_ceil(2);
        match *self {
            Certificate::Tie { start } => values[start] == values[(start + s) % m],
            Certificate::Path { start, config } => {
                let a = values[start];
                let mid = values[(start + s) % m];
                let b = values[(start + 1) % m];
                match config {
                    PathConfig::Ascending => a <= mid && mid <= b,
                    PathConfig::Descending => a >= mid && mid >= b,
                }
            }
        }
    }
}

/// A distortion lower bound together with the machine-checkable certificate
/// that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertifiedBound {
    pub value: f64,
    /// Grid size the certificate refers to.
    pub m: usize,
    /// Sphere radius.
    pub r: f64,
    pub certificate: Certificate,
}

impl CertifiedBound {
    /// `value` recomputed from the certificate; bit-identical to the stored
    /// value.
    pub fn replay(&self) -> f64 {
        self.certificate.bound(self.m, self.r)
    }
}

/// Certifies a distortion lower bound for `m` values sampled on the
/// equally spaced circle grid (`m` odd, `m >= 3`).
///
/// Tie certificates win when both exist: `pi r (m-1)/m` beats
/// `2 pi r (m-2) / (3m)` for every odd `m >= 3`. The scan returns the
/// lexicographically first certificate of the winning kind.
pub fn certify_circle_values(values: &[f64], r: f64) -> Result<CertifiedBound> {
    let m = values.len();
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "the certifier needs an odd grid of size >= 3, got {m}"
        )));
    }
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::invalid("sphere radius must be positive"));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::invalid("non-finite sample value"));
    }
    let s = m.div_ceil(2);

    for k in 0..m {
        if values[k] == values[(k + s) % m] {
            let certificate = Certificate::Tie { start: k };
            return Ok(CertifiedBound {
                value: certificate.bound(m, r),
                m,
                r,
                certificate,
            });
        }
    }

    for k in 0..m {
        let a = values[k];
        let mid = values[(k + s) % m];
        let b = values[(k + 1) % m];
        let config = if a < mid && mid < b {
            Some(PathConfig::Ascending)
        } else if a > mid && mid > b {
            Some(PathConfig::Descending)
        } else {
            None
        };
        if let Some(config) = config {
            let certificate = Certificate::Path { start: k, config };
            return Ok(CertifiedBound {
                value: certificate.bound(m, r),
                m,
                r,
                certificate,
            });
        }
    }
    // an odd cycle with no ties always contains two consecutive edges
    // oriented the same way
    Err(Error::invalid("certificate scan failed on tie-free input"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn identity_relation_has_zero_distortion() {
        // same metric on both sides: every deviation vanishes identically
        let sample = sample_sphere(2, 1.0, 30, 1).unwrap();
        let d = |i: usize, j: usize| sample[i].distance(&sample[j]).unwrap();
        assert_eq!(distortion_with(sample.len(), d, d), 0.0);
    }

    #[test]
    fn antipodal_collision_costs_half_circumference() {
        let r = 1.3;
        let x = SpherePoint::new(Point::new(vec![r, 0.0]), r).unwrap();
        let rel = Relation::new(vec![
            (x.clone(), Point::new(vec![0.7])),
            (x.antipode(), Point::new(vec![0.7])),
        ])
        .unwrap();
        assert!((rel.distortion() - PI * r).abs() < 1e-12);
    }

    #[test]
    fn projection_sample_distortion_is_bounded() {
        for (n, count) in [(1usize, 64usize), (2, 300), (3, 200)] {
            let r = 1.1;
            let rel = projection_map_sample(n, r, count, 5).unwrap();
            assert!(rel.distortion() <= PI * r + 1e-12);
        }
        // the antipodal pair along the dropped axis projects to one point
        let rel = projection_map_sample(1, 1.0, 4, 0).unwrap();
        assert!((rel.distortion() - PI).abs() < 1e-12);
        // dense circle grids reach pi r
        let rel = projection_map_sample(1, 1.0, 1000, 0).unwrap();
        let d = rel.distortion();
        assert!((PI - 1e-2..=PI + 1e-12).contains(&d));
    }

    #[test]
    fn sharp_circle_map_values() {
        assert_eq!(sharp_circle_map(0.0, 1.0).unwrap(), 0.0);
        assert!((sharp_circle_map(PI, 3.0).unwrap() - PI).abs() < 1e-15);
        assert!(sharp_circle_map(-0.1, 1.0).is_err());
        assert!(sharp_circle_map(2.0 * PI, 1.0).is_err());
    }

    #[test]
    fn relation_preconditions() {
        assert!(Relation::new(vec![]).is_err());
        assert!(projection_map_sample(1, 1.0, 1, 0).is_err());
        // mixed radii are rejected
        let a = SpherePoint::new(Point::new(vec![1.0, 0.0]), 1.0).unwrap();
        let b = SpherePoint::new(Point::new(vec![2.0, 0.0]), 2.0).unwrap();
        assert!(Relation::new(vec![
            (a.clone(), Point::new(vec![0.0])),
            (b, Point::new(vec![0.0])),
        ])
        .is_err());
        // mixed image dimensions are rejected
        assert!(Relation::new(vec![
            (a.clone(), Point::new(vec![0.0])),
            (a.antipode(), Point::new(vec![0.0, 1.0])),
        ])
        .is_err());
    }

    #[test]
    fn sharp_circle_map_sampled_distortion() {
        let r = 1.0;
        let m = 10_000;
        let values: Vec<f64> = (0..m)
            .map(|k| sharp_circle_map(2.0 * PI * k as f64 / m as f64, r).unwrap())
            .collect();
        let rel = Relation::from_circle_values(&values, r).unwrap();
        let d = rel.distortion();
        let limit = 2.0 * PI * r / 3.0;
        assert!(d > limit - 1e-3, "{d} too far below {limit}");
        assert!(d <= limit + 1e-12, "{d} exceeds {limit}");
    }

    #[test]
    fn certifier_tie_case() {
        let b = certify_circle_values(&[1.0, 1.0, 1.0], 1.0).unwrap();
        assert!(matches!(b.certificate, Certificate::Tie { start: 0 }));
        assert!((b.value - 2.0 * PI / 3.0).abs() < 1e-15);
        assert!(b.certificate.holds_for(&[1.0, 1.0, 1.0]));
    }

    #[test]
    fn certifier_path_case() {
        let b = certify_circle_values(&[0.0, 1.0, 2.0], 1.0).unwrap();
        match b.certificate {
            Certificate::Path { .. } => {}
            other => panic!("expected a path certificate, got {other:?}"),
        }
        assert!((b.value - 2.0 * PI / 9.0).abs() < 1e-15);
        assert!((b.value - 0.6981317008).abs() < 1e-10);
        assert!(b.certificate.holds_for(&[0.0, 1.0, 2.0]));
        assert_eq!(b.replay(), b.value);
    }

    #[test]
    fn certifier_rejects_even_or_tiny_grids() {
        assert!(certify_circle_values(&[0.0, 1.0], 1.0).is_err());
        assert!(certify_circle_values(&[0.0, 1.0, 2.0, 3.0], 1.0).is_err());
        assert!(certify_circle_values(&[0.0], 1.0).is_err());
    }

    #[test]
    fn certifier_on_the_sharp_map_grid() {
        let r = 1.0;
        let m = 10_001;
        let values: Vec<f64> = (0..m)
            .map(|k| sharp_circle_map(2.0 * PI * k as f64 / m as f64, r).unwrap())
            .collect();
        let bound = certify_circle_values(&values, r).unwrap();
        let floor = 2.0 * PI * (m as f64 - 2.0) / (3.0 * m as f64);
        assert!(bound.value >= floor - 1e-15);
        let rel = Relation::from_circle_values(&values, r).unwrap();
        assert!(bound.value <= rel.distortion() + 1e-12);
    }

    #[test]
    fn certifier_is_sound_for_random_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..60 {
            let m = 2 * rng.gen_range(1..=60) + 1;
            let scale = 10.0f64.powi(rng.gen_range(-2..=2));
            let values: Vec<f64> = (0..m).map(|_| scale * rng.gen::<f64>()).collect();
            let r = 0.5 + rng.gen::<f64>();
            let bound = certify_circle_values(&values, r).unwrap();
            let rel = Relation::from_circle_values(&values, r).unwrap();
            assert!(bound.value <= rel.distortion() + 1e-12);
            assert!(bound.certificate.holds_for(&values));
            assert_eq!(bound.replay(), bound.value);
        }
    }

    #[test]
    fn distortion_is_isometry_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let rel = projection_map_sample(2, 1.0, 120, 9).unwrap();
        let d0 = rel.distortion();

        // random rotation via Gram-Schmidt on a Gaussian matrix, plus a shift
        let dim = rel.image_dim();
        let raw: Vec<Vec<f64>> = (0..dim)
            .map(|_| {
                (0..dim)
                    .map(|_| crate::geom::standard_normal(&mut rng))
                    .collect()
            })
            .collect();
        let q = crate::linalg::orthonormalize(&raw, 1e-9);
        assert_eq!(q.len(), dim);
        let shift: Vec<f64> = (0..dim).map(|_| rng.gen::<f64>()).collect();

        let moved = Relation::new(
            rel.pairs()
                .iter()
                .map(|(x, y)| {
                    let mut img: Vec<f64> = q
                        .iter()
                        .map(|row| row.iter().zip(y.coords()).map(|(a, b)| a * b).sum::<f64>())
                        .collect();
                    for (c, s) in img.iter_mut().zip(&shift) {
                        *c += s;
                    }
                    (x.clone(), Point::new(img))
                })
                .collect(),
        )
        .unwrap();
        assert!((moved.distortion() - d0).abs() < 1e-12);
    }

    #[test]
    fn subrelation_distortion_is_monotone() {
        let rel = projection_map_sample(2, 1.0, 80, 10).unwrap();
        let full = rel.distortion();
        let sub = rel.subrelation(&(0..40).collect::<Vec<_>>()).unwrap();
        assert!(sub.distortion() <= full + 1e-15);
    }

    #[test]
    fn grid_distances_match_the_formulas() {
        let r = 2.0;
        let m = 101;
        let grid = sample_sphere(1, r, m, 0).unwrap();
        let s = m.div_ceil(2);
        for k in 0..m {
            let adjacent = grid[k].distance(&grid[(k + 1) % m]).unwrap();
            assert!((adjacent - 2.0 * PI * r / m as f64).abs() < 1e-12);
            let step = grid[k].distance(&grid[(k + s) % m]).unwrap();
            assert!((step - PI * r * (m as f64 - 1.0) / m as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn relation_serde_round_trip() {
        let rel = projection_map_sample(1, 1.5, 8, 0).unwrap();
        let json = serde_json::to_string(&rel).unwrap();
        let back: Relation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rel);
        assert!(json.starts_with(r#"{"r":1.5,"pairs":[[["#));
    }
}
