//! Euclidean points, simplices, and round-sphere primitives.
//!
//! Ambient dimension is carried by the data, not by type parameters: a
//! [`Point`] is a finite real coordinate tuple, a [`Simplex`] an ordered list
//! of affinely independent vertices, and a [`SpherePoint`] a point of the
//! round sphere of radius `r` in one more coordinate than the sphere
//! dimension. The sphere metric is geodesic: `r` times the angle between
//! direction vectors, so antipodal points are `pi * r` apart.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Default relative tolerance for affine-independence rank tests.
pub const DEFAULT_AFFINE_TOL: f64 = 1e-9;

/// Relative tolerance accepted between `|coords|` and `r` when validating a
/// sphere point.
pub const SPHERE_NORM_TOL: f64 = 1e-9;

/// A point of an ambient Euclidean space, serialized as a plain array of
/// coordinates.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<f64>);

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Point{:?}", self.0)
    }
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Self {
        Point(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Point(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    pub fn dot(&self, other: &Point) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dist_sq(&self, other: &Point) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }

    pub fn dist(&self, other: &Point) -> f64 {
        self.dist_sq(other).sqrt()
    }

    pub fn add(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: f64) -> Point {
        Point(self.0.iter().map(|a| a * s).collect())
    }

    /// `self + t * dir`.
    pub fn translate(&self, dir: &Point, t: f64) -> Point {
        Point(self.0.iter().zip(&dir.0).map(|(a, d)| a + t * d).collect())
    }
}

/// Nonnegative weights summing to one; coordinates of a hull point relative
/// to a vertex list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BarycentricCoords(Vec<f64>);

impl BarycentricCoords {
    /// Validates that every weight is at least `-tol` and that the weights
    /// sum to one within `tol * len`.
    pub fn new(weights: Vec<f64>, tol: f64) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::invalid("barycentric coordinates need >= 1 weight"));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < -tol) {
            return Err(Error::invalid(format!("negative barycentric weight {w}")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > tol * weights.len() as f64 + 1e-12 {
            return Err(Error::invalid(format!(
                "barycentric weights sum to {sum}, expected 1"
            )));
        }
        Ok(BarycentricCoords(weights))
    }

    /// The uniform weight vector `(1/k, ..., 1/k)`.
    pub fn uniform(k: usize) -> Self {
        BarycentricCoords(vec![1.0 / k as f64; k])
    }

    pub fn weights(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Indices of weights strictly above `tol`.
    pub fn support(&self, tol: f64) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, w)| **w > tol)
            .map(|(i, _)| i)
            .collect()
    }
}

/// True iff the points are affinely independent relative to `tol`.
///
/// Rank test on the Gram matrix of difference vectors; a pivot counts as
/// zero when it falls at or below `tol` times the squared diameter of the
/// input, so the test is scale invariant.
pub fn affinely_independent(points: &[Point], tol: f64) -> Result<bool> {
    let k = points
        .len()
        .checked_sub(1)
        .ok_or_else(|| Error::invalid("need >= 1 point"))?;
    check_common_dim(points)?;
    Ok(difference_rank(points, tol)? == k)
}

/// Dimension of the affine hull of the points (rank of the difference set).
pub fn affine_dimension(points: &[Point], tol: f64) -> Result<usize> {
    if points.is_empty() {
        return Err(Error::invalid("need >= 1 point"));
    }
    check_common_dim(points)?;
    difference_rank(points, tol)
}

fn difference_rank(points: &[Point], tol: f64) -> Result<usize> {
    let k = points.len() - 1;
    if k == 0 {
        return Ok(0);
    }
    let last = &points[k];
    let diffs: Vec<Point> = points[..k].iter().map(|p| p.sub(last)).collect();
    let mut gram = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in i..k {
            let g = diffs[i].dot(&diffs[j]);
            gram[i][j] = g;
            gram[j][i] = g;
        }
    }
    let diam_sq = points
        .iter()
        .enumerate()
        .flat_map(|(i, p)| points[i + 1..].iter().map(move |q| p.dist_sq(q)))
        .fold(0.0f64, f64::max);
    Ok(linalg::sym_rank(gram, tol * diam_sq))
}

fn check_common_dim(points: &[Point]) -> Result<usize> {
    let dim = points[0].dim();
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
        if !p.is_finite() {
            return Err(Error::invalid("non-finite coordinate"));
        }
    }
    Ok(dim)
}

/// Convex hull of affinely independent vertices, kept in their given order.
/// Serialized as an array of points.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Simplex {
    vertices: Vec<Point>,
}

impl<'de> Deserialize<'de> for Simplex {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let vertices = Vec::<Point>::deserialize(deserializer)?;
        Simplex::new(vertices).map_err(serde::de::Error::custom)
    }
}

impl Simplex {
    /// Builds a simplex, validating dimensions and affine independence at
    /// the default tolerance.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if !affinely_independent(&vertices, DEFAULT_AFFINE_TOL)? {
            return Err(Error::invalid("vertices are affinely dependent"));
        }
        Ok(Simplex { vertices })
    }

    /// Skips the independence check. For vertex lists whose validity is
    /// inherited from an existing simplex (faces, isometric images).
    pub fn new_unchecked(vertices: Vec<Point>) -> Self {
        debug_assert!(!vertices.is_empty());
        Simplex { vertices }
    }

    /// Dimension `k` of a simplex on `k + 1` vertices.
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i]
    }

    /// Coordinate-wise mean of the vertices.
    pub fn barycenter(&self) -> Point {
        let k = self.vertices.len() as f64;
        let mut mean = vec![0.0; self.ambient_dim()];
        for v in &self.vertices {
            for (m, x) in mean.iter_mut().zip(v.coords()) {
                *m += x;
            }
        }
        Point(mean.into_iter().map(|m| m / k).collect())
    }

    /// All `k`-dimensional faces, ordered lexicographically by the index
    /// subsets that produce them.
    pub fn faces(&self, k: usize) -> Result<Vec<Simplex>> {
        if k > self.dim() {
            return Err(Error::invalid(format!(
                "face dimension {k} exceeds simplex dimension {}",
                self.dim()
            )));
        }
        Ok(index_subsets(self.vertices.len(), k + 1)
            .into_iter()
            .map(|idx| {
                Simplex::new_unchecked(idx.into_iter().map(|i| self.vertices[i].clone()).collect())
            })
            .collect())
    }

    /// The sub-simplex on the given vertex indices (must be nonempty,
    /// strictly increasing).
    pub fn face_by_indices(&self, indices: &[usize]) -> Simplex {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]) && !indices.is_empty());
        Simplex::new_unchecked(indices.iter().map(|&i| self.vertices[i].clone()).collect())
    }

    /// Longest edge length; zero for a single vertex.
    pub fn max_edge(&self) -> f64 {
        let mut best = 0.0f64;
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                best = best.max(self.vertices[i].dist(&self.vertices[j]));
            }
        }
        best
    }

    /// The hull point with the given barycentric coordinates.
    pub fn point_at(&self, coords: &BarycentricCoords) -> Point {
        let mut out = vec![0.0; self.ambient_dim()];
        for (w, v) in coords.weights().iter().zip(&self.vertices) {
            for (o, x) in out.iter_mut().zip(v.coords()) {
                *o += w * x;
            }
        }
        Point(out)
    }

    /// Regular `m`-simplex with every edge exactly `edge`, barycenter at the
    /// origin of `ambient_dim`-space, contained in the span of `basis`
    /// (orthonormal, at least `m` vectors; defaults to the first `m`
    /// coordinate axes).
    ///
    /// The construction starts from the `m + 1` standard basis vectors of an
    /// `(m + 1)`-space, centers them, rescales, and maps them isometrically
    /// onto the requested subspace, so the symmetry is exact up to rounding.
    pub fn regular(
        m: usize,
        edge: f64,
        ambient_dim: usize,
        basis: Option<&[Point]>,
    ) -> Result<Simplex> {
        if !edge.is_finite() || edge <= 0.0 {
            return Err(Error::invalid("edge length must be positive"));
        }
        if ambient_dim < m {
            return Err(Error::invalid(format!(
                "ambient dimension {ambient_dim} too small for a {m}-simplex"
            )));
        }
        if m == 0 {
            return Ok(Simplex::new_unchecked(vec![Point::zeros(ambient_dim)]));
        }
        let axes: Vec<Point>;
        let basis = match basis {
            Some(b) => {
                if b.len() < m {
                    return Err(Error::invalid("subspace basis has fewer than m vectors"));
                }
                for (i, u) in b.iter().enumerate() {
                    if u.dim() != ambient_dim {
                        return Err(Error::DimensionMismatch {
                            expected: ambient_dim,
                            got: u.dim(),
                        });
                    }
                    for (j, v) in b.iter().enumerate() {
                        let want = if i == j { 1.0 } else { 0.0 };
                        if (u.dot(v) - want).abs() > 1e-9 {
                            return Err(Error::invalid("subspace basis is not orthonormal"));
                        }
                    }
                }
                &b[..m]
            }
            None => {
                axes = (0..m)
                    .map(|j| {
                        let mut e = vec![0.0; ambient_dim];
                        e[j] = 1.0;
                        Point(e)
                    })
                    .collect();
                &axes[..]
            }
        };

        // Helmert frame: an orthonormal basis of the hyperplane orthogonal
        // to (1, ..., 1) in R^{m+1}. Column i of the frame gives the
        // m coordinates of the centered i-th standard basis vector.
        let scale = edge / std::f64::consts::SQRT_2;
        let mut vertices = Vec::with_capacity(m + 1);
        for i in 0..=m {
            let mut coeffs = vec![0.0; m]; // coordinates in the Helmert frame
            for j in 1..=m {
                let norm = (j as f64 * (j + 1) as f64).sqrt();
                // Helmert row j: (1, ..., 1, -j, 0, ..., 0) / norm, with j ones
                let entry = if i < j {
                    1.0 / norm
                } else if i == j {
                    -(j as f64) / norm
                } else {
                    0.0
                };
                coeffs[j - 1] = scale * entry;
            }
            let mut v = vec![0.0; ambient_dim];
            for (c, b) in coeffs.iter().zip(basis) {
                for (vi, bi) in v.iter_mut().zip(b.coords()) {
                    *vi += c * bi;
                }
            }
            vertices.push(Point(v));
        }
        Ok(Simplex::new_unchecked(vertices))
    }
}

/// Lexicographically ordered `k`-element subsets of `0..n`.
pub(crate) fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// A point of the round sphere of radius `r`, stored with its ambient
/// coordinates. Serialized as `{"coords": [...], "r": ...}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpherePoint {
    coords: Point,
    #[serde(rename = "r")]
    radius: f64,
}

#[derive(Deserialize)]
struct SpherePointRepr {
    coords: Point,
    r: f64,
}

impl<'de> Deserialize<'de> for SpherePoint {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let repr = SpherePointRepr::deserialize(deserializer)?;
        SpherePoint::new(repr.coords, repr.r).map_err(serde::de::Error::custom)
    }
}

impl SpherePoint {
    /// Validates `|coords| = r` within [`SPHERE_NORM_TOL`] (relative).
    pub fn new(coords: Point, radius: f64) -> Result<Self> {
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::invalid("sphere radius must be positive"));
        }
        if !coords.is_finite() || coords.dim() == 0 {
            return Err(Error::invalid("sphere point needs finite coordinates"));
        }
        let norm = coords.norm();
        if (norm - radius).abs() > SPHERE_NORM_TOL * radius {
            return Err(Error::invalid(format!(
                "|coords| = {norm} does not match radius {radius}"
            )));
        }
        Ok(SpherePoint { coords, radius })
    }

    /// Normalizes a nonzero direction onto the radius-`r` sphere.
    pub fn from_direction(dir: &Point, radius: f64) -> Result<Self> {
        let norm = dir.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::invalid("cannot normalize a zero direction"));
        }
        SpherePoint::new(dir.scale(radius / norm), radius)
    }

    pub fn coords(&self) -> &Point {
        &self.coords
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Sphere dimension `n` for a point with `n + 1` coordinates.
    pub fn sphere_dim(&self) -> usize {
        self.coords.dim() - 1
    }

    pub fn antipode(&self) -> SpherePoint {
        SpherePoint {
            coords: self.coords.scale(-1.0),
            radius: self.radius,
        }
    }

    /// Geodesic distance `r * angle`, in `[0, pi * r]`. The cosine is
    /// clamped to `[-1, 1]` before `acos`, which guards rounding at
    /// antipodes; coinciding points short-circuit to zero since `acos`
    /// cannot resolve angles below the rounding floor.
    pub fn distance(&self, other: &SpherePoint) -> Result<f64> {
        if (self.radius - other.radius).abs() > SPHERE_NORM_TOL * self.radius {
            return Err(Error::RadiusMismatch(self.radius, other.radius));
        }
        if self.coords.dim() != other.coords.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.coords.dim(),
                got: other.coords.dim(),
            });
        }
        if self.coords == other.coords {
            return Ok(0.0);
        }
        if self
            .coords
            .coords()
            .iter()
            .zip(other.coords.coords())
            .all(|(a, b)| *a == -b)
        {
            return Ok(std::f64::consts::PI * self.radius);
        }
        let c = (self.coords.dot(&other.coords) / (self.radius * other.radius)).clamp(-1.0, 1.0);
        Ok(self.radius * c.acos())
    }
}

/// Geodesic distance between two points of the same sphere.
pub fn sphere_distance(x: &SpherePoint, y: &SpherePoint) -> Result<f64> {
    x.distance(y)
}

/// Deterministic sample of `count` points on the `n`-sphere of radius `r`.
///
/// - `n = 1`: equally spaced angles `2 pi k / count`;
/// - `n = 2`: Fibonacci lattice (golden-angle spiral), near-uniform;
/// - `n >= 3`: isotropic Gaussian directions drawn from a ChaCha stream
///   seeded with `seed`, normalized to radius `r`.
///
/// For `n <= 2` the sample does not depend on the seed.
pub fn sample_sphere(n: usize, r: f64, count: usize, seed: u64) -> Result<Vec<SpherePoint>> {
    if n == 0 {
        return Err(Error::invalid("sphere dimension must be >= 1"));
    }
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::invalid("sphere radius must be positive"));
    }
    if count == 0 {
        return Err(Error::invalid("sample size must be >= 1"));
    }
    let mut out = Vec::with_capacity(count);
    match n {
        1 => {
            for k in 0..count {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / count as f64;
                out.push(SpherePoint::new(
                    Point(vec![r * theta.cos(), r * theta.sin()]),
                    r,
                )?);
            }
        }
        2 => {
            let golden_angle = std::f64::consts::PI * (3.0 - 5.0f64.sqrt());
            for k in 0..count {
                let z = 1.0 - (2.0 * k as f64 + 1.0) / count as f64;
                let rho = (1.0 - z * z).max(0.0).sqrt();
                let phi = golden_angle * k as f64;
                let dir = Point(vec![rho * phi.cos(), rho * phi.sin(), z]);
                out.push(SpherePoint::from_direction(&dir, r)?);
            }
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            while out.len() < count {
                let dir = Point((0..=n).map(|_| standard_normal(&mut rng)).collect());
                if dir.norm() < 1e-6 {
                    continue; // vanishing draw, resample
                }
                out.push(SpherePoint::from_direction(&dir, r)?);
            }
        }
    }
    Ok(out)
}

/// Standard normal via Box-Muller; two uniforms per call keeps the stream
/// layout independent of rejection behavior.
pub(crate) fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let u: f64 = rng.gen::<f64>();
        let v: f64 = rng.gen::<f64>();
        if u > f64::MIN_POSITIVE {
            return (-2.0 * u.ln()).sqrt() * (2.0 * std::f64::consts::PI * v).cos();
        }
    }
}
