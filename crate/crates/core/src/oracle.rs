//! Independent reference predicates for cross-checking the LP machinery.
//!
//! Nothing here touches the simplex solver: hull disjointness is decided by
//! separating-axis enumeration (face normals, edge cross products, and
//! vertex differences — a complete axis set for convex polytopes in
//! dimensions two and three), and simplex membership by solving the lifted
//! linear system for the barycentric coordinates directly. The verification
//! suite and the acceptance tests compare these against the LP answers.

use crate::error::{Error, Result};
use crate::geom::{Point, Simplex};
use crate::linalg;

/// Separating-axis verdict for two point clouds in dimension 2 or 3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SatVerdict {
    /// A separating axis exists; `gap` is the best axis separation found
    /// (a lower bound for the hull distance).
    Disjoint { gap: f64 },
    /// No axis separates; `depth` is the smallest axis overlap (how far
    /// from separation the clouds are).
    Intersecting { depth: f64 },
}

impl SatVerdict {
    pub fn intersects(&self) -> bool {
        matches!(self, SatVerdict::Intersecting { .. })
    }

    /// Distance-to-tie: small values mean the instance is too close to
    /// call and should be excluded from exact comparisons.
    pub fn margin(&self) -> f64 {
        match self {
            SatVerdict::Disjoint { gap } => *gap,
            SatVerdict::Intersecting { depth } => *depth,
        }
    }
}

/// Decides whether `conv(a)` and `conv(b)` intersect by separating-axis
/// enumeration. Supports ambient dimensions 2 and 3.
pub fn hulls_intersect_sat(a: &[Point], b: &[Point]) -> Result<SatVerdict> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::invalid("point clouds must be nonempty"));
    }
    let dim = a[0].dim();
    if a.iter().chain(b).any(|p| p.dim() != dim) {
        return Err(Error::invalid("mixed ambient dimensions"));
    }
    let scale = a.iter().chain(b).map(|p| p.norm()).fold(1.0f64, f64::max);
    let axes = match dim {
        2 => axes_2d(a, b, scale),
        3 => axes_3d(a, b, scale),
        d => {
            return Err(Error::invalid(format!(
                "separating-axis oracle supports 2 or 3 dimensions, got {d}"
            )))
        }
    };
    if axes.is_empty() {
        // no usable axis means every cross pair of points coincides, so the
        // hulls share that point
        return Ok(SatVerdict::Intersecting { depth: 0.0 });
    }

    let mut best_gap = f64::NEG_INFINITY;
    for axis in &axes {
        let (min_a, max_a) = project(a, axis);
        let (min_b, max_b) = project(b, axis);
        let gap = (min_b - max_a).max(min_a - max_b);
        best_gap = best_gap.max(gap);
    }
    if best_gap > 0.0 {
        Ok(SatVerdict::Disjoint { gap: best_gap })
    } else {
        Ok(SatVerdict::Intersecting { depth: -best_gap })
    }
}

fn project(points: &[Point], axis: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for p in points {
        let v: f64 = p.coords().iter().zip(axis).map(|(x, u)| x * u).sum();
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (lo, hi)
}

fn push_unit(axes: &mut Vec<Vec<f64>>, v: Vec<f64>, scale: f64) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 1e-12 * scale {
        axes.push(v.into_iter().map(|x| x / norm).collect());
    }
}

fn axes_2d(a: &[Point], b: &[Point], scale: f64) -> Vec<Vec<f64>> {
    let mut axes = Vec::new();
    // edge normals within each cloud
    for cloud in [a, b] {
        for i in 0..cloud.len() {
            for j in i + 1..cloud.len() {
                let d = cloud[i].sub(&cloud[j]);
                push_unit(&mut axes, vec![-d.coords()[1], d.coords()[0]], scale);
            }
        }
    }
    // vertex-vertex directions across the clouds
    for p in a {
        for q in b {
            push_unit(&mut axes, p.sub(q).coords().to_vec(), scale);
        }
    }
    axes
}

fn axes_3d(a: &[Point], b: &[Point], scale: f64) -> Vec<Vec<f64>> {
    let mut axes = Vec::new();
    let scale_sq = scale * scale;
    // face normals: all triples within each cloud
    for cloud in [a, b] {
        for i in 0..cloud.len() {
            for j in i + 1..cloud.len() {
                for k in j + 1..cloud.len() {
                    let u = cloud[j].sub(&cloud[i]);
                    let v = cloud[k].sub(&cloud[i]);
                    push_unit(&mut axes, cross(&u, &v), scale_sq);
                }
            }
        }
    }
    // edge-edge cross products across the clouds
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let u = a[j].sub(&a[i]);
            for k in 0..b.len() {
                for l in k + 1..b.len() {
                    let v = b[l].sub(&b[k]);
                    push_unit(&mut axes, cross(&u, &v), scale_sq);
                }
            }
        }
    }
    // vertex-edge perpendiculars, both ways round; these carry the
    // separating direction when the closest feature pair is a vertex
    // against an edge (degenerate hulls have no face normal there)
    for (edges_of, verts_of) in [(a, b), (b, a)] {
        for i in 0..edges_of.len() {
            for j in i + 1..edges_of.len() {
                let e = edges_of[j].sub(&edges_of[i]);
                let ee = e.norm_sq();
                if ee <= 1e-24 * scale * scale {
                    continue;
                }
                for v in verts_of {
                    let w = v.sub(&edges_of[i]);
                    let t = w.dot(&e) / ee;
                    let perp: Vec<f64> = w
                        .coords()
                        .iter()
                        .zip(e.coords())
                        .map(|(wc, ec)| wc - t * ec)
                        .collect();
                    push_unit(&mut axes, perp, scale);
                }
            }
        }
    }
    // vertex-vertex directions
    for p in a {
        for q in b {
            push_unit(&mut axes, p.sub(q).coords().to_vec(), scale);
        }
    }
    axes
}

fn cross(u: &Point, v: &Point) -> Vec<f64> {
    let u = u.coords();
    let v = v.coords();
    vec![
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

/// Barycentric membership test: solves the lifted system for the weights of
/// `x` in the (affinely independent) simplex directly and checks they are
/// nonnegative and reproduce `x`. Entirely LP-free.
pub fn simplex_contains_barycentric(s: &Simplex, x: &Point, tol: f64) -> Result<bool> {
    let k = s.vertices().len();
    if x.dim() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_dim(),
            got: x.dim(),
        });
    }
    // normal equations of [v_i; 1] w = [x; 1]
    let mut gram = vec![vec![0.0; k]; k];
    let mut rhs = vec![0.0; k];
    for i in 0..k {
        for j in i..k {
            let g = s.vertex(i).dot(s.vertex(j)) + 1.0;
            gram[i][j] = g;
            gram[j][i] = g;
        }
        rhs[i] = s.vertex(i).dot(x) + 1.0;
    }
    let Some((w, _)) = linalg::sym_solve(gram, rhs, 1e-12) else {
        return Err(Error::Degenerate { rcond: 0.0 });
    };
    let scale = 1.0 + x.norm();
    let recon = {
        let mut out = vec![0.0; x.dim()];
        for (wi, v) in w.iter().zip(s.vertices()) {
            for (o, c) in out.iter_mut().zip(v.coords()) {
                *o += wi * c;
            }
        }
        Point::new(out)
    };
    let sum: f64 = w.iter().sum();
    Ok(recon.dist(x) <= tol * scale
        && (sum - 1.0).abs() <= tol * k as f64
        && w.iter().all(|wi| *wi >= -tol))
}
