//! Convex intersection with machine-checkable witnesses.
//!
//! Intersection of two convex hulls is decided as LP feasibility: weights
//! `alpha, beta >= 0` with `sum alpha = sum beta = 1` and
//! `sum alpha_i a_i = sum beta_j b_j`. A feasible basic solution doubles as
//! a Caratheodory certificate, since the positive-weight columns of a basis
//! are affinely independent. On top of that sit two reductions: pruning a
//! hull representation down to at most `n + 1` points, and shrinking an
//! intersecting simplex pair to faces whose dimensions sum to at most the
//! ambient dimension by marching along a shared hull direction until a
//! boundary is hit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{affinely_independent, BarycentricCoords, Point, Simplex, DEFAULT_AFFINE_TOL};
use crate::linalg;
use crate::lp::{solve_feasibility, Feasibility, LpProblem};

pub use crate::lp::DEFAULT_LP_TOL;

/// A common point of two convex hulls, expressed in the coordinates of
/// both.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntersectionWitness {
    /// The shared point.
    pub point: Point,
    /// Hull weights over the first vertex list.
    pub alpha: BarycentricCoords,
    /// Hull weights over the second vertex list.
    pub beta: BarycentricCoords,
    /// Indices with strictly positive weight in `alpha`.
    pub support_a: Vec<usize>,
    /// Indices with strictly positive weight in `beta`.
    pub support_b: Vec<usize>,
}

impl IntersectionWitness {
    fn from_weights(
        a: &[Point],
        b: &[Point],
        mut alpha: Vec<f64>,
        mut beta: Vec<f64>,
        tol: f64,
    ) -> Result<Self> {
        snap_and_normalize(&mut alpha, tol);
        snap_and_normalize(&mut beta, tol);
        let point_a = combine(a, &alpha);
        let point_b = combine(b, &beta);
        let scale = 1.0 + point_a.norm().max(point_b.norm());
        if point_a.dist(&point_b) > 1e3 * tol.max(1e-12) * scale {
            return Err(Error::invalid(
                "witness weights do not agree on a common point",
            ));
        }
        // midpoint smooths the residual between the two hull expressions
        let point = point_a.add(&point_b).scale(0.5);
        let support_a = positive_support(&alpha);
        let support_b = positive_support(&beta);
        Ok(IntersectionWitness {
            point,
            alpha: BarycentricCoords::new(alpha, tol.max(1e-12))?,
            beta: BarycentricCoords::new(beta, tol.max(1e-12))?,
            support_a,
            support_b,
        })
    }
}

fn positive_support(weights: &[f64]) -> Vec<usize> {
    weights
        .iter()
        .enumerate()
        .filter(|(_, w)| **w > 0.0)
        .map(|(i, _)| i)
        .collect()
}

fn snap_and_normalize(weights: &mut [f64], tol: f64) {
    let tol = tol.max(1e-14);
    for w in weights.iter_mut() {
        if *w <= tol {
            *w = 0.0;
        }
    }
    let sum: f64 = weights.iter().sum();
    if sum > 0.0 {
        for w in weights.iter_mut() {
            *w /= sum;
        }
    }
}

fn combine(points: &[Point], weights: &[f64]) -> Point {
    let mut out = vec![0.0; points[0].dim()];
    for (w, p) in weights.iter().zip(points) {
        if *w != 0.0 {
            for (o, x) in out.iter_mut().zip(p.coords()) {
                *o += w * x;
            }
        }
    }
    Point::new(out)
}

fn check_same_ambient(a: &[Point], b: &[Point]) -> Result<usize> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::invalid("point clouds must be nonempty"));
    }
    let n = a[0].dim();
    for p in a.iter().chain(b) {
        if p.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.dim(),
            });
        }
    }
    Ok(n)
}

/// Feasibility LP for `conv(a)` meeting `conv(b)`; `None` when the phase-1
/// margin exceeds `tol`.
pub fn hull_intersection(
    a: &[Point],
    b: &[Point],
    tol: f64,
) -> Result<Option<IntersectionWitness>> {
    let n = check_same_ambient(a, b)?;
    let ka = a.len();
    let kb = b.len();
    let mut rows = Vec::with_capacity(n + 2);
    let mut rhs = Vec::with_capacity(n + 2);
    for coord in 0..n {
        let mut row = Vec::with_capacity(ka + kb);
        for p in a {
            row.push(p.coords()[coord]);
        }
        for q in b {
            row.push(-q.coords()[coord]);
        }
        rows.push(row);
        rhs.push(0.0);
    }
    let mut sum_a = vec![0.0; ka + kb];
    sum_a[..ka].fill(1.0);
    rows.push(sum_a);
    rhs.push(1.0);
    let mut sum_b = vec![0.0; ka + kb];
    sum_b[ka..].fill(1.0);
    rows.push(sum_b);
    rhs.push(1.0);

    let problem = LpProblem::new(rows, rhs)?;
    match solve_feasibility(&problem, tol)? {
        Feasibility::Infeasible { .. } => Ok(None),
        Feasibility::Feasible(sol) => {
            let alpha = sol.x[..ka].to_vec();
            let beta = sol.x[ka..].to_vec();
            Ok(Some(IntersectionWitness::from_weights(
                a, b, alpha, beta, tol,
            )?))
        }
    }
}

/// Intersection of two closed simplices (boundary contact counts).
pub fn simplex_intersection(
    a: &Simplex,
    b: &Simplex,
    tol: f64,
) -> Result<Option<IntersectionWitness>> {
    hull_intersection(a.vertices(), b.vertices(), tol)
}

/// Prunes a hull representation of `x` over `cloud` to an affinely
/// independent subset of at most `dim + 1` points whose hull still contains
/// `x`.
///
/// Fails with [`Error::NotInHull`] when the feasibility margin exceeds
/// `tol`.
pub fn caratheodory_reduce(x: &Point, cloud: &[Point], tol: f64) -> Result<Simplex> {
    let n = check_same_ambient(std::slice::from_ref(x), cloud)?;
    // a cloud member equal to x is its own certificate
    let scale = 1.0 + x.norm();
    if let Some(hit) = cloud.iter().find(|p| p.dist(x) <= 1e-12 * scale) {
        return Ok(Simplex::new_unchecked(vec![hit.clone()]));
    }

    let mut rows = Vec::with_capacity(n + 1);
    let mut rhs = Vec::with_capacity(n + 1);
    for coord in 0..n {
        rows.push(cloud.iter().map(|p| p.coords()[coord]).collect());
        rhs.push(x.coords()[coord]);
    }
    rows.push(vec![1.0; cloud.len()]);
    rhs.push(1.0);
    let problem = LpProblem::new(rows, rhs)?;
    let sol = match solve_feasibility(&problem, tol)? {
        Feasibility::Infeasible { margin } => return Err(Error::NotInHull { margin }),
        Feasibility::Feasible(sol) => sol,
    };

    let mut weights = sol.x;
    snap_and_normalize(&mut weights, tol);
    let mut support: Vec<usize> = positive_support(&weights);
    let mut w: Vec<f64> = support.iter().map(|&i| weights[i]).collect();

    // A basic solution already has affinely independent support; the loop
    // only fires on numerical near-dependence.
    for _ in 0..cloud.len() {
        let pts: Vec<Point> = support.iter().map(|&i| cloud[i].clone()).collect();
        if affinely_independent(&pts, DEFAULT_AFFINE_TOL)? {
            return Simplex::new(pts);
        }
        if !drop_one_dependent(&mut support, &mut w, cloud) {
            return Simplex::new(support.iter().map(|&i| cloud[i].clone()).collect());
        }
    }
    Err(Error::invalid("dependence elimination failed to converge"))
}

/// One step of classical Caratheodory reduction: finds an affine dependence
/// among the support points and slides the weights until one hits zero.
fn drop_one_dependent(support: &mut Vec<usize>, weights: &mut Vec<f64>, cloud: &[Point]) -> bool {
    let k = support.len();
    if k < 2 {
        return false;
    }
    // lifted Gram of (p_i, 1): a null vector gives sum g_i p_i = 0 with
    // sum g_i = 0
    let mut gram = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in i..k {
            let g = cloud[support[i]].dot(&cloud[support[j]]) + 1.0;
            gram[i][j] = g;
            gram[j][i] = g;
        }
    }
    let scale = (0..k).map(|i| gram[i][i]).fold(1.0f64, f64::max);
    let Some(mut dir) = linalg::sym_null_vector(gram, 1e-11 * scale) else {
        return false;
    };
    if dir.iter().all(|g| *g <= 0.0) {
        for g in &mut dir {
            *g = -*g;
        }
    }
    let mut theta = f64::INFINITY;
    let mut drop_at = None;
    for (i, g) in dir.iter().enumerate() {
        if *g > 1e-14 {
            let step = weights[i] / g;
            if step < theta {
                theta = step;
                drop_at = Some(i);
            }
        }
    }
    let Some(drop_at) = drop_at else { return false };
    for (w, g) in weights.iter_mut().zip(&dir) {
        *w = (*w - theta * g).max(0.0);
    }
    weights[drop_at] = 0.0;
    let mut keep_support = Vec::with_capacity(k - 1);
    let mut keep_weights = Vec::with_capacity(k - 1);
    for i in 0..k {
        if weights[i] > 0.0 {
            keep_support.push(support[i]);
            keep_weights.push(weights[i]);
        }
    }
    let sum: f64 = keep_weights.iter().sum();
    for w in &mut keep_weights {
        *w /= sum;
    }
    *support = keep_support;
    *weights = keep_weights;
    true
}

/// Lexicographically smallest `(i, j)` attaining the minimum distance
/// between the vertex sets of `a` and `b`, with that distance.
pub fn min_vertex_distance(a: &Simplex, b: &Simplex) -> (usize, usize, f64) {
    let mut best = (0usize, 0usize, f64::INFINITY);
    for (i, v) in a.vertices().iter().enumerate() {
        for (j, w) in b.vertices().iter().enumerate() {
            let d = v.dist(w);
            if d < best.2 {
                best = (i, j, d);
            }
        }
    }
    best
}

/// Replaces an intersecting pair by intersecting faces whose dimensions sum
/// to at most the ambient dimension.
///
/// While the dimensions are too large, the affine hulls share a direction
/// through the witness; marching along it must leave one of the compact
/// simplices through a proper face, which strictly reduces the total
/// dimension. A boundary hit shared by both simplices within tolerance is
/// resolved in favor of the first simplex and logged.
pub fn reduce_to_complementary_dims(
    a: &Simplex,
    b: &Simplex,
    witness: &IntersectionWitness,
) -> Result<(Simplex, Simplex, IntersectionWitness)> {
    let n = check_same_ambient(a.vertices(), b.vertices())?;
    if witness.alpha.len() != a.vertices().len() || witness.beta.len() != b.vertices().len() {
        return Err(Error::invalid("witness does not match the simplex pair"));
    }

    let mut cur_a = a.clone();
    let mut cur_b = b.clone();
    let mut alpha = witness.alpha.weights().to_vec();
    let mut beta = witness.beta.weights().to_vec();

    while cur_a.dim() + cur_b.dim() > n {
        let u = shared_direction(&cur_a, &cur_b)?;
        let ca = barycentric_velocity(&cur_a, &u)?;
        let cb = barycentric_velocity(&cur_b, &u)?;
        let t_a = exit_time(&alpha, &ca);
        let t_b = exit_time(&beta, &cb);
        let t = t_a.min(t_b);
        if !t.is_finite() {
            return Err(Error::invalid("march direction never exits either simplex"));
        }

        for (w, c) in alpha.iter_mut().zip(&ca) {
            *w = (*w + t * c).max(0.0);
        }
        for (w, c) in beta.iter_mut().zip(&cb) {
            *w = (*w + t * c).max(0.0);
        }

        let ambiguity = 1e-9 * (1.0 + t.abs());
        let reduce_a = t_a <= t_b + ambiguity;
        if t_b <= t_a + ambiguity && reduce_a && cur_b.dim() > 0 {
            log::debug!(
                "ambiguous boundary hit (t_a = {t_a:.3e}, t_b = {t_b:.3e}); reducing the first simplex"
            );
        }
        if reduce_a {
            let (s, w) = drop_exited(&cur_a, &alpha, &ca);
            cur_a = s;
            alpha = w;
        } else {
            let (s, w) = drop_exited(&cur_b, &beta, &cb);
            cur_b = s;
            beta = w;
        }
    }

    // refresh the witness through the LP so the output re-verifies exactly
    let refreshed = simplex_intersection(&cur_a, &cur_b, DEFAULT_LP_TOL)?
        .ok_or_else(|| Error::invalid("reduced faces lost their intersection"))?;
    Ok((cur_a, cur_b, refreshed))
}

/// Unit direction shared by the affine hulls of both simplices.
fn shared_direction(a: &Simplex, b: &Simplex) -> Result<Point> {
    let basis_a = direction_basis(a);
    let basis_b = direction_basis(b);
    if basis_a.is_empty() || basis_b.is_empty() {
        return Err(Error::invalid(
            "a zero-dimensional simplex has no march direction",
        ));
    }
    let k = basis_a.len();
    // columns of M: components of basis_a vectors orthogonal to span(basis_b)
    let mut m_cols: Vec<Vec<f64>> = Vec::with_capacity(k);
    for q in &basis_a {
        let mut w = q.clone();
        for bvec in &basis_b {
            let d: f64 = w.iter().zip(bvec).map(|(x, y)| x * y).sum();
            for (wi, bi) in w.iter_mut().zip(bvec) {
                *wi -= d * bi;
            }
        }
        m_cols.push(w);
    }
    let mut gram = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in i..k {
            let g: f64 = m_cols[i].iter().zip(&m_cols[j]).map(|(x, y)| x * y).sum();
            gram[i][j] = g;
            gram[j][i] = g;
        }
    }
    let coeffs = linalg::sym_null_vector(gram.clone(), 1e-9)
        .or_else(|| linalg::sym_null_vector(gram, 1e-6))
        .ok_or_else(|| Error::invalid("affine hulls share no direction"))?;
    let dim = basis_a[0].len();
    let mut u = vec![0.0; dim];
    for (c, q) in coeffs.iter().zip(&basis_a) {
        for (ui, qi) in u.iter_mut().zip(q) {
            *ui += c * qi;
        }
    }
    let norm = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm < 1e-12 {
        return Err(Error::invalid("shared direction degenerated to zero"));
    }
    for x in &mut u {
        *x /= norm;
    }
    Ok(Point::new(u))
}

fn direction_basis(s: &Simplex) -> Vec<Vec<f64>> {
    let v0 = &s.vertices()[0];
    let diffs: Vec<Vec<f64>> = s.vertices()[1..]
        .iter()
        .map(|v| v.sub(v0).coords().to_vec())
        .collect();
    linalg::orthonormalize(&diffs, 1e-12)
}

/// Coefficients `c` with `u = sum c_i v_i` and `sum c_i = 0`, so hull
/// weights move linearly along the march.
fn barycentric_velocity(s: &Simplex, u: &Point) -> Result<Vec<f64>> {
    let k = s.dim();
    if k == 0 {
        return Ok(vec![0.0]);
    }
    let v_last = &s.vertices()[k];
    let diffs: Vec<Point> = s.vertices()[..k].iter().map(|v| v.sub(v_last)).collect();
    let mut gram = vec![vec![0.0; k]; k];
    let mut rhs = vec![0.0; k];
    for i in 0..k {
        for j in i..k {
            let g = diffs[i].dot(&diffs[j]);
            gram[i][j] = g;
            gram[j][i] = g;
        }
        rhs[i] = diffs[i].dot(u);
    }
    let (y, _) = linalg::sym_solve(gram, rhs, 1e-13)
        .ok_or_else(|| Error::invalid("degenerate simplex frame"))?;
    let mut c = y;
    let total: f64 = c.iter().sum();
    c.push(-total);
    Ok(c)
}

/// Largest `t >= 0` keeping `w + t c` nonnegative; infinite when no
/// coefficient is negative.
fn exit_time(weights: &[f64], velocity: &[f64]) -> f64 {
    let mut t = f64::INFINITY;
    for (w, c) in weights.iter().zip(velocity) {
        if *c < -1e-13 {
            t = t.min((w.max(0.0)) / -c);
        }
    }
    t
}

/// Drops the vertices whose weights reached zero after the march; keeps at
/// least the best-supported vertex.
fn drop_exited(s: &Simplex, weights: &[f64], velocity: &[f64]) -> (Simplex, Vec<f64>) {
    let snap = 1e-10;
    let mut keep: Vec<usize> = Vec::with_capacity(weights.len());
    for (i, w) in weights.iter().enumerate() {
        if *w > snap {
            keep.push(i);
        }
    }
    if keep.len() == weights.len() {
        // numerically nothing hit zero: force out the fastest-shrinking vertex
        let mut worst = 0;
        for (i, c) in velocity.iter().enumerate() {
            if *c < velocity[worst] {
                worst = i;
            }
        }
        keep.retain(|&i| i != worst);
    }
    if keep.is_empty() {
        let best = weights
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .map(|(i, _)| i)
            .unwrap_or(0);
        keep.push(best);
    }
    let mut w: Vec<f64> = keep.iter().map(|&i| weights[i].max(0.0)).collect();
    let sum: f64 = w.iter().sum();
    if sum > 0.0 {
        for x in &mut w {
            *x /= sum;
        }
    } else {
        let each = 1.0 / w.len() as f64;
        w.iter_mut().for_each(|x| *x = each);
    }
    (s.face_by_indices(&keep), w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(coords: &[f64]) -> Point {
        Point::new(coords.to_vec())
    }

    #[test]
    fn identical_simplices_intersect() {
        let s = Simplex::new(vec![p(&[0.0, 0.0]), p(&[1.0, 0.0]), p(&[0.0, 1.0])]).unwrap();
        let w = simplex_intersection(&s, &s, DEFAULT_LP_TOL)
            .unwrap()
            .unwrap();
        // the witness itself re-verifies
        assert!(s.point_at(&w.alpha).dist(&w.point) < 1e-9);
        assert!(s.point_at(&w.beta).dist(&w.point) < 1e-9);
    }

    #[test]
    fn disjoint_segments_do_not_intersect() {
        let a = Simplex::new(vec![p(&[0.0]), p(&[1.0])]).unwrap();
        let b = Simplex::new(vec![p(&[2.0]), p(&[3.0])]).unwrap();
        assert!(simplex_intersection(&a, &b, DEFAULT_LP_TOL)
            .unwrap()
            .is_none());
    }

    #[test]
    fn unit_square_diagonals_cross_at_center() {
        let a = Simplex::new(vec![p(&[0.0, 0.0]), p(&[1.0, 1.0])]).unwrap();
        let b = Simplex::new(vec![p(&[1.0, 0.0]), p(&[0.0, 1.0])]).unwrap();
        let w = simplex_intersection(&a, &b, DEFAULT_LP_TOL)
            .unwrap()
            .unwrap();
        assert!(w.point.dist(&p(&[0.5, 0.5])) < 1e-9);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Simplex::new(vec![p(&[0.0]), p(&[1.0])]).unwrap();
        let b = Simplex::new(vec![p(&[0.0, 0.0]), p(&[1.0, 0.0])]).unwrap();
        assert!(matches!(
            simplex_intersection(&a, &b, DEFAULT_LP_TOL),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn hull_intersection_trivial_cases() {
        let origin = [p(&[0.0, 0.0])];
        let w = hull_intersection(&origin, &origin, DEFAULT_LP_TOL)
            .unwrap()
            .unwrap();
        assert!(w.point.dist(&origin[0]) < 1e-12);

        let left = [p(&[-2.0, 0.0]), p(&[-1.0, 1.0]), p(&[-1.5, -1.0])];
        let right = [p(&[1.0, 0.0]), p(&[2.0, 1.0]), p(&[1.5, -1.0])];
        assert!(hull_intersection(&left, &right, DEFAULT_LP_TOL)
            .unwrap()
            .is_none());
    }

    #[test]
    fn square_center_witness_is_basic() {
        let corners = [
            p(&[0.0, 0.0]),
            p(&[1.0, 0.0]),
            p(&[0.0, 1.0]),
            p(&[1.0, 1.0]),
        ];
        let center = [p(&[0.5, 0.5])];
        let w = hull_intersection(&corners, &center, DEFAULT_LP_TOL)
            .unwrap()
            .unwrap();
        assert!(w.support_a.len() <= 3);
        assert!(w.point.dist(&center[0]) < 1e-9);
    }

    #[test]
    fn caratheodory_examples() {
        // x in the cloud: singleton
        let cloud = [p(&[0.0, 0.0]), p(&[1.0, 0.0]), p(&[0.0, 1.0])];
        let s = caratheodory_reduce(&p(&[1.0, 0.0]), &cloud, DEFAULT_LP_TOL).unwrap();
        assert_eq!(s.dim(), 0);
        assert!(s.vertices()[0].dist(&p(&[1.0, 0.0])) < 1e-12);

        // midpoint of a segment: both endpoints
        let seg = [p(&[0.0]), p(&[1.0])];
        let s = caratheodory_reduce(&p(&[0.5]), &seg, DEFAULT_LP_TOL).unwrap();
        assert_eq!(s.dim(), 1);

        // center of the unit square: at most 3 corners suffice.
        // Oracle: enumerate subsets; the center lies in a corner triangle
        // but in no smaller subset, so the answer has exactly 3 vertices.
        let corners = [
            p(&[0.0, 0.0]),
            p(&[1.0, 0.0]),
            p(&[0.0, 1.0]),
            p(&[1.0, 1.0]),
        ];
        let center = p(&[0.5, 0.5]);
        let s = caratheodory_reduce(&center, &corners, DEFAULT_LP_TOL).unwrap();
        assert!(s.vertices().len() <= 3);
        assert!(affinely_independent(s.vertices(), DEFAULT_AFFINE_TOL).unwrap());
        let back =
            hull_intersection(s.vertices(), std::slice::from_ref(&center), DEFAULT_LP_TOL).unwrap();
        assert!(back.is_some());

        // not in the hull: error with a positive margin
        match caratheodory_reduce(&p(&[5.0, 5.0]), &corners, DEFAULT_LP_TOL) {
            Err(Error::NotInHull { margin }) => assert!(margin > 1.0),
            other => panic!("expected NotInHull, got {other:?}"),
        }
    }

    #[test]
    fn dependence_elimination_step() {
        // three collinear support points with positive weights
        let cloud = [p(&[-1.0, 0.0]), p(&[0.0, 0.0]), p(&[1.0, 0.0])];
        let mut support = vec![0usize, 1, 2];
        let mut weights = vec![0.25, 0.5, 0.25];
        assert!(drop_one_dependent(&mut support, &mut weights, &cloud));
        assert!(support.len() < 3);
        let x: Point = combine(
            &support
                .iter()
                .map(|&i| cloud[i].clone())
                .collect::<Vec<_>>(),
            &weights,
        );
        assert!(x.dist(&p(&[0.0, 0.0])) < 1e-12); // the combination is preserved
    }

    #[test]
    fn min_vertex_distance_examples() {
        let shared = p(&[1.0, 0.0]);
        let a = Simplex::new(vec![p(&[0.0, 0.0]), shared.clone()]).unwrap();
        let b = Simplex::new(vec![shared.clone(), p(&[2.0, 2.0])]).unwrap();
        assert_eq!(min_vertex_distance(&a, &b), (1, 0, 0.0));

        let a = Simplex::new(vec![p(&[0.0]), p(&[1.0])]).unwrap();
        let b = Simplex::new(vec![p(&[2.0]), p(&[3.0])]).unwrap();
        let (i, j, d) = min_vertex_distance(&a, &b);
        assert_eq!((i, j), (1, 0));
        assert!((d - 1.0).abs() < 1e-15);
    }

    #[test]
    fn crossing_segments_in_the_plane_stay_unchanged() {
        let a = Simplex::new(vec![p(&[-1.0, 0.0]), p(&[1.0, 0.0])]).unwrap();
        let b = Simplex::new(vec![p(&[0.0, -1.0]), p(&[0.0, 1.0])]).unwrap();
        let w = simplex_intersection(&a, &b, DEFAULT_LP_TOL)
            .unwrap()
            .unwrap();
        let (ra, rb, rw) = reduce_to_complementary_dims(&a, &b, &w).unwrap();
        assert_eq!(ra.dim() + rb.dim(), 2);
        assert!(rw.point.dist(&p(&[0.0, 0.0])) < 1e-9);
    }

    #[test]
    fn overlapping_triangles_reduce_in_the_plane() {
        let a = Simplex::new(vec![p(&[0.0, 0.0]), p(&[2.0, 0.0]), p(&[0.0, 2.0])]).unwrap();
        let b = Simplex::new(vec![p(&[0.5, 0.5]), p(&[2.5, 0.6]), p(&[0.6, 2.5])]).unwrap();
        let w = simplex_intersection(&a, &b, DEFAULT_LP_TOL)
            .unwrap()
            .unwrap();
        let (ra, rb, rw) = reduce_to_complementary_dims(&a, &b, &w).unwrap();
        assert!(ra.dim() + rb.dim() <= 2);
        assert!(simplex_intersection(&ra, &rb, DEFAULT_LP_TOL)
            .unwrap()
            .is_some());
        assert!(ra.point_at(&rw.alpha).dist(&rw.point) < 1e-8);
    }

    #[test]
    fn coincident_triangles_reduce_in_space() {
        let verts = vec![
            p(&[0.0, 0.0, 0.0]),
            p(&[1.0, 0.0, 0.0]),
            p(&[0.0, 1.0, 0.0]),
        ];
        let a = Simplex::new(verts.clone()).unwrap();
        let b = Simplex::new(verts).unwrap();
        let w = simplex_intersection(&a, &b, DEFAULT_LP_TOL)
            .unwrap()
            .unwrap();
        let (ra, rb, _) = reduce_to_complementary_dims(&a, &b, &w).unwrap();
        assert!(ra.dim() + rb.dim() <= 3);
        assert!(simplex_intersection(&ra, &rb, DEFAULT_LP_TOL)
            .unwrap()
            .is_some());
    }

    #[test]
    fn witnesses_are_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let a: Vec<Point> = (0..4)
                .map(|_| p(&[rng.gen::<f64>(), rng.gen::<f64>()]))
                .collect();
            let b: Vec<Point> = (0..4)
                .map(|_| p(&[rng.gen::<f64>(), rng.gen::<f64>()]))
                .collect();
            let w1 = hull_intersection(&a, &b, DEFAULT_LP_TOL).unwrap();
            let w2 = hull_intersection(&a, &b, DEFAULT_LP_TOL).unwrap();
            assert_eq!(w1, w2);
        }
    }
}
