//! Small dense linear-algebra helpers.
//!
//! Everything here operates on systems of at most a few dozen unknowns, so
//! plain Gaussian elimination with pivoting is both fast enough and easy to
//! reason about. Symmetric positive semi-definite systems (Gram matrices)
//! use diagonal pivoting, which doubles as a cheap rank detector.

/// Result of eliminating a symmetric PSD matrix with diagonal pivoting.
pub(crate) struct SymElim {
    /// Row/column permutation applied, pivot order first.
    pub perm: Vec<usize>,
    /// Number of pivots strictly above the threshold.
    pub rank: usize,
    /// Eliminated matrix (upper triangle in permuted order is meaningful).
    pub mat: Vec<Vec<f64>>,
}

/// Symmetric Gaussian elimination with complete diagonal pivoting.
///
/// `threshold` is an absolute cutoff: a pivot at or below it stops the
/// elimination and everything after counts as numerically zero.
pub(crate) fn sym_eliminate(mut a: Vec<Vec<f64>>, threshold: f64) -> SymElim {
    let n = a.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut rank = 0;

    for step in 0..n {
        // largest remaining diagonal entry
        let mut best = step;
        for j in step + 1..n {
            if a[perm[j]][perm[j]] > a[perm[best]][perm[best]] {
                best = j;
            }
        }
        perm.swap(step, best);
        let p = perm[step];
        let piv = a[p][p];
        if piv <= threshold {
            break;
        }
        rank += 1;
        for r in step + 1..n {
            let i = perm[r];
            let factor = a[i][p] / piv;
            for c in step..n {
                let j = perm[c];
                let apj = a[p][j];
                a[i][j] -= factor * apj;
            }
            a[i][p] = factor; // stash the multiplier
        }
    }

    SymElim { perm, rank, mat: a }
}

/// Rank of a symmetric PSD matrix relative to an absolute pivot threshold.
pub(crate) fn sym_rank(a: Vec<Vec<f64>>, threshold: f64) -> usize {
    sym_eliminate(a, threshold).rank
}

/// Solve a symmetric PSD system `A x = b` with diagonal pivoting.
///
/// Pivots at or below `rel_threshold` times the largest pivot are treated as
/// zero and their variables fixed at zero (a minimum-norm-style solution on
/// the numerically detected range). Returns the solution together with the
/// reciprocal condition estimate `smallest pivot / largest pivot`, where a
/// rank-deficient system reports the first rejected pivot's ratio.
pub(crate) fn sym_solve(
    mut a: Vec<Vec<f64>>,
    mut b: Vec<f64>,
    rel_threshold: f64,
) -> Option<(Vec<f64>, f64)> {
    let n = a.len();
    if n == 0 {
        return Some((Vec::new(), 1.0));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut first_piv = 0.0f64;
    let mut rcond = 1.0f64;
    let mut rank = n;

    for step in 0..n {
        let mut best = step;
        for j in step + 1..n {
            if a[perm[j]][perm[j]] > a[perm[best]][perm[best]] {
                best = j;
            }
        }
        perm.swap(step, best);
        let p = perm[step];
        let piv = a[p][p];
        if step == 0 {
            if piv <= 0.0 {
                return None;
            }
            first_piv = piv;
        }
        rcond = (piv / first_piv).max(0.0);
        if piv <= rel_threshold * first_piv {
            rank = step;
            break;
        }
        for r in step + 1..n {
            let i = perm[r];
            let factor = a[i][p] / piv;
            if factor == 0.0 {
                continue;
            }
            for c in step..n {
                let j = perm[c];
                let apj = a[p][j];
                a[i][j] -= factor * apj;
            }
            b[i] -= factor * b[p];
        }
    }

    let mut y = vec![0.0; n]; // permuted solution; free variables stay zero
    for step in (0..rank).rev() {
        let p = perm[step];
        let mut s = b[p];
        for c in step + 1..n {
            let j = perm[c];
            s -= a[p][j] * y[c];
        }
        y[step] = s / a[p][p];
    }
    let mut x = vec![0.0; n];
    for (pos, &idx) in perm.iter().enumerate() {
        x[idx] = y[pos];
    }
    Some((x, rcond))
}

/// A unit vector in the (near-)null space of a symmetric PSD matrix, or
/// `None` if all pivots exceed the absolute `threshold`.
pub(crate) fn sym_null_vector(a: Vec<Vec<f64>>, threshold: f64) -> Option<Vec<f64>> {
    let n = a.len();
    if n == 0 {
        return None;
    }
    let scale = (0..n).map(|i| a[i][i]).fold(0.0f64, f64::max);
    if scale <= threshold {
        // the whole matrix is numerically zero; any direction works
        let mut v = vec![0.0; n];
        v[0] = 1.0;
        return Some(v);
    }
    let elim = sym_eliminate(a, threshold);
    if elim.rank == n {
        return None;
    }
    // Free variable = first dropped pivot position; back-substitute through
    // the eliminated upper triangle in permuted order.
    let r = elim.rank;
    let mut y = vec![0.0; n];
    y[r] = 1.0;
    for step in (0..r).rev() {
        let p = elim.perm[step];
        let piv = elim.mat[p][p];
        let mut s = 0.0;
        for c in step + 1..n {
            let j = elim.perm[c];
            s += elim.mat[p][j] * y[c];
        }
        y[step] = -s / piv;
    }
    let mut v = vec![0.0; n];
    for (pos, &idx) in elim.perm.iter().enumerate() {
        v[idx] = y[pos];
    }
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        return None;
    }
    for x in &mut v {
        *x /= norm;
    }
    Some(v)
}

/// Modified Gram-Schmidt. Returns an orthonormal basis of the span of
/// `vecs`, dropping vectors whose residual norm falls below `tol` times the
/// largest input norm.
pub(crate) fn orthonormalize(vecs: &[Vec<f64>], tol: f64) -> Vec<Vec<f64>> {
    let scale = vecs
        .iter()
        .map(|v| v.iter().map(|x| x * x).sum::<f64>().sqrt())
        .fold(0.0f64, f64::max);
    let mut basis: Vec<Vec<f64>> = Vec::new();
    if scale == 0.0 {
        return basis;
    }
    for v in vecs {
        let mut w = v.clone();
        // two passes of re-orthogonalization keep the basis clean
        for _ in 0..2 {
            for b in &basis {
                let d: f64 = w.iter().zip(b).map(|(x, y)| x * y).sum();
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= d * bi;
                }
            }
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > tol * scale {
            for x in &mut w {
                *x /= norm;
            }
            basis.push(w);
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_detects_degeneracy() {
        // Gram matrix of two parallel vectors
        let g = vec![vec![1.0, 2.0], vec![2.0, 4.0]];
        assert_eq!(sym_rank(g, 1e-12), 1);
        let g = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        assert_eq!(sym_rank(g, 1e-12), 2);
    }

    #[test]
    fn null_vector_of_singular_matrix() {
        let g = vec![vec![1.0, 2.0], vec![2.0, 4.0]];
        let v = sym_null_vector(g.clone(), 1e-12).unwrap();
        let r0 = g[0][0] * v[0] + g[0][1] * v[1];
        let r1 = g[1][0] * v[0] + g[1][1] * v[1];
        assert!(r0.abs() < 1e-10 && r1.abs() < 1e-10);
        assert!(sym_null_vector(vec![vec![1.0, 0.0], vec![0.0, 1.0]], 1e-12).is_none());
    }

    #[test]
    fn orthonormalize_drops_dependent_vectors() {
        let vecs = vec![
            vec![1.0, 0.0, 0.0],
            vec![1.0, 1.0, 0.0],
            vec![2.0, 1.0, 0.0],
        ];
        let basis = orthonormalize(&vecs, 1e-12);
        assert_eq!(basis.len(), 2);
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let d: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((d - want).abs() < 1e-12);
            }
        }
    }
}
