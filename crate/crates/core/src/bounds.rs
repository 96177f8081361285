//! Closed-form bounds and the extremal construction that attains them.
//!
//! The central quantity is the dimensionless factor `q(n)`: the largest
//! possible minimum distance between the vertex sets of two nontrivially
//! intersecting simplices in `R^n` with unit edge bound,
//!
//! - `q = sqrt(1 - 2/(n+2))` for even `n`,
//! - `q = sqrt(1 - 2(n+2)/((n+1)(n+3)))` for odd `n`.
//!
//! It feeds the distortion bound `pi r / (1 + q)` for arbitrary functions
//! from the `n`-sphere of radius `r` into `R^n`, via the chain
//! `pi r - dist <= gap <= dist * q`. The factor is attained by two regular
//! simplices of dimensions `floor(n/2)` and `ceil(n/2)` crossing
//! orthogonally at their common barycenter, which [`sharp_pair`] constructs
//! explicitly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Point, Simplex};

/// Parity branch a bound was evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// The length scale a bound multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scale {
    /// Edge-length bound `L` of the simplices involved.
    Edge(f64),
    /// Sphere radius `r` of the domain.
    Radius(f64),
}

/// A fully evaluated bound: the dimension, its parity branch, the
/// dimensionless factor `q`, the scale it was applied to, and the resulting
/// value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundSpec {
    pub n: usize,
    pub parity: Parity,
    pub q: f64,
    pub scale: Scale,
    pub value: f64,
}

fn gap_factor(n: usize) -> Result<(Parity, f64)> {
    if n == 0 {
        return Err(Error::invalid("dimension must be >= 1"));
    }
    let nf = n as f64;
    if n.is_multiple_of(2) {
        Ok((Parity::Even, (1.0 - 2.0 / (nf + 2.0)).sqrt()))
    } else {
        Ok((
            Parity::Odd,
            (1.0 - 2.0 * (nf + 2.0) / ((nf + 1.0) * (nf + 3.0))).sqrt(),
        ))
    }
}

/// Sharp upper bound `L * q(n)` on the minimum vertex-set distance of two
/// nontrivially intersecting simplices in `R^n` with edges at most `edge`.
pub fn vertex_gap_bound(n: usize, edge: f64) -> Result<BoundSpec> {
    if !edge.is_finite() || edge < 0.0 {
        return Err(Error::invalid("edge bound must be a nonnegative real"));
    }
    let (parity, q) = gap_factor(n)?;
    Ok(BoundSpec {
        n,
        parity,
        q,
        scale: Scale::Edge(edge),
        value: edge * q,
    })
}

/// Lower bound `pi r / (1 + q(n))` on the distortion of any function from
/// the radius-`r` round `n`-sphere into `R^n`.
pub fn sphere_distortion_bound(n: usize, radius: f64) -> Result<BoundSpec> {
    if !radius.is_finite() || radius <= 0.0 {
        return Err(Error::invalid("sphere radius must be positive"));
    }
    let (parity, q) = gap_factor(n)?;
    Ok(BoundSpec {
        n,
        parity,
        q,
        scale: Scale::Radius(radius),
        value: std::f64::consts::PI * radius / (1.0 + q),
    })
}

/// `sqrt(Rv^2 + Rw^2)`: two intersecting simplices with circumradii `Rv`
/// and `Rw` have vertices at most this far apart.
pub fn circumradius_gap_bound(rv: f64, rw: f64) -> f64 {
    rv.hypot(rw)
}

/// `L * sqrt(1 - (1/(k+1) + 1/(m+1)) / 2)`: the vertex-gap bound for an
/// intersecting pair of known dimensions `k` and `m` with edges at most
/// `edge`.
pub fn pair_dimension_bound(k: usize, m: usize, edge: f64) -> f64 {
    let inner = 1.0 - 0.5 * (1.0 / (k as f64 + 1.0) + 1.0 / (m as f64 + 1.0));
    edge * inner.max(0.0).sqrt()
}

/// The dimension split `(floor(n/2), ceil(n/2))` maximizing
/// [`pair_dimension_bound`] under `k + m = n`, certified by exhaustive
/// comparison over all splits.
pub fn optimal_split(n: usize) -> Result<(usize, usize)> {
    if n == 0 {
        return Err(Error::invalid("dimension must be >= 1"));
    }
    let split = (n / 2, n - n / 2);
    let best = pair_dimension_bound(split.0, split.1, 1.0);
    for k in 0..=n {
        debug_assert!(pair_dimension_bound(k, n - k, 1.0) <= best + 1e-15);
        if pair_dimension_bound(k, n - k, 1.0) > best + 1e-12 {
            return Err(Error::invalid("split certification failed"));
        }
    }
    Ok(split)
}

/// Two regular simplices of dimensions `floor(n/2)` and `ceil(n/2)` with
/// edge `edge`, placed in orthogonal complementary coordinate subspaces of
/// `R^n` with both barycenters at the origin. Every cross vertex distance
/// equals `vertex_gap_bound(n, edge)`, which makes the gap bound sharp.
pub fn sharp_pair(n: usize, edge: f64) -> Result<(Simplex, Simplex)> {
    if n == 0 {
        return Err(Error::invalid("dimension must be >= 1"));
    }
    if !edge.is_finite() || edge <= 0.0 {
        return Err(Error::invalid("edge length must be positive"));
    }
    let (k, m) = optimal_split(n)?;
    let axis = |j: usize| {
        let mut e = vec![0.0; n];
        e[j] = 1.0;
        Point::new(e)
    };
    let basis_a: Vec<Point> = (0..k).map(axis).collect();
    let basis_b: Vec<Point> = (k..n).map(axis).collect();
    let a = Simplex::regular(k, edge, n, if k == 0 { None } else { Some(&basis_a) })?;
    let b = Simplex::regular(m, edge, n, Some(&basis_b))?;
    Ok((a, b))
}
