//! Dense phase-1 simplex solver for equality-form feasibility problems.
//!
//! Every convex-intersection question in this crate reduces to: does
//! `A x = b, x >= 0` admit a solution? The problems are tiny (a handful of
//! rows, a few dozen columns), so a dense tableau with Bland's anti-cycling
//! rule is the right tool: no randomness, no cycling, and identical inputs
//! always pivot identically, which makes witnesses reproducible.
//!
//! Pivoting is floating point with a feasibility margin; an exact rational
//! backend could sit behind the same interface as an extension.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default feasibility margin: phase-1 objectives at or below this count as
/// feasible.
pub const DEFAULT_LP_TOL: f64 = 1e-10;

/// An equality-constrained feasibility problem `A x = b, x >= 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LpProblem {
    /// Constraint rows of `A`.
    pub rows: Vec<Vec<f64>>,
    /// Right-hand side `b`, one entry per row.
    pub rhs: Vec<f64>,
}

impl LpProblem {
    pub fn new(rows: Vec<Vec<f64>>, rhs: Vec<f64>) -> Result<Self> {
        if rows.len() != rhs.len() {
            return Err(Error::invalid(
                "constraint matrix and rhs disagree on row count",
            ));
        }
        let n = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("ragged constraint matrix"));
        }
        if rows.iter().flatten().any(|x| !x.is_finite()) || rhs.iter().any(|x| !x.is_finite()) {
            return Err(Error::invalid("non-finite LP coefficient"));
        }
        Ok(LpProblem { rows, rhs })
    }

    pub fn num_vars(&self) -> usize {
        self.rows.first().map(|r| r.len()).unwrap_or(0)
    }
}

/// A basic feasible solution: the variable values and, per constraint row,
/// the index of its basic variable (rows pinned to a residual artificial
/// variable report `None`; this only happens for redundant rows).
#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub basis: Vec<Option<usize>>,
}

/// Outcome of the phase-1 solve.
#[derive(Debug, Clone, PartialEq)]
pub enum Feasibility {
    Feasible(LpSolution),
    /// The minimum total constraint violation achievable with `x >= 0`.
    Infeasible {
        margin: f64,
    },
}

impl Feasibility {
    pub fn feasible(self) -> Option<LpSolution> {
        match self {
            Feasibility::Feasible(s) => Some(s),
            Feasibility::Infeasible { .. } => None,
        }
    }
}

/// Minimizes the total artificial-variable mass of `A x = b, x >= 0` with
/// Bland's rule. Feasible when the optimum is at most `tol`.
pub fn solve_feasibility(problem: &LpProblem, tol: f64) -> Result<Feasibility> {
    let m = problem.rows.len();
    let n = problem.num_vars();
    if m == 0 {
        return Ok(Feasibility::Feasible(LpSolution {
            x: vec![0.0; n],
            basis: Vec::new(),
        }));
    }

    // tableau: n structural columns, m artificial columns, rhs
    let total = n + m;
    let mut t = vec![vec![0.0; total + 1]; m];
    for (i, row) in problem.rows.iter().enumerate() {
        let flip = if problem.rhs[i] < 0.0 { -1.0 } else { 1.0 };
        for (j, &a) in row.iter().enumerate() {
            t[i][j] = flip * a;
        }
        t[i][n + i] = 1.0;
        t[i][total] = flip * problem.rhs[i];
    }

    let scale = t
        .iter()
        .flat_map(|row| row.iter().map(|x| x.abs()))
        .fold(0.0f64, f64::max)
        .max(1.0);
    let eps = 1e-12 * scale;

    // phase-1 reduced costs: cost[j] = c_j - sum_i t[i][j] with c = (0...0, 1...1)
    let mut cost = vec![0.0; total + 1];
    for j in 0..total + 1 {
        let col_sum: f64 = (0..m).map(|i| t[i][j]).sum();
        let c_j = if (n..total).contains(&j) { 1.0 } else { 0.0 };
        cost[j] = c_j - col_sum;
    }

    let mut basis: Vec<usize> = (n..total).collect();
    let max_iter = 200 * (total + 1) * (m + 1) + 1000;

    for _ in 0..max_iter {
        // Bland: entering = lowest-index column with negative reduced cost
        let entering = (0..total).find(|&j| cost[j] < -eps);
        let Some(e) = entering else { break };

        // ratio test; ties broken by smallest basic variable index (Bland)
        let mut leave: Option<usize> = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..m {
            if t[i][e] > eps {
                let ratio = t[i][total] / t[i][e];
                let better = match leave {
                    None => true,
                    Some(l) => {
                        ratio < best_ratio - eps
                            || (ratio < best_ratio + eps && basis[i] < basis[l])
                    }
                };
                if better {
                    best_ratio = ratio;
                    leave = Some(i);
                }
            }
        }
        let Some(l) = leave else {
            // phase-1 objective is bounded below by zero, so this is
            // numerical fallout; treat the current objective as the margin
            break;
        };
        pivot(&mut t, &mut cost, l, e);
        basis[l] = e;
    }

    let margin = (-cost[total]).max(0.0);
    if margin > tol {
        return Ok(Feasibility::Infeasible { margin });
    }

    // drive leftover artificial variables out of the basis where possible
    for i in 0..m {
        if basis[i] >= n {
            if let Some(e) = (0..n).find(|&j| t[i][j].abs() > 1e-9 * scale) {
                pivot(&mut t, &mut cost, i, e);
                basis[i] = e;
            }
        }
    }

    let mut x = vec![0.0; n];
    let mut basis_out = Vec::with_capacity(m);
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = t[i][total].max(0.0);
            basis_out.push(Some(basis[i]));
        } else {
            basis_out.push(None); // redundant row kept by its artificial
        }
    }
    Ok(Feasibility::Feasible(LpSolution {
        x,
        basis: basis_out,
    }))
}

fn pivot(t: &mut [Vec<f64>], cost: &mut [f64], row: usize, col: usize) {
    let width = t[0].len();
    let piv = t[row][col];
    for j in 0..width {
        t[row][j] /= piv;
    }
    t[row][col] = 1.0;
    for i in 0..t.len() {
        if i != row && t[i][col] != 0.0 {
            let f = t[i][col];
            for j in 0..width {
                t[i][j] -= f * t[row][j];
            }
            t[i][col] = 0.0;
        }
    }
    if cost[col] != 0.0 {
        let f = cost[col];
        for j in 0..width {
            cost[j] -= f * t[row][j];
        }
        cost[col] = 0.0;
    }
}
