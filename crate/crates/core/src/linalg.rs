//! Small exact linear-algebra helpers over the rationals.
//!
//! Everything here works on dense `Vec<Ratio<I>>` rows. The matrices involved
//! never exceed a handful of rows and columns, so plain Gaussian elimination
//! with exact arithmetic is entirely adequate.

use num_rational::Ratio;
use num_traits::Zero;

use crate::scalar::{rat_one, rat_zero, Scalar};

/// Reduce `rows` to row echelon form in place and return the pivot columns.
pub(crate) fn row_reduce<I: Scalar>(rows: &mut [Vec<Ratio<I>>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in 0..ncols {
                    let delta = factor.clone() * rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solve `A x = b` exactly. Returns `None` when the system is inconsistent;
/// free variables are set to zero.
pub(crate) fn solve<I: Scalar>(
    matrix: &[Vec<Ratio<I>>],
    rhs: &[Ratio<I>],
) -> Option<Vec<Ratio<I>>> {
    assert_eq!(matrix.len(), rhs.len());
    let ncols = matrix.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Ratio<I>>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.last() == Some(&ncols) {
        return None; // a pivot in the constant column: inconsistent
    }
    let mut x = vec![rat_zero::<I>(); ncols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = aug[row][ncols].clone();
    }
    Some(x)
}

/// If the rows span a space of dimension exactly `ncols - 1`, return a
/// primitive integer vector spanning their one-dimensional kernel.
pub(crate) fn kernel_line<I: Scalar>(rows: &[Vec<Ratio<I>>], ncols: usize) -> Option<Vec<I>> {
    let mut mat: Vec<Vec<Ratio<I>>> = rows.to_vec();
    let pivots = row_reduce(&mut mat);
    if pivots.len() + 1 != ncols {
        return None;
    }
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut x = vec![rat_zero::<I>(); ncols];
    x[free] = rat_one::<I>();
    for (row, &c) in pivots.iter().enumerate() {
        // echelon rows have a unit pivot at column c
        x[c] = -mat[row][free].clone();
    }
    Some(clear_denominators(&x))
}

/// Scale a rational vector to a primitive integer vector (gcd of entries 1).
pub(crate) fn clear_denominators<I: Scalar>(v: &[Ratio<I>]) -> Vec<I> {
    let mut lcm = I::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<I> = v
        .iter()
        .map(|x| x.numer().clone() * (lcm.clone() / x.denom().clone()))
        .collect();
    let mut g = I::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / g.clone()).collect()
    }
}

/// Rank of an integer matrix, computed over the rationals.
pub(crate) fn rank<I: Scalar>(rows: &[Vec<I>]) -> usize {
    let mut mat: Vec<Vec<Ratio<I>>> = rows
        .iter()
        .map(|r| r.iter().map(|x| Ratio::from_integer(x.clone())).collect())
        .collect();
    row_reduce(&mut mat).len()
}

/// Decide feasibility of the system `{ x : each row.coeffs · x <= row.rhs }`
/// by Fourier-Motzkin elimination, exactly over the rationals.
pub(crate) fn fourier_motzkin_feasible<I: Scalar>(
    mut rows: Vec<(Vec<Ratio<I>>, Ratio<I>)>,
    nvars: usize,
) -> bool {
    for var in 0..nvars {
        let mut kept: Vec<(Vec<Ratio<I>>, Ratio<I>)> = Vec::new();
        let mut pos: Vec<(Vec<Ratio<I>>, Ratio<I>)> = Vec::new();
        let mut neg: Vec<(Vec<Ratio<I>>, Ratio<I>)> = Vec::new();
        for row in rows {
            if row.0[var].is_zero() {
                kept.push(row);
            } else if row.0[var] > rat_zero::<I>() {
                pos.push(row);
            } else {
                neg.push(row);
            }
        }
        for p in &pos {
            for n in &neg {
                // p.0[var] > 0 and n.0[var] < 0, so both multipliers are positive
                let a = p.0[var].clone();
                let b = -n.0[var].clone();
                let coeffs: Vec<Ratio<I>> = p
                    .0
                    .iter()
                    .zip(&n.0)
                    .map(|(pc, nc)| b.clone() * pc.clone() + a.clone() * nc.clone())
                    .collect();
                let rhs = b * p.1.clone() + a * n.1.clone();
                kept.push((coeffs, rhs));
            }
        }
        // prune constant rows early and deduplicate to tame the blowup
        let mut next: Vec<(Vec<Ratio<I>>, Ratio<I>)> = Vec::new();
        for (coeffs, rhs) in kept {
            if coeffs.iter().all(|c| c.is_zero()) {
                if rhs < rat_zero::<I>() {
                    return false;
                }
                continue;
            }
            let normalized = normalize_row(&coeffs, &rhs);
            if !next.iter().any(|r| normalize_row(&r.0, &r.1) == normalized) {
                next.push((coeffs, rhs));
            }
        }
        rows = next;
    }
    rows.iter().all(|(_, rhs)| *rhs >= rat_zero::<I>())
}

fn normalize_row<I: Scalar>(coeffs: &[Ratio<I>], rhs: &Ratio<I>) -> (Vec<Ratio<I>>, Ratio<I>) {
    let lead = coeffs
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .unwrap_or_else(rat_one::<I>);
    let scale = if lead < rat_zero::<I>() { -lead } else { lead };
    (
        coeffs.iter().map(|c| c.clone() / scale.clone()).collect(),
        rhs.clone() / scale,
    )
}
