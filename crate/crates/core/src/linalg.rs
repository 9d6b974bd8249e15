//! Exact Gaussian elimination: RREF, rank, null spaces, span tests,
//! and the orthogonal complement of a family of vectors.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{RVec, Rat};

/// Reduced row echelon form. Returns the reduced rows (zero rows dropped)
/// and the pivot column of each remaining row, in order.
pub fn rref(rows: &[RVec]) -> (Vec<RVec>, Vec<usize>) {
    let mut m: Vec<RVec> = rows.to_vec();
    let dim = match m.first() {
        Some(r) => r.dim(),
        None => return (vec![], vec![]),
    };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let Some(p) = (row..m.len()).find(|&r| !m[r].get(col).is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Rat::one() / m[row].get(col).clone();
        m[row] = m[row].scale(&inv);
        for r in 0..m.len() {
            if r != row && !m[r].get(col).is_zero() {
                let factor = m[r].get(col).clone();
                m[r] = m[r].sub(&m[row].scale(&factor));
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.truncate(row);
    (m, pivots)
}

pub fn rank(rows: &[RVec]) -> usize {
    rref(rows).0.len()
}

/// Canonical basis of `{x : <row, x> = 0 for every row}`.
/// Each free column yields one basis vector; vectors are scaled to
/// primitive integer form with positive leading coordinate.
pub fn null_space(rows: &[RVec], dim: usize) -> Vec<RVec> {
    let (red, pivots) = rref(rows);
    let mut basis = Vec::new();
    for free in 0..dim {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = RVec::zero(dim);
        v.set(free, Rat::one());
        for (r, &p) in pivots.iter().enumerate() {
            v.set(p, -red[r].get(free).clone());
        }
        basis.push(v.primitive_signed());
    }
    basis
}

/// Basis of the orthogonal complement `S^⊥` of `span(vectors)` in `ℝ^dim`.
pub fn orthogonal_complement(vectors: &[RVec], dim: usize) -> Result<Vec<RVec>> {
    if dim == 0 {
        return Err(Error::EmptyDimension);
    }
    for v in vectors {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.dim(),
            });
        }
    }
    Ok(null_space(vectors, dim))
}

/// Is `v` a linear combination of `basis`?
pub fn in_span(v: &RVec, basis: &[RVec]) -> bool {
    if v.is_zero() {
        return true;
    }
    let r = rank(basis);
    let mut aug = basis.to_vec();
    aug.push(v.clone());
    rank(&aug) == r
}

/// Do two families span the same subspace?
pub fn same_span(a: &[RVec], b: &[RVec]) -> bool {
    a.iter().all(|v| in_span(v, b)) && b.iter().all(|v| in_span(v, a))
}

/// A maximal linearly independent subfamily, kept in input order.
pub fn independent_subset(vectors: &[RVec]) -> Vec<RVec> {
    let mut picked: Vec<RVec> = Vec::new();
    for v in vectors {
        if !in_span(v, &picked) {
            picked.push(v.clone());
        }
    }
    picked
}

/// Solve `sum_j c_j rows_j = target` for the coefficients, if possible.
pub fn solve_combination(rows: &[RVec], target: &RVec) -> Option<Vec<Rat>> {
    // Transpose into a system over the coefficients and run RREF on the
    // augmented matrix.
    let dim = target.dim();
    let n = rows.len();
    let mut aug = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row = Vec::with_capacity(n + 1);
        for r in rows {
            row.push(r.get(i).clone());
        }
        row.push(target.get(i).clone());
        aug.push(RVec::new(row));
    }
    let (red, pivots) = rref(&aug);
    // Inconsistent iff some pivot lands in the augmented column.
    if pivots.contains(&n) {
        return None;
    }
    let mut coeffs = vec![Rat::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        coeffs[p] = red[r].get(n).clone();
    }
    Some(coeffs)
}
