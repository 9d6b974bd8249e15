//! Double description method for polyhedral cones, exact over `Rat`.
//!
//! [`cone_generators`] converts `{y : <m_i, y> >= 0}` into a lineality
//! basis plus the extreme rays of the pointed part. Insertion handles the
//! lineality space explicitly; adjacency of rays is decided by the exact
//! rank test on the common tight rows, so the output is always a minimal
//! generator description. Intended for desk-scale dimensions (<= ~10).

use num_traits::{Signed, Zero};

use crate::linalg;
use crate::rat::{RVec, Rat};

/// `span(lines) + cone(rays)`.
#[derive(Clone, Debug)]
pub struct GeneratorCone {
    pub dim: usize,
    pub lines: Vec<RVec>,
    pub rays: Vec<RVec>,
}

#[derive(Clone)]
struct Ray {
    v: RVec,
    /// Indices of processed rows satisfied with equality.
    zero: ZeroSet,
}

#[derive(Clone, PartialEq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn empty(n: usize) -> Self {
        ZeroSet(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        if i / 64 >= self.0.len() {
            self.0.resize(i / 64 + 1, 0);
        }
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &ZeroSet) -> ZeroSet {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = other.0.get(i).copied().unwrap_or(0);
            *slot = a & b;
        }
        ZeroSet(out)
    }

    fn indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (blk, &bits) in self.0.iter().enumerate() {
            for b in 0..64 {
                if bits & (1 << b) != 0 {
                    out.push(blk * 64 + b);
                }
            }
        }
        out
    }
}

/// Generator description of `{y in R^dim : <row, y> >= 0 for every row}`.
pub fn cone_generators(dim: usize, rows: &[RVec]) -> GeneratorCone {
    let mut lines: Vec<RVec> = (0..dim).map(|i| RVec::unit(dim, i)).collect();
    let mut rays: Vec<Ray> = Vec::new();
    let mut processed: Vec<RVec> = Vec::with_capacity(rows.len());

    for row in rows {
        let idx = processed.len();
        if row.is_zero() {
            for r in rays.iter_mut() {
                r.zero.insert(idx);
            }
            processed.push(row.clone());
            continue;
        }

        if let Some(pos) = lines.iter().position(|l| !row.dot(l).is_zero()) {
            // A line crosses the new hyperplane: use it to project the
            // rest onto the hyperplane, and release it as a ray.
            let mut pivot = lines.remove(pos);
            let s = row.dot(&pivot);
            if s.is_negative() {
                pivot = pivot.neg();
            }
            let s = row.dot(&pivot);
            for l in lines.iter_mut() {
                let c = row.dot(l) / &s;
                *l = l.sub(&pivot.scale(&c)).primitive_signed();
            }
            for r in rays.iter_mut() {
                let c = row.dot(&r.v) / &s;
                r.v = r.v.sub(&pivot.scale(&c)).primitive();
                r.zero.insert(idx);
            }
            // The released line was tight on every earlier row.
            let mut zero = ZeroSet::empty(idx + 1);
            for i in 0..idx {
                zero.insert(i);
            }
            rays.push(Ray { v: pivot, zero });
            processed.push(row.clone());
            continue;
        }

        // Classical double-description step on the pointed part.
        let sigma: Vec<Rat> = rays.iter().map(|r| row.dot(&r.v)).collect();
        let target_rank = dim.saturating_sub(lines.len() + 2);
        let mut next: Vec<Ray> = Vec::new();
        for (r, s) in rays.iter().zip(sigma.iter()) {
            if !s.is_negative() {
                let mut kept = r.clone();
                if s.is_zero() {
                    kept.zero.insert(idx);
                }
                next.push(kept);
            }
        }
        for (ip, sp) in sigma.iter().enumerate() {
            if !sp.is_positive() {
                continue;
            }
            for (in_, sn) in sigma.iter().enumerate() {
                if !sn.is_negative() {
                    continue;
                }
                let common = rays[ip].zero.intersect(&rays[in_].zero);
                if !adjacent(&common, &processed, target_rank) {
                    continue;
                }
                let combo = rays[in_]
                    .v
                    .scale(sp)
                    .sub(&rays[ip].v.scale(sn))
                    .primitive();
                let mut zero = common;
                zero.insert(idx);
                next.push(Ray { v: combo, zero });
            }
        }
        rays = next;
        processed.push(row.clone());
    }

    let mut out_rays: Vec<RVec> = rays.into_iter().map(|r| r.v).collect();
    out_rays.sort();
    out_rays.dedup();
    // Canonical lineality basis via reduced row echelon form.
    let (canon, _) = linalg::rref(&lines);
    let lines = canon.into_iter().map(|l| l.primitive_signed()).collect();
    GeneratorCone {
        dim,
        lines,
        rays: out_rays,
    }
}

/// Rank test: two extreme rays are adjacent iff their common tight rows
/// cut a face of dimension lineality + 2.
fn adjacent(common: &ZeroSet, processed: &[RVec], target_rank: usize) -> bool {
    let active: Vec<RVec> = common
        .indices()
        .into_iter()
        .map(|i| processed[i].clone())
        .collect();
    linalg::rank(&active) == target_rank
}
