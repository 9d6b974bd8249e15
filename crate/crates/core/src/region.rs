//! Sets in dual space: polyhedra, the analytic regions the catalog needs,
//! and symbolic Minkowski sums. Every kind decides membership exactly and
//! knows whether it is closed; the one non-closed object (the epigraph sum
//! of the parabola/halfplane conjugates) carries its closure witness.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lp::{self, LpOutcome, LpProblem, Sense};
use crate::polyhedron::Polyhedron;
use crate::rat::{rat, RVec, Rat};

/// Certificate id attached to the non-closedness witness of the epigraph
/// sum in the parabola/halfplane example.
pub const EPI_SUM_CERT: &str = "split-height-positive";

#[derive(Clone, Debug)]
pub enum Region {
    /// An exact polyhedron.
    Poly(Polyhedron),
    /// `{(u,v) : u >= 0, v^2 <= 2 eps u}` — the ε-subdifferential of the
    /// parabola indicator at the origin, for ε > 0. Closed but not
    /// polyhedral.
    ParabolaEpsSubdiff { eps: Rat },
    /// `{y : f*(y) <= <x,y> + eps}` for the parabola indicator `f` at a
    /// general point `x` of its domain. Membership-only region.
    ParabolaEpsSubdiffAt { x: RVec, eps: Rat },
    /// `{z : 2 z1 + z2^2 <= 0, <linear, z> >= offset}` — ε-subdifferential
    /// of the parabola conjugate. Membership-only region.
    ParabolaSlice { linear: RVec, offset: Rat },
    /// `epi f* + epi g*` of the parabola/halfplane pair, a subset of R^3.
    /// The single non-closed set in the catalog.
    ParabolaEpiSum,
    /// Deferred Minkowski sum; exact membership via one feasibility LP
    /// when every part is polyhedral.
    SumOf(Vec<Region>),
}

/// Conjugate of the parabola indicator: `b^2/(2a)` for `a > 0`, `0` at the
/// origin, `+inf` elsewhere. Returns `None` outside the domain.
pub fn parabola_conj_value(y: &RVec) -> Option<Rat> {
    let (a, b) = (y.get(0), y.get(1));
    if a.is_positive() {
        Some(b * b / (rat(2, 1) * a))
    } else if a.is_zero() && b.is_zero() {
        Some(Rat::zero())
    } else {
        None
    }
}

impl Region {
    pub fn dim(&self) -> usize {
        match self {
            Region::Poly(p) => p.dim(),
            Region::ParabolaEpsSubdiff { .. }
            | Region::ParabolaEpsSubdiffAt { .. }
            | Region::ParabolaSlice { .. } => 2,
            Region::ParabolaEpiSum => 3,
            Region::SumOf(parts) => parts.first().map_or(0, |r| r.dim()),
        }
    }

    pub fn empty(dim: usize) -> Region {
        Region::Poly(Polyhedron::empty(dim))
    }

    pub fn universe(dim: usize) -> Region {
        Region::Poly(Polyhedron::universe(dim))
    }

    pub fn contains(&self, pt: &RVec) -> Result<bool> {
        if pt.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: pt.dim(),
            });
        }
        match self {
            Region::Poly(p) => p.contains_point(pt),
            Region::ParabolaEpsSubdiff { eps } => {
                let (u, v) = (pt.get(0), pt.get(1));
                Ok(!u.is_negative() && v * v <= rat(2, 1) * eps * u)
            }
            Region::ParabolaEpsSubdiffAt { x, eps } => Ok(match parabola_conj_value(pt) {
                Some(fstar) => fstar <= x.dot(pt) + eps,
                None => false,
            }),
            Region::ParabolaSlice { linear, offset } => {
                let (z1, z2) = (pt.get(0), pt.get(1));
                Ok(rat(2, 1) * z1 + z2 * z2 <= Rat::zero() && &linear.dot(pt) >= offset)
            }
            Region::ParabolaEpiSum => {
                let (v, t) = (pt.get(1), pt.get(2));
                Ok(if v.is_zero() {
                    !t.is_negative()
                } else {
                    t.is_positive()
                })
            }
            Region::SumOf(parts) => sum_membership(parts, pt),
        }
    }

    /// Membership in the topological closure.
    pub fn closure_contains(&self, pt: &RVec) -> Result<bool> {
        match self {
            // Closure of the epigraph sum is the closed halfspace t >= 0.
            Region::ParabolaEpiSum => Ok(!pt.get(2).is_negative()),
            _ => {
                if self.is_closed()? {
                    self.contains(pt)
                } else {
                    Err(Error::UnsupportedCombination(
                        "closure membership undecided for this region".into(),
                    ))
                }
            }
        }
    }

    pub fn is_closed(&self) -> Result<bool> {
        match self {
            Region::Poly(_)
            | Region::ParabolaEpsSubdiff { .. }
            | Region::ParabolaEpsSubdiffAt { .. }
            | Region::ParabolaSlice { .. } => Ok(true),
            Region::ParabolaEpiSum => Ok(false),
            Region::SumOf(parts) => {
                if parts.iter().all(|r| matches!(r, Region::Poly(_))) {
                    // A finite Minkowski sum of polyhedra is polyhedral.
                    Ok(true)
                } else {
                    Err(Error::UnsupportedCombination(
                        "closedness undecided for sums with analytic parts".into(),
                    ))
                }
            }
        }
    }

    /// A point of the closure that the set itself misses, with the name of
    /// the certifying argument.
    pub fn closure_gap_witness(&self) -> Option<(RVec, &'static str)> {
        match self {
            Region::ParabolaEpiSum => Some((
                RVec::new(vec![rat(1, 1), rat(1, 1), Rat::zero()]),
                EPI_SUM_CERT,
            )),
            _ => None,
        }
    }

    /// Materialize as a polyhedron when the region is exactly polyhedral.
    pub fn to_polyhedron(&self) -> Result<Polyhedron> {
        match self {
            Region::Poly(p) => Ok(p.clone()),
            Region::SumOf(parts) => {
                let polys: Option<Vec<&Polyhedron>> = parts
                    .iter()
                    .map(|r| match r {
                        Region::Poly(p) => Some(p),
                        _ => None,
                    })
                    .collect();
                let polys = polys.ok_or_else(|| {
                    Error::UnsupportedCombination(
                        "cannot materialize a sum with analytic parts".into(),
                    )
                })?;
                let mut acc = match polys.first() {
                    Some(p) => (*p).clone(),
                    None => return Err(Error::EmptyDimension),
                };
                for p in &polys[1..] {
                    acc = acc.minkowski_sum(p)?;
                }
                Ok(acc)
            }
            _ => Err(Error::UnsupportedCombination(
                "region is not polyhedral".into(),
            )),
        }
    }

    /// Does the recession cone of the region contain direction `r`?
    pub fn recession_contains(&self, r: &RVec) -> Result<bool> {
        match self {
            Region::Poly(p) => Ok(p.hrep().recession_holds(r)),
            Region::ParabolaEpsSubdiff { .. } => {
                Ok(r.get(1).is_zero() && !r.get(0).is_negative())
            }
            Region::ParabolaEpsSubdiffAt { x, .. } => {
                // Direction r survives iff f*(r) <= <x, r> (recession
                // function comparison; f* is the support function of C).
                Ok(match parabola_conj_value(r) {
                    Some(fstar) => fstar <= x.dot(r),
                    None => false,
                })
            }
            Region::ParabolaSlice { linear, .. } => Ok(r.get(1).is_zero()
                && !r.get(0).is_positive()
                && !linear.dot(r).is_negative()),
            Region::ParabolaEpiSum => Err(Error::UnsupportedCombination(
                "recession of the epigraph sum is not needed".into(),
            )),
            Region::SumOf(parts) => sum_recession_membership(parts, r),
        }
    }

    pub fn equals(&self, other: &Region) -> Result<bool> {
        match (self.to_polyhedron(), other.to_polyhedron()) {
            (Ok(a), Ok(b)) => a.equals(&b),
            _ => match (self, other) {
                (
                    Region::ParabolaEpsSubdiff { eps: e1 },
                    Region::ParabolaEpsSubdiff { eps: e2 },
                ) => Ok(e1 == e2),
                // A strictly curved region never equals a polyhedron.
                (Region::ParabolaEpsSubdiff { .. }, _) | (_, Region::ParabolaEpsSubdiff { .. }) => {
                    Ok(false)
                }
                _ => Err(Error::UnsupportedCombination(
                    "equality undecided for these regions".into(),
                )),
            },
        }
    }

    pub fn is_universe(&self) -> Result<bool> {
        match self {
            Region::ParabolaEpsSubdiff { .. }
            | Region::ParabolaEpsSubdiffAt { .. }
            | Region::ParabolaSlice { .. }
            | Region::ParabolaEpiSum => Ok(false),
            _ => Ok(self.to_polyhedron()?.is_universe()),
        }
    }
}

/// `pt in P_1 + ... + P_k`: one feasibility LP over a stacked split.
fn sum_membership(parts: &[Region], pt: &RVec) -> Result<bool> {
    let polys: Option<Vec<&Polyhedron>> = parts
        .iter()
        .map(|r| match r {
            Region::Poly(p) => Some(p),
            _ => None,
        })
        .collect();
    let Some(polys) = polys else {
        return Err(Error::UnsupportedCombination(
            "membership in sums with analytic parts".into(),
        ));
    };
    let d = pt.dim();
    let k = polys.len();
    if k == 0 {
        return Ok(pt.is_zero());
    }
    split_feasible(&polys, pt, d, k, false)
}

fn sum_recession_membership(parts: &[Region], r: &RVec) -> Result<bool> {
    let polys: Option<Vec<&Polyhedron>> = parts
        .iter()
        .map(|reg| match reg {
            Region::Poly(p) => Some(p),
            _ => None,
        })
        .collect();
    let Some(polys) = polys else {
        return Err(Error::UnsupportedCombination(
            "recession of sums with analytic parts".into(),
        ));
    };
    let d = r.dim();
    let k = polys.len();
    if k == 0 {
        return Ok(r.is_zero());
    }
    split_feasible(&polys, r, d, k, true)
}

/// Is there a split `z_1 + ... + z_k = target` with `z_i` in `P_i`
/// (`recession = false`) or in the recession cone of `P_i` (`true`)?
fn split_feasible(
    polys: &[&Polyhedron],
    target: &RVec,
    d: usize,
    k: usize,
    recession: bool,
) -> Result<bool> {
    let n = d * k;
    let embed = |row: &RVec, block: usize| -> RVec {
        let mut v = RVec::zero(n);
        for j in 0..d {
            v.set(block * d + j, row.get(j).clone());
        }
        v
    };
    let mut p = LpProblem {
        objective: RVec::zero(n),
        ineqs: vec![],
        eqs: vec![],
        sense: Sense::Minimize,
    };
    for (i, poly) in polys.iter().enumerate() {
        for (a, b) in &poly.hrep().ineqs {
            let rhs = if recession { Rat::zero() } else { b.clone() };
            p.ineqs.push((embed(a, i), rhs));
        }
        for (e, dd) in &poly.hrep().eqs {
            let rhs = if recession { Rat::zero() } else { dd.clone() };
            p.eqs.push((embed(e, i), rhs));
        }
    }
    for j in 0..d {
        let mut row = RVec::zero(n);
        for i in 0..k {
            row.set(i * d + j, Rat::from_integer(1.into()));
        }
        p.eqs.push((row, target.get(j).clone()));
    }
    Ok(!matches!(lp::lp_solve_any(&p)?, LpOutcome::Infeasible))
}

/// Split witness for a point of a polyhedral Minkowski sum, when one exists.
pub fn sum_split_witness(polys: &[&Polyhedron], target: &RVec) -> Result<Option<Vec<RVec>>> {
    let d = target.dim();
    let k = polys.len();
    if k == 0 {
        return Ok(target.is_zero().then(Vec::new));
    }
    let n = d * k;
    let embed = |row: &RVec, block: usize| -> RVec {
        let mut v = RVec::zero(n);
        for j in 0..d {
            v.set(block * d + j, row.get(j).clone());
        }
        v
    };
    let mut p = LpProblem {
        objective: RVec::zero(n),
        ineqs: vec![],
        eqs: vec![],
        sense: Sense::Minimize,
    };
    for (i, poly) in polys.iter().enumerate() {
        for (a, b) in &poly.hrep().ineqs {
            p.ineqs.push((embed(a, i), b.clone()));
        }
        for (e, dd) in &poly.hrep().eqs {
            p.eqs.push((embed(e, i), dd.clone()));
        }
    }
    for j in 0..d {
        let mut row = RVec::zero(n);
        for i in 0..k {
            row.set(i * d + j, Rat::from_integer(1.into()));
        }
        p.eqs.push((row, target.get(j).clone()));
    }
    match lp::lp_solve(&p)? {
        LpOutcome::Optimal { point, .. } => Ok(Some(
            (0..k).map(|i| point.slice(i * d, (i + 1) * d)).collect(),
        )),
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rint;

    #[test]
    fn parabola_region_membership() {
        // eps = 1/2: boundary at (1, ±1).
        let r = Region::ParabolaEpsSubdiff { eps: rat(1, 2) };
        assert!(r.contains(&RVec::from_ints(&[1, 1])).unwrap());
        assert!(r.contains(&RVec::from_ints(&[1, -1])).unwrap());
        assert!(!r.contains(&RVec::from_ints(&[1, 2])).unwrap());
        assert!(!r.contains(&RVec::from_ints(&[-1, 0])).unwrap());
        assert!(r.is_closed().unwrap());
    }

    #[test]
    fn epi_sum_misses_its_closure_point() {
        let r = Region::ParabolaEpiSum;
        let (w, cert) = r.closure_gap_witness().unwrap();
        assert_eq!(cert, EPI_SUM_CERT);
        assert!(!r.contains(&w).unwrap());
        assert!(r.closure_contains(&w).unwrap());
        assert!(!r.is_closed().unwrap());
        // Points of the sum itself.
        assert!(r.contains(&RVec::from_ints(&[5, 0, 0])).unwrap());
        assert!(r
            .contains(&RVec::new(vec![rint(1), rint(1), rat(1, 100)]))
            .unwrap());
    }

    #[test]
    fn sum_of_polyhedra_membership_via_lp() {
        let right = Polyhedron::from_hrep(
            crate::polyhedron::HRep::new(
                1,
                vec![(RVec::from_ints(&[-1]), rint(0))],
                vec![],
            )
            .unwrap(),
        );
        let seg = Polyhedron::cube(1, -1, 1);
        let s = Region::SumOf(vec![Region::Poly(right), Region::Poly(seg)]);
        assert!(s.contains(&RVec::from_ints(&[-1])).unwrap());
        assert!(!s.contains(&RVec::from_ints(&[-2])).unwrap());
        assert!(s.contains(&RVec::from_ints(&[100])).unwrap());
        assert!(s.is_closed().unwrap());
    }
}
