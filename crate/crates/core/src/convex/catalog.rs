//! Closed catalog of analytic convex functions.
//!
//! The catalog holds exactly the non-polyhedral functions the library can
//! treat exactly: the indicator of the parabola region
//! `C = {(x,y) : 2x + y^2 <= 0}`, the indicator of the halfplane
//! `D = {(x,y) : x >= 0}`, and their conjugates. Each entry carries closed
//! forms for evaluation, conjugation and ε-subdifferentials, certified
//! proper, convex and lower semicontinuous. Arbitrary smooth functions are
//! deliberately rejected elsewhere: exactness cannot survive them.

use num_traits::{One, Signed, Zero};

use crate::polyhedron::{HRep, Polyhedron};
use crate::rat::{rat, RVec, Rat};
use crate::region::{parabola_conj_value, Region};

use super::PolyhedralFn;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnalyticFn {
    /// `ι_C`, `C = {(x,y) : 2x + y^2 <= 0}`.
    ParabolaIndicator,
    /// `ι_D`, `D = {(x,y) : x >= 0}`. Kept in the catalog so the pair
    /// rules below can recognize it, but polyhedral at heart.
    HalfplaneIndicator,
    /// `(ι_C)*`: `(a,b) -> b^2/(2a)` for `a > 0`, `0` at the origin.
    ParabolaConjugate,
    /// `(ι_D)* = ι_{(-inf,0] x {0}}`.
    HalfplaneConjugate,
}

impl AnalyticFn {
    pub fn dim(&self) -> usize {
        2
    }

    pub fn tag_name(&self) -> &'static str {
        match self {
            AnalyticFn::ParabolaIndicator => "parabola_indicator",
            AnalyticFn::HalfplaneIndicator => "halfplane_indicator",
            AnalyticFn::ParabolaConjugate => "parabola_conjugate",
            AnalyticFn::HalfplaneConjugate => "halfplane_conjugate",
        }
    }

    pub fn dom_contains(&self, x: &RVec) -> bool {
        match self {
            AnalyticFn::ParabolaIndicator => {
                rat(2, 1) * x.get(0) + x.get(1) * x.get(1) <= Rat::zero()
            }
            AnalyticFn::HalfplaneIndicator => !x.get(0).is_negative(),
            AnalyticFn::ParabolaConjugate => parabola_conj_value(x).is_some(),
            AnalyticFn::HalfplaneConjugate => {
                !x.get(0).is_positive() && x.get(1).is_zero()
            }
        }
    }

    pub fn evaluate(&self, x: &RVec) -> Option<Rat> {
        match self {
            AnalyticFn::ParabolaConjugate => parabola_conj_value(x),
            _ => self.dom_contains(x).then(Rat::zero),
        }
    }

    pub fn conjugate(&self) -> AnalyticFn {
        match self {
            AnalyticFn::ParabolaIndicator => AnalyticFn::ParabolaConjugate,
            AnalyticFn::ParabolaConjugate => AnalyticFn::ParabolaIndicator,
            AnalyticFn::HalfplaneIndicator => AnalyticFn::HalfplaneConjugate,
            AnalyticFn::HalfplaneConjugate => AnalyticFn::HalfplaneIndicator,
        }
    }

    /// Exact polyhedral form, for the entries that have one.
    pub fn to_polyhedral(&self) -> Option<PolyhedralFn> {
        let poly = match self {
            AnalyticFn::HalfplaneIndicator => Polyhedron::from_hrep(
                HRep::new(2, vec![(RVec::from_ints(&[-1, 0]), Rat::zero())], vec![]).unwrap(),
            ),
            AnalyticFn::HalfplaneConjugate => Polyhedron::from_hrep(
                HRep::new(
                    2,
                    vec![(RVec::from_ints(&[1, 0]), Rat::zero())],
                    vec![(RVec::from_ints(&[0, 1]), Rat::zero())],
                )
                .unwrap(),
            ),
            _ => return None,
        };
        Some(PolyhedralFn::indicator(&poly).expect("catalog halfplane indicators are proper"))
    }

    /// Domain as a polyhedron, where it is one.
    pub fn dom_polyhedron(&self) -> Option<Polyhedron> {
        self.to_polyhedral().map(|f| f.domain())
    }

    /// ε-subdifferential region at `x` (empty when `x` is outside the
    /// domain). Polyhedral answers are returned as polyhedra; only the
    /// parabola entries at ε > 0 need analytic region tags.
    pub fn eps_subdiff(&self, x: &RVec, eps: &Rat) -> Region {
        if !self.dom_contains(x) {
            return Region::empty(2);
        }
        match self {
            AnalyticFn::ParabolaIndicator => {
                if x.is_zero() {
                    if eps.is_zero() {
                        // ∂ι_C(0,0) = [0,inf) x {0}
                        Region::Poly(Polyhedron::from_hrep(
                            HRep::new(
                                2,
                                vec![(RVec::from_ints(&[-1, 0]), Rat::zero())],
                                vec![(RVec::from_ints(&[0, 1]), Rat::zero())],
                            )
                            .unwrap(),
                        ))
                    } else {
                        Region::ParabolaEpsSubdiff { eps: eps.clone() }
                    }
                } else if eps.is_zero() {
                    // Normal cone of C at x: {0} inside, the outward
                    // normal ray (1, x2) on the boundary 2x1 + x2^2 = 0.
                    let boundary =
                        rat(2, 1) * x.get(0) + x.get(1) * x.get(1) == Rat::zero();
                    if boundary {
                        let normal = RVec::new(vec![Rat::one(), x.get(1).clone()]);
                        Region::Poly(ray_from_origin(&normal))
                    } else {
                        Region::Poly(Polyhedron::singleton(&RVec::zero(2)))
                    }
                } else {
                    Region::ParabolaEpsSubdiffAt {
                        x: x.clone(),
                        eps: eps.clone(),
                    }
                }
            }
            AnalyticFn::HalfplaneIndicator => {

                // {(u,v) : u <= 0, v = 0, x1 u >= -eps}
                Region::Poly(Polyhedron::from_hrep(
                    HRep::new(
                        2,
                        vec![
                            (RVec::from_ints(&[1, 0]), Rat::zero()),
                            (RVec::new(vec![-x.get(0).clone(), Rat::zero()]), eps.clone()),
                        ],
                        vec![(RVec::from_ints(&[0, 1]), Rat::zero())],
                    )
                    .unwrap(),
                ))
            }
            AnalyticFn::ParabolaConjugate => {
                // {z in C : <z, x> >= f*(x) - eps}
                let fstar = parabola_conj_value(x).expect("x is in dom f*");
                Region::ParabolaSlice {
                    linear: x.clone(),
                    offset: fstar - eps,
                }
            }
            AnalyticFn::HalfplaneConjugate => {
                // {(z1,z2) : z1 >= 0, -x1 z1 <= eps}
                Region::Poly(Polyhedron::from_hrep(
                    HRep::new(
                        2,
                        vec![
                            (RVec::from_ints(&[-1, 0]), Rat::zero()),
                            (RVec::new(vec![-x.get(0).clone(), Rat::zero()]), eps.clone()),
                        ],
                        vec![],
                    )
                    .unwrap(),
                ))
            }
        }
    }
}

fn ray_from_origin(dir: &RVec) -> Polyhedron {
    Polyhedron::from_vrep(crate::polyhedron::VRep {
        dim: dir.dim(),
        vertices: vec![RVec::zero(dir.dim())],
        rays: vec![dir.primitive()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rint;

    #[test]
    fn parabola_evaluation() {
        let f = AnalyticFn::ParabolaIndicator;
        assert_eq!(f.evaluate(&RVec::zero(2)), Some(Rat::zero()));
        // 2(-1/2) + 1 = 0: inside; 2(-1/2) + 4 = 3 > 0: outside.
        assert_eq!(
            f.evaluate(&RVec::new(vec![rat(-1, 2), rint(1)])),
            Some(Rat::zero())
        );
        assert_eq!(f.evaluate(&RVec::new(vec![rat(-1, 2), rint(2)])), None);
    }

    #[test]
    fn conjugate_closed_form() {
        let c = AnalyticFn::ParabolaConjugate;
        assert_eq!(c.evaluate(&RVec::from_ints(&[2, 1])), Some(rat(1, 4)));
        assert_eq!(c.evaluate(&RVec::zero(2)), Some(Rat::zero()));
        assert_eq!(c.evaluate(&RVec::from_ints(&[0, 1])), None);
        assert_eq!(c.evaluate(&RVec::from_ints(&[-1, 0])), None);
    }

    #[test]
    fn biconjugation_is_involutive_on_tags() {
        for f in [
            AnalyticFn::ParabolaIndicator,
            AnalyticFn::HalfplaneIndicator,
            AnalyticFn::ParabolaConjugate,
            AnalyticFn::HalfplaneConjugate,
        ] {
            assert_eq!(f.conjugate().conjugate(), f);
        }
    }

    #[test]
    fn halfplane_eps_subdiff_at_origin() {
        let g = AnalyticFn::HalfplaneIndicator;
        let r = g.eps_subdiff(&RVec::zero(2), &rint(1));
        // (-inf, 0] x {0} regardless of eps.
        assert!(r.contains(&RVec::from_ints(&[-7, 0])).unwrap());
        assert!(r.contains(&RVec::zero(2)).unwrap());
        assert!(!r.contains(&RVec::from_ints(&[1, 0])).unwrap());
        assert!(!r.contains(&RVec::from_ints(&[-1, 1])).unwrap());
    }

    #[test]
    fn halfplane_eps_subdiff_off_origin() {
        // At x = (1, 0): [-eps, 0] x {0}.
        let g = AnalyticFn::HalfplaneIndicator;
        let r = g.eps_subdiff(&RVec::from_ints(&[1, 0]), &rat(1, 2));
        assert!(r.contains(&RVec::new(vec![rat(-1, 2), Rat::zero()])).unwrap());
        assert!(!r.contains(&RVec::from_ints(&[-1, 0])).unwrap());
    }
}
