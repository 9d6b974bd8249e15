//! Exact polyhedral sets with dual descriptions.
//!
//! A [`Polyhedron`] is stored as an H-representation; the generator form
//! is computed on demand through the double description method and cached.
//! The empty set is a first-class value (canonical H-rep `0 <= -1`), never
//! an error: constraint-qualification checks legitimately produce empty
//! intersections.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::dd::{cone_generators, GeneratorCone};
use crate::error::{Error, Result};
use crate::lp;
use crate::rat::{RVec, Rat};

/// Half-space description: `<a, x> <= b` rows and `<e, x> = d` rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub dim: usize,
    pub ineqs: Vec<(RVec, Rat)>,
    pub eqs: Vec<(RVec, Rat)>,
}

impl HRep {
    pub fn new(dim: usize, ineqs: Vec<(RVec, Rat)>, eqs: Vec<(RVec, Rat)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        for (a, _) in ineqs.iter().chain(eqs.iter()) {
            if a.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: a.dim(),
                });
            }
        }
        Ok(HRep { dim, ineqs, eqs })
    }

    pub fn holds_at(&self, x: &RVec) -> bool {
        self.ineqs.iter().all(|(a, b)| &a.dot(x) <= b)
            && self.eqs.iter().all(|(e, d)| &e.dot(x) == d)
    }

    /// Does the recession cone admit direction `r`?
    pub fn recession_holds(&self, r: &RVec) -> bool {
        self.ineqs.iter().all(|(a, _)| !a.dot(r).is_positive())
            && self.eqs.iter().all(|(e, _)| e.dot(r).is_zero())
    }

    /// Rows scaled primitive and sorted; a stable form for printing.
    pub fn canonical_rows(&self) -> HRep {
        let mut ineqs: Vec<(RVec, Rat)> = self
            .ineqs
            .iter()
            .map(|(a, b)| scale_row_primitive(a, b))
            .collect();
        ineqs.sort();
        ineqs.dedup();
        let mut eqs: Vec<(RVec, Rat)> = self
            .eqs
            .iter()
            .map(|(e, d)| {
                let (e2, d2) = scale_row_primitive(e, d);
                // Equalities have no inherent direction; fix the sign.
                match e2.coords().iter().find(|c| !c.is_zero()) {
                    Some(c) if c.is_negative() => (e2.neg(), -d2),
                    _ => (e2, d2),
                }
            })
            .collect();
        eqs.sort();
        eqs.dedup();
        HRep {
            dim: self.dim,
            ineqs,
            eqs,
        }
    }
}

fn scale_row_primitive(a: &RVec, b: &Rat) -> (RVec, Rat) {
    let joint = a.lift(b.clone()).primitive();
    (joint.unlift(), joint.get(a.dim()).clone())
}

/// Generator description: `conv(vertices) + cone(rays)`.
///
/// For non-pointed sets the "vertices" are base points and every lineality
/// direction appears as a pair of opposite rays. An empty vertex list means
/// the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    pub dim: usize,
    pub vertices: Vec<RVec>,
    pub rays: Vec<RVec>,
}

impl VRep {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Convex polyhedral set with cached dual description.
#[derive(Clone)]
pub struct Polyhedron {
    hrep: HRep,
    vrep: OnceLock<VRep>,
}

impl fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Polyhedron")
            .field("hrep", &self.hrep)
            .finish()
    }
}

impl Polyhedron {
    pub fn from_hrep(hrep: HRep) -> Self {
        Polyhedron {
            hrep,
            vrep: OnceLock::new(),
        }
    }

    /// Canonicalizing constructor: redundant generators are pruned by the
    /// round trip through the facet description.
    pub fn from_vrep(v: VRep) -> Self {
        let hrep = vrep_to_hrep(&v);
        Polyhedron {
            hrep,
            vrep: OnceLock::new(),
        }
    }

    pub fn universe(dim: usize) -> Self {
        Polyhedron::from_hrep(HRep {
            dim,
            ineqs: vec![],
            eqs: vec![],
        })
    }

    pub fn empty(dim: usize) -> Self {
        Polyhedron::from_hrep(HRep {
            dim,
            ineqs: vec![(RVec::zero(dim), crate::rat::rint(-1))],
            eqs: vec![],
        })
    }

    pub fn singleton(x: &RVec) -> Self {
        Polyhedron::from_hrep(HRep {
            dim: x.dim(),
            ineqs: vec![],
            eqs: (0..x.dim())
                .map(|i| (RVec::unit(x.dim(), i), x.get(i).clone()))
                .collect(),
        })
    }

    /// `span(basis)` as a polyhedron, cut out by its orthogonal complement.
    pub fn subspace(dim: usize, basis: &[RVec]) -> Result<Self> {
        let comp = crate::linalg::orthogonal_complement(basis, dim)?;
        Ok(Polyhedron::from_hrep(HRep {
            dim,
            ineqs: vec![],
            eqs: comp.into_iter().map(|z| (z, Rat::zero())).collect(),
        }))
    }

    /// Box `[lo, hi]^dim`.
    pub fn cube(dim: usize, lo: i64, hi: i64) -> Self {
        let mut ineqs = Vec::new();
        for i in 0..dim {
            ineqs.push((RVec::unit(dim, i), crate::rat::rint(hi)));
            ineqs.push((RVec::unit(dim, i).neg(), crate::rat::rint(-lo)));
        }
        Polyhedron::from_hrep(HRep {
            dim,
            ineqs,
            eqs: vec![],
        })
    }

    pub fn dim(&self) -> usize {
        self.hrep.dim
    }

    pub fn hrep(&self) -> &HRep {
        &self.hrep
    }

    pub fn vrep(&self) -> &VRep {
        self.vrep.get_or_init(|| hrep_to_vrep(&self.hrep))
    }

    pub fn is_empty(&self) -> bool {
        self.vrep().is_empty()
    }

    pub fn contains_point(&self, x: &RVec) -> Result<bool> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        Ok(self.hrep.holds_at(x))
    }

    /// `self ⊇ other`: every generator of `other` must satisfy our facets
    /// (rays against the recession rows).
    pub fn includes(&self, other: &Polyhedron) -> Result<bool> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let v = other.vrep();
        if v.is_empty() {
            return Ok(true);
        }
        Ok(v.vertices.iter().all(|p| self.hrep.holds_at(p))
            && v.rays.iter().all(|r| self.hrep.recession_holds(r)))
    }

    pub fn equals(&self, other: &Polyhedron) -> Result<bool> {
        Ok(self.includes(other)? && other.includes(self)?)
    }

    pub fn is_universe(&self) -> bool {
        self.includes(&Polyhedron::universe(self.dim())).unwrap()
    }

    /// Minkowski sum via generators: pairwise vertex sums, ray union.
    pub fn minkowski_sum(&self, other: &Polyhedron) -> Result<Polyhedron> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let (a, b) = (self.vrep(), other.vrep());
        if a.is_empty() || b.is_empty() {
            return Ok(Polyhedron::empty(self.dim()));
        }
        let mut vertices = Vec::with_capacity(a.vertices.len() * b.vertices.len());
        for p in &a.vertices {
            for q in &b.vertices {
                vertices.push(p.add(q));
            }
        }
        let mut rays = a.rays.clone();
        rays.extend(b.rays.iter().cloned());
        Ok(Polyhedron::from_vrep(VRep {
            dim: self.dim(),
            vertices,
            rays,
        }))
    }

    /// Intersection by stacking the half-space descriptions.
    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let mut ineqs = self.hrep.ineqs.clone();
        ineqs.extend(other.hrep.ineqs.iter().cloned());
        let mut eqs = self.hrep.eqs.clone();
        eqs.extend(other.hrep.eqs.iter().cloned());
        Ok(Polyhedron::from_hrep(HRep {
            dim: self.dim(),
            ineqs,
            eqs,
        }))
    }

    /// Image under the linear map whose rows are `map` (len = output dim).
    pub fn linear_image(&self, map: &[RVec]) -> Polyhedron {
        let out_dim = map.len();
        let apply = |x: &RVec| RVec::new(map.iter().map(|row| row.dot(x)).collect());
        let v = self.vrep();
        if v.is_empty() {
            return Polyhedron::empty(out_dim);
        }
        let vertices: Vec<RVec> = v.vertices.iter().map(apply).collect();
        let rays: Vec<RVec> = v
            .rays
            .iter()
            .map(apply)
            .filter(|r| !r.is_zero())
            .collect();
        Polyhedron::from_vrep(VRep {
            dim: out_dim,
            vertices,
            rays,
        })
    }

    pub fn translate(&self, t: &RVec) -> Polyhedron {
        let ineqs = self
            .hrep
            .ineqs
            .iter()
            .map(|(a, b)| (a.clone(), b + a.dot(t)))
            .collect();
        let eqs = self
            .hrep
            .eqs
            .iter()
            .map(|(e, d)| (e.clone(), d + e.dot(t)))
            .collect();
        Polyhedron::from_hrep(HRep {
            dim: self.dim(),
            ineqs,
            eqs,
        })
    }

    /// Reflection `{-x : x in P}`.
    pub fn reflect(&self) -> Polyhedron {
        let ineqs = self
            .hrep
            .ineqs
            .iter()
            .map(|(a, b)| (a.neg(), b.clone()))
            .collect();
        let eqs = self
            .hrep
            .eqs
            .iter()
            .map(|(e, d)| (e.neg(), d.clone()))
            .collect();
        Polyhedron::from_hrep(HRep {
            dim: self.dim(),
            ineqs,
            eqs,
        })
    }

    pub fn recession_cone(&self) -> Polyhedron {
        let ineqs = self
            .hrep
            .ineqs
            .iter()
            .map(|(a, _)| (a.clone(), Rat::zero()))
            .collect();
        let eqs = self
            .hrep
            .eqs
            .iter()
            .map(|(e, _)| (e.clone(), Rat::zero()))
            .collect();
        Polyhedron::from_hrep(HRep {
            dim: self.dim(),
            ineqs,
            eqs,
        })
    }

    pub fn is_cone(&self) -> bool {
        let v = self.vrep();
        !v.is_empty() && v.vertices.iter().all(|p| p.is_zero())
    }

    /// Nonnegative polar `{x* : <x*, c> >= 0 for all c in self}`.
    pub fn dual_cone(&self) -> Result<Polyhedron> {
        if !self.is_cone() {
            return Err(Error::NotACone);
        }
        let ineqs = self
            .vrep()
            .rays
            .iter()
            .map(|g| (g.neg(), Rat::zero()))
            .collect();
        Ok(Polyhedron::from_hrep(HRep {
            dim: self.dim(),
            ineqs,
            eqs: vec![],
        }))
    }

    /// Conic hull `cone(P)` generated by all points of the set.
    pub fn conic_hull(&self) -> Polyhedron {
        let v = self.vrep();
        if v.is_empty() {
            return Polyhedron::empty(self.dim());
        }
        let mut rays: Vec<RVec> = v
            .vertices
            .iter()
            .chain(v.rays.iter())
            .filter(|g| !g.is_zero())
            .map(|g| g.primitive())
            .collect();
        rays.sort();
        rays.dedup();
        Polyhedron::from_vrep(VRep {
            dim: self.dim(),
            vertices: vec![RVec::zero(self.dim())],
            rays,
        })
    }

    /// Canonical form: minimal facet rows recovered from the generators,
    /// in sorted primitive form. Two equal sets canonicalize identically.
    pub fn canonical(&self) -> Polyhedron {
        let v = self.vrep().clone();
        if v.is_empty() {
            return Polyhedron::empty(self.dim());
        }
        let p = Polyhedron::from_vrep(v);
        Polyhedron::from_hrep(p.hrep.canonical_rows())
    }

    /// Feasibility via LP, an independent route from the generator path.
    pub fn is_empty_lp(&self) -> Result<bool> {
        Ok(!lp::feasible(self.dim(), &self.hrep.ineqs, &self.hrep.eqs)?)
    }
}

/// Homogenize `{x : Ax <= b, Ex = d}` to a cone in one higher dimension
/// and read vertices (t > 0) and rays (t = 0) off its generators.
fn hrep_to_vrep(h: &HRep) -> VRep {
    let d = h.dim;
    let mut rows: Vec<RVec> = Vec::with_capacity(1 + h.ineqs.len() + 2 * h.eqs.len());
    rows.push(RVec::unit(d + 1, d)); // t >= 0
    for (a, b) in &h.ineqs {
        rows.push(a.neg().lift(b.clone()));
    }
    for (e, dd) in &h.eqs {
        rows.push(e.clone().lift(-dd));
        rows.push(e.neg().lift(dd.clone()));
    }
    let cone = cone_generators(d + 1, &rows);
    generators_to_vrep(d, &cone)
}

fn generators_to_vrep(d: usize, cone: &GeneratorCone) -> VRep {
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for r in &cone.rays {
        let t = r.get(d).clone();
        debug_assert!(!t.is_negative());
        if t.is_zero() {
            rays.push(r.unlift().primitive());
        } else {
            let inv = Rat::from_integer(1.into()) / t;
            vertices.push(r.unlift().scale(&inv));
        }
    }
    for l in &cone.lines {
        debug_assert!(l.get(d).is_zero(), "homogenization lines stay at t = 0");
        let dir = l.unlift().primitive_signed();
        rays.push(dir.clone());
        rays.push(dir.neg());
    }
    vertices.sort();
    vertices.dedup();
    rays.sort();
    rays.dedup();
    if vertices.is_empty() {
        // No point with t > 0: the set is empty.
        rays.clear();
    }
    VRep {
        dim: d,
        vertices,
        rays,
    }
}

/// Facets of `conv(V) + cone(R)` via the polar cone of valid inequalities
/// `{(c, δ) : <c,v> <= δ, <c,r> <= 0}`: its extreme rays are the facets,
/// its lines the implicit equalities.
fn vrep_to_hrep(v: &VRep) -> HRep {
    let d = v.dim;
    if v.vertices.is_empty() {
        return Polyhedron::empty(d).hrep;
    }
    let mut rows = Vec::with_capacity(v.vertices.len() + v.rays.len());
    for p in &v.vertices {
        rows.push(p.neg().lift(Rat::from_integer(1.into())));
    }
    for r in &v.rays {
        rows.push(r.neg().lift(Rat::zero()));
    }
    let polar = cone_generators(d + 1, &rows);
    let mut ineqs = Vec::new();
    let mut eqs = Vec::new();
    for phi in &polar.rays {
        if phi.unlift().is_zero() {
            continue; // the trivial row 0 <= δ
        }
        let scaled = phi.primitive();
        ineqs.push((scaled.unlift(), scaled.get(d).clone()));
    }
    for lam in &polar.lines {
        if lam.unlift().is_zero() {
            continue;
        }
        let scaled = lam.primitive_signed();
        eqs.push((scaled.unlift(), scaled.get(d).clone()));
    }
    ineqs.sort();
    ineqs.dedup();
    eqs.sort();
    eqs.dedup();
    HRep { dim: d, ineqs, eqs }
}
