//! Convex function calculus over exact epigraphs.
//!
//! The canonical representation of a polyhedral convex function is its
//! epigraph polyhedron: conjugation is the vertex/ray rule on epigraph
//! generators, sums intersect lifted epigraphs, and infimal convolutions
//! are single LPs over stacked epigraphs, so attainment is certified, not
//! sampled. Non-polyhedral functions come only from the closed catalog in
//! [`catalog`].

mod catalog;

pub use catalog::AnalyticFn;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::lp::{self, LpOutcome, LpProblem, Sense};
use crate::polyhedron::{HRep, Polyhedron};
use crate::rat::{RVec, Rat};
use crate::region::Region;

/// Convex function with polyhedral epigraph, proper and real-valued on its
/// domain by construction.
#[derive(Clone, Debug)]
pub struct PolyhedralFn {
    dim: usize,
    epi: Polyhedron,
}

impl PolyhedralFn {
    /// Validates that the set is a proper epigraph: nonempty, recedes
    /// upward in the height coordinate, and never downward.
    pub fn from_epigraph(epi: Polyhedron) -> Result<Self> {
        let edim = epi.dim();
        if edim < 2 {
            return Err(Error::EmptyDimension);
        }
        let dim = edim - 1;
        let up = RVec::unit(edim, dim);
        if !epi.hrep().recession_holds(&up) {
            return Err(Error::ImproperFunction(
                "set is not an epigraph (no upward recession)".into(),
            ));
        }
        if epi.hrep().recession_holds(&up.neg()) {
            return Err(Error::ImproperFunction(
                "function would take -inf (downward recession)".into(),
            ));
        }
        if epi.is_empty() {
            return Err(Error::ImproperFunction("empty epigraph (f = +inf)".into()));
        }
        Ok(PolyhedralFn { dim, epi })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn epigraph(&self) -> &Polyhedron {
        &self.epi
    }

    /// `ι_P` for nonempty `P`.
    pub fn indicator(p: &Polyhedron) -> Result<Self> {
        let d = p.dim();
        let mut ineqs: Vec<(RVec, Rat)> = p
            .hrep()
            .ineqs
            .iter()
            .map(|(a, b)| (a.lift(Rat::zero()), b.clone()))
            .collect();
        ineqs.push((RVec::unit(d + 1, d).neg(), Rat::zero()));
        let eqs = p
            .hrep()
            .eqs
            .iter()
            .map(|(e, dd)| (e.lift(Rat::zero()), dd.clone()))
            .collect();
        PolyhedralFn::from_epigraph(Polyhedron::from_hrep(HRep::new(d + 1, ineqs, eqs)?))
    }

    /// `max_k (<a_k, x> + b_k)` from a nonempty list of affine pieces.
    pub fn max_affine(dim: usize, pieces: &[(RVec, Rat)]) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::ImproperFunction(
                "max of zero affine pieces".into(),
            ));
        }
        let ineqs = pieces
            .iter()
            .map(|(a, b)| (a.lift(-Rat::one()), -b))
            .collect();
        PolyhedralFn::from_epigraph(Polyhedron::from_hrep(HRep::new(dim + 1, ineqs, vec![])?))
    }

    /// Absolute value on the line.
    pub fn abs() -> Self {
        PolyhedralFn::max_affine(
            1,
            &[
                (RVec::from_ints(&[1]), Rat::zero()),
                (RVec::from_ints(&[-1]), Rat::zero()),
            ],
        )
        .expect("|.| is proper")
    }

    pub fn zero(dim: usize) -> Self {
        PolyhedralFn::max_affine(dim, &[(RVec::zero(dim), Rat::zero())])
            .expect("zero function is proper")
    }

    /// Support function `x -> max_v <v, x>` of a nonempty polytope.
    pub fn support_of_polytope(p: &Polyhedron) -> Result<Self> {
        let v = p.vrep();
        if v.is_empty() {
            return Err(Error::ImproperFunction("support of the empty set".into()));
        }
        if !v.rays.is_empty() {
            return Err(Error::UnsupportedCombination(
                "support functions are built for bounded polytopes only".into(),
            ));
        }
        let pieces: Vec<(RVec, Rat)> = v
            .vertices
            .iter()
            .map(|vx| (vx.clone(), Rat::zero()))
            .collect();
        PolyhedralFn::max_affine(p.dim(), &pieces)
    }

    /// `f + ι_P` by stacking rows of `P` onto the epigraph.
    pub fn restrict(&self, p: &Polyhedron) -> Result<Self> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            });
        }
        let mut ineqs = self.epi.hrep().ineqs.clone();
        let mut eqs = self.epi.hrep().eqs.clone();
        for (a, b) in &p.hrep().ineqs {
            ineqs.push((a.lift(Rat::zero()), b.clone()));
        }
        for (e, d) in &p.hrep().eqs {
            eqs.push((e.lift(Rat::zero()), d.clone()));
        }
        PolyhedralFn::from_epigraph(Polyhedron::from_hrep(HRep::new(
            self.dim + 1,
            ineqs,
            eqs,
        )?))
    }

    /// View as `g(x_1,...,x_m) = f(x_block)` on a product space.
    pub fn embed(&self, product_dim: usize, offset: usize) -> Result<Self> {
        if offset + self.dim > product_dim {
            return Err(Error::DimensionMismatch {
                expected: product_dim,
                found: offset + self.dim,
            });
        }
        let lift_row = |(a, b): (&RVec, &Rat)| -> (RVec, Rat) {
            let mut v = RVec::zero(product_dim + 1);
            for j in 0..self.dim {
                v.set(offset + j, a.get(j).clone());
            }
            v.set(product_dim, a.get(self.dim).clone());
            (v, b.clone())
        };
        let ineqs = self
            .epi
            .hrep()
            .ineqs
            .iter()
            .map(|(a, b)| lift_row((a, b)))
            .collect();
        let eqs = self
            .epi
            .hrep()
            .eqs
            .iter()
            .map(|(e, d)| lift_row((e, d)))
            .collect();
        PolyhedralFn::from_epigraph(Polyhedron::from_hrep(HRep::new(
            product_dim + 1,
            ineqs,
            eqs,
        )?))
    }

    /// Exact value: the lowest point of the epigraph's vertical section.
    /// Validation guarantees every inequality row has height coefficient
    /// <= 0 and equality rows have none, so only lower bounds occur.
    pub fn evaluate(&self, x: &RVec) -> ExtReal {
        let mut best: Option<Rat> = None;
        for (a, b) in &self.epi.hrep().ineqs {
            let alpha = a.get(self.dim);
            let partial: Rat = (0..self.dim).map(|j| a.get(j) * x.get(j)).sum();
            let slack = b - partial;
            if alpha.is_zero() {
                if slack.is_negative() {
                    return ExtReal::PlusInf;
                }
            } else {
                // alpha < 0: t >= slack / alpha.
                let bound = slack / alpha;
                best = Some(match best {
                    Some(cur) => cur.max(bound),
                    None => bound,
                });
            }
        }
        for (e, d) in &self.epi.hrep().eqs {
            let partial: Rat = (0..self.dim).map(|j| e.get(j) * x.get(j)).sum();
            if &partial != d {
                return ExtReal::PlusInf;
            }
        }
        match best {
            Some(v) => ExtReal::Finite(v),
            // No lower bound can only mean f is -inf along the section,
            // which construction excludes; report the diagnostic bottom.
            None => ExtReal::MinusInf,
        }
    }

    /// Fenchel conjugate by the generator rule: epigraph vertices `(v, h)`
    /// become facets `<v, y> - s <= h`, epigraph rays `(r, ρ)` become
    /// `<r, y> <= ρ`.
    pub fn conjugate(&self) -> PolyhedralFn {
        let v = self.epi.vrep();
        let d = self.dim;
        let mut ineqs = Vec::with_capacity(v.vertices.len() + v.rays.len());
        for vert in &v.vertices {
            let mut row = vert.clone();
            row.set(d, -Rat::one());
            ineqs.push((row, vert.get(d).clone()));
        }
        for ray in &v.rays {
            let mut row = ray.clone();
            row.set(d, Rat::zero());
            ineqs.push((row, ray.get(d).clone()));
        }
        let epi = Polyhedron::from_hrep(
            HRep::new(d + 1, ineqs, vec![]).expect("conjugate rows share the dimension"),
        );
        PolyhedralFn::from_epigraph(epi)
            .expect("conjugate of a proper polyhedral function is proper")
    }

    /// Effective domain, as the shadow of the epigraph.
    pub fn domain(&self) -> Polyhedron {
        let rows: Vec<RVec> = (0..self.dim)
            .map(|i| RVec::unit(self.dim + 1, i))
            .collect();
        self.epi.linear_image(&rows)
    }
}

/// A convex function the library can treat exactly.
#[derive(Clone, Debug)]
pub enum ConvexFn {
    Polyhedral(PolyhedralFn),
    Analytic(AnalyticFn),
}

impl ConvexFn {
    pub fn dim(&self) -> usize {
        match self {
            ConvexFn::Polyhedral(f) => f.dim(),
            ConvexFn::Analytic(f) => f.dim(),
        }
    }

    pub fn abs() -> Self {
        ConvexFn::Polyhedral(PolyhedralFn::abs())
    }

    pub fn zero(dim: usize) -> Self {
        ConvexFn::Polyhedral(PolyhedralFn::zero(dim))
    }

    pub fn indicator(p: &Polyhedron) -> Result<Self> {
        Ok(ConvexFn::Polyhedral(PolyhedralFn::indicator(p)?))
    }

    pub fn evaluate(&self, x: &RVec) -> Result<ExtReal> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        Ok(match self {
            ConvexFn::Polyhedral(f) => f.evaluate(x),
            ConvexFn::Analytic(f) => match f.evaluate(x) {
                Some(v) => ExtReal::Finite(v),
                None => ExtReal::PlusInf,
            },
        })
    }

    pub fn conjugate(&self) -> ConvexFn {
        match self {
            ConvexFn::Polyhedral(f) => ConvexFn::Polyhedral(f.conjugate()),
            ConvexFn::Analytic(f) => ConvexFn::Analytic(f.conjugate()),
        }
    }

    /// Polyhedral view, converting catalog entries that are secretly
    /// polyhedral.
    pub fn as_polyhedral(&self) -> Option<PolyhedralFn> {
        match self {
            ConvexFn::Polyhedral(f) => Some(f.clone()),
            ConvexFn::Analytic(f) => f.to_polyhedral(),
        }
    }

    pub fn dom_contains(&self, x: &RVec) -> Result<bool> {
        Ok(self.evaluate(x)?.is_finite())
    }

    pub fn dom_polyhedron(&self) -> Option<Polyhedron> {
        match self {
            ConvexFn::Polyhedral(f) => Some(f.domain()),
            ConvexFn::Analytic(f) => f.dom_polyhedron(),
        }
    }
}

/// `f + g` for polyhedral functions: intersect the epigraphs lifted to
/// separate heights, then project along `(t1, t2) -> t1 + t2`.
fn add_polyhedral(f: &PolyhedralFn, g: &PolyhedralFn) -> Result<PolyhedralFn> {
    let d = f.dim();
    if g.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: g.dim(),
        });
    }
    // Rows over (x, t1, t2).
    let mut ineqs = Vec::new();
    let mut eqs = Vec::new();
    let widen = |(a, b): (&RVec, &Rat), slot: usize| -> (RVec, Rat) {
        let mut v = RVec::zero(d + 2);
        for j in 0..d {
            v.set(j, a.get(j).clone());
        }
        v.set(slot, a.get(d).clone());
        (v, b.clone())
    };
    for (a, b) in &f.epi.hrep().ineqs {
        ineqs.push(widen((a, b), d));
    }
    for (e, dd) in &f.epi.hrep().eqs {
        eqs.push(widen((e, dd), d));
    }
    for (a, b) in &g.epi.hrep().ineqs {
        ineqs.push(widen((a, b), d + 1));
    }
    for (e, dd) in &g.epi.hrep().eqs {
        eqs.push(widen((e, dd), d + 1));
    }
    let lifted = Polyhedron::from_hrep(HRep::new(d + 2, ineqs, eqs)?);
    let mut map: Vec<RVec> = (0..d).map(|i| RVec::unit(d + 2, i)).collect();
    let mut height = RVec::zero(d + 2);
    height.set(d, Rat::one());
    height.set(d + 1, Rat::one());
    map.push(height);
    PolyhedralFn::from_epigraph(lifted.linear_image(&map)).map_err(|_| {
        Error::ImproperFunction("sum has empty domain (dom f ∩ dom g = ∅)".into())
    })
}

fn is_parabola_halfplane_pair(fs: &[ConvexFn]) -> bool {
    matches!(
        fs,
        [ConvexFn::Analytic(a), ConvexFn::Analytic(b)]
        if matches!(
            (a, b),
            (AnalyticFn::ParabolaIndicator, AnalyticFn::HalfplaneIndicator)
                | (AnalyticFn::HalfplaneIndicator, AnalyticFn::ParabolaIndicator)
        )
    )
}

fn is_parabola_halfplane_conj_pair(fs: &[ConvexFn]) -> Option<(usize, usize)> {
    match fs {
        [ConvexFn::Analytic(a), ConvexFn::Analytic(b)] => match (a, b) {
            (AnalyticFn::ParabolaConjugate, AnalyticFn::HalfplaneConjugate) => Some((0, 1)),
            (AnalyticFn::HalfplaneConjugate, AnalyticFn::ParabolaConjugate) => Some((1, 0)),
            _ => None,
        },
        _ => None,
    }
}

fn all_polyhedral(fs: &[ConvexFn]) -> Option<Vec<PolyhedralFn>> {
    fs.iter().map(|f| f.as_polyhedral()).collect()
}

fn unsupported(fs: &[ConvexFn], what: &str) -> Error {
    let tags: Vec<&str> = fs
        .iter()
        .map(|f| match f {
            ConvexFn::Polyhedral(_) => "polyhedral",
            ConvexFn::Analytic(a) => a.tag_name(),
        })
        .collect();
    Error::UnsupportedCombination(format!(
        "{what} is only available for all-polyhedral lists or the cataloged \
         parabola/halfplane pair; got [{}]",
        tags.join(", ")
    ))
}

/// Pointwise sum of a nonempty list of functions.
pub fn fn_sum(fs: &[ConvexFn]) -> Result<ConvexFn> {
    if fs.is_empty() {
        return Err(Error::ImproperFunction("sum of zero functions".into()));
    }
    if fs.len() == 1 {
        return Ok(fs[0].clone());
    }
    if is_parabola_halfplane_pair(fs) {
        // dom ι_C ∩ dom ι_D = {(0,0)}: the sum is the indicator of the
        // origin, and it is polyhedral.
        let origin = Polyhedron::singleton(&RVec::zero(2));
        return ConvexFn::indicator(&origin);
    }
    let Some(polys) = all_polyhedral(fs) else {
        return Err(unsupported(fs, "fn_sum"));
    };
    let mut acc = polys[0].clone();
    for g in &polys[1..] {
        acc = add_polyhedral(&acc, g)?;
    }
    Ok(ConvexFn::Polyhedral(acc))
}

/// Value of the infimal convolution at `y`, with attainment certificate.
#[derive(Clone, Debug)]
pub struct InfConv {
    pub value: ExtReal,
    /// Whether the infimum is attained. Infinite values count as
    /// trivially attained, matching the convention that exactness is
    /// only at stake where the value is finite.
    pub attained: bool,
    pub witness: Option<Vec<RVec>>,
}

/// `(g_1 □ ... □ g_m)(y) = inf { Σ g_i(y_i) : Σ y_i = y }`.
pub fn inf_conv_value(gs: &[ConvexFn], y: &RVec) -> Result<InfConv> {
    if gs.is_empty() {
        return Err(Error::ImproperFunction("infimal convolution of nothing".into()));
    }
    let d = gs[0].dim();
    if y.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: y.dim(),
        });
    }
    if gs.len() == 1 {
        let value = gs[0].evaluate(y)?;
        return Ok(InfConv {
            attained: true,
            witness: value.is_finite().then(|| vec![y.clone()]),
            value,
        });
    }
    if let Some((pi, hi)) = is_parabola_halfplane_conj_pair(gs) {
        return Ok(parabola_halfplane_infconv(y, pi, hi));
    }
    let Some(polys) = all_polyhedral(gs) else {
        return Err(unsupported(gs, "inf_conv_value"));
    };

    // One LP over stacked epigraphs: variables (y^1..y^m, t_1..t_m).
    let m = polys.len();
    let n = m * d + m;
    let mut objective = RVec::zero(n);
    for i in 0..m {
        objective.set(m * d + i, Rat::one());
    }
    let mut p = LpProblem {
        objective,
        ineqs: vec![],
        eqs: vec![],
        sense: Sense::Minimize,
    };
    let embed = |(a, b): (&RVec, &Rat), i: usize| -> (RVec, Rat) {
        let mut v = RVec::zero(n);
        for j in 0..d {
            v.set(i * d + j, a.get(j).clone());
        }
        v.set(m * d + i, a.get(d).clone());
        (v, b.clone())
    };
    for (i, g) in polys.iter().enumerate() {
        for (a, b) in &g.epigraph().hrep().ineqs {
            p.ineqs.push(embed((a, b), i));
        }
        for (e, dd) in &g.epigraph().hrep().eqs {
            p.eqs.push(embed((e, dd), i));
        }
    }
    for j in 0..d {
        let mut row = RVec::zero(n);
        for i in 0..m {
            row.set(i * d + j, Rat::one());
        }
        p.eqs.push((row, y.get(j).clone()));
    }
    Ok(match lp::lp_solve(&p)? {
        LpOutcome::Optimal { point, value } => InfConv {
            value: ExtReal::Finite(value),
            attained: true,
            witness: Some((0..m).map(|i| point.slice(i * d, (i + 1) * d)).collect()),
        },
        LpOutcome::Infeasible => InfConv {
            value: ExtReal::PlusInf,
            attained: true,
            witness: None,
        },
        LpOutcome::Unbounded { .. } => InfConv {
            value: ExtReal::MinusInf,
            attained: false,
            witness: None,
        },
    })
}

/// Parametric infimum for the Example pair `(ι_C)* □ (ι_D)*`: the value is
/// identically zero; it is attained precisely on the axis `y_2 = 0`, where
/// the split `(a, 0) + (y_1 - a, 0)` with `a = max(y_1, 1)` certifies it.
/// For `y_2 != 0` every split costs `y_2^2/(2a) > 0`, so the infimum is
/// approached but never reached.
fn parabola_halfplane_infconv(y: &RVec, parab_slot: usize, half_slot: usize) -> InfConv {
    let (y1, y2) = (y.get(0), y.get(1));
    if y2.is_zero() {
        let a = y1.clone().max(Rat::one());
        let mut parts = vec![RVec::zero(2); 2];
        parts[parab_slot] = RVec::new(vec![a.clone(), Rat::zero()]);
        parts[half_slot] = RVec::new(vec![y1 - &a, Rat::zero()]);
        InfConv {
            value: ExtReal::Finite(Rat::zero()),
            attained: true,
            witness: Some(parts),
        }
    } else {
        InfConv {
            value: ExtReal::Finite(Rat::zero()),
            attained: false,
            witness: None,
        }
    }
}

/// `epi f_1* + ... + epi f_m*` with its closedness verdict.
#[derive(Debug)]
pub struct EpiConjSum {
    pub region: Region,
    pub closed: bool,
    /// On a non-closed sum: a point of the closure outside the sum, plus
    /// the certificate identifier explaining why it is outside.
    pub witness: Option<(RVec, &'static str)>,
}

pub fn epi_conj_sum(fs: &[ConvexFn]) -> Result<EpiConjSum> {
    if fs.is_empty() {
        return Err(Error::ImproperFunction("epigraph sum of nothing".into()));
    }
    if is_parabola_halfplane_pair(fs) {
        let region = Region::ParabolaEpiSum;
        let witness = region.closure_gap_witness();
        return Ok(EpiConjSum {
            region,
            closed: false,
            witness,
        });
    }
    let Some(polys) = all_polyhedral(fs) else {
        return Err(unsupported(fs, "epi_conj_sum"));
    };
    let mut acc = polys[0].conjugate().epigraph().clone();
    for f in &polys[1..] {
        acc = acc.minkowski_sum(f.conjugate().epigraph())?;
    }
    Ok(EpiConjSum {
        region: Region::Poly(acc),
        closed: true,
        witness: None,
    })
}

/// Does `f** = f` hold? Exact epigraph equality for polyhedral functions;
/// catalog identity plus agreement on a fixed rational grid for analytic
/// ones.
pub fn biconjugate_check(f: &ConvexFn) -> Result<bool> {
    match f {
        ConvexFn::Polyhedral(p) => {
            let bi = p.conjugate().conjugate();
            bi.epigraph().equals(p.epigraph())
        }
        ConvexFn::Analytic(a) => {
            let bi = a.conjugate().conjugate();
            if bi != *a {
                return Ok(false);
            }
            let f2 = ConvexFn::Analytic(bi);
            for x in sample_grid_2d() {
                if f.evaluate(&x)? != f2.evaluate(&x)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Fixed rational sample grid on the plane: integers and halves in
/// `[-2, 2]`, hitting interior, boundary and exterior of the catalog
/// domains.
pub fn sample_grid_2d() -> Vec<RVec> {
    let mut pts = Vec::new();
    for i in -4i64..=4 {
        for j in -4i64..=4 {
            pts.push(RVec::new(vec![
                crate::rat::rat(i, 2),
                crate::rat::rat(j, 2),
            ]));
        }
    }
    pts
}

/// Epigraph of the infimal convolution of polyhedral functions: since
/// polyhedral infima are attained wherever finite, it equals the Minkowski
/// sum of the epigraphs.
pub fn inf_conv_epigraph(gs: &[PolyhedralFn]) -> Result<PolyhedralFn> {
    if gs.is_empty() {
        return Err(Error::ImproperFunction("infimal convolution of nothing".into()));
    }
    let mut acc = gs[0].epigraph().clone();
    for g in &gs[1..] {
        acc = acc.minkowski_sum(g.epigraph())?;
    }
    PolyhedralFn::from_epigraph(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn halfline_indicator() -> ConvexFn {
        // ι_[0,∞) on the line.
        let p = Polyhedron::from_hrep(
            HRep::new(1, vec![(RVec::from_ints(&[-1]), Rat::zero())], vec![]).unwrap(),
        );
        ConvexFn::indicator(&p).unwrap()
    }

    #[test]
    fn abs_evaluates() {
        let f = ConvexFn::abs();
        assert_eq!(
            f.evaluate(&RVec::from_ints(&[-3])).unwrap(),
            ExtReal::Finite(rint(3))
        );
        assert_eq!(
            f.evaluate(&RVec::new(vec![rat(1, 2)])).unwrap(),
            ExtReal::Finite(rat(1, 2))
        );
    }

    #[test]
    fn halfline_conjugate_is_reversed_halfline() {
        // (ι_[0,∞))* = ι_(-∞,0]
        let f = halfline_indicator().as_polyhedral().unwrap();
        let conj = f.conjugate();
        // epi f* should be the quadrant {y <= 0, s >= 0}:
        // vertex (0,0), rays (-1,0) and (0,1).
        let v = conj.epigraph().vrep();
        assert_eq!(v.vertices, vec![RVec::zero(2)]);
        assert_eq!(
            v.rays,
            vec![RVec::from_ints(&[-1, 0]), RVec::from_ints(&[0, 1])]
        );
    }

    #[test]
    fn abs_conjugate_is_box_indicator() {
        let conj = ConvexFn::abs().conjugate();
        let expect = ConvexFn::indicator(&Polyhedron::cube(1, -1, 1)).unwrap();
        let (a, b) = (conj.as_polyhedral().unwrap(), expect.as_polyhedral().unwrap());
        assert!(a.epigraph().equals(b.epigraph()).unwrap());
    }

    #[test]
    fn improper_epigraphs_rejected_at_construction() {
        // A vertical line (x fixed, t free) recedes downward.
        let bad = Polyhedron::from_hrep(
            HRep::new(2, vec![], vec![(RVec::from_ints(&[1, 0]), rint(0))]).unwrap(),
        );
        assert!(matches!(
            PolyhedralFn::from_epigraph(bad),
            Err(Error::ImproperFunction(_))
        ));
        // An empty set is no epigraph of a proper function.
        assert!(matches!(
            PolyhedralFn::indicator(&Polyhedron::empty(1)),
            Err(Error::ImproperFunction(_))
        ));
    }

    #[test]
    fn sum_of_abs_and_halfline() {
        let sum = fn_sum(&[ConvexFn::abs(), halfline_indicator()]).unwrap();
        // x on [0, inf), +inf elsewhere.
        for (x, want) in [
            (rint(2), ExtReal::Finite(rint(2))),
            (rat(1, 2), ExtReal::Finite(rat(1, 2))),
            (rint(0), ExtReal::Finite(rint(0))),
            (rint(-1), ExtReal::PlusInf),
        ] {
            assert_eq!(sum.evaluate(&RVec::new(vec![x])).unwrap(), want);
        }
    }

    #[test]
    fn sum_with_zero_is_identity() {
        let f = ConvexFn::abs();
        let sum = fn_sum(&[f.clone(), ConvexFn::zero(1)]).unwrap();
        let (a, b) = (sum.as_polyhedral().unwrap(), f.as_polyhedral().unwrap());
        assert!(a.epigraph().equals(b.epigraph()).unwrap());
    }

    #[test]
    fn catalog_pair_sum_is_origin_indicator() {
        let sum = fn_sum(&[
            ConvexFn::Analytic(AnalyticFn::ParabolaIndicator),
            ConvexFn::Analytic(AnalyticFn::HalfplaneIndicator),
        ])
        .unwrap();
        assert_eq!(
            sum.evaluate(&RVec::zero(2)).unwrap(),
            ExtReal::Finite(rint(0))
        );
        assert_eq!(
            sum.evaluate(&RVec::from_ints(&[0, 1])).unwrap(),
            ExtReal::PlusInf
        );
        // Its conjugate is identically zero.
        let conj = sum.conjugate();
        for y in sample_grid_2d() {
            assert_eq!(conj.evaluate(&y).unwrap(), ExtReal::Finite(rint(0)));
        }
    }

    #[test]
    fn biconjugacy_on_basic_functions() {
        assert!(biconjugate_check(&ConvexFn::abs()).unwrap());
        assert!(biconjugate_check(&halfline_indicator()).unwrap());
        assert!(biconjugate_check(&ConvexFn::indicator(&Polyhedron::cube(2, 0, 1)).unwrap())
            .unwrap());
        assert!(
            biconjugate_check(&ConvexFn::Analytic(AnalyticFn::ParabolaIndicator)).unwrap()
        );
    }

    #[test]
    fn infconv_unit_element() {
        // ι_[-1,1] □ ι_{0} = ι_[-1,1]
        let box1 = ConvexFn::indicator(&Polyhedron::cube(1, -1, 1)).unwrap();
        let origin = ConvexFn::indicator(&Polyhedron::singleton(&RVec::zero(1))).unwrap();
        let inside = inf_conv_value(&[box1.clone(), origin.clone()], &RVec::new(vec![rat(1, 2)]))
            .unwrap();
        assert_eq!(inside.value, ExtReal::Finite(rint(0)));
        assert!(inside.attained);
        let outside = inf_conv_value(&[box1, origin], &RVec::from_ints(&[2])).unwrap();
        assert_eq!(outside.value, ExtReal::PlusInf);
    }

    #[test]
    fn infconv_of_indicators_adds_domains() {
        // ι_[-1,1] □ ι_(-∞,0]: domain (-∞,1].
        let box1 = ConvexFn::indicator(&Polyhedron::cube(1, -1, 1)).unwrap();
        let left = ConvexFn::indicator(&Polyhedron::from_hrep(
            HRep::new(1, vec![(RVec::from_ints(&[1]), rint(0))], vec![]).unwrap(),
        ))
        .unwrap();
        let at_half = inf_conv_value(&[box1.clone(), left.clone()], &RVec::new(vec![rat(1, 2)]))
            .unwrap();
        assert_eq!(at_half.value, ExtReal::Finite(rint(0)));
        assert!(at_half.attained);
        let parts = at_half.witness.unwrap();
        assert_eq!(parts[0].add(&parts[1]), RVec::new(vec![rat(1, 2)]));
        let at_two = inf_conv_value(&[box1, left], &RVec::from_ints(&[2])).unwrap();
        assert_eq!(at_two.value, ExtReal::PlusInf);
    }

    #[test]
    fn example_pair_infconv_not_exact_off_axis() {
        let gs = [
            ConvexFn::Analytic(AnalyticFn::ParabolaConjugate),
            ConvexFn::Analytic(AnalyticFn::HalfplaneConjugate),
        ];
        let at11 = inf_conv_value(&gs, &RVec::from_ints(&[1, 1])).unwrap();
        assert_eq!(at11.value, ExtReal::Finite(rint(0)));
        assert!(!at11.attained);
        let on_axis = inf_conv_value(&gs, &RVec::from_ints(&[-3, 0])).unwrap();
        assert_eq!(on_axis.value, ExtReal::Finite(rint(0)));
        assert!(on_axis.attained);
        let parts = on_axis.witness.unwrap();
        assert_eq!(parts[0].add(&parts[1]), RVec::from_ints(&[-3, 0]));
        // Both parts must sit in their own domains.
        assert!(AnalyticFn::ParabolaConjugate.dom_contains(&parts[0]));
        assert!(AnalyticFn::HalfplaneConjugate.dom_contains(&parts[1]));
    }

    #[test]
    fn epi_conj_sum_closed_for_polyhedral_open_for_pair() {
        let poly = epi_conj_sum(&[ConvexFn::abs(), halfline_indicator()]).unwrap();
        assert!(poly.closed);
        let pair = epi_conj_sum(&[
            ConvexFn::Analytic(AnalyticFn::ParabolaIndicator),
            ConvexFn::Analytic(AnalyticFn::HalfplaneIndicator),
        ])
        .unwrap();
        assert!(!pair.closed);
        let (w, _) = pair.witness.unwrap();
        assert_eq!(w, RVec::from_ints(&[1, 1, 0]));
    }
}
