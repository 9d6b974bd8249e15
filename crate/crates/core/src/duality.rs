//! Extended monotropic programming: separable convex objectives coupled by
//! a subspace or polyhedral-cone constraint, the conjugate dual, zero-gap
//! certification, and the constraint-qualification battery.
//!
//! Every checker runs on a single-space reformulation of the block
//! instance. Diagonal couplings reduce to the block functions on the base
//! space (`inf_{x} Σ f_i(x)`); general all-polyhedral couplings lift each
//! block to the product space and append the indicator of the constraint
//! set.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::convex::{
    epi_conj_sum, inf_conv_value, sample_grid_2d, AnalyticFn, ConvexFn, PolyhedralFn,
};
use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::linalg;
use crate::lp::{self, LpOutcome, LpProblem, Sense};
use crate::polyhedron::Polyhedron;
use crate::rat::{rat, rint, RVec, Rat};
use crate::subdiff::{condition_ii_check, conjugates, sum_eps_subdiffs, sum_rule_check};

#[derive(Clone, Debug)]
pub struct Block {
    pub dim: usize,
    pub f: ConvexFn,
}

#[derive(Clone, Debug)]
pub enum Coupling {
    /// `x ∈ span(basis)`, a subspace of the product space.
    Subspace { basis: Vec<RVec> },
    /// `x ∈ C` for a polyhedral cone `C` in the product space.
    PolyCone { cone: Polyhedron },
}

/// `inf Σ f_i(x_i)` subject to `(x_1,...,x_m)` in the coupling set.
#[derive(Clone, Debug)]
pub struct MonotropicInstance {
    pub blocks: Vec<Block>,
    pub coupling: Coupling,
    feasible: bool,
    feasible_witness: Option<RVec>,
}

/// Single-space view used by every constraint-qualification checker.
#[derive(Clone, Debug)]
pub enum Reform {
    /// Diagonal coupling: the block functions live on the shared base
    /// space and the instance is `inf_x Σ f_i(x)`.
    Diagonal { fs: Vec<ConvexFn> },
    /// General coupling: blocks lifted to the product space plus the
    /// indicator of the coupling set, which sits first so interiority
    /// never asks it for interior points.
    Product { fs: Vec<ConvexFn> },
}

impl Reform {
    pub fn functions(&self) -> &[ConvexFn] {
        match self {
            Reform::Diagonal { fs } | Reform::Product { fs } => fs,
        }
    }
}

impl MonotropicInstance {
    pub fn new(blocks: Vec<Block>, coupling: Coupling) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Invalid("instance needs at least one block".into()));
        }
        let product_dim: usize = blocks.iter().map(|b| b.dim).sum();
        for b in &blocks {
            if b.f.dim() != b.dim {
                return Err(Error::DimensionMismatch {
                    expected: b.dim,
                    found: b.f.dim(),
                });
            }
        }
        match &coupling {
            Coupling::Subspace { basis } => {
                for v in basis {
                    if v.dim() != product_dim {
                        return Err(Error::DimensionMismatch {
                            expected: product_dim,
                            found: v.dim(),
                        });
                    }
                }
            }
            Coupling::PolyCone { cone } => {
                if cone.dim() != product_dim {
                    return Err(Error::DimensionMismatch {
                        expected: product_dim,
                        found: cone.dim(),
                    });
                }
                if !cone.is_cone() {
                    return Err(Error::NotACone);
                }
            }
        }
        let mut inst = MonotropicInstance {
            blocks,
            coupling,
            feasible: false,
            feasible_witness: None,
        };
        let (feasible, witness) = inst.compute_feasibility()?;
        inst.feasible = feasible;
        inst.feasible_witness = witness;
        Ok(inst)
    }

    pub fn product_dim(&self) -> usize {
        self.blocks.iter().map(|b| b.dim).sum()
    }

    pub fn m(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible
    }

    pub fn feasible_witness(&self) -> Option<&RVec> {
        self.feasible_witness.as_ref()
    }

    /// Coupling set as a polyhedron in the product space.
    pub fn coupling_set(&self) -> Result<Polyhedron> {
        match &self.coupling {
            Coupling::Subspace { basis } => Polyhedron::subspace(self.product_dim(), basis),
            Coupling::PolyCone { cone } => Ok(cone.clone()),
        }
    }

    /// Is the coupling exactly the diagonal `{(x, ..., x)}` of equal-sized
    /// blocks?
    pub fn diagonal_base_dim(&self) -> Option<usize> {
        let d = self.blocks[0].dim;
        if self.blocks.iter().any(|b| b.dim != d) {
            return None;
        }
        let m = self.m();
        let Coupling::Subspace { basis } = &self.coupling else {
            return None;
        };
        let diag: Vec<RVec> = (0..d)
            .map(|j| {
                let mut v = RVec::zero(m * d);
                for i in 0..m {
                    v.set(i * d + j, Rat::one());
                }
                v
            })
            .collect();
        linalg::same_span(basis, &diag).then_some(d)
    }

    /// The catalog pair `(ι_C, ι_D)` diagonally coupled, in either order.
    fn catalog_pair_slots(&self) -> Option<(usize, usize)> {
        self.diagonal_base_dim()?;
        match (&self.blocks[..], ) {
            ([a, b],) => match (&a.f, &b.f) {
                (
                    ConvexFn::Analytic(AnalyticFn::ParabolaIndicator),
                    ConvexFn::Analytic(AnalyticFn::HalfplaneIndicator),
                ) => Some((0, 1)),
                (
                    ConvexFn::Analytic(AnalyticFn::HalfplaneIndicator),
                    ConvexFn::Analytic(AnalyticFn::ParabolaIndicator),
                ) => Some((1, 0)),
                _ => None,
            },
            _ => None,
        }
    }

    /// The conjugate pair antidiagonally coupled — the shape `build_dual`
    /// produces from the catalog pair.
    fn catalog_conj_pair(&self) -> bool {
        if self.m() != 2 || self.blocks.iter().any(|b| b.dim != 2) {
            return false;
        }
        let tags_ok = matches!(
            (&self.blocks[0].f, &self.blocks[1].f),
            (
                ConvexFn::Analytic(AnalyticFn::ParabolaConjugate),
                ConvexFn::Analytic(AnalyticFn::HalfplaneConjugate)
            ) | (
                ConvexFn::Analytic(AnalyticFn::HalfplaneConjugate),
                ConvexFn::Analytic(AnalyticFn::ParabolaConjugate)
            )
        );
        if !tags_ok {
            return false;
        }
        let Coupling::Subspace { basis } = &self.coupling else {
            return false;
        };
        let anti: Vec<RVec> = (0..2)
            .map(|j| {
                let mut v = RVec::zero(4);
                v.set(j, Rat::one());
                v.set(2 + j, -Rat::one());
                v
            })
            .collect();
        linalg::same_span(basis, &anti)
    }

    pub fn all_polyhedral(&self) -> Option<Vec<PolyhedralFn>> {
        self.blocks.iter().map(|b| b.f.as_polyhedral()).collect()
    }

    /// Single-space reformulation for the CQ battery.
    pub fn reformulate(&self) -> Result<Reform> {
        if self.diagonal_base_dim().is_some() {
            return Ok(Reform::Diagonal {
                fs: self.blocks.iter().map(|b| b.f.clone()).collect(),
            });
        }
        let Some(polys) = self.all_polyhedral() else {
            return Err(Error::UnsupportedCombination(
                "non-diagonal couplings require all-polyhedral blocks".into(),
            ));
        };
        let product_dim = self.product_dim();
        let mut fs = vec![ConvexFn::indicator(&self.coupling_set()?)?];
        let mut offset = 0;
        for (block, f) in self.blocks.iter().zip(polys.iter()) {
            fs.push(ConvexFn::Polyhedral(f.embed(product_dim, offset)?));
            offset += block.dim;
        }
        Ok(Reform::Product { fs })
    }

    fn compute_feasibility(&self) -> Result<(bool, Option<RVec>)> {
        if self.catalog_pair_slots().is_some() {
            // dom ι_C ∩ dom ι_D = {(0,0)}, and the diagonal embeds it.
            return Ok((true, Some(RVec::zero(4))));
        }
        if self.catalog_conj_pair() {
            // (u, 0, -u, 0) with u >= 0 is feasible; the origin is the
            // canonical witness.
            return Ok((true, Some(RVec::zero(4))));
        }
        let Some(polys) = self.all_polyhedral() else {
            return Err(Error::UnsupportedCombination(
                "feasibility is decided for all-polyhedral blocks or the cataloged pairs"
                    .into(),
            ));
        };
        let dim = self.product_dim();
        let coupling = self.coupling_set()?;
        let mut ineqs = coupling.hrep().ineqs.clone();
        let mut eqs = coupling.hrep().eqs.clone();
        let mut offset = 0;
        for (block, f) in self.blocks.iter().zip(polys.iter()) {
            let dom = f.domain();
            for (a, b) in &dom.hrep().ineqs {
                ineqs.push((embed_row(a, dim, offset), b.clone()));
            }
            for (e, d) in &dom.hrep().eqs {
                eqs.push((embed_row(e, dim, offset), d.clone()));
            }
            offset += block.dim;
        }
        let p = LpProblem {
            objective: RVec::zero(dim),
            ineqs,
            eqs,
            sense: Sense::Minimize,
        };
        match lp::lp_solve(&p)? {
            LpOutcome::Optimal { point, .. } => Ok((true, Some(point))),
            LpOutcome::Infeasible => Ok((false, None)),
            LpOutcome::Unbounded { .. } => unreachable!("zero objective cannot be unbounded"),
        }
    }
}

fn embed_row(row: &RVec, product_dim: usize, offset: usize) -> RVec {
    let mut v = RVec::zero(product_dim);
    for j in 0..row.dim() {
        v.set(offset + j, row.get(j).clone());
    }
    v
}

/// Value/attainment/witness triple of one side of the program pair.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub value: ExtReal,
    pub attained: bool,
    pub witness: Option<RVec>,
}

/// The conjugate dual instance: minimizing `Σ f_i*` over the orthogonal
/// complement (or dual cone). Its primal value is `-d`.
pub fn build_dual(inst: &MonotropicInstance) -> Result<MonotropicInstance> {
    let blocks = inst
        .blocks
        .iter()
        .map(|b| Block {
            dim: b.dim,
            f: b.f.conjugate(),
        })
        .collect();
    let coupling = match &inst.coupling {
        Coupling::Subspace { basis } => Coupling::Subspace {
            basis: linalg::orthogonal_complement(basis, inst.product_dim())?,
        },
        Coupling::PolyCone { cone } => Coupling::PolyCone {
            cone: cone.dual_cone()?,
        },
    };
    MonotropicInstance::new(blocks, coupling)
}

pub fn solve_primal(inst: &MonotropicInstance) -> Result<SolveOutcome> {
    if let Some((parab_slot, _)) = inst.catalog_pair_slots() {
        // The shared domain is the single point (0,0), where both
        // indicators vanish: p = 0, attained there.
        let _ = parab_slot;
        return Ok(SolveOutcome {
            value: ExtReal::Finite(Rat::zero()),
            attained: true,
            witness: Some(RVec::zero(4)),
        });
    }
    if inst.catalog_conj_pair() {
        // Feasible points are (z, -z); the halfplane conjugate pins
        // -z ∈ (-inf,0] x {0}, so z = (u, 0) with u >= 0 where both
        // conjugates vanish. Minimum 0, attained; lex-least witness 0.
        return Ok(SolveOutcome {
            value: ExtReal::Finite(Rat::zero()),
            attained: true,
            witness: Some(RVec::zero(4)),
        });
    }
    let Some(polys) = inst.all_polyhedral() else {
        return Err(Error::UnsupportedCombination(
            "solve supports all-polyhedral blocks or the cataloged pairs".into(),
        ));
    };
    if !inst.feasible {
        return Ok(SolveOutcome {
            value: ExtReal::PlusInf,
            attained: false,
            witness: None,
        });
    }
    // min Σ t_i over (x, t): block epigraph rows + coupling rows.
    let dim = inst.product_dim();
    let m = inst.m();
    let n = dim + m;
    let mut objective = RVec::zero(n);
    for i in 0..m {
        objective.set(dim + i, Rat::one());
    }
    let mut p = LpProblem {
        objective,
        ineqs: vec![],
        eqs: vec![],
        sense: Sense::Minimize,
    };
    let mut offset = 0;
    for (i, (block, f)) in inst.blocks.iter().zip(polys.iter()).enumerate() {
        let lift = |(row, rhs): (&RVec, &Rat)| -> (RVec, Rat) {
            let mut v = RVec::zero(n);
            for j in 0..block.dim {
                v.set(offset + j, row.get(j).clone());
            }
            v.set(dim + i, row.get(block.dim).clone());
            (v, rhs.clone())
        };
        for (a, b) in &f.epigraph().hrep().ineqs {
            p.ineqs.push(lift((a, b)));
        }
        for (e, d) in &f.epigraph().hrep().eqs {
            p.eqs.push(lift((e, d)));
        }
        offset += block.dim;
    }
    let coupling = inst.coupling_set()?;
    for (a, b) in &coupling.hrep().ineqs {
        let mut v = RVec::zero(n);
        for j in 0..dim {
            v.set(j, a.get(j).clone());
        }
        p.ineqs.push((v, b.clone()));
    }
    for (e, d) in &coupling.hrep().eqs {
        let mut v = RVec::zero(n);
        for j in 0..dim {
            v.set(j, e.get(j).clone());
        }
        p.eqs.push((v, d.clone()));
    }
    Ok(match lp::lp_solve(&p)? {
        LpOutcome::Optimal { point, value } => SolveOutcome {
            value: ExtReal::Finite(value),
            attained: true,
            witness: Some(point.slice(0, dim)),
        },
        LpOutcome::Infeasible => SolveOutcome {
            value: ExtReal::PlusInf,
            attained: false,
            witness: None,
        },
        LpOutcome::Unbounded { .. } => SolveOutcome {
            value: ExtReal::MinusInf,
            attained: false,
            witness: None,
        },
    })
}

/// `d = sup Σ -f_i*(x_i*)` over the dual coupling; solved through the
/// dual instance's minimization form.
pub fn solve_dual(inst: &MonotropicInstance) -> Result<SolveOutcome> {
    let dual = build_dual(inst)?;
    let r = solve_primal(&dual)?;
    Ok(SolveOutcome {
        value: r.value.neg(),
        attained: r.attained,
        witness: r.witness,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Holds,
    Fails,
    Unsupported(String),
}

impl Verdict {
    pub fn as_str(&self) -> &str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Unsupported(_) => "unsupported",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CqCheck {
    pub verdict: Verdict,
    pub witness: Option<String>,
}

fn check_of<T, F: FnOnce() -> Result<(bool, Option<T>)>>(f: F, fmt: impl Fn(T) -> String) -> CqCheck {
    match f() {
        Ok((true, w)) => CqCheck {
            verdict: Verdict::Holds,
            witness: w.map(fmt),
        },
        Ok((false, w)) => CqCheck {
            verdict: Verdict::Fails,
            witness: w.map(fmt),
        },
        Err(e) => CqCheck {
            verdict: Verdict::Unsupported(e.to_string()),
            witness: None,
        },
    }
}

/// Full diagnostic record for one instance.
#[derive(Clone, Debug)]
pub struct GapReport {
    pub primal: SolveOutcome,
    pub dual: SolveOutcome,
    pub gap: ExtReal,
    pub feasible: bool,
    pub cq: BTreeMap<String, CqCheck>,
}

impl GapReport {
    pub fn zero_gap(&self) -> bool {
        self.gap == ExtReal::Finite(Rat::zero())
    }
}

/// Up to `max_n` deterministic feasible points of the reformulated
/// instance (vertices of the shared domain, lexicographically first).
pub fn sample_feasible_points(inst: &MonotropicInstance, max_n: usize) -> Result<Vec<RVec>> {
    if inst.catalog_pair_slots().is_some() {
        return Ok(vec![RVec::zero(2)]);
    }
    let reform = inst.reformulate()?;
    let fs = reform.functions();
    let doms: Option<Vec<Polyhedron>> = fs.iter().map(|f| f.dom_polyhedron()).collect();
    let Some(doms) = doms else {
        return Err(Error::UnsupportedCombination(
            "cannot sample the domain of analytic functions".into(),
        ));
    };
    let mut acc = doms[0].clone();
    for d in &doms[1..] {
        acc = acc.intersect(d)?;
    }
    let mut pts = acc.vrep().vertices.clone();
    pts.sort();
    pts.truncate(max_n);
    Ok(pts)
}

/// Closedness of `Σ ∂_ε` over the reformulated function list at a
/// feasible point — the Bertsekas constraint qualification at `(x, ε)`.
///
/// For diagonal couplings the product-space set
/// `S^⊥ + Σ ∂_ε g_i(x)` equals `{(a_1,...,a_m) : Σ a_i ∈ Σ ∂_ε f_i(x̄)}`,
/// so its closedness is exactly the closedness of the base-space sum.
pub fn bertsekas_cq_check(
    inst: &MonotropicInstance,
    x: &RVec,
    eps: &Rat,
) -> Result<(bool, Option<RVec>)> {
    let reform = inst.reformulate()?;
    let fs = reform.functions();
    bertsekas_on_functions(fs, x, eps)
}

/// The same check on an explicit single-space function list.
pub fn bertsekas_on_functions(
    fs: &[ConvexFn],
    x: &RVec,
    eps: &Rat,
) -> Result<(bool, Option<RVec>)> {
    let region = sum_eps_subdiffs(fs, x, eps)?;
    match region.is_closed()? {
        true => Ok((true, None)),
        false => Ok((false, region.closure_gap_witness().map(|(w, _)| w))),
    }
}

/// Interiority condition `dom f_1 ∩ (∩_{i>=2} int dom f_i) ≠ ∅`, decided
/// by a slack-maximization LP over the polyhedral domains. A strictly
/// interior witness is returned when it exists.
pub fn interiority_check(fs: &[ConvexFn]) -> Result<(bool, Option<RVec>)> {
    if fs.is_empty() {
        return Err(Error::Invalid("no functions given".into()));
    }
    if let Some(v) = catalog_interiority(fs) {
        return Ok(v);
    }
    let doms: Option<Vec<Polyhedron>> = fs.iter().map(|f| f.dom_polyhedron()).collect();
    let Some(doms) = doms else {
        return Err(Error::UnsupportedCombination(
            "interiority with analytic domains is only cataloged for the \
             parabola/halfplane pair"
                .into(),
        ));
    };
    let d = doms[0].dim();
    // A canonical representation exposes implicit equalities, which kill
    // the interior outright.
    let canonical: Vec<Polyhedron> = doms[1..].iter().map(|p| p.canonical()).collect();
    if canonical.iter().any(|p| !p.hrep().eqs.is_empty() || p.is_empty()) {
        return Ok((false, None));
    }
    // Variables (x, s): maximize s with dom_1 exact and uniform slack s
    // into every facet of dom_i, i >= 2; s capped at 1 for boundedness.
    let mut objective = RVec::zero(d + 1);
    objective.set(d, Rat::one());
    let mut p = LpProblem {
        objective,
        ineqs: vec![],
        eqs: vec![],
        sense: Sense::Maximize,
    };
    for (a, b) in &doms[0].hrep().ineqs {
        p.ineqs.push((a.lift(Rat::zero()), b.clone()));
    }
    for (e, dd) in &doms[0].hrep().eqs {
        p.eqs.push((e.lift(Rat::zero()), dd.clone()));
    }
    for dom in &canonical {
        for (a, b) in &dom.hrep().ineqs {
            p.ineqs.push((a.lift(Rat::one()), b.clone()));
        }
    }
    p.ineqs.push((RVec::unit(d + 1, d), Rat::one()));
    match lp::lp_solve(&p)? {
        LpOutcome::Optimal { point, value } => {
            if value.is_positive() {
                Ok((true, Some(point.slice(0, d))))
            } else {
                Ok((false, None))
            }
        }
        LpOutcome::Infeasible => Ok((false, None)),
        LpOutcome::Unbounded { .. } => unreachable!("slack is capped"),
    }
}

/// Closed-catalog rules: the parabola region never meets the open right
/// halfplane (2x + y² <= 0 with x > 0 is impossible), and symmetrically
/// the halfplane never meets the open parabola interior.
fn catalog_interiority(fs: &[ConvexFn]) -> Option<(bool, Option<RVec>)> {
    match fs {
        [ConvexFn::Analytic(a), ConvexFn::Analytic(b)] => match (a, b) {
            (AnalyticFn::ParabolaIndicator, AnalyticFn::HalfplaneIndicator)
            | (AnalyticFn::HalfplaneIndicator, AnalyticFn::ParabolaIndicator) => {
                Some((false, None))
            }
            _ => None,
        },
        [single] => {
            // m = 1: the intersection over an empty index set is the
            // whole space, so only dom f_1 ≠ ∅ is required.
            match single {
                ConvexFn::Analytic(_) => Some((true, Some(RVec::zero(2)))),
                ConvexFn::Polyhedral(_) => None,
            }
        }
        _ => None,
    }
}

/// Transversality: is the conic hull of `dom f - dom g` a linear
/// subspace? Returns a basis of the subspace when it is.
pub fn transversality_check(f: &ConvexFn, g: &ConvexFn) -> Result<(bool, Option<Vec<RVec>>)> {
    let (Some(df), Some(dg)) = (f.dom_polyhedron(), g.dom_polyhedron()) else {
        return Err(Error::UnsupportedCombination(
            "transversality needs polyhedral domains".into(),
        ));
    };
    let diff = df.minkowski_sum(&dg.reflect())?;
    let hull = diff.conic_hull();
    let gens = hull.vrep().rays.clone();
    for r in &gens {
        if !hull.contains_point(&r.neg())? {
            return Ok((false, None));
        }
    }
    Ok((true, Some(linalg::independent_subset(&gens))))
}

/// Assemble the full report: values, gap, attainment and the named CQ
/// battery. Individual checks degrade to `Unsupported` without aborting.
pub fn gap_report(inst: &MonotropicInstance) -> Result<GapReport> {
    let primal = solve_primal(inst)?;
    let dual = solve_dual(inst)?;
    let gap = ExtReal::gap_from(&primal.value, &dual.value);

    let mut cq = BTreeMap::new();
    let reform = inst.reformulate();

    match &reform {
        Ok(r) => {
            let fs = r.functions();
            cq.insert(
                "interiority".into(),
                check_of(|| interiority_check(fs), |w: RVec| w.to_string()),
            );
            let pts = sample_feasible_points(inst, 5).unwrap_or_default();
            cq.insert(
                "bertsekas".into(),
                check_of(
                    || {
                        let mut first_point = None;
                        for x in &pts {
                            for eps in [rat(1, 2), rint(1)] {
                                let (ok, w) = bertsekas_on_functions(fs, x, &eps)?;
                                if !ok {
                                    return Ok((false, w.map(|p| p.to_string())));
                                }
                            }
                            first_point.get_or_insert_with(|| x.to_string());
                        }
                        Ok((true, first_point.map(|p| format!("closed at {p}, eps in {{1/2, 1}}"))))
                    },
                    |s| s,
                ),
            );
            cq.insert(
                "closed_epigraph".into(),
                check_of(
                    || {
                        let s = epi_conj_sum(fs)?;
                        Ok((s.closed, s.witness.map(|(w, cert)| format!("{w} [{cert}]"))))
                    },
                    |s| s,
                ),
            );
            cq.insert(
                "condition_ii".into(),
                check_of(
                    || {
                        let duals = sample_duals_for(fs);
                        let ok = condition_ii_check(fs, &duals)?;
                        Ok((ok, Some(format!("{} sample duals", duals.len()))))
                    },
                    |s| s,
                ),
            );
            cq.insert(
                "exactness".into(),
                check_of(
                    || {
                        let conj = conjugates(fs);
                        for y in sample_duals_for(fs) {
                            let ic = inf_conv_value(&conj, &y)?;
                            if ic.value.is_finite() && !ic.attained {
                                return Ok((false, Some(format!("not attained at {y}"))));
                            }
                        }
                        Ok((true, Some("attained at every finite sample".into())))
                    },
                    |s| s,
                ),
            );
            if let Some(x) = pts.first() {
                cq.insert(
                    "sum_rule".into(),
                    check_of(
                        || {
                            let sr = sum_rule_check(fs, x)?;
                            Ok((sr.holds, Some(format!("at {x}"))))
                        },
                        |s| s,
                    ),
                );
            }
            if let [f, g] = fs {
                cq.insert(
                    "transversality".into(),
                    check_of(
                        || {
                            let (ok, basis) = transversality_check(f, g)?;
                            Ok((ok, basis.map(|b| format!("subspace dim {}", b.len()))))
                        },
                        |s| s,
                    ),
                );
            }
        }
        Err(e) => {
            cq.insert(
                "reformulation".into(),
                CqCheck {
                    verdict: Verdict::Unsupported(e.to_string()),
                    witness: None,
                },
            );
        }
    }

    Ok(GapReport {
        primal,
        dual,
        gap,
        feasible: inst.feasible,
        cq,
    })
}

/// Deterministic dual sample set: conjugate-domain vertices would do, but
/// a fixed small grid keeps reports stable across function shapes.
pub fn sample_duals_for(fs: &[ConvexFn]) -> Vec<RVec> {
    let d = fs.first().map_or(1, |f| f.dim());
    if d == 2 {
        return sample_grid_2d();
    }
    let mut pts = Vec::new();
    let vals: Vec<Rat> = vec![rint(-2), rint(-1), rat(-1, 2), rint(0), rat(1, 2), rint(1), rint(2)];
    match d {
        1 => {
            for v in &vals {
                pts.push(RVec::new(vec![v.clone()]));
            }
        }
        _ => {
            // Axis points plus a few mixed corners keep the count modest
            // in dimension 3 and up.
            for i in 0..d {
                for v in &vals {
                    let mut p = RVec::zero(d);
                    p.set(i, v.clone());
                    pts.push(p);
                }
            }
            for s in [-1i64, 1] {
                for t in [-1i64, 1] {
                    let mut p = RVec::zero(d);
                    p.set(0, rint(s));
                    p.set(1, rint(t));
                    pts.push(p);
                }
            }
        }
    }
    pts.sort();
    pts.dedup();
    pts
}
