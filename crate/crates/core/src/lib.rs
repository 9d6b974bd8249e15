//! Exact convex-duality toolkit.
//!
//! Everything is computed over arbitrary-precision rationals: polyhedra in
//! dual (facet/generator) description, Fenchel conjugates of polyhedral and
//! cataloged analytic convex functions, ε-subdifferential regions, infimal
//! convolutions with attainment certificates, and the diagnostics that
//! decide when an extended monotropic program has zero duality gap.

pub mod convex;
pub mod corpus;
pub mod dd;
pub mod duality;
pub mod error;
pub mod linalg;
pub mod lp;
pub mod extreal;
pub mod polyhedron;
pub mod region;
pub mod rat;
pub mod subdiff;

pub use convex::{
    biconjugate_check, epi_conj_sum, fn_sum, inf_conv_value, AnalyticFn, ConvexFn, EpiConjSum,
    InfConv, PolyhedralFn,
};
pub use duality::{
    bertsekas_cq_check, build_dual, gap_report, interiority_check, solve_dual, solve_primal,
    transversality_check, Block, Coupling, GapReport, MonotropicInstance, SolveOutcome, Verdict,
};
pub use error::{Error, Result};
pub use extreal::ExtReal;
pub use lp::{lp_solve, lp_solve_any, LpOutcome, LpProblem, Sense};
pub use polyhedron::{HRep, Polyhedron, VRep};
pub use rat::{parse_rat, rat, rint, RVec, Rat};
pub use region::Region;
pub use subdiff::{
    condition_i_check, condition_ii_check, condition_iv_check, decompose_subgradient,
    eps_subdiff, hup_sandwich_check, least_sufficient_k, subdiff, sum_eps_subdiffs,
    sum_rule_check, EpsSplit,
};
