//! The duality engine against LP strong duality (via an independently
//! constructed transpose dual), weak duality across the corpus, the
//! two-route dual value consistency, the implication chain between the
//! constraint qualifications, and the counterexample pin that separates
//! the Bertsekas condition from the closed-epigraph condition.

use dualgap_core::convex::{inf_conv_value, AnalyticFn, ConvexFn};
use dualgap_core::corpus;
use dualgap_core::duality::{
    bertsekas_cq_check, build_dual, gap_report, interiority_check, sample_feasible_points,
    solve_dual, solve_primal, Block, Coupling, MonotropicInstance, Verdict,
};
use dualgap_core::lp::{lp_solve, LpOutcome, LpProblem, Sense};
use dualgap_core::polyhedron::Polyhedron;
use dualgap_core::rat::{rat, rint, RVec, Rat};
use dualgap_core::subdiff::conjugates;
use dualgap_core::{ExtReal, Error};

use num_traits::{One, Zero};

fn diag_basis(m: usize, d: usize) -> Vec<RVec> {
    (0..d)
        .map(|j| {
            let mut v = RVec::zero(m * d);
            for i in 0..m {
                v.set(i * d + j, Rat::one());
            }
            v
        })
        .collect()
}

fn abs_interval_instance() -> MonotropicInstance {
    MonotropicInstance::new(
        vec![
            Block {
                dim: 1,
                f: ConvexFn::abs(),
            },
            Block {
                dim: 1,
                f: ConvexFn::indicator(&Polyhedron::cube(1, 1, 2)).unwrap(),
            },
        ],
        Coupling::Subspace {
            basis: diag_basis(2, 1),
        },
    )
    .unwrap()
}

fn example_pair_instance() -> MonotropicInstance {
    MonotropicInstance::new(
        vec![
            Block {
                dim: 2,
                f: ConvexFn::Analytic(AnalyticFn::ParabolaIndicator),
            },
            Block {
                dim: 2,
                f: ConvexFn::Analytic(AnalyticFn::HalfplaneIndicator),
            },
        ],
        Coupling::Subspace {
            basis: diag_basis(2, 2),
        },
    )
    .unwrap()
}

/// Textbook transpose dual of `min c'z s.t. Az <= b, Ez = d`:
/// `max -b'λ - d'μ  s.t.  A'λ + E'μ = -c, λ >= 0`. An independent
/// formulation path for strong-duality cross-checks.
fn transpose_dual_value(p: &LpProblem) -> Option<Rat> {
    assert_eq!(p.sense, Sense::Minimize);
    let n = p.dim();
    let k = p.ineqs.len();
    let l = p.eqs.len();
    let vars = k + l;
    let mut objective = RVec::zero(vars);
    for (i, (_, b)) in p.ineqs.iter().enumerate() {
        objective.set(i, -b);
    }
    for (j, (_, d)) in p.eqs.iter().enumerate() {
        objective.set(k + j, -d);
    }
    let mut dual = LpProblem {
        objective,
        ineqs: vec![],
        eqs: vec![],
        sense: Sense::Maximize,
    };
    for col in 0..n {
        let mut row = RVec::zero(vars);
        for (i, (a, _)) in p.ineqs.iter().enumerate() {
            row.set(i, a.get(col).clone());
        }
        for (j, (e, _)) in p.eqs.iter().enumerate() {
            row.set(k + j, e.get(col).clone());
        }
        dual.eqs.push((row, -p.objective.get(col)));
    }
    for i in 0..k {
        dual.ineqs.push((RVec::unit(vars, i).neg(), Rat::zero()));
    }
    match lp_solve(&dual).unwrap() {
        LpOutcome::Optimal { value, .. } => Some(value),
        _ => None,
    }
}

/// Rebuild the primal LP of a diagonal all-polyhedral instance (shared
/// variable x, one height per block) without going through solve_primal.
fn diagonal_primal_lp(inst: &MonotropicInstance) -> LpProblem {
    let d = inst.blocks[0].dim;
    let m = inst.blocks.len();
    let n = d + m;
    let mut objective = RVec::zero(n);
    for i in 0..m {
        objective.set(d + i, Rat::one());
    }
    let mut p = LpProblem {
        objective,
        ineqs: vec![],
        eqs: vec![],
        sense: Sense::Minimize,
    };
    for (i, b) in inst.blocks.iter().enumerate() {
        let f = b.f.as_polyhedral().unwrap();
        for (a, rhs) in &f.epigraph().hrep().ineqs {
            let mut row = RVec::zero(n);
            for j in 0..d {
                row.set(j, a.get(j).clone());
            }
            row.set(d + i, a.get(d).clone());
            p.ineqs.push((row, rhs.clone()));
        }
        for (e, rhs) in &f.epigraph().hrep().eqs {
            let mut row = RVec::zero(n);
            for j in 0..d {
                row.set(j, e.get(j).clone());
            }
            row.set(d + i, e.get(d).clone());
            p.eqs.push((row, rhs.clone()));
        }
    }
    p
}

#[test]
fn abs_interval_duality_pins() {
    let inst = abs_interval_instance();
    let p = solve_primal(&inst).unwrap();
    let d = solve_dual(&inst).unwrap();
    assert_eq!(p.value, ExtReal::Finite(rint(1)));
    assert_eq!(d.value, ExtReal::Finite(rint(1)));
    assert!(p.attained && d.attained);
    assert_eq!(p.witness.unwrap(), RVec::from_ints(&[1, 1]));
    // Dual witness: y* = (1, -1) in S^⊥ with -f1*(1) - f2*(-1) = 1.
    let w = d.witness.unwrap();
    assert_eq!(w, RVec::from_ints(&[1, -1]));
}

#[test]
fn strong_duality_against_transpose_oracle() {
    let mut rng = corpus::rng_from_seed(57);
    let mut checked = 0;
    for _ in 0..12 {
        let inst = corpus::random_diagonal_instance(&mut rng, 2, 3, 5);
        let report = gap_report(&inst).unwrap();
        if !report.primal.value.is_finite() {
            continue;
        }
        assert!(report.zero_gap(), "polyhedral strong duality");
        // Independent route: transpose dual of the raw primal LP.
        let lp = diagonal_primal_lp(&inst);
        let oracle = transpose_dual_value(&lp).expect("bounded feasible LP");
        assert_eq!(ExtReal::Finite(oracle), report.primal.value);
        checked += 1;
    }
    assert!(checked >= 8);
}

#[test]
fn weak_duality_everywhere() {
    let mut rng = corpus::rng_from_seed(61);
    for _ in 0..15 {
        let inst = corpus::random_diagonal_instance(&mut rng, 3, 3, 6);
        let p = solve_primal(&inst).unwrap();
        let d = solve_dual(&inst).unwrap();
        assert!(d.value <= p.value, "weak duality violated");
    }
    let inst = example_pair_instance();
    let p = solve_primal(&inst).unwrap();
    let d = solve_dual(&inst).unwrap();
    assert!(d.value <= p.value);
}

#[test]
fn dual_route_consistency() {
    // solve_dual == -(f_1* □ ... □ f_m*)(0) on diagonal instances.
    let mut rng = corpus::rng_from_seed(67);
    for _ in 0..10 {
        let inst = corpus::random_diagonal_instance(&mut rng, 2, 3, 5);
        let d = solve_dual(&inst).unwrap();
        let fs: Vec<ConvexFn> = inst.blocks.iter().map(|b| b.f.clone()).collect();
        let ic = inf_conv_value(&conjugates(&fs), &RVec::zero(inst.blocks[0].dim)).unwrap();
        assert_eq!(d.value, ic.value.neg(), "dual route mismatch");
    }
    let inst = example_pair_instance();
    let d = solve_dual(&inst).unwrap();
    let fs: Vec<ConvexFn> = inst.blocks.iter().map(|b| b.f.clone()).collect();
    let ic = inf_conv_value(&conjugates(&fs), &RVec::zero(2)).unwrap();
    assert_eq!(d.value, ic.value.neg());
    assert!(ic.attained, "the origin split is exact for this pair");
}

#[test]
fn example33_counterexample_pin() {
    // One instance, four simultaneous flags: Bertsekas holds, the closed
    // epigraph condition fails, the duality gap is zero, and the dual
    // inf-convolution is not exact at (1,1).
    let inst = example_pair_instance();
    let report = gap_report(&inst).unwrap();
    assert_eq!(report.cq["bertsekas"].verdict, Verdict::Holds);
    assert_eq!(report.cq["closed_epigraph"].verdict, Verdict::Fails);
    assert!(report.zero_gap());
    let fs: Vec<ConvexFn> = inst.blocks.iter().map(|b| b.f.clone()).collect();
    let at11 = inf_conv_value(&conjugates(&fs), &RVec::from_ints(&[1, 1])).unwrap();
    assert_eq!(at11.value, ExtReal::Finite(rint(0)));
    assert!(!at11.attained);
}

#[test]
fn implication_chain_on_corpus() {
    // Interiority => Bertsekas at sampled feasible points; all-polyhedral
    // => closed epigraph, condition (ii) and exactness.
    let mut rng = corpus::rng_from_seed(71);
    let mut interior_hits = 0;
    for _ in 0..10 {
        let inst = corpus::random_diagonal_instance(&mut rng, 2, 2, 5);
        let report = gap_report(&inst).unwrap();
        assert_eq!(report.cq["closed_epigraph"].verdict, Verdict::Holds);
        assert_eq!(report.cq["condition_ii"].verdict, Verdict::Holds);
        assert_eq!(report.cq["exactness"].verdict, Verdict::Holds);
        if report.cq["interiority"].verdict == Verdict::Holds {
            interior_hits += 1;
            let pts = sample_feasible_points(&inst, 5).unwrap();
            assert!(!pts.is_empty());
            for x in &pts {
                for eps in [rat(1, 2), rint(1)] {
                    let (ok, _) = bertsekas_cq_check(&inst, x, &eps).unwrap();
                    assert!(ok, "interiority must imply the Bertsekas CQ");
                }
            }
        }
    }
    assert!(interior_hits >= 1, "corpus should hit interior instances");
}

#[test]
fn cone_coupled_instance_with_orthant() {
    // min |x1| + |x2| over the nonnegative orthant: p = d = 0.
    let orthant = Polyhedron::from_hrep(
        dualgap_core::HRep::new(
            2,
            vec![
                (RVec::from_ints(&[-1, 0]), Rat::zero()),
                (RVec::from_ints(&[0, -1]), Rat::zero()),
            ],
            vec![],
        )
        .unwrap(),
    );
    let inst = MonotropicInstance::new(
        vec![
            Block {
                dim: 1,
                f: ConvexFn::abs(),
            },
            Block {
                dim: 1,
                f: ConvexFn::abs(),
            },
        ],
        Coupling::PolyCone { cone: orthant },
    )
    .unwrap();
    let p = solve_primal(&inst).unwrap();
    let d = solve_dual(&inst).unwrap();
    assert_eq!(p.value, ExtReal::Finite(rint(0)));
    assert_eq!(d.value, ExtReal::Finite(rint(0)));
    // The dual coupling is the dual cone: the orthant again.
    let dual = build_dual(&inst).unwrap();
    let Coupling::PolyCone { cone } = &dual.coupling else {
        panic!("expected cone");
    };
    assert!(cone
        .equals(&inst.coupling_set().unwrap())
        .unwrap());
}

#[test]
fn interiority_rejects_mixed_unsupported() {
    let err = interiority_check(&[
        ConvexFn::Analytic(AnalyticFn::ParabolaIndicator),
        ConvexFn::abs(),
    ]);
    assert!(matches!(err, Err(Error::UnsupportedCombination(_))));
}

#[test]
fn gap_report_structure_is_complete() {
    let report = gap_report(&abs_interval_instance()).unwrap();
    for key in [
        "bertsekas",
        "closed_epigraph",
        "condition_ii",
        "exactness",
        "interiority",
        "sum_rule",
        "transversality",
    ] {
        assert!(report.cq.contains_key(key), "missing diagnostic {key}");
        let check = &report.cq[key];
        if check.verdict != Verdict::Holds {
            continue;
        }
        assert!(
            check.witness.is_some(),
            "verdicts must carry witnesses or certificates ({key})"
        );
    }
}
