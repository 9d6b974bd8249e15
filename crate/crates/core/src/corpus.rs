//! Seeded generators for the verification corpus: random small polyhedral
//! functions, random polytopes for support functions, and diagonal
//! monotropic instances. Everything is driven by a ChaCha stream so equal
//! seeds give byte-equal corpora.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;


use crate::convex::{ConvexFn, PolyhedralFn};
use crate::duality::{Block, Coupling, MonotropicInstance};
use crate::polyhedron::{Polyhedron, VRep};
use crate::rat::{rint, RVec, Rat};

pub type CorpusRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_int(rng: &mut CorpusRng, lo: i64, hi: i64) -> i64 {
    rng.gen_range(lo..=hi)
}

/// Random proper polyhedral function on `R^dim` with at most
/// `max_facets` epigraph rows: a max of affine pieces, optionally
/// restricted to a box domain that always contains the origin.
pub fn random_polyhedral_fn(rng: &mut CorpusRng, dim: usize, max_facets: usize) -> ConvexFn {
    let budget = max_facets.max(2);
    let restrict = rng.gen_bool(0.5);
    let dom_rows = if restrict { 2.min(budget - 1) } else { 0 };
    let n_pieces = small_int(rng, 1, (budget - dom_rows) as i64) as usize;
    let mut pieces = Vec::with_capacity(n_pieces);
    for _ in 0..n_pieces {
        let coeffs: Vec<Rat> = (0..dim).map(|_| rint(small_int(rng, -3, 3))).collect();
        // Nonpositive offsets keep f(0) <= 0 without affecting properness.
        let offset = rint(small_int(rng, -2, 0));
        pieces.push((RVec::new(coeffs), offset));
    }
    let f = PolyhedralFn::max_affine(dim, &pieces).expect("pieces are nonempty");
    if dom_rows == 0 {
        return ConvexFn::Polyhedral(f);
    }
    // Box rows through the origin: -b_lo <= x_j <= b_hi with b_* >= 0,
    // on a couple of random coordinates.
    let mut ineqs = Vec::new();
    for _ in 0..dom_rows {
        let j = small_int(rng, 0, dim as i64 - 1) as usize;
        let hi = rint(small_int(rng, 0, 3));
        if rng.gen_bool(0.5) {
            ineqs.push((RVec::unit(dim, j), hi));
        } else {
            ineqs.push((RVec::unit(dim, j).neg(), hi));
        }
    }
    let dom = Polyhedron::from_hrep(
        crate::polyhedron::HRep::new(dim, ineqs, vec![]).expect("rows share the dimension"),
    );
    ConvexFn::Polyhedral(f.restrict(&dom).expect("origin stays feasible"))
}

/// A family `f_1, ..., f_m` on a shared space, all finite at the origin.
pub fn random_fn_family(
    rng: &mut CorpusRng,
    max_dim: usize,
    max_m: usize,
    max_facets: usize,
) -> (usize, Vec<ConvexFn>) {
    let dim = small_int(rng, 1, max_dim as i64) as usize;
    let m = small_int(rng, 1, max_m as i64) as usize;
    let fs = (0..m)
        .map(|_| random_polyhedral_fn(rng, dim, max_facets))
        .collect();
    (dim, fs)
}

/// Random bounded polytope: convex hull of a few integer points.
pub fn random_polytope(rng: &mut CorpusRng, dim: usize, max_vertices: usize) -> Polyhedron {
    let n = small_int(rng, 1, max_vertices as i64) as usize;
    let vertices: Vec<RVec> = (0..n)
        .map(|_| {
            RVec::new(
                (0..dim)
                    .map(|_| rint(small_int(rng, -3, 3)))
                    .collect(),
            )
        })
        .collect();
    Polyhedron::from_vrep(VRep {
        dim,
        vertices,
        rays: vec![],
    })
}

/// Support function of a random polytope, paired with the polytope it
/// supports (which equals its subdifferential at the origin).
pub fn random_support_fn(rng: &mut CorpusRng, dim: usize) -> (ConvexFn, Polyhedron) {
    let p = random_polytope(rng, dim, 5);
    let f = PolyhedralFn::support_of_polytope(&p).expect("polytope is nonempty and bounded");
    (ConvexFn::Polyhedral(f), p)
}

/// Diagonal monotropic instance over a random family. The first block is
/// restricted to a box, which keeps the primal bounded; the origin is
/// always feasible.
pub fn random_diagonal_instance(
    rng: &mut CorpusRng,
    max_dim: usize,
    max_m: usize,
    max_facets: usize,
) -> MonotropicInstance {
    let (dim, mut fs) = random_fn_family(rng, max_dim, max_m.max(2), max_facets);
    if fs.len() < 2 {
        fs.push(random_polyhedral_fn(rng, dim, max_facets));
    }
    let bound = small_int(rng, 1, 3);
    let boxed = fs[0]
        .as_polyhedral()
        .expect("corpus functions are polyhedral")
        .restrict(&Polyhedron::cube(dim, -bound, bound))
        .expect("origin stays feasible");
    fs[0] = ConvexFn::Polyhedral(boxed);
    let m = fs.len();
    let basis: Vec<RVec> = (0..dim)
        .map(|j| {
            let mut v = RVec::zero(m * dim);
            for i in 0..m {
                v.set(i * dim + j, num_traits::One::one());
            }
            v
        })
        .collect();
    let blocks = fs
        .into_iter()
        .map(|f| Block { dim, f })
        .collect();
    MonotropicInstance::new(blocks, Coupling::Subspace { basis })
        .expect("diagonal polyhedral instances always validate")
}

/// Deterministic primal sample points inside the shared domain: the origin
/// plus lexicographically-first domain vertices.
pub fn sample_domain_points(fs: &[ConvexFn], max_n: usize) -> Vec<RVec> {
    let dim = fs.first().map_or(0, |f| f.dim());
    let mut pts = vec![RVec::zero(dim)];
    let doms: Option<Vec<Polyhedron>> = fs.iter().map(|f| f.dom_polyhedron()).collect();
    if let Some(doms) = doms {
        let mut acc = match doms.first() {
            Some(d) => d.clone(),
            None => return pts,
        };
        for d in &doms[1..] {
            acc = match acc.intersect(d) {
                Ok(p) => p,
                Err(_) => return pts,
            };
        }
        let mut vs = acc.vrep().vertices.clone();
        vs.sort();
        for v in vs {
            if !pts.contains(&v) {
                pts.push(v);
            }
            if pts.len() >= max_n {
                break;
            }
        }
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extreal::ExtReal;
    use num_traits::Zero;

    #[test]
    fn generators_are_deterministic() {
        let mk = || {
            let mut rng = rng_from_seed(7);
            let (_, fs) = random_fn_family(&mut rng, 3, 3, 6);
            fs.iter()
                .map(|f| format!("{:?}", f.dom_polyhedron().map(|p| p.canonical().hrep().clone())))
                .collect::<Vec<_>>()
        };
        assert_eq!(mk(), mk());
    }

    #[test]
    fn family_members_are_finite_at_origin() {
        let mut rng = rng_from_seed(3);
        for _ in 0..20 {
            let (dim, fs) = random_fn_family(&mut rng, 3, 3, 6);
            for f in &fs {
                assert!(f.evaluate(&RVec::zero(dim)).unwrap().is_finite());
            }
        }
    }

    #[test]
    fn diagonal_instances_are_feasible_and_bounded() {
        let mut rng = rng_from_seed(11);
        for _ in 0..10 {
            let inst = random_diagonal_instance(&mut rng, 2, 3, 5);
            assert!(inst.is_feasible());
            let p = crate::duality::solve_primal(&inst).unwrap();
            assert!(matches!(p.value, ExtReal::Finite(_)));
        }
    }

    #[test]
    fn support_fn_matches_polytope_at_origin() {
        let mut rng = rng_from_seed(5);
        let (f, p) = random_support_fn(&mut rng, 2);
        assert_eq!(
            f.evaluate(&RVec::zero(2)).unwrap(),
            ExtReal::Finite(Rat::zero())
        );
        // f* = ι_P.
        let conj = f.conjugate().as_polyhedral().unwrap();
        let expect = PolyhedralFn::indicator(&p).unwrap();
        assert!(conj.epigraph().equals(expect.epigraph()).unwrap());
    }
}
