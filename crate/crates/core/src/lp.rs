//! Exact rational linear programming.
//!
//! Two-phase primal simplex over `Rat` with Bland's anti-cycling rule, so
//! every solve terminates and identical inputs give identical outcomes.
//! Variables are free; internally each coordinate is split into a
//! nonnegative pair. Among multiple optima, [`lp_solve`] returns the
//! lexicographically smallest optimal basic solution of that split
//! standard form (coordinates refined in index order), which pins a
//! canonical witness for reports. [`lp_solve_any`] skips the refinement
//! and is the cheap path for feasibility and membership queries.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{RVec, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

/// `min/max <objective, x>` subject to `<a_i, x> <= b_i` and `<e_j, x> = d_j`.
#[derive(Clone, Debug)]
pub struct LpProblem {
    pub objective: RVec,
    pub ineqs: Vec<(RVec, Rat)>,
    pub eqs: Vec<(RVec, Rat)>,
    pub sense: Sense,
}

impl LpProblem {
    pub fn minimize(objective: RVec) -> Self {
        LpProblem {
            objective,
            ineqs: vec![],
            eqs: vec![],
            sense: Sense::Minimize,
        }
    }

    pub fn maximize(objective: RVec) -> Self {
        LpProblem {
            objective,
            ineqs: vec![],
            eqs: vec![],
            sense: Sense::Maximize,
        }
    }

    pub fn le(mut self, a: RVec, b: Rat) -> Self {
        self.ineqs.push((a, b));
        self
    }

    pub fn eq(mut self, e: RVec, d: Rat) -> Self {
        self.eqs.push((e, d));
        self
    }

    pub fn dim(&self) -> usize {
        self.objective.dim()
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        if d == 0 {
            return Err(Error::EmptyDimension);
        }
        for (a, _) in self.ineqs.iter().chain(self.eqs.iter()) {
            if a.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: a.dim(),
                });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { point: RVec, value: Rat },
    Infeasible,
    Unbounded { ray: RVec },
}

/// Solve with canonical (lexicographically refined) optimal point.
pub fn lp_solve(p: &LpProblem) -> Result<LpOutcome> {
    solve_inner(p, true)
}

/// Solve returning the first optimal basic solution Bland's rule reaches.
pub fn lp_solve_any(p: &LpProblem) -> Result<LpOutcome> {
    solve_inner(p, false)
}

fn solve_inner(p: &LpProblem, refine: bool) -> Result<LpOutcome> {
    p.validate()?;
    let std = StandardForm::build(p);
    let out = std.solve();
    Ok(match out {
        StdOutcome::Infeasible => LpOutcome::Infeasible,
        StdOutcome::Unbounded { ray_w } => LpOutcome::Unbounded {
            ray: std.to_x(&ray_w),
        },
        StdOutcome::Optimal { w, value } => {
            let signed = match p.sense {
                Sense::Minimize => value,
                Sense::Maximize => -value,
            };
            let w = if refine { std.lex_refine(&w) } else { w };
            LpOutcome::Optimal {
                point: std.to_x(&w),
                value: signed,
            }
        }
    })
}

/// `min c·w  s.t.  A w = b, w >= 0` with `w` the split/slack variables.
struct StandardForm {
    dim: usize,
    n: usize,
    rows: Vec<(Vec<Rat>, Rat)>,
    cost: Vec<Rat>,
    /// Rows were sign-normalized so that b >= 0; true when the original
    /// problem had no equalities and needed no normalization, in which
    /// case the slack basis is immediately feasible.
    slack_basis_ok: bool,
}

enum StdOutcome {
    Optimal { w: Vec<Rat>, value: Rat },
    Infeasible,
    Unbounded { ray_w: Vec<Rat> },
}

impl StandardForm {
    fn build(p: &LpProblem) -> Self {
        let d = p.dim();
        let k = p.ineqs.len();
        let n = 2 * d + k;
        let mut rows = Vec::with_capacity(k + p.eqs.len());
        let mut slack_basis_ok = p.eqs.is_empty();
        for (i, (a, b)) in p.ineqs.iter().enumerate() {
            let mut row = vec![Rat::zero(); n];
            for j in 0..d {
                row[2 * j] = a.get(j).clone();
                row[2 * j + 1] = -a.get(j);
            }
            row[2 * d + i] = Rat::one();
            let mut rhs = b.clone();
            if rhs.is_negative() {
                for c in row.iter_mut() {
                    *c = -&*c;
                }
                rhs = -rhs;
                slack_basis_ok = false;
            }
            rows.push((row, rhs));
        }
        for (e, dd) in &p.eqs {
            let mut row = vec![Rat::zero(); n];
            for j in 0..d {
                row[2 * j] = e.get(j).clone();
                row[2 * j + 1] = -e.get(j);
            }
            let mut rhs = dd.clone();
            if rhs.is_negative() {
                for c in row.iter_mut() {
                    *c = -&*c;
                }
                rhs = -rhs;
            }
            rows.push((row, rhs));
        }
        let mut cost = vec![Rat::zero(); n];
        for j in 0..d {
            let c = match p.sense {
                Sense::Minimize => p.objective.get(j).clone(),
                Sense::Maximize => -p.objective.get(j),
            };
            cost[2 * j] = c.clone();
            cost[2 * j + 1] = -c;
        }
        StandardForm {
            dim: d,
            n,
            rows,
            cost,
            slack_basis_ok,
        }
    }

    fn to_x(&self, w: &[Rat]) -> RVec {
        RVec::new(
            (0..self.dim)
                .map(|j| &w[2 * j] - &w[2 * j + 1])
                .collect(),
        )
    }

    fn solve(&self) -> StdOutcome {
        solve_standard(self.n, &self.rows, &self.cost, self.slack_basis_ok)
    }

    /// Sequentially minimize the split coordinates over the optimal face.
    /// Every stage is bounded below by zero, so it always attains; the
    /// result is the unique lex-least optimal basic solution.
    fn lex_refine(&self, w0: &[Rat]) -> Vec<Rat> {
        let value: Rat = self
            .cost
            .iter()
            .zip(w0.iter())
            .map(|(c, w)| c * w)
            .sum();
        let mut rows = self.rows.clone();
        // Pin the optimal value (sign-normalized for the phase-1 start).
        rows.push(normalize_row(self.cost.clone(), value));
        let mut w = w0.to_vec();
        for k in 0..2 * self.dim {
            let mut cost = vec![Rat::zero(); self.n];
            cost[k] = Rat::one();
            match solve_standard(self.n, &rows, &cost, false) {
                StdOutcome::Optimal { w: wk, value: tk } => {
                    let mut pin = vec![Rat::zero(); self.n];
                    pin[k] = Rat::one();
                    rows.push(normalize_row(pin, tk));
                    w = wk;
                }
                // The stage is feasible (w0 satisfies it) and bounded by
                // w_k >= 0, so this is unreachable.
                _ => unreachable!("lex refinement stage must have an optimum"),
            }
        }
        w
    }
}

fn normalize_row(mut row: Vec<Rat>, mut rhs: Rat) -> (Vec<Rat>, Rat) {
    if rhs.is_negative() {
        for c in row.iter_mut() {
            *c = -&*c;
        }
        rhs = -rhs;
    }
    (row, rhs)
}

/// Dense simplex tableau. `a` holds the constraint body, `basis[i]` the
/// basic column of row `i`.
struct Tableau {
    n: usize,
    a: Vec<Vec<Rat>>,
    b: Vec<Rat>,
    basis: Vec<usize>,
}

enum PhaseEnd {
    Optimal,
    Unbounded { col: usize },
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = Rat::one() / self.a[row][col].clone();
        for v in self.a[row].iter_mut() {
            *v = &*v * &inv;
        }
        self.b[row] = &self.b[row] * &inv;
        for r in 0..self.a.len() {
            if r == row || self.a[r][col].is_zero() {
                continue;
            }
            let f = self.a[r][col].clone();
            for c in 0..self.n {
                let delta = &f * &self.a[row][c];
                self.a[r][c] = &self.a[r][c] - &delta;
            }
            let delta = &f * &self.b[row];
            self.b[r] = &self.b[r] - &delta;
        }
        self.basis[row] = col;
    }

    /// Reduced cost vector for the current basis.
    fn reduced_costs(&self, cost: &[Rat]) -> Vec<Rat> {
        let mut r = cost.to_vec();
        for (i, &bi) in self.basis.iter().enumerate() {
            if cost[bi].is_zero() {
                continue;
            }
            let cb = cost[bi].clone();
            for j in 0..self.n {
                let delta = &cb * &self.a[i][j];
                r[j] = &r[j] - &delta;
            }
        }
        r
    }

    /// Bland's rule: lowest-index entering column with negative reduced
    /// cost; leaving row by minimum ratio, ties broken by lowest basic
    /// variable index.
    fn run(&mut self, cost: &[Rat]) -> PhaseEnd {
        loop {
            let reduced = self.reduced_costs(cost);
            let Some(col) = (0..self.n).find(|&j| reduced[j].is_negative()) else {
                return PhaseEnd::Optimal;
            };
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.a.len() {
                if !self.a[i][col].is_positive() {
                    continue;
                }
                let ratio = &self.b[i] / &self.a[i][col];
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br || (ratio == br && self.basis[i] < self.basis[bi]) {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
            match leave {
                Some((row, _)) => self.pivot(row, col),
                None => return PhaseEnd::Unbounded { col },
            }
        }
    }

    fn solution(&self) -> Vec<Rat> {
        let mut w = vec![Rat::zero(); self.n];
        for (i, &bi) in self.basis.iter().enumerate() {
            w[bi] = self.b[i].clone();
        }
        w
    }
}

fn solve_standard(
    n: usize,
    rows: &[(Vec<Rat>, Rat)],
    cost: &[Rat],
    slack_basis_ok: bool,
) -> StdOutcome {
    let m = rows.len();
    if m == 0 {
        // Unconstrained: w = 0 is optimal unless some cost is negative,
        // in which case that coordinate alone is an improving ray.
        return match (0..n).find(|&j| cost[j].is_negative()) {
            Some(j) => {
                let mut ray = vec![Rat::zero(); n];
                ray[j] = Rat::one();
                StdOutcome::Unbounded { ray_w: ray }
            }
            None => StdOutcome::Optimal {
                w: vec![Rat::zero(); n],
                value: Rat::zero(),
            },
        };
    }

    let mut t = if slack_basis_ok {
        // Slack columns already form a feasible identity basis.
        let basis: Vec<usize> = (0..m).map(|i| n - m + i).collect();
        Tableau {
            n,
            a: rows.iter().map(|(r, _)| r.clone()).collect(),
            b: rows.iter().map(|(_, b)| b.clone()).collect(),
            basis,
        }
    } else {
        // Phase 1: artificial identity basis, minimize artificial mass.
        let mut a: Vec<Vec<Rat>> = Vec::with_capacity(m);
        for (i, (row, _)) in rows.iter().enumerate() {
            let mut r = row.clone();
            r.extend((0..m).map(|j| {
                if j == i {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            }));
            a.push(r);
        }
        let mut t = Tableau {
            n: n + m,
            a,
            b: rows.iter().map(|(_, b)| b.clone()).collect(),
            basis: (n..n + m).collect(),
        };
        let mut phase1 = vec![Rat::zero(); n + m];
        for c in phase1.iter_mut().skip(n) {
            *c = Rat::one();
        }
        match t.run(&phase1) {
            PhaseEnd::Unbounded { .. } => unreachable!("phase 1 is bounded below by 0"),
            PhaseEnd::Optimal => {}
        }
        let w = t.solution();
        let mass: Rat = w[n..].iter().sum();
        if !mass.is_zero() {
            return StdOutcome::Infeasible;
        }
        // Pivot artificials out of the basis; rows that cannot release
        // one are redundant and get dropped.
        let mut drop_rows = Vec::new();
        for i in 0..t.basis.len() {
            if t.basis[i] < n {
                continue;
            }
            match (0..n).find(|&j| !t.a[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => drop_rows.push(i),
            }
        }
        for &i in drop_rows.iter().rev() {
            t.a.remove(i);
            t.b.remove(i);
            t.basis.remove(i);
        }
        for row in t.a.iter_mut() {
            row.truncate(n);
        }
        t.n = n;
        t
    };

    match t.run(cost) {
        PhaseEnd::Optimal => {
            let w = t.solution();
            let value = cost.iter().zip(w.iter()).map(|(c, w)| c * w).sum();
            StdOutcome::Optimal { w, value }
        }
        PhaseEnd::Unbounded { col } => {
            let mut ray = vec![Rat::zero(); t.n];
            ray[col] = Rat::one();
            for (i, &bi) in t.basis.iter().enumerate() {
                if !t.a[i][col].is_zero() {
                    ray[bi] = -&t.a[i][col];
                }
            }
            StdOutcome::Unbounded { ray_w: ray }
        }
    }
}

/// Is the system `<a_i,x> <= b_i`, `<e_j,x> = d_j` satisfiable?
pub fn feasible(dim: usize, ineqs: &[(RVec, Rat)], eqs: &[(RVec, Rat)]) -> Result<bool> {
    let p = LpProblem {
        objective: RVec::zero(dim),
        ineqs: ineqs.to_vec(),
        eqs: eqs.to_vec(),
        sense: Sense::Minimize,
    };
    Ok(!matches!(lp_solve_any(&p)?, LpOutcome::Infeasible))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    #[test]
    fn one_constraint_lp() {
        // min x s.t. x >= 3  (written -x <= -3)
        let p = LpProblem::minimize(RVec::from_ints(&[1]))
            .le(RVec::from_ints(&[-1]), rint(-3));
        assert_eq!(
            lp_solve(&p).unwrap(),
            LpOutcome::Optimal {
                point: RVec::from_ints(&[3]),
                value: rint(3)
            }
        );
    }

    #[test]
    fn empty_feasible_set() {
        let p = LpProblem::minimize(RVec::from_ints(&[0]))
            .le(RVec::from_ints(&[1]), rint(-1))
            .le(RVec::from_ints(&[-1]), rint(-1));
        assert_eq!(lp_solve(&p).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_reports_improving_ray() {
        let p = LpProblem::minimize(RVec::from_ints(&[1]))
            .le(RVec::from_ints(&[1]), rint(0));
        match lp_solve(&p).unwrap() {
            LpOutcome::Unbounded { ray } => {
                assert!(ray.get(0).is_negative());
            }
            other => panic!("expected unbounded, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_optimum_is_lex_least() {
        // min 0 over the square [1,2]^2: every point optimal; the
        // canonical answer is the lex-least vertex (1,1).
        let p = LpProblem::minimize(RVec::from_ints(&[0, 0]))
            .le(RVec::from_ints(&[1, 0]), rint(2))
            .le(RVec::from_ints(&[-1, 0]), rint(-1))
            .le(RVec::from_ints(&[0, 1]), rint(2))
            .le(RVec::from_ints(&[0, -1]), rint(-1));
        assert_eq!(
            lp_solve(&p).unwrap(),
            LpOutcome::Optimal {
                point: RVec::from_ints(&[1, 1]),
                value: rint(0)
            }
        );
    }

    #[test]
    fn mixed_sense_and_fraction() {
        // max x + y s.t. x + 2y <= 1, x <= 1/2, y >= 0, x >= 0
        let p = LpProblem::maximize(RVec::from_ints(&[1, 1]))
            .le(RVec::from_ints(&[1, 2]), rint(1))
            .le(RVec::from_ints(&[1, 0]), rat(1, 2))
            .le(RVec::from_ints(&[-1, 0]), rint(0))
            .le(RVec::from_ints(&[0, -1]), rint(0));
        match lp_solve(&p).unwrap() {
            LpOutcome::Optimal { point, value } => {
                assert_eq!(value, rat(3, 4));
                assert_eq!(point, RVec::new(vec![rat(1, 2), rat(1, 4)]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn equality_constraints() {
        // min x1 s.t. x1 + x2 = 1, x2 <= 0  ->  x = (1, 0)? No: x1 = 1 - x2,
        // x2 <= 0 so x1 >= 1, minimized at x2 = 0 giving value 1.
        let p = LpProblem::minimize(RVec::from_ints(&[1, 0]))
            .eq(RVec::from_ints(&[1, 1]), rint(1))
            .le(RVec::from_ints(&[0, 1]), rint(0));
        assert_eq!(
            lp_solve(&p).unwrap(),
            LpOutcome::Optimal {
                point: RVec::from_ints(&[1, 0]),
                value: rint(1)
            }
        );
    }
}
