//! Extended real line `]-inf, +inf]` plus a bottom element for diagnostics.

use std::cmp::Ordering;
use std::fmt;

use crate::rat::Rat;

/// Exact extended real. Proper convex functions take values in
/// `Finite | PlusInf`; `MinusInf` shows up only in diagnostics (unbounded
/// infima, dual values of infeasible programs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtReal {
    MinusInf,
    Finite(Rat),
    PlusInf,
}

impl ExtReal {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtReal::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    /// Extended addition. `Finite + PlusInf = PlusInf`; the indeterminate
    /// `PlusInf + MinusInf` never arises for proper functions and panics.
    pub fn add(&self, other: &ExtReal) -> ExtReal {
        use ExtReal::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a + b),
            (PlusInf, MinusInf) | (MinusInf, PlusInf) => {
                panic!("indeterminate +inf + -inf")
            }
            (PlusInf, _) | (_, PlusInf) => PlusInf,
            (MinusInf, _) | (_, MinusInf) => MinusInf,
        }
    }

    pub fn neg(&self) -> ExtReal {
        match self {
            ExtReal::Finite(r) => ExtReal::Finite(-r),
            ExtReal::PlusInf => ExtReal::MinusInf,
            ExtReal::MinusInf => ExtReal::PlusInf,
        }
    }

    /// Duality gap `p - d` under weak duality `d <= p`: equal extended
    /// values (including equal infinities) give a zero gap.
    pub fn gap_from(primal: &ExtReal, dual: &ExtReal) -> ExtReal {
        if primal == dual {
            return ExtReal::Finite(num_traits::Zero::zero());
        }
        primal.add(&dual.neg())
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtReal::*;
        match (self, other) {
            (MinusInf, MinusInf) | (PlusInf, PlusInf) => Ordering::Equal,
            (MinusInf, _) | (_, PlusInf) => Ordering::Less,
            (_, MinusInf) | (PlusInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(r) => write!(f, "{r}"),
            ExtReal::PlusInf => write!(f, "+inf"),
            ExtReal::MinusInf => write!(f, "-inf"),
        }
    }
}

impl From<Rat> for ExtReal {
    fn from(r: Rat) -> Self {
        ExtReal::Finite(r)
    }
}
