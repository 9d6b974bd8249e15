//! Exact rational scalars and vectors.
//!
//! Every quantity in this crate is a `Rat` (arbitrary-precision rational,
//! always in lowest terms with positive denominator) or an `RVec` of them.
//! There is no floating point anywhere: set membership, closedness and
//! attainment questions are decided exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational scalar. `num_rational` keeps the canonical form
/// (reduced, denominator > 0) on every operation.
pub type Rat = num_rational::BigRational;

/// Rational from an integer pair. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rint(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Parse a rational written as `p` or `p/q`. Decimal and scientific
/// notation are rejected: exactness is the whole point.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let t = s.trim();
    if t.contains(['.', 'e', 'E']) {
        return Err(Error::BadRational(format!(
            "`{t}`: decimals are not exact; write p/q"
        )));
    }
    Rat::from_str(t).map_err(|_| Error::BadRational(format!("`{t}` is not a rational p/q")))
}

/// Canonical display form: `p` when integral, otherwise `p/q`.
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

/// Fixed-dimension vector of rationals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RVec(Vec<Rat>);

impl RVec {
    pub fn new(coords: Vec<Rat>) -> Self {
        RVec(coords)
    }

    pub fn zero(dim: usize) -> Self {
        RVec(vec![Rat::zero(); dim])
    }

    /// Standard basis vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rat::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RVec(coords.iter().map(|&c| rint(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Rat {
        &self.0[i]
    }

    pub fn set(&mut self, i: usize, v: Rat) {
        self.0[i] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &RVec) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &RVec) -> RVec {
        debug_assert_eq!(self.dim(), other.dim());
        RVec(self
            .0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a + b)
            .collect())
    }

    pub fn sub(&self, other: &RVec) -> RVec {
        debug_assert_eq!(self.dim(), other.dim());
        RVec(self
            .0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a - b)
            .collect())
    }

    pub fn neg(&self) -> RVec {
        RVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &Rat) -> RVec {
        RVec(self.0.iter().map(|a| a * s).collect())
    }

    /// Concatenation, used to assemble product-space points.
    pub fn concat(&self, other: &RVec) -> RVec {
        let mut c = self.0.clone();
        c.extend_from_slice(&other.0);
        RVec(c)
    }

    /// Coordinate slice `[lo, hi)` as a new vector.
    pub fn slice(&self, lo: usize, hi: usize) -> RVec {
        RVec(self.0[lo..hi].to_vec())
    }

    /// Append one coordinate (lifting into an epigraph space).
    pub fn lift(&self, last: Rat) -> RVec {
        let mut c = self.0.clone();
        c.push(last);
        RVec(c)
    }

    /// Drop the last coordinate.
    pub fn unlift(&self) -> RVec {
        RVec(self.0[..self.0.len() - 1].to_vec())
    }

    /// Scale to the unique primitive integer multiple: entries become
    /// coprime integers. Sign is preserved. Zero maps to zero.
    pub fn primitive(&self) -> RVec {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in &self.0 {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.0.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let mut gcd = BigInt::zero();
        for i in &ints {
            gcd = gcd.gcd(i);
        }
        RVec(ints.into_iter().map(|i| Rat::from_integer(i / &gcd)).collect())
    }

    /// Primitive form with the first nonzero coordinate positive.
    /// Canonical representative of a line direction.
    pub fn primitive_signed(&self) -> RVec {
        let p = self.primitive();
        match p.0.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => p.neg(),
            _ => p,
        }
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }
}

impl fmt::Display for RVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
