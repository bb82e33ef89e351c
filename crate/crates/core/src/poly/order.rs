use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldElement;

/// (wx, wy)-weighted degree lexicographic ordering on monomials x^i y^j.
///
/// Monomials are compared by `wx*i + wy*j` first; ties go to the larger
/// y-degree, then the larger x-degree. `wy` may be negative, as in the
/// (1, -1) ordering used after re-encoding.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TermOrder {
    pub wx: i64,
    pub wy: i64,
}

impl TermOrder {
    pub const fn new(wx: i64, wy: i64) -> TermOrder {
        TermOrder { wx, wy }
    }

    /// The (1, k-1) ordering used for list decoding a dimension-k code.
    pub fn list_decoding(k: usize) -> TermOrder {
        TermOrder::new(1, k as i64 - 1)
    }

    /// The (1, -1) ordering used in the re-encoded coordinates.
    pub const fn reencoded() -> TermOrder {
        TermOrder::new(1, -1)
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> i64 {
        self.wx * i as i64 + self.wy * j as i64
    }

    /// Compares x^i1 y^j1 against x^i2 y^j2.
    #[inline]
    pub fn cmp_exponents(&self, (i1, j1): (usize, usize), (i2, j2): (usize, usize)) -> Ordering {
        self.weight(i1, j1)
            .cmp(&self.weight(i2, j2))
            .then(j1.cmp(&j2))
            .then(i1.cmp(&i2))
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exponents((a.x, a.y), (b.x, b.y))
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.wx, self.wy)
    }
}

impl std::str::FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<TermOrder> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected wx,wy, got {s:?}")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad weight {t:?}: {e}")))
        };
        Ok(TermOrder::new(parse(a)?, parse(b)?))
    }
}

/// A nonzero term `coeff * x^x * y^y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub coeff: FieldElement,
    pub x: usize,
    pub y: usize,
}

impl Monomial {
    pub fn exponents(&self) -> (usize, usize) {
        (self.x, self.y)
    }

    /// True when x^x y^y divides the other monomial.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}
