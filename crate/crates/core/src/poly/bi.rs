use std::fmt;

use super::order::{Monomial, TermOrder};
use super::uni::UniPoly;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Bivariate polynomial stored by y-degree: `rows[j]` is the coefficient of y^j.
///
/// Normalized so the highest row is nonzero; the zero polynomial has no rows.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    rows: Vec<UniPoly>,
}

static ZERO_ROW: UniPoly = UniPoly::zero();

/// Binomial coefficient C(n, k) reduced mod 2 (Lucas).
#[inline]
pub fn binom_odd(n: usize, k: usize) -> bool {
    n & k == k
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly { rows: Vec::new() }
    }

    pub fn one() -> BiPoly {
        BiPoly::from_uni(UniPoly::one())
    }

    pub fn from_rows(rows: Vec<UniPoly>) -> BiPoly {
        let mut p = BiPoly { rows };
        p.normalize();
        p
    }

    /// A y-free polynomial.
    pub fn from_uni(u: UniPoly) -> BiPoly {
        BiPoly::from_rows(vec![u])
    }

    /// c * x^i * y^j
    pub fn monomial(c: FieldElement, i: usize, j: usize) -> BiPoly {
        let mut rows = vec![UniPoly::zero(); j + 1];
        rows[j] = UniPoly::monomial(c, i);
        BiPoly::from_rows(rows)
    }

    /// y - t(x)
    pub fn y_minus(t: &UniPoly) -> BiPoly {
        BiPoly::from_rows(vec![t.clone(), UniPoly::one()])
    }

    pub fn rows(&self) -> &[UniPoly] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<UniPoly> {
        self.rows
    }

    #[inline]
    pub fn row(&self, j: usize) -> &UniPoly {
        self.rows.get(j).unwrap_or(&ZERO_ROW)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Highest power of y; `None` for zero.
    #[inline]
    pub fn ydeg(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Highest power of x over all rows.
    pub fn xdeg(&self) -> Option<usize> {
        self.rows.iter().filter_map(UniPoly::degree).max()
    }

    pub fn term_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.coeffs().iter().filter(|c| !c.is_zero()).count())
            .sum()
    }

    fn normalize(&mut self) {
        while self.rows.last().is_some_and(UniPoly::is_zero) {
            self.rows.pop();
        }
    }

    pub fn eval(&self, f: &Field, x: FieldElement, y: FieldElement) -> FieldElement {
        self.rows
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, row| f.mul(acc, y).add(row.eval(f, x)))
    }

    /// Hasse derivative Q^[j1, j2] evaluated at (x0, y0).
    pub fn hasse(&self, f: &Field, j1: usize, j2: usize, x0: FieldElement, y0: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for jp in (j2..self.rows.len()).rev() {
            acc = f.mul(acc, y0);
            if binom_odd(jp, j2) {
                acc = acc.add(hasse_x(f, &self.rows[jp], j1, x0));
            }
        }
        acc
    }

    /// True iff every Hasse derivative of total order below r vanishes at (x0, y0).
    pub fn has_root_mult(&self, f: &Field, x0: FieldElement, y0: FieldElement, r: usize) -> bool {
        (0..r).all(|j2| (0..r - j2).all(|j1| self.hasse(f, j1, j2, x0, y0).is_zero()))
    }

    /// Leading term under `ord`, `None` for zero.
    pub fn lt(&self, ord: &TermOrder) -> Option<Monomial> {
        let mut best: Option<Monomial> = None;
        for (j, row) in self.rows.iter().enumerate() {
            let i = if ord.wx >= 0 {
                match row.degree() {
                    Some(d) => d,
                    None => continue,
                }
            } else {
                match row.low_degree() {
                    Some(d) => d,
                    None => continue,
                }
            };
            let better = match &best {
                None => true,
                Some(b) => ord.cmp_exponents((i, j), (b.x, b.y)).is_gt(),
            };
            if better {
                best = Some(Monomial {
                    coeff: row.coeff(i),
                    x: i,
                    y: j,
                });
            }
        }
        best
    }

    pub fn leading_term(&self, ord: &TermOrder) -> Result<Monomial> {
        self.lt(ord).ok_or(Error::ZeroPolynomial)
    }

    /// (a, b)-weighted degree; `None` for zero.
    pub fn wdeg(&self, a: i64, b: i64) -> Option<i64> {
        let mut best: Option<i64> = None;
        for (j, row) in self.rows.iter().enumerate() {
            if row.is_zero() {
                continue;
            }
            let i = if a >= 0 {
                row.degree().unwrap()
            } else {
                row.low_degree().unwrap()
            };
            let w = a * i as i64 + b * j as i64;
            best = Some(best.map_or(w, |cur| cur.max(w)));
        }
        best
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &BiPoly) {
        if other.rows.len() > self.rows.len() {
            self.rows.resize(other.rows.len(), UniPoly::zero());
        }
        for (a, b) in self.rows.iter_mut().zip(&other.rows) {
            a.add_assign(b);
        }
        self.normalize();
    }

    /// self += c * x^xshift * y^yshift * other
    pub fn add_scaled_shifted(
        &mut self,
        f: &Field,
        c: FieldElement,
        xshift: usize,
        yshift: usize,
        other: &BiPoly,
    ) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let need = other.rows.len() + yshift;
        if need > self.rows.len() {
            self.rows.resize(need, UniPoly::zero());
        }
        for (a, b) in self.rows[yshift..].iter_mut().zip(&other.rows) {
            a.add_scaled_shifted(f, c, xshift, b);
        }
        self.normalize();
    }

    /// P + c * x^xshift * y^yshift * S
    pub fn add_scaled(&self, f: &Field, c: FieldElement, xshift: usize, yshift: usize, s: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(f, c, xshift, yshift, s);
        out
    }

    pub fn scale(&self, f: &Field, c: FieldElement) -> BiPoly {
        BiPoly::from_rows(self.rows.iter().map(|r| r.scale(f, c)).collect())
    }

    pub fn mul_uni(&self, f: &Field, u: &UniPoly) -> BiPoly {
        BiPoly::from_rows(self.rows.iter().map(|r| r.mul(f, u)).collect())
    }

    /// Multiply by y^s.
    pub fn shift_y(&self, s: usize) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut rows = vec![UniPoly::zero(); s];
        rows.extend(self.rows.iter().cloned());
        BiPoly { rows }
    }

    /// Multiply by x^s.
    pub fn shift_x(&self, s: usize) -> BiPoly {
        BiPoly {
            rows: self.rows.iter().map(|r| r.shift(s)).collect(),
        }
    }

    /// In-place multiplication by (x - a).
    pub fn mul_linear_x_assign(&mut self, f: &Field, a: FieldElement) {
        for row in &mut self.rows {
            row.mul_linear_assign(f, a);
        }
    }

    /// Row convolution, each row product through Karatsuba.
    pub fn mul(&self, f: &Field, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let mut rows = vec![UniPoly::zero(); self.rows.len() + other.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.rows.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                rows[i + j].add_assign(&a.mul(f, b));
            }
        }
        BiPoly::from_rows(rows)
    }

    pub fn pow(&self, f: &Field, e: usize) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = acc.mul(f, self);
        }
        acc
    }

    /// Q(x, u(x)) as a univariate polynomial.
    pub fn substitute_y(&self, f: &Field, u: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for row in self.rows.iter().rev() {
            acc = acc.mul(f, u);
            acc.add_assign(row);
        }
        acc
    }
}

/// sum_{i >= a} C(i, a) q_i x0^(i - a), binomials mod 2.
fn hasse_x(f: &Field, row: &UniPoly, a: usize, x0: FieldElement) -> FieldElement {
    let c = row.coeffs();
    let mut acc = FieldElement::ZERO;
    for i in (a..c.len()).rev() {
        acc = f.mul(acc, x0);
        if binom_odd(i, a) {
            acc = acc.add(c[i]);
        }
    }
    acc
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly{{")?;
        for (j, r) in self.rows.iter().enumerate() {
            write!(f, " {j}: [{r}]")?;
        }
        write!(f, " }}")
    }
}

/// One line per y-degree, `j: <coefficients>`. Zero prints as `0: 0`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0: 0");
        }
        for (j, r) in self.rows.iter().enumerate() {
            if j > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{j}: {r}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for BiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<BiPoly> {
        let mut rows: Vec<UniPoly> = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (j, body) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `j: coeffs`, got {line:?}")))?;
            let j: usize = j
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad y-degree {j:?}: {e}")))?;
            if j >= rows.len() {
                rows.resize(j + 1, UniPoly::zero());
            }
            rows[j] = body.parse()?;
        }
        Ok(BiPoly::from_rows(rows))
    }
}
