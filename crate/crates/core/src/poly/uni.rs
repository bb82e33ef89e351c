use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Below this many coefficients (in the shorter operand) multiplication is
/// done schoolbook.
pub const DEFAULT_KARATSUBA_CUTOFF: usize = 32;

/// Dense univariate polynomial over GF(2^m); `coeffs[i]` multiplies x^i.
///
/// Always normalized: the top stored coefficient is nonzero, and the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub const fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(FieldElement::ONE)
    }

    pub fn constant(c: FieldElement) -> UniPoly {
        UniPoly::from_coeffs(vec![c])
    }

    /// c * x^deg
    pub fn monomial(c: FieldElement, deg: usize) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![FieldElement::ZERO; deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    /// x - a, which is x + a in characteristic 2.
    pub fn linear(a: FieldElement) -> UniPoly {
        UniPoly {
            coeffs: vec![a, FieldElement::ONE],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElement> {
        self.coeffs
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of stored coefficients (degree + 1, or 0).
    #[inline]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    #[inline]
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn lead(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn eval(&self, f: &Field, x: FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.mul(acc, x).add(c))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &UniPoly) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), FieldElement::ZERO);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.add(*b);
        }
        self.normalize();
    }

    /// self += c * x^shift * other
    pub fn add_scaled_shifted(&mut self, f: &Field, c: FieldElement, shift: usize, other: &UniPoly) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + shift;
        if need > self.coeffs.len() {
            self.coeffs.resize(need, FieldElement::ZERO);
        }
        let lc = f.log_unchecked(c);
        for (a, &b) in self.coeffs[shift..].iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a = a.add(f.exp_unchecked(lc + f.log_unchecked(b)));
            }
        }
        self.normalize();
    }

    pub fn scale(&self, f: &Field, c: FieldElement) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// Multiply by x^s.
    pub fn shift(&self, s: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![FieldElement::ZERO; s];
        coeffs.extend_from_slice(&self.coeffs);
        UniPoly { coeffs }
    }

    /// In-place multiplication by (x - a).
    pub fn mul_linear_assign(&mut self, f: &Field, a: FieldElement) {
        if self.is_zero() {
            return;
        }
        self.coeffs.push(FieldElement::ZERO);
        for i in (1..self.coeffs.len()).rev() {
            self.coeffs[i] = self.coeffs[i - 1].add(f.mul(a, self.coeffs[i]));
        }
        self.coeffs[0] = f.mul(a, self.coeffs[0]);
        self.normalize();
    }

    pub fn mul(&self, f: &Field, other: &UniPoly) -> UniPoly {
        self.mul_with_cutoff(f, other, DEFAULT_KARATSUBA_CUTOFF)
    }

    /// Karatsuba multiplication, switching to schoolbook below `cutoff`.
    pub fn mul_with_cutoff(&self, f: &Field, other: &UniPoly, cutoff: usize) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.len() + other.len() - 1];
        karatsuba(f, &self.coeffs, &other.coeffs, &mut out, cutoff.max(2));
        UniPoly::from_coeffs(out)
    }

    pub fn mul_schoolbook(&self, f: &Field, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.len() + other.len() - 1];
        schoolbook(f, &self.coeffs, &other.coeffs, &mut out);
        UniPoly::from_coeffs(out)
    }

    pub fn pow(&self, f: &Field, e: usize) -> UniPoly {
        let mut acc = UniPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(f, &base);
            }
        }
        acc
    }

    /// Returns (q, r) with self = q * b + r and deg r < deg b.
    pub fn divmod(&self, f: &Field, b: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let inv_lead = f.inv(b.coeffs[db])?;
        let mut quot = vec![FieldElement::ZERO; rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = rem[i + db];
            if c.is_zero() {
                continue;
            }
            let q = f.mul(c, inv_lead);
            quot[i] = q;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].add(f.mul(q, bj));
            }
        }
        rem.truncate(db);
        Ok((UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem)))
    }

    /// Exact division; errors when `b` does not divide `self`.
    pub fn div_exact(&self, f: &Field, b: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.divmod(f, b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// prod (x - x_i)
    pub fn from_roots(f: &Field, roots: &[FieldElement]) -> UniPoly {
        let mut p = UniPoly::one();
        for &a in roots {
            p.mul_linear_assign(f, a);
        }
        p
    }

    /// The unique polynomial of degree < n through the n given points.
    pub fn lagrange(f: &Field, points: &[(FieldElement, FieldElement)]) -> Result<UniPoly> {
        let xs: Vec<FieldElement> = points.iter().map(|p| p.0).collect();
        check_distinct(&xs)?;
        let full = UniPoly::from_roots(f, &xs);
        let mut acc = UniPoly::zero();
        for &(xi, yi) in points {
            if yi.is_zero() {
                continue;
            }
            let (basis, rem) = full.divmod(f, &UniPoly::linear(xi))?;
            debug_assert!(rem.is_zero());
            let denom = basis.eval(f, xi);
            let c = f.div(yi, denom)?;
            acc.add_scaled_shifted(f, c, 0, &basis);
        }
        Ok(acc)
    }
}

pub(crate) fn check_distinct(xs: &[FieldElement]) -> Result<()> {
    let mut seen = std::collections::HashSet::with_capacity(xs.len());
    for &x in xs {
        if !seen.insert(x) {
            return Err(Error::DuplicateAbscissa(x.to_hex()));
        }
    }
    Ok(())
}

/// out ^= a * b, with out.len() >= a.len() + b.len() - 1.
fn schoolbook(f: &Field, a: &[FieldElement], b: &[FieldElement], out: &mut [FieldElement]) {
    let logs_b: Vec<Option<u32>> = b
        .iter()
        .map(|&c| (!c.is_zero()).then(|| f.log_unchecked(c)))
        .collect();
    for (i, &ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        let la = f.log_unchecked(ai);
        for (o, lb) in out[i..].iter_mut().zip(&logs_b) {
            if let Some(lb) = lb {
                *o = o.add(f.exp_unchecked(la + lb));
            }
        }
    }
}

fn xor_into(dst: &mut [FieldElement], src: &[FieldElement]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = d.add(*s);
    }
}

fn karatsuba(
    f: &Field,
    a: &[FieldElement],
    b: &[FieldElement],
    out: &mut [FieldElement],
    cutoff: usize,
) {
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if b.is_empty() {
        return;
    }
    if b.len() < cutoff {
        schoolbook(f, a, b, out);
        return;
    }
    if a.len() >= 2 * b.len() {
        for (idx, chunk) in a.chunks(b.len()).enumerate() {
            let off = idx * b.len();
            karatsuba(f, chunk, b, &mut out[off..], cutoff);
        }
        return;
    }
    // b.len() > a.len() / 2, so both split at h leave nonempty low halves.
    let h = a.len().div_ceil(2);
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h.min(b.len()));

    let mut z0 = vec![FieldElement::ZERO; 2 * h - 1];
    karatsuba(f, a0, b0, &mut z0, cutoff);
    let mut z2 = vec![FieldElement::ZERO; (a1.len() + b1.len()).saturating_sub(1)];
    karatsuba(f, a1, b1, &mut z2, cutoff);

    let mut sa = a0.to_vec();
    xor_into(&mut sa, a1);
    let mut sb = b0.to_vec();
    xor_into(&mut sb, b1);
    let mut z1 = vec![FieldElement::ZERO; 2 * h - 1];
    karatsuba(f, &sa, &sb, &mut z1, cutoff);
    xor_into(&mut z1, &z0);
    xor_into(&mut z1, &z2);

    xor_into(out, &z0);
    xor_into(&mut out[h..], &z1);
    xor_into(&mut out[2 * h..], &z2);
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{self}]")
    }
}

/// Comma-separated hex coefficients, lowest degree first; zero prints as `0`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for UniPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<UniPoly> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(UniPoly::zero());
        }
        let coeffs = s
            .split(',')
            .map(FieldElement::from_hex)
            .collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::from_coeffs(coeffs))
    }
}
