//! Groebner bases of F[x]-submodules of F[x, y].
//!
//! A list of bivariate polynomials whose leading terms have pairwise distinct
//! y-degrees is a Groebner basis of the module it generates over F[x]. All
//! bases here are kept in that shape and sorted by leading y-degree.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::{check_distinct, BiPoly, Monomial, TermOrder, UniPoly};

/// Interpolation points (x_i, y_i) with pairwise distinct x_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpPoints {
    points: Vec<(FieldElement, FieldElement)>,
}

impl InterpPoints {
    pub fn new(points: Vec<(FieldElement, FieldElement)>) -> Result<InterpPoints> {
        let xs: Vec<_> = points.iter().map(|p| p.0).collect();
        check_distinct(&xs)?;
        Ok(InterpPoints { points })
    }

    pub fn from_xy(xs: &[FieldElement], ys: &[FieldElement]) -> Result<InterpPoints> {
        if xs.len() != ys.len() {
            return Err(Error::InvalidParameters(format!(
                "{} locators but {} symbols",
                xs.len(),
                ys.len()
            )));
        }
        InterpPoints::new(xs.iter().copied().zip(ys.iter().copied()).collect())
    }

    pub fn points(&self) -> &[(FieldElement, FieldElement)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn xs(&self) -> Vec<FieldElement> {
        self.points.iter().map(|p| p.0).collect()
    }

    /// phi(x) = prod (x - x_i)
    pub fn vanishing_poly(&self, f: &Field) -> UniPoly {
        UniPoly::from_roots(f, &self.xs())
    }

    /// T(x) with T(x_i) = y_i and deg T < n.
    pub fn interpolating_poly(&self, f: &Field) -> Result<UniPoly> {
        UniPoly::lagrange(f, &self.points)
    }
}

/// Outcome of a basis check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(String),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// An ordered list of module generators together with the term ordering
/// that defines their leading terms.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyBasis {
    polys: Vec<BiPoly>,
    ord: TermOrder,
}

impl PolyBasis {
    pub fn new(polys: Vec<BiPoly>, ord: TermOrder) -> PolyBasis {
        PolyBasis { polys, ord }
    }

    pub fn polys(&self) -> &[BiPoly] {
        &self.polys
    }

    pub fn into_polys(self) -> Vec<BiPoly> {
        self.polys
    }

    pub fn ord(&self) -> TermOrder {
        self.ord
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_terms(&self) -> Result<Vec<Monomial>> {
        self.polys
            .iter()
            .map(|p| p.leading_term(&self.ord))
            .collect()
    }

    /// Errors unless every element is nonzero with a distinct leading y-degree.
    pub fn check_shape(&self) -> Result<()> {
        let mut seen = Vec::new();
        for (idx, p) in self.polys.iter().enumerate() {
            let lt = p
                .lt(&self.ord)
                .ok_or_else(|| Error::NotGroebnerShape(format!("element {idx} is zero")))?;
            if seen.len() <= lt.y {
                seen.resize(lt.y + 1, false);
            }
            if seen[lt.y] {
                return Err(Error::NotGroebnerShape(format!(
                    "two elements have leading y-degree {}",
                    lt.y
                )));
            }
            seen[lt.y] = true;
        }
        Ok(())
    }

    /// Sum of leading-term x-degrees.
    pub fn delta(&self) -> Result<i64> {
        self.check_shape()?;
        Ok(self
            .polys
            .iter()
            .map(|p| p.lt(&self.ord).unwrap().x as i64)
            .sum())
    }

    /// The smallest element under the basis ordering.
    pub fn smallest(&self) -> Option<&BiPoly> {
        self.polys
            .iter()
            .filter_map(|p| p.lt(&self.ord).map(|lt| (p, lt)))
            .min_by(|a, b| self.ord.cmp(&a.1, &b.1))
            .map(|(p, _)| p)
    }

    /// The element whose leading term has y-degree `j`.
    pub fn with_leading_ydeg(&self, j: usize) -> Option<&BiPoly> {
        self.polys
            .iter()
            .find(|p| p.lt(&self.ord).is_some_and(|lt| lt.y == j))
    }

    pub fn sort_by_leading_ydeg(&mut self) {
        let ord = self.ord;
        self.polys
            .sort_by_key(|p| p.lt(&ord).map_or(usize::MAX, |lt| lt.y));
    }

    /// Adds `p` to the module and restores Groebner shape with the
    /// multi-dimensional Euclidean algorithm. Returns the number of
    /// reduction steps. A remainder that vanishes is dropped.
    pub fn extend_reduce(&mut self, f: &Field, p: BiPoly) -> Result<usize> {
        let ord = self.ord;
        // slot[j] = index of the element with leading y-degree j
        let mut slot: Vec<Option<usize>> = Vec::new();
        let mut lts: Vec<Monomial> = Vec::with_capacity(self.polys.len() + 1);
        for (idx, s) in self.polys.iter().enumerate() {
            let lt = s.lt(&ord).ok_or_else(|| {
                Error::PreconditionViolated(format!("basis element {idx} is zero"))
            })?;
            if slot.len() <= lt.y {
                slot.resize(lt.y + 1, None);
            }
            if slot[lt.y].is_some() {
                return Err(Error::PreconditionViolated(format!(
                    "leading y-degree {} occurs twice",
                    lt.y
                )));
            }
            slot[lt.y] = Some(idx);
            lts.push(lt);
        }

        let mut cur = p;
        let mut steps = 0usize;
        while let Some(lc) = cur.lt(&ord) {
            let Some(idx) = slot.get(lc.y).copied().flatten() else {
                self.polys.push(cur);
                break;
            };
            steps += 1;
            let ls = lts[idx];
            if lc.x <= ls.x {
                // lt(cur) divides lt(S): cur takes S's place, S is reduced by it
                let c = f.div(ls.coeff, lc.coeff)?;
                let mut w = std::mem::replace(&mut self.polys[idx], cur);
                w.add_scaled_shifted(f, c, ls.x - lc.x, 0, &self.polys[idx]);
                lts[idx] = lc;
                cur = w;
            } else {
                let c = f.div(lc.coeff, ls.coeff)?;
                cur.add_scaled_shifted(f, c, lc.x - ls.x, 0, &self.polys[idx]);
            }
        }
        self.sort_by_leading_ydeg();
        Ok(steps)
    }

    /// Remainder of `p` under division by the basis; zero iff `p` lies in
    /// the module (for a basis in Groebner shape).
    pub fn normal_form(&self, f: &Field, p: &BiPoly) -> Result<BiPoly> {
        self.check_shape()?;
        let ord = self.ord;
        let lts = self.leading_terms()?;
        let mut cur = p.clone();
        let mut rem = BiPoly::zero();
        while let Some(lc) = cur.lt(&ord) {
            match lts.iter().position(|lt| lt.y == lc.y && lt.x <= lc.x) {
                Some(idx) => {
                    let c = f.div(lc.coeff, lts[idx].coeff)?;
                    cur.add_scaled_shifted(f, c, lc.x - lts[idx].x, 0, &self.polys[idx]);
                }
                None => {
                    let m = BiPoly::monomial(lc.coeff, lc.x, lc.y);
                    rem.add_assign(&m);
                    cur.add_assign(&m);
                }
            }
        }
        Ok(rem)
    }
}

impl fmt::Debug for PolyBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolyBasis")
            .field("ord", &self.ord)
            .field("polys", &self.polys)
            .finish()
    }
}

/// `order: wx,wy` followed by the elements as text blocks separated by blank lines.
impl fmt::Display for PolyBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order: {}", self.ord)?;
        for p in &self.polys {
            writeln!(f)?;
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for PolyBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<PolyBasis> {
        let mut lines = s.lines();
        let header = lines
            .by_ref()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| Error::Parse("empty basis text".into()))?;
        let ord = header
            .trim()
            .strip_prefix("order:")
            .ok_or_else(|| Error::Parse(format!("expected `order: wx,wy`, got {header:?}")))?
            .parse::<TermOrder>()?;
        let rest: Vec<&str> = lines.collect();
        let polys = rest
            .split(|l| l.trim().is_empty())
            .filter(|block| !block.is_empty())
            .map(|block| block.join("\n").parse::<BiPoly>())
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyBasis { polys, ord })
    }
}

/// Sum of leading-term x-degrees of a Groebner basis.
pub fn delta(b: &PolyBasis) -> Result<i64> {
    b.delta()
}

/// n * r * (r + 1) / 2, the value of delta for any Groebner basis of the
/// module of polynomials with multiplicity-r roots at n points.
pub fn expected_delta(n: usize, r: usize) -> i64 {
    (n * r * (r + 1) / 2) as i64
}

/// Basis of [B, P] in Groebner shape.
pub fn reduce_extend(f: &Field, b: &PolyBasis, p: BiPoly) -> Result<PolyBasis> {
    let mut out = b.clone();
    out.extend_reduce(f, p)?;
    Ok(out)
}

/// Iterative interpolation: rho polynomials with leading y-degrees 0..rho,
/// each vanishing to order r at every point.
pub fn iia(f: &Field, pts: &InterpPoints, r: usize, rho: usize, ord: TermOrder) -> Result<PolyBasis> {
    if r == 0 || rho == 0 {
        return Err(Error::InvalidParameters(format!(
            "iia needs r >= 1 and rho >= 1, got r={r}, rho={rho}"
        )));
    }
    let mut q: Vec<BiPoly> = (0..rho)
        .map(|j| BiPoly::monomial(FieldElement::ONE, 0, j))
        .collect();
    let mut lts: Vec<Monomial> = q.iter().map(|p| p.lt(&ord).unwrap()).collect();
    let mut disc = vec![FieldElement::ZERO; rho];

    for &(xi, yi) in pts.points() {
        for beta in 0..r {
            for alpha in 0..r - beta {
                for (d, p) in disc.iter_mut().zip(&q) {
                    *d = p.hasse(f, alpha, beta, xi, yi);
                }
                // argmin over polynomials with nonzero discrepancy; ties by index
                let Some(m) = (0..rho)
                    .filter(|&j| !disc[j].is_zero())
                    .min_by(|&a, &b| ord.cmp(&lts[a], &lts[b]).then(a.cmp(&b)))
                else {
                    continue;
                };
                let pivot = q[m].clone();
                for j in (0..rho).filter(|&j| j != m && !disc[j].is_zero()) {
                    let c = f.div(disc[j], disc[m])?;
                    q[j].add_scaled_shifted(f, c, 0, 0, &pivot);
                }
                q[m].mul_linear_x_assign(f, xi);
                lts[m] = q[m].lt(&ord).unwrap();
            }
        }
    }
    let mut out = PolyBasis::new(q, ord);
    out.sort_by_leading_ydeg();
    Ok(out)
}

/// Generators (y - T)^j phi^(r - j) for j <= r and y^(j - r) (y - T)^r above.
pub fn lee_osullivan_generators(f: &Field, pts: &InterpPoints, r: usize, rho: usize) -> Result<Vec<BiPoly>> {
    let phi = pts.vanishing_poly(f);
    let t = pts.interpolating_poly(f)?;
    let line = BiPoly::y_minus(&t);
    let mut phi_pows = vec![UniPoly::one()];
    for i in 1..=r {
        let next = phi_pows[i - 1].mul(f, &phi);
        phi_pows.push(next);
    }
    let mut gens = Vec::with_capacity(rho);
    let mut line_pow = BiPoly::one();
    for j in 0..rho {
        if j <= r {
            gens.push(line_pow.mul_uni(f, &phi_pows[r - j]));
            if j < r {
                line_pow = line_pow.mul(f, &line);
            }
        } else {
            gens.push(line_pow.shift_y(j - r));
        }
    }
    Ok(gens)
}

/// Lee-O'Sullivan interpolation: fold the explicit module generators through
/// [`reduce_extend`] under the (1, k-1) ordering.
pub fn lee_osullivan(f: &Field, pts: &InterpPoints, r: usize, rho: usize, k: usize) -> Result<PolyBasis> {
    lee_osullivan_counted(f, pts, r, rho, k).map(|(b, _)| b)
}

/// As [`lee_osullivan`], also returning the number of reduction steps.
pub fn lee_osullivan_counted(
    f: &Field,
    pts: &InterpPoints,
    r: usize,
    rho: usize,
    k: usize,
) -> Result<(PolyBasis, usize)> {
    if r == 0 || rho <= r {
        return Err(Error::InvalidParameters(format!(
            "lee_osullivan needs r >= 1 and rho > r, got r={r}, rho={rho}"
        )));
    }
    let ord = TermOrder::list_decoding(k);
    let mut gens = lee_osullivan_generators(f, pts, r, rho)?.into_iter();
    let mut basis = PolyBasis::new(vec![gens.next().unwrap()], ord);
    let mut steps = 0;
    for g in gens {
        steps += basis.extend_reduce(f, g)?;
    }
    Ok((basis, steps))
}

/// Distinct leading y-degrees, multiplicity-r vanishing at every point, and
/// delta equal to n r (r + 1) / 2.
pub fn verify_module_basis(f: &Field, b: &PolyBasis, pts: &InterpPoints, r: usize) -> Verdict {
    if let Err(e) = b.check_shape() {
        return Verdict::Invalid(e.to_string());
    }
    for (idx, p) in b.polys().iter().enumerate() {
        if let Some(&(x, y)) = pts.points().iter().find(|&&(x, y)| !p.has_root_mult(f, x, y, r)) {
            return Verdict::Invalid(format!(
                "element {idx} does not vanish to order {r} at ({x}, {y})"
            ));
        }
    }
    let d = b.delta().unwrap();
    let want = expected_delta(pts.len(), r);
    if d != want {
        return Verdict::Invalid(format!("delta is {d}, expected {want}"));
    }
    Verdict::Valid
}

/// Module check plus a top element whose leading term is a pure power of y.
pub fn verify_ideal_basis(f: &Field, b: &PolyBasis, pts: &InterpPoints, r: usize, n: usize) -> Verdict {
    if n != pts.len() {
        return Verdict::Invalid(format!("n = {n} but {} points given", pts.len()));
    }
    let v = verify_module_basis(f, b, pts, r);
    if !v.is_valid() {
        return v;
    }
    let ord = b.ord();
    let top = b
        .polys()
        .iter()
        .filter_map(|p| p.lt(&ord))
        .max_by(|a, c| a.y.cmp(&c.y));
    match top {
        Some(lt) if lt.x == 0 => Verdict::Valid,
        Some(lt) => Verdict::Invalid(format!(
            "top element has leading term x^{} y^{}, not a pure power of y",
            lt.x, lt.y
        )),
        None => Verdict::Invalid("empty basis".into()),
    }
}

/// Compares two bases position by position on leading monomials, ignoring
/// coefficients.
pub fn same_leading_monomials(a: &PolyBasis, b: &PolyBasis) -> bool {
    let (Ok(la), Ok(lb)) = (a.leading_terms(), b.leading_terms()) else {
        return false;
    };
    la.len() == lb.len()
        && la
            .iter()
            .zip(&lb)
            .all(|(p, q)| a.ord().cmp_exponents(p.exponents(), q.exponents()) == Ordering::Equal)
}
