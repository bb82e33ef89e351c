//! Guruswami-Sudan list decoding of Reed-Solomon codes.

use std::fmt;
use std::str::FromStr;

use crate::binary::{initial_ideal_basis, interpolate, reencode_interpolate, InterpStats, RngStream};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::groebner::{iia, lee_osullivan_counted, InterpPoints};
use crate::poly::{BiPoly, TermOrder, UniPoly};

/// An (n, k) Reed-Solomon code given by its evaluation points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    field: Field,
    k: usize,
    locators: Vec<FieldElement>,
}

impl CodeSpec {
    /// Code with locators alpha^0, ..., alpha^(n-1).
    pub fn new(field: Field, n: usize, k: usize) -> Result<CodeSpec> {
        if n > field.order() {
            return Err(Error::InvalidParameters(format!(
                "n={n} exceeds the {} nonzero elements of GF(2^{})",
                field.order(),
                field.m()
            )));
        }
        let locators = (0..n).map(|i| field.alpha_pow(i as i64)).collect();
        CodeSpec::with_locators(field, k, locators)
    }

    pub fn with_locators(field: Field, k: usize, locators: Vec<FieldElement>) -> Result<CodeSpec> {
        let n = locators.len();
        if k < 1 || k >= n {
            return Err(Error::InvalidParameters(format!("need 1 <= k < n, got n={n}, k={k}")));
        }
        if let Some(bad) = locators.iter().find(|&&x| !field.contains(x)) {
            return Err(Error::InvalidParameters(format!("locator {bad} is outside the field")));
        }
        crate::poly::check_distinct(&locators)?;
        Ok(CodeSpec { field, k, locators })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.locators.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn locators(&self) -> &[FieldElement] {
        &self.locators
    }

    /// Evaluates the message polynomial at every locator.
    pub fn encode(&self, msg: &UniPoly) -> Result<Vec<FieldElement>> {
        if let Some(d) = msg.degree().filter(|&d| d >= self.k) {
            return Err(Error::DegreeTooHigh { degree: d, k: self.k });
        }
        Ok(self.locators.iter().map(|&x| msg.eval(&self.field, x)).collect())
    }

    /// Positions where the message polynomial matches the received word.
    pub fn agreement(&self, msg: &UniPoly, received: &[FieldElement]) -> usize {
        self.locators
            .iter()
            .zip(received)
            .filter(|&(&x, &y)| msg.eval(&self.field, x) == y)
            .count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GsParams {
    pub r: usize,
    /// Bound on the y-degree of the interpolation polynomial.
    pub rho: usize,
    /// Bound on its (1, k-1)-weighted degree.
    pub l: usize,
    /// Minimum agreement of a decoded message.
    pub tau: usize,
}

/// Decoding parameters for multiplicity r.
///
/// rho is the unique integer with rho(rho-1)(k-1) <= n r(r+1) < rho(rho+1)(k-1).
pub fn gs_params(n: usize, k: usize, r: usize) -> Result<GsParams> {
    if k < 2 || k >= n || r == 0 {
        return Err(Error::InvalidParameters(format!(
            "need 2 <= k < n and r >= 1, got n={n}, k={k}, r={r}"
        )));
    }
    let c = (n * r * (r + 1)) as u128;
    let km1 = (k - 1) as u128;
    let mut rho = 1u128;
    while rho * (rho + 1) * km1 <= c {
        rho += 1;
    }
    let l = (c + rho * (rho - 1) * km1) / (2 * rho);
    Ok(GsParams {
        r,
        rho: rho as usize,
        l: l as usize,
        tau: l as usize / r + 1,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Iia,
    LeeOSullivan,
    Binary,
    BinaryReencoded,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Iia,
        Algorithm::LeeOSullivan,
        Algorithm::Binary,
        Algorithm::BinaryReencoded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Iia => "iia",
            Algorithm::LeeOSullivan => "lee_osullivan",
            Algorithm::Binary => "binary",
            Algorithm::BinaryReencoded => "binary_reencoded",
        }
    }

    /// True for the algorithms built on randomized ideal multiplication.
    pub fn is_binary(self) -> bool {
        matches!(self, Algorithm::Binary | Algorithm::BinaryReencoded)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Algorithm> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown algorithm {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecodeOptions {
    /// Return the multiplicity-1 result when it already lies within half the
    /// minimum distance, skipping the expensive interpolation.
    pub gao_early_exit: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub message: UniPoly,
    pub agreement: usize,
}

#[derive(Clone, Debug)]
pub struct DecodeResult {
    /// Sorted by message coefficients.
    pub candidates: Vec<Candidate>,
    pub params: GsParams,
    pub stats: InterpStats,
    /// The interpolation polynomial whose y-roots were extracted.
    pub q: BiPoly,
    pub gao_exit: bool,
}

impl DecodeResult {
    pub fn contains(&self, msg: &UniPoly) -> bool {
        self.candidates.iter().any(|c| &c.message == msg)
    }

    pub fn messages(&self) -> Vec<UniPoly> {
        self.candidates.iter().map(|c| c.message.clone()).collect()
    }
}

/// All f with deg f < k and Q(x, f(x)) = 0.
pub fn y_roots(f: &Field, q: &BiPoly, k: usize) -> Vec<UniPoly> {
    if q.is_zero() || k == 0 {
        return Vec::new();
    }
    let mut found = Vec::new();
    let mut prefix = Vec::with_capacity(k);
    rr_search(f, strip_x(q.rows().to_vec()), k, &mut prefix, &mut found);
    let mut out: Vec<UniPoly> = found
        .into_iter()
        .map(UniPoly::from_coeffs)
        .filter(|p| q.substitute_y(f, p).is_zero())
        .collect();
    out.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    out.dedup();
    out
}

/// Divides out the largest power of x common to all rows.
fn strip_x(mut rows: Vec<UniPoly>) -> Vec<UniPoly> {
    let s = rows.iter().filter_map(UniPoly::low_degree).min().unwrap_or(0);
    if s > 0 {
        for row in &mut rows {
            if !row.is_zero() {
                *row = UniPoly::from_coeffs(row.coeffs()[s..].to_vec());
            }
        }
    }
    rows
}

fn rr_search(
    f: &Field,
    rows: Vec<UniPoly>,
    k: usize,
    prefix: &mut Vec<FieldElement>,
    found: &mut Vec<Vec<FieldElement>>,
) {
    if prefix.len() == k {
        found.push(prefix.clone());
        return;
    }
    if rows.len() < 2 {
        return;
    }
    let at_zero: Vec<FieldElement> = rows.iter().map(|r| r.coeff(0)).collect();
    for v in 0..f.size() {
        let g = FieldElement(v as u16);
        let val = at_zero
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.mul(acc, g).add(c));
        if !val.is_zero() {
            continue;
        }
        prefix.push(g);
        rr_search(f, strip_x(shift_and_scale(f, &rows, g)), k, prefix, found);
        prefix.pop();
    }
}

/// Rows of Q(x, x y + g).
fn shift_and_scale(f: &Field, rows: &[UniPoly], g: FieldElement) -> Vec<UniPoly> {
    let mut rows = rows.to_vec();
    let d = rows.len() - 1;
    if !g.is_zero() {
        for i in 0..d {
            for j in (i..d).rev() {
                let hi = rows[j + 1].clone();
                rows[j].add_scaled_shifted(f, g, 0, &hi);
            }
        }
    }
    rows.into_iter().enumerate().map(|(j, r)| r.shift(j)).collect()
}

fn check_received(code: &CodeSpec, received: &[FieldElement]) -> Result<()> {
    if received.len() != code.n() {
        return Err(Error::InvalidParameters(format!(
            "received word has {} symbols, expected {}",
            received.len(),
            code.n()
        )));
    }
    if let Some(bad) = received.iter().find(|&&y| !code.field().contains(y)) {
        return Err(Error::InvalidParameters(format!("symbol {bad} is outside the field")));
    }
    Ok(())
}

fn candidates(code: &CodeSpec, received: &[FieldElement], q: &BiPoly, min_agreement: usize) -> Vec<Candidate> {
    y_roots(code.field(), q, code.k())
        .into_iter()
        .map(|message| Candidate {
            agreement: code.agreement(&message, received),
            message,
        })
        .filter(|c| c.agreement >= min_agreement)
        .collect()
}

pub fn list_decode(
    received: &[FieldElement],
    code: &CodeSpec,
    r: usize,
    algorithm: Algorithm,
    seed: u64,
) -> Result<DecodeResult> {
    list_decode_with(received, code, r, algorithm, seed, &DecodeOptions::default())
}

pub fn list_decode_with(
    received: &[FieldElement],
    code: &CodeSpec,
    r: usize,
    algorithm: Algorithm,
    seed: u64,
    opts: &DecodeOptions,
) -> Result<DecodeResult> {
    check_received(code, received)?;
    let (f, n, k) = (code.field(), code.n(), code.k());
    let params = gs_params(n, k, r)?;
    let pts = InterpPoints::from_xy(code.locators(), received)?;
    let ord = TermOrder::list_decoding(k);

    if opts.gao_early_exit {
        let (g, steps) = initial_ideal_basis(f, &pts, k)?;
        let q = g.smallest().ok_or(Error::ZeroPolynomial)?.clone();
        let found = candidates(code, received, &q, n - (n - k) / 2);
        if !found.is_empty() {
            return Ok(DecodeResult {
                candidates: found,
                params,
                stats: InterpStats {
                    initial_reduce_steps: steps,
                    initial_basis_len: g.len(),
                    merges: Vec::new(),
                },
                q,
                gao_exit: true,
            });
        }
    }

    let mut rng = RngStream::new(seed);
    let (q, stats) = match algorithm {
        Algorithm::Iia => {
            let b = iia(f, &pts, r, params.rho, ord)?;
            (b.smallest().cloned(), InterpStats::default())
        }
        Algorithm::LeeOSullivan => {
            let (b, steps) = lee_osullivan_counted(f, &pts, r, params.rho, k)?;
            let stats = InterpStats {
                initial_reduce_steps: steps,
                initial_basis_len: b.len(),
                merges: Vec::new(),
            };
            (b.smallest().cloned(), stats)
        }
        Algorithm::Binary => {
            let (b, stats) = interpolate(f, &pts, r, k, &mut rng)?;
            (b.smallest().cloned(), stats)
        }
        Algorithm::BinaryReencoded => {
            let (b, stats) = reencode_interpolate(f, &pts, r, k, &mut rng)?;
            (Some(b.smallest_original(f)?), stats)
        }
    };
    let q = q.ok_or(Error::ZeroPolynomial)?;
    Ok(DecodeResult {
        candidates: candidates(code, received, &q, params.tau),
        params,
        stats,
        q,
        gao_exit: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(m: u32) -> Field {
        Field::with_default_poly(m).unwrap()
    }

    fn random_poly(rng: &mut ChaCha8Rng, f: &Field, len: usize) -> UniPoly {
        UniPoly::from_coeffs((0..len).map(|_| FieldElement(rng.random_range(0..f.size()) as u16)).collect())
    }

    /// Every polynomial of degree < k over the field.
    fn all_polys(f: &Field, k: usize) -> Vec<UniPoly> {
        let q = f.size();
        (0..q.pow(k as u32))
            .map(|mut idx| {
                let mut c = Vec::with_capacity(k);
                for _ in 0..k {
                    c.push(FieldElement((idx % q) as u16));
                    idx /= q;
                }
                UniPoly::from_coeffs(c)
            })
            .collect()
    }

    #[test]
    fn params_examples() {
        let got: Vec<_> = [1, 2, 4]
            .iter()
            .map(|&r| {
                let p = gs_params(31, 15, r).unwrap();
                (p.rho, p.l, p.tau)
            })
            .collect();
        assert_eq!(got, vec![(2, 22, 23), (4, 44, 23), (7, 86, 22)]);
        assert!(gs_params(31, 1, 1).is_err());
        assert!(gs_params(31, 31, 1).is_err());
        assert!(gs_params(31, 15, 0).is_err());
    }

    #[test]
    fn encode_trivial_and_degree_check() {
        let f = gf(5);
        let code = CodeSpec::new(f.clone(), 31, 15).unwrap();
        assert_eq!(code.encode(&UniPoly::zero()).unwrap(), vec![FieldElement::ZERO; 31]);
        let c = FieldElement(7);
        assert_eq!(code.encode(&UniPoly::constant(c)).unwrap(), vec![c; 31]);
        let too_big = UniPoly::monomial(FieldElement::ONE, 15);
        assert_eq!(code.encode(&too_big), Err(Error::DegreeTooHigh { degree: 15, k: 15 }));
        assert!(CodeSpec::new(f, 32, 15).is_err());
    }

    #[test]
    fn algorithm_names_roundtrip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("gao".parse::<Algorithm>().is_err());
    }

    #[test]
    fn y_roots_linear_and_quadratic() {
        let f = gf(5);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let f1 = random_poly(&mut rng, &f, 6);
            let f2 = random_poly(&mut rng, &f, 6);
            assert_eq!(y_roots(&f, &BiPoly::y_minus(&f1), 6), vec![f1.clone()]);
            let q = BiPoly::y_minus(&f1).mul(&f, &BiPoly::y_minus(&f2));
            let mut want = vec![f1.clone(), f2.clone()];
            want.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
            want.dedup();
            assert_eq!(y_roots(&f, &q, 6), want);
            // a root of degree >= k is not reported
            let big = f1.add(&UniPoly::monomial(FieldElement::ONE, 6));
            assert!(y_roots(&f, &BiPoly::y_minus(&big), 6).is_empty());
        }
    }

    #[test]
    fn y_roots_irreducible_has_none() {
        // y^2 + y + x has no polynomial roots: deg f^2 is even
        let f = gf(3);
        let q = BiPoly::from_rows(vec![
            UniPoly::monomial(FieldElement::ONE, 1),
            UniPoly::one(),
            UniPoly::one(),
        ]);
        assert!(y_roots(&f, &q, 3).is_empty());
        assert!(all_polys(&f, 3).iter().all(|p| !q.substitute_y(&f, p).is_zero()));
    }

    #[test]
    fn y_roots_matches_exhaustive_search() {
        let f = gf(3);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for k in 1..=3 {
            let universe = all_polys(&f, k);
            for _ in 0..15 {
                let mut q = BiPoly::from_rows(vec![random_poly(&mut rng, &f, 3), random_poly(&mut rng, &f, 3)]);
                for _ in 0..rng.random_range(0..3) {
                    let root = random_poly(&mut rng, &f, k);
                    q = q.mul(&f, &BiPoly::y_minus(&root));
                }
                if q.is_zero() {
                    continue;
                }
                let mut want: Vec<_> =
                    universe.iter().filter(|p| q.substitute_y(&f, p).is_zero()).cloned().collect();
                want.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
                assert_eq!(y_roots(&f, &q, k), want, "q = {q}");
            }
        }
    }

    fn corrupt(rng: &mut ChaCha8Rng, f: &Field, word: &mut [FieldElement], errors: usize) {
        let n = word.len();
        let mut pos: Vec<usize> = (0..n).collect();
        for i in 0..errors {
            let j = rng.random_range(i..n);
            pos.swap(i, j);
            let e = FieldElement(rng.random_range(1..f.size()) as u16);
            word[pos[i]] = word[pos[i]].add(e);
        }
    }

    #[test]
    fn decode_within_gao_radius_all_algorithms() {
        let f = gf(4);
        let code = CodeSpec::new(f.clone(), 15, 7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for trial in 0..10 {
            let msg = random_poly(&mut rng, &f, 7);
            let mut word = code.encode(&msg).unwrap();
            corrupt(&mut rng, &f, &mut word, 4);
            let mut lists = Vec::new();
            for alg in Algorithm::ALL {
                let res = list_decode(&word, &code, 1, alg, trial).unwrap();
                assert!(res.contains(&msg), "{alg}");
                lists.push(res.messages());
            }
            assert!(lists.windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn decode_rejects_wrong_length() {
        let code = CodeSpec::new(gf(4), 15, 7).unwrap();
        assert!(matches!(
            list_decode(&[FieldElement::ZERO; 14], &code, 1, Algorithm::Binary, 0),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn gao_early_exit() {
        let f = gf(5);
        let code = CodeSpec::new(f.clone(), 31, 15).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let msg = random_poly(&mut rng, &f, 15);
        let mut word = code.encode(&msg).unwrap();
        corrupt(&mut rng, &f, &mut word, 8);
        let opts = DecodeOptions { gao_early_exit: true };
        let res = list_decode_with(&word, &code, 4, Algorithm::Binary, 0, &opts).unwrap();
        assert!(res.gao_exit);
        assert_eq!(res.messages(), vec![msg.clone()]);
        // beyond half the distance the full decoder runs
        corrupt(&mut rng, &f, &mut word, 1);
        let res = list_decode_with(&word, &code, 4, Algorithm::Binary, 0, &opts).unwrap();
        if code.agreement(&msg, &word) == 22 {
            assert!(!res.gao_exit);
            assert!(res.contains(&msg));
        }
    }
}
