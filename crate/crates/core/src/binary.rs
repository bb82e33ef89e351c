//! Binary interpolation: Groebner bases of I_r = I_1^r by square-and-multiply
//! over a randomized ideal product, plus the variant that works in
//! re-encoded coordinates.

use std::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::groebner::{expected_delta, InterpPoints, PolyBasis};
use crate::poly::{BiPoly, Monomial, TermOrder, UniPoly};

/// Random passes a merge may spend before it falls back to folding every
/// pairwise product.
pub const MAX_RANDOM_ITERS: usize = 64;

/// Seeded source of uniformly distributed field elements.
///
/// Two streams built from the same `(seed, stream)` produce identical draws.
#[derive(Clone, Debug)]
pub struct RngStream {
    seed: u64,
    stream: u64,
    counter: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> RngStream {
        RngStream::with_stream(seed, 0)
    }

    /// An independent stream for the same seed.
    pub fn with_stream(seed: u64, stream: u64) -> RngStream {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        RngStream {
            seed,
            stream,
            counter: 0,
            rng,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    /// Number of field elements drawn so far.
    pub fn counter(&self) -> u64 {
        self.counter
    }

    pub fn draw(&mut self, f: &Field) -> FieldElement {
        self.counter += 1;
        FieldElement(self.rng.random_range(0..f.size()) as u16)
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.rng.fill_bytes(dst)
    }
}

/// Counters for one merge call.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MergeStats {
    /// Root multiplicity of the product; set by the interpolation driver.
    pub r: usize,
    /// Highest index in the first factor basis.
    pub u: usize,
    /// Highest index in the second factor basis.
    pub v: usize,
    /// Passes through the random-combination loop.
    pub random_iterations: usize,
    /// Reduction steps over all folds, initial basis excluded.
    pub reduce_steps: usize,
    pub fallback_used: bool,
}

impl MergeStats {
    pub const CSV_HEADER: &'static str = "r,u,v,random_iterations,reduce_steps,fallback_used";

    /// Products in the initial basis, u + v + 1.
    pub fn floor(&self) -> usize {
        self.u + self.v + 1
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.r, self.u, self.v, self.random_iterations, self.reduce_steps, self.fallback_used
        )
    }
}

impl fmt::Display for MergeStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.csv_row())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InterpStats {
    /// Reduction steps spent building the basis of I_1.
    pub initial_reduce_steps: usize,
    /// Size of the basis of I_1.
    pub initial_basis_len: usize,
    pub merges: Vec<MergeStats>,
}

impl InterpStats {
    pub fn merge_calls(&self) -> usize {
        self.merges.len()
    }

    pub fn random_iterations(&self) -> usize {
        self.merges.iter().map(|m| m.random_iterations).sum()
    }

    pub fn reduce_steps(&self) -> usize {
        self.initial_reduce_steps + self.merges.iter().map(|m| m.reduce_steps).sum::<usize>()
    }

    pub fn fallback_used(&self) -> bool {
        self.merges.iter().any(|m| m.fallback_used)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinaryOptions {
    pub max_random_iters: usize,
    /// Drop redundant pure-y elements after every merge.
    pub prune: bool,
}

impl Default for BinaryOptions {
    fn default() -> Self {
        BinaryOptions {
            max_random_iters: MAX_RANDOM_ITERS,
            prune: true,
        }
    }
}

/// Leading terms of a basis whose i-th element has leading y-degree i.
fn indexed_leading_terms(b: &PolyBasis, name: &str) -> Result<Vec<Monomial>> {
    let lts = b.leading_terms().map_err(|_| {
        Error::PreconditionViolated(format!("{name} contains a zero polynomial"))
    })?;
    if lts.is_empty() {
        return Err(Error::PreconditionViolated(format!("{name} is empty")));
    }
    if let Some((i, lt)) = lts.iter().enumerate().find(|(i, lt)| lt.y != *i) {
        return Err(Error::PreconditionViolated(format!(
            "{name}[{i}] has leading y-degree {}",
            lt.y
        )));
    }
    Ok(lts)
}

/// Delta over the elements with leading y-degree at most `top`. Reduction
/// can push a remainder above the top slot; such elements are redundant
/// once the top slot holds a pure power of y.
fn delta_upto(b: &PolyBasis, top: usize) -> Result<i64> {
    Ok(b.leading_terms()?
        .iter()
        .filter(|lt| lt.y <= top)
        .map(|lt| lt.x as i64)
        .sum())
}

fn random_combination(f: &Field, b: &PolyBasis, rng: &mut RngStream) -> BiPoly {
    loop {
        let mut acc = BiPoly::zero();
        for p in b.polys() {
            let c = rng.draw(f);
            acc.add_scaled_shifted(f, c, 0, 0, p);
        }
        if !acc.is_zero() {
            return acc;
        }
    }
}

/// The products `P_(i-j) S_j`, i = 0..=u+v, with j chosen so the leading
/// x-degree is smallest; ties go to the lowest j.
pub fn initial_product_basis(f: &Field, p: &PolyBasis, s: &PolyBasis) -> Result<PolyBasis> {
    if p.ord() != s.ord() {
        return Err(Error::PreconditionViolated(
            "factor bases use different term orders".into(),
        ));
    }
    let lp = indexed_leading_terms(p, "first factor")?;
    let ls = indexed_leading_terms(s, "second factor")?;
    let (u, v) = (lp.len() - 1, ls.len() - 1);
    let polys = (0..=u + v)
        .map(|i| {
            let j = (i.saturating_sub(u)..=i.min(v))
                .min_by_key(|&j| (lp[i - j].x + ls[j].x, j))
                .unwrap();
            p.polys()[i - j].mul(f, &s.polys()[j])
        })
        .collect();
    Ok(PolyBasis::new(polys, p.ord()))
}

/// Groebner basis of the product of two ideals given by bases in the shape
/// produced by [`interpolate`]: leading y-degrees 0..=u and 0..=v.
///
/// Starts from the leading-term-minimal products `P_(i-j) S_j` and folds in
/// products of random combinations until delta drops to `delta0`.
pub fn merge(
    f: &Field,
    p: &PolyBasis,
    s: &PolyBasis,
    delta0: i64,
    rng: &mut RngStream,
) -> Result<(PolyBasis, MergeStats)> {
    merge_with_limit(f, p, s, delta0, rng, MAX_RANDOM_ITERS)
}

pub fn merge_with_limit(
    f: &Field,
    p: &PolyBasis,
    s: &PolyBasis,
    delta0: i64,
    rng: &mut RngStream,
    max_random_iters: usize,
) -> Result<(PolyBasis, MergeStats)> {
    let mut basis = initial_product_basis(f, p, s)?;
    let (u, v) = (p.len() - 1, s.len() - 1);
    let mut stats = MergeStats {
        u,
        v,
        ..MergeStats::default()
    };
    let top = u + v;
    let mut delta = delta_upto(&basis, top)?;

    while delta > delta0 && stats.random_iterations < max_random_iters {
        let a = random_combination(f, p, rng);
        let b = random_combination(f, s, rng);
        stats.reduce_steps += basis.extend_reduce(f, a.mul(f, &b))?;
        stats.random_iterations += 1;
        delta = delta_upto(&basis, top)?;
    }

    if delta > delta0 {
        stats.fallback_used = true;
        'pairs: for pi in p.polys() {
            for sj in s.polys() {
                stats.reduce_steps += basis.extend_reduce(f, pi.mul(f, sj))?;
                delta = delta_upto(&basis, top)?;
                if delta <= delta0 {
                    break 'pairs;
                }
            }
        }
        if delta > delta0 {
            return Err(Error::FallbackExhausted {
                target: delta0,
                reached: delta,
            });
        }
    }
    let ord = basis.ord();
    let mut polys = basis.into_polys();
    polys.retain(|q| q.lt(&ord).is_some_and(|lt| lt.y <= top));
    Ok((PolyBasis::new(polys, ord), stats))
}

/// Keeps only the smallest element among those whose leading term
/// satisfies `is_pure`.
pub fn prune_where(b: &PolyBasis, is_pure: impl Fn(&Monomial) -> bool) -> PolyBasis {
    let ord = b.ord();
    let keep = b
        .polys()
        .iter()
        .filter_map(|p| p.lt(&ord))
        .filter(|lt| is_pure(lt))
        .min_by(|a, c| ord.cmp(a, c));
    let polys = b
        .polys()
        .iter()
        .filter(|p| match (p.lt(&ord), keep) {
            (Some(lt), Some(k)) if is_pure(&lt) => lt.exponents() == k.exponents(),
            _ => true,
        })
        .cloned()
        .collect();
    PolyBasis::new(polys, ord)
}

/// Drops all but the smallest element whose leading term is a pure power of y.
pub fn prune(b: &PolyBasis) -> PolyBasis {
    prune_where(b, |lt| lt.x == 0)
}

/// Merge calls made by the square-and-multiply loop for multiplicity r:
/// one squaring per bit below the top bit and one multiplication per set
/// bit below the top bit.
pub fn merge_call_count(r: usize) -> usize {
    assert!(r >= 1);
    let top = usize::BITS - 1 - r.leading_zeros();
    top as usize + r.count_ones() as usize - 1
}

/// Bits of r below the top bit, most significant first.
fn bits_below_top(r: usize) -> impl Iterator<Item = bool> {
    let top = usize::BITS - 1 - r.leading_zeros();
    (0..top).rev().map(move |j| r >> j & 1 == 1)
}

const REPEAT_LIMIT_SLACK: usize = 2;

/// Groebner basis of I_1: fold y^j (y - T) into (phi) until the top
/// element's leading term is y^j.
pub fn initial_ideal_basis(f: &Field, pts: &InterpPoints, k: usize) -> Result<(PolyBasis, usize)> {
    let ord = TermOrder::list_decoding(k);
    let phi = pts.vanishing_poly(f);
    let t = pts.interpolating_poly(f)?;
    let line = BiPoly::y_minus(&t);
    let mut g = PolyBasis::new(vec![BiPoly::from_uni(phi)], ord);
    let mut steps = 0;
    for j in 0..pts.len() + REPEAT_LIMIT_SLACK {
        steps += g.extend_reduce(f, line.shift_y(j))?;
        if g
            .with_leading_ydeg(j + 1)
            .and_then(|p| p.lt(&ord))
            .is_some_and(|lt| lt.x == 0)
        {
            return Ok((g, steps));
        }
    }
    Err(Error::PreconditionViolated(
        "no pure power of y appeared while building the basis of I_1".into(),
    ))
}

fn check_interp_args(pts: &InterpPoints, r: usize, k: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidParameters("multiplicity must be at least 1".into()));
    }
    if k == 0 || k >= pts.len() {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k < n, got k={k}, n={}",
            pts.len()
        )));
    }
    Ok(())
}

/// Groebner basis of I_r under the (1, k-1) ordering.
pub fn interpolate(
    f: &Field,
    pts: &InterpPoints,
    r: usize,
    k: usize,
    rng: &mut RngStream,
) -> Result<(PolyBasis, InterpStats)> {
    interpolate_with(f, pts, r, k, rng, &BinaryOptions::default())
}

pub fn interpolate_with(
    f: &Field,
    pts: &InterpPoints,
    r: usize,
    k: usize,
    rng: &mut RngStream,
    opts: &BinaryOptions,
) -> Result<(PolyBasis, InterpStats)> {
    check_interp_args(pts, r, k)?;
    let n = pts.len();
    let (g, steps) = initial_ideal_basis(f, pts, k)?;
    let mut stats = InterpStats {
        initial_reduce_steps: steps,
        initial_basis_len: g.len(),
        merges: Vec::new(),
    };
    let mut b = g.clone();
    let mut big_r = 1;
    for bit in bits_below_top(r) {
        big_r *= 2;
        let (next, mut ms) =
            merge_with_limit(f, &b, &b, expected_delta(n, big_r), rng, opts.max_random_iters)?;
        ms.r = big_r;
        stats.merges.push(ms);
        b = if opts.prune { prune(&next) } else { next };
        if bit {
            big_r += 1;
            let (next, mut ms) =
                merge_with_limit(f, &b, &g, expected_delta(n, big_r), rng, opts.max_random_iters)?;
            ms.r = big_r;
            stats.merges.push(ms);
            b = if opts.prune { prune(&next) } else { next };
        }
    }
    Ok((b, stats))
}

/// Merge threshold in re-encoded coordinates for factor bases of sizes
/// `u1`, `u2` and product multiplicity `big_r`.
pub fn reencode_threshold(u1: usize, u2: usize, big_r: usize, n: usize, k: usize) -> i64 {
    let (u1, u2, big_r, n, k) = (u1 as i64, u2 as i64, big_r as i64, n as i64, k as i64);
    let s = u1 + u2;
    (n - k) * big_r * (big_r + 1) / 2 + k * (s - 2 - big_r) * (s - 1 - big_r) / 2
}

/// Result of interpolation in the coordinates y = g(x) + z psi(x).
#[derive(Clone, Debug)]
pub struct ReencodedBasis {
    /// Basis in (x, z) under the (1, -1) ordering.
    pub basis: PolyBasis,
    /// prod over the first k locators of (x - x_i).
    pub psi: UniPoly,
    /// prod over the remaining locators.
    pub theta: UniPoly,
    /// T = h psi + g with deg g < k.
    pub g: UniPoly,
    pub h: UniPoly,
    pub r: usize,
    pub k: usize,
}

impl ReencodedBasis {
    /// Every basis element mapped back to (x, y), under the (1, k-1) ordering.
    pub fn back_substitute_all(&self, f: &Field) -> Result<PolyBasis> {
        let polys = self
            .basis
            .polys()
            .iter()
            .map(|p| back_substitute(f, p, &self.g, &self.psi, self.r))
            .collect::<Result<Vec<_>>>()?;
        let mut out = PolyBasis::new(polys, TermOrder::list_decoding(self.k));
        out.sort_by_leading_ydeg();
        Ok(out)
    }

    /// The smallest element in (x, y) coordinates.
    pub fn smallest_original(&self, f: &Field) -> Result<BiPoly> {
        let p = self.basis.smallest().ok_or(Error::ZeroPolynomial)?;
        back_substitute(f, p, &self.g, &self.psi, self.r)
    }
}

fn prune_reencoded(b: &PolyBasis, big_r: usize, k: usize) -> PolyBasis {
    prune_where(b, |lt| lt.x as i64 == (lt.y as i64 - big_r as i64) * k as i64)
}

/// Binary interpolation after re-encoding on the first k points.
pub fn reencode_interpolate(
    f: &Field,
    pts: &InterpPoints,
    r: usize,
    k: usize,
    rng: &mut RngStream,
) -> Result<(ReencodedBasis, InterpStats)> {
    reencode_interpolate_with(f, pts, r, k, rng, &BinaryOptions::default())
}

pub fn reencode_interpolate_with(
    f: &Field,
    pts: &InterpPoints,
    r: usize,
    k: usize,
    rng: &mut RngStream,
    opts: &BinaryOptions,
) -> Result<(ReencodedBasis, InterpStats)> {
    check_interp_args(pts, r, k)?;
    let n = pts.len();
    let ord = TermOrder::reencoded();
    let xs = pts.xs();
    let psi = UniPoly::from_roots(f, &xs[..k]);
    let theta = UniPoly::from_roots(f, &xs[k..]);
    let t = pts.interpolating_poly(f)?;
    let (h, g_rem) = t.divmod(f, &psi)?;

    let mut g = PolyBasis::new(vec![BiPoly::from_uni(theta.clone())], ord);
    let mut steps = 0;
    let mut psi_pow = UniPoly::one();
    let mut done = false;
    for j in 0..n + REPEAT_LIMIT_SLACK {
        // (psi z)^j (z - h)
        let mut rows = vec![UniPoly::zero(); j];
        rows.push(h.mul(f, &psi_pow));
        rows.push(psi_pow.clone());
        steps += g.extend_reduce(f, BiPoly::from_rows(rows))?;
        psi_pow = psi_pow.mul(f, &psi);
        if g
            .with_leading_ydeg(j + 1)
            .and_then(|p| p.lt(&ord))
            .is_some_and(|lt| lt.x == j * k)
        {
            done = true;
            break;
        }
    }
    if !done {
        return Err(Error::PreconditionViolated(
            "re-encoded basis of I_1 never reached its terminating shape".into(),
        ));
    }

    let mut stats = InterpStats {
        initial_reduce_steps: steps,
        initial_basis_len: g.len(),
        merges: Vec::new(),
    };
    let mut b = g.clone();
    let mut big_r = 1;
    for bit in bits_below_top(r) {
        big_r *= 2;
        let d0 = reencode_threshold(b.len(), b.len(), big_r, n, k);
        let (next, mut ms) = merge_with_limit(f, &b, &b, d0, rng, opts.max_random_iters)?;
        ms.r = big_r;
        stats.merges.push(ms);
        b = if opts.prune { prune_reencoded(&next, big_r, k) } else { next };
        if bit {
            big_r += 1;
            let d0 = reencode_threshold(b.len(), g.len(), big_r, n, k);
            let (next, mut ms) = merge_with_limit(f, &b, &g, d0, rng, opts.max_random_iters)?;
            ms.r = big_r;
            stats.merges.push(ms);
            b = if opts.prune { prune_reencoded(&next, big_r, k) } else { next };
        }
    }
    Ok((
        ReencodedBasis {
            basis: b,
            psi,
            theta,
            g: g_rem,
            h,
            r,
            k,
        },
        stats,
    ))
}

/// Maps P(x, z) to Q(x, y) = sum_j p_j(x) (y - g(x))^j psi(x)^(r - j); for
/// j > r the row is divided by psi^(j - r), which must be exact.
pub fn back_substitute(f: &Field, p: &BiPoly, g: &UniPoly, psi: &UniPoly, r: usize) -> Result<BiPoly> {
    let Some(d) = p.ydeg() else {
        return Ok(BiPoly::zero());
    };
    let mut psi_pows = vec![UniPoly::one()];
    for i in 1..=r.max(d.saturating_sub(r)) {
        let next = psi_pows[i - 1].mul(f, psi);
        psi_pows.push(next);
    }
    let line = BiPoly::y_minus(g);
    let mut acc = BiPoly::zero();
    for j in (0..=d).rev() {
        let row = p.row(j);
        let c = if j <= r {
            row.mul(f, &psi_pows[r - j])
        } else {
            row.div_exact(f, &psi_pows[j - r])?
        };
        acc = acc.mul(f, &line);
        acc.add_assign(&BiPoly::from_uni(c));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{iia, same_leading_monomials, verify_ideal_basis, verify_module_basis};

    fn gf32() -> Field {
        Field::new(5, 0x25).unwrap()
    }

    fn random_points(f: &Field, n: usize, seed: u64) -> InterpPoints {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        InterpPoints::new(
            (0..n)
                .map(|i| {
                    (
                        f.alpha_pow(i as i64),
                        FieldElement(rng.random_range(0..f.size() as u16)),
                    )
                })
                .collect(),
        )
        .unwrap()
    }

    fn mono(x: usize, y: usize) -> BiPoly {
        BiPoly::monomial(FieldElement::ONE, x, y)
    }

    #[test]
    fn rng_stream_reproducible() {
        let f = gf32();
        let mut a = RngStream::new(42);
        let mut b = RngStream::new(42);
        let da: Vec<_> = (0..50).map(|_| a.draw(&f)).collect();
        let db: Vec<_> = (0..50).map(|_| b.draw(&f)).collect();
        assert_eq!(da, db);
        assert_eq!(a.counter(), 50);
        let mut c = RngStream::with_stream(42, 1);
        let dc: Vec<_> = (0..50).map(|_| c.draw(&f)).collect();
        assert_ne!(da, dc);
    }

    #[test]
    fn prune_examples() {
        let ord = TermOrder::list_decoding(15);
        let b = PolyBasis::new(vec![mono(5, 0), mono(2, 1), mono(0, 2), mono(0, 3)], ord);
        let p = prune(&b);
        assert_eq!(p.polys(), &[mono(5, 0), mono(2, 1), mono(0, 2)]);
        let b = PolyBasis::new(vec![mono(5, 0), mono(2, 1), mono(0, 2)], ord);
        assert_eq!(prune(&b), b);
    }

    #[test]
    fn merge_call_counts() {
        assert_eq!(merge_call_count(1), 0);
        assert_eq!(merge_call_count(2), 1);
        assert_eq!(merge_call_count(4), 2);
        assert_eq!(merge_call_count(5), 3);
        assert_eq!(merge_call_count(17), 5);
    }

    #[test]
    fn threshold_values() {
        assert_eq!(reencode_threshold(2, 2, 2, 31, 15), 48);
        assert_eq!(reencode_threshold(2, 2, 1, 31, 15), 31);
        // u1 + u2 - 2 = R kills the second term
        for big_r in 1..6 {
            assert_eq!(
                reencode_threshold(3, big_r - 1, big_r, 31, 15),
                (16 * big_r * (big_r + 1) / 2) as i64
            );
        }
    }

    #[test]
    fn squaring_initial_basis() {
        let f = gf32();
        let pts = random_points(&f, 31, 1);
        let (g, _) = initial_ideal_basis(&f, &pts, 15).unwrap();
        let mut rng = RngStream::new(1);
        let (b, stats) = merge(&f, &g, &g, expected_delta(31, 2), &mut rng).unwrap();
        assert!(verify_ideal_basis(&f, &b, &pts, 2, 31).is_valid());
        assert_eq!(stats.u, g.len() - 1);
        assert!(!stats.fallback_used);
    }

    #[test]
    fn merge_rejects_misindexed_factor() {
        let f = gf32();
        let ord = TermOrder::list_decoding(15);
        let bad = PolyBasis::new(vec![mono(3, 1)], ord);
        let good = PolyBasis::new(vec![mono(0, 0)], ord);
        let mut rng = RngStream::new(0);
        assert!(matches!(
            merge(&f, &bad, &good, 0, &mut rng),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn merge_fallback_reaches_target() {
        let f = gf32();
        let pts = random_points(&f, 31, 2);
        let (g, _) = initial_ideal_basis(&f, &pts, 15).unwrap();
        let mut rng = RngStream::new(3);
        let (b, stats) = merge_with_limit(&f, &g, &g, expected_delta(31, 2), &mut rng, 0).unwrap();
        assert!(stats.fallback_used);
        assert_eq!(stats.random_iterations, 0);
        assert!(verify_ideal_basis(&f, &b, &pts, 2, 31).is_valid());
    }

    #[test]
    fn interpolate_r1_is_initial_basis() {
        let f = gf32();
        let pts = random_points(&f, 31, 4);
        let (b, stats) = interpolate(&f, &pts, 1, 15, &mut RngStream::new(0)).unwrap();
        assert_eq!(stats.merge_calls(), 0);
        assert_eq!(b, initial_ideal_basis(&f, &pts, 15).unwrap().0);
        assert!(verify_ideal_basis(&f, &b, &pts, 1, 31).is_valid());
    }

    #[test]
    fn interpolate_r2_params() {
        let f = gf32();
        let pts = random_points(&f, 31, 5);
        let (b, stats) = interpolate(&f, &pts, 2, 15, &mut RngStream::new(5)).unwrap();
        assert_eq!(stats.merge_calls(), 1);
        assert_eq!(b.delta().unwrap(), 93);
        let q = b.smallest().unwrap();
        assert!(q.wdeg(1, 14).unwrap() <= 44);
        let it = iia(&f, &pts, 2, 4, TermOrder::list_decoding(15)).unwrap();
        let (a, c) = (q.lt(&b.ord()).unwrap(), it.smallest().unwrap().lt(&it.ord()).unwrap());
        assert_eq!(a.exponents(), c.exponents());
    }

    #[test]
    fn interpolate_counts_merges() {
        let f = gf32();
        let pts = random_points(&f, 15, 6);
        for r in [4usize, 5] {
            let (b, stats) = interpolate(&f, &pts, r, 7, &mut RngStream::new(r as u64)).unwrap();
            assert_eq!(stats.merge_calls(), merge_call_count(r));
            assert!(verify_ideal_basis(&f, &b, &pts, r, 15).is_valid());
        }
        let (_, stats) = interpolate(&f, &pts, 5, 7, &mut RngStream::new(0)).unwrap();
        let rs: Vec<_> = stats.merges.iter().map(|m| m.r).collect();
        assert_eq!(rs, vec![2, 4, 5]);
    }

    #[test]
    fn interpolate_is_deterministic() {
        let f = gf32();
        let pts = random_points(&f, 31, 7);
        let a = interpolate(&f, &pts, 3, 15, &mut RngStream::new(9)).unwrap();
        let b = interpolate(&f, &pts, 3, 15, &mut RngStream::new(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unpruned_interpolation_still_valid() {
        let f = gf32();
        let pts = random_points(&f, 31, 8);
        let opts = BinaryOptions {
            prune: false,
            ..BinaryOptions::default()
        };
        let (b, _) = interpolate_with(&f, &pts, 4, 15, &mut RngStream::new(1), &opts).unwrap();
        assert!(verify_ideal_basis(&f, &b, &pts, 4, 31).is_valid());
        let (pb, _) = interpolate(&f, &pts, 4, 15, &mut RngStream::new(1)).unwrap();
        let (sa, sb) = (b.smallest().unwrap(), pb.smallest().unwrap());
        assert_eq!(sa.lt(&b.ord()).unwrap().exponents(), sb.lt(&pb.ord()).unwrap().exponents());
    }

    #[test]
    fn reencode_rejects_k_zero() {
        let f = gf32();
        let pts = random_points(&f, 31, 9);
        assert!(matches!(
            reencode_interpolate(&f, &pts, 1, 0, &mut RngStream::new(0)),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn back_substitute_simple_cases() {
        let f = gf32();
        let pts = random_points(&f, 31, 10);
        let k = 15;
        let xs = pts.xs();
        let psi = UniPoly::from_roots(&f, &xs[..k]);
        let theta = UniPoly::from_roots(&f, &xs[k..]);
        let t = pts.interpolating_poly(&f).unwrap();
        let (h, g) = t.divmod(&f, &psi).unwrap();
        let phi = pts.vanishing_poly(&f);
        for r in 1..4 {
            let p = BiPoly::from_uni(theta.pow(&f, r));
            let q = back_substitute(&f, &p, &g, &psi, r).unwrap();
            assert_eq!(q, BiPoly::from_uni(phi.pow(&f, r)));
        }
        let q = back_substitute(&f, &BiPoly::y_minus(&h), &g, &psi, 1).unwrap();
        assert_eq!(q, BiPoly::y_minus(&t));
        // a row above r that psi does not divide
        let bad = BiPoly::monomial(FieldElement::ONE, 0, 2);
        assert_eq!(back_substitute(&f, &bad, &g, &psi, 1), Err(Error::InexactDivision));
    }

    #[test]
    fn reencoded_matches_plain() {
        let f = gf32();
        for (r, seed) in [(1usize, 11u64), (2, 12), (3, 13), (4, 14)] {
            let pts = random_points(&f, 31, seed);
            let (re, stats) = reencode_interpolate(&f, &pts, r, 15, &mut RngStream::new(seed)).unwrap();
            assert_eq!(stats.merge_calls(), merge_call_count(r));
            let back = re.back_substitute_all(&f).unwrap();
            assert!(verify_ideal_basis(&f, &back, &pts, r, 31).is_valid(), "r={r}");
            assert!(verify_module_basis(&f, &back, &pts, r).is_valid());
            let (plain, _) = interpolate(&f, &pts, r, 15, &mut RngStream::new(seed)).unwrap();
            assert!(same_leading_monomials(&back, &plain), "r={r}");
            let q = re.smallest_original(&f).unwrap();
            let ps = plain.smallest().unwrap();
            let c = f.div(ps.lt(&plain.ord()).unwrap().coeff, q.lt(&plain.ord()).unwrap().coeff).unwrap();
            assert_eq!(&q.scale(&f, c), ps);
        }
    }
}
