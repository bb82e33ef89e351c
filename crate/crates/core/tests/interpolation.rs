mod common;

use common::{gf, random_points};
use gsinterp::binary::{initial_product_basis, interpolate_with, BinaryOptions};
use gsinterp::groebner::{expected_delta, verify_ideal_basis};
use gsinterp::{interpolate, merge, reencode_interpolate, BiPoly, FieldElement, RngStream, UniPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[test]
fn merge_of_two_ideal_bases() {
    let f = gf(5);
    let pairs: Vec<(usize, usize)> = (1..6).flat_map(|a| (1..=6 - a).map(move |b| (a, b))).collect();
    let cases: Vec<(usize, usize, usize, u64)> = [(15usize, 7usize), (31, 15)]
        .into_iter()
        .flat_map(|(n, k)| pairs.iter().flat_map(move |&(a, b)| (0..10).map(move |s| (n, k, a * 10 + b, s))))
        .collect();
    cases.par_iter().for_each(|&(n, k, ab, seed)| {
        let (r1, r2) = (ab / 10, ab % 10);
        let pts = random_points(&f, n, seed);
        let mut rng = RngStream::new(seed);
        let (p, _) = interpolate(&f, &pts, r1, k, &mut rng).unwrap();
        let (s, _) = interpolate(&f, &pts, r2, k, &mut rng).unwrap();
        let r = r1 + r2;
        let init = initial_product_basis(&f, &p, &s).unwrap();
        assert!(init.delta().unwrap() >= expected_delta(n, r));
        let (b, stats) = merge(&f, &p, &s, expected_delta(n, r), &mut rng).unwrap();
        let verdict = verify_ideal_basis(&f, &b, &pts, r, n);
        assert!(verdict.is_valid(), "n={n} r1={r1} r2={r2} seed={seed}: {verdict:?}");
        assert_eq!((stats.u, stats.v), (p.len() - 1, s.len() - 1));
    });
}

#[test]
fn initial_product_delta_bounds_target() {
    let f = gf(5);
    (0..100u64).into_par_iter().for_each(|seed| {
        let pts = random_points(&f, 31, 1000 + seed);
        let mut rng = RngStream::new(seed);
        let r1 = 1 + seed as usize % 3;
        let (p, _) = interpolate(&f, &pts, r1, 15, &mut rng).unwrap();
        let (s, _) = interpolate(&f, &pts, 1, 15, &mut rng).unwrap();
        let init = initial_product_basis(&f, &p, &s).unwrap();
        assert!(init.delta().unwrap() >= expected_delta(31, r1 + 1));
        assert_eq!(init.len(), p.len() + s.len() - 1);
    });
}

#[test]
fn r17_merge_with_small_factor() {
    // I_16 * I_1 where reduction pushes a remainder above the product's top slot
    let f = gf(5);
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let pts = gsinterp::InterpPoints::new(
        (0..31)
            .map(|i| (f.alpha_pow(i), FieldElement(rng.random_range(0..32))))
            .collect(),
    )
    .unwrap();
    for prune in [true, false] {
        let opts = BinaryOptions {
            prune,
            ..BinaryOptions::default()
        };
        let (b, stats) = interpolate_with(&f, &pts, 17, 15, &mut RngStream::new(55), &opts).unwrap();
        assert!(!stats.fallback_used());
        assert!(verify_ideal_basis(&f, &b, &pts, 17, 31).is_valid());
    }
}

#[test]
fn reencoded_deterministic_and_valid() {
    let f = gf(6);
    let pts = random_points(&f, 63, 9);
    let a = reencode_interpolate(&f, &pts, 3, 30, &mut RngStream::new(4)).unwrap();
    let b = reencode_interpolate(&f, &pts, 3, 30, &mut RngStream::new(4)).unwrap();
    assert_eq!(a.0.basis, b.0.basis);
    assert_eq!(a.1, b.1);
    let back = a.0.back_substitute_all(&f).unwrap();
    assert!(verify_ideal_basis(&f, &back, &pts, 3, 63).is_valid());
}

#[test]
fn back_substitute_of_random_combination_vanishes() {
    let f = gf(5);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for r in 1..=3 {
        let pts = random_points(&f, 31, 40 + r as u64);
        let (re, _) = reencode_interpolate(&f, &pts, r, 15, &mut RngStream::new(1)).unwrap();
        for _ in 0..10 {
            let mut p = BiPoly::zero();
            for b in re.basis.polys() {
                let c = UniPoly::from_coeffs(
                    (0..3).map(|_| FieldElement(rng.random_range(0..32))).collect(),
                );
                p.add_assign(&b.mul_uni(&f, &c));
            }
            let q = gsinterp::binary::back_substitute(&f, &p, &re.g, &re.psi, r).unwrap();
            for &(x, y) in pts.points() {
                assert!(q.has_root_mult(&f, x, y, r));
            }
        }
    }
}
