//! Shared generators and independent oracles for the integration suites.
#![allow(dead_code)]

use linrec::{LinRecSeq, Poly, RingSpec};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use rand::Rng;

pub const MODULI: [i64; 6] = [2, 4, 9, 10, 12, 97];

pub fn rings() -> Vec<RingSpec> {
    let mut out = vec![RingSpec::integers()];
    out.extend(MODULI.iter().map(|&m| RingSpec::modulo(m).unwrap()));
    out
}

pub fn finite_rings() -> Vec<RingSpec> {
    MODULI.iter().map(|&m| RingSpec::modulo(m).unwrap()).collect()
}

pub fn reduce(ring: &RingSpec, v: BigInt) -> BigInt {
    match ring.modulus() {
        Some(m) => v.mod_floor(m),
        None => v,
    }
}

/// Terms by direct unrolling of `u(n+l) = -Σ a_i u(n+i)`.
pub fn naive_terms(ring: &RingSpec, f: &[BigInt], init: &[BigInt], count: usize) -> Vec<BigInt> {
    let l = f.len() - 1;
    let mut out: Vec<BigInt> = init.iter().map(|v| reduce(ring, v.clone())).collect();
    while out.len() < count {
        let n = out.len() - l;
        let mut acc = BigInt::from(0);
        for i in 0..l {
            acc -= &f[i] * &out[n + i];
        }
        out.push(reduce(ring, acc));
    }
    out.truncate(count);
    out
}

pub fn naive_seq_terms(u: &LinRecSeq, count: usize) -> Vec<BigInt> {
    let init: Vec<BigInt> = u.init().iter().map(|v| v[0].clone()).collect();
    naive_terms(u.ring(), u.charpoly().coeffs(), &init, count)
}

/// Integer binomial coefficients `C(n, k)` for `n < rows`.
pub fn binomials(rows: usize) -> Vec<Vec<BigInt>> {
    (0..rows)
        .map(|n| {
            let mut row = vec![BigInt::from(1)];
            for k in 1..=n {
                let prev = row[k - 1].clone();
                row.push(prev * (n - k + 1) / k);
            }
            row
        })
        .collect()
}

pub fn random_monic(rng: &mut impl Rng, ring: &RingSpec, max_deg: usize, span: i64) -> Poly {
    let deg = rng.gen_range(1..=max_deg);
    let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-span..=span)).collect();
    c.push(1);
    Poly::from_i64s(ring, &c)
}

pub fn random_seq(rng: &mut impl Rng, ring: &RingSpec, max_deg: usize, span: i64) -> LinRecSeq {
    let f = random_monic(rng, ring, max_deg, span);
    let init: Vec<i64> = (0..f.deg()).map(|_| rng.gen_range(-span..=span)).collect();
    LinRecSeq::scalar(f, &init).unwrap()
}

/// Random sequence whose characteristic polynomial has a unit constant term.
pub fn random_reversible_seq(rng: &mut impl Rng, ring: &RingSpec, max_deg: usize, span: i64) -> LinRecSeq {
    loop {
        let u = random_seq(rng, ring, max_deg, span);
        if u.charpoly().is_reversible() {
            return u;
        }
    }
}

pub fn ring_strategy() -> impl Strategy<Value = RingSpec> {
    prop::sample::select(rings())
}

pub fn finite_ring_strategy() -> impl Strategy<Value = RingSpec> {
    prop::sample::select(finite_rings())
}

pub fn monic_strategy(ring: RingSpec, max_deg: usize, span: i64) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-span..=span, 1..=max_deg).prop_map(move |mut c| {
        c.push(1);
        Poly::from_i64s(&ring, &c)
    })
}

pub fn seq_strategy(ring: RingSpec, max_deg: usize, span: i64) -> impl Strategy<Value = LinRecSeq> {
    monic_strategy(ring, max_deg, span).prop_flat_map(move |f| {
        let l = f.deg();
        prop::collection::vec(-span..=span, l).prop_map(move |init| LinRecSeq::scalar(f.clone(), &init).unwrap())
    })
}

pub fn any_seq(max_deg: usize, span: i64) -> impl Strategy<Value = LinRecSeq> {
    ring_strategy().prop_flat_map(move |r| seq_strategy(r, max_deg, span))
}

pub fn any_finite_seq(max_deg: usize, span: i64) -> impl Strategy<Value = LinRecSeq> {
    finite_ring_strategy().prop_flat_map(move |r| seq_strategy(r, max_deg, span))
}

pub fn scalars(vals: &[Vec<BigInt>]) -> Vec<BigInt> {
    vals.iter().map(|v| v[0].clone()).collect()
}

/// Largest order `l <= 5` with `m^l <= 10^5`, keeping state spaces small
/// enough for exhaustive cycle detection.
pub fn desk_scale_order(ring: &RingSpec) -> usize {
    let m = ring.modulus().expect("finite ring");
    (1..=5).take_while(|&l| m.pow(l as u32) <= BigInt::from(100_000)).last().unwrap_or(1)
}
