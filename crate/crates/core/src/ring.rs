//! Ground rings: the integers and the residue rings `Z/m`.
//!
//! Container types ([`Poly`](crate::Poly), [`Matrix`](crate::Matrix), the
//! sequence types) keep one [`RingSpec`] and store raw [`BigInt`]s that are
//! already in canonical form for it. [`RingElem`] bundles a value with its
//! ring for the checked, mismatch-aware public arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ground ring: `Z`, or `Z/m` with `m >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    modulus: Option<BigInt>,
}

impl RingSpec {
    pub fn integers() -> Self {
        RingSpec { modulus: None }
    }

    pub fn modulo(m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(Error::Invalid(format!("modulus must be at least 2, got {m}")));
        }
        Ok(RingSpec { modulus: Some(m) })
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        self.modulus.as_ref()
    }

    pub fn is_integers(&self) -> bool {
        self.modulus.is_none()
    }

    /// Canonical representative: identity over `Z`, Euclidean remainder over `Z/m`.
    pub fn reduce(&self, v: BigInt) -> BigInt {
        match &self.modulus {
            None => v,
            Some(m) => {
                if v.is_negative() || &v >= m {
                    v.mod_floor(m)
                } else {
                    v
                }
            }
        }
    }

    pub fn from_i64(&self, v: i64) -> BigInt {
        self.reduce(BigInt::from(v))
    }

    pub fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    pub fn one(&self) -> BigInt {
        BigInt::one()
    }

    pub fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a - b)
    }

    pub fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(-a)
    }

    pub fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a * b)
    }

    /// `acc += a * b`, reduced.
    pub fn mul_add_assign(&self, acc: &mut BigInt, a: &BigInt, b: &BigInt) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *acc += a * b;
        if self.modulus.is_some() {
            *acc = self.reduce(std::mem::take(acc));
        }
    }

    pub fn is_unit(&self, a: &BigInt) -> bool {
        match &self.modulus {
            None => a.abs().is_one(),
            Some(m) => a.gcd(m).is_one(),
        }
    }

    pub fn inv(&self, a: &BigInt) -> Option<BigInt> {
        match &self.modulus {
            None => a.abs().is_one().then(|| a.clone()),
            Some(m) => {
                let e = a.extended_gcd(m);
                e.gcd.is_one().then(|| self.reduce(e.x))
            }
        }
    }

    pub fn elem(&self, v: impl Into<BigInt>) -> RingElem {
        RingElem::new(self.clone(), v)
    }

    /// `r^n` by square and multiply.
    pub fn pow(&self, base: &BigInt, mut n: u64) -> BigInt {
        let mut acc = self.reduce(BigInt::one());
        let mut b = base.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            n >>= 1;
            if n > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// Prime-power factorization of the modulus, primes ascending.
    pub fn factor_modulus(&self) -> Result<Vec<(BigInt, u32)>> {
        match &self.modulus {
            None => Err(Error::UnsupportedRing {
                ring: self.clone(),
                what: "modulus factorization",
            }),
            Some(m) => Ok(factorize(m)),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.modulus {
            None => write!(f, "Z"),
            Some(m) => write!(f, "Z/{m}"),
        }
    }
}

impl std::str::FromStr for RingSpec {
    type Err = Error;

    /// Accepts `Z`, `int`, `Z/<m>` and `mod:<m>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("z") || s.eq_ignore_ascii_case("int") {
            return Ok(RingSpec::integers());
        }
        let m = s
            .strip_prefix("Z/")
            .or_else(|| s.strip_prefix("z/"))
            .or_else(|| s.strip_prefix("mod:"))
            .ok_or_else(|| Error::Parse(format!("unrecognized ring '{s}'")))?;
        let m: BigInt = m
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus '{m}'")))?;
        RingSpec::modulo(m).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A ring element together with its ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    value: BigInt,
    ring: RingSpec,
}

impl RingElem {
    pub fn new(ring: RingSpec, value: impl Into<BigInt>) -> Self {
        let value = ring.reduce(value.into());
        RingElem { value, ring }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn into_value(self) -> BigInt {
        self.value
    }

    fn check(&self, other: &RingElem) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.clone(), other.ring.clone()));
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(RingElem { value: self.ring.add(&self.value, &other.value), ring: self.ring.clone() })
    }

    pub fn sub(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(RingElem { value: self.ring.sub(&self.value, &other.value), ring: self.ring.clone() })
    }

    pub fn mul(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(RingElem { value: self.ring.mul(&self.value, &other.value), ring: self.ring.clone() })
    }

    pub fn neg(&self) -> RingElem {
        RingElem { value: self.ring.neg(&self.value), ring: self.ring.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(&self.value)
    }

    pub fn inv_unit(&self) -> Result<RingElem> {
        let value = self.ring.inv(&self.value).ok_or_else(|| Error::NotUnit {
            value: self.value.to_string(),
            ring: self.ring.clone(),
        })?;
        Ok(RingElem { value, ring: self.ring.clone() })
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

const SMALL_PRIMES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const TRIAL_LIMIT: u32 = 10_000;

/// Trial division up to a fixed bound, then Miller-Rabin and Pollard-Brent rho
/// on the cofactor.
fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut primes: Vec<BigInt> = Vec::new();
    let mut d = 2u32;
    while d <= TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        while (&n % &bd).is_zero() {
            primes.push(bd.clone());
            n /= &bd;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        split_composite(n, &mut primes);
    }
    primes.sort();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

fn split_composite(n: BigInt, out: &mut Vec<BigInt>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let mut c = BigInt::one();
    loop {
        if let Some(d) = pollard_brent(&n, &c) {
            let other = &n / &d;
            split_composite(d, out);
            split_composite(other, out);
            return;
        }
        c += 1;
    }
}

fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1: BigInt = n - 1;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in &SMALL_PRIMES {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigInt, c: &BigInt) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    let step = |x: &BigInt| (x * x + c) % n;
    let mut y = BigInt::from(2);
    let mut r: u64 = 1;
    let mut q = BigInt::one();
    let mut g = BigInt::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let batch = 64u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..batch.min(r - k) {
                y = step(&y);
                q = (q * (&x - &y).abs()) % n;
            }
            g = q.gcd(n);
            k += batch;
        }
        r *= 2;
        if r > (1 << 40) {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = step(&ys);
            g = (&x - &ys).abs().gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}
