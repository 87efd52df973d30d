//! Univariate polynomials over a [`RingSpec`], coefficients ascending by degree.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::RingSpec;

/// A polynomial in canonical form: the zero polynomial has no coefficients,
/// otherwise the last coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: RingSpec,
    coeffs: Vec<BigInt>,
}

/// Result of splitting a monic `f` into an x-power and a reversible part.
///
/// `x^d * q` lies in the ideal generated by `f`. Over `Z` the split is exact
/// (`f = x^d q`) and `q` may have a nonunit constant term, flagged by
/// `unit_constant == false`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSplit {
    pub d: usize,
    pub q: Poly,
    pub unit_constant: bool,
}

impl Poly {
    pub fn new(ring: RingSpec, coeffs: Vec<BigInt>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| ring.reduce(c)).collect();
        let mut p = Poly { ring, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(ring: &RingSpec, coeffs: &[i64]) -> Self {
        Poly::new(ring.clone(), coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(ring: &RingSpec) -> Self {
        Poly { ring: ring.clone(), coeffs: Vec::new() }
    }

    pub fn one(ring: &RingSpec) -> Self {
        Poly::new(ring.clone(), vec![BigInt::one()])
    }

    /// `x^n`.
    pub fn x_pow(ring: &RingSpec, n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        Poly { ring: ring.clone(), coeffs }
    }

    /// `x - r`.
    pub fn linear(ring: &RingSpec, r: &BigInt) -> Self {
        Poly::new(ring.clone(), vec![-r, BigInt::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    fn same_ring(&self, other: &Poly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.clone(), other.ring.clone()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.same_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Poly::new(self.ring.clone(), coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.same_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Ok(Poly::new(self.ring.clone(), coeffs))
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.ring.clone(), self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.ring.clone(), self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.same_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(self.ring.clone(), out)
    }

    pub fn pow(&self, mut n: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `x^k * self`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { ring: self.ring.clone(), coeffs }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = self.ring.reduce(acc * x + c);
        }
        acc
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn is_reversible(&self) -> bool {
        self.is_monic() && self.ring.is_unit(&self.constant_term())
    }

    pub(crate) fn require_monic(&self) -> Result<()> {
        if !self.is_monic() {
            return Err(Error::NotMonic(self.to_string()));
        }
        Ok(())
    }

    pub(crate) fn require_monic_nonconstant(&self) -> Result<()> {
        self.require_monic()?;
        if self.deg() == 0 {
            return Err(Error::ConstantPolynomial(self.to_string()));
        }
        Ok(())
    }

    pub(crate) fn require_reversible(&self) -> Result<()> {
        if !self.is_reversible() {
            return Err(Error::NotReversible(self.to_string()));
        }
        Ok(())
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, f: &Poly) -> Result<(Poly, Poly)> {
        self.same_ring(f)?;
        f.require_monic()?;
        let l = f.deg();
        let mut rem = self.coeffs.clone();
        if rem.len() <= l {
            return Ok((Poly::zero(&self.ring), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - l];
        for i in (l..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for j in 0..l {
                if !f.coeffs[j].is_zero() {
                    rem[i - l + j] = self.ring.reduce(&rem[i - l + j] - &c * &f.coeffs[j]);
                }
            }
            quot[i - l] = c;
        }
        rem.truncate(l);
        Ok((Poly::new(self.ring.clone(), quot), Poly::new(self.ring.clone(), rem)))
    }

    pub fn rem_by_monic(&self, f: &Poly) -> Result<Poly> {
        Ok(self.div_rem_monic(f)?.1)
    }

    /// In-place reduction of a coefficient buffer modulo the monic `f`.
    fn reduce_buf(ring: &RingSpec, buf: &mut Vec<BigInt>, f: &Poly) {
        let l = f.deg();
        for i in (l..buf.len()).rev() {
            let c = std::mem::take(&mut buf[i]);
            if c.is_zero() {
                continue;
            }
            for j in 0..l {
                if !f.coeffs[j].is_zero() {
                    buf[i - l + j] -= &c * &f.coeffs[j];
                }
            }
            if ring.modulus().is_some() {
                for v in &mut buf[i - l..i] {
                    *v = ring.reduce(std::mem::take(v));
                }
            }
        }
        buf.truncate(l);
    }

    /// `(a * b) mod f` for `a`, `b` already reduced.
    fn mul_mod(a: &Poly, b: &Poly, f: &Poly) -> Poly {
        let ring = &f.ring;
        if a.is_zero() || b.is_zero() {
            return Poly::zero(ring);
        }
        let mut buf = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                buf[i + j] += x * y;
            }
        }
        for v in &mut buf {
            *v = ring.reduce(std::mem::take(v));
        }
        Self::reduce_buf(ring, &mut buf, f);
        Poly::new(ring.clone(), buf)
    }

    /// `x^n mod f` by left-to-right square and multiply.
    pub fn x_power_rem(n: u64, f: &Poly) -> Result<Poly> {
        f.require_monic_nonconstant()?;
        let ring = &f.ring;
        let mut acc = Poly::one(ring);
        for bit in (0..64 - n.leading_zeros()).rev() {
            acc = Self::mul_mod(&acc, &acc, f);
            if (n >> bit) & 1 == 1 {
                let mut buf = acc.shift_up(1).coeffs;
                Self::reduce_buf(ring, &mut buf, f);
                acc = Poly::new(ring.clone(), buf);
            }
        }
        Ok(acc)
    }

    /// `x^z mod q` in `R[x, x^-1] / (q)` for a reversible `q`, any `z`.
    pub fn x_laurent_power_rem(z: i64, q: &Poly) -> Result<Poly> {
        q.require_reversible()?;
        q.require_monic_nonconstant()?;
        if z >= 0 {
            return Self::x_power_rem(z as u64, q);
        }
        let base = q.x_inverse_rem()?;
        let mut n = z.unsigned_abs();
        let mut acc = Poly::one(&q.ring);
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = Self::mul_mod(&acc, &b, q);
            }
            n >>= 1;
            if n > 0 {
                b = Self::mul_mod(&b, &b, q);
            }
        }
        Ok(acc)
    }

    /// `x^-1 mod q = -q(0)^-1 (a_1 + a_2 x + ... + x^(l-1))`.
    fn x_inverse_rem(&self) -> Result<Poly> {
        let inv = self
            .ring
            .inv(&self.constant_term())
            .ok_or_else(|| Error::NotReversible(self.to_string()))?;
        let minus_inv = self.ring.neg(&inv);
        Ok(Poly::new(
            self.ring.clone(),
            self.coeffs[1..].iter().map(|c| c * &minus_inv).collect(),
        ))
    }

    /// Split off the x-power part: returns `(d, q)` with `q` reversible monic
    /// and `x^d q` in the ideal `(f)`.
    pub fn split_x_part(&self) -> Result<XSplit> {
        self.require_monic()?;
        match self.ring.modulus() {
            None => {
                let d = self.coeffs.iter().take_while(|c| c.is_zero()).count();
                let q = Poly { ring: self.ring.clone(), coeffs: self.coeffs[d..].to_vec() };
                let unit_constant = self.ring.is_unit(&q.constant_term());
                Ok(XSplit { d, q, unit_constant })
            }
            Some(m) => {
                if self.ring.is_unit(&self.constant_term()) {
                    return Ok(XSplit { d: 0, q: self.clone(), unit_constant: true });
                }
                let m = m.clone();
                let parts = self.ring.factor_modulus()?;
                let comps: Vec<(BigInt, usize, Vec<BigInt>)> = parts
                    .iter()
                    .map(|(p, e)| {
                        let pe = p.pow(*e);
                        let (d, q) = self.split_prime_power(p, *e, &pe);
                        (pe, d, q)
                    })
                    .collect();
                let (d, q) = crt_combine(&self.ring, &m, &comps);
                Ok(XSplit { d, q, unit_constant: true })
            }
        }
    }

    /// Split over the local component `Z/p^e`. Coefficients of the returned
    /// polynomial are canonical mod `p^e`.
    fn split_prime_power(&self, p: &BigInt, e: u32, pe: &BigInt) -> (usize, Vec<BigInt>) {
        let local: Vec<BigInt> = self.coeffs.iter().map(|c| c.mod_floor(pe)).collect();
        let d0 = local.iter().take_while(|c| c.mod_floor(p).is_zero()).count();
        if d0 == 0 {
            return (0, local);
        }
        // Exact split when the low coefficients already vanish mod p^e.
        if local[..d0].iter().all(Zero::is_zero) {
            return (d0, local[d0..].to_vec());
        }
        let ring_pe = RingSpec::modulo(pe.clone()).expect("prime power >= 2");
        let lifted: Vec<BigInt> = local[d0..].iter().map(|c| c.mod_floor(p)).collect();
        let q = Poly::new(ring_pe, lifted).pow(e);
        (e as usize * d0, q.coeffs)
    }

    /// `q(0)^-1 x^l q(1/x)`, monic and reversible.
    pub fn reciprocal(&self) -> Result<Poly> {
        self.require_reversible()?;
        let inv = self.ring.inv(&self.constant_term()).expect("reversible");
        let coeffs = self.coeffs.iter().rev().map(|c| c * &inv).collect();
        Ok(Poly::new(self.ring.clone(), coeffs))
    }

    /// `(-1)^l f(-x)`, monic.
    pub fn negate_var(&self) -> Result<Poly> {
        self.require_monic()?;
        let l = self.deg();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if (l + i).is_multiple_of(2) { c.clone() } else { -c })
            .collect();
        Ok(Poly::new(self.ring.clone(), coeffs))
    }

    /// Parse a polynomial in `x` such as `x^6-5x^5+14*x^4-x+3`.
    pub fn parse(s: &str, ring: &RingSpec) -> Result<Poly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bad = || Error::Parse(format!("cannot parse polynomial '{s}'"));
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut coeffs: Vec<BigInt> = Vec::new();
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, t.strip_prefix('+').unwrap_or(&t)),
            };
            let (c, exp) = match body.find('x') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let cpart = body[..pos].trim_end_matches('*');
                    let c = if cpart.is_empty() {
                        BigInt::one()
                    } else {
                        cpart.parse::<BigInt>().map_err(|_| bad())?
                    };
                    let rest = &body[pos + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?
                    };
                    (c, exp)
                }
            };
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, BigInt::zero());
            }
            coeffs[exp] += if neg { -c } else { c };
        }
        Ok(Poly::new(ring.clone(), coeffs))
    }
}

/// Combine local splits `(p^e, d_i, q_i)` into one over `Z/m`: pad every `q_i`
/// with powers of `x - 1` to a common degree, take the largest `d_i`, and
/// glue coefficients by the Chinese remainder theorem.
fn crt_combine(ring: &RingSpec, m: &BigInt, comps: &[(BigInt, usize, Vec<BigInt>)]) -> (usize, Poly) {
    let d = comps.iter().map(|c| c.1).max().unwrap_or(0);
    let len = comps.iter().map(|c| c.2.len()).max().unwrap_or(1);
    let mut out = vec![BigInt::zero(); len];
    for (pe, _, q) in comps {
        let local = RingSpec::modulo(pe.clone()).expect("prime power >= 2");
        let pad = Poly::from_i64s(&local, &[-1, 1]).pow((len - q.len()) as u32);
        let padded = Poly::new(local, q.clone()).mul_unchecked(&pad);
        let cofactor = m / pe;
        let inv = cofactor.extended_gcd(pe).x.mod_floor(pe);
        let basis = &cofactor * inv;
        for (i, c) in padded.coeffs.iter().enumerate() {
            out[i] += c * &basis;
        }
    }
    (d, Poly::new(ring.clone(), out))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let a = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            if !a.is_one() || i == 0 {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingSpec {
        RingSpec::integers()
    }

    fn zm(m: i64) -> RingSpec {
        RingSpec::modulo(m).unwrap()
    }

    fn p(ring: &RingSpec, c: &[i64]) -> Poly {
        Poly::from_i64s(ring, c)
    }

    /// Schoolbook long division, independent of `div_rem_monic`.
    fn long_division_rem(a: &[i64], f: &[i64]) -> Vec<i64> {
        let mut r = a.to_vec();
        let l = f.len() - 1;
        while r.len() > l {
            let c = r.pop().unwrap();
            let base = r.len() - l;
            for j in 0..l {
                r[base + j] -= c * f[j];
            }
        }
        while r.last() == Some(&0) {
            r.pop();
        }
        r
    }

    #[test]
    fn arithmetic_examples() {
        let r = z();
        assert_eq!(p(&r, &[-1, 1]).mul(&p(&r, &[1, 1])).unwrap(), p(&r, &[-1, 0, 1]));
        let f = p(&r, &[-1, -1, 1]);
        assert_eq!(f.mul(&Poly::one(&r)).unwrap(), f);
        // schoolbook convolution of (x^2-x-1)(x-2)
        let a = [-1i64, -1, 1];
        let b = [-2i64, 1];
        let mut conv = vec![0i64; 4];
        for i in 0..3 {
            for j in 0..2 {
                conv[i + j] += a[i] * b[j];
            }
        }
        assert_eq!(conv, vec![2, 1, -3, 1]);
        assert_eq!(f.mul(&p(&r, &b)).unwrap(), p(&r, &conv));
        assert!(f.mul(&p(&zm(3), &[1])).is_err());
    }

    #[test]
    fn zero_is_canonical() {
        let r = zm(4);
        let q = p(&r, &[1, 2, 4, 8]);
        assert_eq!(q.coeffs().len(), 2);
        assert!(p(&r, &[4, 8]).is_zero());
        assert_eq!(p(&r, &[4]).degree(), None);
    }

    #[test]
    fn monic_and_reversible() {
        let r = z();
        assert!(p(&r, &[-1, -1, 1]).is_monic());
        assert!(!p(&r, &[1, 2]).is_monic());
        assert!(!Poly::zero(&r).is_monic());
        assert!(p(&r, &[-1, -1, 1]).is_reversible());
        assert!(!p(&r, &[0, -2, 1]).is_reversible());
        assert!(p(&zm(5), &[-2, 1]).is_reversible());
    }

    #[test]
    fn remainder_examples() {
        let r = z();
        let f = p(&r, &[-1, -1, 1]);
        let x5 = Poly::x_pow(&r, 5);
        assert_eq!(long_division_rem(&[0, 0, 0, 0, 0, 1], &[-1, -1, 1]), vec![3, 5]);
        assert_eq!(x5.rem_by_monic(&f).unwrap(), p(&r, &[3, 5]));
        assert!(f.rem_by_monic(&f).unwrap().is_zero());
        let lin = p(&r, &[-7, 1]);
        assert_eq!(Poly::x_pow(&r, 1).rem_by_monic(&lin).unwrap(), p(&r, &[7]));
        assert!(matches!(x5.rem_by_monic(&p(&r, &[1, 2])), Err(Error::NotMonic(_))));
    }

    #[test]
    fn x_power_examples() {
        let r = z();
        let f = p(&r, &[-1, -1, 1]);
        assert_eq!(Poly::x_power_rem(5, &f).unwrap(), p(&r, &[3, 5]));
        assert_eq!(Poly::x_power_rem(0, &f).unwrap(), Poly::one(&r));
        assert!(Poly::x_power_rem(3, &Poly::one(&r)).is_err());
    }

    #[test]
    fn x_power_large_modular_matches_iteration() {
        let r = RingSpec::modulo(BigInt::one() << 32).unwrap();
        let f = p(&r, &[3, -5, 7, 1]);
        let mut it = Poly::one(&r);
        for n in 0..=10_000u64 {
            if n % 997 == 0 || n == 10_000 {
                assert_eq!(Poly::x_power_rem(n, &f).unwrap(), it, "n={n}");
            }
            it = it.shift_up(1).rem_by_monic(&f).unwrap();
        }
        // x^(a+b) = x^a x^b mod f at n = 1e9
        let a = Poly::x_power_rem(999_990_000, &f).unwrap();
        let b = Poly::x_power_rem(10_000, &f).unwrap();
        assert_eq!(
            Poly::x_power_rem(1_000_000_000, &f).unwrap(),
            a.mul(&b).unwrap().rem_by_monic(&f).unwrap()
        );
    }

    #[test]
    fn laurent_powers_invert() {
        let r = zm(10);
        let q = p(&r, &[3, 1, 1]);
        for z in -20i64..20 {
            let a = Poly::x_laurent_power_rem(z, &q).unwrap();
            let b = Poly::x_laurent_power_rem(-z, &q).unwrap();
            assert_eq!(a.mul(&b).unwrap().rem_by_monic(&q).unwrap(), Poly::one(&r), "z={z}");
        }
        assert!(Poly::x_laurent_power_rem(-1, &p(&r, &[2, 1])).is_err());
    }

    #[test]
    fn split_examples() {
        // x^2 + 2 over Z/4 gives x^4 in (f)
        let r4 = zm(4);
        let s = p(&r4, &[2, 0, 1]).split_x_part().unwrap();
        assert_eq!((s.d, s.q.clone()), (4, Poly::one(&r4)));
        let (_, rem) = Poly::x_pow(&r4, 4).div_rem_monic(&p(&r4, &[2, 0, 1])).unwrap();
        assert!(rem.is_zero());

        let r = z();
        let s = p(&r, &[0, 0, -1, 1]).split_x_part().unwrap();
        assert_eq!((s.d, s.q, s.unit_constant), (2, p(&r, &[-1, 1]), true));

        let fib = p(&r, &[-1, -1, 1]);
        let s = fib.split_x_part().unwrap();
        assert_eq!((s.d, s.q), (0, fib));

        let s = p(&r, &[0, 2, 1]).split_x_part().unwrap();
        assert_eq!((s.d, s.unit_constant), (1, false));

        assert!(p(&r, &[0, 2]).split_x_part().is_err());
    }

    #[test]
    fn split_over_composite_modulus_lands_in_ideal() {
        for m in [4i64, 6, 8, 9, 12, 18, 36, 100] {
            let r = zm(m);
            for f in [[0i64, 1, 1], [2, 0, 1], [6, 3, 1], [4, 2, 1], [0, 0, 1], [m - 2, 2, 1]] {
                let f = p(&r, &f);
                let s = f.split_x_part().unwrap();
                assert!(s.q.is_reversible(), "{f} over {r}: q={}", s.q);
                let prod = s.q.shift_up(s.d);
                assert!(prod.rem_by_monic(&f).unwrap().is_zero(), "{f} over {r}: d={} q={}", s.d, s.q);
            }
        }
    }

    #[test]
    fn reciprocal_examples() {
        let r = z();
        assert_eq!(p(&r, &[-1, -1, 1]).reciprocal().unwrap(), p(&r, &[-1, 1, 1]));
        assert_eq!(p(&r, &[-1, 1]).reciprocal().unwrap(), p(&r, &[-1, 1]));
        let r5 = zm(5);
        assert_eq!(p(&r5, &[-2, 1]).reciprocal().unwrap(), p(&r5, &[-3, 1]));
        // x - 3 annihilates z -> 2^(-z) = 3^z over Z/5
        let q = p(&r5, &[-3, 1]);
        let inv2 = BigInt::from(3);
        for n in 0..6u64 {
            let a = r5.pow(&inv2, n);
            let b = r5.pow(&inv2, n + 1);
            assert!(r5.add(&b, &r5.mul(&q.coeff(0), &a)).is_zero());
        }
        assert!(p(&r, &[2, 1]).reciprocal().is_err());
    }

    #[test]
    fn negate_var_examples() {
        let r = z();
        assert_eq!(p(&r, &[-1, -1, 1]).negate_var().unwrap(), p(&r, &[-1, 1, 1]));
        assert_eq!(p(&r, &[-1, 1]).negate_var().unwrap(), p(&r, &[1, 1]));
        assert_eq!(p(&r, &[-1, 1, -1, 1]).negate_var().unwrap(), p(&r, &[1, 1, 1, 1]));
    }

    #[test]
    fn display_and_parse() {
        let r = z();
        let f = p(&r, &[3, -15, 28, -25, 14, -5, 1]);
        assert_eq!(f.to_string(), "x^6-5x^5+14x^4-25x^3+28x^2-15x+3");
        assert_eq!(Poly::parse("x^6-5x^5+14x^4-25x^3+28x^2-15x+3", &r).unwrap(), f);
        assert_eq!(Poly::parse(" x^2 - x - 1 ", &r).unwrap(), p(&r, &[-1, -1, 1]));
        assert_eq!(Poly::parse("2*x^3+x", &r).unwrap(), p(&r, &[0, 1, 0, 2]));
        assert_eq!(Poly::parse("-1", &r).unwrap(), p(&r, &[-1]));
        assert_eq!(p(&zm(10), &[-1, -1, 1]).to_string(), "x^2+9x+9");
        assert_eq!(Poly::zero(&r).to_string(), "0");
        assert!(Poly::parse("x^", &r).is_err());
        assert!(Poly::parse("y+1", &r).is_err());
    }
}
