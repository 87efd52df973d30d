//! Bisequences indexed by `Z`, backsolving, and the split of a sequence into
//! a degenerating part and a reversible part.
//!
//! A [`BiRecSeq`] stores a reversible monic `q` and the values at `0..l`.
//! Because `q(0)` is a unit, the recurrence can be solved for its lowest term,
//! so every negative index is determined:
//!
//! `w(z) = -q(0)^-1 (a_1 w(z+1) + ... + a_(l-1) w(z+l-1) + w(z+l))`.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::ring::RingSpec;
use crate::seq::{value_axpy, zero_value, LinRecSeq, Value};

/// Negative terms beyond this depth are evaluated through `x^z mod q`
/// instead of growing the memo.
const MEMO_DEPTH: u64 = 1 << 16;

#[derive(Debug)]
pub struct BiRecSeq {
    forward: LinRecSeq,
    /// `lower[k] = w(-1-k)`, filled on demand.
    lower: Mutex<Vec<Value>>,
}

impl Clone for BiRecSeq {
    fn clone(&self) -> Self {
        let lower = self.lower.lock().expect("memo lock").clone();
        BiRecSeq { forward: self.forward.clone(), lower: Mutex::new(lower) }
    }
}

impl PartialEq for BiRecSeq {
    fn eq(&self, other: &Self) -> bool {
        self.forward == other.forward
    }
}

impl Eq for BiRecSeq {}

/// `u = degenerating + reversible`, with `degenerating(n) = 0` for `n >= d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub degenerating: LinRecSeq,
    pub reversible: LinRecSeq,
    pub d: usize,
}

impl BiRecSeq {
    pub fn new(q: Poly, init: Vec<Value>) -> Result<Self> {
        q.require_reversible()?;
        Ok(BiRecSeq { forward: LinRecSeq::new(q, init)?, lower: Mutex::new(Vec::new()) })
    }

    pub fn scalar(q: Poly, init: &[i64]) -> Result<Self> {
        BiRecSeq::new(q, init.iter().map(|&v| vec![BigInt::from(v)]).collect())
    }

    /// Constant 1 on all of `Z`.
    pub fn ones(ring: &RingSpec) -> Self {
        BiRecSeq::scalar(Poly::from_i64s(ring, &[-1, 1]), &[1]).expect("x - 1 is reversible")
    }

    /// The zero bisequence.
    pub fn zero(ring: &RingSpec, dim: usize) -> Self {
        BiRecSeq::new(Poly::from_i64s(ring, &[-1, 1]), vec![zero_value(dim.max(1))])
            .expect("x - 1 is reversible")
    }

    pub fn ring(&self) -> &RingSpec {
        self.forward.ring()
    }

    pub fn dim(&self) -> usize {
        self.forward.dim()
    }

    pub fn charpoly(&self) -> &Poly {
        self.forward.charpoly()
    }

    pub fn init(&self) -> &[Value] {
        self.forward.init()
    }

    pub fn order(&self) -> usize {
        self.forward.order()
    }

    /// `w(z)`: the recurrence forwards for `z >= 0`, backsolving below.
    pub fn bi_term(&self, z: i64) -> Value {
        if z >= 0 {
            return self.forward.term_fast(z as u64);
        }
        let depth = z.unsigned_abs();
        if depth > MEMO_DEPTH {
            return self.bi_term_fast(z);
        }
        let mut lower = self.lower.lock().expect("memo lock");
        while (lower.len() as u64) < depth {
            let next = self.backsolve_next(&lower);
            lower.push(next);
        }
        lower[(depth - 1) as usize].clone()
    }

    /// `w(z) = Σ r_i w(i)` with `r = x^z mod q` computed in `R[x, x^-1]`.
    pub fn bi_term_fast(&self, z: i64) -> Value {
        let r = Poly::x_laurent_power_rem(z, self.charpoly()).expect("reversible");
        self.forward.combine_init(&r)
    }

    /// Value at index `-1 - lower.len()` from the `l` values above it.
    fn backsolve_next(&self, lower: &[Value]) -> Value {
        let ring = self.ring();
        let q = self.charpoly();
        let l = q.deg();
        let k = lower.len();
        // index -1-k+i for i = 1..=l
        let at = |i: usize| -> &Value {
            let idx = i as i64 - 1 - k as i64;
            if idx >= 0 {
                &self.init()[idx as usize]
            } else {
                &lower[(-idx - 1) as usize]
            }
        };
        let mut acc = zero_value(self.dim());
        for i in 1..=l {
            value_axpy(ring, &mut acc, &q.coeff(i), at(i));
        }
        let scale = ring.neg(&ring.inv(&q.constant_term()).expect("reversible"));
        acc.iter().map(|a| ring.mul(a, &scale)).collect()
    }

    /// Values `w(from), ..., w(to)`.
    pub fn window(&self, from: i64, to: i64) -> Vec<Value> {
        (from..=to).map(|z| self.bi_term(z)).collect()
    }

    /// `(g ⇀ w)(z) = Σ g_i w(z + i)`.
    pub fn act_at(&self, g: &Poly, z: i64) -> Value {
        let mut acc = zero_value(self.dim());
        for (i, c) in g.coeffs().iter().enumerate() {
            value_axpy(self.ring(), &mut acc, c, &self.bi_term(z + i as i64));
        }
        acc
    }

    /// Pointwise product on `Z`, characteristic polynomial `χ(S_q1 ⊗ S_q2)`.
    pub fn hadamard(&self, other: &BiRecSeq) -> Result<BiRecSeq> {
        let forward = self.forward.hadamard(&other.forward)?;
        let (q, init) = (forward.charpoly().clone(), forward.init().to_vec());
        BiRecSeq::new(q, init)
    }
}

/// The unique bisequence annihilated by `f_u` that extends `u`.
pub fn reverse(u: &LinRecSeq) -> Result<BiRecSeq> {
    BiRecSeq::new(u.charpoly().clone(), u.init().to_vec())
}

/// The bisequence with a reversible annihilator that agrees with `u` from
/// index `D` on, where `x^D Q` is the split of `f_u`.
pub fn gamma(u: &LinRecSeq) -> Result<BiRecSeq> {
    let f = u.charpoly();
    if f.is_reversible() {
        return reverse(u);
    }
    let split = f.split_x_part()?;
    if !split.unit_constant {
        return Err(Error::NotReversible(f.to_string()));
    }
    let lq = split.q.deg();
    if lq == 0 {
        return Ok(BiRecSeq::zero(u.ring(), u.dim()));
    }
    let d = split.d;
    let tail = BiRecSeq::new(split.q.clone(), u.terms(d + lq).split_off(d))?;
    let init = (0..lq).map(|i| tail.bi_term(i as i64 - d as i64)).collect();
    BiRecSeq::new(split.q, init)
}

/// Restriction to nonnegative indices.
pub fn beta(w: &BiRecSeq) -> LinRecSeq {
    w.forward.clone()
}

/// `u = degenerating + reversible` over `Z/m`. The degenerating part is
/// certified by [`LinRecSeq::is_degenerating`] and returned with
/// characteristic polynomial `x^max(d,1)`.
pub fn decompose(u: &LinRecSeq) -> Result<Decomposition> {
    if u.ring().is_integers() {
        return Err(Error::UnsupportedRing { ring: u.ring().clone(), what: "degenerating/reversible decomposition" });
    }
    let reversible = beta(&gamma(u)?);
    let rest = u.sub(&reversible)?;
    let d = rest
        .is_degenerating()
        .ok_or_else(|| Error::Invalid("difference u - rev is not degenerating".into()))?;
    let len = d.max(1);
    let degenerating = LinRecSeq::new(Poly::x_pow(u.ring(), len), rest.terms(len))?;
    Ok(Decomposition { degenerating, reversible, d })
}

/// Hadamard antipode `n -> Rev(u)(-n)`, characteristic polynomial the reciprocal of `f_u`.
pub fn antipode_hadamard(u: &LinRecSeq) -> Result<LinRecSeq> {
    if u.dim() != 1 {
        return Err(Error::NotScalar(u.dim()));
    }
    let w = reverse(u)?;
    let f = u.charpoly().reciprocal()?;
    let init = (0..u.order()).map(|i| w.bi_term(-(i as i64))).collect();
    LinRecSeq::new(f, init)
}

/// Pointwise product of two bisequences.
pub fn bi_hadamard(a: &BiRecSeq, b: &BiRecSeq) -> Result<BiRecSeq> {
    a.hadamard(b)
}

/// Whether `χ(S_q1 ⊗ S_q2)` has a unit constant term; exposed for tests.
pub fn kronecker_charpoly_is_reversible(q1: &Poly, q2: &Poly) -> Result<bool> {
    let m = Matrix::companion(q1)?.kronecker(&Matrix::companion(q2)?)?;
    Ok(m.char_poly()?.is_reversible())
}

impl BiRecSeq {
    pub fn is_zero_on(&self, from: i64, to: i64) -> bool {
        (from..=to).all(|z| self.bi_term(z).iter().all(Zero::is_zero))
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

    fn poly(r: &RingSpec, c: &[i64]) -> Poly {
        Poly::from_i64s(r, c)
    }

    fn scalars(vals: &[Value]) -> Vec<i64> {
        vals.iter().map(|v| i64::try_from(&v[0]).unwrap()).collect()
    }

    /// Independent backsolve for Fibonacci: w(z) = w(z+2) - w(z+1).
    fn fib_backsolve(depth: usize) -> Vec<i64> {
        let mut vals = vec![1i64, 0]; // w(1), w(0)
        for _ in 0..depth {
            let n = vals.len();
            vals.push(vals[n - 2] - vals[n - 1]);
        }
        vals
    }

    #[test]
    fn fibonacci_reverse_table() {
        let w = reverse(&LinRecSeq::fibonacci(&z())).unwrap();
        assert_eq!(scalars(&w.window(-4, 4)), vec![-3, 2, -1, 1, 0, 1, 1, 2, 3]);
        assert_eq!(scalars(&w.window(0, 1)), scalars(w.init()));
        let oracle = fib_backsolve(8);
        assert_eq!(oracle[9], -21);
        assert_eq!(scalars(&[w.bi_term(-8)]), vec![-21]);
    }

    #[test]
    fn memo_and_laurent_routes_agree() {
        let r = zm(1000);
        let u = LinRecSeq::scalar(poly(&r, &[7, 3, 0, 1]), &[4, 5, 6]).unwrap();
        let w = reverse(&u).unwrap();
        for z in -200..50 {
            assert_eq!(w.bi_term(z), w.bi_term_fast(z), "z={z}");
        }
        assert_eq!(w.bi_term(-(MEMO_DEPTH as i64) - 5), w.bi_term_fast(-(MEMO_DEPTH as i64) - 5));
    }

    #[test]
    fn reverse_examples() {
        let r = zm(7);
        let g = LinRecSeq::geometric(&r, vec![1.into()], &3.into()).unwrap();
        let w = reverse(&g).unwrap();
        let inv3 = r.inv(&3.into()).unwrap();
        for k in 0..10u64 {
            assert_eq!(w.bi_term(-(k as i64)), vec![r.pow(&inv3, k)]);
        }
        let e = LinRecSeq::impulse(&poly(&z(), &[-1, 1]), 0).unwrap();
        let w = reverse(&e).unwrap();
        assert!(w.window(-10, 10).iter().all(|v| v == &vec![BigInt::from(1)]));
        let not_rev = LinRecSeq::scalar(poly(&z(), &[2, 1]), &[1]).unwrap();
        assert!(matches!(reverse(&not_rev), Err(Error::NotReversible(_))));
    }

    #[test]
    fn gamma_examples() {
        let fib = LinRecSeq::fibonacci(&z());
        assert_eq!(gamma(&fib).unwrap(), reverse(&fib).unwrap());

        let r4 = zm(4);
        let u = LinRecSeq::scalar(poly(&r4, &[0, -1, 1]), &[2, 1]).unwrap();
        assert_eq!(scalars(&u.terms(5)), vec![2, 1, 1, 1, 1]);
        let w = gamma(&u).unwrap();
        assert!(w.window(-20, 20).iter().all(|v| v == &vec![BigInt::from(1)]));

        let nil = LinRecSeq::scalar(poly(&r4, &[0, 0, 1]), &[3, 2]).unwrap();
        assert!(gamma(&nil).unwrap().is_zero_on(-10, 10));

        let bad = LinRecSeq::scalar(poly(&z(), &[0, 2, 1]), &[1, 1]).unwrap();
        assert!(gamma(&bad).is_err());
        // exact split over Z with unit cofactor
        let ok = LinRecSeq::scalar(poly(&z(), &[0, -1, 1]), &[5, 1]).unwrap();
        assert!(gamma(&ok).unwrap().window(-5, 5).iter().all(|v| v == &vec![BigInt::from(1)]));
    }

    #[test]
    fn beta_examples() {
        let fib = LinRecSeq::fibonacci(&z());
        assert_eq!(beta(&gamma(&fib).unwrap()).terms(30), fib.terms(30));
        assert_eq!(scalars(&beta(&reverse(&fib).unwrap()).terms(6)), vec![0, 1, 1, 2, 3, 5]);
        assert!(beta(&BiRecSeq::zero(&z(), 1)).is_zero_sequence());
    }

    #[test]
    fn decompose_examples() {
        let r4 = zm(4);
        let u = LinRecSeq::scalar(poly(&r4, &[0, -1, 1]), &[2, 1]).unwrap();
        let dec = decompose(&u).unwrap();
        assert_eq!(scalars(&dec.degenerating.terms(6)), vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(scalars(&dec.reversible.terms(6)), vec![1, 1, 1, 1, 1, 1]);

        let v = LinRecSeq::scalar(poly(&r4, &[1, 1, 1]), &[3, 2]).unwrap();
        let dec = decompose(&v).unwrap();
        assert!(dec.degenerating.is_zero_sequence());
        assert_eq!(dec.reversible.terms(20), v.terms(20));

        let nil = LinRecSeq::scalar(poly(&r4, &[0, 0, 1]), &[3, 2]).unwrap();
        let dec = decompose(&nil).unwrap();
        assert!(dec.reversible.is_zero_sequence());
        assert_eq!(dec.degenerating.terms(10), nil.terms(10));

        assert!(matches!(decompose(&LinRecSeq::fibonacci(&z())), Err(Error::UnsupportedRing { .. })));
    }

    #[test]
    fn hadamard_antipode_examples() {
        let fib = LinRecSeq::fibonacci(&z());
        let s = antipode_hadamard(&fib).unwrap();
        assert_eq!(s.charpoly(), &poly(&z(), &[-1, 1, 1]));
        assert_eq!(scalars(&s.terms(5)), vec![0, 1, -1, 2, -3]);
        assert_eq!(antipode_hadamard(&s).unwrap().terms(30), fib.terms(30));

        let r = zm(11);
        let g = LinRecSeq::geometric(&r, vec![1.into()], &4.into()).unwrap();
        let inv = LinRecSeq::geometric(&r, vec![1.into()], &r.inv(&4.into()).unwrap()).unwrap();
        assert_eq!(antipode_hadamard(&g).unwrap().terms(20), inv.terms(20));
        let bad = LinRecSeq::scalar(poly(&z(), &[0, 1]), &[1]).unwrap();
        assert!(antipode_hadamard(&bad).is_err());
    }

    #[test]
    fn bisequence_hadamard_examples() {
        let w = reverse(&LinRecSeq::fibonacci(&z())).unwrap();
        let sq = bi_hadamard(&w, &w).unwrap();
        assert!(sq.charpoly().is_reversible());
        assert_eq!(scalars(&sq.window(-3, 3)), vec![4, 1, 1, 0, 1, 1, 4]);
        let one = bi_hadamard(&w, &BiRecSeq::ones(&z())).unwrap();
        assert_eq!(one.window(-15, 15), w.window(-15, 15));

        let r = zm(13);
        let a = reverse(&LinRecSeq::geometric(&r, vec![1.into()], &3.into()).unwrap()).unwrap();
        let b = reverse(&LinRecSeq::geometric(&r, vec![1.into()], &5.into()).unwrap()).unwrap();
        let c = reverse(&LinRecSeq::geometric(&r, vec![1.into()], &15.into()).unwrap()).unwrap();
        assert_eq!(bi_hadamard(&a, &b).unwrap().window(-12, 12), c.window(-12, 12));
        assert!(kronecker_charpoly_is_reversible(a.charpoly(), b.charpoly()).unwrap());
    }
}
