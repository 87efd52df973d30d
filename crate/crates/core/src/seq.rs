//! One-dimensional linearly recursive sequences.
//!
//! A [`LinRecSeq`] is a monic characteristic polynomial `f` of degree `l`
//! together with the first `l` values. Every term follows from the
//! recurrence `u(n+l) = -(a_0 u(n) + ... + a_(l-1) u(n+l-1))`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::ring::RingSpec;

/// A sequence value: a vector in `R^dim` (length 1 for scalar sequences).
pub type Value = Vec<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinRecSeq {
    ring: RingSpec,
    dim: usize,
    f: Poly,
    init: Vec<Value>,
}

/// One summand `left ⊗ right` of a comultiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPair {
    pub left: LinRecSeq,
    pub right: LinRecSeq,
}

/// Preperiod `d` and period `t` of an eventually periodic sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Period {
    pub preperiod: usize,
    pub period: usize,
}

pub(crate) fn zero_value(dim: usize) -> Value {
    vec![BigInt::zero(); dim]
}

pub(crate) fn value_add(ring: &RingSpec, a: &[BigInt], b: &[BigInt]) -> Value {
    a.iter().zip(b).map(|(x, y)| ring.add(x, y)).collect()
}

/// `acc += c * v`, reduced.
pub(crate) fn value_axpy(ring: &RingSpec, acc: &mut [BigInt], c: &BigInt, v: &[BigInt]) {
    for (a, x) in acc.iter_mut().zip(v) {
        ring.mul_add_assign(a, c, x);
    }
}

/// Rows `0..n` of Pascal's triangle computed by additions inside the ring.
pub(crate) fn pascal(ring: &RingSpec, n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = ring.add(&rows[i - 1][j - 1], &rows[i - 1][j]);
        }
        rows.push(row.into_iter().map(|v| ring.reduce(v)).collect());
    }
    rows
}

impl LinRecSeq {
    /// Build from a monic `f` and `deg f` initial values, all of the same dimension.
    pub fn new(f: Poly, init: Vec<Value>) -> Result<Self> {
        f.require_monic_nonconstant()?;
        let l = f.deg();
        if init.len() != l {
            return Err(Error::InitLength { expected: l, got: init.len() });
        }
        let dim = init[0].len();
        if dim == 0 {
            return Err(Error::Invalid("value dimension must be at least 1".into()));
        }
        if let Some(v) = init.iter().find(|v| v.len() != dim) {
            return Err(Error::DimMismatch(dim, v.len()));
        }
        let ring = f.ring().clone();
        let init = init
            .into_iter()
            .map(|v| v.into_iter().map(|x| ring.reduce(x)).collect())
            .collect();
        Ok(LinRecSeq { ring, dim, f, init })
    }

    /// Scalar sequence from small integer initial values.
    pub fn scalar(f: Poly, init: &[i64]) -> Result<Self> {
        LinRecSeq::new(f, init.iter().map(|&v| vec![BigInt::from(v)]).collect())
    }

    /// `n -> r^n m`, characteristic polynomial `x - r`.
    pub fn geometric(ring: &RingSpec, m: Value, r: &BigInt) -> Result<Self> {
        LinRecSeq::new(Poly::linear(ring, r), vec![m])
    }

    /// `n -> p + n q`, characteristic polynomial `(x - 1)^2`.
    pub fn arithmetic(ring: &RingSpec, p: Value, q: Value) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::DimMismatch(p.len(), q.len()));
        }
        let second = value_add(ring, &p, &q);
        LinRecSeq::new(Poly::from_i64s(ring, &[1, -2, 1]), vec![p, second])
    }

    /// `0, 1, 1, 2, 3, 5, ...` with `f = x^2 - x - 1`.
    pub fn fibonacci(ring: &RingSpec) -> Self {
        LinRecSeq::scalar(Poly::from_i64s(ring, &[-1, -1, 1]), &[0, 1]).expect("valid")
    }

    /// The impulse sequence `e_t` of `f`: initial values `δ_{i,t}`.
    pub fn impulse(f: &Poly, t: usize) -> Result<Self> {
        f.require_monic_nonconstant()?;
        let l = f.deg();
        if t >= l {
            return Err(Error::Invalid(format!("impulse index {t} outside 0..{l}")));
        }
        let init = (0..l).map(|i| if i == t { vec![BigInt::one()] } else { vec![BigInt::zero()] }).collect();
        LinRecSeq::new(f.clone(), init)
    }

    /// The zero sequence with `f = x`.
    pub fn zero(ring: &RingSpec, dim: usize) -> Self {
        LinRecSeq::new(Poly::x_pow(ring, 1), vec![zero_value(dim.max(1))]).expect("valid")
    }

    /// Unity of the Hadamard product: constant 1.
    pub fn ones(ring: &RingSpec) -> Self {
        LinRecSeq::geometric(ring, vec![BigInt::one()], &BigInt::one()).expect("valid")
    }

    /// Unity of the Hurwitz product: `n -> δ_{n,0}`.
    pub fn delta_at_zero(ring: &RingSpec) -> Self {
        LinRecSeq::impulse(&Poly::x_pow(ring, 1), 0).expect("valid")
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn charpoly(&self) -> &Poly {
        &self.f
    }

    pub fn init(&self) -> &[Value] {
        &self.init
    }

    /// Degree of the characteristic polynomial.
    pub fn order(&self) -> usize {
        self.f.deg()
    }

    fn same_ring(&self, other: &LinRecSeq) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.clone(), other.ring.clone()));
        }
        Ok(())
    }

    fn require_scalar(&self) -> Result<()> {
        if self.dim != 1 {
            return Err(Error::NotScalar(self.dim));
        }
        Ok(())
    }

    /// Next value from the last `l` values in `window`.
    fn step(&self, window: &[Value]) -> Value {
        let l = self.order();
        let mut next = zero_value(self.dim);
        for (a, v) in self.f.coeffs()[..l].iter().zip(window) {
            let na = self.ring.neg(a);
            value_axpy(&self.ring, &mut next, &na, v);
        }
        next
    }

    /// The first `count` terms, by iterating the recurrence.
    pub fn terms(&self, count: usize) -> Vec<Value> {
        let l = self.order();
        let mut out: Vec<Value> = self.init.iter().take(count).cloned().collect();
        while out.len() < count {
            let next = self.step(&out[out.len() - l..]);
            out.push(next);
        }
        out
    }

    /// `u(n)` by iterating the recurrence with a rolling window.
    pub fn term(&self, n: u64) -> Value {
        let l = self.order();
        if (n as usize) < l {
            return self.init[n as usize].clone();
        }
        let mut window = self.init.clone();
        for _ in 0..=(n - l as u64) {
            let next = self.step(&window);
            window.remove(0);
            window.push(next);
        }
        window.pop().expect("non-empty window")
    }

    /// `u(n) = Σ r_i u(i)` with `r = x^n mod f`.
    pub fn term_fast(&self, n: u64) -> Value {
        let r = Poly::x_power_rem(n, &self.f).expect("monic nonconstant");
        self.combine_init(&r)
    }

    /// `Σ r_i init[i]` for a remainder `r` of degree below `l`.
    pub(crate) fn combine_init(&self, r: &Poly) -> Value {
        let mut acc = zero_value(self.dim);
        for (c, v) in r.coeffs().iter().zip(&self.init) {
            value_axpy(&self.ring, &mut acc, c, v);
        }
        acc
    }

    /// `u(n)` as the first entry of `(S_f^T)^n` applied to the initial state.
    pub fn term_via_matrix(&self, n: u64) -> Value {
        let step = Matrix::companion(&self.f).expect("monic nonconstant").transpose();
        let power = step.pow(n).expect("square");
        (0..self.dim)
            .map(|c| {
                let column: Vec<BigInt> = self.init.iter().map(|v| v[c].clone()).collect();
                power.apply(&column)[0].clone()
            })
            .collect()
    }

    /// `g ⇀ u`: `n -> Σ g_i u(n + i)`, kept with the same characteristic polynomial.
    pub fn shift_action(&self, g: &Poly) -> Result<LinRecSeq> {
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch(g.ring().clone(), self.ring.clone()));
        }
        let l = self.order();
        let window = self.terms(l + g.coeffs().len());
        let init = (0..l)
            .map(|i| {
                let mut acc = zero_value(self.dim);
                for (j, c) in g.coeffs().iter().enumerate() {
                    value_axpy(&self.ring, &mut acc, c, &window[i + j]);
                }
                acc
            })
            .collect();
        Ok(LinRecSeq { ring: self.ring.clone(), dim: self.dim, f: self.f.clone(), init })
    }

    /// Termwise sum, characteristic polynomial `f_u f_v`.
    pub fn add(&self, other: &LinRecSeq) -> Result<LinRecSeq> {
        self.same_ring(other)?;
        if self.dim != other.dim {
            return Err(Error::DimMismatch(self.dim, other.dim));
        }
        let f = self.f.mul(&other.f)?;
        let n = f.deg();
        let init = self
            .terms(n)
            .iter()
            .zip(other.terms(n))
            .map(|(a, b)| value_add(&self.ring, a, &b))
            .collect();
        LinRecSeq::new(f, init)
    }

    pub fn neg(&self) -> LinRecSeq {
        let init = self.init.iter().map(|v| v.iter().map(|x| self.ring.neg(x)).collect()).collect();
        LinRecSeq { ring: self.ring.clone(), dim: self.dim, f: self.f.clone(), init }
    }

    pub fn sub(&self, other: &LinRecSeq) -> Result<LinRecSeq> {
        self.add(&other.neg())
    }

    /// Termwise product `n -> u(n) v(n)`, characteristic polynomial `χ(S_f ⊗ S_g)`.
    pub fn hadamard(&self, other: &LinRecSeq) -> Result<LinRecSeq> {
        self.same_ring(other)?;
        self.require_scalar()?;
        other.require_scalar()?;
        let prod = Matrix::companion(&self.f)?.kronecker(&Matrix::companion(&other.f)?)?;
        let h = prod.char_poly()?;
        let n = h.deg();
        let init = self
            .terms(n)
            .iter()
            .zip(other.terms(n))
            .map(|(a, b)| vec![self.ring.mul(&a[0], &b[0])])
            .collect();
        LinRecSeq::new(h, init)
    }

    /// Binomial convolution `n -> Σ_t C(n,t) u(t) v(n-t)`, characteristic
    /// polynomial `χ(S_f ⊗ E + E ⊗ S_g)`.
    pub fn hurwitz(&self, other: &LinRecSeq) -> Result<LinRecSeq> {
        self.same_ring(other)?;
        self.require_scalar()?;
        other.require_scalar()?;
        let sum = Matrix::companion(&self.f)?.kronecker_sum(&Matrix::companion(&other.f)?)?;
        let h = sum.char_poly()?;
        let n = h.deg();
        let init = hurwitz_terms(&self.ring, &self.terms(n), &other.terms(n));
        LinRecSeq::new(h, init)
    }

    /// Whether `g ⇀ u = 0`. The image is again annihilated by `f`, so the
    /// first `deg f` values decide.
    pub fn annihilates(&self, g: &Poly) -> Result<bool> {
        let image = self.shift_action(g)?;
        Ok(image.init.iter().all(|v| v.iter().all(Zero::is_zero)))
    }

    pub fn is_zero_sequence(&self) -> bool {
        self.init.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    /// If `u` is eventually zero, the least `d` with `u(n) = 0` for all `n >= d`.
    pub fn is_degenerating(&self) -> Option<usize> {
        let split = self.f.split_x_part().expect("monic");
        let (d, lq) = (split.d, split.q.deg());
        let window = self.terms(d + lq);
        if window[d..].iter().any(|v| v.iter().any(|x| !x.is_zero())) {
            return None;
        }
        let last_nonzero = window[..d].iter().rposition(|v| v.iter().any(|x| !x.is_zero()));
        Some(last_nonzero.map_or(0, |i| i + 1))
    }

    /// Minimal preperiod and period of the state orbit over a finite ring.
    pub fn period(&self) -> Result<Period> {
        if self.ring.is_integers() {
            return Err(Error::UnsupportedRing { ring: self.ring.clone(), what: "period detection" });
        }
        let mut seen: HashMap<Vec<Value>, usize> = HashMap::new();
        let mut state = self.init.clone();
        let mut n = 0usize;
        loop {
            if let Some(&first) = seen.get(&state) {
                return Ok(Period { preperiod: first, period: n - first });
            }
            let mut successor = state[1..].to_vec();
            successor.push(self.step(&state));
            seen.insert(std::mem::replace(&mut state, successor), n);
            n += 1;
        }
    }

    /// `ε(u) = u(0)`.
    pub fn counit(&self) -> Value {
        self.init[0].clone()
    }

    /// `Δ(u) = Σ_{t < l} (x^t ⇀ u) ⊗ e_t`.
    pub fn delta(&self) -> Result<Vec<TensorPair>> {
        self.require_scalar()?;
        (0..self.order())
            .map(|t| {
                Ok(TensorPair {
                    left: self.shift_action(&Poly::x_pow(&self.ring, t))?,
                    right: LinRecSeq::impulse(&self.f, t)?,
                })
            })
            .collect()
    }

    /// Hurwitz antipode `i -> (-1)^i u(i)`.
    pub fn antipode_hurwitz(&self) -> Result<LinRecSeq> {
        self.require_scalar()?;
        let f = self.f.negate_var()?;
        let init = self
            .init
            .iter()
            .enumerate()
            .map(|(i, v)| if i % 2 == 0 { v.clone() } else { vec![self.ring.neg(&v[0])] })
            .collect();
        LinRecSeq::new(f, init)
    }
}

/// Binomial convolution of two scalar windows of equal length.
pub(crate) fn hurwitz_terms(ring: &RingSpec, u: &[Value], v: &[Value]) -> Vec<Value> {
    let n = u.len().min(v.len());
    let binom = pascal(ring, n);
    (0..n)
        .map(|i| {
            let mut acc = BigInt::zero();
            for t in 0..=i {
                let uv = ring.mul(&u[t][0], &v[i - t][0]);
                ring.mul_add_assign(&mut acc, &binom[i][t], &uv);
            }
            vec![acc]
        })
        .collect()
}
