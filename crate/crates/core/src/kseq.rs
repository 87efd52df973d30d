//! k-dimensional sequences annihilated by an elementary ideal
//! `(f_1(x_1), ..., f_k(x_k))`.
//!
//! Such a sequence is fixed by its values on the polyhedron
//! `{i : i_j < deg f_j}`, stored here in graded lexicographic order.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::ring::RingSpec;
use crate::seq::{pascal, value_add, value_axpy, zero_value, LinRecSeq, Value};

/// Multivariate polynomial as a list of `(exponent, coefficient)` terms.
pub type SparsePoly = Vec<(Vec<u64>, BigInt)>;

#[derive(Clone, Debug)]
pub struct KSeq {
    ring: RingSpec,
    dim: usize,
    elem: Vec<Poly>,
    values: Vec<Value>,
    chain: Vec<Vec<u64>>,
    index: HashMap<Vec<u64>, usize>,
}

impl PartialEq for KSeq {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.elem == other.elem && self.values == other.values
    }
}

impl Eq for KSeq {}

/// One summand `left ⊗ right` of the k-dimensional comultiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTensorPair {
    pub left: KSeq,
    pub right: KSeq,
}

/// Graded order: compare total degree first, then components from the first.
pub fn lex_cmp(i: &[u64], n: &[u64]) -> Result<Ordering> {
    if i.len() != n.len() {
        return Err(Error::DimMismatch(i.len(), n.len()));
    }
    let si: u128 = i.iter().map(|&v| v as u128).sum();
    let sn: u128 = n.iter().map(|&v| v as u128).sum();
    Ok(si.cmp(&sn).then_with(|| i.cmp(n)))
}

/// All `i <= l - 1` sorted by [`lex_cmp`].
pub fn polyhedron_chain(l: &[usize]) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![Vec::new()];
    for &lj in l {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..lj as u64).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out.sort_by(|a, b| lex_cmp(a, b).expect("same arity"));
    out
}

fn check_same_ring(a: &RingSpec, b: &RingSpec) -> Result<()> {
    if a != b {
        return Err(Error::RingMismatch(a.clone(), b.clone()));
    }
    Ok(())
}

impl KSeq {
    /// Build from elementary polynomials and polyhedron values in chain order.
    pub fn new(elem: Vec<Poly>, values: Vec<Value>) -> Result<Self> {
        let first = elem.first().ok_or_else(|| Error::Invalid("k must be at least 1".into()))?;
        let ring = first.ring().clone();
        for f in &elem {
            check_same_ring(&ring, f.ring())?;
            f.require_monic_nonconstant()?;
        }
        let l: Vec<usize> = elem.iter().map(Poly::deg).collect();
        let chain = polyhedron_chain(&l);
        if values.len() != chain.len() {
            return Err(Error::InitLength { expected: chain.len(), got: values.len() });
        }
        let dim = values[0].len();
        if dim == 0 {
            return Err(Error::Invalid("value dimension must be at least 1".into()));
        }
        if let Some(v) = values.iter().find(|v| v.len() != dim) {
            return Err(Error::DimMismatch(dim, v.len()));
        }
        let values = values
            .into_iter()
            .map(|v| v.into_iter().map(|x| ring.reduce(x)).collect())
            .collect();
        let index = chain.iter().enumerate().map(|(n, i)| (i.clone(), n)).collect();
        Ok(KSeq { ring, dim, elem, values, chain, index })
    }

    /// Build by evaluating `value` at every polyhedron point.
    fn tabulate(elem: Vec<Poly>, mut value: impl FnMut(&[u64]) -> Value) -> Result<Self> {
        let l: Vec<usize> = elem.iter().map(Poly::deg).collect();
        let values = polyhedron_chain(&l).iter().map(|i| value(i)).collect();
        KSeq::new(elem, values)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn k(&self) -> usize {
        self.elem.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elem(&self) -> &[Poly] {
        &self.elem
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    pub fn chain(&self) -> &[Vec<u64>] {
        &self.chain
    }

    pub fn orders(&self) -> Vec<usize> {
        self.elem.iter().map(Poly::deg).collect()
    }

    fn check_arity(&self, n: usize) -> Result<()> {
        if n != self.k() {
            return Err(Error::DimMismatch(self.k(), n));
        }
        Ok(())
    }

    fn require_scalar(&self) -> Result<()> {
        if self.dim != 1 {
            return Err(Error::NotScalar(self.dim));
        }
        Ok(())
    }

    /// `w(n) = Σ_i (Π_j r_j[i_j]) w(i)` with `r_j = x_j^(n_j) mod f_j`.
    pub fn kterm(&self, n: &[u64]) -> Result<Value> {
        self.check_arity(n.len())?;
        if let Some(&p) = self.index.get(n) {
            return Ok(self.values[p].clone());
        }
        let rems = self
            .elem
            .iter()
            .zip(n)
            .map(|(f, &nj)| Poly::x_power_rem(nj, f))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.combine(&rems))
    }

    /// `Σ_i (Π_j r_j[i_j]) values[i]` for per-axis coefficient vectors.
    fn combine(&self, rems: &[Poly]) -> Value {
        let mut acc = zero_value(self.dim);
        for (i, v) in self.chain.iter().zip(&self.values) {
            let mut c = self.ring.one();
            for (r, &ij) in rems.iter().zip(i) {
                c = self.ring.mul(&c, &r.coeff(ij as usize));
                if c.is_zero() {
                    break;
                }
            }
            if !c.is_zero() {
                value_axpy(&self.ring, &mut acc, &c, v);
            }
        }
        acc
    }

    /// Values at each point of `0..=to` per axis, in row-major order.
    pub fn grid(&self, to: &[u64]) -> Result<Vec<(Vec<u64>, Value)>> {
        self.check_arity(to.len())?;
        let l: Vec<usize> = to.iter().map(|&t| t as usize + 1).collect();
        let mut points = polyhedron_chain(&l);
        points.sort();
        points.into_iter().map(|p| Ok((p.clone(), self.kterm(&p)?))).collect()
    }
}

/// The impulse k-sequence `e_t`: polyhedron values `δ_{i,t}`.
pub fn k_impulse(elem: &[Poly], t: &[u64]) -> Result<KSeq> {
    if t.len() != elem.len() {
        return Err(Error::DimMismatch(elem.len(), t.len()));
    }
    if elem.iter().zip(t).any(|(f, &tj)| tj as usize >= f.deg()) {
        return Err(Error::Invalid(format!("impulse index {t:?} outside the polyhedron")));
    }
    KSeq::tabulate(elem.to_vec(), |i| vec![if i == t { BigInt::one() } else { BigInt::zero() }])
}

/// `(g ⇀ w)(n) = Σ c w(n + m)` over the terms `c x^m` of `g`.
pub fn kshift(g: &SparsePoly, w: &KSeq) -> Result<KSeq> {
    for (m, _) in g {
        w.check_arity(m.len())?;
    }
    let ring = w.ring.clone();
    let mut err = None;
    let out = KSeq::tabulate(w.elem.clone(), |i| {
        let mut acc = zero_value(w.dim);
        for (m, c) in g {
            let n: Vec<u64> = i.iter().zip(m).map(|(a, b)| a + b).collect();
            match w.kterm(&n) {
                Ok(v) => value_axpy(&ring, &mut acc, &ring.reduce(c.clone()), &v),
                Err(e) => err = Some(e),
            }
        }
        acc
    })?;
    err.map_or(Ok(out), Err)
}

/// A univariate polynomial in `x_axis` as a sparse k-variate polynomial.
pub fn axis_poly(p: &Poly, axis: usize, k: usize) -> SparsePoly {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| {
            let mut m = vec![0u64; k];
            m[axis] = e as u64;
            (m, c.clone())
        })
        .collect()
}

fn check_family(us: &[LinRecSeq]) -> Result<&LinRecSeq> {
    let first = us.first().ok_or_else(|| Error::Invalid("need at least one sequence".into()))?;
    for u in us {
        check_same_ring(first.ring(), u.ring())?;
        if u.dim() != first.dim() {
            return Err(Error::DimMismatch(first.dim(), u.dim()));
        }
    }
    Ok(first)
}

/// `g = f` if `f(1) = 0`, else `f (x - 1)`.
pub fn sum_axis_poly(f: &Poly) -> Result<Poly> {
    let ring = f.ring();
    if f.eval(&ring.one()).is_zero() {
        Ok(f.clone())
    } else {
        f.mul(&Poly::from_i64s(ring, &[-1, 1]))
    }
}

/// `n -> u_1(n_1) + ... + u_k(n_k)`.
pub fn sep_sum(us: &[LinRecSeq]) -> Result<KSeq> {
    let first = check_family(us)?;
    let ring = first.ring().clone();
    let elem = us.iter().map(|u| sum_axis_poly(u.charpoly())).collect::<Result<Vec<_>>>()?;
    let tables: Vec<Vec<Value>> =
        us.iter().zip(&elem).map(|(u, g)| u.terms(g.deg())).collect();
    KSeq::tabulate(elem, |i| {
        i.iter()
            .zip(&tables)
            .fold(zero_value(first.dim()), |acc, (&ij, t)| value_add(&ring, &acc, &t[ij as usize]))
    })
}

/// `n -> u_1(n_1) ... u_k(n_k)` for scalar sequences.
pub fn sep_product(us: &[LinRecSeq]) -> Result<KSeq> {
    let first = check_family(us)?;
    if first.dim() != 1 {
        return Err(Error::NotScalar(first.dim()));
    }
    let ring = first.ring().clone();
    let elem: Vec<Poly> = us.iter().map(|u| u.charpoly().clone()).collect();
    let tables: Vec<Vec<Value>> = us.iter().map(|u| u.terms(u.order())).collect();
    KSeq::tabulate(elem, |i| {
        let v = i
            .iter()
            .zip(&tables)
            .fold(ring.one(), |acc, (&ij, t)| ring.mul(&acc, &t[ij as usize][0]));
        vec![v]
    })
}

fn check_pair(u: &KSeq, v: &KSeq) -> Result<()> {
    check_same_ring(&u.ring, &v.ring)?;
    if u.k() != v.k() {
        return Err(Error::DimMismatch(u.k(), v.k()));
    }
    u.require_scalar()?;
    v.require_scalar()
}

/// Pointwise product, axis polynomials `χ(S_f ⊗ S_g)`.
pub fn k_hadamard(u: &KSeq, v: &KSeq) -> Result<KSeq> {
    check_pair(u, v)?;
    let elem = u
        .elem
        .iter()
        .zip(&v.elem)
        .map(|(f, g)| Matrix::companion(f)?.kronecker(&Matrix::companion(g)?)?.char_poly())
        .collect::<Result<Vec<_>>>()?;
    let ring = u.ring.clone();
    let mut err = None;
    let out = KSeq::tabulate(elem, |i| match (u.kterm(i), v.kterm(i)) {
        (Ok(a), Ok(b)) => vec![ring.mul(&a[0], &b[0])],
        (Err(e), _) | (_, Err(e)) => {
            err = Some(e);
            zero_value(1)
        }
    })?;
    err.map_or(Ok(out), Err)
}

/// Binomial convolution `Σ_{t <= n} C(n, t) u(t) v(n - t)`, axis
/// polynomials `χ(S_f ⊗ E + E ⊗ S_g)`.
pub fn k_hurwitz(u: &KSeq, v: &KSeq) -> Result<KSeq> {
    check_pair(u, v)?;
    let elem = u
        .elem
        .iter()
        .zip(&v.elem)
        .map(|(f, g)| Matrix::companion(f)?.kronecker_sum(&Matrix::companion(g)?)?.char_poly())
        .collect::<Result<Vec<_>>>()?;
    let ring = u.ring.clone();
    let l: Vec<usize> = elem.iter().map(Poly::deg).collect();
    let binom = pascal(&ring, l.iter().copied().max().unwrap_or(0));
    let mut cache: HashMap<Vec<u64>, (BigInt, BigInt)> = HashMap::new();
    let mut at = |t: &[u64]| -> Result<(BigInt, BigInt)> {
        if let Some(p) = cache.get(t) {
            return Ok(p.clone());
        }
        let p = (u.kterm(t)?.swap_remove(0), v.kterm(t)?.swap_remove(0));
        cache.insert(t.to_vec(), p.clone());
        Ok(p)
    };
    let mut err = None;
    let out = KSeq::tabulate(elem, |n| {
        let box_l: Vec<usize> = n.iter().map(|&nj| nj as usize + 1).collect();
        let mut acc = ring.zero();
        for t in polyhedron_chain(&box_l) {
            let rest: Vec<u64> = n.iter().zip(&t).map(|(a, b)| a - b).collect();
            let c = n
                .iter()
                .zip(&t)
                .fold(ring.one(), |c, (&nj, &tj)| ring.mul(&c, &binom[nj as usize][tj as usize]));
            match (at(&t), at(&rest)) {
                (Ok((ut, _)), Ok((_, vr))) => ring.mul_add_assign(&mut acc, &c, &ring.mul(&ut, &vr)),
                (Err(e), _) | (_, Err(e)) => err = Some(e),
            }
        }
        vec![acc]
    })?;
    err.map_or(Ok(out), Err)
}

/// `ε(w) = w(0)`.
pub fn k_counit(w: &KSeq) -> Value {
    w.values[0].clone()
}

/// `Δ(w) = Σ_{t in polyhedron} (x^t ⇀ w) ⊗ e_t`.
pub fn k_delta(w: &KSeq) -> Result<Vec<KTensorPair>> {
    w.require_scalar()?;
    w.chain
        .iter()
        .map(|t| {
            Ok(KTensorPair {
                left: kshift(&vec![(t.clone(), BigInt::one())], w)?,
                right: k_impulse(&w.elem, t)?,
            })
        })
        .collect()
}

/// Per-axis data for the birecursive extension: agreement threshold `d`
/// and reversible annihilator `q`.
fn axis_reversal(f: &Poly) -> Result<(usize, Poly)> {
    if f.is_reversible() {
        return Ok((0, f.clone()));
    }
    let split = f.split_x_part()?;
    if !split.unit_constant {
        return Err(Error::NotReversible(f.to_string()));
    }
    Ok((split.d, split.q))
}

/// Value at `z ∈ Z^k` of the unique birecursive extension of `w`,
/// backsolving along axes `0, 1, ..., k-1`.
pub fn k_reverse_term(w: &KSeq, z: &[i64]) -> Result<Value> {
    let order: Vec<usize> = (0..w.k()).collect();
    k_reverse_term_with_order(w, z, &order)
}

/// As [`k_reverse_term`] with an explicit axis order.
pub fn k_reverse_term_with_order(w: &KSeq, z: &[i64], order: &[usize]) -> Result<Value> {
    w.check_arity(z.len())?;
    let mut seen = vec![false; w.k()];
    for &a in order {
        if a >= w.k() || std::mem::replace(&mut seen[a], true) {
            return Err(Error::Invalid(format!("axis order {order:?} is not a permutation")));
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Invalid(format!("axis order {order:?} is not a permutation")));
    }
    let axes = w.elem.iter().map(axis_reversal).collect::<Result<Vec<_>>>()?;
    let mut point = z.to_vec();
    reverse_rec(w, &axes, order, &mut point)
}

fn reverse_rec(w: &KSeq, axes: &[(usize, Poly)], order: &[usize], point: &mut [i64]) -> Result<Value> {
    let Some((&axis, rest)) = order.split_first() else {
        let n: Vec<u64> = point.iter().map(|&c| c as u64).collect();
        return w.kterm(&n);
    };
    let (d, q) = &axes[axis];
    let zj = point[axis];
    let d = *d as i64;
    if zj >= d {
        return reverse_rec(w, axes, rest, point);
    }
    if q.deg() == 0 {
        return Ok(zero_value(w.dim));
    }
    // Along this axis the extension is q-birecursive from index d on.
    let r = Poly::x_laurent_power_rem(zj - d, q)?;
    let mut acc = zero_value(w.dim);
    for (i, c) in r.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        point[axis] = d + i as i64;
        let v = reverse_rec(w, axes, rest, point)?;
        value_axpy(&w.ring, &mut acc, c, &v);
    }
    point[axis] = zj;
    Ok(acc)
}
