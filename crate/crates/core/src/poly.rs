//! Sparse Laurent polynomials in colored variables `z[color, index]` over `Q(q)`.
//!
//! A [`MultiLaurent`] stores a sorted variable registry and a map from dense
//! exponent vectors (one slot per registered variable) to nonzero coefficients.
//! Registries are trimmed to the variables that actually occur, so two equal
//! polynomials have identical representations. Binary operations merge
//! registries by variable identity.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{EvalError, NotDivisible};
use crate::qring::{rational_pow, QMonomial, RatQ};

/// A variable: either `z[color, index]` or an auxiliary variable such as `w` or `t`.
///
/// Colored variables sort before auxiliary ones, then by `(color, index)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub aux: bool,
    pub color: u32,
    pub index: u32,
}

impl VarId {
    pub const fn z(color: u32, index: u32) -> Self {
        VarId {
            aux: false,
            color,
            index,
        }
    }

    pub const fn aux(index: u32) -> Self {
        VarId {
            aux: true,
            color: 0,
            index,
        }
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.aux {
            write!(f, "x[{}]", self.index)
        } else {
            write!(f, "z[{},{}]", self.color, self.index)
        }
    }
}

pub(crate) type TermMap = BTreeMap<Vec<i32>, RatQ>;

/// Sparse multivariate Laurent polynomial with `Q(q)` coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiLaurent {
    vars: Vec<VarId>,
    terms: TermMap,
}

fn union_vars(a: &[VarId], b: &[VarId]) -> Vec<VarId> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                out.push(*x);
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(*x);
                i += 1;
            }
            (Some(x), None) => {
                out.push(*x);
                i += 1;
            }
            (_, Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn positions(from: &[VarId], into: &[VarId]) -> Vec<usize> {
    from.iter()
        .map(|v| {
            into.binary_search(v)
                .expect("target registry contains source")
        })
        .collect()
}

fn add_into(map: &mut TermMap, key: Vec<i32>, c: RatQ) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl MultiLaurent {
    pub fn zero() -> Self {
        MultiLaurent {
            vars: Vec::new(),
            terms: TermMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(RatQ::one())
    }

    pub fn constant(c: RatQ) -> Self {
        let mut terms = TermMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiLaurent {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(v: VarId) -> Self {
        Self::monomial(RatQ::one(), &[(v, 1)])
    }

    /// `c * prod v^e`; repeated variables add their exponents.
    pub fn monomial(c: RatQ, powers: &[(VarId, i32)]) -> Self {
        let mut vars: Vec<VarId> = powers.iter().map(|p| p.0).collect();
        vars.sort();
        vars.dedup();
        let mut key = vec![0; vars.len()];
        for (v, e) in powers {
            key[vars.binary_search(v).unwrap()] += e;
        }
        let mut terms = TermMap::new();
        if !c.is_zero() {
            terms.insert(key, c);
        }
        Self::from_raw(vars, terms)
    }

    /// The binomial `a z_i - b z_j` as a polynomial.
    pub fn binomial(b: &Binomial) -> Self {
        let x = Self::monomial(b.a.to_ratq(), &[(b.i, 1)]);
        let y = Self::monomial(b.b.to_ratq(), &[(b.j, 1)]);
        &x - &y
    }

    /// Builds from a registry and exponent map, dropping zeros and unused variables.
    pub(crate) fn from_raw(vars: Vec<VarId>, mut terms: TermMap) -> Self {
        debug_assert!(vars.windows(2).all(|w| w[0] < w[1]));
        terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..vars.len())
            .map(|k| terms.keys().any(|e| e[k] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return MultiLaurent { vars, terms };
        }
        let keep: Vec<usize> = (0..vars.len()).filter(|&k| used[k]).collect();
        let new_vars = keep.iter().map(|&k| vars[k]).collect();
        let new_terms = terms
            .into_iter()
            .map(|(e, c)| (keep.iter().map(|&k| e[k]).collect(), c))
            .collect();
        MultiLaurent {
            vars: new_vars,
            terms: new_terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Variables that occur, in sorted order.
    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    /// Terms as `(exponent vector over vars(), coefficient)`, ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i32], &RatQ)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// The constant coefficient when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<RatQ> {
        if self.vars.is_empty() {
            Some(self.terms.get(&Vec::new()).cloned().unwrap_or_default())
        } else {
            None
        }
    }

    /// Exponent vectors re-expressed over a superset registry.
    pub(crate) fn reindexed(&self, target: &[VarId]) -> TermMap {
        if self.vars.as_slice() == target {
            return self.terms.clone();
        }
        let pos = positions(&self.vars, target);
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut k = vec![0; target.len()];
                for (p, x) in pos.iter().zip(e) {
                    k[*p] = *x;
                }
                (k, c.clone())
            })
            .collect()
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let vars = union_vars(&self.vars, &other.vars);
        let mut acc = self.reindexed(&vars);
        let pos = positions(&other.vars, &vars);
        for (e, c) in &other.terms {
            let mut k = vec![0; vars.len()];
            for (p, x) in pos.iter().zip(e) {
                k[*p] = *x;
            }
            add_into(&mut acc, k, if negate { -c } else { c.clone() });
        }
        Self::from_raw(vars, acc)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let vars = union_vars(&self.vars, &other.vars);
        let a = self.reindexed(&vars);
        let b = other.reindexed(&vars);
        let mut acc = TermMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let k: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                add_into(&mut acc, k, ca * cb);
            }
        }
        Self::from_raw(vars, acc)
    }

    pub fn scale(&self, c: &RatQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiLaurent {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn scale_monomial(&self, m: &QMonomial) -> Self {
        MultiLaurent {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.mul_monomial(m)))
                .collect(),
        }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&RatQ) -> RatQ) -> Self {
        Self::from_raw(
            self.vars.clone(),
            self.terms.iter().map(|(e, c)| (e.clone(), f(c))).collect(),
        )
    }

    /// `q -> q^-1` on every coefficient.
    pub fn bar(&self) -> Self {
        self.map_coeffs(|c| c.bar())
    }

    /// Renames variables through `f`; if two variables collide their exponents add.
    pub fn rename(&self, f: impl Fn(VarId) -> VarId) -> Self {
        let images: Vec<VarId> = self.vars.iter().map(|v| f(*v)).collect();
        let mut vars = images.clone();
        vars.sort();
        vars.dedup();
        let pos = positions(&images, &vars);
        let mut acc = TermMap::new();
        for (e, c) in &self.terms {
            let mut k = vec![0; vars.len()];
            for (p, x) in pos.iter().zip(e) {
                k[*p] += *x;
            }
            add_into(&mut acc, k, c.clone());
        }
        Self::from_raw(vars, acc)
    }

    /// Replaces every occurrence of `target` by `image * v`.
    pub fn substitute(&self, target: VarId, image: &QMonomial, v: VarId) -> Self {
        let Ok(t) = self.vars.binary_search(&target) else {
            return self.clone();
        };
        let mut vars: Vec<VarId> = self.vars.iter().copied().filter(|x| *x != target).collect();
        if let Err(p) = vars.binary_search(&v) {
            vars.insert(p, v);
        }
        let pv = vars.binary_search(&v).unwrap();
        let others: Vec<(usize, usize)> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != t)
            .map(|(k, x)| (k, vars.binary_search(x).unwrap()))
            .collect();
        let mut acc = TermMap::new();
        for (e, c) in &self.terms {
            let mut k = vec![0; vars.len()];
            for &(src, dst) in &others {
                k[dst] = e[src];
            }
            k[pv] += e[t];
            add_into(&mut acc, k, c.mul_monomial(&image.pow(e[t] as i64)));
        }
        Self::from_raw(vars, acc)
    }

    /// Sum of `self` over every permutation of `vars` (the full symmetric group, no averaging).
    pub fn symmetrize(&self, vars: &[VarId]) -> Self {
        let mut acc = Self::zero();
        for perm in permutations(vars.len()) {
            acc = &acc
                + &self.rename(|x| match vars.iter().position(|y| *y == x) {
                    Some(k) => vars[perm[k]],
                    None => x,
                });
        }
        acc
    }

    /// [`symmetrize`](Self::symmetrize) over `z[color, 1..=n]`.
    pub fn symmetrize_color(&self, color: u32, n: u32) -> Self {
        self.symmetrize(&color_vars(color, n))
    }

    /// [`is_symmetric`](Self::is_symmetric) over `z[color, 1..=n]`.
    pub fn is_symmetric_color(&self, color: u32, n: u32) -> bool {
        self.is_symmetric(&color_vars(color, n))
    }

    /// Invariance under each adjacent transposition of `vars`.
    pub fn is_symmetric(&self, vars: &[VarId]) -> bool {
        vars.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            let swapped = self.rename(|x| {
                if x == a {
                    b
                } else if x == b {
                    a
                } else {
                    x
                }
            });
            swapped == *self
        })
    }

    /// Exact quotient by `a z_i - b z_j`.
    ///
    /// Synthetic division in `z_i` with the other variables as coefficients;
    /// fails when the remainder is nonzero, i.e. when `self` does not vanish on
    /// `a z_i = b z_j`.
    pub fn exact_divide(&self, d: &Binomial) -> Result<Self, NotDivisible> {
        assert!(d.i != d.j, "binomial needs two distinct variables");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // a z_i - b z_j = a (z_i - r z_j) with r = b/a
        let r = &d.b * &d.a.inv();
        let quot = self.divide_monic(d.i, &r, d.j)?;
        Ok(quot.scale_monomial(&d.a.inv()))
    }

    fn divide_monic(&self, x: VarId, r: &QMonomial, y: VarId) -> Result<Self, NotDivisible> {
        let vars = union_vars(&union_vars(&self.vars, &[x]), &[y]);
        let px = vars.binary_search(&x).unwrap();
        let py = vars.binary_search(&y).unwrap();
        let mut by_deg: BTreeMap<i32, TermMap> = BTreeMap::new();
        for (mut e, c) in self.reindexed(&vars) {
            let dx = core::mem::replace(&mut e[px], 0);
            by_deg.entry(dx).or_default().insert(e, c);
        }
        let lo = *by_deg.keys().next().unwrap();
        let hi = *by_deg.keys().next_back().unwrap();
        let mut quotient = TermMap::new();
        let mut carry: Option<TermMap> = None;
        for deg in (lo..=hi).rev() {
            let mut cur = by_deg.remove(&deg).unwrap_or_default();
            if let Some(h) = carry.take() {
                for (mut e, c) in h {
                    e[py] += 1;
                    add_into(&mut cur, e, c.mul_monomial(r));
                }
            }
            if deg == lo {
                if !cur.is_empty() {
                    return Err(NotDivisible);
                }
                break;
            }
            for (e, c) in &cur {
                let mut k = e.clone();
                k[px] = deg - 1;
                quotient.insert(k, c.clone());
            }
            carry = Some(cur);
        }
        Ok(Self::from_raw(vars, quotient))
    }

    /// Exact value at `q = q0` and the given variable values.
    pub fn eval(
        &self,
        q0: &BigRational,
        values: &BTreeMap<VarId, BigRational>,
    ) -> Result<BigRational, EvalError> {
        let mut xs = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let x = values.get(v).ok_or(EvalError::MissingValue(*v))?;
            if x.is_zero() {
                return Err(EvalError::ZeroValue);
            }
            xs.push(x);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut m = c.eval_at(q0)?;
            for (x, k) in xs.iter().zip(e) {
                if *k != 0 {
                    m *= rational_pow(x, *k as i64);
                }
            }
            acc += m;
        }
        Ok(acc)
    }

    /// Exponent range of `v` over all terms, `(0, 0)` if absent.
    pub fn degree_range(&self, v: VarId) -> (i32, i32) {
        match self.vars.binary_search(&v) {
            Err(_) => (0, 0),
            Ok(k) => {
                let lo = self.terms.keys().map(|e| e[k]).min().unwrap_or(0);
                let hi = self.terms.keys().map(|e| e[k]).max().unwrap_or(0);
                (lo, hi)
            }
        }
    }

    /// Terms in canonical serialization order: lexicographic over the sorted
    /// variables, larger exponents first.
    pub fn canonical_terms(&self) -> impl Iterator<Item = (Vec<(VarId, i32)>, &RatQ)> {
        self.terms.iter().rev().map(move |(e, c)| {
            let mono = self
                .vars
                .iter()
                .zip(e)
                .filter(|(_, k)| **k != 0)
                .map(|(v, k)| (*v, *k))
                .collect();
            (mono, c)
        })
    }

    /// One line per term: `(<coefficient>) | <monomial>`.
    pub fn to_term_list(&self) -> String {
        let mut s = String::new();
        for (k, (mono, c)) in self.canonical_terms().enumerate() {
            if k > 0 {
                s.push('\n');
            }
            let _ = write!(s, "({}) | {}", c, MonomialText(&mono));
        }
        s
    }
}

/// Renders `[(z[1,1], 2), (z[2,1], -1)]` as `z[1,1]^2 z[2,1]^-1`; the empty monomial as `1`.
pub struct MonomialText<'a>(pub &'a [(VarId, i32)]);

impl fmt::Display for MonomialText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (mono, c)) in self.canonical_terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*{}", c, MonomialText(&mono))?;
        }
        Ok(())
    }
}

crate::qring::forward_binop!(Add, add, MultiLaurent, |a, b| a.combine(b, false));
crate::qring::forward_binop!(Sub, sub, MultiLaurent, |a, b| a.combine(b, true));
crate::qring::forward_binop!(Mul, mul, MultiLaurent, |a, b| a.product(b));
use core::ops::{Add, Mul, Neg, Sub};

impl Neg for &MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        self.scale(&-RatQ::one())
    }
}

impl Neg for MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        -&self
    }
}

/// The binomial `a z_i - b z_j` with q-monomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Binomial {
    pub a: QMonomial,
    pub i: VarId,
    pub b: QMonomial,
    pub j: VarId,
}

impl Binomial {
    pub fn new(a: QMonomial, i: VarId, b: QMonomial, j: VarId) -> Self {
        assert!(i != j, "binomial needs two distinct variables");
        Binomial { a, i, b, j }
    }

    /// `z_i - c z_j`.
    pub fn monic(i: VarId, c: QMonomial, j: VarId) -> Self {
        Self::new(QMonomial::one(), i, c, j)
    }
}

/// `z[color, 1], ..., z[color, n]`.
pub fn color_vars(color: u32, n: u32) -> Vec<VarId> {
    (1..=n).map(|i| VarId::z(color, i)).collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

#[cfg(test)]
fn factorial(n: usize) -> u64 {
    (1..=n as u64).product::<u64>().max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::LaurentQ;

    fn z(i: u32) -> VarId {
        VarId::z(1, i)
    }
    fn zp(i: u32) -> MultiLaurent {
        MultiLaurent::var(z(i))
    }
    fn qm(e: i32) -> QMonomial {
        QMonomial::q_pow(e)
    }
    fn c(e: i32) -> RatQ {
        RatQ::q_pow(e)
    }

    #[test]
    fn arithmetic_examples() {
        assert!((&(&zp(1) - &zp(2)) + &(&zp(2) - &zp(1))).is_zero());
        let lhs = &(&zp(1) - &zp(2).scale(&c(2))) * &(&zp(2) - &zp(1).scale(&c(2)));
        let expect = &(&(&zp(1) * &zp(2)).scale(&(&RatQ::one() + &c(4)))
            - &MultiLaurent::monomial(c(2), &[(z(1), 2)]))
            - &MultiLaurent::monomial(c(2), &[(z(2), 2)]);
        assert_eq!(lhs, expect);
        let inv = MultiLaurent::monomial(RatQ::one(), &[(z(1), -1)]);
        assert_eq!(&inv * &zp(1), MultiLaurent::one());
        assert!((&inv * &zp(1)).vars().is_empty());
    }

    #[test]
    fn substitution_examples() {
        let t = VarId::aux(1);
        let f = &zp(1) - &zp(2).scale(&c(2));
        assert!(f.substitute(z(1), &qm(2), z(2)).is_zero());
        let g = &zp(1) * &zp(2);
        assert_eq!(
            g.substitute(z(1), &qm(-2), t),
            MultiLaurent::monomial(c(-2), &[(t, 1), (z(2), 1)])
        );
        let h = MultiLaurent::monomial(RatQ::one(), &[(z(1), -1)]);
        assert_eq!(
            h.substitute(z(1), &qm(1), t),
            MultiLaurent::monomial(c(-1), &[(t, -1)])
        );
    }

    #[test]
    fn symmetrize_examples() {
        let vars = [z(1), z(2)];
        assert_eq!(zp(1).symmetrize(&vars), &zp(1) + &zp(2));
        assert!((&zp(1) - &zp(2)).symmetrize(&vars).is_zero());
        let f = MultiLaurent::monomial(RatQ::one(), &[(z(1), 2), (z(2), 1)]);
        let g = MultiLaurent::monomial(RatQ::one(), &[(z(2), 2), (z(1), 1)]);
        assert_eq!(f.symmetrize(&vars), &f + &g);
    }

    #[test]
    fn symmetry_examples() {
        let vars = [z(1), z(2)];
        assert!((&zp(1) * &zp(2)).is_symmetric(&vars));
        assert!(!(&zp(1) - &zp(2)).is_symmetric(&vars));
        let f = &(&(&zp(1) * &zp(1)) + &(&zp(2) * &zp(2)))
            - &(&zp(1) * &zp(2)).scale(&RatQ::from_integer(5));
        assert!(f.is_symmetric(&vars));
    }

    #[test]
    fn exact_divide_examples() {
        let d = Binomial::monic(z(1), qm(2), z(2));
        let f = &(&zp(1) * &zp(1)) - &(&zp(2) * &zp(2)).scale(&c(4));
        assert_eq!(f.exact_divide(&d).unwrap(), &zp(1) + &zp(2).scale(&c(2)));

        let g = &(&zp(1) * &zp(1)) + &(&zp(2) * &zp(2));
        assert_eq!(
            g.exact_divide(&Binomial::monic(z(1), qm(0), z(2))),
            Err(NotDivisible)
        );

        let a = &zp(1) - &zp(2);
        let b = &zp(1) - &zp(3).scale(&c(2));
        let prod = &a * &b;
        assert_eq!(
            prod.exact_divide(&Binomial::monic(z(1), qm(2), z(3)))
                .unwrap(),
            a
        );
    }

    #[test]
    fn exact_divide_general_binomial_and_laurent() {
        // (q^2 z1 - z2) * z1^-2 z2^3 / (q^2 z1 - z2)
        let d = Binomial::new(qm(2), z(1), qm(0), z(2));
        let h = MultiLaurent::monomial(RatQ::from_integer(3), &[(z(1), -2), (z(2), 3)]);
        let f = &h * &MultiLaurent::binomial(&d);
        assert_eq!(f.exact_divide(&d).unwrap(), h);
        // a lone monomial is never divisible
        assert_eq!(h.exact_divide(&d), Err(NotDivisible));
    }

    #[test]
    fn term_list_format() {
        let f = &MultiLaurent::monomial(RatQ::one(), &[(VarId::z(1, 1), 2), (VarId::z(2, 1), -1)])
            + &MultiLaurent::constant(RatQ::from_laurent(LaurentQ::from_terms([
                (2, crate::qring::rational(1, 1)),
                (0, crate::qring::rational(1, 1)),
            ])));
        assert_eq!(f.to_term_list(), "(1) | z[1,1]^2 z[2,1]^-1\n(q^2 + 1) | 1");
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(4).len(), factorial(4) as usize);
    }
}
