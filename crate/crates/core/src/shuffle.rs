//! The shuffle algebra of a Cartan datum.
//!
//! An element of degree `n = (n_1, ..., n_r)` is a rational function in the
//! variables `z[a, 1..=n_a]` of the form
//!
//! ```text
//! f = prod_a prod_{i<j} (z[a,i] - z[a,j]) * A / D
//! ```
//!
//! where `A` is a Laurent polynomial symmetric in each color and `D` is the
//! canonical denominator, one binomial per pair of variables `u < v` (variables
//! ordered color-major). With the product-compatible orientation the factor is
//! `u - q^(a,b) v`; the as-printed orientation uses `q^(a,b) u - v`.
//!
//! The product of `f` of degree `n` and `g` of degree `m` sums over the shuffles
//! of each color's variables between `f` and `g`, with a factor
//! `(q^p u - v)/(u - q^p v)` for each pair `u < v` where `u` is fed to `g` and
//! `v` to `f`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cartan::CartanData;
use crate::error::{CartanError, ClosureViolation, ShuffleError};
use crate::poly::{color_vars, permutations, Binomial, MultiLaurent, VarId};
use crate::qring::{q_binomial, QMonomial, RatQ};
use crate::ratfun::RatFun;

/// Which side of each shifted diagonal carries the pole.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Factors `z_i - q^(a,b) z_j`; generator products have polynomial numerators.
    #[default]
    ProductCompatible,
    /// Factors `q^(a,b) z_i - z_j`.
    AsPrinted,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::ProductCompatible => "default",
            Orientation::AsPrinted => "printed",
        }
    }
}

/// Number of variables of each color.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeVector(pub Vec<u32>);

impl DegreeVector {
    pub fn zero(rank: usize) -> Self {
        DegreeVector(vec![0; rank])
    }

    pub fn unit(rank: usize, alpha: usize) -> Self {
        let mut d = vec![0; rank];
        d[alpha - 1] = 1;
        DegreeVector(d)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Count for the 1-based color `alpha`.
    pub fn get(&self, alpha: usize) -> u32 {
        self.0[alpha - 1]
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All variables, color-major.
    pub fn vars(&self) -> Vec<VarId> {
        let mut v = Vec::new();
        for (a, &n) in self.0.iter().enumerate() {
            v.extend(color_vars(a as u32 + 1, n));
        }
        v
    }

    pub fn add(&self, other: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A word `e_{a_1}[n_1] e_{a_2}[n_2] ...` in the mode generators; colors are 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord(pub Vec<(usize, i32)>);

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (a, n)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "a{}:{}", a, n)?;
        }
        Ok(())
    }
}

/// Degree plus the symmetric numerator `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleElement {
    degree: DegreeVector,
    numerator: MultiLaurent,
}

impl ShuffleElement {
    /// Wraps without checking symmetry; use for deliberately invalid test inputs.
    pub fn from_raw(degree: DegreeVector, numerator: MultiLaurent) -> Self {
        ShuffleElement { degree, numerator }
    }

    pub fn zero(degree: DegreeVector) -> Self {
        ShuffleElement {
            degree,
            numerator: MultiLaurent::zero(),
        }
    }

    pub fn degree(&self) -> &DegreeVector {
        &self.degree
    }

    pub fn numerator(&self) -> &MultiLaurent {
        &self.numerator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Sum of two elements of equal degree.
    pub fn add(&self, other: &ShuffleElement) -> ShuffleElement {
        assert_eq!(
            self.degree, other.degree,
            "adding elements of different degree"
        );
        ShuffleElement {
            degree: self.degree.clone(),
            numerator: &self.numerator + &other.numerator,
        }
    }

    pub fn scale(&self, c: &RatQ) -> ShuffleElement {
        ShuffleElement {
            degree: self.degree.clone(),
            numerator: self.numerator.scale(c),
        }
    }

    /// Symmetric in every color group.
    pub fn is_valid(&self) -> bool {
        self.degree
            .0
            .iter()
            .enumerate()
            .all(|(a, &n)| self.numerator.is_symmetric_color(a as u32 + 1, n))
    }
}

/// Outcome of a wheel condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WheelOutcome {
    /// The degree is too small for the chain to exist.
    Vacuous,
    Satisfied,
    Violated,
}

impl WheelOutcome {
    pub fn holds(self) -> bool {
        self != WheelOutcome::Violated
    }
}

/// The parameter of the wheel chain.
pub const WHEEL_T: VarId = VarId::aux(1);

/// Per color, the indices fed to `f` and those fed to `g`, each increasing.
type Shuffle = Vec<(Vec<u32>, Vec<u32>)>;

fn subsets(n: u32, k: u32) -> Vec<Vec<u32>> {
    fn rec(start: u32, n: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() as u32 == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn shuffles(nf: &DegreeVector, ng: &DegreeVector) -> Vec<Shuffle> {
    let mut acc: Vec<Shuffle> = vec![Vec::new()];
    for (a, b) in nf.0.iter().zip(&ng.0) {
        let mut next = Vec::new();
        for s in subsets(a + b, *a) {
            let rest: Vec<u32> = (1..=a + b).filter(|i| !s.contains(i)).collect();
            for prefix in &acc {
                let mut p = prefix.clone();
                p.push((s.clone(), rest.clone()));
                next.push(p);
            }
        }
        acc = next;
    }
    acc
}

/// Image of a variable of the factor (`f` if `first`) under a shuffle.
fn relabel(sh: &Shuffle, first: bool, v: VarId) -> VarId {
    let (fs, gs) = &sh[v.color as usize - 1];
    let idx = if first { fs } else { gs };
    VarId::z(v.color, idx[v.index as usize - 1])
}

/// Exact quotient by the same-color Vandermonde product.
fn divide_vandermonde(
    p: &MultiLaurent,
    degree: &DegreeVector,
) -> Result<MultiLaurent, ClosureViolation> {
    let mut p = p.clone();
    for (a, &n) in degree.0.iter().enumerate() {
        let c = a as u32 + 1;
        for i in 1..=n {
            for j in i + 1..=n {
                let b = Binomial::monic(VarId::z(c, i), QMonomial::one(), VarId::z(c, j));
                p = p
                    .exact_divide(&b)
                    .map_err(|_| ClosureViolation::NotPolynomial)?;
            }
        }
    }
    Ok(p)
}

/// Same-color Vandermonde `prod_a prod_{i<j} (z[a,i] - z[a,j])`.
pub fn vandermonde(degree: &DegreeVector) -> MultiLaurent {
    let mut p = MultiLaurent::one();
    for (a, &n) in degree.0.iter().enumerate() {
        let c = a as u32 + 1;
        for i in 1..=n {
            for j in i + 1..=n {
                p = &p * &(&MultiLaurent::var(VarId::z(c, i)) - &MultiLaurent::var(VarId::z(c, j)));
            }
        }
    }
    p
}

/// A Cartan datum together with the pole orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleAlgebra {
    cartan: CartanData,
    orientation: Orientation,
}

impl ShuffleAlgebra {
    pub fn new(cartan: CartanData, orientation: Orientation) -> Self {
        ShuffleAlgebra {
            cartan,
            orientation,
        }
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    fn pair_exp(&self, u: VarId, v: VarId) -> i32 {
        self.cartan
            .pairing(u.color as usize, v.color as usize)
            .expect("colors are in range")
    }

    /// `u - q^p v`, the product-compatible factor of the pair `u < v`.
    fn compatible_factor(&self, u: VarId, v: VarId) -> Binomial {
        Binomial::monic(u, QMonomial::q_pow(self.pair_exp(u, v)), v)
    }

    /// `q^p u - v`.
    fn printed_factor(&self, u: VarId, v: VarId) -> Binomial {
        Binomial::new(
            QMonomial::q_pow(self.pair_exp(u, v)),
            u,
            QMonomial::one(),
            v,
        )
    }

    /// One factor per pair of variables `u < v`, in the configured orientation.
    pub fn canonical_denominator(&self, degree: &DegreeVector) -> Vec<Binomial> {
        let vars = degree.vars();
        let mut out = Vec::new();
        for (k, &u) in vars.iter().enumerate() {
            for &v in &vars[k + 1..] {
                out.push(match self.orientation {
                    Orientation::ProductCompatible => self.compatible_factor(u, v),
                    Orientation::AsPrinted => self.printed_factor(u, v),
                });
            }
        }
        out
    }

    fn check_degree(&self, d: &DegreeVector) -> Result<(), ClosureViolation> {
        if d.rank() != self.rank() {
            Err(ClosureViolation::RankMismatch)
        } else {
            Ok(())
        }
    }

    pub fn unit(&self) -> ShuffleElement {
        ShuffleElement {
            degree: DegreeVector::zero(self.rank()),
            numerator: MultiLaurent::one(),
        }
    }

    /// The image of `e_alpha[n]`: `z[alpha,1]^n` in degree `delta_alpha`.
    pub fn generator(&self, alpha: usize, n: i32) -> Result<ShuffleElement, CartanError> {
        self.cartan.symmetrizer(alpha)?;
        Ok(ShuffleElement {
            degree: DegreeVector::unit(self.rank(), alpha),
            numerator: MultiLaurent::monomial(RatQ::one(), &[(VarId::z(alpha as u32, 1), n)]),
        })
    }

    /// The rational function an element denotes.
    pub fn to_rational(&self, f: &ShuffleElement) -> RatFun {
        let num = &vandermonde(&f.degree) * &f.numerator;
        RatFun::new(num, &self.canonical_denominator(&f.degree))
    }

    /// Extracts the canonical numerator from a rational function of the given degree.
    pub fn from_rational(
        &self,
        degree: &DegreeVector,
        r: &RatFun,
    ) -> Result<ShuffleElement, ClosureViolation> {
        self.check_degree(degree)?;
        let mut d = MultiLaurent::one();
        for b in self.canonical_denominator(degree) {
            d = &d * &MultiLaurent::binomial(&b);
        }
        let cleared = r.mul_poly(&d);
        let p = cleared.as_poly().ok_or(ClosureViolation::NotPolynomial)?;
        let a = divide_vandermonde(p, degree)?;
        self.finish(degree.clone(), a)
    }

    fn finish(
        &self,
        degree: DegreeVector,
        a: MultiLaurent,
    ) -> Result<ShuffleElement, ClosureViolation> {
        for (k, &n) in degree.0.iter().enumerate() {
            if !a.is_symmetric_color(k as u32 + 1, n) {
                return Err(ClosureViolation::NotSymmetric(k as u32 + 1));
            }
        }
        Ok(ShuffleElement {
            degree,
            numerator: a,
        })
    }

    /// The shuffle product.
    pub fn mul(
        &self,
        f: &ShuffleElement,
        g: &ShuffleElement,
    ) -> Result<ShuffleElement, ClosureViolation> {
        self.check_degree(&f.degree)?;
        self.check_degree(&g.degree)?;
        match self.orientation {
            Orientation::ProductCompatible => self.mul_numerators(f, g),
            Orientation::AsPrinted => {
                let r = self.mul_rational(
                    &self.to_rational(f),
                    &f.degree,
                    &self.to_rational(g),
                    &g.degree,
                );
                self.from_rational(&f.degree.add(&g.degree), &r)
            }
        }
    }

    /// Numerator pipeline in the product-compatible orientation: every summand is
    /// brought over the full canonical denominator, the polynomial numerators are
    /// summed, and the Vandermonde is divided out exactly.
    fn mul_numerators(
        &self,
        f: &ShuffleElement,
        g: &ShuffleElement,
    ) -> Result<ShuffleElement, ClosureViolation> {
        let degree = f.degree.add(&g.degree);
        let vf = &vandermonde(&f.degree) * &f.numerator;
        let vg = &vandermonde(&g.degree) * &g.numerator;
        let vars = degree.vars();
        let mut total = MultiLaurent::zero();
        for sh in shuffles(&f.degree, &g.degree) {
            let from_f: BTreeMap<VarId, bool> = vars
                .iter()
                .map(|&v| {
                    let (fs, _) = &sh[v.color as usize - 1];
                    (v, fs.contains(&v.index))
                })
                .collect();
            let mut term =
                &vf.rename(|v| relabel(&sh, true, v)) * &vg.rename(|v| relabel(&sh, false, v));
            for (k, &u) in vars.iter().enumerate() {
                for &v in &vars[k + 1..] {
                    let (fu, fv) = (from_f[&u], from_f[&v]);
                    if fu == fv {
                        continue;
                    }
                    let b = if fv {
                        self.printed_factor(u, v)
                    } else {
                        self.compatible_factor(u, v)
                    };
                    term = &term * &MultiLaurent::binomial(&b);
                }
            }
            total = &total + &term;
        }
        let a = divide_vandermonde(&total, &degree)?;
        self.finish(degree, a)
    }

    /// The product computed directly on rational functions.
    pub fn mul_rational(
        &self,
        f: &RatFun,
        nf: &DegreeVector,
        g: &RatFun,
        ng: &DegreeVector,
    ) -> RatFun {
        let vars = nf.add(ng).vars();
        let mut terms = Vec::new();
        for sh in shuffles(nf, ng) {
            let from_f = |v: VarId| sh[v.color as usize - 1].0.contains(&v.index);
            let mut t =
                &f.rename(|v| relabel(&sh, true, v)) * &g.rename(|v| relabel(&sh, false, v));
            for (k, &u) in vars.iter().enumerate() {
                for &v in &vars[k + 1..] {
                    if !from_f(u) && from_f(v) {
                        let num = MultiLaurent::binomial(&self.printed_factor(u, v));
                        t = &t * &RatFun::new(num, &[self.compatible_factor(u, v)]);
                    }
                }
            }
            terms.push(t);
        }
        RatFun::sum(terms.iter())
    }

    /// Left fold of the product over the generator images; the empty word is the unit.
    pub fn pi_word(&self, word: &FreeWord) -> Result<ShuffleElement, ShuffleError> {
        let mut acc = self.unit();
        for &(a, n) in &word.0 {
            let g = self.generator(a, n)?;
            acc = self.mul(&acc, &g)?;
        }
        Ok(acc)
    }

    /// Image in the Feigin-Odesskii presentation: multiply by `prod_{u<v} (u - q^p v)/(u - v)`.
    pub fn to_fo(&self, f: &ShuffleElement) -> RatFun {
        let vars = f.degree.vars();
        let mut num = MultiLaurent::one();
        let mut den = Vec::new();
        for (k, &u) in vars.iter().enumerate() {
            for &v in &vars[k + 1..] {
                num = &num * &MultiLaurent::binomial(&self.compatible_factor(u, v));
                den.push(Binomial::monic(u, QMonomial::one(), v));
            }
        }
        &self.to_rational(f) * &RatFun::new(num, &den)
    }

    /// Exchange relation between adjacent same-color variables, as rational functions.
    ///
    /// Product-compatible orientation: `(z_i - q_a^2 z_j) F = (q_a^2 z_i - z_j) F|swap`;
    /// the as-printed orientation exchanges the two sides.
    pub fn twisted_symmetry_check(&self, f: &ShuffleElement) -> bool {
        let r = self.to_rational(f);
        for (a, &n) in f.degree.0.iter().enumerate() {
            let c = a as u32 + 1;
            for i in 1..n {
                let (u, v) = (VarId::z(c, i), VarId::z(c, i + 1));
                let swapped = r.rename(|x| {
                    if x == u {
                        v
                    } else if x == v {
                        u
                    } else {
                        x
                    }
                });
                let mut lhs = MultiLaurent::binomial(&self.compatible_factor(u, v));
                let mut rhs = MultiLaurent::binomial(&self.printed_factor(u, v));
                if self.orientation == Orientation::AsPrinted {
                    core::mem::swap(&mut lhs, &mut rhs);
                }
                if r.mul_poly(&lhs) != swapped.mul_poly(&rhs) {
                    return false;
                }
            }
        }
        true
    }

    /// Wheel condition for `(alpha, beta)` on the chain through `z[alpha, 1..=N]` and `z[beta, 1]`.
    pub fn wheel_check(
        &self,
        f: &ShuffleElement,
        alpha: usize,
        beta: usize,
    ) -> Result<WheelOutcome, ShuffleError> {
        let n = self.chain_length(alpha, beta)?;
        let chain: Vec<u32> = (1..=n).collect();
        self.wheel_check_at(f, alpha, beta, &chain, 1, false)
    }

    fn chain_length(&self, alpha: usize, beta: usize) -> Result<u32, ShuffleError> {
        if alpha == beta {
            return Err(ShuffleError::SameRoot);
        }
        Ok((1 - self.cartan.entry(alpha, beta)?) as u32)
    }

    /// Wheel condition on an explicit chain of `alpha`-indices and `beta`-index `j`.
    ///
    /// Substitutes `z[alpha, chain[k]] = q_a^(-2k) t` and `z[beta, j] = q_a^(a_ab) t`;
    /// `mirror` uses `q -> q^-1` exponents instead.
    pub fn wheel_check_at(
        &self,
        f: &ShuffleElement,
        alpha: usize,
        beta: usize,
        chain: &[u32],
        j: u32,
        mirror: bool,
    ) -> Result<WheelOutcome, ShuffleError> {
        let n = self.chain_length(alpha, beta)?;
        if chain.len() as u32 != n {
            return Err(ShuffleError::ModeCount {
                expected: n as usize,
                got: chain.len(),
            });
        }
        if f.degree.get(alpha) < n || f.degree.get(beta) < 1 {
            return Ok(WheelOutcome::Vacuous);
        }
        let d = self.cartan.symmetrizer(alpha)? as i32;
        let a = self.cartan.entry(alpha, beta)?;
        let sign = if mirror { -1 } else { 1 };
        let mut p = f.numerator.clone();
        for (k, &i) in chain.iter().enumerate() {
            let e = sign * -2 * d * k as i32;
            p = p.substitute(VarId::z(alpha as u32, i), &QMonomial::q_pow(e), WHEEL_T);
        }
        p = p.substitute(
            VarId::z(beta as u32, j),
            &QMonomial::q_pow(sign * d * a),
            WHEEL_T,
        );
        Ok(if p.is_zero() {
            WheelOutcome::Satisfied
        } else {
            WheelOutcome::Violated
        })
    }

    /// `sum_r (-1)^r [N r]_{q_a} sum_{sigma in S_N} pi(e_a[..] ... e_b[s] ... e_a[..])`
    /// with `e_b[s]` in position `r` and `N = 1 - a_ab`.
    pub fn serre_image(
        &self,
        alpha: usize,
        beta: usize,
        modes: &[i32],
        s: i32,
    ) -> Result<ShuffleElement, ShuffleError> {
        if alpha == beta {
            return Err(ShuffleError::SameRoot);
        }
        let a = self.cartan.entry(alpha, beta)?;
        if a >= 0 {
            return Err(ShuffleError::TrivialSerre(a));
        }
        let n = (1 - a) as usize;
        if modes.len() != n {
            return Err(ShuffleError::ModeCount {
                expected: n,
                got: modes.len(),
            });
        }
        let d = self.cartan.symmetrizer(alpha)? as i32;
        // coefficient of each distinct word
        let mut words: BTreeMap<FreeWord, RatQ> = BTreeMap::new();
        for r in 0..=n {
            let qb = q_binomial(n as i64, r as i64)
                .expect("0 <= r <= n")
                .subs_q_power(d);
            let mut c = RatQ::from_laurent(qb);
            if r % 2 == 1 {
                c = -c;
            }
            for perm in permutations(n) {
                let mut w: Vec<(usize, i32)> = perm.iter().map(|&k| (alpha, modes[k])).collect();
                w.insert(r, (beta, s));
                let e = words.entry(FreeWord(w)).or_default();
                *e += &c;
            }
        }
        let mut degree = DegreeVector::zero(self.rank());
        degree.0[alpha - 1] = n as u32;
        degree.0[beta - 1] += 1;
        let mut acc = ShuffleElement::zero(degree);
        for (w, c) in &words {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&self.pi_word(w)?.scale(c));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Series;

    fn alg(s: Series, r: usize) -> ShuffleAlgebra {
        ShuffleAlgebra::new(
            CartanData::builtin(s, r).unwrap(),
            Orientation::ProductCompatible,
        )
    }
    fn printed(s: Series, r: usize) -> ShuffleAlgebra {
        ShuffleAlgebra::new(CartanData::builtin(s, r).unwrap(), Orientation::AsPrinted)
    }
    fn word(w: &[(usize, i32)]) -> FreeWord {
        FreeWord(w.to_vec())
    }
    fn one_plus_q2() -> RatQ {
        &RatQ::one() + &RatQ::q_pow(2)
    }

    #[test]
    fn canonical_denominators() {
        let a2 = alg(Series::A, 2);
        let d = a2.canonical_denominator(&DegreeVector(vec![1, 1]));
        assert_eq!(
            d,
            vec![Binomial::monic(
                VarId::z(1, 1),
                QMonomial::q_pow(-1),
                VarId::z(2, 1)
            )]
        );
        let d = a2.canonical_denominator(&DegreeVector(vec![2, 0]));
        assert_eq!(
            d,
            vec![Binomial::monic(
                VarId::z(1, 1),
                QMonomial::q_pow(2),
                VarId::z(1, 2)
            )]
        );
        assert!(a2
            .canonical_denominator(&DegreeVector(vec![1, 0]))
            .is_empty());
    }

    #[test]
    fn generators() {
        let a2 = alg(Series::A, 2);
        let g = a2.generator(1, -3).unwrap();
        assert_eq!(
            g.numerator(),
            &MultiLaurent::monomial(RatQ::one(), &[(VarId::z(1, 1), -3)])
        );
        assert_eq!(a2.to_rational(&a2.generator(2, 0).unwrap()), RatFun::one());
        assert!(a2.generator(3, 0).is_err());
    }

    #[test]
    fn same_color_square() {
        let a1 = alg(Series::A, 1);
        let g = a1.generator(1, 0).unwrap();
        let p = a1.mul(&g, &g).unwrap();
        assert_eq!(p.numerator(), &MultiLaurent::constant(one_plus_q2()));
        let p1 = printed(Series::A, 1);
        assert_eq!(p1.mul(&g, &g), Err(ClosureViolation::NotPolynomial));
    }

    #[test]
    fn cross_color_products() {
        let a2 = alg(Series::A, 2);
        let (x, y) = (VarId::z(1, 1), VarId::z(2, 1));
        let e1 = a2.generator(1, 2).unwrap();
        let e2 = a2.generator(2, -1).unwrap();
        let mono = MultiLaurent::monomial(RatQ::one(), &[(x, 2), (y, -1)]);
        let r12 = a2.to_rational(&a2.mul(&e1, &e2).unwrap());
        assert_eq!(r12, RatFun::from_poly(mono.clone()));
        let r21 = a2.to_rational(&a2.mul(&e2, &e1).unwrap());
        let ratio = RatFun::new(
            MultiLaurent::binomial(&Binomial::new(QMonomial::q_pow(-1), x, QMonomial::one(), y)),
            &[Binomial::monic(x, QMonomial::q_pow(-1), y)],
        );
        assert_eq!(r21, &ratio * &RatFun::from_poly(mono));
    }

    #[test]
    fn word_products_and_wheel() {
        let a2 = alg(Series::A, 2);
        assert_eq!(a2.pi_word(&word(&[])).unwrap(), a2.unit());
        let f = a2.pi_word(&word(&[(1, 0), (1, 0), (2, 0)])).unwrap();
        assert_eq!(f.degree(), &DegreeVector(vec![2, 1]));
        assert!(f.is_valid());
        assert_eq!(a2.wheel_check(&f, 1, 2).unwrap(), WheelOutcome::Satisfied);
        assert_eq!(a2.wheel_check(&f, 2, 1).unwrap(), WheelOutcome::Vacuous);
        let raw = ShuffleElement::from_raw(DegreeVector(vec![2, 1]), MultiLaurent::one());
        assert_eq!(a2.wheel_check(&raw, 1, 2).unwrap(), WheelOutcome::Violated);
        assert_eq!(a2.wheel_check(&f, 1, 1), Err(ShuffleError::SameRoot));
    }

    #[test]
    fn oracle_path_agrees() {
        let b2 = alg(Series::B, 2);
        let f = b2.pi_word(&word(&[(2, 1), (1, 0)])).unwrap();
        let g = b2.pi_word(&word(&[(2, -1)])).unwrap();
        let fast = b2.mul(&f, &g).unwrap();
        let slow = b2.mul_rational(
            &b2.to_rational(&f),
            f.degree(),
            &b2.to_rational(&g),
            g.degree(),
        );
        assert_eq!(b2.to_rational(&fast), slow);
    }

    #[test]
    fn serre_examples() {
        let a2 = alg(Series::A, 2);
        assert!(a2.serre_image(1, 2, &[0, 0], 0).unwrap().is_zero());
        assert!(a2.serre_image(1, 2, &[0, 1], -1).unwrap().is_zero());
        let b2 = alg(Series::B, 2);
        assert!(b2.serre_image(2, 1, &[0, 0, 0], 0).unwrap().is_zero());
        assert_eq!(
            b2.serre_image(2, 1, &[0, 0], 0),
            Err(ShuffleError::ModeCount {
                expected: 3,
                got: 2
            })
        );
        assert_eq!(
            a2.serre_image(1, 1, &[0, 0], 0),
            Err(ShuffleError::SameRoot)
        );
    }

    #[test]
    fn orthogonal_roots_commute() {
        let c = CartanData::builtin(Series::A, 1).unwrap();
        let a = ShuffleAlgebra::new(c.direct_sum(&c), Orientation::ProductCompatible);
        let x = a.pi_word(&word(&[(1, 0), (2, 0)])).unwrap();
        let y = a.pi_word(&word(&[(2, 0), (1, 0)])).unwrap();
        assert_eq!(x, y);
        assert_eq!(a.wheel_check(&x, 1, 2).unwrap(), WheelOutcome::Satisfied);
        assert_eq!(
            a.serre_image(1, 2, &[0], 0),
            Err(ShuffleError::TrivialSerre(0))
        );
    }

    #[test]
    fn fo_image() {
        let a1 = alg(Series::A, 1);
        let g = a1.generator(1, 0).unwrap();
        assert_eq!(a1.to_fo(&a1.unit()), RatFun::one());
        assert_eq!(a1.to_fo(&g), RatFun::one());
        let sq = a1.mul(&g, &g).unwrap();
        assert_eq!(
            a1.to_fo(&sq),
            RatFun::from_poly(MultiLaurent::constant(one_plus_q2()))
        );
    }

    #[test]
    fn twisted_symmetry() {
        let a1 = alg(Series::A, 1);
        let (z1, z2) = (
            MultiLaurent::var(VarId::z(1, 1)),
            MultiLaurent::var(VarId::z(1, 2)),
        );
        let d = DegreeVector(vec![2]);
        assert!(a1.twisted_symmetry_check(&a1.generator(1, 3).unwrap()));
        assert!(a1.twisted_symmetry_check(&ShuffleElement::from_raw(d.clone(), &z1 + &z2)));
        assert!(!a1.twisted_symmetry_check(&ShuffleElement::from_raw(d, z1)));
    }
}
