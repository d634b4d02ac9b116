#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

use num_rational::BigRational;
use num_traits::{One, Zero};
use qshuffle::{
    CartanData, FreeWord, MultiLaurent, Orientation, QMonomial, RatFun, Series, ShuffleAlgebra,
    ShuffleElement, VarId,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 20240611;

/// Writes the criterion line past the test harness's output capture.
pub fn report(n: u32, title: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let line = format!("criterion {n:>2} {verdict}: {title} ({detail})\n");
    let _ = std::io::stderr().write_all(line.as_bytes());
}

pub fn algebra(tag: &str) -> ShuffleAlgebra {
    algebra_with(tag, Orientation::ProductCompatible)
}

pub fn algebra_with(tag: &str, orientation: Orientation) -> ShuffleAlgebra {
    let series = Series::from_letter(tag.chars().next().unwrap()).unwrap();
    let rank = tag[1..].parse().unwrap();
    ShuffleAlgebra::new(CartanData::builtin(series, rank).unwrap(), orientation)
}

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

pub fn random_word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(1..=max_len);
    FreeWord(
        (0..len)
            .map(|_| (rng.gen_range(1..=rank), rng.gen_range(-1..=1)))
            .collect(),
    )
}

/// All permutations of `0..n`, as images `p[slot]`.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Product by direct summation over every bijection of the variables:
/// keep the color-preserving ones that are increasing on the arguments of
/// each factor, and multiply by the exchange ratio for every inverted pair.
pub fn oracle_product(alg: &ShuffleAlgebra, f: &ShuffleElement, g: &ShuffleElement) -> RatFun {
    let fvars = f.degree().vars();
    let gvars = g.degree().vars();
    let zvars = f.degree().add(g.degree()).vars();
    let n = fvars.len();
    let slots: Vec<VarId> = fvars.iter().chain(&gvars).copied().collect();
    let fr = alg.to_rational(f);
    let gr = alg.to_rational(g);
    let mut terms = Vec::new();
    'sigma: for sigma in perms(slots.len()) {
        for (s, &p) in sigma.iter().enumerate() {
            if zvars[p].color != slots[s].color {
                continue 'sigma;
            }
        }
        for s in 0..slots.len() {
            for t in s + 1..slots.len() {
                if (s < n) == (t < n) && slots[s].color == slots[t].color && sigma[s] > sigma[t] {
                    continue 'sigma;
                }
            }
        }
        let image = |offset: usize, vars: &[VarId], v: VarId| {
            let k = vars
                .iter()
                .position(|&u| u == v)
                .expect("variable of the factor");
            zvars[sigma[offset + k]]
        };
        let mut t = &fr.rename(|v| image(0, &fvars, v)) * &gr.rename(|v| image(n, &gvars, v));
        let mut inverse = vec![0; sigma.len()];
        for (s, &p) in sigma.iter().enumerate() {
            inverse[p] = s;
        }
        for i in 0..zvars.len() {
            for j in i + 1..zvars.len() {
                if inverse[i] > inverse[j] {
                    let (zi, zj) = (zvars[i], zvars[j]);
                    let p = alg
                        .cartan()
                        .pairing(zi.color as usize, zj.color as usize)
                        .unwrap();
                    let num = &MultiLaurent::var(zi).scale_monomial(&QMonomial::q_pow(p))
                        - &MultiLaurent::var(zj);
                    t = &t
                        * &RatFun::new(
                            num,
                            &[qshuffle::Binomial::monic(zi, QMonomial::q_pow(p), zj)],
                        );
                }
            }
        }
        terms.push(t);
    }
    terms.iter().fold(RatFun::zero(), |acc, t| &acc + t)
}

/// A product `pi(left) * pi(right)` in a named algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Product {
    pub tag: &'static str,
    pub left: Vec<(usize, i32)>,
    pub right: Vec<(usize, i32)>,
}

/// Every product performed while folding `word` left to right.
pub fn fold_products(tag: &'static str, word: &[(usize, i32)], out: &mut BTreeSet<Product>) {
    for k in 1..word.len() {
        out.insert(Product {
            tag,
            left: word[..k].to_vec(),
            right: vec![word[k]],
        });
    }
}

/// Sample point for numeric evaluation.
pub struct Point {
    pub q0: BigRational,
    pub vals: BTreeMap<VarId, BigRational>,
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let r = BigRational::new(
            rng.gen_range(-9i64..=9).into(),
            rng.gen_range(1i64..=5).into(),
        );
        if !r.is_zero() {
            return r;
        }
    }
}

impl Point {
    pub fn sample(rng: &mut ChaCha8Rng, vars: &[VarId]) -> Point {
        let q0 = loop {
            let q = random_rational(rng);
            if q != BigRational::one() && q != -BigRational::one() {
                break q;
            }
        };
        let vals = vars.iter().map(|&v| (v, random_rational(rng))).collect();
        Point { q0, vals }
    }

    /// `None` at a pole.
    pub fn eval(&self, f: &RatFun) -> Option<BigRational> {
        f.eval(&self.q0, &self.vals).ok()
    }

    pub fn eval_bar(&self, f: &RatFun) -> Option<BigRational> {
        f.eval(&(BigRational::one() / &self.q0), &self.vals).ok()
    }
}

/// `x^e` for a possibly negative `e`.
pub fn pow(x: &BigRational, e: i32) -> BigRational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        BigRational::one() / p
    } else {
        p
    }
}

/// Gaussian binomial in the balanced normalization, evaluated at `x`.
pub fn q_binomial_at(x: &BigRational, n: i32, k: i32) -> BigRational {
    let int = |m: i32| (pow(x, m) - pow(x, -m)) / (x - BigRational::one() / x);
    let fact = |m: i32| (1..=m).fold(BigRational::one(), |acc, i| acc * int(i));
    fact(n) / (fact(k) * fact(n - k))
}

/// Evaluates `f` at up to `points` sample points, resampling at poles.
pub fn values_at(
    rng: &mut ChaCha8Rng,
    vars: &[VarId],
    points: usize,
    mut f: impl FnMut(&Point) -> Option<BigRational>,
) -> Vec<BigRational> {
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < points {
        tries += 1;
        assert!(tries < 100 * points, "no regular sample point found");
        let p = Point::sample(rng, vars);
        if let Some(v) = f(&p) {
            out.push(v);
        }
    }
    out
}
