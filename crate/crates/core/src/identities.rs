//! The delta-function identity behind the wheel conditions, and its pieces.
//!
//! For `m >= 1` the left side is
//!
//! ```text
//! Sym_{z_1..z_{m+1}} sum_{k=0}^{m+1} [m+1 k]_q
//!     prod_{i<=k} 1/(q^-m z_i - w) prod_{i>k} 1/(q^-m w - z_i)
//!     prod_{i<j} (z_i - z_j)/(q^2 z_i - z_j)
//! ```
//!
//! As a rational function it vanishes identically ([`verify_lm_zero`]). As a
//! distribution, with the `(sigma, k)` summand expanded in the domain
//! `z_s1 >> ... >> z_sk >> w >> z_s(k+1) >> ...`, it equals a symmetrized
//! chain of delta functions ([`verify_conj_window`]).

use alloc::vec::Vec;

use crate::error::SeriesError;
use crate::formal::{compare_on_window, delta, expand_ratfun, series_mul, TruncSeries, Window};
use crate::poly::{permutations, Binomial, MonomialText, MultiLaurent, VarId};
use crate::qring::{q_binomial, LaurentQ, QMonomial, RatQ};
use crate::ratfun::RatFun;

/// The variable `w`.
pub const W: VarId = VarId::aux(1);

/// `z_i`, all of color 1.
pub fn z(i: u32) -> VarId {
    VarId::z(1, i)
}

/// Ingredients of the left side; [`ConjParams::standard`] gives the identity,
/// anything else is a mutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjParams {
    pub m: u32,
    /// Coefficient of the `k`-th term, `k = 0..=m+1`.
    pub coefficients: Vec<RatQ>,
    /// `e` in `1/(q^e z_i - w)`.
    pub z_shift: i32,
    /// `e` in `1/(q^e w - z_i)`.
    pub w_shift: i32,
    /// `e` in `(z_i - z_j)/(q^e z_i - z_j)`.
    pub pair_shift: i32,
}

impl ConjParams {
    pub fn standard(m: u32) -> Self {
        assert!(m >= 1, "m must be positive");
        let coefficients = (0..=m as i64 + 1)
            .map(|k| RatQ::from_laurent(q_binomial(m as i64 + 1, k).expect("k in range")))
            .collect();
        ConjParams {
            m,
            coefficients,
            z_shift: -(m as i32),
            w_shift: -(m as i32),
            pair_shift: 2,
        }
    }
}

/// The symmetrized left side as a single rational function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjLHS {
    pub m: u32,
    pub q_inverted: bool,
    pub value: RatFun,
    /// Number of `(sigma, k)` summands.
    pub term_count: usize,
}

/// The `k`-th summand before symmetrization.
pub fn conj_term(p: &ConjParams, k: u32) -> RatFun {
    let n = p.m + 1;
    let mut den = Vec::new();
    for i in 1..=n {
        den.push(if i <= k {
            Binomial::new(QMonomial::q_pow(p.z_shift), z(i), QMonomial::one(), W)
        } else {
            Binomial::new(QMonomial::q_pow(p.w_shift), W, QMonomial::one(), z(i))
        });
    }
    let mut num = MultiLaurent::constant(p.coefficients[k as usize].clone());
    for i in 1..=n {
        for j in i + 1..=n {
            num = &num * &(&MultiLaurent::var(z(i)) - &MultiLaurent::var(z(j)));
            den.push(Binomial::new(
                QMonomial::q_pow(p.pair_shift),
                z(i),
                QMonomial::one(),
                z(j),
            ));
        }
    }
    RatFun::new(num, &den)
}

fn permuted(f: &RatFun, perm: &[usize]) -> RatFun {
    f.rename(|v| {
        if v.aux {
            v
        } else {
            z(perm[v.index as usize - 1] as u32 + 1)
        }
    })
}

/// Builds the left side with the standard ingredients.
pub fn build_conj_lhs(m: u32, q_inverted: bool) -> ConjLHS {
    build_conj_lhs_with(&ConjParams::standard(m), q_inverted)
}

/// Builds the left side from explicit ingredients, summing all
/// `(m+1)! (m+2)` summands over one common denominator.
pub fn build_conj_lhs_with(p: &ConjParams, q_inverted: bool) -> ConjLHS {
    let n = p.m + 1;
    let base: Vec<RatFun> = (0..=n).map(|k| conj_term(p, k)).collect();
    let mut all = Vec::new();
    for perm in permutations(n as usize) {
        for t in &base {
            let s = permuted(t, &perm);
            all.push(if q_inverted { s.bar() } else { s });
        }
    }
    let term_count = all.len();
    ConjLHS {
        m: p.m,
        q_inverted,
        value: RatFun::sum(all.iter()),
        term_count,
    }
}

/// A nonzero term of a polynomial, rendered for reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub monomial: alloc::string::String,
    pub coefficient: alloc::string::String,
}

/// Outcome of the rational-function vanishing check in one orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmReport {
    pub m: u32,
    pub q_inverted: bool,
    pub zero: bool,
    pub term_count: usize,
    pub witness: Option<Witness>,
}

fn witness(f: &RatFun) -> Option<Witness> {
    use alloc::string::ToString;
    f.numer().canonical_terms().next().map(|(mono, c)| Witness {
        monomial: MonomialText(&mono).to_string(),
        coefficient: c.to_string(),
    })
}

/// Checks the left side vanishes as a rational function, in the given orientation.
pub fn verify_lm(m: u32, q_inverted: bool) -> LmReport {
    let l = build_conj_lhs(m, q_inverted);
    LmReport {
        m,
        q_inverted,
        zero: l.value.is_zero(),
        term_count: l.term_count,
        witness: witness(&l.value),
    }
}

/// [`verify_lm`] for both orientations, `q` first.
pub fn verify_lm_zero(m: u32) -> [LmReport; 2] {
    [verify_lm(m, false), verify_lm(m, true)]
}

fn q2_plus_1() -> LaurentQ {
    &LaurentQ::q_pow(2) + &LaurentQ::one()
}

/// `-q/(q^2+1)` and `q^2/(q^2+1)`.
pub fn partial_fraction_coefficients() -> (RatQ, RatQ) {
    let c1 = RatQ::new(-LaurentQ::q_pow(1), q2_plus_1()).expect("nonzero");
    let c2 = RatQ::new(LaurentQ::q_pow(2), q2_plus_1()).expect("nonzero");
    (c1, c2)
}

/// The two partial-fraction splittings used for `m = 1`, with the given coefficients:
///
/// ```text
/// (z1 - z2)/((q^2 z2 - z1)(q^-1 z2 - q z1)) = c1 (1/(q^2 z2 - z1) + 1/(z2 - q^2 z1))
/// (z1 - z2)/((q^2 z1 - z2)(q^-2 z1 - z2))   = c2 (1/(q^2 z1 - z2) + 1/(z1 - q^2 z2))
/// ```
pub fn partial_fractions_with(c1: &RatQ, c2: &RatQ) -> [bool; 2] {
    let b = |a: i32, i: u32, c: i32, j: u32| {
        Binomial::new(QMonomial::q_pow(a), z(i), QMonomial::q_pow(c), z(j))
    };
    let diff = &MultiLaurent::var(z(1)) - &MultiLaurent::var(z(2));
    let lhs1 = RatFun::new(diff.clone(), &[b(2, 2, 0, 1), b(-1, 2, 1, 1)]);
    let rhs1 = &RatFun::inverse_binomial(c1.clone(), &b(2, 2, 0, 1))
        + &RatFun::inverse_binomial(c1.clone(), &b(0, 2, 2, 1));
    let lhs2 = RatFun::new(diff, &[b(2, 1, 0, 2), b(-2, 1, 0, 2)]);
    let rhs2 = &RatFun::inverse_binomial(c2.clone(), &b(2, 1, 0, 2))
        + &RatFun::inverse_binomial(c2.clone(), &b(0, 1, 2, 2));
    [lhs1 == rhs1, lhs2 == rhs2]
}

/// Both splittings with the true coefficients.
pub fn verify_partial_fractions() -> bool {
    let (c1, c2) = partial_fraction_coefficients();
    partial_fractions_with(&c1, &c2) == [true, true]
}

/// How the delta functions on the right side are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Reading {
    /// `q^m Sym delta(w, q^-m z_1) delta(z_1, q^2 z_2) ... delta(z_m, q^2 z_{m+1})`.
    Statement,
    /// `q^m Sym delta(w, q^m z_1) delta(q^2 z_1, z_2) ... delta(q^2 z_m, z_{m+1})`.
    ProofDisplay,
    /// `q delta(w, q z_1) delta(q^2 z_1, z_2) + q delta(q^-1 z_1, w) delta(q^2 z_2, z_1)`, `m = 1` only.
    ProofLiteral,
}

impl Reading {
    pub const ALL: [Reading; 3] = [
        Reading::Statement,
        Reading::ProofDisplay,
        Reading::ProofLiteral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Reading::Statement => "statement",
            Reading::ProofDisplay => "proof-display",
            Reading::ProofLiteral => "proof-literal",
        }
    }
}

/// Expansion of the left side, each summand in its own domain.
pub fn conj_lhs_series(p: &ConjParams, window: Window) -> Result<TruncSeries, SeriesError> {
    let n = p.m + 1;
    let base: Vec<RatFun> = (0..=n).map(|k| conj_term(p, k)).collect();
    let mut parts = Vec::new();
    for perm in permutations(n as usize) {
        for (k, t) in base.iter().enumerate() {
            let mut order: Vec<VarId> = perm.iter().map(|&i| z(i as u32 + 1)).collect();
            order.insert(k, W);
            parts.push(expand_ratfun(&permuted(t, &perm), &order, window)?);
        }
    }
    TruncSeries::sum(parts.iter(), window)
}

fn qm(e: i32) -> QMonomial {
    QMonomial::q_pow(e)
}

/// The right side under a reading, with `coeff` in place of `q^m`; `None` for
/// a reading that does not apply to this `m`.
pub fn conj_rhs_series(
    m: u32,
    reading: Reading,
    coeff: &RatQ,
    window: Window,
) -> Option<TruncSeries> {
    let n = m + 1;
    let mi = m as i32;
    let chain = |perm: &[usize]| -> TruncSeries {
        let zz = |k: usize| z(perm[k] as u32 + 1);
        let mut s = match reading {
            Reading::Statement => delta(&qm(0), W, &qm(-mi), zz(0), window),
            _ => delta(&qm(0), W, &qm(mi), zz(0), window),
        };
        for k in 0..m as usize {
            let d = match reading {
                Reading::Statement => delta(&qm(0), zz(k), &qm(2), zz(k + 1), window),
                _ => delta(&qm(2), zz(k), &qm(0), zz(k + 1), window),
            };
            s = series_mul(&s, &d).expect("a delta chain is admissible");
        }
        s
    };
    let total = match reading {
        Reading::ProofLiteral if m != 1 => return None,
        Reading::ProofLiteral => {
            let a = series_mul(
                &delta(&qm(0), W, &qm(1), z(1), window),
                &delta(&qm(2), z(1), &qm(0), z(2), window),
            );
            let b = series_mul(
                &delta(&qm(-1), z(1), &qm(0), W, window),
                &delta(&qm(2), z(2), &qm(0), z(1), window),
            );
            a.and_then(|a| a.add(&b?))
                .expect("a delta chain is admissible")
        }
        _ => {
            let parts: Vec<TruncSeries> =
                permutations(n as usize).iter().map(|p| chain(p)).collect();
            TruncSeries::sum(parts.iter(), window).expect("common window")
        }
    };
    Some(total.scale(coeff))
}

/// Outcome of the windowed distributional comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowReport {
    pub m: u32,
    pub window: Window,
    /// Nonzero left-side coefficients on the window.
    pub lhs_terms: usize,
    /// Every reading whose right side agrees with the left side on the window.
    pub matches: Vec<Reading>,
}

impl WindowReport {
    /// The single matching reading, if exactly one matches.
    pub fn unique_match(&self) -> Option<Reading> {
        match self.matches.as_slice() {
            [r] => Some(*r),
            _ => None,
        }
    }
}

/// Compares both sides on the window under every reading, with `q^m` on the right.
pub fn verify_conj_window(m: u32, window: Window) -> Result<WindowReport, SeriesError> {
    verify_conj_window_with(m, &RatQ::q_pow(m as i32), window)
}

/// [`verify_conj_window`] with an arbitrary right-side coefficient.
pub fn verify_conj_window_with(
    m: u32,
    coeff: &RatQ,
    window: Window,
) -> Result<WindowReport, SeriesError> {
    let lhs = conj_lhs_series(&ConjParams::standard(m), window)?;
    let mut matches = Vec::new();
    for r in Reading::ALL {
        if let Some(rhs) = conj_rhs_series(m, r, coeff, window) {
            if compare_on_window(&lhs, &rhs)? {
                matches.push(r);
            }
        }
    }
    Ok(WindowReport {
        m,
        window,
        lhs_terms: lhs.num_terms(),
        matches,
    })
}
