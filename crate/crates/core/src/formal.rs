//! Bilateral formal series truncated to an exponent window.
//!
//! A [`TruncSeries`] keeps the exact expression it came from: a sum of
//! products, each a Laurent polynomial times expanded inverse binomials
//! ("rays") and delta distributions ("lines"). The coefficient table on the
//! window is computed by enumerating only the summation indices that land in
//! the window, so every stored coefficient is exact and `reliable` always
//! equals `window`.
//!
//! Conventions:
//! - `1/(a x - b y)` with `x` dominant is `sum_{n>=0} b^n a^(-n-1) y^n x^(-n-1)`;
//! - `delta(a x, b y)` is `sum_{i in Z} (a x)^i (b y)^(-i-1)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::SeriesError;
use crate::poly::{Binomial, MultiLaurent, VarId};
use crate::qring::{QMonomial, RatQ};
use crate::ratfun::RatFun;

/// Per-variable exponent bounds, inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub lo: i32,
    pub hi: i32,
}

impl Window {
    pub fn new(lo: i32, hi: i32) -> Result<Self, SeriesError> {
        if lo > hi {
            Err(SeriesError::BadWindow)
        } else {
            Ok(Window { lo, hi })
        }
    }

    pub fn contains(&self, e: i32) -> bool {
        self.lo <= e && e <= self.hi
    }

    pub fn intersect(&self, other: &Window) -> Result<Window, SeriesError> {
        Window::new(self.lo.max(other.lo), self.hi.min(other.hi))
            .map_err(|_| SeriesError::EmptyIntersection)
    }
}

impl Default for Window {
    fn default() -> Self {
        Window { lo: -8, hi: 8 }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// One infinite factor of a product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    /// `1/(a x - b y)` expanded with `x` dominant.
    Ray {
        a: QMonomial,
        x: VarId,
        b: QMonomial,
        y: VarId,
    },
    /// `delta(a x, b y)`.
    Line {
        a: QMonomial,
        x: VarId,
        b: QMonomial,
        y: VarId,
    },
}

impl Atom {
    fn ends(&self) -> (VarId, VarId) {
        match self {
            Atom::Ray { x, y, .. } | Atom::Line { x, y, .. } => (*x, *y),
        }
    }

    /// `(slope, offset)` of the exponent of `x` and of `y` as functions of the index.
    fn exponents(&self) -> [(i64, i64); 2] {
        match self {
            Atom::Ray { .. } => [(-1, -1), (1, 0)],
            Atom::Line { .. } => [(1, 0), (-1, -1)],
        }
    }

    fn coeff(&self, p: i64) -> QMonomial {
        match self {
            Atom::Ray { a, b, .. } => &b.pow(p) * &a.pow(-p - 1),
            Atom::Line { a, b, .. } => &a.pow(p) * &b.pow(-p - 1),
        }
    }

    fn is_ray(&self) -> bool {
        matches!(self, Atom::Ray { .. })
    }

    fn rename(&self, f: &impl Fn(VarId) -> VarId) -> Atom {
        match self.clone() {
            Atom::Ray { a, x, b, y } => Atom::Ray {
                a,
                x: f(x),
                b,
                y: f(y),
            },
            Atom::Line { a, x, b, y } => Atom::Line {
                a,
                x: f(x),
                b,
                y: f(y),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Product {
    poly: MultiLaurent,
    atoms: Vec<Atom>,
}

impl Product {
    fn vars(&self) -> Vec<VarId> {
        let mut v = self.poly.vars().to_vec();
        for a in &self.atoms {
            let (x, y) = a.ends();
            v.push(x);
            v.push(y);
        }
        v.sort();
        v.dedup();
        v
    }
}

/// Summation indices of a product, constrained so that every exponent lands in the window.
struct Solver<'a> {
    atoms: &'a [Atom],
    /// per variable: (atom, slope, offset)
    incidence: Vec<Vec<(usize, i64, i64)>>,
    lo: i64,
    hi: i64,
}

type Range = (Option<i64>, Option<i64>);

impl<'a> Solver<'a> {
    fn new(atoms: &'a [Atom], vars: &[VarId], window: Window) -> Self {
        let mut incidence = vec![Vec::new(); vars.len()];
        for (k, a) in atoms.iter().enumerate() {
            let (x, y) = a.ends();
            let [ex, ey] = a.exponents();
            incidence[vars.binary_search(&x).unwrap()].push((k, ex.0, ex.1));
            incidence[vars.binary_search(&y).unwrap()].push((k, ey.0, ey.1));
        }
        Solver {
            atoms,
            incidence,
            lo: window.lo as i64,
            hi: window.hi as i64,
        }
    }

    /// Whether every index is forced into a finite range by the window.
    fn admissible(&self) -> bool {
        let n = self.atoms.len();
        let mut lb: Vec<bool> = self.atoms.iter().map(|a| a.is_ray()).collect();
        let mut ub = vec![false; n];
        let mut changed = true;
        while changed {
            changed = false;
            for inc in &self.incidence {
                for &(k, s, _) in inc {
                    // s*p_k <= hi - sum(min of the others), finite iff every other min is finite
                    let min_rest =
                        inc.iter().filter(|t| t.0 != k).all(
                            |&(j, sj, _)| {
                                if sj > 0 {
                                    lb[j]
                                } else {
                                    ub[j]
                                }
                            },
                        );
                    let max_rest =
                        inc.iter().filter(|t| t.0 != k).all(
                            |&(j, sj, _)| {
                                if sj > 0 {
                                    ub[j]
                                } else {
                                    lb[j]
                                }
                            },
                        );
                    let (upper, lower) = if s > 0 {
                        (min_rest, max_rest)
                    } else {
                        (max_rest, min_rest)
                    };
                    if upper && !ub[k] {
                        ub[k] = true;
                        changed = true;
                    }
                    if lower && !lb[k] {
                        lb[k] = true;
                        changed = true;
                    }
                }
            }
        }
        lb.iter().zip(&ub).all(|(a, b)| *a && *b)
    }

    fn initial(&self) -> Vec<Range> {
        self.atoms
            .iter()
            .map(|a| {
                if a.is_ray() {
                    (Some(0), None)
                } else {
                    (None, None)
                }
            })
            .collect()
    }

    /// Tightens index ranges to a fixpoint; false when infeasible.
    fn propagate(&self, mu: &[i64], ranges: &mut [Range]) -> bool {
        let term = |r: Range, s: i64, c: i64| -> Range {
            if s > 0 {
                (r.0.map(|x| x + c), r.1.map(|x| x + c))
            } else {
                (r.1.map(|x| c - x), r.0.map(|x| c - x))
            }
        };
        let mut changed = true;
        while changed {
            changed = false;
            for (v, inc) in self.incidence.iter().enumerate() {
                for &(k, s, c) in inc {
                    let mut rmin = Some(mu[v]);
                    let mut rmax = Some(mu[v]);
                    for &(j, sj, cj) in inc {
                        if j == k {
                            continue;
                        }
                        let t = term(ranges[j], sj, cj);
                        rmin = rmin.zip(t.0).map(|(a, b)| a + b);
                        rmax = rmax.zip(t.1).map(|(a, b)| a + b);
                    }
                    // s*p + c in [lo - rmax, hi - rmin]
                    let tlo = rmax.map(|m| self.lo - m - c);
                    let thi = rmin.map(|m| self.hi - m - c);
                    let (plo, phi) = if s > 0 {
                        (tlo, thi)
                    } else {
                        (thi.map(|x| -x), tlo.map(|x| -x))
                    };
                    let r = &mut ranges[k];
                    if let Some(l) = plo {
                        if r.0.is_none_or(|x| l > x) {
                            r.0 = Some(l);
                            changed = true;
                        }
                    }
                    if let Some(h) = phi {
                        if r.1.is_none_or(|x| h < x) {
                            r.1 = Some(h);
                            changed = true;
                        }
                    }
                    if let (Some(l), Some(h)) = *r {
                        if l > h {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn solve(&self, mu: &[i64], ranges: Vec<Range>, emit: &mut impl FnMut(&[i64])) {
        let mut ranges = ranges;
        if !self.propagate(mu, &mut ranges) {
            return;
        }
        let pick = ranges
            .iter()
            .enumerate()
            .filter(|(_, r)| r.0 != r.1)
            .map(|(k, r)| (k, r.0.zip(r.1).map(|(l, h)| h - l)))
            .min_by_key(|(_, w)| w.unwrap_or(i64::MAX));
        match pick {
            None => {
                let p: Vec<i64> = ranges.iter().map(|r| r.0.unwrap()).collect();
                emit(&p);
            }
            Some((k, Some(_))) => {
                let (l, h) = (ranges[k].0.unwrap(), ranges[k].1.unwrap());
                for val in l..=h {
                    let mut next = ranges.clone();
                    next[k] = (Some(val), Some(val));
                    self.solve(mu, next, emit);
                }
            }
            // excluded by `admissible`
            Some((_, None)) => unreachable!("unbounded index in an admissible product"),
        }
    }
}

/// A formal series known exactly on `window`.
#[derive(Clone)]
pub struct TruncSeries {
    vars: Vec<VarId>,
    window: Window,
    reliable: Window,
    recipe: Vec<Product>,
    table: BTreeMap<Vec<i32>, RatQ>,
}

fn reindex(
    table: &BTreeMap<Vec<i32>, RatQ>,
    from: &[VarId],
    to: &[VarId],
    window: Window,
) -> BTreeMap<Vec<i32>, RatQ> {
    let zero_ok = window.contains(0);
    if from == to {
        return table.clone();
    }
    if !zero_ok && to.len() > from.len() {
        return BTreeMap::new();
    }
    let pos: Vec<usize> = from.iter().map(|v| to.binary_search(v).unwrap()).collect();
    table
        .iter()
        .map(|(e, c)| {
            let mut k = vec![0; to.len()];
            for (p, x) in pos.iter().zip(e) {
                k[*p] = *x;
            }
            (k, c.clone())
        })
        .collect()
}

fn merge_vars(a: &[VarId], b: &[VarId]) -> Vec<VarId> {
    let mut v: Vec<VarId> = a.iter().chain(b).copied().collect();
    v.sort();
    v.dedup();
    v
}

fn accumulate(table: &mut BTreeMap<Vec<i32>, RatQ>, key: Vec<i32>, c: RatQ) {
    let e = table.entry(key.clone()).or_insert_with(RatQ::zero);
    *e += &c;
    if e.is_zero() {
        table.remove(&key);
    }
}

impl TruncSeries {
    fn build(recipe: Vec<Product>, window: Window) -> Result<Self, SeriesError> {
        let mut vars = Vec::new();
        for p in &recipe {
            vars = merge_vars(&vars, &p.vars());
        }
        let mut table = BTreeMap::new();
        for p in &recipe {
            materialize(p, &vars, window, &mut table)?;
        }
        Ok(TruncSeries {
            vars,
            window,
            reliable: window,
            recipe,
            table,
        })
    }

    fn single(poly: MultiLaurent, atoms: Vec<Atom>, window: Window) -> Result<Self, SeriesError> {
        Self::build(vec![Product { poly, atoms }], window)
    }

    pub fn zero(window: Window) -> Self {
        TruncSeries {
            vars: Vec::new(),
            window,
            reliable: window,
            recipe: Vec::new(),
            table: BTreeMap::new(),
        }
    }

    /// A Laurent polynomial viewed as a series.
    pub fn from_poly(p: &MultiLaurent, window: Window) -> Self {
        Self::single(p.clone(), Vec::new(), window).expect("polynomials are always admissible")
    }

    /// A product of explicit atoms times a polynomial.
    pub fn from_atoms(
        poly: MultiLaurent,
        atoms: Vec<Atom>,
        window: Window,
    ) -> Result<Self, SeriesError> {
        Self::single(poly, atoms, window)
    }

    pub fn window(&self) -> Window {
        self.window
    }

    /// Sub-window on which the coefficients are exact; always the full window here.
    pub fn reliable(&self) -> Window {
        self.reliable
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.table.len()
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    /// Nonzero in-window coefficients keyed by exponent vectors over `vars()`.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &RatQ)> {
        self.table.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Coefficient of `prod v^e`; unlisted variables have exponent 0.
    pub fn coeff(&self, mono: &[(VarId, i32)]) -> RatQ {
        let mut key = vec![0; self.vars.len()];
        for (v, e) in mono {
            match self.vars.binary_search(v) {
                Ok(k) => key[k] = *e,
                Err(_) if *e != 0 => return RatQ::zero(),
                Err(_) => {}
            }
        }
        self.table.get(&key).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.combine(other, true)
    }

    fn combine(&self, other: &TruncSeries, negate: bool) -> Result<TruncSeries, SeriesError> {
        let window = self.window.intersect(&other.window)?;
        if window != self.window || window != other.window {
            let mut r = self.recipe.clone();
            r.extend(
                other
                    .recipe
                    .iter()
                    .cloned()
                    .map(|p| if negate { negated(p) } else { p }),
            );
            return Self::build(r, window);
        }
        let vars = merge_vars(&self.vars, &other.vars);
        let mut table = reindex(&self.table, &self.vars, &vars, window);
        for (k, c) in reindex(&other.table, &other.vars, &vars, window) {
            accumulate(&mut table, k, if negate { -c } else { c });
        }
        let mut recipe = self.recipe.clone();
        recipe.extend(
            other
                .recipe
                .iter()
                .cloned()
                .map(|p| if negate { negated(p) } else { p }),
        );
        Ok(TruncSeries {
            vars,
            window,
            reliable: window,
            recipe,
            table,
        })
    }

    /// Sum of many series on a common window.
    pub fn sum<'a>(
        items: impl IntoIterator<Item = &'a TruncSeries>,
        window: Window,
    ) -> Result<TruncSeries, SeriesError> {
        let mut acc = TruncSeries::zero(window);
        for s in items {
            acc = acc.add(s)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &RatQ) -> TruncSeries {
        TruncSeries {
            vars: self.vars.clone(),
            window: self.window,
            reliable: self.reliable,
            recipe: self
                .recipe
                .iter()
                .map(|p| Product {
                    poly: p.poly.scale(c),
                    atoms: p.atoms.clone(),
                })
                .collect(),
            table: self
                .table
                .iter()
                .map(|(e, x)| (e.clone(), x * c))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    /// Renames variables injectively.
    pub fn rename(&self, f: impl Fn(VarId) -> VarId) -> Result<TruncSeries, SeriesError> {
        let recipe = self
            .recipe
            .iter()
            .map(|p| Product {
                poly: p.poly.rename(&f),
                atoms: p.atoms.iter().map(|a| a.rename(&f)).collect(),
            })
            .collect();
        Self::build(recipe, self.window)
    }
}

fn negated(p: Product) -> Product {
    Product {
        poly: -p.poly,
        atoms: p.atoms,
    }
}

fn materialize(
    p: &Product,
    vars: &[VarId],
    window: Window,
    table: &mut BTreeMap<Vec<i32>, RatQ>,
) -> Result<(), SeriesError> {
    if p.poly.is_zero() {
        return Ok(());
    }
    let solver = Solver::new(&p.atoms, vars, window);
    if !solver.admissible() {
        return Err(SeriesError::NonAdmissibleProduct(
            "a summation index is unbounded on the window",
        ));
    }
    let pos: Vec<usize> = p
        .poly
        .vars()
        .iter()
        .map(|v| vars.binary_search(v).unwrap())
        .collect();
    for (e, c) in p.poly.terms() {
        let mut mu = vec![0i64; vars.len()];
        for (k, x) in pos.iter().zip(e) {
            mu[*k] = *x as i64;
        }
        solver.solve(&mu, solver.initial(), &mut |params| {
            let mut key: Vec<i32> = mu.iter().map(|x| *x as i32).collect();
            let mut m = QMonomial::one();
            for (v, inc) in solver.incidence.iter().enumerate() {
                for &(k, s, off) in inc {
                    key[v] += (s * params[k] + off) as i32;
                }
            }
            for (a, &pk) in p.atoms.iter().zip(params) {
                m = &m * &a.coeff(pk);
            }
            debug_assert!(key.iter().all(|x| window.contains(*x)));
            accumulate(table, key, c.mul_monomial(&m));
        });
    }
    Ok(())
}

/// `1/(a z_i - b z_j)` expanded in the domain where `dominant` is larger.
pub fn expand_inverse(
    b: &Binomial,
    dominant: VarId,
    window: Window,
) -> Result<TruncSeries, SeriesError> {
    TruncSeries::single(MultiLaurent::one(), vec![ray(b, dominant)?], window)
}

fn ray(b: &Binomial, dominant: VarId) -> Result<Atom, SeriesError> {
    if dominant == b.i {
        Ok(Atom::Ray {
            a: b.a.clone(),
            x: b.i,
            b: b.b.clone(),
            y: b.j,
        })
    } else if dominant == b.j {
        // 1/(a x - b y) = -1/(b y - a x)
        Ok(Atom::Ray {
            a: -b.b.clone(),
            x: b.j,
            b: -b.a.clone(),
            y: b.i,
        })
    } else {
        Err(SeriesError::MissingOrder(dominant))
    }
}

/// `delta(x, c y)`.
pub fn delta_series(x: VarId, c: &QMonomial, y: VarId, window: Window) -> TruncSeries {
    delta(&QMonomial::one(), x, c, y, window)
}

/// `delta(a x, b y)`.
pub fn delta(a: &QMonomial, x: VarId, b: &QMonomial, y: VarId, window: Window) -> TruncSeries {
    assert!(x != y, "delta needs two distinct variables");
    let atom = Atom::Line {
        a: a.clone(),
        x,
        b: b.clone(),
        y,
    };
    TruncSeries::single(MultiLaurent::one(), vec![atom], window)
        .expect("a single delta is admissible")
}

/// Product of two series, on the intersection of their windows.
pub fn series_mul(f: &TruncSeries, g: &TruncSeries) -> Result<TruncSeries, SeriesError> {
    let window = f.window.intersect(&g.window)?;
    let mut recipe = Vec::with_capacity(f.recipe.len() * g.recipe.len());
    for a in &f.recipe {
        for b in &g.recipe {
            let mut atoms = a.atoms.clone();
            atoms.extend(b.atoms.iter().cloned());
            recipe.push(Product {
                poly: &a.poly * &b.poly,
                atoms,
            });
        }
    }
    TruncSeries::build(recipe, window)
}

/// Expands each denominator factor of `f` with the variable that comes first in `order` dominant.
pub fn expand_ratfun(
    f: &RatFun,
    order: &[VarId],
    window: Window,
) -> Result<TruncSeries, SeriesError> {
    let rank = |v: VarId| {
        order
            .iter()
            .position(|x| *x == v)
            .ok_or(SeriesError::MissingOrder(v))
    };
    let mut atoms = Vec::new();
    for (fac, &m) in f.denom() {
        let dom = if rank(fac.i)? < rank(fac.j)? {
            fac.i
        } else {
            fac.j
        };
        let a = ray(&fac.to_binomial(), dom)?;
        for _ in 0..m {
            atoms.push(a.clone());
        }
    }
    TruncSeries::single(f.numer().clone(), atoms, window)
}

/// Coefficientwise equality on the common window.
pub fn compare_on_window(f: &TruncSeries, g: &TruncSeries) -> Result<bool, SeriesError> {
    let w = f.reliable.intersect(&g.reliable)?;
    let vars = merge_vars(&f.vars, &g.vars);
    let restrict = |s: &TruncSeries| -> BTreeMap<Vec<i32>, RatQ> {
        reindex(&s.table, &s.vars, &vars, s.window)
            .into_iter()
            .filter(|(e, _)| e.iter().all(|x| w.contains(*x)))
            .collect()
    };
    Ok(restrict(f) == restrict(g))
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TruncSeries(window {}, {} terms)",
            self.window,
            self.table.len()
        )
    }
}
