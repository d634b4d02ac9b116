//! Exact symbolic arithmetic for shuffle algebras of finite-type Cartan data.
//!
//! Coefficients live in `Q(q)`; functions are Laurent polynomials and rational
//! functions in colored variables `z[color, index]`. Everything is exact.

#![no_std]

extern crate alloc;

pub mod cartan;
pub mod error;
pub mod formal;
pub mod identities;
pub mod poly;
pub mod qring;
pub mod ratfun;
pub mod shuffle;

pub use cartan::{CartanData, Series};
pub use error::*;
pub use formal::{
    compare_on_window, delta, delta_series, expand_inverse, expand_ratfun, series_mul, Atom,
    TruncSeries, Window,
};
pub use poly::{Binomial, MultiLaurent, VarId};
pub use qring::{q_binomial, q_factorial, q_int, LaurentQ, QMonomial, RatQ};
pub use ratfun::{BinomialFactor, RatFun};
pub use shuffle::{
    DegreeVector, FreeWord, Orientation, ShuffleAlgebra, ShuffleElement, WheelOutcome,
};
