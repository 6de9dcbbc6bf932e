//! Core library for checking max-modulus inequalities of complex polynomials.
//!
//! The crate provides three layers:
//!
//! * [`poly`] — polynomial representations (coefficient form and root form)
//!   and conversions between them;
//! * [`operators`] — the ordinary, generalized (weighted), polar, and
//!   generalized polar derivative, plus a couple of pointwise quantities;
//! * [`circle`] / [`catalog`] / [`ensemble`] — circle-maximum estimation, a
//!   catalog of inequality checks built on top of it, and deterministic
//!   random ensembles for scanning, sharpness probing, and falsification.
//!
//! The crate is `no_std`-compatible (with `alloc`); the default `std` feature
//! only forwards to the numeric dependencies.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod catalog;
pub mod circle;
pub mod ensemble;
mod error;
pub mod operators;
pub mod poly;
pub mod rng;

pub use error::Error;
pub use num_complex::Complex64;
