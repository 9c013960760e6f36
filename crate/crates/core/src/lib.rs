//! Generalized trigonometric functions `sin_{p,q}`, `cos_{p,q}` and the constant
//! `π_{p,q}`, together with their Wallis-type integrals, the infinite product
//! for `π_{p,q}`, generalized complete elliptic integrals and closed-form
//! solutions of a family of nonlinear boundary value problems.
//!
//! ```
//! use gentrig::gtf::{pi_pq, sin_pq, ParamPair};
//!
//! let sl = ParamPair::new(2.0, 4.0).unwrap();
//! let varpi = pi_pq(sl);
//! assert!((varpi - 2.622_057_554_292_12).abs() < 1e-13);
//! assert!((sin_pq(sl, varpi / 2.0).unwrap() - 1.0).abs() < 1e-15);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![cfg_attr(test, allow(clippy::excessive_precision))]

pub mod bvp;
pub mod cli;
pub mod error;
pub mod gtf;
pub mod integrals;
pub mod oracle;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};
