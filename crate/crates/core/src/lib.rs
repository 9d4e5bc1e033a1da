//! Minimal value set polynomials over finite fields.
//!
//! A nonconstant F over F_q is a minimal value set polynomial (MVSP) when its
//! image has the least possible size, floor((q - 1)/deg F) + 1. This crate
//! builds the fields, the polynomial and linearized-polynomial algebra, the
//! value-set structure machinery, certification via the functional equation
//! T(F) = theta (x^q - x) F', constructive families, exhaustive searches, and
//! the two oracles for Frobenius-nonclassical curves y^d = f(x).

pub mod curves;
pub mod error;
pub mod exec;
pub mod gf;
pub mod linearized;
pub mod mvsp;
pub mod polyring;
pub mod search;
pub mod valueset;

pub use error::{Error, ErrorKind, Result};
pub use gf::{Elem, FieldContext};
pub use polyring::Poly;
