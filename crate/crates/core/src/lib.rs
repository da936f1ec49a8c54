//! q-supernomial coefficients computed four ways: an explicit product
//! formula, rigged configurations, inversions of multitableaux and cospin
//! of ribbon tableaux, together with the bijections relating the middle
//! two and a brute-force path-count oracle.

pub mod bijection;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod partition;
pub mod qpoly;
pub mod ribbon;
pub mod rigged;
pub mod sweep;
pub mod tableau;

pub use error::{Error, Result};
