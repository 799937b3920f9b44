//! Numerical semigroups, equidistribution of their gap sets modulo `m`, and
//! exact arithmetic with cyclotomic units.
//!
//! The crate is organised bottom-up:
//!
//! * [`modmath`]: residues, factorization, Euler's totient, unit subgroups;
//! * [`semigroup`]: Apéry tables, gaps, genus, Frobenius numbers, residue
//!   histograms, and the geometric semigroups `<a^k, a^(k-1) b, ..., b^k>`;
//! * [`poly`]: `Z[x]/(x^m - 1)`, cyclotomic polynomials, `Z[x]/Phi_n(x)`;
//! * [`equidist`]: brute-force, polynomial and closed-form deciders;
//! * [`cycunits`]: Feng's independence criterion and unit relations;
//! * [`fixtures`]: the worked examples reproduced as named checks;
//! * [`cli`]: the `gapdist` command-line front end.

pub mod cli;
pub mod cycunits;
pub mod equidist;
pub mod error;
pub mod fixtures;
pub mod modmath;
pub mod poly;
pub mod semigroup;

pub use error::{Error, Result};
pub use semigroup::{GeometricParams, NumericalSemigroup};
