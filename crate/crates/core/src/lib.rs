#![allow(clippy::needless_range_loop)]

//! Exact combinatorics of semistable Schubert varieties in minuscule flag varieties:
//! root systems, Weyl groups and Bruhat order, `λ_s`-semistability, the minimal
//! elements `w_{s,r}`, and their GIT quotients.

pub mod catalog;
pub mod codec;
pub mod error;
pub mod rootsys;
pub mod verify;
pub mod git;
pub mod quotient;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{Basis, OneParam, RootSystem, TypeLabel, WeightVec, Q};
pub use weyl::{bruhat_leq, CosetSystem, WeylElement};
