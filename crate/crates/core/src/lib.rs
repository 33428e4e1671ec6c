//! Exact computations for the complex reflection group G(r,1,n) and its
//! cyclotomic Hecke algebras.

pub mod par;
pub mod rings;
pub mod group;
pub mod tableaux;
pub mod hecke;
pub mod linalg;
pub mod seminormal;
pub mod cocenter;
pub mod klr;
