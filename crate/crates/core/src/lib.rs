//! Exact combinatorics of finite and affine Weyl groups: quantum Bruhat
//! graph weights, Demazure products, Newton points, cocovers, admissible
//! sets and the cascade of an involution.

pub mod adm;
pub mod affine;
pub mod cascade;
pub mod cover;
pub mod coxeter;
pub mod error;
pub mod linalg;
pub mod newton;
pub mod qbg;
pub mod rootsys;
pub mod weyl;

pub use affine::{AffineElt, AffineWeyl, BruhatInterval};
pub use error::{Error, Result};
pub use rootsys::{CartanType, CorootVec, Coweight, Lattice, RootSystem, RootVec};
pub use weyl::{GroupTable, WeylElt};
