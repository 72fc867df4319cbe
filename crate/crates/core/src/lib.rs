//! Magmatic bialgebras on planar binary trees.
//!
//! The crate is layered bottom-up:
//!
//! * [`trees`]: planar binary trees, grafting, the products `⋎` and `⋌`.
//! * [`order`]: finite posets, the Tamari lattice, the weak Bruhat order and
//!   the Tonks projection.
//! * [`linalg`]: sparse integer linear combinations and exact kernels.
//! * [`bialg`]: the coproducts on trees, Möbius elements and primitive parts.
//! * [`colored`]: trees with colored vertices and their operator calculus.
//! * [`intrel`]: integer relations, their products and the Ξ basis.
//! * [`cli`] and [`report`]: the command line front end.

pub mod bialg;
pub mod cli;
pub mod colored;
pub mod error;
pub mod intrel;
pub mod linalg;
pub mod order;
pub mod report;
pub mod trees;

pub use error::{Error, Result};
pub use trees::Tree;
