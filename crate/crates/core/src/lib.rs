//! Ext charts over finite quotient Hopf algebras of the mod-2 dual Steenrod
//! algebra.
//!
//! The crate computes minimal free resolutions of finite comodules over the
//! quotients `A(n)_*` of the dual Steenrod algebra (and the intermediate
//! quotients `B_0..B_9` between `A(2)_*` and `A(4)_*`), reads off bigraded
//! Ext charts with product actions by the classes `nu`, `g`, `w2`, assembles
//! Davis–Mahowald spectral sequence pages, and runs a battery of structural
//! checks against those charts: vanishing lines, restriction-map ranges,
//! generator tables, and `g`-divisibility regions.
//!
//! Modules:
//! - [`f2`]: bit-packed linear algebra over GF(2);
//! - [`hopf`]: presentations of the Hopf quotients, coproduct, cotensor
//!   primitives;
//! - [`comodule`]: finite graded comodules and the shipped spectra data;
//! - [`resolve`]: minimal resolutions, Ext charts, chain-map lifting;
//! - [`dmss`]: the Koszul-style exact complex and its spectral sequence;
//! - [`verify`]: theorem checkers producing machine-readable reports.

pub mod comodule;
pub mod dmss;
pub mod f2;
pub mod hopf;
pub mod par;
pub mod resolve;
pub mod verify;

pub use par::Threading;
