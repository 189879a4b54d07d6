//! Exact-arithmetic toolkit for the combinatorics of the Hilbert scheme of
//! points on the affine plane: partitions and hooks, Jack and Schur
//! symmetric functions, Nakajima operators and vertex-operator matrix
//! elements, the charged infinite wedge with its affine sl2 action,
//! localization sums for correlation functions and rank-2 partition
//! functions, and classification of the resulting q-series against
//! quasimodular and modular bases by exact linear fitting.
//!
//! Everything is computed over arbitrary-precision rationals (or rational
//! functions in the equivariant parameters); there is no floating point.

pub mod correlators;
pub mod fock;
pub mod laurent;
pub mod linsolve;
pub mod mpoly;
pub mod nekrasov;
pub mod partitions;
pub mod qseries;
pub mod ratfun;
pub mod rational;
pub mod series;
pub mod vertex;
pub mod wedge;

pub use laurent::{Laurent2, LaurentPoly};
pub use mpoly::{MPoly, Var};
pub use partitions::{Blend, Cell, Partition};
pub use ratfun::RatFun;
pub use rational::Rat;
pub use series::{Coeff, PochOrder, Series};
