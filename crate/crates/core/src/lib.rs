//! Exact R-matrices, ribbon functors and centralizer checks for quantum
//! gl(m|n) and classical osp(m|2n).

pub mod diagrams;
pub mod error;
pub mod fft;
pub mod functor;
pub mod glq;
pub mod ospc;
pub mod rootdata;
pub mod scalar;
pub mod superspace;

pub use error::{Error, Result};
pub use scalar::{qint, Field, LaurentPoly, RatFunc, Rational};
pub use superspace::{graded_kron, supertrace, tau, BasisVector, SparseMat, SuperSpace};
