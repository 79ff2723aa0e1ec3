//! Exact polynomial computations over prime fields: Gröbner bases, ideal
//! operations, Frobenius trace operators and checkable certificates that an
//! ideal has a squarefree initial ideal.

pub mod criteria;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod ideal_ops;
pub mod macaulay;
pub mod monomial;
pub mod monomial_ideal;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use field::{Fp, PrimeField};
pub use groebner::{Budget, IdealPresentation, ReducedGb, Selection};
pub use monomial::Monomial;
pub use monomial_ideal::MonomialIdeal;
pub use order::{MonomialOrder, Tiebreak};
pub use poly::{Polynomial, Term};
pub use ring::Ring;

/// Version string recorded in certificates.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
