//! Exact prime splitting in number fields through φ-Newton polygons.
//!
//! The crate is layered bottom-up:
//!
//! * [`intpoly`]: integer polynomials, p-adic valuations, φ-adic expansions
//!   and discriminants.
//! * [`ffield`]: polynomials over prime fields and their finite extensions,
//!   with complete factorization.
//! * [`polygon`]: φ-Newton polygons, residual polynomials and the φ-index.
//! * [`ore`]: Dedekind's criterion, Ore's index theorem and the resulting
//!   factorization of `p Z_K`.
//! * [`monogenity`]: deciding whether `Q(m^(1/n))` is monogenic, both from
//!   the engine and from the closed-form congruence conditions for `n = 12`.
//!
//! Everything is exact: integers are arbitrary precision and slopes are
//! reduced integer fractions.
//!
//! ```
//! use ore_engine::{IntPolynomial, Prime, ore};
//!
//! let f = IntPolynomial::from_i64s(&[-13, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
//! let two = Prime::new(2u32).unwrap();
//! let split = ore::ore_factor(&f, &two).unwrap();
//! assert_eq!(split.ef_multiset(), vec![(2, 2), (2, 2), (2, 2)]);
//! ```

pub mod error;
pub mod ffield;
pub mod intpoly;
pub mod monogenity;
pub mod ore;
pub mod polygon;

pub use error::{Error, Result};
pub use intpoly::{IntPolynomial, PhiExpansion, Prime, Valuation};
