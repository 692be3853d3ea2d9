//! Exact arithmetic for free metabelian groups of finite rank.
//!
//! Elements are kept in collected normal form
//! `x1^g1 ... xn^gn * prod_{j<i} [xi,xj]^(beta_ij)`, where every `beta_ij` is an
//! integer Laurent polynomial in `a1..ai` (the images of the generators in the
//! abelianization). The crate is `no_std` and only needs `alloc`.
//!
//! Modules:
//! - [`laurent`]: the ring `Z[a1^±1, ..., an^±1]`.
//! - [`commod`]: the commutator module in collected coordinates.
//! - [`group`]: multiplication, inversion, powers and identity checks on normal forms.
//! - [`words`]: parsers and printers for words, module expressions and polynomials.
//! - [`fox`]: Fox derivatives and the Magnus-style equality oracle.
//! - [`arith`]: integer codes for tuples, polynomials and elements.
//! - [`evalhom`]: evaluation homomorphisms, discrimination and congruence tests.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod commod;
mod error;
pub mod evalhom;
pub mod fox;
pub mod group;
pub mod laurent;
pub mod smith;
pub mod words;

pub use commod::{CollectedPart, CommIndex, RawModuleExpr};
pub use error::{Error, Result};
pub use group::Element;
pub use laurent::{LaurentPoly, Monomial};
pub use words::GroupWord;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
