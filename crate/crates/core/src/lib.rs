//! Exact arithmetic in the holomorph `Hol(C_n) = C_n ⋊ Aut(C_n)` for
//! `n = 2p^e`, its automorphism group in the `(c, j)` parametrization, and an
//! independent brute-force oracle over explicit Cayley tables.
//!
//! The crate is split into layers that only depend downward:
//!
//! - [`numtheory`]: residues, totients, orders and primitive roots.
//! - [`holomorph`]: the group `G = Hol(C_n)` in exponent normal form `x^a y^b`.
//! - [`automorphisms`]: automorphisms `α(x) = x^{k^j}`, `α(y) = x^c y` and the
//!   map `ψ(α) = x^c y^j` from `Aut(G)` back to `G`.
//! - [`oracle`]: generic finite groups as Cayley tables, presentations, and
//!   exhaustive automorphism and isomorphism search.
//! - [`verify`]: verification suites producing a [`verify::VerificationReport`].

pub mod automorphisms;
mod error;
pub mod holomorph;
pub mod numtheory;
pub mod oracle;
pub mod verify;

pub use automorphisms::AutData;
pub use error::{Error, Result};
pub use holomorph::{HolContext, HolElem};
pub use oracle::{CayleyGroup, GroupHom, Presentation};
