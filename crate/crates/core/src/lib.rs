//! Equivariant double Schubert polynomials for the classical groups.
//!
//! The ring everything lives in is `Γ ⊗ Z[z, t]`: Schur Q (or P) functions in
//! an implicit alphabet `x`, with polynomial coefficients in two families of
//! equivariant variables. The main entry point is [`schubert::SchubertEngine`].

pub mod cache;
pub mod divdiff;
pub mod error;
pub mod gamma;
pub mod golden;
pub mod partition;
pub mod poly;
pub mod schubert;
pub mod text;
pub mod util;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use gamma::factorial::{factorial_p, factorial_q, ParamSequence};
pub use gamma::{Flavor, GammaElement};
pub use partition::StrictPartition;
pub use poly::{Monomial, Var, ZPoly};
pub use schubert::{SchubertEngine, SchubertTable};
pub use text::{parse_gamma, parse_poly};
pub use weyl::{CartanType, Family, Generator, Root, SignedPermutation};
