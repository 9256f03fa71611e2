//! Principal Q-Borel monomial ideals.
//!
//! Given a poset `Q` on the variables `x1..xn` and a monomial `m`, the
//! principal Q-Borel ideal `Q(m)` is the smallest monomial ideal containing
//! `m` and closed under replacing a factor `x_i` by any `x_j <_Q x_i`.
//!
//! - [`poset`]: posets, order ideals, connected components, induced posets.
//! - [`monomial`] and [`ideal`]: exact monomial and monomial-ideal arithmetic.
//! - [`qborel`]: Borel moves, `Q(m)`, `sfQ(m)`, transversal factorization and
//!   move certificates.
//! - [`spectra`]: `A(m)`, maximal connected components, associated primes,
//!   symbolic powers and containment invariants.
//! - [`spread`]: analytic spread through exponent-matrix rank, the poset
//!   formula and linear relation graphs.
//! - [`oracle`]: brute-force colon and localization computations used to
//!   cross-check the above.
//! - [`verify`]: the seeded randomized suite tying everything together.

pub mod error;
pub mod examples;
pub mod graph;
pub mod ideal;
pub mod instances;
pub mod io;
pub mod monomial;
pub mod oracle;
pub mod poset;
pub mod qborel;
pub mod spectra;
pub mod spread;
pub mod verify;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use ideal::{minimalize, MonomialIdeal};
pub use monomial::Monomial;
pub use poset::{InducedPoset, Poset, VariableSet};
pub use qborel::BorelMove;
pub use spread::{ExponentMatrix, LinearRelationGraph};
