//! Exact monomial-ideal toolkit for deciding integral closedness of Artinian
//! monomial ideals through residue-current smallness certificates.
//!
//! The crate is organised bottom-up:
//!
//! - [`ideal`]: exponent vectors and monomial ideal algebra.
//! - [`newton`]: Newton polyhedra, compact facets, Rees valuations and
//!   integral closure.
//! - [`complex`]: labeled simplicial cell complexes (Taylor, Scarf, Koszul),
//!   their monomial differentials, acyclicity and rank profiles.
//! - [`residue`]: the combinatorial support of the residue current of a
//!   cellular resolution and its annihilator.
//! - [`certify`]: per-component smallness certificates and the resulting
//!   integral-closedness decision.
//! - [`fan`]: normal fans, regular refinements and divisor tables.
//! - [`io`]: the JSON document formats, subcommand dispatch and corpus runner
//!   behind the `monres` binary.
//!
//! ```
//! use monres::{certify::certify_ideal, complex::ComplexKind, ideal::MonIdeal};
//!
//! let m2 = MonIdeal::from_u64s(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
//! let report = certify_ideal(&m2, ComplexKind::Taylor).unwrap();
//! assert!(report.closed);
//! ```

pub mod certify;
pub mod complex;
mod error;
pub mod fan;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod newton;
pub mod residue;
mod serde_big;

pub use error::{Error, Result};
pub use ideal::{Exponent, MonIdeal};
pub use newton::Ray;
