//! Finite matroids on at most 16 elements: constructions, connectivity,
//! isomorphism and minor search, and a checker for the class of simple
//! matroids whose cocircuits all have at least four elements.
//!
//! ```
//! use cogirth::{catalog, in_m4, is_isomorphic, build_mr};
//!
//! let cat = catalog();
//! let k5 = cat.matroid("MK5").unwrap();
//! assert!(in_m4(k5));
//! assert!(is_isomorphic(&build_mr(4).unwrap(), k5).is_some());
//! ```

pub mod bits;
pub mod claims;
pub mod connectivity;
pub mod constructions;
pub mod error;
pub mod family;
pub mod gf;
pub mod iso;
pub mod m4;
pub mod matroid;
pub mod report;
pub mod spec;
pub mod sweep;

pub use bits::Mask;
pub use claims::{verify_paper, verify_with, Suite};
pub use connectivity::{kappa, lambda, ConnectivityValue};
pub use constructions::{build_mr, catalog, two_sum, Catalog, CatalogEntry, Sources, TwoSumSpec};
pub use error::{Error, Result};
pub use family::{FamilyKind, SetFamily};
pub use gf::{FieldMatrix, Prime};
pub use iso::{has_minor, is_isomorphic, Fingerprint, MinorWitness};
pub use m4::{element_structure, in_m4, is_minor_minimal_m4};
pub use matroid::{Girth, Matroid, Provenance, Relabel};
pub use report::{ClaimReport, Report, Status};
pub use spec::MatroidSpec;
pub use sweep::{sweep, SweepResult};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/representation.md")]
    mod representation {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/minors.md")]
    mod minors {}
    #[doc = include_str!("../../../book/src/connectivity.md")]
    mod connectivity {}
    #[doc = include_str!("../../../book/src/isomorphism.md")]
    mod isomorphism {}
    #[doc = include_str!("../../../book/src/cogirth.md")]
    mod cogirth {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
