//! Finite Hilbert algebras, their filter spectra, the free implicative
//! semilattice extension `L(H)` and frontal operators on both.
//!
//! Everything is exhaustive computation over small carriers. Elements are
//! indices `0..n`, subsets are bitsets, and every scan that could blow up is
//! bounded by a [`Guards`] value.
//!
//! ```
//! use frontal::{build_extension, FiniteHilbertAlgebra, Guards};
//!
//! // x, y incomparable below 1: no meet of x and y
//! let h = FiniteHilbertAlgebra::new(vec![vec![2, 1, 2], vec![0, 2, 2], vec![0, 1, 2]], 2).unwrap();
//! let e = build_extension(&h, &Guards::default()).unwrap();
//! assert_eq!(e.len(), 4);
//! assert!(e.element(3).is_empty());
//! ```

pub mod algebra;
pub mod document;
pub mod error;
pub mod extension;
pub mod filters;
pub mod frontal;
pub mod guard;
pub mod hom;
pub mod poset;
pub mod report;
pub mod search;
pub mod subset;
pub mod verify;

pub use algebra::{all_unary_maps, check_axioms, natural_order, AxiomClass, FiniteHilbertAlgebra, UnaryMap};
pub use error::{Error, Result};
pub use extension::{build_extension, lift_hom, phi, universal_factor, Extension};
pub use filters::{generate_filter, is_filter, is_irreducible, spectrum, SpectrumPoset};
pub use frontal::{
    check_frontal, classify, extend_frontal, find_gabbay, find_gamma, find_operator, find_successor, tau_pi, Flavor,
    FrontalAlgebra, OperatorKind, OperatorSearch,
};
pub use guard::Guards;
pub use hom::{check_homomorphism, enumerate_homomorphisms, Homomorphism, Signature};
pub use poset::FinitePoset;
pub use report::{Law, Report, Violation};
pub use search::{canonical_form, enumerate_algebras, isomorphic};
pub use subset::Subset;
pub use verify::{verify, VerifyReport};
