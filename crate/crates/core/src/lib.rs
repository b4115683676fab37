//! Schubert and Grothendieck polynomials, Rothe diagrams, and Möbius
//! inversion on posets of exponent vectors.
//!
//! The library computes Grothendieck polynomials two independent ways:
//!
//! * `schubert::grothendieck_poly` — isobaric divided-difference recursion
//!   descending from the staircase monomial of the longest element;
//! * `theorem::grothendieck_via_mobius` — for permutations whose Schubert
//!   polynomial is multiplicity-free, the one-sum (Möbius) labelling of the
//!   poset generated by the Schubert support below the weight of the closed
//!   Rothe diagram.
//!
//! `theorem::verify_theorem` sweeps entire symmetric groups comparing the
//! two, and `theorem::proof_identity_check` re-runs the supporting algebraic
//! identities inside a truncated quotient ring.
//!
//! All coefficient arithmetic is generic over [`num::Coeff`]; the aliases
//! below fix arbitrary-precision integers.
//!
//! ```
//! use grobius::{grothendieck_poly, grothendieck_via_mobius, Int, Permutation};
//!
//! let w: Permutation = "143562".parse().unwrap();
//! let g = grothendieck_via_mobius::<Int>(&w).unwrap();
//! assert_eq!(g, grothendieck_poly::<Int>(&w));
//! assert_eq!(g.num_terms(), 15);
//! ```

pub mod cli;
pub mod error;
pub mod num;
pub mod perm;
pub mod poly;
pub mod poset;
pub mod schubert;
pub mod theorem;

pub use error::{Error, Result};
pub use num::Coeff;
pub use perm::{iterate_sn, Diagram, Permutation};
pub use poly::{structure_sheaf_class, structure_sheaf_class_u, ExpVec, SparsePoly, TruncatedPoly};
pub use poset::{build_poset, Labelling, PosetNode, VectorPoset};
pub use schubert::{
    build_table, grothendieck_poly, is_multiplicity_free, schubert_poly, staircase, Flavor,
    PolynomialTable,
};
pub use theorem::{
    ceiling, default_truncation_degree, grothendieck_via_mobius, proof_identity_check,
    proof_identity_report, support_poset, verify_theorem, ProofIdentityReport,
    VerificationReport,
};

/// Default coefficient scalar: arbitrary-precision signed integers.
pub type Int = num_bigint::BigInt;

/// Sparse polynomial over [`Int`].
pub type Poly = SparsePoly<Int>;

/// Truncated-ring polynomial over [`Int`].
pub type Truncated = TruncatedPoly<Int>;

/// One-sum labelling with [`Int`] labels.
pub type Labels = Labelling<Int>;

/// Full S_n polynomial table over [`Int`].
pub type Table = PolynomialTable<Int>;
