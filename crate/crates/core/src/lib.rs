//! Ufnarovskii quivers of finitely presented monomial algebras.
//!
//! Given `A = k<letters>/(forbidden words)`, this crate builds the quiver `Q`
//! whose paths spell the normal words of `A`, realizes the graded
//! homomorphism `f̄ : A -> kQ` as exact degree-wise matrices, and checks its
//! properties degree by degree:
//!
//! * arrows into a vertex carry distinct labels;
//! * `f̄(A_n) (kQ)_0 = (kQ)_n`;
//! * `ker f̄` and `coker f̄` are torsion, with explicit annihilation bounds;
//! * a cyclic `kQ`-module is finite-dimensional over `kQ` exactly when it is
//!   finite-dimensional over `A`.
//!
//! Rational Hilbert series and the growth class of `A` come along from the
//! transfer matrix of `Q`.
//!
//! ```
//! use ufna_core::{language::Cap, Fbar, Presentation, Quiver};
//!
//! let p = Presentation::parse("gens: x y; rels: xx;").unwrap().normalize().unwrap();
//! let q = Quiver::build(&p, Cap::DEFAULT).unwrap();
//! let fbar = Fbar::new(&p, &q, Cap::DEFAULT);
//! assert!(fbar.check_degree_span(4).unwrap());
//! assert_eq!(fbar.ker_coker(1).unwrap().coker_dim, 1);
//! ```

pub mod corpus;
pub mod error;
pub mod exactla;
pub mod hilbert;
pub mod language;
pub mod morphism;
pub mod presentation;
pub mod quiver;

pub use error::{Error, Result};
pub use exactla::{IntMatrix, IntPoly};
pub use hilbert::{hilbert_algebra, hilbert_quiver, RationalSeries};
pub use language::{Cap, DegreeBasis};
pub use morphism::{
    CertificateKind, CertificateStatus, CyclicProbe, Fbar, FdimCertificate, GradedMapSlice,
    KerCoker, PathCombination,
};
pub use presentation::{Presentation, Word};
pub use quiver::{Arrow, GrowthClass, Path, Quiver};
