//! Alexander polynomials of knots from Seifert matrices, and primeness
//! certificates built on them.
//!
//! - [`laurent`]: the ring `Z[t, t^-1]` with exact big-integer coefficients.
//! - [`polymatrix`]: determinants of polynomial matrices (Bareiss and
//!   cofactor expansion).
//! - [`seifert`]: Seifert matrices, the `K_{n,m}` / `K'_{n,m}` families and
//!   the Alexander polynomial pipeline.
//! - [`certify`]: A-irreducibility for symmetric trinomials and primeness
//!   certificates.

pub mod certify;
pub mod laurent;
pub mod polymatrix;
pub mod seifert;

pub use certify::{
    a_irreducible, certify_delta, certify_family, eisenstein_check, factor_trinomial,
    irreducibility_witness, is_admissible_alexander, primeness_certificate, AdmissibilityVerdict,
    CertifyError, FactorizationCertificate, IrreducibilityWitness, PrimenessCertificate, Verdict,
};
pub use laurent::{LaurentError, LaurentPoly, Unit};
pub use polymatrix::{alexander_matrix, block_compose, IntMatrix, MatrixError, PolyMatrix};
pub use seifert::{
    alexander, build_family, load_matrix, parse_matrix, AlexanderResult, FamilyKind, FamilySpec,
    SeifertError, SeifertMatrix,
};
