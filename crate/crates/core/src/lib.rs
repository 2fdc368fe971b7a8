//! Exact PBW arithmetic for Capelli-type central elements of U(gl_N), U(o(S))
//! and U(sp(J)).

pub mod capelli;
pub mod coeff;
pub mod error;
pub mod lemmas;
pub mod lie;
pub mod ncmatrix;
pub mod oracle;
pub mod pbw;
pub mod ratmat;
pub mod verify;
pub mod weyl;

pub use coeff::{Rat, UnivPoly};
pub use error::{Error, Result};
pub use lie::{AlgebraKind, Descriptor, GenId, Grade, Realization, Variant};
pub use pbw::{weight_from_partition, EnvElement, Monomial, Weight};
pub use ratmat::RatMatrix;
