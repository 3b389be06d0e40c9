//! Algebraic-geometry codes from two maximal curves over GF(q²), q = 2^e,
//! their Euclidean/Hermitian duality and self-orthogonality properties, and
//! the q-ary quantum stabilizer codes they produce.
//!
//! Curve A is y² + y = x^{q+1}; curve B is y^q + y = x³ (e odd). The
//! one-point codes C_m evaluate the functions with pole order at most m at
//! infinity on all finite rational points. Every duality and orthogonality
//! claim is verified by direct matrix computation over the explicit point
//! list, and Hermitian self-orthogonal codes are expanded into symplectic
//! stabilizer matrices over GF(q) with checked parameters.
//!
//! Entry points: [`curve::CurveSpec`] for the curves, [`agcode::AgCode`] for
//! the codes, [`quantum::derive_quantum`] for stabilizer records, and
//! [`cli`] for the command-line front end.

pub mod agcode;
pub mod cli;
pub mod curve;
pub mod field;
pub mod lincode;
pub mod quantum;

pub use agcode::AgCode;
pub use curve::{CurveKind, CurveSpec};
pub use field::{Elem, FieldCtx};
pub use lincode::{Distance, LinearCode};
pub use quantum::QuantumCodeRecord;
