//! One-point evaluation codes C_m on the two maximal curves, plus the
//! computational verification of the duality, self-orthogonality, and
//! threshold claims about them.
//!
//! C_m is the image of the monomial basis of L(m·P∞) under evaluation at the
//! canonical point list. Duality is checked as a matrix identity: the
//! Euclidean dual of C_m must equal C_{n+2g-2-m} built by evaluation.

use std::sync::Arc;

use thiserror::Error;

use crate::curve::{CurveKind, CurveSpec};
use crate::field::Elem;
use crate::lincode::{CodeError, LinearCode};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AgError {
    #[error("divisor degree m={m} out of range: need 0 <= m < n={n}")]
    OutOfRange { m: usize, n: usize },
    #[error("dual parameter {dual_m} not constructible: need it below n={n}")]
    DualNotConstructible { dual_m: usize, n: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// The AG code C_m together with its designed distance data.
#[derive(Debug, Clone)]
pub struct AgCode {
    pub curve: Arc<CurveSpec>,
    pub m: usize,
    pub code: LinearCode,
    /// n − m, floored at 1.
    pub designed_distance: usize,
    /// m − (2g − 2), floored at 1; a lower bound on the dual's distance.
    pub dual_designed_distance: usize,
}

impl AgCode {
    /// Evaluates the monomial basis of L(m·P∞) at every finite point and
    /// canonicalizes the resulting generator matrix.
    pub fn build(curve: Arc<CurveSpec>, m: usize) -> Result<AgCode, AgError> {
        let n = curve.n();
        if m >= n {
            return Err(AgError::OutOfRange { m, n });
        }
        let basis = curve.rr_basis(m);
        let rows: Vec<Vec<Elem>> = basis
            .monomials
            .iter()
            .map(|&mono| {
                curve
                    .points()
                    .iter()
                    .map(|&p| curve.evaluate_monomial(mono, p))
                    .collect()
            })
            .collect();
        let expected_k = rows.len();
        let code = LinearCode::from_rows(curve.field().clone(), n, rows);
        // distinct pole orders make the evaluations independent for m < n
        assert_eq!(code.k(), expected_k, "evaluation matrix dropped rank");

        let g = curve.genus();
        let designed_distance = (n - m).max(1);
        let dual_designed_distance = (m + 2).saturating_sub(2 * g).max(1);
        Ok(AgCode {
            curve,
            m,
            code,
            designed_distance,
            dual_designed_distance,
        })
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn k(&self) -> usize {
        self.code.k()
    }
}

/// The divisor degree whose evaluation code represents the dual of C_m:
/// n + 2g − 2 − m.
pub fn dual_parameter(curve: &CurveSpec, m: usize) -> usize {
    curve.n() + 2 * curve.genus() - 2 - m
}

/// Checks dual(C_m) = C_{n+2g-2-m} as an identity of canonical generator
/// matrices. Both sides must be constructible evaluation codes.
pub fn verify_duality(curve: &Arc<CurveSpec>, m: usize) -> Result<bool, AgError> {
    let n = curve.n();
    if m >= n {
        return Err(AgError::OutOfRange { m, n });
    }
    let dual_m = dual_parameter(curve, m);
    if dual_m >= n {
        return Err(AgError::DualNotConstructible { dual_m, n });
    }
    let primal = AgCode::build(curve.clone(), m)?;
    let mirror = AgCode::build(curve.clone(), dual_m)?;
    Ok(primal.code.dual().equal(&mirror.code)?)
}

/// Range of m for which both C_m and its dual representation are
/// evaluation codes: 2g−1 ≤ m ≤ n−1.
pub fn constructible_range(curve: &CurveSpec) -> std::ops::Range<usize> {
    let g = curve.genus();
    (2 * g).saturating_sub(1)..curve.n()
}

/// C_m is Euclidean self-orthogonal whenever m ≤ n/2 + g − 1.
pub fn euclidean_threshold(curve: &CurveSpec) -> usize {
    curve.n() / 2 + curve.genus() - 1
}

/// C_m is Hermitian self-orthogonal whenever m is at most this: 2q−2 on
/// curve A and 3q−4 on curve B.
pub fn hermitian_threshold(curve: &CurveSpec) -> usize {
    let q = curve.q();
    match curve.kind() {
        CurveKind::A => 2 * q - 2,
        CurveKind::B => 3 * q - 4,
    }
}

/// Direct Hermitian Gram verdict for every C_m with m ≤ m_max. The theorems
/// give a sufficient condition only; this surfaces the exact range.
pub fn scan_hermitian(curve: &Arc<CurveSpec>, m_max: usize) -> Result<Vec<(usize, bool)>, AgError> {
    (0..=m_max)
        .map(|m| {
            let c = AgCode::build(curve.clone(), m)?;
            Ok((m, c.code.is_hermitian_self_orthogonal()))
        })
        .collect()
}
