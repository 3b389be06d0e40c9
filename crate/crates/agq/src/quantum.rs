//! Stabilizer codes from Hermitian self-orthogonal classical codes: the
//! [[n, n−2k, d⊥]] parameter derivation, a concrete symplectic stabilizer
//! matrix over GF(q), and the Singleton/Hamming bound checks.

use num_bigint::BigUint;
use thiserror::Error;

use crate::agcode::AgCode;
use crate::curve::CurveKind;
use crate::field::{Elem, FieldCtx};
use crate::lincode::{CodeError, LinearCode};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuantumError {
    #[error("source code is not Hermitian self-orthogonal")]
    NotHermitianSelfOrthogonal,
    #[error("no basis element gamma outside GF(q) yields a symplectic expansion")]
    NoAdmissibleGamma,
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Theorem-formula parameters (n, k_Q, d_lower) plus a flag telling whether
/// m sits inside the range the theorem guarantees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QParams {
    pub n: usize,
    pub k_q: i64,
    pub d_lower: i64,
    pub in_theorem_range: bool,
}

/// Parameters of the quantum code from curve A: [[2q², 2q²−2m+q−2, ≥ m+2−q]]
/// for q−1 ≤ m ≤ 2q−2. Out-of-range m is evaluated anyway and flagged.
pub fn qparams_curve_a(q: usize, m: usize) -> QParams {
    let n = 2 * q * q;
    QParams {
        n,
        k_q: n as i64 - 2 * m as i64 + q as i64 - 2,
        d_lower: m as i64 + 2 - q as i64,
        in_theorem_range: q - 1 <= m && m <= 2 * q - 2,
    }
}

/// Parameters from curve B: [[3q²−2q, 3q²−2m−4, ≥ m+4−2q]] for
/// 2q−3 ≤ m ≤ 3q−4 (q an odd power of 2).
pub fn qparams_curve_b(q: usize, m: usize) -> QParams {
    QParams {
        n: 3 * q * q - 2 * q,
        k_q: 3 * (q * q) as i64 - 2 * m as i64 - 4,
        d_lower: m as i64 + 4 - 2 * q as i64,
        in_theorem_range: 2 * q - 3 <= m && m <= 3 * q - 4,
    }
}

/// A symplectic stabilizer check matrix over GF(q) in (X|Z) block layout.
#[derive(Debug, Clone)]
pub struct SymplecticMatrix {
    /// Half-length: columns number 2n.
    pub n: usize,
    /// The basis element of GF(q²) over GF(q) used for the expansion.
    pub gamma: Elem,
    pub rows: Vec<Vec<Elem>>,
}

impl SymplecticMatrix {
    /// Symplectic product of two (a|b) rows: a·b′ + a′·b (characteristic 2).
    pub fn symplectic_product(field: &FieldCtx, u: &[Elem], v: &[Elem]) -> Elem {
        let n = u.len() / 2;
        let mut acc = Elem::ZERO;
        for i in 0..n {
            acc = field.add(acc, field.mul(u[i], v[n + i]));
            acc = field.add(acc, field.mul(v[i], u[n + i]));
        }
        acc
    }

    pub fn all_pairs_orthogonal(&self, field: &FieldCtx) -> bool {
        self.rows.iter().enumerate().all(|(i, u)| {
            self.rows[i..]
                .iter()
                .all(|v| Self::symplectic_product(field, u, v).is_zero())
        })
    }

    pub fn rank(&self, field: &FieldCtx) -> usize {
        LinearCode::from_rows(
            std::sync::Arc::new(field.clone()),
            2 * self.n,
            self.rows.clone(),
        )
        .k()
    }
}

/// A derived quantum stabilizer code record.
#[derive(Debug, Clone)]
pub struct QuantumCodeRecord {
    pub q: usize,
    pub n: usize,
    pub k_q: usize,
    pub d_lower: usize,
    pub d_exact: Option<usize>,
    pub source: (CurveKind, usize),
    pub in_theorem_range: bool,
    pub stabilizer: Option<SymplecticMatrix>,
}

/// Knobs for `derive_quantum`. Distance certification is attempted only when
/// its enumeration cost estimate stays within `budget` codeword checks.
#[derive(Debug, Clone, Copy)]
pub struct DeriveOptions {
    pub seed: u64,
    pub budget: u64,
    pub trials: u32,
    pub isd_w_max: usize,
    pub with_stabilizer: bool,
}

impl Default for DeriveOptions {
    fn default() -> Self {
        DeriveOptions {
            seed: 0,
            budget: 1 << 24,
            trials: 100,
            isd_w_max: 3,
            with_stabilizer: false,
        }
    }
}

/// Decomposes z ∈ GF(q²) as a + γ·b with a, b ∈ GF(q), using that the trace
/// of γ is nonzero exactly when γ lies outside GF(q).
fn decompose(field: &FieldCtx, gamma: Elem, z: Elem) -> (Elem, Elem) {
    let tr_gamma = field.trace_to_gf_q(gamma);
    let tr_z = field.trace_to_gf_q(z);
    let b = field.mul(tr_z, field.inv(tr_gamma).expect("gamma outside GF(q)"));
    let a = field.add(z, field.mul(gamma, b));
    debug_assert!(field.in_subfield(a) && field.in_subfield(b));
    (a, b)
}

fn expand_with_gamma(c: &LinearCode, gamma: Elem) -> SymplecticMatrix {
    let field = c.field();
    let n = c.n();
    let mut rows = Vec::with_capacity(2 * c.k());
    for row in c.gen() {
        for mult in [Elem::ONE, gamma] {
            let mut out = vec![Elem::ZERO; 2 * n];
            for (i, &x) in row.iter().enumerate() {
                let (a, b) = decompose(field, gamma, field.mul(mult, x));
                out[i] = a;
                out[n + i] = b;
            }
            rows.push(out);
        }
    }
    SymplecticMatrix { n, gamma, rows }
}

/// Spreads a Hermitian self-orthogonal code over GF(q²) into a 2k×2n
/// stabilizer check matrix over GF(q): each generator row c contributes the
/// GF(q)-coordinates of c and γc in the basis {1, γ}. The defining contract
/// is checked, not assumed: rank 2k and pairwise zero symplectic products.
/// If the default γ (the field generator) fails, every γ outside GF(q) is
/// tried before giving up.
pub fn expand_to_symplectic(c: &LinearCode) -> Result<SymplecticMatrix, QuantumError> {
    if !c.is_hermitian_self_orthogonal() {
        return Err(QuantumError::NotHermitianSelfOrthogonal);
    }
    let field = c.field();
    if c.k() == 0 {
        return Ok(SymplecticMatrix { n: c.n(), gamma: field.generator(), rows: Vec::new() });
    }
    let candidates =
        std::iter::once(field.generator()).chain(field.elements().filter(|&g| !field.in_subfield(g)));
    for gamma in candidates {
        if field.in_subfield(gamma) {
            continue;
        }
        let mat = expand_with_gamma(c, gamma);
        if mat.all_pairs_orthogonal(field) && mat.rank(field) == 2 * c.k() {
            return Ok(mat);
        }
    }
    Err(QuantumError::NoAdmissibleGamma)
}

/// Applies the stabilizer construction to a Hermitian self-orthogonal AG
/// code: an [[n, n−2k]] quantum code whose distance is bounded below by the
/// dual designed distance. The exact distance is filled in only with a
/// certificate: exhaustive enumeration of the dual representation
/// C_{n+2g−2−m}, or matching certified lower and search upper bounds.
/// (Frobenius preserves weights, so the Hermitian dual has the same weight
/// distribution as the Euclidean one.)
pub fn derive_quantum(ag: &AgCode, opts: DeriveOptions) -> Result<QuantumCodeRecord, QuantumError> {
    if !ag.code.is_hermitian_self_orthogonal() {
        return Err(QuantumError::NotHermitianSelfOrthogonal);
    }
    let curve = &ag.curve;
    let n = ag.n();
    let k = ag.k();
    let q = curve.q();
    let k_q = n - 2 * k;
    let d_lower = ag.dual_designed_distance;

    let dual = ag.code.dual();
    let d_exact = certified_distance(&dual, d_lower, opts);

    let params = match curve.kind() {
        CurveKind::A => qparams_curve_a(q, ag.m),
        CurveKind::B => qparams_curve_b(q, ag.m),
    };

    let stabilizer = if opts.with_stabilizer {
        Some(expand_to_symplectic(&ag.code)?)
    } else {
        None
    };

    Ok(QuantumCodeRecord {
        q,
        n,
        k_q,
        d_lower,
        d_exact,
        source: (curve.kind(), ag.m),
        in_theorem_range: params.in_theorem_range,
        stabilizer,
    })
}

/// Exact distance only when a certificate is affordable within the budget.
fn certified_distance(dual: &LinearCode, d_lower: usize, opts: DeriveOptions) -> Option<usize> {
    let q2 = dual.field().q2() as u128;
    let messages = q2.checked_pow(dual.k() as u32).unwrap_or(u128::MAX);
    if messages <= opts.budget as u128 {
        return dual.min_distance_exhaustive(opts.budget).ok()?.finite();
    }
    // ISD route: cost ~ C(k, w) * (q²-1)^(w-1) words per level
    let k = dual.k() as u128;
    let w = opts.isd_w_max as u128;
    let mut cost: u128 = 1;
    for i in 0..w {
        cost = cost.saturating_mul(k - i) / (i + 1);
    }
    cost = cost.saturating_mul((q2 - 1).saturating_pow(w as u32 - 1));
    if cost > opts.budget as u128 {
        return None;
    }
    let lower = dual.min_distance_lower_isd(opts.isd_w_max);
    let upper = dual.min_weight_upper(opts.trials, opts.seed).finite()?;
    (lower >= d_lower && lower == upper).then_some(upper)
}

/// Quantum Singleton bound slack: n + 2 − (k_Q + 2d), using the exact
/// distance when present. Nonnegative means the bound holds.
pub fn singleton_check(rec: &QuantumCodeRecord) -> (i64, bool) {
    let d = rec.d_exact.unwrap_or(rec.d_lower) as i64;
    let defect = rec.n as i64 + 2 - (rec.k_q as i64 + 2 * d);
    (defect, defect >= 0)
}

/// Quantum Hamming bound in exact integer arithmetic:
/// q^(n−k_Q) ≥ Σ_{j ≤ ⌊(d−1)/2⌋} C(n,j)·(q²−1)^j.
pub fn hamming_check(rec: &QuantumCodeRecord) -> bool {
    let d = rec.d_exact.unwrap_or(rec.d_lower);
    let t = (d.saturating_sub(1)) / 2;
    let n = rec.n;
    let q = BigUint::from(rec.q);
    let q2m1 = BigUint::from(rec.q * rec.q - 1);
    let mut sum = BigUint::from(0u32);
    let mut binom = BigUint::from(1u32);
    let mut power = BigUint::from(1u32);
    for j in 0..=t {
        if j > 0 {
            binom = binom * BigUint::from(n - j + 1) / BigUint::from(j);
            power *= &q2m1;
        }
        sum += &binom * &power;
    }
    q.pow((n - rec.k_q) as u32) >= sum
}
