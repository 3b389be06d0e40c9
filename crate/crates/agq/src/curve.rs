//! The two maximal curves over GF(q²), their rational points, and monomial
//! bases for the spaces of functions with poles only at infinity.
//!
//! Curve A is y² + y = x^{q+1} (genus q/2, 2q² finite points, any q = 2^e).
//! Curve B is y^q + y = x³ (genus q−1, 3q²−2q finite points, e odd so that
//! 3 | q+1). Points are enumerated fiber by fiber over x and kept in a fixed
//! lexicographic order, since every duality statement downstream is a matrix
//! identity that depends on the coordinate order.

use std::sync::Arc;

use thiserror::Error;

use crate::field::{ArtinSchreierMap, Elem, FieldCtx, FieldError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("curve B requires an odd extension degree e, got e={0}")]
    EvenDegreeForCurveB(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveKind {
    A,
    B,
}

impl CurveKind {
    pub fn letter(self) -> char {
        match self {
            CurveKind::A => 'a',
            CurveKind::B => 'b',
        }
    }
}

/// A maximal curve together with its enumerated finite rational points.
#[derive(Debug, Clone)]
pub struct CurveSpec {
    kind: CurveKind,
    field: Arc<FieldCtx>,
    genus: usize,
    points: Vec<(Elem, Elem)>,
}

/// A monomial basis x^a y^b of the functions with pole order at most m at
/// infinity, listed with the pole orders that make it a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis {
    pub m: usize,
    /// Exponent pairs (a, b).
    pub monomials: Vec<(usize, usize)>,
    /// Pole order of each monomial at infinity; pairwise distinct.
    pub pole_orders: Vec<usize>,
}

impl CurveSpec {
    pub fn new(kind: CurveKind, e: u32) -> Result<CurveSpec, CurveError> {
        if kind == CurveKind::B && e.is_multiple_of(2) {
            return Err(CurveError::EvenDegreeForCurveB(e));
        }
        let field = Arc::new(FieldCtx::new(e)?);
        let q = field.q() as usize;
        let (genus, expected_n, map) = match kind {
            CurveKind::A => (q / 2, 2 * q * q, ArtinSchreierMap::SquarePlusId),
            CurveKind::B => (q - 1, 3 * q * q - 2 * q, ArtinSchreierMap::QthPowerPlusId),
        };

        let mut points = Vec::with_capacity(expected_n);
        for x in field.elements() {
            let rhs = match kind {
                CurveKind::A => field.pow(x, q as u64 + 1),
                CurveKind::B => field.pow(x, 3),
            };
            for y in field.solve_affine_linearized(map, rhs) {
                points.push((x, y));
            }
        }
        // elements() ascends and the solver sorts each fiber, so the list is
        // already in the canonical lex order.
        assert_eq!(points.len(), expected_n, "point count disagrees with 2q^2 / 3q^2-2q");

        Ok(CurveSpec { kind, field, genus, points })
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.q() as usize
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Code length: the number of finite rational points.
    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[(Elem, Elem)] {
        &self.points
    }

    /// Pole orders at infinity of x and y, and the cap on the y-exponent
    /// coming from the curve equation.
    fn pole_structure(&self) -> (usize, usize, usize) {
        let q = self.q();
        match self.kind {
            // y^2 = y + x^{q+1} caps b at 1; x has pole order 2, y has q+1.
            CurveKind::A => (2, q + 1, 1),
            // y^q = y + x^3 caps b at q-1; x has pole order q, y has 3.
            CurveKind::B => (q, 3, q - 1),
        }
    }

    /// Basis of L(m·P∞) as monomials x^a y^b with pole order ≤ m.
    pub fn rr_basis(&self, m: usize) -> MonomialBasis {
        let (px, py, b_max) = self.pole_structure();
        let mut monomials = Vec::new();
        let mut pole_orders = Vec::new();
        for b in 0..=b_max {
            if py * b > m {
                continue;
            }
            for a in 0..=(m - py * b) / px {
                monomials.push((a, b));
                pole_orders.push(px * a + py * b);
            }
        }
        let mut idx: Vec<usize> = (0..monomials.len()).collect();
        idx.sort_by_key(|&i| pole_orders[i]);
        let monomials: Vec<_> = idx.iter().map(|&i| monomials[i]).collect();
        let pole_orders: Vec<_> = idx.iter().map(|&i| pole_orders[i]).collect();
        // Distinct pole orders guarantee linear independence of the
        // evaluations as functions.
        debug_assert!(pole_orders.windows(2).all(|w| w[0] < w[1]));
        MonomialBasis { m, monomials, pole_orders }
    }

    /// Evaluates x^a · y^b at a point.
    pub fn evaluate_monomial(&self, (a, b): (usize, usize), (x, y): (Elem, Elem)) -> Elem {
        let f = &self.field;
        f.mul(f.pow(x, a as u64), f.pow(y, b as u64))
    }
}
