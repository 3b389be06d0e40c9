//! Arithmetic in the field tower GF(2) ⊂ GF(q) ⊂ GF(q²) with q = 2^e.
//!
//! The extension GF(q²) is realized as GF(2)[x] modulo a fixed primitive
//! polynomial of degree 2e; elements are integers whose bits are the
//! polynomial-basis coordinates. Multiplication goes through discrete
//! log/antilog tables built from the generator x. The subfield GF(q) is the
//! set of Frobenius-fixed elements, never a separate context.

use std::fmt;

use thiserror::Error;

/// Primitive polynomials over GF(2), indexed by e = degree/2.
/// Bitmask convention: bit i is the coefficient of x^i.
const MODULI: [(u32, u32); 6] = [
    (2, 0b111),            // x^2 + x + 1
    (4, 0b1_0011),         // x^4 + x + 1
    (6, 0b100_0011),       // x^6 + x + 1
    (8, 0b1_0001_1101),    // x^8 + x^4 + x^3 + x^2 + 1
    (10, 0b100_0000_1001), // x^10 + x^3 + 1
    (12, 0b1_0000_0101_0011), // x^12 + x^6 + x^4 + x + 1
];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("unsupported extension degree e={0}: supported range is 1..=6")]
    UnsupportedDegree(u32),
    #[error("inversion of zero")]
    ZeroInverse,
}

/// An element of GF(q²) in the polynomial-basis encoding of its context.
///
/// The integer's bits are coordinates over GF(2); `Elem(0)` and `Elem(1)` are
/// the additive and multiplicative identities in every context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The two Artin–Schreier maps whose fibers are solved during point
/// enumeration: y ↦ y² + y and y ↦ y^q + y.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArtinSchreierMap {
    SquarePlusId,
    QthPowerPlusId,
}

/// Arithmetic context for GF(q²), q = 2^e.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    e: u32,
    q: u16,
    q2: u16,
    modulus: u32,
    exp: Vec<u16>,
    log: Vec<u16>,
}

impl FieldCtx {
    /// Builds the context for GF(2^{2e}). The modulus comes from the fixed
    /// table above; primitivity of the generator x is verified while the
    /// exp/log tables are filled, not trusted.
    pub fn new(e: u32) -> Result<FieldCtx, FieldError> {
        if !(1..=6).contains(&e) {
            return Err(FieldError::UnsupportedDegree(e));
        }
        let (deg, modulus) = MODULI[(e - 1) as usize];
        debug_assert_eq!(deg, 2 * e);
        let q2 = 1u32 << (2 * e);
        let order = q2 - 1;

        let mut exp = vec![0u16; order as usize];
        let mut log = vec![u16::MAX; q2 as usize];
        let mut acc: u32 = 1;
        for i in 0..order {
            assert_eq!(
                log[acc as usize],
                u16::MAX,
                "generator x is not primitive for modulus {modulus:#x}"
            );
            exp[i as usize] = acc as u16;
            log[acc as usize] = i as u16;
            acc <<= 1;
            if acc & q2 != 0 {
                acc ^= modulus;
            }
        }
        assert_eq!(acc, 1, "x^(q^2-1) != 1 for modulus {modulus:#x}");

        Ok(FieldCtx {
            e,
            q: 1 << e,
            q2: q2 as u16,
            modulus,
            exp,
            log,
        })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// Order of the subfield GF(q).
    pub fn q(&self) -> u16 {
        self.q
    }

    /// Order of the full field GF(q²).
    pub fn q2(&self) -> u16 {
        self.q2
    }

    /// Modulus polynomial as a bitmask (bit i = coefficient of x^i).
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// The generator used for the log tables (the class of x).
    pub fn generator(&self) -> Elem {
        Elem(2)
    }

    /// All field elements in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q2).map(Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(a.0 ^ b.0)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let order = (self.q2 - 1) as u32;
        let idx = (self.log[a.0 as usize] as u32 + self.log[b.0 as usize] as u32) % order;
        Elem(self.exp[idx as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let order = (self.q2 - 1) as u32;
        let idx = (order - self.log[a.0 as usize] as u32) % order;
        Ok(Elem(self.exp[idx as usize]))
    }

    pub fn pow(&self, a: Elem, exp: u64) -> Elem {
        if a.is_zero() {
            return if exp == 0 { Elem::ONE } else { Elem::ZERO };
        }
        let order = (self.q2 - 1) as u64;
        let idx = (self.log[a.0 as usize] as u64 * (exp % order)) % order;
        Elem(self.exp[idx as usize])
    }

    /// The conjugation a ↦ a^q; an involution whose fixed points are GF(q).
    pub fn frobenius_q(&self, a: Elem) -> Elem {
        self.pow(a, self.q as u64)
    }

    /// Trace to the subfield: a + a^q ∈ GF(q).
    pub fn trace_to_gf_q(&self, a: Elem) -> Elem {
        self.add(a, self.frobenius_q(a))
    }

    /// Norm to the subfield: a·a^q = a^{q+1} ∈ GF(q).
    pub fn norm_to_gf_q(&self, a: Elem) -> Elem {
        self.pow(a, self.q as u64 + 1)
    }

    /// Subfield membership test: a ∈ GF(q) iff a^q = a.
    pub fn in_subfield(&self, a: Elem) -> bool {
        self.frobenius_q(a) == a
    }

    fn apply_map(&self, map: ArtinSchreierMap, y: Elem) -> Elem {
        let image = match map {
            ArtinSchreierMap::SquarePlusId => self.mul(y, y),
            ArtinSchreierMap::QthPowerPlusId => self.frobenius_q(y),
        };
        self.add(image, y)
    }

    /// All y ∈ GF(q²) with map(y) = c, found by GF(2)-linear algebra on the
    /// 2e-dimensional coordinate space. The result is sorted; its size is 0
    /// or the kernel size (2 for y²+y, q for y^q+y).
    pub fn solve_affine_linearized(&self, map: ArtinSchreierMap, c: Elem) -> Vec<Elem> {
        let dim = (2 * self.e) as usize;
        // Column i of the operator matrix is map(x^i), stored as a bitmask.
        let cols: Vec<u16> = (0..dim).map(|i| self.apply_map(map, Elem(1 << i)).0).collect();

        // Row-reduce the augmented system [A | c] with rows indexed by output bit.
        // rows[r] packs the coefficient bits in positions 0..dim and the RHS bit
        // in position dim.
        let mut rows: Vec<u32> = (0..dim)
            .map(|r| {
                let mut row = 0u32;
                for (i, col) in cols.iter().enumerate() {
                    row |= (((col >> r) & 1) as u32) << i;
                }
                row | ((((c.0 >> r) & 1) as u32) << dim)
            })
            .collect();

        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..dim {
            if let Some(r) = (rank..dim).find(|&r| rows[r] >> col & 1 == 1) {
                rows.swap(rank, r);
                for r2 in 0..dim {
                    if r2 != rank && rows[r2] >> col & 1 == 1 {
                        rows[r2] ^= rows[rank];
                    }
                }
                pivots.push(col);
                rank += 1;
            }
        }
        // Inconsistent system: a zero row with nonzero RHS.
        if rows[rank..].iter().any(|&row| row >> dim & 1 == 1) {
            return Vec::new();
        }

        let mut particular = 0u16;
        for (r, &p) in pivots.iter().enumerate() {
            if rows[r] >> dim & 1 == 1 {
                particular |= 1 << p;
            }
        }
        let free_cols: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
        let kernel_basis: Vec<u16> = free_cols
            .iter()
            .map(|&f| {
                let mut v = 1u16 << f;
                for (r, &p) in pivots.iter().enumerate() {
                    if rows[r] >> f & 1 == 1 {
                        v |= 1 << p;
                    }
                }
                v
            })
            .collect();

        let mut solutions: Vec<Elem> = (0..1u32 << kernel_basis.len())
            .map(|mask| {
                let mut v = particular;
                for (i, &b) in kernel_basis.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        v ^= b;
                    }
                }
                Elem(v)
            })
            .collect();
        solutions.sort_unstable();
        solutions
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> FieldCtx {
        FieldCtx::new(1).unwrap()
    }

    const OMEGA: Elem = Elem(2);
    const OMEGA_SQ: Elem = Elem(3);

    #[test]
    fn rejects_out_of_range_degree() {
        assert_eq!(FieldCtx::new(0).unwrap_err(), FieldError::UnsupportedDegree(0));
        assert_eq!(FieldCtx::new(7).unwrap_err(), FieldError::UnsupportedDegree(7));
    }

    #[test]
    fn gf4_multiplication_table() {
        let f = gf4();
        // Forced by x^2 + x + 1: omega * omega = omega + 1.
        assert_eq!(f.mul(OMEGA, OMEGA), OMEGA_SQ);
        assert_eq!(f.inv(OMEGA).unwrap(), OMEGA_SQ);
        assert_eq!(f.inv(Elem::ZERO).unwrap_err(), FieldError::ZeroInverse);
    }

    #[test]
    fn exp_table_covers_multiplicative_group() {
        for e in 1..=6 {
            let f = FieldCtx::new(e).unwrap();
            let mut seen: Vec<u16> = f.exp.clone();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), f.q2() as usize - 1);
            assert!(!seen.contains(&0));
        }
    }

    #[test]
    fn subfield_has_q_elements() {
        for e in 1..=6 {
            let f = FieldCtx::new(e).unwrap();
            let count = f.elements().filter(|&a| f.in_subfield(a)).count();
            assert_eq!(count, f.q() as usize);
        }
    }

    #[test]
    fn characteristic_two() {
        let f = FieldCtx::new(2).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, a), Elem::ZERO);
        }
    }

    #[test]
    fn exp_log_round_trip() {
        for e in 1..=3 {
            let f = FieldCtx::new(e).unwrap();
            for a in f.elements().skip(1) {
                let l = f.log[a.0 as usize];
                assert_eq!(Elem(f.exp[l as usize]), a);
            }
        }
    }

    #[test]
    fn frobenius_values_in_gf4() {
        let f = gf4();
        assert_eq!(f.frobenius_q(OMEGA), OMEGA_SQ);
        assert_eq!(f.trace_to_gf_q(OMEGA), Elem::ONE);
        assert_eq!(f.norm_to_gf_q(OMEGA), Elem::ONE);
        assert_eq!(f.trace_to_gf_q(Elem::ZERO), Elem::ZERO);
        assert_eq!(f.norm_to_gf_q(Elem::ONE), Elem::ONE);
    }

    #[test]
    fn frobenius_is_an_automorphism() {
        for e in 1..=3 {
            let f = FieldCtx::new(e).unwrap();
            for a in f.elements() {
                assert_eq!(f.frobenius_q(f.frobenius_q(a)), a);
                if f.in_subfield(a) {
                    assert_eq!(f.frobenius_q(a), a);
                }
                for b in f.elements() {
                    assert_eq!(
                        f.frobenius_q(f.add(a, b)),
                        f.add(f.frobenius_q(a), f.frobenius_q(b))
                    );
                    assert_eq!(
                        f.frobenius_q(f.mul(a, b)),
                        f.mul(f.frobenius_q(a), f.frobenius_q(b))
                    );
                }
            }
        }
    }

    #[test]
    fn trace_and_norm_land_in_subfield() {
        for e in 1..=3 {
            let f = FieldCtx::new(e).unwrap();
            for a in f.elements() {
                assert!(f.in_subfield(f.trace_to_gf_q(a)));
                assert!(f.in_subfield(f.norm_to_gf_q(a)));
            }
        }
    }

    #[test]
    fn artin_schreier_fibers_in_gf4() {
        let f = gf4();
        let m = ArtinSchreierMap::SquarePlusId;
        assert_eq!(f.solve_affine_linearized(m, Elem::ZERO), vec![Elem::ZERO, Elem::ONE]);
        assert_eq!(f.solve_affine_linearized(m, OMEGA), vec![]);
        assert_eq!(f.solve_affine_linearized(m, Elem::ONE), vec![OMEGA, OMEGA_SQ]);
    }

    #[test]
    fn solver_matches_brute_force() {
        for e in 1..=3 {
            let f = FieldCtx::new(e).unwrap();
            for map in [ArtinSchreierMap::SquarePlusId, ArtinSchreierMap::QthPowerPlusId] {
                for c in f.elements() {
                    let mut expected: Vec<Elem> =
                        f.elements().filter(|&y| f.apply_map(map, y) == c).collect();
                    expected.sort_unstable();
                    assert_eq!(f.solve_affine_linearized(map, c), expected);
                }
            }
        }
    }

    #[test]
    fn square_plus_id_fibers_have_size_two_on_norm_values() {
        // Fiber count behind n = 2q^2: y^2+y = x^{q+1} has two solutions for
        // every x in GF(q^2).
        for e in 1..=3 {
            let f = FieldCtx::new(e).unwrap();
            for x in f.elements() {
                let c = f.norm_to_gf_q(x);
                let fiber = f.solve_affine_linearized(ArtinSchreierMap::SquarePlusId, c);
                assert_eq!(fiber.len(), 2);
            }
        }
    }

    #[test]
    fn pow_agrees_with_repeated_multiplication() {
        let f = FieldCtx::new(2).unwrap();
        for a in f.elements() {
            let mut acc = Elem::ONE;
            for k in 0..20u64 {
                assert_eq!(f.pow(a, k), acc, "a={a} k={k}");
                acc = f.mul(acc, a);
            }
        }
    }
}
