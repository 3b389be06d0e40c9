//! Verify, by direct matrix computation, that the Euclidean dual of C_m is
//! the evaluation code C_{n+2g-2-m} for every constructible m on both
//! curves.

use std::sync::Arc;

use agq::agcode::{self};
use agq::curve::{CurveKind, CurveSpec};

fn main() {
    for (kind, e) in [(CurveKind::A, 1), (CurveKind::A, 2), (CurveKind::B, 1), (CurveKind::B, 3)] {
        let curve = Arc::new(CurveSpec::new(kind, e).unwrap());
        let range = agcode::constructible_range(&curve);
        let mut all = true;
        for m in range.clone() {
            all &= agcode::verify_duality(&curve, m).unwrap();
        }
        println!(
            "curve {} q={:>2}: dual(C_m) = C_({}+{}-m) for all m in {}..{} -> {}",
            curve.kind().letter(),
            curve.q(),
            curve.n(),
            2 * curve.genus() - 2,
            range.start,
            range.end,
            if all { "verified" } else { "FAILED" }
        );
    }
}
