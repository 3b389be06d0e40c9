//! Derive quantum stabilizer records from the Hermitian self-orthogonal
//! codes, with Singleton and Hamming bound checks.

use std::sync::Arc;

use agq::agcode::AgCode;
use agq::curve::{CurveKind, CurveSpec};
use agq::quantum::{self, DeriveOptions};

fn main() {
    for (kind, e, range) in [
        (CurveKind::A, 1u32, 1..=2usize),
        (CurveKind::A, 2, 3..=6),
        (CurveKind::B, 3, 13..=20),
    ] {
        let curve = Arc::new(CurveSpec::new(kind, e).unwrap());
        println!("curve {} over GF({}):", curve.kind().letter(), curve.field().q2());
        for m in range {
            let ag = AgCode::build(curve.clone(), m).unwrap();
            let rec = quantum::derive_quantum(&ag, DeriveOptions::default()).unwrap();
            let d = rec
                .d_exact
                .map(|d| d.to_string())
                .unwrap_or_else(|| format!(">={}", rec.d_lower));
            let (defect, within) = quantum::singleton_check(&rec);
            println!(
                "  m={m:>2}: [[{},{},{}]]_{} singleton defect {} ({}), hamming {}",
                rec.n,
                rec.k_q,
                d,
                rec.q,
                defect,
                if within { "within" } else { "violated" },
                if quantum::hamming_check(&rec) { "ok" } else { "violated" },
            );
        }
    }
}
