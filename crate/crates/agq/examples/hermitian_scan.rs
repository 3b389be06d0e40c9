//! Map the exact Hermitian self-orthogonality range of the codes C_m by the
//! direct Gram test, past the guaranteed threshold.

use std::sync::Arc;

use agq::agcode::{self};
use agq::curve::{CurveKind, CurveSpec};

fn main() {
    let curve = Arc::new(CurveSpec::new(CurveKind::A, 2).unwrap());
    let threshold = agcode::hermitian_threshold(&curve);
    println!(
        "curve A, q={}: guaranteed Hermitian self-orthogonal for m <= {threshold}",
        curve.q()
    );
    for (m, so) in agcode::scan_hermitian(&curve, threshold + 4).unwrap() {
        println!(
            "  m={m:>2}  {}{}",
            if so { "self-orthogonal" } else { "not self-orthogonal" },
            if m <= threshold { "  (guaranteed)" } else { "" }
        );
    }
}
