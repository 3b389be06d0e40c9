//! Exact distances where exhaustion is feasible, and certified
//! lower/upper bounds where it is not.

use std::sync::Arc;

use agq::agcode::AgCode;
use agq::curve::{CurveKind, CurveSpec};

fn main() {
    // small enough to exhaust: every C_m over GF(4)
    let c2 = Arc::new(CurveSpec::new(CurveKind::A, 1).unwrap());
    println!("curve A, q=2: exact distances of C_m vs the designed bound n-m");
    for m in 0..c2.n() {
        let ag = AgCode::build(c2.clone(), m).unwrap();
        let d = ag.code.min_distance_exhaustive(1 << 24).unwrap();
        println!("  C_{m}: [{},{}] d={d} (designed >= {})", ag.n(), ag.k(), ag.designed_distance);
    }

    // too large to exhaust: the [32,27] dual of C_6 over GF(16)
    let c4 = Arc::new(CurveSpec::new(CurveKind::A, 2).unwrap());
    let dual = AgCode::build(c4, 6).unwrap().code.dual();
    let lower = dual.min_distance_lower_isd(3);
    let upper = dual.min_weight_upper(100, 0);
    println!(
        "curve A, q=4: dual of C_6 is a [{},{}] code, certified {lower} <= d <= {upper}",
        dual.n(),
        dual.k()
    );
}
