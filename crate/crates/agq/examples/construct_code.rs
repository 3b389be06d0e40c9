//! Build the one-point code C_m on a maximal curve and print its generator
//! matrix together with the designed distance data.

use std::sync::Arc;

use agq::agcode::AgCode;
use agq::curve::{CurveKind, CurveSpec};

fn main() {
    let curve = Arc::new(CurveSpec::new(CurveKind::A, 2).unwrap());
    println!(
        "curve A over GF({}): q={}, genus {}, {} finite points",
        curve.field().q2(),
        curve.q(),
        curve.genus(),
        curve.n()
    );

    let m = 6;
    let ag = AgCode::build(curve.clone(), m).unwrap();
    println!(
        "C_{m}: [{}, {}] code over GF({}), distance >= {}, dual distance >= {}",
        ag.n(),
        ag.k(),
        curve.field().q2(),
        ag.designed_distance,
        ag.dual_designed_distance
    );
    println!("basis monomials (a, b) for x^a y^b: {:?}", curve.rr_basis(m).monomials);
    println!("generator matrix (reduced row-echelon form):");
    for row in ag.code.gen() {
        let words: Vec<String> = row.iter().map(|e| format!("{e:>2}")).collect();
        println!("  {}", words.join(" "));
    }
}
