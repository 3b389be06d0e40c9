//! Expand a Hermitian self-orthogonal code into a symplectic stabilizer
//! check matrix over GF(q) and verify its defining properties.

use std::sync::Arc;

use agq::agcode::AgCode;
use agq::curve::{CurveKind, CurveSpec};
use agq::quantum;

fn main() {
    let curve = Arc::new(CurveSpec::new(CurveKind::A, 1).unwrap());
    let ag = AgCode::build(curve, 2).unwrap();
    let mat = quantum::expand_to_symplectic(&ag.code).unwrap();
    let field = ag.code.field();

    println!(
        "C_2 on curve A, q=2: {}x{} stabilizer matrix over GF({}), gamma={}",
        mat.rows.len(),
        2 * mat.n,
        field.q(),
        mat.gamma
    );
    for row in &mat.rows {
        let (x, z) = row.split_at(mat.n);
        let fmt = |half: &[agq::Elem]| {
            half.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
        };
        println!("  ({} | {})", fmt(x), fmt(z));
    }
    println!(
        "rank = {} (expect {}), symplectically orthogonal: {}",
        mat.rank(field),
        2 * ag.k(),
        mat.all_pairs_orthogonal(field)
    );
}
