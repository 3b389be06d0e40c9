//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::sync::Arc;

use agq::agcode::{self, AgCode};
use agq::curve::{CurveKind, CurveSpec};
use agq::field::Elem;
use agq::lincode::LinearCode;
use agq::quantum::{self, DeriveOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn curve(kind: CurveKind, e: u32) -> Arc<CurveSpec> {
    Arc::new(CurveSpec::new(kind, e).unwrap())
}

fn report(criterion: &str, passed: bool) {
    println!(
        "acceptance {criterion}: {}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "acceptance {criterion} failed");
}

#[test]
fn criterion_1_duality_lemmas() {
    let mut ok = true;
    for (kind, e) in [
        (CurveKind::A, 1),
        (CurveKind::A, 2),
        (CurveKind::A, 3),
        (CurveKind::B, 1),
        (CurveKind::B, 3),
    ] {
        let c = curve(kind, e);
        for m in agcode::constructible_range(&c) {
            if !agcode::verify_duality(&c, m).unwrap() {
                eprintln!("duality failed: {kind:?} q={} m={m}", c.q());
                ok = false;
            }
        }
    }
    report("1 (duality for every constructible m)", ok);
}

#[test]
fn criterion_2_theorem_soundness() {
    let mut ok = true;
    for (kind, e) in [
        (CurveKind::A, 1),
        (CurveKind::A, 2),
        (CurveKind::A, 3),
        (CurveKind::B, 1),
        (CurveKind::B, 3),
    ] {
        let c = curve(kind, e);
        let threshold = agcode::hermitian_threshold(&c);
        for (m, so) in agcode::scan_hermitian(&c, threshold).unwrap() {
            if !so {
                eprintln!("Gram test failed inside threshold: {kind:?} q={} m={m}", c.q());
                ok = false;
            }
        }
    }
    report("2 (Hermitian Gram tests up to the thresholds)", ok);
}

#[test]
fn criterion_3_example_1() {
    let c = curve(CurveKind::A, 1);
    let ag = AgCode::build(c.clone(), 2).unwrap();
    let rec = quantum::derive_quantum(&ag, DeriveOptions::default()).unwrap();
    let mut ok = (rec.n, rec.k_q, rec.d_lower) == (8, 4, 2);
    // exactness by exhausting the [8,6] dual over GF(4): 4096 codewords
    ok &= rec.d_exact == Some(2);
    // the published [[8,2,3]] row: m=3 fails the direct Gram oracle
    let scan = agcode::scan_hermitian(&c, 3).unwrap();
    ok &= !scan[3].1;
    report("3 (example 1: [[8,4,2]] exact, [[8,2,3]] not reproduced)", ok);
}

#[test]
fn criterion_4_example_2() {
    let c = curve(CurveKind::A, 2);
    let mut ok = true;
    for (m, k_q, d) in [(3, 28, 1), (4, 26, 2), (5, 24, 3), (6, 22, 4)] {
        let ag = AgCode::build(c.clone(), m).unwrap();
        let rec = quantum::derive_quantum(&ag, DeriveOptions::default()).unwrap();
        if (rec.n, rec.k_q, rec.d_lower) != (32, k_q, d) {
            eprintln!("m={m}: got [[{},{},{}]]", rec.n, rec.k_q, rec.d_lower);
            ok = false;
        }
        if m == 6 {
            // certified lower 4 and weight-4 word found establish d_exact = 4
            let dual = ag.code.dual();
            ok &= dual.min_distance_lower_isd(3) == 4;
            ok &= dual.min_weight_upper(100, 0).finite() == Some(4);
            ok &= rec.d_exact == Some(4);
        }
    }
    report("4 (example 2: [[32,28,1]]..[[32,22,4]], d_exact=4 at m=6)", ok);
}

#[test]
fn criterion_5_example_4() {
    let c = curve(CurveKind::B, 3);
    let mut ok = true;
    for m in 17..=20usize {
        let ag = AgCode::build(c.clone(), m).unwrap();
        let rec = quantum::derive_quantum(&ag, DeriveOptions::default()).unwrap();
        let expected = (176, 188 - 2 * m, m - 12);
        if (rec.n, rec.k_q, rec.d_lower) != expected {
            eprintln!("m={m}: got [[{},{},{}]]", rec.n, rec.k_q, rec.d_lower);
            ok = false;
        }
        ok &= rec.in_theorem_range;
    }
    report("5 (example 4: [[176,154,5]]..[[176,148,8]] at bound level)", ok);
}

#[test]
fn criterion_6_stabilizer_validity() {
    let mut ok = true;
    let sources: Vec<(CurveKind, u32, usize)> = std::iter::once((CurveKind::A, 1, 2))
        .chain((3..=6).map(|m| (CurveKind::A, 2, m)))
        .chain((17..=20).map(|m| (CurveKind::B, 3, m)))
        .collect();
    for (kind, e, m) in sources {
        let c = curve(kind, e);
        let ag = AgCode::build(c, m).unwrap();
        let mat = quantum::expand_to_symplectic(&ag.code).unwrap();
        let field = ag.code.field();
        if mat.rank(field) != 2 * ag.k() || !mat.all_pairs_orthogonal(field) {
            eprintln!("stabilizer contract failed: {kind:?} e={e} m={m}");
            ok = false;
        }
    }
    report("6 (stabilizer rank 2k and symplectic orthogonality)", ok);
}

#[test]
fn criterion_7_singleton_identity() {
    // with d at the designed value, k_Q + 2d = n + 2 - q across the full
    // theorem range on curve A
    let mut ok = true;
    for q in [2usize, 4, 8] {
        for m in q - 1..=2 * q - 2 {
            let p = quantum::qparams_curve_a(q, m);
            if p.k_q + 2 * p.d_lower != p.n as i64 + 2 - q as i64 {
                eprintln!("identity failed at q={q} m={m}");
                ok = false;
            }
        }
    }
    report("7 (quantum Singleton defect equals q on curve A)", ok);
}

#[test]
fn criterion_8_property_suites() {
    let mut ok = true;

    // Riemann-Roch dimension k = m-g+1 for all 2g-2 < m < n
    for (kind, e) in [
        (CurveKind::A, 1),
        (CurveKind::A, 2),
        (CurveKind::A, 3),
        (CurveKind::B, 1),
        (CurveKind::B, 3),
    ] {
        let c = curve(kind, e);
        let g = c.genus();
        for m in 2 * g - 1..c.n() {
            if m > 2 * g - 2 && c.rr_basis(m).monomials.len() != m - g + 1 {
                eprintln!("dimension formula failed: {kind:?} q={} m={m}", c.q());
                ok = false;
            }
        }
        // point counts by enumeration
        let q = c.q();
        let expected = match kind {
            CurveKind::A => 2 * q * q,
            CurveKind::B => 3 * q * q - 2 * q,
        };
        if c.n() != expected {
            eprintln!("point count failed: {kind:?} q={q}");
            ok = false;
        }
    }

    // nesting and Frobenius-degree laws on q in {2, 4}
    for e in [1u32, 2] {
        let c = curve(CurveKind::A, e);
        let q = c.q();
        for m in 0..c.n() - 1 {
            let cm = AgCode::build(c.clone(), m).unwrap();
            let next = AgCode::build(c.clone(), m + 1).unwrap();
            if !cm.code.subset(&next.code).unwrap() {
                eprintln!("nesting failed: q={q} m={m}");
                ok = false;
            }
            if m * q < c.n() {
                let cmq = AgCode::build(c.clone(), m * q).unwrap();
                if !cm.code.frobenius_code().subset(&cmq.code).unwrap() {
                    eprintln!("Frobenius-degree law failed: q={q} m={m}");
                    ok = false;
                }
            }
        }
    }

    // dual involution and Hermitian-equivalence laws on 200 random codes
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for trial in 0..200 {
        let e = if trial % 2 == 0 { 1 } else { 2 };
        let field = Arc::new(agq::FieldCtx::new(e).unwrap());
        let n = rng.gen_range(1..=8);
        let rows = rng.gen_range(0..=4usize);
        let rows: Vec<Vec<Elem>> = (0..rows)
            .map(|_| (0..n).map(|_| Elem(rng.gen_range(0..field.q2()))).collect())
            .collect();
        let c = LinearCode::from_rows(field, n, rows);
        let d = c.dual();
        if c.k() + d.k() != n || !d.dual().equal(&c).unwrap() {
            eprintln!("dual involution failed on trial {trial}");
            ok = false;
        }
        let gram = c.is_hermitian_self_orthogonal();
        let via_frob = c.frobenius_code().subset(&d).unwrap();
        if gram != via_frob {
            eprintln!("Hermitian equivalence failed on trial {trial}");
            ok = false;
        }
    }

    report("8 (dimension, point-count, nesting, dual-law property suites)", ok);
}
