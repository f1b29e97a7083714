mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use common::*;
use qsic::arith::{poly_gcd, IntPolynomial, Integer, Rational};
use qsic::classify::{classify, minimal_poly_annihilates, Table};
use qsic::numeric::{numeric_signature, NumericSignature};
use qsic::pencil::{make_pencil, quadric_from_i64s};
use qsic::realroots::isolate_real_roots;
use qsic::segre::check_jump_rules;
use qsic::sequence::{build_signature_sequence, canonicalize};
use qsic::signature::{sign_at_root, signature_at};
use qsic::QsicError;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { pass: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { pass: false, detail: detail.into() }
}

/// Criteria that cannot hold for the data as printed, with the reason.
/// Each entry must still reproduce exactly the deviation described.
const KNOWN_BLOCKED: &[(u8, &str)] = &[(
    1,
    "the listed case-10 pair has (A^-1 B)^2 = -I and meets in four lines (case 31)",
)];

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut own = 0;
    let mut wrong = Vec::new();
    for c in Table::builtin().cases() {
        let (a, b) = &c.representative;
        match classify(a, b) {
            Ok(r) if r.case_id() == c.id => own += 1,
            Ok(r) => wrong.push((c.id, Some(r.case_id()))),
            Err(_) => wrong.push((c.id, None)),
        }
    }
    let elapsed = start.elapsed();

    // The single deviation must be the case-10 row landing on 31, and that
    // pair must really be annihilated by its square-free part.
    let expected_deviation = wrong == vec![(10, Some(31))] && {
        let c10 = Table::builtin().case(10).unwrap();
        let pc = make_pencil(
            &qsic::quadric_from_coeffs(c10.representative.0.clone()).unwrap(),
            &qsic::quadric_from_coeffs(c10.representative.1.clone()).unwrap(),
        )
        .unwrap();
        minimal_poly_annihilates(&pc, &IntPolynomial::from_i64s(&[1, 0, 1]))
    };
    let substitute_ok = {
        let (a, b) = Table::builtin().case(10).unwrap().sample_pair();
        classify(a, b).map(|r| r.case_id()) == Ok(10)
    };
    let detail = format!(
        "{own}/35 listed pairs classify to their own case in {:.0} ms; deviations {wrong:?}; case-10 substitute -> 10: {substitute_ok}",
        elapsed.as_secs_f64() * 1e3
    );
    assert!(elapsed.as_secs_f64() < 1.0, "corpus too slow: {detail}");
    if own == 35 {
        pass(detail)
    } else {
        assert!(expected_deviation && substitute_ok, "unexpected corpus result: {detail}");
        fail(detail)
    }
}

fn criterion_2() -> Outcome {
    let a = quadric_from_i64s([20, 16, 42, 58, -12, 48, 76, -16, -12, 72]).unwrap();
    let b = quadric_from_i64s([28, 2, 56, 14, 16, 80, 56, 24, 20, 72]).unwrap();
    let pc = make_pencil(&a, &b).unwrap();
    let want = [
        IntPolynomial::from_i64s(&[100, -136]),
        IntPolynomial::from_i64s(&[-1048, -3612, 2904]),
        IntPolynomial::from_i64s(&[0, 28416, 22616, -10000]),
        IntPolynomial::from_i64s(&[0, 0, -170528, 170528, -85264]),
    ];
    let coeffs_ok = pc.eigencurve_coefficients() == &want;
    let seq = build_signature_sequence(&pc).unwrap().to_string();
    let id = classify(a.coeffs(), b.coeffs()).unwrap().case_id();
    let detail = format!("eigencurve exact: {coeffs_ok}; sequence {seq}; case {id}");
    if coeffs_ok && seq == "(1,((1,1)),3)" && id == 17 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_3() -> Outcome {
    let r1 = classify(&rat10([1, 1, 1, -1, 0, 0, 0, 0, 0, 0]), &rat10([2, 4, 0, -1, 0, 0, 0, 0, 0, 0])).unwrap();
    let r12 = classify(&rat10([0, 0, 0, 0, 0, 0, 1, 1, 0, 0]), &rat10([0, 0, 1, 0, 0, 0, 0, 0, 2, 0])).unwrap();
    let s1 = r1.sequence.to_string();
    let l1 = r1.listed_sequence().to_string();
    let raw12 = r12.sequence.to_string();
    let l12 = r12.listed_sequence().to_string();
    let detail = format!("case 1 observed {s1} reported {l1}; case 12 observed {raw12} reported {l12}");
    let want1 = "(1,(1,2),2,(1,2),1,(1,2),2,(2,1),3)";
    // The raw case-12 sequence is the complement of the printed one.
    if s1 == want1 && l1 == want1 && l12 == "(2,((((2,1)))),2)" && raw12 == "(2,((((1,2)))),2)" {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_4() -> Outcome {
    let table = Table::builtin();
    let raw_keys: BTreeSet<_> = table
        .cases()
        .iter()
        .flat_map(|c| c.raw_sequences.iter().map(canonicalize))
        .collect();
    let mut classes: BTreeMap<Vec<String>, Vec<u8>> = BTreeMap::new();
    for c in table.cases() {
        classes.entry(c.keys.iter().map(|k| k.to_string()).collect()).or_default().push(c.id);
    }
    let collisions: Vec<Vec<u8>> = classes.values().filter(|ids| ids.len() > 1).cloned().collect();
    let split: Vec<u8> = table.cases().iter().filter(|c| c.keys.len() > 1).map(|c| c.id).collect();
    let detail = format!(
        "{} case-level keys, collisions {collisions:?}; {} keys over all listings (cases with inequivalent listings: {split:?})",
        classes.len(),
        raw_keys.len()
    );
    let mut want = vec![vec![4, 10, 31], vec![26, 35]];
    let mut got = collisions.clone();
    want.sort();
    got.sort();
    if classes.len() == 32 && got == want {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let corpus = corpus_matrices();
    let mut checked = 0;
    let mut failures = Vec::new();
    while checked < 500 {
        let (a, b) = if checked % 2 == 0 {
            let (_, a, b) = &corpus[rng.gen_range(0..corpus.len())];
            (a.clone(), b.clone())
        } else {
            let bound = if rng.gen_bool(0.5) { 2 } else { 6 };
            (random_sym(&mut rng, bound), random_sym(&mut rng, bound))
        };
        let Ok(base) = classify_matrices(&a, &b) else { continue };
        let q = random_unimodular(&mut rng);
        let m = random_basis(&mut rng);
        let (ra, rb) = rebase(m, &a, &b);
        let variants = [
            ("congruence", congruence(&q, &a), congruence(&q, &b)),
            ("basis", ra, rb),
            ("negation", negate(&a), negate(&b)),
            ("swap", b.clone(), a.clone()),
        ];
        for (name, va, vb) in variants {
            match classify_matrices(&va, &vb) {
                Ok(r) if r == base => {}
                other => failures.push(format!("{name}: {:?} -> {:?}", base.0, other.map(|r| r.0))),
            }
        }
        checked += 1;
    }
    let detail = format!("{checked} pencils x 4 transforms, {} failures {:?}", failures.len(), failures.iter().take(3).collect::<Vec<_>>());
    if failures.is_empty() {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a_c1e5);
    let (mut conclusive, mut sig_bad) = (0, 0);
    let mut trials = 0;
    while trials < 1000 {
        let a = random_sym(&mut rng, 9);
        let b = random_sym(&mut rng, 9);
        let Ok(pc) = qsic::pencil::Pencil::from_integer_matrices(&a, &b) else { continue };
        trials += 1;
        let lam = Rational::new(rng.gen_range(-64i64..=64).into(), 8.into());
        let exact = signature_at(&pc, &lam);
        let lam_f = lam.to_f64().unwrap();
        if let NumericSignature::Conclusive(s) = numeric_signature(&pc, lam_f, 1e-9) {
            conclusive += 1;
            if s != exact {
                sig_bad += 1;
            }
        }
    }

    let (mut root_trials, mut root_conclusive, mut root_bad) = (0, 0, 0);
    while root_trials < 1000 {
        let p = random_square_free(&mut rng);
        let roots = isolate_real_roots(&p);
        if roots.is_empty() {
            continue;
        }
        let g = if rng.gen_bool(0.2) {
            // share a factor with p so the sign is sometimes zero
            &random_poly(&mut rng, 1) * &p
        } else {
            let deg = rng.gen_range(1..=4);
            random_poly(&mut rng, deg)
        };
        let root = &roots[rng.gen_range(0..roots.len())];
        root_trials += 1;
        let exact = sign_at_root(&g, root).unwrap();
        let oracle = match root.exact_value() {
            Some(r) => Some(g.sign_at(r)),
            None => bisection_sign_oracle(&p, &g, root.lo(), root.hi()).or_else(|| {
                let h = poly_gcd(&p, &g);
                (h.degree().unwrap_or(0) > 0 && h.sign_at(root.lo()) != h.sign_at(root.hi())).then_some(0)
            }),
        };
        if let Some(o) = oracle {
            root_conclusive += 1;
            if o != exact {
                root_bad += 1;
            }
        }
    }
    let detail = format!(
        "signature: {conclusive}/1000 conclusive, {sig_bad} mismatches; sign_at_root: {root_conclusive}/1000 conclusive, {root_bad} mismatches"
    );
    if sig_bad == 0 && root_bad == 0 && conclusive > 900 && root_conclusive > 900 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn random_poly<R: Rng>(rng: &mut R, deg: usize) -> IntPolynomial {
    loop {
        let c: Vec<Integer> = (0..=deg).map(|_| Integer::from(rng.gen_range(-20i64..=20))).collect();
        let p = IntPolynomial::new(c);
        if p.degree() == Some(deg) {
            return p;
        }
    }
}

fn random_square_free<R: Rng>(rng: &mut R) -> IntPolynomial {
    loop {
        let deg = rng.gen_range(1..=4);
        let p = random_poly(rng, deg);
        let d = p.derivative();
        if poly_gcd(&p, &d).degree() == Some(0) {
            return p;
        }
    }
}

fn criterion_7() -> Outcome {
    let mut ok = 0;
    let mut bad = Vec::new();
    for c in Table::builtin().cases() {
        let (a, b) = &c.representative;
        let pc = make_pencil(
            &qsic::quadric_from_coeffs(a.clone()).unwrap(),
            &qsic::quadric_from_coeffs(b.clone()).unwrap(),
        )
        .unwrap();
        let seq = build_signature_sequence(&pc).unwrap();
        match check_jump_rules(&c.segre, &seq) {
            Ok(()) => ok += 1,
            Err(e) => bad.push((c.id, e)),
        }
    }
    let detail = format!("{ok}/35 consistent {bad:?}");
    if ok == 35 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_8() -> Outcome {
    let cones = classify(&rat10([1, 1, -1, 0, 0, 0, 0, 0, 0, 0]), &rat10([1, 2, -1, 0, 0, 0, 0, 0, 0, 0]));
    let prop = classify(&rat10([1, 1, 1, -1, 0, 0, 0, 0, 0, 0]), &rat10([3, 3, 3, -3, 0, 0, 0, 0, 0, 0]));
    let detail = format!("cones: {:?}; proportional: {:?}", cones.as_ref().err(), prop.as_ref().err());
    if matches!(cones, Err(QsicError::DegeneratePencil)) && matches!(prop, Err(QsicError::ProportionalForms)) {
        pass(detail)
    } else {
        fail(detail)
    }
}

#[test]
fn acceptance() {
    let criteria: [(u8, &str, fn() -> Outcome); 8] = [
        (1, "golden corpus", criterion_1),
        (2, "worked example", criterion_2),
        (3, "sequence reproduction", criterion_3),
        (4, "distinct keys", criterion_4),
        (5, "invariance", criterion_5),
        (6, "oracle equivalence", criterion_6),
        (7, "jump rules", criterion_7),
        (8, "error taxonomy", criterion_8),
    ];
    let mut unexpected = Vec::new();
    for (n, name, run) in criteria {
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {n} ({name}): {status} - {}", o.detail);
        if !o.pass {
            match KNOWN_BLOCKED.iter().find(|(k, _)| *k == n) {
                Some((_, why)) => println!("    blocked: {why}"),
                None => unexpected.push(n),
            }
        }
    }
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
}
