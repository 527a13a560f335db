//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line and then asserts it.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewcodes::codes::distance::{hamming_weight, sweep_size};
use skewcodes::codes::{min_distance, DistanceMethod, DEFAULT_DISTANCE_BUDGET};
use skewcodes::decomp::{assemble, extract_components, quadruple_from_spans, verify_quadruple, ComponentCode, ComponentQuadruple};
use skewcodes::examples::{
    example_f25, example_f49, example_f9, example_n7_constant, example_n7_generator, example_n7, f25, f27, f49, f9,
};
use skewcodes::gray::{check_commutation, gray_image_code, Identity};
use skewcodes::skewpoly::DEFAULT_SEARCH_BUDGET;
use skewcodes::{Error, Fe, GaloisField, ModulusSpec, RElem, RingR, ShiftKind, SkewCode, SkewPoly, SkewPolyRing, Subspace};

const LIMIT_1: Duration = Duration::from_secs(10);
const LIMIT_2: Duration = Duration::from_secs(60);
const LIMIT_3: Duration = Duration::from_secs(1);
const LIMIT_4: Duration = Duration::from_secs(10);
const LIMIT_5: Duration = Duration::from_secs(60);
const LIMIT_8: Duration = Duration::from_secs(10);
const TRIALS: usize = 1000;
const QUADRUPLES: usize = 50;
const SEED: u64 = 0x5eed;

fn verdict(id: &str, ok: bool, detail: &str) {
    println!("{} criterion {id}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id}: {detail}");
}

fn el(f: &GaloisField, digits: &[u64]) -> Fe {
    f.from_digits(digits).unwrap()
}

#[test]
fn criterion_1_f25_gray_parameters() {
    let start = Instant::now();
    let code = example_f25().unwrap();
    let g = gray_image_code(&code);
    let d = min_distance(code.field(), g.length, &g.rows, DEFAULT_DISTANCE_BUDGET).unwrap();
    let span = Subspace::span(code.field(), g.length, &g.rows);
    let witness_ok = d
        .witness
        .as_ref()
        .is_some_and(|w| hamming_weight(w) == 2 && span.contains(code.field(), w));
    let elapsed = start.elapsed();
    let ok = g.length == 16
        && span.dim() == 12
        && d.exact == Some(2)
        && d.method == DistanceMethod::WeightSweep
        && d.candidates == 384
        && d.candidates == sweep_size(16, 25, 1)
        && witness_ok
        && elapsed < LIMIT_1;
    verdict(
        "1",
        ok,
        &format!(
            "[{}, {}, {:?}], weight-1 candidates {}, witness ok {witness_ok}, {:.2?}",
            g.length,
            span.dim(),
            d.exact,
            d.candidates,
            elapsed
        ),
    );
}

#[test]
fn criterion_2_f9_gray_parameters() {
    let start = Instant::now();
    let code = example_f9().unwrap();
    let g = gray_image_code(&code);
    let d = min_distance(code.field(), g.length, &g.rows, DEFAULT_DISTANCE_BUDGET).unwrap();
    let span = Subspace::span(code.field(), g.length, &g.rows);
    let witness_ok = d
        .witness
        .as_ref()
        .is_some_and(|w| hamming_weight(w) == 4 && span.contains(code.field(), w));
    let elapsed = start.elapsed();
    let ok = g.length == 24
        && span.dim() == 9
        && d.exact == Some(4)
        && d.candidates == sweep_size(24, 9, 3)
        && witness_ok
        && elapsed < LIMIT_2;
    verdict(
        "2",
        ok,
        &format!(
            "[{}, {}, {:?}], words of weight 1..3 swept {}, witness ok {witness_ok}, {:.2?}",
            g.length,
            span.dim(),
            d.exact,
            d.candidates,
            elapsed
        ),
    );
}

#[test]
fn criterion_3_factorizations() {
    let start = Instant::now();
    let mut results = Vec::new();

    let f = f25();
    let sp = SkewPolyRing::new(f.clone());
    let one = f.from_int(1);
    let lin = |c: Fe| SkewPoly::new(vec![c, one]);
    let (x2, x3, xa, xa1) = (lin(f.from_int(2)), lin(f.from_int(3)), lin(f.root()), lin(el(&f, &[1, 1])));
    let target = sp.from_ints(&[-1, 0, 0, 0, 1]);
    results.push(sp.mul_all(&[x2.clone(), x3.clone(), xa.clone(), xa1.clone()]) == target);
    results.push(sp.mul_all(&[x2, x3, xa1, xa]) == target);

    let f = f9();
    let sp = SkewPolyRing::new(f.clone());
    let (z, one, two, a) = (Fe::default(), f.from_int(1), f.from_int(2), f.root());
    let target = sp.from_ints(&[-1, 0, 0, 0, 0, 0, 1]);
    let p1 = SkewPoly::new(vec![two, one, el(&f, &[1, 2]), one]);
    let p2 = SkewPoly::new(vec![one, one, el(&f, &[2, 2]), one]);
    results.push(sp.mul(&p1, &p2) == target);
    let q1 = SkewPoly::new(vec![two, a, z, el(&f, &[0, 2]), one]);
    let q2 = SkewPoly::new(vec![one, a, one]);
    results.push(sp.mul(&q1, &q2) == target);

    let sp = SkewPolyRing::new(f49());
    results.push(sp.mul(&sp.from_ints(&[1, 3, 1]), &sp.from_ints(&[1, 4, 1])) == sp.from_ints(&[1, 0, 0, 0, 1]));

    let elapsed = start.elapsed();
    let ok = results.iter().all(|&b| b) && elapsed < LIMIT_3;
    verdict("3", ok, &format!("identities {results:?}, {elapsed:.2?}"));
}

#[test]
fn criterion_4_operator_identities() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut runs = 0;
    for field in [f9(), f25()] {
        let rr = RingR::new(field.clone());
        for n in [3, 4, 6] {
            for alpha in [rr.one(), rr.from_int(-1), rr.from_ints(1, 0, 0, -2)] {
                for which in [Identity::SigmaPi4, Identity::TauOmega4] {
                    let seed = SEED ^ (runs as u64);
                    let r = check_commutation(which, &field, n, alpha, TRIALS, seed).unwrap();
                    runs += 1;
                    if !r.pass {
                        failures.push(format!("{} q={} n={n} α={}", which.name(), field.order(), rr.format(alpha)));
                    }
                }
            }
        }
    }
    let f = f27();
    let rr = RingR::new(f.clone());
    let r = check_commutation(Identity::PermutedSigma4, &f, 5, rr.one(), TRIALS, SEED).unwrap();
    runs += 1;
    if !r.pass {
        failures.push("permuted_sigma4 q=27".into());
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < LIMIT_4;
    verdict(
        "4",
        ok,
        &format!("{runs} identity runs × {TRIALS} trials, failures {failures:?}, {elapsed:.2?}"),
    );
}

/// Monic right divisors of degree ≤ 2, together with `1` and `x^n - s`.
fn divisor_pool(field: &GaloisField, n: usize, s: Fe) -> Vec<SkewPoly<Fe>> {
    let sp = SkewPolyRing::new(field.clone());
    let m = ModulusSpec::new(n, s);
    let mut pool: Vec<SkewPoly<Fe>> = (0..=2.min(n))
        .flat_map(|d| sp.right_divisor_search(&m, d, DEFAULT_SEARCH_BUDGET).unwrap())
        .collect();
    pool.push(sp.modulus_poly(&m));
    pool.dedup();
    pool
}

fn corrupt(field: &GaloisField, n: usize, s: Fe, g: &SkewPoly<Fe>) -> SkewPoly<Fe> {
    let sp = SkewPolyRing::new(field.clone());
    let m = ModulusSpec::new(n, s);
    let base = if g.degree() == Some(0) { sp.x() } else { g.clone() };
    for c in field.elements().skip(1) {
        let mut coeffs = base.coeffs().to_vec();
        coeffs[0] = field.add(coeffs[0], c);
        let cand = SkewPoly::new(coeffs);
        if !sp.is_right_divisor(&cand, &m).unwrap() {
            return cand;
        }
    }
    unreachable!("some constant term breaks divisibility")
}

#[test]
fn criterion_5_decomposition() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let fields = [f9(), f25()];
    let mut problems = Vec::new();
    for trial in 0..QUADRUPLES {
        let field = &fields[rng.gen_range(0..2)];
        let n = rng.gen_range(1..=6);
        let signs: [i64; 4] = std::array::from_fn(|_| if rng.gen_bool(0.5) { 1 } else { -1 });
        let components: [ComponentCode; 4] = std::array::from_fn(|i| {
            let s = field.from_int(signs[i]);
            let pool = divisor_pool(field, n, s);
            ComponentCode { n, constant: s, generator: pool[rng.gen_range(0..pool.len())].clone() }
        });
        let quad = ComponentQuadruple::new(field.clone(), components).unwrap();
        let code = assemble(&quad).unwrap();

        let spans = extract_components(field, n, &code.basis()).unwrap();
        let back = assemble(&quadruple_from_spans(field, n, code.alpha(), &spans)).unwrap();
        let same = back.cardinality() == code.cardinality()
            && back.cardinality() == quad.cardinality()
            && code.basis().iter().all(|w| back.contains(w).unwrap())
            && back.basis().iter().all(|w| code.contains(w).unwrap());
        let report = verify_quadruple(&quad).unwrap();
        let closed = report.closed && report.consistent && code.is_closed_under(&ShiftKind::Tau(code.alpha())).unwrap();

        let target = rng.gen_range(0..4);
        let mut bad = quad.clone();
        let c = &quad.components()[target];
        bad.components_mut()[target].generator = corrupt(field, n, c.constant, &c.generator);
        let bad_report = verify_quadruple(&bad).unwrap();
        let v = &bad_report.components[target];
        let detected = !v.divides
            && (!v.closed || v.degree == Some(n))
            && bad_report.consistent
            && matches!(assemble(&bad), Err(Error::NotADivisor(i)) if i == target + 1);

        if !(same && closed && detected) {
            problems.push(format!("trial {trial}: q={} n={n} round-trip {same} closed {closed} detected {detected}", field.order()));
        }
    }
    let elapsed = start.elapsed();
    let ok = problems.is_empty() && elapsed < LIMIT_5;
    verdict("5", ok, &format!("{QUADRUPLES} quadruples, problems {problems:?}, {elapsed:.2?}"));
}

fn r_dot(ring: &RingR, x: &[RElem], y: &[RElem]) -> RElem {
    x.iter().zip(y).fold(RElem::default(), |acc, (&a, &b)| ring.add(acc, ring.mul(a, b)))
}

#[test]
fn criterion_6_dual_contract() {
    let mut notes = Vec::new();
    let mut ok = true;
    for (name, code) in [("f25", example_f25()), ("f9", example_f9()), ("f49", example_f49())] {
        let code = code.unwrap();
        let dual = code.dual().unwrap();
        let q = code.field().order();
        let product = code.cardinality() * dual.cardinality() == BigUint::from(q).pow((4 * code.n()) as u32);
        let orthogonal = code
            .basis()
            .iter()
            .all(|x| dual.basis().iter().all(|y| r_dot(code.ring(), x, y) == RElem::default()));
        ok &= product && orthogonal;
        notes.push(format!("{name}: product {product} orthogonal {orthogonal}"));
    }
    let n7 = example_n7().unwrap();
    notes.push(format!("n7: dual {:?} (constant not a unit)", n7.dual().err()));

    // ĥ against the component-wise classical dual, every divisor for n ≤ 4 over F_9
    let f = f9();
    let rr = RingR::new(f.clone());
    let sp = SkewPolyRing::new(f.clone());
    let mut checked = 0;
    let mut mismatches = 0;
    for n in 1..=4 {
        for s in [1, -1] {
            let m = ModulusSpec::new(n, f.from_int(s));
            let divisors: Vec<_> = (0..=n)
                .flat_map(|d| sp.right_divisor_search(&m, d, DEFAULT_SEARCH_BUDGET).unwrap())
                .collect();
            for g in divisors {
                let code =
                    SkewCode::build(f.clone(), n, rr.from_int(s), [g.clone(), g.clone(), g.clone(), g.clone()]).unwrap();
                let dual = code.dual().unwrap();
                for i in 0..4 {
                    checked += 1;
                    if !dual.component_span(i).same_as(&f, &code.component_span(i).dual(&f)) {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    ok &= mismatches == 0 && checked > 0;
    notes.push(format!("ĥ vs oracle: {checked} components, {mismatches} mismatches"));
    verdict("6", ok, &notes.join("; "));
}

#[test]
fn criterion_7_idempotent() {
    let f = f9();
    let sp = SkewPolyRing::new(f.clone());
    let m = ModulusSpec::new(5, f.from_int(1));
    let g = sp.from_ints(&[-1, 1]);
    let e = sp.idempotent_generator(&g, &m).unwrap();
    let idempotent = sp.mul_mod(&e, &e, &m) == e;

    let span_e = sp.module_span(&e, &m);
    let span_g = sp.module_span(&g, &m);
    let card = span_e.dim() == span_g.dim();
    let mutual = sp.is_right_divisor(&g, &m).unwrap()
        && sp.right_divmod(&e, &g).unwrap().1.is_zero()
        && sp.right_divmod(&sp.mul_mod(&e, &g, &m), &g).unwrap().1.is_zero()
        && span_e.contains(&f, &g.to_vector(5).unwrap());
    let dual_e = sp.dual_idempotent(&e, &m).unwrap();
    let dual_m = ModulusSpec::new(5, f.inv(f.from_int(1)).unwrap());
    let dual_ok = sp.module_span(&dual_e, &dual_m).same_as(&f, &span_g.dual(&f));
    let ok = idempotent && card && mutual && dual_ok;
    verdict(
        "7",
        ok,
        &format!("e = {:?}, e*e = e {idempotent}, |⟨e⟩| = |⟨f⟩| {card}, mutual membership {mutual}, dual idempotent {dual_ok}",
            e.coeffs().iter().map(|c| f.format(*c)).collect::<Vec<_>>()),
    );
}

#[test]
fn criterion_8a_f49_audit() {
    let start = Instant::now();
    let code = example_f49().unwrap();
    let tau = code.is_closed_under(&ShiftKind::Tau(code.alpha())).unwrap();
    let l = 2; // gcd(4, k = 2)
    let qt = code.is_closed_under(&ShiftKind::QuasiTwist { l, alpha: code.alpha() }).unwrap();
    let unit = code.ring().is_unit(code.alpha());
    let sd = code.self_dual_report();
    let elapsed = start.elapsed();
    let discrepancy = if sd.self_dual {
        String::new()
    } else {
        format!(
            "; discrepancy: claimed self-dual, computed not self-dual (component dims {:?} vs n/2 = {}, self-orthogonal {:?})",
            sd.component_dims,
            code.n() / 2,
            sd.components_self_orthogonal
        )
    };
    let ok = tau && qt && unit && elapsed < LIMIT_8;
    verdict(
        "8a",
        ok,
        &format!("τ closure {tau}, quasi-twist index {l} {qt}, unit {unit}, self-dual {}{discrepancy}, {elapsed:.2?}", sd.self_dual),
    );
}

#[test]
fn criterion_8b_n7_audit() {
    let start = Instant::now();
    let rr = RingR::new(f9());
    let alpha = example_n7_constant();
    let f = example_n7_generator();
    let sp = SkewPolyRing::new(rr.clone());
    let m = ModulusSpec::new(7, alpha);
    let divides = sp.is_right_divisor(&f, &m).unwrap();
    let unit = rr.unit_report(alpha);
    let code = example_n7().unwrap();
    let ret1 = code.is_closed_under(&ShiftKind::Constacyclic(alpha)).unwrap();
    let remainder = sp.right_divmod(&sp.modulus_poly(&m), &f).unwrap().1;
    let elapsed = start.elapsed();
    let ok = divides && !unit.is_unit && elapsed < LIMIT_8;
    verdict(
        "8b",
        ok,
        &format!(
            "right divisor {divides} (remainder degree {:?}; CRT components of α {:?}, component 4 of x^7 - α is x^7), \
             non-unit reported {}, untwisted constacyclic closure of the generated code {ret1}, {elapsed:.2?}",
            remainder.degree(),
            unit.components.iter().map(|c| c.value()).collect::<Vec<_>>(),
            !unit.is_unit
        ),
    );
}
