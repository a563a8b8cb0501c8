//! Acceptance suite: the worked-example regressions and desk-scale verification
//! gates, one test per criterion, each printing a single pass/fail line.
//! Run with `cargo test -p rigidroots-cli --test acceptance -- --nocapture`.

use std::collections::HashSet;
use std::process::Command;
use std::time::Instant;

use rigidroots_core::coxeter::{reflection_root_symbolic, CoxeterPresentation, Word};
use rigidroots_core::exact_algebra::{
    euler_phi, eval_poly_interval, minimal_polynomial, two_cos_pi_over, AlgebraicElement,
    SymbolicPolynomial,
};
use rigidroots_core::lattice_words::crossing_word;
use rigidroots_core::rank2_roots::{CartanData, LatticeVector};
use rigidroots_core::reduction::reduce;
use rigidroots_core::verify::{run_check, run_lemmas};

fn gate(number: u32, description: &str, failures: Vec<String>) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("acceptance criterion {number} ({description}): {verdict}");
    assert!(failures.is_empty(), "criterion {number}: {failures:#?}");
}

fn check<T: PartialEq + std::fmt::Debug>(
    failures: &mut Vec<String>,
    label: &str,
    actual: T,
    expected: T,
) {
    if actual != expected {
        failures.push(format!("{label}: got {actual:?}, want {expected:?}"));
    }
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rigidroots"))
}

fn run_cli(args: &[&str]) -> (String, i32) {
    let out = bin().args(args).output().expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

fn v(a: i64, b: i64) -> LatticeVector {
    LatticeVector::new(a, b)
}

fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

#[test]
fn criterion_1_reduction_regression() {
    let mut failures = Vec::new();
    let started = Instant::now();

    let (out, code) = run_cli(&["reduce", "-m", "3", "487", "186"]);
    check(&mut failures, "reduce 487 186 exit", code, 0);
    check(
        &mut failures,
        "reduce 487 186 result line",
        out.contains("result [55,21]") && out.contains("1 steps"),
        true,
    );

    let (out, code) = run_cli(&["reduce", "-m", "3", "1789", "683"]);
    check(&mut failures, "reduce 1789 683 exit", code, 0);
    for stop in ["[1129,431]", "[469,179]", "result [28,11]"] {
        check(&mut failures, stop, out.contains(stop), true);
    }
    check(&mut failures, "reduce 1789 683 step count", out.contains("3 steps"), true);

    let (out, code) = run_cli(&["root", "-m", "3", "55", "21"]);
    check(&mut failures, "root 55 21 exit", code, 0);
    check(&mut failures, "root 55 21", out.trim().to_string(), "6, 8, 17".to_string());

    let (out, code) = run_cli(&["root", "-m", "3", "28", "11"]);
    check(&mut failures, "root 28 11 exit", code, 0);
    check(&mut failures, "root 28 11", out.trim().to_string(), "55, 55, 144".to_string());

    let elapsed = started.elapsed();
    check(
        &mut failures,
        "runtime under a second",
        elapsed.as_secs_f64() < 1.0,
        true,
    );
    gate(1, "reduction worked example", failures);
}

#[test]
fn criterion_2_section2_regressions() {
    let mut failures = Vec::new();

    // crossing words, through the CLI surface
    for (args, expected) in [
        (["word", "-m", "3", "5", "3"], "2321232321232"),
        (["word", "-m", "3", "4", "1"], "2323232"),
        (["word", "-m", "2", "2", "1"], "232"),
        (["word", "-m", "3", "1", "1"], "2"),
    ] {
        let (out, code) = run_cli(&args);
        check(&mut failures, &format!("{args:?} exit"), code, 0);
        check(&mut failures, &format!("{args:?}"), out.trim().to_string(), expected.to_string());
    }

    // m=3 identity s([30,11]) = s([3,2]) with beta = a1 + 3a2 + 3a3
    let p3 = CoxeterPresentation::w_m(3).unwrap();
    let w3011 = crossing_word(v(30, 11)).unwrap();
    let w32 = crossing_word(v(3, 2)).unwrap();
    check(
        &mut failures,
        "s([30,11]) = s([3,2])",
        p3.eval(&w3011).unwrap() == p3.eval(&w32).unwrap(),
        true,
    );
    check(
        &mut failures,
        "beta([30,11])",
        p3.reflection_root(&w3011).unwrap().to_string(),
        "1, 3, 3".to_string(),
    );

    // m=4 identity s([5,2]) = s([13,2]) with beta = a1 + 3x a2 + 6 a3
    let p4 = CoxeterPresentation::w_m(4).unwrap();
    let w52 = crossing_word(v(5, 2)).unwrap();
    let w132 = crossing_word(v(13, 2)).unwrap();
    check(
        &mut failures,
        "s([5,2]) = s([13,2])",
        p4.eval(&w52).unwrap() == p4.eval(&w132).unwrap(),
        true,
    );
    let beta = p4.reflection_root(&w52).unwrap();
    let x4 = AlgebraicElement::generator(4).unwrap();
    let expected = vec![
        AlgebraicElement::one(4),
        &AlgebraicElement::from_integer(4, 3) * &x4,
        AlgebraicElement::from_integer(4, 6),
    ];
    check(&mut failures, "beta([5,2]) exact", beta.coords().to_vec(), expected);
    let (out, code) = run_cli(&["root", "-m", "4", "5", "2"]);
    check(&mut failures, "root -m 4 5 2 exit", code, 0);
    check(&mut failures, "root -m 4 5 2", out.trim().to_string(), "1, 3x, 6".to_string());

    // symbolic beta([5,3]) equals the quoted Z[x] triple
    let symbolic = reflection_root_symbolic(&word_5_3()).unwrap();
    let quoted = [
        vec![0i64, 1, 0, 1],            // x^3 + x
        vec![-1, 0, 2, 0, 3, 0, 1],     // x^6 + 3x^4 + 2x^2 - 1
        vec![0, 2, 0, 3, 0, 1],         // x^5 + 3x^3 + 2x
    ];
    for (i, coeffs) in quoted.iter().enumerate() {
        let expected = SymbolicPolynomial::from_coeffs(
            coeffs.iter().map(|&c| num_bigint::BigInt::from(c)).collect(),
        );
        check(&mut failures, &format!("symbolic beta coord {i}"), symbolic[i].clone(), expected);
    }
    let (out, code) = run_cli(&["root", "--symbolic", "5", "3"]);
    check(&mut failures, "root --symbolic exit", code, 0);
    check(
        &mut failures,
        "root --symbolic 5 3",
        out.trim().to_string(),
        "x^3 + x, x^6 + 3x^4 + 2x^2 - 1, x^5 + 3x^3 + 2x".to_string(),
    );

    gate(2, "crossing words and quoted roots", failures);
}

fn word_5_3() -> Word {
    crossing_word(v(5, 3)).unwrap()
}

#[test]
fn criterion_3_all_infinity_root() {
    let mut failures = Vec::new();
    let p = CoxeterPresentation::all_infinity(3).unwrap();
    let word = Word::concat(&[
        &w("321").repeat(4),
        &crossing_word(v(5, 3)).unwrap(),
        &w("123").repeat(4),
    ]);
    check(&mut failures, "word is a reflection", word.is_reflection_word(), true);
    let root = p.reflection_root(&word).unwrap();
    check(
        &mut failures,
        "spiral-conjugated root",
        root.to_string(),
        "1662490, 4352663, 11395212".to_string(),
    );
    gate(3, "all-infinite-label rigid root", failures);
}

#[test]
fn criterion_4_m2_bijection() {
    let mut failures = Vec::new();
    let p = CoxeterPresentation::w_m(2).unwrap();

    // expected image: s2 and the two alternating families up to n = 29
    // (results of reduction stay inside the coordinate box, so bound 30
    // reaches exactly [n, n+1] and [n+1, n] for n <= 29)
    let mut expected: HashSet<String> = HashSet::new();
    expected.insert(p.eval(&w("2")).unwrap().canonical_key());
    for n in 1..=29usize {
        let s1_family = Word::concat(&[&w("1"), &w("31").repeat(n - 1)]);
        let s3_family = Word::concat(&[&w("3"), &w("13").repeat(n - 1)]);
        expected.insert(p.eval(&s1_family).unwrap().canonical_key());
        expected.insert(p.eval(&s3_family).unwrap().canonical_key());
    }
    check(&mut failures, "expected image size", expected.len(), 59);

    let mut actual: HashSet<String> = HashSet::new();
    for a in 1..=30i64 {
        for b in 1..=30i64 {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            let mat = p.eval(&crossing_word(v(a, b)).unwrap()).unwrap();
            actual.insert(mat.canonical_key());
        }
    }
    check(&mut failures, "image of s(.) over P+ <= 30", actual == expected, true);

    // beta families: beta([n,n+1]) = n a1 + (n-1) a3,
    // beta([n+1,n]) = (n-1) a1 + n a3 (reading the quoted [n+1,.] as
    // [n+1,n]), beta([1,1]) = a2
    for n in 1..=29i64 {
        let up = p.reflection_root(&crossing_word(v(n, n + 1)).unwrap()).unwrap();
        let expected_up = vec![
            AlgebraicElement::from_integer(2, n),
            AlgebraicElement::zero(2),
            AlgebraicElement::from_integer(2, n - 1),
        ];
        if up.coords() != expected_up.as_slice() {
            failures.push(format!("beta([{n},{}]) = {up}", n + 1));
        }
        let down = p.reflection_root(&crossing_word(v(n + 1, n)).unwrap()).unwrap();
        let expected_down = vec![
            AlgebraicElement::from_integer(2, n - 1),
            AlgebraicElement::zero(2),
            AlgebraicElement::from_integer(2, n),
        ];
        if down.coords() != expected_down.as_slice() {
            failures.push(format!("beta([{},{n}]) = {down}", n + 1));
        }
    }
    check(
        &mut failures,
        "beta([1,1])",
        p.reflection_root(&crossing_word(v(1, 1)).unwrap()).unwrap().to_string(),
        "0, 1, 0".to_string(),
    );

    // zero failures, zero collisions, injectivity on reduced roots
    let report = run_check(2, 30).unwrap();
    check(&mut failures, "surjectivity failures", report.surjectivity_failures.len(), 0);
    check(&mut failures, "collisions", report.collisions.len(), 0);
    check(&mut failures, "reduced roots = image size", report.reduced_roots, report.image_size);
    check(&mut failures, "verdict", report.passed(), true);

    gate(4, "m=2 bijection families", failures);
}

#[test]
fn criterion_5_surjectivity_sweep() {
    let mut failures = Vec::new();
    let started = Instant::now();
    for m in [2u32, 3, 4, 5] {
        let report = run_check(m, 200).unwrap();
        check(&mut failures, &format!("pairs at m={m}"), report.pairs_checked, 24463);
        if !report.surjectivity_failures.is_empty() {
            failures.push(format!(
                "m={m}: {} surjectivity failures, first {:?}",
                report.surjectivity_failures.len(),
                report.surjectivity_failures.first()
            ));
        }
        if !report.both_choice_mismatches.is_empty() {
            failures.push(format!(
                "m={m}: branch-choice mismatches {:?}",
                report.both_choice_mismatches.first()
            ));
        }
        println!(
            "  m={m}: {} pairs, {} both-candidate inputs, {:.1}s",
            report.pairs_checked, report.both_choice_events, report.elapsed_seconds
        );

        // the sweep compares reflections through their roots; re-verify a
        // deterministic stratified subsample at the full-matrix level
        let p = CoxeterPresentation::w_m(m).unwrap();
        let mut sampled = 0;
        for a in 1..=200i64 {
            for b in 1..=200i64 {
                if num_integer::gcd(a, b) != 1 || (a * 31 + b * 17) % 89 != 0 {
                    continue;
                }
                let trace = reduce(v(a, b), m).unwrap();
                if trace.steps.is_empty() {
                    continue;
                }
                sampled += 1;
                let mut start_word = crossing_word(v(a, b)).unwrap();
                if trace.net_swap_odd {
                    start_word = start_word.relabel_13();
                }
                let lhs = p.eval(&crossing_word(trace.result).unwrap()).unwrap();
                if lhs != p.eval(&start_word).unwrap() {
                    failures.push(format!("matrix-level mismatch at [{a},{b}], m={m}"));
                }
            }
        }
        check(&mut failures, &format!("m={m} matrix subsample nonempty"), sampled > 50, true);
    }
    let elapsed = started.elapsed().as_secs_f64();
    println!("  total sweep time {elapsed:.1}s");
    check(&mut failures, "five-minute target", elapsed < 300.0, true);
    gate(5, "word equality for all pairs up to 200", failures);
}

#[test]
fn criterion_6_lemma_suites() {
    let mut failures = Vec::new();
    for m in [2u32, 3, 4] {
        let outcome = run_lemmas(m, 25).unwrap();
        for suite in &outcome.checks {
            if !suite.failures.is_empty() {
                failures.push(format!("m={m} {}: {:?}", suite.name, suite.failures));
            }
        }
        let cases: std::collections::HashMap<&str, u64> =
            outcome.checks.iter().map(|c| (c.name.as_str(), c.cases)).collect();
        // coverage: the Chebyshev suites must reach n = 8, shifts j = 5
        check(&mut failures, &format!("m={m} closed-form cases"), cases["chebyshev_closed_forms"], 14);
        check(&mut failures, &format!("m={m} order-m cases"), cases["order_m_identities"], 16);
        check(&mut failures, &format!("m={m} shift cases"), cases["shift_identity"] > 1000, true);
    }
    gate(6, "lemma identity suites", failures);
}

#[test]
fn criterion_7_descent_certificates() {
    let mut failures = Vec::new();
    let mut steps_seen = 0u64;
    for m in [2u32, 3, 4, 5] {
        let cartan = CartanData::new(m).unwrap();
        for a in 1..=200i64 {
            for b in 1..=200i64 {
                if num_integer::gcd(a, b) != 1 {
                    continue;
                }
                let trace = reduce(v(a, b), m).unwrap();
                let mut q_prev = cartan.q_form(v(a, b));
                for step in &trace.steps {
                    steps_seen += 1;
                    if i128::from(step.q_after) >= q_prev {
                        failures.push(format!("no descent at [{a},{b}] m={m}"));
                    }
                    if num_integer::gcd(step.output.a(), step.output.b()) != 1 {
                        failures.push(format!("gcd violation at [{a},{b}] m={m}"));
                    }
                    q_prev = i128::from(step.q_after);
                }
            }
        }
    }
    check(&mut failures, "steps exercised", steps_seen > 50_000, true);
    gate(7, "descent and primitivity certificates", failures);
}

#[test]
fn criterion_8_injectivity_probe() {
    let mut failures = Vec::new();
    for m in [3u32, 4] {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(format!("report-{m}.json"));
        let (_out, code) = run_cli(&[
            "check",
            "-m",
            &m.to_string(),
            "--bound",
            "60",
            "--json",
            path.to_str().unwrap(),
        ]);
        check(&mut failures, &format!("check m={m} exit"), code, 0);
        let body = std::fs::read_to_string(&path).unwrap();
        let report: serde_json::Value = serde_json::from_str(&body).unwrap();
        check(
            &mut failures,
            &format!("m={m} collisions listed in JSON"),
            report["collisions"].as_array().map(Vec::len),
            Some(0),
        );
        check(
            &mut failures,
            &format!("m={m} distinct images"),
            report["image_size"] == report["reduced_roots"],
            true,
        );
    }
    gate(8, "injectivity probe to bound 60", failures);
}

#[test]
fn criterion_9_exact_algebra() {
    let mut failures = Vec::new();
    // degree phi(2M)/2 and annihilation within a 2^-64 enclosure
    for m in 2..=50u32 {
        let poly = minimal_polynomial(m).unwrap();
        if poly.degree() as u64 != euler_phi(2 * u64::from(m)) / 2 {
            failures.push(format!("degree mismatch at M={m}"));
        }
        let enclosure = two_cos_pi_over(m, 64);
        let width_bound = num_rational::BigRational::new(
            num_bigint::BigInt::from(1),
            num_bigint::BigInt::from(2).pow(64),
        );
        if enclosure.width() > width_bound {
            failures.push(format!("enclosure wider than 2^-64 at M={m}"));
        }
        let coeffs: Vec<num_rational::BigRational> = poly
            .coeffs()
            .iter()
            .map(|c| num_rational::BigRational::from_integer(c.clone()))
            .collect();
        if !eval_poly_interval(&coeffs, &enclosure).contains_zero() {
            failures.push(format!("minimal polynomial fails to annihilate at M={m}"));
        }
    }
    // random ring-axiom spot checks with a fixed-seed generator
    let mut state: u64 = 0x853c49e6748fea9b;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) as i64 % 1_000_000, ((state >> 13) as i64 % 999).abs() + 1)
    };
    for m in [3u32, 5, 7, 9, 12] {
        for _ in 0..40 {
            let mut element = |len: usize| {
                let coeffs = (0..len)
                    .map(|_| {
                        let (n, d) = next();
                        num_rational::BigRational::new(n.into(), d.into())
                    })
                    .collect();
                AlgebraicElement::from_coeffs(m, coeffs).unwrap()
            };
            let (a, b, c) = (element(5), element(4), element(3));
            if &(&a * &b) * &c != &a * &(&b * &c)
                || &a * &(&b + &c) != &(&a * &b) + &(&a * &c)
                || &a + &b != &b + &a
            {
                failures.push(format!("ring axiom failed at M={m}"));
            }
        }
    }
    gate(9, "minimal polynomials and certified arithmetic", failures);
}
