//! Property suites: ring axioms on random field elements, the dual-route
//! sign check against raw interval evaluation, symbolic-vs-specialized
//! root agreement, descent behavior on random inputs, and the interior
//! lattice-point count behind the word-equality lemma.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use rigidroots_core::exact_algebra::{
    eval_poly_interval, two_cos_pi_over, AlgebraicElement, SymbolicPolynomial,
};
use rigidroots_core::lattice_words::crossing_word;
use rigidroots_core::rank2_roots::{CartanData, LatticeVector};
use rigidroots_core::reduction::{reduce, reduce_step};
use rigidroots_core::coxeter::{reflection_root_symbolic, CoxeterPresentation};

fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

fn element_strategy(m: u32) -> impl Strategy<Value = AlgebraicElement> {
    // up to six raw coefficients with height <= 10^6; reduction trims to
    // the field degree
    prop::collection::vec((-1_000_000i64..=1_000_000, 1i64..=1_000_000), 0..6).prop_map(
        move |pairs| {
            let coeffs = pairs.into_iter().map(|(n, d)| rational(n, d)).collect();
            AlgebraicElement::from_coeffs(m, coeffs).unwrap()
        },
    )
}

fn field_strategy() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(3), Just(4), Just(5), Just(6), Just(7), Just(12)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(
        (m, a, b, c) in field_strategy().prop_flat_map(|m| {
            (
                Just(m),
                element_strategy(m),
                element_strategy(m),
                element_strategy(m),
            )
        }),
    ) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        let one = AlgebraicElement::one(m);
        prop_assert_eq!(&a * &one, a.clone());
    }

    #[test]
    fn certified_sign_agrees_with_raw_interval_route(
        m in field_strategy(),
        coeffs in prop::collection::vec(-1_000_000i64..=1_000_000, 0..=13),
    ) {
        let poly = SymbolicPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect());
        let element = poly.specialize(m).unwrap();
        // independent route: evaluate the unreduced polynomial on a
        // 128-bit enclosure of 2cos(pi/M)
        let x = two_cos_pi_over(m, 128);
        let raw: Vec<BigRational> = coeffs.iter().map(|&c| rational(c, 1)).collect();
        let interval = eval_poly_interval(&raw, &x);
        if element.is_zero() {
            prop_assert!(
                interval.contains_zero(),
                "canonical zero but raw interval {:?} excludes zero", interval
            );
        } else if let Some(sign) = interval.sign() {
            prop_assert_eq!(element.sign(), sign);
        }
        // else: the raw interval straddles zero but the element is nonzero;
        // the certified path must still decide, exercising refinement
        if !element.is_zero() {
            prop_assert!(element.sign() != 0);
        }
    }

    #[test]
    fn descent_on_random_primitive_pairs(
        m in prop_oneof![Just(2u32), Just(3), Just(4), Just(5), Just(7)],
        a in 1i64..=1_000_000,
        b in 1i64..=1_000_000,
    ) {
        prop_assume!(num_integer::gcd(a, b) == 1);
        let v = LatticeVector::new(a, b);
        let cartan = CartanData::new(m).unwrap();
        let trace = reduce(v, m).unwrap();
        let mut previous_q = cartan.q_form(v);
        let mut at = v;
        for step in &trace.steps {
            prop_assert_eq!(step.input, at);
            prop_assert!(i128::from(step.q_after) < previous_q);
            prop_assert_eq!(num_integer::gcd(step.output.a(), step.output.b()), 1);
            prop_assert!(step.output.in_positive_lattice());
            previous_q = i128::from(step.q_after);
            at = step.output;
        }
        prop_assert!(trace.result_class.is_root());
        prop_assert!(trace.result_class.reduced);
    }
}

/// Sign-normalize specialized symbolic coordinates the same way numeric
/// roots are normalized: negate when every nonzero coordinate is negative.
fn normalize_signs(coords: Vec<AlgebraicElement>) -> Vec<AlgebraicElement> {
    let signs: Vec<i8> = coords.iter().map(AlgebraicElement::sign).collect();
    if signs.iter().any(|&s| s < 0) {
        assert!(signs.iter().all(|&s| s <= 0), "mixed signs in specialized root");
        coords.iter().map(|c| -c).collect()
    } else {
        coords
    }
}

#[test]
fn symbolic_roots_specialize_to_numeric_roots() {
    // every crossing word with a + b <= 30, specialized at each finite label
    for m in 2u32..=6 {
        let p = CoxeterPresentation::w_m(m).unwrap();
        for a in 1..=29i64 {
            for b in 1..=(30 - a) {
                if num_integer::gcd(a, b) != 1 {
                    continue;
                }
                let word = crossing_word(LatticeVector::new(a, b)).unwrap();
                let symbolic = reflection_root_symbolic(&word).unwrap();
                let specialized = normalize_signs(
                    symbolic.iter().map(|s| s.specialize(m).unwrap()).collect(),
                );
                let numeric = p.reflection_root(&word).unwrap();
                assert_eq!(
                    specialized,
                    numeric.coords().to_vec(),
                    "symbolic/numeric mismatch at [{a},{b}], m={m}"
                );
            }
        }
    }
}

/// Interior lattice points of the triangle (0,0), p1, p2, brute force.
fn interior_points(p1: (i64, i64), p2: (i64, i64)) -> i64 {
    let cross = |ox: i64, oy: i64, ax: i64, ay: i64, bx: i64, by: i64| {
        i128::from(ax - ox) * i128::from(by - oy) - i128::from(ay - oy) * i128::from(bx - ox)
    };
    let orientation = cross(0, 0, p1.0, p1.1, p2.0, p2.1);
    assert!(orientation != 0, "degenerate triangle");
    let max_x = p1.0.max(p2.0).max(0);
    let max_y = p1.1.max(p2.1).max(0);
    let mut count = 0;
    for x in 0..=max_x {
        for y in 0..=max_y {
            let d0 = cross(0, 0, p1.0, p1.1, x, y);
            let d1 = cross(p1.0, p1.1, p2.0, p2.1, x, y);
            let d2 = cross(p2.0, p2.1, 0, 0, x, y);
            let all_pos = d0 > 0 && d1 > 0 && d2 > 0;
            let all_neg = d0 < 0 && d1 < 0 && d2 < 0;
            if all_pos || all_neg {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn descent_triangles_contain_the_predicted_lattice_points() {
    // Steps with small kappa across a sweep: the triangle spanned by the
    // working input and the output contains exactly m * kappa(kappa-1)/2
    // interior lattice points.
    let mut sampled = 0u32;
    for m in [2u32, 3, 4, 5] {
        let cartan = CartanData::new(m).unwrap();
        for a in 1..=120i64 {
            for b in 1..=120i64 {
                if num_integer::gcd(a, b) != 1 {
                    continue;
                }
                let v = LatticeVector::new(a, b);
                if cartan.classify(v).is_root() {
                    continue;
                }
                let step = reduce_step(v, m).unwrap();
                let kappa = step.kappa.unsigned_abs() as i64;
                if kappa > 4 {
                    continue;
                }
                let work = if step.swapped { v.swapped() } else { v };
                let points = interior_points(
                    (work.a(), work.b()),
                    (step.output.a(), step.output.b()),
                );
                assert_eq!(
                    points,
                    i64::from(m) * kappa * (kappa - 1) / 2,
                    "triangle count at {v}, m={m}, kappa={kappa}"
                );
                sampled += 1;
            }
        }
    }
    assert!(sampled > 500, "triangle property exercised only {sampled} steps");
}
