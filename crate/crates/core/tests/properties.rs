mod common;

use altbase::algebraic::FieldElement;
use altbase::bases::AlternateBase;
use altbase::cli::basefile::parse_rational;
use altbase::cli::literal::{format_word, parse_digit_string};
use altbase::expansion::{
    greedy_expand, value_of, value_of_finite, EPWord, Expansion, FiniteDigitString, OneExpansions,
    DEFAULT_FUEL,
};
use altbase::rewrite::{add, normalize, RewriteError, RewriteSystem};
use common::*;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(0x00a1_7ba5),
        failure_persistence: None,
        max_global_rejects: 8192,
        ..ProptestConfig::default()
    }
}

fn digits(max_digit: u64, max_len: usize) -> impl Strategy<Value = FiniteDigitString> {
    prop::collection::vec(0..=max_digit, 1..=max_len).prop_map(FiniteDigitString::new)
}

/// Strings starting with 0 or 1, most of which have value below 1.
fn small_digits(max_len: usize) -> impl Strategy<Value = FiniteDigitString> {
    (0u64..=1, prop::collection::vec(0u64..=2, 0..max_len)).prop_map(|(d, mut rest)| {
        rest.insert(0, d);
        FiniteDigitString::new(rest)
    })
}

fn below_one(b: &AlternateBase, s: &FiniteDigitString) -> bool {
    value_of_finite(b, s).unwrap() < FieldElement::one(b.field().unwrap())
}

fn element(b: &AlternateBase, c: (i64, i64, i64)) -> FieldElement {
    FieldElement::new(b.field().unwrap(), vec![q(c.0, 7), q(c.1, c.2)]).unwrap()
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn literal_round_trip(
        pre in prop::collection::vec(0u64..=15, 0..6),
        period in prop::collection::vec(0u64..=15, 0..4),
    ) {
        prop_assume!(!pre.is_empty() || !period.is_empty());
        let w = EPWord::new(pre, period);
        let text = format_word(&w);
        prop_assert_eq!(parse_digit_string(&text).unwrap(), w, "{}", text);
    }

    #[test]
    fn rational_literals(n in -10_000i64..10_000, d in 1i64..500) {
        prop_assert_eq!(parse_rational(&format!("{n}/{d}")).unwrap(), q(n, d));
    }

    #[test]
    fn digitwise_sub_undoes_add(a in digits(9, 10), b in digits(9, 10)) {
        let s = a.digitwise_add(&b);
        prop_assert_eq!(s.checked_digitwise_sub(&b), Some(a));
    }

    #[test]
    fn field_arithmetic(
        a in (-50i64..50, -50i64..50, 1i64..20),
        b in (-50i64..50, -50i64..50, 1i64..20),
    ) {
        let base = quadratic_base();
        let (x, y) = (element(&base, a), element(&base, b));
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assume!(!y.is_zero());
        prop_assert_eq!(&(&x * &y) / &y, x.clone());
        let (fx, fy) = (x.to_f64(), y.to_f64());
        if (fx - fy).abs() > 1e-9 {
            prop_assert_eq!(x < y, fx < fy);
        }
    }
}

proptest! {
    #![proptest_config(config(96))]

    #[test]
    fn greedy_is_admissible_and_exact(n in 0i64..400, d in 1i64..400) {
        prop_assume!(n < d);
        let b = quadratic_base();
        let data = OneExpansions::compute(&b, DEFAULT_FUEL).unwrap();
        let x = FieldElement::from_rational(b.field().unwrap(), q(n, d));
        let e = greedy_expand(&b, &x, DEFAULT_FUEL).unwrap();
        let w = e.word().expect("quadratic Pisot unit base closes every rational expansion");
        prop_assert!(data.admissible(&w).is_admissible(), "{}", w);
        prop_assert_eq!(value_of(&b, &w).unwrap(), x);
        if let Expansion::Finite(s) = e {
            prop_assert!(data.admissible_finite(&s).is_admissible());
        }
    }

    #[test]
    fn normalize_steps_are_monotone(s in digits(4, 12)) {
        let b = quadratic_base();
        prop_assume!(below_one(&b, &s));
        let sys = RewriteSystem::new(&b, DEFAULT_FUEL).unwrap();
        let (z, trace) = normalize(&sys, &s).unwrap();
        prop_assert!(sys.one_expansions().admissible_finite(&z).is_admissible());
        prop_assert_eq!(value_of_finite(&b, &z).unwrap(), value_of_finite(&b, &s).unwrap());
        let mut prev = s.clone();
        for step in &trace.steps {
            prop_assert_eq!(&step.before, &prev);
            prop_assert!(step.after > step.before);
            prop_assert!(step.weight_after <= step.weight_before);
            prev = step.after.clone();
        }
        prop_assert_eq!(&prev, &z);
        let (again, trace) = normalize(&sys, &z).unwrap();
        prop_assert_eq!(again, z);
        prop_assert!(trace.steps.is_empty());
    }

    #[test]
    fn lex_order_is_value_order(a in small_digits(10), c in small_digits(10)) {
        let b = quadratic_base();
        prop_assume!(below_one(&b, &a) && below_one(&b, &c));
        let sys = RewriteSystem::new(&b, DEFAULT_FUEL).unwrap();
        let (x, _) = normalize(&sys, &a).unwrap();
        let (y, _) = normalize(&sys, &c).unwrap();
        let (vx, vy) = (value_of_finite(&b, &x).unwrap(), value_of_finite(&b, &y).unwrap());
        prop_assert_eq!(x.cmp(&y), vx.cmp(&vy));
    }

    #[test]
    fn addition_commutes(a in small_digits(8), c in small_digits(8)) {
        let b = quadratic_base();
        prop_assume!(below_one(&b, &a) && below_one(&b, &c));
        let sys = RewriteSystem::new(&b, DEFAULT_FUEL).unwrap();
        let (x, _) = normalize(&sys, &a).unwrap();
        let (y, _) = normalize(&sys, &c).unwrap();
        match (add(&sys, &x, &y), add(&sys, &y, &x)) {
            (Ok((s, _)), Ok((t, _))) => prop_assert_eq!(s, t),
            (Err(e), Err(f)) => {
                prop_assert_eq!(&e, &RewriteError::SumOutOfRange);
                prop_assert_eq!(e, f);
            }
            (l, r) => prop_assert!(false, "{:?} vs {:?}", l.map(|x| x.0), r.map(|x| x.0)),
        }
    }

    #[test]
    fn golden_normalize_matches_greedy(s in digits(3, 10)) {
        let b = golden_base();
        prop_assume!(below_one(&b, &s));
        let sys = RewriteSystem::new(&b, DEFAULT_FUEL).unwrap();
        let (z, _) = normalize(&sys, &s).unwrap();
        let x = value_of_finite(&b, &s).unwrap();
        let Expansion::Finite(g) = greedy_expand(&b, &x, DEFAULT_FUEL).unwrap() else {
            return Err(TestCaseError::fail("golden ratio sums are finite"));
        };
        prop_assert_eq!(z, g);
    }

    #[test]
    fn symbolic_normalize_is_sound(s in digits(3, 9)) {
        let sys = RewriteSystem::new(&nonsimple_base(), DEFAULT_FUEL).unwrap();
        let w = sys.weight().unwrap().weight.clone();
        match normalize(&sys, &s) {
            Ok((z, trace)) => {
                prop_assert!(sys.one_expansions().admissible_finite(&z).is_admissible(), "{}", z);
                prop_assert!(z >= s);
                prop_assert!(w.weight_of(&z) <= w.weight_of(&s));
                prop_assert_eq!(trace.steps.is_empty(), z == s);
            }
            Err(e) => prop_assert_eq!(e, RewriteError::ValueOutOfRange),
        }
    }
}
