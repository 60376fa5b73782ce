use fibsum_core::identities::{
    audit, closed_form_rhs, cross_power_expansion, cross_power_expansion_of, fib_power_sum_binet,
    fib_power_sum_oracle, prop1_eval, remark1_relation, IdentityFamily, Prop1Variant, Reading,
    Shift, Sign, Verdict,
};
use fibsum_core::sequences::fib;
use fibsum_core::{ExactScalar, GoldenInt};
use num_bigint::BigInt;
use num_rational::BigRational;

#[test]
fn oracles_agree() {
    for p in 1..=8 {
        for n in 0..=24 {
            for sign in [Sign::Plus, Sign::Minus] {
                assert_eq!(
                    fib_power_sum_oracle(n, p, sign),
                    fib_power_sum_binet(n, p, sign).unwrap(),
                    "n={n} p={p} {sign:?}"
                );
            }
        }
    }
}

#[test]
fn remark1_relations_hold() {
    for p in 1..=12 {
        for i in 1..=12 {
            let (l, r) = remark1_relation(p, i).unwrap();
            assert_eq!(l, r, "relation {i} at p={p}");
        }
    }
}

#[test]
fn prop1_variants_hold() {
    for p in 0..=8 {
        for n in 0..=20 {
            for v in Prop1Variant::ALL {
                let (l, r) = prop1_eval(n, p, v).unwrap();
                assert_eq!(l, r, "{v:?} n={n} p={p}");
            }
        }
    }
    for n in 0..=20 {
        let (l, _) = prop1_eval(n, 0, Prop1Variant::V811).unwrap();
        assert_eq!(l, GoldenInt::from_integer(fib(2 * n)));
    }
}

#[test]
fn theorem2_matches_oracle() {
    for p in 1..=3 {
        for n in 0..=20 {
            let rhs = closed_form_rhs(IdentityFamily::T2, Reading::Printed, n, p).unwrap();
            assert_eq!(
                rhs,
                ExactScalar::Integer(fib_power_sum_oracle(n, 4 * p, Sign::Plus))
            );
        }
    }
    for (n, want) in [(1, 1), (2, 3), (3, 22)] {
        let rhs = closed_form_rhs(IdentityFamily::T2, Reading::Printed, n, 1).unwrap();
        assert_eq!(rhs, ExactScalar::int(want));
    }
}

#[test]
fn cross_power_expansions_hold() {
    for shift in [Shift::Plus, Shift::Minus] {
        for n in 0..=20 {
            let (d, e) = cross_power_expansion(n, &GoldenInt::phi(), shift).unwrap();
            assert_eq!(d, e, "phi n={n} {shift:?}");
            for t in 1..=3i64 {
                let a = BigRational::from_integer(BigInt::from(t));
                let b = BigRational::new(BigInt::from(-1), BigInt::from(t));
                let (d, e) = cross_power_expansion_of(n, &a, &b, shift).unwrap();
                assert_eq!(d, e, "t={t} n={n} {shift:?}");
            }
        }
    }
}

#[test]
fn audit_examples() {
    let r = audit(&[IdentityFamily::T2], 0..=3, 1..=1);
    assert_eq!(r.entries.len(), 4);
    assert!(r.all_pass());

    let remark: Vec<_> = (1..=12).map(IdentityFamily::Remark1).collect();
    let r = audit(&remark, 0..=0, 1..=12);
    assert_eq!(r.entries.len(), 144);
    assert!(r.all_pass());

    assert!(audit(&[IdentityFamily::T2], 0..=10, 0..=0)
        .entries
        .is_empty());
}

#[test]
fn audit_is_deterministic_and_failures_carry_values() {
    let families = IdentityFamily::all();
    let a = audit(&families, 0..=16, 0..=3);
    let b = audit(&families, 0..=16, 0..=3);
    assert_eq!(a, b);
    assert!(!a.has_engine_fault());
    for e in a.failures() {
        assert!(!e.note.is_empty());
        assert!(e.rhs.as_exact().is_some() || e.rhs.to_string().contains("sqrt"));
    }
}

#[test]
fn printed_findings() {
    // Even-n branch of the odd-power closed form agrees; the printed odd-n
    // branch leaves an irrational value.
    let r = audit(&[IdentityFamily::T3], 0..=6, 1..=1);
    for e in &r.entries {
        let expect = if e.n >= 2 && e.n % 2 == 0 {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        assert_eq!(e.verdict, expect, "n={}", e.n);
    }
    let r = audit(&[IdentityFamily::T5], 1..=6, 1..=1);
    for e in &r.entries {
        let expect = if e.n % 2 == 1 {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        assert_eq!(e.verdict, expect, "n={}", e.n);
    }
}
