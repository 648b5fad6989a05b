use std::sync::OnceLock;

use ncforms::frobchar::{
    calibrate_convention, frobenius_record, root_modulus_check, structural_check, table_report, FrobeniusRecord,
};
use ncforms::newform::{
    build_f, build_f_cyclo, cubic_twist_check, hecke_verify, quartic_twist_check, quartic_twist_global_sign,
};
use ncforms::surface::{trace_sum, Convention};
use ncforms::util::primes_between;

fn table_primes() -> Vec<u64> {
    primes_between(5, 59)
}

fn records(a: i64) -> &'static Vec<FrobeniusRecord> {
    static A2: OnceLock<Vec<FrobeniusRecord>> = OnceLock::new();
    static A4: OnceLock<Vec<FrobeniusRecord>> = OnceLock::new();
    let cell = if a == 2 { &A2 } else { &A4 };
    cell.get_or_init(|| table_primes().into_iter().map(|p| frobenius_record(p, a).unwrap()).collect())
}

#[test]
fn trace_sum_examples() {
    assert_eq!(trace_sum(5, 2, 1).unwrap(), 0);
    assert_eq!(trace_sum(7, 2, 1).unwrap(), 3);
    // t₂ = e₁² − 2e₂ = −44, and Σ = −t₂
    assert_eq!(trace_sum(5, 2, 2).unwrap(), 44);
}

#[test]
fn calibration_selects_the_frozen_convention() {
    assert_eq!(calibrate_convention().unwrap(), vec![Convention::FROZEN]);
}

#[test]
fn table_a2_reproduced() {
    let c = build_f_cyclo(60).unwrap();
    let rows = table_report(2, &table_primes(), &c).unwrap();
    assert_eq!(rows.len(), 15);
    for r in &rows {
        assert!(r.ok(), "{r:?}");
    }
    let p5 = rows.iter().find(|r| r.p == 5).unwrap();
    assert_eq!(p5.golden_self_consistent, Some(false));
    let p41 = rows.iter().find(|r| r.p == 41).unwrap();
    assert_eq!(p41.c_p, "0");
    assert_eq!(p41.g, "X^2 - 1681");
}

#[test]
fn table_a4_reproduced() {
    let c = build_f_cyclo(60).unwrap();
    let rows = table_report(4, &table_primes(), &c).unwrap();
    assert!(rows.iter().all(|r| r.ok() && r.g_matches == Some(true)), "{rows:?}");
}

#[test]
fn structural_invariants_to_97() {
    for a in [2, 4] {
        for p in primes_between(5, 97) {
            let rec = frobenius_record(p, a).unwrap();
            structural_check(&rec).unwrap_or_else(|e| panic!("a={a} p={p}: {e}"));
            assert!(root_modulus_check(&rec, 1e-8), "a={a} p={p}");
        }
    }
}

#[test]
fn cubic_twist_between_the_two_surfaces() {
    for (r2, r4) in records(2).iter().zip(records(4)) {
        let v = cubic_twist_check(r2, r4).unwrap();
        assert!(v.pass, "p={}", v.p);
        if !v.split {
            assert!(r2.g() == r4.g() || r2.g() == r4.g().conj(), "p={}", v.p);
        }
    }
}

#[test]
fn quartic_twist_with_the_newform() {
    let c = build_f(3600).unwrap();
    let hecke = hecke_verify(&c, 3600).unwrap();
    let verdicts: Vec<_> = records(4)
        .iter()
        .map(|r| {
            let p = r.h.p;
            quartic_twist_check(r, &c[p as usize], hecke.nebentypus[&p]).unwrap()
        })
        .collect();
    for v in &verdicts {
        assert!(v.pass, "p={}", v.p);
    }
    assert_eq!(quartic_twist_global_sign(&verdicts), Some(-1));
}
