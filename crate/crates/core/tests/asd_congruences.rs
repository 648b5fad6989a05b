use std::sync::OnceLock;

use ncforms::asd::{asd_basis, verify_congruences, AsdReport};
use ncforms::frobchar::frobenius_record;
use ncforms::qseries::cuspform_basis;
use ncforms::QSeries;

const NMAX: usize = 600;

fn basis() -> &'static (QSeries, QSeries) {
    static H: OnceLock<(QSeries, QSeries)> = OnceLock::new();
    H.get_or_init(|| cuspform_basis(NMAX).unwrap())
}

fn run(p: u64, m: u32, force_extension: bool) -> AsdReport {
    let rec = frobenius_record(p, 2).unwrap();
    let spec = asd_basis(&rec, m, force_extension).unwrap();
    let (h1, h2) = basis();
    verify_congruences(&spec, h1, h2, NMAX).unwrap()
}

fn verdict(r: &AsdReport) -> Vec<(String, String, bool)> {
    r.pairings.iter().map(|x| (x.basis.clone(), x.chars.clone(), x.holds())).collect()
}

#[test]
fn congruences_hold_for_small_primes() {
    for p in [5, 7, 11, 13, 17, 19, 23] {
        let r = run(p, 8, false);
        assert!(r.pass(), "p={p}: {:?}", r.pairings);
        // exactly one char pair per basis element
        assert_eq!(r.pairings.iter().filter(|x| x.holds()).count(), 2, "p={p}");
    }
}

#[test]
fn verdicts_are_stable_in_precision() {
    for p in [5, 7, 11] {
        assert_eq!(verdict(&run(p, 8, false)), verdict(&run(p, 10, false)), "p={p}");
    }
}

#[test]
fn split_extension_agrees_with_hensel_embedding() {
    // 2 is a square mod 17 and −2 is a square mod 11
    for p in [11, 17] {
        assert_eq!(verdict(&run(p, 8, false)), verdict(&run(p, 8, true)), "p={p}");
    }
}

#[test]
fn embeddings_of_sqrt_minus_3_are_mirrored() {
    for p in [7, 13, 19] {
        let r = run(p, 8, false);
        let asg = r.assignment.unwrap();
        assert_ne!(asg[0].1, asg[1].1);
    }
}

#[test]
fn first_instance_is_a_p_congruence() {
    // n = 1, r = 1: a(p) ≡ A mod p²
    let r = run(5, 8, false);
    for x in r.pairings.iter().filter(|x| !x.holds()) {
        assert!(x.first_failures.iter().any(|f| f.n == 1 && f.r == 1));
    }
}
