//! One line per acceptance criterion. Run with
//! `cargo test -p ncforms --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use ncforms::asd::{asd_basis, required_precision, verify_congruences};
use ncforms::frobchar::golden::NEWFORM_DISPLAY;
use ncforms::frobchar::{frobenius_record, root_modulus_check, structural_check, table_report, FrobeniusRecord};
use ncforms::newform::{
    build_f, build_f_cyclo, cubic_twist_check, hecke_verify, quartic_twist_check, quartic_twist_global_sign,
    NewformCoeff,
};
use ncforms::qmstruct::{
    eigenbasis, isogeny_sample_check, numeric_slash_check, operator_algebra_check, stated_ratio, Convention,
};
use ncforms::qseries::{cuspform_basis, eta_quotient, hauptmodul_t};
use ncforms::util::primes_between;
use ncforms::{EtaQuotientSpec, Rational};

type Outcome = Result<(bool, String), String>;

struct Criterion {
    id: &'static str,
    what: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn ac1() -> Outcome {
    let t = hauptmodul_t(3).map_err(e)?;
    let got: Vec<Rational> = t.coeffs().to_vec();
    let want: Vec<Rational> = [1, -8, 32].iter().map(|&k| Rational::from_integer(k.into())).collect();
    Ok((got == want, format!("t = {}", got.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))))
}

fn ac2() -> Outcome {
    let n = 600;
    let (h1, h2) = cuspform_basis(n).map_err(e)?;
    let big1 = eta_quotient(&EtaQuotientSpec::h1_cube(), n).map_err(e)?;
    let big2 = eta_quotient(&EtaQuotientSpec::h2_cube(), n).map_err(e)?;
    let ok = h1.pow(3) == big1 && h2.pow(3) == big2;
    Ok((ok, format!("{n} terms")))
}

fn ac3() -> Outcome {
    let c = build_f(60).map_err(e)?;
    let bad: Vec<u64> =
        NEWFORM_DISPLAY.iter().filter(|(n, v)| c[*n as usize] != NewformCoeff::from_ints(*v)).map(|x| x.0).collect();
    let rows = table_report(2, &primes_between(5, 59), &build_f_cyclo(60).map_err(e)?).map_err(e)?;
    let cp_bad: Vec<u64> = rows.iter().filter(|r| r.c_matches != Some(true)).map(|r| r.p).collect();
    Ok((
        bad.is_empty() && cp_bad.is_empty() && rows.len() == 15,
        format!("display mismatches {bad:?}, c_p mismatches {cp_bad:?}"),
    ))
}

fn ac4() -> Outcome {
    let c = build_f(500).map_err(e)?;
    let r = hecke_verify(&c, 500).map_err(e)?;
    let classes_ok = [1u64, 5, 7, 11].iter().all(|k| r.by_class.contains_key(k));
    Ok((
        r.ok() && classes_ok,
        format!(
            "{} recursion + {} multiplicativity checks, chi_f by class {:?}",
            r.recursion_checks, r.multiplicativity_checks, r.by_class
        ),
    ))
}

fn ac5() -> Outcome {
    let c = build_f_cyclo(60).map_err(e)?;
    let mut ok = true;
    let mut notes = Vec::new();
    for a in [2, 4] {
        let rows = table_report(a, &primes_between(5, 59), &c).map_err(e)?;
        let bad: Vec<u64> = rows.iter().filter(|r| !r.ok() || r.g_matches != Some(true)).map(|r| r.p).collect();
        ok &= bad.is_empty() && rows.len() == 15;
        notes.push(format!("a={a}: {} rows, mismatches {bad:?}", rows.len()));
    }
    Ok((ok, notes.join("; ")))
}

fn ac6() -> Outcome {
    let mut n = 0;
    for a in [2, 4] {
        for p in primes_between(5, 97) {
            let rec = frobenius_record(p, a).map_err(e)?;
            if let Err(msg) = structural_check(&rec) {
                return Ok((false, format!("a={a} p={p}: {msg}")));
            }
            if !root_modulus_check(&rec, 1e-8) {
                return Ok((false, format!("a={a} p={p}: root modulus")));
            }
            n += 1;
        }
    }
    Ok((true, format!("{n} quartics up to 97")))
}

fn ac7() -> Outcome {
    let nmax = 600;
    let (h1, h2) = cuspform_basis(nmax).map_err(e)?;
    let mut notes = Vec::new();
    let mut ok = true;
    for p in [5, 7, 11, 13, 17, 19, 23] {
        let start = Instant::now();
        let rec = frobenius_record(p, 2).map_err(e)?;
        let spec = asd_basis(&rec, required_precision(p, nmax), false).map_err(e)?;
        let r = verify_congruences(&spec, &h1, &h2, nmax).map_err(e)?;
        let fast = start.elapsed() < Duration::from_secs(30);
        ok &= r.pass() && fast;
        notes.push(format!("p={p}:{}", if r.pass() { "ok" } else { "FAIL" }));
    }
    Ok((ok, notes.join(" ")))
}

fn ac8() -> Outcome {
    let v = operator_algebra_check().map_err(e)?;
    let failed: Vec<&str> = v.identities.iter().filter(|x| !x.holds).map(|x| x.name.as_str()).collect();
    Ok((v.pass(), format!("{} identities, failed {failed:?}", v.identities.len())))
}

fn ac9() -> Outcome {
    let mut trials = 0;
    let mut ok = true;
    let mut notes = Vec::new();
    for p in [13, 17, 29] {
        let v = isogeny_sample_check(p, 100, 2024).map_err(e)?;
        trials += v.trials;
        ok &= v.pass();
        notes.push(format!("p={p}: {} additivity, {} kernel", v.additivity_checks, v.kernel_checks));
    }
    Ok((ok && trials >= 100, format!("{trials} trials; {}", notes.join(", "))))
}

fn ac10() -> Outcome {
    let primes = primes_between(5, 59);
    let r2: Vec<FrobeniusRecord> =
        primes.iter().map(|&p| frobenius_record(p, 2)).collect::<Result<_, _>>().map_err(e)?;
    let r4: Vec<FrobeniusRecord> =
        primes.iter().map(|&p| frobenius_record(p, 4)).collect::<Result<_, _>>().map_err(e)?;
    let mut bad_cubic = Vec::new();
    for (a, b) in r2.iter().zip(&r4) {
        let v = cubic_twist_check(a, b).map_err(e)?;
        let inert_ok = v.split || a.g() == b.g() || a.g() == b.g().conj();
        if !v.pass || !inert_ok {
            bad_cubic.push(v.p);
        }
    }
    let c = build_f(3600).map_err(e)?;
    let hecke = hecke_verify(&c, 3600).map_err(e)?;
    let mut verdicts = Vec::new();
    for r in &r4 {
        let p = r.h.p;
        let chi = *hecke.nebentypus.get(&p).ok_or(format!("no chi_f({p})"))?;
        verdicts.push(quartic_twist_check(r, &c[p as usize], chi).map_err(e)?);
    }
    let bad_quartic: Vec<u64> = verdicts.iter().filter(|v| !v.pass).map(|v| v.p).collect();
    let sign = quartic_twist_global_sign(&verdicts);
    Ok((
        bad_cubic.is_empty() && bad_quartic.is_empty(),
        format!("cubic twist failures {bad_cubic:?}, quartic twist failures {bad_quartic:?}, global sign {sign:?}"),
    ))
}

fn ac11() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for tau in [Complex64::new(0.1, 0.4), Complex64::new(0.0, 0.5f64.sqrt() / 2.0)] {
        let v = numeric_slash_check(tau, 400, 1e-6).map_err(e)?;
        ok &= v.convention == Some(Convention::Column);
        notes.push(format!("tau={tau}: column {:.1e}, row {:.1e}", v.residual_column, v.residual_row));
    }
    for s in [-1, 3] {
        let c = stated_ratio(s).map_err(e)?;
        let ratios: Vec<_> =
            eigenbasis(s, Convention::Column).map_err(e)?.into_iter().map(|v| v.vector[1].clone()).collect();
        ok &= ratios.contains(&c) && ratios.contains(&-c);
    }
    Ok((ok, notes.join("; ")))
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: "AC1", what: "hauptmodul t", limit: secs(1), run: ac1 },
        Criterion { id: "AC2", what: "cuspform cubes vs eta quotients", limit: secs(5), run: ac2 },
        Criterion { id: "AC3", what: "newform coefficients", limit: secs(10), run: ac3 },
        Criterion { id: "AC4", what: "Hecke structure", limit: secs(10), run: ac4 },
        Criterion { id: "AC5", what: "Frobenius tables a=2, a=4", limit: secs(120), run: ac5 },
        Criterion { id: "AC6", what: "structural Weil invariants", limit: None, run: ac6 },
        Criterion { id: "AC7", what: "ASD congruences", limit: secs(7 * 30), run: ac7 },
        Criterion { id: "AC8", what: "quaternion algebra", limit: secs(1), run: ac8 },
        Criterion { id: "AC9", what: "isogeny sampling", limit: secs(30), run: ac9 },
        Criterion { id: "AC10", what: "twist relations", limit: None, run: ac10 },
        Criterion { id: "AC11", what: "numeric slash check", limit: secs(5), run: ac11 },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let out = (c.run)();
        let dt = start.elapsed();
        let in_time = c.limit.map_or(true, |l| dt <= l);
        let (pass, detail) = match out {
            Ok((p, d)) => (p && in_time, d),
            Err(msg) => (false, format!("error: {msg}")),
        };
        let time_note = if in_time { String::new() } else { format!(" [over limit {:?}]", c.limit.unwrap()) };
        println!(
            "{:<5} {} {:>9.3}s  {}: {}{}",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            dt.as_secs_f64(),
            c.what,
            detail,
            time_note
        );
        if !pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
