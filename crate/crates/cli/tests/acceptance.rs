//! The ten acceptance criteria. Each prints one PASS/FAIL line; the test fails if
//! any criterion does.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::Value;

use dotbinom::closed::{self, Variant};
use dotbinom::oracle::{self, OracleConfig, PosetKind};
use dotbinom::polyq::{self, PolyFamilyKey};
use dotbinom::{AmbientForm, FieldSpec, FormKind, QClass, SubspaceClass};

const ODD_Q_TO_13: [u64; 6] = [3, 5, 7, 9, 11, 13];

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn ambient(q: u64, n: usize, kind: FormKind) -> AmbientForm {
    AmbientForm::new(&FieldSpec::of_order(q).unwrap(), n, kind).unwrap()
}

fn cli(args: &[&str]) -> (String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_dotbinom"))
        .args(args)
        .output()
        .expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), out.status.code())
}

fn c1_triangle() -> Check {
    let (out, code) = cli(&["triangle", "--q", "5", "--rows", "4"]);
    ensure(code == Some(0), || format!("exit status {code:?}"))?;
    let want = "1\n1 1\n1 2 1\n1 15 15 1\n1 60 450 60 1\n";
    ensure(out == want, || format!("got {out:?}"))
}

fn c2_oracle_equivalence() -> Check {
    let cfg = OracleConfig {
        jobs: Some(4),
        ..OracleConfig::default()
    };
    for q in ODD_Q_TO_13 {
        for n in 1..=5 {
            for kind in [FormKind::Dot, FormKind::LambdaDot] {
                let space = ambient(q, n, kind);
                for k in 0..=n {
                    let tally = oracle::count_subspaces_by_class(&space, k, &cfg).map_err(|e| e.to_string())?;
                    for v in Variant::ALL.into_iter().filter(|v| v.ambient() == kind) {
                        let closed = closed::dot_binom_variant(q, n, k, v).map_err(|e| e.to_string())?;
                        let seen = big(tally.get(v.subspace_class()));
                        ensure(closed == seen, || format!("{v} q={q} n={n} k={k}: closed {closed}, oracle {seen}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn c3_group_orders() -> Check {
    for (n, q, want) in [(2, 5, 8u64), (2, 3, 8), (3, 3, 48)] {
        let seen = oracle::enumerate_orthogonal_group(&ambient(q, n, FormKind::Dot), &OracleConfig::default())
            .map_err(|e| e.to_string())?;
        let formula = closed::group_order(q, n).map_err(|e| e.to_string())?;
        let factorial = closed::bracket_factorial(q, n).map_err(|e| e.to_string())? << n;
        ensure(seen == want && formula == big(want) && factorial == big(want), || {
            format!("(n,q)=({n},{q}): enumerated {seen}, formula {formula}, want {want}")
        })?;
    }
    Ok(())
}

fn c4_quotient_identity() -> Check {
    for q in ODD_Q_TO_13 {
        for n in 0..=8 {
            for k in 0..=n {
                let ok = closed::quotient_identity_check(q, n, k).map_err(|e| e.to_string())?;
                ensure(ok, || format!("q={q} n={n} k={k}"))?;
            }
        }
    }
    Ok(())
}

fn c5_mobius() -> Check {
    for q in [3, 5] {
        let seq = closed::mobius_sequence(q, 3).map_err(|e| e.to_string())?;
        for n in 1..=3 {
            let snap = oracle::build_poset(&ambient(q, n, FormKind::Dot), PosetKind::Euclidean, &OracleConfig::default())
                .map_err(|e| e.to_string())?;
            let mu = oracle::mobius_bottom(&snap);
            ensure(mu == seq.mu[n], || format!("q={q} n={n}: poset {mu}, recursion {}", seq.mu[n]))?;
        }
    }
    let mu = |q, n| closed::mobius_sequence(q, n).unwrap().mu[n].clone();
    ensure(mu(5, 2) == 1.into() && mu(3, 3) == (-1).into(), || "named values".into())
}

fn c6_flags() -> Check {
    for (q, n, want) in [(3, 3, 6u64), (5, 2, 2)] {
        let snap = oracle::build_poset(&ambient(q, n, FormKind::Dot), PosetKind::Euclidean, &OracleConfig::default())
            .map_err(|e| e.to_string())?;
        let flags = oracle::count_flags(&snap);
        let chains = oracle::count_maximal_chains_explicit(&snap);
        let factorial = closed::bracket_factorial(q, n).map_err(|e| e.to_string())?;
        ensure(flags == big(want) && chains == want && factorial == big(want), || {
            format!("q={q} n={n}: flags {flags}, chains {chains}, [n]_d! {factorial}")
        })?;
    }
    Ok(())
}

fn c7_polynomials() -> Check {
    let half = BigRational::new(1.into(), 2.into());
    for class in [QClass::OneMod4, QClass::ThreeMod4] {
        for n in 0..=8 {
            for k in 0..=n {
                let key = PolyFamilyKey::new(class, n, k).map_err(|e| e.to_string())?;
                let p = polyq::dot_binom_poly(key).map_err(|e| e.to_string())?;
                ensure(p.degree() == Some(k * (n - k)), || format!("{key:?}: degree {:?}", p.degree()))?;
                for q in ODD_Q_TO_13.into_iter().filter(|&q| QClass::of(q) == Some(class)) {
                    polyq::eval_consistency(key, q).map_err(|e| e.to_string())?;
                }
                if 0 < k && k < n {
                    ensure(p.leading() == half, || format!("{key:?}: leading {}", p.leading()))?;
                    polyq::functional_equation_check(key).map_err(|e| e.to_string())?;
                    let ok = polyq::limit_check(key).map_err(|e| e.to_string())?;
                    ensure(ok, || format!("{key:?}: limit"))?;
                }
            }
        }
    }
    for n in 2..=16 {
        for k in 1..n {
            let brute = oracle::count_symmetric_ksets(n, k).map_err(|e| e.to_string())?;
            let table = closed::limit_value(n, k);
            ensure(table == big(brute), || format!("n={n} k={k}: table {table}, k-sets {brute}"))?;
        }
    }
    Ok(())
}

fn c8_shapes() -> Check {
    for q in ODD_Q_TO_13 {
        for n in 1..=8 {
            let rep = closed::shape_checks(q, n).map_err(|e| e.to_string())?;
            ensure(rep.holds(), || format!("closed q={q} n={n}: {rep:?}"))?;
        }
    }
    let cfg = OracleConfig::default();
    for q in [3, 5] {
        for n in 1..=4 {
            let space = ambient(q, n, FormKind::Dot);
            let tallies: Vec<_> = (0..=n)
                .map(|k| oracle::count_subspaces_by_class(&space, k, &cfg))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let euclid: Vec<BigUint> = tallies.iter().map(|t| big(t.dot)).collect();
            let lorentz: Vec<BigUint> = tallies[1..n].iter().map(|t| big(t.lambda_dot)).collect();
            for row in [&euclid, &lorentz] {
                let s = closed::shape_of(row);
                ensure(s.holds(), || format!("oracle q={q} n={n}: {row:?} {s:?}"))?;
            }
            for class in [SubspaceClass::DotType, SubspaceClass::LambdaDotType] {
                for k in 0..=n {
                    let ok = oracle::perp_is_bijection(&space, k, class, &cfg).map_err(|e| e.to_string())?;
                    ensure(ok, || format!("perp q={q} n={n} k={k} {class:?}"))?;
                }
            }
        }
    }
    Ok(())
}

fn c9_ratio() -> Check {
    for q in [101, 1009] {
        for n in 2..=6 {
            for k in 1..n {
                let ok = closed::asymptotic_ratio_ok(q, n, k).map_err(|e| e.to_string())?;
                ensure(ok, || format!("q={q} n={n} k={k}"))?;
            }
        }
    }
    Ok(())
}

fn c10_discrepancy() -> Check {
    let (out, code) = cli(&["verify", "--q", "3", "--max-n", "4", "--compare-paper", "--format", "json"]);
    ensure(code == Some(0), || format!("exit status {code:?}"))?;
    let report: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let records = report["records"].as_array().ok_or("no records")?;
    let find = |check: &str, params: &str| {
        records
            .iter()
            .find(|r| r["check"] == check && r["params"] == params)
            .cloned()
            .ok_or_else(|| format!("missing {check} [{params}]"))
    };
    let verbatim = find("line_count_verbatim", "q=3 n=2 flavor=spacelike-in-dot")?;
    ensure(
        verbatim["status"] == "PaperDiscrepancy" && verbatim["actual"] == "1" && verbatim["expected"] == "2",
        || format!("verbatim record {verbatim}"),
    )?;
    let normative = find("bracket", "q=3 n=2")?;
    ensure(normative["status"] == "Pass" && normative["actual"] == "2", || format!("bracket record {normative}"))?;
    ensure(report["summary"]["fail"] == 0, || format!("summary {}", report["summary"]))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, u64, fn() -> Check); 10] = [
        ("Pascal triangle reproduction", 1, c1_triangle),
        ("oracle equivalence", 120, c2_oracle_equivalence),
        ("group orders", 10, c3_group_orders),
        ("quotient identity", 5, c4_quotient_identity),
        ("Mobius function", 10, c5_mobius),
        ("flag counts", 5, c6_flags),
        ("polynomial suite", 10, c7_polynomials),
        ("shape properties", u64::MAX, c8_shapes),
        ("asymptotic ratio", 1, c9_ratio),
        ("discrepancy detection", u64::MAX, c10_discrepancy),
    ];
    let mut failures = Vec::new();
    for (i, (name, limit_s, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        let result = result.and_then(|()| {
            ensure(took < Duration::from_secs(limit_s), || format!("took {took:?}, limit {limit_s} s"))
        });
        match &result {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({} ms)", i + 1, took.as_millis()),
            Err(e) => {
                println!("criterion {:>2} FAIL  {name}: {e}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}
