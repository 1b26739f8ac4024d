//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

#[allow(dead_code)]
mod common;

use std::collections::{BTreeMap, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{p, standard_count};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use plethyra::hom::{decompose_via_rank, multiplicity_via_rank, project_foulkes, project_signed, theta_on_generator};
use plethyra::relations::{
    scan_conjecture, verify_coeff_relations_thm2, verify_coeff_relations_thm3, verify_inequality, Conjecture,
    Evaluator, Grid, Relation, RelationReport, Route, Status,
};
use plethyra::symfunc::{SchurVec, SymmetricFunctions};
use plethyra::{partitions, BasisKind, HomImage, LabellingTableau, Limits, Partition, Tableau};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verified(report: &RelationReport) -> Check {
    ensure(report.status() == Status::Verified, || {
        format!(
            "{}: status {} (checked {}, skipped {}, failures {})",
            report.relation,
            report.status().as_str(),
            report.checked,
            report.skipped,
            report.failures.len()
        )
    })
}

fn tab(rows: &[&[u32]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn worked_example() -> Check {
    let big_t = tab(&[&[1, 1, 2], &[2]]);
    let t = LabellingTableau::new(vec![vec![1, 2, 3], vec![4]]).unwrap();
    let el = theta_on_generator::<i64>(&big_t, &t, 1000).map_err(|e| e.to_string())?;
    let expected: BTreeMap<Tableau, i64> = [
        (tab(&[&[1, 1, 2], &[2]]), 1),
        (tab(&[&[1, 2, 1], &[2]]), 1),
        (tab(&[&[2, 1, 2], &[1]]), -1),
        (tab(&[&[2, 2, 1], &[1]]), -1),
    ]
    .into_iter()
    .collect();
    ensure(el.terms() == &expected, || format!("theta image {:?}", el.terms()))?;
    let foulkes = project_foulkes(&el, &t);
    ensure(foulkes.is_zero(), || format!("Foulkes projection {:?}", foulkes.terms()))?;
    let mut signed = HomImage::zero(BasisKind::Signed);
    signed.add_term(vec![vec![1, 2], vec![3, 4]], 2);
    signed.add_term(vec![vec![1, 3], vec![2, 4]], 2);
    let got = project_signed(&el, &t);
    ensure(got == signed, || format!("signed projection {:?}", got.terms()))
}

fn signed_two_two() -> Check {
    let limits = Limits::default();
    let mult = multiplicity_via_rank(&p("3,1"), 2, 2, BasisKind::Signed, &limits).map_err(|e| e.to_string())?;
    ensure(mult == 1, || format!("rank multiplicity {mult}"))?;
    let dec = decompose_via_rank(2, 2, BasisKind::Signed, &limits).map_err(|e| e.to_string())?;
    ensure(dec == SchurVec::basis(p("3,1")), || format!("signed decomposition {dec:?}"))?;
    let engine = SymmetricFunctions::<BigInt>::new(limits);
    let c = engine
        .plethysm_coefficient(&p("3,1"), &p("2"), &p("2"))
        .map_err(|e| e.to_string())?;
    ensure(c.is_zero(), || format!("Foulkes coefficient {c}"))
}

fn three_methods() -> Check {
    let limits = Limits::default();
    let engine = SymmetricFunctions::<BigInt>::new(limits);
    for size in 1..=8u32 {
        for m in 1..=size {
            if size % m != 0 {
                continue;
            }
            let n = size / m;
            for (nu, kind) in [(Partition::row(n), BasisKind::Foulkes), (Partition::column(n), BasisKind::Signed)] {
                let inner = Partition::row(m);
                let ps = engine.plethysm(&nu, &inner).map_err(|e| e.to_string())?;
                let bf = engine
                    .plethysm_bruteforce(&nu, &inner, size as usize)
                    .map_err(|e| e.to_string())?;
                let rk = decompose_via_rank(m, n, kind, &limits).map_err(|e| e.to_string())?;
                for lambda in partitions(size) {
                    let (a, b, c) = (ps.coefficient(&lambda), bf.coefficient(&lambda), rk.coefficient(&lambda));
                    ensure(a == b && b == c, || {
                        format!("nu={nu} m={m} lambda={lambda}: powersum {a}, bruteforce {b}, rank {c}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn theorem_suite() -> Check {
    let relations = [Relation::Thm1, Relation::Thm2, Relation::Thm2a, Relation::Thm2b, Relation::Thm3];
    for (route, degree) in [(Route::Symfunc, 10), (Route::Rank, 8)] {
        let ev = Evaluator::new(route, Limits::default());
        for relation in relations {
            let report = verify_inequality(relation, &Grid::up_to(degree), &ev).map_err(|e| e.to_string())?;
            verified(&report).map_err(|e| format!("{} route: {e}", route.as_str()))?;
        }
    }
    Ok(())
}

fn coefficient_identities() -> Check {
    let limits = Limits::default();
    verified(&verify_coeff_relations_thm2(8, &limits).map_err(|e| e.to_string())?)?;
    verified(&verify_coeff_relations_thm3(8, &limits).map_err(|e| e.to_string())?)
}

fn classical_relations() -> Check {
    let ev = Evaluator::new(Route::Symfunc, Limits::default());
    for relation in [
        Relation::Newell1,
        Relation::Newell2,
        Relation::Brion,
        Relation::Foulkes,
        Relation::Ikenmeyer,
        Relation::Dent,
    ] {
        verified(&verify_inequality(relation, &Grid::up_to(10), &ev).map_err(|e| e.to_string())?)?;
    }
    Ok(())
}

fn omega_identity() -> Check {
    let engine = SymmetricFunctions::<BigInt>::new(Limits::default());
    for m in 1..=8u32 {
        for n in 1..=8 / m {
            for mu in partitions(m) {
                for nu in partitions(n) {
                    let nu_dual = if m % 2 == 0 { nu.clone() } else { nu.conjugate() };
                    let lhs = engine.plethysm(&nu, &mu).map_err(|e| e.to_string())?;
                    let rhs = engine.plethysm(&nu_dual, &mu.conjugate()).map_err(|e| e.to_string())?;
                    for lambda in partitions(m * n) {
                        let (a, b) = (lhs.coefficient(&lambda), rhs.coefficient(&lambda.conjugate()));
                        ensure(a == b, || format!("lambda={lambda} nu={nu} mu={mu}: {a} vs {b}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

fn dimension_sum() -> Check {
    let engine = SymmetricFunctions::<BigInt>::new(Limits::default());
    let mut memo = HashMap::new();
    for m in 1..=8u32 {
        for n in 1..=8 / m {
            let index = factorial(m * n) / (factorial(m).pow(n) * factorial(n));
            for nu in partitions(n) {
                let pl = engine.plethysm(&nu, &Partition::row(m)).map_err(|e| e.to_string())?;
                let total: BigInt = pl
                    .iter()
                    .map(|(lambda, c)| c * BigInt::from(standard_count(lambda.parts(), &mut memo)))
                    .sum();
                let expected = &index * BigInt::from(standard_count(nu.parts(), &mut memo));
                ensure(total == expected, || format!("nu={nu} m={m}: {total} vs {expected}"))?;
            }
        }
    }
    Ok(())
}

fn conjecture_scans() -> Check {
    let ev = Evaluator::new(Route::Symfunc, Limits::default());
    for conj in [Conjecture::C71, Conjecture::C72, Conjecture::C73] {
        let report = scan_conjecture(conj, 8, &ev).map_err(|e| e.to_string())?;
        if !report.failures.is_empty() {
            eprintln!("refutation found for conjecture {}; manual review required:", conj.as_str());
            for f in &report.failures {
                eprintln!("  {}", f.to_json());
            }
        }
        verified(&report)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Duration, fn() -> Check); 9] = [
        (1, "worked homomorphism example", Duration::from_secs(1), worked_example),
        (2, "signed Foulkes module at m=n=2", Duration::from_secs(1), signed_two_two),
        (3, "three-method agreement", Duration::from_secs(300), three_methods),
        (4, "theorem suite", Duration::from_secs(600), theorem_suite),
        (5, "coefficient relations", Duration::from_secs(300), coefficient_identities),
        (6, "classical relations", Duration::from_secs(600), classical_relations),
        (7, "omega involution", Duration::from_secs(600), omega_identity),
        (8, "dimension sum", Duration::from_secs(600), dimension_sum),
        (9, "conjecture scans", Duration::from_secs(600), conjecture_scans),
    ];
    let mut all_passed = true;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
        });
        match outcome {
            Ok(()) => println!("criterion {id}: PASS  {name} ({elapsed:.2?})"),
            Err(why) => {
                all_passed = false;
                println!("criterion {id}: FAIL  {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
