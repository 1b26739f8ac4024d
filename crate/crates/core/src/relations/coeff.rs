//! The coefficient identities `𝒞̃ = (d+1)·𝒞` (row insertion) and
//! `𝒞̃ = a!(d+1)·𝒞` (top row), checked class by class on projected images.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::hom::{coefficient_of, project, representative, theta_on_generator_of_type, BasisKind, Blocks, HomImage};
use crate::limits::Limits;
use crate::partition::{partitions, Composition, Partition};
use crate::relations::construct::{build_row_insert, build_top_row, count_full_prefix_digits, theorem_q};
use crate::relations::inequality::run_instances;
use crate::relations::report::{Failure, Outcome, RelationReport};
use crate::tableau::{enumerate_semistandard, LabellingTableau, Tableau};

pub const ROW_INSERT_ID: &str = "coeff-thm2";
pub const TOP_ROW_ID: &str = "coeff-thm3";

fn image(tableau: &Tableau, t: &LabellingTableau, m: u32, n: u32, kind: BasisKind, limits: &Limits) -> Result<HomImage<i64>> {
    let el = theta_on_generator_of_type::<i64>(tableau, t, Composition::rectangular(m, n), limits.enum_budget)?;
    Ok(project(&el, t, kind))
}

fn factorial(a: u32) -> i64 {
    (1..=a as i64).product()
}

/// Source classes to test: the support of the source image, plus every class
/// of the target image that comes from a source class by the construction.
fn classes(source: &HomImage<i64>, target: &HomImage<i64>, added: &[Vec<u32>]) -> BTreeSet<Blocks> {
    let mut out: BTreeSet<Blocks> = source.terms().keys().cloned().collect();
    for key in target.terms().keys() {
        if added.iter().all(|b| key.contains(b)) {
            out.insert(key.iter().filter(|b| !added.contains(b)).cloned().collect());
        }
    }
    out
}

struct Check<'a> {
    lambda: &'a Partition,
    m: u32,
    n: u32,
    a: Option<u32>,
    kind: BasisKind,
}

impl Check<'_> {
    fn params(&self, tableau: &Tableau, class: &Blocks, d: usize) -> Map<String, Value> {
        let mut p = Map::new();
        p.insert("lambda".into(), json!(self.lambda.to_string()));
        p.insert("m".into(), json!(self.m));
        p.insert("n".into(), json!(self.n));
        if let Some(a) = self.a {
            p.insert("a".into(), json!(a));
        }
        p.insert("kind".into(), json!(self.kind.as_str()));
        p.insert("tableau".into(), json!(tableau.to_string()));
        p.insert("class".into(), json!(class));
        p.insert("d".into(), json!(d));
        p
    }
}

/// Compares, for one source tableau, the coefficient of every relevant class
/// `R` in `(e_t)θ_T` with that of `R̃` in `(e_{t̃})θ_{T̃}`.
fn check_tableau(
    check: &Check,
    tableau: &Tableau,
    t: &LabellingTableau,
    construct: &dyn Fn(&Tableau) -> Result<(Tableau, LabellingTableau)>,
    new_blocks: u32,
    limits: &Limits,
) -> Result<Outcome> {
    let (m, n) = (check.m, check.n);
    let (big_t_tilde, t_tilde) = construct(tableau)?;
    let source = image(tableau, t, m, n, check.kind, limits)?;
    let target = image(&big_t_tilde, &t_tilde, m, n + new_blocks, check.kind, limits)?;
    let mn = m * n;
    let added: Vec<Vec<u32>> = match check.a {
        None => vec![(mn + 1..=mn + m).collect()],
        Some(a) => (0..a).map(|g| (mn + g * m + 1..=mn + (g + 1) * m).collect()).collect(),
    };
    let scale = check.a.map_or(1, factorial);
    let mut failures = Vec::new();
    for class in classes(&source, &target, &added) {
        let r = representative(&class, t);
        let (r_tilde, _) = construct(&r)?;
        let d = count_full_prefix_digits(&r, m, n);
        let before = coefficient_of(&source, &r, t, n as usize);
        let after = coefficient_of(&target, &r_tilde, &t_tilde, (n + new_blocks) as usize);
        let expected = scale * (d as i64 + 1) * before;
        if after != expected {
            failures.push(Failure {
                params: check.params(tableau, &class, d),
                lhs: BigInt::from(after),
                rhs: BigInt::from(expected),
            });
        }
    }
    Ok(if failures.is_empty() {
        Outcome::Holds
    } else {
        Outcome::FailsMany(failures)
    })
}

/// The row-insertion identity for one `(λ, m, n)`, in the mode fixed by the
/// parity of `m`: Foulkes for even `m`, signed for odd `m`.
pub fn verify_coeff_relation_thm2(lambda: &Partition, m: u32, n: u32, limits: &Limits) -> Result<RelationReport> {
    let kind = if m % 2 == 0 { BasisKind::Foulkes } else { BasisKind::Signed };
    verify_coeff_relation_thm2_with(lambda, m, n, kind, limits)
}

/// As [`verify_coeff_relation_thm2`] with the mode given explicitly; a mode
/// that does not match the parity of `m` is a [`Error::HypothesisViolated`].
pub fn verify_coeff_relation_thm2_with(
    lambda: &Partition,
    m: u32,
    n: u32,
    kind: BasisKind,
    limits: &Limits,
) -> Result<RelationReport> {
    if m == 0 {
        return Err(Error::HypothesisViolated("m must be positive".into()));
    }
    let wanted = if m % 2 == 0 { BasisKind::Foulkes } else { BasisKind::Signed };
    if kind != wanted {
        return Err(Error::HypothesisViolated(format!("{kind} mode needs m of the other parity, got m = {m}")));
    }
    if lambda.size() != m * n {
        return Err(Error::SizeMismatch(format!("|{lambda}| = {} but mn = {}", lambda.size(), m * n)));
    }
    let q = theorem_q(lambda, m);
    let t = LabellingTableau::row_reading(lambda);
    let check = Check {
        lambda,
        m,
        n,
        a: None,
        kind,
    };
    let construct = |x: &Tableau| build_row_insert(x, &t, m, n, q);
    let sources = enumerate_semistandard(lambda, &Composition::rectangular(m, n));
    run_instances(ROW_INSERT_ID, &sources, |tableau| {
        check_tableau(&check, tableau, &t, &construct, 1, limits)
    })
}

/// The top-row identity for one `(λ, m, n, a)`; needs `m` even, `λ₁ < 2m`, `a ≥ 2`.
pub fn verify_coeff_relation_thm3(
    lambda: &Partition,
    m: u32,
    n: u32,
    a: u32,
    limits: &Limits,
) -> Result<RelationReport> {
    if m == 0 || m % 2 != 0 {
        return Err(Error::HypothesisViolated(format!("m must be even and positive, got {m}")));
    }
    if lambda.first() >= 2 * m {
        return Err(Error::HypothesisViolated(format!("λ₁ = {} is not below 2m = {}", lambda.first(), 2 * m)));
    }
    if a < 2 {
        return Err(Error::HypothesisViolated(format!("a = {a} but a ≥ 2 is required")));
    }
    if lambda.size() != m * n {
        return Err(Error::SizeMismatch(format!("|{lambda}| = {} but mn = {}", lambda.size(), m * n)));
    }
    let t = LabellingTableau::row_reading(lambda);
    let check = Check {
        lambda,
        m,
        n,
        a: Some(a),
        kind: BasisKind::Foulkes,
    };
    let construct = |x: &Tableau| build_top_row(x, &t, m, n, a);
    let sources = enumerate_semistandard(lambda, &Composition::rectangular(m, n));
    run_instances(TOP_ROW_ID, &sources, |tableau| {
        check_tableau(&check, tableau, &t, &construct, a, limits)
    })
}

/// Every `(λ, m, n)` with `m, n ≥ 1` and `m(n+1) ≤ max_degree`.
pub fn verify_coeff_relations_thm2(max_degree: u32, limits: &Limits) -> Result<RelationReport> {
    let mut report = RelationReport::new(ROW_INSERT_ID);
    for m in 1..=max_degree {
        for n in 1..=max_degree {
            if m * (n + 1) > max_degree {
                break;
            }
            for lambda in partitions(m * n) {
                report.merge(verify_coeff_relation_thm2(&lambda, m, n, limits)?);
            }
        }
    }
    Ok(report)
}

/// Every in-hypothesis `(λ, m, n, a)` with `m(n+a) ≤ max_degree`.
pub fn verify_coeff_relations_thm3(max_degree: u32, limits: &Limits) -> Result<RelationReport> {
    let mut report = RelationReport::new(TOP_ROW_ID);
    for m in (2..=max_degree).step_by(2) {
        for n in 1..=max_degree {
            for a in 2..=max_degree {
                if m * (n + a) > max_degree {
                    break;
                }
                for lambda in partitions(m * n).into_iter().filter(|l| l.first() < 2 * m) {
                    report.merge(verify_coeff_relation_thm3(&lambda, m, n, a, limits)?);
                }
            }
        }
    }
    Ok(report)
}
