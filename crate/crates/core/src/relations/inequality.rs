use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::relations::construct::{row_insert_shape, top_row_shape};
use crate::relations::eval::Evaluator;
use crate::relations::report::{Failure, Outcome, RelationReport};

/// The relations checkable by [`verify_inequality`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    /// `p^λ_{(n),(1^m)} ≤ p^{λ+(1^m)}_{(n+1),(1^m)}`.
    Thm1,
    /// `m` even, `ℓ(λ) < 2m`, `a ≥ 2`: `p^λ_{(n),(1^m)} ≤ p^{λ+(1^{am})}_{(n+a),(1^m)}`.
    Thm2,
    /// `m` even: `p^λ_{(n),(m)} ≤ p^{λ̃}_{(n+1),(m)}` with `m` inserted as a row.
    Thm2a,
    /// `m` odd: `p^λ_{(1^n),(m)} ≤ p^{λ̃}_{(1^{n+1}),(m)}`.
    Thm2b,
    /// `m` even, `λ₁ < 2m`, `a ≥ 2`: `p^λ_{(n),(m)} ≤ p^{(am,λ)}_{(n+a),(m)}`.
    Thm3,
    /// Positivity is preserved by `(λ, θ) ↦ λ+θ`.
    Ikenmeyer,
    /// `p^λ_{(n),(m)} ≤ p^{λ+(n)}_{(n),(m+1)}`.
    Brion,
    /// `p^λ_{(n),(m)} = p^{λ+(1^n)}_{(1^n),(m+1)}`.
    Newell1,
    /// `p^λ_{(1^n),(m)} = p^{λ+(1^n)}_{(n),(m+1)}`.
    Newell2,
    /// `m < n`: `p^λ_{(n),(m)} ≥ p^λ_{(m),(n)}`.
    Foulkes,
    /// Equality in [`Relation::Brion`] when `λ₂ ≤ m`.
    Dent,
}

impl Relation {
    pub const ALL: [Relation; 11] = [
        Relation::Thm1,
        Relation::Thm2,
        Relation::Thm2a,
        Relation::Thm2b,
        Relation::Thm3,
        Relation::Ikenmeyer,
        Relation::Brion,
        Relation::Newell1,
        Relation::Newell2,
        Relation::Foulkes,
        Relation::Dent,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Thm1 => "thm1",
            Relation::Thm2 => "thm2",
            Relation::Thm2a => "thm2a",
            Relation::Thm2b => "thm2b",
            Relation::Thm3 => "thm3",
            Relation::Ikenmeyer => "ikenmeyer",
            Relation::Brion => "brion",
            Relation::Newell1 => "newell1",
            Relation::Newell2 => "newell2",
            Relation::Foulkes => "foulkes",
            Relation::Dent => "dent",
        }
    }

    /// Largest degree touched by an instance with these parameters.
    fn top_degree(self, m: u32, n: u32, extra: u32) -> u32 {
        match self {
            Relation::Thm1 | Relation::Thm2a | Relation::Thm2b => m * (n + 1),
            Relation::Thm2 | Relation::Thm3 => m * (n + extra),
            Relation::Ikenmeyer => (m + extra) * n,
            Relation::Brion | Relation::Newell1 | Relation::Newell2 | Relation::Dent => (m + 1) * n,
            Relation::Foulkes => m * n,
        }
    }

    /// The range of the extra parameter (`a` or `k`), if the relation has one.
    fn extra_range(self) -> Option<u32> {
        match self {
            Relation::Thm2 | Relation::Thm3 => Some(2),
            Relation::Ikenmeyer => Some(1),
            _ => None,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Relation::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::Unknown(format!("relation {s}")))
    }
}

/// Bounds on the instances of a relation check. Every instance has all of
/// its degrees at most `max_degree`; `m`, `n` and `extra` (`a` for the
/// top-row relations, `k` for Ikenmeyer) may be pinned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Grid {
    pub max_degree: u32,
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub extra: Option<u32>,
}

impl Grid {
    pub fn up_to(max_degree: u32) -> Self {
        Grid {
            max_degree,
            ..Grid::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Instance {
    m: u32,
    n: u32,
    extra: u32,
    lambda: Partition,
    theta: Option<Partition>,
}

impl Instance {
    fn params(&self, relation: Relation) -> Map<String, Value> {
        let mut p = Map::new();
        p.insert("lambda".into(), json!(self.lambda.to_string()));
        p.insert("m".into(), json!(self.m));
        p.insert("n".into(), json!(self.n));
        match relation {
            Relation::Thm2 | Relation::Thm3 => {
                p.insert("a".into(), json!(self.extra));
            }
            Relation::Ikenmeyer => {
                p.insert("k".into(), json!(self.extra));
                if let Some(theta) = &self.theta {
                    p.insert("theta".into(), json!(theta.to_string()));
                }
            }
            _ => {}
        }
        p
    }
}

/// Instances in grid order: ascending `mn`, then `m`, then the extra
/// parameter, then `λ` (and `θ`) in decreasing lexicographic order.
fn instances(relation: Relation, grid: &Grid) -> Vec<Instance> {
    let mut out = Vec::new();
    let max = grid.max_degree;
    for base in 1..=max {
        for m in 1..=base {
            if base % m != 0 || grid.m.is_some_and(|x| x != m) {
                continue;
            }
            let n = base / m;
            if grid.n.is_some_and(|x| x != n) {
                continue;
            }
            let extras: Vec<u32> = match relation.extra_range() {
                Some(lo) => (lo..=max).filter(|&e| relation.top_degree(m, n, e) <= max).collect(),
                None => vec![0],
            };
            for extra in extras {
                if relation.top_degree(m, n, extra) > max || grid.extra.is_some_and(|x| x != extra) {
                    continue;
                }
                for lambda in partitions(base) {
                    if relation == Relation::Ikenmeyer {
                        for theta in partitions(extra * n) {
                            out.push(Instance {
                                m,
                                n,
                                extra,
                                lambda: lambda.clone(),
                                theta: Some(theta),
                            });
                        }
                    } else {
                        out.push(Instance {
                            m,
                            n,
                            extra,
                            lambda,
                            theta: None,
                        });
                    }
                }
            }
        }
    }
    out
}

fn row(n: u32) -> Partition {
    Partition::row(n)
}

fn column(n: u32) -> Partition {
    Partition::column(n)
}

fn fails(relation: Relation, inst: &Instance, check: &str, lhs: BigInt, rhs: BigInt) -> Failure {
    let mut params = inst.params(relation);
    params.insert("check".into(), json!(check));
    Failure { params, lhs, rhs }
}

fn evaluate(relation: Relation, inst: &Instance, ev: &Evaluator) -> Result<Outcome> {
    let Instance { m, n, extra: a, lambda, .. } = inst;
    let (m, n, a) = (*m, *n, *a);
    let c = |l: &Partition, nu: Partition, mu: Partition| ev.coefficient(l, &nu, &mu);
    let le = |lhs: BigInt, rhs: BigInt| -> Outcome {
        if lhs <= rhs {
            Outcome::Holds
        } else {
            Outcome::Fails(fails(relation, inst, "inequality", lhs, rhs))
        }
    };
    let eq = |lhs: BigInt, rhs: BigInt| -> Outcome {
        if lhs == rhs {
            Outcome::Holds
        } else {
            Outcome::Fails(fails(relation, inst, "equality", lhs, rhs))
        }
    };
    let outcome = match relation {
        Relation::Thm1 => {
            let lhs = c(lambda, row(n), column(m))?;
            let rhs = c(&lambda.add(&column(m)), row(n + 1), column(m))?;
            // the same two numbers through ω, in the row-insertion form
            let (nu, nu_next) = if m % 2 == 0 { (row(n), row(n + 1)) } else { (column(n), column(n + 1)) };
            let dual = lambda.conjugate();
            let lhs_dual = c(&dual, nu, row(m))?;
            let rhs_dual = c(&row_insert_shape(&dual, m), nu_next, row(m))?;
            let mut failures = Vec::new();
            if lhs != lhs_dual {
                failures.push(fails(relation, inst, "omega-link-lhs", lhs.clone(), lhs_dual));
            }
            if rhs != rhs_dual {
                failures.push(fails(relation, inst, "omega-link-rhs", rhs.clone(), rhs_dual));
            }
            match le(lhs, rhs) {
                Outcome::Fails(f) => failures.push(f),
                _ => {}
            }
            if failures.is_empty() {
                Outcome::Holds
            } else {
                Outcome::FailsMany(failures)
            }
        }
        Relation::Thm2 => {
            if m % 2 != 0 || lambda.len() as u32 >= 2 * m {
                return Ok(Outcome::Skipped);
            }
            let lhs = c(lambda, row(n), column(m))?;
            let rhs = c(&lambda.add(&column(a * m)), row(n + a), column(m))?;
            let dual = lambda.conjugate();
            let lhs_dual = c(&dual, row(n), row(m))?;
            let rhs_dual = c(&top_row_shape(&dual, m, a)?, row(n + a), row(m))?;
            let mut failures = Vec::new();
            if lhs != lhs_dual {
                failures.push(fails(relation, inst, "omega-link-lhs", lhs.clone(), lhs_dual));
            }
            if rhs != rhs_dual {
                failures.push(fails(relation, inst, "omega-link-rhs", rhs.clone(), rhs_dual));
            }
            if let Outcome::Fails(f) = le(lhs, rhs) {
                failures.push(f);
            }
            if failures.is_empty() {
                Outcome::Holds
            } else {
                Outcome::FailsMany(failures)
            }
        }
        Relation::Thm2a => {
            if m % 2 != 0 {
                return Ok(Outcome::Skipped);
            }
            le(c(lambda, row(n), row(m))?, c(&row_insert_shape(lambda, m), row(n + 1), row(m))?)
        }
        Relation::Thm2b => {
            if m % 2 == 0 {
                return Ok(Outcome::Skipped);
            }
            le(
                c(lambda, column(n), row(m))?,
                c(&row_insert_shape(lambda, m), column(n + 1), row(m))?,
            )
        }
        Relation::Thm3 => {
            if m % 2 != 0 || lambda.first() >= 2 * m {
                return Ok(Outcome::Skipped);
            }
            le(c(lambda, row(n), row(m))?, c(&top_row_shape(lambda, m, a)?, row(n + a), row(m))?)
        }
        Relation::Ikenmeyer => {
            let theta = inst.theta.as_ref().expect("ikenmeyer instances carry θ");
            let x = c(lambda, row(n), row(m))?;
            if !x.is_positive() {
                return Ok(Outcome::Skipped);
            }
            let y = c(theta, row(n), row(a))?;
            if !y.is_positive() {
                return Ok(Outcome::Skipped);
            }
            let z = c(&lambda.add(theta), row(n), row(m + a))?;
            if z.is_positive() {
                Outcome::Holds
            } else {
                Outcome::Fails(fails(relation, inst, "positivity", z, BigInt::from(1)))
            }
        }
        Relation::Brion => le(c(lambda, row(n), row(m))?, c(&lambda.add(&row(n)), row(n), row(m + 1))?),
        Relation::Dent => {
            if lambda.part(1) > m {
                return Ok(Outcome::Skipped);
            }
            eq(c(lambda, row(n), row(m))?, c(&lambda.add(&row(n)), row(n), row(m + 1))?)
        }
        Relation::Newell1 => eq(
            c(lambda, row(n), row(m))?,
            c(&lambda.add(&column(n)), column(n), row(m + 1))?,
        ),
        Relation::Newell2 => eq(
            c(lambda, column(n), row(m))?,
            c(&lambda.add(&column(n)), row(n), row(m + 1))?,
        ),
        Relation::Foulkes => {
            if m >= n {
                return Ok(Outcome::Skipped);
            }
            let lhs = c(lambda, row(n), row(m))?;
            let rhs = c(lambda, row(m), row(n))?;
            if lhs >= rhs {
                Outcome::Holds
            } else {
                Outcome::Fails(fails(relation, inst, "inequality", lhs, rhs))
            }
        }
    };
    Ok(outcome)
}

/// Evaluates every instance in parallel and folds the outcomes in grid order.
/// Instances that exceed an enumeration budget are counted as skipped.
pub(crate) fn run_instances<I: Sync>(
    name: &str,
    items: &[I],
    eval: impl Fn(&I) -> Result<Outcome> + Sync,
) -> Result<RelationReport> {
    let outcomes: Vec<Result<Outcome>> = items.par_iter().map(&eval).collect();
    let mut report = RelationReport::new(name);
    for outcome in outcomes {
        match outcome {
            Ok(o) => report.record(o),
            Err(Error::SizeLimitExceeded { .. }) => report.record(Outcome::Skipped),
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Checks a relation on every instance of the grid.
///
/// Fails with [`Error::SizeLimitExceeded`] when the grid reaches past the
/// evaluator's degree cap; individual instances over budget are skipped.
pub fn verify_inequality(relation: Relation, grid: &Grid, ev: &Evaluator) -> Result<RelationReport> {
    let cap = ev.limits().degree_cap;
    if grid.max_degree > cap {
        return Err(Error::SizeLimitExceeded {
            what: "grid degree",
            needed: grid.max_degree as u128,
            limit: cap as u128,
        });
    }
    let items = instances(relation, grid);
    run_instances(relation.as_str(), &items, |inst| evaluate(relation, inst, ev))
}
