use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::relations::eval::Evaluator;
use crate::relations::inequality::run_instances;
use crate::relations::report::{Failure, Outcome, RelationReport};

/// The open conjectures on general twisted Foulkes modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conjecture {
    /// `p^λ_{ν,(m)} ≤ p^{λ+(n)}_{ν,(m+1)}`.
    C71,
    /// `p^λ_{ν,(m)} = p^{λ+(1^n)}_{ν',(m+1)}`.
    C72,
    /// `p^λ_{ν,(m)} = p^{λ+(2^n)}_{ν,(m+2)}`.
    C73,
}

impl Conjecture {
    pub const ALL: [Conjecture; 3] = [Conjecture::C71, Conjecture::C72, Conjecture::C73];

    pub fn as_str(self) -> &'static str {
        match self {
            Conjecture::C71 => "7.1",
            Conjecture::C72 => "7.2",
            Conjecture::C73 => "7.3",
        }
    }

    fn step(self) -> u32 {
        match self {
            Conjecture::C71 | Conjecture::C72 => 1,
            Conjecture::C73 => 2,
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Conjecture::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Unknown(format!("conjecture {s}")))
    }
}

struct Instance {
    nu: Partition,
    m: u32,
    lambda: Partition,
}

fn evaluate(conj: Conjecture, inst: &Instance, ev: &Evaluator) -> Result<Outcome> {
    let Instance { nu, m, lambda } = inst;
    let n = nu.size();
    let engine = ev.engine();
    let lhs = engine.plethysm_coefficient(lambda, nu, &Partition::row(*m))?;
    let (holds, rhs) = match conj {
        Conjecture::C71 => {
            let rhs = engine.plethysm_coefficient(&lambda.add(&Partition::row(n)), nu, &Partition::row(m + 1))?;
            (lhs <= rhs, rhs)
        }
        Conjecture::C72 => {
            let rhs = engine.plethysm_coefficient(
                &lambda.add(&Partition::column(n)),
                &nu.conjugate(),
                &Partition::row(m + 1),
            )?;
            (lhs == rhs, rhs)
        }
        Conjecture::C73 => {
            let rhs = engine.plethysm_coefficient(
                &lambda.add(&Partition::rectangle(2, n)),
                nu,
                &Partition::row(m + 2),
            )?;
            (lhs == rhs, rhs)
        }
    };
    if holds {
        return Ok(Outcome::Holds);
    }
    let mut params = Map::<String, Value>::new();
    params.insert("lambda".into(), json!(lambda.to_string()));
    params.insert("nu".into(), json!(nu.to_string()));
    params.insert("m".into(), json!(m));
    Ok(Outcome::Fails(Failure { params, lhs, rhs }))
}

/// Exhaustive scan over `ν ⊢ n`, `m ≥ 1`, `λ ⊢ mn` with both sides of degree
/// at most `max_degree`, restricted to the `ν` accepted by `keep`.
pub fn scan_conjecture_filtered(
    conj: Conjecture,
    max_degree: u32,
    ev: &Evaluator,
    keep: impl Fn(&Partition) -> bool,
) -> Result<RelationReport> {
    let cap = ev.limits().degree_cap;
    if max_degree > cap {
        return Err(Error::SizeLimitExceeded {
            what: "scan degree",
            needed: max_degree as u128,
            limit: cap as u128,
        });
    }
    let mut items = Vec::new();
    for n in 1..=max_degree {
        for m in 1..=max_degree {
            if (m + conj.step()) * n > max_degree {
                break;
            }
            for nu in partitions(n).into_iter().filter(|nu| keep(nu)) {
                for lambda in partitions(m * n) {
                    items.push(Instance {
                        nu: nu.clone(),
                        m,
                        lambda,
                    });
                }
            }
        }
    }
    items.sort_by(|x, y| {
        (x.m * x.nu.size())
            .cmp(&(y.m * y.nu.size()))
            .then(x.m.cmp(&y.m))
            .then(y.nu.cmp(&x.nu))
            .then(y.lambda.cmp(&x.lambda))
    });
    run_instances(conj.as_str(), &items, |inst| evaluate(conj, inst, ev))
}

/// Exhaustive scan of a conjecture over all `ν`.
pub fn scan_conjecture(conj: Conjecture, max_degree: u32, ev: &Evaluator) -> Result<RelationReport> {
    scan_conjecture_filtered(conj, max_degree, ev, |_| true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;
    use crate::relations::eval::Route;
    use crate::relations::report::Status;

    #[test]
    fn small_scans_verify() {
        let ev = Evaluator::new(Route::Symfunc, Limits::default());
        for c in Conjecture::ALL {
            let r = scan_conjecture(c, 6, &ev).unwrap();
            assert_eq!(r.status(), Status::Verified, "{c}: {:?}", r.failures);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn ids_parse() {
        assert_eq!("7.2".parse::<Conjecture>().unwrap(), Conjecture::C72);
        assert!("7.4".parse::<Conjecture>().is_err());
    }
}
