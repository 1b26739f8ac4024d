use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hom::{multiplicity_via_rank, BasisKind};
use crate::limits::Limits;
use crate::partition::Partition;
use crate::symfunc::SymmetricFunctions;

/// Which engine evaluates plethysm coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// Power-sum plethysm.
    Symfunc,
    /// Ranks of semistandard homomorphism images, conjugating through `ω` when
    /// the inner partition is a column.
    Rank,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Symfunc => "symfunc",
            Route::Rank => "rank",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symfunc" | "powersum" => Ok(Route::Symfunc),
            "rank" => Ok(Route::Rank),
            other => Err(Error::Unknown(format!("route {other}"))),
        }
    }
}

fn is_row(p: &Partition) -> bool {
    p.len() <= 1
}

fn is_column(p: &Partition) -> bool {
    p.parts().iter().all(|&x| x == 1)
}

/// Shared, thread-safe coefficient source for relation checks.
#[derive(Debug)]
pub struct Evaluator {
    route: Route,
    engine: SymmetricFunctions<BigInt>,
    ranks: RwLock<HashMap<(Partition, u32, u32, BasisKind), BigInt>>,
}

impl Evaluator {
    pub fn new(route: Route, limits: Limits) -> Self {
        Evaluator {
            route,
            engine: SymmetricFunctions::new(limits),
            ranks: RwLock::new(HashMap::new()),
        }
    }

    pub fn route(&self) -> Route {
        self.route
    }

    pub fn limits(&self) -> &Limits {
        self.engine.limits()
    }

    pub fn engine(&self) -> &SymmetricFunctions<BigInt> {
        &self.engine
    }

    /// `p^λ_{ν,μ}` by the configured route.
    pub fn coefficient(&self, lambda: &Partition, nu: &Partition, mu: &Partition) -> Result<BigInt> {
        match self.route {
            Route::Symfunc => self.engine.plethysm_coefficient(lambda, nu, mu),
            Route::Rank => self.rank_coefficient(lambda, nu, mu),
        }
    }

    fn rank_coefficient(&self, lambda: &Partition, nu: &Partition, mu: &Partition) -> Result<BigInt> {
        if lambda.size() != nu.size() * mu.size() {
            return Err(Error::SizeMismatch(format!(
                "|{lambda}| = {} but |{nu}|·|{mu}| = {}",
                lambda.size(),
                nu.size() * mu.size()
            )));
        }
        let degree = lambda.size();
        if degree > self.limits().degree_cap {
            return Err(Error::SizeLimitExceeded {
                what: "plethysm degree",
                needed: degree as u128,
                limit: self.limits().degree_cap as u128,
            });
        }
        let (lambda, nu) = if is_row(mu) {
            (lambda.clone(), nu.clone())
        } else if is_column(mu) {
            let nu = if mu.size() % 2 == 0 { nu.clone() } else { nu.conjugate() };
            (lambda.conjugate(), nu)
        } else {
            return Err(Error::Unsupported(format!("rank route needs a row or column inner partition, got {mu}")));
        };
        let kind = if is_row(&nu) {
            BasisKind::Foulkes
        } else if is_column(&nu) {
            BasisKind::Signed
        } else {
            return Err(Error::Unsupported(format!("rank route needs a row or column outer partition, got {nu}")));
        };
        let (m, n) = (mu.size(), nu.size());
        let key = (lambda.clone(), m, n, kind);
        if let Some(v) = self.ranks.read().expect("rank memo poisoned").get(&key) {
            return Ok(v.clone());
        }
        let value = BigInt::from(multiplicity_via_rank(&lambda, m, n, kind, self.limits())?);
        self.ranks.write().expect("rank memo poisoned").insert(key, value.clone());
        Ok(value)
    }
}
