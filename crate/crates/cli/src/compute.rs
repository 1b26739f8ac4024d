use plethyra::hom::decompose_via_rank;
use plethyra::symfunc::SymmetricFunctions;
use plethyra::{BasisKind, Error, Integer, Limits, Partition, SchurVector};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Powersum,
    Bruteforce,
    Rank,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Powersum, Method::Bruteforce, Method::Rank];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Powersum => "powersum",
            Method::Bruteforce => "bruteforce",
            Method::Rank => "rank",
        }
    }

    /// Whether this method can evaluate `s_ν ∘ s_μ` at all under `limits`.
    pub fn applies_to(self, nu: &Partition, mu: &Partition, limits: &Limits) -> bool {
        match self {
            Method::Powersum => true,
            Method::Bruteforce => nu.size() * mu.size() <= limits.bruteforce_degree_cap,
            Method::Rank => (is_row(nu) || is_column(nu)) && (is_row(mu) || is_column(mu)),
        }
    }
}

pub fn is_row(p: &Partition) -> bool {
    p.len() <= 1
}

pub fn is_column(p: &Partition) -> bool {
    p.len() as u32 == p.size()
}

/// Full Schur expansion of `s_ν ∘ s_μ` by the chosen method.
pub fn plethysm(nu: &Partition, mu: &Partition, method: Method, limits: &Limits) -> Result<SchurVector, Error> {
    let degree = nu.size() * mu.size();
    if degree > limits.degree_cap {
        return Err(Error::SizeLimitExceeded {
            what: "plethysm degree",
            needed: degree as u128,
            limit: limits.degree_cap as u128,
        });
    }
    let engine = SymmetricFunctions::<Integer>::new(*limits);
    match method {
        Method::Powersum => engine.plethysm(nu, mu),
        Method::Bruteforce => engine.plethysm_bruteforce(nu, mu, degree as usize),
        Method::Rank => rank_plethysm(nu, mu, limits),
    }
}

/// Rank of semistandard homomorphism images. A column inner partition is
/// reduced to a row one by conjugating, twisting `ν` when `m` is odd.
fn rank_plethysm(nu: &Partition, mu: &Partition, limits: &Limits) -> Result<SchurVector, Error> {
    let m = mu.size();
    let conjugated = !is_row(mu);
    if conjugated && !is_column(mu) {
        return Err(Error::Unsupported(format!(
            "rank method needs a row or column inner partition, got {mu}"
        )));
    }
    let outer = if conjugated && m % 2 == 1 { nu.conjugate() } else { nu.clone() };
    let kind = if is_row(&outer) {
        BasisKind::Foulkes
    } else if is_column(&outer) {
        BasisKind::Signed
    } else {
        return Err(Error::Unsupported(format!(
            "rank method needs a row or column outer partition, got {nu}"
        )));
    };
    let dec = decompose_via_rank(m, outer.size(), kind, limits)?;
    if !conjugated {
        return Ok(dec);
    }
    Ok(dec.iter().map(|(l, c)| (l.conjugate(), c.clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn methods_agree_on_small_cases() {
        let limits = Limits::default();
        for (nu, mu) in [("2", "2"), ("1,1", "2"), ("2", "1,1"), ("1,1,1", "1,1"), ("3", "1,1"), ("2", "3")] {
            let (nu, mu) = (p(nu), p(mu));
            let reference = plethysm(&nu, &mu, Method::Powersum, &limits).unwrap();
            for method in [Method::Bruteforce, Method::Rank] {
                assert_eq!(plethysm(&nu, &mu, method, &limits).unwrap(), reference, "{nu} {mu} {method:?}");
            }
        }
    }

    #[test]
    fn rank_rejects_other_shapes() {
        let limits = Limits::default();
        let err = plethysm(&p("2,1"), &p("2"), Method::Rank, &limits).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
        assert!(!Method::Rank.applies_to(&p("1"), &p("2,1"), &limits));
    }

    #[test]
    fn degree_cap_is_checked_first() {
        let limits = Limits {
            degree_cap: 4,
            ..Limits::default()
        };
        let err = plethysm(&p("3"), &p("2"), Method::Rank, &limits).unwrap_err();
        assert!(matches!(err, Error::SizeLimitExceeded { .. }));
    }
}
