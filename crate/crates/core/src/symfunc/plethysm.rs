use std::collections::HashMap;
use std::sync::RwLock;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{partitions, Partition};
use crate::scalar::{to_integer, Scalar};
use crate::symfunc::character::{centralizer_order, CharacterTable};
use crate::symfunc::poly::{decompose_symmetric, schur_over_alphabet, MultivariatePoly};
use crate::symfunc::vector::{PowerSumVec, SchurVec};

/// The symmetric-function engine: basis changes, plethysm by the power-sum
/// substitution rule, and the independent monomial-substitution oracle.
///
/// Plethysm results are memoised per `(outer, inner)`. The engine is `Sync`
/// and may be shared across worker threads.
#[derive(Debug)]
pub struct SymmetricFunctions<S: Scalar> {
    limits: Limits,
    characters: CharacterTable,
    plethysms: RwLock<HashMap<(Partition, Partition), SchurVec<S>>>,
}

impl<S: Scalar> Default for SymmetricFunctions<S> {
    fn default() -> Self {
        Self::new(Limits::default())
    }
}

impl<S: Scalar> SymmetricFunctions<S> {
    pub fn new(limits: Limits) -> Self {
        SymmetricFunctions {
            limits,
            characters: CharacterTable::new(),
            plethysms: RwLock::new(HashMap::new()),
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn character(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.characters.value(lambda, rho)
    }

    /// `s_λ = Σ_ρ χ^λ(ρ) p_ρ / z_ρ`, extended linearly.
    pub fn schur_to_powersum(&self, s: &SchurVec<S>) -> PowerSumVec<S> {
        let mut out = PowerSumVec::new();
        for (lambda, c) in s.iter() {
            for rho in partitions(lambda.size()) {
                let chi = self.character(lambda, &rho);
                if chi == 0 {
                    continue;
                }
                let coeff = Ratio::new(
                    c.clone() * S::from_int(chi),
                    S::from_count(centralizer_order(&rho)),
                );
                out.add_term(rho, coeff);
            }
        }
        out
    }

    /// Inverse change of basis via `p_ρ = Σ_λ χ^λ(ρ) s_λ`.
    pub fn powersum_to_schur(&self, v: &PowerSumVec<S>) -> Result<SchurVec<S>> {
        let mut degrees: Vec<u32> = v.iter().map(|(rho, _)| rho.size()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let mut out = SchurVec::new();
        for d in degrees {
            for lambda in partitions(d) {
                let mut total = Ratio::from_integer(S::zero());
                for (rho, c) in v.iter().filter(|(rho, _)| rho.size() == d) {
                    let chi = self.character(&lambda, rho);
                    if chi != 0 {
                        total = total + c.clone() * Ratio::from_integer(S::from_int(chi));
                    }
                }
                let coeff = to_integer(&total)
                    .ok_or_else(|| Error::NonIntegralResult(format!("s({lambda}) has coefficient {total}")))?;
                out.add_term(lambda, coeff);
            }
        }
        Ok(out)
    }

    /// `p_k ∘ s_μ = Σ_σ χ^μ(σ)/z_σ p_{kσ}`.
    fn power_plethysm(&self, k: u32, inner: &Partition) -> PowerSumVec<S> {
        let mut out = PowerSumVec::new();
        for sigma in partitions(inner.size()) {
            let chi = self.character(inner, &sigma);
            if chi == 0 {
                continue;
            }
            let coeff = Ratio::new(S::from_int(chi), S::from_count(centralizer_order(&sigma)));
            out.add_term(sigma.scale(k), coeff);
        }
        out
    }

    fn check_degree(&self, outer: &Partition, inner: &Partition, cap: u32) -> Result<()> {
        let degree = outer.size() as u128 * inner.size() as u128;
        if degree > cap as u128 {
            return Err(Error::SizeLimitExceeded {
                what: "plethysm degree",
                needed: degree,
                limit: cap as u128,
            });
        }
        Ok(())
    }

    /// `s_ν ∘ s_μ` in the Schur basis, computed in the power-sum basis with
    /// `p_k ∘ p_j = p_{kj}` and `p_k ∘ -` a ring endomorphism.
    pub fn plethysm(&self, outer: &Partition, inner: &Partition) -> Result<SchurVec<S>> {
        self.check_degree(outer, inner, self.limits.degree_cap)?;
        let key = (outer.clone(), inner.clone());
        if let Some(v) = self.plethysms.read().expect("plethysm memo poisoned").get(&key) {
            return Ok(v.clone());
        }
        let mut factors: HashMap<u32, PowerSumVec<S>> = HashMap::new();
        let mut total = PowerSumVec::new();
        for rho in partitions(outer.size()) {
            let chi = self.character(outer, &rho);
            if chi == 0 {
                continue;
            }
            let mut product = PowerSumVec::one();
            for &k in rho.parts() {
                let factor = factors.entry(k).or_insert_with(|| self.power_plethysm(k, inner));
                product = product.mul(factor);
            }
            let weight = Ratio::new(S::from_int(chi), S::from_count(centralizer_order(&rho)));
            total = total.plus(&product.scaled(&weight));
        }
        let result = self.powersum_to_schur(&total)?;
        self.plethysms
            .write()
            .expect("plethysm memo poisoned")
            .insert(key, result.clone());
        Ok(result)
    }

    /// Independent oracle: expand `s_μ` in `num_vars` variables, feed its
    /// monomials (with multiplicity) into `s_ν` as fresh variables, and
    /// Schur-decompose the result by leading-term subtraction.
    pub fn plethysm_bruteforce(&self, outer: &Partition, inner: &Partition, num_vars: usize) -> Result<SchurVec<S>> {
        self.check_degree(outer, inner, self.limits.bruteforce_degree_cap)?;
        let degree = (outer.size() * inner.size()) as usize;
        if num_vars < degree {
            return Err(Error::SizeMismatch(format!(
                "{num_vars} variables cannot represent degree {degree} faithfully"
            )));
        }
        let budget = self.limits.term_budget;
        let inner_poly = MultivariatePoly::<S>::schur(inner, num_vars, budget)?;
        let alphabet = inner_poly.monomial_alphabet()?;
        let expanded: HashMap<Vec<u32>, S> = schur_over_alphabet(outer, &alphabet, num_vars, true, budget)?;
        let dominant = expanded
            .into_iter()
            .map(|(e, c)| (Partition::from_parts_unsorted(e), c))
            .collect();
        decompose_symmetric(dominant, num_vars, budget)
    }

    /// `p^λ_{ν,μ}`: the coefficient of `s_λ` in `s_ν ∘ s_μ`.
    pub fn plethysm_coefficient(&self, lambda: &Partition, nu: &Partition, mu: &Partition) -> Result<S> {
        if lambda.size() != nu.size() * mu.size() {
            return Err(Error::SizeMismatch(format!(
                "|{lambda}| = {} but |{nu}|·|{mu}| = {}",
                lambda.size(),
                nu.size() * mu.size()
            )));
        }
        Ok(self.plethysm(nu, mu)?.coefficient(lambda))
    }

    /// Checks `p^λ_{ν,μ} = p^{λ'}_{ν,μ'}` (|μ| even) or `p^{λ'}_{ν',μ'}` (|μ| odd).
    pub fn omega_dual_coefficient_check(&self, lambda: &Partition, nu: &Partition, mu: &Partition) -> Result<bool> {
        let lhs = self.plethysm_coefficient(lambda, nu, mu)?;
        let nu_dual = if mu.size() % 2 == 0 { nu.clone() } else { nu.conjugate() };
        let rhs = self.plethysm_coefficient(&lambda.conjugate(), &nu_dual, &mu.conjugate())?;
        Ok(lhs == rhs)
    }
}
