//! Explicit polynomials in finitely many variables. This is the carrier of
//! the brute-force plethysm oracle and shares no code with the power-sum route.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::symfunc::vector::SchurVec;

/// Integer polynomial in `num_vars` variables, keyed by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultivariatePoly<S: Scalar> {
    num_vars: usize,
    terms: HashMap<Vec<u32>, S>,
}

impl<S: Scalar> MultivariatePoly<S> {
    pub fn zero(num_vars: usize) -> Self {
        MultivariatePoly {
            num_vars,
            terms: HashMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &HashMap<Vec<u32>, S> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> S {
        self.terms.get(exponents).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: S) {
        debug_assert_eq!(exponents.len(), self.num_vars);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents.clone()).or_insert_with(S::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    /// Schur polynomial `s_λ(x_1, ..., x_N)` by enumerating semistandard
    /// fillings over the alphabet `1..=N`.
    pub fn schur(lambda: &Partition, num_vars: usize, term_budget: u128) -> Result<Self> {
        let letters: Vec<Vec<u32>> = (0..num_vars)
            .map(|i| {
                let mut e = vec![0u32; num_vars];
                e[i] = 1;
                e
            })
            .collect();
        let terms = schur_over_alphabet(lambda, &letters, num_vars, false, term_budget)?;
        Ok(MultivariatePoly { num_vars, terms })
    }

    /// The monomials, each repeated according to its (positive) coefficient.
    pub fn monomial_alphabet(&self) -> Result<Vec<Vec<u32>>> {
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| b.0.cmp(a.0));
        let mut out = Vec::new();
        for (e, c) in keys {
            let reps = c
                .to_u64()
                .ok_or_else(|| Error::NonIntegralResult(format!("coefficient {c} is not a positive count")))?;
            for _ in 0..reps {
                out.push(e.clone());
            }
        }
        Ok(out)
    }

    /// Coefficients of the monomials `x^α` whose exponent vector is a partition.
    pub fn dominant_part(&self) -> BTreeMap<Partition, S> {
        self.terms
            .iter()
            .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
            .map(|(e, c)| (Partition::from_parts_unsorted(e.clone()), c.clone()))
            .collect()
    }
}

/// Evaluates `s_λ` at an alphabet of monomials: fills the diagram of `λ`
/// semistandardly with letter indices and multiplies the letters out.
/// With `dominant_only`, only products whose exponents are weakly
/// decreasing are kept.
pub fn schur_over_alphabet<S: Scalar>(
    lambda: &Partition,
    letters: &[Vec<u32>],
    num_vars: usize,
    dominant_only: bool,
    term_budget: u128,
) -> Result<HashMap<Vec<u32>, S>> {
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
        .collect();
    let mut state = Filler {
        letters,
        cells: &cells,
        grid: lambda.parts().iter().map(|&p| vec![0usize; p as usize]).collect(),
        exponent: vec![0u32; num_vars],
        out: HashMap::new(),
        visited: 0,
        budget: term_budget,
        dominant_only,
    };
    state.fill(0)?;
    Ok(state.out)
}

struct Filler<'a, S> {
    letters: &'a [Vec<u32>],
    cells: &'a [(usize, usize)],
    grid: Vec<Vec<usize>>,
    exponent: Vec<u32>,
    out: HashMap<Vec<u32>, S>,
    visited: u128,
    budget: u128,
    dominant_only: bool,
}

impl<S: Scalar> Filler<'_, S> {
    fn fill(&mut self, k: usize) -> Result<()> {
        if k == self.cells.len() {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::SizeLimitExceeded {
                    what: "monomial expansion terms",
                    needed: self.visited,
                    limit: self.budget,
                });
            }
            if self.dominant_only && self.exponent.windows(2).any(|w| w[0] < w[1]) {
                return Ok(());
            }
            let entry = self.out.entry(self.exponent.clone()).or_insert_with(S::zero);
            *entry = entry.clone() + S::one();
            return Ok(());
        }
        let (i, j) = self.cells[k];
        let left = if j > 0 { self.grid[i][j - 1] } else { 0 };
        let above = if i > 0 { self.grid[i - 1][j] + 1 } else { 0 };
        for v in left.max(above)..self.letters.len() {
            self.grid[i][j] = v;
            for (e, d) in self.exponent.iter_mut().zip(&self.letters[v]) {
                *e += d;
            }
            let res = self.fill(k + 1);
            for (e, d) in self.exponent.iter_mut().zip(&self.letters[v]) {
                *e -= d;
            }
            res?;
        }
        Ok(())
    }
}

/// Schur decomposition of a symmetric polynomial given by its dominant
/// monomial coefficients: repeatedly strip `c·s_λ` for the dominance-maximal
/// `λ` still present.
pub fn decompose_symmetric<S: Scalar>(
    dominant: BTreeMap<Partition, S>,
    num_vars: usize,
    term_budget: u128,
) -> Result<SchurVec<S>> {
    let mut remaining = dominant;
    remaining.retain(|_, c| !c.is_zero());
    let mut out = SchurVec::new();
    let mut kostka_rows: HashMap<Partition, BTreeMap<Partition, S>> = HashMap::new();
    // lexicographic maximum is never strictly dominated by another term
    while let Some((lead, c)) = remaining.iter().next_back().map(|(l, c)| (l.clone(), c.clone())) {
        if lead.len() > num_vars {
            return Err(Error::SizeMismatch(format!(
                "{lead} has more parts than the {num_vars} variables"
            )));
        }
        if !kostka_rows.contains_key(&lead) {
            let row = MultivariatePoly::<S>::schur(&lead, num_vars, term_budget)?.dominant_part();
            kostka_rows.insert(lead.clone(), row);
        }
        for (mu, k) in &kostka_rows[&lead] {
            let entry = remaining.entry(mu.clone()).or_insert_with(S::zero);
            *entry = entry.clone() - c.clone() * k.clone();
            if entry.is_zero() {
                remaining.remove(mu);
            }
        }
        out.add_term(lead, c);
    }
    Ok(out)
}
