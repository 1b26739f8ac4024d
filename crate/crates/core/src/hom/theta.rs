//! Semistandard homomorphisms evaluated on the Specht generator `e_t`.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::hom::projection::BasisKind;
use crate::partition::{Composition, Partition};
use crate::perm::Perm;
use crate::scalar::Scalar;
use crate::tableau::{act_on_word, LabellingTableau, Tableau};

/// An element of the permutation module `M^μ`, written in the basis of
/// λ-tableaux of type μ read through a fixed labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement<S: Scalar> {
    shape: Partition,
    content: Composition,
    terms: BTreeMap<Tableau, S>,
}

impl<S: Scalar> ModuleElement<S> {
    pub fn zero(shape: Partition, content: Composition) -> Self {
        ModuleElement {
            shape,
            content,
            terms: BTreeMap::new(),
        }
    }

    /// Builds an element from terms; every tableau must have the given shape and content.
    pub fn from_terms(
        shape: Partition,
        content: Composition,
        terms: impl IntoIterator<Item = (Tableau, S)>,
    ) -> Result<Self> {
        let mut el = Self::zero(shape, content);
        for (tableau, c) in terms {
            el.add_term(tableau, c)?;
        }
        Ok(el)
    }

    pub fn add_term(&mut self, tableau: Tableau, coeff: S) -> Result<()> {
        if tableau.shape() != &self.shape || tableau.content().trimmed() != self.content.trimmed() {
            return Err(Error::InvalidTableau(format!(
                "{tableau} does not have shape {} and type {:?}",
                self.shape,
                self.content.parts()
            )));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(tableau.clone()).or_insert_with(S::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.terms.remove(&tableau);
        }
        Ok(())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn content(&self) -> &Composition {
        &self.content
    }

    /// Number of entry values, `n` for type `(m^n)`.
    pub fn block_count(&self) -> usize {
        self.content.len()
    }

    pub fn terms(&self) -> &BTreeMap<Tableau, S> {
        &self.terms
    }

    pub fn coefficient(&self, tableau: &Tableau) -> S {
        self.terms.get(tableau).cloned().unwrap_or_else(S::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Right action of `π` on every term, through the labelling `t`.
    pub fn act(&self, t: &LabellingTableau, perm: &Perm) -> Self {
        let mut out = Self::zero(self.shape.clone(), self.content.clone());
        for (tableau, c) in &self.terms {
            out.terms.insert(tableau.apply_permutation(t, perm), c.clone());
        }
        out
    }
}

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        return Err(Error::SizeLimitExceeded {
            what: "homomorphism evaluation terms",
            needed,
            limit: budget,
        });
    }
    Ok(())
}

/// `(e_t)θ_T = Σ_{T' ~row T} Σ_{π ∈ C_t} sgn(π) T'π`, like terms merged.
pub fn theta_on_generator<S: Scalar>(
    tableau: &Tableau,
    t: &LabellingTableau,
    budget: u128,
) -> Result<ModuleElement<S>> {
    theta_on_generator_of_type(tableau, t, tableau.content(), budget)
}

/// As [`theta_on_generator`], with the type given explicitly so that values
/// occurring zero times (type `(0^n)`) are still counted as blocks.
pub fn theta_on_generator_of_type<S: Scalar>(
    tableau: &Tableau,
    t: &LabellingTableau,
    content: Composition,
    budget: u128,
) -> Result<ModuleElement<S>> {
    if tableau.content().trimmed() != content.trimmed() {
        return Err(Error::InvalidTableau(format!("{tableau} is not of type {:?}", content.parts())));
    }
    if tableau.shape() != t.shape() {
        return Err(Error::ShapeError(format!(
            "tableau shape {} differs from labelling shape {}",
            tableau.shape(),
            t.shape()
        )));
    }
    let group = t.column_stabilizer();
    check_budget(tableau.row_class_size().saturating_mul(group.order()), budget)?;
    let elements: Vec<(Perm, i8)> = group.iter().collect();
    let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
    for rearranged in tableau.row_equivalence_class() {
        let word = rearranged.word(t);
        for (perm, sign) in &elements {
            *acc.entry(act_on_word(&word, perm)).or_insert(0) += *sign as i64;
        }
    }
    let mut el = ModuleElement::zero(tableau.shape().clone(), content);
    for (word, c) in acc {
        if c != 0 {
            el.terms.insert(Tableau::from_word(&word, t), S::from_int(c));
        }
    }
    Ok(el)
}

/// `Tκ_t = Σ_{π ∈ C_t} sgn(π) Tπ`, the column antisymmetriser applied to a single tableau.
pub fn column_antisymmetrize<S: Scalar>(
    tableau: &Tableau,
    t: &LabellingTableau,
    budget: u128,
) -> Result<ModuleElement<S>> {
    let group = t.column_stabilizer();
    check_budget(group.order(), budget)?;
    let word = tableau.word(t);
    let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
    for (perm, sign) in group.iter() {
        *acc.entry(act_on_word(&word, &perm)).or_insert(0) += sign as i64;
    }
    let mut el = ModuleElement::zero(tableau.shape().clone(), tableau.content());
    for (word, c) in acc {
        if c != 0 {
            el.terms.insert(Tableau::from_word(&word, t), S::from_int(c));
        }
    }
    Ok(el)
}

/// The coefficient of `R`'s class in the projected image, straight from the
/// double sum over row rearrangements `T'`, `π ∈ C_t` and relabellings `σ`
/// with `T'π = R*σ`: `Σ sgn(π)sgn(σ)` (signed) or `Σ sgn(π)` (Foulkes).
///
/// Shares nothing with the projection code path.
pub fn coefficient_by_formula<S: Scalar>(
    tableau: &Tableau,
    r: &Tableau,
    t: &LabellingTableau,
    kind: BasisKind,
    budget: u128,
) -> Result<S> {
    let group = t.column_stabilizer();
    check_budget(tableau.row_class_size().saturating_mul(group.order()), budget)?;
    let target = r.word(t);
    let n = r.max_entry().max(tableau.max_entry()) as usize;
    let mut total: i64 = 0;
    let elements: Vec<(Perm, i8)> = group.iter().collect();
    for rearranged in tableau.row_equivalence_class() {
        let word = rearranged.word(t);
        for (perm, sign) in &elements {
            let moved = act_on_word(&word, perm);
            if let Some(sigma) = relabelling(&target, &moved, n) {
                total += match kind {
                    BasisKind::Foulkes => *sign as i64,
                    BasisKind::Signed => (*sign * sigma.sign()) as i64,
                };
            }
        }
    }
    Ok(S::from_int(total))
}

/// The `σ` with `from * σ = to`, if the two words differ by a relabelling.
fn relabelling(from: &[u32], to: &[u32], n: usize) -> Option<Perm> {
    let mut images = vec![0u32; n];
    let mut used = vec![false; n + 1];
    for (&a, &b) in from.iter().zip(to) {
        let slot = &mut images[a as usize - 1];
        if *slot == 0 {
            if used[b as usize] {
                return None;
            }
            *slot = b;
            used[b as usize] = true;
        } else if *slot != b {
            return None;
        }
    }
    // letters absent from both words map to the leftover letters in order
    let mut free = (1..=n as u32).filter(|&x| !used[x as usize]);
    for slot in images.iter_mut().filter(|s| **s == 0) {
        *slot = free.next()?;
    }
    Perm::from_images(images).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::projection::{project_foulkes, project_signed};
    use crate::partition::partitions;
    use crate::tableau::enumerate_semistandard;

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn example() -> (Tableau, LabellingTableau) {
        (
            tab(&[&[1, 1, 2], &[2]]),
            LabellingTableau::new(vec![vec![1, 2, 3], vec![4]]).unwrap(),
        )
    }

    #[test]
    fn four_term_example() {
        let (big_t, t) = example();
        let el = theta_on_generator::<i64>(&big_t, &t, 1000).unwrap();
        let expected: BTreeMap<Tableau, i64> = [
            (tab(&[&[1, 1, 2], &[2]]), 1),
            (tab(&[&[1, 2, 1], &[2]]), 1),
            (tab(&[&[2, 1, 2], &[1]]), -1),
            (tab(&[&[2, 2, 1], &[1]]), -1),
        ]
        .into_iter()
        .collect();
        assert_eq!(el.terms(), &expected);
    }

    #[test]
    fn single_row_has_positive_terms() {
        let big_t = tab(&[&[1, 1, 2, 2]]);
        let t = LabellingTableau::row_reading(big_t.shape());
        let el = theta_on_generator::<i64>(&big_t, &t, 1000).unwrap();
        assert_eq!(el.len(), 6);
        assert!(el.terms().values().all(|&c| c == 1));
    }

    #[test]
    fn vanishes_exactly_with_repeated_column_entry() {
        for n in 1..=6u32 {
            for shape in partitions(n) {
                let t = LabellingTableau::row_reading(&shape);
                for content in partitions(n) {
                    // every tableau of this shape and content, semistandard or not
                    let cells: Vec<u32> = content
                        .parts()
                        .iter()
                        .enumerate()
                        .flat_map(|(i, &c)| std::iter::repeat(i as u32 + 1).take(c as usize))
                        .collect();
                    for word in crate::tableau::multiset_permutations(&cells) {
                        let big_t = Tableau::from_word(&word, &t);
                        let el = column_antisymmetrize::<i64>(&big_t, &t, 1_000_000).unwrap();
                        assert_eq!(el.is_zero(), big_t.has_repeated_column_entry(), "{big_t}");
                        if big_t.is_semistandard() {
                            let theta = theta_on_generator::<i64>(&big_t, &t, 1_000_000).unwrap();
                            assert!(!theta.is_zero(), "{big_t}");
                        }
                        if big_t.row_equivalence_class().iter().all(|r| r.has_repeated_column_entry()) {
                            let theta = theta_on_generator::<i64>(&big_t, &t, 1_000_000).unwrap();
                            assert!(theta.is_zero(), "{big_t}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn theta_is_sum_of_antisymmetrised_rearrangements() {
        let (big_t, t) = example();
        let mut total = ModuleElement::<i64>::zero(big_t.shape().clone(), big_t.content());
        for r in big_t.row_equivalence_class() {
            for (tab, c) in column_antisymmetrize::<i64>(&r, &t, 1000).unwrap().terms() {
                total.add_term(tab.clone(), *c).unwrap();
            }
        }
        assert_eq!(total, theta_on_generator::<i64>(&big_t, &t, 1000).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let big_t = tab(&[&[1], &[2], &[3], &[4]]);
        let t = LabellingTableau::row_reading(big_t.shape());
        assert!(theta_on_generator::<i64>(&big_t, &t, 23).is_err());
        assert!(theta_on_generator::<i64>(&big_t, &t, 24).is_ok());
    }

    #[test]
    fn formula_agrees_with_projection() {
        for (m, n) in [(1u32, 3u32), (2, 2), (3, 2), (2, 3), (1, 4)] {
            for shape in partitions(m * n) {
                let t = LabellingTableau::row_reading(&shape);
                for big_t in enumerate_semistandard(&shape, &Composition::rectangular(m, n)) {
                    let el = theta_on_generator::<i64>(&big_t, &t, 1_000_000).unwrap();
                    let signed = project_signed(&el, &t);
                    let foulkes = project_foulkes(&el, &t);
                    // every class representative in the support, plus the source tableau itself
                    let mut probes: Vec<Tableau> = el.terms().keys().cloned().collect();
                    probes.push(big_t.clone());
                    for r in probes {
                        let by_sum_s: i64 =
                            coefficient_by_formula(&big_t, &r, &t, BasisKind::Signed, 1_000_000).unwrap();
                        let by_sum_f: i64 =
                            coefficient_by_formula(&big_t, &r, &t, BasisKind::Foulkes, 1_000_000).unwrap();
                        let nb = n as usize;
                        assert_eq!(by_sum_s, crate::hom::projection::coefficient_of(&signed, &r, &t, nb));
                        assert_eq!(by_sum_f, crate::hom::projection::coefficient_of(&foulkes, &r, &t, nb));
                    }
                }
            }
        }
    }

    #[test]
    fn relabelling_detects_patterns() {
        assert_eq!(relabelling(&[1, 1, 2, 2], &[2, 2, 1, 1], 2), Some(Perm::transposition(2, 1, 2)));
        assert_eq!(relabelling(&[1, 1, 2, 2], &[1, 2, 1, 2], 2), None);
    }
}
