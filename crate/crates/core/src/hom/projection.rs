//! Bases of the Foulkes module (set partitions) and the signed Foulkes
//! module (oriented column tabloids), and elements expressed in them.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hom::theta::ModuleElement;
use crate::perm::Perm;
use crate::scalar::Scalar;
use crate::symfunc::vector::{scalar_from_json, scalar_to_json};
use crate::tableau::{LabellingTableau, Tableau};

pub type Blocks = Vec<Vec<u32>>;

/// Which module an image lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKind {
    /// `H^(m^n)`, basis of set partitions into `n` blocks of size `m`.
    Foulkes,
    /// `K^(m^n)`, basis of oriented column tabloids.
    Signed,
}

impl BasisKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BasisKind::Foulkes => "foulkes",
            BasisKind::Signed => "signed",
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "foulkes" => Ok(BasisKind::Foulkes),
            "signed" => Ok(BasisKind::Signed),
            other => Err(Error::Unknown(format!("basis kind {other:?}"))),
        }
    }
}

fn block_order(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    // empty blocks first, otherwise by minimum (blocks are sorted)
    a.first().cmp(&b.first())
}

fn validate_blocks(blocks: &[Vec<u32>]) -> Result<()> {
    let size = blocks.first().map_or(0, |b| b.len());
    let total: usize = blocks.iter().map(|b| b.len()).sum();
    let mut seen = vec![false; total + 1];
    for b in blocks {
        if b.len() != size {
            return Err(Error::InvalidTableau(format!("blocks {blocks:?} have unequal sizes")));
        }
        for &x in b {
            if x == 0 || x as usize > total || seen[x as usize] {
                return Err(Error::InvalidTableau(format!(
                    "blocks {blocks:?} do not partition 1..={total}"
                )));
            }
            seen[x as usize] = true;
        }
    }
    Ok(())
}

/// A set partition of `{1, ..., mn}` into `n` blocks of size `m`, blocks
/// sorted internally and ordered by their minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartitionClass {
    blocks: Blocks,
}

impl SetPartitionClass {
    pub fn new(mut blocks: Blocks) -> Result<Self> {
        validate_blocks(&blocks)?;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by(|a, b| block_order(a, b));
        Ok(SetPartitionClass { blocks })
    }

    /// The class of a tableau of type `(m^n)`: block `i` is the set of labels carrying entry `i`.
    pub fn of_tableau(tableau: &Tableau, t: &LabellingTableau, n: usize) -> Self {
        let mut blocks = blocks_of_word(&tableau.word(t), n);
        blocks.sort_by(|a, b| block_order(a, b));
        SetPartitionClass { blocks }
    }

    pub fn blocks(&self) -> &Blocks {
        &self.blocks
    }
}

/// An oriented column tabloid in canonical orientation, with the sign picked
/// up while reordering its blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedTabloid {
    blocks: Blocks,
    sign: i8,
}

impl OrientedTabloid {
    /// Canonicalises an ordered block list. Returns `None` when two blocks
    /// coincide (only possible for empty blocks), since such a tabloid equals its own negative.
    pub fn from_ordered_blocks(blocks: Blocks) -> Result<Option<Self>> {
        validate_blocks(&blocks)?;
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(canonical_orientation(blocks))
    }

    /// `φ(T)`: blocks `X_i = {x : (x)T = i}` in order, then canonicalised.
    pub fn of_tableau(tableau: &Tableau, t: &LabellingTableau, n: usize) -> Option<Self> {
        canonical_orientation(blocks_of_word(&tableau.word(t), n))
    }

    pub fn blocks(&self) -> &Blocks {
        &self.blocks
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }
}

fn canonical_orientation(blocks: Blocks) -> Option<OrientedTabloid> {
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by(|&a, &b| block_order(&blocks[a], &blocks[b]));
    if order.windows(2).any(|w| blocks[w[0]] == blocks[w[1]]) {
        return None;
    }
    let sorting = Perm::from_images(order.iter().map(|&i| i as u32 + 1).collect()).expect("valid ordering");
    let sign = sorting.sign();
    let blocks = order.into_iter().map(|i| blocks[i].clone()).collect();
    Some(OrientedTabloid { blocks, sign })
}

pub(crate) fn blocks_of_word(word: &[u32], n: usize) -> Blocks {
    let mut blocks = vec![Vec::new(); n];
    for (i, &entry) in word.iter().enumerate() {
        blocks[entry as usize - 1].push(i as u32 + 1);
    }
    blocks
}

/// An element of `H^(m^n)` or `K^(m^n)` in the canonical basis. For the
/// signed kind the keys are canonically oriented and signs live in the coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomImage<S: Scalar> {
    kind: BasisKind,
    terms: BTreeMap<Blocks, S>,
}

impl<S: Scalar> HomImage<S> {
    pub fn zero(kind: BasisKind) -> Self {
        HomImage {
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn add_term(&mut self, blocks: Blocks, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(blocks.clone()).or_insert_with(S::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.terms.remove(&blocks);
        }
    }

    /// Coefficient of a canonical basis element.
    pub fn coefficient(&self, blocks: &Blocks) -> S {
        self.terms.get(blocks).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> &BTreeMap<Blocks, S> {
        &self.terms
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

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(b, c)| json!({ "blocks": b, "coeff": scalar_to_json(c) }))
            .collect();
        json!({ "kind": self.kind.as_str(), "terms": terms })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Unknown(format!("malformed image JSON: {what}"));
        let kind: BasisKind = value["kind"].as_str().ok_or_else(|| bad("kind"))?.parse()?;
        let mut image = HomImage::zero(kind);
        for term in value["terms"].as_array().ok_or_else(|| bad("terms"))? {
            let blocks: Blocks = serde_json::from_value(term["blocks"].clone()).map_err(|_| bad("blocks"))?;
            let coeff: S = scalar_from_json(&term["coeff"])?;
            let (key, sign) = match kind {
                BasisKind::Foulkes => (SetPartitionClass::new(blocks)?.blocks, 1),
                BasisKind::Signed => match OrientedTabloid::from_ordered_blocks(blocks)? {
                    Some(o) => (o.blocks, o.sign),
                    None => continue,
                },
            };
            image.add_term(key, coeff * S::from_int(sign as i64));
        }
        Ok(image)
    }
}

/// `ψ`: each tableau goes to its set partition class.
pub fn project_foulkes<S: Scalar>(el: &ModuleElement<S>, t: &LabellingTableau) -> HomImage<S> {
    let n = el.block_count();
    let mut image = HomImage::zero(BasisKind::Foulkes);
    for (tableau, c) in el.terms() {
        let class = SetPartitionClass::of_tableau(tableau, t, n);
        image.add_term(class.blocks, c.clone());
    }
    image
}

/// `φ`: each tableau goes to its oriented column tabloid, canonical orientation sign absorbed.
pub fn project_signed<S: Scalar>(el: &ModuleElement<S>, t: &LabellingTableau) -> HomImage<S> {
    let n = el.block_count();
    let mut image = HomImage::zero(BasisKind::Signed);
    for (tableau, c) in el.terms() {
        if let Some(tabloid) = OrientedTabloid::of_tableau(tableau, t, n) {
            image.add_term(tabloid.blocks, c.clone() * S::from_int(tabloid.sign as i64));
        }
    }
    image
}

pub fn project<S: Scalar>(el: &ModuleElement<S>, t: &LabellingTableau, kind: BasisKind) -> HomImage<S> {
    match kind {
        BasisKind::Foulkes => project_foulkes(el, t),
        BasisKind::Signed => project_signed(el, t),
    }
}

/// Coefficient of the class of `r` in `image`, including the orientation
/// sign of `r` for the signed kind.
pub fn coefficient_of<S: Scalar>(image: &HomImage<S>, r: &Tableau, t: &LabellingTableau, n: usize) -> S {
    match image.kind {
        BasisKind::Foulkes => image.coefficient(SetPartitionClass::of_tableau(r, t, n).blocks()),
        BasisKind::Signed => match OrientedTabloid::of_tableau(r, t, n) {
            Some(o) => image.coefficient(&o.blocks) * S::from_int(o.sign as i64),
            None => S::zero(),
        },
    }
}

/// A tableau of type `(m^n)` whose class is `blocks` (in the given order).
/// For the signed kind and canonical `blocks`, it maps to `+blocks`.
pub fn representative(blocks: &Blocks, t: &LabellingTableau) -> Tableau {
    let mut word = vec![0u32; t.size()];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            word[x as usize - 1] = i as u32 + 1;
        }
    }
    Tableau::from_word(&word, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swapping_blocks_flips_sign() {
        let a = OrientedTabloid::from_ordered_blocks(vec![vec![1, 2], vec![3, 4]]).unwrap().unwrap();
        let b = OrientedTabloid::from_ordered_blocks(vec![vec![3, 4], vec![1, 2]]).unwrap().unwrap();
        assert_eq!(a.blocks(), b.blocks());
        assert_eq!(a.sign(), 1);
        assert_eq!(b.sign(), -1);
    }

    #[test]
    fn reordering_multiplies_by_sign_of_reordering() {
        let base = vec![vec![1, 5], vec![2, 6], vec![3, 4]];
        let reference = OrientedTabloid::from_ordered_blocks(base.clone()).unwrap().unwrap();
        for (arr, s) in crate::perm::signed_arrangements(&[0, 1, 2]) {
            let shuffled: Blocks = arr.iter().map(|&i| base[i as usize].clone()).collect();
            let o = OrientedTabloid::from_ordered_blocks(shuffled).unwrap().unwrap();
            assert_eq!(o.blocks(), reference.blocks());
            assert_eq!(o.sign(), s * reference.sign());
        }
    }

    #[test]
    fn canonicalising_twice_is_idempotent() {
        let o = OrientedTabloid::from_ordered_blocks(vec![vec![4, 3], vec![2, 1]]).unwrap().unwrap();
        let again = OrientedTabloid::from_ordered_blocks(o.blocks().clone()).unwrap().unwrap();
        assert_eq!(again.blocks(), o.blocks());
        assert_eq!(again.sign(), 1);
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(SetPartitionClass::new(vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(SetPartitionClass::new(vec![vec![1, 2], vec![3]]).is_err());
        assert!(OrientedTabloid::from_ordered_blocks(vec![vec![1, 5]]).is_err());
    }

    #[test]
    fn repeated_empty_blocks_vanish() {
        assert!(OrientedTabloid::from_ordered_blocks(vec![vec![], vec![]]).unwrap().is_none());
        assert!(OrientedTabloid::from_ordered_blocks(vec![vec![]]).unwrap().is_some());
    }

    #[test]
    fn json_round_trip() {
        let mut image = HomImage::<i64>::zero(BasisKind::Signed);
        image.add_term(vec![vec![1, 2], vec![3, 4]], 2);
        image.add_term(vec![vec![1, 3], vec![2, 4]], 2);
        let v = image.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"kind":"signed","terms":[{"blocks":[[1,2],[3,4]],"coeff":2},{"blocks":[[1,3],[2,4]],"coeff":2}]}"#
        );
        assert_eq!(HomImage::<i64>::from_json(&v).unwrap(), image);
    }
}
