use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hom::projection::{project, BasisKind, Blocks, HomImage};
use crate::hom::theta::theta_on_generator_of_type;
use crate::limits::Limits;
use crate::linalg::rank;
use crate::partition::{partitions, Composition, Partition};
use crate::symfunc::vector::SchurVec;
use crate::tableau::{enumerate_semistandard, LabellingTableau, Tableau};

/// `(e_t)θ̄_T` or `(e_t)θ̲_T` for every `T ∈ T₀(λ, (m^n))`, in enumeration
/// order, with `t` the row-reading labelling.
pub fn semistandard_images(
    lambda: &Partition,
    m: u32,
    n: u32,
    kind: BasisKind,
    limits: &Limits,
) -> Result<Vec<(Tableau, HomImage<i64>)>> {
    if lambda.size() != m * n {
        return Err(Error::SizeMismatch(format!("|{lambda}| = {} but mn = {}", lambda.size(), m * n)));
    }
    let t = LabellingTableau::row_reading(lambda);
    let sources = enumerate_semistandard(lambda, &Composition::rectangular(m, n));
    sources
        .into_par_iter()
        .map(|big_t| {
            let el = theta_on_generator_of_type::<i64>(&big_t, &t, Composition::rectangular(m, n), limits.enum_budget)?;
            let image = project(&el, &t, kind);
            Ok((big_t, image))
        })
        .collect()
}

/// Rank of the images as integer row vectors over the union of their supports.
pub fn image_rank(images: &[HomImage<i64>]) -> usize {
    let mut columns: BTreeMap<&Blocks, usize> = BTreeMap::new();
    for image in images {
        for key in image.terms().keys() {
            columns.entry(key).or_insert(0);
        }
    }
    for (i, v) in columns.values_mut().enumerate() {
        *v = i;
    }
    let rows: Vec<Vec<BigInt>> = images
        .iter()
        .map(|image| {
            let mut row = vec![BigInt::from(0); columns.len()];
            for (key, &c) in image.terms() {
                row[columns[key]] = BigInt::from(c);
            }
            row
        })
        .collect();
    rank(rows)
}

/// Multiplicity of `S^λ` in `H^(m^n)` (Foulkes) or `K^(m^n)` (signed), as the
/// rank of the semistandard homomorphism images.
pub fn multiplicity_via_rank(lambda: &Partition, m: u32, n: u32, kind: BasisKind, limits: &Limits) -> Result<usize> {
    let images: Vec<HomImage<i64>> = semistandard_images(lambda, m, n, kind, limits)?
        .into_iter()
        .map(|(_, image)| image)
        .collect();
    Ok(image_rank(&images))
}

/// Full decomposition of `H^(m^n)` or `K^(m^n)` by the rank method.
pub fn decompose_via_rank(m: u32, n: u32, kind: BasisKind, limits: &Limits) -> Result<SchurVec<BigInt>> {
    let mut out = SchurVec::new();
    for lambda in partitions(m * n) {
        let r = multiplicity_via_rank(&lambda, m, n, kind, limits)?;
        out.add_term(lambda, BigInt::from(r));
    }
    Ok(out)
}
