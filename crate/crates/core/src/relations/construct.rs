//! The row-insertion and top-row constructions of `T̃`, `t̃` and the coset
//! families `Y`, `V` that factor the enlarged column antisymmetriser.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{GroupAlgebraElement, Perm};
use crate::tableau::{LabellingTableau, Tableau};

/// Minimal `q ≥ 0` with `λ_{q+1} ≤ m` (parts past the end count as 0).
pub fn theorem_q(lambda: &Partition, m: u32) -> usize {
    (0..=lambda.len()).find(|&q| lambda.part(q) <= m).unwrap_or(lambda.len())
}

/// `λ` with a part `m` inserted after the first `q` parts.
pub fn insert_part(lambda: &Partition, q: usize, m: u32) -> Result<Partition> {
    let fits = q <= lambda.len() && (q == 0 || lambda.part(q - 1) >= m) && lambda.part(q) <= m;
    if !fits {
        return Err(Error::ShapeError(format!(
            "inserting a row of length {m} after row {q} breaks the shape {lambda}"
        )));
    }
    let mut parts = lambda.parts().to_vec();
    if m > 0 {
        parts.insert(q, m);
    }
    Partition::new(parts)
}

/// `λ̃` for the row-insertion theorem: `m` inserted at the computed `q`.
pub fn row_insert_shape(lambda: &Partition, m: u32) -> Partition {
    insert_part(lambda, theorem_q(lambda, m), m).expect("theorem q keeps the shape")
}

/// `λ̃ = (am, λ₁, …, λ_ℓ)` for the top-row theorem.
pub fn top_row_shape(lambda: &Partition, m: u32, a: u32) -> Result<Partition> {
    if lambda.first() > a * m {
        return Err(Error::ShapeError(format!("first part of {lambda} exceeds am = {}", a * m)));
    }
    let mut parts = vec![a * m];
    parts.extend_from_slice(lambda.parts());
    Partition::new(parts.into_iter().filter(|&p| p > 0).collect())
}

fn check_type(tableau: &Tableau, t: &LabellingTableau, m: u32, n: u32) -> Result<()> {
    if tableau.shape() != t.shape() {
        return Err(Error::ShapeError(format!("{tableau} and {t} have different shapes")));
    }
    let expected = crate::partition::Composition::rectangular(m, n);
    if tableau.content().trimmed() != expected.trimmed() {
        return Err(Error::InvalidTableau(format!("{tableau} is not of type ({m}^{n})")));
    }
    Ok(())
}

/// Inserts a row of `m` copies of `n+1` as row `q+1` of `T`, and the labels
/// `mn+1, …, mn+m` at the same place in `t`.
pub fn build_row_insert(
    tableau: &Tableau,
    t: &LabellingTableau,
    m: u32,
    n: u32,
    q: usize,
) -> Result<(Tableau, LabellingTableau)> {
    check_type(tableau, t, m, n)?;
    insert_part(tableau.shape(), q, m)?;
    let mut rows = tableau.rows().to_vec();
    rows.insert(q, vec![n + 1; m as usize]);
    let mut labels = t.rows().to_vec();
    labels.insert(q, (m * n + 1..=m * n + m).collect());
    let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let labels: Vec<Vec<u32>> = labels.into_iter().filter(|r| !r.is_empty()).collect();
    Ok((Tableau::new(rows)?, LabellingTableau::new(labels)?))
}

/// Adds the first row `1…1 2…2 … a…a` (`m` copies each) and shifts the
/// old entries by `a`; `t̃` gets the labels `mn+1, …, mn+am` in that row.
pub fn build_top_row(
    tableau: &Tableau,
    t: &LabellingTableau,
    m: u32,
    n: u32,
    a: u32,
) -> Result<(Tableau, LabellingTableau)> {
    if a < 2 {
        return Err(Error::HypothesisViolated(format!("a = {a} but a ≥ 2 is required")));
    }
    check_type(tableau, t, m, n)?;
    top_row_shape(tableau.shape(), m, a)?;
    let mut rows = vec![(1..=a).flat_map(|g| std::iter::repeat_n(g, m as usize)).collect::<Vec<u32>>()];
    rows.extend(tableau.rows().iter().map(|r| r.iter().map(|&x| x + a).collect()));
    let mut labels = vec![(m * n + 1..=m * n + a * m).collect::<Vec<u32>>()];
    labels.extend(t.rows().iter().cloned());
    let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let labels: Vec<Vec<u32>> = labels.into_iter().filter(|r| !r.is_empty()).collect();
    Ok((Tableau::new(rows)?, LabellingTableau::new(labels)?))
}

/// Number of digits `1..=n` whose occurrences fill exactly columns `1..=m` of `R`.
pub fn count_full_prefix_digits(r: &Tableau, m: u32, n: u32) -> usize {
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); n as usize + 1];
    for row in r.rows() {
        for (j, &x) in row.iter().enumerate() {
            if (x as usize) <= n as usize {
                columns[x as usize].push(j);
            }
        }
    }
    let prefix: Vec<usize> = (0..m as usize).collect();
    (1..=n as usize)
        .filter(|&x| {
            let mut c = columns[x].clone();
            c.sort_unstable();
            c == prefix
        })
        .count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CosetKind {
    /// Row insertion: columns `1..=m`, identity in the inserted row.
    Y,
    /// Top row: columns `1..=λ₁`, identity in the first row.
    V,
}

/// Coset representatives of `C_t` in `C_{t̃}`, one list per affected column.
/// Every product of one representative per column lies in the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetFamily {
    kind: CosetKind,
    degree: usize,
    columns: Vec<Vec<Perm>>,
}

impl CosetFamily {
    pub fn kind(&self) -> CosetKind {
        self.kind
    }

    pub fn columns(&self) -> &[Vec<Perm>] {
        &self.columns
    }

    pub fn size(&self) -> u128 {
        self.columns.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
    }

    /// Every element of the family with its sign.
    pub fn elements(&self) -> Vec<(Perm, i8)> {
        let mut out = vec![(Perm::identity(self.degree), 1i8)];
        for reps in &self.columns {
            out = out
                .iter()
                .flat_map(|(p, s)| reps.iter().map(move |r| (p.then(r), s * r.sign())))
                .collect();
        }
        out
    }

    /// `Π_j Σ_i sgn(y_i^{(j)}) y_i^{(j)}` in the group algebra.
    pub fn signed_sum(&self) -> GroupAlgebraElement {
        let mut total = GroupAlgebraElement::identity();
        for reps in &self.columns {
            let mut column = GroupAlgebraElement::default();
            for r in reps {
                column.add_term(r.clone(), r.sign() as i64);
            }
            total = total.mul(&column);
        }
        total
    }
}

/// Builds `Y` or `V` from the enlarged labelling `t̃`; `mn` is the size of the source shape.
pub fn coset_family(kind: CosetKind, t_tilde: &LabellingTableau, mn: u32, budget: u128) -> Result<CosetFamily> {
    let degree = t_tilde.size();
    let fixed_row = match kind {
        CosetKind::V => 0,
        CosetKind::Y => t_tilde
            .rows()
            .iter()
            .position(|r| r.first() == Some(&(mn + 1)))
            .ok_or_else(|| Error::ShapeError(format!("{t_tilde} has no inserted row")))?,
    };
    let mut columns = Vec::new();
    for (j, column) in t_tilde.columns().into_iter().enumerate() {
        let anchor = mn + 1 + j as u32;
        if t_tilde.get(fixed_row, j) != Some(anchor) {
            continue;
        }
        let reps = column
            .iter()
            .enumerate()
            .map(|(i, &label)| {
                if i == fixed_row {
                    Perm::identity(degree)
                } else {
                    Perm::transposition(degree, label, anchor)
                }
            })
            .collect();
        columns.push(reps);
    }
    let family = CosetFamily { kind, degree, columns };
    if family.size() > budget {
        return Err(Error::SizeLimitExceeded {
            what: "coset family",
            needed: family.size(),
            limit: budget,
        });
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn lab(rows: &[&[u32]]) -> LabellingTableau {
        LabellingTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn row_insert_example() {
        let t = LabellingTableau::row_reading(&p("5,1"));
        let big_t = tab(&[&[1, 1, 1, 2, 2], &[2]]);
        assert_eq!(theorem_q(&p("5,1"), 3), 1);
        let (tt, tl) = build_row_insert(&big_t, &t, 3, 2, 1).unwrap();
        assert_eq!(tt, tab(&[&[1, 1, 1, 2, 2], &[3, 3, 3], &[2]]));
        assert_eq!(tl, lab(&[&[1, 2, 3, 4, 5], &[7, 8, 9], &[6]]));
        assert_eq!(tt.remove_row(1).unwrap(), big_t);
    }

    #[test]
    fn row_insert_at_top() {
        let t = LabellingTableau::row_reading(&p("2"));
        let (tt, tl) = build_row_insert(&tab(&[&[1, 1]]), &t, 2, 1, 0).unwrap();
        assert_eq!(tt, tab(&[&[2, 2], &[1, 1]]));
        assert_eq!(tl, lab(&[&[3, 4], &[1, 2]]));
    }

    #[test]
    fn row_insert_rejects_bad_position() {
        let t = LabellingTableau::row_reading(&p("3,1"));
        let err = build_row_insert(&tab(&[&[1, 1, 2], &[2]]), &t, 2, 2, 2).unwrap_err();
        assert!(matches!(err, Error::ShapeError(_)));
    }

    #[test]
    fn top_row_example() {
        let t = LabellingTableau::row_reading(&p("3,1"));
        let (tt, tl) = build_top_row(&tab(&[&[1, 1, 2], &[2]]), &t, 2, 2, 3).unwrap();
        assert_eq!(tt, tab(&[&[1, 1, 2, 2, 3, 3], &[4, 4, 5], &[5]]));
        assert_eq!(tl, lab(&[&[5, 6, 7, 8, 9, 10], &[1, 2, 3], &[4]]));
    }

    #[test]
    fn top_row_single_column() {
        let t = LabellingTableau::row_reading(&p("1,1,1"));
        let (tt, _) = build_top_row(&tab(&[&[1], &[2], &[3]]), &t, 1, 3, 2).unwrap();
        assert_eq!(tt, tab(&[&[1, 2], &[3], &[4], &[5]]));
    }

    #[test]
    fn top_row_rejects_wide_shapes() {
        let t = LabellingTableau::row_reading(&p("5"));
        let err = build_top_row(&tab(&[&[1, 2, 3, 4, 5]]), &t, 1, 5, 2).unwrap_err();
        assert!(matches!(err, Error::ShapeError(_)));
    }

    #[test]
    fn full_prefix_digits() {
        assert_eq!(count_full_prefix_digits(&tab(&[&[1, 1, 2], &[2]]), 2, 2), 1);
        assert_eq!(count_full_prefix_digits(&tab(&[&[1, 2, 3]]), 1, 3), 1);
        assert_eq!(count_full_prefix_digits(&tab(&[&[1, 1], &[2, 2], &[3, 3]]), 2, 3), 3);
    }

    #[test]
    fn family_size_example() {
        let (_, tl) = build_row_insert(
            &tab(&[&[1, 1, 1, 2, 2], &[2]]),
            &LabellingTableau::row_reading(&p("5,1")),
            3,
            2,
            1,
        )
        .unwrap();
        let y = coset_family(CosetKind::Y, &tl, 6, 1000).unwrap();
        assert_eq!(y.size(), 12);
        assert_eq!(y.elements().len(), 12);
        assert!(coset_family(CosetKind::Y, &tl, 6, 11).is_err());
    }

    #[test]
    fn single_column_family() {
        let t = LabellingTableau::row_reading(&p("1,1"));
        let (_, tl) = build_row_insert(&tab(&[&[1], &[2]]), &t, 1, 2, 2).unwrap();
        let y = coset_family(CosetKind::Y, &tl, 2, 1000).unwrap();
        let elements = y.elements();
        assert_eq!(elements.len(), 3);
        assert_eq!(elements.iter().filter(|(p, _)| p.is_identity()).count(), 1);
        assert!(elements.iter().filter(|(p, _)| !p.is_identity()).all(|(_, s)| *s == -1));
    }
}
