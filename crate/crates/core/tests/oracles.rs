mod common;

use std::collections::HashMap;

use common::{all_partitions, p, standard_count, wreath_multiplicities, Characters};
use num_bigint::BigInt;
use plethyra::symfunc::{specht_dimension, SymmetricFunctions};
use plethyra::tableau::multiset_permutations;
use plethyra::{enumerate_semistandard, hom, BasisKind, Composition, Engine, LabellingTableau, Limits, Partition, Tableau};

#[test]
fn characters_match_the_diagram_oracle() {
    let engine = Engine::default();
    let mut chars = Characters::default();
    for n in 0..=8 {
        for lambda in all_partitions(n) {
            for rho in all_partitions(n) {
                let expected = chars.value(&lambda, &rho);
                let got = engine.character(&Partition::new(lambda.clone()).unwrap(), &Partition::new(rho.clone()).unwrap());
                assert_eq!(got, expected, "χ^{lambda:?}({rho:?})");
            }
        }
    }
}

#[test]
fn specht_dimensions_count_standard_tableaux() {
    let mut memo = HashMap::new();
    for n in 0..=10 {
        for lambda in all_partitions(n) {
            let expected = standard_count(&lambda, &mut memo);
            assert_eq!(specht_dimension(&Partition::new(lambda).unwrap()), expected);
        }
    }
}

#[test]
fn plethysm_matches_wreath_product_oracle() {
    let engine = Engine::default();
    for degree in 1..=8u32 {
        for m in 1..=degree {
            if degree % m != 0 {
                continue;
            }
            let n = degree / m;
            for nu in all_partitions(n) {
                let oracle = wreath_multiplicities(&nu, m);
                let got = engine
                    .plethysm(&Partition::new(nu.clone()).unwrap(), &Partition::row(m))
                    .unwrap();
                assert_eq!(got.len(), oracle.len(), "ν={nu:?} m={m}");
                for (lambda, c) in &oracle {
                    assert_eq!(&got.coefficient(&Partition::new(lambda.clone()).unwrap()), c, "ν={nu:?} m={m} λ={lambda:?}");
                }
            }
        }
    }
}

#[test]
fn derived_examples_match_the_oracle() {
    // p^(4)_{(2),(2)} = 1 and s_2∘s_2 = s_4 + s_22
    let oracle = wreath_multiplicities(&[2], 2);
    assert_eq!(oracle.get(&vec![4]), Some(&BigInt::from(1)));
    assert_eq!(oracle.len(), 2);
    assert_eq!(oracle.get(&vec![2, 2]), Some(&BigInt::from(1)));
    let limits = Limits::default();
    assert_eq!(
        hom::multiplicity_via_rank(&p("4"), 2, 2, BasisKind::Foulkes, &limits).unwrap() as i64,
        common::to_i64(&oracle[&vec![4]])
    );
    // m = 1 gives only the trivial module
    let oracle = wreath_multiplicities(&[3], 1);
    assert_eq!(oracle.len(), 1);
    assert_eq!(oracle.get(&vec![3]), Some(&BigInt::from(1)));
}

#[test]
fn semistandard_enumeration_matches_filtered_fillings() {
    for n in 0..=7u32 {
        for shape in all_partitions(n) {
            let shape = Partition::new(shape).unwrap();
            let t = LabellingTableau::row_reading(&shape);
            for content in all_partitions(n) {
                let cells: Vec<u32> = content
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &c)| std::iter::repeat(i as u32 + 1).take(c as usize))
                    .collect();
                let brute: Vec<Tableau> = multiset_permutations(&cells)
                    .into_iter()
                    .map(|w| Tableau::from_word(&w, &t))
                    .filter(|x| is_semistandard_oracle(x.rows()))
                    .collect();
                let listed = enumerate_semistandard(&shape, &Composition::new(content.clone()));
                assert_eq!(listed.len(), brute.len(), "{shape} {content:?}");
                let mut sorted = brute.clone();
                sorted.sort();
                let mut listed_sorted = listed.clone();
                listed_sorted.sort();
                assert_eq!(listed_sorted, sorted);
            }
        }
    }
}

fn is_semistandard_oracle(rows: &[Vec<u32>]) -> bool {
    let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
    let cols_ok = rows.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| below > above));
    rows_ok && cols_ok
}

#[test]
fn kostka_count_of_two_by_two_standard() {
    let shape = p("2,2");
    let all = multiset_permutations(&[1, 2, 3, 4]);
    let t = LabellingTableau::row_reading(&shape);
    let brute = all
        .into_iter()
        .filter(|w| is_semistandard_oracle(Tableau::from_word(w, &t).rows()))
        .count();
    assert_eq!(brute, 2);
    assert_eq!(enumerate_semistandard(&shape, &Composition::new(vec![1, 1, 1, 1])).len(), brute);
}

#[test]
fn machine_and_big_scalars_agree() {
    let small = SymmetricFunctions::<i128>::default();
    let big = Engine::default();
    for (nu, mu) in [("3", "2"), ("2,1", "2"), ("2", "3"), ("1,1,1", "1,1")] {
        let a = small.plethysm(&p(nu), &p(mu)).unwrap();
        let b = big.plethysm(&p(nu), &p(mu)).unwrap();
        assert_eq!(a.map_scalar(|x| BigInt::from(*x)), b);
    }
}
