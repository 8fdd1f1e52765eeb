//! Dual-route checks: every bivariate product form is compared
//! coefficientwise against the exhaustive enumeration of its partition
//! class, and the univariate partition product against the counting
//! dynamic program. The two routes share no arithmetic.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use seaweed_core::{count_partitions, PartitionClass};
use seaweed_qseries::{partition_class_gf, BivariateProductSpec, GaussInt, ProductSpec};

#[test]
fn partition_product_matches_counting_oracle() {
    let series = ProductSpec::partition_gf().expand(60);
    for n in 0..=60usize {
        let counted = count_partitions(n as u64, &PartitionClass::All);
        let expanded = series.coeff(n).unwrap();
        assert_eq!(expanded.to_biguint().unwrap(), counted, "n = {n}");
    }
}

#[test]
fn residue_pair_product_counts_restricted_partitions_when_unsigned() {
    // With both leading monomials positive, 1/(q, q^{m−1}; q^m) counts
    // partitions into parts ≡ ±1 (mod m); check m = 8 against enumeration.
    let spec = ProductSpec::parse("1/(q,q7;q8)").unwrap();
    let series = spec.expand(40);
    let class = PartitionClass::odd_mod_four_d(2);
    for n in 0..=40usize {
        assert_eq!(
            series.coeff(n).unwrap().to_biguint().unwrap(),
            count_partitions(n as u64, &class),
            "n = {n}"
        );
    }
}

fn assert_bivariate_matches_class(
    spec: &BivariateProductSpec,
    class: &PartitionClass,
    order: usize,
    label: &str,
) {
    let by_product = spec.expand(order);
    let by_enumeration = partition_class_gf(class, order);
    for n in 0..=order {
        assert_eq!(by_product.row(n), by_enumeration.row(n), "{label}, n = {n}");
    }
}

#[test]
fn all_partitions_gf_product_form() {
    assert_bivariate_matches_class(
        &BivariateProductSpec::all_partitions_gf(),
        &PartitionClass::All,
        25,
        "1/(tq,q2;q2)",
    );
}

#[test]
fn distinct_parts_gf_product_form() {
    assert_bivariate_matches_class(
        &BivariateProductSpec::distinct_parts_gf(),
        &PartitionClass::Distinct,
        25,
        "(-tq,-q2;q2)",
    );
}

#[test]
fn odd_mod_gf_product_forms() {
    for d in 1..=3u64 {
        assert_bivariate_matches_class(
            &BivariateProductSpec::odd_mod_gf(d),
            &PartitionClass::odd_mod_four_d(d as u32),
            25,
            &format!("1/(tq,tq{};q{})", 4 * d - 1, 4 * d),
        );
    }
}

#[test]
fn gaussian_evaluation_is_real_for_the_standard_classes() {
    let classes = [
        PartitionClass::All,
        PartitionClass::Distinct,
        PartitionClass::OddParts,
        PartitionClass::odd_mod_four_d(2),
        PartitionClass::odd_mod_four_d(3),
    ];
    for class in &classes {
        let evaluated = partition_class_gf(class, 25).eval_i_neg_iq().unwrap();
        for n in 0..=25 {
            let c: &GaussInt = evaluated.coeff(n).unwrap();
            assert!(c.is_real(), "class {class:?}, n = {n}: got {c}");
        }
    }
}

#[test]
fn evaluation_of_class_gf_matches_its_product_form() {
    // The image of 1/(tq,q2;q2) under t = i, q ↦ −iq is 1/(q,−q2;−q2);
    // likewise for distinct parts. Both routes must agree exactly.
    let from_class = partition_class_gf(&PartitionClass::All, 30).eval_i_neg_iq().unwrap();
    let from_product = ProductSpec::all_partitions_parity_gf().expand(30);
    for n in 0..=30usize {
        let lhs = from_class.coeff(n).unwrap();
        assert!(lhs.im.is_zero());
        assert_eq!(&lhs.re, from_product.coeff(n).unwrap(), "all partitions, n = {n}");
    }

    let from_class = partition_class_gf(&PartitionClass::Distinct, 30).eval_i_neg_iq().unwrap();
    let from_product = ProductSpec::distinct_parts_parity_gf().expand(30);
    for n in 0..=30usize {
        let lhs = from_class.coeff(n).unwrap();
        assert!(lhs.im.is_zero());
        assert_eq!(&lhs.re, from_product.coeff(n).unwrap(), "distinct parts, n = {n}");
    }
}

#[test]
fn defect_products_match_remapped_enumeration() {
    let order = 20usize;
    let remapped = partition_class_gf(&PartitionClass::All, order)
        .remap_t_half_gap()
        .unwrap();
    let product = BivariateProductSpec::defect_gf().expand(order);
    for n in 0..=order {
        assert_eq!(remapped.row(n), product.row(n), "defect gf, n = {n}");
    }

    let mut restricted = partition_class_gf(&PartitionClass::All, order);
    restricted.mul_binomial(&BigInt::from(-1), 1, 1); // (1 − tq)·F
    let remapped = restricted.remap_t_half_gap().unwrap();
    let product = BivariateProductSpec::no_ones_defect_gf().expand(order);
    for n in 0..=order {
        assert_eq!(remapped.row(n), product.row(n), "no-ones defect gf, n = {n}");
    }
}

#[test]
fn no_ones_defect_rows_match_direct_enumeration() {
    let order = 20usize;
    let product = BivariateProductSpec::no_ones_defect_gf().expand(order);
    let by_class = partition_class_gf(&PartitionClass::NoOnes, order);
    for n in 0..=order {
        for k in 0..=n {
            // Partitions of n without ones and with odd-part count n−2k.
            let expect = if 2 * k <= n { by_class.coeff(n, n - 2 * k).clone() } else { BigInt::ZERO };
            assert_eq!(product.coeff(n, k), &expect, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn euler_identity_through_series() {
    // Distinct-parts and odd-parts class series agree after forgetting t.
    let distinct = partition_class_gf(&PartitionClass::Distinct, 30);
    let odd = partition_class_gf(&PartitionClass::OddParts, 30);
    for n in 0..=30 {
        let total = |row: &[BigInt]| row.iter().sum::<BigInt>();
        assert_eq!(total(distinct.row(n)), total(odd.row(n)), "n = {n}");
    }
}

#[test]
fn counting_oracle_uses_big_integers() {
    // p(200) = 3972999029388 exceeds u32; exercise the wide path.
    let p200 = count_partitions(200, &PartitionClass::All);
    assert_eq!(p200, "3972999029388".parse::<BigUint>().unwrap());
}
