//! Index statistics of partitions by exhaustive enumeration.
//!
//! Everything here is the brute-force side of an identity: censuses walk
//! every partition of n and classify it, so their totals can be compared
//! against closed-form series expansions computed elsewhere. No generating
//! function machinery is used in this module.
//!
//! The index of a partition λ of n is the seaweed index of the pair
//! λ / (n); the conjugated index uses the pair λ / 1ⁿ. Both are −1 on the
//! empty partition.

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::meander::{seaweed_index, Meander};
use crate::partition::{for_each_partition, Composition, Partition, PartitionClass};

/// Index of λ: the seaweed index of λ over the single block (n).
pub fn partition_index(lambda: &Partition) -> i64 {
    let n = u32::try_from(lambda.weight()).expect("weight too large");
    seaweed_index(&lambda.to_composition(), &Composition::single(n))
        .expect("weights match by construction")
}

/// Conjugated index of λ: the seaweed index of λ over 1ⁿ.
///
/// The λ/1ⁿ meander has no cycles, so the index collapses to the closed
/// form (op(λ) + n)/2 − 1; this function computes both the graph value and
/// the closed form and insists they agree.
pub fn conjugated_index(lambda: &Partition) -> i64 {
    let n = lambda.weight();
    let graph = seaweed_index(&lambda.to_composition(), &Composition::all_ones(n))
        .expect("weights match by construction");
    let closed = ((u64::from(lambda.odd_part_count()) + n) / 2) as i64 - 1;
    assert_eq!(graph, closed, "conjugated index mismatch for {lambda}");
    graph
}

/// Parity of the index of a partition with `op` odd parts and weight `n`:
/// (op(λ) + op((n)))/2 − 1 mod 2, with op((n)) = n mod 2.
fn index_parity(op: u64, n: u64) -> u8 {
    (((op + n % 2) / 2 + 1) % 2) as u8
}

/// Parity of the conjugated index: (op(λ) + n)/2 − 1 mod 2.
fn conjugated_index_parity(op: u64, n: u64) -> u8 {
    (((op + n) / 2 + 1) % 2) as u8
}

/// Exhaustive classification of the partitions of one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatRecord {
    pub n: u64,
    /// Partitions with even index.
    pub even_index: u64,
    /// Partitions with odd index. The empty partition has index −1 and
    /// counts as odd, so the n = 0 record has odd_index = 1.
    pub odd_index: u64,
    /// Partitions with even conjugated index.
    pub even_conj: u64,
    /// Partitions with odd conjugated index.
    pub odd_conj: u64,
    /// Counts by odd-part count mod 4. Residues of the wrong parity are
    /// always zero since op(λ) ≡ n (mod 2).
    pub op_mod4: [u64; 4],
}

impl StatRecord {
    pub fn total(&self) -> u64 {
        self.even_index + self.odd_index
    }

    /// o(n) − e(n).
    pub fn index_gap(&self) -> i64 {
        self.odd_index as i64 - self.even_index as i64
    }

    /// ō(n) − ē(n).
    pub fn conj_index_gap(&self) -> i64 {
        self.odd_conj as i64 - self.even_conj as i64
    }
}

/// Walks every partition of `n` in `class` and tallies index parity,
/// conjugated-index parity, and op mod 4.
///
/// Parities come from the odd-part-count formula; a deterministic ~1%
/// sample is re-derived from actual meander graphs as a guard against a
/// transcription slip in the formula.
pub fn parity_census(class: &PartitionClass, n: u64) -> StatRecord {
    let mut rec = StatRecord {
        n,
        even_index: 0,
        odd_index: 0,
        even_conj: 0,
        odd_conj: 0,
        op_mod4: [0; 4],
    };
    let mut rng = SmallRng::seed_from_u64(0x5ea3eed ^ n);
    let single = Composition::single(u32::try_from(n).expect("weight too large"));
    let ones = Composition::all_ones(n);
    for_each_partition(n, class, |parts, odd| {
        let op = u64::from(odd);
        if index_parity(op, n) == 1 {
            rec.odd_index += 1;
        } else {
            rec.even_index += 1;
        }
        if conjugated_index_parity(op, n) == 1 {
            rec.odd_conj += 1;
        } else {
            rec.even_conj += 1;
        }
        rec.op_mod4[(op % 4) as usize] += 1;

        if rng.gen_ratio(1, 100) {
            let lambda = Composition::new(parts.to_vec()).expect("stream parts are positive");
            let by_graph = seaweed_index(&lambda, &single).unwrap();
            assert_eq!(
                by_graph.rem_euclid(2) as u8,
                index_parity(op, n),
                "index parity formula disagrees with the graph on {lambda}"
            );
            let by_graph = seaweed_index(&lambda, &ones).unwrap();
            assert_eq!(
                by_graph.rem_euclid(2) as u8,
                conjugated_index_parity(op, n),
                "conjugated index parity formula disagrees with the graph on {lambda}"
            );
        }
    });
    rec
}

/// o(n) − e(n) over partitions of n into odd parts.
pub fn index_excess(n: u64) -> i64 {
    parity_census(&PartitionClass::OddParts, n).index_gap()
}

/// (−1)^⌈n/2⌉ · (o(n) − e(n)) over partitions into odd parts.
pub fn signed_index_excess(n: u64) -> i64 {
    let sign = if n.div_ceil(2) % 2 == 1 { -1 } else { 1 };
    sign * index_excess(n)
}

/// Number of partitions of n whose conjugated index equals n − k − 1,
/// i.e. falls k short of its maximum. Equivalently, partitions of n with
/// exactly n − 2k odd parts.
pub fn defect_count(n: u64, k: u64) -> u64 {
    if 2 * k > n {
        return 0;
    }
    let want_op = n - 2 * k;
    let mut count = 0u64;
    for_each_partition(n, &PartitionClass::All, |_, odd| {
        if u64::from(odd) == want_op {
            count += 1;
        }
    });
    count
}

/// Census of conjugated-index defects: `counts[n][k]` is the number of
/// partitions of n with defect k, `no_ones[n][k]` restricts to partitions
/// without parts equal to 1, and `limits[k]` is the stabilized large-n
/// value of column k.
///
/// A partition with defect k has at most k parts larger than 1 and largest
/// part at most 2k + 1, so column k is constant from n = 3k on and the
/// no-ones column vanishes beyond n = 3k; both facts are asserted during
/// the build, along with the column-sum identity Σₙ no_ones[n][k] =
/// limits[k].
#[derive(Clone, Debug)]
pub struct DefectTable {
    max_k: usize,
    counts: Vec<Vec<u64>>,
    no_ones: Vec<Vec<u64>>,
    limits: Vec<u64>,
}

impl DefectTable {
    pub fn build(max_k: usize) -> Self {
        let max_n = 3 * max_k;
        let mut counts = vec![vec![0u64; max_k + 1]; max_n + 1];
        let mut no_ones = vec![vec![0u64; max_k + 1]; max_n + 1];
        for n in 0..=max_n as u64 {
            for_each_partition(n, &PartitionClass::All, |_, odd| {
                let k = ((n - u64::from(odd)) / 2) as usize;
                if k <= max_k {
                    counts[n as usize][k] += 1;
                }
            });
            for_each_partition(n, &PartitionClass::NoOnes, |_, odd| {
                let k = ((n - u64::from(odd)) / 2) as usize;
                if k <= max_k {
                    no_ones[n as usize][k] += 1;
                }
            });
        }
        let limits: Vec<u64> = (0..=max_k).map(|k| counts[3 * k][k]).collect();
        for k in 0..=max_k {
            let column_sum: u64 = no_ones.iter().map(|row| row[k]).sum();
            assert_eq!(column_sum, limits[k], "no-ones column {k} does not sum to the limit");
            for (n, row) in no_ones.iter().enumerate().skip(3 * k + 1) {
                assert_eq!(row[k], 0, "no-ones count out of support at n={n}, k={k}");
            }
        }
        DefectTable { max_k, counts, no_ones, limits }
    }

    pub fn max_k(&self) -> usize {
        self.max_k
    }

    /// Largest tabulated weight, 3·max_k.
    pub fn max_n(&self) -> usize {
        3 * self.max_k
    }

    pub fn count(&self, n: usize, k: usize) -> u64 {
        self.counts[n][k]
    }

    pub fn no_ones_count(&self, n: usize, k: usize) -> u64 {
        self.no_ones[n][k]
    }

    /// Stabilized column value c(k) = counts[3k][k].
    pub fn limit(&self, k: usize) -> u64 {
        self.limits[k]
    }

    pub fn limits(&self) -> &[u64] {
        &self.limits
    }
}

/// Bottom compositions from the two parity-transfer families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BottomVariant {
    /// 2^⌊n/2⌋ 1^(n mod 2); index parity over this bottom matches the
    /// plain index.
    TwosThenOnes,
    /// 4^⌊n/4⌋ 1^(n mod 4); index parity over this bottom matches the
    /// conjugated index.
    FoursThenOnes,
}

impl BottomVariant {
    pub fn bottom_composition(self, n: u64) -> Composition {
        let (block, count, rest) = match self {
            BottomVariant::TwosThenOnes => (2u32, n / 2, n % 2),
            BottomVariant::FoursThenOnes => (4u32, n / 4, n % 4),
        };
        let mut parts = vec![block; count as usize];
        parts.extend(std::iter::repeat(1).take(rest as usize));
        Composition::new(parts).expect("parts are positive")
    }

    fn reference_bottom(self, n: u64) -> Composition {
        match self {
            BottomVariant::TwosThenOnes => Composition::single(n as u32),
            BottomVariant::FoursThenOnes => Composition::all_ones(n),
        }
    }
}

/// Checks, over every partition of n, that the seaweed index over the
/// variant bottom has the same parity as the index over the reference
/// bottom ((n) or 1ⁿ). Both sides are computed from meander graphs.
pub fn bottom_swap_preserves_index_parity(n: u64, variant: BottomVariant) -> bool {
    let bottom = variant.bottom_composition(n);
    let reference = variant.reference_bottom(n);
    let mut all_match = true;
    for_each_partition(n, &PartitionClass::All, |parts, _| {
        if !all_match {
            return;
        }
        let lambda = Composition::new(parts.to_vec()).expect("stream parts are positive");
        let lhs = seaweed_index(&lambda, &bottom).unwrap();
        let rhs = seaweed_index(&lambda, &reference).unwrap();
        if lhs.rem_euclid(2) != rhs.rem_euclid(2) {
            all_match = false;
        }
    });
    all_match
}

/// Cycle count of the λ/1ⁿ meander; exposed so callers can verify it is
/// always zero.
pub fn conjugated_meander_cycles(lambda: &Partition) -> u64 {
    let m = Meander::new(&lambda.to_composition(), &Composition::all_ones(lambda.weight()))
        .expect("weights match by construction");
    m.component_counts().cycles
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn index_examples() {
        assert_eq!(partition_index(&Partition::empty()), -1);
        assert_eq!(partition_index(&part("1")), 0);
        assert_eq!(partition_index(&part("2")), 1);
        assert_eq!(partition_index(&part("3,2,1,1")), 1);
    }

    #[test]
    fn conjugated_index_examples() {
        assert_eq!(conjugated_index(&part("1,1,1")), 2);
        assert_eq!(conjugated_index(&part("2,1")), 1);
        assert_eq!(conjugated_index(&Partition::empty()), -1);
    }

    #[test]
    fn census_of_weight_two() {
        let rec = parity_census(&PartitionClass::All, 2);
        assert_eq!(rec.even_index, 1); // (1,1)
        assert_eq!(rec.odd_index, 1); // (2)
        assert_eq!(rec.even_conj, 1); // (2)
        assert_eq!(rec.odd_conj, 1); // (1,1)
        assert_eq!(rec.op_mod4, [1, 0, 1, 0]);
    }

    #[test]
    fn census_of_weight_zero_counts_empty_partition_as_odd() {
        let rec = parity_census(&PartitionClass::All, 0);
        assert_eq!(rec.even_index, 0);
        assert_eq!(rec.odd_index, 1);
        assert_eq!(rec.even_conj, 0);
        assert_eq!(rec.odd_conj, 1);
    }

    #[test]
    fn census_of_odd_parts_weight_one() {
        let rec = parity_census(&PartitionClass::OddParts, 1);
        assert_eq!(rec.even_index, 1);
        assert_eq!(rec.odd_index, 0);
    }

    #[test]
    fn index_excess_small_values() {
        assert_eq!(index_excess(0), 1);
        assert_eq!(index_excess(1), -1);
        assert_eq!(index_excess(2), -1);
        assert_eq!(index_excess(3), 0);
    }

    #[test]
    fn signed_index_excess_small_values() {
        assert_eq!(signed_index_excess(0), 1);
        assert_eq!(signed_index_excess(1), 1);
        assert_eq!(signed_index_excess(2), 1);
        assert_eq!(signed_index_excess(3), 0);
    }

    #[test]
    fn census_parities_match_full_graph_computation() {
        for n in 0..=15u64 {
            let rec = parity_census(&PartitionClass::All, n);
            let mut by_graph = StatRecord {
                n,
                even_index: 0,
                odd_index: 0,
                even_conj: 0,
                odd_conj: 0,
                op_mod4: [0; 4],
            };
            for lambda in partitions_of(n, &PartitionClass::All) {
                if partition_index(&lambda).rem_euclid(2) == 1 {
                    by_graph.odd_index += 1;
                } else {
                    by_graph.even_index += 1;
                }
                if conjugated_index(&lambda).rem_euclid(2) == 1 {
                    by_graph.odd_conj += 1;
                } else {
                    by_graph.even_conj += 1;
                }
                by_graph.op_mod4[(lambda.odd_part_count() % 4) as usize] += 1;
            }
            assert_eq!(rec, by_graph, "n = {n}");
        }
    }

    #[test]
    fn defect_table_small_limits() {
        let table = DefectTable::build(6);
        assert_eq!(table.limits(), &[1, 2, 5, 10, 20, 36, 65]);
        assert_eq!(table.count(0, 0), 1);
        // Defect 1 without ones: exactly (2) and (3).
        assert_eq!(table.no_ones_count(2, 1), 1);
        assert_eq!(table.no_ones_count(3, 1), 1);
    }

    #[test]
    fn defect_counts_vanish_below_support() {
        let table = DefectTable::build(4);
        for k in 1..=4usize {
            for n in 0..(2 * k) {
                assert_eq!(table.count(n, k), 0, "n={n}, k={k}");
            }
        }
        assert_eq!(defect_count(5, 3), 0);
    }

    #[test]
    fn defect_count_agrees_with_table() {
        let table = DefectTable::build(4);
        for n in 0..=12usize {
            for k in 0..=4usize {
                assert_eq!(defect_count(n as u64, k as u64), table.count(n, k));
            }
        }
    }

    #[test]
    fn stabilization_in_a_window_beyond_the_bound() {
        for k in 0..=4u64 {
            let stable = defect_count(3 * k, k);
            for n in (3 * k)..=(3 * k + 6) {
                assert_eq!(defect_count(n, k), stable, "n={n}, k={k}");
            }
        }
    }

    #[test]
    fn parity_transfer_small_weights() {
        assert!(bottom_swap_preserves_index_parity(1, BottomVariant::TwosThenOnes));
        assert!(bottom_swap_preserves_index_parity(5, BottomVariant::TwosThenOnes));
        assert!(bottom_swap_preserves_index_parity(8, BottomVariant::FoursThenOnes));
        for n in 1..=12 {
            assert!(bottom_swap_preserves_index_parity(n, BottomVariant::TwosThenOnes), "n={n}");
            assert!(bottom_swap_preserves_index_parity(n, BottomVariant::FoursThenOnes), "n={n}");
        }
    }

    #[test]
    fn conjugated_meander_has_no_cycles() {
        for n in 0..=18u64 {
            for lambda in partitions_of(n, &PartitionClass::All) {
                assert_eq!(conjugated_meander_cycles(&lambda), 0, "{lambda}");
            }
        }
    }
}
