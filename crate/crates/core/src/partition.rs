//! Integer partitions: the cycle-type data the rest of the crate is built on.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// A partition of a nonnegative integer, stored weakly decreasing with all
/// parts positive. The empty partition is the unique partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from positive parts in any order; the constructor
    /// normalizes to weakly decreasing.
    ///
    /// Panics if a part is zero.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `[1, 1, ..., 1]` with `n` ones.
    pub fn all_ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The one-part partition `[n]`; `n = 0` gives the empty partition.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// A hook shape `[n - arm, 1, ..., 1]` with `arm` trailing ones.
    /// Requires `arm < n`.
    pub fn hook(n: usize, arm: usize) -> Self {
        assert!(arm < n, "hook arm must be smaller than n");
        let mut parts = vec![1; arm + 1];
        parts[0] = n - arm;
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Distinct parts with multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Order of the centralizer in `S_n` of a permutation with this cycle
    /// type: `z(λ) = ∏ i^{m_i} m_i!` over parts `i` of multiplicity `m_i`.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, mult) in self.multiplicities() {
            for _ in 0..mult {
                z *= BigInt::from(part);
            }
            z *= factorial(mult);
        }
        z
    }

    /// Size of the `S_n` conjugacy class with this cycle type: `n!/z(λ)`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.sum()) / self.centralizer_order()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Canonical ordering used everywhere a deterministic order of partitions is
/// needed: fewer parts first, then larger leading parts first.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    f
}

/// All partitions of `n`, yielded exactly once in reverse-lexicographic
/// order: `[n]` first, `[1, ..., 1]` last.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        self.next = successor(&cur);
        Some(Partition { parts: cur })
    }
}

/// Next partition in reverse-lexicographic order, or `None` after `[1,...,1]`.
fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let k = parts.iter().rposition(|&p| p > 1)?;
    let mut next: Vec<usize> = parts[..=k].to_vec();
    next[k] -= 1;
    let cap = next[k];
    // Redistribute everything after position k greedily in blocks of `cap`.
    let mut rem = parts[k] - next[k] + (parts.len() - k - 1);
    while rem > 0 {
        let take = rem.min(cap);
        next.push(take);
        rem -= take;
    }
    Some(next)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_normalizes() {
        let p = Partition::new(vec![1, 3, 2, 3]);
        assert_eq!(p.parts(), &[3, 3, 2, 1]);
        assert_eq!(p.sum(), 9);
        assert_eq!(p.len(), 4);
    }

    #[test]
    #[should_panic]
    fn zero_part_rejected() {
        Partition::new(vec![2, 0]);
    }

    #[test]
    fn enumeration_order_and_counts() {
        let ps: Vec<Partition> = partitions_of(4).collect();
        assert_eq!(ps.len(), 5);
        assert_eq!(ps[0].parts(), &[4]);
        assert_eq!(ps[1].parts(), &[3, 1]);
        assert_eq!(ps[2].parts(), &[2, 2]);
        assert_eq!(ps[3].parts(), &[2, 1, 1]);
        assert_eq!(ps[4].parts(), &[1, 1, 1, 1]);

        assert_eq!(partitions_of(1).count(), 1);
        assert_eq!(partitions_of(10).count(), 42);
    }

    /// Independent count of partitions by the "parts bounded by k" recurrence.
    fn partition_count(n: usize) -> u64 {
        // ways[m] = number of partitions of m with parts considered so far
        let mut ways = vec![0u64; n + 1];
        ways[0] = 1;
        for part in 1..=n {
            for m in part..=n {
                ways[m] += ways[m - part];
            }
        }
        ways[n]
    }

    #[test]
    fn enumeration_matches_recurrence() {
        for n in 0..=15 {
            assert_eq!(
                partitions_of(n).count() as u64,
                partition_count(n),
                "partition count mismatch at n = {n}"
            );
        }
    }

    #[test]
    fn each_partition_once_and_valid() {
        for n in 0..=12 {
            let all: Vec<Partition> = partitions_of(n).collect();
            for p in &all {
                assert_eq!(p.sum(), n);
                assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            }
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
    }

    #[test]
    fn centralizer_orders() {
        // [n] -> n, [1^n] -> n!, [2,1] -> 2
        assert_eq!(Partition::single(5).centralizer_order(), BigInt::from(5));
        assert_eq!(Partition::all_ones(4).centralizer_order(), BigInt::from(24));
        assert_eq!(
            Partition::new(vec![2, 1]).centralizer_order(),
            BigInt::from(2)
        );
        assert_eq!(Partition::new(vec![2, 1]).class_size(), BigInt::from(3));
        // z([2,2,1,1,1]) = 2^2 2! * 1^3 3! = 48
        assert_eq!(
            Partition::new(vec![2, 2, 1, 1, 1]).centralizer_order(),
            BigInt::from(48)
        );
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=10 {
            let total: BigInt = partitions_of(n).map(|p| p.class_size()).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn canonical_order() {
        let a = Partition::new(vec![3, 1]);
        let b = Partition::new(vec![2, 2]);
        let c = Partition::single(4);
        let d = Partition::all_ones(4);
        // fewer parts first, then larger leading parts first
        assert!(c < a);
        assert!(a < b);
        assert!(b < d);
    }

    #[test]
    fn hook_shapes() {
        assert_eq!(Partition::hook(5, 0).parts(), &[5]);
        assert_eq!(Partition::hook(5, 2).parts(), &[3, 1, 1]);
        assert_eq!(Partition::hook(5, 4).parts(), &[1, 1, 1, 1, 1]);
    }
}
