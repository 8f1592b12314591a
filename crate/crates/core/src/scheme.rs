//! Ramification schemes (passports): a degree together with one partition per
//! branch point, genus bookkeeping, enumeration and decomposition.
//!
//! A scheme with three fibers is displayed and stored in the order
//! `[λ_∞][λ_0][λ_1]` (faces, black vertices, white vertices).

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::partition::{partitions_of, Partition};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SchemeError {
    #[error("a scheme needs at least 3 fibers, got {0}")]
    TooFewFibers(usize),
    #[error("fiber {index} sums to {got}, but fiber 1 sums to {expected}")]
    FiberSumMismatch {
        /// 1-based fiber index, as displayed
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("scheme degree must be at least 1")]
    ZeroDegree,
    #[error("scheme parse error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },
}

/// A ramification scheme: `k >= 3` partitions of a common degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scheme {
    fibers: Vec<Partition>,
}

impl Scheme {
    pub fn new(fibers: Vec<Partition>) -> Result<Self, SchemeError> {
        if fibers.len() < 3 {
            return Err(SchemeError::TooFewFibers(fibers.len()));
        }
        let degree = fibers[0].sum();
        if degree == 0 {
            return Err(SchemeError::ZeroDegree);
        }
        for (i, f) in fibers.iter().enumerate().skip(1) {
            if f.sum() != degree {
                return Err(SchemeError::FiberSumMismatch {
                    index: i + 1,
                    got: f.sum(),
                    expected: degree,
                });
            }
        }
        Ok(Scheme { fibers })
    }

    /// Convenience constructor for the usual three-fiber case, in the
    /// display order (faces, black, white).
    pub fn three(
        infinity: Partition,
        zero: Partition,
        one: Partition,
    ) -> Result<Self, SchemeError> {
        Scheme::new(vec![infinity, zero, one])
    }

    pub fn degree(&self) -> usize {
        self.fibers[0].sum()
    }

    pub fn fibers(&self) -> &[Partition] {
        &self.fibers
    }

    pub fn fiber_count(&self) -> usize {
        self.fibers.len()
    }

    /// Fiber over infinity (face degrees) for a three-fiber scheme.
    pub fn fiber_infinity(&self) -> &Partition {
        &self.fibers[0]
    }

    /// Fiber over 0 (black vertex degrees) for a three-fiber scheme.
    pub fn fiber_zero(&self) -> &Partition {
        &self.fibers[1]
    }

    /// Fiber over 1 (white vertex degrees) for a three-fiber scheme.
    pub fn fiber_one(&self) -> &Partition {
        &self.fibers[2]
    }

    /// Riemann-Hurwitz genus: `2 - 2g = 2n - Σ_i (n - c(λ_i))`.
    ///
    /// Returns `None` when the formula yields a negative or half-integer
    /// value; such a scheme admits no connected covering.
    pub fn genus(&self) -> Option<u64> {
        let n = self.degree() as i64;
        let k = self.fibers.len() as i64;
        let cycles: i64 = self.fibers.iter().map(|f| f.len() as i64).sum();
        let twice = 2 + (k - 2) * n - cycles;
        if twice >= 0 && twice % 2 == 0 {
            Some((twice / 2) as u64)
        } else {
            None
        }
    }

    /// True when some fiber is the single part `[n]` (the covering is a
    /// polynomial and its dessin a tree).
    pub fn is_polynomial(&self) -> bool {
        self.fibers.iter().any(|f| f.len() == 1)
    }

    /// Fibers sorted in the canonical partition order. Counting invariants
    /// are independent of fiber order, so this is the deduplication and memo
    /// key used throughout.
    pub fn canonical(&self) -> Scheme {
        let mut fibers = self.fibers.clone();
        fibers.sort();
        Scheme { fibers }
    }

    pub fn is_canonical(&self) -> bool {
        self.fibers.windows(2).all(|w| w[0] <= w[1])
    }

    /// Parses the bracket grammar, e.g. `[3,6][2,2,2,3][1,2,2,2,2]`.
    /// Whitespace is tolerated between groups, not inside them.
    pub fn parse(text: &str) -> Result<Scheme, SchemeError> {
        let bytes = text.as_bytes();
        let err = |offset: usize, msg: &str| SchemeError::Parse {
            offset: offset + 1,
            msg: msg.to_string(),
        };
        let mut fibers = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            match bytes[i] {
                b' ' | b'\t' | b'\n' | b'\r' => i += 1,
                b'[' => {
                    i += 1;
                    let mut parts = Vec::new();
                    loop {
                        let start = i;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                        if i == start {
                            return Err(err(i, "expected a part"));
                        }
                        let part: usize = text[start..i]
                            .parse()
                            .map_err(|_| err(start, "part out of range"))?;
                        if part == 0 {
                            return Err(err(start, "parts must be positive"));
                        }
                        parts.push(part);
                        if i >= bytes.len() {
                            return Err(err(i, "unclosed group"));
                        }
                        match bytes[i] {
                            b',' => i += 1,
                            b']' => {
                                i += 1;
                                break;
                            }
                            _ => return Err(err(i, "expected ',' or ']'")),
                        }
                    }
                    fibers.push(Partition::new(parts));
                }
                _ => return Err(err(i, "expected '['")),
            }
        }
        Scheme::new(fibers)
    }
}

/// Bracket grammar with parts weakly decreasing: `[7][3,2,2][2,2,1,1,1]`.
impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fiber in &self.fibers {
            write!(f, "{fiber}")?;
        }
        Ok(())
    }
}

/// All three-fiber schemes of the given degree and genus, one per unordered
/// fiber triple, fibers in canonical order, yielded in canonical order.
pub fn enumerate_schemes(n: usize, genus: u64) -> Vec<Scheme> {
    assert!(n >= 1);
    // For k = 3 the genus pins the total number of parts.
    let target = 2 + n as i64 - 2 * genus as i64;
    if target < 3 {
        return Vec::new();
    }
    let target = target as usize;
    if target > 3 * n {
        return Vec::new();
    }
    // Partitions of n grouped by number of parts, each group sorted in the
    // canonical partition order.
    let mut by_len: HashMap<usize, Vec<Partition>> = HashMap::new();
    for p in partitions_of(n) {
        by_len.entry(p.len()).or_default().push(p);
    }
    for group in by_len.values_mut() {
        group.sort();
    }
    let empty: Vec<Partition> = Vec::new();
    let group = |len: usize| by_len.get(&len).unwrap_or(&empty);

    let mut out = Vec::new();
    for la in 1..=n {
        if la > target {
            break;
        }
        for lb in la..=n {
            let lc = match target.checked_sub(la + lb) {
                Some(lc) if lc >= lb && lc <= n => lc,
                _ => continue,
            };
            for (ia, a) in group(la).iter().enumerate() {
                let bs = group(lb);
                let b_start = if lb == la { ia } else { 0 };
                for (ib, b) in bs.iter().enumerate().skip(b_start) {
                    let cs = group(lc);
                    let c_start = if lc == lb { ib } else { 0 };
                    for c in cs.iter().skip(c_start) {
                        out.push(Scheme {
                            fibers: vec![a.clone(), b.clone(), c.clone()],
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// All ways to split `s` into `m >= 2` sub-schemes whose fiber-wise multiset
/// union reproduces `s`. Each inner vector is sorted (it represents a
/// multiset of blocks); the outer list is deterministic and duplicate-free.
///
/// Splitting a scheme corresponds to splitting a covering into disjoint
/// components, which is why a single-part fiber admits no decomposition.
pub fn decompositions(s: &Scheme) -> Vec<Vec<Scheme>> {
    let mut memo: HashMap<Scheme, BTreeSet<Vec<Scheme>>> = HashMap::new();
    let all = all_multiset_splits(s, &mut memo);
    all.into_iter().filter(|blocks| blocks.len() >= 2).collect()
}

/// Every multiset of blocks (including the trivial `{s}`) splitting `s`.
fn all_multiset_splits(
    s: &Scheme,
    memo: &mut HashMap<Scheme, BTreeSet<Vec<Scheme>>>,
) -> BTreeSet<Vec<Scheme>> {
    if let Some(hit) = memo.get(s) {
        return hit.clone();
    }
    let n = s.degree();
    let k = s.fiber_count();
    let mut result: BTreeSet<Vec<Scheme>> = BTreeSet::new();
    result.insert(vec![s.clone()]);

    // The block containing the first (largest) part of fiber 0 is
    // enumerated explicitly; the remainder is split recursively.
    let anchor = s.fibers[0].parts()[0];
    let rest0: Vec<usize> = s.fibers[0].parts()[1..].to_vec();
    let sub0 = submultisets_by_sum(&rest0);
    let subs: Vec<HashMap<usize, Vec<Vec<usize>>>> = (1..k)
        .map(|i| submultisets_by_sum(s.fibers[i].parts()))
        .collect();

    for d in anchor..n {
        // block fiber 0: anchor plus a sub-multiset of the rest summing d - anchor
        let opts0: Vec<Vec<usize>> = match sub0.get(&(d - anchor)) {
            Some(list) => list
                .iter()
                .map(|t| {
                    let mut v = vec![anchor];
                    v.extend_from_slice(t);
                    v
                })
                .collect(),
            None => continue,
        };
        // per-fiber options of sum d for the other fibers
        let mut opt_rest: Vec<&Vec<Vec<usize>>> = Vec::new();
        let mut feasible = true;
        for sub in &subs {
            match sub.get(&d) {
                Some(list) if !list.is_empty() => opt_rest.push(list),
                _ => {
                    feasible = false;
                    break;
                }
            }
        }
        if !feasible {
            continue;
        }
        for f0 in &opts0 {
            let mut choice: Vec<usize> = vec![0; k - 1];
            loop {
                let mut block_fibers = Vec::with_capacity(k);
                block_fibers.push(Partition::new(f0.clone()));
                for (i, &c) in choice.iter().enumerate() {
                    block_fibers.push(Partition::new(opt_rest[i][c].clone()));
                }
                let block = Scheme {
                    fibers: block_fibers,
                };
                let remainder = subtract(s, &block);
                for tail in all_multiset_splits(&remainder, memo) {
                    let mut blocks = tail;
                    blocks.push(block.clone());
                    blocks.sort();
                    result.insert(blocks);
                }
                // odometer over the per-fiber choices
                let mut pos = 0;
                loop {
                    if pos == choice.len() {
                        break;
                    }
                    choice[pos] += 1;
                    if choice[pos] < opt_rest[pos].len() {
                        break;
                    }
                    choice[pos] = 0;
                    pos += 1;
                }
                if pos == choice.len() {
                    break;
                }
            }
        }
    }
    memo.insert(s.clone(), result.clone());
    result
}

/// Fiber-wise multiset difference; the block must be contained in `s`.
fn subtract(s: &Scheme, block: &Scheme) -> Scheme {
    let fibers = s
        .fibers
        .iter()
        .zip(block.fibers.iter())
        .map(|(f, b)| {
            let mut parts = f.parts().to_vec();
            for &p in b.parts() {
                let pos = parts
                    .iter()
                    .position(|&q| q == p)
                    .expect("block is a sub-multiset");
                parts.remove(pos);
            }
            Partition::new(parts)
        })
        .collect();
    Scheme { fibers }
}

/// Distinct sub-multisets of a weakly decreasing parts list, grouped by sum.
/// The empty sub-multiset is included under sum 0.
fn submultisets_by_sum(parts: &[usize]) -> HashMap<usize, Vec<Vec<usize>>> {
    let mults = Partition::new_or_empty(parts);
    let groups = mults.multiplicities();
    let mut out: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
    let mut current: Vec<usize> = Vec::new();
    build_submultisets(&groups, 0, &mut current, &mut out);
    out
}

fn build_submultisets(
    groups: &[(usize, usize)],
    idx: usize,
    current: &mut Vec<usize>,
    out: &mut HashMap<usize, Vec<Vec<usize>>>,
) {
    if idx == groups.len() {
        out.entry(current.iter().sum())
            .or_default()
            .push(current.clone());
        return;
    }
    let (part, mult) = groups[idx];
    for take in 0..=mult {
        for _ in 0..take {
            current.push(part);
        }
        build_submultisets(groups, idx + 1, current, out);
        for _ in 0..take {
            current.pop();
        }
    }
}

impl Partition {
    /// Internal helper: builds a partition allowing an empty slice.
    fn new_or_empty(parts: &[usize]) -> Partition {
        if parts.is_empty() {
            Partition::empty()
        } else {
            Partition::new(parts.to_vec())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scheme(text: &str) -> Scheme {
        Scheme::parse(text).unwrap()
    }

    #[test]
    fn parse_known_schemes() {
        let s = scheme("[3,6][2,2,2,3][1,2,2,2,2]");
        assert_eq!(s.degree(), 9);
        assert_eq!(s.fiber_infinity().parts(), &[6, 3]);
        assert_eq!(s.fiber_zero().parts(), &[3, 2, 2, 2]);
        assert_eq!(s.fiber_one().parts(), &[2, 2, 2, 2, 1]);

        let t = scheme("[7][3,2,2][2,2,1,1,1]");
        assert_eq!(t.degree(), 7);
        assert_eq!(t.genus(), Some(0));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Scheme::parse("[2][3][1,1,1]"),
            Err(SchemeError::FiberSumMismatch {
                index: 2,
                got: 3,
                expected: 2
            })
        ));
        assert!(Scheme::parse("[1][1]").is_err());
        assert!(Scheme::parse("[0][0][0]").is_err());
        assert!(Scheme::parse("[1,]([1][1]").is_err());
        assert!(Scheme::parse("[1 1][2][2]").is_err());
        assert!(Scheme::parse("").is_err());
    }

    #[test]
    fn display_round_trip() {
        for n in 1..=10 {
            for s in enumerate_schemes(n, 0) {
                let back = Scheme::parse(&s.to_string()).unwrap();
                assert_eq!(back, s);
            }
        }
    }

    #[test]
    fn whitespace_between_groups() {
        let s = Scheme::parse(" [3] [3]\t[1,1,1] ").unwrap();
        assert_eq!(s.to_string(), "[3][3][1,1,1]");
    }

    #[test]
    fn genus_values() {
        // cyclic: [n][n][1^n] has genus 0
        for n in 1..=8 {
            let s = Scheme::three(
                Partition::single(n),
                Partition::single(n),
                Partition::all_ones(n),
            )
            .unwrap();
            assert_eq!(s.genus(), Some(0));
        }
        assert_eq!(scheme("[3,6][2,2,2,3][1,2,2,2,2]").genus(), Some(0));
        // parity obstructions
        assert_eq!(scheme("[2][1,1][1,1]").genus(), None);
        assert_eq!(scheme("[2][2][2]").genus(), None);
        // torus-style scheme
        assert_eq!(scheme("[3][3][3]").genus(), Some(1));
        // negative formal genus (only disconnected coverings exist)
        assert_eq!(scheme("[1,1][1,1][1,1]").genus(), None);
    }

    #[test]
    fn genus_fiber_order_invariant() {
        for n in 1..=7 {
            for s in enumerate_schemes(n, 0) {
                let mut fibers = s.fibers().to_vec();
                fibers.rotate_left(1);
                let rotated = Scheme::new(fibers).unwrap();
                assert_eq!(rotated.genus(), s.genus());
            }
        }
    }

    #[test]
    fn enumerate_small_degrees() {
        let one = enumerate_schemes(1, 0);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_string(), "[1][1][1]");

        let two = enumerate_schemes(2, 0);
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].to_string(), "[2][2][1,1]");

        let three = enumerate_schemes(3, 0);
        let shown: Vec<String> = three.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, vec!["[3][3][1,1,1]", "[3][2,1][2,1]"]);
    }

    #[test]
    fn enumerate_matches_brute_force_filter() {
        for n in 1..=7 {
            for g in 0..=2u64 {
                let fast = enumerate_schemes(n, g);
                // brute force: every ordered triple, canonicalized and deduped
                let parts: Vec<Partition> = partitions_of(n).collect();
                let mut brute = BTreeSet::new();
                for a in &parts {
                    for b in &parts {
                        for c in &parts {
                            let s = Scheme::new(vec![a.clone(), b.clone(), c.clone()]).unwrap();
                            if s.genus() == Some(g) {
                                brute.insert(s.canonical());
                            }
                        }
                    }
                }
                let fast_set: BTreeSet<Scheme> = fast.iter().cloned().collect();
                assert_eq!(fast_set, brute, "n = {n}, g = {g}");
                assert_eq!(fast_set.len(), fast.len(), "duplicates at n = {n}");
                for s in &fast {
                    assert_eq!(s.genus(), Some(g));
                    assert!(s.is_canonical());
                }
            }
        }
    }

    #[test]
    fn decomposition_of_identity_pair_scheme() {
        let s = scheme("[1,1][1,1][1,1]");
        let decs = decompositions(&s);
        assert_eq!(decs.len(), 1);
        assert_eq!(decs[0].len(), 2);
        assert_eq!(decs[0][0].to_string(), "[1][1][1]");
        assert_eq!(decs[0][1].to_string(), "[1][1][1]");
    }

    #[test]
    fn decomposition_blocks_match_expected() {
        let s = scheme("[2,1][2,1][1,1,1]");
        let decs = decompositions(&s);
        let has = decs.iter().any(|blocks| {
            blocks.len() == 2
                && blocks.iter().any(|b| b.to_string() == "[1][1][1]")
                && blocks.iter().any(|b| b.to_string() == "[2][2][1,1]")
        });
        assert!(has, "expected {{[2][2][1,1], [1][1][1]}} in {decs:?}");
        // blocks like ([2],[1,..]) with unequal fiber sums can never appear;
        // here the only decomposition is the one above
        assert_eq!(decs.len(), 1);
    }

    #[test]
    fn single_part_fiber_blocks_decomposition() {
        let s = scheme("[3][2,1][2,1]");
        assert!(decompositions(&s).is_empty());
        let t = scheme("[7][3,2,2][2,2,1,1,1]");
        assert!(decompositions(&t).is_empty());
    }

    #[test]
    fn decompositions_union_reconstructs() {
        for n in 2..=6 {
            for s in enumerate_schemes(n, 0) {
                for blocks in decompositions(&s) {
                    assert!(blocks.len() >= 2);
                    for i in 0..s.fiber_count() {
                        let mut union: Vec<usize> = blocks
                            .iter()
                            .flat_map(|b| b.fibers()[i].parts().iter().copied())
                            .collect();
                        union.sort_unstable_by(|a, b| b.cmp(a));
                        assert_eq!(union, s.fibers()[i].parts());
                    }
                }
            }
        }
    }
}
