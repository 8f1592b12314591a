//! Enumeration of monodromy triples up to conjugacy.
//!
//! A covering with three branch points is encoded by permutations
//! `(g_0, g_1, g_inf)` whose left-to-right product is the identity; two
//! coverings are isomorphic exactly when the triples are simultaneously
//! conjugate. This module provides a small brute-force oracle, a scalable
//! backtracking enumerator with feasibility pruning, the grouping of
//! solutions into conjugacy classes, and the exceptionality decision built
//! on top.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::counting::eisenstein_connected;
use crate::partition::{partitions_of, Partition};
use crate::perm::{all_permutations, permutations_of_type, DisjointSets, PermError, Permutation};
use crate::scheme::Scheme;

/// Default backtracking node budget.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Default oracle degree bound for brute-force enumeration.
pub const DEFAULT_ORACLE_BOUND: usize = 7;

/// Centralizers up to this order are enumerated explicitly when grouping
/// solutions into orbits; beyond it a canonical-form hash is used instead.
pub const DEFAULT_CLOSURE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TripleError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("product of the triple is not the identity")]
    ProductNotIdentity,
    #[error("degree {degree} exceeds the oracle bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("expected a three-fiber scheme, got {0} fibers")]
    NotThreeFibers(usize),
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
}

/// `(g_0, g_1, g_inf)` with identity left-to-right product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyTriple {
    g0: Permutation,
    g1: Permutation,
    g_inf: Permutation,
}

impl MonodromyTriple {
    /// Completes a pair to a triple: `g_inf = (g_0 g_1)^{-1}` in the
    /// apply-`g_0`-first convention.
    pub fn from_pair(g0: Permutation, g1: Permutation) -> Result<Self, TripleError> {
        let g_inf = g0.then(&g1)?.inverse();
        Ok(MonodromyTriple { g0, g1, g_inf })
    }

    pub fn new(g0: Permutation, g1: Permutation, g_inf: Permutation) -> Result<Self, TripleError> {
        let product = g0.then(&g1)?.then(&g_inf)?;
        if !product.is_identity() {
            return Err(TripleError::ProductNotIdentity);
        }
        Ok(MonodromyTriple { g0, g1, g_inf })
    }

    pub fn g0(&self) -> &Permutation {
        &self.g0
    }

    pub fn g1(&self) -> &Permutation {
        &self.g1
    }

    pub fn g_inf(&self) -> &Permutation {
        &self.g_inf
    }

    pub fn degree(&self) -> usize {
        self.g0.degree()
    }

    /// The scheme of the triple, in display order `[λ_∞][λ_0][λ_1]`.
    pub fn scheme(&self) -> Scheme {
        Scheme::three(
            self.g_inf.cycle_type(),
            self.g0.cycle_type(),
            self.g1.cycle_type(),
        )
        .expect("triple degrees agree")
    }

    pub fn is_transitive(&self) -> bool {
        Permutation::is_transitive(&[self.g0.clone(), self.g1.clone()], self.degree())
    }
}

/// One conjugacy class of triples.
#[derive(Clone, Debug)]
pub struct CoveringClass {
    /// Lexicographically smallest member with `g_0` pinned canonical.
    pub representative: MonodromyTriple,
    /// Order of the automorphism group: permutations commuting with both
    /// `g_0` and `g_1`.
    pub aut_order: u64,
    /// Solutions with pinned `g_0` lying in this class;
    /// `aut_order * orbit_size = z(λ_0)`.
    pub orbit_size: u64,
    pub transitive: bool,
}

/// Result of a full class enumeration.
#[derive(Clone, Debug)]
pub struct ClassEnumeration {
    pub classes: Vec<CoveringClass>,
    /// Backtracking nodes explored.
    pub nodes: u64,
    /// Raw solution count with `g_0` pinned.
    pub solutions: u64,
}

impl ClassEnumeration {
    pub fn transitive_classes(&self) -> impl Iterator<Item = &CoveringClass> {
        self.classes.iter().filter(|c| c.transitive)
    }

    /// `sum 1/aut` over transitive classes; must equal the connected
    /// Eisenstein number of the scheme.
    pub fn connected_eisenstein(&self) -> BigRational {
        self.transitive_classes()
            .map(|c| BigRational::new(BigInt::one(), BigInt::from(c.aut_order)))
            .sum()
    }
}

/// All triples with the prescribed cycle types, by exhaustive search over
/// class elements. Both `g_0` and `g_1` range over their full classes, so
/// the result size is `n! * eisenstein_all` — use only for small degrees.
pub fn brute_force_triples(s: &Scheme, bound: usize) -> Result<Vec<MonodromyTriple>, TripleError> {
    if s.fiber_count() != 3 {
        return Err(TripleError::NotThreeFibers(s.fiber_count()));
    }
    let n = s.degree();
    if n > bound {
        return Err(TripleError::DegreeTooLarge { degree: n, bound });
    }
    let mut out = Vec::new();
    for g0 in permutations_of_type(s.fiber_zero()) {
        for g1 in permutations_of_type(s.fiber_one()) {
            let product = g0.then(&g1).expect("equal degrees");
            if &product.cycle_type() == s.fiber_infinity() {
                out.push(MonodromyTriple {
                    g0: g0.clone(),
                    g1,
                    g_inf: product.inverse(),
                });
            }
        }
    }
    Ok(out)
}

/// Brute-force census of one symmetric group: for every ordered pair
/// `(g_0, g_1)` in `S_n x S_n` the scheme of its triple is tallied.
///
/// Returns `(all, transitive)` pair counts keyed by the scheme in display
/// order. This is the independent oracle the counting module is tested
/// against.
pub fn brute_force_census(
    n: usize,
    bound: usize,
) -> Result<HashMap<Scheme, (u64, u64)>, TripleError> {
    if n > bound {
        return Err(TripleError::DegreeTooLarge { degree: n, bound });
    }
    assert!((1..=16).contains(&n), "census supports 1 <= n <= 16");
    let perms: Vec<Vec<usize>> = all_permutations(n).map(|p| p.images().to_vec()).collect();
    let types: Vec<Partition> = partitions_of(n).collect();
    let type_index: HashMap<Vec<usize>, usize> = types
        .iter()
        .enumerate()
        .map(|(i, t)| (t.parts().to_vec(), i))
        .collect();
    let perm_type: Vec<usize> = perms
        .iter()
        .map(|im| {
            let t = Permutation::new(im.clone()).unwrap().cycle_type();
            type_index[t.parts()]
        })
        .collect();
    let nt = types.len();

    // Each worker owns a dense (all, transitive) table indexed by
    // (type g0, type g1, type product); tables are summed afterwards.
    let chunks: Vec<Vec<usize>> = (0..perms.len())
        .collect::<Vec<usize>>()
        .chunks(64.max(perms.len() / 256))
        .map(|c| c.to_vec())
        .collect();
    let tables = crate::par::ordered_map(chunks, |chunk| {
        let mut table = vec![(0u64, 0u64); nt * nt * nt];
        let mut lengths = [0usize; 16];
        for &i in &chunk {
            let p = &perms[i];
            let ti = perm_type[i];
            for (j, q) in perms.iter().enumerate() {
                // product: apply p first, then q
                let mut seen: u32 = 0;
                let mut nlen = 0;
                for start in 0..n {
                    if seen & (1 << start) != 0 {
                        continue;
                    }
                    let mut len = 0;
                    let mut x = start;
                    loop {
                        seen |= 1 << x;
                        len += 1;
                        x = q[p[x]];
                        if x == start {
                            break;
                        }
                    }
                    lengths[nlen] = len;
                    nlen += 1;
                }
                lengths[..nlen].sort_unstable_by(|a, b| b.cmp(a));
                let tprod = type_index[&lengths[..nlen]];
                // transitivity of the generated group
                let mut dsu = DisjointSets::new(n);
                for x in 0..n {
                    dsu.union(x, p[x]);
                    dsu.union(x, q[x]);
                }
                let cell = &mut table[(ti * nt + perm_type[j]) * nt + tprod];
                cell.0 += 1;
                if dsu.count() == 1 {
                    cell.1 += 1;
                }
            }
        }
        table
    });

    let mut total = vec![(0u64, 0u64); nt * nt * nt];
    for table in tables {
        for (acc, cell) in total.iter_mut().zip(table) {
            acc.0 += cell.0;
            acc.1 += cell.1;
        }
    }
    let mut out = HashMap::new();
    for t0 in 0..nt {
        for t1 in 0..nt {
            for tp in 0..nt {
                let cell = total[(t0 * nt + t1) * nt + tp];
                if cell.0 > 0 {
                    // product type equals the type of its inverse g_inf
                    let s = Scheme::three(types[tp].clone(), types[t0].clone(), types[t1].clone())
                        .unwrap();
                    out.insert(s, cell);
                }
            }
        }
    }
    Ok(out)
}

const UNSET: usize = usize::MAX;

/// A partial injection together with its open-chain structure and the
/// multiset of cycle lengths it still has to close.
struct PartialPerm {
    img: Vec<usize>,
    pre: Vec<usize>,
    /// valid at the end point of each open chain: the chain's start
    start_of: Vec<usize>,
    /// valid at the start point of each open chain: the chain's end
    end_of: Vec<usize>,
    /// valid at the start point: number of points on the chain
    size_at: Vec<usize>,
    /// remaining[l] = parts of length l not yet closed
    remaining: Vec<usize>,
    remaining_parts: usize,
    max_remaining: usize,
    open_chains: usize,
}

enum Undo {
    Close {
        y: usize,
        z: usize,
        size: usize,
        old_max: usize,
    },
    Merge {
        y: usize,
        z: usize,
        start_a: usize,
        end_b: usize,
        size_a: usize,
        size_b: usize,
    },
}

impl PartialPerm {
    fn new(n: usize, target: &Partition) -> Self {
        let mut remaining = vec![0usize; n + 1];
        for &p in target.parts() {
            remaining[p] += 1;
        }
        PartialPerm {
            img: vec![UNSET; n],
            pre: vec![UNSET; n],
            start_of: (0..n).collect(),
            end_of: (0..n).collect(),
            size_at: vec![1; n],
            max_remaining: target.parts().first().copied().unwrap_or(0),
            remaining_parts: target.len(),
            remaining,
            open_chains: n,
        }
    }

    /// Attempts to add the edge `y -> z`; either applies it fully and
    /// returns the undo record, or leaves the state untouched.
    fn add_edge(&mut self, y: usize, z: usize) -> Option<Undo> {
        debug_assert!(self.img[y] == UNSET && self.pre[z] == UNSET);
        if self.start_of[y] == z {
            // closes the chain through y into a cycle
            let size = self.size_at[z];
            if self.remaining[size] == 0 {
                return None;
            }
            let old_max = self.max_remaining;
            self.img[y] = z;
            self.pre[z] = y;
            self.remaining[size] -= 1;
            self.remaining_parts -= 1;
            self.open_chains -= 1;
            while self.max_remaining > 0 && self.remaining[self.max_remaining] == 0 {
                self.max_remaining -= 1;
            }
            Some(Undo::Close {
                y,
                z,
                size,
                old_max,
            })
        } else {
            // merges the chain ending at y with the chain starting at z
            let start_a = self.start_of[y];
            let end_b = self.end_of[z];
            let size_a = self.size_at[start_a];
            let size_b = self.size_at[z];
            if size_a + size_b > self.max_remaining {
                return None;
            }
            // every remaining part needs its own chain to grow from
            if self.remaining_parts + 1 > self.open_chains {
                return None;
            }
            self.img[y] = z;
            self.pre[z] = y;
            self.start_of[end_b] = start_a;
            self.end_of[start_a] = end_b;
            self.size_at[start_a] = size_a + size_b;
            self.open_chains -= 1;
            Some(Undo::Merge {
                y,
                z,
                start_a,
                end_b,
                size_a,
                size_b,
            })
        }
    }

    fn undo(&mut self, rec: Undo) {
        match rec {
            Undo::Close {
                y,
                z,
                size,
                old_max,
            } => {
                self.img[y] = UNSET;
                self.pre[z] = UNSET;
                self.remaining[size] += 1;
                self.remaining_parts += 1;
                self.open_chains += 1;
                self.max_remaining = old_max;
            }
            Undo::Merge {
                y,
                z,
                start_a,
                end_b,
                size_a,
                size_b,
            } => {
                self.img[y] = UNSET;
                self.pre[z] = UNSET;
                self.start_of[end_b] = z;
                self.end_of[start_a] = y;
                self.size_at[start_a] = size_a;
                self.size_at[z] = size_b;
                self.open_chains += 1;
            }
        }
    }
}

/// Backtracking search for `g_1` with `g_0` pinned: assigns images of `g_1`
/// smallest point first, candidates in increasing order, simultaneously
/// tracking the partial product so both cycle structures prune the tree.
struct TripleSearch {
    n: usize,
    g0_inv: Vec<usize>,
    g1: PartialPerm,
    product: PartialPerm,
    nodes: u64,
    budget: u64,
    exceeded: bool,
    /// flat solution buffer, stride n
    solutions: Vec<u16>,
}

impl TripleSearch {
    fn run(s: &Scheme, budget: u64) -> Result<(Vec<u16>, u64), TripleError> {
        let n = s.degree();
        let g0 = Permutation::canonical_of_type(s.fiber_zero());
        let mut search = TripleSearch {
            n,
            g0_inv: g0.inverse().images().to_vec(),
            g1: PartialPerm::new(n, s.fiber_one()),
            product: PartialPerm::new(n, s.fiber_infinity()),
            nodes: 0,
            budget,
            exceeded: false,
            solutions: Vec::new(),
        };
        search.dfs();
        if search.exceeded {
            return Err(TripleError::BudgetExceeded {
                nodes: search.nodes,
            });
        }
        Ok((search.solutions, search.nodes))
    }

    fn dfs(&mut self) -> bool {
        let y = match self.g1.img.iter().position(|&im| im == UNSET) {
            Some(y) => y,
            None => {
                debug_assert!(self.g1.remaining_parts == 0 && self.product.remaining_parts == 0);
                self.solutions
                    .extend(self.g1.img.iter().map(|&im| im as u16));
                return true;
            }
        };
        let x = self.g0_inv[y];
        for z in 0..self.n {
            if self.g1.pre[z] != UNSET {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exceeded = true;
                return false;
            }
            if let Some(undo_g1) = self.g1.add_edge(y, z) {
                if let Some(undo_product) = self.product.add_edge(x, z) {
                    let keep_going = self.dfs();
                    self.product.undo(undo_product);
                    self.g1.undo(undo_g1);
                    if !keep_going {
                        return false;
                    }
                } else {
                    self.g1.undo(undo_g1);
                }
            }
        }
        true
    }
}

/// Options for [`enumerate_classes_with`] and [`decide_exceptional`].
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Backtracking node limit.
    pub budget: u64,
    /// Orbit grouping switches from explicit centralizer closure to
    /// canonical forms above this centralizer order.
    pub closure_limit: u64,
    /// After the Eisenstein filter already shows non-exceptionality, still
    /// enumerate to report the exact class count.
    pub refine_not_exceptional: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            closure_limit: DEFAULT_CLOSURE_LIMIT,
            refine_not_exceptional: true,
        }
    }
}

/// Enumerates all conjugacy classes of triples with the given scheme,
/// transitive and intransitive alike, with the default grouping strategy.
pub fn enumerate_classes(s: &Scheme, budget: u64) -> Result<ClassEnumeration, TripleError> {
    enumerate_classes_with(
        s,
        &SearchOptions {
            budget,
            ..SearchOptions::default()
        },
    )
}

pub fn enumerate_classes_with(
    s: &Scheme,
    opts: &SearchOptions,
) -> Result<ClassEnumeration, TripleError> {
    if s.fiber_count() != 3 {
        return Err(TripleError::NotThreeFibers(s.fiber_count()));
    }
    let n = s.degree();
    let g0 = Permutation::canonical_of_type(s.fiber_zero());
    let (solutions, nodes) = TripleSearch::run(s, opts.budget)?;
    let count = solutions.len() / n.max(1);
    let z0 = s.fiber_zero().centralizer_order();

    let groups = if z0 <= BigInt::from(opts.closure_limit) {
        group_by_closure(&g0, &solutions, n, z0.to_u64().expect("bounded"))
    } else {
        group_by_canonical_form(&g0, &solutions, n, &z0)
    };

    let mut classes = Vec::with_capacity(groups.len());
    for (rep_index, orbit_size, aut_order) in groups {
        let images: Vec<usize> = solutions[rep_index * n..(rep_index + 1) * n]
            .iter()
            .map(|&v| v as usize)
            .collect();
        let g1 = Permutation::new(images).expect("solutions are permutations");
        let transitive = Permutation::is_transitive(&[g0.clone(), g1.clone()], n);
        let representative = MonodromyTriple::from_pair(g0.clone(), g1).expect("equal degrees");
        classes.push(CoveringClass {
            representative,
            aut_order,
            orbit_size,
            transitive,
        });
    }
    Ok(ClassEnumeration {
        classes,
        nodes,
        solutions: count as u64,
    })
}

/// Groups solutions by explicit conjugation with every centralizer element
/// of `g_0`. Returns `(representative index, orbit size, aut order)` with
/// representatives in increasing index order.
fn group_by_closure(
    g0: &Permutation,
    solutions: &[u16],
    n: usize,
    z0: u64,
) -> Vec<(usize, u64, u64)> {
    let count = solutions.len() / n.max(1);
    let mut index: HashMap<&[u16], usize> = HashMap::with_capacity(count);
    for i in 0..count {
        index.insert(&solutions[i * n..(i + 1) * n], i);
    }
    // flat table of all centralizer elements
    let mut cents: Vec<u16> = Vec::with_capacity((z0 as usize) * n);
    for c in g0
        .centralizer_elements(z0)
        .expect("order checked against the closure limit")
    {
        cents.extend(c.images().iter().map(|&v| v as u16));
    }
    let mut visited = vec![false; count];
    let mut out = Vec::new();
    let mut conj = vec![0u16; n];
    for i in 0..count {
        if visited[i] {
            continue;
        }
        let g1 = &solutions[i * n..(i + 1) * n];
        let mut orbit_size = 0u64;
        for c in cents.chunks_exact(n.max(1)) {
            // conjugate of g1 by c: (c g1 c^{-1})(c(x)) = c(g1(x))
            for x in 0..n {
                conj[c[x] as usize] = c[g1[x] as usize];
            }
            let j = *index
                .get(conj.as_slice())
                .expect("conjugates of solutions are solutions");
            if !visited[j] {
                visited[j] = true;
                orbit_size += 1;
            }
        }
        debug_assert_eq!(z0 % orbit_size, 0);
        out.push((i, orbit_size, z0 / orbit_size));
    }
    out
}

/// Groups solutions by a canonical form of the pair `(g_0, g_1)` under
/// simultaneous conjugation, for centralizers too large to enumerate.
fn group_by_canonical_form(
    g0: &Permutation,
    solutions: &[u16],
    n: usize,
    z0: &BigInt,
) -> Vec<(usize, u64, u64)> {
    let count = solutions.len() / n.max(1);
    let mut groups: HashMap<Vec<u16>, (usize, u64)> = HashMap::new();
    for i in 0..count {
        let g1 = &solutions[i * n..(i + 1) * n];
        let key = canonical_pair_key(g0.images(), g1, n);
        let entry = groups.entry(key).or_insert((i, 0));
        entry.1 += 1;
    }
    let mut out: Vec<(usize, u64, u64)> = groups
        .into_values()
        .map(|(rep, orbit_size)| {
            let aut = z0 / BigInt::from(orbit_size);
            debug_assert_eq!(&aut * BigInt::from(orbit_size), *z0);
            (
                rep,
                orbit_size,
                aut.to_u64().expect("automorphism order fits in u64"),
            )
        })
        .collect();
    out.sort_unstable_by_key(|&(rep, _, _)| rep);
    out
}

/// Canonical encoding of a generator pair up to simultaneous conjugation:
/// per orbit component, the minimum over all starting points of the
/// breadth-first relabelled image table; components sorted by size and
/// encoding.
fn canonical_pair_key(g0: &[usize], g1: &[u16], n: usize) -> Vec<u16> {
    let mut comp_seen = vec![false; n];
    let mut comps: Vec<(usize, Vec<u16>)> = Vec::new();
    let mut label = vec![UNSET; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for root in 0..n {
        if comp_seen[root] {
            continue;
        }
        // collect the component through both generators
        let mut members = vec![root];
        comp_seen[root] = true;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for y in [g0[x], g1[x] as usize] {
                if !comp_seen[y] {
                    comp_seen[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        let size = members.len();
        let mut best: Option<Vec<u16>> = None;
        for &start in &members {
            for &x in &members {
                label[x] = UNSET;
            }
            order.clear();
            label[start] = 0;
            order.push(start);
            let mut head = 0;
            while head < order.len() {
                let x = order[head];
                head += 1;
                for y in [g0[x], g1[x] as usize] {
                    if label[y] == UNSET {
                        label[y] = order.len();
                        order.push(y);
                    }
                }
            }
            let mut enc = Vec::with_capacity(2 * size);
            for &x in &order {
                enc.push(label[g0[x]] as u16);
                enc.push(label[g1[x] as usize] as u16);
            }
            if best.as_ref().is_none_or(|b| enc < *b) {
                best = Some(enc);
            }
        }
        comps.push((size, best.expect("component is nonempty")));
    }
    comps.sort_unstable_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let mut key = Vec::new();
    for (size, enc) in comps {
        key.push(size as u16);
        key.extend(enc);
    }
    key
}

/// Exceptionality verdict for a scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Exactly one transitive class exists; its covering is uniquely
    /// determined by the scheme.
    Exceptional { aut_order: u64 },
    /// More than one transitive class. The count is present when exact
    /// enumeration ran, absent when the Eisenstein filter alone decided.
    NotExceptional { transitive_classes: Option<u64> },
    /// No transitive triple exists.
    Unrealizable,
    /// The node budget ran out before a decision.
    Unknown { nodes: u64 },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Exceptional { .. } => write!(f, "Exceptional"),
            Verdict::NotExceptional {
                transitive_classes: Some(k),
            } => write!(f, "NotExceptional({k})"),
            Verdict::NotExceptional {
                transitive_classes: None,
            } => write!(f, "NotExceptional(>=2)"),
            Verdict::Unrealizable => write!(f, "Unrealizable"),
            Verdict::Unknown { .. } => write!(f, "Unknown"),
        }
    }
}

/// Verdict together with the data the decision rested on.
#[derive(Clone, Debug)]
pub struct Decision {
    pub verdict: Verdict,
    pub eisenstein_connected: BigRational,
    /// Backtracking nodes spent (0 when the filters alone decided).
    pub nodes: u64,
}

/// Decides exceptionality:
/// 1. connected Eisenstein number 0 — unrealizable;
/// 2. greater than 1 — at least two classes, since each contributes at most 1;
/// 3. otherwise exact class enumeration.
pub fn decide_exceptional(s: &Scheme, opts: &SearchOptions) -> Decision {
    assert_eq!(
        s.fiber_count(),
        3,
        "exceptionality is decided for three-fiber schemes"
    );
    let e = eisenstein_connected(s);
    if e.is_zero() {
        return Decision {
            verdict: Verdict::Unrealizable,
            eisenstein_connected: e,
            nodes: 0,
        };
    }
    if e > BigRational::one() {
        if !opts.refine_not_exceptional {
            return Decision {
                verdict: Verdict::NotExceptional {
                    transitive_classes: None,
                },
                eisenstein_connected: e,
                nodes: 0,
            };
        }
        return match enumerate_classes_with(s, opts) {
            Ok(en) => {
                check_class_sum(&en, &e);
                let k = en.transitive_classes().count() as u64;
                debug_assert!(k >= 2);
                Decision {
                    verdict: Verdict::NotExceptional {
                        transitive_classes: Some(k),
                    },
                    eisenstein_connected: e,
                    nodes: en.nodes,
                }
            }
            // the filter verdict stands even when refinement runs out
            Err(TripleError::BudgetExceeded { nodes }) => Decision {
                verdict: Verdict::NotExceptional {
                    transitive_classes: None,
                },
                eisenstein_connected: e,
                nodes,
            },
            Err(err) => panic!("unexpected enumeration failure: {err}"),
        };
    }
    match enumerate_classes_with(s, opts) {
        Ok(en) => {
            check_class_sum(&en, &e);
            let transitive: Vec<&CoveringClass> = en.transitive_classes().collect();
            let verdict = if transitive.len() == 1 {
                Verdict::Exceptional {
                    aut_order: transitive[0].aut_order,
                }
            } else {
                Verdict::NotExceptional {
                    transitive_classes: Some(transitive.len() as u64),
                }
            };
            Decision {
                verdict,
                eisenstein_connected: e,
                nodes: en.nodes,
            }
        }
        Err(TripleError::BudgetExceeded { nodes }) => Decision {
            verdict: Verdict::Unknown { nodes },
            eisenstein_connected: e,
            nodes,
        },
        Err(err) => panic!("unexpected enumeration failure: {err}"),
    }
}

/// `sum 1/aut` over transitive classes must reproduce the connected
/// Eisenstein number exactly; anything else is a bug in one of the two
/// independent routes.
fn check_class_sum(en: &ClassEnumeration, e: &BigRational) {
    assert_eq!(
        &en.connected_eisenstein(),
        e,
        "class enumeration disagrees with the character-sum count"
    );
}

/// Convenience wrapper over [`decide_exceptional`] with default options.
pub fn is_exceptional(s: &Scheme, budget: u64) -> Verdict {
    decide_exceptional(
        s,
        &SearchOptions {
            budget,
            ..SearchOptions::default()
        },
    )
    .verdict
}
