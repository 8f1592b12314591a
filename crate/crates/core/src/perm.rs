//! Permutations of `{0..n-1}` with exact cycle arithmetic.
//!
//! Points are 0-based internally; all text input/output (cycle notation) is
//! 1-based.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("images do not form a bijection of 0..{0}")]
    NotBijection(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("centralizer of order {order} exceeds limit {limit}")]
    CentralizerTooLarge { order: BigInt, limit: u64 },
    #[error("cycle notation error at offset {offset}: {msg}")]
    CycleParse { offset: usize, msg: String },
}

/// A permutation, stored as the image vector: `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n || seen[im] {
                return Err(PermError::NotBijection(n));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// `compose(p, q)` applies `q` first: the result maps `i` to `p(q(i))`.
    pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation, PermError> {
        if p.degree() != q.degree() {
            return Err(PermError::DegreeMismatch(p.degree(), q.degree()));
        }
        Ok(Permutation {
            images: q.images.iter().map(|&i| p.images[i]).collect(),
        })
    }

    /// Left-to-right product: apply `self` first, then `next`.
    ///
    /// This is the convention used for monodromy products throughout the
    /// crate; see `triples::MonodromyTriple`.
    pub fn then(&self, next: &Permutation) -> Result<Permutation, PermError> {
        Permutation::compose(next, self)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im] = i;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles, including fixed points. Each cycle starts at its
    /// smallest point; cycles are ordered by smallest point.
    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles }
    }

    /// Cycle type as a partition of the degree (fixed points count as 1s).
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 1;
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                len += 1;
                x = self.images[x];
            }
            lengths.push(len);
        }
        Partition::new(lengths)
    }

    /// The canonical permutation of a given cycle type: cycles laid out on
    /// consecutive points, largest part first. `[3]` gives `(0 1 2)`.
    pub fn canonical_of_type(t: &Partition) -> Permutation {
        let n = t.sum();
        let mut images = vec![0; n];
        let mut base = 0;
        for &part in t.parts() {
            for i in 0..part {
                images[base + i] = base + (i + 1) % part;
            }
            base += part;
        }
        Permutation { images }
    }

    /// All permutations commuting with `self`, as a lazy iterator. The count
    /// is exactly `z(cycle_type(self))`; errors when that exceeds `limit`.
    pub fn centralizer_elements(&self, limit: u64) -> Result<CentralizerElements, PermError> {
        let order = self.cycle_type().centralizer_order();
        match order.to_u64() {
            Some(o) if o <= limit => {}
            _ => {
                return Err(PermError::CentralizerTooLarge { order, limit });
            }
        }
        let decomp = self.cycle_decomposition();
        // Group cycles by length; a centralizer element permutes equal-length
        // cycles and rotates each.
        let mut groups: Vec<CycleGroup> = Vec::new();
        for cycle in decomp.cycles {
            match groups.iter_mut().find(|g| g.len == cycle.len()) {
                Some(g) => g.cycles.push(cycle),
                None => groups.push(CycleGroup {
                    len: cycle.len(),
                    cycles: vec![cycle],
                    target: Vec::new(),
                    offsets: Vec::new(),
                }),
            }
        }
        for g in &mut groups {
            g.target = (0..g.cycles.len()).collect();
            g.offsets = vec![0; g.cycles.len()];
        }
        Ok(CentralizerElements {
            n: self.degree(),
            groups,
            finished: false,
        })
    }

    /// True when the group generated by `gens` has a single orbit on
    /// `{0..n-1}`. An empty generator list is transitive only for `n <= 1`.
    pub fn is_transitive(gens: &[Permutation], n: usize) -> bool {
        assert!(
            gens.iter().all(|g| g.degree() == n),
            "generator degree mismatch"
        );
        if n <= 1 {
            return true;
        }
        let mut dsu = DisjointSets::new(n);
        for g in gens {
            for i in 0..n {
                dsu.union(i, g.image(i));
            }
        }
        dsu.count() == 1
    }

    /// Parses 1-based cycle notation such as `(1 2 4 8)(3 6 5)(7)`.
    ///
    /// Fixed points may be omitted when `degree` is supplied; without it the
    /// degree is the largest point mentioned.
    pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Permutation, PermError> {
        let bytes = text.as_bytes();
        let err = |offset: usize, msg: &str| PermError::CycleParse {
            // offsets are reported 1-based, like the points themselves
            offset: offset + 1,
            msg: msg.to_string(),
        };
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            match bytes[i] {
                b' ' | b'\t' | b'\n' | b'\r' => i += 1,
                b'(' => {
                    i += 1;
                    let mut cycle = Vec::new();
                    loop {
                        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                            i += 1;
                        }
                        if i >= bytes.len() {
                            return Err(err(i, "unclosed cycle"));
                        }
                        if bytes[i] == b')' {
                            i += 1;
                            break;
                        }
                        if !bytes[i].is_ascii_digit() {
                            return Err(err(i, "expected point or ')'"));
                        }
                        let start = i;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                        let point: usize = text[start..i]
                            .parse()
                            .map_err(|_| err(start, "point out of range"))?;
                        if point == 0 {
                            return Err(err(start, "points are 1-based"));
                        }
                        cycle.push(point - 1);
                    }
                    if cycle.is_empty() {
                        return Err(err(i - 1, "empty cycle"));
                    }
                    cycles.push(cycle);
                }
                _ => return Err(err(i, "expected '('")),
            }
        }
        let max_point = cycles.iter().flatten().copied().max().map_or(0, |m| m + 1);
        let n = match degree {
            Some(n) => {
                if max_point > n {
                    return Err(err(0, &format!("point {max_point} exceeds degree {n}")));
                }
                n
            }
            None => max_point,
        };
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in &cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if seen[x] {
                    return Err(err(0, &format!("point {} repeated", x + 1)));
                }
                seen[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }
}

/// Cycle notation, 1-based, fixed points included: `(1 2 4 8)(3 6 5)(7)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "()");
        }
        for cycle in &self.cycle_decomposition().cycles {
            write!(f, "(")?;
            for (i, &x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Disjoint cycles of a permutation; fixed points appear as 1-cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c.len()).collect()
    }
}

struct CycleGroup {
    len: usize,
    cycles: Vec<Vec<usize>>,
    /// current assignment: cycle j is mapped onto cycle target[j]
    target: Vec<usize>,
    /// current rotation offset for each source cycle
    offsets: Vec<usize>,
}

/// Iterator over all elements of a centralizer; see
/// [`Permutation::centralizer_elements`].
pub struct CentralizerElements {
    n: usize,
    groups: Vec<CycleGroup>,
    finished: bool,
}

impl CentralizerElements {
    fn build(&self) -> Permutation {
        let mut images = vec![0; self.n];
        for g in &self.groups {
            for (j, cycle) in g.cycles.iter().enumerate() {
                let target = &g.cycles[g.target[j]];
                let r = g.offsets[j];
                for (t, &x) in cycle.iter().enumerate() {
                    images[x] = target[(t + r) % g.len];
                }
            }
        }
        Permutation { images }
    }

    /// Odometer step over (offsets, cycle assignment) of every group.
    fn advance(&mut self) -> bool {
        for g in &mut self.groups {
            for off in g.offsets.iter_mut() {
                *off += 1;
                if *off < g.len {
                    return true;
                }
                *off = 0;
            }
            if next_permutation(&mut g.target) {
                return true;
            }
            // target wrapped back to identity; carry on to the next group
        }
        false
    }
}

impl Iterator for CentralizerElements {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.finished {
            return None;
        }
        let out = self.build();
        if !self.advance() {
            self.finished = true;
        }
        Some(out)
    }
}

/// In-place lexicographic successor; false when the input was the last
/// permutation (it is then left sorted ascending).
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All permutations of `S_n`, in lexicographic order of image vectors.
pub fn all_permutations(n: usize) -> AllPermutations {
    AllPermutations {
        next: Some((0..n).collect()),
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: cur })
    }
}

/// All permutations of `S_n` with the given cycle type, lexicographic order.
pub fn permutations_of_type(t: &Partition) -> Vec<Permutation> {
    all_permutations(t.sum())
        .filter(|p| &p.cycle_type() == t)
        .collect()
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    count: usize,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            count: n,
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
            self.count -= 1;
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.count
    }
}
