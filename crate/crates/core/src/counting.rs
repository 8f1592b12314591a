//! Exact covering counts and Eisenstein numbers.
//!
//! The central tool is the Burnside character sum
//!
//! ```text
//! #{ c_1 c_2 ... c_k = 1 | c_i in C_i } =
//!     (|C_1| ... |C_k| / n!) * sum_chi  chi(c_1)...chi(c_k) / chi(1)^(k-2)
//! ```
//!
//! over the irreducible characters of `S_n`. Dividing the solution count by
//! `n!` gives the Eisenstein number `sum 1/|Aut|` over all (possibly
//! disconnected) coverings with the given scheme; inverting the exponential
//! formula over scheme decompositions restricts it to connected coverings.
//! All arithmetic is exact.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::characters::{character, dimension, hook_character};
use crate::partition::{factorial, partitions_of, Partition};
use crate::scheme::{decompositions, Scheme};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountingError {
    #[error("partitions sum to {0} and {1}, expected equal")]
    SizeMismatch(usize, usize),
    #[error("tree condition violated: {black} + {white} parts != {n} + 1")]
    NotATree {
        black: usize,
        white: usize,
        n: usize,
    },
}

/// Exact counting data for one scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub scheme: Scheme,
    /// Number of tuples `(g_1, ..., g_k)` with prescribed cycle types and
    /// product equal to the identity.
    pub triple_count_all: BigInt,
    /// `triple_count_all / n!` — the Eisenstein number over all coverings.
    pub eisenstein_all: BigRational,
    /// Tuples as above that additionally generate a transitive group.
    pub triple_count_transitive: BigInt,
    /// `triple_count_transitive / n!` — Eisenstein number over connected
    /// coverings.
    pub eisenstein_connected: BigRational,
}

struct Memo {
    all: HashMap<Scheme, (BigInt, BigRational)>,
    connected: HashMap<Scheme, BigRational>,
}

static MEMO: OnceLock<RwLock<Memo>> = OnceLock::new();

fn memo() -> &'static RwLock<Memo> {
    MEMO.get_or_init(|| {
        RwLock::new(Memo {
            all: HashMap::new(),
            connected: HashMap::new(),
        })
    })
}

/// The raw character sum `sum_chi prod_i chi(c_i) / chi(1)^(k-2)`.
fn burnside_sum(s: &Scheme) -> BigRational {
    let n = s.degree();
    let k = s.fiber_count();
    let mut total = BigRational::zero();
    'shapes: for shape in partitions_of(n) {
        let mut numer = BigInt::one();
        for fiber in s.fibers() {
            let v = character(&shape, fiber).expect("fibers share the degree");
            if v.is_zero() {
                continue 'shapes;
            }
            numer *= v;
        }
        let dim = dimension(&shape);
        let mut denom = BigInt::one();
        for _ in 0..k.saturating_sub(2) {
            denom *= &dim;
        }
        total += BigRational::new(numer, denom);
    }
    total
}

fn count_all(s: &Scheme) -> (BigInt, BigRational) {
    let key = s.canonical();
    if let Some(hit) = memo().read().unwrap().all.get(&key) {
        return hit.clone();
    }
    let n = s.degree();
    let mut class_product = BigInt::one();
    for fiber in s.fibers() {
        class_product *= fiber.class_size();
    }
    let sum = burnside_sum(s);
    let count_rat = BigRational::from(class_product) * sum / BigRational::from(factorial(n));
    assert!(
        count_rat.is_integer() && !count_rat.is_negative(),
        "character sum must clear to a nonnegative integer for {s}"
    );
    let count = count_rat.to_integer();
    let e_all = BigRational::new(count.clone(), factorial(n));
    let result = (count, e_all);
    memo().write().unwrap().all.insert(key, result.clone());
    result
}

/// Number of tuples with prescribed cycle types and identity product.
pub fn triple_count_all(s: &Scheme) -> BigInt {
    count_all(s).0
}

/// Eisenstein number `sum 1/|Aut|` over all coverings with scheme `s`.
pub fn eisenstein_all(s: &Scheme) -> BigRational {
    count_all(s).1
}

/// Eisenstein number restricted to connected coverings.
///
/// A disconnected covering is an unordered disjoint union of connected ones,
/// so the all-coverings number expands as
/// `E_all(s) = sum over multiset splits {t_j^{a_j}} of prod E_conn(t_j)^{a_j} / a_j!`,
/// with the trivial split `{s}` included. Solving for the trivial term by
/// induction on the degree gives the connected number.
pub fn eisenstein_connected(s: &Scheme) -> BigRational {
    let key = s.canonical();
    if let Some(hit) = memo().read().unwrap().connected.get(&key) {
        return hit.clone();
    }
    let mut value = eisenstein_all(s);
    for blocks in decompositions(s) {
        let mut term = BigRational::one();
        // blocks are sorted, so equal blocks are adjacent
        let mut i = 0;
        while i < blocks.len() {
            let mut j = i;
            while j < blocks.len() && blocks[j] == blocks[i] {
                j += 1;
            }
            let mult = j - i;
            let e = eisenstein_connected(&blocks[i]);
            for _ in 0..mult {
                term *= &e;
            }
            term /= BigRational::from(factorial(mult));
            i = j;
        }
        value -= term;
    }
    assert!(
        !value.is_negative(),
        "connected Eisenstein number must be nonnegative for {s}"
    );
    memo().write().unwrap().connected.insert(key, value.clone());
    value
}

/// `n! * eisenstein_connected(s)`: the number of transitive tuples.
pub fn triple_count_transitive(s: &Scheme) -> BigInt {
    let count = eisenstein_connected(s) * BigRational::from(factorial(s.degree()));
    assert!(count.is_integer(), "transitive count must be an integer");
    count.to_integer()
}

/// Full counting report for one scheme.
pub fn count_report(s: &Scheme) -> CountReport {
    let (all, e_all) = count_all(s);
    let e_conn = eisenstein_connected(s);
    let transitive = triple_count_transitive(s);
    CountReport {
        scheme: s.clone(),
        triple_count_all: all,
        eisenstein_all: e_all,
        triple_count_transitive: transitive,
        eisenstein_connected: e_conn,
    }
}

/// Multinomial coefficient `(sum m_i)! / prod m_i!`.
fn multinomial(mults: &[usize]) -> BigInt {
    let total: usize = mults.iter().sum();
    let mut v = factorial(total);
    for &m in mults {
        v /= factorial(m);
    }
    v
}

/// Eisenstein number of plane trees with the given black and white vertex
/// degrees (Tutte):
///
/// ```text
/// sum_T 1/|Aut T| = (1/(s_b * s_w)) * multinomial(s_b; q_b) * multinomial(s_w; q_w)
/// ```
///
/// where `q` counts vertices per degree and `s` is the vertex count of each
/// colour. Requires the tree condition `s_b + s_w = n + 1`.
pub fn tutte_tree_count(
    black: &Partition,
    white: &Partition,
) -> Result<BigRational, CountingError> {
    if black.sum() != white.sum() {
        return Err(CountingError::SizeMismatch(black.sum(), white.sum()));
    }
    let n = black.sum();
    if black.len() + white.len() != n + 1 {
        return Err(CountingError::NotATree {
            black: black.len(),
            white: white.len(),
            n,
        });
    }
    let qb: Vec<usize> = black.multiplicities().iter().map(|&(_, m)| m).collect();
    let qw: Vec<usize> = white.multiplicities().iter().map(|&(_, m)| m).collect();
    let numer = multinomial(&qb) * multinomial(&qw);
    let denom = BigInt::from(black.len()) * BigInt::from(white.len());
    Ok(BigRational::new(numer, denom))
}

/// Eisenstein number of polynomial coverings `[n][black][white]` via the
/// hook-character specialization:
///
/// ```text
/// (1/(z(black) z(white))) * sum_{l=0}^{n-1} (-1)^l l! (n-1-l)! chi_l(black) chi_l(white)
/// ```
///
/// Against an `n`-cycle only hook characters survive, which collapses the
/// general character sum to this form; the normalization is pinned by exact
/// agreement with `eisenstein_all` on every polynomial scheme.
pub fn polynomial_eisenstein(
    black: &Partition,
    white: &Partition,
) -> Result<BigRational, CountingError> {
    if black.sum() != white.sum() {
        return Err(CountingError::SizeMismatch(black.sum(), white.sum()));
    }
    let n = black.sum();
    let mut sum = BigInt::zero();
    for arm in 0..n {
        let cb = hook_character(arm, black).expect("arm in range");
        if cb.is_zero() {
            continue;
        }
        let cw = hook_character(arm, white).expect("arm in range");
        if cw.is_zero() {
            continue;
        }
        let term = factorial(arm) * factorial(n - 1 - arm) * cb * cw;
        if arm % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let denom = black.centralizer_order() * white.centralizer_order();
    Ok(BigRational::new(sum, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scheme(text: &str) -> Scheme {
        Scheme::parse(text).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_counts() {
        assert_eq!(triple_count_all(&scheme("[3][3][1,1,1]")), BigInt::from(2));
        assert_eq!(triple_count_all(&scheme("[3][2,1][2,1]")), BigInt::from(6));
        // [n][n][1^n] with n = 4: g1 must invert g0, one choice per 4-cycle
        assert_eq!(
            triple_count_all(&scheme("[4][4][1,1,1,1]")),
            BigInt::from(6)
        );
    }

    #[test]
    fn eisenstein_all_values() {
        assert_eq!(eisenstein_all(&scheme("[3][3][1,1,1]")), rat(1, 3));
        assert_eq!(eisenstein_all(&scheme("[1,1][1,1][1,1]")), rat(1, 2));
        assert_eq!(eisenstein_all(&scheme("[3][2,1][2,1]")), rat(1, 1));
        assert_eq!(eisenstein_all(&scheme("[2,2][2,2][1,1,1,1]")), rat(1, 8));
    }

    #[test]
    fn eisenstein_connected_values() {
        assert_eq!(eisenstein_connected(&scheme("[1,1][1,1][1,1]")), rat(0, 1));
        assert_eq!(
            eisenstein_connected(&scheme("[2,2][2,2][1,1,1,1]")),
            rat(0, 1)
        );
        assert_eq!(eisenstein_connected(&scheme("[3][2,1][2,1]")), rat(1, 1));
        assert_eq!(eisenstein_connected(&scheme("[2][2][1,1]")), rat(1, 2));
    }

    #[test]
    fn parity_invalid_scheme_counts_zero() {
        let s = scheme("[2][1,1][1,1]");
        assert_eq!(s.genus(), None);
        assert_eq!(triple_count_all(&s), BigInt::zero());
    }

    #[test]
    fn fiber_order_invariance() {
        for text in ["[3][2,1][2,1]", "[4][2,2][2,1,1]", "[2,2][2,2][1,1,1,1]"] {
            let s = scheme(text);
            let mut fibers = s.fibers().to_vec();
            fibers.rotate_left(1);
            fibers.swap(0, 1);
            let t = Scheme::new(fibers).unwrap();
            assert_eq!(eisenstein_all(&s), eisenstein_all(&t));
            assert_eq!(eisenstein_connected(&s), eisenstein_connected(&t));
        }
    }

    #[test]
    fn four_fiber_count() {
        // four transpositions multiplying to the identity in S_2
        let s = Scheme::new(vec![
            Partition::single(2),
            Partition::single(2),
            Partition::single(2),
            Partition::single(2),
        ])
        .unwrap();
        assert_eq!(triple_count_all(&s), BigInt::one());
        assert_eq!(s.genus(), Some(1));
    }

    #[test]
    fn report_consistency() {
        let r = count_report(&scheme("[3][3][1,1,1]"));
        assert_eq!(
            r.eisenstein_all * BigRational::from(factorial(3)),
            BigRational::from(r.triple_count_all)
        );
        assert_eq!(r.triple_count_transitive, BigInt::from(2));
    }

    #[test]
    fn tutte_star_and_chain() {
        // star: one black vertex of degree n
        for n in 1..=8 {
            let star = tutte_tree_count(&Partition::single(n), &Partition::all_ones(n)).unwrap();
            assert_eq!(star, rat(1, n as i64));
        }
        // chain with 3 edges
        let chain =
            tutte_tree_count(&Partition::new(vec![2, 1]), &Partition::new(vec![2, 1])).unwrap();
        assert_eq!(chain, rat(1, 1));
        // conjugate-tree degrees: two trees, both rigid
        let pair = tutte_tree_count(
            &Partition::new(vec![3, 2, 2]),
            &Partition::new(vec![2, 2, 1, 1, 1]),
        )
        .unwrap();
        assert_eq!(pair, rat(2, 1));
    }

    #[test]
    fn tutte_rejects_non_trees() {
        assert!(matches!(
            tutte_tree_count(&Partition::new(vec![2, 2]), &Partition::new(vec![2, 2])),
            Err(CountingError::NotATree { .. })
        ));
        assert!(tutte_tree_count(&Partition::single(3), &Partition::single(4)).is_err());
    }

    #[test]
    fn polynomial_eisenstein_matches_star_and_chain() {
        for n in 1..=8 {
            let star =
                polynomial_eisenstein(&Partition::single(n), &Partition::all_ones(n)).unwrap();
            assert_eq!(star, rat(1, n as i64));
        }
        let chain = polynomial_eisenstein(&Partition::new(vec![2, 1]), &Partition::new(vec![2, 1]))
            .unwrap();
        assert_eq!(chain, rat(1, 1));
    }

    #[test]
    fn polynomial_routes_agree() {
        // all four routes coincide on polynomial schemes
        for n in 1..=7usize {
            for black in partitions_of(n) {
                for white in partitions_of(n) {
                    let s =
                        Scheme::three(Partition::single(n), black.clone(), white.clone()).unwrap();
                    let all = eisenstein_all(&s);
                    let conn = eisenstein_connected(&s);
                    assert_eq!(all, conn, "no decompositions for {s}");
                    let poly = polynomial_eisenstein(&black, &white).unwrap();
                    assert_eq!(poly, all, "hook specialization at {s}");
                    if black.len() + white.len() == n + 1 {
                        let tutte = tutte_tree_count(&black, &white).unwrap();
                        assert_eq!(tutte, all, "tree count at {s}");
                    }
                }
            }
        }
    }
}
