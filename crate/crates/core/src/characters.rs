//! Exact irreducible characters of symmetric groups.
//!
//! Values are computed by the Murnaghan-Nakayama border-strip recursion,
//! carried out on beta-sets (first-column hook lengths). Everything is done
//! in arbitrary-precision integers; there is no floating point here.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partition::{partitions_of, Partition};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharacterError {
    #[error("shape sums to {shape} but class sums to {class}")]
    SizeMismatch { shape: usize, class: usize },
    #[error("hook arm {arm} out of range for n = {n}")]
    HookOutOfRange { arm: usize, n: usize },
}

/// Memo key: the shape together with the remaining class parts.
type CacheKey = (Vec<usize>, Vec<usize>);

/// Shared memo for `(shape, remaining class parts) -> value`. The recursion
/// strips class parts largest-first, so keys are suffixes of sorted classes;
/// identical queries recur constantly across schemes of the same degree.
static CACHE: OnceLock<RwLock<HashMap<CacheKey, BigInt>>> = OnceLock::new();

fn cache() -> &'static RwLock<HashMap<CacheKey, BigInt>> {
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The irreducible character of `S_n` labelled by `shape`, evaluated on the
/// conjugacy class with cycle type `class`.
pub fn character(shape: &Partition, class: &Partition) -> Result<BigInt, CharacterError> {
    if shape.sum() != class.sum() {
        return Err(CharacterError::SizeMismatch {
            shape: shape.sum(),
            class: class.sum(),
        });
    }
    Ok(char_rec(shape.parts().to_vec(), class.parts()))
}

/// Character of the hook shape `(n - arm, 1^arm)`; `arm` ranges over
/// `0..n`. Hooks are the only shapes surviving against an `n`-cycle, which
/// is what makes them worth naming.
pub fn hook_character(arm: usize, class: &Partition) -> Result<BigInt, CharacterError> {
    let n = class.sum();
    if arm + 1 > n {
        return Err(CharacterError::HookOutOfRange { arm, n });
    }
    character(&Partition::hook(n, arm), class)
}

/// Dimension of the irreducible labelled by `shape`.
pub fn dimension(shape: &Partition) -> BigInt {
    char_rec(shape.parts().to_vec(), &vec![1; shape.sum()])
}

/// One `(shape, value)` entry per partition of `n`, in the order of
/// `partitions_of`.
pub fn all_shapes_at(class: &Partition) -> Vec<(Partition, BigInt)> {
    partitions_of(class.sum())
        .map(|shape| {
            let v = char_rec(shape.parts().to_vec(), class.parts());
            (shape, v)
        })
        .collect()
}

fn char_rec(shape: Vec<usize>, class: &[usize]) -> BigInt {
    if class.is_empty() {
        debug_assert!(shape.is_empty());
        return BigInt::one();
    }
    let key = (shape, class.to_vec());
    if let Some(hit) = cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let shape = &key.0;
    let strip = class[0];
    let rest = &class[1..];

    // Beta-set of the shape: strictly decreasing, beta[i] = shape[i] + (m-1-i).
    let m = shape.len();
    let beta: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (m - 1 - i))
        .collect();

    let mut total = BigInt::zero();
    for i in 0..m {
        let b = beta[i];
        if b < strip {
            continue;
        }
        let target = b - strip;
        if beta.contains(&target) {
            continue;
        }
        // Removing a border strip of length `strip` moves one beta number
        // down by `strip`; the sign is (-1)^(rows crossed).
        let crossings = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let new_shape: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (m - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sub = char_rec(new_shape, rest);
        if crossings % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    cache().write().unwrap().insert(key, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::factorial;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Independent S_3 character table, read off row by row.
    #[test]
    fn s3_table() {
        let classes = [p(&[1, 1, 1]), p(&[2, 1]), p(&[3])];
        let expect = [
            (p(&[3]), [1, 1, 1]),
            (p(&[2, 1]), [2, 0, -1]),
            (p(&[1, 1, 1]), [1, -1, 1]),
        ];
        for (shape, row) in &expect {
            for (class, want) in classes.iter().zip(row) {
                assert_eq!(
                    character(shape, class).unwrap(),
                    BigInt::from(*want),
                    "chi_{shape}({class})"
                );
            }
        }
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=8 {
            for class in partitions_of(n) {
                assert_eq!(character(&p(&[n]), &class).unwrap(), BigInt::one());
                let sign = if (n - class.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    character(&Partition::all_ones(n), &class).unwrap(),
                    BigInt::from(sign)
                );
            }
        }
    }

    #[test]
    fn hooks_on_full_cycle() {
        for n in 2..=9 {
            let cycle = Partition::single(n);
            for arm in 0..n {
                let sign = if arm % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    hook_character(arm, &cycle).unwrap(),
                    BigInt::from(sign),
                    "hook {arm} on {n}-cycle"
                );
            }
        }
        assert!(hook_character(5, &Partition::single(5)).is_err());
    }

    #[test]
    fn hook_matches_general_character() {
        for n in 1..=8 {
            for class in partitions_of(n) {
                for arm in 0..n {
                    assert_eq!(
                        hook_character(arm, &class).unwrap(),
                        character(&Partition::hook(n, arm), &class).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn dimensions_square_sum() {
        for n in 1..=8 {
            let total: BigInt = partitions_of(n)
                .map(|shape| {
                    let d = dimension(&shape);
                    &d * &d
                })
                .sum();
            assert_eq!(total, factorial(n), "sum of dim^2 at n = {n}");
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=8 {
            let classes: Vec<Partition> = partitions_of(n).collect();
            for mu in &classes {
                for nu in &classes {
                    let dot: BigInt = partitions_of(n)
                        .map(|shape| {
                            character(&shape, mu).unwrap() * character(&shape, nu).unwrap()
                        })
                        .sum();
                    if mu == nu {
                        assert_eq!(dot, mu.centralizer_order(), "diagonal at {mu}");
                    } else {
                        assert_eq!(dot, BigInt::zero(), "off-diagonal {mu},{nu}");
                    }
                }
            }
        }
    }

    #[test]
    fn row_orthogonality() {
        for n in 1..=8 {
            let shapes: Vec<Partition> = partitions_of(n).collect();
            for a in &shapes {
                for b in &shapes {
                    let dot: BigInt = partitions_of(n)
                        .map(|class| {
                            class.class_size()
                                * character(a, &class).unwrap()
                                * character(b, &class).unwrap()
                        })
                        .sum();
                    let expect = if a == b { factorial(n) } else { BigInt::zero() };
                    assert_eq!(dot, expect, "rows {a},{b}");
                }
            }
        }
    }

    #[test]
    fn all_shapes_listing() {
        use num_traits::ToPrimitive;
        let rows = all_shapes_at(&Partition::single(3));
        let values: Vec<i32> = rows.iter().map(|(_, v)| v.to_i32().unwrap()).collect();
        assert_eq!(values, vec![1, -1, 1]);
        let rows1 = all_shapes_at(&Partition::single(1));
        assert_eq!(rows1.len(), 1);
        assert_eq!(rows1[0].1, BigInt::one());
    }

    #[test]
    fn size_mismatch_rejected() {
        assert!(character(&p(&[2]), &p(&[3])).is_err());
    }
}
