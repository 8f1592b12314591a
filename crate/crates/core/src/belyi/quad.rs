//! Exact arithmetic in a real or imaginary quadratic field `Q(sqrt(d))`.
//!
//! Elements are `a + b*sqrt(d)` with rational `a, b` and a squarefree
//! integer discriminant `d`; `d = 1` encodes the rational field itself (with
//! `b` pinned to zero). Mixing two genuinely different fields is a caller
//! error; rationals lift into any field.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("field discriminant {0} is not squarefree (or is zero)")]
    NotSquarefree(i64),
    #[error("incompatible fields Q(sqrt({0})) and Q(sqrt({1}))")]
    Incompatible(i64, i64),
}

/// True for squarefree nonzero `d`; `d = 1` is the rational field marker.
pub fn is_valid_discriminant(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let mut m = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p * p) {
            return false;
        }
        while m.is_multiple_of(p) {
            m /= p;
        }
        p += 1;
    }
    true
}

/// `a + b*sqrt(d)` with exact rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadRational {
    a: BigRational,
    b: BigRational,
    d: i64,
}

impl QuadRational {
    pub fn new(a: BigRational, b: BigRational, d: i64) -> Result<Self, FieldError> {
        if !is_valid_discriminant(d) {
            return Err(FieldError::NotSquarefree(d));
        }
        if d == 1 && !b.is_zero() {
            // sqrt(1) = 1 folds into the rational part
            return Ok(QuadRational {
                a: a + b,
                b: BigRational::zero(),
                d,
            });
        }
        Ok(QuadRational { a, b, d })
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadRational {
            a,
            b: BigRational::zero(),
            d: 1,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from(BigInt::from(v)))
    }

    pub fn zero(d: i64) -> Self {
        QuadRational {
            a: BigRational::zero(),
            b: BigRational::zero(),
            d,
        }
    }

    pub fn one(d: i64) -> Self {
        QuadRational {
            a: BigRational::one(),
            b: BigRational::zero(),
            d,
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn field(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<&BigRational> {
        self.b.is_zero().then_some(&self.a)
    }

    /// The field automorphism `sqrt(d) -> -sqrt(d)`.
    pub fn conjugate(&self) -> QuadRational {
        QuadRational {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// `a^2 - b^2 d`, a rational; zero exactly for the zero element.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from(BigInt::from(self.d))
    }

    /// Lifts a rational element into the field `d`, or checks the fields
    /// agree.
    pub fn in_field(&self, d: i64) -> Result<QuadRational, FieldError> {
        if self.d == d {
            Ok(self.clone())
        } else if self.is_rational() {
            QuadRational::new(self.a.clone(), BigRational::zero(), d)
        } else {
            Err(FieldError::Incompatible(self.d, d))
        }
    }

    fn merge_field(&self, other: &QuadRational) -> i64 {
        match (self.d, other.d) {
            (d, e) if d == e => d,
            (1, e) => {
                debug_assert!(self.is_rational());
                e
            }
            (d, 1) => {
                debug_assert!(other.is_rational());
                d
            }
            (d, e) => panic!("incompatible fields Q(sqrt({d})) and Q(sqrt({e}))"),
        }
    }

    pub fn add(&self, other: &QuadRational) -> QuadRational {
        QuadRational {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.merge_field(other),
        }
    }

    pub fn sub(&self, other: &QuadRational) -> QuadRational {
        QuadRational {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.merge_field(other),
        }
    }

    pub fn neg(&self) -> QuadRational {
        QuadRational {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    pub fn mul(&self, other: &QuadRational) -> QuadRational {
        let d = self.merge_field(other);
        let dd = BigRational::from(BigInt::from(d));
        QuadRational {
            a: &self.a * &other.a + &self.b * &other.b * dd,
            b: &self.a * &other.b + &self.b * &other.a,
            d,
        }
    }

    pub fn scale(&self, r: &BigRational) -> QuadRational {
        QuadRational {
            a: &self.a * r,
            b: &self.b * r,
            d: self.d,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inverse(&self) -> QuadRational {
        let norm = self.norm();
        assert!(!norm.is_zero(), "division by zero in Q(sqrt({}))", self.d);
        self.conjugate().scale(&norm.recip())
    }

    pub fn div(&self, other: &QuadRational) -> QuadRational {
        let d = self.merge_field(other);
        let lifted = QuadRational {
            a: other.a.clone(),
            b: other.b.clone(),
            d,
        };
        self.mul(&lifted.inverse())
    }

    pub fn pow(&self, exp: u32) -> QuadRational {
        let mut out = QuadRational::one(self.d);
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// Exact square root within the field, when one exists.
    ///
    /// Solves `(e + f sqrt(d))^2 = a + b sqrt(d)` over the rationals: either
    /// `b = 0` and one of `a`, `a/d` is a rational square, or `e^2` is a
    /// rational-square root of `t^2 - a t + b^2 d / 4`.
    pub fn sqrt(&self) -> Option<QuadRational> {
        let d_rat = BigRational::from(BigInt::from(self.d));
        if self.b.is_zero() {
            if let Some(e) = rational_sqrt(&self.a) {
                return Some(QuadRational {
                    a: e,
                    b: BigRational::zero(),
                    d: self.d,
                });
            }
            if self.d != 1 {
                if let Some(f) = rational_sqrt(&(&self.a / &d_rat)) {
                    return Some(QuadRational {
                        a: BigRational::zero(),
                        b: f,
                        d: self.d,
                    });
                }
            }
            return None;
        }
        // e^2 = (a ± r)/2 where r^2 = a^2 - b^2 d = norm
        let r = rational_sqrt(&self.norm())?;
        let two = BigRational::from(BigInt::from(2));
        for cand in [(&self.a + &r) / &two, (&self.a - &r) / &two] {
            if let Some(e) = rational_sqrt(&cand) {
                if e.is_zero() {
                    continue;
                }
                let f = &self.b / (&two * &e);
                return Some(QuadRational {
                    a: e,
                    b: f,
                    d: self.d,
                });
            }
        }
        None
    }
}

/// Exact rational square root, if the argument is a perfect square.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let sn = num.sqrt();
    if &(&sn * &sn) != num {
        return None;
    }
    let sd = den.sqrt();
    if &(&sd * &sd) != den {
        return None;
    }
    Some(BigRational::new(BigInt::from(sn), BigInt::from(sd)))
}

/// Deterministic ordering (lexicographic on the rational and surd parts);
/// used for stable output, not numeric comparison.
impl Ord for QuadRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a
            .cmp(&other.a)
            .then_with(|| self.b.cmp(&other.b))
            .then_with(|| self.d.cmp(&other.d))
    }
}

impl PartialOrd for QuadRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QuadRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rat(r: &BigRational) -> String {
            if r.denom().is_one() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        if self.b.is_zero() {
            return write!(f, "{}", rat(&self.a));
        }
        let mag = self.b.abs();
        let surd = if mag.is_one() {
            format!("sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", rat(&mag), self.d)
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{surd}")
            } else {
                write!(f, "{surd}")
            }
        } else if self.b.is_negative() {
            write!(f, "{}-{surd}", rat(&self.a))
        } else {
            write!(f, "{}+{surd}", rat(&self.a))
        }
    }
}
