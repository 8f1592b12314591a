//! Dense univariate polynomials over `Q(sqrt(d))`.
//!
//! Everything the verifier needs reduces to exact field arithmetic:
//! Euclidean division, monic gcd, Yun squarefree decomposition, resultants
//! by remainder sequences, and Lagrange interpolation. No root-finding.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::quad::QuadRational;

/// Common field of two polynomials: rationals lift anywhere, two genuine
/// quadratic fields must agree.
pub(crate) fn merge_fields(d: i64, e: i64) -> i64 {
    match (d, e) {
        (d, e) if d == e => d,
        (1, e) => e,
        (d, 1) => d,
        (d, e) => panic!("incompatible fields Q(sqrt({d})) and Q(sqrt({e}))"),
    }
}

/// Coefficients stored constant-first; the zero polynomial has no
/// coefficients. All coefficients share the field `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadPoly {
    coeffs: Vec<QuadRational>,
    d: i64,
}

impl QuadPoly {
    pub fn new(mut coeffs: Vec<QuadRational>, d: i64) -> QuadPoly {
        for c in &mut coeffs {
            *c = c.in_field(d).expect("coefficient outside the field");
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QuadPoly { coeffs, d }
    }

    pub fn zero(d: i64) -> QuadPoly {
        QuadPoly {
            coeffs: Vec::new(),
            d,
        }
    }

    pub fn constant(c: QuadRational) -> QuadPoly {
        let d = c.field();
        QuadPoly::new(vec![c], d)
    }

    pub fn one(d: i64) -> QuadPoly {
        QuadPoly::constant(QuadRational::one(d))
    }

    /// The monomial `x` over the field `d`.
    pub fn x(d: i64) -> QuadPoly {
        QuadPoly::new(vec![QuadRational::zero(d), QuadRational::one(d)], d)
    }

    pub fn from_rational_coeffs(coeffs: Vec<BigRational>, d: i64) -> QuadPoly {
        QuadPoly::new(
            coeffs
                .into_iter()
                .map(QuadRational::from_rational)
                .collect(),
            d,
        )
    }

    pub fn field(&self) -> i64 {
        self.d
    }

    pub fn coeffs(&self) -> &[QuadRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QuadRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| QuadRational::zero(self.d))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&QuadRational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &QuadPoly) -> QuadPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect();
        QuadPoly::new(coeffs, merge_fields(self.d, other.d))
    }

    pub fn sub(&self, other: &QuadPoly) -> QuadPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QuadPoly {
        QuadPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            d: self.d,
        }
    }

    pub fn mul(&self, other: &QuadPoly) -> QuadPoly {
        let d = merge_fields(self.d, other.d);
        if self.is_zero() || other.is_zero() {
            return QuadPoly::zero(d);
        }
        let mut coeffs = vec![QuadRational::zero(d); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        QuadPoly::new(coeffs, d)
    }

    pub fn scale(&self, c: &QuadRational) -> QuadPoly {
        QuadPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.d)
    }

    pub fn pow(&self, exp: u32) -> QuadPoly {
        let mut out = QuadPoly::one(self.d);
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    pub fn derivative(&self) -> QuadPoly {
        if self.coeffs.len() <= 1 {
            return QuadPoly::zero(self.d);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&BigRational::from(BigInt::from(k))))
            .collect();
        QuadPoly::new(coeffs, self.d)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, divisor: &QuadPoly) -> (QuadPoly, QuadPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let d = merge_fields(self.d, divisor.d);
        let dd = divisor.degree().unwrap();
        if self.degree().is_none_or(|dn| dn < dd) {
            return (QuadPoly::zero(d), self.clone());
        }
        let lead_inv = divisor.leading().unwrap().inverse();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![QuadRational::zero(d); self.coeffs.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c.clone();
            for (j, div_c) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] = rem[k - dd + j].sub(&c.mul(div_c));
            }
        }
        rem.truncate(dd);
        (QuadPoly::new(quot, d), QuadPoly::new(rem, d))
    }

    pub fn div_exact(&self, divisor: &QuadPoly) -> QuadPoly {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> QuadPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inverse()),
        }
    }

    /// Horner evaluation; the point may be rational or share the field.
    pub fn eval(&self, x: &QuadRational) -> QuadRational {
        let field = merge_fields(self.d, x.field());
        let mut acc = QuadRational::zero(field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Coefficient-wise field conjugation `sqrt(d) -> -sqrt(d)`.
    pub fn conjugate(&self) -> QuadPoly {
        QuadPoly {
            coeffs: self.coeffs.iter().map(|c| c.conjugate()).collect(),
            d: self.d,
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm, with monic
    /// normalization at every step to keep coefficients in check.
    pub fn gcd(&self, other: &QuadPoly) -> QuadPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Yun squarefree decomposition: returns the leading coefficient and
    /// monic pairwise-coprime squarefree factors with multiplicities, so
    /// that `self = lc * prod f_i^{m_i}`.
    pub fn squarefree_decomposition(&self) -> (QuadRational, Vec<(QuadPoly, usize)>) {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let lc = self.leading().unwrap().clone();
        let f = self.monic();
        if f.is_constant() {
            return (lc, Vec::new());
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut factors = Vec::new();
        let mut b = f.div_exact(&a0);
        let mut c = fp.div_exact(&a0);
        let mut mult = 1;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if !b.is_constant() {
                    factors.push((b, mult));
                }
                break;
            }
            let step = b.gcd(&d);
            if !step.is_constant() {
                factors.push((step.clone(), mult));
            }
            b = b.div_exact(&step);
            c = d.div_exact(&step);
            mult += 1;
            if b.is_constant() {
                break;
            }
        }
        (lc, factors)
    }

    /// Squarefree part: the product of distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> QuadPoly {
        let (_, factors) = self.squarefree_decomposition();
        factors
            .into_iter()
            .fold(QuadPoly::one(self.d), |acc, (f, _)| acc.mul(&f))
    }

    /// Resultant of two polynomials via the remainder sequence.
    pub fn resultant(&self, other: &QuadPoly) -> QuadRational {
        let field = merge_fields(self.d, other.d);
        let (mut a, mut b) = (self.clone(), other.clone());
        match (a.degree(), b.degree()) {
            (None, _) | (_, None) => return QuadRational::zero(field),
            (Some(0), Some(db)) => return a.coeff(0).pow(db as u32),
            (Some(da), Some(0)) => return b.coeff(0).pow(da as u32),
            _ => {}
        }
        let mut result = QuadRational::one(field);
        loop {
            let da = a.degree().expect("nonzero by construction");
            let db = b.degree().expect("nonzero by construction");
            if db == 0 {
                return result.mul(&b.coeff(0).pow(da as u32));
            }
            let (_, r) = a.divrem(&b);
            if r.is_zero() {
                return QuadRational::zero(field);
            }
            let dr = r.degree().unwrap();
            // res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
            let mut factor = b.leading().unwrap().pow((da - dr) as u32);
            if (da * db) % 2 == 1 {
                factor = factor.neg();
            }
            result = result.mul(&factor);
            a = b;
            b = r;
        }
    }

    /// Unique polynomial of degree `< points.len()` through the given
    /// points (Lagrange). Sample coordinates are rational, values may live
    /// in the field.
    pub fn interpolate(points: &[(BigRational, QuadRational)], d: i64) -> QuadPoly {
        let mut acc = QuadPoly::zero(d);
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = QuadPoly::one(d);
            let mut denom = BigRational::from(BigInt::from(1));
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&QuadPoly::from_rational_coeffs(
                    vec![-xj.clone(), BigRational::from(BigInt::from(1))],
                    d,
                ));
                denom *= xi - xj;
            }
            let weight = yi.scale(&denom.recip());
            acc = acc.add(&basis.scale(&weight));
        }
        acc
    }
}

impl fmt::Display for QuadPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn poly(coeffs: &[i64]) -> QuadPoly {
        QuadPoly::from_rational_coeffs(coeffs.iter().map(|&c| rat(c, 1)).collect(), 1)
    }

    #[test]
    fn basic_arithmetic() {
        let f = poly(&[1, 2, 1]); // (x+1)^2
        let g = poly(&[-1, 1]); // x - 1
        assert_eq!(f.mul(&g), poly(&[-1, -1, 1, 1]));
        assert_eq!(f.add(&g), poly(&[0, 3, 1]));
        assert_eq!(f.degree(), Some(2));
        assert_eq!(QuadPoly::zero(1).degree(), None);
    }

    #[test]
    fn division() {
        let f = poly(&[-1, 0, 0, 0, 1]); // x^4 - 1
        let g = poly(&[-1, 1]); // x - 1
        let (q, r) = f.divrem(&g);
        assert!(r.is_zero());
        assert_eq!(q, poly(&[1, 1, 1, 1]));
        let (q2, r2) = f.divrem(&poly(&[1, 1, 1])); // x^2+x+1
        assert_eq!(q2.mul(&poly(&[1, 1, 1])).add(&r2), f);
    }

    #[test]
    fn gcd_and_derivative() {
        // (x-1)^2 (x+2) has gcd (x-1) with its derivative
        let f = poly(&[-1, 1]).pow(2).mul(&poly(&[2, 1]));
        let g = f.gcd(&f.derivative());
        assert_eq!(g, poly(&[-1, 1]));
        // coprime polynomials give a constant gcd
        assert_eq!(poly(&[-1, 1]).gcd(&poly(&[1, 1])), QuadPoly::one(1));
    }

    #[test]
    fn squarefree_decomposition_reconstructs() {
        // 3 (x-1)^3 (x+1)^2 (x-2)
        let f = poly(&[-1, 1])
            .pow(3)
            .mul(&poly(&[1, 1]).pow(2))
            .mul(&poly(&[-2, 1]))
            .scale(&QuadRational::from_int(3));
        let (lc, factors) = f.squarefree_decomposition();
        assert_eq!(lc, QuadRational::from_int(3));
        let mut rebuilt = QuadPoly::constant(lc);
        for (fac, mult) in &factors {
            rebuilt = rebuilt.mul(&fac.pow(*mult as u32));
        }
        assert_eq!(rebuilt, f);
        let mults: Vec<usize> = factors.iter().map(|&(_, m)| m).collect();
        assert_eq!(mults, vec![1, 2, 3]);
        assert_eq!(
            f.squarefree_part(),
            poly(&[-1, 1]).mul(&poly(&[1, 1])).mul(&poly(&[-2, 1]))
        );
    }

    #[test]
    fn squarefree_over_quadratic_field() {
        // (x - sqrt(5))^2 (x + sqrt(5))
        let root = QuadRational::new(rat(0, 1), rat(1, 1), 5).unwrap();
        let lin_minus = QuadPoly::new(vec![root.neg(), QuadRational::one(5)], 5);
        let lin_plus = QuadPoly::new(vec![root.clone(), QuadRational::one(5)], 5);
        let f = lin_minus.pow(2).mul(&lin_plus);
        let (_, factors) = f.squarefree_decomposition();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0], (lin_plus, 1));
        assert_eq!(factors[1], (lin_minus, 2));
    }

    #[test]
    fn resultants() {
        // res(x^2 - 1, 2x) = -4
        let f = poly(&[-1, 0, 1]);
        assert_eq!(f.resultant(&f.derivative()), QuadRational::from_int(-4));
        // shared root gives zero
        let g = poly(&[-1, 1]).mul(&poly(&[3, 1]));
        assert!(f.resultant(&g).is_zero());
        // res(x - a, x - b) = b - a up to sign convention: eval
        let h = poly(&[-2, 1]);
        let k = poly(&[-5, 1]);
        // res = product of (root_h - root_k) with lc powers: (2 - 5) = -3
        assert_eq!(h.resultant(&k), QuadRational::from_int(-3));
        // constant cases
        assert_eq!(
            poly(&[7]).resultant(&poly(&[0, 0, 1])),
            QuadRational::from_int(49)
        );
    }

    #[test]
    fn eval_and_interpolate() {
        let f = poly(&[1, -3, 0, 2]); // 2x^3 - 3x + 1
        let points: Vec<(BigRational, QuadRational)> = (0..4)
            .map(|k| {
                let x = rat(k, 1);
                let y = f.eval(&QuadRational::from_rational(x.clone()));
                (x, y)
            })
            .collect();
        let g = QuadPoly::interpolate(&points, 1);
        assert_eq!(g, f);
    }

    #[test]
    fn eval_at_quadratic_point() {
        // x^2 - 2x - 2 at 1 + sqrt(3) is 0
        let f = poly(&[-2, -2, 1]);
        let x = QuadRational::new(rat(1, 1), rat(1, 1), 3).unwrap();
        assert!(f.eval(&x).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[1, 0, 2]).to_string(), "(2)*x^2 + (1)");
        assert_eq!(QuadPoly::zero(1).to_string(), "0");
    }
}
