//! Rational maps over `Q(sqrt(d))` and exact verification of their
//! ramification.
//!
//! Fiber profiles come from gcd-based squarefree decomposition of
//! `P - v Q`; the set of critical values comes from the resultant
//! `R(v) = res_x(P - vQ, (P - vQ)')`, computed exactly by
//! evaluation-interpolation and then stripped of linear and quadratic
//! factors over the field. Nothing is ever approximated numerically.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::poly::QuadPoly;
use super::quad::{FieldError, QuadRational};
use crate::partition::Partition;
use crate::scheme::Scheme;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("the map is constant")]
    ConstantMap,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("critical value {value} lies outside {{0, 1, infinity}}")]
    NotBelyi { value: QuadRational },
    #[error("critical values include roots of an irreducible factor of degree {degree}")]
    ResidualFactor { degree: usize },
}

/// A point of the projective line: finite or infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Finite(QuadRational),
    Infinity,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(v) => write!(f, "{v}"),
            Value::Infinity => write!(f, "infinity"),
        }
    }
}

/// Ramification data of one fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberProfile {
    pub value: Value,
    pub profile: Partition,
}

/// A reduced rational map `P/Q` of degree `max(deg P, deg Q) >= 1`; the
/// denominator is monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap {
    num: QuadPoly,
    den: QuadPoly,
    d: i64,
}

impl RationalMap {
    pub fn new(num: QuadPoly, den: QuadPoly) -> Result<Self, MapError> {
        if den.is_zero() {
            return Err(MapError::ZeroDenominator);
        }
        let d = super::poly::merge_fields(num.field(), den.field());
        let num = QuadPoly::new(num.coeffs().to_vec(), d);
        let den = QuadPoly::new(den.coeffs().to_vec(), d);
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.div_exact(&g), den.div_exact(&g));
        let lead_inv = den.leading().expect("nonzero denominator").inverse();
        num = num.scale(&lead_inv);
        den = den.scale(&lead_inv);
        let degree = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
        if degree == 0 {
            return Err(MapError::ConstantMap);
        }
        Ok(RationalMap { num, den, d })
    }

    /// The polynomial map `P/1`.
    pub fn from_polynomial(num: QuadPoly) -> Result<Self, MapError> {
        let d = num.field();
        RationalMap::new(num, QuadPoly::one(d))
    }

    pub fn numerator(&self) -> &QuadPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QuadPoly {
        &self.den
    }

    pub fn field(&self) -> i64 {
        self.d
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Degree as a covering of the sphere.
    pub fn degree(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    /// Image under the field automorphism `sqrt(d) -> -sqrt(d)`.
    pub fn conjugate(&self) -> RationalMap {
        RationalMap {
            num: self.num.conjugate(),
            den: self.den.conjugate(),
            d: self.d,
        }
    }

    /// Exact evaluation; a pole is reported as `Value::Infinity`, not an
    /// error. The point may live in a different quadratic field as long as
    /// one side is rational.
    pub fn evaluate(&self, point: &QuadRational) -> Result<Value, FieldError> {
        if self.d != 1 && point.field() != 1 && self.d != point.field() {
            return Err(FieldError::Incompatible(self.d, point.field()));
        }
        let den = self.den.eval(point);
        if den.is_zero() {
            return Ok(Value::Infinity);
        }
        let num = self.num.eval(point);
        Ok(Value::Finite(num.div(&den)))
    }

    /// Ramification profile of the fiber over `v`.
    ///
    /// For finite `v` the parts are the root multiplicities of `P - vQ`
    /// (each squarefree factor of multiplicity `m` and degree `e`
    /// contributes `e` parts equal to `m`); the point at infinity
    /// contributes the degree deficit. Over infinity the same is done
    /// with `Q`.
    pub fn fiber_profile(&self, v: &Value) -> FiberProfile {
        let n = self.degree();
        let poly = match v {
            Value::Finite(c) => {
                let c = c.in_field(self.d).expect("value in the map's field");
                self.num.sub(&self.den.scale(&c))
            }
            Value::Infinity => self.den.clone(),
        };
        let mut parts: Vec<usize> = Vec::new();
        if !poly.is_constant() {
            let (_, factors) = poly.squarefree_decomposition();
            for (factor, mult) in factors {
                let e = factor.degree().expect("nonconstant factor");
                parts.extend(std::iter::repeat_n(mult, e));
            }
        }
        let covered: usize = parts.iter().sum();
        debug_assert!(covered <= n);
        if covered < n {
            parts.push(n - covered);
        }
        FiberProfile {
            value: v.clone(),
            profile: Partition::new(parts),
        }
    }

    /// Is the fiber over `v` ramified at all?
    fn is_critical(&self, v: &Value) -> bool {
        self.fiber_profile(v).profile.len() < self.degree()
    }

    /// The discriminant-in-`v` polynomial `res_x(P - vQ, P' - vQ')`,
    /// reconstructed exactly from rational sample points where the leading
    /// coefficient does not vanish.
    fn discriminant_poly(&self) -> QuadPoly {
        let n = self.degree();
        let samples_needed = 2 * n + 1;
        let mut points: Vec<(BigRational, QuadRational)> = Vec::new();
        let num_d = self.num.derivative();
        let den_d = self.den.derivative();
        let mut k: i64 = 0;
        while points.len() < samples_needed {
            let v = BigRational::from(BigInt::from(k));
            // alternate 0, 1, -1, 2, -2, ...
            k = if k > 0 { -k } else { -k + 1 };
            let vq = QuadRational::from_rational(v.clone())
                .in_field(self.d)
                .expect("rational lifts");
            let f = self.num.sub(&self.den.scale(&vq));
            if f.degree() != Some(n) {
                continue;
            }
            let fp = num_d.sub(&den_d.scale(&vq));
            points.push((v, f.resultant(&fp)));
        }
        QuadPoly::interpolate(&points, self.d)
    }

    /// All critical values that are expressible in the field, whether the
    /// fiber over infinity is ramified, and the degree of any residual
    /// factor whose roots could not be extracted.
    pub fn critical_values(&self) -> CriticalValues {
        let mut values: Vec<QuadRational> = Vec::new();
        let mut residual = None;
        if self.degree() >= 2 {
            let disc = self.discriminant_poly();
            debug_assert!(!disc.is_zero(), "reduced maps have nonzero discriminant");
            let mut rest = disc.squarefree_part();
            // strip the known candidate roots 0 and 1 first
            for known in [QuadRational::zero(self.d), QuadRational::one(self.d)] {
                if rest.eval(&known).is_zero() {
                    let lin = QuadPoly::new(vec![known.neg(), QuadRational::one(self.d)], self.d);
                    rest = rest.div_exact(&lin);
                    values.push(known);
                }
            }
            match rest.degree() {
                None | Some(0) => {}
                Some(1) => {
                    values.push(rest.coeff(0).div(&rest.coeff(1)).neg());
                }
                Some(2) => {
                    // quadratic formula over the field, exactly
                    let (a, b, c) = (rest.coeff(2), rest.coeff(1), rest.coeff(0));
                    let disc2 = b
                        .mul(&b)
                        .sub(&a.mul(&c).scale(&BigRational::from(BigInt::from(4))));
                    match disc2.sqrt() {
                        Some(r) => {
                            let two_a = a.scale(&BigRational::from(BigInt::from(2)));
                            values.push(b.neg().add(&r).div(&two_a));
                            values.push(b.neg().sub(&r).div(&two_a));
                        }
                        None => residual = Some(2),
                    }
                }
                Some(deg) => {
                    residual = Some(deg);
                }
            }
        }
        // a leading-coefficient drop moves the point at infinity into a
        // finite fiber; that value is critical when the fiber says so
        if let Some(v_drop) = self.leading_drop_value() {
            if !values.contains(&v_drop) {
                values.push(v_drop);
            }
        }
        values.retain(|v| self.is_critical(&Value::Finite(v.clone())));
        values.sort();
        values.dedup();
        CriticalValues {
            infinity_critical: self.is_critical(&Value::Infinity),
            values,
            residual,
        }
    }

    /// The finite value whose fiber contains the point at infinity, if any:
    /// `lc(P)/lc(Q)` when the degrees tie, `0` when the numerator has
    /// smaller degree.
    fn leading_drop_value(&self) -> Option<QuadRational> {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        match dn.cmp(&dd) {
            std::cmp::Ordering::Greater => None,
            std::cmp::Ordering::Equal => Some(
                self.num
                    .leading()
                    .expect("nonconstant map")
                    .div(self.den.leading().expect("monic denominator")),
            ),
            std::cmp::Ordering::Less => Some(QuadRational::zero(self.d)),
        }
    }

    /// Full verification; see [`MapVerdict`].
    #[allow(clippy::result_large_err)]
    pub fn verify(&self) -> Result<MapVerdict, VerifyError> {
        let cv = self.critical_values();
        if let Some(degree) = cv.residual {
            return Err(VerifyError::ResidualFactor { degree });
        }
        let zero = QuadRational::zero(self.d);
        let one = QuadRational::one(self.d);
        let extra: Vec<&QuadRational> = cv
            .values
            .iter()
            .filter(|v| **v != zero && **v != one)
            .collect();
        if extra.is_empty() {
            let scheme =
                self.scheme_over(&[Value::Infinity, Value::Finite(zero), Value::Finite(one)]);
            return Ok(MapVerdict::Belyi { scheme });
        }
        let has_zero = cv.values.contains(&zero);
        let has_one = cv.values.contains(&one);
        if extra.len() == 1 && has_zero && !has_one {
            let c = extra[0].clone();
            let scheme = self.scheme_over(&[
                Value::Infinity,
                Value::Finite(zero),
                Value::Finite(c.clone()),
            ]);
            return Ok(MapVerdict::Shabat {
                second_value: c,
                scheme,
            });
        }
        Err(VerifyError::NotBelyi {
            value: extra[0].clone(),
        })
    }

    fn scheme_over(&self, fibers: &[Value; 3]) -> Scheme {
        let profiles: Vec<Partition> = fibers
            .iter()
            .map(|v| self.fiber_profile(v).profile)
            .collect();
        let scheme = Scheme::new(profiles).expect("profiles partition the degree");
        assert_eq!(
            scheme.genus(),
            Some(0),
            "a rational map must produce a genus-0 scheme"
        );
        scheme
    }

    /// Strict Belyi check: the scheme `[λ_∞][λ_0][λ_1]` when all critical
    /// values lie in `{0, 1, infinity}`.
    #[allow(clippy::result_large_err)]
    pub fn is_belyi(&self) -> Result<Scheme, VerifyError> {
        match self.verify()? {
            MapVerdict::Belyi { scheme } => Ok(scheme),
            MapVerdict::Shabat { second_value, .. } => Err(VerifyError::NotBelyi {
                value: second_value,
            }),
        }
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Exhaustive critical-value data over the base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalValues {
    /// Finite critical values lying in `Q(sqrt(d))`, sorted.
    pub values: Vec<QuadRational>,
    pub infinity_critical: bool,
    /// Degree of a leftover discriminant factor whose roots were not
    /// extracted: linear and quadratic factors are resolved exactly,
    /// anything of higher degree is reported here, never silently dropped.
    pub residual: Option<usize>,
}

/// Outcome of verifying a map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapVerdict {
    /// Critical values within `{0, 1, infinity}`; the scheme is listed in
    /// the order (infinity, 0, 1).
    Belyi { scheme: Scheme },
    /// Critical values `{0, c, infinity}` with `c != 1`: post-composing
    /// with the affine map sending `{0, c}` to `{0, 1}` yields a Belyi
    /// function with the same scheme, listed in the order (infinity, 0, c).
    Shabat {
        second_value: QuadRational,
        scheme: Scheme,
    },
}

impl MapVerdict {
    pub fn scheme(&self) -> &Scheme {
        match self {
            MapVerdict::Belyi { scheme } => scheme,
            MapVerdict::Shabat { scheme, .. } => scheme,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::belyi::poly::QuadPoly;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn poly(coeffs: &[(i64, i64)]) -> QuadPoly {
        QuadPoly::from_rational_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect(), 1)
    }

    /// z^n as a rational map.
    fn power_map(n: usize) -> RationalMap {
        let mut coeffs = vec![(0, 1); n + 1];
        coeffs[n] = (1, 1);
        RationalMap::from_polynomial(poly(&coeffs)).unwrap()
    }

    #[test]
    fn construction_reduces() {
        // (x^2 - 1) / (x - 1) reduces to x + 1
        let m =
            RationalMap::new(poly(&[(-1, 1), (0, 1), (1, 1)]), poly(&[(-1, 1), (1, 1)])).unwrap();
        assert_eq!(m.degree(), 1);
        assert!(m.is_polynomial());
        assert_eq!(m.denominator().degree(), Some(0));
        assert!(RationalMap::new(poly(&[(3, 1)]), poly(&[(1, 1)])).is_err());
        assert!(RationalMap::new(poly(&[(1, 1)]), QuadPoly::zero(1)).is_err());
    }

    #[test]
    fn power_map_profiles() {
        let m = power_map(4);
        assert_eq!(
            m.fiber_profile(&Value::Finite(QuadRational::from_int(0)))
                .profile,
            Partition::single(4)
        );
        assert_eq!(
            m.fiber_profile(&Value::Infinity).profile,
            Partition::single(4)
        );
        assert_eq!(
            m.fiber_profile(&Value::Finite(QuadRational::from_int(1)))
                .profile,
            Partition::all_ones(4)
        );
        let cv = m.critical_values();
        assert_eq!(cv.values, vec![QuadRational::from_int(0)]);
        assert!(cv.infinity_critical);
        assert_eq!(cv.residual, None);
        assert_eq!(m.is_belyi().unwrap().to_string(), "[4][4][1,1,1,1]");
    }

    #[test]
    fn parabola_is_not_belyi() {
        // x^2 - 1 has the lone finite critical value -1
        let m = RationalMap::from_polynomial(poly(&[(-1, 1), (0, 1), (1, 1)])).unwrap();
        let err = m.verify().unwrap_err();
        assert_eq!(
            err,
            VerifyError::NotBelyi {
                value: QuadRational::from_int(-1)
            }
        );
    }

    #[test]
    fn rational_dessin_map() {
        // -(1/64) (x-1)^3 (x-9) / x
        let num = poly(&[(-1, 1), (1, 1)])
            .pow(3)
            .mul(&poly(&[(-9, 1), (1, 1)]))
            .scale(&QuadRational::new(rat(-1, 64), rat(0, 1), 1).unwrap());
        let m = RationalMap::new(num, QuadPoly::x(1)).unwrap();
        assert_eq!(m.degree(), 4);
        let scheme = m.is_belyi().unwrap();
        assert_eq!(scheme.to_string(), "[3,1][3,1][2,2]");
        // white vertices sit at 3 ± 2 sqrt(3)
        for sign in [1i64, -1] {
            let x = QuadRational::new(rat(3, 1), rat(2 * sign, 1), 3).unwrap();
            assert_eq!(m.evaluate(&x).unwrap(), Value::Finite(QuadRational::one(3)));
        }
        // the finite pole is at the origin
        assert_eq!(
            m.evaluate(&QuadRational::from_int(0)).unwrap(),
            Value::Infinity
        );
    }

    #[test]
    fn evaluate_matches_direct_fraction() {
        let m = RationalMap::new(poly(&[(1, 1), (1, 1)]), poly(&[(-2, 1), (1, 1)])).unwrap();
        // (x+1)/(x-2) at 5 is 2
        assert_eq!(
            m.evaluate(&QuadRational::from_int(5)).unwrap(),
            Value::Finite(QuadRational::from_int(2))
        );
        assert_eq!(
            m.evaluate(&QuadRational::from_int(2)).unwrap(),
            Value::Infinity
        );
    }

    #[test]
    fn field_mismatch_on_evaluate() {
        let num = QuadPoly::new(
            vec![
                QuadRational::new(rat(0, 1), rat(1, 1), 5).unwrap(),
                QuadRational::one(5),
                QuadRational::one(5),
            ],
            5,
        );
        let m = RationalMap::from_polynomial(num).unwrap();
        let pt = QuadRational::new(rat(0, 1), rat(1, 1), 7).unwrap();
        assert!(m.evaluate(&pt).is_err());
    }

    #[test]
    fn shabat_with_quadratic_second_value() {
        // x^3 (x - a)^2 for generic rational a is Shabat: values {0, c}
        let a = QuadRational::from_int(5);
        let num = QuadPoly::x(1)
            .pow(3)
            .mul(&QuadPoly::new(vec![a.neg(), QuadRational::one(1)], 1).pow(2));
        let m = RationalMap::from_polynomial(num).unwrap();
        match m.verify().unwrap() {
            MapVerdict::Shabat {
                second_value,
                scheme,
            } => {
                assert_eq!(scheme.to_string(), "[5][3,2][2,1,1,1]");
                // beta(3) = 27 * 4 = 108
                assert_eq!(second_value, QuadRational::from_int(108));
            }
            other => panic!("expected Shabat, got {other:?}"),
        }
    }

    #[test]
    fn deficient_fiber_through_leading_drop() {
        // x / (x^3 + 1): the fiber over 0 is {0, infinity^2}
        let m = RationalMap::new(QuadPoly::x(1), poly(&[(1, 1), (0, 1), (0, 1), (1, 1)])).unwrap();
        let profile = m
            .fiber_profile(&Value::Finite(QuadRational::from_int(0)))
            .profile;
        assert_eq!(profile, Partition::new(vec![2, 1]));
        let cv = m.critical_values();
        assert!(cv.values.contains(&QuadRational::from_int(0)));
    }

    #[test]
    fn derivative_multiplicity_consistency() {
        // every repeated root of P - vQ is a root of the x-derivative
        let maps = [power_map(5), power_map(2)];
        for m in &maps {
            for v in m.critical_values().values {
                let f = m.numerator().sub(&m.denominator().scale(&v));
                let g = f.gcd(&f.derivative());
                assert!(!g.is_constant(), "gcd must witness the multiplicity");
            }
        }
    }
}
