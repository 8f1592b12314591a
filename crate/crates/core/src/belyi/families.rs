//! Explicitly constructed map families: power maps, the two-branch-point
//! Belyi polynomials, Chebyshev polynomials and dihedral maps.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::map::RationalMap;
use super::poly::QuadPoly;
use super::quad::QuadRational;

fn rational(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// `z -> z^n`, the cyclic covering.
pub fn power_map(n: usize) -> RationalMap {
    assert!(n >= 1);
    let mut coeffs = vec![BigRational::from(BigInt::from(0)); n + 1];
    coeffs[n] = rational(1);
    RationalMap::from_polynomial(QuadPoly::from_rational_coeffs(coeffs, 1))
        .expect("nonconstant by construction")
}

/// The Belyi polynomial `(1/mu) z^m (1-z)^n` with
/// `mu = m^m n^n / (m+n)^(m+n)`; its critical values are `{0, 1}`.
pub fn belyi_polynomial(m: usize, n: usize) -> RationalMap {
    assert!(m >= 1 && n >= 1);
    let mu = BigRational::new(
        BigInt::from(m).pow(m as u32) * BigInt::from(n).pow(n as u32),
        BigInt::from(m + n).pow((m + n) as u32),
    );
    let zm = QuadPoly::x(1).pow(m as u32);
    let one_minus_z = QuadPoly::from_rational_coeffs(vec![rational(1), rational(-1)], 1);
    let poly = zm
        .mul(&one_minus_z.pow(n as u32))
        .scale(&QuadRational::from_rational(mu.recip()));
    RationalMap::from_polynomial(poly).expect("nonconstant by construction")
}

/// The Chebyshev polynomial `T_n` via `T_n = 2x T_{n-1} - T_{n-2}`.
pub fn chebyshev(n: usize) -> QuadPoly {
    let two_x = QuadPoly::from_rational_coeffs(vec![rational(0), rational(2)], 1);
    let mut prev = QuadPoly::one(1); // T_0
    let mut cur = QuadPoly::x(1); // T_1
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = two_x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `(1 + T_n)/2`, which moves the critical values `{-1, 1}` of `T_n`
/// to `{0, 1}`.
pub fn chebyshev_belyi(n: usize) -> RationalMap {
    assert!(n >= 1);
    let half = QuadRational::from_rational(BigRational::new(BigInt::from(1), BigInt::from(2)));
    let poly = chebyshev(n).add(&QuadPoly::one(1)).scale(&half);
    RationalMap::from_polynomial(poly).expect("nonconstant by construction")
}

/// The dihedral map of degree `2p`: `(z^p + z^{-p} + 2)/4` written as the
/// reduced fraction `(z^p + 1)^2 / (4 z^p)`.
pub fn dihedral_belyi(p: usize) -> RationalMap {
    assert!(p >= 1);
    let mut zp_plus_one = vec![rational(0); p + 1];
    zp_plus_one[0] = rational(1);
    zp_plus_one[p] = rational(1);
    let num = QuadPoly::from_rational_coeffs(zp_plus_one, 1).pow(2);
    let mut four_zp = vec![rational(0); p + 1];
    four_zp[p] = rational(4);
    let den = QuadPoly::from_rational_coeffs(four_zp, 1);
    RationalMap::new(num, den).expect("nonconstant by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::Scheme;
    use crate::series::{chebyshev_scheme, cyclic_scheme, dihedral_scheme};

    #[test]
    fn chebyshev_base_cases() {
        assert_eq!(chebyshev(1), QuadPoly::x(1));
        assert_eq!(
            chebyshev(2),
            QuadPoly::from_rational_coeffs(vec![rational(-1), rational(0), rational(2)], 1)
        );
        // T_3 = 4x^3 - 3x
        assert_eq!(
            chebyshev(3),
            QuadPoly::from_rational_coeffs(
                vec![rational(0), rational(-3), rational(0), rational(4)],
                1
            )
        );
    }

    #[test]
    fn power_maps_verify() {
        for n in 1..=10 {
            let scheme = power_map(n).is_belyi().unwrap();
            assert_eq!(scheme.canonical(), cyclic_scheme(n).canonical(), "z^{n}");
        }
    }

    #[test]
    fn belyi_polynomials_verify() {
        let s23 = belyi_polynomial(2, 3).is_belyi().unwrap();
        assert_eq!(s23.to_string(), "[5][3,2][2,1,1,1]");
        for m in 1..=4usize {
            for n in 1..=4usize {
                let s = belyi_polynomial(m, n).is_belyi().unwrap();
                let total = m + n;
                let mut expected = vec![2];
                expected.extend(std::iter::repeat_n(1, total - 2));
                let e = Scheme::three(
                    crate::partition::Partition::single(total),
                    crate::partition::Partition::new(vec![m, n]),
                    crate::partition::Partition::new(expected),
                )
                .unwrap();
                assert_eq!(s.canonical(), e.canonical(), "beta_{m},{n}");
            }
        }
    }

    #[test]
    fn chebyshev_maps_verify() {
        for n in 2..=10 {
            let scheme = chebyshev_belyi(n).is_belyi().unwrap();
            assert_eq!(scheme.canonical(), chebyshev_scheme(n).canonical(), "T_{n}");
        }
    }

    #[test]
    fn dihedral_maps_verify() {
        for p in 2..=5 {
            let scheme = dihedral_belyi(p).is_belyi().unwrap();
            assert_eq!(
                scheme.canonical(),
                dihedral_scheme(p).canonical(),
                "dihedral p={p}"
            );
        }
        // p = 1 degenerates to the degree-2 covering
        let s1 = dihedral_belyi(1).is_belyi().unwrap();
        assert_eq!(s1.canonical(), dihedral_scheme(1).canonical());
    }
}
