//! Small formatting helpers shared by the library and the CLI.

use num_rational::BigRational;
use num_traits::One;

/// Lowest-terms rational as `p/q`, or just `p` when the denominator is 1.
pub fn ratio_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn formatting() {
        let r = BigRational::new(BigInt::from(2), BigInt::from(6));
        assert_eq!(ratio_string(&r), "1/3");
        let w = BigRational::new(BigInt::from(-8), BigInt::from(4));
        assert_eq!(ratio_string(&w), "-2");
        let z = BigRational::new(BigInt::from(0), BigInt::from(5));
        assert_eq!(ratio_string(&z), "0");
    }
}
