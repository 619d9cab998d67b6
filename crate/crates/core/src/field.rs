use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// Exact coefficient field.
///
/// Every zero test in the graded engine is exact, so only exact types
/// implement this. Fixed-width ratios are accepted but overflow panics.
pub trait Field:
    Clone + PartialEq + Debug + Display + Num + Signed + Send + Sync + 'static
{
    fn from_u64(n: u64) -> Self;

    /// `n!` in the field.
    fn factorial(n: u64) -> Self {
        (1..=n).fold(Self::one(), |acc, i| acc * Self::from_u64(i))
    }

    /// `q (q-1) ... (q-p+1)`, i.e. `q!/(q-p)!`; zero when `p > q`.
    fn falling_factorial(q: u64, p: u64) -> Self {
        if p > q {
            return Self::zero();
        }
        (0..p).fold(Self::one(), |acc, t| acc * Self::from_u64(q - t))
    }

    /// Multinomial coefficient `(Σ parts)! / Π parts!`.
    fn multinomial(parts: &[u32]) -> Self {
        let total: u64 = parts.iter().map(|&p| u64::from(p)).sum();
        parts
            .iter()
            .fold(Self::factorial(total), |acc, &p| acc / Self::factorial(u64::from(p)))
    }
}

impl Field for Ratio<BigInt> {
    fn from_u64(n: u64) -> Self {
        Ratio::from_integer(BigInt::from(n))
    }
}

impl Field for Ratio<i64> {
    fn from_u64(n: u64) -> Self {
        Ratio::from_integer(i64::try_from(n).expect("integer exceeds i64"))
    }
}

impl Field for Ratio<i128> {
    fn from_u64(n: u64) -> Self {
        Ratio::from_integer(i128::from(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn multinomials() {
        assert_eq!(Rational::multinomial(&[9, 3]), Rational::from_u64(220));
        assert_eq!(Rational::multinomial(&[6, 6]), Rational::from_u64(924));
        assert_eq!(Rational::multinomial(&[4, 8]), Rational::from_u64(495));
        assert_eq!(Rational::multinomial(&[]), Rational::from_u64(1));
        assert_eq!(Ratio::<i64>::multinomial(&[2, 1]), Ratio::from_integer(3));
    }

    #[test]
    fn falling() {
        assert_eq!(Rational::falling_factorial(3, 2), Rational::from_u64(6));
        assert_eq!(Rational::falling_factorial(1, 2), Rational::from_u64(0));
        assert_eq!(Rational::falling_factorial(5, 0), Rational::from_u64(1));
    }
}
