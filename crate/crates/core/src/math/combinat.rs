use num_bigint::BigInt;
use num_traits::One;

use super::scalar::ExactScalar;
use crate::error::{Error, Result};

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient `C(n, k)`; errors when `k > n`.
pub fn binomial(n: usize, k: usize) -> Result<ExactScalar> {
    if k > n {
        return Err(Error::domain(format!("binomial({n}, {k}): k exceeds n")));
    }
    let k = k.min(n - k);
    // running product stays integral: C(n-k+i, i) at step i
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    Ok(ExactScalar::from_integer(acc))
}

/// `(sum parts)! / prod(parts!)`.
pub fn multinomial(parts: &[usize]) -> ExactScalar {
    let mut total = 0usize;
    let mut acc = BigInt::one();
    for &m in parts {
        for i in 1..=m {
            total += 1;
            acc = acc * BigInt::from(total) / BigInt::from(i);
        }
    }
    ExactScalar::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::scalar::int;

    fn factorial_oracle(n: usize) -> BigInt {
        (1..=n).map(BigInt::from).product()
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2).unwrap(), int(6));
        for n in 0..6 {
            assert_eq!(binomial(n, 0).unwrap(), int(1));
        }
        assert_eq!(binomial(10, 5).unwrap(), int(252));
        assert!(matches!(binomial(3, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn binomial_matches_factorial_ratio() {
        for n in 0..20 {
            for k in 0..=n {
                let expect = factorial_oracle(n) / (factorial_oracle(k) * factorial_oracle(n - k));
                assert_eq!(binomial(n, k).unwrap(), ExactScalar::from_integer(expect));
            }
        }
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(&[2, 0, 0]), int(1));
        assert_eq!(multinomial(&[1, 1, 0]), int(2));
        assert_eq!(multinomial(&[1, 1, 1, 1]), int(24));
        assert_eq!(multinomial(&[]), int(1));
        let expect = factorial_oracle(9) / (factorial_oracle(2) * factorial_oracle(3) * factorial_oracle(4));
        assert_eq!(multinomial(&[2, 3, 4]), ExactScalar::from_integer(expect));
    }
}
