//! Exact binomial coefficients on arbitrary-precision integers.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// C(n, k) with the counting convention: zero whenever `n < k`, and in
/// particular zero for every negative `n`. All arithmetic is exact.
pub fn binomial(n: i64, k: u32) -> BigUint {
    if n < k as i64 {
        return BigUint::zero();
    }
    let n = n as u64;
    let k = k as u64;
    let mut acc = BigUint::one();
    for t in 0..k {
        // (n - t) is nonnegative here and each partial product divides exactly.
        acc = acc * BigUint::from(n - t) / BigUint::from(t + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
        assert_eq!(binomial(3, 3), BigUint::from(1u32));
        assert_eq!(binomial(5, 3), BigUint::from(10u32));
        assert_eq!(binomial(7, 3), BigUint::from(35u32));
    }

    #[test]
    fn zero_below_diagonal_and_for_negative_n() {
        assert_eq!(binomial(2, 3), BigUint::zero());
        assert_eq!(binomial(-1, 3), BigUint::zero());
        assert_eq!(binomial(-100, 0), BigUint::zero());
    }

    #[test]
    fn pascal_recurrence() {
        for n in 1..40i64 {
            for k in 1..6u32 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k) + binomial(n - 1, k - 1),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn large_arguments_stay_exact() {
        // C(10^6 + 3, 3) computed independently as n(n-1)(n-2)/6.
        let n = 1_000_003i64;
        let expect = BigUint::from(n as u64) * BigUint::from((n - 1) as u64)
            * BigUint::from((n - 2) as u64)
            / BigUint::from(6u32);
        assert_eq!(binomial(n, 3), expect);
    }
}
