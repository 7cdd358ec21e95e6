//! Catalan numbers `C_n = binom(2n, n) / (n + 1)`.

use num_bigint::BigInt;
use num_traits::One;

pub fn catalan(n: u32) -> BigInt {
    // binom(2n, n) by the multiplicative formula, then divide by n + 1;
    // both steps are exact.
    let mut binom = BigInt::one();
    for k in 1..=n as u64 {
        binom = binom * BigInt::from(n as u64 + k) / BigInt::from(k);
    }
    binom / BigInt::from(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let expect: [u64; 9] = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(catalan(n as u32), BigInt::from(e));
        }
    }

    #[test]
    fn convolution_recursion() {
        // C_{n+1} = Σ_k C_k C_{n-k}, checked through n = 12
        for n in 0..=12u32 {
            let mut sum = BigInt::from(0);
            for k in 0..=n {
                sum += catalan(k) * catalan(n - k);
            }
            assert_eq!(sum, catalan(n + 1));
        }
    }
}
