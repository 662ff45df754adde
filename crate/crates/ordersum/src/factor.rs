//! Factored integers: `n = p1^a1 * ... * pr^ar` with `p1 < p2 < ... < pr`.

use num_bigint::BigUint;
use thiserror::Error;

/// Trial division stops here; factoring larger inputs is a hard error.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("cannot factor zero")]
    Zero,
    #[error("residual factor {residue} exceeds the trial division bound {bound}")]
    BeyondTrialDivision { residue: u64, bound: u64 },
}

/// A positive integer together with its prime factorization, primes
/// ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    /// Factors `n` by deterministic trial division up to
    /// [`TRIAL_DIVISION_BOUND`].
    pub fn factor(n: u64) -> Result<FactoredInteger, FactorError> {
        if n == 0 {
            return Err(FactorError::Zero);
        }
        let mut rest = n;
        let mut factors = Vec::new();
        let mut p: u64 = 2;
        while p * p <= rest && p <= TRIAL_DIVISION_BOUND {
            if rest % p == 0 {
                let mut a = 0;
                while rest % p == 0 {
                    rest /= p;
                    a += 1;
                }
                factors.push((p, a));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            if rest > TRIAL_DIVISION_BOUND {
                return Err(FactorError::BeyondTrialDivision {
                    residue: rest,
                    bound: TRIAL_DIVISION_BOUND,
                });
            }
            factors.push((rest, 1));
        }
        Ok(FactoredInteger { value: n, factors })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn value_big(&self) -> BigUint {
        BigUint::from(self.value)
    }

    /// Prime-exponent pairs, primes ascending.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn distinct_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Largest prime divisor, if any.
    pub fn largest_prime(&self) -> Option<u64> {
        self.factors.last().map(|&(p, _)| p)
    }

    pub fn is_odd(&self) -> bool {
        self.value % 2 == 1
    }

    /// Exponent of `p` in the factorization.
    pub fn valuation(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map(|&(_, a)| a)
            .unwrap_or(0)
    }
}

/// Deterministic primality test, valid for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // Deterministic Miller-Rabin for u64 with the standard witness set.
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// The first `count` primes in increasing order: 2, 3, 5, ...
pub fn first_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = 2u64;
    while out.len() < count {
        if is_prime(n) {
            out.push(n);
        }
        n += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_small() {
        let f = FactoredInteger::factor(12).unwrap();
        assert_eq!(f.factors(), &[(2, 2), (3, 1)]);
        assert_eq!(f.value(), 12);
        assert_eq!(f.largest_prime(), Some(3));
        let one = FactoredInteger::factor(1).unwrap();
        assert_eq!(one.factors(), &[]);
        assert_eq!(one.largest_prime(), None);
    }

    #[test]
    fn factor_rejects_zero() {
        assert_eq!(FactoredInteger::factor(0), Err(FactorError::Zero));
    }

    #[test]
    fn factor_large_prime_within_bound() {
        let f = FactoredInteger::factor(999_983).unwrap();
        assert_eq!(f.factors(), &[(999_983, 1)]);
    }

    #[test]
    fn factor_beyond_bound_is_loud() {
        // 1000003 is prime and exceeds the trial division bound.
        let r = FactoredInteger::factor(1_000_003);
        assert!(matches!(r, Err(FactorError::BeyondTrialDivision { .. })));
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(2));
        assert!(is_prime(31));
        assert!(is_prime(3647) == false); // 3647 = 7 * 521
        assert!(is_prime(521));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
    }

    #[test]
    fn prime_sequence_prefix() {
        assert_eq!(
            first_primes(12),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
        );
    }
}
