//! Exact integer arithmetic: factorization, π-parts, multiplicative orders,
//! cyclotomic values, and primitive prime divisors.
//!
//! All operations are pure, deterministic, and carried out in exact
//! arbitrary precision; there is no floating point anywhere in this module.

mod cyclotomic;
mod factor;
mod factored;
mod primitive;
mod smallint;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use thiserror::Error;

pub use cyclotomic::cyclotomic_eval;
pub use factor::{factor, factor_u64, factor_with_budget, is_prime_big};
pub use factored::FactoredNat;
pub use primitive::{
    gpd_formula, gpd_oracle, greatest_primitive_divisor, has_primitive_divisor, mult_order,
    primitive_prime_set, zsigmondy_exceptions, PrimitiveDivisorSet,
};
pub use smallint::{is_prime_u64, small_primes};

#[derive(Debug, Error)]
pub enum NumTheoryError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("factoring budget exceeded; unfactored cofactor {unfactored}")]
    FactorBudget {
        partial: Box<FactoredNat>,
        unfactored: BigUint,
    },
}

/// The largest divisor of `n` whose prime support lies in `pi`.
pub fn pi_part(n: &FactoredNat, pi: &BTreeSet<BigUint>) -> BigUint {
    n.pi_part(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;
    use proptest::prelude::*;

    fn primes(ps: &[u64]) -> BTreeSet<BigUint> {
        ps.iter().map(|&p| BigUint::from(p)).collect()
    }

    #[test]
    fn pi_part_examples() {
        let n720 = factor_u64(720);
        assert_eq!(pi_part(&n720, &primes(&[2, 3])), BigUint::from(144u32));
        assert_eq!(pi_part(&n720, &primes(&[7])), BigUint::one());
        let n60 = factor_u64(60);
        assert_eq!(pi_part(&n60, &primes(&[2, 3, 5])), BigUint::from(60u32));
    }

    proptest! {
        #[test]
        fn pi_part_times_complement_is_n(n in 1u64..1_000_000_000_000u64, mask in 0u32..64) {
            let f = factor_u64(n);
            let pi: BTreeSet<BigUint> = f
                .prime_support()
                .into_iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << (k % 32)) != 0)
                .map(|(_, p)| p)
                .collect();
            let a = f.pi_part(&pi);
            let b = f.pi_complement_part(&pi);
            prop_assert_eq!(a * b, BigUint::from(n));
        }

        #[test]
        fn gpd_matches_oracle_sampled(a in 2i64..40, sign in proptest::bool::ANY, i in 1u32..14) {
            let a = if sign { a } else { -a };
            let ab = BigInt::from(a);
            prop_assert_eq!(
                greatest_primitive_divisor(&ab, i).unwrap(),
                gpd_oracle(&ab, i).unwrap()
            );
        }
    }

    #[test]
    fn cyclotomic_divisor_product_full_range() {
        // prod over d|i of Phi_d(a) = a^i - 1 for all i <= 60, |a| <= 64
        for a in (-64i64..=64).filter(|a| a.abs() > 1) {
            let ab = BigInt::from(a);
            for i in 1u32..=60 {
                let mut prod = BigInt::one();
                for d in 1..=i {
                    if i % d == 0 {
                        prod *= cyclotomic_eval(d, &ab);
                    }
                }
                assert_eq!(prod, ab.pow(i) - BigInt::one(), "a={a} i={i}");
            }
        }
    }
}
