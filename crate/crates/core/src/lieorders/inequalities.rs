//! The k_i inequality and non-divisibility sweeps over prime powers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{prime_power, LieError};
use crate::numtheory::greatest_primitive_divisor;

/// Outcome of sweeping the k_i inequalities over a prime-power range.
#[derive(Clone, Debug, Default)]
pub struct InequalitySweep {
    pub q_values: Vec<u64>,
    pub failures: Vec<String>,
}

impl InequalitySweep {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every prime power q in [q_min, q_max], checks
///   4 k_3(q) k_6(q) > k_4(q)^2,
///   4 k_7(q) k_14(q) > k_8(q)^2,
/// and the mutual non-divisibility of {k_3, k_6} and {k_7, k_14}
/// whenever both members exceed 1.
pub fn proof_inequalities(q_min: u64, q_max: u64) -> Result<InequalitySweep, LieError> {
    if q_min < 4 {
        return Err(LieError::Domain("q_min must be at least 4".into()));
    }
    let mut sweep = InequalitySweep::default();
    for q in q_min..=q_max {
        if prime_power(q).is_none() {
            continue;
        }
        sweep.q_values.push(q);
        let k = |i: u32| -> Result<BigUint, LieError> {
            Ok(greatest_primitive_divisor(&BigInt::from(q), i)?)
        };
        let (k3, k4, k6) = (k(3)?, k(4)?, k(6)?);
        let (k7, k8, k14) = (k(7)?, k(8)?, k(14)?);
        if BigUint::from(4u32) * &k3 * &k6 <= &k4 * &k4 {
            sweep
                .failures
                .push(format!("q={q}: 4*k3*k6 = {} <= k4^2", &k3 * &k6 * 4u32));
        }
        if BigUint::from(4u32) * &k7 * &k14 <= &k8 * &k8 {
            sweep
                .failures
                .push(format!("q={q}: 4*k7*k14 = {} <= k8^2", &k7 * &k14 * 4u32));
        }
        let mut nondiv = |a: &BigUint, b: &BigUint, name: &str| {
            if !a.is_one() && !b.is_one() {
                if (b % a).is_zero() || (a % b).is_zero() {
                    sweep.failures.push(format!("q={q}: {name} divisibility"));
                }
            }
        };
        nondiv(&k3, &k6, "k3/k6");
        nondiv(&k7, &k14, "k7/k14");
    }
    Ok(sweep)
}
