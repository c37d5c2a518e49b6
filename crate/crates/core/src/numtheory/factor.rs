//! The factoring pipeline: trial division, then Brent rho on fixed-width
//! integers, then a budgeted big-integer fallback.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::smallint::{find_factor_u128, is_prime_u128, small_primes};
use super::{FactoredNat, NumTheoryError};

/// Total rho-iteration allowance for one `factor` call. The schedule is
/// deterministic, so identical inputs always fail or succeed identically.
const DEFAULT_BUDGET: u64 = 1 << 28;

pub fn factor(n: &BigUint) -> Result<FactoredNat, NumTheoryError> {
    factor_with_budget(n, DEFAULT_BUDGET)
}

/// As [`factor`], with an explicit rho-iteration budget. On exhaustion the
/// error carries the partially factored state and the unfactored cofactor.
pub fn factor_with_budget(n: &BigUint, budget: u64) -> Result<FactoredNat, NumTheoryError> {
    if n.is_zero() {
        return Err(NumTheoryError::Domain("factor(0) is undefined".into()));
    }
    if n.is_one() {
        return Ok(FactoredNat::one());
    }
    let mut factors: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut budget = budget;
    let mut remaining = n.clone();

    // trial division by all primes below 100_000
    for &p in small_primes() {
        let pb = BigUint::from(p);
        if &pb * &pb > remaining {
            break;
        }
        while (&remaining % &pb).is_zero() {
            remaining /= &pb;
            *factors.entry(pb.clone()).or_insert(0) += 1;
        }
        if remaining.is_one() {
            break;
        }
    }

    if !remaining.is_one() {
        if let Err(e) = split(&remaining, &mut factors, &mut budget) {
            let partial = FactoredNat::from_prime_powers(factors);
            return Err(match e {
                SplitFailure::Budget(rem) => NumTheoryError::FactorBudget {
                    partial: Box::new(partial),
                    unfactored: rem,
                },
            });
        }
    }

    let out = FactoredNat::from_prime_powers(factors);
    debug_assert_eq!(out.value(), n);
    Ok(out)
}

/// Infallible factorization for machine-sized integers: after trial
/// division the cofactor is below 2^64, where the rho schedule always
/// terminates within the budget.
pub fn factor_u64(n: u64) -> FactoredNat {
    factor(&BigUint::from(n)).expect("u64 factorization cannot exhaust the budget")
}

enum SplitFailure {
    Budget(BigUint),
}

/// Splits `n` completely into `factors`, or reports the product of every
/// cofactor left unfactored when the budget runs out.
fn split(
    n: &BigUint,
    factors: &mut BTreeMap<BigUint, u32>,
    budget: &mut u64,
) -> Result<(), SplitFailure> {
    let mut stack = vec![n.clone()];
    let mut unfactored = BigUint::one();
    let mut exhausted = false;
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if exhausted {
            unfactored *= &m;
            continue;
        }
        if let Some(m128) = m.to_u128() {
            if m128 < (1u128 << 127) {
                if let Err(rem) = split_u128(m128, factors, budget) {
                    exhausted = true;
                    unfactored *= rem;
                }
                continue;
            }
        }
        if is_prime_big(&m) {
            *factors.entry(m).or_insert(0) += 1;
            continue;
        }
        match find_factor_big(&m, budget) {
            Some(f) => {
                stack.push(&m / &f);
                stack.push(f);
            }
            None => {
                exhausted = true;
                unfactored *= &m;
            }
        }
    }
    if exhausted {
        Err(SplitFailure::Budget(unfactored))
    } else {
        Ok(())
    }
}

fn split_u128(
    n: u128,
    factors: &mut BTreeMap<BigUint, u32>,
    budget: &mut u64,
) -> Result<(), BigUint> {
    let mut stack = vec![n];
    let mut unfactored = BigUint::one();
    let mut exhausted = false;
    while let Some(mut m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if exhausted {
            unfactored *= BigUint::from(m);
            continue;
        }
        while m & 1 == 0 {
            *factors.entry(BigUint::from(2u32)).or_insert(0) += 1;
            m >>= 1;
        }
        if m == 1 {
            continue;
        }
        if is_prime_u128(m) {
            *factors.entry(BigUint::from(m)).or_insert(0) += 1;
            continue;
        }
        match find_factor_u128(m, budget) {
            Some(f) => {
                stack.push(f);
                stack.push(m / f);
            }
            None => {
                exhausted = true;
                unfactored *= BigUint::from(m);
            }
        }
    }
    if exhausted {
        Err(unfactored)
    } else {
        Ok(())
    }
}

/// Primality for arbitrary-size values. Below 2^127 this is the fixed-width
/// Miller-Rabin schedule; above, the same witness schedule on big integers.
pub fn is_prime_big(n: &BigUint) -> bool {
    if let Some(v) = n.to_u128() {
        if v < (1u128 << 127) {
            return is_prime_u128(v);
        }
    }
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    if n.is_even() {
        return false;
    }
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &[
        2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
        89, 97,
    ] {
        let a = BigUint::from(a) % n;
        if a.is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn find_factor_big(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    // perfect powers
    for k in [2u32, 3, 5, 7, 11] {
        let r = n.nth_root(k);
        if r > BigUint::one() && r.pow(k) == *n {
            return Some(r);
        }
    }
    // big-integer Brent rho with the same deterministic parameter schedule
    let two = BigUint::from(2u32);
    for c in [1u32, 3, 5, 7, 11] {
        let c = BigUint::from(c);
        let mut y = two.clone();
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let step = |v: &BigUint| (v * v + &c) % n;
        let mut used: u64 = 0;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k: u64 = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let m = 128.min(r - k);
                for _ in 0..m {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += m;
                used += m;
                if used > *budget {
                    *budget = 0;
                    return None;
                }
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
                used += 1;
                if used > *budget {
                    *budget = 0;
                    return None;
                }
            }
        }
        *budget = budget.saturating_sub(used);
        if !g.is_one() && g != *n {
            return Some(g);
        }
        if *budget == 0 {
            return None;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain trial division, the independent oracle for factor().
    fn trial_division_oracle(mut n: u64) -> BTreeMap<u64, u32> {
        let mut out = BTreeMap::new();
        let mut d = 2u64;
        while d * d <= n {
            while n % d == 0 {
                *out.entry(d).or_insert(0) += 1;
                n /= d;
            }
            d += 1;
        }
        if n > 1 {
            *out.entry(n).or_insert(0) += 1;
        }
        out
    }

    fn as_u64_map(f: &FactoredNat) -> BTreeMap<u64, u32> {
        f.factors()
            .iter()
            .map(|(p, e)| (u64::try_from(p).unwrap(), *e))
            .collect()
    }

    #[test]
    fn factor_one_is_empty() {
        let f = factor(&BigUint::one()).unwrap();
        assert!(f.is_one());
        assert!(f.factors().is_empty());
    }

    #[test]
    fn factor_720() {
        let f = factor_u64(720);
        assert_eq!(as_u64_map(&f), BTreeMap::from([(2, 4), (3, 2), (5, 1)]));
    }

    #[test]
    fn factor_matches_trial_division_oracle() {
        // 174182400 and a few awkward shapes
        for n in [
            174182400u64,
            2u64,
            65536,
            600851475143,
            999999999989, // prime
            1000000007u64 * 998244353,
        ] {
            let f = factor_u64(n);
            assert_eq!(as_u64_map(&f), trial_division_oracle(n), "n={n}");
            assert_eq!(f.value(), &BigUint::from(n));
        }
    }

    #[test]
    fn factor_large_cyclotomic_style_value() {
        // 2^102 - 1: a 31-digit value with a spread of prime sizes
        let n = (BigUint::one() << 102) - BigUint::one();
        let f = factor(&n).unwrap();
        assert_eq!(f.value(), &n);
        for p in f.factors().keys() {
            assert!(is_prime_big(p));
        }
    }

    #[test]
    fn budget_exhaustion_reports_partial_state() {
        // 2^2 * (2^89 - 1) * (2^107 - 1): trial division strips the 2s,
        // then the two-large-prime cofactor defeats a tiny rho budget
        let p1 = (BigUint::one() << 89) - BigUint::one();
        let p2 = (BigUint::one() << 107) - BigUint::one();
        let n = BigUint::from(4u32) * &p1 * &p2;
        match factor_with_budget(&n, 500) {
            Err(NumTheoryError::FactorBudget { partial, unfactored }) => {
                assert_eq!(partial.exponent_of(&BigUint::from(2u32)), 2);
                assert_eq!(unfactored, &p1 * &p2);
                // the partial state accounts for all of n
                assert_eq!(partial.value() * &unfactored, n);
            }
            other => panic!("expected a budget error, got {other:?}"),
        }
    }

    #[test]
    fn factor_zero_rejected() {
        assert!(matches!(
            factor(&BigUint::zero()),
            Err(NumTheoryError::Domain(_))
        ));
    }
}
