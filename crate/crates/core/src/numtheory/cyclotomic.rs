//! Exact evaluation of cyclotomic polynomials at integer arguments.
//!
//! For |a| >= 2 the value is computed numerically through the divisor
//! recurrence a^i - 1 = prod over d|i of Φ_d(a), which stays fast for
//! large indices. At a in {-1, 0, 1} the recurrence divides by zero, so
//! those arguments go through explicit polynomial coefficients instead.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Evaluates the i-th cyclotomic polynomial at `a`, exactly.
pub fn cyclotomic_eval(i: u32, a: &BigInt) -> BigInt {
    assert!(i >= 1, "cyclotomic index must be positive");
    if a.magnitude() > &num_bigint::BigUint::one() {
        eval_by_divisor_recurrence(i, a)
    } else {
        let coeffs = cyclotomic_coeffs(i);
        let mut acc = BigInt::zero();
        for c in coeffs.iter().rev() {
            acc = acc * a + c;
        }
        acc
    }
}

/// Φ_i(a) = (a^i - 1) / prod over proper divisors d of Φ_d(a), computed
/// bottom-up over the divisors of i. Every division is exact.
fn eval_by_divisor_recurrence(i: u32, a: &BigInt) -> BigInt {
    let divisors: Vec<u32> = (1..=i).filter(|d| i % d == 0).collect();
    let mut memo: BTreeMap<u32, BigInt> = BTreeMap::new();
    for &d in &divisors {
        let mut num = a.pow(d) - BigInt::one();
        for (&e, phi) in &memo {
            if d % e == 0 {
                debug_assert!(!phi.is_zero());
                debug_assert!((&num % phi).is_zero());
                num /= phi;
            }
        }
        memo.insert(d, num);
    }
    memo.remove(&i).expect("i divides itself")
}

/// Coefficients (ascending degree) of the i-th cyclotomic polynomial,
/// obtained by exact division of x^i - 1 by the lower-index polynomials.
fn cyclotomic_coeffs(i: u32) -> Vec<BigInt> {
    let mut memo: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
    for d in 1..=i {
        if i % d != 0 {
            continue;
        }
        // x^d - 1
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        for (e, coeffs) in &memo {
            if d % e == 0 {
                num = poly_div_exact(&num, coeffs);
            }
        }
        memo.insert(d, num);
    }
    memo.remove(&i).expect("divisor chain always produces i")
}

/// Exact polynomial division over Z; panics if the division is not exact,
/// which cannot happen for cyclotomic chains.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd);
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[dd + k].clone();
        if c.is_zero() {
            continue;
        }
        debug_assert!((&c % &den[dd]).is_zero());
        let q = &c / &den[dd];
        for (j, dj) in den.iter().enumerate() {
            let t = dj * &q;
            rem[j + k] -= t;
        }
        quot[k] = q;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(i: u32, a: i64) -> i64 {
        i64::try_from(&cyclotomic_eval(i, &BigInt::from(a))).unwrap()
    }

    #[test]
    fn named_values() {
        assert_eq!(ev(6, 4), 13); // q^2 - q + 1 at 4
        assert_eq!(ev(1, 2), 1); // a - 1
        assert_eq!(ev(12, 2), 13); // 2^4 - 2^2 + 1
        assert_eq!(ev(2, 2), 3);
        assert_eq!(ev(4, 3), 10);
        assert_eq!(ev(7, 2), 127);
        assert_eq!(ev(14, 2), 43);
    }

    #[test]
    fn degenerate_arguments() {
        assert_eq!(ev(1, 1), 0);
        assert_eq!(ev(3, 1), 3); // Phi_p(1) = p
        assert_eq!(ev(9, 1), 3); // Phi_{p^k}(1) = p
        assert_eq!(ev(6, 1), 1);
        assert_eq!(ev(2, -1), 0);
        assert_eq!(ev(1, 0), -1);
        assert_eq!(ev(5, 0), 1);
    }

    #[test]
    fn numeric_route_matches_coefficient_route() {
        for a in [-10i64, -3, -2, 2, 3, 10] {
            let ab = BigInt::from(a);
            for i in 1u32..=105 {
                let numeric = eval_by_divisor_recurrence(i, &ab);
                let coeffs = cyclotomic_coeffs(i);
                let mut horner = BigInt::zero();
                for c in coeffs.iter().rev() {
                    horner = horner * &ab + c;
                }
                assert_eq!(numeric, horner, "a={a} i={i}");
            }
        }
    }

    #[test]
    fn large_prime_index_is_fast() {
        // Phi_9941(2) = 2^9941 - 1 over 2 - 1
        let v = cyclotomic_eval(9941, &BigInt::from(2));
        assert_eq!(v, BigInt::from(2).pow(9941) - 1);
    }

    #[test]
    fn divisor_product_identity() {
        // prod over d|i of Phi_d(a) = a^i - 1
        for a in [-5i64, -2, 2, 3, 10] {
            let ab = BigInt::from(a);
            for i in 1u32..=24 {
                let mut prod = BigInt::one();
                for d in 1..=i {
                    if i % d == 0 {
                        prod *= cyclotomic_eval(d, &ab);
                    }
                }
                assert_eq!(prod, ab.pow(i) - 1, "a={a} i={i}");
            }
        }
    }
}
