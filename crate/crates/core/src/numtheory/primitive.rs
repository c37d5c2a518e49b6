//! Primitive prime divisors of a^i - 1 and greatest primitive divisors.
//!
//! A prime r is a primitive divisor of a^i - 1 when e(r, a) = i, where
//! e(r, a) is the multiplicative order of a modulo r for odd r, and
//! e(2, a) is 1 for a ≡ 1 (mod 4) and 2 for a ≡ 3 (mod 4). Every
//! primitive prime divides the i-th cyclotomic value Φ_i(a), and
//! conversely every odd prime factor of Φ_i(a) not dividing i is
//! primitive; this makes the product of primitive primes with
//! multiplicity computable without factoring anything.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::cyclotomic::cyclotomic_eval;
use super::factor::{factor, factor_u64};
use super::NumTheoryError;

/// The set of primitive prime divisors of a^i - 1, with the product taken
/// with multiplicities (the greatest primitive divisor). Index 2 is carried
/// by restatement on base -a: its primes, multiplicities, and product are
/// those of (-a)^1 - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveDivisorSet {
    pub base: BigInt,
    pub index: u32,
    pub primes: BTreeSet<BigUint>,
    pub product_with_multiplicity: BigUint,
}

fn check_base(a: &BigInt) -> Result<(), NumTheoryError> {
    if a.magnitude() <= &BigUint::one() {
        return Err(NumTheoryError::Domain(format!(
            "base must satisfy |a| > 1, got {a}"
        )));
    }
    Ok(())
}

/// e(2, a) for odd a: 1 when a ≡ 1 (mod 4), otherwise 2. None for even a.
fn order_of_two(a: &BigInt) -> Option<u32> {
    if a.is_even() {
        None
    } else if a.mod_floor(&BigInt::from(4)) == BigInt::one() {
        Some(1)
    } else {
        Some(2)
    }
}

/// The product of the primitive prime divisors of a^i - 1 with
/// multiplicity, computed as |Φ_i(a)| with all non-primitive prime parts
/// removed: the p-part for every odd prime p dividing i, and the 2-part
/// except when i = 1 and e(2, a) = 1. Index 2 recurses on base -a.
fn primitive_product(a: &BigInt, i: u32) -> BigUint {
    debug_assert!(i >= 1);
    if i == 2 {
        return primitive_product(&-a, 1);
    }
    let mut c = cyclotomic_eval(i, a).magnitude().clone();
    debug_assert!(!c.is_zero(), "|a| > 1 keeps cyclotomic values nonzero");
    let mut strip = |p: &BigUint| {
        while !c.is_one() && (&c % p).is_zero() {
            c = &c / p;
        }
    };
    if !(i == 1 && order_of_two(a) == Some(1)) {
        strip(&BigUint::from(2u32));
    }
    for p in factor_u64(i as u64).prime_support() {
        if !(&p % &BigUint::from(2u32)).is_zero() {
            strip(&p);
        }
    }
    c
}

/// The greatest primitive divisor k_i(a): the product, with multiplicity,
/// of all primitive prime divisors of a^i - 1; 1 when there are none.
/// By convention k_2(a) = k_1(-a).
pub fn greatest_primitive_divisor(a: &BigInt, i: u32) -> Result<BigUint, NumTheoryError> {
    check_base(a)?;
    assert!(i >= 1, "index must be positive");
    let result = primitive_product(a, i);
    if i > 2 {
        debug_assert_eq!(
            Some(&result),
            gpd_formula(a, i).as_ref(),
            "cyclotomic-quotient route disagrees at a={a}, i={i}"
        );
    }
    Ok(result)
}

/// The closed cyclotomic-quotient route for i > 2:
/// |Φ_i(a)| / gcd(r, Φ_{i'}(a)) where r is the largest prime dividing i
/// and i' is i with its r-part removed.
pub fn gpd_formula(a: &BigInt, i: u32) -> Option<BigUint> {
    if i <= 2 {
        return None;
    }
    let r = factor_u64(i as u64)
        .prime_support()
        .into_iter()
        .max()
        .map(|p| u64::try_from(&p).expect("prime divisor of a u32 index"))?;
    let mut i_low = i;
    while i_low % (r as u32) == 0 {
        i_low /= r as u32;
    }
    let phi = cyclotomic_eval(i, a).magnitude().clone();
    let phi_low = cyclotomic_eval(i_low.max(1), a).magnitude().clone();
    let g = BigUint::from(r).gcd(&phi_low);
    debug_assert!((&phi % &g).is_zero());
    Some(phi / g)
}

/// True when a^i - 1 has at least one primitive prime divisor.
pub fn has_primitive_divisor(a: &BigInt, i: u32) -> Result<bool, NumTheoryError> {
    check_base(a)?;
    Ok(!primitive_product(a, i).is_one())
}

/// All primitive prime divisors of a^i - 1. Requires factoring the
/// primitive part, so very large inputs can exhaust the factoring budget.
pub fn primitive_prime_set(a: &BigInt, i: u32) -> Result<PrimitiveDivisorSet, NumTheoryError> {
    check_base(a)?;
    assert!(i >= 1);
    let product = primitive_product(a, i);
    let primes = factor(&product)?.prime_support();
    Ok(PrimitiveDivisorSet {
        base: a.clone(),
        index: i,
        primes,
        product_with_multiplicity: product,
    })
}

/// Exhaustively searches a ∈ {±2..±a_max}, i ∈ {1..i_max} for pairs whose
/// set of primitive prime divisors is empty. Sorted by (a, i).
pub fn zsigmondy_exceptions(a_max: i64, i_max: u32) -> Result<Vec<(i64, u32)>, NumTheoryError> {
    if a_max < 2 || i_max < 1 {
        return Err(NumTheoryError::Domain(
            "search bounds must satisfy a_max >= 2, i_max >= 1".into(),
        ));
    }
    let mut out = Vec::new();
    for abs_a in 2..=a_max {
        for &sign in &[1i64, -1] {
            let a = sign * abs_a;
            let ab = BigInt::from(a);
            for i in 1..=i_max {
                if !has_primitive_divisor(&ab, i)? {
                    out.push((a, i));
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Brute-force oracle for the greatest primitive divisor: fully factors
/// a^i - 1, classifies each prime factor by its multiplicative order, and
/// multiplies the primitive ones with multiplicity. Never consults
/// cyclotomic values; index 2 is delegated to base -a as the definition
/// of k_2 requires.
pub fn gpd_oracle(a: &BigInt, i: u32) -> Result<BigUint, NumTheoryError> {
    check_base(a)?;
    assert!(i >= 1);
    if i == 2 {
        return gpd_oracle(&-a, 1);
    }
    let n_val = (a.pow(i) - BigInt::one()).magnitude().clone();
    let factored = factor(&n_val)?;
    let divisors_of_i: Vec<u32> = (1..=i).filter(|d| i % d == 0).collect();
    let mut out = BigUint::one();
    let two = BigUint::from(2u32);
    for (r, &e) in factored.factors() {
        let primitive = if *r == two {
            order_of_two(a) == Some(i)
        } else {
            // the order of a mod r divides i, so scan divisors ascending
            let a_mod = a.mod_floor(&BigInt::from(r.clone())).magnitude().clone();
            let ord = divisors_of_i
                .iter()
                .find(|&&d| a_mod.modpow(&BigUint::from(d), r).is_one())
                .copied()
                .expect("order divides i");
            ord == i
        };
        if primitive {
            out *= r.pow(e);
        }
    }
    Ok(out)
}

/// Least e ≥ 1 with n^e ≡ 1 (mod r), for an odd prime r not dividing n.
pub fn mult_order(r: &BigUint, n: &BigInt) -> Result<BigUint, NumTheoryError> {
    let two = BigUint::from(2u32);
    if r <= &two {
        return Err(NumTheoryError::Domain(format!(
            "modulus must be an odd prime, got {r}"
        )));
    }
    if !super::factor::is_prime_big(r) {
        return Err(NumTheoryError::Domain(format!("{r} is not prime")));
    }
    let m = n.mod_floor(&BigInt::from(r.clone())).magnitude().clone();
    if m.is_zero() {
        return Err(NumTheoryError::Domain(format!("{r} divides {n}")));
    }
    let mut e = r - BigUint::one();
    let f = factor(&e)?;
    for t in f.prime_support() {
        while (&e % &t).is_zero() && m.modpow(&(&e / &t), r).is_one() {
            e /= &t;
        }
    }
    Ok(e)
}
