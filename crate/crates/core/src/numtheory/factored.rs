//! A positive integer carried together with its full prime factorization.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

/// A positive integer with its complete prime factorization.
///
/// Invariants: the product of `p^e` over `factors` equals `value`, and every
/// key is prime. Construction goes through [`crate::numtheory::factor`] or
/// through arithmetic on already-factored values, so the invariants hold by
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredNat {
    value: BigUint,
    factors: BTreeMap<BigUint, u32>,
}

impl FactoredNat {
    pub fn one() -> FactoredNat {
        FactoredNat {
            value: BigUint::one(),
            factors: BTreeMap::new(),
        }
    }

    /// Assembles a value from (prime, exponent) pairs. The caller vouches
    /// for primality; exponents must be ≥ 1.
    pub(crate) fn from_prime_powers<I: IntoIterator<Item = (BigUint, u32)>>(it: I) -> FactoredNat {
        let mut out = FactoredNat::one();
        for (p, e) in it {
            debug_assert!(e >= 1);
            out.value *= p.pow(e);
            *out.factors.entry(p).or_insert(0) += e;
        }
        out
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> &BTreeMap<BigUint, u32> {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// The set of primes dividing the value.
    pub fn prime_support(&self) -> BTreeSet<BigUint> {
        self.factors.keys().cloned().collect()
    }

    /// Exponent of `p` in the factorization.
    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors.get(p).copied().unwrap_or(0)
    }

    /// The largest divisor supported on the prime set `pi`.
    pub fn pi_part(&self, pi: &BTreeSet<BigUint>) -> BigUint {
        let mut out = BigUint::one();
        for (p, &e) in &self.factors {
            if pi.contains(p) {
                out *= p.pow(e);
            }
        }
        out
    }

    /// The largest divisor coprime to every prime in `pi`.
    pub fn pi_complement_part(&self, pi: &BTreeSet<BigUint>) -> BigUint {
        let mut out = BigUint::one();
        for (p, &e) in &self.factors {
            if !pi.contains(p) {
                out *= p.pow(e);
            }
        }
        out
    }

    pub fn mul(&self, other: &FactoredNat) -> FactoredNat {
        let mut factors = self.factors.clone();
        for (p, e) in &other.factors {
            *factors.entry(p.clone()).or_insert(0) += e;
        }
        FactoredNat {
            value: &self.value * &other.value,
            factors,
        }
    }

    pub fn pow(&self, k: u32) -> FactoredNat {
        if k == 0 {
            return FactoredNat::one();
        }
        let factors = self
            .factors
            .iter()
            .map(|(p, e)| (p.clone(), e * k))
            .collect();
        FactoredNat {
            value: self.value.pow(k),
            factors,
        }
    }

    /// Exact division; None when `other` does not divide `self`.
    pub fn checked_div(&self, other: &FactoredNat) -> Option<FactoredNat> {
        let mut factors = self.factors.clone();
        for (p, e) in &other.factors {
            match factors.get_mut(p) {
                Some(mine) if *mine > *e => *mine -= e,
                Some(mine) if *mine == *e => {
                    factors.remove(p);
                }
                _ => return None,
            }
        }
        Some(FactoredNat {
            value: &self.value / &other.value,
            factors,
        })
    }

    pub fn divides(&self, other: &FactoredNat) -> bool {
        self.factors
            .iter()
            .all(|(p, e)| other.exponent_of(p) >= *e)
    }

    /// All divisors, in increasing order. Intended for values with few
    /// prime factors; the count is the product of (e_i + 1).
    pub fn divisors(&self) -> Vec<BigUint> {
        let mut out = vec![BigUint::one()];
        for (p, &e) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            let mut pk = BigUint::one();
            for _ in 0..=e {
                for d in &out {
                    next.push(d * &pk);
                }
                pk *= p;
            }
            out = next;
        }
        out.sort();
        out
    }

    /// All divisors in factored form, ordered by value.
    pub fn divisors_factored(&self) -> Vec<FactoredNat> {
        let mut out = vec![FactoredNat::one()];
        for (p, &e) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for k in 0..=e {
                for d in &out {
                    let mut f = d.clone();
                    if k > 0 {
                        f.value *= p.pow(k);
                        f.factors.insert(p.clone(), k);
                    }
                    next.push(f);
                }
            }
            out = next;
        }
        out.sort_by(|a, b| a.value.cmp(&b.value));
        out
    }

    /// Renders the factorization as `p^e · …`, or `1` for the empty product.
    pub fn factorization_string(&self) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" · ")
    }
}

impl fmt::Display for FactoredNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.value, self.factorization_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(pairs: &[(u64, u32)]) -> FactoredNat {
        FactoredNat::from_prime_powers(pairs.iter().map(|&(p, e)| (BigUint::from(p), e)))
    }

    #[test]
    fn product_invariant() {
        let n = fp(&[(2, 4), (3, 2), (5, 1)]);
        assert_eq!(n.value(), &BigUint::from(720u32));
        assert_eq!(n.factorization_string(), "2^4 · 3^2 · 5");
    }

    #[test]
    fn divisor_listing() {
        let n = fp(&[(2, 2), (3, 1)]);
        let divs: Vec<u64> = n
            .divisors()
            .iter()
            .map(|d| u64::try_from(d).unwrap())
            .collect();
        assert_eq!(divs, vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn exact_division() {
        let n = fp(&[(2, 4), (3, 2)]);
        let d = fp(&[(2, 1), (3, 2)]);
        let q = n.checked_div(&d).unwrap();
        assert_eq!(q.value(), &BigUint::from(8u32));
        assert!(d.checked_div(&n).is_none());
    }
}
