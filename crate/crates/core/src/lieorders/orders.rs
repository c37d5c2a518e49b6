//! Order formulas for the simple groups of Lie type, assembled two ways:
//! the closed product formula over big integers, and a factored assembly
//! from cyclotomic pieces so that only integers of cyclotomic size ever
//! reach the factorizer.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::{Family, LieError, LieSpec};
use crate::numtheory::{cyclotomic_eval, factor, factor_u64, FactoredNat};

/// (degree, sign): a factor q^degree - 1 (sign +) or q^degree + 1 (sign -).
type Term = (u32, i8);

/// Number of positive roots N (so the p-part of the order is q^N),
/// the term list, and the order divisor.
fn order_shape(spec: &LieSpec) -> (u32, Vec<Term>, u64) {
    let m = spec.rank();
    let q = spec.q();
    match spec.family() {
        Family::A => (
            m * (m + 1) / 2,
            (2..=m + 1).map(|i| (i, 1)).collect(),
            gcd64(m as u64 + 1, q - 1),
        ),
        Family::TwoA => (
            m * (m + 1) / 2,
            (2..=m + 1)
                .map(|i| (i, if i % 2 == 1 { -1 } else { 1 }))
                .collect(),
            gcd64(m as u64 + 1, q + 1),
        ),
        Family::B | Family::C => (
            m * m,
            (1..=m).map(|i| (2 * i, 1)).collect(),
            gcd64(2, q - 1),
        ),
        Family::D => {
            let mut terms: Vec<Term> = (1..=m - 1).map(|i| (2 * i, 1)).collect();
            terms.push((m, 1));
            (m * (m - 1), terms, gcd4_pow(q, m, false))
        }
        Family::TwoD => {
            let mut terms: Vec<Term> = (1..=m - 1).map(|i| (2 * i, 1)).collect();
            terms.push((m, -1));
            (m * (m - 1), terms, gcd4_pow(q, m, true))
        }
        Family::ThreeD4 => {
            // q^12 (q^8 + q^4 + 1)(q^6 - 1)(q^2 - 1); the middle factor is
            // handled as (q^12 - 1)/(q^4 - 1) in both routes
            (12, vec![(4, -2), (6, 1), (2, 1)], 1)
        }
        Family::G2 => (6, vec![(6, 1), (2, 1)], 1),
        Family::F4 => (24, vec![(12, 1), (8, 1), (6, 1), (2, 1)], 1),
        Family::TwoF4 => (12, vec![(6, -1), (4, 1), (3, -1), (1, 1)], 1),
        Family::E6 => (
            36,
            vec![(12, 1), (9, 1), (8, 1), (6, 1), (5, 1), (2, 1)],
            gcd64(3, q - 1),
        ),
        Family::TwoE6 => (
            36,
            vec![(12, 1), (9, -1), (8, 1), (6, 1), (5, -1), (2, 1)],
            gcd64(3, q + 1),
        ),
        Family::E7 => (
            63,
            vec![(18, 1), (14, 1), (12, 1), (10, 1), (8, 1), (6, 1), (2, 1)],
            gcd64(2, q - 1),
        ),
        Family::E8 => (
            120,
            vec![
                (30, 1),
                (24, 1),
                (20, 1),
                (18, 1),
                (14, 1),
                (12, 1),
                (8, 1),
                (2, 1),
            ],
            1,
        ),
        Family::TwoB2 => (2, vec![(2, -1), (1, 1)], 1),
        Family::TwoG2 => (3, vec![(3, -1), (1, 1)], 1),
    }
}

fn gcd64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// gcd(4, q^m - 1) or gcd(4, q^m + 1); only q^m mod 4 matters.
fn gcd4_pow(q: u64, m: u32, plus: bool) -> u64 {
    let mut qm: u64 = 1;
    for _ in 0..m {
        qm = qm * (q % 4) % 4;
    }
    let x = if plus { (qm + 1) % 4 } else { (qm + 3) % 4 };
    if x == 0 {
        4
    } else if x % 2 == 0 {
        2
    } else {
        1
    }
}

/// |L| by the closed product formula, evaluated directly over big integers.
pub fn simple_order_direct(spec: &LieSpec) -> BigUint {
    let q = BigInt::from(spec.q());
    let (np, terms, div) = order_shape(spec);
    let mut acc = q.pow(np);
    for (d, s) in terms {
        match s {
            1 => acc *= q.pow(d) - BigInt::one(),
            -1 => acc *= q.pow(d) + BigInt::one(),
            -2 => {
                let num = q.pow(3 * d) - BigInt::one();
                let den = q.pow(d) - BigInt::one();
                acc *= num / den;
            }
            _ => unreachable!(),
        }
    }
    let acc = acc / BigInt::from(div);
    acc.magnitude().clone()
}

/// |L| in fully factored form, assembled as the q-power times cyclotomic
/// factors Φ_d(q), each factored separately.
pub fn simple_order(spec: &LieSpec) -> Result<FactoredNat, LieError> {
    let q = spec.q();
    let (np, terms, div) = order_shape(spec);
    let mut cyclo_indices: Vec<u32> = Vec::new();
    for (d, s) in terms {
        match s {
            // q^d - 1 = prod over e | d of Phi_e(q)
            1 => cyclo_indices.extend((1..=d).filter(|e| d % e == 0)),
            // q^d + 1 = prod over e | 2d, e not | d of Phi_e(q)
            -1 => cyclo_indices.extend((1..=2 * d).filter(|e| (2 * d) % e == 0 && d % e != 0)),
            // (q^{3d} - 1)/(q^d - 1): e | 3d, e not | d
            -2 => cyclo_indices.extend((1..=3 * d).filter(|e| (3 * d) % e == 0 && d % e != 0)),
            _ => unreachable!(),
        }
    }
    let mut acc = factor_u64(q).pow(np);
    let qi = BigInt::from(q);
    for e in cyclo_indices {
        let phi = cyclotomic_eval(e, &qi).magnitude().clone();
        acc = acc.mul(&factor(&phi)?);
    }
    let result = acc
        .checked_div(&factor_u64(div))
        .expect("order divisor divides the cyclotomic product");
    debug_assert_eq!(result.value(), &simple_order_direct(spec));
    Ok(result)
}

/// |Out(L)| = diagonal · field · graph, in factored form.
pub fn out_order(spec: &LieSpec) -> FactoredNat {
    let q = spec.q();
    let m = spec.rank();
    let n = spec.field_exponent() as u64;
    let p = spec.p();
    let (d, f, g): (u64, u64, u64) = match spec.family() {
        Family::A if m == 1 => (gcd64(2, q - 1), n, 1),
        Family::A => (gcd64(m as u64 + 1, q - 1), n, 2),
        Family::TwoA => (gcd64(m as u64 + 1, q + 1), 2 * n, 1),
        Family::B if m == 2 => (gcd64(2, q - 1), n, if p == 2 { 2 } else { 1 }),
        Family::B | Family::C => (gcd64(2, q - 1), n, 1),
        Family::D if m == 4 => (gcd64(2, q - 1).pow(2), n, 6),
        Family::D if m % 2 == 0 => (gcd64(2, q - 1).pow(2), n, 2),
        Family::D => (gcd4_pow(q, m, false), n, 2),
        Family::TwoD => (gcd4_pow(q, m, true), 2 * n, 1),
        Family::ThreeD4 => (1, 3 * n, 1),
        Family::G2 => (1, n, if p == 3 { 2 } else { 1 }),
        Family::F4 => (1, n, if p == 2 { 2 } else { 1 }),
        Family::E6 => (gcd64(3, q - 1), n, 2),
        Family::TwoE6 => (gcd64(3, q + 1), 2 * n, 1),
        Family::E7 => (gcd64(2, q - 1), n, 1),
        Family::E8 => (1, n, 1),
        Family::TwoB2 | Family::TwoG2 | Family::TwoF4 => (1, n, 1),
    };
    factor_u64(d * f * g)
}

/// |Aut(L)| = |L| · |Out(L)|.
pub fn aut_order(spec: &LieSpec) -> Result<FactoredNat, LieError> {
    Ok(simple_order(spec)?.mul(&out_order(spec)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// |L| < (|L|_p)^3
    Group,
    /// |Aut(L)|^2 < (|L|_p)^7, the exact form of the 3.5-power bound
    Aut,
}

/// Compares the order (or automorphism-group order) against the stated
/// power of the p-part, exactly in integers.
pub fn bound_check(spec: &LieSpec, kind: BoundKind) -> Result<bool, LieError> {
    let q = BigUint::from(spec.q());
    let (np, _, _) = order_shape(spec);
    Ok(match kind {
        BoundKind::Group => simple_order_direct(spec) < q.pow(3 * np),
        BoundKind::Aut => {
            let aut = aut_order(spec)?.value().clone();
            &aut * &aut < q.pow(7 * np)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: Family, rank: u32, p: u64, n: u32) -> LieSpec {
        LieSpec::new(f, rank, p, n).unwrap()
    }

    #[test]
    fn d4_order_at_q2() {
        let s = spec(Family::D, 4, 2, 1);
        let o = simple_order(&s).unwrap();
        assert_eq!(o.value(), &BigUint::from(174182400u64));
        // p-part is q^12
        assert_eq!(o.exponent_of(&BigUint::from(2u32)), 12);
        assert_eq!(o.factorization_string(), "2^12 · 3^5 · 5^2 · 7");
    }

    #[test]
    fn a1_q4_is_60() {
        let s = spec(Family::A, 1, 2, 2);
        assert_eq!(simple_order(&s).unwrap().value(), &BigUint::from(60u32));
    }

    #[test]
    fn excluded_case_errors() {
        assert!(LieSpec::new(Family::A, 1, 2, 1).is_err());
    }

    #[test]
    fn more_known_orders() {
        let cases: Vec<(LieSpec, u64)> = vec![
            (spec(Family::A, 1, 5, 1), 60),          // PSL(2,5)
            (spec(Family::A, 1, 7, 1), 168),         // PSL(2,7)
            (spec(Family::A, 2, 2, 1), 168),         // PSL(3,2)
            (spec(Family::TwoA, 2, 3, 1), 6048),     // PSU(3,3)
            (spec(Family::TwoA, 3, 2, 1), 25920),    // PSU(4,2)
            (spec(Family::B, 2, 3, 1), 25920),       // PSp(4,3)
            (spec(Family::B, 3, 3, 1), 4585351680),  // Omega_7(3)
            (spec(Family::C, 3, 3, 1), 4585351680),  // PSp(6,3), same order
            (spec(Family::TwoB2, 2, 2, 3), 29120),   // Sz(8)
            (spec(Family::G2, 2, 3, 1), 4245696),    // G2(3)
            (spec(Family::G2, 2, 2, 2), 251596800),  // G2(4)
            (spec(Family::ThreeD4, 4, 2, 1), 211341312),
            (spec(Family::TwoG2, 2, 3, 3), 10073444472),
            (spec(Family::TwoD, 4, 2, 1), 197406720), // POmega_8^-(2)
            (spec(Family::D, 5, 2, 1), 23499295948800),
            (spec(Family::F4, 4, 2, 1), 3311126603366400),
        ];
        for (s, expect) in cases {
            assert_eq!(
                simple_order(&s).unwrap().value(),
                &BigUint::from(expect),
                "{s}"
            );
        }
        // exceptional-family values too large for u64
        let big_cases: Vec<(LieSpec, &str)> = vec![
            (spec(Family::E6, 6, 2, 1), "214841575522005575270400"),
            (spec(Family::TwoE6, 6, 2, 1), "76532479683774853939200"),
            (
                spec(Family::E7, 7, 2, 1),
                "7997476042075799759100487262680802918400",
            ),
            (
                spec(Family::E8, 8, 2, 1),
                "337804753143634806261388190614085595079991692242467651576160959909068800000",
            ),
            (spec(Family::TwoF4, 4, 2, 3), "264905352699586176614400"),
        ];
        for (s, expect) in big_cases {
            assert_eq!(simple_order(&s).unwrap().value().to_string(), expect, "{s}");
        }
    }

    #[test]
    fn both_routes_agree_on_a_sample() {
        for s in LieSpec::enumerate(5, 9) {
            let f = simple_order(&s).unwrap();
            assert_eq!(f.value(), &simple_order_direct(&s), "{s}");
        }
    }

    #[test]
    fn d_family_p_part_is_q_to_m_m_minus_1() {
        for (m, q, p, n) in [(4u32, 2u64, 2u64, 1u32), (4, 3, 3, 1), (5, 4, 2, 2), (8, 2, 2, 1)] {
            let s = spec(Family::D, m, p, n);
            let o = simple_order(&s).unwrap();
            let expected = (m * (m - 1)) * n;
            assert_eq!(o.exponent_of(&BigUint::from(p)), expected, "D_{m}({q})");
        }
    }

    #[test]
    fn out_orders() {
        assert_eq!(out_order(&spec(Family::D, 4, 2, 1)).value(), &BigUint::from(6u32));
        assert_eq!(out_order(&spec(Family::A, 1, 2, 2)).value(), &BigUint::from(2u32));
        assert_eq!(out_order(&spec(Family::D, 4, 3, 1)).value(), &BigUint::from(24u32));
        // |Out(A2(4))| = gcd(3,3) * 2 * 2 = 12
        assert_eq!(out_order(&spec(Family::A, 2, 2, 2)).value(), &BigUint::from(12u32));
        // |Out(2A3(3))| = gcd(4, 4) * 2 = 8
        assert_eq!(out_order(&spec(Family::TwoA, 3, 3, 1)).value(), &BigUint::from(8u32));
        // published outer-automorphism orders
        for (s, expect) in [
            (spec(Family::TwoA, 3, 2, 1), 2u64), // PSU(4,2)
            (spec(Family::TwoD, 4, 2, 1), 2),    // POmega_8^-(2)
            (spec(Family::B, 2, 3, 1), 2),       // PSp(4,3)
            (spec(Family::B, 2, 2, 2), 4),       // Sp(4,4): field x graph
            (spec(Family::G2, 2, 3, 1), 2),      // graph in characteristic 3
            (spec(Family::G2, 2, 2, 2), 2),      // field only
            (spec(Family::ThreeD4, 4, 2, 1), 3),
            (spec(Family::TwoB2, 2, 2, 3), 3),
            (spec(Family::F4, 4, 2, 1), 2),      // graph in characteristic 2
            (spec(Family::E6, 6, 2, 1), 2),
            (spec(Family::TwoF4, 4, 2, 3), 3),
        ] {
            assert_eq!(out_order(&s).value(), &BigUint::from(expect), "{s}");
        }
    }

    #[test]
    fn bound_examples() {
        assert!(bound_check(&spec(Family::D, 4, 2, 1), BoundKind::Group).unwrap());
        assert!(bound_check(&spec(Family::A, 1, 2, 2), BoundKind::Group).unwrap());
        assert!(bound_check(&spec(Family::A, 1, 2, 2), BoundKind::Aut).unwrap());
    }
}
