//! Orders of the classical matrix groups, in factored form.

use num_bigint::BigInt;

use super::LieError;
use crate::numtheory::{cyclotomic_eval, factor, factor_u64, FactoredNat};

/// Which classical group. For the symplectic and orthogonal kinds the
/// parameter is the rank k (underlying dimension 2k); for the linear and
/// unitary kinds it is the dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalKind {
    Gl,
    Gu,
    Sl,
    Su,
    Sp,
    GoPlus,
    GoMinus,
    SoPlus,
    SoMinus,
    OmegaPlus,
    OmegaMinus,
}

impl ClassicalKind {
    pub fn parse(s: &str) -> Option<ClassicalKind> {
        Some(match s {
            "GL" | "gl" => ClassicalKind::Gl,
            "GU" | "gu" => ClassicalKind::Gu,
            "SL" | "sl" => ClassicalKind::Sl,
            "SU" | "su" => ClassicalKind::Su,
            "Sp" | "SP" | "sp" => ClassicalKind::Sp,
            "GO+" | "go+" => ClassicalKind::GoPlus,
            "GO-" | "go-" => ClassicalKind::GoMinus,
            "SO+" | "so+" => ClassicalKind::SoPlus,
            "SO-" | "so-" => ClassicalKind::SoMinus,
            "Omega+" | "omega+" => ClassicalKind::OmegaPlus,
            "Omega-" | "omega-" => ClassicalKind::OmegaMinus,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassicalSpec {
    pub kind: ClassicalKind,
    /// dimension for GL/GU/SL/SU; rank k (dimension 2k) otherwise
    pub param: u32,
    pub q: u64,
}

impl ClassicalSpec {
    pub fn new(kind: ClassicalKind, param: u32, q: u64) -> Result<ClassicalSpec, LieError> {
        if param == 0 {
            return Err(LieError::InvalidSpec(
                "classical group parameter must be >= 1".into(),
            ));
        }
        if super::prime_power(q).is_none() {
            return Err(LieError::InvalidSpec(format!("{q} is not a prime power")));
        }
        Ok(ClassicalSpec { kind, param, q })
    }
}

/// Multiplies `acc` by q^d - 1 (sign +1) or q^d + 1 (sign -1), factored.
fn mul_term(acc: FactoredNat, q: u64, d: u32, sign: i8) -> Result<FactoredNat, LieError> {
    let qi = BigInt::from(q);
    let indices: Vec<u32> = if sign == 1 {
        (1..=d).filter(|e| d % e == 0).collect()
    } else {
        (1..=2 * d)
            .filter(|e| (2 * d) % e == 0 && d % e != 0)
            .collect()
    };
    let mut acc = acc;
    for e in indices {
        let phi = cyclotomic_eval(e, &qi).magnitude().clone();
        acc = acc.mul(&factor(&phi)?);
    }
    Ok(acc)
}

/// The order of the classical group, fully factored.
pub fn classical_order(spec: &ClassicalSpec) -> Result<FactoredNat, LieError> {
    let q = spec.q;
    let k = spec.param;
    let qf = factor_u64(q);
    match spec.kind {
        ClassicalKind::Gl => {
            // q^{k(k-1)/2} prod_{i=1..k} (q^i - 1)
            let mut acc = qf.pow(k * (k - 1) / 2);
            for i in 1..=k {
                acc = mul_term(acc, q, i, 1)?;
            }
            Ok(acc)
        }
        ClassicalKind::Gu => {
            // q^{k(k-1)/2} prod_{i=1..k} (q^i - (-1)^i)
            let mut acc = qf.pow(k * (k - 1) / 2);
            for i in 1..=k {
                acc = mul_term(acc, q, i, if i % 2 == 1 { -1 } else { 1 })?;
            }
            Ok(acc)
        }
        ClassicalKind::Sl => {
            let gl = classical_order(&ClassicalSpec::new(ClassicalKind::Gl, k, q)?)?;
            let qm1 = factor_u64(q - 1);
            gl.checked_div(&qm1)
                .ok_or_else(|| LieError::Domain("q-1 divides |GL|".into()))
        }
        ClassicalKind::Su => {
            let gu = classical_order(&ClassicalSpec::new(ClassicalKind::Gu, k, q)?)?;
            let qp1 = factor_u64(q + 1);
            gu.checked_div(&qp1)
                .ok_or_else(|| LieError::Domain("q+1 divides |GU|".into()))
        }
        ClassicalKind::Sp => {
            // q^{k^2} prod_{i=1..k} (q^{2i} - 1)
            let mut acc = qf.pow(k * k);
            for i in 1..=k {
                acc = mul_term(acc, q, 2 * i, 1)?;
            }
            Ok(acc)
        }
        ClassicalKind::GoPlus | ClassicalKind::GoMinus => {
            // 2 q^{k(k-1)} (q^k - eps) prod_{i=1..k-1} (q^{2i} - 1)
            let base = orthogonal_base(spec.kind == ClassicalKind::GoPlus, k, q)?;
            Ok(base.mul(&factor_u64(2)))
        }
        ClassicalKind::SoPlus | ClassicalKind::SoMinus => {
            // index 2 in GO for odd q; equal to GO in characteristic 2
            let base = orthogonal_base(spec.kind == ClassicalKind::SoPlus, k, q)?;
            if q % 2 == 1 {
                Ok(base)
            } else {
                Ok(base.mul(&factor_u64(2)))
            }
        }
        ClassicalKind::OmegaPlus | ClassicalKind::OmegaMinus => {
            let base = orthogonal_base(spec.kind == ClassicalKind::OmegaPlus, k, q)?;
            base.checked_div(&factor_u64(num_integer::gcd(2, q - 1)))
                .ok_or_else(|| LieError::Domain("(2, q-1) divides the orthogonal base".into()))
        }
    }
}

fn orthogonal_base(plus: bool, k: u32, q: u64) -> Result<FactoredNat, LieError> {
    let mut acc = factor_u64(q).pow(k * (k - 1));
    acc = mul_term(acc, q, k, if plus { 1 } else { -1 })?;
    for i in 1..k {
        acc = mul_term(acc, q, 2 * i, 1)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn ord(kind: ClassicalKind, param: u32, q: u64) -> BigUint {
        classical_order(&ClassicalSpec::new(kind, param, q).unwrap())
            .unwrap()
            .value()
            .clone()
    }

    #[test]
    fn named_orders() {
        // (9-1)(9-3)
        assert_eq!(ord(ClassicalKind::Gl, 2, 3), BigUint::from(48u32));
        // q^3 (q+1)(q^2-1)(q^3+1) = 8 * 3 * 3 * 9
        assert_eq!(ord(ClassicalKind::Gu, 3, 2), BigUint::from(648u32));
        // q^4 (q^2-1)(q^4-1)
        assert_eq!(ord(ClassicalKind::Sp, 2, 2), BigUint::from(720u32));
    }

    #[test]
    fn sl_su_index_relations() {
        for (k, q) in [(2u32, 3u64), (3, 4), (4, 5), (2, 9)] {
            let gl = ord(ClassicalKind::Gl, k, q);
            let sl = ord(ClassicalKind::Sl, k, q);
            assert_eq!(gl, sl * BigUint::from(q - 1));
            let gu = ord(ClassicalKind::Gu, k, q);
            let su = ord(ClassicalKind::Su, k, q);
            assert_eq!(gu, su * BigUint::from(q + 1));
        }
    }

    #[test]
    fn omega_minus_4_values() {
        // Omega-_4(2) is isomorphic to PSL(2,4), order 60
        assert_eq!(ord(ClassicalKind::OmegaMinus, 2, 2), BigUint::from(60u32));
        // Omega-_4(3) is isomorphic to PSL(2,9), order 360
        assert_eq!(ord(ClassicalKind::OmegaMinus, 2, 3), BigUint::from(360u32));
        assert_eq!(ord(ClassicalKind::OmegaMinus, 2, 4), BigUint::from(4080u32));
        assert_eq!(ord(ClassicalKind::OmegaMinus, 2, 5), BigUint::from(7800u32));
    }

    #[test]
    fn orthogonal_chain() {
        // |GO| = 2|SO| = 4|Omega| in odd characteristic (dimension 2k >= 4)
        for (k, q) in [(2u32, 3u64), (3, 5)] {
            let go = ord(ClassicalKind::GoPlus, k, q);
            let so = ord(ClassicalKind::SoPlus, k, q);
            let om = ord(ClassicalKind::OmegaPlus, k, q);
            assert_eq!(go.clone(), so.clone() * BigUint::from(2u32));
            assert_eq!(so, om * BigUint::from(2u32));
        }
        // characteristic 2: |GO| = |SO| = 2|Omega|
        let go = ord(ClassicalKind::GoMinus, 3, 4);
        let so = ord(ClassicalKind::SoMinus, 3, 4);
        let om = ord(ClassicalKind::OmegaMinus, 3, 4);
        assert_eq!(go, so.clone());
        assert_eq!(so, om * BigUint::from(2u32));
    }

    #[test]
    fn invalid_specs() {
        assert!(ClassicalSpec::new(ClassicalKind::Gl, 0, 4).is_err());
        assert!(ClassicalSpec::new(ClassicalKind::Gl, 2, 6).is_err());
    }
}
