//! The η, φ(r, L), and prk bookkeeping functions for classical groups.

use num_bigint::BigInt;
use num_bigint::BigUint;

use super::{Family, LieError, LieSpec};
use crate::numtheory::mult_order;

/// k for odd k, k/2 for even k.
pub fn eta(k: u64) -> u64 {
    assert!(k >= 1);
    if k % 2 == 1 {
        k
    } else {
        k / 2
    }
}

/// φ(r, L) for a classical group L over F_q and an odd prime r coprime
/// to q: e(r, εq) for the linear/unitary families (ε = +1 for A, -1 for
/// 2A), η(e(r, q)) for the symplectic/orthogonal ones.
pub fn phi_of(r: u64, spec: &LieSpec) -> Result<u64, LieError> {
    if r == 2 {
        return Err(LieError::Domain("phi is undefined at r = 2".into()));
    }
    if r == spec.p() {
        return Err(LieError::Domain(
            "phi requires r coprime to the characteristic".into(),
        ));
    }
    if !spec.family().is_classical() {
        return Err(LieError::Domain(format!(
            "phi is defined for classical families only, got {}",
            spec.family().name()
        )));
    }
    let q = spec.q() as i64;
    let e = |base: i64| -> Result<u64, LieError> {
        let ord = mult_order(&BigUint::from(r), &BigInt::from(base))?;
        Ok(u64::try_from(&ord).expect("order fits u64"))
    };
    Ok(match spec.family() {
        Family::A => e(q)?,
        Family::TwoA => e(-q)?,
        Family::B | Family::C | Family::D | Family::TwoD => eta(e(q)?),
        _ => unreachable!(),
    })
}

/// The dimension for linear/unitary groups, the Lie rank for
/// symplectic/orthogonal ones.
pub fn prk(spec: &LieSpec) -> Result<u32, LieError> {
    match spec.family() {
        Family::A | Family::TwoA => Ok(spec.rank() + 1),
        Family::B | Family::C | Family::D | Family::TwoD => Ok(spec.rank()),
        f => Err(LieError::Domain(format!(
            "prk is defined for classical families only, got {}",
            f.name()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_values() {
        assert_eq!(eta(7), 7);
        assert_eq!(eta(6), 3);
        assert_eq!(eta(2), 1);
        assert_eq!(eta(1), 1);
    }

    #[test]
    fn phi_values() {
        let d4q4 = LieSpec::new(Family::D, 4, 2, 2).unwrap();
        // e(13, 4) = 6, eta(6) = 3
        assert_eq!(phi_of(13, &d4q4).unwrap(), 3);
        let u4q2 = LieSpec::new(Family::TwoA, 3, 2, 1).unwrap();
        // e(5, -2) = 4
        assert_eq!(phi_of(5, &u4q2).unwrap(), 4);
        let a2q4 = LieSpec::new(Family::A, 2, 2, 2).unwrap();
        // e(3, 4) = 1
        assert_eq!(phi_of(3, &a2q4).unwrap(), 1);
    }

    #[test]
    fn phi_domain_errors() {
        let d4q4 = LieSpec::new(Family::D, 4, 2, 2).unwrap();
        assert!(phi_of(2, &d4q4).is_err());
        assert!(phi_of(d4q4.p(), &d4q4).is_err());
        let g2 = LieSpec::new(Family::G2, 2, 5, 1).unwrap();
        assert!(phi_of(7, &g2).is_err());
    }

    #[test]
    fn prk_values() {
        let a3 = LieSpec::new(Family::A, 3, 2, 1).unwrap();
        assert_eq!(prk(&a3).unwrap(), 4);
        let d8 = LieSpec::new(Family::D, 8, 2, 1).unwrap();
        assert_eq!(prk(&d8).unwrap(), 8);
        let u5 = LieSpec::new(Family::TwoA, 4, 2, 1).unwrap();
        assert_eq!(prk(&u5).unwrap(), 5);
        let e6 = LieSpec::new(Family::E6, 6, 2, 1).unwrap();
        assert!(prk(&e6).is_err());
    }
}
