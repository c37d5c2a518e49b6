//! Order arithmetic for the finite simple groups of Lie type: order
//! formulas in factored form, outer automorphism orders, the η/φ/prk
//! bookkeeping functions, cube and 3.5-power bounds, the index-formula
//! catalog for `D_n(q)`, and the k_i inequality sweeps.

mod classical;
mod functions;
mod inequalities;
mod neda;
mod orders;

use thiserror::Error;

pub use classical::{classical_order, ClassicalKind, ClassicalSpec};
pub use functions::{eta, phi_of, prk};
pub use inequalities::{proof_inequalities, InequalitySweep};
pub use neda::{neda_candidates, NedaCandidate, NedaCase};
pub use orders::{aut_order, bound_check, out_order, simple_order, simple_order_direct, BoundKind};

use crate::numtheory::NumTheoryError;

#[derive(Debug, Error)]
pub enum LieError {
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("index formula instance does not evaluate to an integer: {0}")]
    InexactFormula(String),
    #[error(transparent)]
    NumTheory(#[from] NumTheoryError),
}

/// Families of finite simple groups of Lie type, twisted forms included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    TwoA,
    B,
    C,
    D,
    TwoD,
    ThreeD4,
    G2,
    TwoG2,
    F4,
    TwoF4,
    E6,
    TwoE6,
    E7,
    E8,
    TwoB2,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::A,
        Family::TwoA,
        Family::B,
        Family::C,
        Family::D,
        Family::TwoD,
        Family::ThreeD4,
        Family::G2,
        Family::TwoG2,
        Family::F4,
        Family::TwoF4,
        Family::E6,
        Family::TwoE6,
        Family::E7,
        Family::E8,
        Family::TwoB2,
    ];

    pub fn parse(s: &str) -> Option<Family> {
        Some(match s {
            "A" | "a" => Family::A,
            "2A" | "2a" => Family::TwoA,
            "B" | "b" => Family::B,
            "C" | "c" => Family::C,
            "D" | "d" => Family::D,
            "2D" | "2d" => Family::TwoD,
            "3D4" | "3d4" => Family::ThreeD4,
            "G2" | "g2" => Family::G2,
            "2G2" | "2g2" => Family::TwoG2,
            "F4" | "f4" => Family::F4,
            "2F4" | "2f4" => Family::TwoF4,
            "E6" | "e6" => Family::E6,
            "2E6" | "2e6" => Family::TwoE6,
            "E7" | "e7" => Family::E7,
            "E8" | "e8" => Family::E8,
            "2B2" | "2b2" => Family::TwoB2,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::A => "A",
            Family::TwoA => "2A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::TwoD => "2D",
            Family::ThreeD4 => "3D4",
            Family::G2 => "G2",
            Family::TwoG2 => "2G2",
            Family::F4 => "F4",
            Family::TwoF4 => "2F4",
            Family::E6 => "E6",
            Family::TwoE6 => "2E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::TwoB2 => "2B2",
        }
    }

    pub fn is_classical(&self) -> bool {
        matches!(
            self,
            Family::A | Family::TwoA | Family::B | Family::C | Family::D | Family::TwoD
        )
    }

    /// Fixed Lie rank for the exceptional families, None for A/2A/B/C/D/2D.
    fn fixed_rank(&self) -> Option<u32> {
        Some(match self {
            Family::G2 | Family::TwoG2 | Family::TwoB2 => 2,
            Family::ThreeD4 | Family::F4 | Family::TwoF4 => 4,
            Family::E6 | Family::TwoE6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
            _ => return None,
        })
    }
}

/// A simple group of Lie type identified by family, rank, and field size
/// q = p^n. Construction rejects invalid family/rank combinations,
/// violated twisting constraints, and the non-simple parameter corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LieSpec {
    family: Family,
    rank: u32,
    p: u64,
    n: u32,
}

impl LieSpec {
    pub fn new(family: Family, rank: u32, p: u64, n: u32) -> Result<LieSpec, LieError> {
        if n == 0 {
            return Err(LieError::InvalidSpec("field exponent must be >= 1".into()));
        }
        if !crate::numtheory::is_prime_u64(p) {
            return Err(LieError::InvalidSpec(format!("{p} is not prime")));
        }
        let q = (p as u128).checked_pow(n).filter(|&q| q <= u64::MAX as u128);
        let q = match q {
            Some(q) => q as u64,
            None => return Err(LieError::InvalidSpec("q = p^n exceeds u64".into())),
        };
        if let Some(r) = family.fixed_rank() {
            if rank != r {
                return Err(LieError::InvalidSpec(format!(
                    "family {} has fixed rank {r}, got {rank}",
                    family.name()
                )));
            }
        }
        let min_rank = match family {
            Family::A => 1,
            Family::TwoA | Family::B => 2,
            Family::C => 3,
            Family::D | Family::TwoD => 4,
            _ => 0,
        };
        if family.is_classical() && rank < min_rank {
            return Err(LieError::InvalidSpec(format!(
                "family {} requires rank >= {min_rank}, got {rank}",
                family.name()
            )));
        }
        // twisting constraints
        match family {
            Family::TwoB2 | Family::TwoF4 => {
                if p != 2 || n % 2 == 0 {
                    return Err(LieError::InvalidSpec(format!(
                        "{} requires q = 2^n with n odd",
                        family.name()
                    )));
                }
            }
            Family::TwoG2 => {
                if p != 3 || n % 2 == 0 {
                    return Err(LieError::InvalidSpec(
                        "2G2 requires q = 3^n with n odd".into(),
                    ));
                }
            }
            _ => {}
        }
        // parameter corners where the group is not simple
        let non_simple = matches!(
            (family, rank, q),
            (Family::A, 1, 2)
                | (Family::A, 1, 3)
                | (Family::TwoA, 2, 2)
                | (Family::B, 2, 2)
                | (Family::G2, 2, 2)
                | (Family::TwoG2, 2, 3)
                | (Family::TwoB2, 2, 2)
                | (Family::TwoF4, 4, 2)
        );
        if non_simple {
            return Err(LieError::InvalidSpec(format!(
                "{}_{}({q}) is not simple",
                family.name(),
                rank
            )));
        }
        Ok(LieSpec { family, rank, p, n })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn field_exponent(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.n)
    }

    /// Every valid spec with rank ≤ rank_max and prime-power q ≤ q_max.
    pub fn enumerate(rank_max: u32, q_max: u64) -> Vec<LieSpec> {
        let mut out = Vec::new();
        for q in 2..=q_max {
            let Some((p, n)) = prime_power(q) else {
                continue;
            };
            for family in Family::ALL {
                let ranks: Vec<u32> = match family.fixed_rank() {
                    Some(r) => vec![r],
                    None => (1..=rank_max).collect(),
                };
                for rank in ranks {
                    if rank > rank_max {
                        continue;
                    }
                    if let Ok(spec) = LieSpec::new(family, rank, p, n) {
                        out.push(spec);
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Display for LieSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}_{}({})", self.family.name(), self.rank, self.q())
    }
}

/// Decomposes q as p^n with p prime, if it is a prime power > 1.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = crate::numtheory::factor_u64(q);
    let mut it = f.factors().iter();
    let (p, &e) = it.next()?;
    if it.next().is_some() {
        return None;
    }
    Some((u64::try_from(p).ok()?, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(LieSpec::new(Family::A, 1, 2, 2).is_ok()); // A1(4)
        assert!(LieSpec::new(Family::A, 1, 2, 1).is_err()); // A1(2) not simple
        assert!(LieSpec::new(Family::A, 1, 3, 1).is_err()); // A1(3) not simple
        assert!(LieSpec::new(Family::TwoB2, 2, 2, 1).is_err()); // 2B2(2)
        assert!(LieSpec::new(Family::TwoB2, 2, 2, 3).is_ok()); // 2B2(8)
        assert!(LieSpec::new(Family::TwoB2, 2, 2, 2).is_err()); // even exponent
        assert!(LieSpec::new(Family::TwoG2, 2, 3, 3).is_ok()); // 2G2(27)
        assert!(LieSpec::new(Family::TwoG2, 2, 3, 1).is_err()); // 2G2(3)
        assert!(LieSpec::new(Family::D, 3, 2, 1).is_err()); // D needs rank >= 4
        assert!(LieSpec::new(Family::D, 4, 2, 1).is_ok());
        assert!(LieSpec::new(Family::G2, 3, 5, 1).is_err()); // fixed rank
        assert!(LieSpec::new(Family::B, 2, 2, 1).is_err()); // B2(2) not simple
        assert!(LieSpec::new(Family::A, 2, 4, 1).is_err()); // 4 not prime
    }

    #[test]
    fn prime_power_decomposition() {
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn enumerate_counts_are_stable() {
        let specs = LieSpec::enumerate(4, 8);
        // hand count for q in {2,3,4,5,7,8}:
        //   A1..A4 minus A1(2), A1(3); 2A2..2A4 minus 2A2(2); B2..B4 minus
        //   B2(2); C3, C4; D4; 2D4; 3D4; G2 minus G2(2); F4; 2B2(8); 2F4(8)
        let a: Vec<_> = specs
            .iter()
            .filter(|s| s.family() == Family::A)
            .collect();
        assert_eq!(a.len(), 4 * 6 - 2);
        assert!(specs
            .iter()
            .any(|s| s.family() == Family::TwoB2 && s.q() == 8));
        assert!(!specs.iter().any(|s| s.q() == 6));
    }
}
