//! The index-formula catalog for D_n(q): for each case, every legal
//! parameter assignment of the published centralizer-index formulas,
//! evaluated exactly in factored form.

use std::collections::BTreeMap;

use super::classical::{classical_order, ClassicalKind, ClassicalSpec};
use super::orders::simple_order;
use super::{Family, LieError, LieSpec};
use crate::numtheory::{factor_u64, FactoredNat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum NedaCase {
    I,
    II,
    III,
    IV,
}

impl NedaCase {
    pub fn parse(s: &str) -> Option<NedaCase> {
        Some(match s {
            "i" | "I" => NedaCase::I,
            "ii" | "II" => NedaCase::II,
            "iii" | "III" => NedaCase::III,
            "iv" | "IV" => NedaCase::IV,
        _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            NedaCase::I => "i",
            NedaCase::II => "ii",
            NedaCase::III => "iii",
            NedaCase::IV => "iv",
        }
    }
}

/// One evaluated formula instance: which case and bullet produced it, the
/// parameter assignment, and the exact integer value.
#[derive(Clone, Debug)]
pub struct NedaCandidate {
    pub case: NedaCase,
    pub bullet: u32,
    pub params: BTreeMap<String, String>,
    pub value: FactoredNat,
}

struct Ctx {
    n: u32,
    q: u64,
    /// |L| · d, the shared numerator
    num: FactoredNat,
    /// d = (q^n - 1, 4)
    d: FactoredNat,
}

impl Ctx {
    fn gu(&self, dim: u32, q: u64) -> Result<FactoredNat, LieError> {
        classical_order(&ClassicalSpec::new(ClassicalKind::Gu, dim, q)?)
    }

    fn gl(&self, dim: u32, q: u64) -> Result<FactoredNat, LieError> {
        classical_order(&ClassicalSpec::new(ClassicalKind::Gl, dim, q)?)
    }

    fn go(&self, rank: u32, minus: bool) -> Result<FactoredNat, LieError> {
        let kind = if minus {
            ClassicalKind::GoMinus
        } else {
            ClassicalKind::GoPlus
        };
        classical_order(&ClassicalSpec::new(kind, rank, self.q)?)
    }

    fn q_pow(&self, e: u32) -> Result<u64, LieError> {
        (self.q as u128)
            .checked_pow(e)
            .filter(|&v| v <= u64::MAX as u128)
            .map(|v| v as u64)
            .ok_or_else(|| LieError::InvalidSpec(format!("q^{e} exceeds u64")))
    }

    /// Builds a candidate from numerator-multiplier and denominator,
    /// erroring when the division is not exact.
    fn exact(
        &self,
        case: NedaCase,
        bullet: u32,
        params: BTreeMap<String, String>,
        extra_num: Option<&FactoredNat>,
        den: &FactoredNat,
    ) -> Result<NedaCandidate, LieError> {
        let num = match extra_num {
            Some(x) => self.num.mul(x),
            None => self.num.clone(),
        };
        let value = num.checked_div(den).ok_or_else(|| {
            LieError::InexactFormula(format!(
                "case {} bullet {bullet} params {params:?}: {} / {}",
                case.name(),
                num.value(),
                den.value()
            ))
        })?;
        Ok(NedaCandidate {
            case,
            bullet,
            params,
            value,
        })
    }
}

fn pmap(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// Enumerates every formula instance of the chosen case for L = D_n(q)
/// over all legal parameter values, evaluating each to an exact integer.
pub fn neda_candidates(n: u32, q: u64, case: NedaCase) -> Result<Vec<NedaCandidate>, LieError> {
    if n < 4 {
        return Err(LieError::InvalidSpec("the catalog requires n >= 4".into()));
    }
    let (p, e) = super::prime_power(q)
        .ok_or_else(|| LieError::InvalidSpec(format!("{q} is not a prime power")))?;
    match case {
        NedaCase::II if n % 2 == 0 => {
            return Err(LieError::InvalidSpec("case ii requires n odd".into()))
        }
        NedaCase::III if n % 2 == 1 => {
            return Err(LieError::InvalidSpec("case iii requires n even".into()))
        }
        NedaCase::IV if n % 2 == 1 || n < 6 => {
            return Err(LieError::InvalidSpec("case iv requires n >= 6 even".into()))
        }
        _ => {}
    }
    let spec = LieSpec::new(Family::D, n, p, e)?;
    let order = simple_order(&spec)?;
    // d = (q^n - 1, 4): 1 in characteristic 2; else 4 unless q^n ≡ 3 (mod 4)
    let d_val = if q % 2 == 0 {
        1
    } else {
        let mut qn = 1u64;
        for _ in 0..n {
            qn = qn * (q % 4) % 4;
        }
        if (qn + 3) % 4 == 0 {
            4
        } else {
            2
        }
    };
    let d = factor_u64(d_val);
    let ctx = Ctx {
        n,
        q,
        num: order.mul(&d),
        d,
    };
    let mut out = Vec::new();
    match case {
        NedaCase::I => case_i(&ctx, &mut out)?,
        NedaCase::II => case_ii(&ctx, &mut out)?,
        NedaCase::III => case_iii(&ctx, &mut out)?,
        NedaCase::IV => case_iv(&ctx, &mut out)?,
    }
    Ok(out)
}

fn divisors_of(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn case_i(ctx: &Ctx, out: &mut Vec<NedaCandidate>) -> Result<(), LieError> {
    let (n, q) = (ctx.n, ctx.q);
    let qp1 = factor_u64(q + 1);
    // |L|d / (|GU_{(n-1)/m}(q^m)| (q+1)), (n-1)/m odd; m != 1 when q = 3, n even
    for m in divisors_of(n - 1) {
        let dim = (n - 1) / m;
        if dim % 2 == 0 {
            continue;
        }
        if q == 3 && n % 2 == 0 && m == 1 {
            continue;
        }
        let den = ctx.gu(dim, ctx.q_pow(m)?)?.mul(&qp1);
        out.push(ctx.exact(NedaCase::I, 1, pmap(&[("m", m.to_string())]), None, &den)?);
    }
    // |L|d / (alpha |GU_n(q)|), n even
    if n % 2 == 0 {
        let alphas: &[u64] = if q == 3 {
            &[2]
        } else if (q + 1) % 4 == 0 {
            &[1, 2]
        } else {
            &[1]
        };
        let gu_n = ctx.gu(n, q)?;
        for &alpha in alphas {
            let den = gu_n.mul(&factor_u64(alpha));
            out.push(ctx.exact(
                NedaCase::I,
                2,
                pmap(&[("alpha", alpha.to_string())]),
                None,
                &den,
            )?);
        }
    }
    // 2|L|d / (|GO-_{2(n-1)}(q)| (q+1)), (q, n) != (3, even)
    if !(q == 3 && n % 2 == 0) {
        let den = ctx.go(n - 1, true)?.mul(&qp1);
        let two = factor_u64(2);
        out.push(ctx.exact(NedaCase::I, 3, pmap(&[]), Some(&two), &den)?);
    }
    // |L|d / (|GO-_{2(n-1)}(q)| (q+1)), q ≡ -1 (mod 4)
    if q % 4 == 3 {
        let den = ctx.go(n - 1, true)?.mul(&qp1);
        out.push(ctx.exact(NedaCase::I, 4, pmap(&[]), None, &den)?);
    }
    Ok(())
}

fn case_ii(ctx: &Ctx, out: &mut Vec<NedaCandidate>) -> Result<(), LieError> {
    let (n, q) = (ctx.n, ctx.q);
    // |L|d / |GL_{n/m1}(q^{m1})|, m1 | n; m1 != 1 when q in {2, 3, 5}
    for m1 in divisors_of(n) {
        if m1 == 1 && matches!(q, 2 | 3 | 5) {
            continue;
        }
        let den = ctx.gl(n / m1, ctx.q_pow(m1)?)?;
        out.push(ctx.exact(
            NedaCase::II,
            1,
            pmap(&[("m1", m1.to_string())]),
            None,
            &den,
        )?);
    }
    Ok(())
}

fn case_iii(ctx: &Ctx, out: &mut Vec<NedaCandidate>) -> Result<(), LieError> {
    let (n, q) = (ctx.n, ctx.q);
    let qm1 = factor_u64(q - 1);
    // |L|d / (|GL_{(n-1)/m2}(q^{m2})| (q-1)), m2 | n-1; m2 != 1 when q in {2,3,5}
    for m2 in divisors_of(n - 1) {
        if m2 == 1 && matches!(q, 2 | 3 | 5) {
            continue;
        }
        let den = ctx.gl((n - 1) / m2, ctx.q_pow(m2)?)?.mul(&qm1);
        out.push(ctx.exact(
            NedaCase::III,
            1,
            pmap(&[("m2", m2.to_string())]),
            None,
            &den,
        )?);
    }
    // |L|d / (alpha |GL_n(q)|), q not in {2, 3}
    if !matches!(q, 2 | 3) {
        let alphas: &[u64] = if q == 5 {
            &[2]
        } else if (q - 1) % 4 == 0 {
            &[1, 2]
        } else {
            &[1]
        };
        let gl_n = ctx.gl(n, q)?;
        for &alpha in alphas {
            let den = gl_n.mul(&factor_u64(alpha));
            out.push(ctx.exact(
                NedaCase::III,
                2,
                pmap(&[("alpha", alpha.to_string())]),
                None,
                &den,
            )?);
        }
    }
    // 2|L|d / (|GO+_{2(n-1)}(q)| (q-1)), q not in {2, 3, 5}
    if !matches!(q, 2 | 3 | 5) {
        let den = ctx.go(n - 1, false)?.mul(&qm1);
        let two = factor_u64(2);
        out.push(ctx.exact(NedaCase::III, 3, pmap(&[]), Some(&two), &den)?);
    }
    // |L|d / (|GO+_{2(n-1)}(q)| (q-1)), q ≡ 1 (mod 4)
    if q % 4 == 1 {
        let den = ctx.go(n - 1, false)?.mul(&qm1);
        out.push(ctx.exact(NedaCase::III, 4, pmap(&[]), None, &den)?);
    }
    Ok(())
}

fn case_iv(ctx: &Ctx, out: &mut Vec<NedaCandidate>) -> Result<(), LieError> {
    let (n, q) = (ctx.n, ctx.q);
    // alpha |L|d / (|GO^eps_{2(n-1)}(q)| (q - eps 1)), alpha | 2 under the
    // side conditions of the GO bullets of cases i and iii
    for minus in [false, true] {
        let mut alphas: Vec<u64> = Vec::new();
        if minus {
            if q != 3 {
                alphas.push(2);
            }
            if q % 4 == 3 {
                alphas.push(1);
            }
        } else {
            if !matches!(q, 2 | 3 | 5) {
                alphas.push(2);
            }
            if q % 4 == 1 {
                alphas.push(1);
            }
        }
        alphas.sort();
        let qe = factor_u64(if minus { q + 1 } else { q - 1 });
        for alpha in alphas {
            let den = ctx.go(n - 1, minus)?.mul(&qe);
            let af = factor_u64(alpha);
            out.push(ctx.exact(
                NedaCase::IV,
                1,
                pmap(&[
                    ("alpha", alpha.to_string()),
                    ("epsilon", if minus { "-" } else { "+" }.to_string()),
                ]),
                Some(&af),
                &den,
            )?);
        }
    }
    // |L|d / (alpha beta): alpha any divisor of |Omega-_4(q)| for which both
    // the index and the centralizer order alpha*beta/d are integers
    let omega4 = classical_order(&ClassicalSpec::new(ClassicalKind::OmegaMinus, 2, q)?)?;
    let mut betas: Vec<(String, FactoredNat)> = Vec::new();
    for m3 in divisors_of(n - 2) {
        let dim = (n - 2) / m3;
        if dim % 2 == 0 {
            continue;
        }
        betas.push((
            format!("GU_{dim}(q^{m3})"),
            ctx.gu(dim, ctx.q_pow(m3)?)?,
        ));
    }
    let go_minus = ctx.go(n - 2, true)?;
    betas.push((format!("GO-_{}(q)", 2 * (n - 2)), go_minus.clone()));
    if let Some(half) = go_minus.checked_div(&factor_u64(2)) {
        betas.push((format!("GO-_{}(q)/2", 2 * (n - 2)), half));
    }
    for alpha in omega4.divisors_factored() {
        for (beta_name, beta) in &betas {
            let den = alpha.mul(beta);
            let Some(value) = ctx.num.checked_div(&den) else {
                continue;
            };
            // the implied centralizer order must be an integer as well
            if den.checked_div(&ctx.d).is_none() {
                continue;
            }
            out.push(NedaCandidate {
                case: NedaCase::IV,
                bullet: 2,
                params: pmap(&[
                    ("alpha", alpha.value().to_string()),
                    ("beta", beta_name.clone()),
                ]),
                value,
            });
        }
    }
    // |L|d / (q^{2(n-1)} |Sp_{2(n-2)}(q)|)
    {
        let sp = classical_order(&ClassicalSpec::new(ClassicalKind::Sp, n - 2, q)?)?;
        let den = factor_u64(q).pow(2 * (n - 1)).mul(&sp);
        out.push(ctx.exact(NedaCase::IV, 3, pmap(&[]), None, &den)?);
    }
    // |L|d / |GU_{n/2}(q^2)|, n/2 even
    if (n / 2) % 2 == 0 {
        let den = ctx.gu(n / 2, ctx.q_pow(2)?)?;
        out.push(ctx.exact(NedaCase::IV, 4, pmap(&[]), None, &den)?);
    }
    Ok(())
}
