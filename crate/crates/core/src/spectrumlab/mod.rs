//! Class-size spectra as abstract data: derived orders, the {p,q}*
//! condition, and catalog recognition scans.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::groupengine::{catalog_group, scan_corpus, EngineError, PermGroup};
use crate::numtheory::{factor_u64, FactoredNat};

/// The set N(G) of conjugacy-class sizes with 1 removed. Spectra compare
/// as sets; multiplicities are retained for diagnostics only.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Spectrum {
    schema_version: u32,
    source: String,
    sizes: BTreeSet<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    multiplicities: Option<Vec<(u64, u64)>>,
}

pub const SPECTRUM_SCHEMA_VERSION: u32 = 1;

impl Spectrum {
    /// An abstract spectrum from bare sizes. Entries below 2 are rejected.
    pub fn new(sizes: impl IntoIterator<Item = u64>, source: impl Into<String>) -> Spectrum {
        let sizes: BTreeSet<u64> = sizes.into_iter().collect();
        assert!(
            !sizes.contains(&0) && !sizes.contains(&1),
            "class-size spectra exclude 1"
        );
        Spectrum {
            schema_version: SPECTRUM_SCHEMA_VERSION,
            source: source.into(),
            sizes,
            multiplicities: None,
        }
    }

    pub fn with_multiplicities(mult: BTreeMap<u64, u64>, source: impl Into<String>) -> Spectrum {
        let sizes: BTreeSet<u64> = mult.keys().copied().collect();
        assert!(!sizes.contains(&0) && !sizes.contains(&1));
        Spectrum {
            schema_version: SPECTRUM_SCHEMA_VERSION,
            source: source.into(),
            sizes,
            multiplicities: Some(mult.into_iter().collect()),
        }
    }

    pub fn sizes(&self) -> &BTreeSet<u64> {
        &self.sizes
    }

    pub fn multiplicities(&self) -> Option<&[(u64, u64)]> {
        self.multiplicities.as_deref()
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Set equality, the comparison the recognition scan uses.
    pub fn same_sizes(&self, other: &Spectrum) -> bool {
        self.sizes == other.sizes
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spectrum serializes")
    }

    pub fn from_json(s: &str) -> Result<Spectrum, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// The largest power of p dividing some member of N (1 when none).
pub fn derived_part(n: &Spectrum, p: u64) -> u64 {
    let mut best: u64 = 1;
    for &alpha in n.sizes() {
        let mut a = alpha;
        let mut pk: u64 = 1;
        while a % p == 0 {
            a /= p;
            pk *= p;
        }
        best = best.max(pk);
    }
    best
}

/// The product of derived parts over `pi` (default: every prime dividing
/// some member of N), in factored form.
pub fn derived_order(n: &Spectrum, pi: Option<&BTreeSet<u64>>) -> FactoredNat {
    let primes: BTreeSet<u64> = match pi {
        Some(pi) => pi.clone(),
        None => n
            .sizes()
            .iter()
            .flat_map(|&alpha| {
                factor_u64(alpha)
                    .prime_support()
                    .into_iter()
                    .map(|p| u64::try_from(&p).expect("class size fits u64"))
            })
            .collect(),
    };
    let mut acc = FactoredNat::one();
    for p in primes {
        let part = derived_part(n, p);
        if part > 1 {
            acc = acc.mul(&factor_u64(part));
        }
    }
    acc
}

/// Per-prime derived parts with their product.
#[derive(Clone, Debug)]
pub struct DerivedOrder {
    pub parts: BTreeMap<u64, u64>,
    pub product: FactoredNat,
}

pub fn derived_order_full(n: &Spectrum) -> DerivedOrder {
    let product = derived_order(n, None);
    let parts = product
        .factors()
        .iter()
        .map(|(p, &e)| {
            let p = u64::try_from(p).expect("fits");
            (p, p.pow(e))
        })
        .collect();
    DerivedOrder { parts, product }
}

/// Outcome of the {p,q}* membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqStarOutcome {
    pub holds: bool,
    /// the violating member of N, when the condition fails
    pub witness: Option<u64>,
}

/// Checks that every α ∈ N has α_{p,q} ∈ { N_p, N_q, N_p·N_q }, where
/// N_p denotes the derived p-part of the spectrum.
pub fn pq_star_check(n: &Spectrum, p: u64, q: u64) -> PqStarOutcome {
    assert!(p != q, "the condition is about two distinct primes");
    let np = derived_part(n, p);
    let nq = derived_part(n, q);
    let allowed: BTreeSet<u64> = [np, nq, np * nq].into_iter().collect();
    for &alpha in n.sizes() {
        let part = |mut a: u64, r: u64| -> u64 {
            let mut rk = 1u64;
            while a % r == 0 {
                a /= r;
                rk *= r;
            }
            rk
        };
        let alpha_pq = part(alpha, p) * part(alpha, q);
        if !allowed.contains(&alpha_pq) {
            return PqStarOutcome {
                holds: false,
                witness: Some(alpha),
            };
        }
    }
    PqStarOutcome {
        holds: true,
        witness: None,
    }
}

/// Outcome of the two-prime centralizer conclusion check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GorbigOutcome {
    /// hypotheses not satisfied: nontrivial center, p ≤ q or q ≤ 5, or
    /// the {p,q}* condition fails
    Vacuous(String),
    Holds,
    Fails(String),
}

/// When Z(G) = 1, p > q > 5, and N(G) satisfies {p,q}*, verifies both
/// conclusions exhaustively: |G|_{p,q} equals the derived {p,q}-part, and
/// C_G(g) ∩ C_G(h) = 1 for every p-element g and q-element h.
pub fn gorbig_conclusion_check(
    g: &PermGroup,
    p: u64,
    q: u64,
) -> Result<GorbigOutcome, EngineError> {
    let order = g.order()?;
    if order % p != 0 || order % q != 0 {
        return Err(EngineError::Domain(format!(
            "{p} and {q} must divide the group order"
        )));
    }
    if g.center_order()? != 1 {
        return Ok(GorbigOutcome::Vacuous("nontrivial center".into()));
    }
    if !(p > q && q > 5) {
        return Ok(GorbigOutcome::Vacuous(format!("needs p > q > 5, got ({p},{q})")));
    }
    let spectrum = g.spectrum()?;
    let star = pq_star_check(&spectrum, p, q);
    if !star.holds {
        return Ok(GorbigOutcome::Vacuous(format!(
            "{{p,q}}* fails with witness {}",
            star.witness.unwrap()
        )));
    }
    // conclusion 1: |G|_{p,q} = N_p * N_q
    let part = |mut a: u64, r: u64| -> u64 {
        let mut rk = 1u64;
        while a % r == 0 {
            a /= r;
            rk *= r;
        }
        rk
    };
    let group_pq = part(order, p) * part(order, q);
    let derived_pq = derived_part(&spectrum, p) * derived_part(&spectrum, q);
    if group_pq != derived_pq {
        return Ok(GorbigOutcome::Fails(format!(
            "|G|_{{p,q}} = {group_pq} but the derived part is {derived_pq}"
        )));
    }
    // conclusion 2: trivial centralizer intersections, checked over all
    // p-elements g and q-elements h; when the centralizer orders are
    // already coprime the intersection is trivial without scanning
    let classes = g.conjugacy_classes()?;
    let is_power_of = |mut n: u64, r: u64| -> bool {
        while n % r == 0 {
            n /= r;
        }
        n == 1
    };
    let mut p_elements: Vec<(u32, u64)> = Vec::new(); // (index, centralizer order)
    let mut q_elements: Vec<(u32, u64)> = Vec::new();
    for c in classes {
        if c.rep_order > 1 && is_power_of(c.rep_order, p) {
            for &i in &c.members {
                p_elements.push((i, order / c.size));
            }
        }
        if c.rep_order > 1 && is_power_of(c.rep_order, q) {
            for &i in &c.members {
                q_elements.push((i, order / c.size));
            }
        }
    }
    for &(gi, gc) in &p_elements {
        for &(hi, hc) in &q_elements {
            if num_integer::gcd(gc, hc) == 1 {
                continue;
            }
            let ge = g.element(gi)?.clone();
            let he = g.element(hi)?.clone();
            let mut nontrivial = 0u64;
            for x in g.elements()? {
                if !x.is_identity() && x.commutes_with(&ge) && x.commutes_with(&he) {
                    nontrivial += 1;
                    break;
                }
            }
            if nontrivial > 0 {
                return Ok(GorbigOutcome::Fails(format!(
                    "C({ge}) ∩ C({he}) is nontrivial"
                )));
            }
        }
    }
    Ok(GorbigOutcome::Holds)
}

/// All catalog-corpus groups with trivial center, order ≤ max_order, and
/// spectrum equal (as a set) to the target. Isomorphic aliases are
/// collapsed by the (order, class-size multiset, ω) signature, keeping
/// the first label in corpus order.
pub fn recognition_scan(target: &Spectrum, max_order: u64) -> Result<Vec<String>, EngineError> {
    let mut out: Vec<String> = Vec::new();
    let mut signatures: BTreeSet<(u64, Vec<(u64, u64)>, Vec<u64>)> = BTreeSet::new();
    for label in scan_corpus(max_order) {
        let g = catalog_group(&label)?;
        let order = g.order()?;
        if order > max_order || !g.has_trivial_center()? {
            continue;
        }
        let spectrum = g.spectrum()?;
        if !spectrum.same_sizes(target) {
            continue;
        }
        let classes: Vec<(u64, u64)> = {
            let mut mult: BTreeMap<u64, u64> = BTreeMap::new();
            for c in g.conjugacy_classes()? {
                *mult.entry(c.size).or_insert(0) += 1;
            }
            mult.into_iter().collect()
        };
        let omega: Vec<u64> = g.element_orders()?.into_iter().collect();
        if signatures.insert((order, classes, omega)) {
            out.push(label);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn spec(sizes: &[u64]) -> Spectrum {
        Spectrum::new(sizes.iter().copied(), "abstract")
    }

    #[test]
    fn derived_part_examples() {
        let n = spec(&[12, 15, 20]);
        assert_eq!(derived_part(&n, 2), 4);
        assert_eq!(derived_part(&n, 7), 1);
        let n6 = spec(&[40, 45, 72, 90]);
        assert_eq!(derived_part(&n6, 3), 9);
    }

    #[test]
    fn derived_order_examples() {
        let s3 = spec(&[2, 3]);
        assert_eq!(derived_order(&s3, None).value(), &BigUint::from(6u32));
        let a5 = spec(&[12, 15, 20]);
        assert_eq!(derived_order(&a5, None).value(), &BigUint::from(60u32));
        let a6 = spec(&[40, 45, 72, 90]);
        assert_eq!(derived_order(&a6, None).value(), &BigUint::from(360u32));
    }

    #[test]
    fn derived_order_with_restricted_primes() {
        let a5 = spec(&[12, 15, 20]);
        let pi: BTreeSet<u64> = [2, 5].into();
        assert_eq!(derived_order(&a5, Some(&pi)).value(), &BigUint::from(20u32));
    }

    #[test]
    fn pq_star_examples() {
        let a5 = spec(&[12, 15, 20]);
        assert!(pq_star_check(&a5, 3, 5).holds);
        let a6 = spec(&[40, 45, 72, 90]);
        let out = pq_star_check(&a6, 2, 5);
        assert!(!out.holds);
        assert_eq!(out.witness, Some(90));
        // the alpha_{p,q} = 1 case matches a derived part equal to 1
        let s3 = spec(&[2, 3]);
        assert!(pq_star_check(&s3, 2, 5).holds);
    }

    #[test]
    fn derived_order_monotone_under_union() {
        let small = spec(&[12, 15]);
        let big = spec(&[12, 15, 20]);
        let ds = derived_order(&small, None);
        let db = derived_order(&big, None);
        assert!(ds.divides(&db));
    }

    #[test]
    fn derived_parts_divide_the_group_order_parts() {
        for label in crate::groupengine::scan_corpus(720) {
            let g = catalog_group(&label).unwrap();
            let order = g.order().unwrap();
            let n = g.spectrum().unwrap();
            for p in g.prime_divisors().unwrap() {
                let mut order_part = 1u64;
                let mut rest = order;
                while rest % p == 0 {
                    rest /= p;
                    order_part *= p;
                }
                assert_eq!(
                    order_part % derived_part(&n, p),
                    0,
                    "{label}: derived {p}-part must divide |G|_{p}"
                );
            }
        }
    }

    #[test]
    fn recognition_scan_examples() {
        let s3 = catalog_group("sym(3)").unwrap().spectrum().unwrap();
        assert_eq!(recognition_scan(&s3, 200).unwrap(), vec!["sym(3)"]);
        let frob = Spectrum::new([2u64, 9], "abstract");
        assert_eq!(
            recognition_scan(&frob, 100).unwrap(),
            vec!["frob18a", "frob18b"]
        );
        let a5 = catalog_group("alt(5)").unwrap().spectrum().unwrap();
        assert_eq!(recognition_scan(&a5, 1000).unwrap(), vec!["alt(5)"]);
    }

    #[test]
    fn gorbig_vacuous_and_holding_cases() {
        let a5 = catalog_group("alt(5)").unwrap();
        assert!(matches!(
            gorbig_conclusion_check(&a5, 5, 3).unwrap(),
            GorbigOutcome::Vacuous(_)
        ));
        let c77 = catalog_group("cyclic(77)").unwrap();
        assert!(matches!(
            gorbig_conclusion_check(&c77, 11, 7).unwrap(),
            GorbigOutcome::Vacuous(_)
        ));
        let l13 = catalog_group("psl2(13)").unwrap();
        assert_eq!(
            gorbig_conclusion_check(&l13, 13, 7).unwrap(),
            GorbigOutcome::Holds
        );
    }

    #[test]
    fn spectrum_json_round_trip() {
        let g = catalog_group("alt(5)").unwrap();
        let s = g.spectrum().unwrap();
        let json = s.to_json();
        let back = Spectrum::from_json(&json).unwrap();
        assert_eq!(s, back);
    }
}
