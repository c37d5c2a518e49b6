//! Concrete finite groups as permutation groups: element enumeration,
//! conjugacy classes and class-size spectra, element orders and prime
//! graphs, centralizers, Sylow subgroups, quotients, and coprime-action
//! decompositions.
//!
//! Construction and first enumeration fill internal caches behind a
//! `OnceLock`, so shared references stay safe; afterwards all queries are
//! read-only.

mod abelian;
mod catalog;
mod field;
mod group;
mod perm;

use std::collections::BTreeSet;

use thiserror::Error;

pub use abelian::{gore_fixtures, AbelianGroupWithAction, AbelianSubgroup};
pub use catalog::{
    catalog_group, catalog_normal_pair, composition_chains, normal_pair_labels, predicted_order,
    scan_corpus,
};
pub use group::{ConjugacyClass, PermGroup, QuotientMap, DEFAULT_ELEMENT_CAP};
pub use perm::Perm;

#[derive(Debug, Error, Clone)]
pub enum EngineError {
    #[error("unknown catalog group: {0}")]
    UnknownGroup(String),
    #[error("element cap exceeded for {group} (cap {cap})")]
    CapExceeded { group: String, cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("element not in group: {0}")]
    NotInGroup(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("not a normal subgroup: {0}")]
    NotNormal(String),
    #[error("domain error: {0}")]
    Domain(String),
}

/// The prime graph GK(G): vertices are the primes dividing |G|, with an
/// edge {p, q} exactly when G has an element of order pq.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeGraph {
    pub vertices: BTreeSet<u64>,
    pub edges: BTreeSet<(u64, u64)>,
}

impl PrimeGraph {
    /// Stable DOT rendering: vertices ascending, edges sorted as strings.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph GK {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        let mut edge_strings: Vec<String> = self
            .edges
            .iter()
            .map(|(p, q)| format!("  \"{p}\" -- \"{q}\";\n"))
            .collect();
        edge_strings.sort();
        for e in edge_strings {
            out.push_str(&e);
        }
        out.push_str("}\n");
        out
    }
}

/// Computes GK(G) from the element orders.
pub fn prime_graph(g: &PermGroup) -> Result<PrimeGraph, EngineError> {
    let vertices = g.prime_divisors()?;
    let orders = g.element_orders()?;
    let mut edges = BTreeSet::new();
    let vs: Vec<u64> = vertices.iter().copied().collect();
    for (i, &p) in vs.iter().enumerate() {
        for &q in &vs[i + 1..] {
            if orders.contains(&(p * q)) {
                edges.insert((p, q));
            }
        }
    }
    Ok(PrimeGraph { vertices, edges })
}
