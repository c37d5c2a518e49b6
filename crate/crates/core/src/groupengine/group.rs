//! Concrete finite groups given by permutation generators.
//!
//! Construction is cheap; the element list is enumerated on first use and
//! cached. Enumeration and the class decomposition use deterministic
//! orderings throughout: elements sort lexicographically by image table,
//! classes sort by (representative order, size, representative rank).

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use super::perm::Perm;
use super::EngineError;
use crate::numtheory::factor_u64;
use crate::spectrumlab::Spectrum;

pub const DEFAULT_ELEMENT_CAP: usize = 2_000_000;

struct Enumerated {
    /// all elements, sorted lexicographically by image table
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
}

/// One conjugacy class: the representative is the lexicographically
/// minimal member, `members` are element indices in ascending order.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub rep_index: u32,
    pub rep_order: u64,
    pub size: u64,
    pub members: Vec<u32>,
}

pub struct PermGroup {
    name: String,
    degree: usize,
    generators: Vec<Perm>,
    cap: usize,
    enumerated: OnceLock<Result<Enumerated, EngineError>>,
    classes: OnceLock<Result<Vec<ConjugacyClass>, EngineError>>,
}

impl PermGroup {
    /// A group from generators; the identity is implied. All generators
    /// must share the degree.
    pub fn from_generators(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Perm>,
    ) -> Result<PermGroup, EngineError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(EngineError::InvalidPermutation(format!(
                    "generator degree {} does not match group degree {degree}",
                    g.degree()
                )));
            }
        }
        Ok(PermGroup {
            name: name.into(),
            degree,
            generators,
            cap: DEFAULT_ELEMENT_CAP,
            enumerated: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    pub fn with_cap(mut self, cap: usize) -> PermGroup {
        self.cap = cap;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    fn enumerated(&self) -> Result<&Enumerated, EngineError> {
        self.enumerated
            .get_or_init(|| {
                let mut seen: std::collections::HashSet<Perm> = std::collections::HashSet::new();
                let identity = Perm::identity(self.degree);
                seen.insert(identity.clone());
                let mut queue = vec![identity];
                let mut head = 0;
                while head < queue.len() {
                    let current = queue[head].clone();
                    head += 1;
                    for g in &self.generators {
                        let next = current.compose(g);
                        if !seen.contains(&next) {
                            if queue.len() >= self.cap {
                                return Err(EngineError::CapExceeded {
                                    group: self.name.clone(),
                                    cap: self.cap,
                                });
                            }
                            seen.insert(next.clone());
                            queue.push(next);
                        }
                    }
                }
                drop(seen);
                queue.sort();
                let index: HashMap<Perm, u32> = queue
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (p.clone(), i as u32))
                    .collect();
                Ok(Enumerated {
                    elements: queue,
                    index,
                })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn order(&self) -> Result<u64, EngineError> {
        Ok(self.enumerated()?.elements.len() as u64)
    }

    pub fn elements(&self) -> Result<&[Perm], EngineError> {
        Ok(&self.enumerated()?.elements)
    }

    pub fn contains(&self, g: &Perm) -> Result<bool, EngineError> {
        if g.degree() != self.degree {
            return Ok(false);
        }
        Ok(self.enumerated()?.index.contains_key(g))
    }

    pub fn index_of(&self, g: &Perm) -> Result<Option<u32>, EngineError> {
        Ok(self.enumerated()?.index.get(g).copied())
    }

    pub fn element(&self, index: u32) -> Result<&Perm, EngineError> {
        Ok(&self.enumerated()?.elements[index as usize])
    }

    /// Complete conjugacy-class decomposition, deterministically ordered.
    pub fn conjugacy_classes(&self) -> Result<&[ConjugacyClass], EngineError> {
        self.classes
            .get_or_init(|| {
                let en = self.enumerated()?;
                let n = en.elements.len();
                let mut assigned = vec![false; n];
                let mut classes = Vec::new();
                for start in 0..n {
                    if assigned[start] {
                        continue;
                    }
                    // orbit closure under conjugation by the generators
                    let mut members = vec![start as u32];
                    assigned[start] = true;
                    let mut head = 0;
                    while head < members.len() {
                        let x = en.elements[members[head] as usize].clone();
                        head += 1;
                        for g in &self.generators {
                            let y = x.conjugate_by(g);
                            let yi = en.index[&y];
                            if !assigned[yi as usize] {
                                assigned[yi as usize] = true;
                                members.push(yi);
                            }
                        }
                    }
                    members.sort();
                    classes.push(ConjugacyClass {
                        rep_index: members[0],
                        rep_order: en.elements[members[0] as usize].order(),
                        size: members.len() as u64,
                        members,
                    });
                }
                let total: u64 = classes.iter().map(|c| c.size).sum();
                debug_assert_eq!(total, n as u64);
                debug_assert!(classes.iter().all(|c| n as u64 % c.size == 0));
                classes.sort_by_key(|c| (c.rep_order, c.size, c.rep_index));
                Ok(classes)
            })
            .as_ref()
            .map_err(Clone::clone)
            .map(|v| v.as_slice())
    }

    /// N(G): the set of conjugacy-class sizes with 1 removed;
    /// multiplicities are retained on the side.
    pub fn spectrum(&self) -> Result<Spectrum, EngineError> {
        let classes = self.conjugacy_classes()?;
        let mut mult = std::collections::BTreeMap::new();
        for c in classes {
            if c.size > 1 {
                *mult.entry(c.size).or_insert(0u64) += 1;
            }
        }
        Ok(Spectrum::with_multiplicities(mult, self.name.clone()))
    }

    /// ω(G): the set of element orders.
    pub fn element_orders(&self) -> Result<BTreeSet<u64>, EngineError> {
        Ok(self.enumerated()?.elements.iter().map(Perm::order).collect())
    }

    /// π(G): the primes dividing the order.
    pub fn prime_divisors(&self) -> Result<BTreeSet<u64>, EngineError> {
        let order = self.order()?;
        Ok(factor_u64(order)
            .prime_support()
            .iter()
            .map(|p| u64::try_from(p).expect("group order fits u64"))
            .collect())
    }

    /// The order of the center.
    pub fn center_order(&self) -> Result<u64, EngineError> {
        let en = self.enumerated()?;
        Ok(en
            .elements
            .iter()
            .filter(|x| self.generators.iter().all(|g| x.commutes_with(g)))
            .count() as u64)
    }

    pub fn has_trivial_center(&self) -> Result<bool, EngineError> {
        Ok(self.center_order()? == 1)
    }

    /// The centralizer of g as a subgroup (on the same points).
    pub fn centralizer(&self, g: &Perm) -> Result<PermGroup, EngineError> {
        let en = self.enumerated()?;
        if !en.index.contains_key(g) {
            return Err(EngineError::NotInGroup(format!("{g}")));
        }
        let members: Vec<Perm> = en
            .elements
            .iter()
            .filter(|x| x.commutes_with(g))
            .cloned()
            .collect();
        self.subgroup_from_elements(format!("C_{}({g})", self.name), members)
    }

    /// Indices of all elements commuting with g.
    pub fn centralizer_indices(&self, g: &Perm) -> Result<Vec<u32>, EngineError> {
        let en = self.enumerated()?;
        Ok(en
            .elements
            .iter()
            .enumerate()
            .filter(|(_, x)| x.commutes_with(g))
            .map(|(i, _)| i as u32)
            .collect())
    }

    /// Builds a subgroup object from a closed element list, reducing it to
    /// a small generating set by greedy closure.
    pub fn subgroup_from_elements(
        &self,
        name: impl Into<String>,
        elements: Vec<Perm>,
    ) -> Result<PermGroup, EngineError> {
        let target = elements.len();
        let mut gens: Vec<Perm> = Vec::new();
        let mut have: BTreeSet<Perm> = [Perm::identity(self.degree)].into();
        for x in &elements {
            if have.contains(x) {
                continue;
            }
            gens.push(x.clone());
            have = close_under(self.degree, &gens).into_iter().collect();
            if have.len() == target {
                break;
            }
        }
        let sub = PermGroup::from_generators(name, self.degree, gens)?.with_cap(self.cap);
        debug_assert_eq!(sub.order().unwrap() as usize, target);
        Ok(sub)
    }

    /// A Sylow p-subgroup, built deterministically: start from the cyclic
    /// group on a lexicographically-first p-element of maximal p-power
    /// order, then extend inside normalizers until the full p-part is
    /// reached.
    pub fn sylow(&self, p: u64) -> Result<PermGroup, EngineError> {
        let order = self.order()?;
        if order % p != 0 {
            return Err(EngineError::Domain(format!(
                "{p} does not divide the group order {order}"
            )));
        }
        let mut p_part: u64 = 1;
        let mut rest = order;
        while rest % p == 0 {
            rest /= p;
            p_part *= p;
        }
        let en = self.enumerated()?;
        // lexicographically-first p-element of maximal order
        let mut best: Option<(u64, &Perm)> = None;
        for x in &en.elements {
            let o = x.order();
            if o > 1 && is_p_power(o, p) {
                match best {
                    Some((bo, _)) if bo >= o => {}
                    _ => best = Some((o, x)),
                }
            }
        }
        let (_, seed) = best.expect("p divides the order, so a p-element exists");
        let mut current: Vec<Perm> = cyclic_closure(seed);
        let mut gens: Vec<Perm> = vec![seed.clone()];
        while (current.len() as u64) < p_part {
            let member: BTreeSet<&Perm> = current.iter().collect();
            // find the first p-element of the normalizer outside the group
            let mut extended = false;
            for y in &en.elements {
                if member.contains(y) {
                    continue;
                }
                if !is_p_power(y.order(), p) || y.is_identity() {
                    continue;
                }
                let y_inv = y.inverse();
                let normalizes = gens
                    .iter()
                    .all(|s| member.contains(&y_inv.compose(s).compose(y)));
                if !normalizes {
                    continue;
                }
                gens.push(y.clone());
                current = close_under(self.degree, &gens);
                extended = true;
                break;
            }
            assert!(
                extended,
                "a proper p-subgroup always extends inside its normalizer"
            );
        }
        let name = format!("sylow_{p}({})", self.name);
        let sub = PermGroup::from_generators(name, self.degree, gens)?.with_cap(self.cap);
        assert_eq!(sub.order()?, p_part, "sylow construction reached the full p-part");
        Ok(sub)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool, EngineError> {
        if self.degree != other.degree {
            return Ok(false);
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> Result<bool, EngineError> {
        if !self.is_subgroup_of(other)? {
            return Ok(false);
        }
        for g in other.generators() {
            let g_inv = g.inverse();
            for k in &self.generators {
                if !self.contains(&g_inv.compose(k).compose(g))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The quotient G/K realized by the right-multiplication action of G
    /// on the cosets Kg, re-enumerated as a permutation group.
    pub fn quotient(&self, k: &PermGroup) -> Result<PermGroup, EngineError> {
        Ok(self.quotient_with_map(k)?.group)
    }

    /// Quotient plus the data needed to push elements forward.
    pub fn quotient_with_map(&self, k: &PermGroup) -> Result<QuotientMap, EngineError> {
        if !k.is_subgroup_of(self)? {
            return Err(EngineError::NotSubgroup(format!(
                "{} is not a subgroup of {}",
                k.name, self.name
            )));
        }
        if !k.is_normal_in(self)? {
            return Err(EngineError::NotNormal(format!(
                "{} is not normal in {}",
                k.name, self.name
            )));
        }
        let en = self.enumerated()?;
        let n = en.elements.len();
        let k_elements = k.elements()?;
        // coset of index i: all indices of k*x, canonical representative
        // is the minimal index; cosets are numbered by ascending canonical
        // representative because the scan goes in element order
        let mut coset_of: Vec<u32> = vec![u32::MAX; n];
        let mut coset_count: u32 = 0;
        for i in 0..n {
            if coset_of[i] != u32::MAX {
                continue;
            }
            let x = &en.elements[i];
            for kk in k_elements {
                let kx = kk.compose(x);
                coset_of[en.index[&kx] as usize] = coset_count;
            }
            coset_count += 1;
        }
        let degree = coset_count as usize;
        // canonical (minimal) representative index per coset
        let mut rep_of_coset: Vec<u32> = vec![u32::MAX; degree];
        for i in 0..n {
            let c = coset_of[i] as usize;
            if rep_of_coset[c] == u32::MAX {
                rep_of_coset[c] = i as u32;
            }
        }
        let act = |g: &Perm| -> Result<Perm, EngineError> {
            let mut images = vec![0u16; degree];
            for c in 0..degree {
                let rep = &en.elements[rep_of_coset[c] as usize];
                let moved = rep.compose(g);
                images[c] = coset_of[en.index[&moved] as usize] as u16;
            }
            Perm::from_images(images)
        };
        let gens: Vec<Perm> = self
            .generators
            .iter()
            .map(&act)
            .collect::<Result<_, _>>()?;
        let group = PermGroup::from_generators(
            format!("{}/{}", self.name, k.name),
            degree,
            gens,
        )?
        .with_cap(self.cap);
        let expected = en.elements.len() as u64 / k_elements.len() as u64;
        let actual = group.order()?;
        assert_eq!(actual, expected, "coset action realizes the quotient");
        Ok(QuotientMap {
            group,
            coset_of,
            rep_of_coset,
        })
    }

    /// The direct product, acting on the disjoint union of the points.
    pub fn direct_product(&self, other: &PermGroup) -> Result<PermGroup, EngineError> {
        let degree = self.degree + other.degree;
        let mut gens = Vec::new();
        for g in &self.generators {
            let mut images: Vec<u16> = (0..degree as u16).collect();
            for x in 0..self.degree {
                images[x] = g.apply(x as u16);
            }
            gens.push(Perm::from_images(images)?);
        }
        for g in &other.generators {
            let mut images: Vec<u16> = (0..degree as u16).collect();
            for x in 0..other.degree {
                images[self.degree + x] = self.degree as u16 + g.apply(x as u16);
            }
            gens.push(Perm::from_images(images)?);
        }
        PermGroup::from_generators(
            format!("{}x{}", self.name, other.name),
            degree,
            gens,
        )
        .map(|g| g.with_cap(self.cap))
    }
}

/// The quotient group together with the projection data.
pub struct QuotientMap {
    pub group: PermGroup,
    /// element index in G -> coset number
    pub coset_of: Vec<u32>,
    /// coset number -> canonical (minimal) element index in G
    pub rep_of_coset: Vec<u32>,
}

impl QuotientMap {
    /// Pushes an element of G forward to its image in G/K.
    pub fn image(&self, g_parent: &PermGroup, x: &Perm) -> Result<Perm, EngineError> {
        if g_parent.index_of(x)?.is_none() {
            return Err(EngineError::NotInGroup(format!("{x}")));
        }
        let degree = self.rep_of_coset.len();
        let mut images = vec![0u16; degree];
        for c in 0..degree {
            let rep = g_parent.element(self.rep_of_coset[c])?;
            let moved = rep.compose(x);
            let idx = g_parent
                .index_of(&moved)?
                .expect("product of members stays in the group");
            images[c] = self.coset_of[idx as usize] as u16;
        }
        Ok(Perm::from_images(images).expect("coset action is a permutation"))
    }
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

fn cyclic_closure(g: &Perm) -> Vec<Perm> {
    let mut out = vec![Perm::identity(g.degree())];
    let mut cur = g.clone();
    while !cur.is_identity() {
        out.push(cur.clone());
        cur = cur.compose(g);
    }
    out
}

fn close_under(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let mut have: BTreeSet<Perm> = [Perm::identity(degree)].into();
    let mut stack: Vec<Perm> = vec![Perm::identity(degree)];
    while let Some(cur) = stack.pop() {
        for g in gens {
            let next = cur.compose(g);
            if have.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    have.into_iter().collect()
}
