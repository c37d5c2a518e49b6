//! Permutations of {0..degree-1} in image-table form.

use std::fmt;

use super::EngineError;

/// A permutation given by its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u16]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<u16>) -> Result<Perm, EngineError> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(EngineError::InvalidPermutation(
                "degree exceeds 65535".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if (x as usize) >= n || seen[x as usize] {
                return Err(EngineError::InvalidPermutation(format!(
                    "image table {images:?} is not a bijection"
                )));
            }
            seen[x as usize] = true;
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u16>]) -> Result<Perm, EngineError> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for cycle in cycles {
            for k in 0..cycle.len() {
                let from = cycle[k] as usize;
                let to = cycle[(k + 1) % cycle.len()];
                if from >= degree || (to as usize) >= degree {
                    return Err(EngineError::InvalidPermutation(format!(
                        "cycle point out of range for degree {degree}"
                    )));
                }
                images[from] = to;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: u16) -> u16 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// self ∘ other: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    /// h^-1 ∘ self ∘ h.
    pub fn conjugate_by(&self, h: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), h.degree());
        let mut images = vec![0u16; self.degree()];
        for x in 0..self.degree() {
            images[h.apply(x as u16) as usize] = h.apply(self.apply(x as u16));
        }
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        (0..self.degree() as u16)
            .all(|x| self.apply(other.apply(x)) == other.apply(self.apply(x)))
    }

    /// Multiplicative order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord: u64 = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x as u16) as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    pub fn pow(&self, k: u32) -> Perm {
        let mut acc = Perm::identity(self.degree());
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    pub fn cycles(&self) -> Vec<Vec<u16>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u16);
                x = self.apply(x as u16) as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

fn write_cycles(p: &Perm, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return write!(f, "()");
    }
    for cycle in cycles {
        write!(f, "(")?;
        for (k, x) in cycle.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")?;
    }
    Ok(())
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cycles(self, f)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_cycles(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = Perm::from_images(vec![0, 2, 1]).unwrap();
        assert_eq!(a.compose(&a), Perm::identity(3));
        let b = Perm::from_images(vec![0, 2, 1, 4, 7, 8, 3, 5, 6]).unwrap();
        assert_eq!(b.compose(&b.inverse()), Perm::identity(9));
    }

    #[test]
    fn from_cycles_and_order() {
        let c = Perm::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(c.order(), 6);
        assert_eq!(c.apply(2), 0);
        assert_eq!(c.apply(4), 3);
        assert_eq!(format!("{c}"), "(0 1 2)(3 4)");
        assert_eq!(format!("{}", Perm::identity(4)), "()");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3]).is_err());
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let g = Perm::from_cycles(4, &[vec![0, 1]]).unwrap();
        let h = Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let c = g.conjugate_by(&h);
        assert_eq!(c, Perm::from_cycles(4, &[vec![2, 3]]).unwrap());
    }
}
