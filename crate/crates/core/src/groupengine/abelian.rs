//! Finite abelian groups with a coprime automorphism action, and the
//! fixed-points × commutator decomposition.

use std::collections::BTreeSet;

use super::EngineError;

/// A finite abelian group ⊕ Z_{d_j} together with automorphisms given by
/// integer matrices acting on the coordinate tuples.
#[derive(Clone, Debug)]
pub struct AbelianGroupWithAction {
    orders: Vec<u64>,
    action_gens: Vec<Vec<Vec<u64>>>,
}

/// A subgroup given by its sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianSubgroup {
    pub elements: Vec<Vec<u64>>,
}

impl AbelianSubgroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }
}

impl AbelianGroupWithAction {
    /// Validates that every matrix is a well-defined automorphism:
    /// column j must map the relation d_j·e_j to zero, and the induced
    /// map must be a bijection.
    pub fn new(
        orders: Vec<u64>,
        action_gens: Vec<Vec<Vec<u64>>>,
    ) -> Result<AbelianGroupWithAction, EngineError> {
        if orders.is_empty() || orders.iter().any(|&d| d == 0) {
            return Err(EngineError::Domain(
                "cyclic factor orders must be positive".into(),
            ));
        }
        let k = orders.len();
        let group_order: u64 = orders.iter().product();
        if group_order > super::group::DEFAULT_ELEMENT_CAP as u64 {
            return Err(EngineError::CapExceeded {
                group: "abelian group".into(),
                cap: super::group::DEFAULT_ELEMENT_CAP,
            });
        }
        for m in &action_gens {
            if m.len() != k || m.iter().any(|row| row.len() != k) {
                return Err(EngineError::Domain(format!(
                    "action matrices must be {k}x{k}"
                )));
            }
            for i in 0..k {
                for j in 0..k {
                    if (m[i][j] * orders[j]) % orders[i] != 0 {
                        return Err(EngineError::Domain(format!(
                            "matrix entry ({i},{j}) does not respect the factor orders"
                        )));
                    }
                }
            }
        }
        let g = AbelianGroupWithAction {
            orders,
            action_gens,
        };
        for m in &g.action_gens {
            let mut images = BTreeSet::new();
            for x in g.elements() {
                images.insert(g.apply(m, &x));
            }
            if images.len() as u64 != group_order {
                return Err(EngineError::Domain(
                    "an action generator is not a bijection".into(),
                ));
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn factor_orders(&self) -> &[u64] {
        &self.orders
    }

    fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let k = self.orders.len();
        let total = self.order();
        (0..total).map(move |mut idx| {
            let mut x = vec![0u64; k];
            for j in 0..k {
                x[j] = idx % self.orders[j];
                idx /= self.orders[j];
            }
            x
        })
    }

    fn apply(&self, m: &[Vec<u64>], x: &[u64]) -> Vec<u64> {
        (0..self.orders.len())
            .map(|i| {
                let mut acc: u64 = 0;
                for (j, &xj) in x.iter().enumerate() {
                    acc = (acc + m[i][j] % self.orders[i] * (xj % self.orders[i]))
                        % self.orders[i];
                }
                acc
            })
            .collect()
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((x, y), d)| (x + y) % d)
            .collect()
    }

    fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.orders).map(|(x, d)| (d - x) % d).collect()
    }

    /// The order of the group generated by the action matrices.
    pub fn action_group_order(&self) -> u64 {
        let k = self.orders.len();
        let identity: Vec<Vec<u64>> = (0..k)
            .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
            .collect();
        let normalize = |m: &[Vec<u64>]| -> Vec<Vec<u64>> {
            (0..k)
                .map(|i| (0..k).map(|j| m[i][j] % self.orders[i]).collect())
                .collect()
        };
        let matmul = |a: &[Vec<u64>], b: &[Vec<u64>]| -> Vec<Vec<u64>> {
            (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| {
                            let mut acc = 0u64;
                            for l in 0..k {
                                acc = (acc + a[i][l] % self.orders[i] * (b[l][j] % self.orders[i]))
                                    % self.orders[i];
                            }
                            acc
                        })
                        .collect()
                })
                .collect()
        };
        let mut have: BTreeSet<Vec<Vec<u64>>> = [normalize(&identity)].into();
        let mut stack: Vec<Vec<Vec<u64>>> = vec![normalize(&identity)];
        while let Some(cur) = stack.pop() {
            for g in &self.action_gens {
                let next = normalize(&matmul(&cur, g));
                if have.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
        have.len() as u64
    }

    /// Splits the group as fixed points × commutator under the action,
    /// requiring the action group order to be coprime to the group order.
    pub fn coprime_decomposition(
        &self,
    ) -> Result<(AbelianSubgroup, AbelianSubgroup), EngineError> {
        let a_order = self.action_group_order();
        let g_order = self.order();
        if num_integer::gcd(a_order, g_order) != 1 {
            return Err(EngineError::Domain(format!(
                "action group order {a_order} is not coprime to the group order {g_order}"
            )));
        }
        let mut fixed = Vec::new();
        for x in self.elements() {
            if self
                .action_gens
                .iter()
                .all(|m| self.apply(m, &x) == x)
            {
                fixed.push(x);
            }
        }
        // [G, A] is the additive closure of the differences a(g) - g
        let zero = vec![0u64; self.orders.len()];
        let mut seeds: BTreeSet<Vec<u64>> = BTreeSet::new();
        for x in self.elements() {
            for m in &self.action_gens {
                seeds.insert(self.add(&self.apply(m, &x), &self.neg(&x)));
            }
        }
        let mut commutator: BTreeSet<Vec<u64>> = [zero.clone()].into();
        let mut stack: Vec<Vec<u64>> = vec![zero];
        while let Some(cur) = stack.pop() {
            for s in &seeds {
                let next = self.add(&cur, s);
                if commutator.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
        fixed.sort();
        let commutator: Vec<Vec<u64>> = commutator.into_iter().collect();
        let fixed_sub = AbelianSubgroup { elements: fixed };
        let comm_sub = AbelianSubgroup {
            elements: commutator,
        };
        // direct-product certificate
        assert_eq!(
            fixed_sub.order() * comm_sub.order(),
            g_order,
            "decomposition orders must multiply to |G|"
        );
        let comm_set: BTreeSet<&Vec<u64>> = comm_sub.elements.iter().collect();
        let trivial_intersection = fixed_sub
            .elements
            .iter()
            .filter(|x| comm_set.contains(x))
            .count();
        assert_eq!(trivial_intersection, 1, "intersection must be trivial");
        Ok((fixed_sub, comm_sub))
    }
}

/// Curated instances with coprime actions for the decomposition sweeps.
pub fn gore_fixtures() -> Vec<AbelianGroupWithAction> {
    let mk = |orders: Vec<u64>, gens: Vec<Vec<Vec<u64>>>| {
        AbelianGroupWithAction::new(orders, gens).expect("fixture must validate")
    };
    vec![
        mk(vec![7], vec![vec![vec![2]]]),            // order-3 action
        mk(vec![7], vec![vec![vec![3]]]),            // order-6 action
        mk(vec![5], vec![vec![vec![2]]]),            // order-4 action
        mk(vec![11], vec![vec![vec![3]]]),           // order-5 action
        mk(vec![13], vec![vec![vec![2]]]),           // order-12 action
        mk(vec![13], vec![vec![vec![3]]]),           // order-3 action
        mk(vec![13], vec![vec![vec![5]]]),           // order-4 action
        mk(vec![15], vec![vec![vec![2]]]),           // order-4 action
        mk(vec![9], vec![vec![vec![8]]]),            // inversion
        mk(vec![27], vec![vec![vec![26]]]),          // inversion
        mk(vec![25], vec![vec![vec![7]]]),           // order-4 action
        mk(vec![31], vec![vec![vec![2]]]),           // order-5 action
        mk(vec![5], vec![vec![vec![1]]]),            // trivial action
        mk(vec![3, 3], vec![vec![vec![0, 1], vec![1, 0]]]), // swap
        mk(vec![3, 3], vec![vec![vec![0, 1], vec![1, 1]]]), // order-8 action
        mk(vec![5, 5], vec![vec![vec![0, 1], vec![1, 0]]]), // swap
        mk(vec![7, 7], vec![vec![vec![2, 0], vec![0, 2]]]), // scalar
        mk(vec![7, 7], vec![vec![vec![0, 1], vec![6, 0]]]), // order-4 action
        mk(vec![11, 11], vec![vec![vec![0, 1], vec![1, 0]]]), // swap
        mk(
            vec![3, 9],
            vec![vec![vec![2, 0], vec![0, 8]]],
        ), // inversion on C3 x C9
        mk(
            vec![2, 2, 2],
            vec![vec![
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![1, 0, 0],
            ]],
        ), // coordinate 3-cycle on the Klein cube
        mk(
            vec![2, 2],
            vec![vec![vec![0, 1], vec![1, 1]]],
        ), // order-3 action on the Klein group
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic7_times2() {
        let g = AbelianGroupWithAction::new(vec![7], vec![vec![vec![2]]]).unwrap();
        assert_eq!(g.action_group_order(), 3);
        let (fixed, comm) = g.coprime_decomposition().unwrap();
        assert_eq!(fixed.order(), 1);
        assert_eq!(comm.order(), 7);
    }

    #[test]
    fn swap_on_c3_squared() {
        let g =
            AbelianGroupWithAction::new(vec![3, 3], vec![vec![vec![0, 1], vec![1, 0]]]).unwrap();
        assert_eq!(g.action_group_order(), 2);
        let (fixed, comm) = g.coprime_decomposition().unwrap();
        // fixed points are the diagonal, commutator the antidiagonal
        assert_eq!(fixed.order(), 3);
        assert!(fixed.elements.contains(&vec![1, 1]));
        assert_eq!(comm.order(), 3);
        assert!(comm.elements.contains(&vec![1, 2]));
    }

    #[test]
    fn trivial_action_fixes_everything() {
        let g = AbelianGroupWithAction::new(vec![12], vec![vec![vec![1]]]).unwrap();
        let (fixed, comm) = g.coprime_decomposition().unwrap();
        assert_eq!(fixed.order(), 12);
        assert_eq!(comm.order(), 1);
    }

    #[test]
    fn non_coprime_action_rejected() {
        // inversion on C4: action order 2, group order 4
        let g = AbelianGroupWithAction::new(vec![4], vec![vec![vec![3]]]).unwrap();
        assert!(g.coprime_decomposition().is_err());
        // multiplication by 2 mod 9 has order 6, gcd(6, 9) = 3
        let g = AbelianGroupWithAction::new(vec![9], vec![vec![vec![2]]]).unwrap();
        assert!(g.coprime_decomposition().is_err());
    }

    #[test]
    fn malformed_matrices_rejected() {
        // entry does not respect the relation lattice: C2 x C4 with a map
        // sending the order-2 generator to an order-4 element
        assert!(AbelianGroupWithAction::new(
            vec![2, 4],
            vec![vec![vec![1, 0], vec![1, 1]]]
        )
        .is_err());
        assert!(AbelianGroupWithAction::new(vec![6], vec![vec![vec![2]]]).is_err()); // not bijective
    }

    #[test]
    fn all_fixtures_decompose() {
        for (k, g) in gore_fixtures().iter().enumerate() {
            let (fixed, comm) = g.coprime_decomposition().unwrap();
            assert_eq!(
                fixed.order() * comm.order(),
                g.order(),
                "fixture {k}"
            );
        }
        assert!(gore_fixtures().len() >= 20);
    }
}
