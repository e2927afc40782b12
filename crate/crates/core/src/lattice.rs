//! Full subgroup lattice of a small group.
//!
//! Elements of `G` are indexed and a multiplication table is built once.
//! Subgroups are bitsets over element indices. The lattice is the join-closure
//! of the cyclic subgroups: every subgroup is generated by its cyclic
//! subgroups, so repeatedly joining known subgroups with cyclic seeds reaches
//! all of them.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;

use crate::engine::GroupEngine;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default bound on `|G|` for lattice construction.
pub const DEFAULT_LATTICE_CAP: usize = 2000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(len: usize) -> BitSet {
        BitSet(vec![0; len.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    fn is_subset(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// One subgroup in the lattice.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: BitSet,
    members: Vec<u32>,
    generators: Vec<u32>,
    /// Points fixed by every generator (hence by the whole subgroup), 0-based bitset.
    fixed: BitSet,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// `f(H)`: the number of points fixed by every element of `H`.
    pub fn fixed_point_count(&self) -> usize {
        self.fixed.count()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

/// All subgroups of `G`, including the trivial one.
pub struct SubgroupLattice {
    elements: Vec<Permutation>,
    identity: u32,
    subgroups: Vec<Subgroup>,
}

impl SubgroupLattice {
    pub fn build(engine: &GroupEngine, order_cap: usize) -> Result<SubgroupLattice> {
        let order = engine.order();
        if order > BigUint::from(order_cap) {
            return Err(Error::CapExceeded {
                order,
                cap: BigUint::from(order_cap),
            });
        }
        let elements: Vec<Permutation> = engine.elements(&BigUint::from(order_cap))?.collect();
        let n = elements.len();
        let degree = engine.degree();
        let index: HashMap<&Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g, i as u32))
            .collect();
        let identity = index[&engine.identity()];
        let table: Vec<u32> = elements
            .iter()
            .flat_map(|a| elements.iter().map(|b| index[&a.then(b)]))
            .collect();
        let mul = |a: u32, b: u32| table[a as usize * n + b as usize];

        let fixed_of: Vec<BitSet> = elements
            .iter()
            .map(|g| {
                let mut set = BitSet::new(degree);
                for p in 0..degree {
                    if g.apply(p) == p {
                        set.insert(p);
                    }
                }
                set
            })
            .collect();

        let mut trivial_members = BitSet::new(n);
        trivial_members.insert(identity as usize);
        let mut all_fixed = BitSet::new(degree);
        (0..degree).for_each(|p| all_fixed.insert(p));
        let trivial = Subgroup {
            elements: trivial_members,
            members: vec![identity],
            generators: Vec::new(),
            fixed: all_fixed,
        };

        // Dimino-style extension of `base` by one element via right cosets.
        let join = |base: &Subgroup, g: u32| -> Subgroup {
            let mut elements = base.elements.clone();
            let mut members = base.members.clone();
            let mut generators = base.generators.clone();
            generators.push(g);
            let mut reps = vec![identity];
            let mut next = 0;
            while next < reps.len() {
                let r = reps[next];
                next += 1;
                for &s in &generators {
                    let x = mul(r, s);
                    if elements.contains(x as usize) {
                        continue;
                    }
                    for &h in &base.members {
                        let y = mul(h, x);
                        elements.insert(y as usize);
                        members.push(y);
                    }
                    reps.push(x);
                }
            }
            members.sort_unstable();
            Subgroup {
                elements,
                members,
                generators,
                fixed: base.fixed.intersect(&fixed_of[g as usize]),
            }
        };

        let mut seen: HashMap<BitSet, usize> = HashMap::new();
        let mut subgroups = vec![trivial.clone()];
        seen.insert(trivial.elements.clone(), 0);
        let mut seeds: Vec<u32> = Vec::new();
        for g in 0..n as u32 {
            if g == identity {
                continue;
            }
            let cyclic = join(&trivial, g);
            if !seen.contains_key(&cyclic.elements) {
                seen.insert(cyclic.elements.clone(), subgroups.len());
                subgroups.push(cyclic);
                seeds.push(g);
            }
        }

        let mut queue: VecDeque<usize> = (1..subgroups.len()).collect();
        while let Some(h) = queue.pop_front() {
            for &g in &seeds {
                if subgroups[h].elements.contains(g as usize) {
                    continue;
                }
                let joined = join(&subgroups[h], g);
                if !seen.contains_key(&joined.elements) {
                    seen.insert(joined.elements.clone(), subgroups.len());
                    queue.push_back(subgroups.len());
                    subgroups.push(joined);
                }
            }
        }

        Ok(SubgroupLattice {
            elements,
            identity,
            subgroups,
        })
    }

    /// Every subgroup, the trivial one first.
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn members(&self, subgroup: &Subgroup) -> Vec<Permutation> {
        subgroup
            .members
            .iter()
            .map(|&i| self.elements[i as usize].clone())
            .collect()
    }

    pub fn generators(&self, subgroup: &Subgroup) -> Vec<Permutation> {
        if subgroup.generators.is_empty() {
            return vec![self.elements[self.identity as usize].clone()];
        }
        subgroup
            .generators
            .iter()
            .map(|&i| self.elements[i as usize].clone())
            .collect()
    }

    /// The lattice member whose element set is exactly `{g in G : pred(g)}`.
    pub fn find(&self, pred: impl Fn(&Permutation) -> bool) -> Option<&Subgroup> {
        let mut target = BitSet::new(self.elements.len());
        for (i, g) in self.elements.iter().enumerate() {
            if pred(g) {
                target.insert(i);
            }
        }
        self.subgroups.iter().find(|s| s.elements == target)
    }

    /// Subgroups `K` with `lower < K < upper` (strict on both sides).
    pub fn strictly_between<'a>(
        &'a self,
        lower: &'a Subgroup,
        upper: &'a Subgroup,
    ) -> impl Iterator<Item = &'a Subgroup> + 'a {
        self.subgroups.iter().filter(move |k| {
            k.order() > lower.order()
                && k.order() < upper.order()
                && lower.elements.is_subset(&k.elements)
                && k.elements.is_subset(&upper.elements)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{build_engine, closure_enumerate};
    use crate::parse_cycles;

    fn group(gens: &[&str], degree: usize) -> GroupEngine {
        let gens: Vec<_> = gens
            .iter()
            .map(|g| parse_cycles(g, degree).unwrap())
            .collect();
        build_engine(&gens).unwrap()
    }

    fn subgroup_count(engine: &GroupEngine) -> usize {
        SubgroupLattice::build(engine, DEFAULT_LATTICE_CAP)
            .unwrap()
            .len()
    }

    #[test]
    fn known_subgroup_counts() {
        // dihedral of order 8 has 10 subgroups, S4 has 30, A4 has 10, C6 has 4, S5 has 156
        assert_eq!(subgroup_count(&group(&["(1,2,3,4)", "(2,4)"], 4)), 10);
        assert_eq!(subgroup_count(&group(&["(1,2)", "(1,2,3,4)"], 4)), 30);
        assert_eq!(subgroup_count(&group(&["(1,2,3)", "(2,3,4)"], 4)), 10);
        assert_eq!(subgroup_count(&group(&["(1,2,3,4,5,6)"], 6)), 4);
        assert_eq!(subgroup_count(&group(&["(1,2)", "(1,2,3,4,5)"], 5)), 156);
        assert_eq!(subgroup_count(&group(&["()"], 3)), 1);
    }

    #[test]
    fn members_are_closed_subgroups() {
        let lattice = SubgroupLattice::build(&group(&["(1,2)", "(1,2,3,4)"], 4), 100).unwrap();
        for s in lattice.subgroups() {
            let closure = closure_enumerate(&lattice.generators(s), 100).unwrap();
            let members: std::collections::BTreeSet<_> = lattice.members(s).into_iter().collect();
            assert_eq!(closure, members);
            // order divides 24
            assert_eq!(24 % s.order(), 0);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let s5 = group(&["(1,2)", "(1,2,3,4,5)"], 5);
        assert!(matches!(
            SubgroupLattice::build(&s5, 100),
            Err(Error::CapExceeded { .. })
        ));
    }
}
