//! Fixed-point spectra, the moment sequence `F_k(G) = |G|⁻¹ Σ f(g)^k`, and
//! the Blichfeldt/Maillet divisibility checks.
//!
//! All arithmetic is exact. A moment whose numerator is not divisible by
//! `|G|` is reported as [`Error::NonIntegral`] and never rounded.

use std::collections::{BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::engine::GroupEngine;
use crate::error::{Error, Result};
use crate::lattice::{SubgroupLattice, DEFAULT_LATTICE_CAP};
use crate::perm::Permutation;
use crate::BigCount;

/// Which non-trivial elements (or subgroups) contribute to a spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filter {
    AllNontrivialElements,
    PrimePowerOrder,
    PrimeOrder,
    AllNontrivialSubgroups,
}

impl Filter {
    pub const ELEMENT_FILTERS: [Filter; 3] = [
        Filter::AllNontrivialElements,
        Filter::PrimePowerOrder,
        Filter::PrimeOrder,
    ];

    fn admits(self, g: &Permutation) -> bool {
        let kind = g.order_kind();
        match self {
            Filter::AllNontrivialElements | Filter::AllNontrivialSubgroups => !g.is_identity(),
            Filter::PrimePowerOrder => kind.is_prime_power(),
            Filter::PrimeOrder => kind.is_prime(),
        }
    }
}

/// Sorted, duplicate-free fixed-point counts `{f_1, …, f_r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub degree: usize,
    pub filter: Filter,
    pub values: Vec<usize>,
}

impl Spectrum {
    pub fn is_subset_of(&self, other: &Spectrum) -> bool {
        self.values
            .iter()
            .all(|v| other.values.binary_search(v).is_ok())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub degree: usize,
    pub spectrum: Spectrum,
    /// `(n - f_1) … (n - f_r)`.
    pub product: BigCount,
    pub group_order: BigCount,
    pub divides: bool,
    /// `product / |G|` when the division is exact.
    pub quotient: Option<BigCount>,
    pub is_sharp: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentValue {
    pub k: u32,
    pub value: BigCount,
}

/// Fixed-point spectrum of the elements admitted by `filter`. The subgroup
/// filter is delegated to [`maillet_spectrum`] with the default lattice cap.
pub fn fixed_point_spectrum(engine: &GroupEngine, filter: Filter) -> Result<Spectrum> {
    if filter == Filter::AllNontrivialSubgroups {
        return maillet_spectrum(engine, DEFAULT_LATTICE_CAP);
    }
    let values = engine.fold_elements(
        BTreeSet::new,
        |mut acc, g| {
            if filter.admits(g) {
                acc.insert(g.fixed_point_count());
            }
            acc
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    Ok(Spectrum {
        degree: engine.degree(),
        filter,
        values: values.into_iter().collect(),
    })
}

/// `(n - f_1) … (n - f_r)`; the empty product is 1.
pub fn blichfeldt_product(degree: usize, spectrum: &Spectrum) -> BigCount {
    spectrum
        .values
        .iter()
        .fold(BigUint::one(), |acc, &f| acc * BigUint::from(degree - f))
}

/// Divisibility verdict of `|G|` against the product of a given spectrum.
pub fn divisibility_report(engine: &GroupEngine, spectrum: Spectrum) -> DivisibilityReport {
    let degree = engine.degree();
    let product = blichfeldt_product(degree, &spectrum);
    let group_order = engine.order();
    let (quotient, remainder) = product.div_rem(&group_order);
    let divides = remainder.is_zero();
    let is_sharp = divides && quotient.is_one();
    DivisibilityReport {
        degree,
        spectrum,
        product,
        group_order,
        divides,
        quotient: divides.then_some(quotient),
        is_sharp,
    }
}

pub fn blichfeldt_check(engine: &GroupEngine, filter: Filter) -> Result<DivisibilityReport> {
    Ok(divisibility_report(
        engine,
        fixed_point_spectrum(engine, filter)?,
    ))
}

/// Number of elements with each fixed-point count, indexed by the count.
pub fn fixed_point_histogram(engine: &GroupEngine) -> Result<Vec<u64>> {
    let size = engine.degree() + 1;
    engine.fold_elements(
        || vec![0u64; size],
        |mut acc, g| {
            acc[g.fixed_point_count()] += 1;
            acc
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )
}

fn exact_quotient(numerator: BigCount, order: &BigCount) -> Result<BigCount> {
    let (q, r) = numerator.div_rem(order);
    if !r.is_zero() {
        return Err(Error::NonIntegral {
            numerator: BigInt::from(numerator),
            order: order.clone(),
        });
    }
    Ok(q)
}

fn moment_from_histogram(histogram: &[u64], k: u32, order: &BigCount) -> Result<MomentValue> {
    let numerator = histogram
        .iter()
        .enumerate()
        .fold(BigUint::zero(), |acc, (f, &count)| {
            acc + BigUint::from(count) * Pow::pow(BigUint::from(f), k)
        });
    Ok(MomentValue {
        k,
        value: exact_quotient(numerator, order)?,
    })
}

/// `F_k(G)` by summing `f(g)^k` over every element.
pub fn moment_direct(engine: &GroupEngine, k: u32) -> Result<MomentValue> {
    let histogram = fixed_point_histogram(engine)?;
    moment_from_histogram(&histogram, k, &engine.order())
}

/// `F_0 … F_max_k` from a single pass over the elements.
pub fn moments_direct(engine: &GroupEngine, max_k: u32) -> Result<Vec<MomentValue>> {
    let histogram = fixed_point_histogram(engine)?;
    let order = engine.order();
    (0..=max_k)
        .map(|k| moment_from_histogram(&histogram, k, &order))
        .collect()
}

/// `F_k(G)` through stabilizers: `F_0 = 1` and
/// `F_k(G) = Σ_i F_{k-1}(G_{ω_i})` over orbit representatives `ω_i`.
/// Never enumerates `G`.
pub fn moment_recursive(engine: &GroupEngine, k: u32) -> MomentValue {
    let mut memo = HashMap::new();
    MomentValue {
        k,
        value: moment_recursion(engine, k, &mut memo),
    }
}

/// `F_0 … F_max_k` via the stabilizer recursion, sharing one memo table.
pub fn moments_recursive(engine: &GroupEngine, max_k: u32) -> Vec<MomentValue> {
    let mut memo = HashMap::new();
    (0..=max_k)
        .map(|k| MomentValue {
            k,
            value: moment_recursion(engine, k, &mut memo),
        })
        .collect()
}

// Chain members are pointwise stabilizers of point sets, and such a subgroup is
// determined by the set of all points it fixes, so that set is the memo key.
fn moment_recursion(
    group: &GroupEngine,
    k: u32,
    memo: &mut HashMap<(Vec<usize>, u32), BigCount>,
) -> BigCount {
    if k == 0 {
        return BigUint::one();
    }
    let key = (group.fixed_points(), k);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for rep in group.orbit_partition().representatives {
        let stabilizer = group
            .point_stabilizer(rep)
            .expect("representative in range");
        total += moment_recursion(&stabilizer, k - 1, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// Evaluates `Σ_g Π_j (f(g) - f_j)` element by element and checks that every
/// non-identity term vanishes, the identity term equals the Blichfeldt
/// product, and the total over `|G|` equals the report quotient.
pub fn psi_identity_check(engine: &GroupEngine) -> Result<bool> {
    let report = blichfeldt_check(engine, Filter::AllNontrivialElements)?;
    let values: Vec<BigInt> = report
        .spectrum
        .values
        .iter()
        .map(|&f| BigInt::from(f))
        .collect();
    let term = |g: &Permutation| -> BigInt {
        let f = BigInt::from(g.fixed_point_count());
        values.iter().fold(BigInt::one(), |acc, fj| acc * (&f - fj))
    };
    let product = BigInt::from(report.product.clone());
    let (total, vanishing) = engine.fold_elements(
        || (BigInt::zero(), true),
        |(sum, ok), g| {
            let t = term(g);
            let ok = ok
                && if g.is_identity() {
                    t == product
                } else {
                    t.is_zero()
                };
            (sum + t, ok)
        },
        |(s1, ok1), (s2, ok2)| (s1 + s2, ok1 && ok2),
    )?;
    let order = BigInt::from(report.group_order.clone());
    let (q, r) = total.div_rem(&order);
    if !r.is_zero() {
        return Err(Error::NonIntegral {
            numerator: total,
            order: report.group_order,
        });
    }
    let quotient_matches = report.quotient.map(BigInt::from) == Some(q);
    Ok(vanishing && quotient_matches)
}

/// Spectrum of `f(H)` over all non-trivial subgroups `H`.
pub fn maillet_spectrum(engine: &GroupEngine, order_cap: usize) -> Result<Spectrum> {
    let lattice = SubgroupLattice::build(engine, order_cap)?;
    let values: BTreeSet<usize> = lattice
        .subgroups()
        .iter()
        .filter(|h| !h.is_trivial())
        .map(|h| h.fixed_point_count())
        .collect();
    Ok(Spectrum {
        degree: engine.degree(),
        filter: Filter::AllNontrivialSubgroups,
        values: values.into_iter().collect(),
    })
}

pub fn maillet_check(engine: &GroupEngine, order_cap: usize) -> Result<DivisibilityReport> {
    Ok(divisibility_report(
        engine,
        maillet_spectrum(engine, order_cap)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::build_engine;
    use crate::parse_cycles;

    fn group(gens: &[&str], degree: usize) -> GroupEngine {
        let gens: Vec<_> = gens
            .iter()
            .map(|g| parse_cycles(g, degree).unwrap())
            .collect();
        build_engine(&gens).unwrap()
    }

    fn d10() -> GroupEngine {
        group(&["(1,2,3,4,5)", "(2,5)(3,4)"], 5)
    }

    fn counterexample() -> GroupEngine {
        group(&["(1,2)(3,4)", "(1,3)(2,4)", "(1,2)(5,6)"], 6)
    }

    fn square() -> GroupEngine {
        group(&["(1,2,3,4)", "(2,4)"], 4)
    }

    fn aff5() -> GroupEngine {
        // x -> x+1 and x -> 2x on points 0..4 relabelled 1..5
        group(&["(1,2,3,4,5)", "(2,3,5,4)"], 5)
    }

    fn spec(engine: &GroupEngine, filter: Filter) -> Vec<usize> {
        fixed_point_spectrum(engine, filter).unwrap().values
    }

    fn n(x: u64) -> BigCount {
        BigUint::from(x)
    }

    #[test]
    fn spectra() {
        assert_eq!(spec(&counterexample(), Filter::PrimeOrder), vec![2]);
        assert_eq!(
            spec(&counterexample(), Filter::AllNontrivialElements),
            vec![0, 2]
        );
        assert_eq!(spec(&counterexample(), Filter::PrimePowerOrder), vec![0, 2]);
        assert_eq!(spec(&d10(), Filter::AllNontrivialElements), vec![0, 1]);
        let trivial = group(&["()"], 4);
        for filter in Filter::ELEMENT_FILTERS {
            assert!(spec(&trivial, filter).is_empty());
        }
        assert!(spec(&trivial, Filter::AllNontrivialSubgroups).is_empty());
    }

    #[test]
    fn products() {
        let s = |values: Vec<usize>, degree| Spectrum {
            degree,
            filter: Filter::AllNontrivialElements,
            values,
        };
        assert_eq!(blichfeldt_product(4, &s(vec![0, 2], 4)), n(8));
        assert_eq!(blichfeldt_product(5, &s(vec![0, 1], 5)), n(20));
        assert_eq!(blichfeldt_product(6, &s(vec![], 6)), n(1));
    }

    #[test]
    fn blichfeldt_reports() {
        let r = blichfeldt_check(&square(), Filter::AllNontrivialElements).unwrap();
        assert_eq!((r.product.clone(), r.group_order.clone()), (n(8), n(8)));
        assert!(r.divides && r.is_sharp);

        let r = blichfeldt_check(&counterexample(), Filter::PrimeOrder).unwrap();
        assert_eq!((r.product.clone(), r.group_order.clone()), (n(4), n(8)));
        assert!(!r.divides && !r.is_sharp && r.quotient.is_none());

        let r = blichfeldt_check(&counterexample(), Filter::PrimePowerOrder).unwrap();
        assert_eq!(r.product, n(24));
        assert!(r.divides && !r.is_sharp);
        assert_eq!(r.quotient, Some(n(3)));

        let r = blichfeldt_check(&group(&["()"], 3), Filter::AllNontrivialElements).unwrap();
        assert!(r.divides && r.is_sharp);
    }

    #[test]
    fn direct_moments() {
        for g in [d10(), counterexample(), square(), aff5()] {
            assert_eq!(moment_direct(&g, 0).unwrap().value, n(1));
        }
        assert_eq!(moment_direct(&d10(), 1).unwrap().value, n(1));
        assert_eq!(moment_direct(&aff5(), 2).unwrap().value, n(2));
        assert_eq!(moment_direct(&d10(), 2).unwrap().value, n(3));
        let capped = d10().with_element_cap(n(5));
        assert!(matches!(
            moment_direct(&capped, 1),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn non_integral_is_an_error() {
        assert!(matches!(
            moment_from_histogram(&[1, 1], 1, &n(2)),
            Err(Error::NonIntegral { .. })
        ));
    }

    #[test]
    fn recursive_moments() {
        assert_eq!(moment_recursive(&group(&["()"], 7), 1).value, n(7));
        assert_eq!(moment_recursive(&group(&["()"], 7), 3).value, n(343));
        assert_eq!(moment_recursive(&counterexample(), 1).value, n(2));
        for g in [d10(), counterexample(), square(), aff5(), group(&["()"], 3)] {
            let direct = moments_direct(&g, 6).unwrap();
            assert_eq!(direct, moments_recursive(&g, 6));
        }
    }

    #[test]
    fn psi_identity() {
        assert!(psi_identity_check(&d10()).unwrap());
        assert!(psi_identity_check(&square()).unwrap());
        assert!(psi_identity_check(&counterexample()).unwrap());
        assert!(psi_identity_check(&group(&["()"], 2)).unwrap());
    }

    #[test]
    fn maillet() {
        let c5 = group(&["(1,2,3,4,5)"], 5);
        assert_eq!(maillet_spectrum(&c5, 100).unwrap().values, vec![0]);
        assert_eq!(maillet_spectrum(&square(), 100).unwrap().values, vec![0, 2]);
        assert_eq!(maillet_spectrum(&d10(), 100).unwrap().values, vec![0, 1]);

        let r = maillet_check(&d10(), 100).unwrap();
        assert_eq!(r.product, n(20));
        assert_eq!(r.quotient, Some(n(2)));
        let r = maillet_check(&square(), 100).unwrap();
        assert!(r.is_sharp && r.product == n(8));
        let r = maillet_check(&group(&["()"], 3), 100).unwrap();
        assert!(r.is_sharp && r.product == n(1) && r.group_order == n(1));

        assert!(matches!(
            maillet_check(&d10(), 9),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn subgroup_spectrum_contains_element_spectrum() {
        for g in [d10(), counterexample(), square(), aff5()] {
            let elements = fixed_point_spectrum(&g, Filter::AllNontrivialElements).unwrap();
            let subgroups = maillet_spectrum(&g, 100).unwrap();
            assert!(elements.is_subset_of(&subgroups));
        }
    }
}
