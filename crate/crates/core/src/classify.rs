//! Structural classification: transitivity degree, sharp k-transitivity,
//! rank, primitivity, Frobenius kernels, Bochert's bound, and an aggregate
//! report.

use num_bigint::BigUint;
use num_traits::One;

use crate::engine::GroupEngine;
use crate::error::{Error, Result};
use crate::lattice::SubgroupLattice;
use crate::perm::{parse_cycles, Permutation};
use crate::spectrum::{
    divisibility_report, fixed_point_spectrum, moments_recursive, DivisibilityReport, Filter,
    MomentValue, Spectrum,
};
use crate::BigCount;

/// Moments `F_0 … F_k` included in a [`ClassificationReport`].
pub const REPORT_MOMENTS: u32 = 4;

/// `n (n-1) … (n-k+1)`.
pub fn falling_factorial(n: usize, k: usize) -> BigCount {
    (0..k.min(n + 1)).fold(BigUint::one(), |acc, i| {
        acc * BigUint::from(n.saturating_sub(i))
    })
}

pub fn factorial(n: usize) -> BigCount {
    falling_factorial(n, n)
}

// Largest k such that `group` is k-transitive on the points outside `fixed`,
// all of which it fixes.
fn transitivity_on_complement(group: &GroupEngine, fixed: &mut Vec<usize>) -> usize {
    let rest: Vec<usize> = (1..=group.degree())
        .filter(|p| !fixed.contains(p))
        .collect();
    let Some(&first) = rest.first() else {
        return 0;
    };
    let orbit = group.orbit(first).expect("point in range");
    if orbit.len() != rest.len() {
        return 0;
    }
    fixed.push(first);
    let stabilizer = group.point_stabilizer(first).expect("point in range");
    1 + transitivity_on_complement(&stabilizer, fixed)
}

/// Largest `k` with `G` k-transitive, by stabilizer-chain recursion:
/// `G` is k-transitive iff it is transitive and `G_1` is (k−1)-transitive on
/// the remaining points. Intransitive groups give 0.
pub fn transitivity_degree(engine: &GroupEngine) -> usize {
    transitivity_on_complement(engine, &mut Vec::new())
}

/// Certifies sharp k-transitivity as k-transitivity plus `|G| = n!/(n−k)!`.
/// When `G` is small enough to enumerate, also asserts that no non-trivial
/// element fixes `k` or more points. Returns `false` for `k` outside `1..=n`.
pub fn is_sharply_k_transitive(engine: &GroupEngine, k: usize) -> bool {
    let n = engine.degree();
    if k == 0 || k > n {
        return false;
    }
    let sharp = transitivity_degree(engine) >= k && engine.order() == falling_factorial(n, k);
    if sharp {
        if let Ok(spectrum) = fixed_point_spectrum(engine, Filter::AllNontrivialElements) {
            assert!(
                spectrum.values.iter().all(|&f| f < k),
                "sharply {k}-transitive group with spectrum {:?}",
                spectrum.values
            );
        }
    }
    sharp
}

/// Number of elements mapping the tuple `from` onto `to` pointwise.
pub fn count_tuple_maps(engine: &GroupEngine, from: &[usize], to: &[usize]) -> Result<usize> {
    if from.len() != to.len() {
        return Err(Error::InvalidArgument(
            "tuples must have equal length".into(),
        ));
    }
    for &p in from.iter().chain(to) {
        if p == 0 || p > engine.degree() {
            return Err(Error::PointOutOfRange {
                point: p,
                degree: engine.degree(),
            });
        }
    }
    engine.fold_elements(
        || 0usize,
        |acc, g| acc + from.iter().zip(to).all(|(&a, &b)| g.image(a) == b) as usize,
        |a, b| a + b,
    )
}

/// Number of orbits of `G_1` on `{1..n}`.
pub fn rank(engine: &GroupEngine) -> Result<usize> {
    if !engine.is_transitive() {
        return Err(Error::InvalidArgument(
            "rank is defined for transitive groups".into(),
        ));
    }
    Ok(engine.point_stabilizer(1)?.orbit_partition().len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Primitivity {
    pub primitive: bool,
    /// A non-trivial block containing 1 when the group is transitive but imprimitive.
    pub block: Option<Vec<usize>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Smallest block containing the 1-based points `a` and `b`, sorted.
pub fn minimal_block(engine: &GroupEngine, a: usize, b: usize) -> Vec<usize> {
    let n = engine.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut pending = vec![(a - 1, b - 1)];
    let ra = find(&mut parent, a - 1);
    let rb = find(&mut parent, b - 1);
    parent[rb] = ra;
    while let Some((x, y)) = pending.pop() {
        for g in engine.generators() {
            let (gx, gy) = (g.apply(x), g.apply(y));
            let (rx, ry) = (find(&mut parent, gx), find(&mut parent, gy));
            if rx != ry {
                parent[ry] = rx;
                pending.push((gx, gy));
            }
        }
    }
    let root = find(&mut parent, a - 1);
    (0..n)
        .filter(|&x| find(&mut parent, x) == root)
        .map(|x| x + 1)
        .collect()
}

/// Primitivity via minimal blocks: transitive and, for every `β ≠ 1`, the
/// smallest block containing `{1, β}` is the whole set.
pub fn is_primitive(engine: &GroupEngine) -> Primitivity {
    if !engine.is_transitive() {
        return Primitivity {
            primitive: false,
            block: None,
        };
    }
    let n = engine.degree();
    for beta in 2..=n {
        let block = minimal_block(engine, 1, beta);
        if block.len() < n {
            return Primitivity {
                primitive: false,
                block: Some(block),
            };
        }
    }
    Primitivity {
        primitive: true,
        block: None,
    }
}

/// Primitivity by definition: transitive and no subgroup lies strictly
/// between `G_1` and `G`. Needs the full subgroup lattice.
pub fn is_primitive_by_lattice(engine: &GroupEngine, order_cap: usize) -> Result<bool> {
    if !engine.is_transitive() {
        return Ok(false);
    }
    let lattice = SubgroupLattice::build(engine, order_cap)?;
    let stabilizer = lattice
        .find(|g| g.fixes(1))
        .expect("stabilizers are subgroups");
    let whole = lattice.find(|_| true).expect("G is a subgroup of itself");
    let maximal = lattice.strictly_between(stabilizer, whole).next().is_none();
    Ok(maximal)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub is_frobenius: bool,
    pub kernel_size: usize,
    pub kernel_is_subgroup: bool,
    pub kernel_is_normal: bool,
    pub kernel_is_abelian: bool,
    /// Fixed-point-free elements plus the identity, sorted. Empty unless
    /// the group is Frobenius.
    pub kernel_elements: Vec<Permutation>,
}

/// Detects a Frobenius group (transitive, element spectrum exactly `{0, 1}`)
/// and checks its kernel is a normal subgroup of size `n`.
pub fn frobenius_analysis(engine: &GroupEngine) -> Result<FrobeniusReport> {
    let spectrum = fixed_point_spectrum(engine, Filter::AllNontrivialElements)?;
    let is_frobenius = engine.is_transitive() && spectrum.values == [0, 1];
    if !is_frobenius {
        return Ok(FrobeniusReport {
            is_frobenius,
            kernel_size: 0,
            kernel_is_subgroup: false,
            kernel_is_normal: false,
            kernel_is_abelian: false,
            kernel_elements: Vec::new(),
        });
    }
    let mut kernel = engine.fold_elements(
        Vec::new,
        |mut acc, g| {
            if g.is_identity() || g.fixed_point_count() == 0 {
                acc.push(g.clone());
            }
            acc
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    kernel.sort();
    let member = |x: &Permutation| kernel.binary_search(x).is_ok();
    let closed = kernel
        .iter()
        .all(|a| member(&a.inverse()) && kernel.iter().all(|b| member(&a.then(b))));
    let normal = kernel.iter().all(|k| {
        engine
            .generators()
            .iter()
            .all(|g| member(&k.conjugate_by(g)))
    });
    let abelian = kernel
        .iter()
        .all(|a| kernel.iter().all(|b| a.then(b) == b.then(a)));
    Ok(FrobeniusReport {
        is_frobenius,
        kernel_size: kernel.len(),
        kernel_is_subgroup: closed,
        kernel_is_normal: normal,
        kernel_is_abelian: abelian,
        kernel_elements: kernel,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BochertReport {
    /// Primitive and neither symmetric nor alternating.
    pub applicable: bool,
    /// `n (n−1) … (n−⌊n/2⌋+1)`.
    pub bound: BigCount,
    pub order: BigCount,
    /// `order <= bound`, evaluated whether or not the bound applies.
    pub satisfied: bool,
}

impl BochertReport {
    /// The theorem's statement for this group: the bound holds or does not apply.
    pub fn holds(&self) -> bool {
        !self.applicable || self.satisfied
    }
}

/// Order `n!` and contains `(1,2)`.
pub fn is_full_symmetric(engine: &GroupEngine) -> bool {
    let n = engine.degree();
    engine.order() == factorial(n)
        && (n < 2
            || engine
                .contains(&parse_cycles("(1,2)", n).expect("valid cycle"))
                .expect("degrees match"))
}

/// Order `n!/2` with every generator even.
pub fn is_full_alternating(engine: &GroupEngine) -> bool {
    let n = engine.degree();
    n >= 3
        && engine.order() * BigUint::from(2u32) == factorial(n)
        && engine.generators().iter().all(Permutation::is_even)
}

pub fn bochert_check(engine: &GroupEngine) -> BochertReport {
    let n = engine.degree();
    let primitive = is_primitive(engine).primitive;
    let applicable = primitive && !is_full_symmetric(engine) && !is_full_alternating(engine);
    let bound = falling_factorial(n, n / 2);
    let order = engine.order();
    BochertReport {
        applicable,
        satisfied: order <= bound,
        bound,
        order,
    }
}

/// The three element-filter spectra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSpectra {
    pub all: Spectrum,
    pub prime_power: Spectrum,
    pub prime: Spectrum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub degree: usize,
    pub order: BigCount,
    pub num_orbits: usize,
    pub transitive: bool,
    pub transitivity_degree: usize,
    pub sharply_transitive_k: Option<usize>,
    pub rank: Option<usize>,
    pub primitivity: Primitivity,
    pub bochert: BochertReport,
    pub moments: Vec<MomentValue>,
    /// Fields below need full enumeration and are `None` past the element cap.
    pub spectra: Option<ElementSpectra>,
    pub blichfeldt: Option<DivisibilityReport>,
    pub frobenius: Option<FrobeniusReport>,
}

impl ClassificationReport {
    pub fn is_sharp(&self) -> Option<bool> {
        self.blichfeldt.as_ref().map(|r| r.is_sharp)
    }

    pub fn is_regular(&self) -> bool {
        self.transitive && self.order == BigUint::from(self.degree)
    }

    pub fn is_complete(&self) -> bool {
        self.spectra.is_some() && self.blichfeldt.is_some() && self.frobenius.is_some()
    }

    /// Names of fields that could not be computed.
    pub fn unavailable(&self) -> Vec<&'static str> {
        let mut missing = Vec::new();
        if self.spectra.is_none() {
            missing.push("spectra");
        }
        if self.blichfeldt.is_none() {
            missing.push("blichfeldt");
        }
        if self.frobenius.is_none() {
            missing.push("frobenius");
        }
        missing
    }

    /// Short structural tags, in a fixed order.
    pub fn tags(&self) -> Vec<String> {
        let mut tags = Vec::new();
        if self.transitive {
            tags.push("transitive".to_string());
        }
        if self.is_regular() {
            tags.push("regular".to_string());
        }
        if let Some(k) = self.sharply_transitive_k {
            tags.push(format!("sharply-{k}-transitive"));
        }
        if self.primitivity.primitive {
            tags.push("primitive".to_string());
        }
        if self.frobenius.as_ref().is_some_and(|f| f.is_frobenius) {
            tags.push("frobenius".to_string());
        }
        if self.is_sharp() == Some(true) {
            tags.push("sharp".to_string());
        }
        tags
    }
}

fn element_spectra(engine: &GroupEngine) -> Result<ElementSpectra> {
    Ok(ElementSpectra {
        all: fixed_point_spectrum(engine, Filter::AllNontrivialElements)?,
        prime_power: fixed_point_spectrum(engine, Filter::PrimePowerOrder)?,
        prime: fixed_point_spectrum(engine, Filter::PrimeOrder)?,
    })
}

/// Runs every check. Enumeration-dependent fields are left `None` when
/// `|G|` exceeds the engine's element cap.
pub fn classify_report(engine: &GroupEngine) -> ClassificationReport {
    let partition = engine.orbit_partition();
    let transitive = partition.len() == 1;
    let transitivity_degree = transitivity_degree(engine);
    let n = engine.degree();
    let order = engine.order();
    let mut sharply_transitive_k = (transitivity_degree >= 1
        && order == falling_factorial(n, transitivity_degree))
    .then_some(transitivity_degree);

    let spectra = element_spectra(engine).ok();
    if let (Some(k), Some(s)) = (sharply_transitive_k, &spectra) {
        assert!(s.all.values.iter().all(|&f| f < k));
        // uniqueness spot check on (1..k) -> (n..n-k+1)
        let from: Vec<usize> = (1..=k).collect();
        let to: Vec<usize> = (0..k).map(|i| n - i).collect();
        if count_tuple_maps(engine, &from, &to).ok() != Some(1) {
            sharply_transitive_k = None;
        }
    }
    let blichfeldt = spectra
        .as_ref()
        .map(|s| divisibility_report(engine, s.all.clone()));

    ClassificationReport {
        degree: n,
        num_orbits: partition.len(),
        transitive,
        transitivity_degree,
        sharply_transitive_k,
        rank: rank(engine).ok(),
        primitivity: is_primitive(engine),
        bochert: bochert_check(engine),
        moments: moments_recursive(engine, REPORT_MOMENTS),
        blichfeldt,
        frobenius: frobenius_analysis(engine).ok(),
        spectra,
        order,
    }
}
