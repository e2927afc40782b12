//! Base and strong generating set for `G = <generators>`.
//!
//! Construction is the deterministic Schreier-Sims algorithm. Transversals are
//! kept as explicit coset representatives so that every element of `G` can be
//! written uniquely as `t_{m-1} · … · t_1 · t_0` with `t_l` taken from the
//! transversal at level `l` (rightmost factor applied last).

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::BigCount;

/// Default bound on full element enumeration.
pub const DEFAULT_ELEMENT_CAP: u64 = 10_000_000;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    generators: Vec<Permutation>,
    /// Orbit of the base point in BFS order, 0-based.
    orbit: Vec<usize>,
    /// Indexed by point: a representative mapping the base point there.
    transversal: Vec<Option<Permutation>>,
    inverse_transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base_point: usize, generators: Vec<Permutation>, degree: usize) -> Level {
        let mut level = Level {
            base_point,
            generators,
            orbit: Vec::new(),
            transversal: vec![None; degree],
            inverse_transversal: vec![None; degree],
        };
        level.rebuild();
        level
    }

    fn rebuild(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.base_point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base_point];
        let mut next = 0;
        while next < self.orbit.len() {
            let point = self.orbit[next];
            next += 1;
            for gen in &self.generators {
                let image = gen.apply(point);
                if self.transversal[image].is_none() {
                    let rep = self.transversal[point].as_ref().unwrap().then(gen);
                    self.transversal[image] = Some(rep);
                    self.orbit.push(image);
                }
            }
        }
        self.inverse_transversal = self
            .transversal
            .iter()
            .map(|t| t.as_ref().map(Permutation::inverse))
            .collect();
    }

    fn rep(&self, point: usize) -> &Permutation {
        self.transversal[point].as_ref().expect("point in orbit")
    }
}

/// Immutable stabilizer-chain handle on a permutation group.
#[derive(Clone, Debug)]
pub struct GroupEngine {
    degree: usize,
    generators: Vec<Permutation>,
    strong_generators: Vec<Permutation>,
    levels: Vec<Level>,
    element_cap: BigCount,
}

/// Partition of `{1..n}` into orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Each class sorted ascending; classes ordered by their least point.
    pub classes: Vec<Vec<usize>>,
    /// Least point of each class.
    pub representatives: Vec<usize>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// The class containing the 1-based `point`.
    pub fn class_of(&self, point: usize) -> Option<&[usize]> {
        self.classes
            .iter()
            .find(|c| c.binary_search(&point).is_ok())
            .map(Vec::as_slice)
    }
}

/// Builds the engine for `<generators>`.
pub fn build_engine(generators: &[Permutation]) -> Result<GroupEngine> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    let degree = first.degree();
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    Ok(GroupEngine::with_base_prefix(
        degree,
        generators.to_vec(),
        &[],
    ))
}

impl GroupEngine {
    /// Schreier-Sims with a forced initial segment of (0-based) base points.
    fn with_base_prefix(degree: usize, generators: Vec<Permutation>, prefix: &[usize]) -> Self {
        let mut strong: Vec<Permutation> = Vec::new();
        for g in &generators {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut base: Vec<usize> = prefix.to_vec();
        for g in &strong {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved().unwrap());
            }
        }
        let mut levels: Vec<Level> = (0..base.len())
            .map(|l| {
                let gens = strong
                    .iter()
                    .filter(|g| base[..l].iter().all(|&b| g.apply(b) == b))
                    .cloned()
                    .collect();
                Level::new(base[l], gens, degree)
            })
            .collect();

        let mut i = levels.len();
        'outer: while i > 0 {
            let level = i - 1;
            let orbit = levels[level].orbit.clone();
            let gens = levels[level].generators.clone();
            for &point in &orbit {
                for s in &gens {
                    let image = s.apply(point);
                    let schreier = levels[level]
                        .rep(point)
                        .then(s)
                        .then(levels[level].inverse_transversal[image].as_ref().unwrap());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, depth) = strip(&levels, schreier, level + 1);
                    if depth == levels.len() && residue.is_identity() {
                        continue;
                    }
                    if depth == levels.len() {
                        let new_point = residue.first_moved().unwrap();
                        levels.push(Level::new(new_point, Vec::new(), degree));
                    }
                    for l in &mut levels[level + 1..=depth] {
                        l.generators.push(residue.clone());
                        l.rebuild();
                    }
                    strong.push(residue);
                    i = depth + 1;
                    continue 'outer;
                }
            }
            i -= 1;
        }

        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        GroupEngine {
            degree,
            generators,
            strong_generators: strong,
            levels,
            element_cap: BigUint::from(DEFAULT_ELEMENT_CAP),
        }
    }

    /// Replaces the element-enumeration cap used by operations that walk all of `G`.
    pub fn with_element_cap(mut self, cap: BigCount) -> Self {
        self.element_cap = cap;
        self
    }

    pub fn element_cap(&self) -> &BigCount {
        &self.element_cap
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_generators
    }

    /// Base points, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point + 1).collect()
    }

    /// Size of each transversal, level by level.
    pub fn transversal_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Exact `|G|` as the product of transversal sizes.
    pub fn order(&self) -> BigCount {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        let (residue, depth) = strip(&self.levels, p.clone(), 0);
        Ok(depth == self.levels.len() && residue.is_identity())
    }

    fn check_cap(&self, cap: &BigCount) -> Result<()> {
        let order = self.order();
        if &order > cap {
            return Err(Error::CapExceeded {
                order,
                cap: cap.clone(),
            });
        }
        Ok(())
    }

    /// Every element of `G` exactly once, in a fixed order: the level-0
    /// transversal coordinate varies fastest.
    pub fn elements(&self, cap: &BigCount) -> Result<Elements<'_>> {
        self.check_cap(cap)?;
        Ok(Elements::new(&self.levels, self.degree))
    }

    /// Parallel fold over all elements, partitioned by the level-0
    /// transversal coordinate. Respects [`GroupEngine::element_cap`].
    pub fn fold_elements<T, I, F, R>(&self, init: I, fold: F, reduce: R) -> Result<T>
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        F: Fn(T, &Permutation) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        self.check_cap(&self.element_cap)?;
        let Some((top, rest)) = self.levels.split_first() else {
            return Ok(fold(init(), &self.identity()));
        };
        Ok(top
            .orbit
            .par_iter()
            .map(|&point| {
                let rep = top.rep(point);
                Elements::new(rest, self.degree).fold(init(), |acc, h| fold(acc, &h.then(rep)))
            })
            .reduce(&init, &reduce))
    }

    /// Orbit of the 1-based `point`, sorted.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        let mut queue = VecDeque::from([point - 1]);
        seen[point - 1] = true;
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Ok((1..=self.degree).filter(|&p| seen[p - 1]).collect())
    }

    /// Orbits of `G` on `{1..n}`.
    pub fn orbit_partition(&self) -> OrbitPartition {
        let mut assigned = vec![false; self.degree];
        let mut classes = Vec::new();
        for point in 1..=self.degree {
            if assigned[point - 1] {
                continue;
            }
            let class = self.orbit(point).expect("point in range");
            for &x in &class {
                assigned[x - 1] = true;
            }
            classes.push(class);
        }
        let representatives = classes.iter().map(|c| c[0]).collect();
        OrbitPartition {
            classes,
            representatives,
        }
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_partition().len() == 1
    }

    /// Points fixed by every element of `G`, 1-based.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.degree)
            .filter(|&p| self.generators.iter().all(|g| g.fixes(p)))
            .collect()
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point == 0 || point > self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(())
    }

    /// Engine for the stabilizer `G_point`, obtained by rebuilding the chain
    /// with `point` as the first base point and dropping that level.
    pub fn point_stabilizer(&self, point: usize) -> Result<GroupEngine> {
        self.check_point(point)?;
        let rebuilt = GroupEngine::with_base_prefix(
            self.degree,
            self.strong_generators.clone(),
            &[point - 1],
        );
        let levels: Vec<Level> = rebuilt.levels.into_iter().skip(1).collect();
        let mut strong: Vec<Permutation> = Vec::new();
        for level in &levels {
            for g in &level.generators {
                if !strong.contains(g) {
                    strong.push(g.clone());
                }
            }
        }
        let generators = match levels.first() {
            Some(top) => top.generators.clone(),
            None => vec![self.identity()],
        };
        Ok(GroupEngine {
            degree: self.degree,
            generators,
            strong_generators: strong,
            levels,
            element_cap: self.element_cap.clone(),
        })
    }

    /// Pointwise stabilizer of a sequence of 1-based points.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<GroupEngine> {
        let mut group = self.clone();
        for &p in points {
            group = group.point_stabilizer(p)?;
        }
        Ok(group)
    }
}

/// Sifts `g` through levels starting at `from`. Returns the residue and the
/// level at which sifting stopped (`levels.len()` if it passed every level).
fn strip(levels: &[Level], mut g: Permutation, from: usize) -> (Permutation, usize) {
    for (l, level) in levels.iter().enumerate().skip(from) {
        let image = g.apply(level.base_point);
        match &level.inverse_transversal[image] {
            Some(inv) => g = g.then(inv),
            None => return (g, l),
        }
    }
    (g, levels.len())
}

/// Stream of all group elements built from transversal products.
pub struct Elements<'a> {
    levels: &'a [Level],
    indices: Vec<usize>,
    /// `partial[l]` is `t_{m-1} · … · t_l` for the current indices.
    partial: Vec<Permutation>,
    identity: Option<Permutation>,
    done: bool,
}

impl<'a> Elements<'a> {
    fn new(levels: &'a [Level], degree: usize) -> Elements<'a> {
        let mut it = Elements {
            levels,
            indices: vec![0; levels.len()],
            partial: Vec::with_capacity(levels.len()),
            identity: Some(Permutation::identity(degree)),
            done: false,
        };
        if !levels.is_empty() {
            it.partial = vec![Permutation::identity(degree); levels.len()];
            it.refresh_from(levels.len() - 1);
        }
        it
    }

    fn refresh_from(&mut self, top: usize) {
        for l in (0..=top).rev() {
            let level = &self.levels[l];
            let t = level.rep(level.orbit[self.indices[l]]);
            self.partial[l] = match self
                .partial
                .get(l + 1)
                .filter(|_| l + 1 < self.levels.len())
            {
                Some(above) => above.then(t),
                None => t.clone(),
            };
        }
    }
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if self.levels.is_empty() {
            self.done = true;
            return self.identity.take();
        }
        let current = self.partial[0].clone();
        let mut l = 0;
        loop {
            if l == self.levels.len() {
                self.done = true;
                break;
            }
            self.indices[l] += 1;
            if self.indices[l] < self.levels[l].orbit.len() {
                self.refresh_from(l);
                break;
            }
            self.indices[l] = 0;
            l += 1;
        }
        Some(current)
    }
}

/// Breadth-first product closure of the generators. Independent of the
/// stabilizer chain; used as an oracle.
pub fn closure_enumerate(generators: &[Permutation], cap: usize) -> Result<BTreeSet<Permutation>> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    let degree = first.degree();
    if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch {
            left: degree,
            right: bad.degree(),
        });
    }
    let identity = Permutation::identity(degree);
    let mut seen = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.then(g);
            if !seen.contains(&y) {
                if seen.len() == cap {
                    return Err(Error::CapExceeded {
                        order: BigUint::from(cap + 1),
                        cap: BigUint::from(cap),
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}
