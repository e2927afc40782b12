//! Permutations of `{1..n}`.
//!
//! Points act on the right: `compose(p, q)` is "apply `p`, then `q`", so the
//! image of `i` under the product is `q(p(i))`. Points are 1-based in every
//! public signature and 0-based in storage; the conversion happens here and
//! nowhere else.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::BigCount;

/// A total bijection on `{1..n}` stored as its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

/// Classification of an element order, used by the spectrum filters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Identity,
    /// Order `p^e` for a prime `p` and `e >= 1`.
    PrimePower {
        prime: usize,
        exponent: u32,
    },
    /// Order divisible by at least two distinct primes.
    Composite,
}

impl OrderKind {
    pub fn is_prime(self) -> bool {
        matches!(self, OrderKind::PrimePower { exponent: 1, .. })
    }

    pub fn is_prime_power(self) -> bool {
        matches!(self, OrderKind::PrimePower { .. })
    }
}

impl Permutation {
    /// The identity on `degree` points.
    ///
    /// Panics if `degree` is zero.
    pub fn identity(degree: usize) -> Permutation {
        assert!(degree >= 1, "a permutation needs at least one point");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        let mut raw = Vec::with_capacity(degree);
        for &image in images {
            if image == 0 || image > degree {
                return Err(Error::PointOutOfRange {
                    point: image,
                    degree,
                });
            }
            if std::mem::replace(&mut seen[image - 1], true) {
                return Err(Error::NotBijection);
            }
            raw.push((image - 1) as u32);
        }
        Ok(Permutation {
            images: raw.into_boxed_slice(),
        })
    }

    /// Builds a permutation from a 1-based point map.
    pub fn from_fn(degree: usize, map: impl Fn(usize) -> usize) -> Result<Permutation> {
        let images: Vec<usize> = (1..=degree).map(map).collect();
        Permutation::from_images(&images)
    }

    /// 0-based constructor for internal callers that already hold a bijection.
    pub(crate) fn from_raw(images: Vec<u32>) -> Permutation {
        debug_assert!({
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.iter().enumerate().all(|(i, &x)| i as u32 == x)
        });
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based `point`. Panics if the point is out of range.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// 0-based image, for hot loops inside the crate.
    #[inline]
    pub(crate) fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`. Panics on a degree mismatch; use
    /// [`Permutation::compose`] for the checked form.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in product");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    /// The product that maps `i` to `other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `other⁻¹ · self · other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.inverse().then(self).then(other)
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 == x)
            .count()
    }

    /// Whether the 1-based `point` is fixed.
    pub fn fixes(&self, point: usize) -> bool {
        self.image(point) == point
    }

    /// Smallest 0-based point that is moved, if any.
    pub(crate) fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    /// Non-trivial cycles, 1-based, each starting at its smallest point and
    /// listed in order of smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut point = start;
            while !seen[point] {
                seen[point] = true;
                cycle.push(point + 1);
                point = self.apply(point);
            }
            cycles.push(cycle);
        }
        cycles
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    /// Least `m >= 1` with `self^m` equal to the identity.
    pub fn element_order(&self) -> BigCount {
        self.cycle_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, len| acc.lcm(&BigUint::from(len)))
    }

    /// Prime factorization shape of [`Permutation::element_order`], found by
    /// trial division of the cycle lengths.
    pub fn order_kind(&self) -> OrderKind {
        let mut prime = None;
        let mut exponent = 0u32;
        for mut len in self.cycle_lengths() {
            let mut d = 2;
            while len > 1 {
                if d * d > len {
                    d = len;
                }
                if len % d == 0 {
                    let mut e = 0;
                    while len % d == 0 {
                        len /= d;
                        e += 1;
                    }
                    match prime {
                        None => prime = Some(d),
                        Some(p) if p != d => return OrderKind::Composite,
                        Some(_) => {}
                    }
                    exponent = exponent.max(e);
                }
                d += 1;
            }
        }
        match prime {
            None => OrderKind::Identity,
            Some(prime) => OrderKind::PrimePower { prime, exponent },
        }
    }

    /// Parity via cycle lengths: even iff the number of even-length cycles is even.
    pub fn is_even(&self) -> bool {
        self.cycle_lengths().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
    }

    /// Canonical disjoint-cycle text; the identity is `()`.
    pub fn format_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for cycle in cycles {
            out.push('(');
            for (i, point) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&point.to_string());
            }
            out.push(')');
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.format_cycles(), self.degree())
    }
}

/// Parses disjoint-cycle notation on an explicit number of points.
///
/// Grammar: `cycles := cycle*`, `cycle := '(' int (',' int)+ ')'`. Whitespace
/// is allowed around tokens. The empty string and the literal `()` both mean
/// the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut images: Vec<u32> = (0..degree as u32).collect();
    if text.trim() == "()" {
        return Ok(Permutation::from_raw(images));
    }
    let bytes = text.as_bytes();
    let mut seen = vec![false; degree];
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let syntax = |position: usize, message: &str| Error::Syntax {
        position,
        message: message.to_string(),
    };

    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'(' {
            return Err(syntax(pos, "expected '('"));
        }
        pos += 1;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(syntax(start, "expected a point"));
            }
            let point: usize = text[start..pos]
                .parse()
                .map_err(|_| syntax(start, "point does not fit in a machine word"))?;
            if point == 0 || point > degree {
                return Err(Error::PointOutOfRange { point, degree });
            }
            if std::mem::replace(&mut seen[point - 1], true) {
                return Err(Error::RepeatedPoint(point));
            }
            cycle.push(point - 1);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b')') => {
                    pos += 1;
                    break;
                }
                Some(_) => return Err(syntax(pos, "expected ',' or ')'")),
                None => return Err(syntax(pos, "unterminated cycle")),
            }
        }
        if cycle.len() < 2 {
            return Err(syntax(pos, "a cycle needs at least two points"));
        }
        for (i, &point) in cycle.iter().enumerate() {
            images[point] = cycle[(i + 1) % cycle.len()] as u32;
        }
    }
    Ok(Permutation::from_raw(images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str, degree: usize) -> Permutation {
        parse_cycles(text, degree).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("(1,2)(3,4)", 6).images(), vec![2, 1, 4, 3, 5, 6]);
        assert_eq!(p("", 4), Permutation::identity(4));
        assert_eq!(p("()", 4), Permutation::identity(4));
        assert_eq!(p("(1,2,3,4,5)", 5).images(), vec![2, 3, 4, 5, 1]);
        assert_eq!(p(" (1, 2)  (3,4) ", 4), p("(1,2)(3,4)", 4));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_cycles("(1,2", 3), Err(Error::Syntax { .. })));
        assert!(matches!(parse_cycles("(1)", 3), Err(Error::Syntax { .. })));
        assert!(matches!(parse_cycles("1,2", 3), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_cycles("(1;2)", 3),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(parse_cycles("(,2)", 3), Err(Error::Syntax { .. })));
        assert_eq!(
            parse_cycles("(1,7)", 6),
            Err(Error::PointOutOfRange {
                point: 7,
                degree: 6
            })
        );
        assert_eq!(
            parse_cycles("(0,1)", 6),
            Err(Error::PointOutOfRange {
                point: 0,
                degree: 6
            })
        );
        assert_eq!(parse_cycles("(1,2)(2,3)", 3), Err(Error::RepeatedPoint(2)));
        assert_eq!(parse_cycles("(1,2,1)", 3), Err(Error::RepeatedPoint(1)));
        assert_eq!(parse_cycles("", 0), Err(Error::ZeroDegree));
    }

    #[test]
    fn compose_examples() {
        let a = p("(1,2)(3,4)", 6);
        let b = p("(1,2)(5,6)", 6);
        assert_eq!(a.compose(&b).unwrap(), p("(3,4)(5,6)", 6));
        assert_eq!(a.compose(&Permutation::identity(6)).unwrap(), a);
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
        // left-to-right: (1,2) then (2,3) sends 1 -> 2 -> 3
        let c = p("(1,2)", 3).then(&p("(2,3)", 3));
        assert_eq!(c.image(1), 3);
        assert_eq!(
            a.compose(&Permutation::identity(4)),
            Err(Error::DegreeMismatch { left: 6, right: 4 })
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("(1,2,3,4,5)", 5).inverse(), p("(1,5,4,3,2)", 5));
        assert!(Permutation::identity(3).inverse().is_identity());
        assert_eq!(p("(1,2)(3,4)", 4).inverse(), p("(1,2)(3,4)", 4));
    }

    #[test]
    fn fixed_points_and_orders() {
        assert_eq!(p("(1,2)(5,6)", 6).fixed_point_count(), 2);
        assert_eq!(Permutation::identity(7).fixed_point_count(), 7);
        assert_eq!(p("(1,3,2,4)(5,6)", 6).fixed_point_count(), 0);

        assert_eq!(p("(1,2,3,4,5)", 5).element_order(), BigUint::from(5u32));
        assert_eq!(Permutation::identity(3).element_order(), BigUint::one());
        let g = p("(1,3,2,4)(5,6)", 6);
        assert_eq!(g.element_order(), BigUint::from(4u32));
        // oracle: repeated composition
        let mut power = g.clone();
        let mut m = 1;
        while !power.is_identity() {
            power = power.then(&g);
            m += 1;
        }
        assert_eq!(m, 4);
    }

    #[test]
    fn order_kinds() {
        assert_eq!(Permutation::identity(4).order_kind(), OrderKind::Identity);
        assert!(p("(1,2)(3,4)", 4).order_kind().is_prime());
        let k = p("(1,3,2,4)(5,6)", 6).order_kind();
        assert!(k.is_prime_power() && !k.is_prime());
        assert_eq!(p("(1,2,3)(4,5)", 5).order_kind(), OrderKind::Composite);
        assert_eq!(
            p("(1,2,3,4,5,6,7,8,9)", 9).order_kind(),
            OrderKind::PrimePower {
                prime: 3,
                exponent: 2
            }
        );
        assert!(p("(1,2,3,4,5,6,7,8,9,10,11)", 11).order_kind().is_prime());
    }

    #[test]
    fn formatting() {
        let a = Permutation::from_images(&[2, 1, 4, 3, 5, 6]).unwrap();
        assert_eq!(a.format_cycles(), "(1,2)(3,4)");
        assert_eq!(Permutation::identity(5).format_cycles(), "()");
        let b = Permutation::from_images(&[3, 4, 2, 1, 6, 5]).unwrap();
        assert_eq!(b.format_cycles(), "(1,3,2,4)(5,6)");
        assert_eq!(p(&b.format_cycles(), 6), b);
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert_eq!(Permutation::from_images(&[1, 1]), Err(Error::NotBijection));
        assert_eq!(
            Permutation::from_images(&[1, 3]),
            Err(Error::PointOutOfRange {
                point: 3,
                degree: 2
            })
        );
        assert_eq!(Permutation::from_images(&[]), Err(Error::ZeroDegree));
    }

    #[test]
    fn parity() {
        assert!(p("(1,2,3)", 3).is_even());
        assert!(!p("(1,2)", 3).is_even());
        assert!(p("(1,2)(3,4)", 4).is_even());
        assert!(!p("(1,2,3,4)", 4).is_even());
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..12).prop_flat_map(|n| {
            Just((0..n as u32).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(Permutation::from_raw)
        })
    }

    fn arb_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
        (1usize..10).prop_flat_map(|n| {
            let one = || {
                Just((0..n as u32).collect::<Vec<_>>())
                    .prop_shuffle()
                    .prop_map(Permutation::from_raw)
            };
            (one(), one(), one())
        })
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(g in arb_perm()) {
            prop_assert_eq!(parse_cycles(&g.format_cycles(), g.degree()).unwrap(), g);
        }

        #[test]
        fn group_laws((a, b, c) in arb_triple()) {
            let id = Permutation::identity(a.degree());
            prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
            prop_assert_eq!(a.then(&id), a.clone());
            prop_assert_eq!(id.then(&a), a.clone());
            prop_assert!(a.then(&a.inverse()).is_identity());
            prop_assert!(a.inverse().then(&a).is_identity());
            prop_assert_eq!(a.conjugate_by(&b).fixed_point_count(), a.fixed_point_count());
        }

        #[test]
        fn order_is_least_power((g, _, _) in arb_triple()) {
            let order: u64 = g.element_order().try_into().unwrap();
            let mut power = g.clone();
            for _ in 1..order {
                prop_assert!(!power.is_identity());
                power = power.then(&g);
            }
            prop_assert!(power.is_identity());
        }
    }
}
