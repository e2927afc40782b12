//! Finite fields `GF(p^m)` as polynomials over `Z/p` modulo a monic
//! irreducible polynomial.
//!
//! Elements and polynomials are coefficient vectors with the constant term
//! first. Each element also has an integer index `Σ c_i p^i`; ordering by
//! index is the canonical element order, and the modulus is the monic
//! irreducible polynomial of degree `m` whose lower coefficients have the
//! smallest index.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(Vec<u32>);

impl FieldElement {
    pub fn coefficients(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    m: u32,
    /// Monic, length `m + 1`, constant term first.
    modulus: Vec<u32>,
    order: usize,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p as u32, m))
}

fn digits(mut index: usize, p: u32, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = (index % p as usize) as u32;
            index /= p as usize;
            d
        })
        .collect()
}

/// Remainder of `a` modulo the monic `b` over `Z/p`. Both constant-first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                let idx = shift + i;
                r[idx] = ((r[idx] as u64 + p as u64 - (lead as u64 * c as u64) % p as u64)
                    % p as u64) as u32;
            }
        }
        r.pop();
    }
    r
}

/// Brute-force irreducibility: no monic factor of degree `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for index in 0..(p as usize).pow(d as u32) {
            let mut divisor = digits(index, p, d);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// The field with `p^m` elements, using the smallest irreducible modulus.
    pub fn new(p: u32, m: u32) -> Result<FiniteField> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidArgument(
                "extension degree must be at least 1".into(),
            ));
        }
        let order = (p as usize)
            .checked_pow(m)
            .filter(|&q| q <= u32::MAX as usize)
            .ok_or_else(|| Error::InvalidArgument(format!("{p}^{m} is too large")))?;
        let modulus = (0..order)
            .map(|index| {
                let mut poly = digits(index, p, m as usize);
                poly.push(1);
                poly
            })
            .find(|poly| is_irreducible(poly, p))
            .expect("an irreducible polynomial exists in every degree");
        let field = FiniteField {
            p,
            m,
            modulus,
            order,
        };
        if field.primitive_element().is_none() {
            return Err(Error::InvalidArgument(format!(
                "modulus for GF({p}^{m}) does not give a cyclic multiplicative group"
            )));
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(vec![0; self.m as usize])
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// Element with the given index. Panics if `index >= order`.
    pub fn element(&self, index: usize) -> FieldElement {
        assert!(index < self.order, "field element index out of range");
        FieldElement(digits(index, self.p, self.m as usize))
    }

    pub fn from_coefficients(&self, coefficients: &[u32]) -> Result<FieldElement> {
        if coefficients.len() != self.m as usize || coefficients.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidArgument(format!(
                "{coefficients:?} is not an element of GF({}^{})",
                self.p, self.m
            )));
        }
        Ok(FieldElement(coefficients.to_vec()))
    }

    pub fn index(&self, x: &FieldElement) -> usize {
        x.0.iter()
            .rev()
            .fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(|i| self.element(i))
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        FieldElement(
            x.0.iter()
                .zip(&y.0)
                .map(|(&a, &b)| ((a as u64 + b as u64) % self.p as u64) as u32)
                .collect(),
        )
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let m = self.m as usize;
        let mut product = vec![0u32; 2 * m - 1];
        for (i, &a) in x.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.0.iter().enumerate() {
                product[i + j] =
                    ((product[i + j] as u64 + a as u64 * b as u64) % self.p as u64) as u32;
            }
        }
        let mut r = poly_rem(&product, &self.modulus, self.p);
        r.resize(m, 0);
        FieldElement(r)
    }

    pub fn pow(&self, x: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `x^(q-2)`.
    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        if *x == self.zero() {
            return Err(Error::InvalidArgument("zero has no inverse".into()));
        }
        Ok(self.pow(x, self.order as u64 - 2))
    }

    /// Multiplicative order of a non-zero element.
    pub fn multiplicative_order(&self, x: &FieldElement) -> Option<usize> {
        if *x == self.zero() {
            return None;
        }
        let one = self.one();
        let mut power = x.clone();
        let mut k = 1;
        while power != one {
            power = self.mul(&power, x);
            k += 1;
        }
        Some(k)
    }

    /// Smallest-index generator of the multiplicative group.
    pub fn primitive_element(&self) -> Option<FieldElement> {
        (1..self.order)
            .map(|i| self.element(i))
            .find(|x| self.multiplicative_order(x) == Some(self.order - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_modulus_over_gf2() {
        // exhaustive oracle: the monic cubics over GF(2) with no root
        let cubics: Vec<Vec<u32>> = (0..4)
            .map(|i| vec![i & 1, (i >> 1) & 1, 0, 1])
            .chain((0..4).map(|i| vec![i & 1, (i >> 1) & 1, 1, 1]))
            .filter(|c| {
                (0..2).all(|x: u32| {
                    c.iter()
                        .enumerate()
                        .map(|(i, &a)| a * x.pow(i as u32))
                        .sum::<u32>()
                        % 2
                        != 0
                })
            })
            .collect();
        assert_eq!(cubics, vec![vec![1, 1, 0, 1], vec![1, 0, 1, 1]]);
        let f = FiniteField::new(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FiniteField::new(5, 1).unwrap();
        assert_eq!(f.mul(&f.element(3), &f.element(4)), f.element(2));
        assert_eq!(f.add(&f.element(3), &f.element(4)), f.element(2));
        assert_eq!(f.inv(&f.element(2)).unwrap(), f.element(3));
        assert!(f.inv(&f.zero()).is_err());
        assert_eq!(f.primitive_element(), Some(f.element(2)));
    }

    #[test]
    fn inverse_in_gf8() {
        let f = FiniteField::new(2, 3).unwrap();
        let x = f.from_coefficients(&[0, 1, 0]).unwrap();
        let expected = f.from_coefficients(&[1, 0, 1]).unwrap();
        // brute force over the seven non-zero elements
        let found: Vec<_> = f.elements().filter(|y| f.mul(&x, y) == f.one()).collect();
        assert_eq!(found, vec![expected.clone()]);
        assert_eq!(f.inv(&x).unwrap(), expected);
        assert_eq!(expected.to_string(), "x^2+1");
    }

    #[test]
    fn field_axioms_small() {
        for (p, m) in [(2, 1), (2, 2), (3, 2), (2, 4), (5, 2), (7, 1)] {
            let f = FiniteField::new(p, m).unwrap();
            assert_eq!(f.order(), (p as usize).pow(m));
            assert_eq!(f.elements().count(), f.order());
            for (i, x) in f.elements().enumerate() {
                assert_eq!(f.index(&x), i);
                if i > 0 {
                    assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
                }
            }
            let g = f.primitive_element().unwrap();
            assert_eq!(f.multiplicative_order(&g), Some(f.order() - 1));
        }
    }

    #[test]
    fn invalid_fields() {
        assert!(FiniteField::new(4, 1).is_err());
        assert!(FiniteField::new(1, 1).is_err());
        assert!(FiniteField::new(3, 0).is_err());
        assert!(f_elem_err());
    }

    fn f_elem_err() -> bool {
        let f = FiniteField::new(3, 2).unwrap();
        f.from_coefficients(&[3, 0]).is_err() && f.from_coefficients(&[1]).is_err()
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
