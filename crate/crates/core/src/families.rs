//! Constructors for the standard group families.
//!
//! Generator choices are fixed so repeated calls give identical engines:
//!
//! * `symmetric(n)`: `(1,2)` and `(1,2,…,n)`.
//! * `alternating(n)`: `(1,2,3)` and `(1,2,…,n)` for odd `n`, `(2,3,…,n)` for even `n`.
//! * `cyclic_regular(n)`: `(1,2,…,n)`.
//! * `dihedral(n)`: `(1,2,…,n)` and the reflection `i ↦ n+2-i (mod n)` fixing 1.
//! * `affine_1(p, m)`: `x ↦ x+1` and `x ↦ γx`, field element with index `j` at point `j+1`.
//! * `pgl2(q)`: `x ↦ x+1`, `x ↦ γx`, `x ↦ 1/x`; `∞` is point 1 and the
//!   field element with index `j` is point `j+2`.
//!
//! `γ` is the smallest-index generator of the multiplicative group.

use num_bigint::BigUint;

use crate::datafile::GeneratorData;
use crate::engine::{build_engine, GroupEngine};
use crate::error::{Error, Result};
use crate::field::{prime_power, FiniteField};
use crate::perm::{parse_cycles, Permutation};

/// Largest field size accepted by the affine and projective constructors.
pub const DEFAULT_FIELD_CAP: usize = 4096;

pub const MATHIEU_11_DATA: &str = include_str!("../data/mathieu11.txt");
pub const MATHIEU_12_DATA: &str = include_str!("../data/mathieu12.txt");

fn cycle(points: impl IntoIterator<Item = usize>, degree: usize) -> Permutation {
    let points: Vec<usize> = points.into_iter().collect();
    let mut images: Vec<usize> = (1..=degree).collect();
    for (i, &p) in points.iter().enumerate() {
        images[p - 1] = points[(i + 1) % points.len()];
    }
    Permutation::from_images(&images).expect("a cycle is a bijection")
}

fn out_of_range(what: &str, n: usize, min: usize) -> Error {
    Error::InvalidArgument(format!("{what} needs n >= {min}, got {n}"))
}

pub fn symmetric(n: usize) -> Result<GroupEngine> {
    if n < 1 {
        return Err(out_of_range("symmetric group", n, 1));
    }
    if n == 1 {
        return build_engine(&[Permutation::identity(1)]);
    }
    build_engine(&[cycle([1, 2], n), cycle(1..=n, n)])
}

pub fn alternating(n: usize) -> Result<GroupEngine> {
    if n < 3 {
        return Err(out_of_range("alternating group", n, 3));
    }
    let long = if n % 2 == 1 {
        cycle(1..=n, n)
    } else {
        cycle(2..=n, n)
    };
    build_engine(&[cycle([1, 2, 3], n), long])
}

pub fn cyclic_regular(n: usize) -> Result<GroupEngine> {
    match n {
        0 => Err(out_of_range("cyclic group", n, 1)),
        1 => build_engine(&[Permutation::identity(1)]),
        _ => build_engine(&[cycle(1..=n, n)]),
    }
}

pub fn dihedral(n: usize) -> Result<GroupEngine> {
    if n < 3 {
        return Err(out_of_range("dihedral group", n, 3));
    }
    let reflection = Permutation::from_fn(n, |i| (n + 2 - i - 1) % n + 1)?;
    build_engine(&[cycle(1..=n, n), reflection])
}

/// Symmetries of a square acting on its four vertices.
pub fn square_symmetry() -> GroupEngine {
    dihedral(4).expect("n = 4 is valid")
}

fn field_for(p: u32, m: u32) -> Result<FiniteField> {
    let size = (p as usize).checked_pow(m);
    if size.is_none_or(|q| q > DEFAULT_FIELD_CAP) {
        return Err(Error::CapExceeded {
            order: BigUint::from(p).pow(m),
            cap: BigUint::from(DEFAULT_FIELD_CAP),
        });
    }
    FiniteField::new(p, m)
}

/// `Aff(1, p^m) = {x ↦ ax + b}` on the field elements.
pub fn affine_1(p: u32, m: u32) -> Result<GroupEngine> {
    let field = field_for(p, m)?;
    let q = field.order();
    let gamma = field
        .primitive_element()
        .expect("fields have primitive elements");
    let one = field.one();
    let translate = Permutation::from_fn(q, |j| {
        field.index(&field.add(&field.element(j - 1), &one)) + 1
    })?;
    let scale = Permutation::from_fn(q, |j| {
        field.index(&field.mul(&field.element(j - 1), &gamma)) + 1
    })?;
    build_engine(&[translate, scale])
}

/// Projective action of `PGL(2, q)` on the `q + 1` points of the projective line.
pub fn pgl2(q: u64) -> Result<GroupEngine> {
    let (p, m) = prime_power(q)
        .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
    let field = field_for(p, m)?;
    let q = field.order();
    let gamma = field
        .primitive_element()
        .expect("fields have primitive elements");
    let one = field.one();
    // point 1 is ∞, point j + 2 is the element with index j
    let on_field = |f: &dyn Fn(usize) -> usize| {
        Permutation::from_fn(q + 1, |point| if point == 1 { 1 } else { f(point - 2) + 2 })
    };
    let translate = on_field(&|j| field.index(&field.add(&field.element(j), &one)))?;
    let scale = on_field(&|j| field.index(&field.mul(&field.element(j), &gamma)))?;
    let invert = Permutation::from_fn(q + 1, |point| match point {
        1 => 2,
        2 => 1,
        _ => field.index(&field.inv(&field.element(point - 2)).expect("non-zero")) + 2,
    })?;
    build_engine(&[translate, scale, invert])
}

/// Whether the sharp 3-transitivity of `pgl2(q)` is the classical
/// characteristic-2 statement rather than a computed observation.
pub fn pgl2_claim_is_classical(q: u64) -> bool {
    q >= 2 && q.is_power_of_two()
}

/// Mathieu group of degree 11 or 12 from the shipped generator data.
pub fn mathieu(degree: usize) -> Result<GroupEngine> {
    let data = match degree {
        11 => MATHIEU_11_DATA,
        12 => MATHIEU_12_DATA,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "no Mathieu group data for degree {degree}"
            )))
        }
    };
    mathieu_from_data(data, degree)
}

/// Validates Mathieu generator data: the degree must match and the computed
/// order must be `11·10·9·8` or `12·11·10·9·8`.
pub fn mathieu_from_data(text: &str, degree: usize) -> Result<GroupEngine> {
    let expected: u64 = match degree {
        11 => 11 * 10 * 9 * 8,
        12 => 12 * 11 * 10 * 9 * 8,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "no Mathieu group data for degree {degree}"
            )))
        }
    };
    let data = GeneratorData::parse(text)?;
    if data.degree != degree {
        return Err(Error::DegreeMismatch {
            left: degree,
            right: data.degree,
        });
    }
    let engine = data.build()?;
    if engine.order() != BigUint::from(expected) {
        return Err(Error::OrderMismatch {
            expected: BigUint::from(expected),
            computed: engine.order(),
        });
    }
    Ok(engine)
}

/// `<(1,2)(3,4), (1,3)(2,4), (1,2)(5,6)>` on six points: dihedral of order 8
/// whose involutions all fix two points.
pub fn counterexample_group() -> GroupEngine {
    let gens: Vec<Permutation> = ["(1,2)(3,4)", "(1,3)(2,4)", "(1,2)(5,6)"]
        .iter()
        .map(|g| parse_cycles(g, 6).expect("valid generator"))
        .collect();
    build_engine(&gens).expect("generators share a degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{fixed_point_spectrum, Filter};

    fn order(g: &GroupEngine) -> u64 {
        g.order().try_into().unwrap()
    }

    #[test]
    fn symmetric_and_alternating() {
        assert_eq!(order(&symmetric(4).unwrap()), 24);
        assert_eq!(order(&symmetric(1).unwrap()), 1);
        assert_eq!(order(&symmetric(2).unwrap()), 2);
        assert_eq!(order(&alternating(6).unwrap()), 360);
        assert_eq!(order(&alternating(3).unwrap()), 3);
        assert_eq!(order(&alternating(4).unwrap()), 12);
        for n in 3..=8 {
            let a = alternating(n).unwrap();
            assert!(a.generators().iter().all(Permutation::is_even));
            let f: u64 = (1..=n as u64).product();
            assert_eq!(order(&a), f / 2);
            assert_eq!(order(&symmetric(n).unwrap()), f);
        }
        assert!(symmetric(0).is_err());
        assert!(alternating(2).is_err());
    }

    #[test]
    fn regular_and_dihedral() {
        let c6 = cyclic_regular(6).unwrap();
        assert_eq!(order(&c6), 6);
        assert_eq!(
            fixed_point_spectrum(&c6, Filter::AllNontrivialElements)
                .unwrap()
                .values,
            vec![0]
        );
        assert_eq!(order(&cyclic_regular(1).unwrap()), 1);
        assert!(cyclic_regular(0).is_err());

        let d5 = dihedral(5).unwrap();
        assert_eq!(d5.generators()[1], parse_cycles("(2,5)(3,4)", 5).unwrap());
        assert_eq!(order(&d5), 10);
        let d4 = dihedral(4).unwrap();
        assert_eq!(order(&d4), 8);
        assert_eq!(
            fixed_point_spectrum(&d4, Filter::AllNontrivialElements)
                .unwrap()
                .values,
            vec![0, 2]
        );
        assert!(dihedral(2).is_err());
    }

    #[test]
    fn affine_groups() {
        let a = affine_1(5, 1).unwrap();
        assert_eq!((a.degree(), order(&a)), (5, 20));
        let a = affine_1(2, 3).unwrap();
        assert_eq!((a.degree(), order(&a)), (8, 56));
        let a = affine_1(2, 1).unwrap();
        assert_eq!((a.degree(), order(&a)), (2, 2));
        let a = affine_1(3, 2).unwrap();
        assert_eq!((a.degree(), order(&a)), (9, 72));
        assert!(affine_1(4, 1).is_err());
        assert!(matches!(affine_1(2, 13), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn projective_groups() {
        let g = pgl2(4).unwrap();
        assert_eq!((g.degree(), order(&g)), (5, 60));
        let g = pgl2(2).unwrap();
        assert_eq!((g.degree(), order(&g)), (3, 6));
        let g = pgl2(8).unwrap();
        assert_eq!((g.degree(), order(&g)), (9, 504));
        let spectrum = fixed_point_spectrum(&g, Filter::AllNontrivialElements).unwrap();
        assert!(spectrum.values.iter().all(|&f| f <= 2));
        for q in [3u64, 5, 7, 9, 16] {
            let g = pgl2(q).unwrap();
            assert_eq!(order(&g), (q + 1) * q * (q - 1));
        }
        assert!(pgl2(6).is_err());
        assert!(pgl2_claim_is_classical(8) && !pgl2_claim_is_classical(9));
    }

    #[test]
    fn mathieu_groups() {
        assert_eq!(order(&mathieu(11).unwrap()), 7920);
        assert_eq!(order(&mathieu(12).unwrap()), 95040);
        assert!(matches!(mathieu(10), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn mathieu_gate_rejects_bad_data() {
        // drop the second generator: generates only a cyclic group of order 11
        let bad = "degree 11\n(1,2,3,4,5,6,7,8,9,10,11)\n";
        assert!(matches!(
            mathieu_from_data(bad, 11),
            Err(Error::OrderMismatch { .. })
        ));
        assert!(matches!(
            mathieu_from_data("degree 11\n(1,2\n", 11),
            Err(Error::DataFile { line: 2, .. })
        ));
        assert!(matches!(
            mathieu_from_data(MATHIEU_11_DATA, 12),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn counterexample() {
        let g = counterexample_group();
        assert_eq!(order(&g), 8);
        for x in g.elements(&BigUint::from(8u32)).unwrap() {
            if x.element_order() == BigUint::from(2u32) {
                assert_eq!(x.fixed_point_count(), 2);
            }
        }
    }

    #[test]
    fn constructors_are_deterministic() {
        assert_eq!(pgl2(9).unwrap().generators(), pgl2(9).unwrap().generators());
        assert_eq!(
            affine_1(3, 2).unwrap().generators(),
            affine_1(3, 2).unwrap().generators()
        );
        assert_eq!(mathieu(12).unwrap().base(), mathieu(12).unwrap().base());
    }
}
