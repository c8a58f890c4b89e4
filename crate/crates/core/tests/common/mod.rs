//! Strategies and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use kwbn::rep::{make_irrep, IrrepLabel, NRep, Orientation};
use kwbn::{BnElement, GammaScalar, MultiPoly, Twist, Variable};
use num_bigint::BigInt;
use proptest::prelude::*;

pub const CAP: u32 = 12;

/// The coefficient tables as printed: α rows n = 0..=6, β rows n = 1..=7.
pub const ALPHA_ROWS: [&[i64]; 7] = [
    &[1],
    &[3, 1],
    &[5, 5, 1],
    &[7, 14, 7, 1],
    &[9, 30, 27, 9, 1],
    &[11, 55, 77, 44, 11, 1],
    &[13, 91, 182, 156, 65, 13, 1],
];

pub const BETA_ROWS: [&[i64]; 7] = [
    &[1],
    &[2, 1],
    &[3, 4, 1],
    &[4, 10, 6, 1],
    &[5, 20, 21, 8, 1],
    &[6, 35, 56, 36, 10, 1],
    &[7, 56, 126, 120, 55, 12, 1],
];

pub fn gamma_scalar() -> impl Strategy<Value = GammaScalar> {
    prop::collection::vec((-3i64..=3, -9i64..=9), 0..4)
        .prop_map(|ts| GammaScalar::from_terms(ts.into_iter().map(|(e, c)| (e, c))))
}

pub fn twist() -> impl Strategy<Value = Twist> {
    prop_oneof![Just(Twist::Untwisted), Just(Twist::Twisted)]
}

pub fn bn_with_twist(t: Twist, cap: u32) -> impl Strategy<Value = BnElement> {
    prop::collection::vec((0..=cap, -2i64..=2, -6i64..=6), 0..5)
        .prop_map(move |ts| BnElement::from_int_terms(t, cap, ts))
}

pub fn bn_element(cap: u32) -> impl Strategy<Value = BnElement> {
    twist().prop_flat_map(move |t| bn_with_twist(t, cap))
}

/// A nonzero element homogeneous of some degree: all monomials `γ^k e^j`
/// share `2j - 4k`.
pub fn homogeneous_bn(cap: u32) -> impl Strategy<Value = BnElement> {
    (twist(), 0i64..=3, prop::collection::vec((0u32..=cap / 2, 1i64..=5), 1..4)).prop_map(
        move |(t, base, ts)| {
            // e^{base + 2s}·γ^s all have degree 2·base (plus 2 when twisted)
            let base = base as u32;
            BnElement::from_int_terms(
                t,
                cap,
                ts.into_iter()
                    .filter(|(s, _)| base + 2 * s <= cap)
                    .map(|(s, c)| (base + 2 * s, i64::from(s), c)),
            )
        },
    )
}

pub fn xi_vars() -> Vec<Variable> {
    kwbn::ternary::root_vars()
}

pub fn multipoly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, 3), gamma_scalar()), 0..5)
        .prop_map(|ts| MultiPoly::from_terms(xi_vars(), ts).unwrap())
}

/// `b₁(Õ⁺(m))` from the three-term recurrence on plain maps
/// `(e-exponent, γ-exponent) → integer`, with no ring type involved. For
/// even `m` the map is the cofactor of `ẽ`.
pub fn oracle_b1(m: u32) -> BTreeMap<(u32, i64), BigInt> {
    type P = BTreeMap<(u32, i64), BigInt>;
    fn step(p: &P, q: &P) -> P {
        // (γe² - 2)·p - q
        let mut out = P::new();
        for ((j, k), c) in p {
            *out.entry((j + 2, k + 1)).or_default() += c;
            *out.entry((*j, *k)).or_default() -= c * 2;
        }
        for (key, c) in q {
            *out.entry(*key).or_default() -= c;
        }
        out.retain(|_, c| *c != BigInt::from(0));
        out
    }
    let one = |j: u32, k: i64, c: i64| -> P { [((j, k), BigInt::from(c))].into_iter().collect() };
    match m {
        0 => return P::new(),
        1 => return one(1, 0, 1),
        _ => {}
    }
    let (mut prev, mut cur, mut at) = if m % 2 == 1 {
        let b3: P = [((1, 0), BigInt::from(-3)), ((3, 1), BigInt::from(1))].into_iter().collect();
        (one(1, 0, 1), b3, 3)
    } else {
        (P::new(), one(0, 0, 1), 2)
    };
    while at < m {
        let next = step(&cur, &prev);
        prev = std::mem::replace(&mut cur, next);
        at += 2;
    }
    cur
}

pub fn to_map(x: &BnElement) -> BTreeMap<(u32, i64), BigInt> {
    x.terms()
        .flat_map(|(j, c)| c.terms().map(move |(k, v)| ((j, k), v.clone())))
        .collect()
}

pub fn irrep(m: u32, o: Orientation) -> NRep {
    make_irrep(IrrepLabel::TwoDim(m, o)).unwrap()
}

pub fn plus(m: u32) -> NRep {
    irrep(m, Orientation::Plus)
}

/// Character oracle: the rank-2 weights `m > 0` (with multiplicity) and the
/// number of weight-0 lines of a representation, read off the torus
/// weights alone.
pub fn character(rep: &NRep) -> (Vec<u32>, usize) {
    let mut pos: Vec<u32> = rep.weights().iter().filter(|w| **w > 0).map(|w| *w as u32).collect();
    pos.sort_unstable_by(|a, b| b.cmp(a));
    let zeros = rep.weights().iter().filter(|w| **w == 0).count();
    (pos, zeros)
}

pub fn double_factorial(k: u32) -> BigInt {
    (1..=k).rev().step_by(2).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// Ring axioms for three Laurent polynomials.
pub fn gamma_laws(a: &GammaScalar, b: &GammaScalar, c: &GammaScalar) -> Result<(), TestCaseError> {
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a + &GammaScalar::zero(), a.clone());
    prop_assert_eq!(a * &GammaScalar::one(), a.clone());
    prop_assert!((a + &-a).is_zero());
    prop_assert!(a.terms().all(|(_, x)| *x != BigInt::from(0)));
    Ok(())
}

/// Ring axioms, twist additivity and the `ẽ²` rewrite for `BN` elements.
/// `a` and `b` share a twist so that they can be added.
pub fn bn_laws(a: &BnElement, b: &BnElement, c: &BnElement) -> Result<(), TestCaseError> {
    let m = |x: &BnElement, y: &BnElement| x.mul(y).unwrap();
    prop_assert_eq!(m(a, b), m(b, a));
    prop_assert_eq!(m(&m(a, b), c), m(a, &m(b, c)));
    prop_assert_eq!(m(a, b).twist(), a.twist() + b.twist());
    prop_assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
    prop_assert_eq!(m(&a.add(b).unwrap(), c), m(a, c).add(&m(b, c)).unwrap());
    prop_assert_eq!(m(a, &BnElement::one(a.cap())), a.clone());
    prop_assert!(a.sub(a).unwrap().is_zero());
    prop_assert!(a.terms().all(|(j, x)| j <= a.cap() && !x.is_zero()));
    Ok(())
}

/// Multiplying two twisted elements agrees with multiplying their
/// cofactors and then by `ẽ² = -4e² + γe⁴`, in either association.
pub fn rewrite_confluence(f: &BnElement, g: &BnElement) -> Result<(), TestCaseError> {
    let cap = f.cap();
    let with = |x: &BnElement, t| BnElement::from_terms(t, cap, x.terms().map(|(j, c)| (j, c.clone())));
    let (uf, ug) = (with(f, Twist::Untwisted), with(g, Twist::Untwisted));
    let (tf, tg) = (with(f, Twist::Twisted), with(g, Twist::Twisted));
    let et = BnElement::e_tilde(cap);
    let sq = BnElement::from_int_terms(Twist::Untwisted, cap, [(2, 0, -4), (4, 1, 1)]);
    let direct = tf.mul(&tg).unwrap();
    prop_assert_eq!(&direct, &uf.mul(&ug).unwrap().mul(&sq).unwrap());
    prop_assert_eq!(&direct, &et.mul(&et).unwrap().mul(&uf).unwrap().mul(&ug).unwrap());
    prop_assert_eq!(&direct, &et.mul(&uf).unwrap().mul(&et.mul(&ug).unwrap()).unwrap());
    prop_assert_eq!(&tf, &et.mul(&uf).unwrap());
    Ok(())
}

/// Truncating a product equals multiplying the truncations.
pub fn truncation_coherence(a: &BnElement, b: &BnElement, small: u32) -> Result<(), TestCaseError> {
    let lhs = a.mul(b).unwrap().truncate(small);
    let rhs = a.truncate(small).mul(&b.truncate(small)).unwrap();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn degree_multiplicativity(a: &BnElement, b: &BnElement) -> Result<(), TestCaseError> {
    use kwbn::Degree;
    let p = a.mul(b).unwrap();
    if let (Degree::Homogeneous(x), Degree::Homogeneous(y)) = (a.degree_of(), b.degree_of()) {
        match p.degree_of() {
            Degree::Homogeneous(z) => prop_assert_eq!(z, x + y),
            Degree::Zero => {}
            Degree::Inhomogeneous => prop_assert!(false, "product of homogeneous elements is inhomogeneous"),
        }
    }
    Ok(())
}

pub fn multipoly_laws(a: &MultiPoly, b: &MultiPoly, c: &MultiPoly) -> Result<(), TestCaseError> {
    let m = |x: &MultiPoly, y: &MultiPoly| x.mul(y).unwrap();
    let s = |x: &MultiPoly, y: &MultiPoly| x.add(y).unwrap();
    prop_assert_eq!(s(a, b), s(b, a));
    prop_assert_eq!(s(&s(a, b), c), s(a, &s(b, c)));
    prop_assert_eq!(m(a, b), m(b, a));
    prop_assert_eq!(m(&m(a, b), c), m(a, &m(b, c)));
    prop_assert_eq!(m(a, &s(b, c)), s(&m(a, b), &m(a, c)));
    prop_assert_eq!(m(a, &MultiPoly::one(xi_vars())), a.clone());
    prop_assert!(a.sub(a).unwrap().is_zero());
    Ok(())
}

/// Substitution into the `BN` ring is a ring homomorphism.
pub fn substitution_homomorphism(
    a: &MultiPoly,
    b: &MultiPoly,
    values: &[BnElement; 3],
) -> Result<(), TestCaseError> {
    let cap = values[0].cap();
    let assign: BTreeMap<String, BnElement> = kwbn::ternary::ROOT_NAMES
        .iter()
        .zip(values)
        .map(|(n, v)| (n.to_string(), v.clone()))
        .collect();
    let ev = |p: &MultiPoly| p.substitute(&assign, cap).unwrap();
    prop_assert_eq!(ev(&a.mul(b).unwrap()), ev(a).mul(&ev(b)).unwrap());
    prop_assert_eq!(ev(&a.add(b).unwrap()), ev(a).add(&ev(b)).unwrap());
    Ok(())
}

/// Random elements of `⟦p₁, p₂, e⟧ = BSL₆`, truncated at total degree 24.
pub fn bsl6_element() -> impl Strategy<Value = MultiPoly> {
    let ring = kwbn::classifying::bsl_presentation(6, 24).unwrap();
    let vars = ring.variables();
    prop::collection::vec((prop::collection::vec(0u32..=6, 3), -9i64..=9), 0..8).prop_map(move |ts| {
        ring.element(
            &MultiPoly::from_terms(vars.clone(), ts.into_iter().map(|(e, c)| (e, GammaScalar::constant(c)))).unwrap(),
        )
        .unwrap()
    })
}
