#![allow(dead_code)]

use jetgroups::random::Lcg;
use jetgroups::{builtin, Algebra, AlgebraElement, Element, Jet, Rational, Scalar, Side};

pub const MATRIX_ALGEBRAS: &[&str] = &["sl2", "heis3", "so3", "nilpotent_upper(4)"];

pub fn alg(name: &str) -> Algebra {
    builtin(name).unwrap()
}

pub fn el(v: &[i64]) -> Element {
    AlgebraElement(v.iter().map(|&c| Rational::from_i64(c)).collect())
}

pub fn r(p: i64, q: i64) -> Rational {
    Rational::ratio(p, q)
}

pub fn fiber(x: Vec<Element>) -> Jet {
    Jet::fiber(x, Side::Right).unwrap()
}

/// `[x, y]` shorthand.
pub fn br(a: &Algebra, x: &Element, y: &Element) -> Element {
    a.bracket(x, y).unwrap()
}

pub fn rng(seed: u64) -> Lcg {
    Lcg::new(seed)
}
