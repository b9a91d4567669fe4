//! Group axioms, the two summation strategies, the permutation action and
//! fixed points, checked on seeded random elements.

mod common;

use common::*;
use jetgroups::jet::{self, Summation};
use jetgroups::tangent::{self, Permutation};
use jetgroups::{Jet, Side, Tangent};
use proptest::prelude::*;

const ALGEBRAS: &[&str] = &["sl2", "heis3", "so3", "nilpotent_upper(4)", "abelian(2)", "leibniz2"];

#[test]
fn jet_group_axioms() {
    for name in ALGEBRAS {
        let a = alg(name);
        let with_g = !a.is_leibniz();
        let mut g = rng(31);
        for side in [Side::Right, Side::Left] {
            for k in 1..=5 {
                let e = Jet::identity(&a, k, side).unwrap();
                for _ in 0..8 {
                    let x = g.jet(&a, k, side, with_g).unwrap();
                    let y = g.jet(&a, k, side, with_g).unwrap();
                    let z = g.jet(&a, k, side, with_g).unwrap();
                    let m = |p: &Jet, q: &Jet| jet::multiply(&a, p, q).unwrap();
                    assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)), "{name} k={k} {side}");
                    assert_eq!(m(&x, &e), x);
                    assert_eq!(m(&e, &x), x);
                    let w = jet::inverse(&a, &x).unwrap();
                    assert_eq!(m(&x, &w), e);
                    assert_eq!(m(&w, &x), e);
                }
            }
        }
    }
}

#[test]
fn tangent_group_axioms() {
    for name in ALGEBRAS {
        let a = alg(name);
        let with_g = !a.is_leibniz();
        let mut g = rng(32);
        for side in [Side::Right, Side::Left] {
            for k in 1..=4 {
                let e = Tangent::identity(&a, k, side).unwrap();
                for _ in 0..4 {
                    let x = g.tangent(&a, k, side, with_g).unwrap();
                    let y = g.tangent(&a, k, side, with_g).unwrap();
                    let z = g.tangent(&a, k, side, with_g).unwrap();
                    let m = |p: &Tangent, q: &Tangent| tangent::multiply(&a, p, q).unwrap();
                    assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)), "{name} k={k} {side}");
                    assert_eq!(m(&x, &e), x);
                    assert_eq!(m(&e, &x), x);
                    let w = tangent::inverse(&a, &x).unwrap();
                    assert_eq!(m(&x, &w), e);
                    assert_eq!(m(&w, &x), e);
                }
            }
        }
    }
}

#[test]
fn summation_strategies_agree() {
    for name in ["sl2", "so3"] {
        let a = alg(name);
        let mut g = rng(33);
        for side in [Side::Right, Side::Left] {
            for k in 1..=6 {
                let x = g.jet(&a, k, side, true).unwrap();
                let y = g.jet(&a, k, side, true).unwrap();
                assert_eq!(
                    jet::multiply_with(&a, &x, &y, Summation::Partitions).unwrap(),
                    jet::multiply_with(&a, &x, &y, Summation::Compositions).unwrap()
                );
                assert_eq!(
                    jet::inverse_with(&a, &x, Summation::Partitions).unwrap(),
                    jet::inverse_with(&a, &x, Summation::Compositions).unwrap()
                );
            }
        }
    }
}

#[test]
fn tangent_formula_matches_jet_formula_on_initial_segments() {
    // the component at {1..n} only sees components inside {1..n}
    let a = alg("sl2");
    let mut g = rng(34);
    for k in 1..=4 {
        let x = g.jet(&a, k, Side::Right, true).unwrap();
        let y = g.jet(&a, k, Side::Right, true).unwrap();
        let z = jet::multiply(&a, &x, &y).unwrap();
        let t = tangent::multiply(&a, &tangent::embed_jet(&x).unwrap(), &tangent::embed_jet(&y).unwrap()).unwrap();
        assert!(tangent::is_symmetric(&t));
        assert_eq!(tangent::project_jet(&t).unwrap(), z);
    }
}

#[test]
fn permutation_action_is_a_left_action() {
    let a = alg("heis3");
    let mut g = rng(35);
    for k in 1..=3 {
        let x = g.tangent(&a, k, Side::Right, true).unwrap();
        let all = Permutation::all(k);
        assert_eq!(tangent::permute(&Permutation::identity(k), &x).unwrap(), x);
        for s in &all {
            let sx = tangent::permute(s, &x).unwrap();
            assert_eq!(sx.g, x.g);
            for alpha in x.indices() {
                assert_eq!(sx.component(s.apply_index(alpha)), x.component(alpha));
            }
            for t in &all {
                assert_eq!(
                    tangent::permute(&s.compose(t).unwrap(), &x).unwrap(),
                    tangent::permute(s, &tangent::permute(t, &x).unwrap()).unwrap()
                );
            }
        }
    }
}

#[test]
fn symmetric_iff_fixed_by_s3() {
    let a = alg("sl2");
    let mut g = rng(36);
    let sym = tangent::embed_jet(&g.jet(&a, 3, Side::Right, true).unwrap()).unwrap();
    let gen = g.tangent(&a, 3, Side::Right, true).unwrap();
    for x in [sym, gen] {
        let fixed = Permutation::all(3).iter().all(|s| tangent::permute(s, &x).unwrap() == x);
        assert_eq!(fixed, tangent::is_symmetric(&x));
    }
}

#[test]
fn fixed_points_form_a_subgroup() {
    let a = alg("sl2");
    let mut g = rng(37);
    for side in [Side::Right, Side::Left] {
        for k in 1..=4 {
            for _ in 0..5 {
                let x = g.jet(&a, k, side, true).unwrap();
                let y = g.jet(&a, k, side, true).unwrap();
                let (ex, ey) = (tangent::embed_jet(&x).unwrap(), tangent::embed_jet(&y).unwrap());
                let p = tangent::multiply(&a, &ex, &ey).unwrap();
                assert_eq!(p, tangent::embed_jet(&jet::multiply(&a, &x, &y).unwrap()).unwrap());
                let w = tangent::inverse(&a, &ex).unwrap();
                assert!(tangent::is_symmetric(&w));
                assert_eq!(tangent::project_jet(&w).unwrap(), jet::inverse(&a, &x).unwrap());
            }
        }
    }
    let x = g.tangent(&a, 2, Side::Right, false).unwrap();
    assert!(tangent::project_jet(&x).is_err());
}

#[test]
fn fiber_product_is_affine_in_the_right_factor() {
    let a = alg("so3");
    let mut g = rng(38);
    for k in 1..=5 {
        for _ in 0..10 {
            let x = g.elements(&a, k);
            let y = g.elements(&a, k);
            let y2 = g.elements(&a, k);
            let sum: Vec<_> = y.iter().zip(&y2).map(|(p, q)| p.add(q)).collect();
            let m = |p: &Vec<_>, q: &Vec<_>| jet::multiply(&a, &fiber(p.clone()), &fiber(q.clone())).unwrap();
            let (lhs, p, q) = (m(&x, &sum), m(&x, &y), m(&x, &y2));
            for n in 0..k {
                assert_eq!(lhs.x[n], p.x[n].add(&q.x[n]).sub(&x[n]));
            }
        }
    }
}

#[test]
fn factorization_folds_back() {
    for name in ["heis3", "sl2"] {
        let a = alg(name);
        let mut g = rng(39);
        for k in 1..=4 {
            let x = g.tangent(&a, k, Side::Right, true).unwrap();
            let factors = tangent::factor_pure(&a, &x).unwrap();
            let pure = factors.iter().take((1 << k) - 1);
            assert!(pure.clone().all(|f| f.components().iter().filter(|c| !c.is_zero()).count() <= 1));
            assert_eq!(tangent::fold_product(&a, &factors).unwrap(), x);
        }
    }
    let a = alg("sl2");
    let left = rng(40).tangent(&a, 2, Side::Left, false).unwrap();
    assert!(tangent::factor_pure(&a, &left).is_err());
}

#[test]
fn mismatched_operands_are_rejected() {
    let a = alg("sl2");
    let mut g = rng(41);
    let x = g.jet(&a, 2, Side::Right, true).unwrap();
    let y = g.jet(&a, 3, Side::Right, true).unwrap();
    let z = g.jet(&a, 2, Side::Left, true).unwrap();
    assert!(jet::multiply(&a, &x, &y).is_err());
    assert!(jet::multiply(&a, &x, &z).is_err());
    let l = alg("leibniz2");
    let bad = Jet::new(x.g.clone(), vec![l.zero(), l.zero()], Side::Right).unwrap();
    assert!(jet::multiply(&l, &bad, &bad).is_err());
}

fn small_rational() -> impl Strategy<Value = jetgroups::Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| r(p, q))
}

fn fiber_jet(dim: usize, k: usize) -> impl Strategy<Value = Jet> {
    proptest::collection::vec(proptest::collection::vec(small_rational(), dim), k)
        .prop_map(|rows| fiber(rows.into_iter().map(jetgroups::AlgebraElement).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn leibniz_fiber_is_a_group(x in fiber_jet(2, 4), y in fiber_jet(2, 4), z in fiber_jet(2, 4)) {
        let a = alg("leibniz2");
        let m = |p: &Jet, q: &Jet| jet::multiply(&a, p, q).unwrap();
        prop_assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)));
        let w = jet::inverse(&a, &x).unwrap();
        prop_assert_eq!(m(&x, &w), Jet::identity(&a, 4, Side::Right).unwrap());
    }

    #[test]
    fn sl2_fiber_inverse(x in fiber_jet(3, 5)) {
        let a = alg("sl2");
        let w = jet::inverse(&a, &x).unwrap();
        prop_assert_eq!(jet::multiply(&a, &w, &x).unwrap(), Jet::identity(&a, 5, Side::Right).unwrap());
    }
}
