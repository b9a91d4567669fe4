//! Verification suites run by `jetgroups check`. Every check is an exact
//! equality on seeded random inputs; a failing check names the trial.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::algebra::{AlgebraKind, AlgebraSpec, GroupPoint};
use crate::cocycle::{self, polarized_cocycle, polarized_commutator};
use crate::error::{input, Error, Result};
use crate::exact::bell_number;
use crate::jet::{self, JetElement, Side, Summation};
use crate::partitions::{self, compositions, count_with_sizes, enumerate_partitions, Partition};
use crate::random::Lcg;
use crate::scalar::Scalar;
use crate::tangent::{self, Permutation};
use crate::taylor;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Pass, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Fail, detail: detail.into() }
    }

    pub fn skip(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Skip, detail: detail.into() }
    }

    /// Skipped checks count as passed.
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    GroupAxioms,
    Oracle,
    Cocycles,
    Partitions,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "group-axioms" => Suite::GroupAxioms,
            "oracle" => Suite::Oracle,
            "cocycles" => Suite::Cocycles,
            "partitions" => Suite::Partitions,
            _ => return input(format!("unknown suite {s:?}")),
        })
    }
}

/// Highest orders exercised when no `k` is given.
pub const DEFAULT_JET_ORDER: usize = 5;
pub const DEFAULT_ORACLE_ORDER: usize = 6;
pub const DEFAULT_TANGENT_ORDER: usize = 4;
pub const DEFAULT_COCYCLE_ORDER: usize = 5;
pub const DEFAULT_PURE_ORDER: usize = 6;

/// Built-in algebras used when none is named.
pub const DEFAULT_ALGEBRAS: &[&str] =
    &["sl2", "so3", "heis3", "nilpotent_upper(4)", "abelian(2)", "leibniz2"];

#[derive(Debug, Clone)]
pub struct CheckConfig<T> {
    pub algebras: Vec<AlgebraSpec<T>>,
    /// Replaces every default order when set.
    pub k: Option<usize>,
    /// Upper bound applied after `k` or the defaults.
    pub max_k: Option<usize>,
    pub trials: usize,
    pub seed: u64,
}

impl<T: Scalar> CheckConfig<T> {
    fn order(&self, default: usize) -> usize {
        let k = self.k.unwrap_or(default);
        self.max_k.map_or(k, |m| k.min(m))
    }
}

pub fn run<T: Scalar>(suite: Suite, cfg: &CheckConfig<T>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    if matches!(suite, Suite::All | Suite::Partitions) {
        out.extend(partition_checks());
    }
    for alg in &cfg.algebras {
        if matches!(suite, Suite::All | Suite::GroupAxioms) {
            out.extend(group_axiom_checks(alg, cfg));
        }
        if matches!(suite, Suite::All | Suite::Oracle) {
            out.extend(oracle_checks(alg, cfg));
        }
        if matches!(suite, Suite::All | Suite::Cocycles) {
            out.extend(cocycle_checks(alg, cfg));
        }
    }
    out
}

/// Runs `trial` for `0..trials`; the first `Some(detail)` or error fails the
/// check.
fn trials(
    name: String,
    n: usize,
    mut trial: impl FnMut(usize) -> Result<Option<String>>,
) -> CheckReport {
    for t in 0..n {
        match trial(t) {
            Ok(None) => {}
            Ok(Some(why)) => return CheckReport::fail(name, format!("trial {t}: {why}")),
            Err(e) => return CheckReport::fail(name, format!("trial {t}: error: {e}")),
        }
    }
    CheckReport::pass(name, format!("{n} trials"))
}

fn expect(ok: bool, why: impl FnOnce() -> String) -> Option<String> {
    if ok { None } else { Some(why()) }
}

fn from_result(name: String, r: Result<CheckReport>) -> CheckReport {
    r.unwrap_or_else(|e| CheckReport::fail(name, format!("error: {e}")))
}

fn with_group<T: Scalar>(alg: &AlgebraSpec<T>) -> bool {
    !alg.is_leibniz()
}

fn seed_for(cfg_seed: u64, salt: u64) -> u64 {
    cfg_seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(salt)
}

/// Bell counts up to 8, count formula against enumeration up to 7, and the
/// derived-partition bijection up to 6.
pub fn partition_checks() -> Vec<CheckReport> {
    let mut out = Vec::new();
    let name = "partition counts |P_n| = Bell(n)".to_string();
    out.push(from_result(name.clone(), (|| {
        for n in 1..=8 {
            let got = enumerate_partitions(n)?.len();
            if BigInt::from(got) != bell_number(n)? {
                return Ok(CheckReport::fail(name.clone(), format!("n = {n}: {got} partitions")));
            }
        }
        Ok(CheckReport::pass(name.clone(), "n = 1..8".to_string()))
    })()));

    let name = "count formula vs enumeration by block sizes".to_string();
    out.push(from_result(name.clone(), (|| {
        for n in 1..=7 {
            for c in compositions(n) {
                let listed = partitions::partitions_with_sizes(n, &c)?;
                if BigInt::from(listed.len()) != count_with_sizes(&c) {
                    return Ok(CheckReport::fail(name.clone(), format!("sizes {c}")));
                }
                if listed.iter().any(|p| p.sizes() != c || !p.is_canonical()) {
                    return Ok(CheckReport::fail(name.clone(), format!("sizes {c}: wrong member")));
                }
            }
        }
        Ok(CheckReport::pass(name.clone(), format!("all compositions of n <= {}", 7)))
    })()));

    let name = "derived partitions biject onto P_{n+1}".to_string();
    out.push(from_result(name.clone(), (|| {
        for n in 1..=6 {
            let mut all: Vec<Partition> = Vec::new();
            for lambda in enumerate_partitions(n)? {
                for rho in lambda.derived() {
                    if rho.parent()? != lambda {
                        return Ok(CheckReport::fail(name.clone(), format!("parent of {rho} is not {lambda}")));
                    }
                    all.push(rho);
                }
            }
            let mut sorted = all.clone();
            sorted.sort_by_key(|p| p.to_string());
            sorted.dedup();
            let mut want = enumerate_partitions(n + 1)?;
            want.sort_by_key(|p| p.to_string());
            if sorted.len() != all.len() || sorted != want {
                return Ok(CheckReport::fail(name.clone(), format!("n = {n}")));
            }
        }
        Ok(CheckReport::pass(name.clone(), "n = 1..6".to_string()))
    })()));
    out
}

pub fn group_axiom_checks<T: Scalar>(alg: &AlgebraSpec<T>, cfg: &CheckConfig<T>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let mut rng = Lcg::new(seed_for(cfg.seed, 1));
    let g = with_group(alg);
    let an = alg.name();
    for side in [Side::Right, Side::Left] {
        for k in 1..=cfg.order(DEFAULT_JET_ORDER) {
            out.push(trials(format!("jet group axioms k={k} {side} ({an})"), cfg.trials, |_| {
                let a = rng.jet(alg, k, side, g)?;
                let b = rng.jet(alg, k, side, g)?;
                let c = rng.jet(alg, k, side, g)?;
                let e = JetElement::identity(alg, k, side)?;
                let m = |p: &JetElement<T>, q: &JetElement<T>| jet::multiply(alg, p, q);
                if m(&m(&a, &b)?, &c)? != m(&a, &m(&b, &c)?)? {
                    return Ok(Some("associativity".into()));
                }
                if m(&a, &e)? != a || m(&e, &a)? != a {
                    return Ok(Some("identity".into()));
                }
                let inv = jet::inverse(alg, &a)?;
                Ok(expect(m(&a, &inv)? == e && m(&inv, &a)? == e, || "inverse".into()))
            }));
        }
        for k in 1..=cfg.order(DEFAULT_TANGENT_ORDER).min(tangent::MAX_TANGENT_ORDER) {
            out.push(trials(format!("tangent group axioms k={k} {side} ({an})"), cfg.trials, |_| {
                let a = rng.tangent(alg, k, side, g)?;
                let b = rng.tangent(alg, k, side, g)?;
                let c = rng.tangent(alg, k, side, g)?;
                let e = tangent::TangentElement::identity(alg, k, side)?;
                let m = |p: &tangent::TangentElement<T>, q: &tangent::TangentElement<T>| tangent::multiply(alg, p, q);
                if m(&m(&a, &b)?, &c)? != m(&a, &m(&b, &c)?)? {
                    return Ok(Some("associativity".into()));
                }
                if m(&a, &e)? != a || m(&e, &a)? != a {
                    return Ok(Some("identity".into()));
                }
                let inv = tangent::inverse(alg, &a)?;
                Ok(expect(m(&a, &inv)? == e && m(&inv, &a)? == e, || "inverse".into()))
            }));
        }
    }
    for k in 1..=cfg.order(DEFAULT_JET_ORDER) {
        out.push(trials(format!("summation by partitions = by compositions k={k} ({an})"), cfg.trials, |_| {
            let a = rng.jet(alg, k, Side::Right, g)?;
            let b = rng.jet(alg, k, Side::Right, g)?;
            let same_mul = jet::multiply_with(alg, &a, &b, Summation::Partitions)?
                == jet::multiply_with(alg, &a, &b, Summation::Compositions)?;
            let same_inv = jet::inverse_with(alg, &a, Summation::Partitions)?
                == jet::inverse_with(alg, &a, Summation::Compositions)?;
            Ok(expect(same_mul && same_inv, || "summations disagree".into()))
        }));
        out.push(trials(format!("fiber product is affine in y k={k} ({an})"), cfg.trials, |_| {
            let x = rng.jet(alg, k, Side::Right, false)?;
            let y = rng.jet(alg, k, Side::Right, false)?;
            let y2 = rng.jet(alg, k, Side::Right, false)?;
            let sum = JetElement::fiber(y.x.iter().zip(&y2.x).map(|(p, q)| p.add(q)).collect(), Side::Right)?;
            let lhs = jet::multiply(alg, &x, &sum)?;
            let (p, q) = (jet::multiply(alg, &x, &y)?, jet::multiply(alg, &x, &y2)?);
            let ok = (0..k).all(|n| lhs.x[n] == p.x[n].add(&q.x[n]).sub(&x.x[n]));
            Ok(expect(ok, || "m(x, y + y') != m(x, y) + m(x, y') - x".into()))
        }));
    }
    let kp = cfg.order(DEFAULT_PURE_ORDER);
    out.push(trials(format!("pure products match the closed form k<={kp} ({an})"), cfg.trials.clamp(1, 10), |_| {
        for k in 2..=kp {
            for j in 2..=k {
                for i in 1..j {
                    let (x, y) = (rng.element(alg), rng.element(alg));
                    let direct = jet::multiply(
                        alg,
                        &JetElement::pure(alg, k, i, x.clone())?,
                        &JetElement::pure(alg, k, j, y.clone())?,
                    )?;
                    if direct != jet::pure_product(alg, i, &x, j, &y, k)? {
                        return Ok(Some(format!("i={i} j={j} k={k}")));
                    }
                }
            }
        }
        Ok(None)
    }));
    for k in 1..=cfg.order(DEFAULT_TANGENT_ORDER).min(tangent::MAX_TANGENT_ORDER) {
        out.push(trials(format!("fixed points form a subgroup isomorphic to J^k k={k} ({an})"), cfg.trials, |_| {
            for side in [Side::Right, Side::Left] {
                let a = rng.jet(alg, k, side, g)?;
                let b = rng.jet(alg, k, side, g)?;
                let (ea, eb) = (tangent::embed_jet(&a)?, tangent::embed_jet(&b)?);
                let prod = tangent::multiply(alg, &ea, &eb)?;
                if prod != tangent::embed_jet(&jet::multiply(alg, &a, &b)?)? {
                    return Ok(Some(format!("embedding is not multiplicative ({side})")));
                }
                let inv = tangent::inverse(alg, &ea)?;
                if !tangent::is_symmetric(&prod) || !tangent::is_symmetric(&inv) {
                    return Ok(Some(format!("fixed points not closed ({side})")));
                }
                if tangent::project_jet(&ea)? != a {
                    return Ok(Some("projection does not undo embedding".into()));
                }
            }
            Ok(None)
        }));
        out.push(trials(format!("pure factorization folds back k={k} ({an})"), cfg.trials, |_| {
            let a = rng.tangent(alg, k, Side::Right, g)?;
            let factors = tangent::factor_pure(alg, &a)?;
            Ok(expect(tangent::fold_product(alg, &factors)? == a, || "fold differs".into()))
        }));
    }
    let kp = cfg.order(3).min(tangent::MAX_TANGENT_ORDER);
    out.push(trials(format!("permutations act on T^k k<={kp} ({an})"), cfg.trials.clamp(1, 5), |_| {
        for k in 1..=kp {
            let a = rng.tangent(alg, k, Side::Right, g)?;
            let all = Permutation::all(k);
            if tangent::permute(&Permutation::identity(k), &a)? != a {
                return Ok(Some("identity permutation".into()));
            }
            for s in &all {
                for t in &all {
                    let lhs = tangent::permute(&s.compose(t)?, &a)?;
                    if lhs != tangent::permute(s, &tangent::permute(t, &a)?)? {
                        return Ok(Some(format!("composition k={k}")));
                    }
                }
            }
            let fixed = all.iter().map(|s| tangent::permute(s, &a)).collect::<Result<Vec<_>>>()?;
            if fixed.iter().all(|b| *b == a) != tangent::is_symmetric(&a) {
                return Ok(Some("symmetry test disagrees with the orbit".into()));
            }
        }
        Ok(None)
    }));
    out
}

pub fn oracle_checks<T: Scalar>(alg: &AlgebraSpec<T>, cfg: &CheckConfig<T>) -> Vec<CheckReport> {
    let an = alg.name();
    if alg.kind() != AlgebraKind::Matrix {
        return vec![CheckReport::skip(format!("Taylor oracle ({an})"), "needs a matrix algebra")];
    }
    let mut out = Vec::new();
    let mut rng = Lcg::new(seed_for(cfg.seed, 2));
    for side in [Side::Right, Side::Left] {
        for k in 1..=cfg.order(DEFAULT_ORACLE_ORDER) {
            out.push(trials(format!("product and inverse match the Taylor oracle k={k} {side} ({an})"), cfg.trials, |_| {
                let a = rng.jet(alg, k, side, true)?;
                let b = rng.jet(alg, k, side, true)?;
                if jet::multiply(alg, &a, &b)? != taylor::oracle_multiply(alg, &a, &b)? {
                    return Ok(Some("product".into()));
                }
                if jet::inverse(alg, &a)? != taylor::oracle_inverse(alg, &a)? {
                    return Ok(Some("inverse".into()));
                }
                let back = taylor::trivialize(alg, &taylor::from_trivialization(alg, &a)?, side)?;
                if back != a {
                    return Ok(Some("trivialization round trip".into()));
                }
                let conv = |j: &JetElement<T>| taylor::convert_side(alg, j);
                let ok = conv(&jet::multiply(alg, &a, &b)?)? == jet::multiply(alg, &conv(&a)?, &conv(&b)?)?;
                Ok(expect(ok, || "changing trivialization is not multiplicative".into()))
            }));
        }
    }
    let kr = cfg.order(5).min(5);
    if kr >= 4 {
        out.push(trials(format!("exponential curves in right trivialization k={kr} ({an})"), cfg.trials, |_| {
            let x = rng.elements(alg, kr);
            let g = match rng.group_point(alg) {
                GroupPoint::Matrix(m) => m,
                _ => crate::exact::Matrix::identity(alg.matrix_size().unwrap()),
            };
            let t = taylor::trivialize(alg, &taylor::exponential_curve(alg, &g, &x)?, Side::Right)?;
            let half = T::ratio(1, 2);
            let br = |p: &crate::AlgebraElement<T>, q: &crate::AlgebraElement<T>| alg.bracket(p, q);
            let want = [
                x[0].clone(),
                x[1].clone(),
                x[2].add(&br(&x[0], &x[1])?.scale(&half)),
                x[3].add(&br(&x[0], &x[2])?).add(&br(&x[0], &br(&x[0], &x[1])?)?.scale(&half)),
            ];
            Ok(expect(t.x[..4] == want[..] && t.g == GroupPoint::Matrix(g.clone()), || "components".into()))
        }));
    }
    out
}

pub fn cocycle_checks<T: Scalar>(alg: &AlgebraSpec<T>, cfg: &CheckConfig<T>) -> Vec<CheckReport> {
    let an = alg.name();
    let mut out = Vec::new();
    let top = cfg.order(DEFAULT_COCYCLE_ORDER).max(2);
    for k in 2..=top {
        let name = format!("group cocycle c_{k} ({an})");
        out.push(from_result(name, cocycle::verify_group_cocycle(alg, k, cfg.trials, seed_for(cfg.seed, 10 + k as u64))));
        let name = format!("algebra cocycle sigma_{k} ({an})");
        out.push(from_result(name, cocycle::verify_algebra_cocycle(alg, k, cfg.trials, seed_for(cfg.seed, 20 + k as u64))));
    }
    let mut rng = Lcg::new(seed_for(cfg.seed, 3));
    if alg.is_leibniz() {
        out.push(CheckReport::skip(format!("polynomial bracket ({an})"), "needs an antisymmetric bracket"));
        return out;
    }
    out.push(trials(format!("sigma_2 = 2[x, y] from the group cocycle ({an})"), cfg.trials, |_| {
        let (x, y) = (rng.element(alg), rng.element(alg));
        let p = polarized_cocycle(alg, 2, std::slice::from_ref(&x), std::slice::from_ref(&y))?
            .sub(&polarized_cocycle(alg, 2, std::slice::from_ref(&y), std::slice::from_ref(&x))?);
        Ok(expect(p == alg.bracket(&x, &y)?.scale(&T::from_i64(2)), || "mismatch".into()))
    }));
    let kb = cfg.order(4).min(4);
    out.push(trials(format!("polynomial bracket k={kb}: Jacobi and fiber polarization ({an})"), cfg.trials, |_| {
        let a = rng.jet_algebra(alg, kb);
        let b = rng.jet_algebra(alg, kb);
        let c = rng.jet_algebra(alg, kb);
        let br = |p, q| cocycle::jet_algebra_bracket(alg, p, q);
        let (bc, ca, ab) = (br(&b, &c)?, br(&c, &a)?, br(&a, &b)?);
        let (j1, j2, j3) = (br(&a, &bc)?, br(&b, &ca)?, br(&c, &ab)?);
        let zero = j1.xi.add(&j2.xi).add(&j3.xi).is_zero()
            && (0..kb).all(|n| j1.x[n].add(&j2.x[n]).add(&j3.x[n]).is_zero());
        if !zero {
            return Ok(Some("Jacobi".into()));
        }
        let mut fa = a.clone();
        fa.xi = alg.zero();
        let mut fb = b.clone();
        fb.xi = alg.zero();
        let ab = br(&fa, &fb)?;
        Ok(expect(polarized_commutator(alg, &a.x, &b.x)? == ab.x, || "fiber polarization".into()))
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{builtin, Rational};

    fn cfg(names: &[&str], k: usize, trials: usize) -> CheckConfig<Rational> {
        CheckConfig {
            algebras: names.iter().map(|n| builtin(n).unwrap()).collect(),
            k: Some(k),
            max_k: None,
            trials,
            seed: 1,
        }
    }

    #[test]
    fn small_suites_pass() {
        let reports = run(Suite::All, &cfg(&["sl2", "leibniz2", "abelian(2)"], 3, 2));
        for r in &reports {
            assert!(r.passed(), "{r}");
        }
        assert!(reports.iter().any(|r| r.status == Status::Skip));
    }

    #[test]
    fn suite_names() {
        assert_eq!("oracle".parse::<Suite>().unwrap(), Suite::Oracle);
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn report_lines() {
        let r = CheckReport::fail("x", "trial 3: inverse");
        assert_eq!(r.to_string(), "FAIL x: trial 3: inverse");
        assert!(!r.passed());
    }
}
