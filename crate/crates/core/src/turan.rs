//! Closed-form Turán numbers `ex(p; T)` for the supported tree families.
//!
//! Throughout, `p = k(n-1) + r` with `0 <= r <= n-2`. The formulas:
//!
//! * path: `k*C(n-1,2) + C(r,2) = ((n-2)p - r(n-1-r)) / 2`
//! * star: `floor((n-2)p / 2)`
//! * tprime (`p >= n >= 5`): `floor(((n-2)(p-1) - r - 1) / 2)` when `n >= 7`
//!   and `2 <= r <= n-4`, else the path value
//! * t1, t2 (`p >= n-1 >= 4`): the larger of the *deficit* value
//!   `floor((n-2)p/2) - (n-1+r)` and the *clique union* value
//!   `((n-2)p - r(n-1-r)) / 2`
//!
//! Graphs on fewer than `n` vertices cannot contain an `n`-vertex tree, so
//! `p < n` always yields `C(p, 2)`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::constructions::near_regular_sequence;
use crate::error::{Error, Result};
use crate::graph::{Component, WitnessDescriptor};
use crate::trees::{Family, TreeSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Branch {
    /// `k K_{n-1} u K_r`.
    CliqueUnion,
    /// `(k-1) K_{n-1}` plus a near-regular part of degree `n-4`.
    Deficit,
    /// `p < n`: the complete graph.
    TrivialComplete,
    /// Star bound and the tprime special case: near-regular parts.
    Special,
}

/// The two candidates of the spider (`t1`/`t2`) maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BranchValues {
    pub deficit: u64,
    pub clique_union: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExResult {
    pub family: Family,
    pub n: usize,
    pub p: u64,
    pub k: u64,
    pub r: u64,
    pub value: u64,
    pub branch: Branch,
    pub branch_values: Option<BranchValues>,
    /// Both spider branches attain the maximum.
    pub tie: bool,
    pub witness: WitnessDescriptor,
}

/// `p = k(n-1) + r`, `0 <= r <= n-2`. Requires `n >= 2`.
pub fn decompose(n: usize, p: u64) -> (u64, u64) {
    let m = n as u64 - 1;
    (p / m, p % m)
}

fn narrow(v: i128, what: &'static str) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow(what))
}

/// Halve a quantity the algebra guarantees to be even.
fn exact_half(v: i128, what: &'static str) -> Result<i128> {
    if v % 2 != 0 {
        return Err(Error::Inconsistent(format!("{what}: {v} is odd")));
    }
    Ok(v / 2)
}

fn checked(p: u64) -> Result<i128> {
    // Keeps every product below in range.
    if p > (1 << 40) {
        return Err(Error::Overflow("order too large"));
    }
    Ok(p as i128)
}

fn clique_union_value(n: i128, p: i128, r: i128) -> Result<i128> {
    exact_half((n - 2) * p - r * (n - 1 - r), "clique union value")
}

fn deficit_value(n: i128, p: i128, r: i128) -> i128 {
    ((n - 2) * p).div_euclid(2) - (n - 1 + r)
}

fn cliques_then(k: u64, n: usize, tail: Option<Component>) -> WitnessDescriptor {
    let mut w = WitnessDescriptor::union(Vec::new());
    w.push_cliques(k as usize, n - 1);
    if let Some(c) = tail {
        if c.order() > 0 {
            w.components.push(c);
        }
    }
    w
}

fn near_regular_part(order: u64, degree: usize) -> Component {
    Component::DegreeSeq(near_regular_sequence(order as usize, degree))
}

pub fn ex_value(family: Family, n: usize, p: u64) -> Result<ExResult> {
    TreeSpec::new(family, n)?;
    let pp = checked(p)?;
    let (k, r) = if n >= 2 { decompose(n, p) } else { (0, 0) };
    let base = |value: u64, branch, witness| ExResult {
        family,
        n,
        p,
        k,
        r,
        value,
        branch,
        branch_values: None,
        tie: false,
        witness,
    };

    if p < n as u64 {
        let value = crate::graph::choose2(p);
        let mut w = WitnessDescriptor::union(Vec::new());
        w.push_cliques(1, p as usize);
        return Ok(base(value, Branch::TrivialComplete, w));
    }

    let nn = n as i128;
    let rr = r as i128;
    match family {
        Family::Path => {
            if n < 2 {
                return Err(Error::OutsideDomain(
                    "every graph with a vertex contains the one-vertex path".into(),
                ));
            }
            let v = clique_union_value(nn, pp, rr)?;
            let direct = k as i128 * ((nn - 1) * (nn - 2) / 2) + rr * (rr - 1) / 2;
            if v != direct {
                return Err(Error::Inconsistent(format!("path value {v} != {direct}")));
            }
            let w = cliques_then(k, n, Some(Component::Clique(r as usize)));
            Ok(base(narrow(v, "ex(p; path)")?, Branch::CliqueUnion, w))
        }
        Family::Star => {
            let v = ((nn - 2) * pp).div_euclid(2);
            let w = WitnessDescriptor::union(vec![near_regular_part(p, n - 2)]);
            Ok(base(narrow(v, "ex(p; star)")?, Branch::Special, w))
        }
        Family::Tprime => {
            if n < 5 {
                return Err(Error::OutsideDomain(format!(
                    "tprime closed form needs n >= 5, got n = {n}"
                )));
            }
            if n >= 7 && (2..=n as u64 - 4).contains(&r) {
                let v = ((nn - 2) * (pp - 1) - rr - 1).div_euclid(2);
                let w = cliques_then(k - 1, n, Some(near_regular_part(n as u64 - 1 + r, n - 3)));
                Ok(base(narrow(v, "ex(p; tprime)")?, Branch::Special, w))
            } else {
                let v = clique_union_value(nn, pp, rr)?;
                let w = cliques_then(k, n, Some(Component::Clique(r as usize)));
                Ok(base(narrow(v, "ex(p; tprime)")?, Branch::CliqueUnion, w))
            }
        }
        Family::Tstar => Err(Error::UnsupportedFamily(Family::Tstar)),
        Family::T1 | Family::T2 => {
            let deficit = deficit_value(nn, pp, rr);
            let clique = clique_union_value(nn, pp, rr)?;
            let values = BranchValues {
                deficit: narrow(deficit, "deficit branch")?,
                clique_union: narrow(clique, "clique union branch")?,
            };
            let (value, branch, witness) = match deficit.cmp(&clique) {
                Ordering::Less => (
                    clique,
                    Branch::CliqueUnion,
                    cliques_then(k, n, Some(Component::Clique(r as usize))),
                ),
                Ordering::Equal | Ordering::Greater => (
                    deficit,
                    Branch::Deficit,
                    cliques_then(k - 1, n, Some(near_regular_part(n as u64 - 1 + r, n - 4))),
                ),
            };
            let mut res = base(narrow(value, "ex(p; spider)")?, branch, witness);
            res.branch_values = Some(values);
            res.tie = deficit == clique;
            Ok(res)
        }
    }
}

/// The spider value by its case split rather than by the maximum: the deficit
/// form exactly when `n >= 16` and `3 <= r <= n-6`, or `13 <= n <= 15` and
/// `4 <= r <= n-7`. Valid for `p >= n-1 >= 4`.
pub fn spider_piecewise(n: usize, p: u64) -> Result<u64> {
    if n < 5 || p + 1 < n as u64 {
        return Err(Error::OutsideDomain(format!("need p >= n-1 >= 4, got n={n}, p={p}")));
    }
    let (_, r) = decompose(n, p);
    let n64 = n as u64;
    let deficit_case = (n >= 16 && (3..=n64 - 6).contains(&r))
        || ((13..=15).contains(&n) && (4..=n64 - 7).contains(&r));
    let (nn, pp, rr) = (n as i128, checked(p)?, r as i128);
    let v = if deficit_case { deficit_value(nn, pp, rr) } else { clique_union_value(nn, pp, rr)? };
    narrow(v, "piecewise spider value")
}

fn require_spider(family: Family) -> Result<()> {
    if family.is_spider() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{family}: only t1 and t2 are accepted here")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExBounds {
    /// `(n-2)p/2 - (n-1)^2/8` as a reduced fraction.
    pub lo_numerator: i64,
    pub lo_denominator: u64,
    /// Ceiling of the rational lower bound.
    pub lo: u64,
    /// `floor((n-2)(p-1)/2)`.
    pub hi: u64,
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Two-sided bounds valid for `p >= n >= 5` with `(n-1)` not dividing `p`.
pub fn ex_bounds(family: Family, n: usize, p: u64) -> Result<ExBounds> {
    require_spider(family)?;
    TreeSpec::new(family, n)?;
    if p < n as u64 {
        return Err(Error::OutsideDomain(format!("bounds need p >= n, got p={p}, n={n}")));
    }
    if p.is_multiple_of(n as u64 - 1) {
        return Err(Error::HypothesisViolated(format!("{} divides {p}", n - 1)));
    }
    let (nn, pp) = (n as i128, checked(p)?);
    let num = 4 * (nn - 2) * pp - (nn - 1) * (nn - 1);
    let den: i128 = 8;
    let g = gcd(num.unsigned_abs(), den as u128) as i128;
    let lo = narrow(num.div_euclid(den) + i128::from(num.rem_euclid(den) != 0), "lower bound")?;
    let hi = narrow(((nn - 2) * (pp - 1)).div_euclid(2), "upper bound")?;
    Ok(ExBounds {
        lo_numerator: i64::try_from(num / g).map_err(|_| Error::Overflow("lower bound"))?,
        lo_denominator: (den / g) as u64,
        lo,
        hi,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseExplanation {
    pub family: Family,
    pub n: usize,
    pub p: u64,
    pub k: u64,
    pub r: u64,
    /// `r(n-3-r) - 2(n-1)`; the deficit branch wins iff this is non-negative.
    pub discriminant: i64,
    pub sign: i8,
    pub regime: String,
    pub branch: Branch,
    pub tie: bool,
}

/// Which inequality regime `(n, r)` falls in for a spider family.
pub fn ex_case_explain(family: Family, n: usize, p: u64) -> Result<CaseExplanation> {
    require_spider(family)?;
    TreeSpec::new(family, n)?;
    if p + 1 < n as u64 {
        return Err(Error::OutsideDomain(format!("need p >= n-1, got p={p}, n={n}")));
    }
    let (k, r) = decompose(n, p);
    let (ni, ri) = (n as i64, r as i64);
    let disc = ri * (ni - 3 - ri) - 2 * (ni - 1);
    let regime = if n <= 6 {
        "n <= 6: r(n-3-r) <= (n-3)^2/4 < 2(n-1)".to_string()
    } else if n <= 12 {
        "7 <= n <= 12: r(n-3-r) - 2(n-1) <= ((n-7)^2 - 32)/4 < 0".to_string()
    } else if r <= 2 || r + 5 >= n as u64 {
        format!("r = {r} in {{0,1,2,n-5,n-4,n-3,n-2}}: negative")
    } else if n <= 15 {
        if r == 3 || r + 6 == n as u64 {
            "13 <= n <= 15, r in {3, n-6}: equals n-16 < 0".to_string()
        } else {
            "13 <= n <= 15, 4 <= r <= n-7: at least 2n-26 >= 0".to_string()
        }
    } else {
        "n >= 16, 3 <= r <= n-6: at least n-16 >= 0".to_string()
    };
    let res = ex_value(family, n, p.max(n as u64))?;
    let (branch, tie) =
        if p < n as u64 { (Branch::CliqueUnion, false) } else { (res.branch, res.tie) };
    Ok(CaseExplanation {
        family,
        n,
        p,
        k,
        r,
        discriminant: disc,
        sign: disc.signum() as i8,
        regime,
        branch,
        tie,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_star_examples() {
        let r = ex_value(Family::Path, 5, 7).unwrap();
        assert_eq!((r.value, r.k, r.r), (9, 1, 3));
        assert_eq!(r.witness.to_string(), "K4 u K3");
        assert_eq!(ex_value(Family::Star, 5, 5).unwrap().value, 7);
        assert_eq!(ex_value(Family::Path, 2, 9).unwrap().value, 0);
        assert!(ex_value(Family::Path, 1, 3).is_err());
        assert_eq!(ex_value(Family::Path, 1, 0).unwrap().value, 0);
    }

    #[test]
    fn spider_examples() {
        let r = ex_value(Family::T1, 10, 13).unwrap();
        assert_eq!((r.value, r.branch), (42, Branch::CliqueUnion));
        assert_eq!(r.witness.to_string(), "K9 u K4");

        let r = ex_value(Family::T1, 20, 24).unwrap();
        assert_eq!((r.value, r.branch), (192, Branch::Deficit));
        assert_eq!(r.branch_values, Some(BranchValues { deficit: 192, clique_union: 181 }));

        let r = ex_value(Family::T1, 16, 18).unwrap();
        assert_eq!(r.value, 108);
        assert_eq!(r.branch_values, Some(BranchValues { deficit: 108, clique_union: 108 }));
        assert!(r.tie);
        assert_eq!(r.branch, Branch::Deficit);

        assert_eq!(ex_value(Family::T2, 6, 12).unwrap().value, 21);

        let r = ex_value(Family::T1, 10, 9).unwrap();
        assert_eq!((r.value, r.branch), (36, Branch::TrivialComplete));
        let r = ex_value(Family::T2, 8, 4).unwrap();
        assert_eq!((r.value, r.branch), (6, Branch::TrivialComplete));
    }

    #[test]
    fn tprime_branches() {
        // n = 8, p = 11: r = 4 in [2, 4] -> special form floor((6*10 - 5)/2) = 27
        let r = ex_value(Family::Tprime, 8, 11).unwrap();
        assert_eq!((r.value, r.branch), (27, Branch::Special));
        // n = 6 never uses the special form
        let r = ex_value(Family::Tprime, 6, 8).unwrap();
        assert_eq!((r.value, r.branch), ((4 * 8 - 3 * 2) / 2, Branch::CliqueUnion));
        assert!(matches!(ex_value(Family::Tprime, 4, 6), Err(Error::OutsideDomain(_))));
    }

    #[test]
    fn tstar_is_unsupported() {
        assert!(matches!(ex_value(Family::Tstar, 8, 10), Err(Error::UnsupportedFamily(_))));
        assert_eq!(ex_value(Family::Tstar, 8, 5).unwrap().value, 10);
    }

    #[test]
    fn below_family_minimum() {
        assert!(matches!(ex_value(Family::T1, 4, 10), Err(Error::BelowFamilyMinimum { .. })));
    }

    #[test]
    fn witnesses_have_the_right_order() {
        for family in [Family::Path, Family::Star, Family::Tprime, Family::T1, Family::T2] {
            for n in 5..=20 {
                for p in 0..=80u64 {
                    let r = ex_value(family, n, p).unwrap();
                    assert_eq!(r.witness.order() as u64, p, "{family} n={n} p={p}");
                }
            }
        }
    }

    #[test]
    fn bounds() {
        for family in [Family::T1, Family::T2] {
            let b = ex_bounds(family, 10, 13).unwrap();
            assert!(b.lo <= 42 && 42 <= b.hi, "{b:?}");
            assert_eq!((b.lo_numerator, b.lo_denominator), (4 * 8 * 13 - 81, 8));
        }
        assert!(matches!(ex_bounds(Family::T1, 10, 18), Err(Error::HypothesisViolated(_))));
        assert!(ex_bounds(Family::Path, 10, 13).is_err());
    }

    #[test]
    fn case_explanations() {
        let e = ex_case_explain(Family::T1, 16, 18).unwrap();
        assert_eq!((e.discriminant, e.sign, e.tie), (0, 0, true));
        let e = ex_case_explain(Family::T1, 13, 15).unwrap();
        assert_eq!(e.r, 3);
        assert_eq!(e.sign, -1);
        assert_eq!(e.branch, Branch::CliqueUnion);
        let e = ex_case_explain(Family::T2, 20, 24).unwrap();
        assert_eq!((e.discriminant, e.branch), (22, Branch::Deficit));
    }

    #[test]
    fn piecewise_matches_max_on_a_small_grid() {
        for n in 5..=30 {
            for p in (n as u64 - 1)..200 {
                let v = ex_value(Family::T1, n, p).unwrap().value;
                assert_eq!(spider_piecewise(n, p).unwrap(), v, "n={n} p={p}");
            }
        }
    }
}
