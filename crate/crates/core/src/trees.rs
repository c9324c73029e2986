//! The six parametric tree families, built with their conventional labels
//! `v_0..v_{n-1}` mapped to `0..n-1`.
//!
//! * `path`: `v_i v_{i+1}`.
//! * `star`: `v_0` joined to every other vertex.
//! * `tprime`: `v_0` joined to `v_1..v_{n-2}`, plus `v_{n-2} v_{n-1}`; the
//!   unique tree with maximum degree `n-2`.
//! * `tstar`: `v_0` joined to `v_1..v_{n-3}`, plus the path
//!   `v_{n-3} v_{n-2} v_{n-1}`.
//! * `t1`: `v_0` joined to `v_1..v_{n-3}`, plus `v_{n-4} v_{n-2}` and
//!   `v_{n-3} v_{n-1}`.
//! * `t2`: `v_0` joined to `v_1..v_{n-3}`, plus `v_{n-3} v_{n-2}` and
//!   `v_{n-3} v_{n-1}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Star,
    Tprime,
    Tstar,
    T1,
    T2,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Path, Family::Star, Family::Tprime, Family::Tstar, Family::T1, Family::T2];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Star => "star",
            Family::Tprime => "tprime",
            Family::Tstar => "tstar",
            Family::T1 => "t1",
            Family::T2 => "t2",
        }
    }

    /// Smallest order for which the family's edge list is well defined.
    pub fn min_order(self) -> usize {
        match self {
            Family::Path => 1,
            Family::Star => 2,
            Family::Tprime | Family::Tstar => 4,
            Family::T1 | Family::T2 => 5,
        }
    }

    /// `T1` or `T2`.
    pub fn is_spider(self) -> bool {
        matches!(self, Family::T1 | Family::T2)
    }

    /// Maximum degree of the order-`n` member.
    pub fn max_degree(self, n: usize) -> usize {
        match (self, n) {
            (_, 0 | 1) => 0,
            (_, 2) => 1,
            (Family::Path, _) => 2,
            (Family::Star, _) => n - 1,
            (Family::Tprime, _) => n - 2,
            (Family::Tstar, 4) | (Family::Tstar, 5) | (Family::T1, 5) => 2,
            (Family::T2, 5) => 3,
            (Family::Tstar | Family::T1 | Family::T2, _) => n - 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown tree family {s:?}")))
    }
}

/// A family together with an order, written `family:n` on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TreeSpec {
    pub family: Family,
    pub n: usize,
}

impl TreeSpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = family.min_order();
        if n < min {
            return Err(Error::BelowFamilyMinimum { family, n, min });
        }
        Ok(TreeSpec { family, n })
    }

    pub fn build(&self) -> Result<Graph> {
        make_tree(self.family, self.n)
    }

    pub fn max_degree(&self) -> usize {
        self.family.max_degree(self.n)
    }
}

impl fmt::Display for TreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.n)
    }
}

impl FromStr for TreeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (fam, n) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidArgument(format!("expected FAMILY:N, got {s:?}")))?;
        let n =
            n.trim().parse().map_err(|_| Error::InvalidArgument(format!("bad order in {s:?}")))?;
        TreeSpec::new(fam.parse()?, n)
    }
}

pub fn make_tree(family: Family, n: usize) -> Result<Graph> {
    TreeSpec::new(family, n)?;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n.saturating_sub(1));
    match family {
        Family::Path => edges.extend((1..n).map(|i| (i - 1, i))),
        Family::Star => edges.extend((1..n).map(|i| (0, i))),
        Family::Tprime => {
            edges.extend((1..=n - 2).map(|i| (0, i)));
            edges.push((n - 2, n - 1));
        }
        Family::Tstar => {
            edges.extend((1..=n - 3).map(|i| (0, i)));
            edges.push((n - 3, n - 2));
            edges.push((n - 2, n - 1));
        }
        Family::T1 => {
            edges.extend((1..=n - 3).map(|i| (0, i)));
            edges.push((n - 4, n - 2));
            edges.push((n - 3, n - 1));
        }
        Family::T2 => {
            edges.extend((1..=n - 3).map(|i| (0, i)));
            edges.push((n - 3, n - 2));
            edges.push((n - 3, n - 1));
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::containment::is_connected;

    #[test]
    fn every_member_is_a_tree_with_the_documented_max_degree() {
        for family in Family::ALL {
            for n in family.min_order()..=40 {
                let t = make_tree(family, n).unwrap();
                assert_eq!(t.order(), n);
                assert_eq!(t.edge_count(), n as u64 - 1, "{family}:{n}");
                assert!(is_connected(&t));
                assert_eq!(t.max_degree(), family.max_degree(n), "{family}:{n}");
            }
        }
    }

    #[test]
    fn family_degrees_for_n_at_least_6() {
        for n in 6..30 {
            assert_eq!(make_tree(Family::T1, n).unwrap().max_degree(), n - 3);
            assert_eq!(make_tree(Family::T2, n).unwrap().max_degree(), n - 3);
            assert_eq!(make_tree(Family::Tstar, n).unwrap().max_degree(), n - 3);
            assert_eq!(make_tree(Family::Tprime, n).unwrap().max_degree(), n - 2);
            assert_eq!(make_tree(Family::Star, n).unwrap().max_degree(), n - 1);
            assert_eq!(make_tree(Family::Path, n).unwrap().max_degree(), 2);
        }
    }

    #[test]
    fn spider_labels() {
        let t1 = make_tree(Family::T1, 9).unwrap();
        assert_eq!(t1.degree(0), 6);
        assert!(t1.has_edge(5, 7) && t1.has_edge(6, 8));
        let t2 = make_tree(Family::T2, 9).unwrap();
        assert!(t2.has_edge(6, 7) && t2.has_edge(6, 8));
    }

    #[test]
    fn t2_order_8_degree_sequence() {
        let t = make_tree(Family::T2, 8).unwrap();
        assert_eq!(t.degree_sequence(), vec![5, 3, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn t1_and_t2_differ_from_order_7() {
        for n in 7..30 {
            let a = make_tree(Family::T1, n).unwrap().degree_sequence();
            let b = make_tree(Family::T2, n).unwrap().degree_sequence();
            assert_ne!(a, b);
            assert_eq!(b[1], 3);
            assert_eq!(a[1..3], [2, 2]);
        }
    }

    #[test]
    fn below_minimum_is_rejected() {
        assert!(matches!(make_tree(Family::T1, 4), Err(Error::BelowFamilyMinimum { min: 5, .. })));
        assert!(make_tree(Family::Star, 1).is_err());
        assert!(make_tree(Family::Tstar, 3).is_err());
        assert!(make_tree(Family::Path, 0).is_err());
    }

    #[test]
    fn parse_specs() {
        let s: TreeSpec = "t1:12".parse().unwrap();
        assert_eq!(s, TreeSpec { family: Family::T1, n: 12 });
        assert_eq!(s.to_string(), "t1:12");
        assert!("t3:12".parse::<TreeSpec>().is_err());
        assert!("t1".parse::<TreeSpec>().is_err());
        assert!("t1:4".parse::<TreeSpec>().is_err());
        assert_eq!("STAR".parse::<Family>().unwrap(), Family::Star);
    }
}
