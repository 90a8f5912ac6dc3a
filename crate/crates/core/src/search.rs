//! Brute-force search for orbits of a prescribed GK dimension.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::equation::lemma71_orbits;
use crate::error::{Error, Result};
use crate::group::{group_dimension, GroupDescriptor};
use crate::orbit::gk_dimension;
use crate::partition::{for_each_partition, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    TargetGk(u64),
    /// `dim Sp_2m + ½ dim((2k-1)^{2m} (2r-1)^{2m}) = ½ dim O` on `Sp_{4m(k+r-1)}`.
    Dim6 {
        m: u64,
        k: u64,
        r: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Filter {
    AllMultiplicitiesEven,
    AllPartsEven,
    /// Keep only solutions with the fewest distinct part values (ties kept).
    MinimalDistinctParts,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchQuery {
    pub group: GroupDescriptor,
    pub constraint: Constraint,
    pub filters: BTreeSet<Filter>,
}

impl SearchQuery {
    pub fn target_gk(group: GroupDescriptor, gk: u64) -> Self {
        SearchQuery {
            group,
            constraint: Constraint::TargetGk(gk),
            filters: BTreeSet::new(),
        }
    }

    /// Dim6 query on its natural group `Sp_{4m(k+r-1)}`.
    pub fn dim6(m: u64, k: u64, r: u64) -> Result<Self> {
        if m == 0 || k == 0 || r == 0 {
            return Err(Error::domain("m, k, r must be at least 1"));
        }
        Ok(SearchQuery {
            group: GroupDescriptor::sp(4 * m * (k + r - 1))?,
            constraint: Constraint::Dim6 { m, k, r },
            filters: BTreeSet::new(),
        })
    }

    pub fn with_filter(mut self, f: Filter) -> Self {
        self.filters.insert(f);
        self
    }

    /// The GK dimension solutions must have.
    pub fn resolve_target(&self) -> Result<u64> {
        match self.constraint {
            Constraint::TargetGk(v) => Ok(v),
            Constraint::Dim6 { m, k, r } => {
                let (source, _) = lemma71_orbits(m, k, r)?;
                if self.group != *source.group() {
                    return Err(Error::domain(format!(
                        "dim6 with m={m}, k={k}, r={r} lives on {}, not {}",
                        source.group(),
                        self.group
                    )));
                }
                Ok(group_dimension(&GroupDescriptor::sp(2 * m)?) + source.gk())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub group: GroupDescriptor,
    pub target_gk: u64,
    pub solutions: Vec<Partition>,
    pub total_candidates: u64,
}

fn passes(p: &Partition, filters: &BTreeSet<Filter>) -> bool {
    filters.iter().all(|f| match f {
        Filter::AllMultiplicitiesEven => p.runs().iter().all(|&(_, c)| c % 2 == 0),
        Filter::AllPartsEven => p.runs().iter().all(|&(v, _)| v % 2 == 0),
        Filter::MinimalDistinctParts => true,
    })
}

/// All family-valid partitions of the group size with the target GK
/// dimension, in decreasing lexicographic order, then filtered.
pub fn search(q: &SearchQuery) -> Result<SearchResult> {
    let target_gk = q.resolve_target()?;
    let mut solutions = Vec::new();
    let mut total_candidates = 0u64;
    for_each_partition(q.group.size(), q.group.family(), |p| {
        total_candidates += 1;
        let gk = gk_dimension(&q.group, p).expect("enumeration yields valid partitions");
        if gk == target_gk && passes(p, &q.filters) {
            solutions.push(p.clone());
        }
    })?;
    if q.filters.contains(&Filter::MinimalDistinctParts) {
        if let Some(min) = solutions.iter().map(Partition::distinct_parts).min() {
            solutions.retain(|p| p.distinct_parts() == min);
        }
    }
    Ok(SearchResult {
        group: q.group,
        target_gk,
        solutions,
        total_candidates,
    })
}

/// Whether `p` is a valid orbit of `group` with GK dimension `target`.
pub fn verify_solution(group: &GroupDescriptor, p: &Partition, target: u64) -> bool {
    gk_dimension(group, p).is_ok_and(|gk| gk == target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn dim6_contains_four_orbits() {
        let res = search(&SearchQuery::dim6(1, 3, 2).unwrap()).unwrap();
        assert_eq!(res.target_gk, 56);
        for s in ["6 5^2", "8 3^2 2", "6^2 2^2", "8 4 2 1^2"] {
            assert!(res.solutions.contains(&p(s)), "{s}");
        }
        assert!(res.solutions.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn dim6_minimal_even() {
        let q = SearchQuery::dim6(1, 3, 2)
            .unwrap()
            .with_filter(Filter::AllMultiplicitiesEven)
            .with_filter(Filter::AllPartsEven)
            .with_filter(Filter::MinimalDistinctParts);
        assert_eq!(search(&q).unwrap().solutions, vec![p("6^2 2^2")]);
    }

    #[test]
    fn zero_target_is_zero_orbit() {
        for g in ["Sp(8)", "GL(5)", "SO(7)", "SO(6)"] {
            let g: GroupDescriptor = g.parse().unwrap();
            let res = search(&SearchQuery::target_gk(g, 0)).unwrap();
            assert_eq!(res.solutions, vec![Partition::ones(g.size()).unwrap()]);
        }
    }

    #[test]
    fn dim6_wrong_group() {
        let q = SearchQuery {
            group: "Sp(12)".parse().unwrap(),
            constraint: Constraint::Dim6 { m: 1, k: 3, r: 2 },
            filters: BTreeSet::new(),
        };
        assert!(matches!(search(&q), Err(Error::Domain(_))));
    }

    #[test]
    fn verify_examples() {
        let sp16: GroupDescriptor = "Sp(16)".parse().unwrap();
        assert!(verify_solution(&sp16, &p("5^2 3^2"), 53));
        assert!(verify_solution(&sp16, &p("6^2 2^2"), 56));
        assert!(!verify_solution(&sp16, &p("16"), 56));
        assert!(!verify_solution(&sp16, &p("15 1"), 56));
    }

    #[test]
    fn result_json() {
        let res = search(&SearchQuery::target_gk("Sp(4)".parse().unwrap(), 3)).unwrap();
        assert_eq!(
            serde_json::to_string(&res).unwrap(),
            r#"{"group":"Sp(4)","target_gk":3,"solutions":["2^2"],"total_candidates":4}"#
        );
    }
}
