//! Unipotent orbit dimensions.
//!
//! Two independent routes are provided:
//!
//! * closed forms in the partition (the symplectic formula
//!   `2n^2 + n - ½Σ(2i-1)p_i - ½a`, and the analogous `GL`/`SO` counts);
//! * the grading of the positive roots by the cocharacter `h_O` attached to
//!   the partition, giving the filtration `N ⊇ N_1 ⊇ N_2 ⊇ ...` with
//!   `½ dim O = dim N_2 + ½ dim N_1/N_2`.
//!
//! Central and similitude modifiers do not affect orbits; restriction of
//! scalars doubles every dimension.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupDescriptor;
use crate::partition::{GroupFamily, Partition};
use crate::roots::RootSystem;

fn validate(group: &GroupDescriptor, p: &Partition) -> Result<()> {
    if p.size() != group.size() {
        return Err(Error::domain(format!(
            "partition {p} of {} does not index an orbit of {group}",
            p.size()
        )));
    }
    if !group.family().admits(p) {
        let rule = match group.family() {
            GroupFamily::Symplectic => "odd parts must occur with even multiplicity",
            _ => "even parts must occur with even multiplicity",
        };
        return Err(Error::domain(format!("partition {p} is not valid for {group}: {rule}")));
    }
    Ok(())
}

/// Closed-form orbit dimension over the ground field.
pub fn orbit_dimension(group: &GroupDescriptor, p: &Partition) -> Result<u64> {
    validate(group, p)?;
    let squares = p.transpose_square_sum();
    let odd = p.odd_part_count();
    let size = group.size();
    let dim = match group.family() {
        GroupFamily::GeneralLinear => size * size - squares,
        GroupFamily::Symplectic => {
            let n = size / 2;
            let twice = 2 * (2 * n * n + n) - squares - odd;
            debug_assert!(twice.is_multiple_of(2));
            twice / 2
        }
        GroupFamily::OddOrthogonal | GroupFamily::EvenOrthogonal => {
            let twice = size * size - squares - (size - odd);
            debug_assert!(twice.is_multiple_of(2));
            twice / 2
        }
    };
    Ok(dim * group.scalar_factor())
}

/// Gelfand-Kirillov dimension, half the orbit dimension.
pub fn gk_dimension(group: &GroupDescriptor, p: &Partition) -> Result<u64> {
    Ok(orbit_dimension(group, p)? / 2)
}

/// Exponents of `h_O(t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HWeights {
    /// `{p_i - 1, p_i - 3, ..., 1 - p_i}` over all parts, non-increasing.
    pub full: Vec<i64>,
    /// Exponents on the maximal torus in the `e_i` basis: the whole list for
    /// `GL`, the top `rank` entries for `Sp`/`SO`.
    pub torus: Vec<i64>,
}

fn exponent_multiset(p: &Partition) -> Vec<i64> {
    let mut full = Vec::with_capacity(p.size() as usize);
    for &(v, c) in p.runs() {
        let v = v as i64;
        for _ in 0..c {
            full.extend((0..v).map(|j| v - 2 * j - 1));
        }
    }
    full.sort_unstable_by(|a, b| b.cmp(a));
    full
}

pub fn weight_vector(group: &GroupDescriptor, p: &Partition) -> Result<HWeights> {
    validate(group, p)?;
    let full = exponent_multiset(p);
    let torus = match group.family() {
        GroupFamily::GeneralLinear => full.clone(),
        _ => full[..group.rank() as usize].to_vec(),
    };
    Ok(HWeights { full, torus })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationProfile {
    /// Torus exponent vector of `h_O`.
    pub weights: Vec<i64>,
    pub dim_n1: u64,
    pub dim_n2: u64,
    #[serde(skip)]
    pub weight_one_count: u64,
    /// Positive roots per weight `<α, h_O>` (weight 0 included).
    pub histogram: BTreeMap<i64, u64>,
}

impl FiltrationProfile {
    /// `dim N_i`: positive roots of weight at least `i`.
    pub fn dim_n(&self, i: i64) -> u64 {
        self.histogram.range(i..).map(|(_, c)| c).sum()
    }

    /// `dim N_2 + ½ dim N_1/N_2`.
    pub fn gk(&self) -> u64 {
        self.dim_n2 + self.weight_one_count / 2
    }
}

pub fn filtration_profile(group: &GroupDescriptor, p: &Partition) -> Result<FiltrationProfile> {
    let weights = weight_vector(group, p)?.torus;
    let roots = group.root_system();
    let scale = group.scalar_factor();
    let mut histogram = BTreeMap::new();
    for root in &roots.positive_roots {
        *histogram.entry(RootSystem::pairing(root, &weights)).or_insert(0) += scale;
    }
    let mut profile = FiltrationProfile {
        weights,
        dim_n1: 0,
        dim_n2: 0,
        weight_one_count: 0,
        histogram,
    };
    profile.dim_n1 = profile.dim_n(1);
    profile.dim_n2 = profile.dim_n(2);
    profile.weight_one_count = profile.dim_n1 - profile.dim_n2;
    Ok(profile)
}

/// `dim N_1`, the dimension of the Fourier-Jacobi functional.
pub fn fourier_jacobi_dim(group: &GroupDescriptor, p: &Partition) -> Result<u64> {
    Ok(filtration_profile(group, p)?.dim_n1)
}

/// A validated orbit with its dimension data.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orbit {
    group: GroupDescriptor,
    partition: Partition,
    dim: u64,
    odd_part_count: u64,
}

impl Orbit {
    pub fn new(group: GroupDescriptor, partition: Partition) -> Result<Self> {
        let dim = orbit_dimension(&group, &partition)?;
        let odd_part_count = partition.odd_part_count();
        Ok(Orbit {
            group,
            partition,
            dim,
            odd_part_count,
        })
    }

    /// The regular orbit: `(n)` for `GL_n`/`Sp_n`/`SO_n` with `n` odd,
    /// `(n-1, 1)` for `SO_n` with `n` even.
    pub fn regular(group: GroupDescriptor) -> Result<Self> {
        let n = group.size();
        let p = match group.family() {
            GroupFamily::EvenOrthogonal if n > 2 => Partition::from_parts([n - 1, 1])?,
            GroupFamily::EvenOrthogonal => Partition::ones(n)?,
            _ => Partition::single(n)?,
        };
        Orbit::new(group, p)
    }

    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn gk(&self) -> u64 {
        self.dim / 2
    }

    /// Number of odd parts (the `a` of the symplectic formula).
    pub fn odd_part_count(&self) -> u64 {
        self.odd_part_count
    }

    pub fn filtration(&self) -> FiltrationProfile {
        filtration_profile(&self.group, &self.partition).expect("orbit validated at construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupDescriptor {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(orbit_dimension(&g("Sp(4)"), &p("2^2")).unwrap(), 6);
        assert_eq!(orbit_dimension(&g("Sp(4)"), &p("2 1^2")).unwrap(), 4);
        assert_eq!(orbit_dimension(&g("GL(4)"), &p("4")).unwrap(), 12);
        assert_eq!(orbit_dimension(&g("Sp(16)"), &p("5^2 3^2")).unwrap(), 106);
        for grp in ["GL(5)", "Sp(6)", "SO(7)", "SO(8)"] {
            let grp = g(grp);
            assert_eq!(orbit_dimension(&grp, &Partition::ones(grp.size()).unwrap()).unwrap(), 0);
        }
    }

    #[test]
    fn gk_examples() {
        assert_eq!(gk_dimension(&g("GL(5)"), &p("5")).unwrap(), 10);
        assert_eq!(gk_dimension(&g("Sp(6)"), &p("6")).unwrap(), 9);
        assert_eq!(gk_dimension(&g("SO(6)"), &p("5 1")).unwrap(), 6);
        assert_eq!(gk_dimension(&g("Res2:GL(3)"), &p("3")).unwrap(), 6);
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(matches!(orbit_dimension(&g("Sp(4)"), &p("3 1")), Err(Error::Domain(_))));
        assert!(matches!(
            orbit_dimension(&g("SO(4)"), &p("2 1^2")),
            Err(Error::Domain(_))
        ));
        assert!(matches!(orbit_dimension(&g("GL(4)"), &p("3 2")), Err(Error::Domain(_))));
    }

    #[test]
    fn weight_vector_examples() {
        let w = weight_vector(&g("Sp(4)"), &p("2^2")).unwrap();
        assert_eq!(w.full, vec![1, 1, -1, -1]);
        assert_eq!(w.torus, vec![1, 1]);
        assert_eq!(weight_vector(&g("GL(3)"), &p("2 1")).unwrap().torus, vec![1, 0, -1]);
        assert_eq!(weight_vector(&g("Sp(4)"), &p("4")).unwrap().torus, vec![3, 1]);
        // middle zero of SO_odd dropped
        assert_eq!(weight_vector(&g("SO(5)"), &p("3 1^2")).unwrap().torus, vec![2, 0]);
    }

    #[test]
    fn filtration_examples() {
        let f = filtration_profile(&g("Sp(4)"), &p("2^2")).unwrap();
        assert_eq!(f.histogram, BTreeMap::from([(0, 1), (2, 3)]));
        assert_eq!((f.dim_n2, f.weight_one_count, f.gk()), (3, 0, 3));

        let f = filtration_profile(&g("Sp(4)"), &p("2 1^2")).unwrap();
        assert_eq!(f.histogram, BTreeMap::from([(0, 1), (1, 2), (2, 1)]));
        assert_eq!((f.dim_n2, f.weight_one_count, f.gk()), (1, 2, 2));

        let f = filtration_profile(&g("GL(3)"), &p("2 1")).unwrap();
        assert_eq!(f.histogram, BTreeMap::from([(1, 2), (2, 1)]));
        assert_eq!((f.dim_n2, f.weight_one_count, f.gk()), (1, 2, 2));
    }

    #[test]
    fn fourier_jacobi_examples() {
        assert_eq!(fourier_jacobi_dim(&g("Sp(4)"), &p("2 1^2")).unwrap(), 3);
        assert_eq!(fourier_jacobi_dim(&g("Sp(4)"), &p("2^2")).unwrap(), 3);
        assert_eq!(fourier_jacobi_dim(&g("GL(4)"), &p("1^4")).unwrap(), 0);
        assert_eq!(fourier_jacobi_dim(&g("SO(7)"), &p("1^7")).unwrap(), 0);
    }

    #[test]
    fn profile_json_keys() {
        let f = filtration_profile(&g("Sp(4)"), &p("2 1^2")).unwrap();
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"weights":[1,0],"dim_n1":3,"dim_n2":1,"histogram":{"0":1,"1":2,"2":1}}"#
        );
    }

    #[test]
    fn regular_orbits() {
        assert_eq!(Orbit::regular(g("SO(8)")).unwrap().gk(), 12);
        assert_eq!(Orbit::regular(g("Sp(8)")).unwrap().gk(), 16);
        assert_eq!(Orbit::regular(g("SO(2)")).unwrap().gk(), 0);
    }
}
