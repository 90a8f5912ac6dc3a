//! Classical, extended and lifting dimension equations, and the checkers
//! for the doubling, generalized doubling, theta-lift and orbit-matching
//! identities built on them.
//!
//! A balanced equation is a necessary condition only; reports therefore say
//! `balanced`/`unbalanced` and nothing more.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functional::{functional_value, EisensteinSeries, FunctionalDim};
use crate::group::{group_dimension, unipotent_radical_dim, GroupDescriptor, LeviComposition};
use crate::orbit::{gk_dimension, Orbit};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// `Σ dim G_j = Σ dim π_i`: GK dimensions, Eisenstein series and characters only.
    Classical,
    /// `dim G + Σ dim U_i = Σ dim L_i` over arbitrary functionals.
    #[default]
    Extended,
    /// Integral kernel: the lift's GK dimension joins the group side.
    Lifting { lift_gk: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralDescriptor {
    pub name: String,
    #[serde(default)]
    pub lhs_groups: Vec<GroupDescriptor>,
    #[serde(default)]
    pub lhs_unipotent_dims: Vec<u64>,
    #[serde(default)]
    pub rhs_functionals: Vec<FunctionalDim>,
    #[serde(default)]
    pub mode: Mode,
    /// Optional expectation, used by callers that screen many descriptors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_balanced: Option<bool>,
}

impl IntegralDescriptor {
    pub fn new(name: impl Into<String>, mode: Mode) -> Self {
        IntegralDescriptor {
            name: name.into(),
            lhs_groups: Vec::new(),
            lhs_unipotent_dims: Vec::new(),
            rhs_functionals: Vec::new(),
            mode,
            expected_balanced: None,
        }
    }

    pub fn group(mut self, g: GroupDescriptor) -> Self {
        self.lhs_groups.push(g);
        self
    }

    pub fn unipotent(mut self, dim: u64) -> Self {
        self.lhs_unipotent_dims.push(dim);
        self
    }

    pub fn functional(mut self, f: FunctionalDim) -> Self {
        self.rhs_functionals.push(f);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceReport {
    pub name: String,
    #[serde(rename = "lhs")]
    pub lhs_total: i64,
    #[serde(rename = "rhs")]
    pub rhs_total: i64,
    /// `rhs - lhs`.
    pub deficit: i64,
    pub balanced: bool,
}

impl BalanceReport {
    pub fn new(name: impl Into<String>, lhs: u64, rhs: u64) -> Self {
        let (lhs, rhs) = (lhs as i64, rhs as i64);
        BalanceReport {
            name: name.into(),
            lhs_total: lhs,
            rhs_total: rhs,
            deficit: rhs - lhs,
            balanced: lhs == rhs,
        }
    }

    pub fn verdict(&self) -> &'static str {
        if self.balanced {
            "balanced"
        } else {
            "unbalanced"
        }
    }
}

pub fn check_equation(d: &IntegralDescriptor) -> Result<BalanceReport> {
    if d.mode == Mode::Classical {
        if let Some(f) = d.rhs_functionals.iter().find(|f| !f.is_classical()) {
            return Err(Error::Mode(format!(
                "{}: {} is not allowed in classical mode",
                d.name,
                f.kind()
            )));
        }
    }
    let mut lhs: u64 = d.lhs_groups.iter().map(group_dimension).sum::<u64>() + d.lhs_unipotent_dims.iter().sum::<u64>();
    if let Mode::Lifting { lift_gk } = d.mode {
        lhs += lift_gk;
    }
    let rhs = d.rhs_functionals.iter().map(functional_value).sum();
    Ok(BalanceReport::new(d.name.clone(), lhs, rhs))
}

/// `dim G + dim U = dim E`.
pub fn doubling_condition(group: &GroupDescriptor, unipotent_dim: u64, eisenstein: &EisensteinSeries) -> BalanceReport {
    BalanceReport::new(
        format!("doubling {group}"),
        group_dimension(group) + unipotent_dim,
        eisenstein.dim(),
    )
}

fn positive(name: &str, v: u64) -> Result<()> {
    if v == 0 {
        return Err(Error::domain(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// The orbit `((2k-1)^{2n} 1^{2n})` of `Sp_{4kn}` whose coefficient enters
/// the generalized doubling integral for `Sp_2n x GL_k`.
pub fn cfgk_coefficient_orbit(n: u64, k: u64) -> Result<Orbit> {
    positive("n", n)?;
    positive("k", k)?;
    let p = Partition::from_runs([(2 * k - 1, 2 * n), (1, 2 * n)])?;
    Orbit::new(GroupDescriptor::sp(4 * k * n)?, p)
}

/// `½ dim (k^{2n})` on `GL_{2kn}`: the inducing (generalized Speh) data.
pub fn cfgk_inducing_gk(n: u64, k: u64) -> Result<u64> {
    positive("n", n)?;
    positive("k", k)?;
    gk_dimension(&GroupDescriptor::gl(2 * k * n)?, &Partition::from_runs([(k, 2 * n)])?)
}

/// Extended equation of the generalized doubling integral on `Sp_2n x GL_k`:
/// `2 dim Sp_2n + dim U = dim Sp_2n + dim E_τ`.
pub fn cfgk_descriptor(n: u64, k: u64) -> Result<IntegralDescriptor> {
    let g = GroupDescriptor::sp(2 * n)?;
    let h = GroupDescriptor::sp(4 * k * n)?;
    let coefficient = cfgk_coefficient_orbit(n, k)?;
    let radical = unipotent_radical_dim(&h, &LeviComposition::blocks(&[2 * k * n]))?;
    Ok(IntegralDescriptor::new(format!("cfgk(n={n},k={k})"), Mode::Extended)
        .group(g)
        .group(g)
        .unipotent(coefficient.gk())
        .functional(FunctionalDim::MatrixCoefficient(g))
        .functional(FunctionalDim::eisenstein(cfgk_inducing_gk(n, k)?, radical)))
}

pub fn cfgk_check(n: u64, k: u64) -> Result<BalanceReport> {
    check_equation(&cfgk_descriptor(n, k)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaPrediction {
    pub n: u64,
    pub k: u64,
    /// May be negative, which predicts a vanishing lift.
    pub sigma_gk: i64,
    pub vanishing_predicted: bool,
    pub generic_compatible: bool,
}

/// Lift of a generic cuspidal `π` on `Sp_2n` to `SO_2k` through the theta
/// representation of `Sp_4nk` (orbit `(2 1^{4nk-2})`), solving
/// `dim G + dim U + dim σ = dim π + dim Θ` for `dim σ` with `U` trivial.
pub fn theta_lift_predict(n: u64, k: u64) -> Result<ThetaPrediction> {
    positive("n", n)?;
    positive("k", k)?;
    let g = GroupDescriptor::sp(2 * n)?;
    let l = GroupDescriptor::sp(4 * n * k)?;
    let pi = Orbit::regular(g)?.gk();
    let theta = gk_dimension(&l, &Partition::from_runs([(2, 1), (1, 4 * n * k - 2)])?)?;
    let sigma_gk = (pi + theta) as i64 - group_dimension(&g) as i64;
    let generic_so = Orbit::regular(GroupDescriptor::so(2 * k)?)?.gk() as i64;
    Ok(ThetaPrediction {
        n,
        k,
        sigma_gk,
        vanishing_predicted: sigma_gk < 0,
        generic_compatible: sigma_gk == generic_so,
    })
}

/// Source `((2k-1)^{2m} (2r-1)^{2m})` and target `((2k)^{2m} (2r-2)^{2m})`
/// orbits on `Sp_{4m(k+r-1)}`. At `r = 1` the second target block is empty.
pub fn lemma71_orbits(m: u64, k: u64, r: u64) -> Result<(Orbit, Orbit)> {
    positive("m", m)?;
    positive("k", k)?;
    positive("r", r)?;
    let h = GroupDescriptor::sp(4 * m * (k + r - 1))?;
    let source = Partition::from_runs([(2 * k - 1, 2 * m), (2 * r - 1, 2 * m)])?;
    let target = if r == 1 {
        Partition::from_runs([(2 * k, 2 * m)])?
    } else {
        Partition::from_runs([(2 * k, 2 * m), (2 * r - 2, 2 * m)])?
    };
    Ok((Orbit::new(h, source)?, Orbit::new(h, target)?))
}

/// `dim Sp_2m + ½ dim(source) = ½ dim(target)`.
pub fn lemma71_check(m: u64, k: u64, r: u64) -> Result<BalanceReport> {
    let (source, target) = lemma71_orbits(m, k, r)?;
    let d = IntegralDescriptor::new(format!("lemma71(m={m},k={k},r={r})"), Mode::Extended)
        .group(GroupDescriptor::sp(2 * m)?)
        .unipotent(source.gk())
        .functional(FunctionalDim::GkOfOrbit(target));
    check_equation(&d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn classical_rs_pgl2() {
        let gl2 = FunctionalDim::gk_of("GL(2)", "2").unwrap();
        let d = IntegralDescriptor::new("rs", Mode::Classical)
            .group(g("PGL(2)"))
            .functional(gl2.clone())
            .functional(gl2)
            .functional(FunctionalDim::eisenstein(0, 1));
        let r = check_equation(&d).unwrap();
        assert!(r.balanced);
        assert_eq!((r.lhs_total, r.rhs_total), (3, 3));
    }

    #[test]
    fn pgsp4_siegel_both_modes() {
        let pi = FunctionalDim::gk_of("GL(4)", "4").unwrap();
        let siegel = FunctionalDim::eisenstein(0, 3);
        let classical = IntegralDescriptor::new("siegel", Mode::Classical)
            .group(g("PGSp(4)"))
            .functional(pi)
            .functional(siegel.clone());
        let r = check_equation(&classical).unwrap();
        assert_eq!((r.lhs_total, r.rhs_total, r.deficit, r.balanced), (10, 9, -1, false));

        let extended = IntegralDescriptor::new("siegel-wo", Mode::Extended)
            .group(g("PGSp(4)"))
            .functional(FunctionalDim::ExplicitPeriod {
                reductive_dim: 3,
                unipotent_dim: 4,
            })
            .functional(siegel);
        assert!(check_equation(&extended).unwrap().balanced);
    }

    #[test]
    fn classical_mode_rejects_periods() {
        let d = IntegralDescriptor::new("x", Mode::Classical).functional(FunctionalDim::MatrixCoefficient(g("Sp(2)")));
        assert!(matches!(check_equation(&d), Err(Error::Mode(_))));
    }

    #[test]
    fn empty_descriptor_balances() {
        let r = check_equation(&IntegralDescriptor::new("empty", Mode::Classical)).unwrap();
        assert!(r.balanced);
        assert_eq!(r.lhs_total, 0);
    }

    #[test]
    fn lifting_moves_lift_to_lhs() {
        let d = IntegralDescriptor::new("lift", Mode::Lifting { lift_gk: 2 })
            .group(g("Sp(2)"))
            .functional(FunctionalDim::eisenstein(5, 0));
        let r = check_equation(&d).unwrap();
        assert_eq!((r.lhs_total, r.rhs_total), (5, 5));
    }

    #[test]
    fn doubling_examples() {
        let siegel = EisensteinSeries {
            inducing_dim: 0,
            radical_dim: unipotent_radical_dim(&g("Sp(8)"), &LeviComposition::blocks(&[4])).unwrap(),
        };
        assert!(doubling_condition(&g("Sp(4)"), 0, &siegel).balanced);
        let mirabolic_gl2 = EisensteinSeries {
            inducing_dim: 0,
            radical_dim: 1,
        };
        let r = doubling_condition(&g("Sp(2)"), 0, &mirabolic_gl2);
        assert_eq!((r.lhs_total, r.rhs_total, r.balanced), (3, 1, false));
        let cfgk = EisensteinSeries {
            inducing_dim: 4,
            radical_dim: 10,
        };
        assert!(doubling_condition(&g("Sp(2)"), 11, &cfgk).balanced);
    }

    #[test]
    fn cfgk_examples() {
        let r = cfgk_check(1, 1).unwrap();
        assert_eq!((r.lhs_total, r.rhs_total, r.balanced), (6, 6, true));
        let r = cfgk_check(1, 2).unwrap();
        assert_eq!((r.lhs_total, r.rhs_total, r.balanced), (17, 17, true));
        assert_eq!(cfgk_coefficient_orbit(1, 2).unwrap().gk(), 11);
        let r = cfgk_check(2, 1).unwrap();
        assert_eq!((r.lhs_total, r.rhs_total, r.balanced), (20, 20, true));
        assert!(cfgk_check(0, 1).is_err());
    }

    #[test]
    fn theta_examples() {
        let t = theta_lift_predict(3, 1).unwrap();
        assert_eq!((t.sigma_gk, t.vanishing_predicted), (-6, true));
        let t = theta_lift_predict(2, 3).unwrap();
        assert_eq!((t.sigma_gk, t.generic_compatible), (6, true));
        let t = theta_lift_predict(2, 2).unwrap();
        assert_eq!((t.sigma_gk, t.generic_compatible), (2, true));
        let t = theta_lift_predict(2, 4).unwrap();
        assert_eq!(
            (t.sigma_gk, t.generic_compatible, t.vanishing_predicted),
            (10, false, false)
        );
    }

    #[test]
    fn lemma71_examples() {
        let r = lemma71_check(1, 3, 2).unwrap();
        assert_eq!((r.lhs_total, r.rhs_total, r.balanced), (56, 56, true));
        let (source, target) = lemma71_orbits(1, 3, 2).unwrap();
        assert_eq!((source.gk(), target.gk()), (53, 56));
        let r = lemma71_check(1, 2, 2).unwrap();
        assert_eq!((r.lhs_total, r.rhs_total), (29, 29));
        // the stated target only balances when k >= r
        assert!(lemma71_check(2, 2, 2).unwrap().balanced);
        assert!(lemma71_check(2, 5, 3).unwrap().balanced);
        assert!(!lemma71_check(2, 1, 2).unwrap().balanced);
        // r = 1 is the generalized doubling case
        let (_, target) = lemma71_orbits(1, 2, 1).unwrap();
        assert_eq!(target.partition().to_string(), "4^2");
        assert!(lemma71_check(1, 2, 1).unwrap().balanced);
        assert!(lemma71_check(0, 2, 2).is_err());
    }

    #[test]
    fn report_json() {
        let r = BalanceReport::new("x", 10, 9);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"name":"x","lhs":10,"rhs":9,"deficit":-1,"balanced":false}"#
        );
    }

    #[test]
    fn descriptor_json() {
        let text = r#"{
            "name": "pgsp4",
            "lhs_groups": ["PGSp(4)"],
            "rhs_functionals": [
                {"kind": "ExplicitPeriod", "args": {"reductive_dim": 3, "unipotent_dim": 4}},
                {"kind": "EisensteinDim", "args": {"inducing_dim": 0, "radical_dim": 3}, "value": 3}
            ],
            "mode": "extended"
        }"#;
        let d: IntegralDescriptor = serde_json::from_str(text).unwrap();
        assert!(check_equation(&d).unwrap().balanced);
        let lifting = r#"{"name":"l","mode":{"lifting":{"lift_gk":4}}}"#;
        let d: IntegralDescriptor = serde_json::from_str(lifting).unwrap();
        assert_eq!(d.mode, Mode::Lifting { lift_gk: 4 });
        let back: IntegralDescriptor = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);
    }
}
