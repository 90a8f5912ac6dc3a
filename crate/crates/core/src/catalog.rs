//! Compiled-in registry of integrals with known dimension balance.
//!
//! Each entry builds an [`IntegralDescriptor`] from integer parameters. The
//! registry is evaluated at every parameter point of a range (default
//! `1..=8` per parameter), restricted to the points where the integral makes
//! sense, and every report is compared against the entry's expectation.
//!
//! Integrals on metaplectic covers (the symmetric-square integrals) and the
//! Godement-Jacquet and "new way" families are listed in [`NOTES`] only: they
//! carry no dimension data that could be checked.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::equation::{cfgk_descriptor, check_equation, lemma71_orbits, BalanceReport, IntegralDescriptor, Mode};
use crate::error::{Error, Result};
use crate::functional::{eisenstein_dim, FunctionalDim};
use crate::group::{group_dimension, GroupDescriptor, LeviComposition};
use crate::orbit::Orbit;
use crate::partition::GroupFamily;
use crate::partition::Partition;
use crate::roots::positive_roots;

pub const DEFAULT_RANGE: RangeInclusive<u64> = 1..=8;

pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    /// Where the integral comes from.
    pub reference: &'static str,
    pub params: &'static [&'static str],
    pub expected_balanced: bool,
    valid: fn(&[u64]) -> bool,
    build: fn(&[u64]) -> Result<IntegralDescriptor>,
}

impl CatalogEntry {
    pub fn is_valid_point(&self, point: &[u64]) -> bool {
        (self.valid)(point)
    }

    pub fn build(&self, point: &[u64]) -> Result<IntegralDescriptor> {
        if point.len() != self.params.len() || !self.is_valid_point(point) {
            return Err(Error::domain(format!("{}: parameters {point:?} out of range", self.id)));
        }
        let mut d = (self.build)(point)?;
        d.expected_balanced = Some(self.expected_balanced);
        Ok(d)
    }

    /// Valid parameter points with every parameter in `range`, in
    /// lexicographic order.
    pub fn points(&self, range: &RangeInclusive<u64>) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for _ in self.params {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    range.clone().map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out.retain(|p| self.is_valid_point(p));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogRun {
    pub id: String,
    pub params: BTreeMap<String, u64>,
    pub report: BalanceReport,
    pub expected: bool,
}

impl CatalogRun {
    pub fn meets_expectation(&self) -> bool {
        self.report.balanced == self.expected
    }
}

/// Flat export record: `{"id","params","lhs","rhs","balanced","expected"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExportRecord {
    pub id: String,
    pub params: BTreeMap<String, u64>,
    pub lhs: i64,
    pub rhs: i64,
    pub balanced: bool,
    pub expected: bool,
}

impl From<&CatalogRun> for ExportRecord {
    fn from(run: &CatalogRun) -> Self {
        ExportRecord {
            id: run.id.clone(),
            params: run.params.clone(),
            lhs: run.report.lhs_total,
            rhs: run.report.rhs_total,
            balanced: run.report.balanced,
            expected: run.expected,
        }
    }
}

fn grp(s: &str) -> Result<GroupDescriptor> {
    s.parse()
}

fn gl(n: u64) -> Result<GroupDescriptor> {
    GroupDescriptor::gl(n)
}

fn sp(size: u64) -> Result<GroupDescriptor> {
    GroupDescriptor::sp(size)
}

fn generic(g: GroupDescriptor) -> Result<FunctionalDim> {
    FunctionalDim::generic(g)
}

fn orbit(g: GroupDescriptor, runs: &[(u64, u64)]) -> Result<FunctionalDim> {
    Ok(FunctionalDim::GkOfOrbit(Orbit::new(
        g,
        Partition::from_runs(runs.iter().copied())?,
    )?))
}

fn eis(inducing: u64, g: GroupDescriptor, blocks: &[u64], classical: bool) -> Result<FunctionalDim> {
    eisenstein_dim(inducing, &g, &LeviComposition::new(blocks.to_vec(), classical))
}

fn mirabolic(n: u64) -> Result<FunctionalDim> {
    eis(0, gl(n)?, &[n - 1, 1], false)
}

fn always(_: &[u64]) -> bool {
    true
}

fn at_least_two(p: &[u64]) -> bool {
    p[0] >= 2
}

fn riemann_theta(_: &[u64]) -> Result<IntegralDescriptor> {
    // Jacobi theta lives on the double cover of SL_2; only SL_2's data enters.
    Ok(IntegralDescriptor::new("riemann-theta", Mode::Classical)
        .group(gl(1)?)
        .functional(orbit(sp(2)?, &[(2, 1)])?)
        .functional(FunctionalDim::CharacterDim))
}

fn hecke(_: &[u64]) -> Result<IntegralDescriptor> {
    Ok(IntegralDescriptor::new("hecke", Mode::Classical)
        .group(gl(1)?)
        .functional(generic(gl(2)?)?)
        .functional(FunctionalDim::CharacterDim))
}

fn classical_rs(_: &[u64]) -> Result<IntegralDescriptor> {
    Ok(IntegralDescriptor::new("classical-rs", Mode::Classical)
        .group(grp("PGL(2)")?)
        .functional(generic(gl(2)?)?)
        .functional(generic(gl(2)?)?)
        .functional(eis(0, gl(2)?, &[1, 1], false)?))
}

fn jpss_equal(p: &[u64]) -> Result<IntegralDescriptor> {
    let n = p[0];
    Ok(IntegralDescriptor::new("jpss-equal", Mode::Classical)
        .group(gl(n)?.projective())
        .functional(generic(gl(n)?)?)
        .functional(generic(gl(n)?)?)
        .functional(mirabolic(n)?))
}

fn jpss_adjacent(p: &[u64]) -> Result<IntegralDescriptor> {
    let n = p[0];
    Ok(IntegralDescriptor::new("jpss-adjacent", Mode::Classical)
        .group(gl(n - 1)?)
        .functional(generic(gl(n)?)?)
        .functional(generic(gl(n - 1)?)?)
        .functional(FunctionalDim::CharacterDim))
}

/// Upper unitriangular `n x n` matrices whose top-left `(k+1) x (k+1)` block
/// is the identity.
fn jpss_unipotent_dim(n: u64, k: u64) -> Result<u64> {
    let all = positive_roots(GroupFamily::GeneralLinear, n)?.len() as u64;
    let corner = positive_roots(GroupFamily::GeneralLinear, k + 1)?.len() as u64;
    Ok(all - corner)
}

fn jpss_general(p: &[u64]) -> Result<IntegralDescriptor> {
    let (n, k) = (p[0], p[1]);
    Ok(IntegralDescriptor::new("jpss-general", Mode::Classical)
        .group(gl(k)?)
        .unipotent(jpss_unipotent_dim(n, k)?)
        .functional(generic(gl(n)?)?)
        .functional(generic(gl(k)?)?)
        .functional(FunctionalDim::CharacterDim))
}

fn jpss_naive(p: &[u64]) -> Result<IntegralDescriptor> {
    let (n, k) = (p[0], p[1]);
    Ok(IntegralDescriptor::new("jpss-naive-unbalanced", Mode::Classical)
        .group(gl(k)?)
        .functional(generic(gl(n)?)?)
        .functional(generic(gl(k)?)?)
        .functional(FunctionalDim::CharacterDim))
}

fn whittaker_eisenstein(p: &[u64]) -> Result<IntegralDescriptor> {
    let n = p[0];
    let borel = vec![1; n as usize];
    let dim_n = positive_roots(GroupFamily::GeneralLinear, n)?.len() as u64;
    Ok(IntegralDescriptor::new("whittaker-eisenstein", Mode::Classical)
        .unipotent(dim_n)
        .functional(eis(0, gl(n)?, &borel, false)?)
        .functional(FunctionalDim::CharacterDim))
}

fn asai(p: &[u64]) -> Result<IntegralDescriptor> {
    let n = p[0];
    Ok(IntegralDescriptor::new("asai", Mode::Classical)
        .group(gl(n)?.projective())
        .functional(generic(gl(n)?.restrict_scalars())?)
        .functional(mirabolic(n)?))
}

fn bf_even(p: &[u64]) -> Result<IntegralDescriptor> {
    let k = p[0];
    Ok(IntegralDescriptor::new("bf-even", Mode::Classical)
        .group(gl(k)?.mod_gl1())
        .group(gl(k)?)
        .functional(generic(gl(2 * k)?)?)
        .functional(mirabolic(k)?)
        .functional(FunctionalDim::CharacterDim))
}

fn bf_odd(p: &[u64]) -> Result<IntegralDescriptor> {
    let k = p[0];
    Ok(IntegralDescriptor::new("bf-odd", Mode::Classical)
        .group(gl(k + 1)?.mod_gl1())
        .group(gl(k)?)
        .functional(generic(gl(2 * k + 1)?)?)
        .functional(mirabolic(k + 1)?)
        .functional(FunctionalDim::CharacterDim))
}

fn bfg_gsp4(_: &[u64]) -> Result<IntegralDescriptor> {
    // GL_1\GSp_4: dimension 10.
    let gsp4 = grp("GSp(4)")?;
    Ok(IntegralDescriptor::new("bfg-gsp4", Mode::Classical)
        .group(gsp4.mod_gl1())
        .functional(generic(gsp4)?)
        .functional(eis(0, gsp4, &[2], false)?)
        .functional(eis(0, gsp4, &[1], true)?))
}

fn bfg_gsp6(_: &[u64]) -> Result<IntegralDescriptor> {
    // H = {(h1, h2) in GL_2 x GSp_4 : equal similitudes}, modulo GL_1:
    // 4 + 11 - 1 - 1 = 13.
    let gsp4 = grp("GSp(4)")?;
    Ok(IntegralDescriptor::new("bfg-gsp6", Mode::Classical)
        .group(gl(2)?.mod_gl1())
        .group(gsp4.mod_gl1())
        .functional(generic(grp("GSp(6)")?)?)
        .functional(eis(0, gl(2)?, &[1, 1], false)?)
        .functional(eis(0, gsp4, &[2], false)?))
}

fn bfg_gsp8(_: &[u64]) -> Result<IntegralDescriptor> {
    // H = {(h1, h2) in GL_2 x GSp_6 : equal similitudes}, modulo GL_1:
    // 4 + 22 - 1 - 1 = 24.
    let gsp6 = grp("GSp(6)")?;
    Ok(IntegralDescriptor::new("bfg-gsp8", Mode::Classical)
        .group(gl(2)?.mod_gl1())
        .group(gsp6.mod_gl1())
        .functional(generic(grp("GSp(8)")?)?)
        .functional(eis(0, gsp6, &[1, 2], false)?))
}

fn pollack_shah(_: &[u64]) -> Result<IntegralDescriptor> {
    Ok(IntegralDescriptor::new("pollack-shah", Mode::Classical)
        .group(grp("PGL(4)")?)
        .functional(generic(gl(4)?)?)
        .functional(eis(0, gl(4)?, &[2, 2], false)?)
        .functional(eis(0, gl(4)?, &[1, 1, 2], false)?))
}

fn pgsp4_klingen(_: &[u64]) -> Result<IntegralDescriptor> {
    let tau = Orbit::regular(gl(2)?)?.gk();
    Ok(IntegralDescriptor::new("pgsp4-klingen", Mode::Classical)
        .group(grp("PGSp(4)")?)
        .functional(generic(gl(4)?)?)
        .functional(eis(tau, grp("GSp(4)")?, &[1], true)?))
}

fn pgsp4_siegel_classical(_: &[u64]) -> Result<IntegralDescriptor> {
    Ok(IntegralDescriptor::new("pgsp4-siegel-classical", Mode::Classical)
        .group(grp("PGSp(4)")?)
        .functional(generic(gl(4)?)?)
        .functional(eis(0, grp("GSp(4)")?, &[2], false)?))
}

fn pgsp4_siegel_extended(_: &[u64]) -> Result<IntegralDescriptor> {
    // The model integrates over a form of SO_3 and a 4-dimensional unipotent group.
    Ok(IntegralDescriptor::new("pgsp4-siegel-extended", Mode::Extended)
        .group(grp("PGSp(4)")?)
        .functional(FunctionalDim::ExplicitPeriod {
            reductive_dim: group_dimension(&GroupDescriptor::so(3)?),
            unipotent_dim: 4,
        })
        .functional(eis(0, grp("GSp(4)")?, &[2], false)?))
}

fn ps_rallis_doubling(p: &[u64]) -> Result<IntegralDescriptor> {
    let n = p[0];
    let g = sp(2 * n)?;
    Ok(IntegralDescriptor::new("ps-rallis-doubling", Mode::Extended)
        .group(g)
        .group(g)
        .functional(FunctionalDim::MatrixCoefficient(g))
        .functional(eis(0, sp(4 * n)?, &[2 * n], false)?))
}

fn cfgk_doubling(p: &[u64]) -> Result<IntegralDescriptor> {
    let mut d = cfgk_descriptor(p[0], p[1])?;
    d.name = "cfgk-doubling".into();
    Ok(d)
}

fn theta_valid(p: &[u64]) -> bool {
    let (n, k) = (p[0], p[1]);
    k == n || k == n + 1
}

fn theta_sp2n_so2k(p: &[u64]) -> Result<IntegralDescriptor> {
    let (n, k) = (p[0], p[1]);
    let sigma = Orbit::regular(GroupDescriptor::so(2 * k)?)?.gk();
    Ok(
        IntegralDescriptor::new("theta-sp2n-so2k", Mode::Lifting { lift_gk: sigma })
            .group(sp(2 * n)?)
            .functional(generic(sp(2 * n)?)?)
            .functional(orbit(sp(4 * n * k)?, &[(2, 1), (1, 4 * n * k - 2)])?),
    )
}

fn sec7_valid(p: &[u64]) -> bool {
    p[0].is_multiple_of(2) && p[0] > 2
}

fn sec7_lift_sl2(p: &[u64]) -> Result<IntegralDescriptor> {
    let n = p[0];
    let (source, _) = lemma71_orbits(1, n, (n + 2) / 2)?;
    let theta = orbit(sp(6 * n)?, &[(2 * n, 2), (n, 2)])?;
    let pi = Orbit::regular(sp(2)?)?;
    Ok(
        IntegralDescriptor::new("sec7-lift-sl2", Mode::Lifting { lift_gk: pi.gk() })
            .group(sp(2)?)
            .unipotent(source.gk())
            .functional(FunctionalDim::GkOfOrbit(pi))
            .functional(theta),
    )
}

macro_rules! entry {
    ($id:expr, $desc:expr, $reference:expr, [$($p:expr),*], $expected:expr, $valid:expr, $build:expr) => {
        CatalogEntry {
            id: $id,
            description: $desc,
            reference: $reference,
            params: &[$($p),*],
            expected_balanced: $expected,
            valid: $valid,
            build: $build,
        }
    };
}

pub static ENTRIES: &[CatalogEntry] = &[
    entry!(
        "riemann-theta",
        "Mellin transform of the Jacobi theta function over GL_1",
        "Riemann",
        [],
        true,
        always,
        riemann_theta
    ),
    entry!(
        "hecke",
        "Hecke integral of a GL_2 cusp form over GL_1",
        "Hecke",
        [],
        true,
        always,
        hecke
    ),
    entry!(
        "classical-rs",
        "GL_2 x GL_2 Rankin-Selberg integral over PGL_2 with a mirabolic Eisenstein series",
        "Rankin, Selberg",
        [],
        true,
        always,
        classical_rs
    ),
    entry!(
        "jpss-equal",
        "GL_n x GL_n over PGL_n with the mirabolic Eisenstein series",
        "Jacquet, Piatetski-Shapiro, Shalika",
        ["n"],
        true,
        at_least_two,
        jpss_equal
    ),
    entry!(
        "jpss-adjacent",
        "GL_n x GL_{n-1} over GL_{n-1}",
        "Jacquet, Piatetski-Shapiro, Shalika",
        ["n"],
        true,
        at_least_two,
        jpss_adjacent
    ),
    entry!(
        "jpss-general",
        "GL_n x GL_k (k < n) over GL_k with the unipotent integration Y_{n,k}",
        "Jacquet, Piatetski-Shapiro, Shalika",
        ["n", "k"],
        true,
        |p| p[1] < p[0],
        jpss_general
    ),
    entry!(
        "jpss-naive-unbalanced",
        "GL_n x GL_k (k < n-1) over GL_k without Y_{n,k}",
        "Jacquet, Piatetski-Shapiro, Shalika",
        ["n", "k"],
        false,
        |p| p[1] + 1 < p[0],
        jpss_naive
    ),
    entry!(
        "whittaker-eisenstein",
        "Whittaker coefficient of a GL_n Borel Eisenstein series",
        "Langlands-Shahidi",
        ["n"],
        true,
        always,
        whittaker_eisenstein
    ),
    entry!(
        "asai",
        "Asai integral of a cusp form on Res_{K/F} GL_n",
        "Flicker",
        ["n"],
        true,
        at_least_two,
        asai
    ),
    entry!(
        "bf-even",
        "standard x exterior square on GL_2k over GL_1\\(GL_k x GL_k)",
        "Bump, Friedberg",
        ["k"],
        true,
        at_least_two,
        bf_even
    ),
    entry!(
        "bf-odd",
        "standard x exterior square on GL_{2k+1} over GL_1\\(GL_{k+1} x GL_k)",
        "Bump, Friedberg",
        ["k"],
        true,
        always,
        bf_odd
    ),
    entry!(
        "bfg-gsp4",
        "standard x spin on GSp_4 with two maximal parabolic Eisenstein series",
        "Bump, Friedberg, Ginzburg",
        [],
        true,
        always,
        bfg_gsp4
    ),
    entry!(
        "bfg-gsp6",
        "standard x spin on GSp_6 over GL_1\\H, H in GL_2 x GSp_4",
        "Bump, Friedberg, Ginzburg",
        [],
        true,
        always,
        bfg_gsp6
    ),
    entry!(
        "bfg-gsp8",
        "standard x spin on GSp_8 over GL_1\\H, H in GL_2 x GSp_6",
        "Bump, Friedberg, Ginzburg",
        [],
        true,
        always,
        bfg_gsp8
    ),
    entry!(
        "pollack-shah",
        "triple product of L-functions on PGL_4",
        "Pollack, Shah",
        [],
        true,
        always,
        pollack_shah
    ),
    entry!(
        "pgsp4-klingen",
        "PGL_4 cusp form against a Klingen Eisenstein series on PGSp_4",
        "Ginzburg (SO_6 x GL_2)",
        [],
        true,
        always,
        pgsp4_klingen
    ),
    entry!(
        "pgsp4-siegel-classical",
        "PGL_4 cusp form against a Siegel Eisenstein series on PGSp_4, GK dimensions",
        "Bump, Friedberg, Ginzburg",
        [],
        false,
        always,
        pgsp4_siegel_classical
    ),
    entry!(
        "pgsp4-siegel-extended",
        "same integral counted through its WO-model functional",
        "Bump, Friedberg, Ginzburg",
        [],
        true,
        always,
        pgsp4_siegel_extended
    ),
    entry!(
        "ps-rallis-doubling",
        "doubling integral for Sp_2n with the Siegel Eisenstein series of Sp_4n",
        "Piatetski-Shapiro, Rallis",
        ["n"],
        true,
        always,
        ps_rallis_doubling
    ),
    entry!(
        "cfgk-doubling",
        "generalized doubling integral for Sp_2n x GL_k",
        "Cai, Friedberg, Ginzburg, Kaplan",
        ["n", "k"],
        true,
        always,
        cfgk_doubling
    ),
    entry!(
        "theta-sp2n-so2k",
        "theta lift Sp_2n -> SO_2k of a generic cusp form, generic lift",
        "classical theta correspondence",
        ["n", "k"],
        true,
        theta_valid,
        theta_sp2n_so2k
    ),
    entry!(
        "sec7-lift-sl2",
        "Sp_2 x Sp_2 kernel on Sp_6n from a residual representation with orbit ((2n)^2 n^2)",
        "generalized Speh residues",
        ["n"],
        true,
        sec7_valid,
        sec7_lift_sl2
    ),
];

/// Integrals recorded without a checkable entry.
pub const NOTES: &[(&str, &str)] = &[
    (
        "symmetric-square-metaplectic",
        "symmetric square integrals on metaplectic covers (Bump-Ginzburg, Takeda); no dimension data recorded",
    ),
    ("godement-jacquet", "obtained from doubling integrals after unfolding"),
    (
        "new-way",
        "unfold to non-unique functionals; balanced only tautologically",
    ),
];

/// `(id, description, reference)` in registry order.
pub fn list_entries() -> Vec<(&'static str, &'static str, &'static str)> {
    ENTRIES.iter().map(|e| (e.id, e.description, e.reference)).collect()
}

pub fn entry(id: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::Lookup(format!("no catalog entry `{id}`")))
}

/// Glob match with `*` (any run) and `?` (one character).
fn glob(pattern: &str, text: &str) -> bool {
    let p: Vec<char> = pattern.chars().collect();
    let t: Vec<char> = text.chars().collect();
    let (mut pi, mut ti) = (0, 0);
    let mut star: Option<(usize, usize)> = None;
    while ti < t.len() {
        if pi < p.len() && (p[pi] == '?' || p[pi] == t[ti]) {
            pi += 1;
            ti += 1;
        } else if pi < p.len() && p[pi] == '*' {
            star = Some((pi, ti));
            pi += 1;
        } else if let Some((sp, st)) = star {
            pi = sp + 1;
            ti = st + 1;
            star = Some((sp, st + 1));
        } else {
            return false;
        }
    }
    p[pi..].iter().all(|&c| c == '*')
}

/// Entries whose id matches `pattern` (exact id or glob); all when `None`.
pub fn select(pattern: Option<&str>) -> Result<Vec<&'static CatalogEntry>> {
    let chosen: Vec<_> = match pattern {
        None => ENTRIES.iter().collect(),
        Some(pat) => ENTRIES.iter().filter(|e| glob(pat, e.id)).collect(),
    };
    if chosen.is_empty() {
        return Err(Error::Lookup(format!(
            "no catalog entry matches `{}`",
            pattern.unwrap_or("")
        )));
    }
    Ok(chosen)
}

pub fn run_entry(e: &CatalogEntry, range: &RangeInclusive<u64>) -> Result<Vec<CatalogRun>> {
    e.points(range)
        .into_iter()
        .map(|point| {
            let d = e.build(&point)?;
            let report = check_equation(&d)?;
            Ok(CatalogRun {
                id: e.id.to_string(),
                params: e
                    .params
                    .iter()
                    .map(|s| s.to_string())
                    .zip(point.iter().copied())
                    .collect(),
                report,
                expected: e.expected_balanced,
            })
        })
        .collect()
}

/// Evaluates every selected entry at every valid point of `range`
/// (default [`DEFAULT_RANGE`]).
pub fn run_catalog(filter: Option<&str>, range: Option<RangeInclusive<u64>>) -> Result<Vec<CatalogRun>> {
    let range = range.unwrap_or(DEFAULT_RANGE);
    if range.is_empty() {
        return Err(Error::domain(format!("empty parameter range {range:?}")));
    }
    let mut runs = Vec::new();
    for e in select(filter)? {
        runs.extend(run_entry(e, &range)?);
    }
    Ok(runs)
}
