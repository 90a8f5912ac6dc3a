//! Group descriptors, their dimensions and standard parabolic data.
//!
//! Centers, similitude factors and restriction of scalars only ever enter
//! through dimension counts, so they are modifiers on a split classical
//! group rather than separate root data.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::GroupFamily;
use crate::roots::{self, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Modifiers {
    /// Quotient by the center; -1.
    pub projective_center: bool,
    /// Similitude factor; +1.
    pub similitude: bool,
    /// Restriction of scalars from a quadratic extension; x2.
    pub restrict_scalars: bool,
    /// Quotient by a (diagonal) `GL_1`; -1.
    pub quotient_gl1: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupDescriptor {
    family: GroupFamily,
    size: u64,
    modifiers: Modifiers,
}

impl GroupDescriptor {
    /// `family` acting on a space of dimension `size`; the parity of `size`
    /// must match the family.
    pub fn new(family: GroupFamily, size: u64) -> Result<Self> {
        if size == 0 {
            return Err(Error::domain("group size must be positive"));
        }
        let ok = match family {
            GroupFamily::GeneralLinear => true,
            GroupFamily::Symplectic | GroupFamily::EvenOrthogonal => size.is_multiple_of(2),
            GroupFamily::OddOrthogonal => size % 2 == 1,
        };
        if !ok {
            return Err(Error::domain(format!(
                "{family:?} needs a size of the other parity, got {size}"
            )));
        }
        Ok(GroupDescriptor {
            family,
            size,
            modifiers: Modifiers::default(),
        })
    }

    pub fn gl(n: u64) -> Result<Self> {
        Self::new(GroupFamily::GeneralLinear, n)
    }

    /// `Sp_size`; `size` is the matrix size and must be even.
    pub fn sp(size: u64) -> Result<Self> {
        Self::new(GroupFamily::Symplectic, size)
    }

    pub fn so(m: u64) -> Result<Self> {
        let family = if m % 2 == 1 {
            GroupFamily::OddOrthogonal
        } else {
            GroupFamily::EvenOrthogonal
        };
        Self::new(family, m)
    }

    pub fn projective(mut self) -> Self {
        self.modifiers.projective_center = true;
        self
    }

    /// Adds a similitude factor. Not meaningful for `GL_n`.
    pub fn similitude(mut self) -> Result<Self> {
        if self.family == GroupFamily::GeneralLinear {
            return Err(Error::domain("similitude modifier applies to Sp/SO only"));
        }
        self.modifiers.similitude = true;
        Ok(self)
    }

    pub fn restrict_scalars(mut self) -> Self {
        self.modifiers.restrict_scalars = true;
        self
    }

    pub fn mod_gl1(mut self) -> Self {
        self.modifiers.quotient_gl1 = true;
        self
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn modifiers(&self) -> Modifiers {
        self.modifiers
    }

    /// The same split group without modifiers.
    pub fn base(&self) -> GroupDescriptor {
        GroupDescriptor {
            modifiers: Modifiers::default(),
            ..*self
        }
    }

    /// Multiplier for dimensions measured over the ground field.
    pub fn scalar_factor(&self) -> u64 {
        if self.modifiers.restrict_scalars {
            2
        } else {
            1
        }
    }

    /// Torus rank: `n` for `GL_n`, `n` for `Sp_2n`, `floor(m/2)` for `SO_m`.
    pub fn rank(&self) -> u64 {
        match self.family {
            GroupFamily::GeneralLinear => self.size,
            _ => self.size / 2,
        }
    }

    /// Dimension of the unmodified split group.
    pub fn base_dimension(&self) -> u64 {
        classical_dimension(self.family, self.size)
    }

    pub fn root_system(&self) -> std::sync::Arc<RootSystem> {
        roots::positive_roots(self.family, self.size).expect("descriptor parity checked at construction")
    }
}

fn classical_dimension(family: GroupFamily, size: u64) -> u64 {
    match family {
        GroupFamily::GeneralLinear => size * size,
        GroupFamily::Symplectic => {
            let n = size / 2;
            2 * n * n + n
        }
        GroupFamily::OddOrthogonal | GroupFamily::EvenOrthogonal => size * size.saturating_sub(1) / 2,
    }
}

/// `((base x2 if Res2) + 1 if similitude) - 1 per center/GL_1 quotient`.
pub fn group_dimension(g: &GroupDescriptor) -> u64 {
    let m = g.modifiers;
    let mut dim = g.base_dimension() * g.scalar_factor();
    if m.similitude {
        dim += 1;
    }
    // A group of dimension 0 (SO_1) has nothing to quotient.
    if m.projective_center {
        dim = dim.saturating_sub(1);
    }
    if m.quotient_gl1 {
        dim = dim.saturating_sub(1);
    }
    dim
}

/// Levi data of a standard parabolic: `GL` blocks, optionally followed by a
/// residual classical factor of the same type on the remaining rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeviComposition {
    pub gl_blocks: Vec<u64>,
    #[serde(default)]
    pub keeps_classical_factor: bool,
}

impl LeviComposition {
    pub fn new(gl_blocks: Vec<u64>, keeps_classical_factor: bool) -> Self {
        LeviComposition {
            gl_blocks,
            keeps_classical_factor,
        }
    }

    pub fn blocks(gl_blocks: &[u64]) -> Self {
        Self::new(gl_blocks.to_vec(), false)
    }

    /// Parses `"2,1"`, `"2 1"` or `"[2,1]"`.
    pub fn parse_blocks(text: &str, keeps_classical_factor: bool) -> Result<Self> {
        let body = text.trim().trim_start_matches('[').trim_end_matches(']');
        let mut blocks = Vec::new();
        for tok in body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let b: u64 = tok
                .parse()
                .map_err(|_| Error::parse(tok, "expected a positive block size"))?;
            blocks.push(b);
        }
        Ok(Self::new(blocks, keeps_classical_factor))
    }
}

/// Levi dimension and the resolved block list (GL remainders appended).
fn levi_data(g: &GroupDescriptor, levi: &LeviComposition) -> Result<u64> {
    if let Some(pos) = levi.gl_blocks.iter().position(|&b| b == 0) {
        return Err(Error::domain(format!("Levi block {} is zero", pos + 1)));
    }
    let used: u64 = levi.gl_blocks.iter().sum();
    let budget = g.rank();
    if used > budget {
        return Err(Error::domain(format!(
            "Levi blocks use {used} but {} only allows {budget}",
            g.base()
        )));
    }
    let gl_part: u64 = levi.gl_blocks.iter().map(|b| b * b).sum();
    let rest = budget - used;
    let residual = match g.family {
        // The leftover coordinates of GL_n always form one more block.
        GroupFamily::GeneralLinear => rest * rest,
        _ if !levi.keeps_classical_factor && rest > 0 => {
            return Err(Error::domain(format!(
                "Levi blocks use {used} of rank {budget} without a classical factor"
            )))
        }
        GroupFamily::Symplectic => classical_dimension(GroupFamily::Symplectic, 2 * rest),
        GroupFamily::OddOrthogonal | GroupFamily::EvenOrthogonal => classical_dimension(g.family, g.size - 2 * used),
    };
    Ok(gl_part + residual)
}

/// Dimension of the Levi factor of the (unmodified) group.
pub fn levi_dimension(g: &GroupDescriptor, levi: &LeviComposition) -> Result<u64> {
    Ok(levi_data(g, levi)? * g.scalar_factor())
}

/// `dim U(P) = (dim G - dim M) / 2`. Central modifiers do not change it;
/// restriction of scalars doubles it.
pub fn unipotent_radical_dim(g: &GroupDescriptor, levi: &LeviComposition) -> Result<u64> {
    let levi_dim = levi_data(g, levi)?;
    let diff = g.base_dimension() - levi_dim;
    debug_assert!(diff.is_multiple_of(2));
    Ok(diff / 2 * g.scalar_factor())
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.modifiers;
        if m.restrict_scalars {
            f.write_str("Res2:")?;
        }
        let stem = match self.family {
            GroupFamily::GeneralLinear => "GL",
            GroupFamily::Symplectic => "Sp",
            _ => "SO",
        };
        let prefix = match (m.projective_center, m.similitude) {
            (false, false) => "",
            (false, true) => "G",
            (true, false) => "P",
            (true, true) => "PG",
        };
        write!(f, "{prefix}{stem}({})", self.size)?;
        if m.quotient_gl1 {
            f.write_str("/GL1")?;
        }
        Ok(())
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    /// `GL(n)`, `SL(n)`, `PGL(n)`, `Sp(2n)`, `GSp(2n)`, `PGSp(2n)`, `SO(m)`
    /// (plus `PSp`, `GSO`, `PSO`, `PGSO`), optional `Res2:` prefix and
    /// `/GL1` suffix.
    fn from_str(text: &str) -> Result<Self> {
        let mut s = text.trim();
        let res2 = match s.strip_prefix("Res2:") {
            Some(rest) => {
                s = rest.trim_start();
                true
            }
            None => false,
        };
        let gl1 = match s.strip_suffix("/GL1") {
            Some(rest) => {
                s = rest.trim_end();
                true
            }
            None => false,
        };
        let open = s
            .find('(')
            .ok_or_else(|| Error::parse(text.trim(), "expected NAME(size)"))?;
        let name = &s[..open];
        let arg = s[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(text.trim(), "missing `)`"))?
            .trim();
        let size: u64 = arg
            .parse()
            .map_err(|_| Error::parse(arg, "expected a decimal group size"))?;
        let mut g = match name {
            "GL" => GroupDescriptor::gl(size)?,
            "SL" | "PGL" => GroupDescriptor::gl(size)?.projective(),
            "Sp" => GroupDescriptor::sp(size)?,
            "GSp" => GroupDescriptor::sp(size)?.similitude()?,
            "PGSp" => GroupDescriptor::sp(size)?.similitude()?.projective(),
            "PSp" => GroupDescriptor::sp(size)?.projective(),
            "SO" => GroupDescriptor::so(size)?,
            "GSO" => GroupDescriptor::so(size)?.similitude()?,
            "PSO" => GroupDescriptor::so(size)?.projective(),
            "PGSO" => GroupDescriptor::so(size)?.similitude()?.projective(),
            other => return Err(Error::parse(other, "unknown group name")),
        };
        if res2 {
            g = g.restrict_scalars();
        }
        if gl1 {
            g = g.mod_gl1();
        }
        Ok(g)
    }
}

impl Serialize for GroupDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(group_dimension(&g("PGL(4)")), 15);
        assert_eq!(group_dimension(&g("PGSp(4)")), 10);
        assert_eq!(group_dimension(&g("GL(3)")), 9);
        assert_eq!(group_dimension(&g("SL(3)")), 8);
        assert_eq!(group_dimension(&g("PGL(2)")), 3);
        assert_eq!(group_dimension(&g("GSp(4)/GL1")), 10);
        assert_eq!(group_dimension(&g("GSp(6)")), 22);
        assert_eq!(group_dimension(&g("SO(7)")), 21);
        assert_eq!(group_dimension(&g("SO(3)")), 3);
        assert_eq!(group_dimension(&g("Res2:GL(3)")), 18);
        assert_eq!(group_dimension(&g("Res2:PGL(3)")), 17);
    }

    #[test]
    fn grammar_round_trip() {
        for s in [
            "GL(3)",
            "PGL(4)",
            "Sp(6)",
            "GSp(4)",
            "PGSp(4)",
            "SO(7)",
            "Res2:GL(2)",
            "GSp(4)/GL1",
        ] {
            assert_eq!(g(s).to_string(), s);
        }
        assert_eq!(g("SL(3)").to_string(), "PGL(3)");
    }

    #[test]
    fn grammar_errors() {
        assert!(matches!("Sp(5)".parse::<GroupDescriptor>(), Err(Error::Domain(_))));
        assert!(matches!("E(8)".parse::<GroupDescriptor>(), Err(Error::Parse { .. })));
        assert!("GL(x)".parse::<GroupDescriptor>().is_err());
        assert!("GL(3".parse::<GroupDescriptor>().is_err());
        assert!("GL(0)".parse::<GroupDescriptor>().is_err());
        assert!(GroupDescriptor::gl(3).unwrap().similitude().is_err());
    }

    #[test]
    fn radical_examples() {
        let r = |grp: &str, blocks: &[u64], cf: bool| {
            unipotent_radical_dim(&g(grp), &LeviComposition::new(blocks.to_vec(), cf))
        };
        assert_eq!(r("Sp(8)", &[4], false).unwrap(), 10);
        assert_eq!(r("GL(5)", &[4, 1], false).unwrap(), 4);
        assert_eq!(r("Sp(6)", &[1, 2], false).unwrap(), 8);
        // Klingen in Sp_4: Levi GL_1 x Sp_2
        assert_eq!(r("GSp(4)", &[1], true).unwrap(), 3);
        // Siegel in Sp_4
        assert_eq!(r("Sp(4)", &[2], false).unwrap(), 3);
        // GL remainder forms its own block
        assert_eq!(r("GL(5)", &[4], false).unwrap(), 4);
        assert_eq!(r("GL(4)", &[1, 1, 2], false).unwrap(), 5);
        assert_eq!(r("SO(7)", &[1], true).unwrap(), 5);
        assert_eq!(r("SO(8)", &[4], false).unwrap(), 6);
        assert_eq!(r("Res2:GL(2)", &[1, 1], false).unwrap(), 2);
    }

    #[test]
    fn radical_errors() {
        let r = |grp: &str, blocks: &[u64], cf: bool| {
            unipotent_radical_dim(&g(grp), &LeviComposition::new(blocks.to_vec(), cf))
        };
        assert!(matches!(r("Sp(4)", &[3], false), Err(Error::Domain(_))));
        assert!(matches!(r("GL(3)", &[2, 2], false), Err(Error::Domain(_))));
        assert!(matches!(r("Sp(4)", &[1], false), Err(Error::Domain(_))));
        assert!(matches!(r("GL(3)", &[0, 3], false), Err(Error::Domain(_))));
    }

    #[test]
    fn block_parsing() {
        assert_eq!(
            LeviComposition::parse_blocks("1,2", false).unwrap().gl_blocks,
            vec![1, 2]
        );
        assert_eq!(
            LeviComposition::parse_blocks("[4 1]", true).unwrap().gl_blocks,
            vec![4, 1]
        );
        assert!(LeviComposition::parse_blocks("1,a", false).is_err());
    }
}
