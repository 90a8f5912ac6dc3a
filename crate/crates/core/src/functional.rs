//! Dimensions of the unique functionals an integral unfolds to.
//!
//! A functional realized by integration over a group `X` has dimension
//! `dim X`. When a smaller group realizes the same functional, the smaller
//! group must be used; descriptors are expected to carry that minimal data
//! already, since minimality is not decidable from dimension counts alone.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{group_dimension, unipotent_radical_dim, GroupDescriptor, LeviComposition};
use crate::orbit::Orbit;
use crate::partition::Partition;

/// Eisenstein series data: `dim τ` of the inducing representation plus the
/// dimension of the unipotent radical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EisensteinSeries {
    pub inducing_dim: u64,
    pub radical_dim: u64,
}

impl EisensteinSeries {
    pub fn dim(&self) -> u64 {
        self.inducing_dim + self.radical_dim
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FunctionalDim {
    /// Fourier coefficient along the orbit of the representation; `gk`.
    GkOfOrbit(Orbit),
    /// Global matrix coefficient over a group; its dimension.
    MatrixCoefficient(GroupDescriptor),
    /// Period over a reductive group times a unipotent group.
    ExplicitPeriod {
        reductive_dim: u64,
        unipotent_dim: u64,
    },
    /// Fourier-Jacobi coefficient over `N_1` of the orbit.
    FourierJacobi(Orbit),
    EisensteinDim(EisensteinSeries),
    /// Idele class or additive character; dimension zero.
    CharacterDim,
}

impl FunctionalDim {
    pub fn gk_of(group: &str, partition: &str) -> Result<Self> {
        Ok(FunctionalDim::GkOfOrbit(Orbit::new(
            group.parse()?,
            Partition::parse(partition)?,
        )?))
    }

    /// The regular (generic) orbit of `group`.
    pub fn generic(group: GroupDescriptor) -> Result<Self> {
        Ok(FunctionalDim::GkOfOrbit(Orbit::regular(group)?))
    }

    pub fn eisenstein(inducing_dim: u64, radical_dim: u64) -> Self {
        FunctionalDim::EisensteinDim(EisensteinSeries {
            inducing_dim,
            radical_dim,
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FunctionalDim::GkOfOrbit(_) => "GKOfOrbit",
            FunctionalDim::MatrixCoefficient(_) => "MatrixCoefficient",
            FunctionalDim::ExplicitPeriod { .. } => "ExplicitPeriod",
            FunctionalDim::FourierJacobi(_) => "FourierJacobi",
            FunctionalDim::EisensteinDim(_) => "EisensteinDim",
            FunctionalDim::CharacterDim => "CharacterDim",
        }
    }

    /// Admissible in the original (GK-only) dimension equation.
    pub fn is_classical(&self) -> bool {
        matches!(
            self,
            FunctionalDim::GkOfOrbit(_) | FunctionalDim::EisensteinDim(_) | FunctionalDim::CharacterDim
        )
    }

    fn args(&self) -> Value {
        match self {
            FunctionalDim::GkOfOrbit(o) | FunctionalDim::FourierJacobi(o) => {
                json!({"group": o.group().to_string(), "partition": o.partition().to_string()})
            }
            FunctionalDim::MatrixCoefficient(g) => json!({"group": g.to_string()}),
            FunctionalDim::ExplicitPeriod {
                reductive_dim,
                unipotent_dim,
            } => json!({"reductive_dim": reductive_dim, "unipotent_dim": unipotent_dim}),
            FunctionalDim::EisensteinDim(e) => {
                json!({"inducing_dim": e.inducing_dim, "radical_dim": e.radical_dim})
            }
            FunctionalDim::CharacterDim => json!({}),
        }
    }
}

pub fn functional_value(f: &FunctionalDim) -> u64 {
    match f {
        FunctionalDim::GkOfOrbit(o) => o.gk(),
        FunctionalDim::MatrixCoefficient(g) => group_dimension(g),
        FunctionalDim::ExplicitPeriod {
            reductive_dim,
            unipotent_dim,
        } => reductive_dim + unipotent_dim,
        FunctionalDim::FourierJacobi(o) => o.filtration().dim_n1,
        FunctionalDim::EisensteinDim(e) => e.dim(),
        FunctionalDim::CharacterDim => 0,
    }
}

/// `dim E_τ = dim τ + dim U(P)`.
pub fn eisenstein_dim(inducing_gk: u64, group: &GroupDescriptor, levi: &LeviComposition) -> Result<FunctionalDim> {
    let radical_dim = unipotent_radical_dim(group, levi)?;
    Ok(FunctionalDim::eisenstein(inducing_gk, radical_dim))
}

#[derive(Serialize, Deserialize)]
struct FunctionalJson {
    kind: String,
    #[serde(default)]
    args: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    value: Option<u64>,
}

impl Serialize for FunctionalDim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FunctionalJson {
            kind: self.kind().to_string(),
            args: self.args(),
            value: Some(functional_value(self)),
        }
        .serialize(s)
    }
}

fn arg<'a>(args: &'a Value, key: &str, kind: &str) -> Result<&'a Value> {
    args.get(key)
        .ok_or_else(|| Error::parse(kind, format!("missing argument `{key}`")))
}

fn arg_u64(args: &Value, key: &str, kind: &str) -> Result<u64> {
    arg(args, key, kind)?
        .as_u64()
        .ok_or_else(|| Error::parse(key, "expected a non-negative integer"))
}

fn arg_str<'a>(args: &'a Value, key: &str, kind: &str) -> Result<&'a str> {
    arg(args, key, kind)?
        .as_str()
        .ok_or_else(|| Error::parse(key, "expected a string"))
}

fn orbit_arg(args: &Value, kind: &str) -> Result<Orbit> {
    let group = arg_str(args, "group", kind)?.parse()?;
    let partition = Partition::parse(arg_str(args, "partition", kind)?)?;
    Orbit::new(group, partition)
}

fn from_json(raw: FunctionalJson) -> Result<FunctionalDim> {
    let kind = raw.kind.as_str();
    let a = &raw.args;
    let f = match kind {
        "GKOfOrbit" => FunctionalDim::GkOfOrbit(orbit_arg(a, kind)?),
        "FourierJacobi" => FunctionalDim::FourierJacobi(orbit_arg(a, kind)?),
        "MatrixCoefficient" => FunctionalDim::MatrixCoefficient(arg_str(a, "group", kind)?.parse()?),
        "ExplicitPeriod" => FunctionalDim::ExplicitPeriod {
            reductive_dim: arg_u64(a, "reductive_dim", kind)?,
            unipotent_dim: arg_u64(a, "unipotent_dim", kind)?,
        },
        "EisensteinDim" => {
            FunctionalDim::eisenstein(arg_u64(a, "inducing_dim", kind)?, arg_u64(a, "radical_dim", kind)?)
        }
        "CharacterDim" => FunctionalDim::CharacterDim,
        other => return Err(Error::parse(other, "unknown functional kind")),
    };
    if let Some(stated) = raw.value {
        let computed = functional_value(&f);
        if stated != computed {
            return Err(Error::domain(format!(
                "{kind} states value {stated} but its arguments give {computed}"
            )));
        }
    }
    Ok(f)
}

impl<'de> Deserialize<'de> for FunctionalDim {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        from_json(FunctionalJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
