//! Tensor squares of standard representations for the classical families a
//! principal part can have.

use serde::{Deserialize, Serialize};

use crate::error::{validation, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupFamily {
    GL,
    SL,
    SO,
    Sp,
    GSp,
    GOrth,
    Opaque,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Realization {
    Standard,
    DualStandard,
}

/// How a principal part is realized as a representation of its group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrincipalFusionSpec {
    pub family: GroupFamily,
    pub degree: u32,
    #[serde(default)]
    pub twist: i64,
    #[serde(default = "standard")]
    pub realization: Realization,
}

fn standard() -> Realization {
    Realization::Standard
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LabelKind {
    Exterior2,
    Sym2,
    Exterior2Dual,
    Sym2Dual,
    Exterior2Traceless,
    Sym2Traceless,
    Adjoint,
    Trivial,
}

impl LabelKind {
    pub fn symbol(self) -> &'static str {
        match self {
            LabelKind::Exterior2 => "Λ²",
            LabelKind::Sym2 => "S²",
            LabelKind::Exterior2Dual => "Λ²*",
            LabelKind::Sym2Dual => "S²*",
            LabelKind::Exterior2Traceless => "Λ²₀",
            LabelKind::Sym2Traceless => "S²₀",
            LabelKind::Adjoint => "ad",
            LabelKind::Trivial => "1",
        }
    }
}

/// Irreducible summand of a principal fusion, with its character twist and dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FusionLabel {
    pub kind: LabelKind,
    pub twist: i64,
    pub dim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionTable {
    pub summands: Vec<FusionLabel>,
    pub warning: Option<String>,
}

/// Decomposes `a ⊗ b` for two realizations inside the same group.
pub fn group_fusion(a: &PrincipalFusionSpec, b: &PrincipalFusionSpec) -> Result<FusionTable> {
    use GroupFamily::*;
    use LabelKind::*;
    use Realization::*;
    if a.family == Opaque || b.family == Opaque {
        return Err(Error::RequiresExternalFusion("principal group is opaque".into()));
    }
    if a.family != b.family || a.degree != b.degree {
        return Err(Error::RequiresExternalFusion(format!(
            "no table for {:?}({}) ⊗ {:?}({})",
            a.family, a.degree, b.family, b.degree
        )));
    }
    let d = a.degree as u64;
    if d == 0 {
        return validation("group degree must be positive");
    }
    if matches!(a.family, Sp | GSp) && d % 2 == 1 {
        return validation(format!("{:?} needs even degree, got {d}", a.family));
    }
    let t = a.twist + b.twist;
    let ext = d * (d - 1) / 2;
    let sym = d * (d + 1) / 2;
    let kinds: Vec<(LabelKind, u64)> = match a.family {
        GL | SL => match (a.realization, b.realization) {
            (Standard, Standard) => vec![(Exterior2, ext), (Sym2, sym)],
            (DualStandard, DualStandard) => vec![(Exterior2Dual, ext), (Sym2Dual, sym)],
            _ => vec![(Adjoint, d * d - 1), (Trivial, 1)],
        },
        SO | GOrth => vec![(Exterior2, ext), (Sym2Traceless, sym - 1), (Trivial, 1)],
        Sp | GSp => vec![(Exterior2Traceless, ext - 1), (Sym2, sym), (Trivial, 1)],
        Opaque => unreachable!(),
    };
    let summands = kinds
        .into_iter()
        .filter(|&(_, dim)| dim > 0)
        .map(|(kind, dim)| FusionLabel { kind, twist: t, dim })
        .collect();
    let warning = (a.family == SL).then(|| "SL treated with GL tables".to_string());
    Ok(FusionTable { summands, warning })
}
