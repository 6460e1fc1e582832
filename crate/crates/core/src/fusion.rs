//! Splitting of maximal atypical weights into classical and principal parts,
//! superdimensions and tensor products modulo negligible morphisms.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::classical::{
    det_exponent, group_fusion, lr_coefficients, lr_partitions, weyl_dim, ClassicalWeight,
    FusionLabel, PrincipalFusionSpec,
};
use crate::diagrams::dual;
use crate::error::{domain, Error, Result};
use crate::functors::{ds_paths, eta0_reduce, ground_state_level, pi_power, stabilize};
use crate::weights::{
    block_label, diagram_to_weight, is_maximal_atypical, is_negligible_irreducible, parity,
    weight_to_diagram, SuperWeight, WeightDiagram,
};

/// `L(λ) = Π^{-N} ⊗ L(classical, principal)` with the second factor negatively stable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitWeight {
    pub classical: ClassicalWeight,
    /// Weight of GL(n|n).
    pub principal: SuperWeight,
    pub pi_power: u32,
}

impl SplitWeight {
    /// Undo the splitting.
    pub fn reassemble(&self) -> Result<SuperWeight> {
        let n = self.principal.n;
        let mut top = self.classical.0.clone();
        top.extend(&self.principal.top);
        let x = SuperWeight::new(top.len(), n, top, self.principal.bottom.clone())?;
        if self.classical.rank() == 0 {
            return Ok(x);
        }
        pi_power(&x, -(self.pi_power as i64))
    }
}

/// Image `L(classical) ⊠ [principal]` of `X_λ` under the splitting functor.
/// `principal` already includes the `Ber^{ber_core_power}` twist.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemisimpleImage {
    pub classical: ClassicalWeight,
    pub principal: SuperWeight,
    pub parity: u8,
    pub ber_core_power: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum PrincipalFactor {
    /// Blockwise answer; the principal product is not resolved.
    Unresolved,
    /// Irreducible principal weight of GL(n|n).
    Weight { weight: SuperWeight },
    /// Summand of a principal fusion table.
    Label { label: FusionLabel },
    /// Product of two inequivalent principal parts, which stays indecomposable.
    External { left: SuperWeight, right: SuperWeight },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FusionSummand {
    pub classical: ClassicalWeight,
    pub principal: PrincipalFactor,
    /// Present when the summand is the image of an irreducible `X_ν`.
    pub weight: Option<SuperWeight>,
    pub parity: Option<u8>,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionResult {
    pub summands: Vec<FusionSummand>,
    pub negligible_dropped: bool,
    pub warnings: Vec<String>,
}

impl FusionResult {
    pub fn total_multiplicity(&self) -> u64 {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }

    /// Number of distinct classical weights.
    pub fn block_count(&self) -> usize {
        let mut v: Vec<_> = self.summands.iter().map(|s| &s.classical).collect();
        v.sort();
        v.dedup();
        v.len()
    }

    /// `Σ mult · dim(classical) · dim(principal)`.
    pub fn dimension(&self) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for s in &self.summands {
            total += weyl_dim(&s.classical) * principal_dim(&s.principal)? * s.multiplicity;
        }
        Ok(total)
    }
}

fn principal_dim(p: &PrincipalFactor) -> Result<BigUint> {
    Ok(match p {
        PrincipalFactor::Unresolved => {
            return domain("blockwise summands carry no principal dimension")
        }
        PrincipalFactor::Weight { weight } => ds_paths(weight)?.count,
        PrincipalFactor::Label { label } => BigUint::from(label.dim),
        PrincipalFactor::External { left, right } => ds_paths(left)?.count * ds_paths(right)?.count,
    })
}

fn require_split(w: &SuperWeight) -> Result<()> {
    if w.m < w.n || !is_maximal_atypical(w) {
        return domain(format!("{w} is not a maximal atypical weight with m >= n"));
    }
    Ok(())
}

pub fn splice(w: &SuperWeight) -> Result<SplitWeight> {
    require_split(w)?;
    let r = w.m - w.n;
    if r == 0 {
        return Ok(SplitWeight { classical: ClassicalWeight(vec![]), principal: w.clone(), pi_power: 0 });
    }
    let (x, n_shift) = stabilize(w)?;
    let principal = SuperWeight::new(w.n, w.n, x.top[r..].to_vec(), x.bottom.clone())?;
    Ok(SplitWeight {
        classical: ClassicalWeight(x.top[..r].to_vec()),
        principal,
        pi_power: n_shift,
    })
}

pub fn image(w: &SuperWeight) -> Result<SemisimpleImage> {
    let s = splice(w)?;
    let principal = s.principal.twist(s.pi_power as i64);
    debug_assert_eq!(principal, eta0_reduce(w)?);
    Ok(SemisimpleImage {
        classical: s.classical,
        principal,
        parity: parity(w),
        ber_core_power: s.pi_power,
    })
}

/// The maximal atypical weight of GL(r+n|n) whose image is `L(classical) ⊠ [principal]`.
pub fn compose_image(classical: &ClassicalWeight, principal: &SuperWeight) -> Result<SuperWeight> {
    if principal.m != principal.n || !is_maximal_atypical(principal) {
        return domain("principal part must be a maximal atypical weight of GL(n|n)");
    }
    let r = classical.rank() as i64;
    let crosses: std::collections::BTreeSet<i64> =
        classical.0.iter().enumerate().map(|(j, &l)| l - j as i64).collect();
    let mut d = WeightDiagram {
        m: principal.n + classical.rank(),
        n: principal.n,
        vees: Default::default(),
        crosses,
        circles: Default::default(),
    };
    for &q in &weight_to_diagram(principal).vees {
        let p = (q - r..=q)
            .find(|&p| !d.crosses.contains(&p) && p + d.crosses.range(p + 1..).count() as i64 == q)
            .expect("core-free coordinates are onto");
        d.vees.insert(p);
    }
    diagram_to_weight(&d)
}

/// Superdimension of `L(λ)`.
pub fn sdim(w: &SuperWeight) -> Result<BigInt> {
    if w.m < w.n {
        return domain("superdimensions are computed for m >= n");
    }
    if is_negligible_irreducible(w) {
        return Ok(BigInt::zero());
    }
    let p = ds_paths(w)?;
    let core = ClassicalWeight(block_label(w).classical_core());
    let mag = BigInt::from(p.count * weyl_dim(&core));
    Ok(if p.sign < 0 { -mag } else { mag })
}

fn require_pair(w1: &SuperWeight, w2: &SuperWeight) -> Result<()> {
    if (w1.m, w1.n) != (w2.m, w2.n) {
        return domain(format!("weights live on different groups: {w1} and {w2}"));
    }
    if w1.m < w1.n {
        return domain("tensor products are computed for m >= n");
    }
    Ok(())
}

fn empty_result() -> FusionResult {
    FusionResult { summands: vec![], negligible_dropped: true, warnings: vec![] }
}

/// Which blocks occur in `X_λ ⊗ X_μ` mod negligible, with multiplicity.
pub fn tensor_blockwise(w1: &SuperWeight, w2: &SuperWeight) -> Result<FusionResult> {
    require_pair(w1, w2)?;
    if !is_maximal_atypical(w1) || !is_maximal_atypical(w2) {
        return Ok(empty_result());
    }
    let c1 = ClassicalWeight(block_label(w1).classical_core());
    let c2 = ClassicalWeight(block_label(w2).classical_core());
    let summands = lr_coefficients(&c1, &c2)?
        .into_iter()
        .rev()
        .map(|(classical, multiplicity)| FusionSummand {
            classical,
            principal: PrincipalFactor::Unresolved,
            weight: None,
            parity: None,
            multiplicity,
        })
        .collect();
    Ok(FusionResult { summands, negligible_dropped: true, warnings: vec![] })
}

/// `k` with `p = Ber^k`, if `p` is invertible.
fn ber_power(p: &SuperWeight) -> Option<i64> {
    let k = p.top.first().copied().unwrap_or(0);
    (*p == SuperWeight::ber(p.m, p.n, k)).then_some(k)
}

/// Principal parts related by a Ber twist, possibly after dualizing.
pub fn principal_equivalent(p1: &SuperWeight, p2: &SuperWeight) -> bool {
    let shift_of = |a: &SuperWeight, b: &SuperWeight| {
        let (da, db) = (weight_to_diagram(a).vees, weight_to_diagram(b).vees);
        let k = match (da.iter().next(), db.iter().next()) {
            (Some(x), Some(y)) => y - x,
            _ => 0,
        };
        da.iter().map(|v| v + k).eq(db.iter().copied())
    };
    shift_of(p1, p2) || shift_of(&dual(p1), p2)
}

/// `X_λ ⊗ X_μ` mod negligible. Principal parts that are neither invertible
/// nor inequivalent need a fusion spec for each factor.
pub fn tensor_mod_negligible(
    w1: &SuperWeight,
    w2: &SuperWeight,
    spec1: Option<&PrincipalFusionSpec>,
    spec2: Option<&PrincipalFusionSpec>,
) -> Result<FusionResult> {
    require_pair(w1, w2)?;
    if !is_maximal_atypical(w1) || !is_maximal_atypical(w2) {
        return Ok(empty_result());
    }
    let (i1, i2) = (image(w1)?, image(w2)?);
    let (p1, p2) = (&i1.principal, &i2.principal);
    let mut warnings = vec![];
    let factors: Vec<PrincipalFactor> = if let Some(k) = ber_power(p1) {
        vec![PrincipalFactor::Weight { weight: p2.twist(k) }]
    } else if let Some(k) = ber_power(p2) {
        vec![PrincipalFactor::Weight { weight: p1.twist(k) }]
    } else if principal_equivalent(p1, p2) {
        let (Some(s1), Some(s2)) = (spec1, spec2) else {
            return Err(Error::RequiresExternalFusion(format!(
                "principal parts {p1} and {p2} are equivalent; supply a fusion spec"
            )));
        };
        for (s, p) in [(s1, p1), (s2, p2)] {
            let d = ds_paths(p)?.count;
            if BigUint::from(s.degree) != d {
                return domain(format!("spec degree {} does not match dim {d} of {p}", s.degree));
            }
        }
        let table = group_fusion(s1, s2)?;
        warnings.extend(table.warning);
        table.summands.into_iter().map(|label| PrincipalFactor::Label { label }).collect()
    } else {
        vec![PrincipalFactor::External { left: p1.clone(), right: p2.clone() }]
    };
    let mut summands = vec![];
    for (nu, c) in lr_coefficients(&i1.classical, &i2.classical)?.into_iter().rev() {
        for f in &factors {
            let weight = match f {
                PrincipalFactor::Weight { weight } => Some(compose_image(&nu, weight)?),
                _ => None,
            };
            summands.push(FusionSummand {
                classical: nu.clone(),
                principal: f.clone(),
                parity: weight.as_ref().map(parity),
                weight,
                multiplicity: c,
            });
        }
    }
    Ok(FusionResult { summands, negligible_dropped: true, warnings })
}

/// Full decomposition mod negligible for two higher ground states.
pub fn tensor_ground_states(w1: &SuperWeight, w2: &SuperWeight) -> Result<FusionResult> {
    require_pair(w1, w2)?;
    let (Some(l1), Some(l2)) = (ground_state_level(w1), ground_state_level(w2)) else {
        return domain("both factors must be higher ground states");
    };
    let (m, n) = (w1.m, w1.n);
    let r = m - n;
    let level = (l1 + l2) as i64;
    let normal = |w: &SuperWeight| {
        let core = block_label(w).classical_core();
        let s = core.last().copied().unwrap_or(0);
        (core.iter().map(|x| x - s).collect::<Vec<_>>(), s)
    };
    let (mu1, s1) = normal(w1);
    let (mu2, s2) = normal(w2);
    let mut acc: BTreeMap<SuperWeight, u64> = BTreeMap::new();
    for (nu, c) in lr_partitions(&mu1, &mu2, 2 * r) {
        if nu[r..].iter().any(|&x| x != 0) {
            continue;
        }
        let mut top = nu[..r].to_vec();
        top.extend(std::iter::repeat_n(0, n));
        let cov = SuperWeight::new(m, n, top, vec![0; n])?.twist(s1 + s2);
        let x = if r == 0 { cov.twist(-level) } else { pi_power(&cov, level)? };
        *acc.entry(x).or_insert(0) += c;
    }
    let mut summands = vec![];
    for (x, c) in acc.into_iter().rev() {
        let im = image(&x)?;
        summands.push(FusionSummand {
            classical: im.classical,
            principal: PrincipalFactor::Weight { weight: im.principal },
            parity: Some(im.parity),
            weight: Some(x),
            multiplicity: c,
        });
    }
    Ok(FusionResult { summands, negligible_dropped: true, warnings: vec![] })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum PrincipalDet {
    /// `Ber_{n|n}^power`.
    Known { power: BigInt },
    /// `Ber_{n|n}^{multiplier · ℓ(principal)}` with `ℓ` unevaluated.
    Symbolic { principal: SuperWeight, multiplier: BigUint },
}

/// `det(X_λ) ↦ det^{classical_power} ⊠ principal`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Determinant {
    pub classical_power: BigInt,
    pub principal: PrincipalDet,
}

/// Determinant of `X_λ` in image coordinates. `ell` evaluates `ℓ` when known.
pub fn determinant(w: &SuperWeight, ell: Option<i64>) -> Result<Determinant> {
    let im = image(w)?;
    let a = ds_paths(&im.principal)?.count;
    let b = weyl_dim(&im.classical);
    let classical_power = BigInt::from(a) * det_exponent(&im.classical);
    let principal = match ber_power(&im.principal).or(ell) {
        Some(l) => PrincipalDet::Known { power: BigInt::from(b) * l },
        None => PrincipalDet::Symbolic { principal: im.principal, multiplier: b },
    };
    Ok(Determinant { classical_power, principal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{GroupFamily, Realization};

    fn w(m: usize, n: usize, t: &[i64], b: &[i64]) -> SuperWeight {
        SuperWeight::new(m, n, t.to_vec(), b.to_vec()).unwrap()
    }

    fn gsp6(twist: i64) -> PrincipalFusionSpec {
        PrincipalFusionSpec { family: GroupFamily::GSp, degree: 6, twist, realization: Realization::Standard }
    }

    #[test]
    fn images_of_special_modules() {
        let im = image(&SuperWeight::ber(3, 2, 1)).unwrap();
        assert_eq!(im.classical.0, vec![1]);
        assert_eq!(im.principal, SuperWeight::ber(2, 2, 1));
        let ext = image(&w(3, 1, &[1, 1, 0], &[0])).unwrap();
        assert_eq!(ext.classical.0, vec![1, 1]);
        assert_eq!(ext.principal, SuperWeight::trivial(1, 1));
    }

    #[test]
    fn compose_inverts_image() {
        let x = w(4, 2, &[0, 0, 0, -5], &[5, 0]);
        let im = image(&x).unwrap();
        assert_eq!(compose_image(&im.classical, &im.principal).unwrap(), x);
    }

    #[test]
    fn sdims() {
        assert_eq!(sdim(&SuperWeight::ber(2, 2, 1)).unwrap(), 1.into());
        assert_eq!(sdim(&SuperWeight::ber(1, 1, 1)).unwrap(), (-1).into());
        assert_eq!(sdim(&w(2, 1, &[1, 0], &[0])).unwrap(), 1.into());
        assert_eq!(sdim(&w(2, 1, &[1, 1], &[0])).unwrap(), 0.into());
    }

    #[test]
    fn gl63_example() {
        let a = w(6, 3, &[3, 2, 1, -2, -3, -4], &[4, 3, 2]);
        let b = w(6, 3, &[4, 2, 1, 0, -1, -2], &[2, 1, 0]);
        let blocks = tensor_blockwise(&a, &b).unwrap();
        assert_eq!(blocks.summands.len(), 6);
        assert_eq!(blocks.total_multiplicity(), 7);
        let full = tensor_mod_negligible(&a, &b, Some(&gsp6(0)), Some(&gsp6(2))).unwrap();
        assert_eq!(full.block_count(), 6);
        assert_eq!(full.total_multiplicity(), 21);
        let expect = sdim(&a).unwrap().magnitude() * sdim(&b).unwrap().magnitude();
        assert_eq!(full.dimension().unwrap(), expect);
        assert!(matches!(
            tensor_mod_negligible(&a, &b, None, None),
            Err(Error::RequiresExternalFusion(_))
        ));
    }

    #[test]
    fn v_tensor_v() {
        let v = w(2, 1, &[1, 0], &[0]);
        let out = tensor_ground_states(&v, &v).unwrap();
        assert_eq!(out.summands.len(), 1);
        assert_eq!(out.summands[0].weight, Some(w(2, 1, &[2, 0], &[0])));
    }

    #[test]
    fn unit_is_neutral() {
        let x = w(4, 2, &[0, 0, 0, -5], &[5, 0]);
        let out = tensor_mod_negligible(&x, &SuperWeight::trivial(4, 2), None, None).unwrap();
        assert_eq!(out.summands.len(), 1);
        assert_eq!(out.summands[0].weight, Some(x));
    }

    #[test]
    fn determinants() {
        let d = determinant(&SuperWeight::ber(3, 2, 1), None).unwrap();
        assert_eq!(d.classical_power, 1.into());
        assert_eq!(d.principal, PrincipalDet::Known { power: 1.into() });
        let e = determinant(&w(3, 1, &[1, 1, 0], &[0]), None).unwrap();
        assert_eq!(e.classical_power, 1.into());
        assert_eq!(e.principal, PrincipalDet::Known { power: 0.into() });
    }
}
