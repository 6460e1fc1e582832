//! Duflo-Serganova reduction, translation functors and the Π-shift.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::diagrams::{cup_diagram_of, sectors};
use crate::error::{domain, Result};
use crate::weights::{
    diagram_parity, diagram_to_weight, is_maximal_atypical, parity, weight_to_diagram,
    BlockLabel, Label, SuperWeight, WeightDiagram,
};

/// One summand `Πⁿ L(λᵢ)` of a DS image.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DsSummand {
    pub weight: SuperWeight,
    pub parity_shift: u8,
    pub multiplicity: u64,
}

/// Number of `DS^n` paths of a maximal atypical weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCount {
    pub count: BigUint,
    /// Typical GL(m-n|0)-weight every path ends at.
    pub endpoint: SuperWeight,
    /// Product of the parity signs along any path.
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TranslationResult {
    Irreducible(SuperWeight),
    Zero,
    NonIrreducible,
}

fn ds_diagram(d: &WeightDiagram) -> Vec<WeightDiagram> {
    let cd = cup_diagram_of(d);
    sectors(&cd)
        .into_iter()
        .map(|s| {
            let mut e = d.clone();
            e.m -= 1;
            e.n -= 1;
            e.vees.remove(&s.outer.left);
            e
        })
        .collect()
}

/// `DS(L(λ))`: one summand per sector, obtained by deleting that sector's outer vee.
pub fn ds(w: &SuperWeight) -> Result<Vec<DsSummand>> {
    if w.m == 0 || w.n == 0 {
        return domain(format!("DS needs m, n >= 1, got GL({}|{})", w.m, w.n));
    }
    let d = weight_to_diagram(w);
    let p = parity(w);
    let mut out: Vec<DsSummand> = ds_diagram(&d)
        .into_iter()
        .map(|e| {
            let weight = diagram_to_weight(&e).expect("DS keeps diagram cardinalities");
            let parity_shift = (p + 2 - parity(&weight)) % 2;
            DsSummand { weight, parity_shift, multiplicity: 1 }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `DS^k`, with equal summands merged.
pub fn ds_power(w: &SuperWeight, k: usize) -> Result<Vec<DsSummand>> {
    let mut cur: BTreeMap<SuperWeight, (u8, u64)> = BTreeMap::new();
    cur.insert(w.clone(), (0, 1));
    for _ in 0..k {
        let mut next: BTreeMap<SuperWeight, (u8, u64)> = BTreeMap::new();
        for (x, (px, mx)) in &cur {
            for s in ds(x)? {
                let shift = (px + s.parity_shift) % 2;
                let e = next.entry(s.weight).or_insert((shift, 0));
                debug_assert_eq!(e.0, shift, "parity shift is path independent");
                e.1 += mx * s.multiplicity;
            }
        }
        cur = next;
    }
    Ok(cur
        .into_iter()
        .map(|(weight, (parity_shift, multiplicity))| DsSummand { weight, parity_shift, multiplicity })
        .collect())
}

/// Counts the maximal chains of `DS` steps from `w` to its typical core.
pub fn ds_paths(w: &SuperWeight) -> Result<PathCount> {
    if !is_maximal_atypical(w) || w.m < w.n {
        return domain(format!("{w} is not maximal atypical"));
    }
    let d = weight_to_diagram(w);
    let mut memo: HashMap<BTreeSet<i64>, BigUint> = HashMap::new();
    let count = count_paths(&d, &mut memo);
    let end = WeightDiagram { m: w.m - w.n, n: 0, vees: BTreeSet::new(), ..d.clone() };
    let endpoint = diagram_to_weight(&end).expect("typical core is valid");
    // the parity shifts telescope along every path
    let shift = (parity(w) + 2 - parity(&endpoint)) % 2;
    Ok(PathCount { count, endpoint, sign: if shift == 0 { 1 } else { -1 } })
}

fn count_paths(d: &WeightDiagram, memo: &mut HashMap<BTreeSet<i64>, BigUint>) -> BigUint {
    if d.vees.is_empty() {
        return BigUint::one();
    }
    if let Some(c) = memo.get(&d.vees) {
        return c.clone();
    }
    let c = ds_diagram(d).iter().map(|e| count_paths(e, memo)).sum::<BigUint>();
    memo.insert(d.vees.clone(), c.clone());
    c
}

fn relabel(d: &WeightDiagram, i: i64, a: Label, b: Label) -> SuperWeight {
    let mut e = d.clone();
    for p in [i, i + 1] {
        e.vees.remove(&p);
        e.crosses.remove(&p);
        e.circles.remove(&p);
    }
    for (p, l) in [(i, a), (i + 1, b)] {
        match l {
            Label::Vee => e.vees.insert(p),
            Label::Cross => e.crosses.insert(p),
            Label::Circle => e.circles.insert(p),
            Label::Wedge => false,
        };
    }
    diagram_to_weight(&e).expect("translation keeps cardinalities")
}

/// `F_i` on the vertices `(i, i+1)`.
pub fn translate_f(i: i64, w: &SuperWeight) -> TranslationResult {
    use Label::*;
    let d = weight_to_diagram(w);
    let out = match (d.label(i), d.label(i + 1)) {
        (Cross, Vee) => (Vee, Cross),
        (Cross, Wedge) => (Wedge, Cross),
        (Vee, Circle) => (Circle, Vee),
        (Wedge, Circle) => (Circle, Wedge),
        (Vee, Wedge) => (Circle, Cross),
        (Cross, Circle) => return TranslationResult::NonIrreducible,
        _ => return TranslationResult::Zero,
    };
    TranslationResult::Irreducible(relabel(&d, i, out.0, out.1))
}

/// `E_i` on the vertices `(i, i+1)`.
pub fn translate_e(i: i64, w: &SuperWeight) -> TranslationResult {
    use Label::*;
    let d = weight_to_diagram(w);
    let out = match (d.label(i), d.label(i + 1)) {
        (Vee, Cross) => (Cross, Vee),
        (Wedge, Cross) => (Cross, Wedge),
        (Circle, Vee) => (Vee, Circle),
        (Circle, Wedge) => (Wedge, Circle),
        (Circle, Cross) => return TranslationResult::NonIrreducible,
        _ => return TranslationResult::Zero,
    };
    TranslationResult::Irreducible(relabel(&d, i, out.0, out.1))
}

fn require_shiftable(w: &SuperWeight) -> Result<WeightDiagram> {
    if w.m <= w.n || !is_maximal_atypical(w) {
        return domain(format!("Π-shift needs a maximal atypical weight with m > n, got {w}"));
    }
    Ok(weight_to_diagram(w))
}

/// `L(λ) ↦ L(λ) ⊗ Π`: every vee jumps left to the nearest free vertex, leftmost first.
pub fn pi_shift(w: &SuperWeight) -> Result<SuperWeight> {
    let mut d = require_shiftable(w)?;
    let mut placed = BTreeSet::new();
    for &v in &d.vees {
        let mut p = v - 1;
        while d.is_core(p) || placed.contains(&p) {
            p -= 1;
        }
        placed.insert(p);
    }
    d.vees = placed;
    Ok(diagram_to_weight(&d).expect("shift keeps cardinalities"))
}

/// Inverse of [`pi_shift`].
pub fn pi_unshift(w: &SuperWeight) -> Result<SuperWeight> {
    let mut d = require_shiftable(w)?;
    let mut placed = BTreeSet::new();
    for &v in d.vees.iter().rev() {
        let mut p = v + 1;
        while d.is_core(p) || placed.contains(&p) {
            p += 1;
        }
        placed.insert(p);
    }
    d.vees = placed;
    Ok(diagram_to_weight(&d).expect("shift keeps cardinalities"))
}

/// `pi_shift` applied `k` times, `pi_unshift` for negative `k`.
pub fn pi_power(w: &SuperWeight, k: i64) -> Result<SuperWeight> {
    let mut x = w.clone();
    for _ in 0..k.unsigned_abs() {
        x = if k > 0 { pi_shift(&x)? } else { pi_unshift(&x)? };
    }
    Ok(x)
}

/// Smallest `N` with `pi_shift^N(w)` negatively stable, and that weight.
pub fn stabilize(w: &SuperWeight) -> Result<(SuperWeight, u32)> {
    require_shiftable(w)?;
    let mut x = w.clone();
    let mut n = 0;
    while !crate::weights::is_negatively_stable(&x) {
        x = pi_shift(&x)?;
        n += 1;
    }
    Ok((x, n))
}

/// Block-equivalence to the principal block of GL(n|n): vees go to their
/// core-free coordinate `p + #crosses right of p`, cores are dropped.
pub fn eta0_reduce(w: &SuperWeight) -> Result<SuperWeight> {
    if w.m < w.n || !is_maximal_atypical(w) {
        return domain(format!("η₀ needs a maximal atypical weight with m >= n, got {w}"));
    }
    let d = weight_to_diagram(w);
    let vees = d.vees.iter().map(|&p| p + d.crosses.range(p + 1..).count() as i64).collect();
    let e = WeightDiagram { m: w.n, n: w.n, vees, crosses: BTreeSet::new(), circles: BTreeSet::new() };
    Ok(diagram_to_weight(&e).expect("principal block weight"))
}

/// Higher ground state `λ_N = (λ₁..λ_r, λ_r-N, … | -λ_r+N, …)` of a block.
pub fn ground_state(block: &BlockLabel, n_shift: u32, m: usize, n: usize) -> Result<SuperWeight> {
    if m < n || block.crosses.len() != m - n || !block.circles.is_empty() {
        return domain("ground states need a block of maximal atypical weights with m >= n");
    }
    let core = block.classical_core();
    let base = core.last().copied().unwrap_or(0) - n_shift as i64;
    let mut top = core;
    top.extend(std::iter::repeat_n(base, n));
    SuperWeight::new(m, n, top, vec![-base; n])
}

/// `N` with `w = ground_state(block(w), N)`, if `w` is a higher ground state.
pub fn ground_state_level(w: &SuperWeight) -> Option<u32> {
    if w.m < w.n || !is_maximal_atypical(w) {
        return None;
    }
    let d = weight_to_diagram(w);
    let j = d.crosses.iter().next().copied().unwrap_or(1);
    let top = *d.vees.iter().next_back()?;
    let contiguous = d.vees.iter().next().copied() == Some(top - w.n as i64 + 1);
    let level = j - 1 - top;
    (contiguous && level >= 0).then_some(level as u32)
}

/// Parity of a diagram, for callers that hold diagrams rather than weights.
pub fn parity_of_diagram(d: &WeightDiagram) -> u8 {
    diagram_parity(d)
}
