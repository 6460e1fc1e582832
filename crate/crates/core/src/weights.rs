//! Highest weights of GL(m|n) and their weight diagrams.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{validation, Error, Result};

/// Dominant integral highest weight `(top | bottom)` of GL(m|n).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWeight")]
pub struct SuperWeight {
    pub m: usize,
    pub n: usize,
    pub top: Vec<i64>,
    pub bottom: Vec<i64>,
}

#[derive(Deserialize)]
struct RawWeight {
    m: usize,
    n: usize,
    top: Vec<i64>,
    bottom: Vec<i64>,
}

impl TryFrom<RawWeight> for SuperWeight {
    type Error = Error;
    fn try_from(r: RawWeight) -> Result<Self> {
        SuperWeight::new(r.m, r.n, r.top, r.bottom)
    }
}

impl SuperWeight {
    pub fn new(m: usize, n: usize, top: Vec<i64>, bottom: Vec<i64>) -> Result<Self> {
        if top.len() != m {
            return validation(format!("expected {m} top entries, got {}", top.len()));
        }
        if bottom.len() != n {
            return validation(format!("expected {n} bottom entries, got {}", bottom.len()));
        }
        if let Some(i) = (1..m).find(|&i| top[i - 1] < top[i]) {
            return validation(format!(
                "top entries not weakly decreasing at position {} ({} < {})",
                i + 1,
                top[i - 1],
                top[i]
            ));
        }
        if let Some(i) = (1..n).find(|&i| bottom[i - 1] < bottom[i]) {
            return validation(format!(
                "bottom entries not weakly decreasing at position {} ({} < {})",
                i + 1,
                bottom[i - 1],
                bottom[i]
            ));
        }
        Ok(SuperWeight { m, n, top, bottom })
    }

    /// Trivial module `1_{m|n}`.
    pub fn trivial(m: usize, n: usize) -> Self {
        SuperWeight { m, n, top: vec![0; m], bottom: vec![0; n] }
    }

    /// `Ber_{m|n}^k`.
    pub fn ber(m: usize, n: usize, k: i64) -> Self {
        SuperWeight { m, n, top: vec![k; m], bottom: vec![-k; n] }
    }

    /// Tensor with `Ber^k`.
    pub fn twist(&self, k: i64) -> Self {
        SuperWeight {
            m: self.m,
            n: self.n,
            top: self.top.iter().map(|a| a + k).collect(),
            bottom: self.bottom.iter().map(|b| b - k).collect(),
        }
    }

    /// `r = m - n`.
    pub fn r(&self) -> i64 {
        self.m as i64 - self.n as i64
    }
}

impl fmt::Display for SuperWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "gl({}|{}) [{} | {}]", self.m, self.n, join(&self.top), join(&self.bottom))
    }
}

/// Symbol at a vertex of the number line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Vee,
    Wedge,
    Cross,
    Circle,
}

impl Label {
    pub fn is_core(self) -> bool {
        matches!(self, Label::Cross | Label::Circle)
    }
}

/// Labelled number line; unlisted vertices carry `∧`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightDiagram {
    pub m: usize,
    pub n: usize,
    pub vees: BTreeSet<i64>,
    pub crosses: BTreeSet<i64>,
    pub circles: BTreeSet<i64>,
}

impl WeightDiagram {
    pub fn label(&self, p: i64) -> Label {
        if self.vees.contains(&p) {
            Label::Vee
        } else if self.crosses.contains(&p) {
            Label::Cross
        } else if self.circles.contains(&p) {
            Label::Circle
        } else {
            Label::Wedge
        }
    }

    pub fn is_core(&self, p: i64) -> bool {
        self.crosses.contains(&p) || self.circles.contains(&p)
    }

    pub fn r(&self) -> i64 {
        self.m as i64 - self.n as i64
    }

    /// Smallest and largest non-wedge vertex.
    pub fn extent(&self) -> Option<(i64, i64)> {
        let all = self.vees.iter().chain(&self.crosses).chain(&self.circles);
        let lo = all.clone().min()?;
        let hi = all.max()?;
        Some((*lo, *hi))
    }

    pub fn block(&self) -> BlockLabel {
        BlockLabel {
            m: self.m,
            n: self.n,
            crosses: self.crosses.clone(),
            circles: self.circles.clone(),
        }
    }

    /// Checks the cardinality constraints a diagram of GL(m|n) must satisfy.
    pub fn validate(&self) -> Result<()> {
        let disjoint = self.vees.is_disjoint(&self.crosses)
            && self.vees.is_disjoint(&self.circles)
            && self.crosses.is_disjoint(&self.circles);
        if !disjoint {
            return validation("a vertex carries two symbols");
        }
        if self.vees.len() + self.crosses.len() != self.m {
            return validation(format!("#vee + #cross must equal m = {}", self.m));
        }
        if self.vees.len() + self.circles.len() != self.n {
            return validation(format!("#vee + #circle must equal n = {}", self.n));
        }
        Ok(())
    }
}

/// Block of a weight: its core symbols together with (m, n).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockLabel {
    pub m: usize,
    pub n: usize,
    pub crosses: BTreeSet<i64>,
    pub circles: BTreeSet<i64>,
}

impl BlockLabel {
    /// GL(r)-weight read off the crosses `c₁ > … > c_r` as `(c₁, c₂+1, …, c_r+r-1)`.
    pub fn classical_core(&self) -> Vec<i64> {
        self.crosses.iter().rev().enumerate().map(|(i, &c)| c + i as i64).collect()
    }
}

fn index_sets(w: &SuperWeight) -> (BTreeSet<i64>, BTreeSet<i64>) {
    let m = w.m as i64;
    let ix = w.top.iter().enumerate().map(|(i, &a)| a - i as i64).collect();
    let io = w
        .bottom
        .iter()
        .enumerate()
        .map(|(i, &b)| (i as i64 + 1) - m - b)
        .collect();
    (ix, io)
}

pub fn weight_to_diagram(w: &SuperWeight) -> WeightDiagram {
    let (ix, io) = index_sets(w);
    WeightDiagram {
        m: w.m,
        n: w.n,
        vees: ix.intersection(&io).copied().collect(),
        crosses: ix.difference(&io).copied().collect(),
        circles: io.difference(&ix).copied().collect(),
    }
}

pub fn diagram_to_weight(d: &WeightDiagram) -> Result<SuperWeight> {
    d.validate()?;
    let ix: BTreeSet<i64> = d.vees.union(&d.crosses).copied().collect();
    let io: BTreeSet<i64> = d.vees.union(&d.circles).copied().collect();
    let m = d.m as i64;
    let top = ix.iter().rev().enumerate().map(|(i, &x)| x + i as i64).collect();
    let bottom = io.iter().enumerate().map(|(i, &o)| (i as i64 + 1) - m - o).collect();
    SuperWeight::new(d.m, d.n, top, bottom)
}

pub fn atypicality(w: &SuperWeight) -> usize {
    weight_to_diagram(w).vees.len()
}

pub fn is_maximal_atypical(w: &SuperWeight) -> bool {
    atypicality(w) == w.n
}

/// Irreducible modules of atypicality below `min(m, n)` have superdimension zero.
pub fn is_negligible_irreducible(w: &SuperWeight) -> bool {
    atypicality(w) < w.m.min(w.n)
}

pub fn block_label(w: &SuperWeight) -> BlockLabel {
    weight_to_diagram(w).block()
}

/// Parity `p(λ)` in {0, 1}.
///
/// Maximal atypical weights use the sum of the bottom entries. Otherwise the
/// `k` vees are read as a principal-block weight of GL(k|k) after translating
/// by `r`; for `k = n` both rules agree.
pub fn parity(w: &SuperWeight) -> u8 {
    if is_maximal_atypical(w) {
        return w.bottom.iter().sum::<i64>().rem_euclid(2) as u8;
    }
    let d = weight_to_diagram(w);
    diagram_parity(&d)
}

pub(crate) fn diagram_parity(d: &WeightDiagram) -> u8 {
    let k = d.vees.len() as i64;
    let s: i64 = d.vees.iter().sum();
    (k * (k + 1) / 2 + k + s + k * d.r()).rem_euclid(2) as u8
}

/// Maximal atypical with every vee strictly left of every cross.
pub fn is_stable(w: &SuperWeight) -> bool {
    if w.m < w.n || !is_maximal_atypical(w) {
        return false;
    }
    let d = weight_to_diagram(w);
    match (d.vees.iter().next_back(), d.crosses.iter().next()) {
        (Some(v), Some(c)) => v < c,
        _ => true,
    }
}

/// Stable with `μ₁ ≤ 0` in the coordinates `(λ₁..λ_r, μ | -μ)`.
pub fn is_negatively_stable(w: &SuperWeight) -> bool {
    let r = w.m - w.n.min(w.m);
    is_stable(w) && w.top.get(r).is_none_or(|&mu1| mu1 <= 0)
}
