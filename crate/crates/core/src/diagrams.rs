//! Cup diagrams, sectors and marked spaced forests.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{validation, Result};
use crate::weights::{diagram_to_weight, weight_to_diagram, Label, SuperWeight, WeightDiagram};

/// Cup joining a vee at `left` to a wedge at `right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc {
    pub left: i64,
    pub right: i64,
}

impl Arc {
    pub fn contains(&self, other: &Arc) -> bool {
        self.left < other.left && other.right < self.right
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CupDiagram {
    pub base: WeightDiagram,
    /// Sorted by left endpoint.
    pub arcs: Vec<Arc>,
}

/// Ordered rooted tree; every node stands for one arc.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlanarTree {
    pub children: Vec<PlanarTree>,
}

impl PlanarTree {
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PlanarTree::size).sum::<usize>()
    }

    pub fn mirror(&self) -> PlanarTree {
        PlanarTree { children: self.children.iter().rev().map(PlanarTree::mirror).collect() }
    }
}

/// Outermost arc together with everything nested under it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sector {
    pub outer: Arc,
    pub tree: PlanarTree,
}

/// Sector trees, the spacing between them and the core positions.
///
/// `d0` is the leftmost root's left endpoint in core-free coordinates
/// (`p + #crosses right of p - #circles left of p`) plus `k - 1`, `k` the
/// number of arcs. `gaps[i]` counts free vertices between sectors `i` and `i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedSpacedForest {
    pub m: usize,
    pub n: usize,
    pub trees: Vec<PlanarTree>,
    pub d0: i64,
    pub gaps: Vec<i64>,
    pub crosses: BTreeSet<i64>,
    pub circles: BTreeSet<i64>,
}

/// Matches every vee with the nearest available wedge to its right.
pub fn cup_diagram(w: &SuperWeight) -> CupDiagram {
    cup_diagram_of(&weight_to_diagram(w))
}

pub fn cup_diagram_of(d: &WeightDiagram) -> CupDiagram {
    let mut arcs = Vec::with_capacity(d.vees.len());
    let Some(&start) = d.vees.iter().next() else {
        return CupDiagram { base: d.clone(), arcs };
    };
    let mut stack = Vec::new();
    let mut p = start;
    let mut pending = d.vees.len();
    while pending > 0 || !stack.is_empty() {
        match d.label(p) {
            Label::Vee => {
                stack.push(p);
                pending -= 1;
            }
            Label::Wedge => {
                if let Some(a) = stack.pop() {
                    arcs.push(Arc { left: a, right: p });
                }
            }
            _ => {}
        }
        p += 1;
    }
    arcs.sort();
    CupDiagram { base: d.clone(), arcs }
}

fn build_trees(arcs: &[Arc]) -> Vec<(Arc, PlanarTree)> {
    // arcs sorted by left endpoint; a nested family is contiguous after its parent
    let mut out = Vec::new();
    let mut i = 0;
    while i < arcs.len() {
        let root = arcs[i];
        let mut j = i + 1;
        while j < arcs.len() && root.contains(&arcs[j]) {
            j += 1;
        }
        let children = build_trees(&arcs[i + 1..j]).into_iter().map(|(_, t)| t).collect();
        out.push((root, PlanarTree { children }));
        i = j;
    }
    out
}

pub fn sectors(cd: &CupDiagram) -> Vec<Sector> {
    build_trees(&cd.arcs).into_iter().map(|(outer, tree)| Sector { outer, tree }).collect()
}

fn core_free_coord(d: &WeightDiagram, p: i64) -> i64 {
    let right = d.crosses.range(p + 1..).count() as i64;
    let left = d.circles.range(..p).count() as i64;
    p + right - left
}

fn free_between(d: &WeightDiagram, a: i64, b: i64) -> i64 {
    (a + 1..b).filter(|p| !d.is_core(*p)).count() as i64
}

pub fn to_spaced_forest(cd: &CupDiagram) -> MarkedSpacedForest {
    let secs = sectors(cd);
    let d = &cd.base;
    let k = cd.arcs.len() as i64;
    let d0 = secs.first().map_or(0, |s| core_free_coord(d, s.outer.left) + k - 1);
    let gaps = secs.windows(2).map(|p| free_between(d, p[0].outer.right, p[1].outer.left)).collect();
    MarkedSpacedForest {
        m: d.m,
        n: d.n,
        trees: secs.into_iter().map(|s| s.tree).collect(),
        d0,
        gaps,
        crosses: d.crosses.clone(),
        circles: d.circles.clone(),
    }
}

/// Inverse of [`to_spaced_forest`].
pub fn from_spaced_forest(f: &MarkedSpacedForest) -> Result<CupDiagram> {
    if f.gaps.len() + 1 != f.trees.len().max(1) || f.gaps.iter().any(|g| *g < 0) {
        return validation("gap list must have one entry fewer than the tree list, all non-negative");
    }
    let k: usize = f.trees.iter().map(PlanarTree::size).sum();
    let mut d = WeightDiagram {
        m: f.m,
        n: f.n,
        vees: BTreeSet::new(),
        crosses: f.crosses.clone(),
        circles: f.circles.clone(),
    };
    let mut arcs = Vec::new();
    if k > 0 {
        let target = f.d0 - (k as i64 - 1);
        let lo = target - f.crosses.len() as i64;
        let hi = target + f.circles.len() as i64;
        let Some(mut cur) = (lo..=hi).find(|&p| !d.is_core(p) && core_free_coord(&d, p) == target)
        else {
            return validation("d0 does not correspond to a free vertex");
        };
        for (i, t) in f.trees.iter().enumerate() {
            if i > 0 {
                for _ in 0..f.gaps[i - 1] {
                    cur = first_free_from(&d, cur) + 1;
                }
            }
            cur = place(&d, t, cur, &mut arcs);
        }
    }
    arcs.sort();
    d.vees = arcs.iter().map(|a| a.left).collect();
    d.validate()?;
    Ok(CupDiagram { base: d, arcs })
}

fn first_free_from(d: &WeightDiagram, mut p: i64) -> i64 {
    while d.is_core(p) {
        p += 1;
    }
    p
}

// Lays out a tree starting at the first free vertex >= cur; returns the vertex after it.
fn place(d: &WeightDiagram, t: &PlanarTree, cur: i64, arcs: &mut Vec<Arc>) -> i64 {
    let left = first_free_from(d, cur);
    let mut p = left + 1;
    for c in &t.children {
        p = place(d, c, p, arcs);
    }
    let right = first_free_from(d, p);
    arcs.push(Arc { left, right });
    right + 1
}

/// Dual module: swap the labels on every arc, then reflect `s ↦ 1 - r - s`.
pub fn dual(w: &SuperWeight) -> SuperWeight {
    let cd = cup_diagram(w);
    let d = &cd.base;
    let refl = |s: i64| 1 - d.r() - s;
    let out = WeightDiagram {
        m: d.m,
        n: d.n,
        vees: cd.arcs.iter().map(|a| refl(a.right)).collect(),
        crosses: d.crosses.iter().map(|&s| refl(s)).collect(),
        circles: d.circles.iter().map(|&s| refl(s)).collect(),
    };
    diagram_to_weight(&out).expect("reflection preserves cardinalities")
}

/// Forest of the dual module.
pub fn forest_mirror(f: &MarkedSpacedForest) -> MarkedSpacedForest {
    let r = f.m as i64 - f.n as i64;
    let refl = |s: &i64| 1 - r - s;
    MarkedSpacedForest {
        m: f.m,
        n: f.n,
        trees: f.trees.iter().rev().map(PlanarTree::mirror).collect(),
        d0: -f.d0 - f.gaps.iter().sum::<i64>(),
        gaps: f.gaps.iter().rev().copied().collect(),
        crosses: f.crosses.iter().map(refl).collect(),
        circles: f.circles.iter().map(refl).collect(),
    }
}

/// Whether the cups of `nu` are oriented by the labels of `lambda`: equal cores
/// and exactly one vee of `lambda` on every cup.
pub fn is_oriented(nu: &CupDiagram, lambda: &WeightDiagram) -> bool {
    if nu.base.crosses != lambda.crosses || nu.base.circles != lambda.circles {
        return false;
    }
    nu.arcs.iter().all(|a| {
        let (l, r) = (lambda.label(a.left), lambda.label(a.right));
        if l.is_core() || r.is_core() {
            return false;
        }
        (l == Label::Vee) != (r == Label::Vee)
    })
}
