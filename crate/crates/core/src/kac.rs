//! Composition factors of Kac modules via oriented cup diagrams.

use crate::diagrams::{cup_diagram_of, is_oriented};
use crate::error::{domain, Result};
use crate::weights::{
    diagram_to_weight, is_maximal_atypical, weight_to_diagram, SuperWeight, WeightDiagram,
};

/// Default search window `[ℓ - 2a - c - 2, R]` for the vees of a factor, where
/// `ℓ`, `R` are the extreme vees of `λ`, `a` its atypicality and `c` its number
/// of core symbols.
pub fn kac_window(w: &SuperWeight) -> Option<(i64, i64)> {
    let d = weight_to_diagram(w);
    let lo = *d.vees.iter().next()?;
    let hi = *d.vees.iter().next_back()?;
    let a = d.vees.len() as i64;
    let c = (d.crosses.len() + d.circles.len()) as i64;
    Some((lo - 2 * a - c - 2, hi))
}

/// `{ν : L(ν) is a composition factor of V(λ)}`, sorted.
pub fn kac_composition_factors(w: &SuperWeight) -> Vec<SuperWeight> {
    match kac_window(w) {
        Some((lo, hi)) => kac_composition_factors_in(w, lo, hi),
        None => vec![w.clone()],
    }
}

/// Same as [`kac_composition_factors`] with vees of `ν` searched in `[lo, hi]`.
pub fn kac_composition_factors_in(w: &SuperWeight, lo: i64, hi: i64) -> Vec<SuperWeight> {
    let lam = weight_to_diagram(w);
    let free: Vec<i64> = (lo..=hi).filter(|p| !lam.is_core(*p)).collect();
    let mut out = vec![];
    let mut pick = Vec::with_capacity(lam.vees.len());
    choose(&free, 0, lam.vees.len(), &mut pick, &mut |vees| {
        let nu = WeightDiagram { vees: vees.iter().copied().collect(), ..lam.clone() };
        if is_oriented(&cup_diagram_of(&nu), &lam) {
            out.push(diagram_to_weight(&nu).expect("same cardinalities as λ"));
        }
    });
    out.sort();
    out
}

fn choose(free: &[i64], from: usize, k: usize, pick: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
    if pick.len() == k {
        return f(pick);
    }
    for i in from..free.len() {
        if free.len() - i < k - pick.len() {
            break;
        }
        pick.push(free[i]);
        choose(free, i + 1, k, pick, f);
        pick.pop();
    }
}

/// For `λ = (λ₁, μ | -μ, -λ₁)` of GL(n|n): pairs `(ν̃, ν)` where `ν̃` runs over
/// the factors of `V(λ̃)`, `λ̃ = (μ | -μ, -λ₁)` of GL(n-1|n), and `ν = (λ₁, ν̃)`.
pub fn kac_restriction_bijection(w: &SuperWeight) -> Result<Vec<(SuperWeight, SuperWeight)>> {
    if w.m != w.n || w.n == 0 || !is_maximal_atypical(w) {
        return domain(format!("{w} is not a maximal atypical weight of GL(n|n), n >= 1"));
    }
    let l1 = w.top[0];
    let tilde = SuperWeight::new(w.m - 1, w.n, w.top[1..].to_vec(), w.bottom.clone())?;
    kac_composition_factors(&tilde)
        .into_iter()
        .map(|nt| {
            let mut top = vec![l1];
            top.extend(&nt.top);
            let nu = SuperWeight::new(w.m, w.n, top, nt.bottom.clone())?;
            Ok((nt, nu))
        })
        .collect()
}
