//! Independent check for LR coefficients: multiply Schur polynomials in `r`
//! variables and peel off leading monomials.

use std::collections::{BTreeMap, HashMap};

use super::ClassicalWeight;
use crate::error::{validation, Result};

type Poly = HashMap<Vec<i64>, i64>;

/// Monomial expansion of `s_λ(x₁..x_r)` for a partition `λ`, summing over SSYT.
fn schur_poly(lam: &[i64], r: usize) -> Poly {
    let shape: Vec<usize> = lam.iter().map(|&x| x as usize).collect();
    let mut out = Poly::new();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    fill(&shape, r, 0, 0, &mut rows, &mut out);
    out
}

fn fill(shape: &[usize], r: usize, i: usize, j: usize, t: &mut Vec<Vec<usize>>, out: &mut Poly) {
    if i == shape.len() {
        let mut e = vec![0i64; r];
        for row in t.iter() {
            for &x in row {
                e[x - 1] += 1;
            }
        }
        *out.entry(e).or_insert(0) += 1;
        return;
    }
    if j == shape[i] {
        return fill(shape, r, i + 1, 0, t, out);
    }
    let lo_row = if j > 0 { t[i][j - 1] } else { 1 };
    let lo_col = if i > 0 { t[i - 1][j] + 1 } else { 1 };
    for x in lo_row.max(lo_col)..=r {
        t[i][j] = x;
        fill(shape, r, i, j + 1, t, out);
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out
}

/// Same contract as [`super::lr_coefficients`], computed from polynomials.
pub fn schur_product_oracle(
    l: &ClassicalWeight,
    m: &ClassicalWeight,
) -> Result<BTreeMap<ClassicalWeight, u64>> {
    let r = l.rank();
    if m.rank() != r {
        return validation(format!("ranks differ: {} vs {}", r, m.rank()));
    }
    if r == 0 {
        return Ok(BTreeMap::from([(ClassicalWeight(vec![]), 1)]));
    }
    let (a, b) = (l.0[r - 1], m.0[r - 1]);
    let (lp, mp) = (l.shifted(-a), m.shifted(-b));
    let mut prod = mul(&schur_poly(&lp.0, r), &schur_poly(&mp.0, r));
    prod.retain(|_, c| *c != 0);
    let mut out = BTreeMap::new();
    while let Some(lead) = prod.iter().filter(|(_, c)| **c != 0).map(|(e, _)| e.clone()).max() {
        let c = prod[&lead];
        assert!(c > 0, "leading coefficient of a Schur-positive product");
        assert!(lead.windows(2).all(|w| w[0] >= w[1]), "leading exponent is a partition");
        for (e, k) in schur_poly(&lead, r) {
            *prod.entry(e).or_insert(0) -= c * k;
        }
        prod.retain(|_, c| *c != 0);
        out.insert(ClassicalWeight(lead).shifted(a + b), c as u64);
    }
    Ok(out)
}
