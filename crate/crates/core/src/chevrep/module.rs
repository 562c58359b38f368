//! Highest-weight modules built from Cartan data alone.
//!
//! Vectors are produced depth by depth as `F_j b`. A candidate is zero in the
//! irreducible module iff every `E_i` kills it, so linear relations among
//! candidates are read off from their images under the `E_i`, computed with
//! `E_i F_j b = F_j E_i b + δ_ij <wt b, α_i^∨> b`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{q, Q};

type SparseVec = BTreeMap<usize, Q>;

fn axpy_sparse(y: &mut SparseVec, a: &Q, x: &SparseVec) {
    if a.is_zero() {
        return;
    }
    for (k, v) in x {
        let entry = y.entry(*k).or_insert_with(Q::zero);
        *entry += a * v;
        if entry.is_zero() {
            y.remove(k);
        }
    }
}

/// The generator matrices of an irreducible highest-weight module.
pub(crate) struct HwModule {
    pub weights: Vec<Vec<i64>>,
    pub e: Vec<Matrix>,
    pub f: Vec<Matrix>,
    pub h: Vec<Matrix>,
}

struct EchelonRow {
    pivot: usize,
    vector: SparseVec,
    combo: SparseVec,
}

pub(crate) fn build_module(cartan: &[Vec<i64>], lambda: &[i64], cap: usize) -> Result<HwModule> {
    let l = cartan.len();
    let mut weights: Vec<Vec<i64>> = vec![lambda.to_vec()];
    // e_act[b][i] = E_i b, f_act[b][j] = F_j b
    let mut e_act: Vec<Vec<SparseVec>> = vec![vec![SparseVec::new(); l]];
    let mut f_act: Vec<Vec<SparseVec>> = Vec::new();
    let mut level = 0..1usize;

    while !level.is_empty() {
        let mut by_weight: BTreeMap<Vec<i64>, Vec<(usize, usize)>> = BTreeMap::new();
        for b in level.clone() {
            for (j, row) in cartan.iter().enumerate() {
                let w: Vec<i64> = weights[b].iter().zip(row).map(|(x, a)| x - a).collect();
                by_weight.entry(w).or_default().push((b, j));
            }
        }
        let mut f_level: Vec<Vec<SparseVec>> = vec![vec![SparseVec::new(); l]; level.len()];
        let next_start = weights.len();

        for (weight, candidates) in by_weight.into_iter().rev() {
            let mut rows: Vec<EchelonRow> = Vec::new();
            for (b, j) in candidates {
                // signature, keyed by index * l + i
                let mut sig = SparseVec::new();
                for i in 0..l {
                    let mut img = SparseVec::new();
                    for (k, c) in &e_act[b][i] {
                        axpy_sparse(&mut img, c, &f_act[*k][j]);
                    }
                    if i == j {
                        let hb = q(weights[b][i]);
                        let mut unit = SparseVec::new();
                        unit.insert(b, Q::from_integer(1.into()));
                        axpy_sparse(&mut img, &hb, &unit);
                    }
                    for (k, c) in img {
                        sig.insert(k * l + i, c);
                    }
                }
                let mut residual = sig.clone();
                let mut combo = SparseVec::new();
                for row in &rows {
                    if let Some(c) = residual.get(&row.pivot).cloned() {
                        let factor = -(c / &row.vector[&row.pivot]);
                        axpy_sparse(&mut residual, &factor, &row.vector);
                        axpy_sparse(&mut combo, &factor, &row.combo);
                    }
                }
                let slot = &mut f_level[b - level.start][j];
                if residual.is_empty() {
                    *slot = combo.into_iter().map(|(k, c)| (k, -c)).collect();
                    continue;
                }
                let k = weights.len();
                if k >= cap {
                    return Err(Error::DimensionCap { cap });
                }
                weights.push(weight.clone());
                let mut e_new = vec![SparseVec::new(); l];
                for (key, c) in &sig {
                    e_new[key % l].insert(key / l, c.clone());
                }
                e_act.push(e_new);
                slot.insert(k, Q::from_integer(1.into()));
                combo.insert(k, Q::from_integer(1.into()));
                let pivot = *residual.keys().next().expect("nonzero residual");
                rows.push(EchelonRow {
                    pivot,
                    vector: residual,
                    combo,
                });
            }
        }
        f_act.extend(f_level);
        level = next_start..weights.len();
    }

    let dim = weights.len();
    let mut e = vec![Matrix::zeros(dim, dim); l];
    let mut f = vec![Matrix::zeros(dim, dim); l];
    let mut h = Vec::with_capacity(l);
    for b in 0..dim {
        for i in 0..l {
            for (k, c) in &e_act[b][i] {
                e[i][(*k, b)] = c.clone();
            }
            for (k, c) in &f_act[b][i] {
                f[i][(*k, b)] = c.clone();
            }
        }
    }
    for i in 0..l {
        let diag: Vec<Q> = weights.iter().map(|w| q(w[i])).collect();
        h.push(Matrix::diagonal(&diag));
    }
    Ok(HwModule { weights, e, f, h })
}
