//! Exponentials of nilpotent operators, numeric and symbolic.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::MultiPoly;
use crate::rational::{q, Q};

/// A matrix with polynomial entries, stored row-major.
pub type PolyMatrix = Vec<Vec<MultiPoly>>;

/// `Σ X^k / k!` for nilpotent `X`.
pub fn exp_nilpotent(x: &Matrix) -> Result<Matrix> {
    let n = x.rows();
    let mut out = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..=n + 1 {
        term = term.mul(x).scale(&Q::new(1.into(), (k as i64).into()));
        if term.is_zero() {
            return Ok(out);
        }
        out = out.add(&term);
    }
    Err(Error::NotNilpotent)
}

/// `exp(Σ t_j X_j) · u` as a vector of polynomials in `nvars` variables,
/// where `X_j` is paired with the variable `vars[j]`.
pub fn exp_symbolic_apply(
    mats: &[Matrix],
    vars: &[usize],
    nvars: usize,
    u: &[MultiPoly],
) -> Result<Vec<MultiPoly>> {
    let n = u.len();
    let mut acc: Vec<MultiPoly> = u.to_vec();
    let mut term: Vec<MultiPoly> = u.to_vec();
    for k in 1..=n + 1 {
        let mut next = vec![MultiPoly::zero(nvars); n];
        for (x, &var) in mats.iter().zip(vars) {
            let t = MultiPoly::var(nvars, var);
            for r in 0..n {
                let mut s = MultiPoly::zero(nvars);
                for c in 0..n {
                    let a = &x[(r, c)];
                    if !a.is_zero() && !term[c].is_zero() {
                        s.add_assign_scaled(&term[c], a);
                    }
                }
                if !s.is_zero() {
                    next[r] = &next[r] + &(&s * &t);
                }
            }
        }
        let inv_k = Q::new(1.into(), (k as i64).into());
        for p in next.iter_mut() {
            *p = p.scale(&inv_k);
        }
        if next.iter().all(MultiPoly::is_zero) {
            return Ok(acc);
        }
        for (a, t) in acc.iter_mut().zip(&next) {
            *a = &*a + t;
        }
        term = next;
    }
    Err(Error::NotNilpotent)
}

/// The full matrix `exp(Σ t_j X_j)` with polynomial entries in `t_1..t_m`.
pub fn exp_symbolic(mats: &[Matrix]) -> Result<PolyMatrix> {
    let m = mats.len();
    let n = mats.first().map_or(0, Matrix::rows);
    let vars: Vec<usize> = (0..m).collect();
    let mut cols = Vec::with_capacity(n);
    for c in 0..n {
        let u: Vec<MultiPoly> = (0..n)
            .map(|r| {
                if r == c {
                    MultiPoly::constant(m, q(1))
                } else {
                    MultiPoly::zero(m)
                }
            })
            .collect();
        cols.push(exp_symbolic_apply(mats, &vars, m, &u)?);
    }
    Ok((0..n)
        .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
        .collect())
}
