//! Tensor products and the Cartan-product projection.

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, unit_vec, Matrix, Subspace};
use crate::rational::Q;

use super::Representation;

/// `X ⊗ 1 + 1 ⊗ Y` for the basis element `k`, on `V ⊗ W` with index `a·dim W + b`.
pub fn tensor_action(v: &Representation, w: &Representation, k: usize) -> Matrix {
    let iv = Matrix::identity(v.dim());
    let iw = Matrix::identity(w.dim());
    v.basis_matrix(k)
        .kron(&iw)
        .add(&iv.kron(w.basis_matrix(k)))
}

/// The equivariant projection `V_μ ⊗ V_ν → V_{μ+ν}` sending `v_μ ⊗ v_ν ↦ v_{μ+ν}`.
///
/// The dual map sends the highest covector of `V_{μ+ν}` to `v_μ^* ⊗ v_ν^*` and
/// commutes with every `E_i`; words in the `E_i` applied to the highest covector
/// span the dual, which pins the projection down.
pub fn cartan_projection(
    vmu: &Representation,
    vnu: &Representation,
    vsum: &Representation,
) -> Result<Matrix> {
    let rank = vmu.highest_weight().coords.len();
    let expect: Vec<i64> = vmu
        .highest_weight()
        .coords
        .iter()
        .zip(&vnu.highest_weight().coords)
        .map(|(a, b)| a + b)
        .collect();
    if vsum.highest_weight().coords != expect {
        return Err(Error::Precondition(format!(
            "target highest weight {:?} is not {:?}",
            vsum.highest_weight().coords,
            expect
        )));
    }
    let n = vsum.dim();
    let nt = vmu.dim() * vnu.dim();
    let delta: Vec<Matrix> = (0..rank).map(|i| tensor_action(vmu, vnu, i)).collect();
    let mut phis: Vec<Vec<Q>> = Vec::new();
    let mut psis: Vec<Vec<Q>> = Vec::new();
    let mut span = Subspace::zero(n);
    let mut queue = vec![(unit_vec(n, 0), unit_vec(nt, 0))];
    while let Some((phi, psi)) = queue.pop() {
        if is_zero_vec(&phi) || span.contains(&phi) {
            continue;
        }
        span = span.sum(&Subspace::span(n, vec![phi.clone()]));
        for i in 0..rank {
            queue.push((vsum.e(i).vec_mul(&phi), delta[i].vec_mul(&psi)));
        }
        phis.push(phi);
        psis.push(psi);
        if phis.len() == n {
            break;
        }
    }
    let phi = Matrix::from_rows(phis);
    let inv = phi
        .inverse()
        .ok_or_else(|| Error::Precondition("dual module not generated by its lowest vector".into()))?;
    Ok(inv.mul(&Matrix::from_rows(psis)))
}
