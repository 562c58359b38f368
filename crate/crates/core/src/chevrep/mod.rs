//! Chevalley bases and exact highest-weight representations.

mod algebra;
mod exp;
mod levi;
mod module;
mod tensor;

pub use algebra::LieAlgebra;
pub use exp::{exp_nilpotent, exp_symbolic, exp_symbolic_apply, PolyMatrix};
pub use levi::{restrict_to_levi, LeviBlock};
pub use tensor::{cartan_projection, tensor_action};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Q;
use crate::rootdata::Weight;

/// Default cap on representation dimensions.
pub const DEFAULT_MAX_DIM: usize = 5000;

/// A finite-dimensional module over a [`LieAlgebra`], in a weight basis.
///
/// For a highest-weight module, basis vector 0 is the highest weight vector.
/// For its dual, basis vector 0 is the dual covector, a lowest weight vector.
#[derive(Clone, Debug)]
pub struct Representation {
    highest_weight: Weight,
    weights: Vec<Vec<i64>>,
    mats: Vec<Matrix>,
    rank: usize,
    num_pos: usize,
    dual: bool,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// The highest weight of the module this was built from (also for duals).
    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    /// Weight of each basis vector, in fundamental-weight coordinates.
    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    /// Index of the distinguished extremal vector (highest, or lowest for a dual).
    pub fn extremal_index(&self) -> usize {
        0
    }

    /// `E_i`; simple roots come first among the positive roots.
    pub fn e(&self, i: usize) -> &Matrix {
        &self.mats[i]
    }

    pub fn f(&self, i: usize) -> &Matrix {
        &self.mats[self.num_pos + self.rank + i]
    }

    pub fn h(&self, i: usize) -> &Matrix {
        &self.mats[self.num_pos + i]
    }

    /// Matrix of the Chevalley basis element with index `k`.
    pub fn basis_matrix(&self, k: usize) -> &Matrix {
        &self.mats[k]
    }

    pub fn basis_matrices(&self) -> &[Matrix] {
        &self.mats
    }

    /// Matrix of an arbitrary algebra element given in Chevalley coordinates.
    pub fn action(&self, x: &[Q]) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.mats[k], c);
            }
        }
        out
    }

    /// Indices of basis vectors with the given weight.
    pub fn weight_space(&self, weight: &[i64]) -> Vec<usize> {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| w.as_slice() == weight)
            .map(|(i, _)| i)
            .collect()
    }

    /// Distinct weights with multiplicities, in order of first appearance.
    pub fn weight_multiplicities(&self) -> Vec<(Vec<i64>, usize)> {
        let mut out: Vec<(Vec<i64>, usize)> = Vec::new();
        for w in &self.weights {
            match out.iter_mut().find(|(x, _)| x == w) {
                Some((_, m)) => *m += 1,
                None => out.push((w.clone(), 1)),
            }
        }
        out
    }
}

impl LieAlgebra {
    /// The irreducible module of highest weight `lambda`.
    pub fn highest_weight_rep(&self, lambda: &Weight, max_dim: usize) -> Result<Representation> {
        let rs = self.root_system();
        if lambda.coords.len() != rs.rank() || !rs.is_dominant(lambda) {
            return Err(Error::InvalidWeight {
                weight: lambda.coords.clone(),
                reason: "not dominant".into(),
            });
        }
        let m = module::build_module(rs.cartan_matrix(), &lambda.coords, max_dim)?;
        let mats = self.basis_matrices(&m.e, &m.f, &m.h);
        Ok(Representation {
            highest_weight: lambda.clone(),
            weights: m.weights,
            mats,
            rank: rs.rank(),
            num_pos: rs.num_positive_roots(),
            dual: false,
        })
    }
}

/// The contragredient module: `X ↦ −Xᵀ` on the dual basis.
pub fn dual_rep(v: &Representation) -> Representation {
    let minus = -Q::from_integer(1.into());
    Representation {
        highest_weight: v.highest_weight.clone(),
        weights: v
            .weights
            .iter()
            .map(|w| w.iter().map(|x| -x).collect())
            .collect(),
        mats: v.mats.iter().map(|m| m.transpose().scale(&minus)).collect(),
        rank: v.rank,
        num_pos: v.num_pos,
        dual: !v.dual,
    }
}
