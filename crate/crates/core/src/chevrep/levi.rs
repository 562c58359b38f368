//! Branching to a Levi subalgebra.

use std::collections::BTreeSet;

use crate::linalg::{is_zero_vec, unit_vec, Matrix, Subspace};
use crate::rational::Q;
use crate::rootdata::RootSystem;

use super::Representation;

/// An irreducible constituent `W^α_ρ` of the restriction to `𝔩_I`.
#[derive(Clone, Debug)]
pub struct LeviBlock {
    /// Character of the center: root coordinates outside `I` (common to all weights).
    pub alpha: Vec<Q>,
    /// Highest weight for `[𝔩_I, 𝔩_I]`: weight coordinates at the indices in `I`.
    pub rho: Vec<i64>,
    /// Full weight of the highest vector.
    pub highest_weight: Vec<i64>,
    /// Basis vectors inside `V`; the first is the highest vector `w^α_ρ`.
    pub basis: Vec<Vec<Q>>,
    pub weights: Vec<Vec<i64>>,
    embedding: Matrix,
    left_inverse: Matrix,
}

impl LeviBlock {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn highest_vector(&self) -> &[Q] {
        &self.basis[0]
    }

    /// `w^{α*}_ρ` in block coordinates: the covector dual to the highest vector.
    pub fn lowest_dual(&self) -> Vec<Q> {
        unit_vec(self.dim(), 0)
    }

    /// Columns are the block basis vectors inside `V`.
    pub fn embedding(&self) -> &Matrix {
        &self.embedding
    }

    /// Block coordinates of a vector of `V` lying in the block.
    pub fn coords_of(&self, v: &[Q]) -> Vec<Q> {
        self.left_inverse.mul_vec(v)
    }

    /// The operator `X` restricted to the block (which must be `X`-stable).
    pub fn restrict(&self, x: &Matrix) -> Matrix {
        self.left_inverse.mul(&x.mul(&self.embedding))
    }

    /// Covector on `V` restricted to the block.
    pub fn restrict_covector(&self, phi: &[Q]) -> Vec<Q> {
        self.embedding.vec_mul(phi)
    }
}

/// Decompose `V` into irreducible `𝔩_I`-modules, one block per basis vector of
/// each space of `I`-highest vectors.
pub fn restrict_to_levi(rs: &RootSystem, v: &Representation, subset: &[usize]) -> Vec<LeviBlock> {
    let outside: Vec<usize> = (0..rs.rank()).filter(|j| !subset.contains(j)).collect();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut blocks = Vec::new();
    for w in v.weights() {
        if !seen.insert(w.clone()) {
            continue;
        }
        let idx = v.weight_space(w);
        let rows: Vec<Vec<Q>> = subset
            .iter()
            .flat_map(|&i| {
                let m = v.e(i).select(&(0..v.dim()).collect::<Vec<_>>(), &idx);
                m.to_rows()
            })
            .collect();
        let kernel = if rows.is_empty() {
            (0..idx.len()).map(|k| unit_vec(idx.len(), k)).collect()
        } else {
            Matrix::from_rows(rows).nullspace()
        };
        for kv in kernel {
            let mut top = vec![Q::from_integer(0.into()); v.dim()];
            for (k, c) in idx.iter().zip(kv) {
                top[*k] = c;
            }
            blocks.push(generate_block(rs, v, subset, &outside, top, w.clone()));
        }
    }
    blocks
}

fn generate_block(
    rs: &RootSystem,
    v: &Representation,
    subset: &[usize],
    outside: &[usize],
    top: Vec<Q>,
    weight: Vec<i64>,
) -> LeviBlock {
    let n = v.dim();
    let mut basis = Vec::new();
    let mut weights = Vec::new();
    let mut span = Subspace::zero(n);
    let mut queue = std::collections::VecDeque::from([(top, weight.clone())]);
    while let Some((vec, w)) = queue.pop_front() {
        if is_zero_vec(&vec) || span.contains(&vec) {
            continue;
        }
        span = span.sum(&Subspace::span(n, vec![vec.clone()]));
        for &i in subset {
            let next = v.f(i).mul_vec(&vec);
            let nw: Vec<i64> = w
                .iter()
                .zip(&rs.cartan_matrix()[i])
                .map(|(a, b)| a - b)
                .collect();
            queue.push_back((next, nw));
        }
        basis.push(vec);
        weights.push(w);
    }
    let root = rs.weight_to_root(&weight);
    let alpha = outside.iter().map(|&j| root[j].clone()).collect();
    let rho = subset.iter().map(|&i| weight[i]).collect();
    let embedding = Matrix::from_cols(&basis, n);
    let bt = embedding.transpose();
    let left_inverse = bt
        .mul(&embedding)
        .inverse()
        .expect("block basis is independent")
        .mul(&bt);
    LeviBlock {
        alpha,
        rho,
        highest_weight: weight,
        basis,
        weights,
        embedding,
        left_inverse,
    }
}
