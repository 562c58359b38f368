//! The principal nilpotent, its centralizer, and regular elements `x = s + n`.

use num_traits::{One, Zero};

use crate::chevrep::{LieAlgebra, Representation};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, Matrix};
use crate::rational::{q, to_i64, Q};
use crate::rootdata::RootSystem;

const DEFAULT_PRIMES: [i64; 6] = [2, 3, 5, 7, 11, 13];

/// A homogeneous basis of the centralizer of `e_I` inside `𝔫_I`.
#[derive(Clone, Debug)]
pub struct GradedCentralizer {
    pub basis: Vec<Vec<Q>>,
    /// Degrees under the grading element of `[𝔩_I, 𝔩_I]` (twice the root height).
    pub degrees: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct PrincipalData {
    pub e: Vec<Q>,
    pub h: Vec<Q>,
    /// Cartan coordinates of `h`.
    pub h_cartan: Vec<Q>,
    pub basis: Vec<Vec<Q>>,
    pub degrees: Vec<i64>,
}

/// `e_I = Σ_{i∈I} e_i`.
pub fn sum_of_simple(g: &LieAlgebra, subset: &[usize]) -> Vec<Q> {
    let mut e = g.zero();
    for &i in subset {
        e[g.index_e(i)] = q(1);
    }
    e
}

/// Cartan coordinates of the element `h_I ∈ span{h_i : i ∈ I}` with `α_i(h_I) = 2` on `I`.
pub fn grading_element(rs: &RootSystem, subset: &[usize]) -> Vec<Q> {
    let a = rs.cartan_matrix();
    let sub = Matrix::from_rows(
        subset
            .iter()
            .map(|&i| subset.iter().map(|&k| q(a[i][k])).collect())
            .collect(),
    );
    let rhs = vec![q(2); subset.len()];
    let c = if subset.is_empty() {
        Vec::new()
    } else {
        sub.solve(&rhs).expect("Cartan submatrices are invertible")
    };
    let mut out = vec![Q::zero(); rs.rank()];
    for (&i, ci) in subset.iter().zip(c) {
        out[i] = ci;
    }
    out
}

/// Value of a weight (fundamental-weight coordinates) on a Cartan element.
pub fn pair(weight: &[i64], cartan: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (w, c) in weight.iter().zip(cartan) {
        acc += q(*w) * c;
    }
    acc
}

/// Centralizer of `e_I` in `𝔫_I`, computed height by height.
pub fn graded_centralizer(g: &LieAlgebra, subset: &[usize]) -> GradedCentralizer {
    let rs = g.root_system();
    let e_i = sum_of_simple(g, subset);
    let roots = rs.subsystem_roots(subset);
    let max_height = roots
        .iter()
        .map(|&r| rs.height(&rs.positive_roots()[r]))
        .max()
        .unwrap_or(0);
    let mut basis = Vec::new();
    let mut degrees = Vec::new();
    for k in 1..=max_height {
        let level: Vec<usize> = roots
            .iter()
            .copied()
            .filter(|&r| rs.height(&rs.positive_roots()[r]) == k)
            .collect();
        let images: Vec<Vec<Q>> = level
            .iter()
            .map(|&r| g.bracket(&e_i, &g.e(r)))
            .collect();
        let m = Matrix::from_cols(&images, g.dim());
        for kv in m.nullspace() {
            let mut x = g.zero();
            for (&r, c) in level.iter().zip(kv) {
                x[g.index_e(r)] = c;
            }
            basis.push(x);
            degrees.push(2 * k);
        }
    }
    GradedCentralizer { basis, degrees }
}

pub fn principal_data(g: &LieAlgebra) -> PrincipalData {
    let rs = g.root_system();
    let all: Vec<usize> = (0..rs.rank()).collect();
    let h_cartan = grading_element(rs, &all);
    let mut h = g.zero();
    for (i, c) in h_cartan.iter().enumerate() {
        h[g.index_h(i)] = c.clone();
    }
    let gc = graded_centralizer(g, &all);
    PrincipalData {
        e: sum_of_simple(g, &all),
        h,
        h_cartan,
        basis: gc.basis,
        degrees: gc.degrees,
    }
}

/// Exact basis of `ker(ad x)`.
pub fn centralizer_basis(g: &LieAlgebra, x: &[Q]) -> Vec<Vec<Q>> {
    g.ad(x).nullspace()
}

/// Largest eigenvalue of the grading element (Cartan coordinates) on a set of weights.
pub fn max_eigenvalue(weights: &[Vec<i64>], cartan: &[Q]) -> i64 {
    weights
        .iter()
        .map(|w| to_i64(&pair(w, cartan)).expect("integral grading"))
        .max()
        .unwrap_or(0)
}

/// Difference between the largest and smallest grading eigenvalue.
pub fn eigenvalue_spread(weights: &[Vec<i64>], cartan: &[Q]) -> i64 {
    let vals: Vec<i64> = weights
        .iter()
        .map(|w| to_i64(&pair(w, cartan)).expect("integral grading"))
        .collect();
    match (vals.iter().max(), vals.iter().min()) {
        (Some(a), Some(b)) => a - b,
        _ => 0,
    }
}

/// Maximum eigenvalue of the principal `h` on `V`.
pub fn h_truncation_bound(pd: &PrincipalData, v: &Representation) -> i64 {
    max_eigenvalue(v.weights(), &pd.h_cartan)
}

/// `x = s + n` with `n = e_I`, `s` in the Cartan subalgebra vanishing exactly on `I`.
#[derive(Clone, Debug)]
pub struct RegularElement {
    pub subset: Vec<usize>,
    /// `α_i(s)` for every simple root.
    pub s_values: Vec<i64>,
    pub s: Vec<Q>,
    pub n: Vec<Q>,
    pub x: Vec<Q>,
    /// Cartan coordinates of a basis of the center of `𝔩_I`.
    pub center: Vec<Vec<Q>>,
    /// Basis of the unipotent part `𝔞 = [𝔩_I,𝔩_I]^n ∩ 𝔫`.
    pub a_basis: Vec<Vec<Q>>,
    pub a_degrees: Vec<i64>,
    /// Cartan coordinates of the grading element of `[𝔩_I, 𝔩_I]`.
    pub h_levi: Vec<Q>,
}

impl RegularElement {
    pub fn center_dim(&self) -> usize {
        self.center.len()
    }

    pub fn a_dim(&self) -> usize {
        self.a_basis.len()
    }
}

/// Default `α_j(s)`: zero on `I`, distinct primes elsewhere.
pub fn default_s_params(rank: usize, subset: &[usize]) -> Vec<i64> {
    (0..rank)
        .map(|j| if subset.contains(&j) { 0 } else { DEFAULT_PRIMES[j] })
        .collect()
}

pub fn regular_element(
    g: &LieAlgebra,
    subset: &[usize],
    s_params: Option<&[i64]>,
) -> Result<RegularElement> {
    let rs = g.root_system();
    let l = rs.rank();
    rs.validate_subset(subset)?;
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    let s_values = match s_params {
        Some(p) => p.to_vec(),
        None => default_s_params(l, &subset),
    };
    if s_values.len() != l {
        return Err(Error::Precondition(format!(
            "expected {l} values of α_i(s), got {}",
            s_values.len()
        )));
    }
    for (i, &v) in s_values.iter().enumerate() {
        if subset.contains(&i) && v != 0 {
            return Err(Error::Precondition(format!(
                "α_{}(s) must vanish for indices in I",
                i + 1
            )));
        }
    }
    for root in rs.positive_roots() {
        let in_levi = root
            .iter()
            .enumerate()
            .all(|(k, &c)| c == 0 || subset.contains(&k));
        let value: i64 = root.iter().zip(&s_values).map(|(c, v)| c * v).sum();
        if !in_levi && value == 0 {
            return Err(Error::DegenerateSemisimple { root: root.clone() });
        }
    }
    let a = Matrix::from_i64(rs.cartan_matrix());
    // α_i(s) = Σ_k s_k a_ik
    let s_cartan = a
        .solve(&s_values.iter().map(|&v| q(v)).collect::<Vec<_>>())
        .expect("invertible Cartan matrix");
    let mut s = g.zero();
    for (i, c) in s_cartan.iter().enumerate() {
        s[g.index_h(i)] = c.clone();
    }
    let n = sum_of_simple(g, &subset);
    let x: Vec<Q> = s.iter().zip(&n).map(|(a, b)| a + b).collect();

    if !is_zero_vec(&g.bracket(&s, &n)) {
        return Err(Error::Precondition("[s, n] does not vanish".into()));
    }
    let levi_dim = l + 2 * rs.subsystem_roots(&subset).len();
    if centralizer_basis(g, &s).len() != levi_dim {
        return Err(Error::Precondition(
            "the centralizer of s is not the Levi subalgebra".into(),
        ));
    }
    if centralizer_basis(g, &x).len() != l {
        return Err(Error::Precondition("x is not regular".into()));
    }
    let center = if subset.is_empty() {
        (0..l)
            .map(|i| (0..l).map(|k| if i == k { Q::one() } else { Q::zero() }).collect())
            .collect()
    } else {
        Matrix::from_rows(subset.iter().map(|&i| a.row(i).to_vec()).collect()).nullspace()
    };
    let gc = graded_centralizer(g, &subset);
    Ok(RegularElement {
        h_levi: grading_element(rs, &subset),
        subset,
        s_values,
        s,
        n,
        x,
        center,
        a_basis: gc.basis,
        a_degrees: gc.degrees,
    })
}
