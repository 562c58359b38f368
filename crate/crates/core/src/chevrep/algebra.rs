//! Chevalley bases, realized inside the adjoint module.

use num_traits::Zero;

use super::module::build_module;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::rational::{q, Q};
use crate::rootdata::RootSystem;

/// How a non-simple root vector is obtained from a shorter one:
/// `e_γ = e_scale · [e_i, e_β]` and `f_γ = f_scale · [f_i, f_β]`.
#[derive(Clone, Debug)]
pub(crate) struct Recipe {
    pub simple: usize,
    pub parent: usize,
    pub e_scale: Q,
    pub f_scale: Q,
}

/// A simple Lie algebra with a Chevalley basis ordered as
/// `e_α` (positive roots), `h_1..h_l`, `f_α`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    rs: RootSystem,
    recipes: Vec<Option<Recipe>>,
    brackets: Vec<Vec<Vec<(usize, Q)>>>,
}

impl LieAlgebra {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let theta = rs.root_to_weight(rs.highest_root());
        let adj = build_module(rs.cartan_matrix(), &theta, usize::MAX)?;
        let recipes = make_recipes(rs);
        let recipes = normalize(rs, recipes, &adj.e, &adj.f, &adj.weights);
        let mats = realize(rs, &recipes, &adj.e, &adj.f, &adj.h);
        let extractor = Extractor::new(rs, &mats, &adj.weights);
        let n = mats.len();
        let weights: Vec<Vec<i64>> = (0..n).map(|k| basis_weight(rs, k)).collect();
        let mut brackets = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                let w: Vec<i64> = weights[a].iter().zip(&weights[b]).map(|(x, y)| x + y).collect();
                brackets[a][b] = extractor.bracket_coords(&mats[a], &mats[b], &w);
            }
        }
        Ok(LieAlgebra {
            rs: rs.clone(),
            recipes,
            brackets,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.rs.num_positive_roots()
    }

    pub fn dim(&self) -> usize {
        2 * self.num_positive_roots() + self.rank()
    }

    pub fn index_e(&self, root: usize) -> usize {
        root
    }

    pub fn index_h(&self, i: usize) -> usize {
        self.num_positive_roots() + i
    }

    pub fn index_f(&self, root: usize) -> usize {
        self.num_positive_roots() + self.rank() + root
    }

    /// Root coordinates of the weight of basis element `k` (zero for `h_i`).
    pub fn basis_weight(&self, k: usize) -> Vec<i64> {
        basis_weight(&self.rs, k)
    }

    pub fn basis_element(&self, k: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[k] = q(1);
        v
    }

    pub fn e(&self, i: usize) -> Vec<Q> {
        self.basis_element(self.index_e(i))
    }

    pub fn f(&self, i: usize) -> Vec<Q> {
        self.basis_element(self.index_f(i))
    }

    pub fn h(&self, i: usize) -> Vec<Q> {
        self.basis_element(self.index_h(i))
    }

    pub fn zero(&self) -> Vec<Q> {
        vec![Q::zero(); self.dim()]
    }

    /// Structure constants `[b_a, b_b] = Σ c_k b_k` as sparse pairs `(k, c)`.
    pub fn structure_constants(&self, a: usize, b: usize) -> &[(usize, Q)] {
        &self.brackets[a][b]
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = self.zero();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let s = xa * yb;
                for (k, c) in &self.brackets[a][b] {
                    out[*k] += &s * c;
                }
            }
        }
        out
    }

    /// Matrix of `ad x` in the Chevalley basis.
    pub fn ad(&self, x: &[Q]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for b in 0..n {
                for (k, c) in &self.brackets[a][b] {
                    m[(*k, b)] += xa * c;
                }
            }
        }
        m
    }

    /// Matrices of every basis element, given the simple generators of a module.
    pub(crate) fn basis_matrices(&self, e: &[Matrix], f: &[Matrix], h: &[Matrix]) -> Vec<Matrix> {
        realize(&self.rs, &self.recipes, e, f, h)
    }
}

fn basis_weight(rs: &RootSystem, k: usize) -> Vec<i64> {
    let np = rs.num_positive_roots();
    let l = rs.rank();
    if k < np {
        rs.positive_roots()[k].clone()
    } else if k < np + l {
        vec![0; l]
    } else {
        rs.positive_roots()[k - np - l].iter().map(|x| -x).collect()
    }
}

fn make_recipes(rs: &RootSystem) -> Vec<Option<Recipe>> {
    let l = rs.rank();
    rs.positive_roots()
        .iter()
        .map(|gamma| {
            if rs.height(gamma) == 1 {
                return None;
            }
            for i in 0..l {
                let mut beta = gamma.clone();
                beta[i] -= 1;
                let Some(parent) = rs.positive_root_index(&beta) else {
                    continue;
                };
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if rs.positive_root_index(&down).is_some() {
                        p += 1;
                    } else {
                        break;
                    }
                }
                return Some(Recipe {
                    simple: i,
                    parent,
                    e_scale: Q::new(1.into(), (p + 1).into()),
                    f_scale: q(1),
                });
            }
            unreachable!("every non-simple positive root has a simple predecessor")
        })
        .collect()
}

fn realize(
    rs: &RootSystem,
    recipes: &[Option<Recipe>],
    e: &[Matrix],
    f: &[Matrix],
    h: &[Matrix],
) -> Vec<Matrix> {
    let np = rs.num_positive_roots();
    let mut es: Vec<Matrix> = Vec::with_capacity(np);
    let mut fs: Vec<Matrix> = Vec::with_capacity(np);
    for (idx, recipe) in recipes.iter().enumerate() {
        match recipe {
            None => {
                let i = rs.positive_roots()[idx]
                    .iter()
                    .position(|&c| c == 1)
                    .expect("simple root");
                es.push(e[i].clone());
                fs.push(f[i].clone());
            }
            Some(r) => {
                es.push(e[r.simple].commutator(&es[r.parent]).scale(&r.e_scale));
                fs.push(f[r.simple].commutator(&fs[r.parent]).scale(&r.f_scale));
            }
        }
    }
    let mut out = es;
    out.extend(h.iter().cloned());
    out.extend(fs);
    out
}

/// Fix each `f_γ` so that `[e_γ, f_γ] = h_γ`, i.e. `γ([e_γ, f_γ]) = 2`.
/// Parents are normalized before their children, so one pass suffices.
fn normalize(
    rs: &RootSystem,
    mut recipes: Vec<Option<Recipe>>,
    e: &[Matrix],
    f: &[Matrix],
    weights: &[Vec<i64>],
) -> Vec<Option<Recipe>> {
    let np = rs.num_positive_roots();
    let simple_rows = simple_root_rows(rs, weights);
    let cartan_inverse = Matrix::from_i64(rs.cartan_matrix())
        .inverse()
        .expect("invertible Cartan matrix");
    let mut es: Vec<Matrix> = Vec::with_capacity(np);
    let mut fs: Vec<Matrix> = Vec::with_capacity(np);
    for idx in 0..np {
        let gamma = &rs.positive_roots()[idx];
        let Some(r) = &mut recipes[idx] else {
            let i = gamma.iter().position(|&c| c == 1).expect("simple root");
            es.push(e[i].clone());
            fs.push(f[i].clone());
            continue;
        };
        let eg = e[r.simple].commutator(&es[r.parent]).scale(&r.e_scale);
        let fg = f[r.simple].commutator(&fs[r.parent]);
        let hg = eg.commutator(&fg);
        let d: Vec<Q> = simple_rows.iter().map(|&row| hg[(row, row)].clone()).collect();
        let coords = cartan_inverse.mul_vec(&d);
        let mut value = Q::zero();
        for (c, w) in coords.iter().zip(rs.root_to_weight(gamma)) {
            value += c * q(w);
        }
        r.f_scale = q(2) / value;
        fs.push(fg.scale(&r.f_scale));
        es.push(eg);
    }
    recipes
}

fn simple_root_rows(rs: &RootSystem, weights: &[Vec<i64>]) -> Vec<usize> {
    (0..rs.rank())
        .map(|i| {
            weights
                .iter()
                .position(|w| w == &rs.cartan_matrix()[i])
                .expect("simple roots are weights of the adjoint module")
        })
        .collect()
}

struct Extractor {
    pivots: Vec<Option<(usize, usize, Q)>>,
    simple_rows: Vec<usize>,
    cartan_inverse: Matrix,
    np: usize,
    l: usize,
    roots: Vec<Vec<i64>>,
}

impl Extractor {
    fn new(rs: &RootSystem, mats: &[Matrix], weights: &[Vec<i64>]) -> Self {
        let np = rs.num_positive_roots();
        let l = rs.rank();
        let pivots = mats
            .iter()
            .enumerate()
            .map(|(k, m)| {
                if k >= np && k < np + l {
                    return None;
                }
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        if !m[(r, c)].is_zero() {
                            return Some((r, c, m[(r, c)].clone()));
                        }
                    }
                }
                None
            })
            .collect();
        let simple_rows = simple_root_rows(rs, weights);
        let cartan_inverse = Matrix::from_i64(rs.cartan_matrix())
            .inverse()
            .expect("invertible Cartan matrix");
        Extractor {
            pivots,
            simple_rows,
            cartan_inverse,
            np,
            l,
            roots: rs.positive_roots().to_vec(),
        }
    }

    /// Coordinates of `[a, b]`, known to have root-coordinate weight `w`.
    fn bracket_coords(&self, a: &Matrix, b: &Matrix, w: &[i64]) -> Vec<(usize, Q)> {
        let entry = |r: usize, c: usize| -> Q {
            let mut acc = Q::zero();
            for k in 0..a.cols() {
                if !a[(r, k)].is_zero() && !b[(k, c)].is_zero() {
                    acc += &a[(r, k)] * &b[(k, c)];
                }
                if !b[(r, k)].is_zero() && !a[(k, c)].is_zero() {
                    acc -= &b[(r, k)] * &a[(k, c)];
                }
            }
            acc
        };
        if w.iter().all(|&x| x == 0) {
            let d: Vec<Q> = self.simple_rows.iter().map(|&r| entry(r, r)).collect();
            let c = self.cartan_inverse.mul_vec(&d);
            return c
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (self.np + i, x))
                .collect();
        }
        let neg: Vec<i64> = w.iter().map(|x| -x).collect();
        let k = if let Some(i) = self.roots.iter().position(|r| r.as_slice() == w) {
            i
        } else if let Some(i) = self.roots.iter().position(|r| r == &neg) {
            self.np + self.l + i
        } else {
            return Vec::new();
        };
        let (r, c, p) = self.pivots[k].as_ref().expect("root vectors are nonzero");
        let v = entry(*r, *c) / p;
        if v.is_zero() {
            Vec::new()
        } else {
            vec![(k, v)]
        }
    }
}
