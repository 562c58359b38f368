//! Peterson variety membership, Bruhat cells, and the orbit census.
//!
//! The flag variety is `G/B` with basepoint `𝔟`; a coset `gB` lies in the
//! Peterson variety iff `Ad(g⁻¹)e ∈ 𝔟 ⊕ Σ ℂf_i`. Group elements are words in
//! exponentials of algebra elements and Weyl representatives
//! `n_i = exp(e_i) exp(−f_i) exp(e_i)`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chevrep::{exp_nilpotent, LeviBlock, LieAlgebra, Representation};
use crate::error::{Error, Result};
use crate::linalg::{dot, is_zero_vec, Matrix, Subspace};
use crate::poly::MultiPoly;
use crate::principal::{graded_centralizer, sum_of_simple, PrincipalData};
use crate::rational::{q, Q};
use crate::rootdata::RootSystem;

#[derive(Clone, Debug)]
pub enum WordItem {
    /// `exp(Σ c_k x_k)` with polynomial coefficients `c_k`.
    Exp(Vec<(Vec<Q>, MultiPoly)>),
    /// The Weyl representative `n_i`.
    Weyl(usize),
}

/// A group element as a finite word; also the flag `g·𝔟` it represents.
#[derive(Clone, Debug)]
pub struct GroupWord {
    nvars: usize,
    items: Vec<WordItem>,
}

impl GroupWord {
    pub fn identity(nvars: usize) -> Self {
        GroupWord {
            nvars,
            items: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn items(&self) -> &[WordItem] {
        &self.items
    }

    pub fn push_exp(&mut self, x: Vec<Q>, coeff: MultiPoly) -> &mut Self {
        assert_eq!(coeff.nvars(), self.nvars);
        self.items.push(WordItem::Exp(vec![(x, coeff)]));
        self
    }

    pub fn push_exp_rational(&mut self, x: Vec<Q>, c: Q) -> &mut Self {
        let coeff = MultiPoly::constant(self.nvars, c);
        self.push_exp(x, coeff)
    }

    /// `exp(Σ t_j x_j)` with the word's variables `t_j`.
    pub fn push_exp_generic(&mut self, basis: &[Vec<Q>]) -> &mut Self {
        assert!(basis.len() <= self.nvars);
        let terms = basis
            .iter()
            .enumerate()
            .map(|(j, x)| (x.clone(), MultiPoly::var(self.nvars, j)))
            .collect();
        self.items.push(WordItem::Exp(terms));
        self
    }

    pub fn push_weyl(&mut self, i: usize) -> &mut Self {
        self.items.push(WordItem::Weyl(i));
        self
    }

    /// Representative `n_{i_1} ⋯ n_{i_k}` of a Weyl element given by a word.
    pub fn push_weyl_word(&mut self, word: &[usize]) -> &mut Self {
        for &i in word {
            self.push_weyl(i);
        }
        self
    }

    pub fn is_rational(&self) -> bool {
        self.items.iter().all(|it| match it {
            WordItem::Exp(terms) => terms.iter().all(|(_, c)| c.is_constant()),
            WordItem::Weyl(_) => true,
        })
    }

    /// `Ad(g⁻¹) v` for a vector with polynomial coordinates.
    pub fn ad_inverse_apply(&self, g: &LieAlgebra, v: Vec<MultiPoly>) -> Result<Vec<MultiPoly>> {
        self.inverse_apply_with(v, |x| g.ad(x), |i| (g.ad(&g.e(i)), g.ad(&g.f(i))))
    }

    /// `g⁻¹ u` on a module, for a vector with polynomial coordinates.
    pub fn rep_inverse_apply(&self, v: &Representation, u: Vec<MultiPoly>) -> Result<Vec<MultiPoly>> {
        self.inverse_apply_with(u, |x| v.action(x), |i| (v.e(i).clone(), v.f(i).clone()))
    }

    fn inverse_apply_with(
        &self,
        mut v: Vec<MultiPoly>,
        action: impl Fn(&[Q]) -> Matrix,
        simple: impl Fn(usize) -> (Matrix, Matrix),
    ) -> Result<Vec<MultiPoly>> {
        for item in &self.items {
            v = match item {
                WordItem::Exp(terms) => {
                    let neg: Vec<(Matrix, MultiPoly)> =
                        terms.iter().map(|(x, c)| (action(x), -c)).collect();
                    exp_apply_poly(&neg, v, self.nvars)?
                }
                WordItem::Weyl(i) => {
                    let (e, f) = simple(*i);
                    apply_rational(&weyl_inverse_matrix(&e, &f)?, &v, self.nvars)
                }
            };
        }
        Ok(v)
    }

    /// Matrix of `g` on a module; the word must have constant coefficients.
    pub fn matrix(&self, v: &Representation) -> Result<Matrix> {
        let mut m = Matrix::identity(v.dim());
        for item in &self.items {
            m = m.mul(&item_matrix(item, v, false)?);
        }
        Ok(m)
    }

    /// Matrix of `g⁻¹` on a module; the word must have constant coefficients.
    pub fn inverse_matrix(&self, v: &Representation) -> Result<Matrix> {
        let mut m = Matrix::identity(v.dim());
        for item in &self.items {
            m = item_matrix(item, v, true)?.mul(&m);
        }
        Ok(m)
    }
}

fn item_matrix(item: &WordItem, v: &Representation, inverse: bool) -> Result<Matrix> {
    let sign = if inverse { q(-1) } else { q(1) };
    match item {
        WordItem::Exp(terms) => {
            let mut x = Matrix::zeros(v.dim(), v.dim());
            for (elt, c) in terms {
                let c = c.constant_value().ok_or(Error::SymbolicWord)?;
                x.add_scaled(&v.action(elt), &(c * &sign));
            }
            exp_nilpotent(&x)
        }
        WordItem::Weyl(i) => {
            if inverse {
                weyl_inverse_matrix(v.e(*i), v.f(*i))
            } else {
                let a = exp_nilpotent(v.e(*i))?;
                let b = exp_nilpotent(&v.f(*i).scale(&q(-1)))?;
                Ok(a.mul(&b).mul(&a))
            }
        }
    }
}

/// `n_i⁻¹ = exp(−e) exp(f) exp(−e)` given the operators of `e_i` and `f_i`.
fn weyl_inverse_matrix(e: &Matrix, f: &Matrix) -> Result<Matrix> {
    let a = exp_nilpotent(&e.scale(&q(-1)))?;
    let b = exp_nilpotent(f)?;
    Ok(a.mul(&b).mul(&a))
}

fn apply_rational(m: &Matrix, v: &[MultiPoly], nvars: usize) -> Vec<MultiPoly> {
    (0..m.rows())
        .map(|r| {
            let mut acc = MultiPoly::zero(nvars);
            for (c, p) in v.iter().enumerate() {
                if !m[(r, c)].is_zero() && !p.is_zero() {
                    acc.add_assign_scaled(p, &m[(r, c)]);
                }
            }
            acc
        })
        .collect()
}

/// `exp(Σ c_k X_k) v` with polynomial coefficients, for nilpotent `Σ c_k X_k`.
fn exp_apply_poly(ops: &[(Matrix, MultiPoly)], v: Vec<MultiPoly>, nvars: usize) -> Result<Vec<MultiPoly>> {
    let n = v.len();
    let mut acc = v.clone();
    let mut term = v;
    for k in 1..=n + 1 {
        let mut next = vec![MultiPoly::zero(nvars); n];
        for (m, c) in ops {
            let img = apply_rational(m, &term, nvars);
            for (a, b) in next.iter_mut().zip(img) {
                if !b.is_zero() {
                    *a = &*a + &(&b * c);
                }
            }
        }
        let inv_k = Q::new(1.into(), (k as i64).into());
        next = next.into_iter().map(|p| p.scale(&inv_k)).collect();
        if next.iter().all(MultiPoly::is_zero) {
            return Ok(acc);
        }
        for (a, b) in acc.iter_mut().zip(&next) {
            *a = &*a + b;
        }
        term = next;
    }
    Err(Error::NotNilpotent)
}

/// Coefficients of `Ad(g⁻¹)e` on `f_α` with `ht α ≥ 2` that do not vanish identically.
pub fn membership_obstructions(
    g: &LieAlgebra,
    pd: &PrincipalData,
    word: &GroupWord,
) -> Result<Vec<(Vec<i64>, MultiPoly)>> {
    let rs = g.root_system();
    let e: Vec<MultiPoly> = pd
        .e
        .iter()
        .map(|c| MultiPoly::constant(word.nvars(), c.clone()))
        .collect();
    let image = word.ad_inverse_apply(g, e)?;
    Ok(rs
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, r)| rs.height(r) >= 2)
        .filter_map(|(idx, r)| {
            let c = &image[g.index_f(idx)];
            (!c.is_zero()).then(|| (r.clone(), c.clone()))
        })
        .collect())
}

pub fn peterson_membership(g: &LieAlgebra, pd: &PrincipalData, word: &GroupWord) -> Result<bool> {
    Ok(membership_obstructions(g, pd, word)?.is_empty())
}

/// `exp(Σ t_j x_j) · n_{w_0}`: the image of the centralizer in the flag variety.
pub fn centralizer_orbit_word(g: &LieAlgebra, pd: &PrincipalData) -> GroupWord {
    let rs = g.root_system();
    let all: Vec<usize> = (0..rs.rank()).collect();
    let mut w = GroupWord::identity(pd.basis.len());
    w.push_exp_generic(&pd.basis);
    w.push_weyl_word(rs.longest_element(&all).word());
    w
}

/// `exp(Σ t_j a_j) · n_{w_I}` for a basis `a_j` of `𝔞_I`.
pub fn cell_word(g: &LieAlgebra, subset: &[usize]) -> GroupWord {
    let rs = g.root_system();
    let gc = graded_centralizer(g, subset);
    let mut w = GroupWord::identity(gc.basis.len());
    w.push_exp_generic(&gc.basis);
    w.push_weyl_word(rs.longest_element(subset).word());
    w
}

#[derive(Clone, Debug, Serialize)]
pub struct CellFilter {
    pub weyl_order: usize,
    /// Subsets `I` (0-based, sorted) whose `w_I` passes the parabolic test.
    pub subsets: Vec<Vec<usize>>,
    /// For every `w`, membership of `n_w B` agrees with the parabolic test.
    pub point_agreement: bool,
    /// `A_I w_I B` lies in the Peterson variety for every listed `I`.
    pub symbolic_cells: bool,
}

pub fn cell_filter(g: &LieAlgebra, pd: &PrincipalData) -> Result<CellFilter> {
    let rs = g.root_system();
    let weyl = rs.weyl_group();
    let mut subsets = Vec::new();
    let mut point_agreement = true;
    for w in &weyl {
        let test = rs.parabolic_longest_test(w);
        let mut word = GroupWord::identity(0);
        word.push_weyl_word(w.word());
        let member = peterson_membership(g, pd, &word)?;
        if member != test.is_some() {
            point_agreement = false;
        }
        if let Some(s) = test {
            if rs.longest_element(&s) != *w {
                point_agreement = false;
            }
            subsets.push(s);
        }
    }
    subsets.sort_by_key(|s| (s.len(), s.clone()));
    let mut symbolic_cells = true;
    for s in &subsets {
        if !peterson_membership(g, pd, &cell_word(g, s))? {
            symbolic_cells = false;
        }
    }
    Ok(CellFilter {
        weyl_order: weyl.len(),
        subsets,
        point_agreement,
        symbolic_cells,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CellIntersection {
    pub subset: Vec<usize>,
    pub a_dim: usize,
    /// `A_I w_I B` lies in the Peterson variety (symbolic membership).
    pub contains_cell: bool,
    /// Dimension of `{x ∈ 𝔫_I : Ad(n_{w_I}⁻¹)[x, e_I] ∈ 𝔟 ⊕ Σ ℂf_i}`.
    pub tangent_dim: usize,
    /// That subspace equals `𝔞_I`.
    pub tangent_is_a: bool,
    /// `Ad(n_{w_I})` preserves `𝔲_I`.
    pub u_stable: bool,
}

impl CellIntersection {
    pub fn passes(&self) -> bool {
        self.contains_cell && self.tangent_is_a && self.u_stable
    }
}

pub fn cell_intersection_check(
    g: &LieAlgebra,
    pd: &PrincipalData,
    subset: &[usize],
) -> Result<CellIntersection> {
    let rs = g.root_system();
    rs.validate_subset(subset)?;
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    let gc = graded_centralizer(g, &subset);
    let contains_cell = peterson_membership(g, pd, &cell_word(g, &subset))?;

    let w = rs.longest_element(&subset);
    let mut word = GroupWord::identity(0);
    word.push_weyl_word(w.word());
    let to_rational = |v: Vec<MultiPoly>| -> Vec<Q> {
        v.into_iter()
            .map(|p| p.constant_value().expect("rational word"))
            .collect()
    };
    let as_poly = |v: &[Q]| -> Vec<MultiPoly> {
        v.iter().map(|c| MultiPoly::constant(0, c.clone())).collect()
    };

    let e_i = sum_of_simple(g, &subset);
    let levi_roots = rs.subsystem_roots(&subset);
    let high: Vec<usize> = (0..rs.num_positive_roots())
        .filter(|&r| rs.height(&rs.positive_roots()[r]) >= 2)
        .collect();
    let mut cols = Vec::new();
    for &r in &levi_roots {
        let img = to_rational(word.ad_inverse_apply(g, as_poly(&g.bracket(&g.e(r), &e_i)))?);
        cols.push(high.iter().map(|&h| img[g.index_f(h)].clone()).collect::<Vec<Q>>());
    }
    let kernel = if cols.is_empty() {
        Vec::new()
    } else {
        Matrix::from_cols(&cols, high.len()).nullspace()
    };
    let embed = |kv: &[Q]| -> Vec<Q> {
        let mut x = g.zero();
        for (&r, c) in levi_roots.iter().zip(kv) {
            x[g.index_e(r)] = c.clone();
        }
        x
    };
    let tangent = Subspace::span(g.dim(), kernel.iter().map(|kv| embed(kv)).collect());
    let a_space = Subspace::span(g.dim(), gc.basis.clone());

    // n_i⁻¹ differs from n_i by a torus element, so this word maps root spaces like Ad(n_w)
    let mut inv_word = GroupWord::identity(0);
    for &i in w.word().iter().rev() {
        inv_word.push_weyl(i);
    }
    let u_roots: Vec<usize> = (0..rs.num_positive_roots())
        .filter(|r| !levi_roots.contains(r))
        .collect();
    let mut u_stable = true;
    for &r in &u_roots {
        let img = to_rational(inv_word.ad_inverse_apply(g, as_poly(&g.e(r)))?);
        for (k, c) in img.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let inside = u_roots.iter().any(|&r| g.index_e(r) == k);
            if !inside {
                u_stable = false;
            }
        }
    }
    Ok(CellIntersection {
        a_dim: gc.basis.len(),
        tangent_dim: tangent.dim(),
        tangent_is_a: tangent == a_space,
        contains_cell,
        u_stable,
        subset,
    })
}

#[derive(Clone, Debug)]
pub struct PiImage {
    pub basis: Vec<Vec<Q>>,
    pub dim: usize,
    pub commutes_with_e_i: bool,
    pub inside_a: bool,
}

/// Projection of `𝔤^e` onto `𝔩_I` along `𝔲_I`.
pub fn pi_i_image(g: &LieAlgebra, pd: &PrincipalData, subset: &[usize]) -> PiImage {
    let rs = g.root_system();
    let levi_roots = rs.subsystem_roots(subset);
    let projected: Vec<Vec<Q>> = pd
        .basis
        .iter()
        .map(|x| {
            let mut y = g.zero();
            for &r in &levi_roots {
                y[g.index_e(r)] = x[g.index_e(r)].clone();
            }
            y
        })
        .collect();
    let span = Subspace::span(g.dim(), projected);
    let e_i = sum_of_simple(g, subset);
    let commutes = span
        .basis()
        .iter()
        .all(|y| is_zero_vec(&g.bracket(y, &e_i)));
    let a_space = Subspace::span(g.dim(), graded_centralizer(g, subset).basis);
    PiImage {
        dim: span.dim(),
        inside_a: span.is_subspace_of(&a_space),
        basis: span.basis().to_vec(),
        commutes_with_e_i: commutes,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    /// 0-based, sorted.
    pub subset: Vec<usize>,
    pub w_length: usize,
    pub dim_a: usize,
    pub dim_pi: usize,
    pub finite: bool,
    /// `Some(1)` for a single orbit, `None` for infinitely many.
    pub orbit_count: Option<u64>,
}

/// All subsets of `{0..l}`, by size then lexicographically.
pub fn all_subsets(rank: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..1u32 << rank)
        .map(|mask| (0..rank).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    out.sort_by_key(|s: &Vec<usize>| (s.len(), s.clone()));
    out
}

pub fn census_row(g: &LieAlgebra, pd: &PrincipalData, subset: &[usize]) -> CensusRow {
    let rs = g.root_system();
    let dim_a = graded_centralizer(g, subset).basis.len();
    let dim_pi = pi_i_image(g, pd, subset).dim;
    let finite = dim_pi == dim_a;
    CensusRow {
        subset: subset.to_vec(),
        w_length: rs.longest_element(subset).length(),
        dim_a,
        dim_pi,
        finite,
        orbit_count: finite.then_some(1),
    }
}

pub fn orbit_census(g: &LieAlgebra, pd: &PrincipalData) -> Vec<CensusRow> {
    all_subsets(g.rank())
        .iter()
        .map(|s| census_row(g, pd, s))
        .collect()
}

/// `[𝔩_I, 𝔩_I]` is not simple: its Dynkin diagram has at least two components.
pub fn derived_levi_not_simple(rs: &RootSystem, subset: &[usize]) -> bool {
    rs.dynkin_components(subset).len() >= 2
}

#[derive(Clone, Debug)]
pub struct GeneralTest {
    /// `(h·v_λ*)(w^α_ρ)` for every block, in block order.
    pub values: Vec<Q>,
    pub general: bool,
}

/// `h·v_λ* = v_λ* ∘ h⁻¹` as a covector on `V_λ`.
pub fn translated_top_covector(word: &GroupWord, v: &Representation) -> Result<Vec<Q>> {
    if !word.is_rational() {
        return Err(Error::SymbolicWord);
    }
    Ok(word.inverse_matrix(v)?.row(0).to_vec())
}

pub fn general_flag_test(word: &GroupWord, v: &Representation, blocks: &[LeviBlock]) -> Result<GeneralTest> {
    let phi = translated_top_covector(word, v)?;
    let values: Vec<Q> = blocks.iter().map(|b| dot(&phi, b.highest_vector())).collect();
    Ok(GeneralTest {
        general: values.iter().all(|x| !x.is_zero()),
        values,
    })
}

/// A random word in `exp(c e_i)` and `exp(c f_i)` with small rational `c`.
pub fn random_word(g: &LieAlgebra, rng: &mut ChaCha8Rng, length: usize) -> GroupWord {
    let l = g.rank();
    let mut w = GroupWord::identity(0);
    for k in 0..length {
        let i = rng.gen_range(0..l);
        let num = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let den = rng.gen_range(1..=2);
        let x = if k % 2 == 0 { g.e(i) } else { g.f(i) };
        w.push_exp_rational(x, Q::new(num.into(), den.into()));
    }
    w
}

/// Seeded search for a translate `h` with `h·𝔟⁻` general.
pub fn find_general_translate(
    g: &LieAlgebra,
    v: &Representation,
    blocks: &[LeviBlock],
    seed: u64,
    budget: usize,
) -> Result<GroupWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let identity = GroupWord::identity(0);
    if general_flag_test(&identity, v, blocks)?.general {
        return Ok(identity);
    }
    for _ in 0..budget {
        let w = random_word(g, &mut rng, 2 * g.rank() + 2);
        if general_flag_test(&w, v, blocks)?.general {
            return Ok(w);
        }
    }
    Err(Error::NoGeneralTranslate { budget })
}

/// Label of a Chevalley basis element: `e(…)`, `h<i>`, `f(…)` with root coordinates.
pub fn basis_label(g: &LieAlgebra, k: usize) -> String {
    let rs = g.root_system();
    let np = rs.num_positive_roots();
    let coords = |r: usize| {
        rs.positive_roots()[r]
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    if k < np {
        format!("e({})", coords(k))
    } else if k < np + rs.rank() {
        format!("h{}", k - np + 1)
    } else {
        format!("f({})", coords(k - np - rs.rank()))
    }
}

impl GroupWord {
    /// Human-readable word, e.g. `exp(3/2*e(1,0)) n1`.
    pub fn describe(&self, g: &LieAlgebra) -> String {
        if self.items.is_empty() {
            return "1".into();
        }
        let names: Vec<String> = (1..=self.nvars).map(|j| format!("t{j}")).collect();
        self.items
            .iter()
            .map(|item| match item {
                WordItem::Weyl(i) => format!("n{}", i + 1),
                WordItem::Exp(terms) => {
                    let inner: Vec<String> = terms
                        .iter()
                        .map(|(x, c)| {
                            let nz: Vec<usize> = (0..x.len()).filter(|&k| !x[k].is_zero()).collect();
                            let elt = match nz.as_slice() {
                                [k] if x[*k] == q(1) => basis_label(g, *k),
                                _ => format!("x{:?}", nz),
                            };
                            format!("({})*{}", c.to_string_with(&names), elt)
                        })
                        .collect();
                    format!("exp({})", inner.join(" + "))
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}
