//! Truncated enveloping algebras of abelian centralizers, annihilators, and
//! the matrix-entry solvers.
//!
//! The centralizer is abelian, so `𝒰𝔤^e` is a polynomial algebra and a
//! monomial is an exponent vector over the generator basis. All identities
//! between matrix entries on the group reduce to finitely many linear
//! equations, one per monomial below the truncation bound.

use std::collections::HashMap;

use num_traits::Zero;

use crate::chevrep::{exp_symbolic, LeviBlock, PolyMatrix, Representation};
use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix, Subspace};
use crate::poly::MultiPoly;
use crate::principal::{eigenvalue_spread, PrincipalData, RegularElement};
use crate::rational::{fmt_q, q, Q};
use crate::rootdata::RootSystem;

/// Generators of an abelian nilpotent algebra acting on a module whose
/// distinguished extremal vector has index 0.
#[derive(Clone, Debug)]
pub struct ModuleView {
    pub gens: Vec<Matrix>,
    pub degrees: Vec<i64>,
    /// Spread of grading eigenvalues on the module; monomials of higher
    /// degree act as zero.
    pub spread: i64,
    pub dim: usize,
}

impl ModuleView {
    pub fn principal(pd: &PrincipalData, v: &Representation) -> Self {
        ModuleView {
            gens: pd.basis.iter().map(|x| v.action(x)).collect(),
            degrees: pd.degrees.clone(),
            spread: eigenvalue_spread(v.weights(), &pd.h_cartan),
            dim: v.dim(),
        }
    }

    /// The unipotent part `A` acting on a Levi block of `v`.
    pub fn levi_block(re: &RegularElement, v: &Representation, block: &LeviBlock) -> Self {
        ModuleView {
            gens: re
                .a_basis
                .iter()
                .map(|x| block.restrict(&v.action(x)))
                .collect(),
            degrees: re.a_degrees.clone(),
            spread: eigenvalue_spread(&block.weights, &re.h_levi),
            dim: block.dim(),
        }
    }

    /// `exp(Σ t_j x_j)` on the module, with polynomial entries in `t_1..t_m`.
    pub fn symbolic_exp(&self) -> Result<PolyMatrix> {
        if self.gens.is_empty() {
            return Ok((0..self.dim)
                .map(|r| {
                    (0..self.dim)
                        .map(|c| MultiPoly::constant(0, q(i64::from(r == c))))
                        .collect()
                })
                .collect());
        }
        exp_symbolic(&self.gens)
    }
}

/// Monomial basis of `𝒰^{≤M}` for generators of the given degrees.
#[derive(Clone, Debug)]
pub struct TruncatedUea {
    degrees: Vec<i64>,
    bound: i64,
    monomials: Vec<Vec<u32>>,
}

impl TruncatedUea {
    pub fn new(degrees: &[i64], bound: i64) -> Self {
        assert!(degrees.iter().all(|&d| d > 0), "generators sit in positive degree");
        let mut monomials = Vec::new();
        let mut current = vec![0u32; degrees.len()];
        enumerate(degrees, bound, 0, 0, &mut current, &mut monomials);
        monomials.sort_by_key(|m| (degree_of(degrees, m), std::cmp::Reverse(m.clone())));
        TruncatedUea {
            degrees: degrees.to_vec(),
            bound,
            monomials,
        }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn degree(&self, m: &[u32]) -> i64 {
        degree_of(&self.degrees, m)
    }

    /// Human-readable element `Σ c_m x^m`.
    pub fn describe(&self, coeffs: &[Q]) -> String {
        let mut parts = Vec::new();
        for (m, c) in self.monomials.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(j, &a)| {
                    if a == 1 {
                        format!("x{}", j + 1)
                    } else {
                        format!("x{}^{}", j + 1, a)
                    }
                })
                .collect();
            let mono = if mono.is_empty() { "1".to_string() } else { mono.join("*") };
            parts.push(format!("{}*{}", fmt_q(c), mono));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn degree_of(degrees: &[i64], m: &[u32]) -> i64 {
    m.iter().zip(degrees).map(|(&a, d)| a as i64 * d).sum()
}

fn enumerate(
    degrees: &[i64],
    bound: i64,
    pos: usize,
    used: i64,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if pos == degrees.len() {
        out.push(current.clone());
        return;
    }
    let mut a = 0;
    while used + a as i64 * degrees[pos] <= bound {
        current[pos] = a;
        enumerate(degrees, bound, pos + 1, used + a as i64 * degrees[pos], current, out);
        a += 1;
    }
    current[pos] = 0;
}

/// A truncated enveloping algebra acting on one module: one matrix per monomial.
#[derive(Clone, Debug)]
pub struct UeaAction {
    uea: TruncatedUea,
    mats: Vec<Matrix>,
}

impl UeaAction {
    pub fn new(uea: &TruncatedUea, view: &ModuleView) -> Self {
        let n = view.dim;
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut mats: Vec<Matrix> = Vec::with_capacity(uea.len());
        for (k, m) in uea.monomials.iter().enumerate() {
            // monomials are sorted by degree, so the predecessor is already built
            let mat = match m.iter().position(|&a| a > 0) {
                None => Matrix::identity(n),
                Some(j) => {
                    let mut prev = m.clone();
                    prev[j] -= 1;
                    view.gens[j].mul(&mats[index[&prev]])
                }
            };
            index.insert(m.clone(), k);
            mats.push(mat);
        }
        UeaAction {
            uea: uea.clone(),
            mats,
        }
    }

    pub fn uea(&self) -> &TruncatedUea {
        &self.uea
    }

    pub fn monomial_matrices(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn dim(&self) -> usize {
        self.mats.first().map_or(0, Matrix::rows)
    }

    /// `x^m · v*` in the dual action, for every monomial.
    pub fn dual_images(&self, vstar: &[Q]) -> Vec<Vec<Q>> {
        self.uea
            .monomials
            .iter()
            .zip(&self.mats)
            .map(|(m, mat)| {
                let row = mat.vec_mul(vstar);
                let odd = m.iter().map(|&a| a as u64).sum::<u64>() % 2 == 1;
                if odd {
                    row.into_iter().map(|x| -x).collect()
                } else {
                    row
                }
            })
            .collect()
    }

    /// `Ann(v*)` as a subspace of monomial-coefficient space.
    pub fn annihilator(&self, vstar: &[Q]) -> Subspace {
        let images = self.dual_images(vstar);
        let m = Matrix::from_cols(&images, self.dim());
        Subspace::span(self.uea.len(), m.nullspace())
    }

    /// Dimension of the cyclic module `𝒰 · v*`.
    pub fn cyclic_dim(&self, vstar: &[Q]) -> usize {
        Subspace::span(self.dim(), self.dual_images(vstar)).dim()
    }

    /// Rows `v* · x^m`, one per monomial.
    fn covector_rows(&self, vstar: &[Q]) -> Vec<Vec<Q>> {
        self.mats.iter().map(|m| m.vec_mul(vstar)).collect()
    }

    fn top_rows(&self) -> Vec<Vec<Q>> {
        self.mats.iter().map(|m| m.row(0).to_vec()).collect()
    }

    /// Values `v*(x^m · u)` for every monomial.
    pub fn entry_values(&self, vstar: &[Q], u: &[Q]) -> Vec<Q> {
        self.mats.iter().map(|m| dot(vstar, &m.mul_vec(u))).collect()
    }
}

/// Result of an annihilator inclusion test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionCheck {
    pub holds: bool,
    /// An element of the first annihilator outside the second, as monomial coefficients.
    pub witness: Option<Vec<Q>>,
}

/// Whether `Ann(v1*) ⊆ Ann(v2*)`; both actions must share one truncated algebra.
pub fn check_ann_inclusion(a1: &UeaAction, v1: &[Q], a2: &UeaAction, v2: &[Q]) -> InclusionCheck {
    assert_eq!(a1.uea.monomials, a2.uea.monomials, "different truncations");
    let ann1 = a1.annihilator(v1);
    let ann2 = a2.annihilator(v2);
    let witness = ann1.witness_outside(&ann2);
    InclusionCheck {
        holds: witness.is_none(),
        witness,
    }
}

fn solve_rows(rows: Vec<Vec<Q>>, rhs: Vec<Q>, what: &str) -> Result<Vec<Q>> {
    Matrix::from_rows(rows)
        .solve(&rhs)
        .ok_or_else(|| Error::CounterExample(format!("{what}: the monomial system is inconsistent")))
}

/// `w` with `v*(x·u) = v_top*(x·w)` for every monomial `x`.
pub fn solve_toprow(act: &UeaAction, vstar: &[Q], u: &[Q]) -> Result<Vec<Q>> {
    let rhs = act.entry_values(vstar, u);
    solve_rows(act.top_rows(), rhs, "top-row reduction")
}

/// `u` with `v_top*(x·w) = v*(x·u)`, provided `v*` does not vanish on the top vector.
pub fn solve_bijection(act: &UeaAction, w: &[Q], vstar: &[Q]) -> Result<Vec<Q>> {
    if vstar[0].is_zero() {
        return Err(Error::Precondition(
            "the covector vanishes on the highest weight vector".into(),
        ));
    }
    let rhs: Vec<Q> = act.mats.iter().map(|m| dot(m.row(0), w)).collect();
    solve_rows(act.covector_rows(vstar), rhs, "bijection")
}

/// `z ∈ V_λ` with `v_μ*(x·w) = v_λ*(x·z)`; both actions share one truncation.
pub fn solve_telescope(act_mu: &UeaAction, w: &[Q], act_lambda: &UeaAction) -> Result<Vec<Q>> {
    assert_eq!(act_mu.uea.monomials, act_lambda.uea.monomials, "different truncations");
    let rhs: Vec<Q> = act_mu.mats.iter().map(|m| dot(m.row(0), w)).collect();
    solve_rows(act_lambda.top_rows(), rhs, "telescope")
}

/// Whether every monomial above the bound (up to one generator step) acts as zero.
pub fn vanishes_above_bound(uea: &TruncatedUea, view: &ModuleView) -> bool {
    let max_deg = uea.degrees.iter().copied().max().unwrap_or(0);
    let wider = TruncatedUea::new(&uea.degrees, uea.bound + max_deg);
    let act = UeaAction::new(&wider, view);
    wider
        .monomials
        .iter()
        .zip(&act.mats)
        .filter(|(m, _)| wider.degree(m) > uea.bound)
        .all(|(_, mat)| mat.is_zero())
}

/// `g ↦ v*(g·u)` on `exp` of the generators, as a polynomial in their coordinates.
pub fn entry_poly(exp: &PolyMatrix, vstar: &[Q], u: &[Q], nvars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    for (r, vr) in vstar.iter().enumerate() {
        if vr.is_zero() {
            continue;
        }
        for (c, uc) in u.iter().enumerate() {
            if uc.is_zero() {
                continue;
            }
            out.add_assign_scaled(&exp[r][c], &(vr * uc));
        }
    }
    out
}

/// The unit covector on the extremal vector.
pub fn top_covector(dim: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[0] = q(1);
    v
}

/// `σ ≤_L ρ` with equal central characters: the highest weights differ by a
/// non-negative integer combination of the simple roots in `I`.
pub fn levi_dominates(rs: &RootSystem, subset: &[usize], upper: &LeviBlock, lower: &LeviBlock) -> bool {
    if upper.alpha != lower.alpha {
        return false;
    }
    let diff: Vec<i64> = upper
        .highest_weight
        .iter()
        .zip(&lower.highest_weight)
        .map(|(a, b)| a - b)
        .collect();
    match rs.weight_to_root_int(&diff) {
        Some(c) => c
            .iter()
            .enumerate()
            .all(|(k, &x)| x >= 0 && (x == 0 || subset.contains(&k))),
        None => false,
    }
}

/// A block of `candidates` lying over `block` in the Levi dominance order.
pub fn find_levi_dominating(
    rs: &RootSystem,
    subset: &[usize],
    block: &LeviBlock,
    candidates: &[LeviBlock],
) -> Option<usize> {
    candidates
        .iter()
        .position(|c| levi_dominates(rs, subset, c, block))
}

/// Block version of [`solve_toprow`]: `ψ(a·v) = w^{α*}(a·w)` on `A`.
pub fn solve_toprow_general(act: &UeaAction, psi: &[Q], v: &[Q]) -> Result<Vec<Q>> {
    solve_toprow(act, psi, v)
}

/// Block version of [`solve_telescope`]; the central characters must agree.
pub fn solve_telescope_general(
    src: &LeviBlock,
    act_src: &UeaAction,
    w: &[Q],
    dst: &LeviBlock,
    act_dst: &UeaAction,
) -> Result<Vec<Q>> {
    if src.alpha != dst.alpha {
        let show = |a: &[Q]| a.iter().map(fmt_q).collect::<Vec<_>>().join(",");
        return Err(Error::CharacterMismatch {
            left: show(&src.alpha),
            right: show(&dst.alpha),
        });
    }
    solve_telescope(act_src, w, act_dst)
}
