//! Graded pieces of the coordinate rings on the flag side and the wonderful
//! side, restricted to `G^e` or `G^x`, and the degree-wise isomorphism checks.
//!
//! A section is identified with its restriction to the subgroup: a
//! polynomial in the unipotent parameters `t_j`, times Laurent monomials in
//! torus parameters `s_k` for the center of a Levi factor. The formal marker
//! `t^{nλ}` is grading bookkeeping only and never appears.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chevrep::{cartan_projection, exp_symbolic, restrict_to_levi, PolyMatrix, Representation};
use crate::error::{Error, Result};
use crate::lab::Lab;
use crate::linalg::{dot, unit_vec, Matrix, Subspace};
use crate::peterson::{general_flag_test, random_word, translated_top_covector, GroupWord};
use crate::poly::{MultiPoly, PolySpan};
use crate::principal::{eigenvalue_spread, RegularElement};
use crate::rational::{fmt_q, q, to_i64, Q};
use crate::rootdata::Weight;
use crate::uea::{
    entry_poly, find_levi_dominating, solve_bijection, solve_telescope, solve_telescope_general,
    solve_toprow, solve_toprow_general, top_covector, ModuleView, TruncatedUea, UeaAction,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Flag,
    Wonderful,
}

/// Degree `n` of the ring on one side: `V_{nλ}` or `⊕_{μ≤nλ} V_μ^*⊗V_μ`.
#[derive(Clone, Debug)]
pub struct GradedComponent {
    pub degree: i64,
    pub side: Side,
    pub constituents: Vec<Weight>,
    pub constituent_dims: Vec<usize>,
    pub dim: usize,
}

pub fn graded_component(lab: &Lab, lambda: &Weight, n: i64, side: Side) -> Result<GradedComponent> {
    lab.check_lambda(lambda)?;
    if n < 0 {
        return Err(Error::Precondition("negative degree".into()));
    }
    let rs = lab.root_system();
    let top = rs.weight(lambda.coords.iter().map(|c| c * n).collect());
    let constituents = match side {
        Side::Flag => vec![top],
        Side::Wonderful => rs.dominant_weights_below(&top)?,
    };
    let mut constituent_dims = Vec::new();
    for mu in &constituents {
        constituent_dims.push(lab.rep(mu)?.dim());
    }
    let dim = match side {
        Side::Flag => constituent_dims[0],
        Side::Wonderful => constituent_dims.iter().map(|d| d * d).sum(),
    };
    Ok(GradedComponent {
        degree: n,
        side,
        constituents,
        constituent_dims,
        dim,
    })
}

/// The subgroup on which sections are restricted.
#[derive(Clone, Copy, Debug)]
pub enum Subgroup<'a> {
    Principal,
    /// `G^x = C × A`, with an optional translate `h` for the flag side.
    Regular {
        re: &'a RegularElement,
        translate: Option<&'a GroupWord>,
    },
}

impl Subgroup<'_> {
    pub fn tag(&self) -> String {
        match self {
            Subgroup::Principal => "G^e".into(),
            Subgroup::Regular { re, translate } => {
                let i: Vec<String> = re.subset.iter().map(|i| (i + 1).to_string()).collect();
                let base = format!("G^x(I={{{}}}, s={:?})", i.join(","), re.s_values);
                if translate.is_some() {
                    format!("{base} translated by h")
                } else {
                    base
                }
            }
        }
    }

    /// Number of unipotent then torus parameters.
    pub fn nvars(&self, lab: &Lab) -> usize {
        match self {
            Subgroup::Principal => lab.principal().basis.len(),
            Subgroup::Regular { re, .. } => re.a_dim() + lab.root_system().rank() - re.subset.len(),
        }
    }

    pub fn variable_names(&self, lab: &Lab) -> Vec<String> {
        match self {
            Subgroup::Principal => (1..=lab.principal().basis.len()).map(|j| format!("t{j}")).collect(),
            Subgroup::Regular { re, .. } => {
                let mut names: Vec<String> = (1..=re.a_dim()).map(|j| format!("t{j}")).collect();
                names.extend(
                    (0..lab.root_system().rank())
                        .filter(|k| !re.subset.contains(k))
                        .map(|k| format!("s{}", k + 1)),
                );
                names
            }
        }
    }
}

fn widen(p: &MultiPoly, nvars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    for (e, c) in p.terms() {
        let mut e = e.clone();
        e.resize(nvars, 0);
        out.add_term(e, c.clone());
    }
    out
}

/// Central character of a weight: root coordinates outside `I`.
fn central_exponents(lab: &Lab, subset: &[usize], weight: &[i64]) -> Result<Vec<i32>> {
    let root = lab.root_system().weight_to_root(weight);
    (0..lab.root_system().rank())
        .filter(|k| !subset.contains(k))
        .map(|k| {
            to_i64(&root[k])
                .map(|x| x as i32)
                .ok_or_else(|| Error::Precondition("weight outside the root lattice".into()))
        })
        .collect()
}

/// The subgroup element acting on `v`, as a matrix of (Laurent) polynomials.
pub fn restricted_matrix(lab: &Lab, sub: &Subgroup, v: &Representation) -> Result<PolyMatrix> {
    match sub {
        Subgroup::Principal => ModuleView::principal(lab.principal(), v).symbolic_exp(),
        Subgroup::Regular { re, .. } => {
            let nvars = sub.nvars(lab);
            let m = re.a_dim();
            let gens: Vec<Matrix> = re.a_basis.iter().map(|x| v.action(x)).collect();
            let exp = if gens.is_empty() {
                (0..v.dim())
                    .map(|r| (0..v.dim()).map(|c| MultiPoly::constant(0, q(i64::from(r == c)))).collect())
                    .collect()
            } else {
                exp_symbolic(&gens)?
            };
            let mut out = Vec::with_capacity(v.dim());
            for (r, row) in exp.iter().enumerate() {
                let mut e = vec![0i32; nvars];
                for (k, x) in central_exponents(lab, &re.subset, &v.weights()[r])?.into_iter().enumerate() {
                    e[m + k] = x;
                }
                let chi = MultiPoly::monomial(e, q(1));
                out.push(row.iter().map(|p| &widen(p, nvars) * &chi).collect());
            }
            Ok(out)
        }
    }
}

/// The covector `v_{nλ}^*`, translated by `h` when the subgroup carries one.
pub fn flag_covector(sub: &Subgroup, v: &Representation) -> Result<Vec<Q>> {
    match sub {
        Subgroup::Regular {
            translate: Some(h), ..
        } => translated_top_covector(h, v),
        _ => Ok(top_covector(v.dim())),
    }
}

/// Restrictions of a basis of one graded piece, and the resulting quotient.
#[derive(Clone, Debug)]
pub struct RestrictionImage {
    pub subgroup: String,
    pub side: Side,
    pub degree: i64,
    pub nvars: usize,
    pub polys: Vec<MultiPoly>,
    pub component_dim: usize,
    pub span_dim: usize,
    pub ideal_dim: usize,
}

impl RestrictionImage {
    pub fn quotient_dim(&self) -> usize {
        self.span_dim
    }

    pub fn span(&self) -> PolySpan {
        PolySpan::new(&self.polys)
    }
}

pub fn restrict_to_subgroup(lab: &Lab, comp: &GradedComponent, sub: &Subgroup) -> Result<RestrictionImage> {
    let nvars = sub.nvars(lab);
    let mut polys = Vec::new();
    for mu in &comp.constituents {
        let v = lab.rep(mu)?;
        let mat = restricted_matrix(lab, sub, &v)?;
        match comp.side {
            Side::Flag => {
                let phi = flag_covector(sub, &v)?;
                for j in 0..v.dim() {
                    polys.push(entry_poly(&mat, &phi, &unit_vec(v.dim(), j), nvars));
                }
            }
            Side::Wonderful => {
                for row in &mat {
                    polys.extend(row.iter().cloned());
                }
            }
        }
    }
    let span_dim = PolySpan::new(&polys).dim();
    Ok(RestrictionImage {
        subgroup: sub.tag(),
        side: comp.side,
        degree: comp.degree,
        nvars,
        component_dim: comp.dim,
        ideal_dim: comp.dim - span_dim,
        span_dim,
        polys,
    })
}

/// Kernel of `c ↦ Σ c_j p_j`.
pub fn poly_kernel(polys: &[MultiPoly]) -> Subspace {
    let mut monomials: BTreeMap<Vec<i32>, usize> = BTreeMap::new();
    for p in polys {
        for (e, _) in p.terms() {
            let n = monomials.len();
            monomials.entry(e.clone()).or_insert(n);
        }
    }
    let cols: Vec<Vec<Q>> = polys
        .iter()
        .map(|p| {
            let mut v = vec![Q::zero(); monomials.len()];
            for (e, c) in p.terms() {
                v[monomials[e]] = c.clone();
            }
            v
        })
        .collect();
    if monomials.is_empty() {
        return Subspace::full(polys.len());
    }
    Subspace::span(polys.len(), Matrix::from_cols(&cols, monomials.len()).nullspace())
}

/// Outcome of an isomorphism check in one degree.
#[derive(Clone, Debug, Serialize)]
pub struct IsoReport {
    pub degree: i64,
    pub subgroup: String,
    pub flag_dim: usize,
    pub flag_quotient: usize,
    pub wonderful_dim: usize,
    pub wonderful_quotient: usize,
    pub injective: bool,
    pub surjective: bool,
    /// Matrix entries carried through the solver chain.
    pub chain_entries: usize,
    pub chain_ok: bool,
    pub witness: Option<String>,
}

impl IsoReport {
    pub fn passes(&self) -> bool {
        self.injective && self.surjective && self.chain_ok && self.flag_quotient == self.wonderful_quotient
    }
}

fn first_outside(span: &PolySpan, polys: &[MultiPoly], names: &[String]) -> Option<String> {
    polys
        .iter()
        .find(|p| !span.contains(p))
        .map(|p| format!("restricted entry {} is not in the image", p.to_string_with(names)))
}

/// Degree `n` of `Φ: R_λ[Pet] → R_λ[closure of G^e]`.
pub fn phi_check(lab: &Lab, lambda: &Weight, n: i64) -> Result<IsoReport> {
    let sub = Subgroup::Principal;
    let names = sub.variable_names(lab);
    let flag = restrict_to_subgroup(lab, &graded_component(lab, lambda, n, Side::Flag)?, &sub)?;
    let wond_comp = graded_component(lab, lambda, n, Side::Wonderful)?;
    let wond = restrict_to_subgroup(lab, &wond_comp, &sub)?;
    let flag_span = flag.span();
    let mut witness = first_outside(&flag_span, &wond.polys, &names);
    let surjective = witness.is_none();

    // the vanishing ideal of the Peterson variety, from its parametrization g·n_{w0}² by G^e
    let top = lab.rep_multiple(lambda, n)?;
    let injective = kernel_matches(&peterson_ideal(lab, &top)?, &poly_kernel(&flag.polys));
    if !injective && witness.is_none() {
        witness = Some("kernel of Φ' differs from the Peterson vanishing ideal".into());
    }

    let (chain_entries, chain_ok, chain_witness) = principal_chain(lab, lambda, n, &wond_comp)?;
    if witness.is_none() {
        witness = chain_witness;
    }
    Ok(IsoReport {
        degree: n,
        subgroup: sub.tag(),
        flag_dim: flag.component_dim,
        flag_quotient: flag.quotient_dim(),
        wonderful_dim: wond.component_dim,
        wonderful_quotient: wond.quotient_dim(),
        injective,
        surjective,
        chain_entries,
        chain_ok,
        witness,
    })
}

fn kernel_matches(a: &Subspace, b: &Subspace) -> bool {
    a == b
}

/// `{u ∈ V : v^*(k⁻¹ u) = 0 for all k = g·n_{w0}², g ∈ G^e}`.
fn peterson_ideal(lab: &Lab, v: &Representation) -> Result<Subspace> {
    let rs = lab.root_system();
    let pd = lab.principal();
    let all: Vec<usize> = (0..rs.rank()).collect();
    let w0 = rs.longest_element(&all);
    let nvars = pd.basis.len();
    let mut word = GroupWord::identity(nvars);
    word.push_exp_generic(&pd.basis);
    word.push_weyl_word(w0.word());
    word.push_weyl_word(w0.word());
    let mut polys = Vec::with_capacity(v.dim());
    for j in 0..v.dim() {
        let u: Vec<MultiPoly> = unit_vec(v.dim(), j)
            .into_iter()
            .map(|c| MultiPoly::constant(nvars, c))
            .collect();
        polys.push(word.rep_inverse_apply(v, u)?.swap_remove(0));
    }
    Ok(poly_kernel(&polys))
}

/// Every wonderful-side entry `v_i^*(g v_j)` of `V_μ` is carried to the flag
/// side by top-row reduction followed by telescoping into `V_{nλ}`.
fn principal_chain(
    lab: &Lab,
    lambda: &Weight,
    n: i64,
    comp: &GradedComponent,
) -> Result<(usize, bool, Option<String>)> {
    let pd = lab.principal();
    let nvars = pd.basis.len();
    let names = Subgroup::Principal.variable_names(lab);
    let top = lab.rep_multiple(lambda, n)?;
    let bound = eigenvalue_spread(top.weights(), &pd.h_cartan);
    let uea = TruncatedUea::new(&pd.degrees, bound);
    let top_view = ModuleView::principal(pd, &top);
    let act_top = UeaAction::new(&uea, &top_view);
    let exp_top = top_view.symbolic_exp()?;
    let vstar_top = top_covector(top.dim());
    let mut count = 0;
    for mu in &comp.constituents {
        let v = lab.rep(mu)?;
        let view = ModuleView::principal(pd, &v);
        let act = UeaAction::new(&uea, &view);
        let exp = view.symbolic_exp()?;
        for i in 0..v.dim() {
            let vstar = unit_vec(v.dim(), i);
            for j in 0..v.dim() {
                let u = unit_vec(v.dim(), j);
                count += 1;
                let w = match solve_toprow(&act, &vstar, &u) {
                    Ok(w) => w,
                    Err(e) => return Ok((count, false, Some(format!("μ={:?} entry ({i},{j}): {e}", mu.coords)))),
                };
                let z = match solve_telescope(&act, &w, &act_top) {
                    Ok(z) => z,
                    Err(e) => return Ok((count, false, Some(format!("μ={:?} entry ({i},{j}): {e}", mu.coords)))),
                };
                let lhs = entry_poly(&exp, &vstar, &u, nvars);
                let rhs = entry_poly(&exp_top, &vstar_top, &z, nvars);
                if lhs != rhs {
                    return Ok((
                        count,
                        false,
                        Some(format!(
                            "μ={:?} entry ({i},{j}): {} ≠ {}",
                            mu.coords,
                            lhs.to_string_with(&names),
                            rhs.to_string_with(&names)
                        )),
                    ));
                }
            }
        }
    }
    Ok((count, true, None))
}

/// Degree `n` of `Ψ: R_λ[Pet_x] → R_λ[closure of G^x]` with translate `h`.
pub fn psi_check(lab: &Lab, lambda: &Weight, n: i64, re: &RegularElement, h: &GroupWord) -> Result<IsoReport> {
    let rs = lab.root_system();
    let v_lambda = lab.rep(lambda)?;
    let blocks = restrict_to_levi(rs, &v_lambda, &re.subset);
    if !general_flag_test(h, &v_lambda, &blocks)?.general {
        return Err(Error::Precondition("the translate h is not general".into()));
    }
    let sub = Subgroup::Regular {
        re,
        translate: Some(h),
    };
    let names = sub.variable_names(lab);
    let flag = restrict_to_subgroup(lab, &graded_component(lab, lambda, n, Side::Flag)?, &sub)?;
    let wond = restrict_to_subgroup(lab, &graded_component(lab, lambda, n, Side::Wonderful)?, &sub)?;
    let flag_span = flag.span();
    let mut witness = first_outside(&flag_span, &wond.polys, &names);
    let surjective = witness.is_none();

    let top = lab.rep_multiple(lambda, n)?;
    let injective = kernel_matches(&translated_ideal(lab, re, h, &top)?, &poly_kernel(&flag.polys));
    if !injective && witness.is_none() {
        witness = Some("kernel of Ψ' differs from the vanishing ideal of the translated orbit".into());
    }

    let (chain_entries, chain_ok, chain_witness) = if n == 1 {
        general_chain(lab, lambda, re, h)?
    } else {
        (0, true, None)
    };
    if witness.is_none() {
        witness = chain_witness;
    }
    Ok(IsoReport {
        degree: n,
        subgroup: sub.tag(),
        flag_dim: flag.component_dim,
        flag_quotient: flag.quotient_dim(),
        wonderful_dim: wond.component_dim,
        wonderful_quotient: wond.quotient_dim(),
        injective,
        surjective,
        chain_entries,
        chain_ok,
        witness,
    })
}

/// `{u : (h·v^*)(c·a⁻¹·u) = 0}` over `C × A`, computed character by character.
fn translated_ideal(lab: &Lab, re: &RegularElement, h: &GroupWord, v: &Representation) -> Result<Subspace> {
    let phi = translated_top_covector(h, v)?;
    let m = re.a_dim();
    let mut word = GroupWord::identity(m);
    word.push_exp_generic(&re.a_basis);
    let classes: BTreeSet<Vec<i32>> = v
        .weights()
        .iter()
        .map(|w| central_exponents(lab, &re.subset, w))
        .collect::<Result<_>>()?;
    let chars: Vec<Vec<i32>> = v
        .weights()
        .iter()
        .map(|w| central_exponents(lab, &re.subset, w))
        .collect::<Result<_>>()?;
    let mut rows: Vec<Vec<MultiPoly>> = vec![Vec::new(); classes.len()];
    for j in 0..v.dim() {
        let u: Vec<MultiPoly> = unit_vec(v.dim(), j)
            .into_iter()
            .map(|c| MultiPoly::constant(m, c))
            .collect();
        let img = word.rep_inverse_apply(v, u)?;
        for (slot, class) in rows.iter_mut().zip(&classes) {
            let mut acc = MultiPoly::zero(m);
            for (i, p) in img.iter().enumerate() {
                if &chars[i] == class && !phi[i].is_zero() {
                    acc.add_assign_scaled(p, &phi[i]);
                }
            }
            slot.push(acc);
        }
    }
    let mut kernel = Subspace::full(v.dim());
    for polys in rows {
        kernel = intersect(&kernel, &poly_kernel(&polys));
    }
    Ok(kernel)
}

fn intersect(a: &Subspace, b: &Subspace) -> Subspace {
    // a ∩ b = (a^⊥ + b^⊥)^⊥
    let n = a.ambient();
    let perp = |s: &Subspace| -> Subspace {
        if s.dim() == 0 {
            return Subspace::full(n);
        }
        Subspace::span(n, Matrix::from_rows(s.basis().to_vec()).nullspace())
    };
    let both = perp(a).sum(&perp(b));
    perp(&both)
}

/// Degree-1 chain for `Ψ`: every entry of every `V_μ`, `μ ≤ λ`, is moved
/// block by block to the top row, lifted to a block of `V_λ`, and matched
/// against the translated covector.
fn general_chain(lab: &Lab, lambda: &Weight, re: &RegularElement, h: &GroupWord) -> Result<(usize, bool, Option<String>)> {
    let rs = lab.root_system();
    let sub = Subgroup::Regular {
        re,
        translate: Some(h),
    };
    let nvars = sub.nvars(lab);
    let names = sub.variable_names(lab);
    let v_lambda = lab.rep(lambda)?;
    let blocks_lambda = restrict_to_levi(rs, &v_lambda, &re.subset);
    let bound = eigenvalue_spread(v_lambda.weights(), &re.h_levi);
    let degrees = &re.a_degrees;
    let uea = TruncatedUea::new(degrees, bound);
    let acts_lambda: Vec<UeaAction> = blocks_lambda
        .iter()
        .map(|b| UeaAction::new(&uea, &ModuleView::levi_block(re, &v_lambda, b)))
        .collect();
    let phi = translated_top_covector(h, &v_lambda)?;
    let mat_lambda = restricted_matrix(lab, &sub, &v_lambda)?;
    let mut count = 0;
    let fail = |count, msg: String| Ok((count, false, Some(msg)));
    for mu in rs.dominant_weights_below(lambda)? {
        let v = lab.rep(&mu)?;
        let blocks = restrict_to_levi(rs, &v, &re.subset);
        let mut targets = Vec::with_capacity(blocks.len());
        for b in &blocks {
            match find_levi_dominating(rs, &re.subset, b, &blocks_lambda) {
                Some(k) => targets.push(k),
                None => {
                    return fail(
                        count,
                        format!("no block of V_λ over the block {:?} of V_{:?}", b.highest_weight, mu.coords),
                    )
                }
            }
        }
        let acts: Vec<UeaAction> = blocks
            .iter()
            .map(|b| UeaAction::new(&uea, &ModuleView::levi_block(re, &v, b)))
            .collect();
        let cols: Vec<Vec<Q>> = blocks.iter().flat_map(|b| b.basis.iter().cloned()).collect();
        let to_blocks = Matrix::from_cols(&cols, v.dim())
            .inverse()
            .ok_or_else(|| Error::Precondition("Levi blocks do not span the module".into()))?;
        let mat = restricted_matrix(lab, &sub, &v)?;
        for i in 0..v.dim() {
            let vstar = unit_vec(v.dim(), i);
            for j in 0..v.dim() {
                count += 1;
                let coords = to_blocks.mul_vec(&unit_vec(v.dim(), j));
                let mut u_total = vec![Q::zero(); v_lambda.dim()];
                let mut offset = 0;
                for (k, b) in blocks.iter().enumerate() {
                    let w_b = &coords[offset..offset + b.dim()];
                    offset += b.dim();
                    if w_b.iter().all(Zero::is_zero) {
                        continue;
                    }
                    let psi = b.restrict_covector(&vstar);
                    let target = &blocks_lambda[targets[k]];
                    let step = solve_toprow_general(&acts[k], &psi, w_b)
                        .and_then(|w1| solve_telescope_general(b, &acts[k], &w1, target, &acts_lambda[targets[k]]))
                        .and_then(|z| {
                            solve_bijection(&acts_lambda[targets[k]], &z, &target.restrict_covector(&phi))
                        });
                    let u_b = match step {
                        Ok(u_b) => u_b,
                        Err(e) => return fail(count, format!("μ={:?} entry ({i},{j}): {e}", mu.coords)),
                    };
                    for (a, x) in u_total.iter_mut().zip(target.embedding().mul_vec(&u_b)) {
                        *a += x;
                    }
                }
                let lhs = entry_poly(&mat, &vstar, &unit_vec(v.dim(), j), nvars);
                let rhs = entry_poly(&mat_lambda, &phi, &u_total, nvars);
                if lhs != rhs {
                    return fail(
                        count,
                        format!(
                            "μ={:?} entry ({i},{j}): {} ≠ {}",
                            mu.coords,
                            lhs.to_string_with(&names),
                            rhs.to_string_with(&names)
                        ),
                    );
                }
            }
        }
    }
    Ok((count, true, None))
}

/// `f^μ_{v_μ^*,u1} · f^ν_{v_ν^*,u2} = f^{μ+ν}_{v^*,u}` with `u` the Cartan projection of `u1 ⊗ u2`.
pub fn multiply_sections(lab: &Lab, mu: &Weight, nu: &Weight, u1: &[Q], u2: &[Q]) -> Result<Vec<Q>> {
    let vmu = lab.rep(mu)?;
    let vnu = lab.rep(nu)?;
    let sum = lab.rep(&lab.root_system().weight(mu.coords.iter().zip(&nu.coords).map(|(a, b)| a + b).collect()))?;
    let p = cartan_projection(&vmu, &vnu, &sum)?;
    let mut t = Vec::with_capacity(u1.len() * u2.len());
    for a in u1 {
        for b in u2 {
            t.push(a * b);
        }
    }
    Ok(p.mul_vec(&t))
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicationReport {
    pub mu: Vec<i64>,
    pub nu: Vec<i64>,
    pub pairs: usize,
    pub symbolic_ok: bool,
    pub sampled_words: usize,
    pub sampled_ok: bool,
    pub witness: Option<String>,
}

impl MultiplicationReport {
    pub fn passes(&self) -> bool {
        self.symbolic_ok && self.sampled_ok
    }
}

/// The product law on all basis pairs: symbolically on `G^e` and on random rational words.
pub fn check_multiplication(lab: &Lab, mu: &Weight, nu: &Weight, samples: usize, seed: u64) -> Result<MultiplicationReport> {
    let pd = lab.principal();
    let nvars = pd.basis.len();
    let vmu = lab.rep(mu)?;
    let vnu = lab.rep(nu)?;
    let sum_w = lab.root_system().weight(mu.coords.iter().zip(&nu.coords).map(|(a, b)| a + b).collect());
    let vsum = lab.rep(&sum_w)?;
    let p = cartan_projection(&vmu, &vnu, &vsum)?;
    let e_mu = ModuleView::principal(pd, &vmu).symbolic_exp()?;
    let e_nu = ModuleView::principal(pd, &vnu).symbolic_exp()?;
    let e_sum = ModuleView::principal(pd, &vsum).symbolic_exp()?;
    let names = Subgroup::Principal.variable_names(lab);
    let top_sum = top_covector(vsum.dim());
    let mut witness = None;
    let mut symbolic_ok = true;
    'outer: for a in 0..vmu.dim() {
        for b in 0..vnu.dim() {
            let lhs = &e_mu[0][a] * &e_nu[0][b];
            let u = p.col(a * vnu.dim() + b);
            let rhs = entry_poly(&e_sum, &top_sum, &u, nvars);
            if lhs != rhs {
                symbolic_ok = false;
                witness = Some(format!(
                    "basis pair ({a},{b}): {} ≠ {}",
                    lhs.to_string_with(&names),
                    rhs.to_string_with(&names)
                ));
                break 'outer;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = lab.algebra();
    let mut sampled_ok = true;
    for s in 0..samples {
        let word = random_word(g, &mut rng, 2 * g.rank() + 2);
        let m_mu = word.matrix(&vmu)?;
        let m_nu = word.matrix(&vnu)?;
        let top_row = word.matrix(&vsum)?.mul(&p);
        'pairs: for a in 0..vmu.dim() {
            for b in 0..vnu.dim() {
                let lhs = &m_mu[(0, a)] * &m_nu[(0, b)];
                if lhs != top_row[(0, a * vnu.dim() + b)] {
                    sampled_ok = false;
                    if witness.is_none() {
                        witness = Some(format!(
                            "sample {s}, basis pair ({a},{b}): {} ≠ {}",
                            fmt_q(&lhs),
                            fmt_q(&top_row[(0, a * vnu.dim() + b)])
                        ));
                    }
                    break 'pairs;
                }
            }
        }
    }
    Ok(MultiplicationReport {
        mu: mu.coords.clone(),
        nu: nu.coords.clone(),
        pairs: vmu.dim() * vnu.dim(),
        symbolic_ok,
        sampled_words: samples,
        sampled_ok,
        witness,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealReport {
    pub degree1_ideal_dim: usize,
    pub degree2_ideal_dim: usize,
    pub holds: bool,
}

/// `𝓘_1 · R_1 ⊆ 𝓘_2` on the flag side over `G^e`.
pub fn check_ideal_property(lab: &Lab, lambda: &Weight) -> Result<IdealReport> {
    let v1 = lab.rep_multiple(lambda, 1)?;
    let v2 = lab.rep_multiple(lambda, 2)?;
    let kernel = |v: &Representation| -> Result<Subspace> {
        let exp = ModuleView::principal(lab.principal(), v).symbolic_exp()?;
        let polys: Vec<MultiPoly> = exp[0].clone();
        Ok(poly_kernel(&polys))
    };
    let i1 = kernel(&v1)?;
    let i2 = kernel(&v2)?;
    let p = cartan_projection(&v1, &v1, &v2)?;
    let mut holds = true;
    for k in i1.basis() {
        for b in 0..v1.dim() {
            let mut t = vec![Q::zero(); v1.dim() * v1.dim()];
            for (a, c) in k.iter().enumerate() {
                t[a * v1.dim() + b] = c.clone();
            }
            if !i2.contains(&p.mul_vec(&t)) {
                holds = false;
            }
        }
    }
    Ok(IdealReport {
        degree1_ideal_dim: i1.dim(),
        degree2_ideal_dim: i2.dim(),
        holds,
    })
}

/// `v^*(g·u)` for a rational word `g`.
pub fn evaluate_section(word: &GroupWord, v: &Representation, vstar: &[Q], u: &[Q]) -> Result<Q> {
    Ok(dot(vstar, &word.matrix(v)?.mul_vec(u)))
}
