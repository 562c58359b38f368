//! The three suites behind `pwlab verify`, `pwlab census` and `pwlab general`.

use serde_json::{json, Value};

use crate::chevrep::{restrict_to_levi, PolyMatrix, Representation};
use crate::coordring::{check_ideal_property, check_multiplication, phi_check, psi_check, IsoReport};
use crate::error::Result;
use crate::lab::Lab;
use crate::linalg::{is_zero_vec, unit_vec, Matrix};
use crate::peterson::{
    cell_filter, cell_intersection_check, derived_levi_not_simple, find_general_translate, orbit_census,
    pi_i_image, CensusRow,
};
use crate::poly::PolySpan;
use crate::principal::{centralizer_basis, regular_element};
use crate::rational::{fmt_q, q, Q};
use crate::rootdata::{TypeLetter, Weight};
use crate::uea::{
    check_ann_inclusion, entry_poly, solve_bijection, solve_telescope, solve_toprow, top_covector,
    vanishes_above_bound, ModuleView, TruncatedUea, UeaAction,
};

use super::config::RunConfig;
use super::report::{Recorder, Report};

const TRANSLATE_BUDGET: usize = 200;
const MULTIPLICATION_SAMPLES: usize = 20;

fn config_json(cfg: &RunConfig) -> Value {
    serde_json::to_value(cfg).expect("config serializes")
}

fn lab_for(cfg: &RunConfig) -> Result<Lab> {
    Lab::with_max_dim(cfg.type_letter, cfg.rank, cfg.max_dim)
}

fn one_based(subset: &[usize]) -> String {
    let s: Vec<String> = subset.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", s.join(","))
}

fn iso_witness(r: &IsoReport) -> Value {
    json!({
        "flag_dim": r.flag_dim,
        "flag_quotient": r.flag_quotient,
        "wonderful_dim": r.wonderful_dim,
        "wonderful_quotient": r.wonderful_quotient,
        "injective": r.injective,
        "surjective": r.surjective,
        "chain_entries": r.chain_entries,
        "chain_ok": r.chain_ok,
        "detail": r.witness,
    })
}

fn structure_checks(rec: &mut Recorder, lab: &Lab) -> Result<()> {
    let g = lab.algebra();
    let rs = lab.root_system();
    let pd = lab.principal();
    rec.simple("structure.jacobi", "Jacobi identity on basis triples", || {
        let n = g.dim();
        let basis: Vec<Vec<Q>> = (0..n).map(|k| g.basis_element(k)).collect();
        for a in 0..n {
            for b in a + 1..n {
                let ab = g.bracket(&basis[a], &basis[b]);
                for c in b + 1..n {
                    let t1 = g.bracket(&basis[a], &g.bracket(&basis[b], &basis[c]));
                    let t2 = g.bracket(&basis[b], &g.bracket(&basis[c], &basis[a]));
                    let t3 = g.bracket(&basis[c], &ab);
                    let sum: Vec<Q> = (0..n).map(|k| &t1[k] + &t2[k] + &t3[k]).collect();
                    if !is_zero_vec(&sum) {
                        return Ok((false, Some(json!({ "triple": [a, b, c] }))));
                    }
                }
            }
        }
        Ok((true, None))
    })?;
    rec.simple("structure.centralizer_dim", "dim g^e equals the rank", || {
        let d = centralizer_basis(g, &pd.e).len();
        Ok((d == rs.rank() && pd.basis.len() == d, Some(json!({ "dim": d, "rank": rs.rank() }))))
    })?;
    rec.simple("structure.exponents", "h-degrees of g^e are twice the exponents", || {
        let mut degs = pd.degrees.clone();
        degs.sort_unstable();
        let mut twice: Vec<i64> = rs.exponents().iter().map(|m| 2 * m).collect();
        twice.sort_unstable();
        Ok((degs == twice, Some(json!({ "degrees": degs, "twice_exponents": twice }))))
    })?;
    rec.simple("structure.abelian", "g^e is abelian", || {
        for x in &pd.basis {
            for y in &pd.basis {
                if !is_zero_vec(&g.bracket(x, y)) {
                    return Ok((false, None));
                }
            }
        }
        Ok((true, None))
    })?;
    Ok(())
}

struct Module {
    weight: Weight,
    rep: std::sync::Arc<Representation>,
    view: ModuleView,
    exp: PolyMatrix,
}

fn describe_witness(uea: &TruncatedUea, w: &Option<Vec<Q>>) -> Value {
    match w {
        Some(c) => json!(uea.describe(c)),
        None => Value::Null,
    }
}

fn vec_json(v: &[Q]) -> Value {
    json!(v.iter().map(fmt_q).collect::<Vec<_>>())
}

fn uea_checks(rec: &mut Recorder, lab: &Lab, m: &Module) -> Result<()> {
    let pd = lab.principal();
    let mu = format!("{:?}", m.weight.coords);
    let dim = m.rep.dim();
    let nvars = pd.basis.len();
    let uea = TruncatedUea::new(&pd.degrees, m.view.spread);
    let act = UeaAction::new(&uea, &m.view);
    let top = top_covector(dim);

    rec.simple(format!("uea.truncation/{mu}"), "monomials above the h-spread act as zero", || {
        Ok((vanishes_above_bound(&uea, &m.view), Some(json!({ "bound": uea.bound(), "monomials": uea.len() }))))
    })?;
    rec.simple(format!("ann.lemma/{mu}"), "Ann(v_mu^*) ⊆ Ann(v^*) for every weight covector v^*", || {
        for i in 0..dim {
            let c = check_ann_inclusion(&act, &top, &act, &unit_vec(dim, i));
            if !c.holds {
                return Ok((false, Some(json!({ "covector": i, "element": describe_witness(&uea, &c.witness) }))));
            }
        }
        Ok((true, None))
    })?;
    rec.simple(format!("ann.equality/{mu}"), "Ann(v^*) = Ann(v_mu^*) when v^*(v_mu) ≠ 0", || {
        for i in 0..dim {
            let mut v = unit_vec(dim, i);
            v[0] += q(1);
            let fwd = check_ann_inclusion(&act, &top, &act, &v);
            let back = check_ann_inclusion(&act, &v, &act, &top);
            if !fwd.holds || !back.holds {
                let w = if fwd.holds { back.witness } else { fwd.witness };
                return Ok((false, Some(json!({ "covector": vec_json(&v), "element": describe_witness(&uea, &w) }))));
            }
        }
        Ok((true, None))
    })?;
    rec.simple(format!("solver.toprow/{mu}"), "v^*(g u) = v_mu^*(g w) on G^e", || {
        for i in 0..dim {
            let vstar = unit_vec(dim, i);
            for j in 0..dim {
                let u = unit_vec(dim, j);
                let w = solve_toprow(&act, &vstar, &u)?;
                if entry_poly(&m.exp, &vstar, &u, nvars) != entry_poly(&m.exp, &top, &w, nvars) {
                    return Ok((false, Some(json!({ "covector": i, "vector": j, "w": vec_json(&w) }))));
                }
            }
        }
        Ok((true, Some(json!({ "entries": dim * dim }))))
    })?;
    rec.simple(format!("solver.bijection/{mu}"), "v_mu^*(g w) = v^*(g u) on G^e when v^*(v_mu) ≠ 0", || {
        let vstar = vec![q(1); dim];
        for j in 0..dim {
            let w = unit_vec(dim, j);
            let u = solve_bijection(&act, &w, &vstar)?;
            let target = entry_poly(&m.exp, &top, &w, nvars);
            let ok = entry_poly(&m.exp, &vstar, &u, nvars) == target;
            let back = solve_toprow(&act, &vstar, &u)?;
            let round_trip = entry_poly(&m.exp, &top, &back, nvars) == target;
            if !ok || !round_trip {
                return Ok((false, Some(json!({ "vector": j, "u": vec_json(&u), "round_trip": round_trip }))));
            }
        }
        Ok((true, None))
    })?;
    Ok(())
}

fn pair_checks(rec: &mut Recorder, lab: &Lab, lo: &Module, hi: &Module) -> Result<()> {
    let pd = lab.principal();
    let nvars = pd.basis.len();
    let id = format!("{:?}<={:?}", lo.weight.coords, hi.weight.coords);
    let bound = lo.view.spread.max(hi.view.spread);
    let uea = TruncatedUea::new(&pd.degrees, bound);
    let act_lo = UeaAction::new(&uea, &lo.view);
    let act_hi = UeaAction::new(&uea, &hi.view);
    let top_lo = top_covector(lo.rep.dim());
    let top_hi = top_covector(hi.rep.dim());
    rec.simple(format!("ann.cross/{id}"), "Ann(v_lambda^*) ⊆ Ann(v_mu^*) for mu ≤ lambda", || {
        let c = check_ann_inclusion(&act_hi, &top_hi, &act_lo, &top_lo);
        Ok((c.holds, c.witness.as_ref().map(|_| describe_witness(&uea, &c.witness))))
    })?;
    rec.simple(format!("solver.telescope/{id}"), "v_mu^*(g w) = v_lambda^*(g z) on G^e for mu ≤ lambda", || {
        for j in 0..lo.rep.dim() {
            let w = unit_vec(lo.rep.dim(), j);
            let z = solve_telescope(&act_lo, &w, &act_hi)?;
            if entry_poly(&lo.exp, &top_lo, &w, nvars) != entry_poly(&hi.exp, &top_hi, &z, nvars) {
                return Ok((false, Some(json!({ "vector": j, "z": vec_json(&z) }))));
            }
        }
        Ok((true, None))
    })?;
    Ok(())
}

fn basis_invariance(lab: &Lab, v: &Representation) -> Result<(bool, Option<Value>)> {
    let pd = lab.principal();
    let view = ModuleView::principal(pd, v);
    let span = |gens: Vec<Matrix>| -> Result<usize> {
        let alt = ModuleView {
            gens,
            ..view.clone()
        };
        let exp = alt.symbolic_exp()?;
        Ok(PolySpan::new(&exp[0]).dim())
    };
    let base = span(view.gens.clone())?;
    // a unitriangular change of basis with rational entries
    let mut changed = view.gens.clone();
    for j in 1..changed.len() {
        let mut g = changed[j].clone();
        for k in 0..j {
            g.add_scaled(&view.gens[k], &Q::new((k as i64 + 2).into(), (j as i64 + 1).into()));
        }
        changed[j] = g;
    }
    let other = span(changed)?;
    Ok((base == other, Some(json!({ "span_dim": base, "after_change": other }))))
}

pub fn verify(cfg: &RunConfig) -> Result<Report> {
    let lab = lab_for(cfg)?;
    let rs = lab.root_system();
    let lambda = lab.lambda_from_root_coords(&cfg.lambda)?;
    let mut rec = Recorder::new("verify", config_json(cfg), cfg.timing);
    structure_checks(&mut rec, &lab)?;

    let top = rs.weight(lambda.coords.iter().map(|c| c * cfg.max_degree).collect());
    let mut modules: Vec<Module> = Vec::new();
    for mu in rs.dominant_weights_below(&top)? {
        let rep = lab.rep(&mu)?;
        let view = ModuleView::principal(lab.principal(), &rep);
        let exp = view.symbolic_exp()?;
        modules.push(Module {
            weight: mu,
            rep,
            view,
            exp,
        });
    }
    for m in &modules {
        uea_checks(&mut rec, &lab, m)?;
    }
    for lo in &modules {
        for hi in &modules {
            if lo.weight != hi.weight && rs.dominates(&hi.weight, &lo.weight) {
                pair_checks(&mut rec, &lab, lo, hi)?;
            }
        }
    }

    for n in 0..=cfg.max_degree {
        rec.simple(
            format!("iso.principal/{n}"),
            "R_lambda[Pet] ≅ R_lambda[closure of G^e] in degree n",
            || {
                let r = phi_check(&lab, &lambda, n)?;
                Ok((r.passes(), Some(iso_witness(&r))))
            },
        )?;
    }
    let v_lambda = lab.rep(&lambda)?;
    rec.simple("coordring.basis_invariance", "restriction spans do not depend on the basis of g^e", || {
        basis_invariance(&lab, &v_lambda)
    })?;
    let zero = rs.zero_weight();
    for (a, b) in [(&zero, &lambda), (&lambda, &lambda)] {
        rec.simple(
            format!("multiplication/{:?}*{:?}", a.coords, b.coords),
            "f^mu_{v*,u1} f^nu_{v*,u2} = f^{mu+nu}_{v*,u} with u the Cartan projection",
            || {
                let r = check_multiplication(&lab, a, b, MULTIPLICATION_SAMPLES, cfg.seed)?;
                Ok((
                    r.passes(),
                    Some(json!({ "pairs": r.pairs, "samples": r.sampled_words, "detail": r.witness })),
                ))
            },
        )?;
    }
    rec.simple("coordring.ideal", "vanishing ideal times degree-1 sections lies in the degree-2 ideal", || {
        let r = check_ideal_property(&lab, &lambda)?;
        Ok((r.holds, Some(json!({ "degree1_ideal": r.degree1_ideal_dim, "degree2_ideal": r.degree2_ideal_dim }))))
    })?;
    Ok(rec.finish())
}

/// The census report plus its table rows.
pub fn census(cfg: &RunConfig) -> Result<(Report, Vec<CensusRow>)> {
    let lab = lab_for(cfg)?;
    let rs = lab.root_system();
    let g = lab.algebra();
    let pd = lab.principal();
    let mut rec = Recorder::new("census", config_json(cfg), cfg.timing);
    let l = rs.rank();

    rec.simple("cells.filter", "Pet meets N w B only when w is a parabolic longest element", || {
        let cf = cell_filter(g, pd)?;
        let ok = cf.subsets.len() == 1 << l && cf.point_agreement && cf.symbolic_cells;
        let subsets: Vec<String> = cf.subsets.iter().map(|s| one_based(s)).collect();
        Ok((ok, Some(json!({ "weyl_order": cf.weyl_order, "passing": subsets.len(), "subsets": subsets }))))
    })?;

    let mut rows = orbit_census(g, pd);
    if let Some(filter) = &cfg.subset {
        rows.retain(|r| r.subset.iter().all(|i| filter.contains(i)));
    }
    for row in &rows {
        let name = one_based(&row.subset);
        rec.simple(format!("cells.intersection/{name}"), "Pet ∩ N w_I B = A_I w_I B", || {
            let c = cell_intersection_check(g, pd, &row.subset)?;
            Ok((
                c.passes(),
                Some(json!({
                    "a_dim": c.a_dim,
                    "tangent_dim": c.tangent_dim,
                    "contains_cell": c.contains_cell,
                    "u_stable": c.u_stable,
                })),
            ))
        })?;
        rec.simple(format!("pi.image/{name}"), "pi_I(g^e) centralizes e_I and lies in a_I", || {
            let p = pi_i_image(g, pd, &row.subset);
            Ok((p.commutes_with_e_i && p.inside_a && p.dim == row.dim_pi, Some(json!({ "dim": p.dim }))))
        })?;
    }
    let full: Vec<usize> = (0..l).collect();
    if rows.iter().any(|r| r.subset == full) {
        rec.simple("cells.dense", "the dense cell has dimension equal to the rank", || {
            let c = cell_intersection_check(g, pd, &full)?;
            Ok((c.tangent_dim == l && c.passes(), Some(json!({ "dim": c.tangent_dim }))))
        })?;
    }
    let table: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "I": one_based(&r.subset),
                "w_length": r.w_length,
                "dim_a": r.dim_a,
                "dim_pi": r.dim_pi,
                "finite": r.finite,
                "orbit_count": r.orbit_count.map_or(json!("inf"), |c| json!(c)),
            })
        })
        .collect();
    let infinite = rows.iter().filter(|r| !r.finite).count();
    rec.simple("census.table", "finitely many G^e-orbits in a cell iff dim pi_I(g^e) = dim a_I", || {
        let ok = rows.iter().all(|r| r.finite == (r.dim_pi == r.dim_a) && r.dim_pi <= r.dim_a);
        Ok((
            ok,
            Some(json!({
                "rows": table,
                "finite_rows": rows.len() - infinite,
                "infinite_rows": infinite,
                "total_orbits": if infinite == 0 { json!(rows.len()) } else { json!("inf") },
            })),
        ))
    })?;
    if rs.type_letter() == TypeLetter::A {
        rec.simple("census.type_a_criterion", "infinite cells are exactly those with [l_I,l_I] not simple", || {
            let bad: Vec<String> = rows
                .iter()
                .filter(|r| r.finite == derived_levi_not_simple(rs, &r.subset))
                .map(|r| one_based(&r.subset))
                .collect();
            Ok((bad.is_empty(), (!bad.is_empty()).then(|| json!({ "disagree": bad }))))
        })?;
        if cfg.subset.is_none() {
            rec.simple("census.rank_threshold", "type A has an infinite cell exactly in rank ≥ 3", || {
                Ok(((infinite > 0) == (l >= 3), Some(json!({ "rank": l, "infinite_rows": infinite }))))
            })?;
        }
    }
    Ok((rec.finish(), rows))
}

pub fn general(cfg: &RunConfig) -> Result<Report> {
    let lab = lab_for(cfg)?;
    let rs = lab.root_system();
    let g = lab.algebra();
    let lambda = lab.lambda_from_root_coords(&cfg.lambda)?;
    let subset = cfg.subset.clone().unwrap_or_else(|| vec![0]);
    rs.validate_subset(&subset)?;
    let re = regular_element(g, &subset, cfg.s_params.as_deref()).map_err(|e| match e {
        crate::Error::DegenerateSemisimple { .. } | crate::Error::Precondition(_) => {
            crate::Error::Config(e.to_string())
        }
        other => other,
    })?;
    let effective = RunConfig {
        subset: Some(re.subset.clone()),
        s_params: Some(re.s_values.clone()),
        ..cfg.clone()
    };
    let mut rec = Recorder::new("general", config_json(&effective), cfg.timing);
    let v = lab.rep(&lambda)?;
    let blocks = restrict_to_levi(rs, &v, &re.subset);
    rec.simple("general.regular_element", "x = s + e_I is regular with centralizer C × A", || {
        let dim = centralizer_basis(g, &re.x).len();
        Ok((
            dim == rs.rank() && re.center_dim() + re.a_dim() == rs.rank(),
            Some(json!({
                "I": one_based(&re.subset),
                "s_values": re.s_values,
                "center_dim": re.center_dim(),
                "a_dim": re.a_dim(),
            })),
        ))
    })?;
    rec.simple("general.levi_blocks", "V_lambda decomposes into Levi blocks W^alpha_rho", || {
        let total: usize = blocks.iter().map(|b| b.dim()).sum();
        let list: Vec<Value> = blocks
            .iter()
            .map(|b| json!({ "alpha": vec_json(&b.alpha), "rho": b.rho, "dim": b.dim() }))
            .collect();
        Ok((total == v.dim(), Some(json!({ "blocks": list }))))
    })?;
    let translate = rec.check(
        "general.translate",
        "h·v_lambda^* is nonzero on every Levi highest vector",
        || {
            let h = find_general_translate(g, &v, &blocks, cfg.seed, TRANSLATE_BUDGET)?;
            let desc = h.describe(g);
            Ok((true, Some(json!({ "h": desc, "budget": TRANSLATE_BUDGET })), h))
        },
    )?;
    if let Some(h) = translate {
        for n in 1..=cfg.max_degree.max(1) {
            rec.simple(
                format!("iso.regular/{n}"),
                "R_lambda[Pet_x] ≅ R_lambda[closure of G^x] in degree n",
                || {
                    let r = psi_check(&lab, &lambda, n, &re, &h)?;
                    Ok((r.passes(), Some(iso_witness(&r))))
                },
            )?;
        }
    }
    Ok(rec.finish())
}

/// CSV with one row per subset; `inf` marks infinite orbit counts.
pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["I", "w_length", "dim_a", "dim_pi", "finite", "orbit_count"])
        .expect("in-memory write");
    for r in rows {
        w.write_record([
            one_based(&r.subset),
            r.w_length.to_string(),
            r.dim_a.to_string(),
            r.dim_pi.to_string(),
            r.finite.to_string(),
            r.orbit_count.map_or("inf".to_string(), |c| c.to_string()),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}
