//! Acceptance run: one PASS/FAIL line per criterion, each under its time limit.

mod common;

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use pwlab_core::chevrep::restrict_to_levi;
use pwlab_core::coordring::{check_multiplication, phi_check, psi_check};
use pwlab_core::linalg::{is_zero_vec, unit_vec};
use pwlab_core::peterson::{
    cell_filter, derived_levi_not_simple, find_general_translate, orbit_census,
};
use pwlab_core::principal::regular_element;
use pwlab_core::rational::Q;
use pwlab_core::rootdata::{TypeLetter, Weight};
use pwlab_core::uea::{
    check_ann_inclusion, entry_poly, solve_bijection, solve_telescope, solve_toprow, top_covector, ModuleView,
    TruncatedUea, UeaAction,
};
use pwlab_core::Lab;

use common::{q, rank_of, sl_centralizer_entry_span, sl_projection_oracle, WeightOracle};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lab(t: TypeLetter, l: usize) -> Lab {
    Lab::new(t, l).unwrap()
}

fn structural() -> Outcome {
    for (t, l) in [(TypeLetter::A, 1), (TypeLetter::A, 2), (TypeLetter::A, 3), (TypeLetter::B, 2)] {
        let lab = lab(t, l);
        let g = lab.algebra();
        let n = g.dim();
        let basis: Vec<Vec<Q>> = (0..n).map(|k| g.basis_element(k)).collect();
        for a in 0..n {
            for b in a + 1..n {
                let ab = g.bracket(&basis[a], &basis[b]);
                for c in b + 1..n {
                    let t1 = g.bracket(&basis[a], &g.bracket(&basis[b], &basis[c]));
                    let t2 = g.bracket(&basis[b], &g.bracket(&basis[c], &basis[a]));
                    let t3 = g.bracket(&basis[c], &ab);
                    let s: Vec<Q> = (0..n).map(|k| &t1[k] + &t2[k] + &t3[k]).collect();
                    ensure(is_zero_vec(&s), || format!("Jacobi fails on {a},{b},{c} in {t:?}{l}"))?;
                }
            }
        }
        let pd = lab.principal();
        let centralizer = n - rank_of(g.ad(&pd.e).to_rows());
        ensure(centralizer == l && pd.basis.len() == l, || format!("dim g^e = {centralizer} in {t:?}{l}"))?;
        let mut degs = pd.degrees.clone();
        degs.sort_unstable();
        let mut want: Vec<i64> = lab.root_system().exponents().iter().map(|m| 2 * m).collect();
        want.sort_unstable();
        ensure(degs == want, || format!("degrees {degs:?} vs {want:?}"))?;
    }
    Ok("A1 A2 A3 B2".into())
}

fn representations() -> Outcome {
    let b2 = lab(TypeLetter::B, 2);
    let adjoint = b2.root_system().root_to_weight(b2.root_system().highest_root());
    let cases: Vec<(TypeLetter, char, usize, Vec<i64>)> = vec![
        (TypeLetter::A, 'A', 1, vec![2]),
        (TypeLetter::A, 'A', 2, vec![1, 1]),
        (TypeLetter::A, 'A', 2, vec![2, 2]),
        (TypeLetter::B, 'B', 2, adjoint),
    ];
    let mut dims = Vec::new();
    for (t, c, l, lam) in cases {
        let lab = lab(t, l);
        let v = lab.rep(&lab.root_system().weight(lam.clone())).unwrap();
        let got: BTreeMap<Vec<i64>, u64> =
            v.weight_multiplicities().into_iter().map(|(w, m)| (w, m as u64)).collect();
        let oracle = WeightOracle::new(c, l);
        ensure(got == oracle.freudenthal(&lam), || format!("multiplicities differ for {c}{l} {lam:?}"))?;
        let d = oracle.weyl_dimension(&lam);
        ensure(v.dim() as u64 == d, || format!("dim {} vs {d}", v.dim()))?;
        dims.push(d.to_string());
    }
    Ok(format!("dims {}", dims.join(",")))
}

struct Fixture {
    weight: Weight,
    view: ModuleView,
    exp: pwlab_core::chevrep::PolyMatrix,
    dim: usize,
}

fn fixtures(lab: &Lab, lam: &[i64], n: i64) -> Vec<Fixture> {
    let rs = lab.root_system();
    let top = rs.weight(lam.iter().map(|c| c * n).collect());
    rs.dominant_weights_below(&top)
        .unwrap()
        .into_iter()
        .map(|w| {
            let v = lab.rep(&w).unwrap();
            let view = ModuleView::principal(lab.principal(), &v);
            Fixture {
                exp: view.symbolic_exp().unwrap(),
                dim: v.dim(),
                weight: w,
                view,
            }
        })
        .collect()
}

fn ann_ranges() -> Vec<(Lab, Vec<Fixture>)> {
    let a1 = lab(TypeLetter::A, 1);
    let a2 = lab(TypeLetter::A, 2);
    let f1 = fixtures(&a1, &[2], 3);
    let f2 = fixtures(&a2, &[1, 1], 2);
    vec![(a1, f1), (a2, f2)]
}

fn annihilators() -> Outcome {
    let mut inclusions = 0;
    for (lab, fx) in ann_ranges() {
        for f in &fx {
            let u = TruncatedUea::new(&f.view.degrees, f.view.spread);
            let act = UeaAction::new(&u, &f.view);
            let top = top_covector(f.dim);
            for i in 0..f.dim {
                let c = check_ann_inclusion(&act, &top, &act, &unit_vec(f.dim, i));
                ensure(c.holds, || format!("inclusion fails for {:?} covector {i}", f.weight.coords))?;
                let mut v = unit_vec(f.dim, i);
                v[0] += q(1);
                ensure(check_ann_inclusion(&act, &v, &act, &top).holds, || {
                    format!("equality fails for {:?} covector {i}", f.weight.coords)
                })?;
                inclusions += 2;
            }
        }
        let rs = lab.root_system();
        for lo in &fx {
            for hi in &fx {
                if lo.weight == hi.weight || !rs.dominates(&hi.weight, &lo.weight) {
                    continue;
                }
                let u = TruncatedUea::new(&lo.view.degrees, lo.view.spread.max(hi.view.spread));
                let c = check_ann_inclusion(
                    &UeaAction::new(&u, &hi.view),
                    &top_covector(hi.dim),
                    &UeaAction::new(&u, &lo.view),
                    &top_covector(lo.dim),
                );
                ensure(c.holds, || format!("cross inclusion fails for {:?}", lo.weight.coords))?;
                inclusions += 1;
            }
        }
    }
    Ok(format!("{inclusions} inclusions"))
}

fn solvers() -> Outcome {
    let mut solved = 0;
    for (lab, fx) in ann_ranges() {
        let nvars = lab.principal().basis.len();
        for f in &fx {
            let u = TruncatedUea::new(&f.view.degrees, f.view.spread);
            let act = UeaAction::new(&u, &f.view);
            let top = top_covector(f.dim);
            for i in 0..f.dim {
                let vs = unit_vec(f.dim, i);
                for j in 0..f.dim {
                    let uu = unit_vec(f.dim, j);
                    let w = solve_toprow(&act, &vs, &uu).map_err(|e| e.to_string())?;
                    ensure(
                        entry_poly(&f.exp, &vs, &uu, nvars) == entry_poly(&f.exp, &top, &w, nvars),
                        || format!("toprow identity fails at {i},{j}"),
                    )?;
                    solved += 1;
                }
            }
            let vs = vec![q(1); f.dim];
            for j in 0..f.dim {
                let w = unit_vec(f.dim, j);
                let uu = solve_bijection(&act, &w, &vs).map_err(|e| e.to_string())?;
                ensure(
                    entry_poly(&f.exp, &vs, &uu, nvars) == entry_poly(&f.exp, &top, &w, nvars),
                    || format!("bijection identity fails at {j}"),
                )?;
                solved += 1;
            }
        }
        let rs = lab.root_system();
        for lo in &fx {
            for hi in &fx {
                if lo.weight == hi.weight || !rs.dominates(&hi.weight, &lo.weight) {
                    continue;
                }
                let u = TruncatedUea::new(&lo.view.degrees, lo.view.spread.max(hi.view.spread));
                let (al, ah) = (UeaAction::new(&u, &lo.view), UeaAction::new(&u, &hi.view));
                for j in 0..lo.dim {
                    let w = unit_vec(lo.dim, j);
                    let z = solve_telescope(&al, &w, &ah).map_err(|e| e.to_string())?;
                    ensure(
                        entry_poly(&lo.exp, &top_covector(lo.dim), &w, nvars)
                            == entry_poly(&hi.exp, &top_covector(hi.dim), &z, nvars),
                        || format!("telescope identity fails at {j}"),
                    )?;
                    solved += 1;
                }
            }
        }
    }
    Ok(format!("{solved} solutions"))
}

fn principal_isomorphism() -> Outcome {
    let mut dims = Vec::new();
    let a1 = lab(TypeLetter::A, 1);
    let lam = a1.lambda_from_root_coords(&[1]).unwrap();
    for (n, want) in [(1, 3), (2, 5), (3, 7)] {
        let r = phi_check(&a1, &lam, n).map_err(|e| e.to_string())?;
        ensure(r.passes() && r.injective && r.surjective, || format!("A1 n={n}: {r:?}"))?;
        ensure(r.flag_quotient == want && r.wonderful_quotient == want, || {
            format!("A1 n={n}: {} / {}", r.flag_quotient, r.wonderful_quotient)
        })?;
        dims.push(want);
    }
    let a2 = lab(TypeLetter::A, 2);
    let lam = a2.lambda_from_root_coords(&[1, 1]).unwrap();
    for n in 1..=2 {
        let r = phi_check(&a2, &lam, n).map_err(|e| e.to_string())?;
        let want = sl_centralizer_entry_span(3, n as usize);
        ensure(r.passes() && r.injective && r.surjective, || format!("A2 n={n}: {r:?}"))?;
        ensure(r.flag_quotient == want && r.wonderful_quotient == want, || {
            format!("A2 n={n}: {} / {} vs {want}", r.flag_quotient, r.wonderful_quotient)
        })?;
        dims.push(want);
    }
    Ok(format!("quotients {dims:?}"))
}

fn regular_isomorphism() -> Outcome {
    let mut out = Vec::new();
    for (t, l, lam, subset, degrees) in [
        (TypeLetter::A, 2, vec![1, 1], vec![0], vec![1]),
        (TypeLetter::A, 1, vec![1], vec![], vec![1, 2]),
    ] {
        let lab = lab(t, l);
        let (g, rs) = (lab.algebra(), lab.root_system());
        let w = lab.lambda_from_root_coords(&lam).unwrap();
        let re = regular_element(g, &subset, None).map_err(|e| e.to_string())?;
        let v = lab.rep(&w).unwrap();
        let blocks = restrict_to_levi(rs, &v, &re.subset);
        let h = find_general_translate(g, &v, &blocks, 0, 200).map_err(|e| e.to_string())?;
        for n in degrees {
            let r = psi_check(&lab, &w, n, &re, &h).map_err(|e| e.to_string())?;
            ensure(r.passes(), || format!("{t:?}{l} I={subset:?} n={n}: {r:?}"))?;
            out.push(r.flag_quotient);
        }
    }
    Ok(format!("quotients {out:?}"))
}

fn census() -> Outcome {
    let a2 = lab(TypeLetter::A, 2);
    let rows = orbit_census(a2.algebra(), a2.principal());
    let total: u64 = rows.iter().filter_map(|r| r.orbit_count).sum();
    ensure(rows.len() == 4 && rows.iter().all(|r| r.finite) && total == 4, || "A2 census".into())?;

    let a3 = lab(TypeLetter::A, 3);
    let rows = orbit_census(a3.algebra(), a3.principal());
    ensure(rows.len() == 8, || "A3 row count".into())?;
    for r in &rows {
        let oracle = sl_projection_oracle(4, &r.subset);
        ensure((r.dim_a, r.dim_pi) == oracle, || format!("A3 {:?}: {:?}", r.subset, oracle))?;
        ensure(r.finite == (r.subset != vec![0, 2]), || format!("A3 {:?} finiteness", r.subset))?;
    }
    let b2 = lab(TypeLetter::B, 2);
    ensure(orbit_census(b2.algebra(), b2.principal()).iter().all(|r| r.finite), || "B2 census".into())?;

    for l in 1..=4 {
        let lab = lab(TypeLetter::A, l);
        let rows = orbit_census(lab.algebra(), lab.principal());
        for r in &rows {
            ensure(r.finite == !derived_levi_not_simple(lab.root_system(), &r.subset), || {
                format!("A{l} {:?} disagrees with the simplicity criterion", r.subset)
            })?;
        }
        let infinite = rows.iter().any(|r| !r.finite);
        ensure(infinite == (l > 2), || format!("A{l} rank threshold"))?;
    }
    Ok("A2 4 orbits; A3 {1,3} infinite (2,1)".into())
}

fn cell_lemma() -> Outcome {
    let mut out = Vec::new();
    for (l, weyl) in [(2, 6), (3, 24)] {
        let lab = lab(TypeLetter::A, l);
        let cf = cell_filter(lab.algebra(), lab.principal()).map_err(|e| e.to_string())?;
        ensure(cf.weyl_order == weyl && cf.subsets.len() == 1 << l, || {
            format!("A{l}: {}/{}", cf.subsets.len(), cf.weyl_order)
        })?;
        ensure(cf.point_agreement && cf.symbolic_cells, || format!("A{l} membership"))?;
        out.push(format!("{}/{}", cf.subsets.len(), weyl));
    }
    Ok(out.join(" "))
}

fn multiplication() -> Outcome {
    let mut words = 0;
    for (t, l, pairs) in [
        (TypeLetter::A, 1, vec![(vec![0], vec![2]), (vec![2], vec![2]), (vec![2], vec![4])]),
        (TypeLetter::A, 2, vec![(vec![0, 0], vec![1, 1]), (vec![1, 1], vec![1, 1])]),
    ] {
        let lab = lab(t, l);
        let rs = lab.root_system();
        for (a, b) in pairs {
            let r = check_multiplication(&lab, &rs.weight(a), &rs.weight(b), 20, 0).map_err(|e| e.to_string())?;
            ensure(r.symbolic_ok && r.sampled_ok && r.sampled_words >= 20, || format!("{r:?}"))?;
            words += r.sampled_words;
        }
    }
    Ok(format!("{words} sampled words"))
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("pwlab-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run = |tag: &str| -> (Vec<u8>, Vec<u8>, Vec<u8>) {
        let json = dir.join(format!("{tag}.json"));
        let csv = dir.join(format!("{tag}.csv"));
        let census = Command::new(env!("CARGO_BIN_EXE_pwlab"))
            .args(["census", "--type", "A", "--rank", "3", "--seed", "3"])
            .arg("--out")
            .arg(&json)
            .arg("--csv")
            .arg(&csv)
            .env_remove("PWLAB_MAX_DIM")
            .output()
            .unwrap();
        assert!(census.status.success());
        let general = Command::new(env!("CARGO_BIN_EXE_pwlab"))
            .args(["general", "--type", "A", "--rank", "2", "--subset", "1", "--seed", "3"])
            .env_remove("PWLAB_MAX_DIM")
            .output()
            .unwrap();
        (std::fs::read(json).unwrap(), std::fs::read(csv).unwrap(), general.stdout)
    };
    let first = run("a");
    let second = run("b");
    ensure(first == second, || "outputs differ between runs".into())?;
    Ok(format!("{} + {} + {} bytes identical", first.0.len(), first.1.len(), first.2.len()))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("structural suite", 5, structural),
        ("representation suite", 30, representations),
        ("annihilator suite", 120, annihilators),
        ("solver suite", 180, solvers),
        ("principal isomorphism", 300, principal_isomorphism),
        ("regular isomorphism", 300, regular_isomorphism),
        ("orbit census", 30, census),
        ("cell lemma", 60, cell_lemma),
        ("multiplication law", 60, multiplication),
        ("determinism", 120, determinism),
    ];
    let mut failed = Vec::new();
    for (k, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*limit);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {limit} s limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        println!("{status} {:>2} {name}: {detail} ({:.2} s)", k + 1, elapsed.as_secs_f64());
        if status == "FAIL" {
            failed.push(k + 1);
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
