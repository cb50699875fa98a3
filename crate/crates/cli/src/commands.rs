use std::path::{Path, PathBuf};

use auslander::algebra::{cartan_matrix, Alg};
use auslander::correspond::{
    alpha, alpha_inv, gamma_roundtrip, o_bound, repdim_search, triple_roundtrip, verify_triple,
    Objective, SearchReport,
};
use auslander::homology::{dim_report, id, Verdict};
use auslander::mckay::mckay_quiver;
use auslander::modrep::{
    dual_regular, injective_module, is_injective, is_projective, iso, projective_module,
    regular_module, simple_module, Module,
};
use auslander::orthocat::{
    ar_quiver, brute_indecomposables, in_perp_t, knit_indecomposables, maximal_ortho_enumerative,
    Enumeration, OrthoTable, Refutation, Side, Subcat,
};
use auslander::{Error, Result};
use serde_json::json;

use crate::dot::{to_dot, DotQuiver};
use crate::format::{
    load_algebra, load_modules, load_table, module_object, parse_character, parse_module_arg,
};
use crate::report::{decided, dim_value, RunReport};

/// Largest universe for the exhaustive subset search in `orthogonal`.
const SUBSET_LIMIT: usize = 20;

#[derive(Clone, Debug)]
pub struct Common {
    pub seed: u64,
    pub cap: usize,
    pub max_indecs: usize,
    pub max_dim: usize,
}

impl Default for Common {
    fn default() -> Self {
        Common {
            seed: 0,
            cap: auslander::homology::DEFAULT_CAP,
            max_indecs: 200,
            max_dim: 64,
        }
    }
}

/// A finished run: the report and, for quiver commands, the DOT text.
pub struct Outcome {
    pub report: RunReport,
    pub dot: Option<String>,
}

fn run(
    command: &str,
    args: Vec<String>,
    c: &Common,
    body: impl FnOnce(&mut RunReport) -> Result<Option<String>>,
) -> Outcome {
    let start = std::time::Instant::now();
    let mut report = RunReport::new(command, args, c.seed);
    report.cap("cap", c.cap);
    let dot = match body(&mut report) {
        Ok(d) => d,
        Err(e) => {
            report.fail(&e);
            None
        }
    };
    report.timing_ms = start.elapsed().as_millis() as u64;
    Outcome { report, dot }
}

/// `P<v>`, `I<v>` or `S<v>` when the module is one of those, else `M<k>` in order of appearance.
pub fn module_names(a: &Alg, mods: &[Module], seed: u64) -> Result<Vec<String>> {
    let mut named: Vec<(String, Module)> = Vec::new();
    for (kind, make) in [
        ("P", projective_module as fn(&Alg, usize) -> Module),
        ("I", injective_module),
        ("S", simple_module),
    ] {
        for v in 0..a.n_vertices() {
            named.push((format!("{kind}{}", a.vertices[v]), make(a, v)));
        }
    }
    let mut out: Vec<String> = Vec::new();
    let mut k = 0;
    for m in mods {
        let mut name = None;
        for (n, x) in &named {
            if x.dimv == m.dimv && iso(x, m, seed)?.is_some() && !out.contains(n) {
                name = Some(n.clone());
                break;
            }
        }
        out.push(name.unwrap_or_else(|| {
            k += 1;
            format!("M{k}")
        }));
    }
    Ok(out)
}

fn knit(a: &Alg, c: &Common) -> Result<Enumeration> {
    knit_indecomposables(a, c.max_indecs, c.max_dim, c.seed)
}

fn require_complete(e: &Enumeration) -> Result<()> {
    if e.complete {
        Ok(())
    } else {
        Err(Error::IncompleteEnumeration)
    }
}

fn describe(names: &[String], mods: &[Module]) -> serde_json::Value {
    json!(names
        .iter()
        .zip(mods)
        .map(|(n, m)| json!({"name": n, "dimv": m.dimv, "dim": m.dim()}))
        .collect::<Vec<_>>())
}

fn describe_refutation(r: &Refutation, names: &dyn Fn(&Module) -> String) -> serde_json::Value {
    match r {
        Refutation::Ext { x, y, degree } => {
            json!({"kind": "ext", "x": names(x), "y": names(y), "degree": degree})
        }
        Refutation::Missing { z, side } => json!({
            "kind": "missing",
            "z": names(z),
            "dimv": z.dimv,
            "side": match side { Side::Right => "C ⊥ Z", Side::Left => "Z ⊥ C" },
        }),
        Refutation::NotInB(x) => json!({"kind": "not_in_B", "x": names(x)}),
    }
}

pub fn invariants(alg: &Path, max_m: usize, max_n: usize, c: &Common) -> Outcome {
    let args = vec![
        alg.display().to_string(),
        format!("--max-m={max_m}"),
        format!("--max-n={max_n}"),
    ];
    run("invariants", args, c, |r| {
        let a = load_algebra(alg)?;
        let d = dim_report(&a, max_m, max_n, c.cap)?;
        r.result("dim", a.dim());
        r.result("vertices", &a.vertices);
        r.result("cartan", cartan_matrix(&a));
        r.result("gldim", dim_value(d.gldim));
        r.result("gldim_op", dim_value(d.gldim_op));
        r.result("domdim", dim_value(d.domdim));
        r.result("domdim_op", dim_value(d.domdim_op));
        r.result("selfinjective", is_injective(&regular_module(&a)));
        r.result(
            "mn_table",
            d.mn_table
                .iter()
                .map(|((m, n), v)| json!({"m": m, "n": n, "two_sided": v.to_string()}))
                .collect::<Vec<_>>(),
        );
        r.result("gorenstein_profile", dim_value(d.gorenstein_profile));
        r.verdict("gldim_decided", decided(d.gldim).and(decided(d.gldim_op)));
        r.verdict(
            "domdim_decided",
            decided(d.domdim).and(decided(d.domdim_op)),
        );
        let table = Verdict::all(d.mn_table.iter().map(|(_, v)| {
            if *v == Verdict::Indeterminate {
                *v
            } else {
                Verdict::True
            }
        }));
        r.verdict("mn_table_decided", table);
        Ok(None)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndecMethod {
    Knit,
    Brute,
}

pub fn indecs(alg: &Path, method: IndecMethod, dim_cap: usize, c: &Common) -> Outcome {
    let args = vec![
        alg.display().to_string(),
        format!("--method={method:?}").to_lowercase(),
        format!("--dim-cap={dim_cap}"),
    ];
    run("indecs", args, c, |r| {
        let a = load_algebra(alg)?;
        let (mods, complete) = match method {
            IndecMethod::Knit => {
                r.cap("max_indecs", c.max_indecs);
                r.cap("max_dim", c.max_dim);
                let e = knit(&a, c)?;
                let v = if e.complete {
                    Verdict::True
                } else {
                    Verdict::Indeterminate
                };
                (e.modules, v)
            }
            IndecMethod::Brute => {
                r.cap("dim_cap", dim_cap);
                (brute_indecomposables(&a, dim_cap, c.seed)?, Verdict::True)
            }
        };
        let (e, names) = sorted_by_name(
            &a,
            Enumeration {
                modules: mods,
                complete: true,
            },
            c.seed,
        )?;
        let mods = e.modules;
        r.result("count", mods.len());
        r.result(
            "indecomposables",
            names
                .iter()
                .zip(&mods)
                .map(|(n, m)| {
                    json!({
                        "name": n,
                        "dimv": m.dimv,
                        "projective": is_projective(m),
                        "injective": is_injective(m),
                        "module": module_object(m, Some(n.clone())),
                    })
                })
                .collect::<Vec<_>>(),
        );
        r.verdict(
            if method == IndecMethod::Knit {
                "complete"
            } else {
                "exhausted_to_dim_cap"
            },
            complete,
        );
        Ok(None)
    })
}

/// Reorders an enumeration by module name, for canonical output.
fn sorted_by_name(a: &Alg, e: Enumeration, seed: u64) -> Result<(Enumeration, Vec<String>)> {
    let names = module_names(a, &e.modules, seed)?;
    let mut order: Vec<usize> = (0..names.len()).collect();
    order.sort_by(|&x, &y| names[x].cmp(&names[y]));
    let modules = order.iter().map(|&i| e.modules[i].clone()).collect();
    Ok((
        Enumeration {
            modules,
            complete: e.complete,
        },
        order.iter().map(|&i| names[i].clone()).collect(),
    ))
}

/// Indecomposables of `B = ^⊥T`, with the bound used for `id T`.
fn category_b(a: &Alg, t: &Module, c: &Common) -> Result<(Enumeration, usize)> {
    let m = id(t, c.cap)
        .exact()
        .ok_or_else(|| Error::Inconclusive(format!("id T exceeds the cap {}", c.cap)))?;
    let all = knit(a, c)?;
    require_complete(&all)?;
    let mut modules = Vec::new();
    for x in all.modules {
        if in_perp_t(&x, t, m, c.cap)? {
            modules.push(x);
        }
    }
    Ok((
        Enumeration {
            modules,
            complete: true,
        },
        m,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthoMode {
    Enumerate,
    Verify,
}

pub fn orthogonal(
    alg: &Path,
    n: usize,
    cotilting: Option<&str>,
    mode: OrthoMode,
    modules: Option<&Path>,
    c: &Common,
) -> Outcome {
    let mut args = vec![
        alg.display().to_string(),
        format!("--n={n}"),
        format!("--mode={mode:?}").to_lowercase(),
    ];
    args.extend(cotilting.map(|t| format!("--cotilting={t}")));
    args.extend(modules.map(|m| format!("--modules={}", m.display())));
    run("orthogonal", args, c, |r| {
        if n == 0 {
            return Err(Error::Input("--n must be at least 1".into()));
        }
        let a = load_algebra(alg)?;
        let t = match cotilting {
            Some(s) => parse_module_arg(s, &a)?,
            None => dual_regular(&a),
        };
        let (b, m) = category_b(&a, &t, c)?;
        let (b, names) = sorted_by_name(&a, b, c.seed)?;
        let name_of = |x: &Module| match b.position(x) {
            Some(i) => names[i].clone(),
            None => format!("{:?}", x.dimv),
        };
        r.result("id_T", m);
        r.result("B", describe(&names, &b.modules));
        match mode {
            OrthoMode::Enumerate => {
                if b.len() > SUBSET_LIMIT {
                    return Err(Error::Unsupported(format!(
                        "{} indecomposables exceed the subset limit {SUBSET_LIMIT}",
                        b.len()
                    )));
                }
                let table = OrthoTable::new(&b.modules, n - 1);
                let universe: Vec<usize> = (0..b.len()).collect();
                let mut found = table.maximal_subsets(&universe);
                found.sort();
                let sizes: Vec<usize> = found.iter().map(Vec::len).collect();
                r.result("count", found.len());
                r.result("sizes", &sizes);
                r.result(
                    "subcategories",
                    found
                        .iter()
                        .map(|s| s.iter().map(|&i| names[i].clone()).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                );
                r.verdict("enumeration_complete", Verdict::True);
                r.verdict("equal_sizes", sizes.windows(2).all(|w| w[0] == w[1]).into());
            }
            OrthoMode::Verify => {
                let path =
                    modules.ok_or_else(|| Error::Input("verify mode needs --modules".into()))?;
                let mods = load_modules(path, &a)?;
                let sub = Subcat::new(&mods, c.seed)?;
                let rep = maximal_ortho_enumerative(&sub, n, &b)?;
                r.result(
                    "generators",
                    sub.gens().iter().map(name_of).collect::<Vec<_>>(),
                );
                r.verdict("maximal_orthogonal", rep.verdict.into());
                if let Some(w) = &rep.witness {
                    r.witness("refutation", describe_refutation(w, &name_of));
                }
            }
        }
        Ok(None)
    })
}

#[derive(Clone, Debug)]
pub struct TripleArgs {
    pub modules: PathBuf,
    pub cotilting: Option<String>,
    pub m: usize,
    pub n: usize,
    pub quasi: bool,
    pub roundtrip: bool,
}

pub fn auslander_verify(alg: &Path, t: &TripleArgs, c: &Common) -> Outcome {
    let mut args = vec![
        "verify".into(),
        alg.display().to_string(),
        format!("--modules={}", t.modules.display()),
        format!("--m={}", t.m),
        format!("--n={}", t.n),
    ];
    args.extend(t.cotilting.as_ref().map(|s| format!("--cotilting={s}")));
    args.extend(t.quasi.then(|| "--quasi".to_string()));
    args.extend(t.roundtrip.then(|| "--roundtrip".to_string()));
    run("auslander", args, c, |r| {
        let a = load_algebra(alg)?;
        let mods = load_modules(&t.modules, &a)?;
        let tm = match &t.cotilting {
            Some(s) => parse_module_arg(s, &a)?,
            None => dual_regular(&a),
        };
        let check = verify_triple(&mods, &tm, t.m, t.n, t.quasi, c.cap, c.seed)?;
        r.result("generators", check.triple.m.len());
        r.verdict("cotilting", check.cotilting.valid);
        r.verdict("in_B", check.in_b);
        r.verdict("maximality", check.maximality);
        if let Some(e) = check.enumerative {
            r.result("enumerative", e);
        }
        if let Some(h) = &check.homological {
            r.result("homological", h.verdict.to_string());
            if let Some(g) = h.gldim {
                r.result("gldim_gamma", dim_value(g));
            }
        }
        if let Some(why) = &check.refutation {
            r.witness("refutation", why);
        }
        r.verdict("triple", check.verdict);
        if t.roundtrip && check.verdict == Verdict::True {
            let img = alpha(&check.triple, c.cap, c.seed)?;
            r.result("gamma_dim", img.gamma().dim());
            r.verdict("extension_pair", img.pair.valid);
            r.verdict("superprojective", img.superprojective.valid);
            r.verdict(
                "superprojective_self_test",
                img.superprojective.agree.into(),
            );
            let inv = alpha_inv(img.gamma(), &img.p, &img.i, img.m, img.n, c.cap, c.seed)?;
            r.result("reconstructed_dim", inv.lam.alg.dim());
            let tr = triple_roundtrip(&check.triple, &img, &inv, c.seed)?;
            let gr = gamma_roundtrip(&img, &inv, c.seed)?;
            r.verdict("triple_roundtrip", tr.valid.into());
            r.verdict("gamma_roundtrip", gr.valid.into());
        }
        Ok(None)
    })
}

pub fn auslander_reconstruct(
    gamma: &Path,
    p: &str,
    i: &str,
    m: usize,
    n: usize,
    c: &Common,
) -> Outcome {
    let args = vec![
        "reconstruct".into(),
        gamma.display().to_string(),
        format!("--p={p}"),
        format!("--i={i}"),
        format!("--m={m}"),
        format!("--n={n}"),
    ];
    run("auslander", args, c, |r| {
        let g = load_algebra(gamma)?;
        let pm = parse_module_arg(p, &g)?;
        let im = parse_module_arg(i, &g)?;
        let inv = alpha_inv(&g, &pm, &im, m, n, c.cap, c.seed)?;
        r.result(
            "q_vertices",
            inv.q_vertices
                .iter()
                .map(|&v| g.vertices[v].clone())
                .collect::<Vec<_>>(),
        );
        r.result("lambda_dim", inv.lam.alg.dim());
        r.result("lambda_vertices", inv.lam.alg.n_vertices());
        r.result("lambda_cartan", cartan_matrix(&inv.lam.alg));
        r.result(
            "generator_dimvs",
            inv.m_gens
                .iter()
                .map(|x| x.dimv.clone())
                .collect::<Vec<_>>(),
        );
        r.result("t_dimv", &inv.t.dimv);
        r.verdict("extension_pair", inv.pair.valid);
        r.verdict("superprojective", inv.superprojective.valid);
        r.verdict("triple", inv.check.verdict);
        Ok(None)
    })
}

fn search_results(r: &mut RunReport, rep: &SearchReport, names: &[String]) {
    match rep.objective {
        Objective::Value(v) => r.result("value", v),
        Objective::AtLeastCap(v) => r.result("value", format!(">={v}")),
        Objective::Infeasible => r.result("value", "infeasible"),
    }
    r.result("candidates", rep.candidates);
    r.result("capped", rep.capped);
    if let Some(w) = &rep.witness {
        let mut w: Vec<String> = w.iter().map(|&i| names[i].clone()).collect();
        w.sort();
        r.witness("optimum", w);
    }
    r.verdict(
        "search_decided",
        match rep.objective {
            Objective::Value(_) => Verdict::True,
            Objective::AtLeastCap(_) => Verdict::Indeterminate,
            Objective::Infeasible => Verdict::False,
        },
    );
}

pub fn repdim(alg: &Path, n: usize, c: &Common) -> Outcome {
    run(
        "repdim",
        vec![alg.display().to_string(), format!("--n={n}")],
        c,
        |r| {
            let a = load_algebra(alg)?;
            let e = knit(&a, c)?;
            require_complete(&e)?;
            let (e, names) = sorted_by_name(&a, e, c.seed)?;
            let rep = repdim_search(&a, n, &e, c.cap, c.seed)?;
            search_results(r, &rep, &names);
            Ok(None)
        },
    )
}

pub fn obound(alg: &Path, c: &Common) -> Outcome {
    run("obound", vec![alg.display().to_string()], c, |r| {
        let a = load_algebra(alg)?;
        let e = knit(&a, c)?;
        require_complete(&e)?;
        let (e, names) = sorted_by_name(&a, e, c.seed)?;
        let rep = o_bound(&e)?;
        search_results(r, &rep, &names);
        Ok(None)
    })
}

pub fn mckay(
    table: &Path,
    character: Option<&str>,
    d: Option<usize>,
    det: Option<&str>,
    c: &Common,
) -> Outcome {
    let mut args = vec![table.display().to_string()];
    args.extend(character.map(|s| format!("--character={s}")));
    args.extend(d.map(|d| format!("--d={d}")));
    args.extend(det.map(|s| format!("--determinant={s}")));
    run("mckay", args, c, |r| {
        let (t, rep) = load_table(table)?;
        let (file_chi, file_d, file_det) = match rep {
            Some((x, d, s)) => (Some(x), Some(d), s),
            None => (None, None, None),
        };
        let chi = match character {
            Some(s) => parse_character(s)?,
            None => file_chi.ok_or_else(|| {
                Error::Input("no representation in the table file; pass --character".into())
            })?,
        };
        let d = d
            .or(file_d)
            .ok_or_else(|| Error::Input("the degree d is not given".into()))?;
        let det = match det {
            Some(s) => Some(parse_character(s)?),
            None => file_det,
        };
        let g = mckay_quiver(&t, &chi, d, det.as_deref())?;
        r.result("vertices", &g.labels);
        r.result("arrow_mult", &g.arrow_mult);
        r.result("arrows", g.arrow_count());
        r.result(
            "dotted",
            g.dotted
                .iter()
                .map(|&x| g.labels[x].clone())
                .collect::<Vec<_>>(),
        );
        r.result(
            "determinant",
            g.determinant
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
        );
        r.verdict("integral_multiplicities", Verdict::True);
        r.verdict("dotted_permutation", Verdict::True);
        let dot = to_dot(&DotQuiver {
            name: "mckay",
            labels: &g.labels,
            arrow_mult: &g.arrow_mult,
            dotted: g.dotted.iter().map(|&x| Some(x)).collect(),
        });
        Ok(Some(dot))
    })
}

pub fn arquiver(alg: &Path, modules: Option<&Path>, n: usize, c: &Common) -> Outcome {
    let mut args = vec![alg.display().to_string(), format!("--n={n}")];
    args.extend(modules.map(|m| format!("--modules={}", m.display())));
    run("arquiver", args, c, |r| {
        let a = load_algebra(alg)?;
        let mods = match modules {
            Some(p) => load_modules(p, &a)?,
            None => {
                let e = knit(&a, c)?;
                require_complete(&e)?;
                sorted_by_name(&a, e, c.seed)?.0.modules
            }
        };
        let sub = Subcat::new(&mods, c.seed)?;
        let names = module_names(&a, sub.gens(), c.seed)?;
        let q = ar_quiver(&sub, n, Some(names.as_slice()), c.seed)?;
        r.result("vertices", describe(&names, sub.gens()));
        r.result("arrow_mult", &q.arrow_mult);
        r.result("arrows", q.arrow_count());
        r.result(
            "dotted",
            q.dotted
                .iter()
                .map(|x| x.map(|t| names[t].clone()))
                .collect::<Vec<_>>(),
        );
        r.verdict("radical_layers_agree", Verdict::True);
        let dot = to_dot(&DotQuiver {
            name: "ar",
            labels: &names,
            arrow_mult: &q.arrow_mult,
            dotted: q.dotted.clone(),
        });
        Ok(Some(dot))
    })
}
