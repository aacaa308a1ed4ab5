//! The path-algebra workbench.

use std::fmt::Write as _;
use std::path::PathBuf;

use pathalg::highest::{self, listing_order};
use pathalg::hom::rep_isomorphic;
use pathalg::report::{coefficient_quiver, four_subspace_report};
use pathalg::{Algebra, FieldSpec, Fp, Presentation, Rep, Scalar, Q};
use serde_json::{json, Value};

use crate::{CliError, CliResult, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    Basis,
    Projectives,
    Tilting,
    Rigidity,
    Dual,
    Subspaces,
    Aprime,
    Dot,
}

#[derive(Clone, Debug)]
pub struct AppendixArgs {
    pub which: Which,
    /// A built-in presentation name or a path to a JSON presentation.
    pub presentation: Option<String>,
    pub field: Option<FieldSpec>,
    /// Vertex whose tilting module `dot` draws; defaults to the largest.
    pub vertex: Option<String>,
    pub out: Option<PathBuf>,
}

fn load(args: &AppendixArgs) -> Result<(String, Presentation), CliError> {
    let default = if args.which == Which::Aprime {
        "A-prime"
    } else {
        "A-appendix"
    };
    let name = args
        .presentation
        .clone()
        .unwrap_or_else(|| default.to_string());
    let pres = if Presentation::NAMES.contains(&name.as_str()) {
        Presentation::named(&name)?
    } else {
        let s = std::fs::read_to_string(&name)
            .map_err(|e| CliError::usage(format!("cannot read presentation {name:?}: {e}")))?;
        Presentation::from_json(&s)?
    };
    Ok(match args.field {
        Some(f) => (name, pres.with_field(f)),
        None => (name, pres),
    })
}

pub fn appendix(args: &AppendixArgs) -> CliResult {
    if args.which == Which::Dot && args.out.is_none() {
        return Err(CliError::usage("appendix dot needs --out PATH"));
    }
    let (name, pres) = load(args)?;
    match pres.field {
        FieldSpec::Rationals => run::<Q>(args, &name, &pres),
        FieldSpec::Prime(2) => run::<Fp<2>>(args, &name, &pres),
        FieldSpec::Prime(3) => run::<Fp<3>>(args, &name, &pres),
        FieldSpec::Prime(5) => run::<Fp<5>>(args, &name, &pres),
        FieldSpec::Prime(7) => run::<Fp<7>>(args, &name, &pres),
        f => Err(CliError::usage(format!(
            "unsupported field {f}; use Q, F2, F3, F5 or F7"
        ))),
    }
}

fn layers<F: Scalar>(m: &Rep<F>) -> (Vec<Vec<String>>, Vec<Vec<String>>) {
    (m.radical_layers().layers, m.socle_layers().layers)
}

fn show_layers(l: &[Vec<String>]) -> String {
    let parts: Vec<String> = l.iter().map(|x| format!("{{{}}}", x.join(","))).collect();
    format!("[{}]", parts.join(","))
}

fn show_mults(m: &[(String, usize)]) -> String {
    let parts: Vec<String> = m.iter().map(|(v, k)| format!("{v}:{k}")).collect();
    parts.join(" ")
}

fn run<F: Scalar>(args: &AppendixArgs, name: &str, pres: &Presentation) -> CliResult {
    let alg: Algebra<F> = Algebra::build(pres)?;
    let order = listing_order(&alg);
    let label = |v: usize| alg.quiver.vertices[v].clone();
    let top = *order
        .last()
        .ok_or_else(|| CliError::usage("presentation has no vertices"))?;
    let mut text = String::new();
    let data: Value = match args.which {
        Which::Basis => {
            let by_len: Vec<Vec<String>> = (0..alg.nilpotency)
                .map(|l| {
                    (0..alg.dim())
                        .filter(|&i| alg.basis[i].len() == l)
                        .map(|i| alg.show(i))
                        .collect()
                })
                .collect();
            let _ = writeln!(
                text,
                "{} basis elements, nilpotency {}",
                alg.dim(),
                alg.nilpotency
            );
            for (l, v) in by_len.iter().enumerate() {
                let _ = writeln!(text, "length {l} ({}): {}", v.len(), v.join(" "));
            }
            json!({
                "dim": alg.dim(),
                "nilpotency": alg.nilpotency,
                "strata": alg.strata(),
                "by_length": by_len,
            })
        }
        Which::Projectives => {
            let mut out = Vec::new();
            for v in 0..alg.quiver.num_vertices() {
                let p = alg.projective(v);
                let (rad, soc) = layers(&p);
                let _ = writeln!(
                    text,
                    "P({}): dim {}; radical layers {}",
                    label(v),
                    p.dim(),
                    show_layers(&rad)
                );
                out.push(json!({
                    "vertex": label(v),
                    "dim": p.dim(),
                    "radical_layers": rad,
                    "socle_layers": soc,
                    "composition": p.composition(),
                }));
            }
            json!({ "projectives": out })
        }
        Which::Tilting | Which::Aprime => {
            let vs: Vec<usize> = if args.which == Which::Aprime {
                vec![top]
            } else {
                order.clone()
            };
            let mut out = Vec::new();
            for &v in &vs {
                let t = highest::build_tilting(&alg, &order, v)?;
                let (rad, soc) = layers(&t);
                let dm = highest::delta_multiplicities(&alg, &order, &t)?;
                let nm = highest::nabla_multiplicities(&alg, &order, &t);
                let ext_zero = order
                    .iter()
                    .all(|&w| highest::ext1_dim(&alg, &order, w, &t) == 0);
                let _ = writeln!(
                    text,
                    "T({}): dim {}; Δ-multiplicities {}; radical layers {}",
                    label(v),
                    t.dim(),
                    show_mults(&dm),
                    show_layers(&rad)
                );
                out.push(json!({
                    "vertex": label(v),
                    "dim": t.dim(),
                    "radical_layers": rad,
                    "socle_layers": soc,
                    "delta_multiplicities": dm,
                    "nabla_multiplicities": nm,
                    "ext1_vanishes": ext_zero,
                }));
            }
            json!({ "tilting": out })
        }
        Which::Rigidity => {
            let mut out = Vec::new();
            for &v in &order {
                let t = highest::build_tilting(&alg, &order, v)?;
                let rigid = t.is_rigid();
                let ll = t.loewy_length();
                let word = if rigid { "rigid" } else { "NOT rigid" };
                let _ = writeln!(text, "T({}): {word}; Loewy length {ll}", label(v));
                out.push(json!({ "module": format!("T({})", label(v)), "rigid": rigid, "loewy_length": ll }));
            }
            json!({ "modules": out })
        }
        Which::Dual => {
            let mut out = Vec::new();
            for &v in &order {
                let t = highest::build_tilting(&alg, &order, v)?;
                let self_dual = rep_isomorphic(&t, &alg.dual(&t)?);
                let d = highest::delta_module(&alg, &order, v);
                let n = highest::nabla_module(&alg, &order, v)?;
                let delta_is_nabla = rep_isomorphic(&d, &n);
                let _ = writeln!(
                    text,
                    "T({0}) self-dual: {1}; Δ({0}) ≅ ∇({0}): {2}",
                    label(v),
                    yes(self_dual),
                    yes(delta_is_nabla)
                );
                out.push(json!({
                    "vertex": label(v),
                    "tilting_self_dual": self_dual,
                    "delta_is_nabla": delta_is_nabla,
                }));
            }
            let d = highest::delta_module(&alg, &order, top);
            let n = highest::nabla_module(&alg, &order, top)?;
            let rad_d = d.restrict(&d.rad_of(&d.full())).0;
            let n_soc = n.quotient(&n.soc_over(&n.zero_sub())).0;
            let rad_fact = rep_isomorphic(&rad_d, &n_soc);
            let _ = writeln!(
                text,
                "rad Δ({0}) ≅ ∇({0})/soc: {1}",
                label(top),
                yes(rad_fact)
            );
            json!({ "modules": out, "rad_delta_top_is_nabla_mod_socle": rad_fact })
        }
        Which::Subspaces => {
            let t = highest::build_tilting(&alg, &order, top)?;
            let r = four_subspace_report(&t)?;
            let _ = writeln!(
                text,
                "V = rad T({0}) / soc T({0}) at 10: dim {1}",
                label(top),
                r.dim_v
            );
            let _ = writeln!(text, "dim U1..U4 = {:?}", r.dims);
            let _ = writeln!(
                text,
                "U1∩U2: dim {}; equals Im γγ': {}",
                r.meet12_dim,
                yes(r.meet12_is_image)
            );
            let _ = writeln!(
                text,
                "U3+U4: dim {}; equals Ker γγ': {}",
                r.join34_dim,
                yes(r.join34_is_kernel)
            );
            let _ = writeln!(text, "U1∩U2 ⊆ U3+U4: {}", yes(r.meet_below_join));
            let _ = writeln!(
                text,
                "Ui∩Uj = 0 for i∈{{1,2}}, j∈{{3,4}}: {}",
                yes(r.cross_meets_zero)
            );
            let _ = writeln!(text, "U1+U2 = V: {}", yes(r.join12_is_v));
            let _ = writeln!(text, "pairwise distinct: {}", yes(r.all_distinct));
            serde_json::to_value(&r).expect("serializable")
        }
        Which::Dot => {
            let v = match &args.vertex {
                Some(l) => alg.vertex(l)?,
                None => top,
            };
            let t = highest::build_tilting(&alg, &order, v)?;
            let cq = coefficient_quiver(&t);
            let path = args.out.clone().expect("checked above");
            std::fs::write(&path, cq.to_dot(&format!("T({})", label(v))))
                .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
            let _ = writeln!(
                text,
                "wrote T({}) with {} nodes and {} edges to {}",
                label(v),
                cq.nodes.len(),
                cq.edges.len(),
                path.display()
            );
            json!({
                "module": format!("T({})", label(v)),
                "path": path.display().to_string(),
                "nodes": cq.nodes.len(),
                "edges": cq.edges.len(),
            })
        }
    };
    let payload = json!({
        "subcommand": format!("{:?}", args.which).to_lowercase(),
        "presentation": name,
        "field": pres.field.to_string(),
        "data": data,
    });
    Ok(Report::ok(payload, text, Vec::new()))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
