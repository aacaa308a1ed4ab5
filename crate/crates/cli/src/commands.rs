use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use sl3tensor::characters::{self, Character, Provenance};
use sl3tensor::decompose::{self, Decomposition, Options};
use sl3tensor::family::Atom;
use sl3tensor::{verify, weights, Prime, Weight};

use crate::{exit, CliError, CliResult, Report};

pub fn decompose(
    p: Prime,
    lambda: Weight,
    mu: Weight,
    canonicalize: bool,
    check: bool,
) -> CliResult {
    decompose::check_weights(lambda, mu)?;
    let mut d = decompose::tensor_decompose_with(p, lambda, mu, Options { canonicalize })?;
    if check {
        d.verified = verify::check_decomposition(&d)?;
    }
    let text = render_decomposition(&d, check);
    let errata = d.errata.clone();
    let payload = serde_json::to_value(&d).expect("serializable");
    if check && !d.verified {
        return Ok(Report::failed(payload, text, errata, exit::VERIFICATION));
    }
    Ok(Report::ok(payload, text, errata))
}

fn render_decomposition(d: &Decomposition, checked: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "p={}: L{} ⊗ L{} = {}", d.p.get(), d.lambda, d.mu, d);
    for (x, flag) in d.summands.iter().zip(&d.indecomposable_flags) {
        let tag = if *flag {
            "indecomposable"
        } else {
            "decomposable"
        };
        let _ = writeln!(s, "  {x}  [{tag}]");
    }
    let verdict = match (checked, d.verified) {
        (false, _) => "not checked",
        (true, true) => "yes",
        (true, false) => "NO",
    };
    let _ = writeln!(s, "verified: {verdict}");
    for e in &d.errata {
        let _ = writeln!(s, "erratum: {e}");
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum CharKind {
    Simple,
    Weyl,
    Tilting,
    Atom,
}

#[derive(Serialize)]
struct CharPayload {
    p: Prime,
    kind: CharKind,
    label: String,
    dim: i64,
    weyl_multiplicities: Vec<(Weight, i64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<Provenance>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<(Weight, i64)>>,
}

/// Dimension and Weyl-basis expansion of a character; `target` is a weight
/// `a,b`, or an atom such as `T(2,2)` or `M` for the `atom` kind.
pub fn char_query(p: Prime, kind: CharKind, target: &str, full: bool) -> CliResult {
    let weight = || -> Result<Weight, CliError> {
        let w: Weight = target.parse().map_err(CliError::usage)?;
        Ok(w.check_dominant()?)
    };
    let (label, c, provenance): (String, Character, Option<Provenance>) = match kind {
        CharKind::Simple => {
            let w = weight()?;
            (
                format!("L{w}"),
                (*characters::simple_character(p, w)?).clone(),
                None,
            )
        }
        CharKind::Weyl => {
            let w = weight()?;
            (
                format!("Δ{w}"),
                (*characters::weyl_character(w)?).clone(),
                None,
            )
        }
        CharKind::Tilting => {
            let w = weight()?;
            let (c, prov) = characters::tilting_character_with_provenance(p, w)?;
            (format!("T{w}"), (*c).clone(), Some(prov))
        }
        CharKind::Atom => {
            let a: Atom = target.parse().map_err(CliError::usage)?;
            let a = a.normalized(p);
            (
                a.to_string(),
                (*characters::family_character(p, &a)?).clone(),
                None,
            )
        }
    };
    let expr = characters::into_weyl_basis(&c)?;
    let payload = CharPayload {
        p,
        kind,
        label: label.clone(),
        dim: c.dim(),
        weyl_multiplicities: expr.iter().rev().collect(),
        provenance,
        weights: full.then(|| c.iter().rev().collect()),
    };
    let mut text = String::new();
    let _ = write!(text, "p={}: {label}: dim {}", p.get(), c.dim());
    if let Some(prov) = provenance {
        let _ = write!(text, " ({prov})");
    }
    let _ = writeln!(text);
    let _ = writeln!(text, "  = {expr}");
    let noun = if expr.len() == 1 { "term" } else { "terms" };
    let _ = writeln!(text, "  {} Weyl {noun}", expr.len());
    if full {
        for (w, k) in c.iter().rev() {
            let _ = writeln!(text, "  {w}: {k}");
        }
    }
    Ok(Report::ok(
        serde_json::to_value(payload).expect("serializable"),
        text,
        Vec::new(),
    ))
}

/// Checks every table line and identity; with `corrupt`, the first table
/// line is damaged on purpose.
pub fn verify_tables(p: Prime, corrupt: bool) -> CliResult {
    let lines = verify::verify_tables(p, corrupt)?;
    let failed: Vec<&verify::LineReport> = lines.iter().filter(|l| !l.passed).collect();
    let mut text = String::new();
    for l in &lines {
        let mark = if l.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "{mark} {} {}: {}", l.kind, l.label, l.detail);
    }
    let _ = writeln!(
        text,
        "{} of {} lines passed",
        lines.len() - failed.len(),
        lines.len()
    );
    let payload = json!({
        "p": p,
        "total": lines.len(),
        "failed": failed.len(),
        "lines": lines,
    });
    if failed.is_empty() {
        Ok(Report::ok(payload, text, Vec::new()))
    } else {
        Ok(Report::failed(
            payload,
            text,
            Vec::new(),
            exit::VERIFICATION,
        ))
    }
}

pub fn linkage(p: Prime, ws: &[Weight]) -> CliResult {
    let set: BTreeSet<Weight> = ws
        .iter()
        .map(|w| w.check_dominant())
        .collect::<Result<_, _>>()?;
    let classes = weights::linkage_classes(p, &set)?;
    let mut text = String::new();
    for c in &classes {
        let items: Vec<String> = c.iter().map(Weight::to_string).collect();
        let _ = writeln!(text, "{{{}}}", items.join(", "));
    }
    let payload: Value = json!({ "p": p, "classes": classes });
    Ok(Report::ok(payload, text, Vec::new()))
}
