//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use pathalg::highest::{self, listing_order};
use pathalg::hom::rep_isomorphic;
use pathalg::report::four_subspace_report;
use pathalg::{Algebra, Presentation, Rep, Q};
use sl3tensor::characters::{self, WeylExpr};
use sl3tensor::decompose::{self, Decomposition, Options};
use sl3tensor::weights::{self, Flip, ZERO};
use sl3tensor::{verify, Error, Prime, Weight};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn w(a: i64, b: i64) -> Weight {
    Weight::new(a, b)
}

fn weights_upto(max: i64) -> impl Iterator<Item = Weight> {
    (0..=max).flat_map(move |a| (0..=max).map(move |b| w(a, b)))
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn table_verification() -> Outcome {
    for (p, lines, want) in [(Prime::TWO, 4, 16), (Prime::THREE, 21, 66)] {
        ensure!(
            sl3tensor::family::restricted_table(p).len() == lines,
            "p={} line count",
            p.get()
        );
        let r = verify::verify_tables(p, false).map_err(|e| e.to_string())?;
        ensure!(
            r.len() == want,
            "p={}: {} checks, expected {want}",
            p.get(),
            r.len()
        );
        let tables: Vec<_> = r.iter().filter(|l| l.kind == "table").collect();
        if let Some(bad) = tables.iter().find(|l| !l.passed) {
            return Err(format!("{} {}", bad.label, bad.detail));
        }
        let bad = verify::verify_tables(p, true).map_err(|e| e.to_string())?;
        ensure!(
            bad.iter().filter(|l| !l.passed).count() == 1,
            "corruption not detected"
        );
    }
    Ok(())
}

fn identity_lists() -> Outcome {
    for (p, n) in [(Prime::TWO, 6), (Prime::THREE, 21)] {
        let ids = verify::identities(p);
        ensure!(ids.len() == n, "p={}: {} identities", p.get(), ids.len());
        for id in &ids {
            let r = verify::check_identity(p, id).map_err(|e| e.to_string())?;
            ensure!(r.passed, "{}: got {}", r.label, r.detail);
        }
    }
    let id21 = &verify::identities(Prime::THREE)[20];
    ensure!(id21.rhs.get(ZERO) == 15, "coefficient of χ_p(0,0) in (21)");
    Ok(())
}

fn first_line(p: Prime, l: Weight, m: Weight) -> Result<String, String> {
    let r = sl3tensor_cli::finish(sl3tensor_cli::decompose(p, l, m, true, true));
    ensure!(r.code == 0, "p={} {l} {m}: exit {}", p.get(), r.code);
    Ok(r.text.lines().next().unwrap_or_default().to_string())
}

fn worked_examples() -> Outcome {
    let cases = [
        (Prime::TWO, w(3, 0), w(3, 2), "T(2,0) ⊗ T(2,1)^[1]"),
        (Prime::TWO, w(3, 0), w(3, 1), "T(6,1)"),
        (Prime::THREE, w(3, 1), w(1, 3), "T(1,1) ⊗ T(1,1)^[1]"),
        (Prime::THREE, w(4, 0), w(8, 8), "T(12,8)"),
        (
            Prime::THREE,
            w(2, 2),
            w(5, 2),
            "T(7,4) ⊕ T(6,3) ⊕ T(8,2) ⊕ T(2,5) ⊕ T(5,5) ⊕ 3T(5,2)",
        ),
    ];
    for (p, l, m, want) in cases {
        let line = first_line(p, l, m)?;
        let expect = format!("p={}: L{l} ⊗ L{m} = {want}", p.get());
        ensure!(line == expect, "got {line:?}, expected {expect:?}");
    }
    Ok(())
}

fn dim(d: &Decomposition) -> Result<i64, String> {
    Ok(verify::decomposition_character(d)
        .map_err(|e| e.to_string())?
        .dim())
}

fn errata_handling() -> Outcome {
    let p = Prime::TWO;
    let r = sl3tensor_cli::finish(sl3tensor_cli::decompose(p, w(7, 2), w(6, 3), true, true));
    ensure!(
        r.code == 0 && r.result.payload["verified"] == true,
        "p=2 example did not verify"
    );
    ensure!(
        !r.result.errata.is_empty(),
        "p=2 example has no erratum note"
    );
    let d = decompose::tensor_decompose(p, w(7, 2), w(6, 3)).map_err(|e| e.to_string())?;
    ensure!(dim(&d)? == 5184, "total dimension {}", dim(&d)?);
    let s = d
        .summands
        .iter()
        .find(|s| s.to_string().ends_with("T(6,2)^[1]"));
    ensure!(
        s.map(|s| s.mult) == Some(1),
        "T(6,2)^[1] multiplicity {:?}",
        s.map(|s| s.mult)
    );

    let p = Prime::THREE;
    let r = sl3tensor_cli::finish(sl3tensor_cli::decompose(p, w(5, 4), w(4, 5), true, true));
    ensure!(
        r.code == 0 && r.result.payload["verified"] == true,
        "p=3 example did not verify"
    );
    ensure!(
        !r.result.errata.is_empty(),
        "p=3 example has no erratum note"
    );
    let d = decompose::tensor_decompose(p, w(5, 4), w(4, 5)).map_err(|e| e.to_string())?;
    let s = d
        .summands
        .iter()
        .find(|s| s.to_string() == "T(1,1) ⊗ T(2,2)^[1]")
        .ok_or("T(1,1) ⊗ T(2,2)^[1] missing")?;
    let small = verify::summand_character(p, s)
        .map_err(|e| e.to_string())?
        .dim();
    let big = characters::tilting_character(p, w(7, 7))
        .map_err(|e| e.to_string())?
        .dim();
    ensure!((small, big) == (243, 2916), "dims {small} vs {big}");
    ensure!(
        d.summands.iter().all(|s| s.to_string() != "T(7,7)"),
        "T(7,7) listed"
    );
    Ok(())
}

fn exhaustive_sweep() -> Outcome {
    for (p, max) in [(Prime::TWO, 7), (Prime::THREE, 8)] {
        let ws: Vec<Weight> = weights_upto(max).collect();
        for (i, l) in ws.iter().enumerate() {
            for m in &ws[i..] {
                let d =
                    decompose::tensor_decompose(p, *l, *m).map_err(|e| format!("{l} {m}: {e}"))?;
                let ok = verify::check_decomposition(&d).map_err(|e| format!("{l} {m}: {e}"))?;
                ensure!(
                    ok,
                    "p={} {l} ⊗ {m} = {d} fails the character identity",
                    p.get()
                );
            }
        }
    }
    Ok(())
}

fn predicate_agreement() -> Outcome {
    for p in [Prime::TWO, Prime::THREE] {
        let n = p.as_i64() * p.as_i64();
        for l in weights_upto(n) {
            for m in weights_upto(n) {
                let d = decompose::tensor_decompose(p, l, m).map_err(|e| e.to_string())?;
                let ind = decompose::is_indecomposable_pair(p, l, m).map_err(|e| e.to_string())?;
                let til = decompose::is_tilting_pair(p, l, m).map_err(|e| e.to_string())?;
                ensure!(
                    ind == decompose::is_single_summand(&d),
                    "indecomposable p={} {l} {m}",
                    p.get()
                );
                ensure!(
                    til == decompose::is_single_tilting(&d),
                    "tilting p={} {l} {m}",
                    p.get()
                );
            }
        }
    }
    Ok(())
}

fn donkin_cross_checks() -> Outcome {
    let cases = [
        (Prime::THREE, w(1, 1)),
        (Prime::THREE, w(2, 1)),
        (Prime::THREE, w(1, 0)),
        (Prime::TWO, w(1, 0)),
        (Prime::TWO, w(1, 1)),
    ];
    for (p, l) in cases {
        let got = characters::donkin_restricted_tilting_char(p, l).map_err(|e| e.to_string())?;
        let top = p.steinberg() + l;
        let want = characters::tilting_character(p, top).map_err(|e| e.to_string())?;
        ensure!(got == *want, "T{top} at p={}", p.get());
    }
    let p = Prime::THREE;
    for (l, m) in [(w(0, 2), w(1, 0)), (w(1, 1), ZERO), (w(2, 1), ZERO)] {
        let top = p.steinberg() + l + m.scale(3);
        let t = characters::tilting_character(p, top).map_err(|e| e.to_string())?;
        let e = characters::into_weyl_basis(&t).map_err(|e| e.to_string())?;
        for nu in characters::dominant_weights_below(top) {
            let k =
                characters::donkin_delta_multiplicities(p, l, m, nu).map_err(|e| e.to_string())?;
            ensure!(
                k == e.get(nu),
                "(T{top}:∇{nu}) = {k}, character gives {}",
                e.get(nu)
            );
        }
    }
    // T(5,4) through its digit factorization
    let t54 = characters::tilting_character(p, w(5, 4)).map_err(|e| e.to_string())?;
    let t24 = characters::tilting_character(p, w(2, 4)).map_err(|e| e.to_string())?;
    let t10 = characters::tilting_character(p, w(1, 0)).map_err(|e| e.to_string())?;
    let prod = characters::multiply(&t24, &characters::frobenius_twist(&t10, 1, p));
    ensure!(*t54 == prod, "T(5,4) ≠ T(2,4) ⊗ T(1,0)^[1]");
    Ok(())
}

fn appendix() -> Algebra<Q> {
    Algebra::build(&Presentation::named("A-appendix").unwrap()).unwrap()
}

fn t43(a: &Algebra<Q>) -> Rep<Q> {
    highest::build_tilting(a, &listing_order(a), a.vertex("43").unwrap()).unwrap()
}

fn layers(s: &[&[&str]]) -> Vec<Vec<String>> {
    s.iter()
        .map(|l| l.iter().map(|x| x.to_string()).collect())
        .collect()
}

fn appendix_algebra() -> Outcome {
    let a = appendix();
    ensure!(a.dim() == 34, "dim {}", a.dim());
    ensure!(
        a.strata() == vec![4, 6, 7, 6, 6, 4, 1],
        "strata {:?}",
        a.strata()
    );
    ensure!(a.nilpotency == 7, "nilpotency {}", a.nilpotency);
    let dims: Vec<usize> = ["10", "05", "51", "43"]
        .iter()
        .map(|v| a.projective(a.vertex(v).unwrap()).dim())
        .collect();
    ensure!(dims == vec![15, 7, 7, 5], "projective dims {dims:?}");
    Ok(())
}

fn t43_structure() -> Outcome {
    let a = appendix();
    let t = t43(&a);
    ensure!(t.dim() == 10, "dim {}", t.dim());
    ensure!(
        t.top() == vec!["10"] && t.socle() == vec!["10"],
        "top {:?} socle {:?}",
        t.top(),
        t.socle()
    );
    ensure!(t.loewy_length() == 7, "Loewy length {}", t.loewy_length());
    ensure!(!t.is_rigid(), "T(43) is rigid");
    let rad = t.radical_layers().layers;
    let soc = t.socle_layers().layers;
    let twice = |l: &[String]| l.iter().filter(|x| *x == "10").count() == 2;
    let pos = |ls: &[Vec<String>]| ls.iter().position(|l| l.contains(&"43".to_string()));
    let (i, j) = (
        pos(&rad).ok_or("43 not in radical layers")?,
        pos(&soc).ok_or("43 not in socle layers")?,
    );
    ensure!(
        i > 0 && twice(&rad[i - 1]),
        "radical layer above 43: {:?}",
        rad.get(i.wrapping_sub(1))
    );
    ensure!(
        j > 0 && twice(&soc[j - 1]),
        "socle layer below 43: {:?}",
        soc.get(j.wrapping_sub(1))
    );
    let dual = a.dual(&t).map_err(|e| e.to_string())?;
    ensure!(rep_isomorphic(&t, &dual), "T(43) not self-dual");
    let want: Vec<(String, usize)> = vec![
        ("10".into(), 5),
        ("05".into(), 2),
        ("51".into(), 2),
        ("43".into(), 1),
    ];
    ensure!(t.composition() == want, "composition {:?}", t.composition());
    Ok(())
}

fn radical_of_standard() -> Outcome {
    let a = appendix();
    let order = listing_order(&a);
    let v = a.vertex("43").unwrap();
    let d = highest::delta_module(&a, &order, v);
    let n = highest::nabla_module(&a, &order, v).map_err(|e| e.to_string())?;
    let rad_d = d.restrict(&d.rad_of(&d.full())).0;
    let n_mod_soc = n.quotient(&n.soc_over(&n.zero_sub())).0;
    ensure!(rep_isomorphic(&rad_d, &n_mod_soc), "rad Δ(43) ≇ ∇(43)/soc");
    let b: Algebra<Q> = Algebra::build(&Presentation::named("B-subalgebra").unwrap()).unwrap();
    let as_b = rad_d
        .restrict_to_quiver(b.quiver.clone())
        .map_err(|e| e.to_string())?;
    ensure!(as_b.satisfies(&b.relations), "not a B-module");
    ensure!(as_b.dim() == 4, "length {}", as_b.dim());
    let want = layers(&[&["10"], &["05", "51"], &["10"]]);
    ensure!(
        as_b.radical_layers().layers == want,
        "radical layers {:?}",
        as_b.radical_layers().layers
    );
    ensure!(
        as_b.socle_layers().layers == want,
        "socle layers {:?}",
        as_b.socle_layers().layers
    );
    Ok(())
}

fn tilting_constructor() -> Outcome {
    let a = appendix();
    let gamma = a.path_by_names(&["γ"]).map_err(|e| e.to_string())?;
    let quotient = a.projective_mod_paths(a.vertex("10").unwrap(), &[gamma]);
    ensure!(rep_isomorphic(&t43(&a), &quotient), "T(43) ≇ P(10)/γA");
    let ap: Algebra<Q> = Algebra::build(&Presentation::named("A-prime").unwrap()).unwrap();
    let order = listing_order(&ap);
    let t =
        highest::build_tilting(&ap, &order, ap.vertex("43").unwrap()).map_err(|e| e.to_string())?;
    ensure!(t.dim() == 11, "dim {}", t.dim());
    let mut m = highest::delta_multiplicities(&ap, &order, &t).map_err(|e| e.to_string())?;
    m.sort();
    let want: Vec<(String, usize)> = vec![
        ("05".into(), 1),
        ("10".into(), 2),
        ("43".into(), 1),
        ("51".into(), 1),
    ];
    ensure!(m == want, "Δ-multiplicities {m:?}");
    Ok(())
}

fn four_subspaces() -> Outcome {
    let r = four_subspace_report(&t43(&appendix())).map_err(|e| e.to_string())?;
    ensure!(
        (r.dim_v, r.dims) == (3, [2, 2, 1, 1]),
        "dims ({}; {:?})",
        r.dim_v,
        r.dims
    );
    ensure!(
        (r.meet12_dim, r.join34_dim) == (1, 2),
        "U1∩U2 {} U3+U4 {}",
        r.meet12_dim,
        r.join34_dim
    );
    ensure!(
        r.meet12_is_image && r.join34_is_kernel,
        "image/kernel identification"
    );
    ensure!(
        r.meet_below_join && r.cross_meets_zero && r.join12_is_v && r.all_distinct,
        "lattice shape"
    );
    Ok(())
}

fn property_suites() -> Outcome {
    for l in weights_upto(20) {
        let want = (l.a + 1) * (l.b + 1) * (l.a + l.b + 2) / 2;
        let c = characters::weyl_character(l).map_err(|e| e.to_string())?;
        ensure!(c.dim() == want && c.is_weyl_invariant(), "χ{l}");
    }
    for p in [Prime::TWO, Prime::THREE] {
        for l in weights_upto(20) {
            let c = characters::simple_character(p, l).map_err(|e| e.to_string())?;
            ensure!(c.is_weyl_invariant(), "χ_p{l}");
        }
        for l in weights_upto(14) {
            match characters::tilting_character(p, l) {
                Ok(t) => ensure!(t.is_weyl_invariant(), "T{l}"),
                Err(Error::UnknownTiltingCharacter { .. }) => {}
                Err(e) => return Err(e.to_string()),
            }
        }
        for a in sl3tensor::family::family_atoms(p) {
            let c = characters::family_character(p, &a).map_err(|e| e.to_string())?;
            ensure!(c.is_weyl_invariant(), "{a}");
        }
        for l in weights_upto(200) {
            let s = weights::steinberg_digits(p, l).map_err(|e| e.to_string())?;
            let t = weights::tilting_digits(p, l).map_err(|e| e.to_string())?;
            ensure!(
                weights::reconstruct(p, &s) == l && weights::reconstruct(p, &t) == l,
                "digits of {l}"
            );
        }
        let multiset = |d: &Decomposition| {
            let mut v: Vec<(String, bool)> = d
                .summands
                .iter()
                .map(ToString::to_string)
                .zip(d.indecomposable_flags.iter().copied())
                .collect();
            v.sort();
            v
        };
        for l in weights_upto(6) {
            for m in weights_upto(6) {
                let d = decompose::tensor_decompose(p, l, m).map_err(|e| e.to_string())?;
                let swapped = decompose::tensor_decompose(p, m, l).map_err(|e| e.to_string())?;
                ensure!(d.summands == swapped.summands, "commutativity at {l} {m}");
                let f = decompose::tensor_decompose(p, l.flip(), m.flip())
                    .map_err(|e| e.to_string())?;
                ensure!(
                    multiset(&d.flip()) == multiset(&f),
                    "flip equivariance at {l} {m}"
                );
                let raw = decompose::tensor_decompose_with(
                    p,
                    l,
                    m,
                    Options {
                        canonicalize: false,
                    },
                )
                .map_err(|e| e.to_string())?;
                for s in &raw.summands {
                    let once = decompose::canonicalize(p, s);
                    ensure!(
                        decompose::canonicalize(p, &once) == once,
                        "canonicalize {s}"
                    );
                }
            }
        }
    }
    let e = WeylExpr::from_terms([(w(3, 1), 2), (w(0, 4), -1), (ZERO, 5)]);
    let back = characters::into_weyl_basis(&e.character().map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure!(back == e, "Weyl basis round trip");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("table verification", table_verification),
        ("identity lists", identity_lists),
        ("worked examples", worked_examples),
        ("errata handling", errata_handling),
        ("exhaustive oracle sweep", exhaustive_sweep),
        ("predicate agreement", predicate_agreement),
        ("tilting tensor product cross-checks", donkin_cross_checks),
        ("appendix algebra", appendix_algebra),
        ("T(43) structure", t43_structure),
        ("radical of Δ(43)", radical_of_standard),
        ("tilting constructor", tilting_constructor),
        ("four-subspace report", four_subspaces),
        ("property suites", property_suites),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
