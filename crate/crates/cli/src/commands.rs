use std::fmt::Write;
use std::fs;
use std::path::Path;

use frontal::document::{algebra_document, parse_algebra, parse_algebra_unchecked, parse_map, parse_poset, LoadedAlgebra};
use frontal::frontal::poset_successor;
use frontal::{
    build_extension, check_axioms, classify, enumerate_algebras, extend_frontal, find_operator, lift_hom,
    universal_factor, verify, AxiomClass, Error, FrontalAlgebra, Guards, Homomorphism, OperatorKind, OperatorSearch,
    Signature, Subset,
};
use serde_json::{json, Value};

use crate::render;
use crate::{Command, FrontalCommand, PosetCommand};

pub struct Outcome {
    pub ok: bool,
    pub text: String,
    pub data: Value,
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        // a contradiction inside a construction is a failed property, not bad input
        let code = if matches!(e, Error::Soundness(_)) { 1 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type Run = Result<Outcome, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    }
}

fn load(path: &Path, allow_non_frontal: bool) -> Result<LoadedAlgebra, Failure> {
    parse_algebra(&read(path)?, allow_non_frontal).map_err(in_file(path))
}

pub fn run(command: &Command, guards: &Guards) -> Run {
    match command {
        Command::Check { file, class } => check(file, *class),
        Command::Spectrum { file } => spectrum(file, guards),
        Command::Extend { file, allow_non_frontal } => extend(file, *allow_non_frontal, guards),
        Command::Lift { source, target, hom } => lift(source, target, hom, guards),
        Command::Factor { file, into, hom } => factor(file, into, hom, guards),
        Command::Frontal { command: FrontalCommand::Find { file, op } } => find(file, *op),
        Command::Frontal { command: FrontalCommand::Classify { file } } => classify_tau(file),
        Command::Poset { command: PosetCommand::Ops { file, upset } } => poset_ops(file, upset.as_deref(), guards),
        Command::Search { size, class, without } => search(*size, *class, *without, guards),
        Command::Verify { file } => verify_file(file, guards),
    }
}

fn check(file: &Path, class: Option<AxiomClass>) -> Run {
    let loaded = parse_algebra_unchecked(&read(file)?).map_err(in_file(file))?;
    let alg = &loaded.algebra;
    let class = class.unwrap_or_else(|| AxiomClass::declared_by(alg));
    let names = render::labels(alg);
    match check_axioms(alg, class) {
        Ok(report) => Ok(Outcome {
            ok: report.passes(),
            text: format!("class {class}\n{}", render::report(&names, &report)),
            data: json!({ "class": class.name(), "report": render::report_json(&names, &report) }),
        }),
        Err(Error::MissingStructure(why)) => Ok(Outcome {
            ok: false,
            text: format!("class {class}: FAIL\n  missing structure: {why}\n"),
            data: json!({ "class": class.name(), "missing_structure": why }),
        }),
        Err(e) => Err(in_file(file)(e)),
    }
}

fn spectrum(file: &Path, guards: &Guards) -> Run {
    let loaded = load(file, true)?;
    let alg = &loaded.algebra;
    let names = render::labels(alg);
    let spec = frontal::spectrum(alg, guards)?;
    let mut text = format!("X(H): {} irreducible filters\n", spec.len());
    for (i, f) in spec.filters().iter().enumerate() {
        let _ = writeln!(text, "  P{i} = {}", render::set(&names, f));
    }
    let covers = spec.order().covers();
    let edges: Vec<String> = covers.iter().map(|(a, b)| format!("P{a} < P{b}")).collect();
    let _ = writeln!(text, "covers: {}", if edges.is_empty() { "none".into() } else { edges.join(", ") });
    Ok(Outcome {
        ok: true,
        text,
        data: json!({
            "filters": spec.filters().iter().map(|f| f.to_vec()).collect::<Vec<_>>(),
            "filter_labels": spec.filters().iter().map(|f| f.iter().map(|i| names[i].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "covers": covers,
        }),
    })
}

fn point_set(s: &Subset) -> String {
    let inner: Vec<String> = s.iter().map(|p| format!("P{p}")).collect();
    format!("{{{}}}", inner.join(", "))
}

fn extend(file: &Path, allow_non_frontal: bool, guards: &Guards) -> Run {
    let loaded = load(file, allow_non_frontal)?;
    let h = &loaded.algebra;
    let e = build_extension(h, guards)?;
    let l = e.algebra();
    let names = render::labels(l);
    let mut text = format!("L(H): {} elements over {} spectrum points\n", e.len(), e.spectrum().len());
    for i in 0..e.len() {
        let _ = writeln!(text, "  {i}: {:<12} {}", names[i], point_set(e.element(i)));
    }
    let hnames = render::labels(h);
    let phi: Vec<usize> = h.elements().map(|a| e.phi_index(a)).collect();
    let _ = writeln!(text, "phi = {}", render::map(&hnames, &names, &phi));
    text.push_str(&render::table("->", &names, |i, j| l.imp(i, j)));
    text.push_str(&render::table("^", &names, |i, j| l.meet(i, j).unwrap()));
    let mut data = json!({
        "elements": (0..e.len()).map(|i| json!({
            "label": names[i],
            "gens": e.gens(i),
            "points": e.element(i).to_vec(),
        })).collect::<Vec<_>>(),
        "phi": phi,
        "imp": l.imp_table(),
        "meet": l.meet_table(),
        "one": l.one(),
        "zero": l.zero(),
        "warnings": loaded.warnings,
    });
    let mut ok = true;
    if let Some(t) = &loaded.tau {
        match FrontalAlgebra::new(h.clone(), t.clone()) {
            Ok(f) => {
                let ext = extend_frontal(&e, &f)?;
                let _ = writeln!(text, "tau^pi = {}", render::unary(&names, &ext));
                data["tau_pi"] = json!(ext.as_slice());
            }
            Err(err) => {
                ok = false;
                let _ = writeln!(text, "tau^pi: not computed ({err})");
            }
        }
    }
    for w in &loaded.warnings {
        let _ = writeln!(text, "warning: {w}");
    }
    Ok(Outcome { ok, text, data })
}

fn lift(source: &Path, target: &Path, hom: &Path, guards: &Guards) -> Run {
    let (h1, h2) = (load(source, true)?.algebra, load(target, true)?.algebra);
    let map = parse_map(&read(hom)?, h1.len()).map_err(in_file(hom))?;
    let h = Homomorphism::new(&h1, &h2, map, Signature::HILBERT);
    let (e1, e2) = (build_extension(&h1, guards)?, build_extension(&h2, guards)?);
    let lifted = lift_hom(&h, &e1, &e2)?;
    let (n1, n2) = (render::labels(e1.algebra()), render::labels(e2.algebra()));
    Ok(Outcome {
        ok: true,
        text: format!("lift = {}\n", render::map(&n1, &n2, &lifted.map)),
        data: json!({ "map": lifted.map, "source_labels": n1, "target_labels": n2 }),
    })
}

fn factor(file: &Path, into: &Path, hom: &Path, guards: &Guards) -> Run {
    let h = load(file, true)?.algebra;
    let a = load(into, true)?.algebra;
    let map = parse_map(&read(hom)?, h.len()).map_err(in_file(hom))?;
    let hm = Homomorphism::new(&h, &a, map, Signature::HILBERT);
    let e = build_extension(&h, guards)?;
    let f = universal_factor(&e, &a, &hm)?;
    let (nl, na) = (render::labels(e.algebra()), render::labels(&a));
    Ok(Outcome {
        ok: true,
        text: format!("factor = {}\n", render::map(&nl, &na, &f.map)),
        data: json!({ "map": f.map, "source_labels": nl, "target_labels": na }),
    })
}

fn find(file: &Path, op: OperatorKind) -> Run {
    let h = load(file, true)?.algebra;
    let names = render::labels(&h);
    match find_operator(&h, op)? {
        OperatorSearch::Exists(t) => Ok(Outcome {
            ok: true,
            text: format!("{op} = {}\n", render::unary(&names, &t)),
            data: json!({ "operator": op.name(), "exists": true, "map": t.as_slice() }),
        }),
        OperatorSearch::Absent(why) => {
            let mut text = format!("{op}: does not exist\n");
            for ab in &why {
                let minimal: Vec<&str> = ab.minimal.iter().map(|&i| names[i].as_str()).collect();
                let _ = writeln!(
                    text,
                    "  no least element for a = {}; minimal elements {{{}}}",
                    names[ab.element],
                    minimal.join(", ")
                );
            }
            Ok(Outcome {
                ok: false,
                text,
                data: json!({ "operator": op.name(), "exists": false, "absent": why }),
            })
        }
    }
}

fn classify_tau(file: &Path) -> Run {
    let loaded = load(file, true)?;
    let h = &loaded.algebra;
    let t = loaded.tau.as_ref().ok_or_else(|| usage(format!("{}: document has no tau", file.display())))?;
    let names = render::labels(h);
    let c = classify(h, t)?;
    let mut text = format!("tau = {}\n", render::unary(&names, t));
    text.push_str(&render::report(&names, &c.frontal));
    let mut verdicts = Vec::new();
    for (kind, verdict) in &c.verdicts {
        let line = match verdict {
            None => "not applicable (no zero)".to_string(),
            Some(r) if r.passes() => "yes".to_string(),
            Some(r) => format!("no ({})", r.first().map(|v| v.law.to_string()).unwrap_or_default()),
        };
        let _ = writeln!(text, "{kind}: {line}");
        verdicts.push(json!({
            "operator": kind.name(),
            "applicable": verdict.is_some(),
            "holds": verdict.as_ref().map(|r| r.passes()),
        }));
    }
    Ok(Outcome {
        ok: c.frontal.passes(),
        text,
        data: json!({ "tau": t.as_slice(), "frontal": render::report_json(&names, &c.frontal), "verdicts": verdicts }),
    })
}

fn poset_ops(file: &Path, upset: Option<&[usize]>, guards: &Guards) -> Run {
    let p = parse_poset(&read(file)?).map_err(in_file(file))?;
    let n = p.len();
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let upsets = match upset {
        Some(members) => {
            if let Some(&bad) = members.iter().find(|&&m| m >= n) {
                return Err(usage(format!("upset member {bad} out of range 0..{n}")));
            }
            let u = Subset::from_indices(n, members.iter().copied());
            if !p.is_upset(&u) {
                return Err(Error::NotAnUpset(u.to_vec()).into());
            }
            vec![u]
        }
        None => p.all_upsets(guards.filter_scan_bits)?,
    };
    let mut text = format!("maximal points: {}\n", render::set(&names, &p.maximal_elements(&Subset::full(n))));
    let mut rows = Vec::new();
    let mut ok = true;
    for u in &upsets {
        let s = poset_successor(&p, u)?;
        let fixed = p.up_implication(&s, u)? == *u;
        ok &= fixed;
        let _ = writeln!(
            text,
            "U = {:<16} max(U^c) = {:<12} S(U) = {:<16} S(U)=>U = U: {}",
            render::set(&names, u),
            render::set(&names, &p.maximal_elements(&u.complement())),
            render::set(&names, &s),
            if fixed { "yes" } else { "NO" }
        );
        rows.push(json!({
            "upset": u.to_vec(),
            "maximal_of_complement": p.maximal_elements(&u.complement()).to_vec(),
            "successor": s.to_vec(),
            "successor_fixes": fixed,
        }));
    }
    Ok(Outcome { ok, text, data: json!({ "elements": n, "upsets": rows }) })
}

fn search(size: usize, class: AxiomClass, without: Option<OperatorKind>, guards: &Guards) -> Run {
    if let Some(op) = without {
        if op.needs_zero() && !class.needs_zero() {
            return Err(usage(format!("--without {op} needs a bounded class")));
        }
    }
    let mut kept = Vec::new();
    for alg in enumerate_algebras(size, class, guards)? {
        let keep = match without {
            None => true,
            Some(op) => find_operator(&alg, op)?.map().is_none(),
        };
        if keep {
            kept.push(alg);
        }
    }
    let filter = without.map(|op| format!(", without {op}")).unwrap_or_default();
    let mut text = format!("# size {size}, class {class}{filter}: {} algebras\n", kept.len());
    let mut docs = Vec::new();
    for alg in &kept {
        let doc = algebra_document(alg, None, None);
        let _ = writeln!(text, "{}", serde_json::to_string(&doc).unwrap());
        docs.push(doc);
    }
    Ok(Outcome {
        ok: true,
        text,
        data: json!({
            "size": size,
            "class": class.name(),
            "without": without.map(|op| op.name()),
            "count": kept.len(),
            "algebras": docs,
        }),
    })
}

fn verify_file(file: &Path, guards: &Guards) -> Run {
    let loaded = parse_algebra_unchecked(&read(file)?).map_err(in_file(file))?;
    let report = verify(&loaded.algebra, loaded.tau.as_ref(), guards)?;
    let mut text = String::new();
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let sampled = if c.sampled { " (sampled)" } else { "" };
        let detail = c.detail.as_ref().map(|d| format!(": {d}")).unwrap_or_default();
        let _ = writeln!(text, "{status} {}{sampled}{detail}", c.name);
    }
    Ok(Outcome {
        ok: report.passes(),
        text,
        data: serde_json::to_value(&report).unwrap(),
    })
}
