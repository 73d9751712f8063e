//! One function per subcommand, plus the parameter echo for each.

use serde_json::{json, Map, Value};
use virasoro_hc::arith::{int, Rational};
use virasoro_hc::classify::{
    certify_factorization, check_s0_display, compare_computed_with_printed,
    compare_with_printed_cases, compute_delta, enumerate_cases, s0_quotient, shape_coefficients,
    specialize_s0, ComparisonStatus,
};
use virasoro_hc::lie::{
    check_antisymmetry, check_cocycle, is_antisymmetric_on_window, make_algebra,
};
use virasoro_hc::lie::{AlgebraName, AlgebraSpec, Shift};
use virasoro_hc::report::{CheckReport, Residual};
use virasoro_hc::weight::{
    check_module_axiom, check_window_cyclic, make_module, simplicity_criterion, CyclicityReport,
    ModuleKind, ModuleParams, ModuleSpec,
};

use crate::args::{
    AlgebraArgs, ClassifyArgs, CocycleArgs, CyclicityArgs, DeltaArgs, ModuleArgs, ModuleCheckArgs,
    ReproduceArgs,
};
use crate::document::{to_value, InvalidParams, Outcome};
use crate::suite;

/// How many violations the text output lists before summarizing.
const SHOWN: usize = 5;

fn invalid<E: std::fmt::Display>(e: E) -> InvalidParams {
    InvalidParams(e.to_string())
}

fn put(map: &mut Map<String, Value>, key: &str, value: Option<&Rational>) {
    if let Some(v) = value {
        map.insert(key.to_string(), Value::String(v.to_string()));
    }
}

fn algebra(
    name: AlgebraName,
    rho: Option<&Rational>,
    s: &Rational,
) -> Result<AlgebraSpec, InvalidParams> {
    let shift = Shift::from_rational(s).map_err(invalid)?;
    make_algebra(name, shift, rho.cloned()).map_err(invalid)
}

pub fn residual_text(r: &Residual) -> String {
    match r {
        Residual::Terms { terms } => terms
            .iter()
            .map(|t| format!("({})*{}", t.coefficient, t.basis))
            .collect::<Vec<_>>()
            .join(" + "),
        Residual::Scalar { value } | Residual::Polynomial { value } | Residual::Note { value } => {
            value.clone()
        }
    }
}

pub fn report_lines(label: &str, report: &CheckReport) -> Vec<String> {
    let n = report.violations().len();
    // symbolic checks carry window 0
    let scope = match report.window() {
        0 => label.to_string(),
        w => format!("{label} on window {w}"),
    };
    if n == 0 {
        return vec![format!("{scope}: passed")];
    }
    let mut lines = vec![format!("{scope}: {n} violation(s)")];
    for v in report.violations().iter().take(SHOWN) {
        lines.push(format!(
            "  at ({}): {}",
            v.inputs.join(", "),
            residual_text(&v.residual)
        ));
    }
    if n > SHOWN {
        lines.push(format!("  ... {} more", n - SHOWN));
    }
    lines
}

pub fn algebra_params(a: &AlgebraArgs) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("algebra".into(), json!(a.algebra.as_str()));
    put(&mut p, "rho", a.rho.as_ref());
    put(&mut p, "s", Some(&a.s));
    p.insert("window".into(), json!(a.window));
    p
}

pub fn jacobi(a: &AlgebraArgs) -> Result<Outcome, InvalidParams> {
    let alg = algebra(a.algebra, a.rho.as_ref(), &a.s)?;
    let anti = check_antisymmetry(&alg, a.window).map_err(invalid)?;
    let jac = virasoro_hc::lie::check_jacobi(&alg, a.window).map_err(invalid)?;
    let mut lines = vec![format!("algebra {}", alg.label())];
    lines.extend(report_lines("antisymmetry", &anti));
    lines.extend(report_lines("jacobi", &jac));
    let details = json!({
        "algebra": alg.label(),
        "antisymmetry": anti,
        "jacobi": jac,
    });
    Ok(Outcome::new(anti.passed() && jac.passed(), details, lines))
}

pub fn cocycle_params(a: &CocycleArgs) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("cocycle".into(), json!(a.cocycle.as_str()));
    p.insert("algebra".into(), json!(a.algebra.as_str()));
    put(&mut p, "rho", a.rho.as_ref());
    put(&mut p, "s", Some(&a.s));
    p.insert("window".into(), json!(a.window));
    p
}

pub fn cocycle(a: &CocycleArgs) -> Result<Outcome, InvalidParams> {
    let alg = algebra(a.algebra, a.rho.as_ref(), &a.s)?;
    let report = check_cocycle(a.cocycle, &alg, a.window).map_err(invalid)?;
    let antisymmetric = is_antisymmetric_on_window(a.cocycle, &alg, a.window);
    let mut lines = vec![format!("{} on {}", a.cocycle, alg.label())];
    lines.push(format!(
        "antisymmetric on window {}: {antisymmetric}",
        a.window
    ));
    lines.extend(report_lines("cocycle identity", &report));
    let details = json!({
        "algebra": alg.label(),
        "cocycle": a.cocycle.as_str(),
        "antisymmetric": antisymmetric,
        "identity": report,
    });
    Ok(Outcome::new(
        report.passed() && antisymmetric,
        details,
        lines,
    ))
}

pub fn delta_params(a: &DeltaArgs) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("print".into(), json!(a.print));
    p.insert("check_paper".into(), json!(a.check_paper));
    p.insert("specialize_s0".into(), json!(a.specialize_s0));
    p
}

pub fn delta(a: &DeltaArgs) -> Outcome {
    let print = a.print || !a.check_paper;
    let mut details = Map::new();
    let mut lines = Vec::new();
    let mut passed = true;

    if a.specialize_s0 {
        let specialized = specialize_s0();
        if print {
            details.insert("specialized".into(), json!(specialized.canonical_string()));
            lines.push(format!("delta(b'=b) = {specialized}"));
        }
        match s0_quotient() {
            Ok(q) => {
                details.insert("quotient".into(), json!(q.canonical_string()));
                lines.push(format!("quotient by (rho-1)*rho*(1+rho)*m^6 = {q}"));
            }
            Err(e) => {
                passed = false;
                details.insert("quotient_error".into(), json!(e.to_string()));
                lines.push(format!("prefactor does not divide: {e}"));
            }
        }
        if a.check_paper {
            let report = check_s0_display();
            passed &= report.passed();
            lines.extend(report_lines("printed display", &report));
            details.insert("display".into(), to_value(&report));
        }
        return Outcome::new(passed, Value::Object(details), lines);
    }

    let data = compute_delta();
    if print {
        details.insert("delta".into(), json!(data.delta.canonical_string()));
        lines.push(format!("delta = {}", data.delta));
    }
    if a.check_paper {
        match shape_coefficients(&data.delta) {
            Ok(shape) => {
                let cmp = compare_computed_with_printed();
                let status = cmp.status();
                passed &= status != ComparisonStatus::Mismatch;
                lines.push("divisible by (b'-b+rho), (1+b-b'-rho) and m^6: yes".into());
                lines.push(format!(
                    "comparison with printed Delta_i: {}",
                    to_value(&status).as_str().unwrap_or("")
                ));
                lines.push(format!("overall sign: {}", cmp.sign));
                for (i, d) in cmp.differences.iter().enumerate() {
                    lines.push(format!("sign*C{} - Delta{} = {d}", i + 1, i + 1));
                }
                let certification = certify_factorization(&data);
                details.insert(
                    "factorization".into(),
                    json!({
                        "divisible": true,
                        "shape": {
                            "c1": shape.c1.canonical_string(),
                            "c2": shape.c2.canonical_string(),
                            "c3": shape.c3.canonical_string(),
                        },
                        "comparison": cmp,
                        "status": status,
                        "printed_form": certification,
                    }),
                );
            }
            Err(e) => {
                passed = false;
                lines.push(format!("factorization failed: {e}"));
                details.insert(
                    "factorization".into(),
                    json!({ "divisible": false, "error": e.to_string() }),
                );
            }
        }
    }
    Outcome::new(passed, Value::Object(details), lines)
}

pub fn classify_params(a: &ClassifyArgs) -> Map<String, Value> {
    let mut p = Map::new();
    put(&mut p, "s", Some(&a.s));
    p.insert("max_num".into(), json!(a.max_num));
    p.insert("max_den".into(), json!(a.max_den));
    p.insert("expect_paper".into(), json!(a.expect_paper));
    p
}

pub fn classify(a: &ClassifyArgs) -> Result<Outcome, InvalidParams> {
    let s = Shift::from_rational(&a.s).map_err(invalid)?;
    let cases = enumerate_cases(s, a.max_num, a.max_den);
    let mut lines: Vec<String> = cases.iter().map(|c| c.to_string()).collect();
    let records: Vec<_> = cases.iter().map(|c| c.record()).collect();
    let mut details = json!({ "cases": records });
    let mut passed = true;
    if a.expect_paper {
        let cmp = compare_with_printed_cases(s, &cases, a.max_num, a.max_den);
        passed = cmp.matched;
        lines.push(format!("matches printed list: {}", cmp.matched));
        for m in &cmp.missing {
            lines.push(format!("missing: {m}"));
        }
        for e in &cmp.extra {
            lines.push(format!("extra: {e}"));
        }
        for o in &cmp.outside_bounds {
            lines.push(format!("outside bounds: {o}"));
        }
        details["comparison"] = to_value(&cmp);
    }
    Ok(Outcome::new(passed, details, lines))
}

fn module_params(m: &ModuleArgs) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("kind".into(), json!(m.kind.as_str()));
    put(&mut p, "a", m.a.as_ref());
    put(&mut p, "b", m.b.as_ref());
    put(&mut p, "bp", m.bp.as_ref());
    put(&mut p, "c", m.c.as_ref());
    put(&mut p, "c1", m.c1.as_ref());
    put(&mut p, "c2", m.c2.as_ref());
    put(&mut p, "rho", m.rho.as_ref());
    p
}

fn module(m: &ModuleArgs) -> Result<ModuleSpec, InvalidParams> {
    let w = |s: Shift| AlgebraSpec::w(m.rho.clone().unwrap_or_else(|| int(0)), s).map_err(invalid);
    let host = match m.kind {
        ModuleKind::Aab | ModuleKind::Aa | ModuleKind::Ba => {
            if m.rho.is_some() {
                return Err(InvalidParams(format!(
                    "{} is a Vir-module; --rho does not apply",
                    m.kind
                )));
            }
            AlgebraSpec::vir()
        }
        ModuleKind::Aabc => w(Shift::Zero)?,
        ModuleKind::Aabc1c2 => w(Shift::Half)?,
    };
    let params = ModuleParams {
        a: m.a.clone(),
        b: m.b.clone(),
        bp: m.bp.clone(),
        c: m.c.clone(),
        c1: m.c1.clone(),
        c2: m.c2.clone(),
    };
    make_module(m.kind, params, host).map_err(invalid)
}

fn cyclicity_lines(report: &CyclicityReport) -> Vec<String> {
    report
        .generators
        .iter()
        .map(|g| {
            if g.full {
                format!("{}: generates the whole window", g.generator)
            } else {
                format!(
                    "{}: proper, reaches span{{{}}}",
                    g.generator,
                    g.reached.join(", ")
                )
            }
        })
        .collect()
}

/// Cyclicity details, and whether they agree with the simplicity criterion:
/// a module the criterion calls simple must have every generator full.
fn cyclicity_part(
    m: &ModuleSpec,
    window: i64,
) -> Result<(bool, Value, Vec<String>), InvalidParams> {
    let report = check_window_cyclic(m, window).map_err(invalid)?;
    let simple = simplicity_criterion(m).ok();
    let consistent = simple != Some(true) || report.all_full();
    let mut lines = vec![format!("window cyclicity on window {window}:")];
    lines.extend(
        cyclicity_lines(&report)
            .into_iter()
            .map(|l| format!("  {l}")),
    );
    lines.push(match simple {
        Some(s) => format!(
            "simplicity criterion: {}",
            if s { "simple" } else { "not simple" }
        ),
        None => "simplicity criterion: none for this kind".into(),
    });
    if !consistent {
        lines.push("criterion says simple but a generator is proper".into());
    }
    let details = json!({
        "report": report,
        "all_full": report.all_full(),
        "simple": simple,
        "consistent": consistent,
    });
    Ok((consistent, details, lines))
}

pub fn module_check_params(a: &ModuleCheckArgs) -> Map<String, Value> {
    let mut p = module_params(&a.module);
    p.insert("window".into(), json!(a.window));
    p.insert("cyclicity".into(), json!(a.cyclicity));
    p
}

pub fn module_check(a: &ModuleCheckArgs) -> Result<Outcome, InvalidParams> {
    let m = module(&a.module)?;
    let axiom = check_module_axiom(&m, a.window).map_err(invalid)?;
    let mut lines = vec![format!("module {}", m.label())];
    lines.extend(report_lines("module axiom", &axiom));
    let mut passed = axiom.passed();
    let mut details = json!({ "module": m.label(), "axiom": axiom });
    if a.cyclicity {
        let (ok, part, more) = cyclicity_part(&m, a.window)?;
        passed &= ok;
        lines.extend(more);
        details["cyclicity"] = part;
    }
    Ok(Outcome::new(passed, details, lines))
}

pub fn cyclicity_params(a: &CyclicityArgs) -> Map<String, Value> {
    let mut p = module_params(&a.module);
    p.insert("window".into(), json!(a.window));
    p
}

pub fn cyclicity(a: &CyclicityArgs) -> Result<Outcome, InvalidParams> {
    let m = module(&a.module)?;
    let (ok, part, more) = cyclicity_part(&m, a.window)?;
    let mut lines = vec![format!("module {}", m.label())];
    lines.extend(more);
    let details = json!({ "module": m.label(), "cyclicity": part });
    Ok(Outcome::new(ok, details, lines))
}

pub fn reproduce_params(a: &ReproduceArgs, seed: u64) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("only".into(), json!(a.only));
    p.insert("seed".into(), json!(seed));
    p
}

pub fn reproduce(a: &ReproduceArgs, seed: u64) -> Result<Outcome, InvalidParams> {
    let selected = suite::select(&a.only)?;
    let results: Vec<suite::CriterionResult> = selected.iter().map(|c| c.run(seed)).collect();
    let passed = results.iter().all(|r| r.passed);
    let lines = results
        .iter()
        .map(|r| {
            let verdict = if r.passed { "PASS" } else { "FAIL" };
            format!("{verdict} [{}] {}: {}", r.id, r.key, r.summary)
        })
        .collect();
    let details = json!({
        "data_version": virasoro_hc::classify::reference::DATA_VERSION,
        "criteria": results,
    });
    Ok(Outcome::new(passed, details, lines))
}
