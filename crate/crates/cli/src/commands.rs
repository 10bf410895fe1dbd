use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use hypotrochoid_core::algebra::{c_coeff, c_coeff_alt, enumerate_compositions, parse_rational, PointRational, Rational};
use hypotrochoid_core::checks::{run_suite, CheckOutcome, Suite};
use hypotrochoid_core::geometry::{cusp_threshold, export_curve, simplicity_check, CurveFormat, HypotrochoidSpec};
use hypotrochoid_core::testkit::{expansion_residual, AnalyticFunctional, FunctionalKind};
use hypotrochoid_core::virasoro::{descendant, hypotrochoid_basis_solve, kappa_c_map, ParamInput};
use hypotrochoid_core::ward::{parse_insertions, sphere_correlator};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::config::{default_eps_grid, emit, resolve_out, Format, RunConfig};
use crate::error::{CliError, CliResult};
use crate::{Command, Common};

pub(crate) fn run(cmd: Command) -> CliResult<()> {
    match cmd {
        Command::Coeffs { m_max, common } => coeffs(m_max, common),
        Command::Descendant { k, m, solve_basis, weight_cap, common } => {
            descendant_cmd(k, m, solve_basis, weight_cap, common)
        }
        Command::Correlator { spec, at, c, common } => correlator(&spec, &at, c.as_deref(), common),
        Command::Check { suite, common } => check(&suite, common),
        Command::Curve { k, b, eps, theta, w, n_samples, common } => curve(k, b, eps, theta, &w, n_samples, common),
        Command::Kappa { kappa, n, y, common } => kappa_cmd(kappa, n, y, common),
        Command::Expand { functional, z0, k, w, theta, b, order, eps, common } => {
            expand(&functional, &z0, k, &w, theta, b, order, eps, common)
        }
    }
}

fn config(command: &'static str, params: Value, common: &Common, default: Format, allowed: &[Format]) -> CliResult<RunConfig> {
    let cfg = RunConfig::new(command, params, common.format.unwrap_or(default), common.seed);
    cfg.require_format(allowed)?;
    Ok(cfg)
}

fn complex(name: &str, s: &str) -> CliResult<Complex64> {
    Complex64::from_str(s.trim()).map_err(|_| CliError::Usage(format!("--{name}: '{s}' is not a complex number")))
}

fn coeffs(m_max: u32, common: Common) -> CliResult<()> {
    let cfg = config("coeffs", json!({ "m_max": m_max }), &common, Format::Text, &[Format::Text, Format::Json, Format::Csv])?;
    let mut rows = Vec::new();
    for m in 1..=i64::from(m_max) {
        for lambda in enumerate_compositions(m)? {
            let (a, b) = (c_coeff(&lambda), c_coeff_alt(&lambda));
            rows.push((lambda.to_string(), a.clone(), b.clone(), a == b));
        }
    }
    let mismatches = rows.iter().filter(|r| !r.3).count();
    let body = match cfg.format {
        Format::Json => cfg.wrap_json(json!({
            "rows": rows.iter().map(|(l, a, b, eq)| json!({
                "composition": l, "c_coeff": a.to_string(), "c_coeff_alt": b.to_string(), "equal": eq,
            })).collect::<Vec<_>>(),
            "mismatches": mismatches,
        })),
        Format::Csv => {
            let mut s = String::from("composition,c_coeff,c_coeff_alt,equal\n");
            for (l, a, b, eq) in &rows {
                writeln!(s, "\"{l}\",{a},{b},{eq}").unwrap();
            }
            cfg.wrap_text(&s)
        }
        _ => {
            let mut s = format!("{:<28} {:>16} {:>16}  equal\n", "composition", "c_coeff", "c_coeff_alt");
            for (l, a, b, eq) in &rows {
                writeln!(s, "{l:<28} {a:>16} {b:>16}  {eq}").unwrap();
            }
            writeln!(s, "{} rows, {mismatches} mismatches", rows.len()).unwrap();
            cfg.wrap_text(&s)
        }
    };
    emit(common.out.as_deref(), &body)?;
    if mismatches > 0 {
        return Err(CliError::Check(format!("{mismatches} compositions disagree")));
    }
    Ok(())
}

fn descendant_cmd(k: i32, m: i32, solve: Option<String>, weight_cap: u32, common: Common) -> CliResult<()> {
    let params = json!({ "k": k, "m": m, "solve_basis": solve, "weight_cap": weight_cap });
    let cfg = config("descendant", params, &common, Format::Text, &[Format::Text, Format::Json])?;
    let v = descendant(k, m)?;
    let solved = match &solve {
        None => None,
        Some(t) => {
            let target_src = if t.trim().is_empty() { format!("T[{k},{m}]") } else { t.trim().to_string() };
            let ins = parse_insertions(&format!("{target_src}@x"))?;
            let [one] = ins.as_slice() else {
                return Err(CliError::Usage(format!("'{target_src}' is not a single state")));
            };
            let sol = hypotrochoid_basis_solve(&one.state, weight_cap)?;
            Some((target_src, one.state.clone(), sol))
        }
    };
    let body = match cfg.format {
        Format::Json => cfg.wrap_json(json!({
            "normal_form": v.to_string(),
            "terms": v,
            "solve": solved.as_ref().map(|(src, target, sol)| json!({
                "target": src, "target_normal_form": target.to_string(), "solution": sol, "display": sol.display(),
            })),
        })),
        _ => {
            let mut s = format!("T[{k},{m}] = {v}\n");
            if let Some((src, target, sol)) = &solved {
                writeln!(s, "{src} = {target}").unwrap();
                writeln!(s, "    = {}", sol.display()).unwrap();
            }
            cfg.wrap_text(&s)
        }
    };
    emit(common.out.as_deref(), &body)
}

fn correlator(spec: &str, at: &[String], c: Option<&str>, common: Common) -> CliResult<()> {
    let params = json!({ "spec": spec, "at": at, "c": c });
    let cfg = config("correlator", params, &common, Format::Json, &[Format::Json, Format::Text])?;
    let ins = parse_insertions(spec)?;
    let labels: Vec<String> = ins.iter().map(|i| i.label.clone()).collect();
    let f = sphere_correlator(&ins)?;
    let value = evaluate(&f, &labels, at, c)?;
    let display = f.display_with(&labels);
    let body = match cfg.format {
        Format::Text => {
            let mut s = format!("{display}\n");
            if let Some(v) = &value {
                writeln!(s, "value = {v}").unwrap();
            }
            cfg.wrap_text(&s)
        }
        _ => cfg.wrap_json(json!({
            "variables": labels,
            "display": display,
            "numerator": f.numerator().terms().map(|(e, c)| json!({ "exponents": e, "coeff": c })).collect::<Vec<_>>(),
            "denominator": f.denominator_factors().iter().map(|(&(a, b), &e)| json!({ "pair": [a, b], "power": e })).collect::<Vec<_>>(),
            "value": value.map(|v| v.to_string()),
        })),
    };
    emit(common.out.as_deref(), &body)
}

fn evaluate(f: &PointRational, labels: &[String], at: &[String], c: Option<&str>) -> CliResult<Option<Rational>> {
    if at.is_empty() && c.is_none() {
        return Ok(None);
    }
    let mut points: Vec<Option<Rational>> = vec![None; labels.len()];
    for a in at {
        let (label, val) = a.split_once('=').ok_or_else(|| CliError::Usage(format!("--at '{a}' is not LABEL=VALUE")))?;
        let idx = labels
            .iter()
            .position(|l| l == label.trim())
            .ok_or_else(|| CliError::Usage(format!("--at: no insertion labelled '{label}'")))?;
        points[idx] = Some(parse_rational(val.trim())?);
    }
    let points: Vec<Rational> = points
        .into_iter()
        .zip(labels)
        .map(|(p, l)| p.ok_or_else(|| CliError::Usage(format!("no value given for point '{l}'"))))
        .collect::<CliResult<_>>()?;
    let c = c.ok_or_else(|| CliError::Usage("numeric evaluation needs --c".into()))?;
    let c = parse_rational(c.trim())?;
    f.eval(&points, &c).map(Some).ok_or_else(|| CliError::Usage("evaluation at a pole".into()))
}

fn check(suite: &str, common: Common) -> CliResult<()> {
    let cfg = config("check", json!({ "suite": suite }), &common, Format::Text, &[Format::Text, Format::Json])?;
    let which = match suite {
        "all" => None,
        s => Some(Suite::from_str(s).map_err(|_| {
            CliError::Usage(format!("unknown suite '{s}'; use all, algebra, operators, ward, geometry or expansion"))
        })?),
    };
    let start = std::time::Instant::now();
    let outcomes = run_suite(which);
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let body = match cfg.format {
        Format::Json => cfg.wrap_json(json!({
            "criteria": outcomes.iter().map(outcome_json).collect::<Vec<_>>(),
            "suites": suite_table(&outcomes).into_iter().map(|(s, p, n)| json!({ "suite": s, "passed": p, "total": n })).collect::<Vec<_>>(),
            "all_passed": failed == 0,
        })),
        _ => {
            let mut s = String::new();
            for o in &outcomes {
                writeln!(
                    s,
                    "[{}] {:>2} {:<10} {:<24} {}",
                    if o.passed { "PASS" } else { "FAIL" },
                    o.id,
                    o.suite.name(),
                    o.name,
                    o.detail
                )
                .unwrap();
            }
            writeln!(s, "\n{:<10} {:>6} {:>6}", "suite", "passed", "total").unwrap();
            for (name, p, n) in suite_table(&outcomes) {
                writeln!(s, "{name:<10} {p:>6} {n:>6}").unwrap();
            }
            cfg.wrap_text(&s)
        }
    };
    emit(common.out.as_deref(), &body)?;
    eprintln!("{} criteria in {:.2}s", outcomes.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        return Err(CliError::Check(format!("{failed} of {} criteria failed", outcomes.len())));
    }
    Ok(())
}

fn outcome_json(o: &CheckOutcome) -> Value {
    // timings are left out so that the output is reproducible
    json!({ "id": o.id, "suite": o.suite, "name": o.name, "passed": o.passed, "detail": o.detail })
}

fn suite_table(outcomes: &[CheckOutcome]) -> Vec<(&'static str, usize, usize)> {
    Suite::ALL
        .into_iter()
        .filter_map(|s| {
            let of: Vec<_> = outcomes.iter().filter(|o| o.suite == s).collect();
            (!of.is_empty()).then(|| (s.name(), of.iter().filter(|o| o.passed).count(), of.len()))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn curve(k: u32, b: f64, eps: f64, theta: f64, w: &str, n_samples: usize, common: Common) -> CliResult<()> {
    let params = json!({ "k": k, "b": b, "eps": eps, "theta": theta, "w": w, "n_samples": n_samples });
    let cfg = config("curve", params, &common, Format::Svg, &[Format::Svg, Format::Csv])?;
    let spec = HypotrochoidSpec::new(k, complex("w", w)?, eps, theta, b)?;
    let fmt = if cfg.format == Format::Csv { CurveFormat::Csv } else { CurveFormat::Svg };
    let ext = if fmt == CurveFormat::Csv { "csv" } else { "svg" };
    let out = common.out.clone().unwrap_or_else(|| PathBuf::from(format!("hypotrochoid_k{k}.{ext}")));
    let path = resolve_out(&out);
    let simple = simplicity_check(&spec, n_samples)?;
    export_curve(&spec, fmt, n_samples, &path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let b_star = cusp_threshold(k).b_star;
    println!("# {}", cfg.header_line());
    println!("wrote {}", path.display());
    println!("threshold b* = (k-1)^(1/k) = {b_star:.15}");
    println!("simple: {simple}");
    if !simple {
        eprintln!("warning: curve is not simple (b = {b} vs threshold {b_star:.6})");
    }
    Ok(())
}

fn kappa_cmd(kappa: Option<String>, n: Option<f64>, y: Option<f64>, common: Common) -> CliResult<()> {
    let params = json!({ "kappa": kappa, "n": n, "y": y });
    let cfg = config("kappa", params, &common, Format::Text, &[Format::Text, Format::Json])?;
    let input = match (kappa, n, y) {
        (Some(k), _, _) => match parse_rational(k.trim()) {
            Ok(r) => ParamInput::KappaExact(r),
            Err(_) => ParamInput::Kappa(
                k.trim().parse().map_err(|_| CliError::Usage(format!("--kappa: '{k}' is not a number")))?,
            ),
        },
        (None, Some(n), _) => ParamInput::N(n),
        (None, None, Some(y)) => ParamInput::Y(y),
        _ => return Err(CliError::Usage("give one of --kappa, --n, --y".into())),
    };
    let p = kappa_c_map(input)?;
    let body = match cfg.format {
        Format::Json => cfg.wrap_json(serde_json::to_value(&p).expect("serializable")),
        _ => {
            let mut s = format!("kappa = {}\nn     = {}\ny     = {}\nc     = {}\n", p.kappa, p.n, p.y, p.c);
            if let Some(c) = &p.c_exact {
                writeln!(s, "c (exact) = {c}").unwrap();
            }
            cfg.wrap_text(&s)
        }
    };
    emit(common.out.as_deref(), &body)
}

#[allow(clippy::too_many_arguments)]
fn expand(
    functional: &str,
    z0: &str,
    k: u32,
    w: &str,
    theta: f64,
    b: f64,
    order: u32,
    eps: Vec<f64>,
    common: Common,
) -> CliResult<()> {
    let grid = if eps.is_empty() { default_eps_grid() } else { eps };
    let params = json!({
        "functional": functional, "z0": z0, "k": k, "w": w, "theta": theta, "b": b, "order": order, "eps_grid": grid,
    });
    let cfg = config("expand", params, &common, Format::Json, &[Format::Json, Format::Text])?;
    let kind = FunctionalKind::from_str(functional)?;
    let f = AnalyticFunctional { kind, z0: complex("z0", z0)? };
    let report = expansion_residual(&f, k, complex("w", w)?, theta, b, order, &grid)?;
    let body = match cfg.format {
        Format::Text => cfg.wrap_text(&report.table()),
        _ => cfg.wrap_json(serde_json::to_value(&report).expect("serializable")),
    };
    emit(common.out.as_deref(), &body)
}
