use std::fmt::Write as _;
use std::io::Read;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::input::{
    laurent_error, parse_basis, parse_classes, parse_point, parse_rational_arg, read_file, resolve, Potential,
};
use super::table::{complex, Table};
use super::{CliError, Command, InputHasher, Report, StrategyArg};
use crate::cover::{
    build_cover_potential, cover_connected, lift_classes, maslov_positive, monotonicity_check, tangency_number,
    CoverError, CoverSpec, DiscClass, TangencyMode,
};
use crate::critical::{critical_values, CriticalOptions};
use crate::lattice::{invariant_sublattice, rewrite_in_sublattice, CharacterAction, LatticeError, Sublattice};
use crate::laurent::{parse_laurent, ExponentVector, LaurentPoly};
use crate::mutation::{check_period_invariance, MutationError, PeriodComparison, Substitution};
use crate::periods::{
    descendant_constant, ingest_reference, is_weak_lg, period_sequence_with, DescendantConstant, PeriodError,
    PeriodSequence, PeriodStrategy,
};

/// Integers that fit in an `i64` become JSON numbers, everything else a
/// string `p/q`.
fn rational_json(q: &BigRational) -> Value {
    if q.is_integer() {
        if let Some(n) = q.numer().to_i64() {
            return json!(n);
        }
    }
    Value::String(q.to_string())
}

fn poly_json(f: &LaurentPoly) -> Value {
    json!({
        "expr": f.render(),
        "vars": f.varnames(),
        "terms": f.display_terms().into_iter().map(|(e, c)| json!([e.as_slice(), rational_json(c)])).collect::<Vec<_>>(),
    })
}

fn periods_json(p: &PeriodSequence) -> Value {
    Value::Array(p.coeffs().iter().map(rational_json).collect())
}

fn periods_table(p: &PeriodSequence) -> String {
    let mut t = Table::new(["k", "c_k"]);
    for (k, c) in p.coeffs().iter().enumerate() {
        t.row([k.to_string(), c.to_string()]);
    }
    t.render()
}

fn compute(e: impl std::fmt::Display) -> CliError {
    CliError::Compute(e.to_string())
}

fn cover_error(e: CoverError) -> CliError {
    match e {
        CoverError::Spec(_) => CliError::Usage(e.to_string()),
        other => compute(other),
    }
}

fn mutation_error(e: MutationError) -> CliError {
    match e {
        MutationError::Laurent(_) | MutationError::ZeroImage { .. } => compute(e),
        other => CliError::Usage(other.to_string()),
    }
}

fn period_error(e: PeriodError) -> CliError {
    match e {
        PeriodError::OutOfRange { .. } | PeriodError::ReferenceTooShort { .. } => compute(e),
        other => CliError::Usage(other.to_string()),
    }
}

fn lattice_error(e: LatticeError) -> CliError {
    match e {
        LatticeError::Modulus(_) | LatticeError::Basis(_) | LatticeError::Rank { .. } => CliError::Usage(e.to_string()),
        other => compute(other),
    }
}

fn strategy(s: StrategyArg) -> PeriodStrategy {
    match s {
        StrategyArg::Incremental => PeriodStrategy::Incremental,
        StrategyArg::Parallel => PeriodStrategy::Parallel,
        StrategyArg::Split => PeriodStrategy::Split,
    }
}

fn comparison_json(c: &PeriodComparison) -> Value {
    json!({
        "pass": c.pass,
        "rows": c.rows.iter().map(|r| json!({
            "k": r.k,
            "left": rational_json(&r.left),
            "right": rational_json(&r.right),
            "matches": r.matches,
        })).collect::<Vec<_>>(),
    })
}

fn comparison_text(c: &PeriodComparison) -> String {
    let mut t = Table::new(["k", "left", "right", "match"]);
    for r in &c.rows {
        t.row([
            r.k.to_string(),
            r.left.to_string(),
            r.right.to_string(),
            yes_no(r.matches).into(),
        ]);
    }
    let mut s = t.render();
    s.push_str(if c.pass { "PASS\n" } else { "FAIL\n" });
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Runs one subcommand. `stdin` is read only for `--expr -`.
pub fn execute(cmd: &Command, seed: u64, stdin: &mut dyn Read) -> Result<Report, CliError> {
    let mut hasher = InputHasher::default();
    hasher.add(cmd.name());
    let mut warnings = Vec::new();
    let (result, text) = match cmd {
        Command::Eval { input, point } => {
            let Potential { poly, .. } = resolve(input, stdin, &mut hasher, &mut warnings)?;
            let mut result = json!({ "potential": poly_json(&poly) });
            let mut text = format!("W = {poly}\n");
            if let Some(point) = point {
                hasher.add(point);
                let z = parse_point(point)?;
                if z.len() != poly.rank() {
                    return Err(CliError::Usage(format!(
                        "point has {} coordinates, potential has {} variables",
                        z.len(),
                        poly.rank()
                    )));
                }
                let v = poly.evaluate(&z).map_err(compute)?;
                result["value"] = json!([v.re, v.im]);
                let _ = writeln!(text, "W({point}) = {}", complex(&v));
            }
            (result, text)
        }
        Command::Period { input, k, strategy: s } => {
            let Potential { poly, .. } = resolve(input, stdin, &mut hasher, &mut warnings)?;
            hasher.add(k.to_string());
            let p = period_sequence_with(&poly, *k, strategy(*s));
            let result = json!({ "potential": poly.render(), "k_max": k, "coeffs": periods_json(&p) });
            (result, format!("W = {poly}\n{}", periods_table(&p)))
        }
        Command::Cover { spec, k } => {
            let raw = read_file(spec)?;
            hasher.add(&raw);
            if let Some(k) = k {
                hasher.add(k.to_string());
            }
            let spec = CoverSpec::from_json(&raw).map_err(cover_error)?;
            let out = build_cover_potential(&spec).map_err(cover_error)?;
            let basis = out.sublattice.basis().columns();
            let mut result = json!({
                "name": spec.name,
                "complement": poly_json(&out.complement),
                "divisor": poly_json(&out.divisor),
                "upstairs": poly_json(&out.upstairs),
                "action": { "weights": out.action.weights(), "modulus": out.action.modulus() },
                "basis": basis,
                "quotient": poly_json(&out.quotient),
            });
            let mut text = String::new();
            if let Some(name) = &spec.name {
                let _ = writeln!(text, "{name}");
            }
            let _ = writeln!(text, "W_comp    = {}", out.complement);
            let _ = writeln!(text, "W_div     = {}", out.divisor);
            let _ = writeln!(text, "upstairs  = {}", out.upstairs);
            let _ = writeln!(
                text,
                "action    = weights {:?} mod {}",
                out.action.weights(),
                out.action.modulus()
            );
            let _ = writeln!(text, "basis     = {basis:?}");
            let _ = writeln!(text, "quotient  = {}", out.quotient);
            if let Some(k) = k {
                let p = period_sequence_with(&out.quotient, *k, PeriodStrategy::Incremental);
                result["periods"] = periods_json(&p);
                if let Ok(c) = descendant_constant(&p, spec.r) {
                    result["descendant_constant"] = rational_json(&c.value);
                    let _ = writeln!(text, "descendant constant at r = {}: {}", spec.r, c.value);
                }
                text.push_str(&periods_table(&p));
            }
            (result, text)
        }
        Command::Quotient {
            input,
            weights,
            r,
            basis,
        } => {
            let Potential { poly, .. } = resolve(input, stdin, &mut hasher, &mut warnings)?;
            hasher.add(format!("{weights:?} {r}"));
            if weights.len() != poly.rank() {
                return Err(CliError::Usage(format!(
                    "{} weights for {} variables",
                    weights.len(),
                    poly.rank()
                )));
            }
            let action = CharacterAction::new(weights.clone(), *r).map_err(lattice_error)?;
            let invariant = invariant_sublattice(&action);
            let lattice = match basis {
                Some(b) => {
                    hasher.add(b);
                    let s = Sublattice::from_basis(parse_basis(b)?).map_err(lattice_error)?;
                    if !s.same_lattice(&invariant) {
                        return Err(CliError::Compute(
                            "the given basis does not span the invariant sublattice".into(),
                        ));
                    }
                    s
                }
                None => invariant,
            };
            let q = rewrite_in_sublattice(&poly, &lattice).map_err(lattice_error)?;
            let cols = lattice.basis().columns();
            let result = json!({ "basis": cols, "index": lattice.index(), "quotient": poly_json(&q) });
            let text = format!("basis    = {cols:?}\nindex    = {}\nquotient = {q}\n", lattice.index());
            (result, text)
        }
        Command::Crit {
            input,
            starts,
            tol,
            max_iter,
            dedupe,
            radius,
        } => {
            let Potential { poly, .. } = resolve(input, stdin, &mut hasher, &mut warnings)?;
            hasher.add(format!("{starts} {tol:e} {max_iter} {dedupe:e} {radius:e}"));
            let positive = |x: f64| x > 0.0;
            if *starts == 0 || !positive(*tol) || !positive(*dedupe) || radius.is_nan() || *radius < 1.0 {
                return Err(CliError::Usage(
                    "need starts > 0, tol > 0, dedupe > 0 and radius >= 1".into(),
                ));
            }
            let opts = CriticalOptions {
                starts: *starts,
                tol: *tol,
                max_iter: *max_iter,
                dedupe_radius: *dedupe,
                seed,
                radius: *radius,
                ..CriticalOptions::default()
            };
            let (values, report) = critical_values(&poly, &opts);
            if report.gradient_vanishes {
                warnings.push("the logarithmic gradient vanishes identically".into());
            }
            let result = json!({ "values": values, "report": report });
            let mut t = Table::new(["#", "point", "value", "residual", "nondegenerate"]);
            for (i, p) in report.points.iter().enumerate() {
                let coords: Vec<String> = p.coords.iter().map(complex).collect();
                t.row([
                    i.to_string(),
                    format!("({})", coords.join(", ")),
                    complex(&p.value),
                    format!("{:.1e}", p.residual),
                    yes_no(p.nondegenerate).to_string(),
                ]);
            }
            let mut text = format!(
                "W = {poly}\n{} of {} starts converged, {} distinct points\n",
                report.converged,
                report.starts,
                report.points.len()
            );
            text.push_str(&t.render());
            text.push_str("critical values:\n");
            for v in &values {
                let _ = writeln!(text, "  {}  (x{})", complex(&v.value), v.multiplicity);
            }
            (result, text)
        }
        Command::Mutate {
            input,
            subst,
            images,
            check_periods,
        } => {
            let Potential { poly, vars } = resolve(input, stdin, &mut hasher, &mut warnings)?;
            let substitution = match (subst, images) {
                (Some(path), other) => {
                    if other.is_some() {
                        warnings.push(format!("--subst {} overrides --images", path.display()));
                    }
                    let raw = read_file(path)?;
                    hasher.add(&raw);
                    Substitution::from_json(&raw).map_err(mutation_error)?
                }
                (None, Some(images)) => {
                    hasher.add(images);
                    let parts: Vec<&str> = images.split(';').map(str::trim).collect();
                    Substitution::parse(&vars, &parts.iter().map(|s| s.to_string()).collect::<Vec<_>>())
                        .map_err(mutation_error)?
                }
                (None, None) => return Err(CliError::Usage("give --subst or --images".into())),
            };
            if substitution.vars() != poly.varnames() {
                return Err(CliError::Usage(format!(
                    "substitution variables {:?} differ from {:?}",
                    substitution.vars(),
                    poly.varnames()
                )));
            }
            let g = substitution.apply(&poly).map_err(mutation_error)?;
            let mut result = json!({ "source": poly_json(&poly), "image": poly_json(&g) });
            let mut text = format!("W       = {poly}\nmutated = {g}\n");
            if let Some(k) = check_periods {
                hasher.add(k.to_string());
                let c = check_period_invariance(&poly, &g, *k);
                result["periods"] = comparison_json(&c);
                text.push_str(&comparison_text(&c));
            }
            (result, text)
        }
        Command::Tangency {
            input,
            r,
            boundary,
            multiplicities,
            smooth,
            descendant,
        } => {
            let Potential { poly, .. } = resolve(input, stdin, &mut hasher, &mut warnings)?;
            hasher.add(format!("{r} {boundary:?} {multiplicities:?} {smooth} {descendant}"));
            let mode = match (multiplicities, smooth) {
                (Some(m), false) => TangencyMode::Snc {
                    multiplicities: m.clone(),
                },
                (None, true) => TangencyMode::Smooth,
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --multiplicities and --smooth".into(),
                    ))
                }
            };
            let c = DescendantConstant::new(*r, parse_rational_arg(descendant, "--descendant")?);
            let b = ExponentVector::new(boundary.clone());
            let rep = tangency_number(&poly, *r, &mode, &c, &b).map_err(|e| match e {
                CoverError::Rank { .. } => CliError::Usage(e.to_string()),
                other => compute(other),
            })?;
            if !rep.integral {
                warnings.push(format!("tangency number {} is not an integer", rep.value));
            }
            let result = json!({
                "boundary": boundary,
                "value": rational_json(&rep.value),
                "coefficient": rational_json(&rep.coefficient),
                "factor": rational_json(&rep.factor),
                "spherical": rep.spherical,
                "integral": rep.integral,
            });
            let text = format!(
                "[W^{r}]_{b} = {}\nfactor     = {}\ntau        = {}\n",
                rep.coefficient, rep.factor, rep.value
            );
            (result, text)
        }
        Command::Compare { input, with, k } => {
            let Potential { poly, vars } = resolve(input, stdin, &mut hasher, &mut warnings)?;
            hasher.add(with);
            hasher.add(k.to_string());
            let other = parse_laurent(with, &vars).map_err(|e| laurent_error(e, "--with"))?;
            let c = check_period_invariance(&poly, &other, *k);
            let result = json!({ "left": poly.render(), "right": other.render(), "comparison": comparison_json(&c) });
            (
                result,
                format!("left  = {poly}\nright = {other}\n{}", comparison_text(&c)),
            )
        }
        Command::CheckWeakLg {
            input,
            reference,
            k,
            k_min,
        } => {
            let Potential { poly, .. } = resolve(input, stdin, &mut hasher, &mut warnings)?;
            hasher.add(read_file(reference)?);
            hasher.add(format!("{k:?} {k_min}"));
            let seq = ingest_reference(reference, None).map_err(period_error)?;
            let k_max = match k {
                Some(k) => *k,
                None => seq
                    .max_k()
                    .ok_or_else(|| CliError::Usage("reference is empty".into()))?,
            };
            let rep = is_weak_lg(&poly, &seq, k_max, *k_min).map_err(period_error)?;
            let mut t = Table::new(["k", "computed", "reference", "match"]);
            for row in &rep.rows {
                t.row([
                    row.k.to_string(),
                    row.computed.to_string(),
                    row.reference.to_string(),
                    yes_no(row.matches).to_string(),
                ]);
            }
            let verdict = if rep.pass { "PASS" } else { "FAIL" };
            let mut text = format!(
                "W = {poly}\nreference {} (k = {}..{})\n",
                seq.name(),
                rep.k_min,
                rep.k_max
            );
            text.push_str(&t.render());
            match rep.first_mismatch() {
                Some(row) => {
                    let _ = writeln!(text, "{verdict}: first mismatch at k = {}", row.k);
                }
                None => {
                    let _ = writeln!(text, "{verdict}");
                }
            }
            let result = json!({
                "reference": seq.name(),
                "k_min": rep.k_min,
                "k_max": rep.k_max,
                "pass": rep.pass,
                "first_mismatch": rep.first_mismatch().map(|r| r.k),
                "rows": rep.rows.iter().map(|r| json!({
                    "k": r.k,
                    "computed": rational_json(&r.computed),
                    "reference": rational_json(&r.reference),
                    "matches": r.matches,
                })).collect::<Vec<_>>(),
            });
            (result, text)
        }
        Command::Ledger {
            classes,
            select,
            r,
            max_total,
            linking,
        } => {
            let raw = read_file(classes)?;
            hasher.add(&raw);
            hasher.add(format!("{select:?} {r:?} {max_total} {linking:?}"));
            let base = parse_classes(&raw)?;
            if base.is_empty() {
                return Err(CliError::Usage("no classes given".into()));
            }
            if let Some(&bad) = select.iter().find(|&&i| base.iter().any(|c| i >= c.divisor_hits.len())) {
                return Err(CliError::Usage(format!(
                    "--select {bad} is out of range for divisor_hits"
                )));
            }
            ledger(&base, select, *r, *max_total, linking.as_deref())?
        }
    };
    Ok(Report {
        command: cmd.name(),
        result,
        text,
        warnings,
        input_hash: hasher.finish(),
    })
}

fn classes_table(classes: &[DiscClass]) -> String {
    let mut t = Table::new(["#", "mu/2", "hits", "boundary", "area"]);
    for (i, c) in classes.iter().enumerate() {
        t.row([
            i.to_string(),
            c.half_maslov.to_string(),
            format!("{:?}", c.divisor_hits),
            c.boundary.to_string(),
            c.area.to_string(),
        ]);
    }
    t.render()
}

fn class_json(c: &DiscClass) -> Value {
    json!({
        "half_maslov": c.half_maslov,
        "divisor_hits": c.divisor_hits,
        "boundary": c.boundary.as_slice(),
        "area": rational_json(&c.area),
    })
}

fn ledger(
    base: &[DiscClass],
    select: &[usize],
    r: Option<i64>,
    max_total: usize,
    linking: Option<&[i64]>,
) -> Result<(Value, String), CliError> {
    let maslov = maslov_positive(base, select);
    let lambda = monotonicity_check(base);
    let mut text = classes_table(base);
    let _ = writeln!(text, "Maslov positive: {}", yes_no(maslov.pass));
    let _ = writeln!(
        text,
        "monotone: {}",
        lambda
            .as_ref()
            .map_or("no".to_string(), |l| format!("yes, lambda = {l}"))
    );
    let mut result = json!({
        "classes": base.iter().map(class_json).collect::<Vec<_>>(),
        "maslov_positive": maslov.pass,
        "monotone": lambda.is_some(),
        "lambda": lambda.as_ref().map(rational_json),
    });
    if let Some(r) = r {
        if r < 2 {
            return Err(CliError::Usage("-r must be at least 2".into()));
        }
        let lifted = lift_classes(base, r, max_total);
        let lifted_lambda = monotonicity_check(&lifted);
        let _ = writeln!(text, "lifted classes (r = {r}, total multiplicity <= {max_total}):");
        text.push_str(&classes_table(&lifted));
        let _ = writeln!(
            text,
            "lifted monotone: {}",
            lifted_lambda
                .as_ref()
                .map_or("no".to_string(), |l| format!("yes, lambda = {l}"))
        );
        result["lifted"] = json!({
            "r": r,
            "classes": lifted.iter().map(class_json).collect::<Vec<_>>(),
            "monotone": lifted_lambda.is_some(),
            "lambda": lifted_lambda.as_ref().map(rational_json),
        });
        if let Some(values) = linking {
            let connected = cover_connected(values, r);
            let _ = writeln!(text, "cover connected: {}", yes_no(connected));
            result["connected"] = json!(connected);
        }
    } else if linking.is_some() {
        return Err(CliError::Usage("--linking needs -r".into()));
    }
    Ok((result, text))
}
