use std::f64::consts::{PI, TAU};

use kcbs_core::analysis::{
    classify, exp_pm_closed, exp_psi_closed, exp_zero_closed, expectation, min_over_retrits, no_violation_windows,
    retrit_to_state, scan_sphere, zero_state_windows, AngleWindow, QutritState, RetritState, MAX_BETA_STEP,
};
use kcbs_core::kcbs::rotated_kcbs;
use kcbs_core::linalg::Complex;
use kcbs_core::maxviol::{fit_phi_model, fit_theta_model, generate_table1_branch, Branch};
use kcbs_core::spin::EulerAngles;
use kcbs_core::verify::run_checks;

use crate::cli::{Command, CurveArgs, CurveKind, ExpectArgs, FitArgs, FitKind, ScanArgs, WindowsKind};
use crate::output::{AngleUnit, Cell, Format, Meta, Table};

/// Bad user input; reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

pub struct Report {
    pub meta: Meta,
    pub table: Table,
    pub default_format: Format,
    /// A check reported failure; the process exits with 1.
    pub failed: bool,
}

pub fn run(command: &Command, unit: AngleUnit) -> anyhow::Result<Report> {
    let rad = |x: f64| unit.to_internal(x);
    let report = |subcommand, parameters, table, default_format| Report {
        meta: Meta { subcommand, parameters },
        table,
        default_format,
        failed: false,
    };
    Ok(match command {
        Command::Verify => verify(),
        Command::Expect(args) => {
            let (params, table) = expect(args, unit)?;
            report("expect", params, table, Format::Json)
        }
        Command::Curve(args) => {
            let (params, table) = curve(args);
            report("curve", params, table, Format::Csv)
        }
        Command::ScanSphere(ScanArgs { rotation, n_theta, n_phi }) => {
            let (alpha, beta) = (rad(rotation.alpha), rad(rotation.beta));
            let mut table = Table::new(vec!["theta", "phi", "value", "contextual"]);
            for s in scan_sphere(alpha, beta, *n_theta as usize, *n_phi as usize)? {
                table.push(vec![Cell::Angle(s.theta), Cell::Angle(s.phi), s.value.into(), s.contextual.into()]);
            }
            let params = vec![
                ("alpha", Cell::Angle(alpha)),
                ("beta", Cell::Angle(beta)),
                ("n_theta", (*n_theta as usize).into()),
                ("n_phi", (*n_phi as usize).into()),
            ];
            report("scan-sphere", params, table, Format::Csv)
        }
        Command::Windows { kind } => {
            let (params, windows) = match kind {
                WindowsKind::Zero => (vec![("state", "zero".into())], zero_state_windows()),
                WindowsKind::Retrit { alpha, beta_step } => {
                    let alpha = rad(*alpha);
                    let step = beta_step.map_or(MAX_BETA_STEP, rad);
                    let params = vec![
                        ("state", "retrit".into()),
                        ("alpha", Cell::Angle(alpha)),
                        ("beta_step", Cell::Angle(step)),
                    ];
                    (params, no_violation_windows(alpha, step)?)
                }
            };
            report("windows", params, window_table(&windows), Format::Csv)
        }
        Command::Table1 { antipodal } => {
            let branch = if *antipodal { Branch::Antipodal } else { Branch::Primary };
            let mut table = Table::new(vec!["k", "beta", "theta_min", "phi_min"]);
            for (k, r) in generate_table1_branch(branch).iter().enumerate() {
                table.push(vec![k.into(), Cell::Angle(r.beta), Cell::Angle(r.theta_min), Cell::Angle(r.phi_min)]);
            }
            report("table1", vec![("antipodal", (*antipodal).into())], table, Format::Csv)
        }
        Command::Fit(args) => {
            let (params, table) = fit(args, unit)?;
            report("fit", params, table, Format::Json)
        }
        Command::Minimize(r) => {
            let (alpha, beta) = (rad(r.alpha), rad(r.beta));
            let m = min_over_retrits(alpha, beta);
            let mut table = Table::new(vec!["value", "theta", "phi", "degenerate", "contextual"]);
            table.push(vec![
                m.value.into(),
                Cell::Angle(m.argmin.theta),
                Cell::Angle(m.argmin.phi),
                m.degenerate.into(),
                classify(m.value).into(),
            ]);
            report("minimize", vec![("alpha", Cell::Angle(alpha)), ("beta", Cell::Angle(beta))], table, Format::Json)
        }
    })
}

fn verify() -> Report {
    let checks = run_checks();
    let mut table = Table::new(vec!["check", "passed", "max_deviation", "tolerance"]);
    let mut failed = false;
    for c in &checks {
        failed |= !c.passed();
        table.push(vec![c.name.into(), c.passed().into(), Cell::Sci(c.max_deviation), Cell::Sci(c.tolerance)]);
    }
    Report { meta: Meta { subcommand: "verify", parameters: Vec::new() }, table, default_format: Format::Csv, failed }
}

/// One PASS/FAIL line per check.
pub fn verify_lines(table: &Table) -> String {
    table
        .rows
        .iter()
        .map(|row| match row.as_slice() {
            [Cell::Text(name), Cell::Bool(ok), Cell::Sci(dev), Cell::Sci(tol)] => {
                format!("{} {name} (max deviation {dev:.3e}, tolerance {tol:.0e})\n", if *ok { "PASS" } else { "FAIL" })
            }
            _ => unreachable!("verify rows have a fixed shape"),
        })
        .collect()
}

fn expect(args: &ExpectArgs, unit: AngleUnit) -> anyhow::Result<(Vec<(&'static str, Cell)>, Table)> {
    let alpha = unit.to_internal(args.rotation.alpha);
    let beta = unit.to_internal(args.rotation.beta);
    let gamma = unit.to_internal(args.gamma);
    let (name, state) = parse_state(&args.state, unit)?;
    let value = expectation(&state, &rotated_kcbs(EulerAngles::new(alpha, beta, gamma)))?;
    let mut table = Table::new(vec!["state", "value", "contextual"]);
    table.push(vec![name.clone().into(), value.into(), classify(value).into()]);
    let params = vec![
        ("state", name.into()),
        ("alpha", Cell::Angle(alpha)),
        ("beta", Cell::Angle(beta)),
        ("gamma", Cell::Angle(gamma)),
    ];
    Ok((params, table))
}

fn parse_state(tokens: &[String], unit: AngleUnit) -> anyhow::Result<(String, QutritState)> {
    let (kind, rest) = tokens.split_first().ok_or_else(|| usage("--state needs a value"))?;
    let numbers = rest
        .iter()
        .map(|t| t.parse::<f64>().map_err(|_| usage(format!("not a number in --state: {t}"))))
        .collect::<anyhow::Result<Vec<f64>>>()?;
    let no_args = |state: QutritState| {
        if numbers.is_empty() {
            Ok((kind.clone(), state))
        } else {
            Err(usage(format!("state {kind} takes no numbers")))
        }
    };
    match kind.as_str() {
        "zero" => no_args(QutritState::zero()),
        "plus" => no_args(QutritState::plus_one()),
        "minus" => no_args(QutritState::minus_one()),
        "psi" => no_args(QutritState::psi_plus()),
        "retrit" => match numbers[..] {
            [theta, phi] => {
                let r = RetritState::new(unit.to_internal(theta), unit.to_internal(phi));
                Ok((format!("retrit {theta} {phi}"), retrit_to_state(r)))
            }
            _ => Err(usage("retrit takes two angles: θ φ")),
        },
        "qutrit" => {
            let amps = match numbers[..] {
                [a, b, c] => [a, b, c].map(|x| Complex::new(x, 0.0)),
                [a, b, c, d, e, f] => [Complex::new(a, b), Complex::new(c, d), Complex::new(e, f)],
                _ => return Err(usage("qutrit takes 3 real amplitudes or 3 (re, im) pairs")),
            };
            let label = format!("qutrit {}", rest.join(" "));
            Ok((label, QutritState::normalized(amps).map_err(|e| usage(e.to_string()))?))
        }
        other => Err(usage(format!("unknown state {other}; expected zero, plus, minus, psi, retrit or qutrit"))),
    }
}

fn curve(args: &CurveArgs) -> (Vec<(&'static str, Cell)>, Table) {
    let n = args.n.unwrap_or(if args.kind == CurveKind::Psi { 73 } else { 361 }) as usize;
    let grid = |k: usize| TAU * k as f64 / (n - 1) as f64;
    let (name, table) = match args.kind {
        CurveKind::Zero | CurveKind::Pm => {
            let f = if args.kind == CurveKind::Zero { exp_zero_closed } else { exp_pm_closed };
            let mut t = Table::new(vec!["beta", "value", "contextual"]);
            for k in 0..n {
                let (beta, v) = (grid(k), f(grid(k)));
                t.push(vec![Cell::Angle(beta), v.into(), classify(v).into()]);
            }
            (if args.kind == CurveKind::Zero { "zero" } else { "pm" }, t)
        }
        CurveKind::Psi => {
            let mut t = Table::new(vec!["alpha", "beta", "value", "contextual"]);
            for i in 0..n {
                for j in 0..n {
                    let v = exp_psi_closed(grid(i), grid(j));
                    t.push(vec![Cell::Angle(grid(i)), Cell::Angle(grid(j)), v.into(), classify(v).into()]);
                }
            }
            ("psi", t)
        }
    };
    (vec![("curve", name.into()), ("n", n.into())], table)
}

fn window_table(windows: &[AngleWindow]) -> Table {
    let mut t = Table::new(vec!["lo", "hi", "kind"]);
    for w in windows {
        t.push(vec![Cell::Angle(w.lo), Cell::Angle(w.hi), w.kind.as_str().into()]);
    }
    t
}

fn fit(args: &FitArgs, unit: AngleUnit) -> anyhow::Result<(Vec<(&'static str, Cell)>, Table)> {
    let beta_max = args.beta_max.map_or(TAU, |b| unit.to_internal(b));
    // tolerate the rounding of a quoted bound such as π
    let rows: Vec<_> =
        generate_table1_branch(Branch::Primary).into_iter().filter(|r| r.beta <= beta_max + 1e-9 * PI).collect();
    let result = match args.model {
        FitKind::Phi => fit_phi_model(&rows, false),
        FitKind::PhiCorrected => fit_phi_model(&rows, true),
        FitKind::Theta => fit_theta_model(&rows),
    }
    .map_err(|e| usage(e.to_string()))?;

    let mut columns = vec!["model"];
    let mut row: Vec<Cell> = vec![result.model.id().into()];
    for (name, value) in result.named() {
        columns.push(name);
        row.push(value.into());
    }
    columns.extend(["residual_rms", "rows"]);
    row.extend([result.residual_rms.into(), rows.len().into()]);
    let mut table = Table::new(columns);
    table.push(row);
    Ok((vec![("model", result.model.id().into()), ("beta_max", Cell::Angle(beta_max))], table))
}
