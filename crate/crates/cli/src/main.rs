mod args;
mod output;

use std::process::ExitCode;

use clap::Parser;
use rayon::prelude::*;
use serde_json::{json, Value};
use sp4coh::cohomology::{h_by_degree, h_cusp, h_total, SymbolicCount, ZkMode};
use sp4coh::euler::{chi_h, chi_h_closed, chi_h_sym};
use sp4coh::fixtures::Fixtures;
use sp4coh::torsion::classes;
use sp4coh::traces::weyl_dimension;
use sp4coh::verify::{run_all, Bounds};
use sp4coh::{Error, HighestWeight, Rat};

use args::{parse_zk_mode, Cli, Command, Format, TableKind};
use output::{aligned, count_json, csv, rat_json, table_notation};

/// Exit status 1: a computed value disagrees with a fixture or another path.
/// Exit status 2: the arguments are invalid.
enum Failure {
    Mismatch(String),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ZetaOutOfRange { .. } => Failure::Invalid(e.to_string()),
            _ => Failure::Mismatch(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = parse_zk_mode(&cli.zk_mode)
        .map_err(Failure::Invalid)
        .and_then(|mode| run(&cli.command, cli.format, &mode));
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("sp4coh: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("sp4coh: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command, format: Format, mode: &ZkMode) -> Outcome {
    match command {
        Command::Dim(w) => {
            let dim = Rat::int(weyl_dimension(w.weight()));
            Ok(single(format, w.weight(), dim.to_string(), rat_json(&dim)))
        }
        Command::Chi(w) => chi(format, w.weight()),
        Command::Cusp(w) => {
            let count = h_cusp(w.weight(), mode)?;
            Ok(single(format, w.weight(), count.to_string(), count_json(&count)))
        }
        Command::Hq(w) => hq(format, w.weight(), mode),
        Command::Table { kind, k_max, m1_max, m2_max, n1_cap } => {
            table(format, mode, *kind, *k_max, *m1_max, *m2_max, *n1_cap)
        }
        Command::Torsion => torsion(format),
        Command::Verify { fixture_dir, n1_max } => verify(format, fixture_dir.as_deref(), *n1_max),
    }
}

fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

fn single(format: Format, w: HighestWeight, text: String, value: Value) -> String {
    match format {
        Format::Text => format!("{text}\n"),
        Format::Csv => csv(&["m1", "m2", "value"], &[vec![w.m1.to_string(), w.m2.to_string(), text]]),
        Format::Json => json_line(&json!({ "m1": w.m1, "m2": w.m2, "value": value })),
    }
}

fn chi(format: Format, w: HighestWeight) -> Outcome {
    let sum = chi_h(w);
    let closed = chi_h_closed(w);
    let agree = sum == closed;
    let text = match format {
        Format::Text if agree => format!("{sum}\n"),
        Format::Text => format!("torsion sum {sum}\nclosed form {closed}\n"),
        Format::Csv => csv(
            &["m1", "m2", "value", "closed", "agree"],
            &[vec![w.m1.to_string(), w.m2.to_string(), sum.to_string(), closed.to_string(), agree.to_string()]],
        ),
        Format::Json => json_line(&json!({
            "m1": w.m1, "m2": w.m2, "value": rat_json(&sum), "closed": rat_json(&closed), "agree": agree,
        })),
    };
    if agree {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::Mismatch(format!("torsion sum and closed form disagree at {w}")))
    }
}

fn hq(format: Format, w: HighestWeight, mode: &ZkMode) -> Outcome {
    let degrees = h_by_degree(w, mode)?;
    let total = degrees.total();
    Ok(match format {
        Format::Text => format!("h = {degrees}\ntotal = {total}\n"),
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = degrees
                .0
                .iter()
                .enumerate()
                .map(|(q, c)| vec![w.m1.to_string(), w.m2.to_string(), q.to_string(), c.to_string()])
                .collect();
            rows.push(vec![w.m1.to_string(), w.m2.to_string(), "total".into(), total.to_string()]);
            csv(&["m1", "m2", "q", "value"], &rows)
        }
        Format::Json => {
            let h: Vec<Value> = degrees.0.iter().map(count_json).collect();
            json_line(&json!({ "h": h, "total": count_json(&total) }))
        }
    })
}

#[allow(clippy::too_many_arguments)]
fn table(
    format: Format,
    mode: &ZkMode,
    kind: TableKind,
    k_max: u64,
    m1_max: Option<u64>,
    m2_max: u64,
    n1_cap: u64,
) -> Outcome {
    if kind == TableKind::EulerSym {
        if 2 * k_max > n1_cap {
            return Err(Failure::Invalid(format!("2 * k_max = {} exceeds --n1-cap {n1_cap}", 2 * k_max)));
        }
        return Ok(euler_sym_table(format, k_max));
    }
    let m1_max = m1_max.unwrap_or(if kind == TableKind::EulerWeight { 30 } else { 28 });
    if m1_max + m2_max > n1_cap {
        return Err(Failure::Invalid(format!("m1_max + m2_max = {} exceeds --n1-cap {n1_cap}", m1_max + m2_max)));
    }
    let m1s: Vec<u64> = (0..=m1_max).step_by(2).collect();
    let m2s: Vec<u64> = (0..=m2_max).collect();
    let cells: Vec<HighestWeight> = m1s
        .iter()
        .flat_map(|&m1| m2s.iter().map(move |&m2| HighestWeight::new(m1, m2)))
        .collect();
    let values: Vec<SymbolicCount> = cells
        .par_iter()
        .map(|&w| -> sp4coh::Result<SymbolicCount> {
            match kind {
                TableKind::EulerWeight => Ok(SymbolicCount::constant(chi_h(w))),
                TableKind::Cuspidal => h_cusp(w, mode),
                TableKind::HTotal => h_total(w, mode),
                TableKind::EulerSym => unreachable!("handled above"),
            }
        })
        .collect::<sp4coh::Result<_>>()?;
    let rows: Vec<&[SymbolicCount]> = values.chunks(m2s.len()).collect();
    Ok(match format {
        Format::Text => {
            let mut grid = vec![std::iter::once("m1\\m2".to_string()).chain(m2s.iter().map(u64::to_string)).collect()];
            for (m1, row) in m1s.iter().zip(&rows) {
                grid.push(std::iter::once(m1.to_string()).chain(row.iter().map(table_notation)).collect());
            }
            aligned(&grid)
        }
        Format::Csv => {
            let lines: Vec<Vec<String>> = cells
                .iter()
                .zip(&values)
                .map(|(w, v)| vec![w.m1.to_string(), w.m2.to_string(), table_notation(v)])
                .collect();
            csv(&["m1", "m2", "value"], &lines)
        }
        Format::Json => {
            let rows: Vec<Vec<Value>> = rows.iter().map(|r| r.iter().map(count_json).collect()).collect();
            json_line(&json!({ "kind": kind_name(kind), "m1": m1s, "m2": m2s, "rows": rows }))
        }
    })
}

fn kind_name(kind: TableKind) -> &'static str {
    match kind {
        TableKind::EulerSym => "euler_sym",
        TableKind::EulerWeight => "euler_weight",
        TableKind::Cuspidal => "cuspidal",
        TableKind::HTotal => "h_total",
    }
}

/// Laid out as `k = 15 i + j`, row `i`, column `j`.
fn euler_sym_table(format: Format, k_max: u64) -> String {
    let ks: Vec<u64> = (0..=k_max).collect();
    let values: Vec<Rat> = ks.par_iter().map(|&k| chi_h_sym(2 * k)).collect();
    match format {
        Format::Text => {
            let mut grid = vec![std::iter::once("i\\j".to_string()).chain((0..15).map(|j: u64| j.to_string())).collect()];
            for (i, chunk) in values.chunks(15).enumerate() {
                grid.push(std::iter::once(i.to_string()).chain(chunk.iter().map(Rat::to_string)).collect());
            }
            aligned(&grid)
        }
        Format::Csv => {
            let lines: Vec<Vec<String>> = ks
                .iter()
                .zip(&values)
                .map(|(k, v)| vec![(2 * k).to_string(), "0".into(), v.to_string()])
                .collect();
            csv(&["m1", "m2", "value"], &lines)
        }
        Format::Json => {
            let vals: Vec<Value> = values.iter().map(rat_json).collect();
            json_line(&json!({ "kind": "euler_sym", "k": ks, "values": vals }))
        }
    }
}

fn torsion(format: Format) -> Outcome {
    Ok(match format {
        Format::Text => {
            let mut grid = vec![["id", "order", "charpoly", "case", "family", "chi", "matrix"].map(String::from).to_vec()];
            for c in classes() {
                grid.push(vec![
                    format!("T{}", c.id),
                    c.order.to_string(),
                    c.charpoly.to_string(),
                    format!("{:?}", c.case),
                    c.family.to_string(),
                    c.centralizer_chi.to_string(),
                    matrix_text(c.matrix()),
                ]);
            }
            aligned(&grid)
        }
        Format::Csv => {
            let lines: Vec<Vec<String>> = classes()
                .iter()
                .map(|c| {
                    vec![
                        c.id.to_string(),
                        c.order.to_string(),
                        c.charpoly.to_string(),
                        format!("{:?}", c.case),
                        c.family.to_string(),
                        c.centralizer_chi.to_string(),
                        matrix_text(c.matrix()),
                    ]
                })
                .collect();
            csv(&["id", "order", "charpoly", "case", "family", "chi", "matrix"], &lines)
        }
        Format::Json => {
            let v = serde_json::to_value(classes()).map_err(|e| Failure::Mismatch(e.to_string()))?;
            json_line(&v)
        }
    })
}

/// Rows separated by `;`, entries by spaces.
fn matrix_text(m: &sp4coh::Mat4) -> String {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

fn verify(format: Format, dir: Option<&std::path::Path>, n1_max: u64) -> Outcome {
    let fixtures = match dir {
        Some(d) => Fixtures::from_dir(d),
        None => Fixtures::load(),
    }
    .map_err(|e| Failure::Mismatch(e.to_string()))?;
    let bounds = Bounds {
        n1_identities: n1_max,
        n1_traces: n1_max,
        ..Bounds::default()
    };
    let checks = run_all(&fixtures, bounds);
    let all_passed = checks.iter().all(|c| c.passed());
    let text = match format {
        Format::Text => {
            let mut out = String::new();
            for c in &checks {
                let status = if c.passed() { "PASS" } else { "FAIL" };
                out.push_str(&format!("{status} {} ({} compared, {} ms)\n", c.name, c.compared, c.millis));
                for f in &c.failures {
                    out.push_str(&format!("  {f}\n"));
                }
            }
            out
        }
        Format::Csv => {
            let lines: Vec<Vec<String>> = checks
                .iter()
                .map(|c| vec![c.name.to_string(), c.passed().to_string(), c.compared.to_string(), c.failures.len().to_string()])
                .collect();
            csv(&["check", "passed", "compared", "failures"], &lines)
        }
        Format::Json => {
            let v = json!({
                "passed": all_passed,
                "checks": checks.iter().map(|c| json!({
                    "name": c.name, "passed": c.passed(), "compared": c.compared, "failures": c.failures,
                })).collect::<Vec<_>>(),
            });
            json_line(&v)
        }
    };
    if all_passed {
        Ok(text)
    } else {
        print!("{text}");
        let failed: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
        Err(Failure::Mismatch(format!("failed checks: {}", failed.join(", "))))
    }
}
