use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde::Serialize;
use tilecohom::{
    cohomology, cohomology_groups, hull_cohomology, primitivity, smith_normal_form,
    stationary_limit, DirectLimit,
};

use crate::format::{load_complex, parse_matrix, read_file, FormatError, Pretty};
use crate::report::{CohomologyJson, DirlimJson, HullJson, SnfJson, ValidateJson};

/// Exact cohomology of 2-complexes and their substitution hulls.
#[derive(Debug, Parser)]
#[command(name = "tilecohom", version)]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print nothing on success; the exit code carries the result.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the chain-complex and substitution identities of a complex file.
    Validate { path: String },
    /// Cohomology groups of the complex, with induced maps if present.
    Cohomology { path: String },
    /// Cohomology and K-theory of the hull of a substitution complex.
    Hull { path: String },
    /// Smith normal form of a matrix file.
    Snf { path: String },
    /// Stationary direct limit of a square matrix file.
    Dirlim { path: String },
}

/// Everything a command produces; `main` only prints and exits.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    /// 0 success, 1 mathematical or validation failure, 2 input failure.
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Input(FormatError),
    Math(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Input(e)
    }
}

impl From<tilecohom::Error> for Failure {
    fn from(e: tilecohom::Error) -> Self {
        Failure::Math(e.to_string())
    }
}

/// A successful command: text and JSON renderings plus the exit code.
struct Report {
    code: i32,
    text: String,
    json: String,
}

fn report<T: Serialize>(code: i32, text: String, value: &T) -> Report {
    Report {
        code,
        text,
        json: serde_json::to_string_pretty(value).expect("report serializes") + "\n",
    }
}

pub fn run(cli: &Cli) -> Output {
    let result = match &cli.command {
        Command::Validate { path } => validate(path),
        Command::Cohomology { path } => cohomology_cmd(path),
        Command::Hull { path } => hull(path),
        Command::Snf { path } => snf(path),
        Command::Dirlim { path } => dirlim(path),
    };
    match result {
        Ok(r) => Output {
            code: r.code,
            stdout: match (cli.quiet, cli.json) {
                (true, _) => String::new(),
                (false, true) => r.json,
                (false, false) => r.text,
            },
            stderr: String::new(),
        },
        Err(Failure::Input(e)) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Err(Failure::Math(msg)) => Output {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn validate(path: &str) -> Result<Report, Failure> {
    let loaded = load_complex(path)?;
    let violations = match loaded.substitution_complex() {
        Some(sc) => sc.validate(),
        None => loaded.complex.validate(),
    };
    let lines: Vec<String> = violations.iter().map(ToString::to_string).collect();
    let text = if lines.is_empty() {
        "valid\n".to_string()
    } else {
        lines.iter().map(|l| format!("violation: {l}\n")).collect()
    };
    let code = i32::from(!lines.is_empty());
    Ok(report(
        code,
        text,
        &ValidateJson {
            valid: lines.is_empty(),
            violations: lines,
        },
    ))
}

fn cohomology_cmd(path: &str) -> Result<Report, Failure> {
    let loaded = load_complex(path)?;
    let r = match loaded.substitution_complex() {
        Some(sc) => cohomology(&sc)?,
        None => cohomology_groups(&loaded.complex)?,
    };
    let mut text = String::new();
    for (i, h) in r.groups().iter().enumerate() {
        writeln!(text, "H{i}: {}", h.group).unwrap();
    }
    if let Some(m) = &r.maps {
        for (i, g) in [&m.g0, &m.g1, &m.g2].iter().enumerate() {
            write!(text, "H{i}(gamma):\n{}", Pretty(&g.matrix)).unwrap();
        }
    }
    Ok(report(0, text, &CohomologyJson::new(&loaded.name, &r)))
}

fn hull(path: &str) -> Result<Report, Failure> {
    let loaded = load_complex(path)?;
    let sc = loaded.substitution_complex().ok_or_else(|| {
        Failure::Math("hull needs substitution matrices gamma1 and gamma2".into())
    })?;
    let r = cohomology(&sc)?;
    let h = hull_cohomology(&r).map_err(|e| match e {
        tilecohom::Error::UnclassifiedInput(_) => unclassified(&r),
        other => other.into(),
    })?;
    // a substitution with negative entries has no Perron-Frobenius theory
    let prim = primitivity(&sc.b2).unwrap_or((false, None));
    let mut text = String::new();
    for (i, l) in [&h.h0, &h.h1, &h.h2].iter().enumerate() {
        writeln!(text, "H{i}(Omega): {l}").unwrap();
    }
    writeln!(text, "K0: {}\nK1: {}", h.k0, h.k1).unwrap();
    match prim {
        (true, Some(k)) => writeln!(text, "primitive: yes (power {k} is positive)").unwrap(),
        _ => writeln!(text, "primitive: no").unwrap(),
    }
    Ok(report(0, text, &HullJson::new(&h, prim)))
}

/// Names the first limit that could not be classified, with its presentation.
fn unclassified(r: &tilecohom::CohomologyReport) -> Failure {
    let maps = r.maps.as_ref().expect("hull reports carry maps");
    for (i, (h, g)) in [(&r.h0, &maps.g0), (&r.h1, &maps.g1), (&r.h2, &maps.g2)]
        .into_iter()
        .enumerate()
    {
        if let Ok(l @ DirectLimit::Presented { .. }) = tilecohom::torsion_killing_limit(&h.group, g)
        {
            return Failure::Math(format!(
                "H{i}(Omega) is not a supported limit; K-theory needs all three classified\n{l}"
            ));
        }
    }
    Failure::Math("a limit could not be classified".into())
}

fn snf(path: &str) -> Result<Report, Failure> {
    let m = parse_matrix(&read_file(path)?)?;
    let s = smith_normal_form(&m);
    let factors: Vec<String> = s
        .invariant_factors()
        .iter()
        .map(ToString::to_string)
        .collect();
    let text = format!(
        "P =\n{}D =\n{}Q =\n{}rank: {}\ninvariant factors: {}\n",
        Pretty(&s.p),
        Pretty(&s.d),
        Pretty(&s.q),
        s.rank,
        if factors.is_empty() {
            "none".to_string()
        } else {
            factors.join(" ")
        }
    );
    Ok(report(0, text, &SnfJson::new(&s)))
}

fn dirlim(path: &str) -> Result<Report, Failure> {
    let m = parse_matrix(&read_file(path)?)?;
    let l = stationary_limit(&m)?;
    let mut text = l.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok(report(0, text, &DirlimJson::new(&l)))
}
