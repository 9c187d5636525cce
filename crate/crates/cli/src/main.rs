use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use poristic_cli::commands::{self, Outcome};
use poristic_cli::{svg, CliError, Exit, Report, Scene};

/// Circumcircle / Euler circle pairs: verdicts, triangle construction,
/// fertile arcs, i-conics and figures.
#[derive(Debug, Parser)]
#[command(name = "poristic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Scene JSON file.
    #[arg(long)]
    scene: PathBuf,
    /// Print the report to stdout as JSON.
    #[arg(long)]
    json: bool,
    /// Also write the report JSON to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the pair is realizable and by which kind of triangle.
    Check(Common),
    /// Build the triangle with a vertex at the seed angle.
    Construct {
        #[command(flatten)]
        common: Common,
        /// Seed angle on the circumcircle, in radians. Defaults to the scene seeds.
        #[arg(long, allow_negative_numbers = true)]
        seed_angle: Option<f64>,
    },
    /// Sample triangles uniformly over the fertile arcs.
    Family {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 12)]
        n: usize,
    },
    /// Fertile arcs of the circumcircle.
    Arcs(Common),
    /// The i-conic of the scene triangle or of the first family member.
    Iconic(Common),
    /// Draw the scene and a report as SVG.
    Render {
        #[arg(long)]
        scene: PathBuf,
        /// Report from another subcommand; computed from the scene if absent.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Family size when no report is given and the scene has no triangle.
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

fn summary(report: &Report) -> String {
    let mut s = format!("verdict: {:?}\n", report.verdict);
    for (name, value) in &report.residuals {
        s += &format!("  {name:<24} {value:e}\n");
    }
    if !report.triangles.is_empty() {
        s += &format!("triangles: {}\n", report.triangles.len());
        for [a, b, c] in &report.triangles {
            s += &format!(
                "  ({}, {}) ({}, {}) ({}, {})\n",
                a.x, a.y, b.x, b.y, c.x, c.y
            );
        }
    }
    if let Some(arcs) = &report.arcs {
        for arc in &arcs.arcs {
            s += &format!("arc: [{}, {})\n", arc.start, arc.end);
        }
    }
    if let Some(k) = &report.conic {
        s += &format!(
            "conic: {:?} center ({}, {}) focus ({}, {}) a = {} c = {}\n",
            k.kind, k.center.x, k.center.y, k.focus.x, k.focus.y, k.semi_major, k.focal_dist
        );
    }
    s
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e.to_string()))
}

fn emit(outcome: Outcome, common: &Common) -> Result<Exit, CliError> {
    let report = &outcome.report;
    if let Some(name) = report.non_finite_residual() {
        return Err(CliError::InvalidScene(format!(
            "residual {name} is not finite"
        )));
    }
    if let Some(path) = &common.out {
        write_file(path, &report.to_json())?;
    }
    let text = if common.json {
        report.to_json() + "\n"
    } else {
        summary(report)
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
    if let Some(message) = &report.message {
        eprintln!("poristic: {message}");
    }
    Ok(outcome.exit)
}

fn run(cli: Cli) -> Result<Exit, CliError> {
    match cli.command {
        Command::Check(common) => {
            let scene = Scene::load(&common.scene)?.validate()?;
            emit(commands::check(&scene), &common)
        }
        Command::Construct { common, seed_angle } => {
            let scene = Scene::load(&common.scene)?.validate()?;
            emit(commands::construct(&scene, seed_angle)?, &common)
        }
        Command::Family { common, n } => {
            let scene = Scene::load(&common.scene)?.validate()?;
            emit(commands::family(&scene, n), &common)
        }
        Command::Arcs(common) => {
            let scene = Scene::load(&common.scene)?.validate()?;
            emit(commands::arcs(&scene), &common)
        }
        Command::Iconic(common) => {
            let scene = Scene::load(&common.scene)?.validate()?;
            emit(commands::iconic(&scene), &common)
        }
        Command::Render {
            scene,
            report,
            n,
            out,
        } => {
            let scene = Scene::load(&scene)?.validate()?;
            let report = match report {
                Some(path) => Report::load(&path)?,
                None => commands::render_defaults(&scene, n),
            };
            write_file(&out, &svg::render(&scene, &report)?)?;
            Ok(Exit::Ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are malformed input, not clap's default code 2
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Exit::Malformed.code() as u8),
            };
        }
    };
    let exit = run(cli).unwrap_or_else(|e| {
        eprintln!("poristic: {e}");
        Exit::Malformed
    });
    ExitCode::from(exit.code() as u8)
}
