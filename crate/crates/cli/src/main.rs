// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

//! `cliffq` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

mod program;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cliffq::fermion::{verify_car, CarFamily};
use cliffq::literal::format_real;
use cliffq::matrix::{decompose, string_matrix, REPRESENTATION_TOL};
use cliffq::pauli::{anticommutator, generator, Precision, MAX_QUBITS};
use cliffq::real::Rotor;
use cliffq::state::qubit_limit_from_env;
use cliffq::{CliffordElement, DenseMatrix, Signature, StateVector};

use program::CircuitProgram;

const DENSE_RELATIONS_MAX: usize = 6;
const FERMION_MAX: usize = 12;
const CHOP_TOL: f64 = 1e-12;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Library(#[from] cliffq::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

#[derive(Parser)]
#[command(
    name = "cliffq",
    version,
    about = "Clifford algebras as Pauli-string algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Symbolic,
    Dense,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the 2n generators square to one and pairwise anticommute.
    Relations {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: Mode,
    },
    /// Expand a dense matrix file in the Pauli-string basis.
    Decompose { matrix: PathBuf },
    /// Run a circuit file from |0…0⟩.
    Simulate {
        circuit: PathBuf,
        /// State file to write; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Register size when the file has no `qubits` header.
        #[arg(long)]
        qubits: Option<usize>,
    },
    /// Rotate a 3-vector with the rotor cos(θ/2) + sin(θ/2) e_i e_j of Cl(3,0).
    Rotor {
        #[arg(long, allow_negative_numbers = true)]
        angle: f64,
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        plane: Vec<usize>,
        #[arg(long, num_args = 3, value_names = ["X", "Y", "Z"], allow_negative_numbers = true)]
        vector: Vec<f64>,
    },
    /// Verify the canonical anticommutation relations for n modes.
    Fermion {
        #[arg(long = "n")]
        n: usize,
    },
}

/// Appends one line to a report buffer.
macro_rules! emit {
    ($out:expr, $($arg:tt)*) => {{
        $out.push_str(&format!($($arg)*));
        $out.push('\n');
    }};
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn relations(report: &mut String, n: usize, mode: Mode) -> Result<bool, CliError> {
    let cap = match mode {
        Mode::Symbolic => MAX_QUBITS,
        Mode::Dense => DENSE_RELATIONS_MAX,
    };
    if n == 0 || n > cap {
        return Err(CliError::Usage(format!(
            "--n must be in 1..={cap} for this mode, got {n}"
        )));
    }
    let gens = (0..2 * n)
        .map(|j| generator(n, j))
        .collect::<Result<Vec<_>, _>>()?;
    let mut worst = 0.0f64;
    let mut pairs = 0usize;
    match mode {
        Mode::Symbolic => {
            let one = CliffordElement::identity(n)?;
            for (i, a) in gens.iter().enumerate() {
                let square = CliffordElement::from(a.mul(a)?);
                worst = worst.max(square.max_abs_diff(&one)?);
                for b in &gens[i + 1..] {
                    worst = worst.max(anticommutator(a, b)?.max_abs_coefficient());
                    pairs += 1;
                }
            }
        }
        Mode::Dense => {
            let mats = gens
                .iter()
                .map(string_matrix)
                .collect::<Result<Vec<_>, _>>()?;
            let one = DenseMatrix::identity(1 << n)?;
            for (i, a) in mats.iter().enumerate() {
                worst = worst.max(a.try_mul(a)?.max_abs_diff(&one)?);
                for b in &mats[i + 1..] {
                    worst = worst.max(a.try_mul(b)?.try_add(&b.try_mul(a)?)?.max_abs_entry());
                    pairs += 1;
                }
            }
        }
    }
    let ok = match mode {
        Mode::Symbolic => worst == 0.0,
        Mode::Dense => worst < REPRESENTATION_TOL,
    };
    emit!(report, "generators {}", gens.len());
    for (j, g) in gens.iter().enumerate() {
        emit!(report, "  g{j} = {}", g.letters_string());
    }
    emit!(report, "pairs {pairs}");
    emit!(report, "max violation {}", format_real(worst));
    emit!(report, "{}", verdict(ok));
    Ok(ok)
}

fn decompose_file(report: &mut String, path: &Path) -> Result<bool, CliError> {
    let m = DenseMatrix::from_text(&read(path)?)?;
    let e = decompose(&m)?.chop(CHOP_TOL);
    emit!(report, "{}", e.format_with(Precision::Full));
    Ok(true)
}

fn simulate(
    report: &mut String,
    circuit: &Path,
    out: Option<&Path>,
    qubits: Option<usize>,
) -> Result<bool, CliError> {
    let program = CircuitProgram::parse(&read(circuit)?, qubits)?;
    let limit = qubit_limit_from_env();
    if program.n > limit {
        return Err(CliError::Usage(format!(
            "{} qubits exceeds the state-vector limit of {limit}",
            program.n
        )));
    }
    let psi: StateVector = program.run()?;
    match out {
        Some(path) => {
            fs::write(path, psi.to_text()).map_err(|source| CliError::Io {
                path: path.to_owned(),
                source,
            })?;
            emit!(report, "qubits {}", psi.n());
            emit!(report, "steps {}", program.steps.len());
            emit!(report, "norm {}", format_real(psi.norm()));
        }
        None => report.push_str(&psi.to_text()),
    }
    Ok(true)
}

fn rotor(
    report: &mut String,
    angle: f64,
    plane: &[usize],
    vector: &[f64],
) -> Result<bool, CliError> {
    let (i, j) = (plane[0], plane[1]);
    if !(1..=3).contains(&i) || !(1..=3).contains(&j) || i == j {
        return Err(CliError::Usage(format!(
            "--plane needs two distinct indices in 1..=3, got {i} {j}"
        )));
    }
    if !angle.is_finite() || vector.iter().any(|x| !x.is_finite()) {
        return Err(CliError::Usage("angle and vector must be finite".into()));
    }
    let sig = Signature::new(3, 0)?;
    let r = Rotor::from_plane(sig, i - 1, j - 1, angle)?;
    let rotated = r.rotate(vector)?;
    let matrix = r.rotation_matrix()?;
    let terms: Vec<String> = r
        .multivector()
        .terms()
        .map(|(b, v)| match b.grade() {
            0 => format_real(v),
            _ => format!("{} {b}", format_real(v)),
        })
        .collect();
    emit!(
        report,
        "rotor {}",
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    );
    let row = |xs: &mut dyn Iterator<Item = f64>| xs.map(format_real).collect::<Vec<_>>().join(" ");
    emit!(report, "vector {}", row(&mut rotated.iter().copied()));
    emit!(report, "matrix");
    for r in 0..3 {
        emit!(report, "  {}", row(&mut matrix.row(r).iter().copied()));
    }
    Ok(true)
}

fn fermion(report: &mut String, n: usize) -> Result<bool, CliError> {
    if n == 0 || n > FERMION_MAX {
        return Err(CliError::Usage(format!(
            "--n must be in 1..={FERMION_MAX}, got {n}"
        )));
    }
    let car = verify_car(n)?;
    for family in CarFamily::ALL {
        emit!(report, "{}", family.label());
        for check in car.checks.iter().filter(|c| c.family == family) {
            let dense = check
                .dense_violation
                .map(|v| format!(" dense {}", format_real(v)))
                .unwrap_or_default();
            emit!(
                report,
                "  i={} j={} {} symbolic {}{dense}",
                check.i,
                check.j,
                verdict(check.passed(REPRESENTATION_TOL)),
                format_real(check.symbolic_violation)
            );
        }
    }
    let ok = car.passed(REPRESENTATION_TOL);
    emit!(
        report,
        "max symbolic violation {}",
        format_real(car.max_symbolic_violation())
    );
    if let Some(d) = car.max_dense_violation() {
        emit!(report, "max dense violation {}", format_real(d));
    }
    emit!(report, "{}", verdict(ok));
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = String::new();
    let outcome = match &cli.command {
        Command::Relations { n, mode } => relations(&mut report, *n, *mode),
        Command::Decompose { matrix } => decompose_file(&mut report, matrix),
        Command::Simulate {
            circuit,
            out,
            qubits,
        } => simulate(&mut report, circuit, out.as_deref(), *qubits),
        Command::Rotor {
            angle,
            plane,
            vector,
        } => rotor(&mut report, *angle, plane, vector),
        Command::Fermion { n } => fermion(&mut report, *n),
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(report.as_bytes());
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
