// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

//! Circuit files.
//!
//! ```text
//! # comment
//! qubits 2            optional header, must come first
//! state 01            reset to a basis state (first bit is qubit n-1)
//! apply XX + 0.5 ZI   multiply by an element
//! rot 0.25 XY         multiply by exp(iθP)
//! ```
//!
//! Instructions are separated by newlines or `;`.

use cliffq::literal::parse_real;
use cliffq::matrix::{exp_i_hermitian, MAX_DENSE_QUBITS};
use cliffq::{CliffordElement, Complex64, PauliString, StateVector};

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Step {
    Apply(CliffordElement),
    /// `exp(iθP)` with `P` a phase-free string.
    Rot {
        theta: f64,
        string: PauliString,
    },
    State(Vec<u8>),
}

impl Step {
    fn qubits(&self) -> usize {
        match self {
            Step::Apply(e) => e.n(),
            Step::Rot { string, .. } => string.n(),
            Step::State(bits) => bits.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CircuitProgram {
    pub n: usize,
    pub steps: Vec<Step>,
}

fn bad(line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("line {line}: {msg}"))
}

fn parse_step(line: usize, instr: &str) -> Result<Option<Step>, CliError> {
    let (keyword, rest) = instr.split_once(char::is_whitespace).unwrap_or((instr, ""));
    let rest = rest.trim();
    let step = match keyword {
        "apply" => Step::Apply(rest.parse().map_err(|e| bad(line, e))?),
        "rot" => {
            let mut parts = rest.split_whitespace();
            let (Some(theta), Some(letters), None) = (parts.next(), parts.next(), parts.next())
            else {
                return Err(bad(line, "expected `rot <theta> <LETTERS>`"));
            };
            let theta = parse_real(theta).map_err(|e| bad(line, e))?;
            let letters = letters
                .chars()
                .map(cliffq::Letter::from_char)
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| bad(line, format!("bad Pauli string `{letters}`")))?;
            let string = PauliString::from_letters(&letters).map_err(|e| bad(line, e))?;
            Step::Rot { theta, string }
        }
        "state" => {
            let bits = rest
                .chars()
                .map(|ch| match ch {
                    '0' => Some(0),
                    '1' => Some(1),
                    _ => None,
                })
                .collect::<Option<Vec<u8>>>()
                .filter(|b| !b.is_empty())
                .ok_or_else(|| bad(line, format!("bad basis state `{rest}`")))?;
            Step::State(bits)
        }
        "qubits" => return Ok(None),
        other => return Err(bad(line, format!("unknown instruction `{other}`"))),
    };
    Ok(Some(step))
}

impl CircuitProgram {
    /// Parses a circuit. `qubits` overrides or supplies the register size
    /// when the file has no header.
    pub fn parse(text: &str, qubits: Option<usize>) -> Result<Self, CliError> {
        let mut header = None;
        let mut steps = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let code = raw.split('#').next().unwrap_or("");
            for instr in code.split(';').map(str::trim).filter(|s| !s.is_empty()) {
                match parse_step(line, instr)? {
                    Some(step) => steps.push((line, step)),
                    None => {
                        if header.is_some() || !steps.is_empty() {
                            return Err(bad(line, "`qubits` must be the first instruction"));
                        }
                        let count = instr["qubits".len()..].trim();
                        let count = count
                            .parse::<usize>()
                            .map_err(|_| bad(line, format!("bad qubit count `{count}`")))?;
                        header = Some(count);
                    }
                }
            }
        }
        let n = qubits
            .or(header)
            .or_else(|| steps.first().map(|(_, s)| s.qubits()))
            .ok_or_else(|| {
                CliError::Usage("empty program: give --qubits or a `qubits` header".into())
            })?;
        if n == 0 {
            return Err(CliError::Usage("qubit count must be at least 1".into()));
        }
        for (line, step) in &steps {
            if step.qubits() != n {
                return Err(bad(
                    *line,
                    format!("acts on {} qubits, program has {n}", step.qubits()),
                ));
            }
        }
        Ok(CircuitProgram {
            n,
            steps: steps.into_iter().map(|(_, s)| s).collect(),
        })
    }

    /// Runs from `|0…0⟩`.
    pub fn run(&self) -> Result<StateVector, CliError> {
        let mut psi = StateVector::basis_index(self.n, 0)?;
        for step in &self.steps {
            psi = match step {
                Step::Apply(e) => psi.apply_element(e)?,
                Step::State(bits) => StateVector::basis_state(bits)?,
                Step::Rot { theta, string } if self.n <= MAX_DENSE_QUBITS => {
                    let h = CliffordElement::from(*string).scale(Complex64::new(*theta, 0.0));
                    psi.apply_unitary_dense(&exp_i_hermitian(&h)?)?
                }
                // P² = 1, so exp(iθP) = cos θ + i sin θ P.
                Step::Rot { theta, string } => {
                    psi.scale(Complex64::new(theta.cos(), 0.0)).try_add(
                        &psi.apply_string(string)?
                            .scale(Complex64::new(0.0, theta.sin())),
                    )?
                }
            };
        }
        Ok(psi)
    }
}
