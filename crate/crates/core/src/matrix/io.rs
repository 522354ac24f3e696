// Copyright 2026 The cliffq Authors
// SPDX-License-Identifier: Apache-2.0

//! Text format: a `dim d` header, then `d` rows of `d` complex literals.

use crate::error::{Error, Result};
use crate::literal::{format_complex, parse_complex};
use crate::matrix::dense::{log2_dim, DenseMatrix};

impl DenseMatrix {
    pub fn to_text(&self) -> String {
        let mut out = format!("dim {}\n", self.dim());
        for r in 0..self.dim() {
            let row: Vec<String> = self.row(r).iter().map(|&z| format_complex(z)).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let dim = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["dim", d] => d
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad dimension `{d}`")))?,
            _ => return Err(Error::Parse(format!("expected `dim d`, found `{header}`"))),
        };
        log2_dim(dim)?;
        let mut m = DenseMatrix::zeros(dim)?;
        for r in 0..dim {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {r}")))?;
            let entries: Vec<&str> = line.split_whitespace().collect();
            if entries.len() != dim {
                return Err(Error::Parse(format!(
                    "row {r} has {} entries, expected {dim}",
                    entries.len()
                )));
            }
            for (c, entry) in entries.into_iter().enumerate() {
                m[(r, c)] = parse_complex(entry)?;
            }
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected trailing line `{extra}`")));
        }
        Ok(m)
    }
}
