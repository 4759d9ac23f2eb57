//! Text forms of triangles and sequences: csv, aligned columns and b-files.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::exact::{parse_rational, render, ProgressionParams};
use crate::sheffer::{Family, Triangle};
use crate::ExactRational;

/// One row per line, comma-separated canonical rationals.
pub fn to_csv(t: &Triangle<ExactRational>) -> String {
    let mut out = String::new();
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(render).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn parse_csv(text: &str, family: Family, params: ProgressionParams) -> Result<Triangle<ExactRational>> {
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| line.split(',').map(|c| parse_rational(c.trim())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Err(Error::Parse("empty csv".into()));
    }
    Triangle::new(rows, family, params)
}

/// Right-aligned columns, each as wide as its widest entry.
pub fn to_pretty(t: &Triangle<ExactRational>) -> String {
    let cells: Vec<Vec<String>> = t.rows().iter().map(|r| r.iter().map(render).collect()).collect();
    let mut widths = vec![0usize; t.size() + 1];
    for row in &cells {
        for (m, c) in row.iter().enumerate() {
            widths[m] = widths[m].max(c.len());
        }
    }
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().enumerate().map(|(m, c)| format!("{c:>w$}", w = widths[m])).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Entries row by row, `(0,0), (1,0), (1,1), (2,0), ...`.
pub fn flatten(t: &Triangle<ExactRational>) -> Vec<ExactRational> {
    t.rows().iter().flatten().cloned().collect()
}

/// Smallest triangle size whose flattening has at least `count` entries.
pub fn rows_for_count(count: usize) -> usize {
    let mut n = 0;
    while (n + 1) * (n + 2) / 2 < count {
        n += 1;
    }
    n
}

/// `index value` lines starting at `offset`.
pub fn bfile<S: AsRef<str>>(values: &[S], offset: i64) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        writeln!(out, "{} {}", offset + i as i64, v.as_ref()).expect("writing to a String");
    }
    out
}
