use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::FieldSpec;

/// Which module a Betti table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subject {
    /// The Stanley–Reisner ring `S/I`.
    #[serde(rename = "quotient")]
    QuotientRing,
    /// The Stanley–Reisner ideal `I`.
    #[serde(rename = "ideal")]
    Ideal,
}

/// Graded Betti numbers `β_{i,j}` keyed by homological degree `i` and
/// internal degree `j`. Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub subject: Subject,
    pub n: usize,
    pub field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(subject: Subject, n: usize, field: FieldSpec) -> Self {
        BettiTable {
            subject,
            n,
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries<I>(subject: Subject, n: usize, field: FieldSpec, entries: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), u64)>,
    {
        let mut t = BettiTable::new(subject, n, field);
        for ((i, j), v) in entries {
            t.add(i, j, v);
        }
        t
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological degree with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `Σ_j β_{i,j}`.
    pub fn column_total(&self, i: usize) -> u64 {
        self.entries
            .range((i, 0)..=(i, usize::MAX))
            .map(|(_, &v)| v)
            .sum()
    }

    /// Internal degrees `j` with `β_{i,j} ≠ 0`.
    pub fn degrees_in_column(&self, i: usize) -> BTreeSet<usize> {
        self.entries
            .range((i, 0)..=(i, usize::MAX))
            .map(|(&(_, j), _)| j)
            .collect()
    }

    /// `Σ_i (-1)^i β_{i,j}` for a fixed internal degree.
    pub fn alternating_sum(&self, j: usize) -> i64 {
        self.entries
            .iter()
            .filter(|(&(_, jj), _)| jj == j)
            .map(|(&(i, _), &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }

    /// Text layout of computer-algebra systems: a header of homological
    /// degrees, a `total:` row, then one row per `j - i` with `.` for zero.
    pub fn render_text(&self) -> String {
        let Some(pdim) = self.projective_dimension() else {
            return "total:\n".to_string();
        };
        let offsets = self.entries.keys().map(|&(i, j)| j as isize - i as isize);
        let lo = offsets.clone().min().unwrap();
        let hi = offsets.max().unwrap();

        let mut cells: Vec<(String, Vec<String>)> = Vec::new();
        cells.push((String::new(), (0..=pdim).map(|i| i.to_string()).collect()));
        cells.push((
            "total:".into(),
            (0..=pdim)
                .map(|i| self.column_total(i).to_string())
                .collect(),
        ));
        for r in lo..=hi {
            let row = (0..=pdim)
                .map(|i| {
                    let j = i as isize + r;
                    match j {
                        j if j < 0 => ".".to_string(),
                        j => match self.get(i, j as usize) {
                            0 => ".".to_string(),
                            v => v.to_string(),
                        },
                    }
                })
                .collect();
            cells.push((format!("{r}:"), row));
        }

        let label_width = cells.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let col_widths: Vec<usize> = (0..=pdim)
            .map(|c| cells.iter().map(|(_, row)| row[c].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for (label, row) in &cells {
            write!(out, "{label:>label_width$}").unwrap();
            for (cell, w) in row.iter().zip(&col_widths) {
                write!(out, " {cell:>w$}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Inverse of [`BettiTable::render_text`]; metadata the layout does not
    /// carry is supplied by the caller. Totals are checked.
    pub fn parse_text(text: &str, subject: Subject, n: usize, field: FieldSpec) -> Result<Self> {
        let mut table = BettiTable::new(subject, n, field);
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        if lines.len() == 1 && lines[0].1.trim() == "total:" {
            return Ok(table);
        }
        let Some(&(header_line, header)) = lines.first() else {
            return Err(Error::parse(1, "empty Betti table"));
        };
        let columns: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(header_line, "header must list homological degrees"))?;
        if columns.iter().enumerate().any(|(idx, &c)| idx != c) {
            return Err(Error::parse(header_line, "header must be 0 1 2 ..."));
        }
        let mut totals: Option<Vec<u64>> = None;
        for &(line, l) in &lines[1..] {
            let mut parts = l.split_whitespace();
            let label = parts.next().unwrap_or_default();
            let cells: Vec<&str> = parts.collect();
            if cells.len() != columns.len() {
                return Err(Error::parse(line, "row width does not match header"));
            }
            let values: Vec<u64> = cells
                .iter()
                .map(|c| if *c == "." { Ok(0) } else { c.parse::<u64>() })
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(line, "cells must be integers or `.`"))?;
            if label == "total:" {
                totals = Some(values);
                continue;
            }
            let r: isize = label
                .strip_suffix(':')
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::parse(line, format!("bad row label `{label}`")))?;
            for (i, v) in values.into_iter().enumerate() {
                if v == 0 {
                    continue;
                }
                let j = i as isize + r;
                if j < 0 {
                    return Err(Error::parse(line, "negative internal degree"));
                }
                table.add(i, j as usize, v);
            }
        }
        let totals = totals.ok_or_else(|| Error::parse(header_line, "missing `total:` row"))?;
        for (i, &t) in totals.iter().enumerate() {
            if table.column_total(i) != t {
                return Err(Error::parse(
                    header_line,
                    format!("column {i} does not sum to {t}"),
                ));
            }
        }
        Ok(table)
    }

    /// `i,j,value` rows with a header line.
    pub fn render_csv(&self) -> String {
        let mut out = String::from("i,j,value\n");
        for ((i, j), v) in self.entries() {
            writeln!(out, "{i},{j},{v}").unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct EntryRecord {
    i: usize,
    j: usize,
    value: u64,
}

#[derive(Serialize, Deserialize)]
struct TableRecord {
    subject: Subject,
    n: usize,
    field: FieldSpec,
    entries: Vec<EntryRecord>,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableRecord {
            subject: self.subject,
            n: self.n,
            field: self.field,
            entries: self
                .entries()
                .map(|((i, j), value)| EntryRecord { i, j, value })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = TableRecord::deserialize(d)?;
        Ok(BettiTable::from_entries(
            rec.subject,
            rec.n,
            rec.field,
            rec.entries.into_iter().map(|e| ((e.i, e.j), e.value)),
        ))
    }
}
