//! Exact value tables with CSV and JSON forms that round-trip byte for byte.

use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use polybell_core::exact::{parse_rational, Rational};
use polybell_core::pbell::{pbell_number, pbell_poly, PBellBackend};
use polybell_core::polybell::polybell_neg;
use polybell_core::TriangleCache;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    PbellNumbers,
    PolybellNeg,
    PbellPolyCoeffs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRequest {
    pub n_max: usize,
    pub p_max: usize,
    pub kind: TableKind,
    pub backend: PBellBackend,
}

/// One exact cell: a rational, or a coefficient list (lowest degree first)
/// for polynomial tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Value(String),
    Coeffs(Vec<String>),
}

impl Cell {
    fn number(r: &Rational) -> Self {
        Cell::Value(r.to_string())
    }

    fn csv_text(&self) -> String {
        match self {
            Cell::Value(s) => s.clone(),
            Cell::Coeffs(c) => c.join(" "),
        }
    }

    fn check(&self) -> Result<(), TableError> {
        let parts: Vec<&String> = match self {
            Cell::Value(s) => vec![s],
            Cell::Coeffs(c) => c.iter().collect(),
        };
        for p in parts {
            let r = parse_rational(p).map_err(|e| TableError::Parse(e.to_string()))?;
            if r.to_string() != *p {
                return Err(TableError::Parse(format!(
                    "'{p}' is not in canonical num/den form"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableError {
    Parse(String),
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Parse(m) => write!(f, "table parse error: {m}"),
        }
    }
}

impl std::error::Error for TableError {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct JsonCell {
    n: usize,
    p: i64,
    value: Cell,
}

/// Rows indexed by `n`, columns by the (signed) upper index `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub kind: TableKind,
    pub columns: Vec<i64>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    /// Columns are computed in parallel; assembly is sequential.
    pub fn compute(cache: &TriangleCache, req: &TableRequest) -> Table {
        let columns: Vec<i64> = match req.kind {
            TableKind::PolybellNeg => (1..=req.p_max as i64).map(|p| -p).collect(),
            _ => (0..=req.p_max as i64).collect(),
        };
        let cols: Vec<Vec<Cell>> = columns
            .par_iter()
            .map(|&p| {
                let pu = p.unsigned_abs() as usize;
                (0..=req.n_max)
                    .map(|n| match req.kind {
                        TableKind::PbellNumbers => {
                            Cell::number(&pbell_number(cache, n, pu, req.backend))
                        }
                        TableKind::PolybellNeg => Cell::number(&polybell_neg(cache, n, pu)),
                        TableKind::PbellPolyCoeffs => Cell::Coeffs(
                            pbell_poly(cache, n, pu)
                                .coeffs()
                                .iter()
                                .map(|c| c.to_string())
                                .collect(),
                        ),
                    })
                    .collect()
            })
            .collect();
        let rows = (0..=req.n_max)
            .map(|n| cols.iter().map(|c| c[n].clone()).collect())
            .collect();
        Table {
            kind: req.kind,
            columns,
            rows,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(vec![]);
        let mut header = vec!["n\\p".to_string()];
        header.extend(self.columns.iter().map(|p| p.to_string()));
        w.write_record(&header).expect("in-memory write");
        for (n, row) in self.rows.iter().enumerate() {
            let mut rec = vec![n.to_string()];
            rec.extend(row.iter().map(Cell::csv_text));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn from_csv(kind: TableKind, text: &str) -> Result<Table, TableError> {
        let mut r = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(text.as_bytes());
        let header = r
            .headers()
            .map_err(|e| TableError::Parse(e.to_string()))?
            .clone();
        if header.get(0) != Some("n\\p") {
            return Err(TableError::Parse("header must start with n\\p".into()));
        }
        let columns = header
            .iter()
            .skip(1)
            .map(|h| i64::from_str(h).map_err(|e| TableError::Parse(format!("column '{h}': {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let mut rows = Vec::new();
        for (i, rec) in r.records().enumerate() {
            let rec = rec.map_err(|e| TableError::Parse(e.to_string()))?;
            if rec.get(0) != Some(i.to_string().as_str()) {
                return Err(TableError::Parse(format!(
                    "row {i} has label {:?}",
                    rec.get(0)
                )));
            }
            if rec.len() != columns.len() + 1 {
                return Err(TableError::Parse(format!(
                    "row {i} has {} fields",
                    rec.len()
                )));
            }
            let row = rec
                .iter()
                .skip(1)
                .map(|s| {
                    let cell = match kind {
                        TableKind::PbellPolyCoeffs => {
                            Cell::Coeffs(s.split(' ').map(String::from).collect())
                        }
                        _ => Cell::Value(s.to_string()),
                    };
                    cell.check().map(|_| cell)
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        Ok(Table {
            kind,
            columns,
            rows,
        })
    }

    pub fn to_json(&self) -> String {
        let cells: Vec<JsonCell> = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| {
                row.iter().zip(&self.columns).map(move |(v, &p)| JsonCell {
                    n,
                    p,
                    value: v.clone(),
                })
            })
            .collect();
        let mut s = serde_json::to_string(&cells).expect("serializes");
        s.push('\n');
        s
    }

    pub fn from_json(kind: TableKind, text: &str) -> Result<Table, TableError> {
        let cells: Vec<JsonCell> =
            serde_json::from_str(text).map_err(|e| TableError::Parse(e.to_string()))?;
        let mut columns: Vec<i64> = Vec::new();
        for c in cells.iter().take_while(|c| c.n == 0) {
            columns.push(c.p);
        }
        if columns.is_empty() {
            return Err(TableError::Parse("empty table".into()));
        }
        if !cells.len().is_multiple_of(columns.len()) {
            return Err(TableError::Parse("ragged table".into()));
        }
        let mut rows = Vec::new();
        for (n, chunk) in cells.chunks(columns.len()).enumerate() {
            let mut row = Vec::new();
            for (c, &p) in chunk.iter().zip(&columns) {
                if c.n != n || c.p != p {
                    return Err(TableError::Parse(format!(
                        "unexpected cell (n={}, p={})",
                        c.n, c.p
                    )));
                }
                c.value.check()?;
                row.push(c.value.clone());
            }
            rows.push(row);
        }
        Ok(Table {
            kind,
            columns,
            rows,
        })
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Csv => self.to_csv(),
            TableFormat::Json => self.to_json(),
        }
    }
}
