//! Result tables and their CSV and JSON encodings.

use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value as Json};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColumnKind {
    Real,
    Complex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Column {
    pub name: String,
    pub kind: ColumnKind,
}

impl Column {
    pub fn real(name: &str) -> Self {
        Self {
            name: name.into(),
            kind: ColumnKind::Real,
        }
    }

    pub fn complex(name: &str) -> Self {
        Self {
            name: name.into(),
            kind: ColumnKind::Complex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Real(f64),
    Complex(Complex64),
}

impl Cell {
    pub fn nan(kind: ColumnKind) -> Self {
        match kind {
            ColumnKind::Real => Cell::Real(f64::NAN),
            ColumnKind::Complex => Cell::Complex(Complex64::new(f64::NAN, f64::NAN)),
        }
    }

    pub fn as_real(&self) -> Option<f64> {
        match self {
            Cell::Real(v) => Some(*v),
            Cell::Complex(_) => None,
        }
    }

    pub fn as_complex(&self) -> Option<Complex64> {
        match self {
            Cell::Complex(v) => Some(*v),
            Cell::Real(_) => None,
        }
    }

    /// Equal values, with NaN equal to NaN.
    pub fn same(&self, other: &Cell) -> bool {
        let eq = |a: f64, b: f64| a == b || (a.is_nan() && b.is_nan());
        match (self, other) {
            (Cell::Real(a), Cell::Real(b)) => eq(*a, *b),
            (Cell::Complex(a), Cell::Complex(b)) => eq(a.re, b.re) && eq(a.im, b.im),
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub cells: Vec<Cell>,
    pub error: Option<String>,
}

/// Provenance of a table: tool, version, command and the resolved run configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub tolerance: f64,
    pub config: serde_json::Map<String, Json>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub metadata: Metadata,
    pub columns: Vec<Column>,
    pub rows: Vec<Row>,
}

fn format_number(v: f64) -> String {
    if v.is_nan() {
        "NaN".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{v:.16e}")
    }
}

fn number_json(v: f64) -> Json {
    serde_json::Number::from_f64(v).map(Json::Number).unwrap_or(Json::Null)
}

fn json_number(v: &Json) -> Result<f64, String> {
    match v {
        Json::Null => Ok(f64::NAN),
        Json::Number(n) => n.as_f64().ok_or_else(|| format!("bad number {n}")),
        other => Err(format!("expected a number or null, got {other}")),
    }
}

impl Table {
    pub fn failed_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.error.is_some()).count()
    }

    /// Index of the named column.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.name == name)
    }

    /// The named real column as a vector.
    pub fn reals(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.column(name)?;
        self.rows.iter().map(|r| r.cells[i].as_real()).collect()
    }

    /// CSV header names; complex columns split into `_re` and `_im`.
    pub fn csv_header(&self) -> Vec<String> {
        let mut out = Vec::new();
        for c in &self.columns {
            match c.kind {
                ColumnKind::Real => out.push(c.name.clone()),
                ColumnKind::Complex => {
                    out.push(format!("{}_re", c.name));
                    out.push(format!("{}_im", c.name));
                }
            }
        }
        out.push("error".into());
        out
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> csv::Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(writer);
        w.write_record(self.csv_header())?;
        for row in &self.rows {
            let mut record = Vec::with_capacity(self.columns.len() * 2 + 1);
            for cell in &row.cells {
                match cell {
                    Cell::Real(v) => record.push(format_number(*v)),
                    Cell::Complex(z) => {
                        record.push(format_number(z.re));
                        record.push(format_number(z.im));
                    }
                }
            }
            record.push(row.error.clone().unwrap_or_default());
            w.write_record(&record)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory cannot fail");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    pub fn to_json(&self) -> Json {
        let rows: Vec<Json> = self
            .rows
            .iter()
            .map(|row| {
                let values: Vec<Json> = row
                    .cells
                    .iter()
                    .map(|cell| match cell {
                        Cell::Real(v) => number_json(*v),
                        Cell::Complex(z) => json!([number_json(z.re), number_json(z.im)]),
                    })
                    .collect();
                json!({ "values": values, "error": row.error })
            })
            .collect();
        json!({
            "metadata": self.metadata,
            "columns": self.columns,
            "rows": rows,
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("tables serialize");
        s.push('\n');
        s
    }

    /// Inverse of [`Table::to_json`], with `null` read back as NaN.
    pub fn from_json(value: &Json) -> Result<Self, String> {
        let metadata: Metadata =
            serde_json::from_value(value.get("metadata").cloned().ok_or("missing metadata")?).map_err(|e| e.to_string())?;
        let columns: Vec<Column> =
            serde_json::from_value(value.get("columns").cloned().ok_or("missing columns")?).map_err(|e| e.to_string())?;
        let rows_json = value.get("rows").and_then(Json::as_array).ok_or("missing rows")?;
        let mut rows = Vec::with_capacity(rows_json.len());
        for r in rows_json {
            let values = r.get("values").and_then(Json::as_array).ok_or("row without values")?;
            if values.len() != columns.len() {
                return Err(format!("row has {} values for {} columns", values.len(), columns.len()));
            }
            let cells = values
                .iter()
                .zip(&columns)
                .map(|(v, c)| match c.kind {
                    ColumnKind::Real => json_number(v).map(Cell::Real),
                    ColumnKind::Complex => {
                        let pair = v.as_array().filter(|p| p.len() == 2).ok_or("complex value must be [re, im]")?;
                        Ok(Cell::Complex(Complex64::new(json_number(&pair[0])?, json_number(&pair[1])?)))
                    }
                })
                .collect::<Result<Vec<_>, String>>()?;
            let error = match r.get("error") {
                None | Some(Json::Null) => None,
                Some(Json::String(s)) => Some(s.clone()),
                Some(other) => return Err(format!("error must be a string or null, got {other}")),
            };
            rows.push(Row { cells, error });
        }
        Ok(Self { metadata, columns, rows })
    }

    /// Cell-by-cell equality with NaN equal to NaN.
    pub fn same_values(&self, other: &Table) -> bool {
        self.metadata == other.metadata
            && self.columns == other.columns
            && self.rows.len() == other.rows.len()
            && self.rows.iter().zip(&other.rows).all(|(a, b)| {
                a.error == b.error && a.cells.len() == b.cells.len() && a.cells.iter().zip(&b.cells).all(|(x, y)| x.same(y))
            })
    }
}
