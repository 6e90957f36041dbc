//! Tabular results and their CSV / JSON serialisations.
//!
//! Floats are always printed with six decimals so repeated runs produce
//! byte-identical output.

use std::io::Write;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

const DECIMALS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Unit used when printing angle cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleUnit {
    Radians,
    Degrees,
}

impl AngleUnit {
    pub fn to_internal(self, x: f64) -> f64 {
        match self {
            Self::Radians => x,
            Self::Degrees => x.to_radians(),
        }
    }

    fn to_display(self, x: f64) -> f64 {
        match self {
            Self::Radians => x,
            Self::Degrees => x.to_degrees(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    /// Radians internally; printed in the table's unit.
    Angle(f64),
    /// Printed in scientific notation, for deviations and tolerances.
    Sci(f64),
    Int(i64),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn render(&self, unit: AngleUnit) -> String {
        match self {
            Self::Float(x) => fixed(*x),
            Self::Angle(x) => fixed(unit.to_display(*x)),
            Self::Sci(x) => format!("{x:.DECIMALS$e}"),
            Self::Int(i) => i.to_string(),
            Self::Bool(b) => b.to_string(),
            Self::Text(s) => s.clone(),
        }
    }

    fn json(&self, unit: AngleUnit) -> Box<RawValue> {
        let text = match self {
            Self::Float(x) | Self::Angle(x) | Self::Sci(x) if !x.is_finite() => "null".to_owned(),
            Self::Text(s) => serde_json::to_string(s).expect("strings serialise"),
            other => other.render(unit),
        };
        RawValue::from_string(text).expect("rendered cell is valid JSON")
    }
}

fn fixed(x: f64) -> String {
    // avoid "-0.000000"
    let s = format!("{x:.DECIMALS$}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_owned()
    } else {
        s
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Self::Float(x)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Self::Bool(b)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Self::Int(i as i64)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Self::Text(s.to_owned())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Self::Text(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Subcommand name and its effective parameters, echoed in JSON output.
#[derive(Debug, Clone, PartialEq)]
pub struct Meta {
    pub subcommand: &'static str,
    pub parameters: Vec<(&'static str, Cell)>,
}

pub fn write_csv<W: Write>(out: W, table: &Table, unit: AngleUnit) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(&table.columns)?;
    for row in &table.rows {
        w.write_record(row.iter().map(|c| c.render(unit)))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(mut out: W, meta: &Meta, table: &Table, unit: AngleUnit) -> std::io::Result<()> {
    let doc = Document { meta, table, unit };
    serde_json::to_writer_pretty(&mut out, &doc)?;
    writeln!(out)
}

struct Document<'a> {
    meta: &'a Meta,
    table: &'a Table,
    unit: AngleUnit,
}

struct Record<'a> {
    fields: Vec<(&'a str, &'a Cell)>,
    unit: AngleUnit,
}

struct Rows<'a>(&'a Table, AngleUnit);

impl Serialize for Record<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.fields.len()))?;
        for (k, v) in &self.fields {
            m.serialize_entry(k, &v.json(self.unit))?;
        }
        m.end()
    }
}

impl Serialize for Rows<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let Rows(table, unit) = *self;
        let mut seq = s.serialize_seq(Some(table.rows.len()))?;
        for row in &table.rows {
            let fields = table.columns.iter().copied().zip(row).collect();
            seq.serialize_element(&Record { fields, unit })?;
        }
        seq.end()
    }
}

impl Serialize for Document<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("meta", &MetaView(self.meta, self.unit))?;
        m.serialize_entry("data", &Rows(self.table, self.unit))?;
        m.end()
    }
}

struct MetaView<'a>(&'a Meta, AngleUnit);

impl Serialize for MetaView<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let MetaView(meta, unit) = *self;
        let unit_name = Cell::from(match unit {
            AngleUnit::Radians => "radians",
            AngleUnit::Degrees => "degrees",
        });
        let mut fields: Vec<(&str, &Cell)> = vec![("angle_unit", &unit_name)];
        fields.extend(meta.parameters.iter().map(|(k, v)| (*k, v)));

        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("subcommand", meta.subcommand)?;
        m.serialize_entry("parameters", &Record { fields, unit })?;
        m.serialize_entry("version", env!("CARGO_PKG_VERSION"))?;
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(vec!["beta", "value", "contextual", "kind"]);
        t.push(vec![Cell::Angle(std::f64::consts::FRAC_PI_2), (-0.0).into(), true.into(), "a\"b".into()]);
        t
    }

    #[test]
    fn csv_has_header_and_fixed_decimals() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &sample(), AngleUnit::Degrees).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "beta,value,contextual,kind\n90.000000,0.000000,true,\"a\"\"b\"\n");
    }

    #[test]
    fn json_is_valid_and_ordered() {
        let meta = Meta { subcommand: "curve", parameters: vec![("n", 3usize.into())] };
        let mut buf = Vec::new();
        write_json(&mut buf, &meta, &sample(), AngleUnit::Radians).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["meta"]["subcommand"], "curve");
        assert_eq!(v["meta"]["parameters"]["angle_unit"], "radians");
        assert_eq!(v["data"][0]["kind"], "a\"b");
        assert!(text.contains("\"beta\": 1.570796"));
        assert!(text.find("\"beta\"").unwrap() < text.find("\"value\"").unwrap());
    }

    #[test]
    fn non_finite_floats_become_null() {
        assert_eq!(Cell::Float(f64::NAN).json(AngleUnit::Radians).get(), "null");
    }
}
