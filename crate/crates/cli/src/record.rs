//! Output records and their CSV/JSON encodings.

use std::fmt;

use serde::ser::{Serialize, SerializeMap, Serializer};

/// A single cell of an output record.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(u64),
    Text(String),
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<u64> for Value {
    fn from(n: u64) -> Self {
        Value::Int(n)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as u64)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_owned())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl Value {
    /// Text form shared by both encodings; floats use the shortest
    /// representation that parses back to the same bits.
    pub fn render(&self) -> String {
        match self {
            Value::Num(x) => serde_json::to_string(x).expect("finite float"),
            Value::Int(n) => n.to_string(),
            Value::Text(s) => s.clone(),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Num(x) => s.serialize_f64(*x),
            Value::Int(n) => s.serialize_u64(*n),
            Value::Text(t) => s.serialize_str(t),
        }
    }
}

/// Ordered key/value columns.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record {
    fields: Vec<(String, Value)>,
}

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_owned(), value.into()));
        self
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.push((key.to_owned(), value.into()));
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.fields.iter().map(|(k, _)| k.as_str())
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn fields(&self) -> &[(String, Value)] {
        &self.fields
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.fields.len()))?;
        for (k, v) in &self.fields {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum EmitError {
    NonFinite { key: String },
    Schema { index: usize },
}

impl fmt::Display for EmitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmitError::NonFinite { key } => write!(f, "column {key} is not finite"),
            EmitError::Schema { index } => write!(f, "record {index} does not share the first record's columns"),
        }
    }
}

impl std::error::Error for EmitError {}

/// Encodes records; every record must have the keys of `header` in order.
pub fn emit(header: &[&str], records: &[Record], format: Format) -> Result<Vec<u8>, EmitError> {
    for (index, rec) in records.iter().enumerate() {
        if !rec.keys().eq(header.iter().copied()) {
            return Err(EmitError::Schema { index });
        }
        for (k, v) in rec.fields() {
            if let Value::Num(x) = v {
                if !x.is_finite() {
                    return Err(EmitError::NonFinite { key: k.clone() });
                }
            }
        }
    }
    Ok(match format {
        Format::Json => emit_json(records),
        Format::Csv => emit_csv(header, records),
    })
}

fn emit_json(records: &[Record]) -> Vec<u8> {
    let mut out = Vec::new();
    if records.is_empty() {
        out.extend_from_slice(b"[]\n");
        return out;
    }
    out.extend_from_slice(b"[\n");
    for (i, rec) in records.iter().enumerate() {
        out.extend_from_slice(b"  ");
        serde_json::to_writer(&mut out, rec).expect("records serialize");
        if i + 1 < records.len() {
            out.push(b',');
        }
        out.push(b'\n');
    }
    out.extend_from_slice(b"]\n");
    out
}

fn emit_csv(header: &[&str], records: &[Record]) -> Vec<u8> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for rec in records {
        w.write_record(rec.fields().iter().map(|(_, v)| v.render())).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}
