//! Records and their CSV / newline-delimited JSON renderings.

use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Num(f64),
    Int(i128),
    Bool(bool),
    Text(String),
}

impl From<f64> for Field {
    fn from(x: f64) -> Self {
        Field::Num(x)
    }
}

impl From<bool> for Field {
    fn from(b: bool) -> Self {
        Field::Bool(b)
    }
}

impl From<String> for Field {
    fn from(s: String) -> Self {
        Field::Text(s)
    }
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Text(s.to_string())
    }
}

macro_rules! int_field {
    ($($t:ty),*) => {$(
        impl From<$t> for Field {
            fn from(x: $t) -> Self {
                Field::Int(x as i128)
            }
        }
    )*};
}
int_field!(u32, u64, usize, i32, i128);

/// 17 significant digits; the same token is written to CSV and JSON.
pub fn number(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Value,
    TableRow,
    CheckReport,
    ConvergenceRecord,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Value => "value",
            Kind::TableRow => "table-row",
            Kind::CheckReport => "check-report",
            Kind::ConvergenceRecord => "convergence-record",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub kind: Kind,
    pub fields: Vec<(&'static str, Field)>,
}

impl Record {
    pub fn new(kind: Kind) -> Self {
        Record {
            kind,
            fields: Vec::new(),
        }
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Field>) -> Self {
        self.fields.push((key, value.into()));
        self
    }
}

fn plain(field: &Field) -> String {
    match field {
        Field::Num(x) => number(*x),
        Field::Int(i) => i.to_string(),
        Field::Bool(b) => b.to_string(),
        Field::Text(s) => s.clone(),
    }
}

fn json_value(field: &Field) -> String {
    match field {
        Field::Num(x) if x.is_finite() => number(*x),
        // JSON has no NaN or infinity; they travel as strings
        Field::Num(x) => serde_json::Value::String(number(*x)).to_string(),
        Field::Text(s) => serde_json::Value::String(s.clone()).to_string(),
        other => plain(other),
    }
}

/// Writes `records`; every record in one CSV stream must share the first
/// record's keys.
pub fn write(out: &mut impl Write, format: Format, records: &[Record]) -> io::Result<()> {
    match format {
        Format::Csv => {
            let Some(first) = records.first() else {
                return Ok(());
            };
            let mut csv = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            let header = std::iter::once("kind").chain(first.fields.iter().map(|(k, _)| *k));
            csv.write_record(header)?;
            for r in records {
                debug_assert!(r
                    .fields
                    .iter()
                    .map(|(k, _)| *k)
                    .eq(first.fields.iter().map(|(k, _)| *k)));
                let cells = std::iter::once(r.kind.name().to_string()).chain(r.fields.iter().map(|(_, v)| plain(v)));
                csv.write_record(cells)?;
            }
            csv.flush()?;
        }
        Format::Json => {
            for r in records {
                let mut line = format!("{{\"kind\":\"{}\"", r.kind.name());
                for (k, v) in &r.fields {
                    line.push_str(&format!(",\"{k}\":{}", json_value(v)));
                }
                line.push('}');
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(format: Format, records: &[Record]) -> String {
        let mut buf = Vec::new();
        write(&mut buf, format, records).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(number(8.25), "8.2500000000000000e0");
        assert_eq!(number(-1.0 / 3.0), "-3.3333333333333331e-1");
        assert_eq!(number(-1.0 / 3.0).parse::<f64>().unwrap(), -1.0 / 3.0);
        assert_eq!(number(f64::NAN), "NaN");
    }

    #[test]
    fn csv_and_json_share_tokens() {
        let r = vec![Record::new(Kind::Value)
            .with("space", "a,b")
            .with("re", 0.1)
            .with("n", 7u32)
            .with("ok", true)];
        assert_eq!(
            render(Format::Csv, &r),
            "kind,space,re,n,ok\nvalue,\"a,b\",1.0000000000000001e-1,7,true\n"
        );
        let json = render(Format::Json, &r);
        assert_eq!(
            json,
            "{\"kind\":\"value\",\"space\":\"a,b\",\"re\":1.0000000000000001e-1,\"n\":7,\"ok\":true}\n"
        );
        let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
        assert_eq!(v["re"].as_f64().unwrap(), 0.1);
    }

    #[test]
    fn non_finite_json_stays_valid() {
        let r = vec![Record::new(Kind::Value).with("x", f64::INFINITY)];
        let json = render(Format::Json, &r);
        assert!(serde_json::from_str::<serde_json::Value>(json.trim()).is_ok());
    }
}
