//! Tables and their three renderings.

use std::fmt::Write as _;

use num_traits::{One, ToPrimitive};
use serde_json::{json, Map, Value};
use slicegroup::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Rational(Rational),
    Text(String),
    Bool(bool),
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<Rational> for Cell {
    fn from(v: Rational) -> Self {
        Cell::Rational(v)
    }
}

impl From<&Rational> for Cell {
    fn from(v: &Rational) -> Self {
        Cell::Rational(v.clone())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

fn big_to_json(v: &num_bigint::BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Rational(r) if r.denom().is_one() => r.numer().to_string(),
            Cell::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => if *b { "yes" } else { "no" }.to_string(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            Cell::Bool(b) => b.to_string(),
            other => other.text(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Rational(r) => json!({ "num": big_to_json(r.numer()), "den": big_to_json(r.denom()) }),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width in table {}", self.name);
        self.rows.push(row);
    }
}

/// Builds a row from heterogeneous values.
#[macro_export]
macro_rules! row {
    ($($cell:expr),* $(,)?) => { vec![$($crate::output::Cell::from($cell)),*] };
}

/// Everything one command prints.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub group: String,
    pub command: String,
    pub tables: Vec<Table>,
}

impl Output {
    pub fn new(group: impl Into<String>, command: &str) -> Self {
        Output {
            group: group.into(),
            command: command.to_string(),
            tables: Vec::new(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => self.json(),
            Format::Csv => self.csv(),
        }
    }

    fn text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, self.group);
        for table in &self.tables {
            out.push('\n');
            let _ = writeln!(out, "== {} ==", table.name);
            let cells: Vec<Vec<String>> = table.rows.iter().map(|r| r.iter().map(Cell::text).collect()).collect();
            let mut widths: Vec<usize> = table.columns.iter().map(|c| c.chars().count()).collect();
            for row in &cells {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let line = |items: &[String]| {
                let mut s = String::new();
                for (i, (item, w)) in items.iter().zip(&widths).enumerate() {
                    if i + 1 == items.len() {
                        s.push_str(item);
                    } else {
                        let pad = w - item.chars().count();
                        let _ = write!(s, "{item}{}  ", " ".repeat(pad));
                    }
                }
                s.trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(&table.columns));
            for row in &cells {
                let _ = writeln!(out, "{}", line(row));
            }
        }
        out
    }

    fn json(&self) -> String {
        let mut rows = Vec::new();
        for table in &self.tables {
            for row in &table.rows {
                let mut obj = Map::new();
                obj.insert("table".into(), json!(table.name));
                for (col, cell) in table.columns.iter().zip(row) {
                    obj.insert(col.clone(), cell.json());
                }
                rows.push(Value::Object(obj));
            }
        }
        let doc = json!({ "group": self.group, "command": self.command, "rows": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
        s.push('\n');
        s
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        for (i, table) in self.tables.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "# {}", table.name);
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(&table.columns).expect("writing to memory");
            for row in &table.rows {
                writer
                    .write_record(row.iter().map(Cell::csv))
                    .expect("writing to memory");
            }
            let bytes = writer.into_inner().expect("flushing to memory");
            out.push_str(&String::from_utf8(bytes).expect("CSV of UTF-8 input"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn half() -> Rational {
        Rational::new(BigInt::from(1), BigInt::from(2))
    }

    fn sample() -> Output {
        let mut out = Output::new("C2", "burnside");
        let mut t = Table::new("m", &["N", "m", "subgroup"]);
        t.push(row!["C2", half(), "#2"]);
        t.push(row!["1", Rational::from_integer(BigInt::from(1)), "#1"]);
        out.tables.push(t);
        out
    }

    #[test]
    fn json_rationals_are_objects() {
        let v: Value = serde_json::from_str(&sample().render(Format::Json)).unwrap();
        assert_eq!(v["group"], "C2");
        assert_eq!(v["rows"][0]["m"], json!({"num": 1, "den": 2}));
        assert_eq!(v["rows"][0]["table"], "m");
        let keys: Vec<&String> = v["rows"][0].as_object().unwrap().keys().collect();
        assert_eq!(keys, ["table", "N", "m", "subgroup"]);
    }

    #[test]
    fn csv_rows() {
        let s = sample().render(Format::Csv);
        assert_eq!(s, "# m\nN,m,subgroup\nC2,1/2,#2\n1,1/1,#1\n");
    }

    #[test]
    fn text_is_aligned_without_decimals() {
        let s = sample().render(Format::Text);
        assert!(s.contains("N   m    subgroup\nC2  1/2  #2\n1   1    #1\n"), "{s}");
    }
}
