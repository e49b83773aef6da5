//! Output tables rendered as CSV (default) or a JSON mirror with the same
//! fields. Floats are written with 17 significant digits so a parsed value
//! is bit-identical to the one written.

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn to_csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format_float(*v),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Float(v) => float_value(*v),
            Cell::Text(s) => json!(s),
            Cell::Empty => Value::Null,
        }
    }
}

/// 17 significant digits, round-trip safe for f64.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn float_value(v: f64) -> Value {
    serde_json::Number::from_f64(v)
        .map(Value::Number)
        .unwrap_or_else(|| json!(v.to_string()))
}

/// One output table: a generated-by stamp, optional key/value report lines,
/// a column header and data rows.
#[derive(Debug, Clone)]
pub struct Table {
    pub generated_by: String,
    pub comments: Vec<(String, Cell)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(generated_by: String, columns: Vec<&'static str>) -> Self {
        Table {
            generated_by,
            comments: Vec::new(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn comment(&mut self, key: &str, value: Cell) {
        self.comments.push((key.to_string(), value));
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# generated-by: {}\n", self.generated_by));
        for (key, value) in &self.comments {
            out.push_str(&format!("# {}={}\n", key, value.to_csv()));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::to_csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut comments = Map::new();
        for (key, value) in &self.comments {
            comments.insert(key.clone(), value.to_json());
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| Value::Array(row.iter().map(Cell::to_json).collect()))
            .collect();
        let mut root = Map::new();
        root.insert("generated_by".into(), json!(self.generated_by));
        if !comments.is_empty() {
            root.insert("comments".into(), Value::Object(comments));
        }
        root.insert(
            "columns".into(),
            Value::Array(self.columns.iter().map(|c| json!(c)).collect()),
        );
        root.insert("rows".into(), Value::Array(rows));
        let mut text = serde_json::to_string_pretty(&Value::Object(root))
            .expect("table serialization cannot fail");
        text.push('\n');
        text
    }

    pub fn render(&self, format: crate::OutputFormat) -> String {
        match format {
            crate::OutputFormat::Csv => self.to_csv(),
            crate::OutputFormat::Json => self.to_json(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_round_trips() {
        for &v in &[1.0, -0.25, 6.737946999085467e-3, 1.0 / 3.0, 1e-300] {
            let parsed: f64 = format_float(v).parse().unwrap();
            assert_eq!(parsed.to_bits(), v.to_bits());
        }
    }

    #[test]
    fn csv_layout() {
        let mut t = Table::new("circwin 0.0.0 test".into(), vec!["a", "b"]);
        t.comment("k", Cell::Int(3));
        t.push(vec![Cell::Int(-1), Cell::Float(0.5)]);
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "# generated-by: circwin 0.0.0 test");
        assert_eq!(lines[1], "# k=3");
        assert_eq!(lines[2], "a,b");
        assert_eq!(lines[3], "-1,5.0000000000000000e-1");
    }
}
