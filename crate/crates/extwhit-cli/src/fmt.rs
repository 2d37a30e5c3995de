//! Canonical output formatting.
//!
//! Floats are serialized with 17 significant digits (`{:.16e}`), enough to
//! round-trip any binary64 exactly, so parsing the emitted JSON and
//! re-serializing it is byte-identical. JSON objects keep a fixed key
//! order. CSV uses '.' decimals, ',' separators, '\n' line endings and
//! always carries a header.

use extwhit::ComplexScalar;

/// 17-significant-digit float serialization; deterministic and
/// parse-exact.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn fmt_complex(v: ComplexScalar) -> String {
    let sign = if v.im.is_sign_negative() { '-' } else { '+' };
    format!("{} {} {}i", fmt_f64(v.re), sign, fmt_f64(v.im.abs()))
}

/// Compact form for header annotations (`1.5`, `1+0.5i`).
pub fn fmt_complex_compact(v: ComplexScalar) -> String {
    if v.im == 0.0 {
        format!("{}", v.re)
    } else if v.im.is_sign_negative() {
        format!("{}-{}i", v.re, v.im.abs())
    } else {
        format!("{}+{}i", v.re, v.im)
    }
}

/// Minimal canonical JSON object writer: insertion-ordered keys, escaped
/// strings, floats via [`fmt_f64`].
pub struct JsonWriter {
    fields: Vec<String>,
}

impl JsonWriter {
    pub fn new() -> Self {
        Self { fields: Vec::new() }
    }

    fn push(&mut self, key: &str, raw: String) {
        self.fields.push(format!("\"{}\":{}", escape(key), raw));
    }

    pub fn str_field(&mut self, key: &str, value: &str) {
        self.push(key, format!("\"{}\"", escape(value)));
    }

    pub fn f64_field(&mut self, key: &str, value: f64) {
        self.push(key, format!("\"{}\"", fmt_f64(value)));
    }

    pub fn u64_field(&mut self, key: &str, value: u64) {
        self.push(key, value.to_string());
    }

    pub fn bool_field(&mut self, key: &str, value: bool) {
        self.push(key, value.to_string());
    }

    pub fn raw_field(&mut self, key: &str, raw: &str) {
        self.push(key, raw.to_string());
    }

    pub fn finish(self) -> String {
        format!("{{{}}}", self.fields.join(","))
    }
}

fn escape(s: &str) -> String {
    s.chars()
        .flat_map(|c| match c {
            '"' => vec!['\\', '"'],
            '\\' => vec!['\\', '\\'],
            '\n' => vec!['\\', 'n'],
            c => vec![c],
        })
        .collect()
}

/// CSV with '.' decimal separator, ',' field separator, '\n' line endings
/// and a mandatory header row. Fields containing separators are quoted.
pub struct CsvWriter {
    out: String,
    width: usize,
}

impl CsvWriter {
    pub fn new(header: Vec<&str>) -> Self {
        let mut w = Self { out: String::new(), width: header.len() };
        w.emit(header.iter().map(|s| s.to_string()).collect());
        w
    }

    pub fn row(&mut self, cells: Vec<String>) {
        assert_eq!(cells.len(), self.width, "csv row width mismatch");
        self.emit(cells);
    }

    fn emit(&mut self, cells: Vec<String>) {
        let quoted: Vec<String> = cells
            .into_iter()
            .map(|c| {
                if c.contains(',') || c.contains('"') || c.contains('\n') {
                    format!("\"{}\"", c.replace('"', "\"\""))
                } else {
                    c
                }
            })
            .collect();
        self.out.push_str(&quoted.join(","));
        self.out.push('\n');
    }

    pub fn finish(self) -> String {
        self.out
    }
}
