//! Small result tables rendered as aligned text, CSV or JSON.

use super::config::OutputFormat;
use crate::identities::format_float;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Num(f64),
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

fn num(v: f64, digits: usize) -> String {
    if v.is_finite() {
        format!("{:.*e}", digits.saturating_sub(1), v)
    } else {
        v.to_string()
    }
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn strings(&self, digits: usize) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| match c {
                        Cell::Text(s) => s.clone(),
                        Cell::Num(v) => num(*v, digits),
                    })
                    .collect()
            })
            .collect()
    }

    pub fn render(&self, format: OutputFormat, digits: usize) -> String {
        match format {
            OutputFormat::Text => self.text(digits),
            OutputFormat::Csv => self.csv(digits),
            OutputFormat::Json => self.json(),
        }
    }

    fn text(&self, digits: usize) -> String {
        let body = self.strings(digits);
        let mut width: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &body {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&width).map(|(c, &w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(self.header.clone());
        for r in &body {
            out.push_str(&line(r.iter().map(String::as_str).collect()));
        }
        out
    }

    fn csv(&self, digits: usize) -> String {
        let mut out = self.header.join(",") + "\n";
        for r in self.strings(digits) {
            let quoted: Vec<String> =
                r.into_iter().map(|c| if c.contains([',', '"']) { format!("\"{}\"", c.replace('"', "\"\"")) } else { c }).collect();
            out.push_str(&quoted.join(","));
            out.push('\n');
        }
        out
    }

    fn json(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let fields: Vec<String> = self
                    .header
                    .iter()
                    .zip(r)
                    .map(|(h, c)| {
                        let v = match c {
                            Cell::Text(s) => serde_json::to_string(s).expect("string serialization"),
                            Cell::Num(v) => format_float(*v),
                        };
                        format!("\"{h}\": {v}")
                    })
                    .collect();
                format!("  {{{}}}", fields.join(", "))
            })
            .collect();
        if rows.is_empty() {
            "[]\n".to_string()
        } else {
            format!("[\n{}\n]\n", rows.join(",\n"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(vec!["name", "value"]);
        t.push(vec!["a,b".into(), 0.5.into()]);
        t
    }

    #[test]
    fn renders_each_format() {
        let t = sample();
        assert_eq!(t.render(OutputFormat::Csv, 3), "name,value\n\"a,b\",5.00e-1\n");
        assert_eq!(t.render(OutputFormat::Json, 3), "[\n  {\"name\": \"a,b\", \"value\": 5.0000000000000000e-1}\n]\n");
        assert_eq!(t.render(OutputFormat::Text, 2), "name  value\na,b   5.0e-1\n");
        assert_eq!(Table::new(vec!["x"]).render(OutputFormat::Json, 3), "[]\n");
    }
}
