use std::io::{self, Write};

use gpetersen::Rational;

/// Left-aligned text table; the last column is not padded.
pub struct Table {
    head: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: ToString>(head: impl IntoIterator<Item = S>) -> Self {
        Table { head: head.into_iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row<S: ToString>(&mut self, cells: impl IntoIterator<Item = S>) {
        self.rows.push(cells.into_iter().map(|s| s.to_string()).collect());
    }

    pub fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        let cols = self.head.len();
        let mut width = vec![0; cols];
        for r in std::iter::once(&self.head).chain(&self.rows) {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        for r in std::iter::once(&self.head).chain(&self.rows) {
            let mut line = String::new();
            for (i, c) in r.iter().enumerate() {
                if i + 1 < cols {
                    line.push_str(&format!("{c:<w$}  ", w = width[i]));
                } else {
                    line.push_str(c);
                }
            }
            writeln!(out, "{}", line.trim_end())?;
        }
        Ok(())
    }

    pub fn write_tsv(&self, out: &mut dyn Write) -> io::Result<()> {
        for r in std::iter::once(&self.head).chain(&self.rows) {
            writeln!(out, "{}", r.join("\t"))?;
        }
        Ok(())
    }
}

/// `p/q`, the mixed form `a+b/c`, and optionally a decimal; `-` when absent.
pub fn rational_cells(x: Option<&Rational>, decimal: bool) -> Vec<String> {
    let mut cells = match x {
        Some(r) => vec![r.to_string(), r.mixed()],
        None => vec!["-".to_string(), "-".to_string()],
    };
    if decimal {
        cells.push(x.map_or("-".to_string(), |r| format!("{:.6}", r.to_f64())));
    }
    cells
}
