//! Plain-text edge lists: a `p <vertices> <edges>` header, then one
//! `e <u> <v>` line per edge with 0-based `u < v` in lexicographic order.

use std::io::{BufRead, Write};

use super::{GraphBuilder, SimpleGraph};
use crate::error::{bail, Error, Result};

pub fn write_edge_list<W: Write>(g: &SimpleGraph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "p {} {}", g.vertex_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}")?;
    }
    out.flush()
}

/// Parses the format written by [`write_edge_list`]. Blank lines and `c`
/// comment lines are skipped; edges may appear in any order but the count
/// must match the header.
pub fn read_edge_list<R: BufRead>(input: R) -> Result<SimpleGraph> {
    let mut builder: Option<(GraphBuilder, usize)> = None;
    let mut seen = 0usize;
    for (lineno, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::InvalidInput(format!("read error: {e}")))?;
        let mut fields = line.split_whitespace();
        let lineno = lineno + 1;
        let num = |f: Option<&str>| -> Result<usize> {
            f.and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::InvalidInput(format!("line {lineno}: expected an integer")))
        };
        match fields.next() {
            None | Some("c") => continue,
            Some("p") => {
                if builder.is_some() {
                    bail!(InvalidInput, "line {lineno}: duplicate header");
                }
                let n = num(fields.next())?;
                let m = num(fields.next())?;
                builder = Some((GraphBuilder::new(n), m));
            }
            Some("e") => {
                let Some((b, _)) = builder.as_mut() else {
                    bail!(InvalidInput, "line {lineno}: edge before header");
                };
                let u = num(fields.next())?;
                let v = num(fields.next())?;
                b.add_edge(u, v)
                    .map_err(|e| Error::InvalidInput(format!("line {lineno}: {e}")))?;
                seen += 1;
            }
            Some(other) => bail!(InvalidInput, "line {lineno}: unknown record {other:?}"),
        }
        if fields.next().is_some() {
            bail!(InvalidInput, "line {lineno}: trailing fields");
        }
    }
    let Some((b, m)) = builder else {
        bail!(InvalidInput, "missing header line");
    };
    let g = b.build();
    if seen != m || g.edge_count() != m {
        bail!(InvalidInput, "header announces {m} edges, found {seen} lines / {} distinct", g.edge_count());
    }
    Ok(g)
}
