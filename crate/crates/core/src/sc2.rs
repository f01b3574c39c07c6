//! The SC2 text format.
//!
//! ```text
//! sc2 <n> <full|listed>
//! e <a> <b>        (listed mode only, a < b)
//! f <a> <b> <c>    (a < b < c)
//! ```
//!
//! Edge lines precede face lines, fields are separated by single spaces and
//! every line ends in `\n`.

use std::fmt::Write as _;
use std::path::Path;

use crate::complex::{Complex2, Edge, Face, Skeleton};
use crate::error::{Error, Result};

pub fn write_sc2(x: &Complex2) -> String {
    let mut out = String::new();
    let mode = if x.is_full() { "full" } else { "listed" };
    writeln!(out, "sc2 {} {}", x.n(), mode).unwrap();
    if let Skeleton::Listed(es) = x.skeleton() {
        for (a, b) in es {
            writeln!(out, "e {a} {b}").unwrap();
        }
    }
    for [a, b, c] in x.faces() {
        writeln!(out, "f {a} {b} {c}").unwrap();
    }
    out
}

fn parse_fields(line: &str, lineno: usize, tag: &str, k: usize) -> Result<Vec<u32>> {
    let err = |msg: String| Error::Parse { line: lineno, msg };
    let mut parts = line.split(' ');
    if parts.next() != Some(tag) {
        return Err(err(format!("expected `{tag}` record")));
    }
    let vals = parts
        .map(|s| {
            if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
                return Err(err(format!("bad integer {s:?}")));
            }
            s.parse::<u32>().map_err(|e| err(format!("bad integer {s:?}: {e}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    if vals.len() != k {
        return Err(err(format!("`{tag}` takes {k} integers, got {}", vals.len())));
    }
    if vals.windows(2).any(|w| w[0] >= w[1]) {
        return Err(err("vertices must be strictly increasing".into()));
    }
    Ok(vals)
}

pub fn parse_sc2(text: &str) -> Result<Complex2> {
    if text.is_empty() {
        return Err(Error::Parse { line: 1, msg: "empty input".into() });
    }
    if !text.ends_with('\n') {
        let line = text.lines().count();
        return Err(Error::Parse { line, msg: "missing final newline".into() });
    }
    let mut lines = text[..text.len() - 1].split('\n').enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().unwrap();
    let h: Vec<&str> = header.split(' ').collect();
    let bad_header = || Error::Parse { line: 1, msg: format!("bad header {header:?}") };
    if h.len() != 3 || h[0] != "sc2" || !h[1].bytes().all(|c| c.is_ascii_digit()) {
        return Err(bad_header());
    }
    let n: u32 = h[1].parse().map_err(|_| bad_header())?;
    let full = match h[2] {
        "full" => true,
        "listed" => false,
        _ => return Err(bad_header()),
    };
    let mut edges: Vec<Edge> = Vec::new();
    let mut faces: Vec<Face> = Vec::new();
    for (lineno, line) in lines {
        let range = |vals: &[u32]| -> Result<()> {
            match vals.iter().find(|&&v| v == 0 || v > n) {
                Some(v) => Err(Error::Parse {
                    line: lineno,
                    msg: format!("vertex {v} out of range 1..={n}"),
                }),
                None => Ok(()),
            }
        };
        if line.starts_with("e ") || line == "e" {
            if full {
                return Err(Error::Parse { line: lineno, msg: "edge record in full mode".into() });
            }
            if !faces.is_empty() {
                return Err(Error::Parse { line: lineno, msg: "edge record after faces".into() });
            }
            let v = parse_fields(line, lineno, "e", 2)?;
            range(&v)?;
            edges.push((v[0], v[1]));
        } else if line.starts_with("f ") || line == "f" {
            let v = parse_fields(line, lineno, "f", 3)?;
            range(&v)?;
            faces.push([v[0], v[1], v[2]]);
        } else {
            return Err(Error::Parse { line: lineno, msg: format!("unrecognized line {line:?}") });
        }
    }
    if full {
        Complex2::full(n, faces)
    } else {
        Complex2::listed(n, edges, faces)
    }
}

pub fn read_sc2(path: impl AsRef<Path>) -> Result<Complex2> {
    parse_sc2(&std::fs::read_to_string(path)?)
}

pub fn write_sc2_file(path: impl AsRef<Path>, x: &Complex2) -> Result<()> {
    std::fs::write(path, write_sc2(x))?;
    Ok(())
}
