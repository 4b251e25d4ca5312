//! Text formats for matroids and graphs.
//!
//! Matroid file:
//!
//! ```text
//! matroid U24
//! field 5
//! rows 2 cols 4
//! 1 0 1 1
//! 0 1 1 -1
//! labels a b c d
//! ```
//!
//! Over `GF(p^d)` with `d > 1` each entry is its coordinate vector, low
//! degree first, comma-separated (`1,2`). Instead of a matrix the body may
//! be `uniform <k> <n>` or `graphic <graph-file>`, the latter resolved
//! relative to the matroid file.
//!
//! Graph file (vertices numbered from 1, loops as `u = v`):
//!
//! ```text
//! graph C4
//! vertices 4
//! edge a 1 2
//! edge b 2 3
//! ```
//!
//! Blank lines and text after `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::graph::{Edge, Multigraph};
use crate::linalg::FqMatrix;
use crate::matroid::{Matroid, RepMatroid};

#[derive(Debug, Clone)]
pub enum MatroidBody {
    Represented(RepMatroid),
    Uniform(usize, usize),
    Graphic(Multigraph),
}

#[derive(Debug, Clone)]
pub struct MatroidFile {
    pub name: String,
    pub body: MatroidBody,
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let words: Vec<&str> = l.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn number<T: std::str::FromStr>(line: usize, word: &str, what: &str) -> Result<T> {
    word.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found `{word}`")))
}

fn header<'a>(it: &mut impl Iterator<Item = (usize, Vec<&'a str>)>, keyword: &str) -> Result<(usize, String)> {
    match it.next() {
        Some((n, w)) if w[0] == keyword && w.len() == 2 => Ok((n, w[1].to_string())),
        Some((n, _)) => Err(Error::parse(n, format!("expected `{keyword} <name>`"))),
        None => Err(Error::parse(0, format!("empty input, expected `{keyword} <name>`"))),
    }
}

fn element(field: &Field, line: usize, word: &str) -> Result<FieldElement> {
    let coeffs = word
        .split(',')
        .map(|c| number::<i64>(line, c, "an integer coefficient"))
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() == 1 {
        return Ok(field.from_int(coeffs[0]));
    }
    if coeffs.len() > field.degree() as usize {
        return Err(Error::parse(
            line,
            format!("`{word}` has more than {} coordinates", field.degree()),
        ));
    }
    field.from_coeffs(&coeffs)
}

/// Parses a matroid file; `graphic` bodies are read through `resolve`.
pub fn parse_matroid(text: &str, resolve: impl Fn(&str) -> Result<String>) -> Result<MatroidFile> {
    let mut it = lines(text);
    let (_, name) = header(&mut it, "matroid")?;
    let (n, words) = it
        .next()
        .ok_or_else(|| Error::parse(0, "missing matroid body"))?;
    let body = match words[0] {
        "uniform" if words.len() == 3 => {
            let k = number(n, words[1], "rank k")?;
            let size = number(n, words[2], "size n")?;
            if k > size {
                return Err(Error::parse(n, "uniform matroid needs k <= n"));
            }
            MatroidBody::Uniform(k, size)
        }
        "graphic" if words.len() == 2 => {
            let text = resolve(words[1])?;
            MatroidBody::Graphic(parse_graph(&text)?.1)
        }
        "field" if words.len() == 2 => {
            let field: Field = words[1].parse().map_err(|e: Error| match e {
                Error::Parse { msg, .. } => Error::parse(n, msg),
                other => Error::parse(n, other.to_string()),
            })?;
            let (n2, dims) = it.next().ok_or_else(|| Error::parse(n, "missing `rows r cols n`"))?;
            if dims.len() != 4 || dims[0] != "rows" || dims[2] != "cols" {
                return Err(Error::parse(n2, "expected `rows <r> cols <n>`"));
            }
            let r: usize = number(n2, dims[1], "row count")?;
            let c: usize = number(n2, dims[3], "column count")?;
            let mut rows = Vec::with_capacity(r);
            for _ in 0..r {
                let (ln, w) = it.next().ok_or_else(|| Error::parse(n2, format!("expected {r} matrix rows")))?;
                if w.len() != c {
                    return Err(Error::parse(ln, format!("expected {c} entries, found {}", w.len())));
                }
                rows.push(w.iter().map(|x| element(&field, ln, x)).collect::<Result<Vec<_>>>()?);
            }
            let mut labels = None;
            if let Some((ln, w)) = it.next() {
                if w[0] != "labels" || w.len() != c + 1 {
                    return Err(Error::parse(ln, format!("expected `labels` with {c} names")));
                }
                labels = Some(w[1..].iter().map(|s| s.to_string()).collect());
            }
            let entries: Vec<FieldElement> = rows.into_iter().flatten().collect();
            let matrix = FqMatrix::from_elements(&field, r, c, &entries)?;
            MatroidBody::Represented(RepMatroid::new(matrix, labels)?)
        }
        _ => return Err(Error::parse(n, "expected `field`, `uniform`, or `graphic`")),
    };
    if let Some((ln, _)) = it.next() {
        return Err(Error::parse(ln, "unexpected trailing content"));
    }
    Ok(MatroidFile { name, body })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

/// Reads a matroid file, resolving `graphic` paths against its directory.
pub fn load_matroid(path: &Path) -> Result<MatroidFile> {
    let dir = path.parent().unwrap_or(Path::new("."));
    parse_matroid(&read(path)?, |p| read(&dir.join(p)))
}

pub fn parse_graph(text: &str) -> Result<(String, Multigraph)> {
    let mut it = lines(text);
    let (_, name) = header(&mut it, "graph")?;
    let n: usize = match it.next() {
        Some((ln, w)) if w[0] == "vertices" && w.len() == 2 => number(ln, w[1], "vertex count")?,
        Some((ln, _)) => return Err(Error::parse(ln, "expected `vertices <n>`")),
        None => return Err(Error::parse(0, "missing `vertices <n>`")),
    };
    let mut edges = Vec::new();
    for (ln, w) in it {
        if w[0] != "edge" || w.len() != 4 {
            return Err(Error::parse(ln, "expected `edge <id> <u> <v>`"));
        }
        let end = |s: &str| -> Result<usize> {
            let v: usize = number(ln, s, "a vertex number")?;
            if v == 0 || v > n {
                return Err(Error::parse(ln, format!("vertex {v} outside 1..={n}")));
            }
            Ok(v - 1)
        };
        edges.push(Edge {
            id: w[1].to_string(),
            tail: end(w[2])?,
            head: end(w[3])?,
        });
    }
    let vertices = (1..=n).map(|i| i.to_string()).collect();
    let g = Multigraph::new(vertices, edges).map_err(|e| Error::parse(0, e.to_string()))?;
    Ok((name, g))
}

pub fn load_graph(path: &Path) -> Result<(String, Multigraph)> {
    parse_graph(&read(path)?)
}

fn render_element(e: &FieldElement) -> String {
    if e.field().degree() == 1 {
        e.to_string()
    } else {
        e.coeffs().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

pub fn write_matroid(name: &str, m: &RepMatroid) -> String {
    let mat = m.matrix();
    let mut out = format!("matroid {name}\nfield {}\nrows {} cols {}\n", m.field().spec(), mat.rows(), mat.cols());
    for i in 0..mat.rows() {
        let row: Vec<String> = (0..mat.cols()).map(|j| render_element(&mat.get(i, j))).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    let _ = writeln!(out, "labels {}", m.labels().join(" "));
    out
}

pub fn write_graph(name: &str, g: &Multigraph) -> String {
    let mut out = format!("graph {name}\nvertices {}\n", g.vertex_count());
    for e in g.edges() {
        let _ = writeln!(out, "edge {} {} {}", e.id, e.tail + 1, e.head + 1);
    }
    out
}
