//! Text formats: `.grp` permutation groups, `.mgp` matrix groups and `.edg`
//! edge lists. Points are 0-based; blank lines and lines starting with `#`
//! are ignored except where a blank line separates matrices.

use std::fmt::Write as _;
use std::path::Path;

use crate::arcgraph::Graph;
use crate::error::{Error, Result};
use crate::gf::{Field, FieldRef, MatFq};
use crate::perm::{PermGroup, Permutation};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('#'))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
    fields: usize,
) -> Result<(usize, Vec<u64>)> {
    let (no, line) = lines
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| Error::parse(1, format!("missing `{keyword}` header")))?;
    let mut parts = line.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(Error::parse(no, format!("expected `{keyword}` header")));
    }
    let vals = parts
        .map(|t| t.parse::<u64>().map_err(|_| Error::parse(no, format!("bad number `{t}`"))))
        .collect::<Result<Vec<_>>>()?;
    if vals.len() != fields {
        return Err(Error::parse(no, format!("`{keyword}` takes {fields} numbers")));
    }
    Ok((no, vals))
}

fn numbers(no: usize, line: &str) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|t| t.parse::<u32>().map_err(|_| Error::parse(no, format!("bad number `{t}`"))))
        .collect()
}

/// Parses a `.grp` file: `perm <degree>` then one generator per line as
/// its image list.
pub fn parse_grp(text: &str) -> Result<PermGroup> {
    let mut lines = content_lines(text);
    let (_, h) = header(&mut lines, "perm", 1)?;
    let degree = h[0] as usize;
    let mut gens = Vec::new();
    for (no, line) in lines.filter(|(_, l)| !l.is_empty()) {
        let images = numbers(no, line)?;
        if images.len() != degree {
            return Err(Error::parse(no, format!("{} images for degree {degree}", images.len())));
        }
        gens.push(Permutation::from_images(images).map_err(|e| Error::parse(no, e.to_string()))?);
    }
    PermGroup::new(degree, gens)
}

pub fn write_grp(g: &PermGroup) -> String {
    let mut s = format!("perm {}\n", g.degree());
    for p in g.generators() {
        let imgs: Vec<String> = p.images().iter().map(|x| x.to_string()).collect();
        let _ = writeln!(s, "{}", imgs.join(" "));
    }
    s
}

pub fn load_grp(path: &Path) -> Result<PermGroup> {
    parse_grp(&std::fs::read_to_string(path)?)
}

/// A parsed `.mgp` file.
#[derive(Clone, Debug)]
pub struct MatrixGroupFile {
    pub field: FieldRef,
    pub dim: usize,
    pub generators: Vec<MatFq>,
}

/// Parses a `.mgp` file: `mat <p> <f> <dim>`, then each generator as `dim`
/// rows of field codes, generators separated by blank lines.
pub fn parse_mgp(text: &str) -> Result<MatrixGroupFile> {
    let mut lines = content_lines(text);
    let (hno, h) = header(&mut lines, "mat", 3)?;
    let field = Field::new(h[0] as u32, h[1] as u32).map_err(|e| Error::parse(hno, e.to_string()))?;
    let dim = h[2] as usize;
    if dim == 0 {
        return Err(Error::parse(hno, "dimension must be positive"));
    }
    let mut generators = Vec::new();
    let mut rows: Vec<u32> = Vec::new();
    let mut first_row = 0;
    let flush = |rows: &mut Vec<u32>, no: usize, gens: &mut Vec<MatFq>| -> Result<()> {
        if rows.is_empty() {
            return Ok(());
        }
        if rows.len() != dim * dim {
            return Err(Error::parse(no, format!("matrix has {} rows, expected {dim}", rows.len() / dim)));
        }
        let m = MatFq::new(&field, dim, dim, std::mem::take(rows)).map_err(|e| Error::parse(no, e.to_string()))?;
        if !m.is_invertible() {
            return Err(Error::parse(no, "singular generator"));
        }
        gens.push(m);
        Ok(())
    };
    let mut last = hno;
    for (no, line) in lines {
        last = no;
        if line.is_empty() {
            flush(&mut rows, first_row, &mut generators)?;
            continue;
        }
        if rows.is_empty() {
            first_row = no;
        }
        let r = numbers(no, line)?;
        if r.len() != dim {
            return Err(Error::parse(no, format!("{} entries in a row of a {dim}x{dim} matrix", r.len())));
        }
        if rows.len() == dim * dim {
            return Err(Error::parse(no, "too many rows; separate generators by a blank line"));
        }
        rows.extend(r);
    }
    flush(&mut rows, first_row.max(last.min(first_row)), &mut generators)?;
    let field = generators.first().map(|g| g.field().clone()).unwrap_or_else(|| Field::new(h[0] as u32, h[1] as u32).unwrap());
    Ok(MatrixGroupFile {
        field,
        dim,
        generators,
    })
}

pub fn write_mgp(file: &MatrixGroupFile) -> String {
    let k = &file.field;
    let mut s = format!("mat {} {} {}\n", k.characteristic(), k.degree(), file.dim);
    for (i, g) in file.generators.iter().enumerate() {
        if i > 0 {
            s.push('\n');
        }
        for r in 0..file.dim {
            let row: Vec<String> = g.row(r).iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
    }
    s
}

/// Parses a `.edg` file: `graph <n>` then one `u v` pair per line.
pub fn parse_edg(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (_, h) = header(&mut lines, "graph", 1)?;
    let n = h[0] as usize;
    let mut edges = Vec::new();
    for (no, line) in lines.filter(|(_, l)| !l.is_empty()) {
        let e = numbers(no, line)?;
        if e.len() != 2 {
            return Err(Error::parse(no, "an edge line has two vertices"));
        }
        if e[0] as usize >= n || e[1] as usize >= n {
            return Err(Error::parse(no, format!("vertex out of range 0..{n}")));
        }
        if e[0] == e[1] {
            return Err(Error::parse(no, "loops are not allowed"));
        }
        edges.push((e[0], e[1]));
    }
    Ok(Graph::from_edges(n, &edges))
}

pub fn write_edg(g: &Graph) -> String {
    let mut s = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn load_edg(path: &Path) -> Result<Graph> {
    parse_edg(&std::fs::read_to_string(path)?)
}
