//! Constellation specs and their text format.
//!
//! ```text
//! s l
//! len_0 .. len_{l-1}
//! i j k pos_1 .. pos_k      (one line per S-vertex i and path j)
//! ```
//!
//! The built host numbers the S-vertices `0..s`, followed by the vertices of
//! each path in order.

use std::fmt::Write;

use crate::constellations::Constellation;
use crate::error::parse_err;
use crate::graph::io::{data_lines, parse_numbers};
use crate::{Error, Graph, PathInGraph, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstellationSpec {
    pub s: usize,
    /// Edge counts of the paths.
    pub path_lengths: Vec<usize>,
    /// `attach[i][j]`: sorted positions on path `j` adjacent to S-vertex `i`.
    pub attach: Vec<Vec<Vec<usize>>>,
}

impl ConstellationSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConstellation(m));
        if self.attach.len() != self.s {
            return bad(format!("{} attachment rows for s = {}", self.attach.len(), self.s));
        }
        for (i, row) in self.attach.iter().enumerate() {
            if row.len() != self.path_lengths.len() {
                return bad(format!("S-vertex {i} lists {} paths", row.len()));
            }
            for (j, pos) in row.iter().enumerate() {
                if pos.is_empty() {
                    return bad(format!("S-vertex {i} has no neighbor on path {j}"));
                }
                if pos.windows(2).any(|w| w[0] >= w[1]) {
                    return bad(format!("positions for ({i}, {j}) not strictly increasing"));
                }
                if pos.iter().any(|&p| p > self.path_lengths[j]) {
                    return bad(format!("position out of range on path {j}"));
                }
            }
        }
        Ok(())
    }
}

pub fn build_constellation(spec: &ConstellationSpec) -> Result<Constellation> {
    spec.validate()?;
    let s = spec.s;
    let mut starts = Vec::with_capacity(spec.path_lengths.len());
    let mut next = s;
    for &len in &spec.path_lengths {
        starts.push(next);
        next += len + 1;
    }
    let mut edges = Vec::new();
    for (j, &len) in spec.path_lengths.iter().enumerate() {
        for p in 0..len {
            edges.push((starts[j] + p, starts[j] + p + 1));
        }
    }
    for (i, row) in spec.attach.iter().enumerate() {
        for (j, pos) in row.iter().enumerate() {
            for &p in pos {
                edges.push((i, starts[j] + p));
            }
        }
    }
    let host = Graph::from_edges(next, edges)?;
    let paths = spec
        .path_lengths
        .iter()
        .enumerate()
        .map(|(j, &len)| PathInGraph::new(&host, (starts[j]..=starts[j] + len).collect()))
        .collect::<Result<Vec<_>>>()?;
    let s_set = host.set(0..s);
    Constellation::new(host, s_set, paths)
}

pub fn parse_constellation_spec(text: &str) -> Result<ConstellationSpec> {
    let mut lines = data_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
    let h = parse_numbers(ln, header)?;
    if h.len() != 2 {
        return Err(parse_err(ln, "header must be `s l`"));
    }
    let (s, l) = (h[0], h[1]);
    let path_lengths = match lines.next() {
        Some((ln, t)) => {
            let v = parse_numbers(ln, t)?;
            if v.len() != l {
                return Err(parse_err(ln, format!("expected {l} path lengths")));
            }
            v
        }
        None if l == 0 => Vec::new(),
        None => return Err(parse_err(0, "missing path lengths")),
    };
    let mut attach = vec![vec![None; l]; s];
    for (ln, t) in lines {
        let v = parse_numbers(ln, t)?;
        if v.len() < 3 || v.len() != 3 + v[2] {
            return Err(parse_err(ln, "expected `i j k pos_1 .. pos_k`"));
        }
        let (i, j) = (v[0], v[1]);
        if i >= s || j >= l {
            return Err(parse_err(ln, "S-vertex or path index out of range"));
        }
        if attach[i][j].is_some() {
            return Err(parse_err(ln, format!("repeated line for ({i}, {j})")));
        }
        attach[i][j] = Some(v[3..].to_vec());
    }
    let attach = attach
        .into_iter()
        .map(|row| row.into_iter().map(Option::unwrap_or_default).collect())
        .collect();
    let spec = ConstellationSpec { s, path_lengths, attach };
    spec.validate()?;
    Ok(spec)
}

pub fn serialize_constellation_spec(spec: &ConstellationSpec) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", spec.s, spec.path_lengths.len()).unwrap();
    let lens: Vec<String> = spec.path_lengths.iter().map(|x| x.to_string()).collect();
    writeln!(out, "{}", lens.join(" ")).unwrap();
    for (i, row) in spec.attach.iter().enumerate() {
        for (j, pos) in row.iter().enumerate() {
            write!(out, "{} {} {}", i, j, pos.len()).unwrap();
            for p in pos {
                write!(out, " {p}").unwrap();
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_constellation_is_an_edge() {
        let spec = ConstellationSpec { s: 1, path_lengths: vec![0], attach: vec![vec![vec![0]]] };
        let c = build_constellation(&spec).unwrap();
        assert_eq!(c.host().edges(), vec![(0, 1)]);
    }

    #[test]
    fn missing_attachment_is_rejected() {
        let spec = ConstellationSpec {
            s: 2,
            path_lengths: vec![2],
            attach: vec![vec![vec![0]], vec![vec![]]],
        };
        assert!(build_constellation(&spec).is_err());
    }

    #[test]
    fn text_round_trip() {
        let spec = ConstellationSpec {
            s: 2,
            path_lengths: vec![4, 0],
            attach: vec![vec![vec![0, 3], vec![0]], vec![vec![4], vec![0]]],
        };
        let text = serialize_constellation_spec(&spec);
        assert_eq!(parse_constellation_spec(&text).unwrap(), spec);
        assert!(text.starts_with("2 2\n4 0\n0 0 2 0 3\n"));
    }
}
