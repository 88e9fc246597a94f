//! Text forms of extraction inputs and outputs. Every format is a sequence
//! of tagged lines `TAG n1 n2 ...`; `#` starts a comment line.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::{AnticompletePaths, BigramseyGroups, Magic, MagicBranch, StrongBlock};
use crate::error::parse_err;
use crate::graph::io::{data_lines, parse_numbers};
use crate::{Error, Graph, PathInGraph, Result, VertexSet};

fn tagged(text: &str) -> Result<Vec<(usize, String, Vec<usize>)>> {
    data_lines(text)
        .map(|(ln, l)| {
            let (tag, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
            Ok((ln, tag.to_string(), parse_numbers(ln, rest)?))
        })
        .collect()
}

fn line(s: &mut String, tag: &str, vs: &[usize]) {
    s.push_str(tag);
    for v in vs {
        write!(s, " {v}").unwrap();
    }
    s.push('\n');
}

fn in_range(n: usize, vs: &[usize]) -> Result<()> {
    match vs.iter().find(|&&v| v >= n) {
        Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n }),
        None => Ok(()),
    }
}

fn expect_tag(ln: usize, tag: &str, want: &str) -> Result<()> {
    if tag == want {
        Ok(())
    } else {
        Err(parse_err(ln, format!("expected {want}, got {tag:?}")))
    }
}

/// One `L v..` line per path.
pub fn serialize_paths(paths: &[PathInGraph]) -> String {
    let mut s = String::new();
    for p in paths {
        line(&mut s, "L", p.vertices());
    }
    s
}

pub fn parse_paths(g: &Graph, text: &str) -> Result<Vec<PathInGraph>> {
    tagged(text)?
        .into_iter()
        .map(|(ln, tag, vs)| {
            expect_tag(ln, &tag, "L")?;
            in_range(g.n(), &vs)?;
            PathInGraph::new(g, vs)
        })
        .collect()
}

/// `branch high|split`, then per chosen path `C index z`, `F family..` and
/// `W markers..`.
pub fn serialize_magic(m: &Magic) -> String {
    let mut s = String::new();
    let branch = match m.branch {
        MagicBranch::HighOutDegree => "high",
        MagicBranch::Split => "split",
    };
    writeln!(s, "branch {branch}").unwrap();
    for i in 0..m.chosen.len() {
        line(&mut s, "C", &[m.chosen[i], m.z[i]]);
        line(&mut s, "F", &m.families[i]);
        line(&mut s, "W", &m.w[i]);
    }
    s
}

pub fn parse_magic(text: &str) -> Result<Magic> {
    let mut lines = data_lines(text);
    let (ln, first) = lines.next().ok_or_else(|| parse_err(0, "missing branch line"))?;
    let branch = match first.split_whitespace().collect::<Vec<_>>()[..] {
        ["branch", "high"] => MagicBranch::HighOutDegree,
        ["branch", "split"] => MagicBranch::Split,
        _ => return Err(parse_err(ln, "expected `branch high` or `branch split`")),
    };
    let rest: String = lines.map(|(_, l)| format!("{l}\n")).collect();
    let rows = tagged(&rest)?;
    if rows.len() % 3 != 0 {
        return Err(parse_err(0, "expected C, F, W lines per chosen path"));
    }
    let mut m = Magic { branch, chosen: Vec::new(), z: Vec::new(), families: Vec::new(), w: Vec::new() };
    for chunk in rows.chunks(3) {
        let (ln, tag, c) = &chunk[0];
        expect_tag(*ln, tag, "C")?;
        if c.len() != 2 {
            return Err(parse_err(*ln, "expected `C index z`"));
        }
        expect_tag(chunk[1].0, &chunk[1].1, "F")?;
        expect_tag(chunk[2].0, &chunk[2].1, "W")?;
        m.chosen.push(c[0]);
        m.z.push(c[1]);
        m.families.push(chunk[1].2.clone());
        m.w.push(chunk[2].2.clone());
    }
    Ok(m)
}

/// `B v..`, then one `P x y v..` line per path of the pair `x < y`.
pub fn serialize_block(blk: &StrongBlock) -> String {
    let mut s = String::new();
    line(&mut s, "B", &blk.b);
    for (&(x, y), fam) in &blk.paths {
        for p in fam {
            let mut row = vec![x, y];
            row.extend(p);
            line(&mut s, "P", &row);
        }
    }
    s
}

type PairFamilies = BTreeMap<(usize, usize), Vec<Vec<usize>>>;

fn parse_pair_families(rows: &[(usize, String, Vec<usize>)], tag: &str) -> Result<PairFamilies> {
    let mut out: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
    for (ln, t, vs) in rows {
        expect_tag(*ln, t, tag)?;
        if vs.len() < 2 {
            return Err(parse_err(*ln, format!("expected `{tag} x y v..`")));
        }
        out.entry((vs[0], vs[1])).or_default().push(vs[2..].to_vec());
    }
    Ok(out)
}

/// Shape only; [`StrongBlock::check`] validates against a host.
pub fn parse_block(text: &str) -> Result<StrongBlock> {
    let rows = tagged(text)?;
    let (ln, tag, b) = rows.first().ok_or_else(|| parse_err(0, "missing B line"))?;
    expect_tag(*ln, tag, "B")?;
    Ok(StrongBlock { b: b.clone(), paths: parse_pair_families(&rows[1..], "P")? })
}

/// `S v..`, then one `Q x y v..` line per path.
pub fn serialize_anticomplete_paths(a: &AnticompletePaths) -> String {
    let mut s = String::new();
    line(&mut s, "S", &a.s);
    for (&(x, y), fam) in &a.q {
        for p in fam {
            let mut row = vec![x, y];
            row.extend(p);
            line(&mut s, "Q", &row);
        }
    }
    s
}

pub fn parse_anticomplete_paths(text: &str) -> Result<AnticompletePaths> {
    let rows = tagged(text)?;
    let (ln, tag, s) = rows.first().ok_or_else(|| parse_err(0, "missing S line"))?;
    expect_tag(*ln, tag, "S")?;
    Ok(AnticompletePaths { s: s.clone(), q: parse_pair_families(&rows[1..], "Q")? })
}

/// Input of the bigramsey extraction: the `A`-sets and one family of sets
/// per `A`-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamilies {
    pub a_sets: Vec<VertexSet>,
    pub families: Vec<Vec<VertexSet>>,
}

/// `A v..` opens a set; each following `B v..` line is a member of its
/// family.
pub fn serialize_set_families(f: &SetFamilies) -> String {
    let mut s = String::new();
    for (a, fam) in f.a_sets.iter().zip(&f.families) {
        line(&mut s, "A", &a.to_vec());
        for b in fam {
            line(&mut s, "B", &b.to_vec());
        }
    }
    s
}

pub fn parse_set_families(n: usize, text: &str) -> Result<SetFamilies> {
    let mut out = SetFamilies { a_sets: Vec::new(), families: Vec::new() };
    for (ln, tag, vs) in tagged(text)? {
        in_range(n, &vs)?;
        let set = VertexSet::from_iter_in(n, vs);
        match tag.as_str() {
            "A" => {
                out.a_sets.push(set);
                out.families.push(Vec::new());
            }
            "B" => out.families.last_mut().ok_or_else(|| parse_err(ln, "B line before any A line"))?.push(set),
            _ => return Err(parse_err(ln, format!("unknown tag {tag:?}"))),
        }
    }
    Ok(out)
}

/// One `G index members..` line per group.
pub fn serialize_groups(grp: &BigramseyGroups) -> String {
    let mut s = String::new();
    for (&i, sub) in grp.chosen.iter().zip(&grp.sub) {
        let mut row = vec![i];
        row.extend(sub);
        line(&mut s, "G", &row);
    }
    s
}

pub fn parse_groups(text: &str) -> Result<BigramseyGroups> {
    let mut out = BigramseyGroups { chosen: Vec::new(), sub: Vec::new() };
    for (ln, tag, vs) in tagged(text)? {
        expect_tag(ln, &tag, "G")?;
        let (&i, sub) = vs.split_first().ok_or_else(|| parse_err(ln, "expected `G index members..`"))?;
        out.chosen.push(i);
        out.sub.push(sub.to_vec());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{crossing_paths_family, planted_block};
    use crate::Budget;

    #[test]
    fn magic_round_trip() {
        let fam = crossing_paths_family(12, 3);
        let m = super::super::magic_extract(&fam.graph, &fam.paths, 2, 1, 1, &mut Budget::unlimited())
            .unwrap()
            .found()
            .unwrap();
        assert_eq!(parse_magic(&serialize_magic(&m)).unwrap(), m);
        assert_eq!(parse_paths(&fam.graph, &serialize_paths(&fam.paths)).unwrap(), fam.paths);
    }

    #[test]
    fn block_round_trip() {
        let (_, blk) = planted_block(3, 2, 2, false);
        assert_eq!(parse_block(&serialize_block(&blk)).unwrap(), blk);
    }

    #[test]
    fn families_and_groups() {
        let text = "A 0\nB 2\nB 3\nA 1\nB 4\n";
        let f = parse_set_families(5, text).unwrap();
        assert_eq!(f.families.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 1]);
        assert_eq!(serialize_set_families(&f), text);
        assert!(parse_set_families(5, "B 1\n").is_err());
        let g = BigramseyGroups { chosen: vec![1, 0], sub: vec![vec![0], vec![1]] };
        assert_eq!(parse_groups(&serialize_groups(&g)).unwrap(), g);
    }

    #[test]
    fn wrong_tags() {
        assert!(parse_magic("branch sideways\n").is_err());
        assert!(parse_block("P 0 1 0 2 1\n").is_err());
        assert!(parse_anticomplete_paths("S 0 1\nP 0 1 0 2 1\n").is_err());
    }
}
