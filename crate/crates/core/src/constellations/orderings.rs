use std::collections::HashMap;

use super::routes::{enumerate_routes, hitters};
use super::Constellation;
use crate::{Error, Result, VertexSet};

/// For every unordered S-pair, the hitter sets of its routes.
struct RouteTable {
    by_pair: HashMap<(usize, usize), Vec<VertexSet>>,
}

impl RouteTable {
    fn new(c: &Constellation) -> RouteTable {
        let mut by_pair: HashMap<(usize, usize), Vec<VertexSet>> = HashMap::new();
        for r in enumerate_routes(c) {
            let h = hitters(c, &r);
            by_pair.entry((r.a, r.b)).or_default().push(h);
        }
        RouteTable { by_pair }
    }

    fn routes(&self, x: usize, y: usize) -> &[VertexSet] {
        self.by_pair.get(&(x.min(y), x.max(y))).map(Vec::as_slice).unwrap_or(&[])
    }
}

fn check_ordering(c: &Constellation, ordering: &[usize]) -> Result<()> {
    let mut seen = c.host().empty_set();
    for &x in ordering {
        if !c.s().contains(x) || !seen.insert(x) {
            return Err(Error::InvalidArgument(format!("{ordering:?} is not an ordering of S")));
        }
    }
    if seen.len() != c.s().len() {
        return Err(Error::InvalidArgument(format!("{ordering:?} misses part of S")));
    }
    Ok(())
}

/// For all `i < j < k` and every route `R` from `π_i` to `π_j`, `π_k` has a
/// neighbor in `R`.
pub fn is_interrupted_with(c: &Constellation, ordering: &[usize]) -> Result<bool> {
    check_ordering(c, ordering)?;
    let table = RouteTable::new(c);
    let s = ordering.len();
    for i in 0..s {
        for j in i + 1..s {
            for h in table.routes(ordering[i], ordering[j]) {
                if ordering[j + 1..].iter().any(|&x| !h.contains(x)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// For all `i < k` and every route `R` from `π_i` to `π_k`, fewer than `q`
/// of the S-vertices strictly between them are anticomplete to `R`.
pub fn is_zigzagged_with(c: &Constellation, q: usize, ordering: &[usize]) -> Result<bool> {
    check_ordering(c, ordering)?;
    let table = RouteTable::new(c);
    let s = ordering.len();
    Ok((1..s).all(|k| zigzag_ok_at(&table, q, ordering, k)))
}

fn zigzag_ok_at(table: &RouteTable, q: usize, ordering: &[usize], k: usize) -> bool {
    (0..k).all(|i| {
        table.routes(ordering[i], ordering[k]).iter().all(|h| {
            ordering[i + 1..k].iter().filter(|&&x| !h.contains(x)).count() < q
        })
    })
}

const MAX_FINDER_S: usize = 10;

fn finder_size_check(c: &Constellation) -> Result<()> {
    if c.s().len() > MAX_FINDER_S {
        return Err(Error::TooLarge(format!(
            "ordering search supports |S| <= {MAX_FINDER_S}, got {}",
            c.s().len()
        )));
    }
    Ok(())
}

/// Lexicographically smallest interrupted ordering, if any.
pub fn find_interrupted_ordering(c: &Constellation) -> Result<Option<Vec<usize>>> {
    finder_size_check(c)?;
    let table = RouteTable::new(c);
    let all = c.s_vertices();
    let mut prefix = Vec::with_capacity(all.len());
    let allowed = c.s().clone();
    Ok(if extend_interrupted(&table, &all, &mut prefix, &allowed) { Some(prefix) } else { None })
}

/// `allowed`: S-vertices hitting every route between two prefix vertices.
fn extend_interrupted(
    table: &RouteTable,
    all: &[usize],
    prefix: &mut Vec<usize>,
    allowed: &VertexSet,
) -> bool {
    if prefix.len() == all.len() {
        return true;
    }
    for &x in all {
        if prefix.contains(&x) || !allowed.contains(x) {
            continue;
        }
        let mut next = allowed.clone();
        for &p in prefix.iter() {
            for h in table.routes(p, x) {
                next.intersect_with(h);
            }
        }
        prefix.push(x);
        if extend_interrupted(table, all, prefix, &next) {
            return true;
        }
        prefix.pop();
    }
    false
}

/// Lexicographically smallest `q`-zigzagged ordering, if any.
pub fn find_zigzagged_ordering(c: &Constellation, q: usize) -> Result<Option<Vec<usize>>> {
    finder_size_check(c)?;
    let table = RouteTable::new(c);
    let all = c.s_vertices();
    let mut prefix = Vec::with_capacity(all.len());
    Ok(if extend_zigzag(&table, q, &all, &mut prefix) { Some(prefix) } else { None })
}

fn extend_zigzag(table: &RouteTable, q: usize, all: &[usize], prefix: &mut Vec<usize>) -> bool {
    if prefix.len() == all.len() {
        return true;
    }
    for &x in all {
        if prefix.contains(&x) {
            continue;
        }
        prefix.push(x);
        let k = prefix.len() - 1;
        if zigzag_ok_at(table, q, prefix, k) && extend_zigzag(table, q, all, prefix) {
            return true;
        }
        prefix.pop();
    }
    false
}
