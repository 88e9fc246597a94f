use super::PathDecomposition;
use crate::{Budget, Error, Graph, Outcome, Result};

/// Largest graph the subset table accepts (`2^n` bytes of memory).
pub const MAX_EXACT_N: usize = 26;

/// Exact pathwidth by dynamic programming over vertex subsets:
/// `f(S) = max(|∂S|, min_{v ∈ S} f(S − v))` where `∂S` are the vertices of
/// `S` with a neighbor outside `S`; `f(V)` is the vertex separation number.
///
/// Every subset is one budget node; if `2^n` exceeds the remaining budget
/// the call returns `Exhausted` without work.
pub fn pathwidth_exact(g: &Graph, budget: &mut Budget) -> Result<Outcome<(usize, PathDecomposition)>> {
    let n = g.n();
    if n > MAX_EXACT_N {
        return Err(Error::TooLarge(format!(
            "subset DP handles at most {MAX_EXACT_N} vertices, got {n}; use pathwidth_at_most"
        )));
    }
    let states = 1u64 << n;
    if states > budget.remaining() {
        return Ok(Outcome::Exhausted);
    }
    budget.spend(states);
    if n == 0 {
        return Ok(Outcome::Found((0, PathDecomposition { bags: Vec::new() })));
    }
    let adj: Vec<u32> = (0..n).map(|v| g.adj(v).iter().fold(0u32, |m, w| m | 1 << w)).collect();
    let full: u32 = if n == 32 { !0 } else { (1u32 << n) - 1 };
    let boundary = |s: u32| -> u8 {
        let mut b = 0u8;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & !s & full != 0 {
                b += 1;
            }
        }
        b
    };
    let mut f = vec![0u8; 1usize << n];
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            best = best.min(f[(s ^ bit) as usize]);
        }
        f[s as usize] = best.max(boundary(s));
    }
    let width = f[full as usize] as usize;
    // Backtrace: peel off a last vertex that keeps the optimum, smallest first.
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = f[s as usize];
        let v = (0..n)
            .find(|&v| s >> v & 1 == 1 && f[(s ^ 1 << v) as usize].max(boundary(s)) == target)
            .expect("DP table is consistent");
        order.push(v);
        s ^= 1 << v;
    }
    order.reverse();
    let cert = PathDecomposition::from_ordering(g, &order);
    debug_assert_eq!(super::verify_path_decomposition(g, &cert), Some(width));
    Ok(Outcome::Found((width, cert)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_complete, make_cycle, make_path};
    use crate::width::verify_path_decomposition;

    fn pw(g: &Graph) -> usize {
        let (w, cert) = pathwidth_exact(g, &mut Budget::unlimited()).unwrap().found().unwrap();
        assert_eq!(verify_path_decomposition(g, &cert), Some(w));
        w
    }

    #[test]
    fn known_values() {
        assert_eq!(pw(&make_path(5)), 1);
        assert_eq!(pw(&make_path(1)), 0);
        assert_eq!(pw(&Graph::empty(0)), 0);
        for n in 1..=8 {
            assert_eq!(pw(&make_complete(n)), n - 1);
        }
        for n in 3..=10 {
            assert_eq!(pw(&make_cycle(n)), 2);
        }
    }

    #[test]
    fn budget_and_size_limits() {
        let g = make_path(12);
        assert_eq!(pathwidth_exact(&g, &mut Budget::new(100)).unwrap(), Outcome::Exhausted);
        assert!(pathwidth_exact(&make_path(27), &mut Budget::unlimited()).is_err());
    }
}
