//! Monochromatic `q`-grids in products of finite sets.

use std::ops::ControlFlow;

use crate::{Budget, Outcome};

/// A colouring of `U_1 × ... × U_n`, each `U_j` given as `0..sizes[j]`.
pub trait ProductColoring {
    type Color: Clone + Eq + std::fmt::Debug;

    fn color(&self, z: &[usize]) -> Self::Color;

    /// May return false only if no grid whose first coordinates use the
    /// given subsets is monochromatic. Used for pruning.
    fn prefix_ok(&self, _chosen: &[Vec<usize>]) -> bool {
        true
    }
}

/// Any closure on tuples is a colouring without pruning.
pub struct FnColoring<F>(pub F);

impl<C: Clone + Eq + std::fmt::Debug, F: Fn(&[usize]) -> C> ProductColoring for FnColoring<F> {
    type Color = C;

    fn color(&self, z: &[usize]) -> C {
        (self.0)(z)
    }
}

/// `q`-subsets `z[j]` of each `U_j` on whose product the colouring is
/// constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid<C> {
    pub color: C,
    pub z: Vec<Vec<usize>>,
}

/// Calls `f` on every tuple of `z[0] × ... × z[n-1]`.
fn for_each_tuple(z: &[Vec<usize>], f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let n = z.len();
    let mut idx = vec![0usize; n];
    let mut tuple: Vec<usize> = z.iter().map(|s| s[0]).collect();
    loop {
        if !f(&tuple) {
            return false;
        }
        let mut j = n;
        loop {
            if j == 0 {
                return true;
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < z[j].len() {
                tuple[j] = z[j][idx[j]];
                break;
            }
            idx[j] = 0;
            tuple[j] = z[j][0];
        }
    }
}

/// True iff `grid` is a monochromatic `q`-grid for `phi` over `sizes`.
pub fn verify_grid<P: ProductColoring>(sizes: &[usize], q: usize, phi: &P, grid: &Grid<P::Color>) -> bool {
    if grid.z.len() != sizes.len() || q == 0 {
        return false;
    }
    for (zj, &size) in grid.z.iter().zip(sizes) {
        if zj.len() != q || zj.windows(2).any(|w| w[0] >= w[1]) || zj.iter().any(|&u| u >= size) {
            return false;
        }
    }
    for_each_tuple(&grid.z, &mut |tuple| phi.color(tuple) == grid.color)
}

/// Depth-first search over `q`-subsets in lexicographic order, coordinate by
/// coordinate. `Absent` means no monochromatic grid exists at all.
pub fn product_ramsey_search<P: ProductColoring>(
    sizes: &[usize],
    q: usize,
    phi: &P,
    budget: &mut Budget,
) -> Outcome<Grid<P::Color>> {
    if q == 0 || sizes.is_empty() || sizes.iter().any(|&s| s < q) {
        return Outcome::Absent;
    }
    let mut chosen: Vec<Vec<usize>> = Vec::with_capacity(sizes.len());
    let mut found = None;
    let flow = extend(sizes, q, phi, budget, &mut chosen, &mut found);
    match flow {
        ControlFlow::Break(true) => {
            let grid = found.expect("found grid is recorded");
            assert!(verify_grid(sizes, q, phi, &grid), "search returned a non-monochromatic grid");
            Outcome::Found(grid)
        }
        ControlFlow::Break(false) => Outcome::Exhausted,
        ControlFlow::Continue(()) => Outcome::Absent,
    }
}

/// `Break(true)`: found; `Break(false)`: out of budget.
fn extend<P: ProductColoring>(
    sizes: &[usize],
    q: usize,
    phi: &P,
    budget: &mut Budget,
    chosen: &mut Vec<Vec<usize>>,
    found: &mut Option<Grid<P::Color>>,
) -> ControlFlow<bool> {
    if budget.tick().is_err() {
        return ControlFlow::Break(false);
    }
    if !phi.prefix_ok(chosen) {
        return ControlFlow::Continue(());
    }
    let j = chosen.len();
    if j == sizes.len() {
        let color = phi.color(&chosen.iter().map(|s| s[0]).collect::<Vec<_>>());
        if for_each_tuple(chosen, &mut |t| phi.color(t) == color) {
            *found = Some(Grid { color, z: chosen.clone() });
            return ControlFlow::Break(true);
        }
        return ControlFlow::Continue(());
    }
    let mut subset: Vec<usize> = (0..q).collect();
    loop {
        chosen.push(subset.clone());
        let f = extend(sizes, q, phi, budget, chosen, found);
        chosen.pop();
        f?;
        if !next_subset(&mut subset, sizes[j]) {
            return ControlFlow::Continue(());
        }
    }
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if s[i] < n - k + i {
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
