//! The bound formulas as expression builders. Arguments are expressions, so
//! every formula can be built symbolically (with variables) or concretely.

use num_traits::ToPrimitive;

use super::ConstExpr;
use crate::{Error, Result};

/// Black-box leaves and the outside results they come from.
pub const BLACK_BOXES: &[(&str, &str)] = &[
    ("f_noblock", "strong blocks in clean graphs of large treewidth"),
    ("f_completeminor", "large pathwidth forces a binary tree induced minor or a complete minor"),
    ("f_comp_model_rigid", "strong blocks with anticomplete paths force a subdivided clique or a biclique induced minor"),
    ("g_comp_model_rigid", "strong blocks with anticomplete paths force a subdivided clique or a biclique induced minor"),
    ("f_motherKtt", "biclique induced minors force walls, interrupted or zigzagged constellations"),
    ("g_motherKtt", "biclique induced minors force walls, interrupted or zigzagged constellations"),
    ("f_productramsey", "product Ramsey theorem"),
    ("f_RSTW", "grid minor theorem"),
    ("f_RSPW", "forest minor theorem for pathwidth"),
];

/// Which threshold the digraph stable-set bounds use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `2rs` and `2qrs`, as originally claimed.
    AsStated,
    /// `(2r+1)s` and `(2qr+1)s`, which the degeneracy argument guarantees.
    Corrected,
}

fn lit(v: u64) -> ConstExpr {
    ConstExpr::from(v)
}

fn wrap(name: &str, args: &[ConstExpr], body: ConstExpr) -> ConstExpr {
    ConstExpr::Named { name: name.to_string(), args: args.to_vec(), body: Box::new(body) }
}

fn black_box(name: &str, args: Vec<ConstExpr>) -> ConstExpr {
    let citation = BLACK_BOXES.iter().find(|(n, _)| *n == name).expect("known black box").1;
    ConstExpr::BlackBox { name: name.to_string(), citation: citation.to_string(), args }
}

/// Ramsey bound `s^t`: a stable `s`-set or a `(t+1)`-clique.
pub fn ramsey_bound(s: ConstExpr, t: ConstExpr) -> ConstExpr {
    wrap("ramsey", &[s.clone(), t.clone()], ConstExpr::pow(s, t))
}

/// Low-out-degree vertex count that guarantees a stable `s`-set.
pub fn digraph_a_threshold(r: ConstExpr, s: ConstExpr, v: Variant) -> ConstExpr {
    let body = match v {
        Variant::AsStated => ConstExpr::mul(vec![lit(2), r.clone(), s.clone()]),
        Variant::Corrected => ConstExpr::mul(vec![
            ConstExpr::add(vec![ConstExpr::mul(vec![lit(2), r.clone()]), lit(1)]),
            s.clone(),
        ]),
    };
    wrap("digraph_a", &[r, s], body)
}

/// High-out-degree vertex count that guarantees the fan selector.
pub fn digraph_b_threshold(q: ConstExpr, r: ConstExpr, s: ConstExpr, v: Variant) -> ConstExpr {
    let body = match v {
        Variant::AsStated => ConstExpr::mul(vec![lit(2), q.clone(), r.clone(), s.clone()]),
        Variant::Corrected => ConstExpr::mul(vec![
            ConstExpr::add(vec![ConstExpr::mul(vec![lit(2), q.clone(), r.clone()]), lit(1)]),
            s.clone(),
        ]),
    };
    wrap("digraph_b", &[q, r, s], body)
}

/// Number of pairwise touching paths the path-selection lemma needs:
/// `(10 δ^{t+3} λ^3)^t`.
pub fn magic_size(t: ConstExpr, delta: ConstExpr, lambda: ConstExpr) -> ConstExpr {
    let inner = ConstExpr::mul(vec![
        lit(10),
        ConstExpr::pow(delta.clone(), ConstExpr::add(vec![t.clone(), lit(3)])),
        ConstExpr::pow(lambda.clone(), lit(3)),
    ]);
    wrap("magic_size", &[t.clone(), delta, lambda], ConstExpr::pow(inner, t))
}

/// `f_PR(2rt, max(s,t), 2^(4 r^2 t^2 C(2rt, 2)))`.
pub fn f_bigramsey(r: ConstExpr, s: ConstExpr, t: ConstExpr) -> ConstExpr {
    let two_rt = ConstExpr::mul(vec![lit(2), r.clone(), t.clone()]);
    let colours = ConstExpr::pow(
        lit(2),
        ConstExpr::mul(vec![
            lit(4),
            ConstExpr::pow(r.clone(), lit(2)),
            ConstExpr::pow(t.clone(), lit(2)),
            ConstExpr::binom(two_rt.clone(), lit(2)),
        ]),
    );
    let body = black_box(
        "f_productramsey",
        vec![two_rt, ConstExpr::max(vec![s.clone(), t.clone()]), colours],
    );
    wrap("f_bigramsey", &[r, s, t], body)
}

/// `κ^((10 (δ + 3tκ)^{t+3} λ^3)^t)`.
pub fn f_seedling_branches(t: ConstExpr, delta: ConstExpr, lambda: ConstExpr, kappa: ConstExpr) -> ConstExpr {
    let widened = ConstExpr::add(vec![delta.clone(), ConstExpr::mul(vec![lit(3), t.clone(), kappa.clone()])]);
    let inner = ConstExpr::mul(vec![
        lit(10),
        ConstExpr::pow(widened, ConstExpr::add(vec![t.clone(), lit(3)])),
        ConstExpr::pow(lambda.clone(), lit(3)),
    ]);
    let body = ConstExpr::pow(kappa.clone(), ConstExpr::pow(inner, t.clone()));
    wrap("f_seedling_branches", &[t, delta, lambda, kappa], body)
}

/// Child rigidity level: `f_bigramsey(κ, 1, t)`.
pub fn g_seedling_branches(t: ConstExpr, kappa: ConstExpr) -> ConstExpr {
    let body = f_bigramsey(kappa.clone(), lit(1), t.clone());
    wrap("g_seedling_branches", &[t, kappa], body)
}

/// Expansions deeper than this are kept as [`ConstExpr::Deferred`].
pub const MAX_XI_DEPTH: u64 = 64;

/// `ξ_1(a,b,c) = b^a`;
/// `ξ_r(a,b,c) = f_sb(a, 2ab, ξ_{r-1}(a, f_bigramsey(b,b,a), g_sb(a,c)), c)`.
pub fn xi(r: u64, a: ConstExpr, b: ConstExpr, c: ConstExpr) -> Result<ConstExpr> {
    if r == 0 {
        return Err(Error::InvalidArgument("xi is defined for r >= 1".into()));
    }
    let args = [lit(r), a.clone(), b.clone(), c.clone()];
    if r > MAX_XI_DEPTH {
        return Ok(ConstExpr::Deferred { name: "xi".into(), args: args.to_vec() });
    }
    let body = if r == 1 {
        ConstExpr::pow(b, a)
    } else {
        let inner = xi(r - 1, a.clone(), f_bigramsey(b.clone(), b.clone(), a.clone()), g_seedling_branches(a.clone(), c.clone()))?;
        let two_ab = ConstExpr::mul(vec![lit(2), a.clone(), b]);
        f_seedling_branches(a, two_ab, inner, c)
    };
    Ok(wrap("xi", &args, body))
}

/// `ξ_r(t, d, κ)`.
pub fn f_seedling_to_tree(d: ConstExpr, r: u64, t: ConstExpr, kappa: ConstExpr) -> Result<ConstExpr> {
    let body = xi(r, t.clone(), d.clone(), kappa.clone())?;
    Ok(wrap("f_seedling_to_tree", &[d, lit(r), t, kappa], body))
}

/// Branching of the recursive children: `f_bigramsey(d, d, t)`.
pub fn delta(d: ConstExpr, t: ConstExpr) -> ConstExpr {
    wrap("Delta", &[d.clone(), t.clone()], f_bigramsey(d.clone(), d, t))
}

/// Path count of each child seedling: `ξ_{r-1}(t, Δ, g_sb(t, κ))`.
pub fn lambda_child(d: ConstExpr, r: u64, t: ConstExpr, kappa: ConstExpr) -> Result<ConstExpr> {
    if r < 2 {
        return Err(Error::InvalidArgument("child path count needs r >= 2".into()));
    }
    let body = xi(r - 1, t.clone(), delta(d.clone(), t.clone()), g_seedling_branches(t.clone(), kappa.clone()))?;
    Ok(wrap("Lambda", &[d, lit(r), t, kappa], body))
}

/// `φ(d,r,t) = f_cmr(r d^r + 1, t, t, t)`.
pub fn phi(d: ConstExpr, r: ConstExpr, t: ConstExpr) -> ConstExpr {
    let size = tree_size_bound(&d, &r);
    let body = black_box("f_comp_model_rigid", vec![size, t.clone(), t.clone(), t.clone()]);
    wrap("phi", &[d, r, t], body)
}

fn tree_size_bound(d: &ConstExpr, r: &ConstExpr) -> ConstExpr {
    ConstExpr::add(vec![ConstExpr::mul(vec![r.clone(), ConstExpr::pow(d.clone(), r.clone())]), lit(1)])
}

/// `ψ(d,r,t,λ) = f_noblock(φ^t, λ, max(2^{dr}, t))`.
pub fn psi(d: ConstExpr, r: ConstExpr, t: ConstExpr, lambda: ConstExpr) -> ConstExpr {
    let body = black_box(
        "f_noblock",
        vec![
            ConstExpr::pow(phi(d.clone(), r.clone(), t.clone()), t.clone()),
            lambda.clone(),
            ConstExpr::max(vec![ConstExpr::pow(lit(2), ConstExpr::mul(vec![d.clone(), r.clone()])), t.clone()]),
        ],
    );
    wrap("psi", &[d, r, t, lambda], body)
}

/// `f_completeminor(dr, ψ + 2)`.
pub fn f_obtain_a_seedling(d: ConstExpr, r: ConstExpr, t: ConstExpr, lambda: ConstExpr) -> ConstExpr {
    let body = black_box(
        "f_completeminor",
        vec![
            ConstExpr::mul(vec![d.clone(), r.clone()]),
            ConstExpr::add(vec![psi(d.clone(), r.clone(), t.clone(), lambda.clone()), lit(2)]),
        ],
    );
    wrap("f_obtain_a_seedling", &[d, r, t, lambda], body)
}

/// `g_cmr(r d^r + 1, t, t)`; independent of the path count.
pub fn g_obtain_a_seedling(d: ConstExpr, r: ConstExpr, t: ConstExpr) -> ConstExpr {
    let body = black_box("g_comp_model_rigid", vec![tree_size_bound(&d, &r), t.clone(), t.clone()]);
    wrap("g_obtain_a_seedling", &[d, r, t], body)
}

/// Pathwidth bound for forests on `h` vertices:
/// `f_oas(h, h, t, λ)` with `κ = g_oas(h,h,t)` and `λ = ξ_h(t, h, κ)`.
pub fn f_main_tree_indm(t: ConstExpr, h: u64) -> Result<ConstExpr> {
    let hh = lit(h);
    let kappa = g_obtain_a_seedling(hh.clone(), hh.clone(), t.clone());
    let lambda = f_seedling_to_tree(hh.clone(), h, t.clone(), kappa)?;
    let body = f_obtain_a_seedling(hh.clone(), hh.clone(), t.clone(), lambda);
    Ok(wrap("f_main_tree_indm", &[t, hh], body))
}

/// `f_mti(max(r, φ', γ), T_{2,16r})` where `φ', γ` come from the biclique
/// theorem at `(d, l, l', 2^{2r}, s, s')`. Needs a literal `r`.
pub fn f_pwisg(d: ConstExpr, l: ConstExpr, l2: ConstExpr, r: u64, s: ConstExpr, s2: ConstExpr) -> Result<ConstExpr> {
    let wall = ConstExpr::pow(lit(2), lit(2 * r));
    let args = vec![d.clone(), l.clone(), l2.clone(), wall, s.clone(), s2.clone()];
    let phi_k = black_box("f_motherKtt", args.clone());
    let gamma = black_box("g_motherKtt", args);
    let t = ConstExpr::max(vec![lit(r), phi_k, gamma]);
    // |V(T_{2,16r})| = 2^{16r+1} - 1
    let h = 16 * r + 1;
    let tree_size = if h < 64 { (1u64 << h) - 1 } else { u64::MAX };
    let body = f_main_tree_indm(t, tree_size)?;
    Ok(wrap("f_pwisg", &[d, l, l2, lit(r), s, s2], body))
}

/// Every formula reachable by [`named`], with its parameter names.
pub fn constant_names() -> &'static [(&'static str, &'static [&'static str])] {
    &[
        ("xi", &["r", "a", "b", "c"]),
        ("f_seedling_to_tree", &["d", "r", "t", "kappa"]),
        ("f_seedling_branches", &["t", "delta", "lambda", "kappa"]),
        ("g_seedling_branches", &["t", "kappa"]),
        ("f_bigramsey", &["r", "s", "t"]),
        ("f_obtain_a_seedling", &["d", "r", "t", "lambda"]),
        ("g_obtain_a_seedling", &["d", "r", "t"]),
        ("f_main_tree_indm", &["t", "h"]),
        ("f_pwisg", &["d", "l", "l2", "r", "s", "s2"]),
        ("phi", &["d", "r", "t"]),
        ("psi", &["d", "r", "t", "lambda"]),
        ("Delta", &["d", "t"]),
        ("Lambda", &["d", "r", "t", "kappa"]),
        ("magic_size", &["t", "delta", "lambda"]),
        ("ramsey", &["s", "t"]),
        ("digraph_a", &["r", "s"]),
        ("digraph_b", &["q", "r", "s"]),
    ]
}

fn small(e: &ConstExpr, what: &str) -> Result<u64> {
    e.as_lit()
        .and_then(|v| v.to_u64())
        .ok_or_else(|| Error::InvalidArgument(format!("{what} must be a literal integer")))
}

/// Builds the formula called `name` on `args`.
pub fn named_formula(name: &str, args: &[ConstExpr], variant: Variant) -> Result<ConstExpr> {
    let arity = constant_names()
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownConstant(name.to_string()))?
        .1
        .len();
    if args.len() != arity {
        return Err(Error::InvalidArgument(format!("{name} takes {arity} arguments, got {}", args.len())));
    }
    let a = |i: usize| args[i].clone();
    Ok(match name {
        "xi" => xi(small(&args[0], "r")?, a(1), a(2), a(3))?,
        "f_seedling_to_tree" => f_seedling_to_tree(a(0), small(&args[1], "r")?, a(2), a(3))?,
        "f_seedling_branches" => f_seedling_branches(a(0), a(1), a(2), a(3)),
        "g_seedling_branches" => g_seedling_branches(a(0), a(1)),
        "f_bigramsey" => f_bigramsey(a(0), a(1), a(2)),
        "f_obtain_a_seedling" => f_obtain_a_seedling(a(0), a(1), a(2), a(3)),
        "g_obtain_a_seedling" => g_obtain_a_seedling(a(0), a(1), a(2)),
        "f_main_tree_indm" => f_main_tree_indm(a(0), small(&args[1], "h")?)?,
        "f_pwisg" => f_pwisg(a(0), a(1), a(2), small(&args[3], "r")?, a(4), a(5))?,
        "phi" => phi(a(0), a(1), a(2)),
        "psi" => psi(a(0), a(1), a(2), a(3)),
        "Delta" => delta(a(0), a(1)),
        "Lambda" => lambda_child(a(0), small(&args[1], "r")?, a(2), a(3))?,
        "magic_size" => magic_size(a(0), a(1), a(2)),
        "ramsey" => ramsey_bound(a(0), a(1)),
        "digraph_a" => digraph_a_threshold(a(0), a(1), variant),
        "digraph_b" => digraph_b_threshold(a(0), a(1), a(2), variant),
        _ => unreachable!("name checked above"),
    })
}
