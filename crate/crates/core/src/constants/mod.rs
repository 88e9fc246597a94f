//! Exact big-integer expressions for the bounds used by the extraction
//! procedures. Functions from outside results are opaque leaves that only
//! evaluate once bound.

mod eval;
mod formulas;
mod text;

pub use eval::{digit_count, eval, Binding, Bindings, EvalLimits};
pub use formulas::{
    constant_names, delta, digraph_a_threshold, digraph_b_threshold, f_bigramsey, f_main_tree_indm,
    f_obtain_a_seedling, f_pwisg, f_seedling_branches, f_seedling_to_tree, g_obtain_a_seedling,
    g_seedling_branches, lambda_child, magic_size, named_formula, phi, psi, ramsey_bound, xi, Variant,
    BLACK_BOXES,
};
pub use text::{parse_expr, to_text};

use num_bigint::BigUint;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstExpr {
    Lit(BigUint),
    /// Free variable; used for symbolic arguments and in binding templates.
    Var(String),
    Add(Vec<ConstExpr>),
    Mul(Vec<ConstExpr>),
    Pow(Box<ConstExpr>, Box<ConstExpr>),
    Max(Vec<ConstExpr>),
    Binom(Box<ConstExpr>, Box<ConstExpr>),
    /// A named formula applied to `args`; `body` is its expansion.
    Named { name: String, args: Vec<ConstExpr>, body: Box<ConstExpr> },
    /// A named formula whose expansion is too deep to build.
    Deferred { name: String, args: Vec<ConstExpr> },
    /// A function from an outside result, known only by name.
    BlackBox { name: String, citation: String, args: Vec<ConstExpr> },
}

impl From<u64> for ConstExpr {
    fn from(v: u64) -> Self {
        ConstExpr::Lit(BigUint::from(v))
    }
}

impl ConstExpr {
    pub fn var(name: &str) -> ConstExpr {
        ConstExpr::Var(name.to_string())
    }

    pub fn add(items: Vec<ConstExpr>) -> ConstExpr {
        ConstExpr::Add(items)
    }

    pub fn mul(items: Vec<ConstExpr>) -> ConstExpr {
        ConstExpr::Mul(items)
    }

    pub fn pow(base: ConstExpr, exp: ConstExpr) -> ConstExpr {
        ConstExpr::Pow(Box::new(base), Box::new(exp))
    }

    pub fn max(items: Vec<ConstExpr>) -> ConstExpr {
        ConstExpr::Max(items)
    }

    pub fn binom(n: ConstExpr, k: ConstExpr) -> ConstExpr {
        ConstExpr::Binom(Box::new(n), Box::new(k))
    }

    pub fn as_lit(&self) -> Option<&BigUint> {
        match self {
            ConstExpr::Lit(v) => Some(v),
            _ => None,
        }
    }

    fn children(&self) -> Vec<&ConstExpr> {
        match self {
            ConstExpr::Lit(_) | ConstExpr::Var(_) => Vec::new(),
            ConstExpr::Add(v) | ConstExpr::Mul(v) | ConstExpr::Max(v) => v.iter().collect(),
            ConstExpr::Pow(a, b) | ConstExpr::Binom(a, b) => vec![a, b],
            ConstExpr::Named { args, body, .. } => args.iter().chain(std::iter::once(&**body)).collect(),
            ConstExpr::Deferred { args, .. } | ConstExpr::BlackBox { args, .. } => args.iter().collect(),
        }
    }

    /// Names of all variables reachable from this node, sorted.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.walk(&mut |e| {
            if let ConstExpr::Var(v) = e {
                out.push(v.clone());
            }
        });
        out.sort();
        out.dedup();
        out
    }

    /// Names of all black-box leaves reachable from this node, sorted.
    pub fn black_boxes(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.walk(&mut |e| {
            if let ConstExpr::BlackBox { name, .. } = e {
                out.push(name.clone());
            }
        });
        out.sort();
        out.dedup();
        out
    }

    fn walk(&self, f: &mut impl FnMut(&ConstExpr)) {
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            f(e);
            stack.extend(e.children());
        }
    }
}
