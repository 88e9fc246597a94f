use anyhow::{Context, Result};
use clap::{Args, Subcommand, ValueEnum};
use pwtree_core::constants::{
    constant_names, digit_count, eval, named_formula, parse_expr, to_text, Bindings, ConstExpr, EvalLimits, Variant,
};
use serde::Serialize;

use crate::report::{Session, Status};

/// Values with more digits than this are reported by digit count only.
const PRINT_LIMIT: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VariantArg {
    AsStated,
    Corrected,
}

#[derive(Args, Debug)]
pub struct Formula {
    name: String,
    /// Arguments in the expression text format; plain integers are the
    /// common case.
    args: Vec<String>,
    #[arg(long, value_enum, default_value_t = VariantArg::AsStated)]
    variant: VariantArg,
}

#[derive(Subcommand, Debug)]
pub enum ConstantsCmd {
    /// Evaluate a named bound exactly.
    Eval {
        #[command(flatten)]
        formula: Formula,
        /// Bind a black-box leaf: `name=sum` or `name=EXPR` in a1..ak.
        #[arg(long = "bind", value_name = "LEAF=EXPR")]
        binds: Vec<String>,
        /// Bind every black box to the sum of its arguments.
        #[arg(long)]
        toy: bool,
        /// Report the number of decimal digits instead of the value.
        #[arg(long)]
        digits: bool,
        #[arg(long, default_value_t = EvalLimits::default().max_bits)]
        max_bits: u64,
    },
    /// Print the expression tree of a named bound.
    Show {
        #[command(flatten)]
        formula: Formula,
    },
    /// List the named bounds and their parameters.
    List,
}

#[derive(Serialize)]
struct Entry {
    name: &'static str,
    params: &'static [&'static str],
}

fn build(f: &Formula) -> Result<ConstExpr> {
    let args = f
        .args
        .iter()
        .map(|a| parse_expr(a).with_context(|| format!("argument {a:?}")))
        .collect::<Result<Vec<_>>>()?;
    let variant = match f.variant {
        VariantArg::AsStated => Variant::AsStated,
        VariantArg::Corrected => Variant::Corrected,
    };
    Ok(named_formula(&f.name, &args, variant)?)
}

pub fn run(cmd: ConstantsCmd, s: &mut Session) -> Result<Status> {
    match cmd {
        ConstantsCmd::Eval { formula, binds, toy, digits, max_bits } => {
            let e = build(&formula)?;
            let mut b = if toy { Bindings::toy() } else { Bindings::none() };
            for spec in &binds {
                b.bind_text(spec)?;
            }
            let v = eval(&e, &b, EvalLimits { max_bits })?;
            let count = digit_count(&v);
            s.detail("digits", count);
            if digits || count > PRINT_LIMIT {
                s.value(count);
            } else {
                s.value(v.to_string());
            }
            Ok(Status::Value)
        }
        ConstantsCmd::Show { formula } => {
            let e = build(&formula)?;
            s.detail("variables", e.variables());
            s.detail("black_boxes", e.black_boxes());
            s.value(to_text(&e));
            Ok(Status::Value)
        }
        ConstantsCmd::List => {
            let all: Vec<Entry> = constant_names().iter().map(|&(name, params)| Entry { name, params }).collect();
            s.value(all);
            Ok(Status::Value)
        }
    }
}
