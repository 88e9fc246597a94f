use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::formulas::BLACK_BOXES;
use super::{parse_expr, ConstExpr};
use crate::{Error, Result};

/// How a black-box leaf evaluates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Binding {
    /// Sum of the arguments (the documented toy binding).
    Sum,
    /// An expression in the variables `a1 .. ak` standing for the arguments.
    Expr(ConstExpr),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bindings {
    map: BTreeMap<String, Binding>,
}

impl Bindings {
    pub fn none() -> Bindings {
        Bindings::default()
    }

    /// Every known black box bound to the sum of its arguments.
    pub fn toy() -> Bindings {
        let mut b = Bindings::none();
        for (name, _) in BLACK_BOXES {
            b.bind(name, Binding::Sum);
        }
        b
    }

    pub fn bind(&mut self, name: &str, binding: Binding) {
        self.map.insert(name.to_string(), binding);
    }

    /// Parses `name=sum` or `name=EXPR` with `EXPR` in the text format.
    pub fn bind_text(&mut self, spec: &str) -> Result<()> {
        let (name, rhs) = spec
            .split_once('=')
            .ok_or_else(|| Error::InvalidArgument(format!("binding {spec:?} is not NAME=EXPR")))?;
        let name = name.trim();
        if !BLACK_BOXES.iter().any(|(n, _)| *n == name) {
            return Err(Error::UnknownConstant(name.to_string()));
        }
        let rhs = rhs.trim();
        let binding = if rhs == "sum" { Binding::Sum } else { Binding::Expr(parse_expr(rhs)?) };
        self.bind(name, binding);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.map.get(name)
    }
}

/// Size guard: any intermediate value beyond `max_bits` aborts with
/// `TooLarge` instead of exhausting memory.
#[derive(Clone, Copy, Debug)]
pub struct EvalLimits {
    pub max_bits: u64,
}

impl Default for EvalLimits {
    fn default() -> Self {
        EvalLimits { max_bits: 1 << 24 }
    }
}

pub fn eval(e: &ConstExpr, bindings: &Bindings, limits: EvalLimits) -> Result<BigUint> {
    Evaluator { bindings, limits }.eval(e, &HashMap::new())
}

struct Evaluator<'a> {
    bindings: &'a Bindings,
    limits: EvalLimits,
}

impl Evaluator<'_> {
    fn too_large(&self, what: &str) -> Error {
        Error::TooLarge(format!("{what} exceeds the {}-bit evaluation limit", self.limits.max_bits))
    }

    fn guard(&self, v: BigUint, what: &str) -> Result<BigUint> {
        if v.bits() > self.limits.max_bits {
            return Err(self.too_large(what));
        }
        Ok(v)
    }

    fn eval(&self, e: &ConstExpr, env: &HashMap<String, BigUint>) -> Result<BigUint> {
        match e {
            ConstExpr::Lit(v) => Ok(v.clone()),
            ConstExpr::Var(name) => env
                .get(name)
                .cloned()
                .ok_or_else(|| Error::InvalidArgument(format!("free variable {name}"))),
            ConstExpr::Add(items) => {
                let mut acc = BigUint::zero();
                for x in items {
                    acc += self.eval(x, env)?;
                }
                self.guard(acc, "sum")
            }
            ConstExpr::Mul(items) => {
                let mut acc = BigUint::one();
                for x in items {
                    let v = self.eval(x, env)?;
                    if acc.bits() + v.bits() > self.limits.max_bits + 1 {
                        return Err(self.too_large("product"));
                    }
                    acc *= v;
                }
                self.guard(acc, "product")
            }
            ConstExpr::Max(items) => {
                let mut acc = BigUint::zero();
                for x in items {
                    acc = acc.max(self.eval(x, env)?);
                }
                Ok(acc)
            }
            ConstExpr::Pow(b, x) => {
                let base = self.eval(b, env)?;
                let exp = self.eval(x, env)?;
                self.pow(base, exp)
            }
            ConstExpr::Binom(n, k) => {
                let n = self.eval(n, env)?;
                let k = self.eval(k, env)?;
                self.binom(n, k)
            }
            ConstExpr::Named { body, .. } => self.eval(body, env),
            ConstExpr::Deferred { name, .. } => {
                Err(Error::TooLarge(format!("{name} is too deep to expand")))
            }
            ConstExpr::BlackBox { name, args, .. } => {
                let binding = self.bindings.get(name).ok_or_else(|| Error::UnboundLeaf(name.clone()))?;
                let vals = args.iter().map(|a| self.eval(a, env)).collect::<Result<Vec<_>>>()?;
                match binding {
                    Binding::Sum => self.guard(vals.into_iter().sum(), "sum"),
                    Binding::Expr(template) => {
                        let inner: HashMap<String, BigUint> =
                            vals.into_iter().enumerate().map(|(i, v)| (format!("a{}", i + 1), v)).collect();
                        self.eval(template, &inner)
                    }
                }
            }
        }
    }

    fn pow(&self, base: BigUint, exp: BigUint) -> Result<BigUint> {
        if exp.is_zero() || base.is_one() {
            return Ok(BigUint::one());
        }
        if base.is_zero() {
            return Ok(BigUint::zero());
        }
        let e = exp.to_u64().ok_or_else(|| self.too_large("power"))?;
        if (base.bits() - 1).saturating_mul(e) > self.limits.max_bits {
            return Err(self.too_large("power"));
        }
        let e32 = u32::try_from(e).map_err(|_| self.too_large("power"))?;
        self.guard(base.pow(e32), "power")
    }

    fn binom(&self, n: BigUint, k: BigUint) -> Result<BigUint> {
        if k > n {
            return Ok(BigUint::zero());
        }
        let alt = &n - &k;
        let k = k.min(alt);
        let k = k.to_u64().filter(|&k| k <= 1 << 20).ok_or_else(|| self.too_large("binomial"))?;
        let mut acc = BigUint::one();
        for i in 0..k {
            acc = acc * (&n - i) / (i + 1);
            if acc.bits() > self.limits.max_bits {
                return Err(self.too_large("binomial"));
            }
        }
        Ok(acc)
    }
}

/// Number of decimal digits, computed without printing the number.
pub fn digit_count(v: &BigUint) -> u64 {
    if v.is_zero() {
        return 1;
    }
    // 10^d <= v for this d, then step up to the first power exceeding v.
    let mut d = (((v.bits() - 1) as f64) * std::f64::consts::LOG10_2).floor() as u64;
    d = d.saturating_sub(1);
    let mut p = BigUint::from(10u32).pow(d as u32);
    while &p <= v {
        p *= 10u32;
        d += 1;
    }
    d
}
